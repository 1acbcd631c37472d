#include "cplx/catalog.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cplx/algebra.hpp"
#include "cplx/iso.hpp"
#include "cplx/knot.hpp"
#include "cplx/moves.hpp"
#include "cplx/recognition.hpp"
#include "cplx/shelling.hpp"

namespace cplx::catalog {

namespace data {
extern const char* shield9;
extern const char* closing16;
extern const char* thickening37;
extern const char* boundary28;
extern const char* b3_12_38;
extern const char* star13;
extern const char* closing16_v2;
extern const char* knot_cycle;
}  // namespace data

std::vector<std::string> names() {
  return {"shield9",   "closing16", "complexC",  "B3_16_46",   "boundary28",
          "S3_17_74",  "B3_12_38",  "star13",    "S3_13_56",   "B3_12_37_a",
          "B3_12_37_b", "closing16_v2", "knot_cycle", "thickening37"};
}

bool has(const std::string& name) {
  auto ns = names();
  return std::find(ns.begin(), ns.end(), name) != ns.end();
}

SimplicialComplex load(const std::string& name) {
  if (name == "shield9") return parse_cplx(data::shield9);
  if (name == "closing16") return parse_cplx(data::closing16);
  if (name == "thickening37") return parse_cplx(data::thickening37);
  if (name == "boundary28") return parse_cplx(data::boundary28);
  if (name == "B3_12_38") return parse_cplx(data::b3_12_38);
  if (name == "star13") return parse_cplx(data::star13);
  if (name == "closing16_v2") return parse_cplx(data::closing16_v2);
  if (name == "knot_cycle") return parse_cplx(data::knot_cycle);
  if (name == "B3_16_46") return glue(load("shield9"), load("thickening37"));
  if (name == "complexC") {
    SimplicialComplex shield = load("shield9");
    SimplicialComplex closing = load("closing16");
    std::vector<Face> facets = shield.facets();
    facets.insert(facets.end(), closing.facets().begin(), closing.facets().end());
    return SimplicialComplex::general(std::move(facets));
  }
  if (name == "S3_17_74") {
    SimplicialComplex ball = load("B3_16_46");
    return glue(ball, cone(load("boundary28"), 17));
  }
  if (name == "S3_13_56") return glue(load("B3_12_38"), load("star13"));
  if (name == "B3_12_37_a") return remove_facet(load("B3_12_38"), {2, 4, 5, 7});
  if (name == "B3_12_37_b") return remove_facet(load("B3_12_38"), {3, 4, 6, 10});
  throw Error(Err::UnknownName, "unknown catalog entry '" + name + "'");
}

bool Report::all_pass() const {
  for (const auto& c : claims)
    if (!c.pass) return false;
  return true;
}

namespace {

void claim(Report& r, const std::string& name, bool pass, const std::string& detail = "") {
  r.claims.push_back({name, pass, detail});
}

std::string fv_str(const SimplicialComplex& c) { return c.f_vector().str(); }

bool fv_is(const SimplicialComplex& c, std::vector<long long> want) {
  return c.f_vector().counts == want;
}

}  // namespace

Report verify(const VerifyOptions& opt) {
  Report r;
  cplx::VerifyOptions vo;
  vo.seed = opt.seed;
  vo.flip_budget = opt.flip_budget;
  vo.seeds = opt.seeds;
  vo.jobs = opt.jobs;

  SimplicialComplex shield9 = load("shield9");
  SimplicialComplex thick37 = load("thickening37");
  SimplicialComplex closing16 = load("closing16");
  SimplicialComplex closing16v2 = load("closing16_v2");
  SimplicialComplex complexC = load("complexC");
  SimplicialComplex b46 = load("B3_16_46");
  SimplicialComplex bd28 = load("boundary28");
  SimplicialComplex s74 = load("S3_17_74");
  SimplicialComplex b38 = load("B3_12_38");
  SimplicialComplex star13 = load("star13");
  SimplicialComplex s56 = load("S3_13_56");
  SimplicialComplex b37a = load("B3_12_37_a");
  SimplicialComplex b37b = load("B3_12_37_b");

  // transcription lint
  claim(r, "lint.B3_16_46.vertices", b46.vertex_count() == 16 && b46.max_vertex() == 16,
        std::to_string(b46.vertex_count()) + " vertices");
  claim(r, "lint.S3_13_56.vertices", s56.vertex_count() == 13 && s56.max_vertex() == 13,
        std::to_string(s56.vertex_count()) + " vertices");
  claim(r, "lint.purity",
        b46.is_pure() && s74.is_pure() && b38.is_pure() && s56.is_pure() && bd28.is_pure());

  // f-vectors
  claim(r, "fvec.B3_16_46", fv_is(b46, {16, 75, 106, 46}), fv_str(b46));
  claim(r, "fvec.S3_17_74", fv_is(s74, {17, 91, 148, 74}), fv_str(s74));
  claim(r, "fvec.S3_13_56", fv_is(s56, {13, 69, 112, 56}), fv_str(s56));
  claim(r, "fvec.B3_12_37_a", fv_is(b37a, {12, 58, 84, 37}), fv_str(b37a));
  claim(r, "fvec.B3_12_37_b", fv_is(b37b, {12, 58, 84, 37}), fv_str(b37b));

  // Euler characteristics implied by the f-vectors
  claim(r, "euler.B3_16_46", euler_characteristic(b46) == 1);
  claim(r, "euler.S3_17_74", euler_characteristic(s74) == 0);

  // boundary and decomposition identities
  claim(r, "identity.boundary28", b46.boundary_complex() == bd28,
        "boundary has " + std::to_string(b46.boundary_complex().facet_count()) + " facets");
  claim(r, "identity.column_split",
        shield9.facet_count() == 9 && thick37.facet_count() == 37 && b46.facet_count() == 46);
  claim(r, "identity.closing16", closing16.facet_count() == 16);
  claim(r, "identity.closing16_v2", closing16v2.facet_count() == 16);
  claim(r, "identity.complexC", complexC.facet_count() == 25);
  claim(r, "identity.S3_17_74", s74 == glue(b46, cone(bd28, 17)),
        std::to_string(s74.facet_count()) + " facets");
  claim(r, "identity.S3_13_56",
        s56.facet_count() == 56 && b38.facet_count() == 38 && star13.facet_count() == 18);
  claim(r, "identity.star13",
        s56.star_closed({13}) == star13 && s56.delete_star({13}) == b38);

  // the star of 13 links a 2-sphere, complex C is homology-trivial
  {
    SimplicialComplex link13 = s56.link({13});
    claim(r, "link13.sphere", is_sphere2(link13) && link13.vertex_count() == 11,
          fv_str(link13));
  }
  {
    HomologyGroups h = homology(complexC, true);
    bool trivial = true;
    for (const auto& g : h.groups)
      if (!g.is_trivial()) trivial = false;
    claim(r, "complexC.homology_point", trivial);
  }

  // knot edges present, knot triangle absent
  for (const auto& [name, c] : std::map<std::string, const SimplicialComplex*>{
           {"B3_16_46", &b46}, {"S3_17_74", &s74}, {"S3_13_56", &s56},
           {"B3_12_37_a", &b37a}, {"B3_12_37_b", &b37b}}) {
    bool edges = c->has_face({1, 2}) && c->has_face({1, 3}) && c->has_face({2, 3});
    claim(r, "knotcycle." + name, edges && !c->has_face({1, 2, 3}));
  }

  if (opt.quick) return r;

  // ball / sphere certificates
  claim(r, "ball3.B3_16_46", verify_ball3(b46, vo).verdict == Verdict::Yes);
  claim(r, "ball3.B3_12_38", verify_ball3(b38, vo).verdict == Verdict::Yes);
  claim(r, "ball3.B3_12_37_a", verify_ball3(b37a, vo).verdict == Verdict::Yes);
  claim(r, "ball3.B3_12_37_b", verify_ball3(b37b, vo).verdict == Verdict::Yes);
  claim(r, "sphere3.S3_17_74", verify_sphere3(s74, vo).verdict == Verdict::Yes);
  claim(r, "sphere3.S3_13_56", verify_sphere3(s56, vo).verdict == Verdict::Yes);

  // free facets and strong non-shellability
  {
    std::vector<Face> ff = free_facets(b38, vo);
    std::vector<Face> want = {{2, 4, 5, 7}, {3, 4, 6, 10}};
    claim(r, "free_facets.B3_12_38", ff == want, std::to_string(ff.size()) + " free facets");
    claim(r, "strongly_nonshellable.B3_12_38", !is_strongly_nonshellable(b38, vo));
  }
  claim(r, "strongly_nonshellable.B3_16_46", is_strongly_nonshellable(b46, vo));
  claim(r, "strongly_nonshellable.B3_12_37_a", is_strongly_nonshellable(b37a, vo));
  claim(r, "strongly_nonshellable.B3_12_37_b", is_strongly_nonshellable(b37b, vo));
  {
    ShellingResult sr = find_shelling(b37a, 200000);
    claim(r, "shelling.B3_12_37_a.not_shellable", sr.status != SearchStatus::Yes);
  }

  // knot certificates
  {
    CertifyOptions co;
    co.jobs = opt.jobs;
    co.skip_verification = true;  // certified separately above
    co.verify = vo;
    for (const auto& [name, c] : std::map<std::string, const SimplicialComplex*>{
             {"S3_13_56", &s56}, {"S3_17_74", &s74}, {"B3_12_37_a", &b37a},
             {"B3_12_37_b", &b37b}}) {
      CertifyResult cr = certify_nonconstructible(*c, co);
      claim(r, "knot." + name,
            cr.certified && cr.witness && cr.witness->cycle == Face{1, 2, 3},
            cr.certified ? "group " + cr.witness->group : "none found");
    }
    Presentation p = complement_presentation(s56, {1, 2, 3});
    long long homs = count_homs(p, GroupTable::symmetric3());
    claim(r, "knot.S3_13_56.hom_count", homs == 12, std::to_string(homs) + " homs to S3");
  }

  // isomorphism claims
  claim(r, "iso.B3_12_37_ab", !are_isomorphic(b37a, b37b).has_value());
  claim(r, "iso.boundaries",
        are_isomorphic(b37a.boundary_complex(), b37b.boundary_complex()).has_value());

  // the cyclic symmetry
  {
    std::map<Vertex, Vertex> sigma;
    for (Vertex base : {1, 4, 7, 10, 13}) {
      sigma[base] = base + 1;
      sigma[base + 1] = base + 2;
      sigma[base + 2] = base;
    }
    sigma[16] = 16;
    claim(r, "symmetry.B3_16_46.explicit", b46.relabeled(sigma) == b46);
    AutomorphismGroup a46 = automorphism_group(b46);
    claim(r, "symmetry.B3_16_46.order", a46.order % 3 == 0,
          "order " + std::to_string(a46.order));
    sigma[17] = 17;
    claim(r, "symmetry.S3_17_74.explicit", s74.relabeled(sigma) == s74);
    AutomorphismGroup a74 = automorphism_group(s74);
    claim(r, "symmetry.S3_17_74.order", a74.order % 3 == 0,
          "order " + std::to_string(a74.order));
  }

  return r;
}

}  // namespace cplx::catalog
