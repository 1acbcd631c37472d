#include "cplx/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cplx/algebra.hpp"
#include "cplx/bistellar.hpp"
#include "cplx/catalog.hpp"
#include "cplx/iso.hpp"
#include "cplx/knot.hpp"
#include "cplx/moves.hpp"
#include "cplx/recognition.hpp"
#include "cplx/shelling.hpp"

namespace cplx::cli {

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2, kUnknown = 3;

std::string pm_str(PseudomanifoldKind k) {
  switch (k) {
    case PseudomanifoldKind::Closed: return "closed";
    case PseudomanifoldKind::WithBoundary: return "with_boundary";
    default: return "no";
  }
}

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    default: return "unknown";
  }
}

std::string fv_flat(const FVector& fv) {
  std::string s;
  for (std::size_t i = 0; i < fv.counts.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(fv.counts[i]);
  }
  return s;
}

std::vector<Face> parse_face_list(const std::string& spec) {
  std::vector<Face> out;
  std::istringstream in(spec);
  std::string part;
  while (std::getline(in, part, ',')) {
    std::istringstream ps(part);
    Face f;
    long long v;
    while (ps >> v) f.push_back(Vertex(v));
    if (!f.empty()) out.push_back(normalized_face(std::move(f)));
  }
  return out;
}

void emit_complex(const SimplicialComplex& c, const std::string& out_path, std::ostream& out) {
  if (out_path.empty())
    out << to_cplx(c);
  else
    write_cplx_file(out_path, c);
}

struct CommonOpts {
  std::uint64_t seed = 1;
  long long budget = 100000;
  int seeds = 3;
  int jobs = 1;
};

VerifyOptions to_verify(const CommonOpts& o) {
  VerifyOptions vo;
  vo.seed = o.seed;
  vo.flip_budget = o.budget;
  vo.seeds = o.seeds;
  vo.jobs = o.jobs;
  return vo;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"simplicial ball/sphere toolkit: verification, certificates, constructions"};
  app.require_subcommand(1);

  std::string file, file_b, out_path, as_kind, groups_spec = "S3,A4,D4", freeze_spec,
              trace_path, name;
  CommonOpts common;
  int dim_arg = 3;
  Vertex apex = 0, susp_vertex = 0, susp_fresh = 0;
  bool quick = false, skip_verify = false;

  auto add_common = [&](CLI::App* cmd, bool with_budget = true) {
    if (with_budget) cmd->add_option("--budget", common.budget, "search/flip budget");
    cmd->add_option("--seed", common.seed, "master random seed");
    cmd->add_option("--seeds", common.seeds, "reduction attempts before unknown");
    cmd->add_option("--jobs", common.jobs, "worker parallelism");
  };

  auto* info = app.add_subcommand("info", "f-vector, Euler characteristic, pseudomanifold status");
  info->add_option("file", file)->required();

  auto* verify = app.add_subcommand("verify", "certify ball/sphere status");
  verify->add_option("file", file)->required();
  verify->add_option("--as", as_kind, "ball3|sphere3|sphere4")->required();
  add_common(verify);

  auto* shelling = app.add_subcommand("shelling", "exhaustive shelling search");
  shelling->add_option("file", file)->required();
  shelling->add_option("--budget", common.budget);

  auto* freefacets = app.add_subcommand("free-facets", "facets whose removal leaves a 3-ball");
  freefacets->add_option("file", file)->required();
  add_common(freefacets);

  auto* constructible = app.add_subcommand("constructible", "budgeted constructibility search");
  constructible->add_option("file", file)->required();
  constructible->add_option("--budget", common.budget);

  auto* knot = app.add_subcommand("knot", "knotted-triangle certificate");
  knot->add_option("file", file)->required();
  knot->add_option("--groups", groups_spec, "comma list: S3,A4,D4 or table files");
  knot->add_flag("--skip-verify", skip_verify, "assume input verified as ball/sphere");
  add_common(knot);

  auto* construct = app.add_subcommand("construct", "complex constructions");
  construct->require_subcommand(1);
  auto* c_cone = construct->add_subcommand("cone", "cone with a fresh apex");
  c_cone->add_option("file", file)->required();
  c_cone->add_option("--apex", apex, "apex label (default max+1)");
  c_cone->add_option("-o,--out", out_path);
  auto* c_ops = construct->add_subcommand("ops", "one-point suspension");
  c_ops->add_option("file", file)->required();
  c_ops->add_option("--vertex", susp_vertex, "suspension vertex")->required();
  c_ops->add_option("--fresh", susp_fresh, "fresh label (default max+1)");
  c_ops->add_option("-o,--out", out_path);
  auto* c_fs = construct->add_subcommand("family-sphere", "non-constructible d-sphere, d+10 vertices");
  c_fs->add_option("d", dim_arg)->required();
  c_fs->add_option("-o,--out", out_path);
  auto* c_fb = construct->add_subcommand("family-ball", "non-constructible d-ball, d+9 vertices");
  c_fb->add_option("d", dim_arg)->required();
  c_fb->add_option("-o,--out", out_path);

  auto* reduce_cmd = app.add_subcommand("reduce", "bistellar f-vector reduction");
  reduce_cmd->add_option("file", file)->required();
  reduce_cmd->add_option("--freeze", freeze_spec, "faces to protect, e.g. \"1 2,1 3,2 3\"");
  reduce_cmd->add_option("--trace-out", trace_path, "write the move trace here");
  reduce_cmd->add_option("-o,--out", out_path, "write the reduced complex here");
  add_common(reduce_cmd);

  auto* iso = app.add_subcommand("iso", "isomorphism test");
  iso->add_option("fileA", file)->required();
  iso->add_option("fileB", file_b)->required();

  auto* auts = app.add_subcommand("auts", "automorphism group");
  auts->add_option("file", file)->required();

  auto* cat = app.add_subcommand("catalog", "embedded complexes from the construction");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "list entries");
  (void)cat_list;
  auto* cat_export = cat->add_subcommand("export", "write an entry in .cplx format");
  cat_export->add_option("name", name)->required();
  cat_export->add_option("-o,--out", out_path);
  auto* cat_verify = cat->add_subcommand("verify", "check every recorded claim");
  cat_verify->add_flag("--quick", quick, "combinatorial claims only");
  add_common(cat_verify);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kPass;
    }
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*info) {
      SimplicialComplex c = read_cplx_file(file);
      out << "file=" << file << "\n";
      out << "dim=" << c.dim() << "\n";
      out << "pure=" << (c.is_pure() ? "true" : "false") << "\n";
      out << "facets=" << c.facet_count() << "\n";
      out << "f_vector=" << fv_flat(c.f_vector()) << "\n";
      out << "euler=" << euler_characteristic(c) << "\n";
      out << "pseudomanifold=" << pm_str(c.pseudomanifold_kind()) << "\n";
      return kPass;
    }

    if (*verify) {
      SimplicialComplex c = read_cplx_file(file);
      VerifyOptions vo = to_verify(common);
      out << "seed=" << common.seed << "\nbudget=" << common.budget << "\n";
      RecognitionResult res;
      if (as_kind == "ball3")
        res = verify_ball3(c, vo);
      else if (as_kind == "sphere3")
        res = verify_sphere3(c, vo);
      else if (as_kind == "sphere4")
        res = verify_sphere(c, 4, vo);
      else {
        err << "error: --as must be ball3, sphere3 or sphere4\n";
        return kUsage;
      }
      out << "verdict=" << verdict_str(res.verdict) << "\n";
      if (!res.witness.empty()) out << "witness=" << res.witness << "\n";
      if (res.verdict == Verdict::Yes)
        out << "reduction_moves=" << res.trace.moves.size() << "\n";
      return res.verdict == Verdict::Yes ? kPass
             : res.verdict == Verdict::No ? kFail
                                          : kUnknown;
    }

    if (*shelling) {
      SimplicialComplex c = read_cplx_file(file);
      ShellingResult res = find_shelling(c, common.budget);
      out << "budget=" << res.budget << "\nexpansions=" << res.expansions << "\n";
      switch (res.status) {
        case SearchStatus::Yes: {
          out << "status=shellable\n";
          std::string order;
          for (const Face& f : res.certificate->order) {
            if (!order.empty()) order += ", ";
            order += face_str(f);
          }
          out << "order=" << order << "\n";
          out << "replay=" << (replay_shelling(c, *res.certificate) ? "ok" : "FAILED") << "\n";
          return kPass;
        }
        case SearchStatus::No:
          out << "status=not_shellable\n";
          return kFail;
        default:
          out << "status=unknown\n";
          return kUnknown;
      }
    }

    if (*freefacets) {
      SimplicialComplex c = read_cplx_file(file);
      std::vector<Face> ff = free_facets(c, to_verify(common));
      out << "count=" << ff.size() << "\n";
      for (const Face& f : ff) out << "free_facet=" << face_str(f) << "\n";
      out << "strongly_nonshellable=" << (ff.empty() ? "true" : "false") << "\n";
      return kPass;
    }

    if (*constructible) {
      SimplicialComplex c = read_cplx_file(file);
      ConstructibilityResult res = is_constructible(c, common.budget);
      out << "budget=" << res.budget << "\nexpansions=" << res.expansions << "\n";
      switch (res.status) {
        case SearchStatus::Yes:
          out << "status=constructible\n";
          out << "replay=" << (replay_constructibility(c, *res.tree) ? "ok" : "FAILED") << "\n";
          return kPass;
        case SearchStatus::No:
          out << "status=not_constructible\n";
          return kFail;
        default:
          out << "status=unknown\n";
          return kUnknown;
      }
    }

    if (*knot) {
      SimplicialComplex c = read_cplx_file(file);
      CertifyOptions co;
      co.jobs = common.jobs;
      co.skip_verification = skip_verify;
      co.verify = to_verify(common);
      std::istringstream gs(groups_spec);
      std::string g;
      while (std::getline(gs, g, ','))
        if (!g.empty()) co.groups.push_back(GroupTable::named(g));
      CertifyResult res = certify_nonconstructible(c, co);
      out << "certified=" << (res.certified ? "true" : "false") << "\n";
      if (res.certified) {
        out << "cycle=" << face_str(res.witness->cycle) << "\n";
        out << "group=" << res.witness->group << "\n";
        std::string imgs;
        for (std::size_t i = 0; i < res.witness->images.size(); ++i) {
          if (i) imgs += " ";
          imgs += std::to_string(res.witness->images[i]);
        }
        out << "generator_images=" << imgs << "\n";
        out << "non_constructible=true\nnon_shellable=true\nno_straight_embedding=true\n";
      }
      if (!res.note.empty()) out << "note=" << res.note << "\n";
      return res.certified ? kPass : kFail;
    }

    if (*c_cone) {
      SimplicialComplex c = read_cplx_file(file);
      Vertex a = apex > 0 ? apex : c.max_vertex() + 1;
      emit_complex(cone(c, a), out_path, out);
      return kPass;
    }
    if (*c_ops) {
      SimplicialComplex c = read_cplx_file(file);
      Vertex fresh = susp_fresh > 0 ? susp_fresh : c.max_vertex() + 1;
      emit_complex(one_point_suspension(c, susp_vertex, fresh), out_path, out);
      return kPass;
    }
    if (*c_fs) {
      emit_complex(family_sphere(dim_arg), out_path, out);
      return kPass;
    }
    if (*c_fb) {
      emit_complex(family_ball(dim_arg), out_path, out);
      return kPass;
    }

    if (*reduce_cmd) {
      SimplicialComplex c = read_cplx_file(file);
      ReduceOptions ro;
      ro.seed = common.seed;
      ro.budget = common.budget;
      ro.frozen = parse_face_list(freeze_spec);
      ReduceResult res = reduce(c, ro);
      out << "seed=" << ro.seed << "\nbudget=" << ro.budget << "\n";
      out << "accepted=" << res.accepted << "\n";
      out << "f_vector=" << fv_flat(res.complex.f_vector()) << "\n";
      out << "minimal=" << (res.reached_minimal ? "true" : "false") << "\n";
      if (!trace_path.empty()) {
        std::ofstream tf(trace_path);
        tf << trace_to_string(res.trace);
      }
      if (!out_path.empty()) write_cplx_file(out_path, res.complex);
      else out << to_cplx(res.complex);
      return kPass;
    }

    if (*iso) {
      SimplicialComplex a = read_cplx_file(file);
      SimplicialComplex b = read_cplx_file(file_b);
      auto m = are_isomorphic(a, b);
      out << "isomorphic=" << (m ? "true" : "false") << "\n";
      if (m) {
        std::string s;
        for (const auto& [v, w] : *m) {
          if (!s.empty()) s += ", ";
          s += std::to_string(v) + "->" + std::to_string(w);
        }
        out << "map=" << s << "\n";
      }
      return kPass;
    }

    if (*auts) {
      SimplicialComplex c = read_cplx_file(file);
      AutomorphismGroup g = automorphism_group(c);
      out << "order=" << g.order << "\n";
      for (const auto& perm : g.perms) {
        std::string s;
        bool identity = true;
        for (const auto& [v, w] : perm) {
          if (v != w) identity = false;
          if (!s.empty()) s += " ";
          s += std::to_string(v) + "->" + std::to_string(w);
        }
        if (!identity) out << "automorphism=" << s << "\n";
      }
      return kPass;
    }

    if (*cat_list) {
      for (const auto& n : catalog::names()) {
        SimplicialComplex c = catalog::load(n);
        out << n << " dim=" << c.dim() << " facets=" << c.facet_count()
            << " vertices=" << c.vertex_count() << "\n";
      }
      return kPass;
    }
    if (*cat_export) {
      emit_complex(catalog::load(name), out_path, out);
      return kPass;
    }
    if (*cat_verify) {
      catalog::VerifyOptions co;
      co.seed = common.seed;
      co.flip_budget = common.budget;
      co.seeds = common.seeds;
      co.jobs = common.jobs;
      co.quick = quick;
      catalog::Report rep = catalog::verify(co);
      out << "seed=" << co.seed << "\nbudget=" << co.flip_budget << "\n";
      for (const auto& c : rep.claims) {
        out << "claim." << c.name << "=" << (c.pass ? "pass" : "FAIL");
        if (!c.detail.empty()) out << " (" << c.detail << ")";
        out << "\n";
      }
      out << "claims=" << rep.claims.size() << "\n";
      out << "all_pass=" << (rep.all_pass() ? "true" : "false") << "\n";
      return rep.all_pass() ? kPass : kFail;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  err << "error: no subcommand\n";
  return kUsage;
}

}  // namespace cplx::cli
