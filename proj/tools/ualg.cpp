// ualg: command-line surface over the core library.
//
// Exit codes: 0 success, 1 negative verdict on yes/no commands, 2 usage or
// input error, 3 cap exceeded, 4 internal consistency failure.
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ualg/builtins.hpp"
#include "ualg/commutator.hpp"
#include "ualg/congruence.hpp"
#include "ualg/construct.hpp"
#include "ualg/json_io.hpp"
#include "ualg/smp.hpp"
#include "ualg/supernil.hpp"
#include "ualg/tct.hpp"

using namespace ualg;

namespace {

struct Options {
  bool json = false;
  int threads = 1;  // hint; current kernels are single-threaded
  std::string catalog_dir;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open file: " + path);
  json j;
  in >> j;
  return j;
}

Catalog load_catalog(const Options& opt) {
  std::string dir = opt.catalog_dir;
  if (dir.empty())
    if (const char* env = std::getenv("UALG_CATALOG")) dir = env;
  Catalog cat;
  if (!dir.empty()) cat = Catalog(dir);
  for (FiniteAlgebra& a : builtins::all())
    if (!cat.has(a.name())) cat.add(std::move(a));
  for (FiniteAlgebra& a : builtins::binary_on_two())
    if (!cat.has(a.name())) cat.add(std::move(a));
  return cat;
}

// An algebra argument is either a catalog name or a path to a JSON file
// (plain algebra JSON, or a `construct` output with an "algebra" field).
FiniteAlgebra resolve_algebra(const Catalog& cat, const std::string& spec) {
  if (std::filesystem::exists(spec)) {
    json j = read_json_file(spec);
    return algebra_from_json(j.contains("algebra") ? j.at("algebra") : j);
  }
  if (!cat.has(spec)) throw validation_error("unknown algebra: " + spec);
  return cat.get(spec);
}

ConstructedAlgebra make_construction(const FiniteAlgebra& a, const std::string& chi_arg) {
  auto [q, hom] = quotient(a, parse_partition_arg(chi_arg, a.size()));
  return construct_c(hom);
}

void print_partition(const Options& opt, const Partition& p) {
  if (opt.json)
    std::cout << partition_to_json(p).dump() << "\n";
  else
    std::cout << p.to_block_string() << "\n";
}

json construction_to_json(const ConstructedAlgebra& c) {
  return json{{"algebra", algebra_to_json(c.alg)},
              {"construction", constructed_sidecar_to_json(c)}};
}

// Rebuilds a ConstructedAlgebra from `construct` output without rerunning
// the construction, so table corruptions in the file are visible.
ConstructedAlgebra construction_from_json(const Catalog& cat, const json& j) {
  ConstructedAlgebra c;
  c.alg = algebra_from_json(j.at("algebra"));
  const json& side = j.at("construction");
  c.base = resolve_algebra(cat, side.at("base").get<std::string>());
  c.chi = side.at("chi").get<std::vector<int>>();
  c.sort_elements = side.at("sorts").get<std::vector<std::vector<int>>>();
  c.index = quotient(c.base, Partition::kernel(c.chi)).first;
  return c;
}

int cmd_con(const Options& opt, const std::string& alg_spec, bool dot) {
  FiniteAlgebra a = resolve_algebra(load_catalog(opt), alg_spec);
  std::vector<Partition> lat = con_lattice(a);
  if (dot) {
    auto covers = [&](const Partition& lo, const Partition& hi) {
      if (!lo.leq(hi) || lo == hi) return false;
      for (const Partition& mid : lat)
        if (lo.leq(mid) && mid.leq(hi) && mid != lo && mid != hi) return false;
      return true;
    };
    std::cout << "digraph con {\n  rankdir=BT;\n";
    for (const Partition& p : lat)
      std::cout << "  \"" << p.to_block_string() << "\";\n";
    for (const Partition& lo : lat)
      for (const Partition& hi : lat)
        if (covers(lo, hi))
          std::cout << "  \"" << lo.to_block_string() << "\" -> \""
                    << hi.to_block_string() << "\";\n";
    std::cout << "}\n";
    return 0;
  }
  if (opt.json) {
    json out = json::array();
    for (const Partition& p : lat) out.push_back(partition_to_json(p));
    std::cout << out.dump() << "\n";
  } else {
    for (const Partition& p : lat) std::cout << p.to_block_string() << "\n";
  }
  return 0;
}

int cmd_commutator(const Options& opt, const std::string& alg_spec,
                   const std::vector<std::string>& beta_args) {
  FiniteAlgebra a = resolve_algebra(load_catalog(opt), alg_spec);
  std::vector<Partition> betas;
  for (const std::string& b : beta_args) betas.push_back(parse_partition_arg(b, a.size()));
  print_partition(opt, higher_commutator(a, betas));
  return 0;
}

int cmd_centralizer(const Options& opt, const std::string& alg_spec,
                    const std::string& beta_arg) {
  FiniteAlgebra a = resolve_algebra(load_catalog(opt), alg_spec);
  print_partition(opt, centralizer(a, parse_partition_arg(beta_arg, a.size())));
  return 0;
}

int cmd_nilpotence(const Options& opt, const std::string& alg_spec,
                   const std::string& alpha_arg) {
  FiniteAlgebra a = resolve_algebra(load_catalog(opt), alg_spec);
  NilpotenceResult r = is_nilpotent(a, parse_partition_arg(alpha_arg, a.size()));
  if (opt.json) {
    json out{{"nilpotent", r.nilpotent}, {"series", json::array()}};
    for (const Partition& p : r.series) out["series"].push_back(partition_to_json(p));
    std::cout << out.dump() << "\n";
  } else {
    std::cout << (r.nilpotent ? "nilpotent" : "not nilpotent") << "\n";
    for (const Partition& p : r.series) std::cout << "  " << p.to_block_string() << "\n";
  }
  return r.nilpotent ? 0 : 1;
}

int cmd_supernil(const Options& opt, const std::string& alg_spec,
                 const std::string& alpha_arg, bool assert_flag, bool cross) {
  FiniteAlgebra a = resolve_algebra(load_catalog(opt), alg_spec);
  Partition alpha = parse_partition_arg(alpha_arg, a.size());
  SupernilCertificate cert = decide_supernilpotent(a, alpha, assert_flag);
  json out{{"verdict", cert.verdict}};
  if (cert.witnesses) {
    out["witnesses"] = json::array();
    for (const Partition& b : cert.witnesses->witnesses)
      out["witnesses"].push_back(partition_to_json(b));
    out["primes"] = cert.witnesses->primes;
  }
  if (!cert.failure.empty()) out["failure"] = cert.failure;
  if (cross) {
    CrossCheckRecord rec = cross_check_via_c(a, alpha, assert_flag);
    out["cross_check"] = {{"verdict", rec.verdict},
                          {"carrier_size", rec.carrier_size},
                          {"nilpotent", rec.c_nilpotent}};
  }
  if (opt.json) {
    std::cout << out.dump() << "\n";
  } else {
    std::cout << (cert.verdict ? "supernilpotent" : "not supernilpotent") << "\n";
    if (cert.witnesses)
      for (size_t i = 0; i < cert.witnesses->witnesses.size(); ++i)
        std::cout << "  factor " << cert.witnesses->witnesses[i].to_block_string()
                  << " (p=" << cert.witnesses->primes[i] << ")\n";
    if (!cert.failure.empty()) std::cout << "  reason: " << cert.failure << "\n";
    if (cross) std::cout << "  cross-check: agreed\n";
  }
  return cert.verdict ? 0 : 1;
}

int cmd_construct(const Options& opt, const std::string& alg_spec,
                  const std::string& chi_arg) {
  FiniteAlgebra a = resolve_algebra(load_catalog(opt), alg_spec);
  ConstructedAlgebra c = make_construction(a, chi_arg);
  std::cout << construction_to_json(c).dump(opt.json ? -1 : 2) << "\n";
  return 0;
}

int cmd_star(const Options& opt, const std::string& alg_spec, const std::string& chi_arg,
             const std::string& beta_arg, const std::string& sub_file) {
  FiniteAlgebra a = resolve_algebra(load_catalog(opt), alg_spec);
  ConstructedAlgebra c = make_construction(a, chi_arg);
  if (!beta_arg.empty()) {
    print_partition(opt, star_congruence(c, parse_partition_arg(beta_arg, a.size())));
    return 0;
  }
  json j = read_json_file(sub_file);
  TupleSet b;
  b.tuples = j.at("tuples").get<std::set<std::vector<int>>>();
  if (b.tuples.empty()) throw validation_error("star: empty subuniverse");
  b.component_sizes.assign(b.tuples.begin()->size(), a.size());
  TupleSet starred =
      star_subuniverse(b, std::vector<ConstructedAlgebra>(b.component_sizes.size(), c));
  json out{{"tuples", starred.tuples}};
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_lift_term(const Options& opt, const std::string& alg_spec,
                  const std::string& chi_arg, const std::string& term_text) {
  FiniteAlgebra a = resolve_algebra(load_catalog(opt), alg_spec);
  ConstructedAlgebra c = make_construction(a, chi_arg);
  Term t = parse_term(term_text);
  Term lifted = lift_idempotent(c, t, t.min_arity());
  if (opt.json)
    std::cout << json{{"term", to_string(lifted)}}.dump() << "\n";
  else
    std::cout << to_string(lifted) << "\n";
  return 0;
}

int cmd_coordinate_terms(const Options& opt, const std::string& alg_spec,
                         const std::string& chi_arg, const std::string& term_text) {
  FiniteAlgebra a = resolve_algebra(load_catalog(opt), alg_spec);
  ConstructedAlgebra c = make_construction(a, chi_arg);
  Term t = parse_term(term_text);
  const int arity = t.min_arity();
  std::vector<Term> ts = coordinate_terms(c, t, arity);
  bool cond_i = check_condition_i(c.index, ts, arity);
  if (opt.json) {
    json out{{"condition_i", cond_i}, {"terms", json::array()}};
    for (const Term& s : ts) out["terms"].push_back(to_string(s));
    std::cout << out.dump() << "\n";
  } else {
    for (const Term& s : ts) std::cout << to_string(s) << "\n";
    std::cout << "condition (i): " << (cond_i ? "holds" : "fails") << "\n";
  }
  return 0;
}

void print_report(const char* label, const ConditionReport& rep) {
  std::cout << "  " << label << ": " << (rep.ok ? "ok" : "failed") << "\n";
  for (const std::string& f : rep.failures) std::cout << "    " << f << "\n";
}

json report_to_json(const ConditionReport& rep) {
  return json{{"ok", rep.ok}, {"failures", rep.failures}};
}

int cmd_smp_check(const Options& opt, const std::string& inst_file, int d, bool central) {
  Catalog cat = load_catalog(opt);
  SMPInstance inst = smp_instance_from_json(read_json_file(inst_file), cat.all());
  CoherenceReport rep =
      central ? check_d_central(inst, d) : check_d_coherent(inst, d);
  if (opt.json) {
    json out{{"ok", rep.all_ok()},
             {"size", report_to_json(rep.size)},
             {"components", report_to_json(rep.components)},
             {"subdirect", report_to_json(rep.subdirect)},
             {"graphs", report_to_json(rep.graphs)}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << (rep.all_ok() ? "ok" : "failed") << "\n";
    print_report("size", rep.size);
    print_report("components", rep.components);
    print_report("subdirect", rep.subdirect);
    if (!central) print_report("graphs", rep.graphs);
  }
  return rep.all_ok() ? 0 : 1;
}

int cmd_smp_solve(const Options& opt, const std::string& inst_file) {
  Catalog cat = load_catalog(opt);
  SMPInstance inst = smp_instance_from_json(read_json_file(inst_file), cat.all());
  bool member = smp_oracle(inst);
  if (opt.json)
    std::cout << json{{"member", member}}.dump() << "\n";
  else
    std::cout << (member ? "member" : "not a member") << "\n";
  return member ? 0 : 1;
}

int cmd_smp_reduce(const Options& opt, const std::string& inst_file, int d) {
  Catalog cat = load_catalog(opt);
  SMPInstance inst = smp_instance_from_json(read_json_file(inst_file), cat.all());
  std::vector<SimilarityClass> classes = build_k_star(inst.components);
  ReducedInstance red = reduce_instance(inst, classes, d);
  json out{{"class", red.class_index},
           {"components", json::array()},
           {"generators", red.instance.generators},
           {"target", red.instance.target},
           {"paddings", red.paddings}};
  for (const ConstructedAlgebra& c : red.components)
    out["components"].push_back(construction_to_json(c));
  std::cout << out.dump(opt.json ? -1 : 2) << "\n";
  return 0;
}

int cmd_smp_build_kstar(const Options& opt, const std::vector<std::string>& alg_specs) {
  Catalog cat = load_catalog(opt);
  std::vector<FiniteAlgebra> ks;
  for (const std::string& s : alg_specs) ks.push_back(resolve_algebra(cat, s));
  std::vector<SimilarityClass> classes = build_k_star(ks);
  if (opt.json) {
    json out = json::array();
    for (const SimilarityClass& cls : classes) {
      json jc{{"prime", cls.prime},
              {"index_size", cls.reference_quotient.size()},
              {"members", json::array()},
              {"star_algebras", json::array()}};
      for (const FiniteAlgebra& m : cls.members) jc["members"].push_back(m.name());
      for (const ConstructedAlgebra& c : cls.star_algebras)
        jc["star_algebras"].push_back(construction_to_json(c));
      out.push_back(std::move(jc));
    }
    std::cout << out.dump() << "\n";
  } else {
    for (size_t l = 0; l < classes.size(); ++l) {
      std::cout << "class " << l << ": p=" << classes[l].prime
                << " |I|=" << classes[l].reference_quotient.size() << " members";
      for (const FiniteAlgebra& m : classes[l].members) std::cout << " " << m.name();
      std::cout << " (" << classes[l].star_algebras.size() << " star algebras)\n";
    }
    if (classes.empty()) std::cout << "no similarity classes\n";
  }
  return 0;
}

int cmd_smp_check_hypothesis(const Options& opt,
                             const std::vector<std::string>& alg_specs) {
  Catalog cat = load_catalog(opt);
  std::vector<FiniteAlgebra> ks;
  for (const std::string& s : alg_specs) ks.push_back(resolve_algebra(cat, s));
  HypothesisReport rep = check_hypothesis_snilp_centralizers(ks);
  if (opt.json) {
    json out{{"holds", rep.holds}, {"entries", json::array()}};
    for (const auto& e : rep.entries)
      out["entries"].push_back({{"algebra", e.algebra.name()},
                                {"size", e.algebra.size()},
                                {"centralizer", partition_to_json(e.centralizer)},
                                {"supernilpotent", e.supernilpotent}});
    std::cout << out.dump() << "\n";
  } else {
    std::cout << (rep.holds ? "holds" : "fails") << "\n";
    for (const auto& e : rep.entries)
      std::cout << "  " << e.algebra.name() << " (n=" << e.algebra.size()
                << "): centralizer " << e.centralizer.to_block_string() << " -> "
                << (e.supernilpotent ? "supernilpotent" : "not supernilpotent") << "\n";
  }
  return rep.holds ? 0 : 1;
}

int cmd_tct_type(const Options& opt, const std::string& alg_spec,
                 const std::string& delta_arg, const std::string& theta_arg) {
  FiniteAlgebra a = resolve_algebra(load_catalog(opt), alg_spec);
  TCTType t = classify_type(a, parse_partition_arg(delta_arg, a.size()),
                            parse_partition_arg(theta_arg, a.size()));
  if (opt.json) {
    json out{{"type", t.type}};
    if (t.characteristic) out["characteristic"] = *t.characteristic;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "type " << t.type;
    if (t.characteristic) std::cout << " (characteristic " << *t.characteristic << ")";
    std::cout << "\n";
  }
  return 0;
}

int cmd_check_identities(const Options& opt, const std::string& file) {
  Catalog cat = load_catalog(opt);
  ConstructedAlgebra c = construction_from_json(cat, read_json_file(file));
  bool ok = check_dalg_identities(c);
  if (opt.json)
    std::cout << json{{"valid", ok}}.dump() << "\n";
  else
    std::cout << (ok ? "identities hold" : "identities violated") << "\n";
  return ok ? 0 : 1;
}

int cmd_maltsev(const Options& opt, const std::string& alg_spec) {
  FiniteAlgebra a = resolve_algebra(load_catalog(opt), alg_spec);
  MaltsevResult r = has_maltsev_term(a);
  if (opt.json) {
    json out{{"status", r.status == MaltsevStatus::kFound   ? "found"
                        : r.status == MaltsevStatus::kNone ? "none"
                                                           : "unknown"}};
    if (r.term) out["term"] = to_string(*r.term);
    std::cout << out.dump() << "\n";
  } else {
    switch (r.status) {
      case MaltsevStatus::kFound:
        std::cout << "maltsev term: " << to_string(*r.term) << "\n";
        break;
      case MaltsevStatus::kNone:
        std::cout << "no maltsev term\n";
        break;
      case MaltsevStatus::kUnknown:
        std::cout << "unknown (search cap reached)\n";
        break;
    }
  }
  if (r.status == MaltsevStatus::kUnknown) return 3;
  return r.status == MaltsevStatus::kFound ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite universal algebra toolkit"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "machine-readable JSON output");
  app.add_option("--threads", opt.threads, "parallelism hint");
  app.add_option("--catalog", opt.catalog_dir,
                 "algebra catalog directory (default: $UALG_CATALOG)");

  std::string alg_spec, chi_arg, beta_arg, alpha_arg, delta_arg, theta_arg;
  std::string term_text, file_arg, sub_file;
  std::vector<std::string> beta_args, alg_specs;
  bool dot = false, assert_flag = false, cross = false;
  int d = 2;
  int rc = 2;

  auto* con = app.add_subcommand("con", "congruence lattice");
  con->add_option("alg", alg_spec)->required();
  con->add_flag("--dot", dot, "emit a DOT Hasse diagram");
  con->callback([&] { rc = cmd_con(opt, alg_spec, dot); });

  auto* comm = app.add_subcommand("commutator", "higher commutator");
  comm->add_option("alg", alg_spec)->required();
  comm->add_option("beta", beta_args, "congruences")->required()->expected(-2);
  comm->callback([&] { rc = cmd_commutator(opt, alg_spec, beta_args); });

  auto* cent = app.add_subcommand("centralizer", "centralizer (0 : beta)");
  cent->add_option("alg", alg_spec)->required();
  cent->add_option("beta", beta_arg)->required();
  cent->callback([&] { rc = cmd_centralizer(opt, alg_spec, beta_arg); });

  auto* nil = app.add_subcommand("nilpotence", "lower central series");
  nil->add_option("alg", alg_spec)->required();
  nil->add_option("alpha", alpha_arg)->required();
  nil->callback([&] { rc = cmd_nilpotence(opt, alg_spec, alpha_arg); });

  auto* sn = app.add_subcommand("supernil", "decide supernilpotence");
  sn->add_option("alg", alg_spec)->required();
  sn->add_option("alpha", alpha_arg)->required();
  sn->add_flag("--assert-omits-type1", assert_flag,
               "skip the unary-type necessary condition check");
  sn->add_flag("--cross-check", cross, "verify through the construction");
  sn->callback([&] { rc = cmd_supernil(opt, alg_spec, alpha_arg, assert_flag, cross); });

  auto* cons = app.add_subcommand("construct", "build the diagonal algebra");
  cons->add_option("alg", alg_spec)->required();
  cons->add_option("chi", chi_arg, "sort partition (kernel of chi)")->required();
  cons->callback([&] { rc = cmd_construct(opt, alg_spec, chi_arg); });

  auto* star = app.add_subcommand("star", "star maps");
  star->add_option("alg", alg_spec)->required();
  star->add_option("chi", chi_arg)->required();
  auto* star_c = star->add_option("--congruence", beta_arg, "congruence below chi");
  auto* star_s = star->add_option("--subuniverse", sub_file, "tuple-set JSON file");
  star_c->excludes(star_s);
  star->callback([&] {
    if (beta_arg.empty() && sub_file.empty())
      throw CLI::RequiredError("--congruence or --subuniverse");
    rc = cmd_star(opt, alg_spec, chi_arg, beta_arg, sub_file);
  });

  auto* lift = app.add_subcommand("lift-term", "lift an idempotent base term");
  lift->add_option("alg", alg_spec)->required();
  lift->add_option("chi", chi_arg)->required();
  lift->add_option("--term", term_text)->required();
  lift->callback([&] { rc = cmd_lift_term(opt, alg_spec, chi_arg, term_text); });

  auto* coord = app.add_subcommand("coordinate-terms", "coordinate terms of a term");
  coord->add_option("alg", alg_spec)->required();
  coord->add_option("chi", chi_arg)->required();
  coord->add_option("--term", term_text)->required();
  coord->callback([&] { rc = cmd_coordinate_terms(opt, alg_spec, chi_arg, term_text); });

  auto* smp = app.add_subcommand("smp", "subpower membership");
  smp->require_subcommand(1);
  auto* solve = smp->add_subcommand("solve", "decide membership");
  solve->add_option("instance", file_arg)->required();
  solve->callback([&] { rc = cmd_smp_solve(opt, file_arg); });
  auto* reduce = smp->add_subcommand("reduce", "reduce to a central instance");
  reduce->add_option("instance", file_arg)->required();
  reduce->add_option("--d", d, "coherence parameter");
  reduce->callback([&] { rc = cmd_smp_reduce(opt, file_arg, d); });
  auto* chk_coh = smp->add_subcommand("check-coherent", "check d-coherence");
  chk_coh->add_option("instance", file_arg)->required();
  chk_coh->add_option("--d", d, "coherence parameter");
  chk_coh->callback([&] { rc = cmd_smp_check(opt, file_arg, d, false); });
  auto* chk_cen = smp->add_subcommand("check-central", "check d-centrality");
  chk_cen->add_option("instance", file_arg)->required();
  chk_cen->add_option("--d", d, "coherence parameter");
  chk_cen->callback([&] { rc = cmd_smp_check(opt, file_arg, d, true); });
  auto* bks = smp->add_subcommand("build-kstar", "similarity classes of HS(K)");
  bks->add_option("alg", alg_specs)->required()->expected(-1);
  bks->callback([&] { rc = cmd_smp_build_kstar(opt, alg_specs); });
  auto* hyp = smp->add_subcommand("check-hypothesis", "supernilpotent centralizers");
  hyp->add_option("alg", alg_specs)->required()->expected(-1);
  hyp->callback([&] { rc = cmd_smp_check_hypothesis(opt, alg_specs); });

  auto* tct = app.add_subcommand("tct", "tame congruence theory");
  tct->require_subcommand(1);
  auto* type = tct->add_subcommand("type", "type of a prime quotient");
  type->add_option("alg", alg_spec)->required();
  type->add_option("delta", delta_arg)->required();
  type->add_option("theta", theta_arg)->required();
  type->callback([&] { rc = cmd_tct_type(opt, alg_spec, delta_arg, theta_arg); });

  auto* check = app.add_subcommand("check", "validators");
  check->require_subcommand(1);
  auto* ident = check->add_subcommand("identities", "diagonal-algebra identities");
  ident->add_option("file", file_arg, "construct output JSON")->required();
  ident->callback([&] { rc = cmd_check_identities(opt, file_arg); });

  auto* mal = app.add_subcommand("maltsev", "search for a Maltsev term");
  mal->add_option("alg", alg_spec)->required();
  mal->callback([&] { rc = cmd_maltsev(opt, alg_spec); });

  // Let global flags like --json appear after the subcommand.
  std::function<void(CLI::App*)> allow_globals = [&](CLI::App* sub) {
    sub->fallthrough();
    for (CLI::App* nested : sub->get_subcommands({})) allow_globals(nested);
  };
  for (CLI::App* sub : app.get_subcommands({})) allow_globals(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const cap_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const consistency_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return rc;
}
