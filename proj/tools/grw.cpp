// grw: graded-ring workbench driver.
//
// Subcommands: inspect, check, verify, search, replay. Exit codes follow one
// contract everywhere: 0 when the property holds / suite verified / search
// exhausted / recorded failure gone stale, 1 when a property fails or a
// counterexample is found or reproduced, 2 on usage and input errors. stdout
// carries the report, stderr the diagnostics; --json switches stdout to a
// single machine-readable document.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <grw/deciders.hpp>
#include <grw/harness.hpp>
#include <grw/ringspec.hpp>

namespace {

using namespace grw;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CorpusSpec corpus_spec_from_file(const std::string& path) {
  CorpusSpec spec;
  if (path.empty()) return spec;
  json j = detail::parse_json_text(read_file(path));
  if (!j.is_object()) throw SchemaMismatch("corpus spec: expected an object");
  auto opt_int = [&](const char* key, auto& field) {
    if (j.contains(key)) field = j.at(key).template get<std::decay_t<decltype(field)>>();
  };
  opt_int("zmod_max", spec.zmod_max);
  if (j.contains("cyclic_groups"))
    spec.cyclic_groups = j.at("cyclic_groups").get<std::vector<int>>();
  if (j.contains("matrix_bases"))
    spec.matrix_bases = j.at("matrix_bases").get<std::vector<int>>();
  opt_int("group_ring_order_cap", spec.group_ring_order_cap);
  opt_int("idealization_base_cap", spec.idealization_base_cap);
  opt_int("product_factor_cap", spec.product_factor_cap);
  opt_int("ideal_ops_cap", spec.ideal_ops_cap);
  opt_int("corner_source_cap", spec.corner_source_cap);
  opt_int("subgroup_ring_cap", spec.subgroup_ring_cap);
  opt_int("max_nil_ideals_per_ring", spec.max_nil_ideals_per_ring);
  opt_int("seed", spec.seed);
  return spec;
}

std::string degree_name(const GradedRing& r, const std::optional<Elem>& d) {
  return d ? r.group().name(*d) : "-";
}

json witness_json(const GradedRing& r, const std::function<std::string(Elem)>& label,
                  const Witness& w) {
  json j{{"x", w.x},
         {"f", w.f},
         {"u", w.u},
         {"n", w.n},
         {"x_label", label(w.x)},
         {"f_label", label(w.f)},
         {"u_label", label(w.u)},
         {"n_label", label(w.n)}};
  if (w.degree) j["degree"] = r.group().name(*w.degree);
  return j;
}

void print_witness(const GradedRing& r, const std::function<std::string(Elem)>& label,
                   const Witness& w) {
  std::printf("  [deg %s] %s = %s * %s + %s\n", degree_name(r, w.degree).c_str(),
              label(w.x).c_str(), label(w.f).c_str(), label(w.u).c_str(), label(w.n).c_str());
}

std::string set_to_string(const std::function<std::string(Elem)>& label, const ElementSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.members.size(); ++i)
    out += (i ? ", " : "") + label(s.members[i]);
  return out + "}";
}

int cmd_inspect(const std::string& spec_path, bool machine, const Caps& caps) {
  BuiltInstance built = parse_spec(read_file(spec_path), caps);
  const GradedRing& r = built.ring;
  if (r.ring.order == 1)
    std::fprintf(stderr, "note: degenerate ring of order 1 (zero and one coincide)\n");
  ElementSet u = units(r.ring), n = nilpotents(r.ring);
  std::vector<Elem> idem_e;
  for (Elem x : r.component(r.group().identity).members)
    if (r.ring.times(x, x) == x) idem_e.push_back(x);
  auto gur = graded_unit_regular_elements(r);
  ElementSet jac = jacobson_radical(r.ring);
  HomogeneousIdeal jg = graded_jacobson_radical(r, caps);
  bool local = is_graded_local(r, caps);
  std::vector<Elem> sup = support(r);

  if (machine) {
    json out{{"order", r.ring.order},
             {"units", u.size()},
             {"nilpotents", n.size()},
             {"idempotents_e", idem_e.size()},
             {"graded_local", local}};
    json supj = json::array(), comp = json::object(), gurj = json::object();
    for (Elem g : sup) supj.push_back(r.group().name(g));
    for (Elem g = 0; g < r.group().order; ++g) {
      comp[r.group().name(g)] = r.component(g).size();
      gurj[r.group().name(g)] = gur[g].size();
    }
    out["support"] = supj;
    out["component_sizes"] = comp;
    out["gur_sizes"] = gurj;
    out["jacobson_radical"] = jac.members;
    out["graded_jacobson_radical"] = jg.members.members;
    std::printf("%s\n", out.dump(2).c_str());
    return 0;
  }
  std::printf("order: %d\n", r.ring.order);
  std::string sups;
  for (Elem g : sup) sups += (sups.empty() ? "" : ", ") + r.group().name(g);
  std::printf("support: {%s}\n", sups.c_str());
  for (Elem g = 0; g < r.group().order; ++g)
    std::printf("component %s: size %d, gur size %d\n", r.group().name(g).c_str(),
                r.component(g).size(), gur[g].size());
  std::printf("|U| = %d, |N| = %d, |Idem(R_e)| = %d\n", u.size(), n.size(),
              static_cast<int>(idem_e.size()));
  std::printf("J(R) = %s\n", set_to_string(built.label, jac).c_str());
  std::printf("J^g(R) = %s\n", set_to_string(built.label, jg.members).c_str());
  std::printf("graded-local: %s\n", local ? "yes" : "no");
  return 0;
}

int cmd_check(const std::string& spec_path, const std::string& property, bool emit_witnesses,
              bool strict_literal, bool machine, const Caps& caps) {
  BuiltInstance built = parse_spec(read_file(spec_path), caps);
  const GradedRing& r = built.ring;
  auto t0 = std::chrono::steady_clock::now();
  PropertyVerdict v = run_property(r, property, strict_literal);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  if (machine) {
    json out{{"instance", serialize_instance(r)},
             {"property", property},
             {"verdict", v.holds ? "holds" : "fails"},
             {"stats",
              {{"units", v.stats.units},
               {"nilpotents", v.stats.nilpotents},
               {"idempotents", v.stats.idempotents}}},
             {"timings", {{"seconds", secs}}}};
    json ws = json::array();
    if (emit_witnesses)
      for (const auto& w : v.witnesses) ws.push_back(witness_json(r, built.label, w));
    out["witnesses"] = ws;
    if (v.counterexample) {
      out["counterexample"] = *v.counterexample;
      out["counterexample_label"] = built.label(*v.counterexample);
    }
    std::printf("%s\n", out.dump(2).c_str());
    return v.holds ? 0 : 1;
  }
  std::printf("%s: %s\n", property.c_str(), v.holds ? "holds" : "FAILS");
  if (!v.holds && v.counterexample)
    std::printf("counterexample: %s (index %d)\n", built.label(*v.counterexample).c_str(),
                *v.counterexample);
  if (v.holds && emit_witnesses)
    for (const auto& w : v.witnesses) print_witness(r, built.label, w);
  return v.holds ? 0 : 1;
}

int cmd_verify(std::vector<std::string> ids, const std::string& corpus_path, long long seed,
               int workers, bool machine, bool with_timings) {
  CorpusSpec spec = corpus_spec_from_file(corpus_path);
  if (seed >= 0) spec.seed = seed;
  if (ids.empty() || (ids.size() == 1 && ids[0] == "all")) ids = theorem_ids();
  auto t0 = std::chrono::steady_clock::now();
  Corpus corpus = generate_corpus(spec);
  Report rep = verify(corpus, ids, workers);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  int total_applicable = 0;
  for (const auto& t : rep.theorems) total_applicable += t.applicable;
  if (total_applicable == 0)
    std::fprintf(stderr, "WARNING: 0 applicable instances across all requested suites\n");
  if (machine)
    std::printf("%s\n", rep.to_json(with_timings).dump(2).c_str());
  else {
    std::printf("%s", rep.to_text().c_str());
    if (with_timings) std::printf("elapsed: %.2fs\n", rep.seconds);
  }
  return rep.total_counterexamples() == 0 ? 0 : 1;
}

int cmd_search(const std::vector<std::string>& hypotheses, const std::string& conclusion,
               const std::string& corpus_path, bool machine) {
  Corpus corpus = generate_corpus(corpus_spec_from_file(corpus_path));
  SearchOutcome out = search_counterexample(corpus, hypotheses, conclusion);
  if (machine) {
    json j{{"found", out.found}, {"detail", out.detail}};
    if (out.found) {
      j["instance_name"] = out.instance_name;
      j["instance"] = out.instance;
    }
    std::printf("%s\n", j.dump(2).c_str());
  } else if (out.found) {
    std::printf("counterexample: %s\n%s\n", out.instance_name.c_str(), out.detail.c_str());
    std::printf("%s\n", out.instance.dump(2).c_str());
  } else {
    std::printf("exhausted: no counterexample in the corpus\n");
  }
  return out.found ? 1 : 0;
}

int cmd_replay(const std::string& path, bool machine, const Caps& caps) {
  json doc = detail::parse_json_text(read_file(path));
  ReplayOutcome out = replay_counterexample(doc, caps);
  if (machine)
    std::printf("%s\n", json{{"reproduced", out.reproduced}, {"detail", out.detail}}.dump(2).c_str());
  else
    std::printf("%s: %s\n", out.reproduced ? "fail reproduced" : "pass", out.detail.c_str());
  return out.reproduced ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graded-ring workbench"};
  app.require_subcommand(1);
  bool machine = false;
  app.add_flag("--json", machine, "emit one machine-readable JSON document on stdout");

  Caps caps;
  bool unsafe = false;
  app.add_flag("--unsafe-caps", unsafe, "acknowledge overriding the default order caps");
  auto* max_order = app.add_option("--max-order", caps.classifier,
                                   "override classifier order cap (requires --unsafe-caps)");
  auto* max_ideal = app.add_option("--max-ideal-order", caps.ideal_lattice,
                                   "override ideal-lattice order cap (requires --unsafe-caps)");

  std::string spec_path, property, corpus_path, replay_path, conclusion;
  std::vector<std::string> ids, hypotheses;
  bool emit_witnesses = false, strict_literal = false, no_timings = false;
  long long seed = -1;
  int workers = grw::worker_count_from_env();

  auto* inspect = app.add_subcommand("inspect", "print structure of a ring-spec instance");
  inspect->add_option("spec", spec_path, "ring-spec file")->required();

  auto* check = app.add_subcommand("check", "decide a property on a ring-spec instance");
  check->add_option("spec", spec_path, "ring-spec file")->required();
  check->add_option("--property", property, "one of u-nil-clean, graded-u-nil-clean, "
                    "graded-nil-good, graded-g-clean, g-clean")->required();
  check->add_flag("--emit-witnesses", emit_witnesses, "print one witness per homogeneous element");
  check->add_flag("--strict-literal-nilgood", strict_literal,
                  "graded-nil-good without degree pinning of the summands");

  auto* verify = app.add_subcommand("verify", "run theorem suites over a generated corpus");
  verify->add_option("ids", ids, "theorem ids, or \"all\"");
  verify->add_option("--corpus", corpus_path, "corpus-spec file (JSON)");
  verify->add_option("--seed", seed, "corpus seed override");
  verify->add_option("--workers", workers, "parallel workers (default: GRW_WORKERS or 1)");
  verify->add_flag("--no-timings", no_timings, "omit timing fields for byte-stable reports");

  auto* search = app.add_subcommand("search", "scan the corpus for an implication counterexample");
  search->add_option("--hypothesis", hypotheses, "hypothesis predicate (repeatable)");
  search->add_option("--conclusion", conclusion, "conclusion predicate")->required();
  search->add_option("--corpus", corpus_path, "corpus-spec file (JSON)");

  auto* replay = app.add_subcommand("replay", "re-validate a recorded counterexample file");
  replay->add_option("file", replay_path, "counterexample JSON file")->required();

  // let global flags (--json, --unsafe-caps, ...) appear after the subcommand
  for (auto* s : app.get_subcommands([](const CLI::App*) { return true; })) s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if ((max_order->count() || max_ideal->count()) && !unsafe) {
    std::fprintf(stderr, "error: cap overrides require --unsafe-caps\n");
    return 2;
  }

  try {
    if (*inspect) return cmd_inspect(spec_path, machine, caps);
    if (*check) return cmd_check(spec_path, property, emit_witnesses, strict_literal, machine, caps);
    if (*verify) return cmd_verify(ids, corpus_path, seed, workers, machine, !no_timings);
    if (*search) return cmd_search(hypotheses, conclusion, corpus_path, machine);
    if (*replay) return cmd_replay(replay_path, machine, caps);
  } catch (const grw::UnknownTheorem& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const grw::UnknownPredicate& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
