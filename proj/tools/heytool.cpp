#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "heyting/suite.hpp"

namespace fs = std::filesystem;
using namespace heyting;

namespace {

void emit(const Report& r, bool json_out) {
  if (json_out)
    std::cout << r.to_json().dump(2) << '\n';
  else
    std::cout << r.text();
}

int cmd_gen(int max_points, const std::string& out_dir) {
  auto corpus = build_corpus(max_points);
  save_corpus(corpus, out_dir);
  std::cout << "wrote " << corpus.size() << " entries to " << out_dir << '\n';
  return 0;
}

int cmd_analyze(const std::string& file, bool json_out) {
  HeytingAlgebra A = load_lattice_file(file);
  Report r = analyze_algebra(file, A);
  emit(r, json_out);
  return 0;
}

int cmd_complete(const std::string& file, const std::string& out_dir, bool json_out,
                 size_t max_carrier) {
  HeytingAlgebra A = load_lattice_file(file);
  Report r = Report::info("complete " + file);
  ExtensionAlgebra E = build_extension(A, max_carrier);
  r.add(Report::info("extension-size", std::to_string(E.alg.n)));
  HeytingFrame W = hyper_frame(A);
  FrameAlgebra FA = frame_algebra(W);
  r.add(Report::info("completion-size", std::to_string(FA.alg.n)));
  DeltaIso di = delta_iso(E, W, FA);
  r.add(Report::check("delta-isomorphism", di.ok, di.detail));
  DMCompletion dm = dm_completion(carrier_order(E.alg));
  r.add(Report::check("dm-cross-check", isomorphic(dm.lattice, FA.alg)));
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    fs::path base(out_dir);
    write_json_file(base / "s_of_a.json", lattice_to_json(E.alg));
    std::ofstream(base / "s_of_a.dot") << to_dot(E.alg, "S(A)");
    std::vector<int> gens;
    for (const auto& f : E.rep.Y.filters) gens.push_back(f.generator);
    write_json_file(base / "s_of_a_sections.json", sections_to_json(E.section, gens));
    write_json_file(base / "a_plus.json", lattice_to_json(FA.alg));
    std::ofstream(base / "a_plus.dot") << to_dot(FA.alg, "A+");
    r.add(Report::info("written", out_dir));
  }
  emit(r, json_out);
  return r.all_pass() ? 0 : 1;
}

int cmd_check(const std::string& expr, const std::string& target, bool json_out,
              size_t max_carrier) {
  Equation eq = parse_equation(expr, expr);
  Report r = Report::info("check \"" + expr + "\"");
  bool all = true;

  std::vector<std::pair<std::string, HeytingAlgebra>> targets;
  if (fs::is_directory(target)) {
    for (auto& e : load_corpus(target)) targets.emplace_back(e.id, std::move(e.algebra));
  } else {
    targets.emplace_back(target, load_lattice_file(target));
  }
  std::vector<ExtensionAlgebra> exts;
  exts.reserve(targets.size());
  std::vector<std::pair<std::string, const ExtensionAlgebra*>> entries;
  for (auto& [id, A] : targets) {
    Satisfaction s = satisfies(A, eq);
    std::string witness;
    if (!s.holds) {
      all = false;
      for (size_t i = 0; i < s.witness.size(); ++i)
        witness += (i ? "," : "") + ("x" + std::to_string(i + 1) + ":=") +
                   std::to_string(s.witness[i]);
    }
    r.add(Report::check(id, s.holds, s.holds ? "satisfied" : "falsified at " + witness));
    exts.push_back(build_extension(A, max_carrier, false));
    entries.emplace_back(id, &exts.back());
  }
  ClosureReport cr = closure_experiment(eq, entries);
  r.add(Report::check("closure-under-completion", cr.failures == 0,
                      std::to_string(cr.failures) + " closure failures"));
  emit(r, json_out);
  return all && cr.failures == 0 ? 0 : 1;
}

int cmd_suite(const SuiteOptions& opts, bool json_out) {
  Report r = run_suite(opts);
  emit(r, json_out);
  return r.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite Heyting algebras: centrally supplemented extensions S(A) and "
               "hyper-MacNeille completions A+"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json_out = false;
  uint64_t seed = 1;
  size_t max_carrier = 4096;
  app.add_flag("--json", json_out, "emit the report as JSON");
  app.add_option("--seed", seed, "seed for sampled checks");
  app.add_option("--max-carrier", max_carrier, "carrier bound for extension closures");

  auto* gen = app.add_subcommand("gen", "enumerate downset algebras of small posets");
  int max_points = 4;
  std::string out_dir;
  gen->add_option("--max-points", max_points, "largest poset size")->capture_default_str();
  gen->add_option("--out", out_dir, "output directory")->required();

  auto* analyze = app.add_subcommand("analyze", "structural report for one lattice file");
  std::string analyze_file;
  analyze->add_option("file", analyze_file, "poset or lattice JSON")->required();

  auto* complete = app.add_subcommand("complete", "compute S(A) and the completion A+");
  std::string complete_file, complete_out;
  complete->add_option("file", complete_file, "poset or lattice JSON")->required();
  complete->add_option("--out", complete_out, "directory for JSON/DOT exports");

  auto* check = app.add_subcommand("check", "evaluate an equation over a file or corpus");
  std::string expr, check_target;
  check->add_option("--eq", expr, "equation, e.g. \"1 = x2 v (x2 -> (x1 v x1*))\"")
      ->required();
  check->add_option("target", check_target, "lattice JSON or corpus directory")->required();

  auto* suite = app.add_subcommand("suite", "run the full verification battery");
  SuiteOptions opts;
  suite->add_option("--max-points", opts.max_points, "corpus size")->capture_default_str();
  suite->add_option("--workers", opts.workers, "worker threads (0 = auto)");
  suite->add_option("--theorem-j-limit", opts.theorem_j_limit,
                    "largest |A| for the theorem-j battery");
  suite->add_option("--inject-fault", opts.inject_fault,
                    "negative control: residuation, distributivity or frame");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_gen(max_points, out_dir);
    if (analyze->parsed()) return cmd_analyze(analyze_file, json_out);
    if (complete->parsed())
      return cmd_complete(complete_file, complete_out, json_out, max_carrier);
    if (check->parsed()) return cmd_check(expr, check_target, json_out, max_carrier);
    if (suite->parsed()) {
      opts.seed = seed;
      opts.max_carrier = max_carrier;
      return cmd_suite(opts, json_out);
    }
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const FormatError& e) {
    std::cerr << "format error in " << e.file << ": " << e.what() << '\n';
    return 2;
  } catch (const NotDistributive& e) {
    std::cerr << "not distributive: " << e.what() << " witness (" << e.a << "," << e.b << ","
              << e.c << ")\n";
    return 2;
  } catch (const NotAPoset& e) {
    std::cerr << "not a partial order: " << e.what() << '\n';
    return 2;
  } catch (const NotALattice& e) {
    std::cerr << "not a lattice: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
