#pragma once

#include <atomic>
#include <set>
#include <thread>

#include "heyting/corpus.hpp"
#include "heyting/frames.hpp"
#include "heyting/macneille.hpp"
#include "heyting/products.hpp"
#include "heyting/report.hpp"
#include "heyting/terms.hpp"

namespace heyting {

struct SuiteOptions {
  int max_points = 4;
  int workers = 0;  // 0 = hardware concurrency
  uint64_t seed = 1;
  size_t max_carrier = 4096;
  int theorem_j_limit = 16;  // run the full theorem-j battery up to this size
  int collapse_limit = 8;    // truncated collapse at k = 2 up to this size
  int fuzz_count = 2;        // random 6-point posets beyond the exhaustive range
  std::string inject_fault;  // "", "residuation", "distributivity", "frame"
};

namespace detail {

inline Report de_morgan_half_law(const HeytingAlgebra& A) {
  for (int x = 0; x < A.n; ++x)
    for (int y = 0; y < A.n; ++y)
      if (A.supplement(A.meet(x, y)) != A.join(A.supplement(x), A.supplement(y)))
        return Report::check("de-morgan-half-law", false,
                             "witness (" + std::to_string(x) + "," + std::to_string(y) + ")");
  return Report::check("de-morgan-half-law", true);
}

inline Report center_complete(const HeytingAlgebra& A, uint64_t seed) {
  Bits z = A.center();
  auto zs = z.members();
  auto probe = [&](const Bits& sub) {
    return z.get(A.meet_of(sub)) && z.get(A.join_of(sub));
  };
  bool ok = true;
  if (zs.size() <= 16) {
    for (size_t mask = 0; mask < (size_t{1} << zs.size()) && ok; ++mask) {
      Bits sub(A.n);
      for (size_t i = 0; i < zs.size(); ++i)
        if (mask & (size_t{1} << i)) sub.set(zs[i]);
      ok = probe(sub);
    }
  } else {
    std::mt19937_64 rng(seed);
    for (int t = 0; t < 4000 && ok; ++t) {
      Bits sub(A.n);
      for (int c : zs)
        if (rng() & 1) sub.set(c);
      ok = probe(sub);
    }
  }
  return Report::check("center-closed-under-all-meets-joins", ok);
}

inline Report meet_dense_formula(const HeytingAlgebra& A, uint64_t seed) {
  // the meet-irreducibles are the least meet-dense set; also try random
  // supersets
  std::mt19937_64 rng(seed);
  for (int round = 0; round < 4; ++round) {
    Bits S(A.n);
    for (int a = 0; a < A.n; ++a)
      if (A.meet_irreducible(a) || (round > 0 && (rng() & 1))) S.set(a);
    for (int x = 0; x < A.n; ++x) {
      int acc = A.bot;
      for (int s = S.first(); s >= 0; s = S.next(s))
        if (A.leq(x, s)) acc = A.join(acc, A.supplement(s));
      if (acc != A.supplement(x))
        return Report::check("meet-dense-supplement-formula", false,
                             "x = " + std::to_string(x));
    }
  }
  return Report::check("meet-dense-supplement-formula", true);
}

inline Report density_check(const ExtensionAlgebra& E) {
  const HeytingAlgebra& S = E.alg;
  std::set<int> F, G;
  for (int s = 0; s < E.base.n; ++s)
    for (int a = 0; a < E.base.n; ++a) {
      auto [f, g] = indicator_sections(E, s, a);
      F.insert(f);
      G.insert(g);
    }
  for (int u = 0; u < S.n; ++u) {
    int jn = S.bot, mt = S.top;
    for (int f : F)
      if (S.leq(f, u)) jn = S.join(jn, f);
    for (int g : G)
      if (S.leq(u, g)) mt = S.meet(mt, g);
    if (jn != u || mt != u)
      return Report::check("indicator-density", false, "u = " + std::to_string(u));
  }
  return Report::check("indicator-density", true);
}

inline Report normal_forms_check(const ExtensionAlgebra& E) {
  try {
    for (int u = 0; u < E.alg.n; ++u) verify_normal_form(E, u, normal_form(E, u));
  } catch (const Error& e) {
    return Report::check("normal-forms", false, e.what());
  }
  return Report::check("normal-forms", true);
}

inline Report coann_principal(const HeytingAlgebra& A) {
  for (int a = 0; a < A.n; ++a)
    if (co_annihilator(A, a) != A.upset[A.supplement(a)])
      return Report::check("co-annihilator-principal", false, "a = " + std::to_string(a));
  return Report::check("co-annihilator-principal", true);
}

inline Report dual_delta_star(const HeytingAlgebra& A) {
  for (int a = 0; a < A.n; ++a) {
    int b = A.supplement(a);
    if (A.join(a, b) != A.top || A.supplement(A.meet(a, b)) != A.top)
      return Report::check("dual-delta-star", false, "a = " + std::to_string(a));
  }
  return Report::check("dual-delta-star", true);
}

}  // namespace detail

// the full verification battery for one algebra
inline Report algebra_suite(const std::string& id, const HeytingAlgebra& A,
                            const SuiteOptions& opts) {
  Report r = Report::info(id, "size " + std::to_string(A.n));
  Stopwatch sw;
  try {
    auto res = check_residuation(A, 256, opts.seed);
    r.add(Report::check("residuation", !res.has_value()));
    r.add(Report::check("supplement-characterization",
                        !check_supplement_characterization(A).has_value()));
    r.add(detail::de_morgan_half_law(A));
    CsVerdict cs = is_centrally_supplemented(A);  // four-way agreement inside
    r.add(Report::check("central-supplement-four-way", true,
                        cs.holds ? "centrally supplemented" : "not centrally supplemented"));
    r.add(detail::center_complete(A, opts.seed));
    r.add(detail::meet_dense_formula(A, opts.seed));
    r.add(detail::dual_delta_star(A));
    classify_elements(A);  // filter/ideal shape asserted inside
    r.add(Report::check("element-classification", true));
    glivenko_dual(A);
    r.add(Report::check("glivenko-dual", true));

    MinSpace Y = min_space(A);  // lemma-min checks inside
    r.add(Report::check("min-space", true, "|Y| = " + std::to_string(Y.size())));
    DualityVerdict dv = coregular_minspace_duality(A);
    r.add(Report::check("coregular-min-duality", dv.ok, dv.detail));

    ExtensionAlgebra E = build_extension(A, opts.max_carrier);
    r.add(Report::check("extension", true, "|S(A)| = " + std::to_string(E.alg.n)));
    r.add(detail::density_check(E));
    r.add(detail::normal_forms_check(E));
    distinguished_sublattices(E);
    r.add(Report::check("distinguished-sublattices", true));
    psi_and_thetaA(E);
    r.add(Report::check("psi-kernel-theta", true));
    r.add(detail::coann_principal(A));
    SHomVerdict sh = is_S_homomorphism(A, E.alg, E.embed);
    r.add(Report::check("inclusion-s-homomorphism", sh.holds));
    SHomExtension ext = extend_S_hom(E, E.alg, E.embed);
    bool ident = ext.unique;
    for (int u = 0; u < E.alg.n && ident; ++u)
      if (ext.map[u] != u) ident = false;
    r.add(Report::check("davey-extension-identity", ident));
    embedding_properties(E, 12, 2000, opts.seed);
    r.add(Report::check("embedding-properties", true));
    WitnessVerdict cy = closure_of_Y_witness(E);
    r.add(Report::check("closure-of-Y", cy.ok, cy.detail));

    r.add(Report::check("frame-axioms-macneille",
                        !frame_axioms(macneille_frame(A)).has_value()));
    HeytingFrame W = hyper_frame(A);
    r.add(Report::check("frame-axioms-hyper", !frame_axioms(W).has_value()));
    {
      // L.U is a closure operator: extensive and idempotent are asserted per
      // call, monotonicity over subset pairs (exhaustive when W0 is tiny)
      bool mono = true;
      std::vector<Bits> subs;
      if (W.pol.n0 <= 12) {
        for (size_t mask = 0; mask < (size_t{1} << W.pol.n0); ++mask) {
          Bits x(W.pol.n0);
          for (int i = 0; i < W.pol.n0; ++i)
            if (mask & (size_t{1} << i)) x.set(i);
          subs.push_back(std::move(x));
        }
      } else {
        std::mt19937_64 rng(opts.seed + 7);
        for (int t = 0; t < 64; ++t) {
          Bits x(W.pol.n0);
          for (int i = 0; i < W.pol.n0; ++i)
            if (rng() & 1) x.set(i);
          subs.push_back(std::move(x));
        }
      }
      std::vector<Bits> closures;
      closures.reserve(subs.size());
      for (const Bits& x : subs) closures.push_back(galois(W.pol, x).lu);
      for (size_t i = 0; i < subs.size() && mono; ++i)
        for (size_t j = 0; j < subs.size(); ++j)
          if (subs[i].subset_of(subs[j]) && !closures[i].subset_of(closures[j])) {
            mono = false;
            break;
          }
      r.add(Report::check("galois-closure-operator", mono));
    }
    FrameAlgebra FA = frame_algebra(W);
    r.add(Report::check("closed-count-matches-extension", FA.alg.n == E.alg.n,
                        std::to_string(FA.alg.n) + " closed sets"));
    r.add(Report::check("macneille-frame-identity",
                        isomorphic(frame_algebra(macneille_frame(A)).alg, A)));
    DeltaIso di = delta_iso(E, W, FA);
    r.add(Report::check("delta-isomorphism", di.ok, di.detail));
    DMCompletion dm = dm_completion(carrier_order(E.alg));
    r.add(Report::check("dm-oracle-agreement", isomorphic(dm.lattice, FA.alg)));
    DMCompletion dm_plus = dm_completion(carrier_order(FA.alg));
    r.add(Report::check("completion-self-macneille", isomorphic(dm_plus.lattice, FA.alg)));
    ProductVerdict pv = hyper_completion_as_product(E, FA);
    r.add(Report::check("completion-as-product", pv.ok, pv.detail));
    r.add(Report::check("completion-of-extension",
                        isomorphic(hyper_completion_lattice(E.alg), FA.alg)));

    if (A.n <= opts.theorem_j_limit) {
      TheoremJReport tj = theorem_j_suite(A, opts.max_carrier);
      Report node = Report::check("theorem-j", tj.all_pass());
      for (const auto& it : tj.items)
        node.add(Report::check("item-" + std::to_string(it.number),
                               it.pass, it.applicable ? it.detail : "not applicable"));
      r.add(std::move(node));
    }
    if (A.n <= opts.collapse_limit) {
      CollapseVerdict cv = truncated_collapse_check(A, 2);
      r.add(Report::check("truncated-collapse-k2", cv.ok, cv.detail));
    }

    bd2_equivalence_check(A);
    r.add(Report::check("bd2-three-way", true));
    bool hsp = true;
    for (const auto& eq : equation_library())
      if (!hsp_transport_holds(eq, E)) hsp = false;
    r.add(Report::check("hsp-transport", hsp));

    SubdirectRepresentation minrep = minimum_representation(A);
    WeakBooleanVerdict wb = weak_boolean_product_check(minrep);
    r.add(Report::check("patchwork-iff-centrally-supplemented",
                        (wb.patchwork && wb.equalizers_clopen) == cs.holds, wb.witness));
    SubdirectRepresentation crep = center_representation(A);
    r.add(Report::check("center-representation-weak-boolean",
                        weak_boolean_product_check(crep).patchwork));
    HausdorffVerdict hv = hausdorff_characterization(A);
    r.add(Report::check("hausdorff-characterization", hv.equivalence_holds));
    StalkReport st = central_sheaf_stalks(E);
    r.add(Report::check("central-sheaf-stalks", st.ok, st.detail));
  } catch (const Error& e) {
    r.add(Report::check("exception", false, e.what()));
  }
  r.seconds = sw.seconds();
  return r;
}

// negative controls: corrupted tables and frames must be caught with witnesses
inline Report negative_controls() {
  Report r = Report::info("negative-controls");
  {
    HeytingAlgebra A = downset_algebra(Poset(3, {{0, 1}, {0, 2}})).algebra;
    A.imp_t[static_cast<size_t>(2) * A.n + 1] = A.top;
    auto w = check_residuation(A);
    r.add(Report::check("corrupted-implies-table", w.has_value(),
                        w ? "witness (" + std::to_string((*w)[0]) + "," +
                                std::to_string((*w)[1]) + "," + std::to_string((*w)[2]) + ")"
                          : "corruption not detected"));
  }
  {
    Poset n5(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 4}, {3, 4}});
    bool caught = false;
    std::string detail;
    try {
      build_from_order(n5, HeytingAlgebra::Mode::heyting);
    } catch (const NotDistributive& e) {
      caught = true;
      detail = "witness (" + std::to_string(e.a) + "," + std::to_string(e.b) + "," +
               std::to_string(e.c) + ")";
    }
    r.add(Report::check("pentagon-distributivity", caught, detail));
  }
  {
    HeytingFrame f = macneille_frame(downset_algebra(Poset(2, {{0, 1}})).algebra);
    f.comp[1 * 3 + 1] = 2;
    auto bad = frame_axioms(f);
    r.add(Report::check("corrupted-frame", bad.has_value(),
                        bad ? "axiom (" + std::to_string(bad->axiom) + ") at (" +
                                  std::to_string(bad->w) + "," + std::to_string(bad->v) +
                                  "," + std::to_string(bad->u) + ")"
                            : "corruption not detected"));
  }
  return r;
}

// the full corpus run: per-algebra batteries fan out over a worker pool,
// report assembly is index-ordered
inline Report run_suite(const SuiteOptions& opts) {
  Stopwatch sw;
  Report root = Report::info("suite", "max points " + std::to_string(opts.max_points) +
                                          ", seed " + std::to_string(opts.seed));

  if (!opts.inject_fault.empty()) {
    if (opts.inject_fault == "residuation") {
      HeytingAlgebra A = downset_algebra(Poset(3, {{0, 1}, {0, 2}})).algebra;
      A.imp_t[static_cast<size_t>(2) * A.n + 1] = A.top;
      auto w = check_residuation(A);
      root.add(Report::check(
          "injected-residuation-fault", !w.has_value(),
          w ? "residuation fails at (" + std::to_string((*w)[0]) + "," +
                  std::to_string((*w)[1]) + "," + std::to_string((*w)[2]) + ")"
            : ""));
    } else if (opts.inject_fault == "distributivity") {
      try {
        Poset n5(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 4}, {3, 4}});
        build_from_order(n5, HeytingAlgebra::Mode::heyting);
        root.add(Report::check("injected-distributivity-fault", true));
      } catch (const NotDistributive& e) {
        root.add(Report::check("injected-distributivity-fault", false,
                               "witness (" + std::to_string(e.a) + "," +
                                   std::to_string(e.b) + "," + std::to_string(e.c) + ")"));
      }
    } else if (opts.inject_fault == "frame") {
      HeytingFrame f = macneille_frame(downset_algebra(Poset(2, {{0, 1}})).algebra);
      f.comp[1 * 3 + 1] = 2;
      auto bad = frame_axioms(f);
      root.add(Report::check("injected-frame-fault", !bad.has_value(),
                             bad ? "axiom (" + std::to_string(bad->axiom) + ")" : ""));
    } else {
      root.add(Report::check("inject-fault", false,
                             "unknown fault '" + opts.inject_fault + "'"));
    }
  }

  std::vector<std::pair<std::string, HeytingAlgebra>> targets;
  for (auto& e : build_corpus(opts.max_points)) targets.emplace_back(e.id, std::move(e.algebra));
  for (auto& [name, A] : fixtures()) targets.emplace_back("fixture-" + name, A);
  {
    // seeded fuzzing past the exhaustive range; ids record the seed
    std::mt19937_64 rng(opts.seed);
    for (int i = 0; i < opts.fuzz_count; ++i) {
      Poset p = random_poset(6, rng);
      targets.emplace_back("fuzz-s" + std::to_string(opts.seed) + "-" + std::to_string(i),
                           downset_algebra(p).algebra);
    }
  }

  std::vector<Report> reports(targets.size());
  unsigned workers = opts.workers > 0 ? static_cast<unsigned>(opts.workers)
                                      : std::max(1u, std::thread::hardware_concurrency());
  std::atomic<size_t> next{0};
  auto run = [&]() {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= targets.size()) break;
      reports[i] = algebra_suite(targets[i].first, targets[i].second, opts);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
  for (auto& rep : reports) root.add(std::move(rep));

  // corpus-level closure experiments
  {
    Report node = Report::info("closure-experiments");
    std::vector<ExtensionAlgebra> exts;
    std::vector<std::pair<std::string, const ExtensionAlgebra*>> entries;
    exts.reserve(targets.size());
    for (auto& [id, A] : targets) {
      exts.push_back(build_extension(A, opts.max_carrier, false));
      entries.emplace_back(id, &exts.back());
    }
    for (const char* nm : {"bd2", "excluded-middle", "dual-stone", "linearity"}) {
      Equation eq = [&] {
        for (auto& e : equation_library())
          if (e.name == nm) return e;
        throw Error("unknown library equation");
      }();
      ClosureReport cr = closure_experiment(eq, entries);
      node.add(Report::check("closure-" + std::string(nm), cr.failures == 0,
                             std::to_string(cr.failures) + " failures"));
    }
    root.add(std::move(node));
  }

  root.add(negative_controls());
  root.seconds = sw.seconds();
  return root;
}

// per-algebra analysis for the CLI
inline Report analyze_algebra(const std::string& name, const HeytingAlgebra& A) {
  Report r = Report::info(name);
  r.add(Report::info("size", std::to_string(A.n)));
  r.add(Report::info("center", A.center().to_string()));
  CsVerdict cs = is_centrally_supplemented(A);
  r.add(Report::info("centrally-supplemented",
                     cs.holds ? "yes"
                              : "no, witness (" + std::to_string(cs.x) + "," +
                                    std::to_string(cs.y) + ")"));
  r.add(Report::info("fsi", A.fsi() ? "yes" : "no"));
  MinSpace Y = min_space(A);
  r.add(Report::info("minimum", "|Y| = " + std::to_string(Y.size())));
  {
    std::string gens;
    for (const auto& f : Y.filters) gens += (gens.empty() ? "" : ",") + std::to_string(f.generator);
    r.add(Report::info("minimal-prime-generators", "{" + gens + "}"));
  }
  SubdirectEmbedding e = subdirect_embed(A);
  {
    std::string sizes;
    for (const auto& f : e.factors) sizes += (sizes.empty() ? "" : "x") + std::to_string(f.n);
    r.add(Report::info("quotients", sizes.empty() ? "(none)" : sizes));
  }
  {
    std::string supp;
    for (int a = 0; a < A.n; ++a) supp += (a ? "," : "") + std::to_string(A.supplement(a));
    r.add(Report::info("supplement-table", "[" + supp + "]"));
  }
  ElementClasses c = classify_elements(A);
  r.add(Report::info("dense", c.dense.to_string()));
  r.add(Report::info("codense", c.codense.to_string()));
  r.add(Report::info("regular", c.regular.to_string()));
  r.add(Report::info("coregular", c.coregular.to_string()));
  return r;
}

}  // namespace heyting
