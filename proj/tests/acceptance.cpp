// Acceptance suite: runs every criterion at its stated scale and prints one
// pass/fail line per criterion. Exit code 0 iff all pass.

#include <atomic>
#include <cstdio>
#include <iostream>
#include <mutex>
#include <thread>
#include <vector>

#include "heyting/suite.hpp"

using namespace heyting;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& what, bool ok, double seconds,
               const std::string& detail = "") {
  std::printf("[%s] criterion %2d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", number,
              what.c_str(), seconds, detail.empty() ? "" : " - ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

struct Prepared {
  std::string id;
  int points = 0;
  HeytingAlgebra algebra;
  ExtensionAlgebra ext;
  int completion_size = 0;
  HeytingAlgebra completion;
  bool delta_ok = false;
  bool dm_ok = false;
  std::string error;
};

template <typename Fn>
void parallel_for(size_t count, Fn&& fn) {
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<size_t> next{0};
  auto run = [&]() {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= count) break;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
}

std::vector<Prepared> prepare(const std::vector<CorpusEntry>& corpus) {
  std::vector<Prepared> out(corpus.size());
  parallel_for(corpus.size(), [&](size_t i) {
    Prepared& p = out[i];
    p.id = corpus[i].id;
    p.points = corpus[i].meta.points;
    p.algebra = corpus[i].algebra;
    try {
      p.ext = build_extension(p.algebra);
      HeytingFrame W = hyper_frame(p.algebra);
      FrameAlgebra FA = frame_algebra(W);
      p.completion_size = FA.alg.n;
      p.completion = FA.alg;
      p.delta_ok = delta_iso(p.ext, W, FA).ok;
      DMCompletion dm = dm_completion(carrier_order(p.ext.alg));
      p.dm_ok = isomorphic(dm.lattice, FA.alg);
    } catch (const Error& e) {
      p.error = e.what();
    }
  });
  return out;
}

}  // namespace

int main() {
  Stopwatch total;

  // ---- criterion 1: Figure-1 regression ----------------------------------
  {
    Stopwatch sw;
    bool ok = true;
    std::string detail;
    HeytingAlgebra L5 = downset_algebra(Poset(3, {{0, 1}, {0, 2}})).algebra;
    ok = ok && L5.supplemented();
    Satisfaction ds = satisfies(L5, parse_equation("(x1 v x2)+ = x1+ ^ x2+", "dual-stone"));
    ok = ok && !ds.holds && ds.witness == std::vector<int>{2, 3};
    ExtensionAlgebra E = build_extension(L5);
    ok = ok && E.alg.n == 9;
    HeytingAlgebra c3 = downset_algebra(Poset(2, {{0, 1}})).algebra;
    ProductAlgebra c3c3 = product_algebra({&c3, &c3});
    ok = ok && isomorphic(E.alg, c3c3.algebra);
    HeytingFrame W = hyper_frame(L5);
    FrameAlgebra FA = frame_algebra(W);
    ok = ok && FA.alg.n == 9 && delta_iso(E, W, FA).ok;
    double s = sw.seconds();
    if (s >= 1.0) {
      ok = false;
      detail = "exceeded the 1s budget";
    }
    criterion(1, "Figure-1 regression: L5, S(L5) = C3xC3, 9 closed sets, Delta iso", ok, s,
              detail);
  }

  std::vector<CorpusEntry> corpus = build_corpus(5);
  auto fx = fixtures();

  Stopwatch prep_watch;
  std::vector<Prepared> prepared = prepare(corpus);
  double prep_seconds = prep_watch.seconds();

  // ---- criterion 2: the central identity at corpus scale -----------------
  {
    Stopwatch sw;
    bool ok = corpus.size() == 87;
    std::string detail = ok ? "" : "corpus size " + std::to_string(corpus.size());
    for (const auto& p : prepared)
      if (!p.error.empty() || !p.dm_ok || !p.delta_ok) {
        ok = false;
        detail = p.id + (p.error.empty() ? ": completion mismatch" : ": " + p.error);
        break;
      }
    criterion(2, "dm_completion(S(A)) iso frame_algebra(W_A) on all 87 entries", ok,
              sw.seconds() + prep_seconds, detail);
  }

  // ---- criterion 3: theorem-j on the n<=4 corpus and the fixtures --------
  {
    Stopwatch sw;
    bool ok = true;
    std::string detail;
    std::vector<std::pair<std::string, const HeytingAlgebra*>> targets;
    for (const auto& e : corpus)
      if (e.meta.points <= 4) targets.emplace_back(e.id, &e.algebra);
    for (const auto& [name, A] : fx) targets.emplace_back(name, &A);
    std::mutex mx;
    parallel_for(targets.size(), [&](size_t i) {
      TheoremJReport r = theorem_j_suite(*targets[i].second);
      bool exact_3_13 =
          isomorphic(frame_algebra(hyper_frame(*targets[i].second)).alg,
                     *targets[i].second) ==
          is_centrally_supplemented(*targets[i].second).holds;
      if (!r.all_pass() || !exact_3_13) {
        std::lock_guard<std::mutex> lock(mx);
        ok = false;
        for (const auto& it : r.items)
          if (!it.pass) detail = targets[i].first + ": item " + std::to_string(it.number);
        if (!exact_3_13) detail = targets[i].first + ": completion-identity not exact";
      }
    });
    criterion(3, "theorem-j: 13 items on the 24-entry corpus and all fixtures", ok,
              sw.seconds(), detail);
  }

  // ---- criterion 4: finite-minimum collapse ------------------------------
  {
    Stopwatch sw;
    bool ok = true;
    std::string detail;
    for (const auto& p : prepared) {
      size_t expect = 1;
      for (const auto& f : p.ext.rep.factors) expect *= static_cast<size_t>(f.n);
      if (static_cast<size_t>(p.completion_size) != expect) {
        ok = false;
        detail = p.id + ": |A+| != prod |A_y|";
        break;
      }
      std::vector<const HeytingAlgebra*> fs;
      for (const auto& f : p.ext.rep.factors) fs.push_back(&f);
      if (!isomorphic(p.completion, product_algebra(fs).algebra)) {
        ok = false;
        detail = p.id + ": A+ not the product of the quotients";
        break;
      }
    }
    criterion(4, "A+ iso prod_Y A_y with |A+| exact on every entry", ok, sw.seconds(),
              detail);
  }

  // ---- criterion 5: psi, theta_A and the atoms of Z(S(A)) ----------------
  {
    Stopwatch sw;
    bool ok = true;
    std::string detail;
    for (const auto& p : prepared) {
      try {
        psi_and_thetaA(p.ext);  // ker psi = theta_A and A/theta_A iso D(A) inside
        WitnessVerdict v = closure_of_Y_witness(p.ext);
        if (!v.ok) {
          ok = false;
          detail = p.id + ": " + v.detail;
          break;
        }
      } catch (const Error& e) {
        ok = false;
        detail = p.id + ": " + e.what();
        break;
      }
    }
    criterion(5, "ker psi = theta_A, A/theta_A iso D(A), atoms of Z(S(A)) = Y", ok,
              sw.seconds(), detail);
  }

  // ---- criterion 6: S-homomorphism package -------------------------------
  {
    Stopwatch sw;
    bool ok = true;
    std::string detail;
    std::mutex mx;
    parallel_for(prepared.size(), [&](size_t i) {
      const Prepared& p = prepared[i];
      bool good = is_S_homomorphism(p.algebra, p.ext.alg, p.ext.embed).holds;
      if (good) {
        SHomExtension x = extend_S_hom(p.ext, p.ext.alg, p.ext.embed);
        good = x.unique;
        for (int u = 0; u < p.ext.alg.n && good; ++u)
          if (x.map[u] != u) good = false;
      }
      if (!good) {
        std::lock_guard<std::mutex> lock(mx);
        ok = false;
        detail = p.id;
      }
    });
    {
      HeytingAlgebra c2 = downset_algebra(Poset(1, {})).algebra;
      HeytingAlgebra c3 = downset_algebra(Poset(2, {{0, 1}})).algebra;
      ProductAlgebra p23 = product_algebra({&c2, &c3});
      std::vector<int> h = {p23.index_of({0, 0}), p23.index_of({1, 1}),
                            p23.index_of({1, 2})};
      SHomVerdict v = is_S_homomorphism(c3, p23.algebra, h);
      if (v.holds) {
        ok = false;
        detail = "C3 -> 2x3 wrongly accepted";
      }
    }
    criterion(6, "inclusions are S-homomorphisms, C3 -> 2x3 is not, extensions unique", ok,
              sw.seconds(), detail);
  }

  // ---- criterion 7: frame axioms exhaustively up to |A| = 16 -------------
  {
    Stopwatch sw;
    bool ok = true;
    std::string detail;
    std::mutex mx;
    std::vector<const HeytingAlgebra*> targets;
    std::vector<std::string> names;
    for (const auto& e : corpus)
      if (e.algebra.n <= 16) {
        targets.push_back(&e.algebra);
        names.push_back(e.id);
      }
    parallel_for(targets.size(), [&](size_t i) {
      bool good = !frame_axioms(macneille_frame(*targets[i])).has_value() &&
                  !frame_axioms(hyper_frame(*targets[i])).has_value();
      if (!good) {
        std::lock_guard<std::mutex> lock(mx);
        ok = false;
        detail = names[i];
      }
    });
    criterion(7,
              "frame axioms (1)-(4) exhaustive for M_A and W_A, |A| <= 16 (" +
                  std::to_string(targets.size()) + " entries)",
              ok, sw.seconds(), detail);
  }

  // ---- criterion 8: truncated V_A collapse at k = 2 ----------------------
  {
    Stopwatch sw;
    bool ok = true;
    std::string detail;
    std::mutex mx;
    std::vector<const HeytingAlgebra*> targets;
    std::vector<std::string> names;
    for (const auto& e : corpus)
      if (e.algebra.n <= 8) {
        targets.push_back(&e.algebra);
        names.push_back(e.id);
      }
    parallel_for(targets.size(), [&](size_t i) {
      CollapseVerdict v = truncated_collapse_check(*targets[i], 2);
      if (!v.ok) {
        std::lock_guard<std::mutex> lock(mx);
        ok = false;
        detail = names[i] + ": " + v.detail;
      }
    });
    criterion(8,
              "truncated V_A collapse at k = 2, |A| <= 8 (" +
                  std::to_string(targets.size()) + " entries)",
              ok, sw.seconds(), detail);
  }

  // ---- criterion 9: the bd2 package ---------------------------------------
  {
    Stopwatch sw;
    bool ok = true;
    std::string detail;
    for (const auto& p : prepared) {
      try {
        bd2_equivalence_check(p.algebra);
      } catch (const Error& e) {
        ok = false;
        detail = p.id + ": " + e.what();
      }
    }
    std::vector<std::pair<std::string, const ExtensionAlgebra*>> entries;
    for (const auto& p : prepared)
      if (p.points <= 4) entries.emplace_back(p.id, &p.ext);
    ClosureReport cr = closure_experiment(bd2_equation(), entries);
    if (entries.size() != 24 || cr.failures != 0) {
      ok = false;
      detail = "bd2 closure failures: " + std::to_string(cr.failures) + " over " +
               std::to_string(entries.size()) + " entries";
    }
    HeytingAlgebra C4 = downset_algebra(Poset(3, {{0, 1}, {0, 2}, {1, 2}})).algebra;
    Satisfaction s = satisfies(C4, bd2_equation());
    if (s.holds || s.witness != std::vector<int>{1, 2}) {
      ok = false;
      detail = "C4 witness mismatch";
    }
    criterion(9, "bd2 three-way equivalence, closure on n <= 4, C4 counterexample", ok,
              sw.seconds(), detail);
  }

  // ---- criterion 10: Boolean products and stalks ---------------------------
  {
    Stopwatch sw;
    bool ok = true;
    std::string detail;
    std::mutex mx;
    parallel_for(prepared.size(), [&](size_t i) {
      const Prepared& p = prepared[i];
      bool good = hausdorff_characterization(p.algebra).equivalence_holds;
      if (good) {
        WeakBooleanVerdict w =
            weak_boolean_product_check(minimum_representation(p.algebra));
        good = (w.patchwork && w.equalizers_clopen) ==
               is_centrally_supplemented(p.algebra).holds;
      }
      if (good) good = central_sheaf_stalks(p.ext).ok;
      if (!good) {
        std::lock_guard<std::mutex> lock(mx);
        ok = false;
        detail = p.id;
      }
    });
    criterion(10, "Hausdorff equivalence, patchwork iff centrally supplemented, stalks", ok,
              sw.seconds(), detail);
  }

  // ---- criterion 11: negative controls -------------------------------------
  {
    Stopwatch sw;
    Report r = negative_controls();
    criterion(11, "corrupted tables and frames are caught with witnesses", r.all_pass(),
              sw.seconds());
  }

  std::printf("%s: %d criterion failure(s), %.1fs total\n",
              g_failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED", g_failures,
              total.seconds());
  return g_failures == 0 ? 0 : 1;
}
