#pragma once

#include <random>
#include <utility>
#include <vector>

#include "heyting/algebra.hpp"
#include "heyting/poset.hpp"

namespace heyting::testing {

inline Poset chain_poset(int n) {
  std::vector<std::pair<int, int>> r;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) r.emplace_back(i, j);
  return Poset(n, r);
}

inline Poset antichain_poset(int n) { return Poset(n, {}); }

// p < q, p < r; downsets give the Figure-1 lattice
inline Poset vee_poset() { return Poset(3, {{0, 1}, {0, 2}}); }

inline HeytingAlgebra chain(int n) {
  return build_from_order(chain_poset(n), HeytingAlgebra::Mode::heyting).algebra;
}

inline HeytingAlgebra boolean(int atoms) {
  return downset_algebra(antichain_poset(atoms)).algebra;
}

// 0 < m < a,b < 1 with a,b incomparable, built from the explicit order
inline HeytingAlgebra l5() {
  Poset p(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4}});
  return build_from_order(p, HeytingAlgebra::Mode::heyting).algebra;
}

inline Poset n5_order() {
  // 0 < a < c < 1 and 0 < b < 1
  return Poset(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 4}, {3, 4}});
}

inline Poset m3_order() {
  return Poset(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}});
}

inline Poset random_poset(int n, std::mt19937_64& rng, double edge_p = 0.4) {
  std::bernoulli_distribution flip(edge_p);
  std::vector<Bits> strict(n, Bits(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (flip(rng)) strict[i].set(j);
  // transitive closure along the index order
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (strict[i].get(k)) strict[i] |= strict[k];
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = strict[i].first(); j >= 0; j = strict[i].next(j)) pairs.emplace_back(i, j);
  return Poset(n, pairs);
}

}  // namespace heyting::testing
