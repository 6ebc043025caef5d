#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "heyting/bits.hpp"
#include "heyting/errors.hpp"

namespace heyting {

// Finite partial order on points 0..n-1, stored as the full relation.
// Reflexivity is implied; antisymmetry and transitivity are validated at
// construction.
class Poset {
public:
  Poset() = default;

  Poset(int n, const std::vector<std::pair<int, int>>& leq_pairs) {
    if (n < 0) throw NotAPoset("poset size must be non-negative");
    n_ = n;
    up_.assign(n, Bits(n));
    for (auto [i, j] : leq_pairs) {
      if (i < 0 || i >= n || j < 0 || j >= n)
        throw NotAPoset("leq pair (" + std::to_string(i) + "," + std::to_string(j) +
                        ") out of range");
      up_[i].set(j);
    }
    for (int i = 0; i < n; ++i) up_[i].set(i);
    validate();
  }

  static Poset from_upsets(std::vector<Bits> up) {
    Poset p;
    p.n_ = static_cast<int>(up.size());
    p.up_ = std::move(up);
    for (int i = 0; i < p.n_; ++i) p.up_[i].set(i);
    p.validate();
    return p;
  }

  int size() const { return n_; }
  bool leq(int i, int j) const { return up_[i].get(j); }
  const Bits& up(int i) const { return up_[i]; }

  Bits down(int i) const {
    Bits d(n_);
    for (int j = 0; j < n_; ++j)
      if (leq(j, i)) d.set(j);
    return d;
  }

  std::vector<std::pair<int, int>> relation_pairs(bool strict_only = true) const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i)
      for (int j = up_[i].first(); j >= 0; j = up_[i].next(j))
        if (!strict_only || i != j) out.emplace_back(i, j);
    return out;
  }

  // cover pairs (i,j): i < j with nothing strictly between
  std::vector<std::pair<int, int>> covers() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        if (i == j || !leq(i, j)) continue;
        bool cover = true;
        for (int k = 0; k < n_ && cover; ++k)
          if (k != i && k != j && leq(i, k) && leq(k, j)) cover = false;
        if (cover) out.emplace_back(i, j);
      }
    return out;
  }

  // all downsets, as bitsets over points; throws ResourceLimit past the bound
  std::vector<Bits> downsets(size_t limit = 1u << 20) const {
    // walk points in a linear extension; a downset of the extended prefix
    // either omits p or contains p together with everything strictly below it
    std::vector<Bits> acc{Bits(n_)};
    for (int p : linear_extension()) {
      Bits strictly_below = down(p);
      strictly_below.reset(p);
      size_t sz = acc.size();
      for (size_t k = 0; k < sz; ++k) {
        if (!strictly_below.subset_of(acc[k])) continue;
        Bits with = acc[k];
        with.set(p);
        acc.push_back(std::move(with));
        if (acc.size() > limit) throw ResourceLimit("downset count exceeds limit");
      }
    }
    return acc;
  }

  std::vector<int> linear_extension() const {
    std::vector<int> order;
    std::vector<bool> used(n_, false);
    for (int step = 0; step < n_; ++step)
      for (int i = 0; i < n_; ++i) {
        if (used[i]) continue;
        bool minimal = true;
        for (int j = 0; j < n_ && minimal; ++j)
          if (!used[j] && j != i && leq(j, i)) minimal = false;
        if (minimal) {
          used[i] = true;
          order.push_back(i);
          break;
        }
      }
    return order;
  }

  Poset relabeled(const std::vector<int>& perm) const {
    // perm[i] = new name of point i
    std::vector<Bits> up(n_, Bits(n_));
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (leq(i, j)) up[perm[i]].set(perm[j]);
    return from_upsets(std::move(up));
  }

  // minimal relation encoding over all permutations; isomorphism-invariant key
  std::vector<uint64_t> canonical_key() const {
    std::vector<int> perm(n_);
    for (int i = 0; i < n_; ++i) perm[i] = i;
    std::vector<uint64_t> best;
    do {
      std::vector<uint64_t> enc((static_cast<size_t>(n_) * n_ + 63) / 64, 0);
      for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
          if (leq(i, j)) {
            size_t bit = static_cast<size_t>(perm[i]) * n_ + perm[j];
            enc[bit >> 6] |= uint64_t{1} << (bit & 63);
          }
      if (best.empty() || enc < best) best = enc;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  }

  bool isomorphic_to(const Poset& o) const {
    return n_ == o.n_ && canonical_key() == o.canonical_key();
  }

private:
  void validate() const {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        if (i != j && leq(i, j) && leq(j, i))
          throw NotAPoset("antisymmetry fails at (" + std::to_string(i) + "," +
                          std::to_string(j) + ")");
        if (leq(i, j) && !o_subset(j, i))
          throw NotAPoset("transitivity fails at (" + std::to_string(i) + "," +
                          std::to_string(j) + ")");
      }
  }
  bool o_subset(int j, int i) const { return up_[j].subset_of(up_[i]); }

  int n_ = 0;
  std::vector<Bits> up_;
};

}  // namespace heyting
