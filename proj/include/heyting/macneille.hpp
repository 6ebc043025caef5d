#pragma once

#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "heyting/algebra.hpp"
#include "heyting/poset.hpp"

namespace heyting {

inline Poset carrier_order(const HeytingAlgebra& A) {
  return Poset::from_upsets(A.upset);
}

// Dedekind-MacNeille completion by cuts. Cuts are represented by their lower
// sets; these are exactly the intersections of principal down-sets (the empty
// intersection giving the full carrier). Kept independent of the Galois/frame
// machinery so it can serve as a cross-validation oracle.
struct DMCompletion {
  HeytingAlgebra lattice;       // built in lattice mode; may be non-distributive
  std::vector<Bits> cut_lower;  // element -> lower set of the cut
  std::vector<int> embed;       // point -> element carrying its principal cut
};

inline DMCompletion dm_completion(const Poset& p, size_t max_cuts = 1u << 20) {
  const int n = p.size();
  std::vector<Bits> downs(n, Bits(n));
  for (int x = 0; x < n; ++x) downs[x] = p.down(x);

  std::vector<Bits> cuts;
  std::unordered_set<Bits, BitsHash> seen;
  auto add = [&](const Bits& c) {
    if (seen.insert(c).second) {
      cuts.push_back(c);
      if (cuts.size() > max_cuts) throw ResourceLimit("cut count exceeds limit");
      return true;
    }
    return false;
  };
  add(Bits::ones(n));
  for (int x = 0; x < n; ++x) add(downs[x]);
  for (size_t i = 0; i < cuts.size(); ++i)
    for (size_t j = 0; j < i; ++j) add(cuts[i] & cuts[j]);

  // each stored set is a Galois-closed cut: lower = low(up(lower))
  auto up_of = [&](const Bits& s) {
    Bits u = Bits::ones(n);
    for (int x = s.first(); x >= 0; x = s.next(x)) u &= p.up(x);
    return u;
  };
  auto low_of = [&](const Bits& s) {
    Bits l = Bits::ones(n);
    for (int x = s.first(); x >= 0; x = s.next(x)) l &= downs[x];
    return l;
  };
  for (const Bits& c : cuts)
    if (low_of(up_of(c)) != c) throw InvariantBreach("a stored cut is not Galois-closed");

  std::sort(cuts.begin(), cuts.end(), [](const Bits& a, const Bits& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a.value_less(b);
  });
  const int m = static_cast<int>(cuts.size());
  std::vector<Bits> up(m, Bits(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (cuts[i].subset_of(cuts[j])) up[i].set(j);
  Built b = build_from_order(Poset::from_upsets(std::move(up)), HeytingAlgebra::Mode::lattice);

  DMCompletion dm;
  dm.cut_lower.resize(m);
  std::unordered_map<Bits, int, BitsHash> index;
  for (int i = 0; i < m; ++i) {
    dm.cut_lower[b.canon[i]] = cuts[i];
    index[cuts[i]] = b.canon[i];
  }
  dm.lattice = std::move(b.algebra);
  dm.embed.resize(n);
  for (int x = 0; x < n; ++x) dm.embed[x] = index.at(downs[x]);

  // the embedding is join-dense and meet-dense
  const HeytingAlgebra& L = dm.lattice;
  for (int c = 0; c < m; ++c) {
    int jn = L.bot, mt = L.top;
    for (int x = 0; x < n; ++x) {
      if (L.leq(dm.embed[x], c)) jn = L.join(jn, dm.embed[x]);
      if (L.leq(c, dm.embed[x])) mt = L.meet(mt, dm.embed[x]);
    }
    if (jn != c || mt != c)
      throw InvariantBreach("DM embedding is not join-dense and meet-dense");
  }
  return dm;
}

}  // namespace heyting
