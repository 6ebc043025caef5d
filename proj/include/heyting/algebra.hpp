#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "heyting/bits.hpp"
#include "heyting/errors.hpp"
#include "heyting/poset.hpp"

namespace heyting {

// Finite bounded lattice with precomputed operation tables. In heyting mode
// the lattice is distributive and implication, pseudo-complement and
// supplement are total. Treat instances as immutable after construction;
// sharing across threads is safe.
struct HeytingAlgebra {
  enum class Mode { lattice, heyting };

  Mode mode = Mode::heyting;
  int n = 0;
  int bot = 0, top = 0;
  std::vector<Bits> upset;  // upset[a] = {b : a <= b}
  std::vector<Bits> dnset;
  std::vector<int> rank;                       // longest-chain height from bottom
  std::vector<int> meet_t, join_t, imp_t;      // n*n tables; imp entries may be -1
  std::vector<int> star_t, supp_t;             // unary tables; entries may be -1

  int size() const { return n; }
  bool heyting() const { return mode == Mode::heyting; }
  bool leq(int a, int b) const { return upset[a].get(b); }
  int meet(int a, int b) const { return meet_t[static_cast<size_t>(a) * n + b]; }
  int join(int a, int b) const { return join_t[static_cast<size_t>(a) * n + b]; }

  int implies(int a, int b) const {
    int v = imp_t[static_cast<size_t>(a) * n + b];
    if (v < 0)
      throw UnsupportedOperation("relative pseudo-complement " + std::to_string(a) + "->" +
                                 std::to_string(b) + " does not exist");
    return v;
  }
  int pseudocomplement(int a) const {
    int v = star_t[a];
    if (v < 0) throw UnsupportedOperation("pseudo-complement of " + std::to_string(a) +
                                          " does not exist");
    return v;
  }
  int supplement(int a) const {
    int v = supp_t[a];
    if (v < 0)
      throw UnsupportedOperation("supplement of " + std::to_string(a) + " does not exist");
    return v;
  }
  bool has_supplement(int a) const { return supp_t[a] >= 0; }
  bool supplemented() const {
    for (int a = 0; a < n; ++a)
      if (supp_t[a] < 0) return false;
    return true;
  }

  Bits all() const { return Bits::ones(n); }

  int meet_of(const Bits& s) const {
    int m = top;
    for (int a = s.first(); a >= 0; a = s.next(a)) m = meet(m, a);
    return m;
  }
  int join_of(const Bits& s) const {
    int j = bot;
    for (int a = s.first(); a >= 0; a = s.next(a)) j = join(j, a);
    return j;
  }

  int lower_cover_count(int a) const {
    int c = 0;
    for (int b = dnset[a].first(); b >= 0; b = dnset[a].next(b))
      if (b != a && (upset[b] & dnset[a]).count() == 2) ++c;
    return c;
  }

  bool join_irreducible(int a) const { return a != bot && lower_cover_count(a) == 1; }

  std::vector<int> join_irreducibles() const {
    std::vector<int> out;
    for (int a = 0; a < n; ++a)
      if (join_irreducible(a)) out.push_back(a);
    return out;
  }

  bool meet_irreducible(int a) const {
    if (a == top) return false;
    int c = 0;
    for (int b = upset[a].first(); b >= 0; b = upset[a].next(b))
      if (b != a && (upset[a] & dnset[b]).count() == 2) ++c;
    return c == 1;
  }

  // u v v = 1 implies u = 1 or v = 1
  bool fsi() const {
    if (n < 2) return false;
    for (int u = 0; u < n; ++u) {
      if (u == top) continue;
      for (int v = 0; v < n; ++v)
        if (v != top && join(u, v) == top) return false;
    }
    return true;
  }

  int complement_of(int a) const {
    for (int d = 0; d < n; ++d)
      if (meet(a, d) == bot && join(a, d) == top) return d;
    return -1;
  }

  Bits center() const {
    Bits z(n);
    for (int a = 0; a < n; ++a)
      if (complement_of(a) >= 0) z.set(a);
    return z;
  }
};

// algebra together with the canonical relabeling of the construction input
struct Built {
  HeytingAlgebra algebra;
  std::vector<int> canon;  // canon[input index] = element index
};

namespace detail {

inline std::vector<int> heights(const Poset& p) {
  std::vector<int> h(p.size(), 0);
  for (int a : p.linear_extension())
    for (int b = 0; b < p.size(); ++b)
      if (b != a && p.leq(b, a)) h[a] = std::max(h[a], h[b] + 1);
  return h;
}

}  // namespace detail

// Derives all tables from a validated partial order. Elements are renamed to
// the canonical carrier order: sorted by rank, ties broken by the upset row
// bit-string of the input relation.
inline Built build_from_order(const Poset& order, HeytingAlgebra::Mode mode) {
  const int n = order.size();
  if (n == 0) throw NotALattice("empty carrier", -1, -1);
  if (n > 20000) throw ResourceLimit("carrier too large for table construction");

  std::vector<int> h = detail::heights(order);
  std::vector<int> by_rank(n);
  std::iota(by_rank.begin(), by_rank.end(), 0);
  std::sort(by_rank.begin(), by_rank.end(), [&](int a, int b) {
    if (h[a] != h[b]) return h[a] < h[b];
    return order.up(a).value_less(order.up(b));
  });
  std::vector<int> canon(n);
  for (int k = 0; k < n; ++k) canon[by_rank[k]] = k;

  HeytingAlgebra A;
  A.mode = mode;
  A.n = n;
  A.upset.assign(n, Bits(n));
  A.dnset.assign(n, Bits(n));
  A.rank.resize(n);
  for (int i = 0; i < n; ++i) {
    A.rank[canon[i]] = h[i];
    for (int j = 0; j < n; ++j)
      if (order.leq(i, j)) {
        A.upset[canon[i]].set(canon[j]);
        A.dnset[canon[j]].set(canon[i]);
      }
  }

  A.bot = A.top = -1;
  for (int a = 0; a < n; ++a) {
    if (A.upset[a].count() == n) A.bot = a;
    if (A.dnset[a].count() == n) A.top = a;
  }
  if (A.bot < 0) throw NotALattice("no bottom element", -1, -1);
  if (A.top < 0) throw NotALattice("no top element", -1, -1);

  A.meet_t.assign(static_cast<size_t>(n) * n, -1);
  A.join_t.assign(static_cast<size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      Bits lb = A.dnset[a] & A.dnset[b];
      int m = -1;
      for (int c = lb.first(); c >= 0; c = lb.next(c))
        if (lb.subset_of(A.dnset[c])) {
          m = c;
          break;
        }
      if (m < 0) throw NotALattice("meet missing", a, b);
      Bits ub = A.upset[a] & A.upset[b];
      int j = -1;
      for (int c = ub.first(); c >= 0; c = ub.next(c))
        if (ub.subset_of(A.upset[c])) {
          j = c;
          break;
        }
      if (j < 0) throw NotALattice("join missing", a, b);
      A.meet_t[static_cast<size_t>(a) * n + b] = A.meet_t[static_cast<size_t>(b) * n + a] = m;
      A.join_t[static_cast<size_t>(a) * n + b] = A.join_t[static_cast<size_t>(b) * n + a] = j;
    }

  if (mode == HeytingAlgebra::Mode::heyting) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (A.meet(a, A.join(b, c)) != A.join(A.meet(a, b), A.meet(a, c)))
            throw NotDistributive("distributivity fails", a, b, c);
  }

  A.imp_t.assign(static_cast<size_t>(n) * n, -1);
  A.star_t.assign(n, -1);
  A.supp_t.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      // greatest c with a ^ c <= b
      Bits cand(n);
      for (int c = 0; c < n; ++c)
        if (A.leq(A.meet(a, c), b)) cand.set(c);
      for (int c = cand.first(); c >= 0; c = cand.next(c))
        if (cand.subset_of(A.dnset[c])) {
          A.imp_t[static_cast<size_t>(a) * n + b] = c;
          break;
        }
      if (mode == HeytingAlgebra::Mode::heyting && A.imp_t[static_cast<size_t>(a) * n + b] < 0)
        throw InvariantBreach("distributive finite lattice lacks an implication entry");
    }
  for (int a = 0; a < n; ++a) {
    A.star_t[a] = A.imp_t[static_cast<size_t>(a) * n + A.bot];
    // least x with a v x = 1
    Bits cand(n);
    for (int x = 0; x < n; ++x)
      if (A.join(a, x) == A.top) cand.set(x);
    for (int x = cand.first(); x >= 0; x = cand.next(x))
      if (cand.subset_of(A.upset[x])) {
        A.supp_t[a] = x;
        break;
      }
    if (mode == HeytingAlgebra::Mode::heyting && A.supp_t[a] < 0)
      throw InvariantBreach("finite distributive lattice lacks a supplement entry");
  }

  return Built{std::move(A), std::move(canon)};
}

// Birkhoff: the lattice of downsets of p, in heyting mode. downset_of[k]
// gives the downset carried by element k.
struct DownsetAlgebra {
  HeytingAlgebra algebra;
  std::vector<Bits> downset_of;
};

inline DownsetAlgebra downset_algebra(const Poset& p, size_t limit = 1u << 20) {
  std::vector<Bits> ds = p.downsets(limit);
  std::sort(ds.begin(), ds.end(), [](const Bits& a, const Bits& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a.value_less(b);
  });
  const int m = static_cast<int>(ds.size());
  std::vector<Bits> up(m, Bits(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (ds[i].subset_of(ds[j])) up[i].set(j);
  Built b = build_from_order(Poset::from_upsets(std::move(up)), HeytingAlgebra::Mode::heyting);
  std::vector<Bits> carried(m, Bits(p.size()));
  for (int i = 0; i < m; ++i) carried[b.canon[i]] = ds[i];
  return DownsetAlgebra{std::move(b.algebra), std::move(carried)};
}

// -------- table self-checks (used by the suite and the negative controls) --

// residuation: c <= a->b iff a^c <= b; returns a violating triple (a,b,c)
inline std::optional<std::array<int, 3>> check_residuation(const HeytingAlgebra& A,
                                                           int exhaustive_limit = 256,
                                                           uint64_t seed = 1) {
  auto bad = [&](int a, int b, int c) {
    return A.leq(c, A.implies(a, b)) != A.leq(A.meet(a, c), b);
  };
  if (A.n <= exhaustive_limit) {
    for (int a = 0; a < A.n; ++a)
      for (int b = 0; b < A.n; ++b)
        for (int c = 0; c < A.n; ++c)
          if (bad(a, b, c)) return std::array<int, 3>{a, b, c};
    return std::nullopt;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(0, A.n - 1);
  for (int t = 0; t < 2'000'000; ++t) {
    int a = d(rng), b = d(rng), c = d(rng);
    if (bad(a, b, c)) return std::array<int, 3>{a, b, c};
  }
  return std::nullopt;
}

inline std::optional<std::array<int, 3>> check_distributivity(const HeytingAlgebra& A) {
  for (int a = 0; a < A.n; ++a)
    for (int b = 0; b < A.n; ++b)
      for (int c = 0; c < A.n; ++c)
        if (A.meet(a, A.join(b, c)) != A.join(A.meet(a, b), A.meet(a, c)))
          return std::array<int, 3>{a, b, c};
  return std::nullopt;
}

// a v a+ = 1 and a v x = 1 implies a+ <= x
inline std::optional<std::array<int, 2>> check_supplement_characterization(
    const HeytingAlgebra& A) {
  for (int a = 0; a < A.n; ++a) {
    int s = A.supplement(a);
    if (A.join(a, s) != A.top) return std::array<int, 2>{a, s};
    for (int x = 0; x < A.n; ++x)
      if (A.join(a, x) == A.top && !A.leq(s, x)) return std::array<int, 2>{a, x};
  }
  return std::nullopt;
}

// -------- derived structure ------------------------------------------------

struct ElementClasses {
  Bits regular, dense, coregular, codense;
};

inline ElementClasses classify_elements(const HeytingAlgebra& A) {
  ElementClasses c{Bits(A.n), Bits(A.n), Bits(A.n), Bits(A.n)};
  for (int a = 0; a < A.n; ++a) {
    c.regular.set(A.pseudocomplement(a));
    c.coregular.set(A.supplement(a));
    if (A.pseudocomplement(a) == A.bot) c.dense.set(a);
    if (A.supplement(a) == A.top) c.codense.set(a);
  }
  // dense is a filter, codense an ideal
  for (int a = c.dense.first(); a >= 0; a = c.dense.next(a)) {
    for (int b = c.dense.first(); b >= 0; b = c.dense.next(b))
      if (!c.dense.get(A.meet(a, b)))
        throw InvariantBreach("dense elements not closed under meet");
    for (int b = A.upset[a].first(); b >= 0; b = A.upset[a].next(b))
      if (!c.dense.get(b)) throw InvariantBreach("dense elements not an up-set");
  }
  for (int a = c.codense.first(); a >= 0; a = c.codense.next(a)) {
    for (int b = c.codense.first(); b >= 0; b = c.codense.next(b))
      if (!c.codense.get(A.join(a, b)))
        throw InvariantBreach("co-dense elements not closed under join");
    for (int b = A.dnset[a].first(); b >= 0; b = A.dnset[a].next(b))
      if (!c.codense.get(b)) throw InvariantBreach("co-dense elements not a down-set");
  }
  return c;
}

struct CsVerdict {
  bool holds = false;
  int x = -1, y = -1;  // witness pair when !holds
};

// dual Stone identity (x v y)+ = x+ ^ y+, cross-checked against the other
// three equivalent conditions
inline CsVerdict is_centrally_supplemented(const HeytingAlgebra& A) {
  CsVerdict v;
  v.holds = true;
  for (int x = 0; x < A.n && v.holds; ++x)
    for (int y = 0; y < A.n; ++y)
      if (A.supplement(A.join(x, y)) != A.meet(A.supplement(x), A.supplement(y))) {
        v.holds = false;
        v.x = x;
        v.y = y;
        break;
      }

  Bits z = A.center();
  Bits coreg(A.n);
  for (int a = 0; a < A.n; ++a) coreg.set(A.supplement(a));

  bool center_eq = z == coreg;
  bool splitting = true;  // x+ ^ x++ = 0
  for (int x = 0; x < A.n; ++x)
    if (A.meet(A.supplement(x), A.supplement(A.supplement(x))) != A.bot) splitting = false;
  bool sublattice = true;
  for (int a = coreg.first(); a >= 0; a = coreg.next(a))
    for (int b = coreg.first(); b >= 0; b = coreg.next(b))
      if (!coreg.get(A.meet(a, b)) || !coreg.get(A.join(a, b))) sublattice = false;
  bool central = true;
  for (int a = 0; a < A.n; ++a)
    if (!z.get(A.supplement(a))) central = false;

  if (center_eq != v.holds || splitting != v.holds || sublattice != v.holds ||
      central != v.holds)
    throw InvariantBreach("the four central-supplement conditions disagree");
  return v;
}

// co-regular elements as a Boolean algebra: bounds and join inherited, meet
// (a^b)++, complement the supplement; quotient a -> a++ collapses the
// co-dense ideal
struct GlivenkoDual {
  HeytingAlgebra algebra;       // boolean algebra on the co-regular elements
  std::vector<int> carrier;     // algebra element -> element of the source
  std::vector<int> quotient;    // source element a -> algebra element for a++
};

inline GlivenkoDual glivenko_dual(const HeytingAlgebra& A) {
  auto supp2 = [&](int a) { return A.supplement(A.supplement(a)); };
  std::vector<int> coreg;
  {
    Bits s(A.n);
    for (int a = 0; a < A.n; ++a) s.set(A.supplement(a));
    coreg = s.members();
  }
  const int m = static_cast<int>(coreg.size());
  std::vector<Bits> up(m, Bits(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (A.leq(coreg[i], coreg[j])) up[i].set(j);
  Built b = build_from_order(Poset::from_upsets(std::move(up)), HeytingAlgebra::Mode::heyting);

  GlivenkoDual g;
  g.carrier.resize(m);
  for (int i = 0; i < m; ++i) g.carrier[b.canon[i]] = coreg[i];
  std::unordered_map<int, int> pos;
  for (int k = 0; k < m; ++k) pos[g.carrier[k]] = k;
  g.algebra = std::move(b.algebra);
  g.quotient.resize(A.n);
  for (int a = 0; a < A.n; ++a) g.quotient[a] = pos.at(supp2(a));

  const HeytingAlgebra& G = g.algebra;
  if (g.carrier[G.bot] != A.bot || g.carrier[G.top] != A.top)
    throw InvariantBreach("glivenko dual bounds differ from the source bounds");
  if (G.center() != G.all()) throw InvariantBreach("glivenko dual is not boolean");
  for (int i = 0; i < m; ++i) {
    if (G.complement_of(i) != pos.at(A.supplement(g.carrier[i])))
      throw InvariantBreach("glivenko dual complement is not the supplement");
    for (int j = 0; j < m; ++j) {
      if (g.carrier[G.join(i, j)] != A.join(g.carrier[i], g.carrier[j]))
        throw InvariantBreach("glivenko dual join not inherited");
      if (g.carrier[G.meet(i, j)] != supp2(A.meet(g.carrier[i], g.carrier[j])))
        throw InvariantBreach("glivenko dual meet is not (a^b)++");
    }
  }
  for (int a = 0; a < A.n; ++a)
    for (int b2 = 0; b2 < A.n; ++b2) {
      if (g.quotient[A.join(a, b2)] != G.join(g.quotient[a], g.quotient[b2]) ||
          g.quotient[A.meet(a, b2)] != G.meet(g.quotient[a], g.quotient[b2]))
        throw InvariantBreach("a -> a++ is not a lattice quotient onto the glivenko dual");
      bool same_class = g.quotient[a] == g.quotient[b2];
      if (same_class != (A.supplement(a) == A.supplement(b2)))
        throw InvariantBreach("glivenko kernel differs from supplement equality");
    }
  for (int a = 0; a < A.n; ++a)
    if ((g.quotient[a] == G.bot) != (A.supplement(a) == A.top))
      throw InvariantBreach("glivenko quotient does not collapse exactly the co-dense ideal");
  return g;
}

// -------- isomorphism ------------------------------------------------------

namespace detail {

inline std::vector<uint64_t> iso_signatures(const HeytingAlgebra& A) {
  std::vector<uint64_t> sig(A.n);
  for (int a = 0; a < A.n; ++a) {
    uint64_t s = 0x9e3779b97f4a7c15ull;
    auto mix = [&](uint64_t v) {
      s ^= v + 0x9e3779b97f4a7c15ull + (s << 6) + (s >> 2);
    };
    mix(static_cast<uint64_t>(A.rank[a]));
    mix(static_cast<uint64_t>(A.dnset[a].count()));
    mix(static_cast<uint64_t>(A.upset[a].count()));
    mix(static_cast<uint64_t>(A.lower_cover_count(a)));
    sig[a] = s;
  }
  for (int round = 0; round < 2; ++round) {
    std::vector<uint64_t> next(A.n);
    for (int a = 0; a < A.n; ++a) {
      std::vector<uint64_t> below, above;
      for (int b = A.dnset[a].first(); b >= 0; b = A.dnset[a].next(b))
        if (b != a) below.push_back(sig[b]);
      for (int b = A.upset[a].first(); b >= 0; b = A.upset[a].next(b))
        if (b != a) above.push_back(sig[b]);
      std::sort(below.begin(), below.end());
      std::sort(above.begin(), above.end());
      uint64_t s = sig[a];
      auto mix = [&](uint64_t v) {
        s ^= v + 0x9e3779b97f4a7c15ull + (s << 6) + (s >> 2);
      };
      for (auto v : below) mix(v ^ 0x517cc1b727220a95ull);
      for (auto v : above) mix(v ^ 0x2545f4914f6cdd1dull);
      next[a] = s;
    }
    sig = std::move(next);
  }
  return sig;
}

inline bool iso_extend(const HeytingAlgebra& A, const HeytingAlgebra& B,
                       const std::vector<std::vector<int>>& cand, std::vector<int>& img,
                       std::vector<bool>& used, const std::vector<int>& order, size_t k) {
  if (k == order.size()) return true;
  int a = order[k];
  for (int b : cand[a]) {
    if (used[b]) continue;
    bool ok = true;
    for (size_t j = 0; j < k && ok; ++j) {
      int a2 = order[j];
      if (A.leq(a, a2) != B.leq(b, img[a2]) || A.leq(a2, a) != B.leq(img[a2], b)) ok = false;
    }
    if (!ok) continue;
    img[a] = b;
    used[b] = true;
    if (iso_extend(A, B, cand, img, used, order, k + 1)) return true;
    used[b] = false;
    img[a] = -1;
  }
  return false;
}

}  // namespace detail

// order isomorphism (hence lattice/Heyting isomorphism) A -> B, or nullopt
inline std::optional<std::vector<int>> find_isomorphism(const HeytingAlgebra& A,
                                                        const HeytingAlgebra& B) {
  if (A.n != B.n) return std::nullopt;
  auto sa = detail::iso_signatures(A);
  auto sb = detail::iso_signatures(B);
  {
    auto ca = sa, cb = sb;
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    if (ca != cb) return std::nullopt;
  }
  std::vector<std::vector<int>> cand(A.n);
  for (int a = 0; a < A.n; ++a) {
    for (int b = 0; b < B.n; ++b)
      if (sa[a] == sb[b]) cand[a].push_back(b);
    if (cand[a].empty()) return std::nullopt;
  }
  std::vector<int> order(A.n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return cand[x].size() < cand[y].size(); });
  std::vector<int> img(A.n, -1);
  std::vector<bool> used(B.n, false);
  if (!detail::iso_extend(A, B, cand, img, used, order, 0)) return std::nullopt;
  return img;
}

inline bool isomorphic(const HeytingAlgebra& A, const HeytingAlgebra& B) {
  return find_isomorphism(A, B).has_value();
}

// -------- products ---------------------------------------------------------

struct ProductAlgebra {
  HeytingAlgebra algebra;
  std::vector<std::vector<int>> tuples;  // element -> coordinate tuple
  std::vector<int> radix;

  int index_of(const std::vector<int>& t) const {
    size_t key = 0;
    for (size_t i = 0; i < t.size(); ++i) key = key * radix[i] + t[i];
    return by_key[key];
  }
  std::vector<int> by_key;
};

inline ProductAlgebra product_algebra(const std::vector<const HeytingAlgebra*>& factors,
                                      size_t limit = 1u << 16) {
  size_t total = 1;
  std::vector<int> radix;
  for (auto* f : factors) {
    radix.push_back(f->n);
    total *= static_cast<size_t>(f->n);
    if (total > limit) throw ResourceLimit("product carrier exceeds limit");
  }
  if (factors.empty()) total = 1;
  std::vector<std::vector<int>> tuples(total);
  for (size_t k = 0; k < total; ++k) {
    std::vector<int> t(factors.size());
    size_t rest = k;
    for (size_t i = factors.size(); i-- > 0;) {
      t[i] = static_cast<int>(rest % radix[i]);
      rest /= radix[i];
    }
    tuples[k] = std::move(t);
  }
  const int m = static_cast<int>(total);
  std::vector<Bits> up(m, Bits(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      bool le = true;
      for (size_t c = 0; c < factors.size() && le; ++c)
        if (!factors[c]->leq(tuples[i][c], tuples[j][c])) le = false;
      if (le) up[i].set(j);
    }
  Built b = build_from_order(Poset::from_upsets(std::move(up)), HeytingAlgebra::Mode::heyting);
  ProductAlgebra p;
  p.radix = std::move(radix);
  p.tuples.resize(m);
  p.by_key.resize(m);
  for (int k = 0; k < m; ++k) {
    p.tuples[b.canon[k]] = tuples[k];
    p.by_key[k] = b.canon[k];
  }
  p.algebra = std::move(b.algebra);
  return p;
}

// -------- DOT export -------------------------------------------------------

inline std::string to_dot(const HeytingAlgebra& A, const std::string& name = "lattice") {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (int a = 0; a < A.n; ++a) os << "  n" << a << " [label=\"" << a << "\"];\n";
  for (int a = 0; a < A.n; ++a)
    for (int b = A.upset[a].first(); b >= 0; b = A.upset[a].next(b))
      if (b != a && (A.upset[a] & A.dnset[b]).count() == 2)
        os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace heyting
