#pragma once

#include <string>
#include <vector>

#include "heyting/algebra.hpp"

namespace heyting {

struct PrimeFilter {
  Bits elements;
  int generator;  // minimum element; a join-irreducible
};

// the definitional predicate: proper, upward closed, meet-closed, prime
inline bool is_prime_filter(const HeytingAlgebra& A, const Bits& f) {
  if (f.none() || f.get(A.bot)) return false;
  for (int a = f.first(); a >= 0; a = f.next(a)) {
    if (!A.upset[a].subset_of(f)) return false;
    for (int b = f.first(); b >= 0; b = f.next(b))
      if (!f.get(A.meet(a, b))) return false;
  }
  for (int a = 0; a < A.n; ++a)
    for (int b = 0; b < A.n; ++b)
      if (f.get(A.join(a, b)) && !f.get(a) && !f.get(b)) return false;
  return true;
}

// All prime filters, ordered by generator index (a linear extension of the
// inclusion order reversed: smaller generators give larger filters). In a
// finite distributive lattice these are exactly the principal filters of
// join-irreducibles; the predicate cross-check guards the shortcut.
inline std::vector<PrimeFilter> prime_filters(const HeytingAlgebra& A) {
  std::vector<PrimeFilter> out;
  for (int j = 0; j < A.n; ++j) {
    bool pred = is_prime_filter(A, A.upset[j]);
    if (pred != A.join_irreducible(j))
      throw InvariantBreach("prime principal filters are not exactly the join-irreducible ones");
    if (pred) out.push_back(PrimeFilter{A.upset[j], j});
  }
  return out;
}

struct MinSpace {
  std::vector<PrimeFilter> filters;  // minimal prime filters, by generator index

  int size() const { return static_cast<int>(filters.size()); }
  bool contains(int y, int a) const { return filters[y].elements.get(a); }
};

// Y = min(X_A). Verifies the finite forms of the Lemma on minimal prime
// filters; failures signal implementation bugs.
inline MinSpace min_space(const HeytingAlgebra& A) {
  std::vector<PrimeFilter> all = prime_filters(A);
  MinSpace Y;
  for (const auto& f : all) {
    bool minimal = true;
    for (const auto& g : all)
      if (g.generator != f.generator && g.elements.subset_of(f.elements) &&
          g.elements != f.elements)
        minimal = false;
    if (minimal) Y.filters.push_back(f);
  }

  for (const auto& f : all) {
    bool above = false;
    for (const auto& y : Y.filters)
      if (y.elements.subset_of(f.elements)) above = true;
    if (!above) throw InvariantBreach("a prime filter contains no minimal prime filter");
  }

  for (const auto& y : Y.filters) {
    // (1) a in y has s outside y with a v s = 1
    for (int a = y.elements.first(); a >= 0; a = y.elements.next(a)) {
      bool found = false;
      for (int s = 0; s < A.n && !found; ++s)
        if (!y.elements.get(s) && A.join(a, s) == A.top) found = true;
      if (!found) throw InvariantBreach("Lemma min(1) fails on a minimal prime filter");
    }
    if (A.supplemented()) {
      for (int a = 0; a < A.n; ++a) {
        // (3) co-dense elements avoid minimal filters, (4) exactly one of a, a+
        if (A.supplement(a) == A.top && y.elements.get(a))
          throw InvariantBreach("a co-dense element lies in a minimal prime filter");
        if (y.elements.get(a) == y.elements.get(A.supplement(a)))
          throw InvariantBreach("Lemma min(4) fails: a and a+ not split by a minimal filter");
      }
    }
  }

  if (A.supplemented() && is_centrally_supplemented(A).holds) {
    // (5) Y = principal filters of the atoms of the center
    Bits z = A.center();
    std::vector<int> atoms;
    for (int c = z.first(); c >= 0; c = z.next(c)) {
      if (c == A.bot) continue;
      bool atom = true;
      for (int d = z.first(); d >= 0; d = z.next(d))
        if (d != A.bot && d != c && A.leq(d, c)) atom = false;
      if (atom) atoms.push_back(c);
    }
    if (atoms.size() != Y.filters.size())
      throw InvariantBreach("Lemma min(5) fails: atom count differs from |Y|");
    for (int a : atoms) {
      bool found = false;
      for (const auto& y : Y.filters)
        if (y.elements == A.upset[a]) found = true;
      if (!found)
        throw InvariantBreach("Lemma min(5) fails: an atom filter is not a minimal prime filter");
    }
  }
  return Y;
}

struct Congruence {
  std::vector<int> block_of;  // element -> block id (0..blocks-1)
  int blocks = 0;
};

inline bool congruence_compatible(const HeytingAlgebra& A, const Congruence& t,
                                  bool with_supplement) {
  auto same = [&](int a, int b) { return t.block_of[a] == t.block_of[b]; };
  for (int a = 0; a < A.n; ++a)
    for (int b = 0; b < A.n; ++b) {
      if (!same(a, b)) continue;
      for (int c = 0; c < A.n; ++c) {
        if (!same(A.meet(a, c), A.meet(b, c))) return false;
        if (!same(A.join(a, c), A.join(b, c))) return false;
        if (A.heyting() &&
            (!same(A.implies(a, c), A.implies(b, c)) || !same(A.implies(c, a), A.implies(c, b))))
          return false;
      }
      if (with_supplement && A.supplemented() && !same(A.supplement(a), A.supplement(b)))
        return false;
    }
  return true;
}

namespace detail {

inline Congruence congruence_from_meet_with(const HeytingAlgebra& A, int g) {
  Congruence t;
  t.block_of.assign(A.n, -1);
  std::vector<int> rep;  // block -> value of a ^ g
  for (int a = 0; a < A.n; ++a) {
    int v = A.meet(a, g);
    int id = -1;
    for (size_t k = 0; k < rep.size(); ++k)
      if (rep[k] == v) id = static_cast<int>(k);
    if (id < 0) {
      id = static_cast<int>(rep.size());
      rep.push_back(v);
    }
    t.block_of[a] = id;
  }
  t.blocks = static_cast<int>(rep.size());
  return t;
}

}  // namespace detail

// theta_c for a central element: a ~ b iff a ^ c = b ^ c
inline Congruence central_congruence(const HeytingAlgebra& A, int c) {
  if (A.complement_of(c) < 0)
    throw NotCentral("element " + std::to_string(c) + " has no complement", c);
  Congruence t = detail::congruence_from_meet_with(A, c);
  if (!congruence_compatible(A, t, /*with_supplement=*/true))
    throw InvariantBreach("theta_c not compatible with the full signature");
  return t;
}

struct Quotient {
  HeytingAlgebra algebra;
  std::vector<int> map;  // A -> quotient element
};

namespace detail {

// quotient by any congruence whose classes are determined by a ^ g for the
// meet of some filter; the class order is the order of the meet values
inline Quotient quotient_by_meet_with(const HeytingAlgebra& A, int g) {
  std::vector<int> values;  // distinct a ^ g, i.e. the interval [0, g]
  for (int a = 0; a < A.n; ++a)
    if (A.leq(a, g)) values.push_back(a);
  const int m = static_cast<int>(values.size());
  std::vector<Bits> up(m, Bits(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (A.leq(values[i], values[j])) up[i].set(j);
  Built b = build_from_order(Poset::from_upsets(std::move(up)), A.mode);
  Quotient q;
  q.map.resize(A.n);
  std::vector<int> pos(A.n, -1);
  for (int i = 0; i < m; ++i) pos[values[i]] = b.canon[i];
  for (int a = 0; a < A.n; ++a) q.map[a] = pos[A.meet(a, g)];
  q.algebra = std::move(b.algebra);

  const HeytingAlgebra& Q = q.algebra;
  if (q.map[A.bot] != Q.bot || q.map[A.top] != Q.top)
    throw InvariantBreach("quotient map does not preserve bounds");
  for (int a = 0; a < A.n; ++a)
    for (int c = 0; c < A.n; ++c) {
      if (q.map[A.meet(a, c)] != Q.meet(q.map[a], q.map[c]) ||
          q.map[A.join(a, c)] != Q.join(q.map[a], q.map[c]))
        throw InvariantBreach("quotient map is not a lattice homomorphism");
      if (A.heyting() && q.map[A.implies(a, c)] != Q.implies(q.map[a], q.map[c]))
        throw InvariantBreach("quotient map does not preserve implication");
    }
  return q;
}

}  // namespace detail

// A_y = A/theta_y where a ~ b iff a ^ c = b ^ c for some c in y; for a
// principal prime filter the generator is such a least c
inline Quotient quotient_by_filter(const HeytingAlgebra& A, const PrimeFilter& y) {
  return detail::quotient_by_meet_with(A, y.generator);
}

struct SubdirectEmbedding {
  MinSpace Y;
  std::vector<HeytingAlgebra> factors;
  std::vector<std::vector<int>> coord_map;  // per factor: A -> factor
  std::vector<std::vector<int>> tuple;      // per element of A
};

inline SubdirectEmbedding subdirect_embed(const HeytingAlgebra& A) {
  SubdirectEmbedding e;
  e.Y = min_space(A);
  for (const auto& y : e.Y.filters) {
    Quotient q = quotient_by_filter(A, y);
    if (!q.algebra.fsi() && q.algebra.n > 1)
      throw InvariantBreach("a quotient by a minimal prime filter is not fsi");
    e.factors.push_back(std::move(q.algebra));
    e.coord_map.push_back(std::move(q.map));
  }
  e.tuple.assign(A.n, std::vector<int>(e.Y.size()));
  for (int a = 0; a < A.n; ++a)
    for (int k = 0; k < e.Y.size(); ++k) e.tuple[a][k] = e.coord_map[k][a];
  for (int a = 0; a < A.n; ++a)
    for (int b = a + 1; b < A.n; ++b)
      if (e.tuple[a] == e.tuple[b])
        throw InvariantBreach("subdirect tuple map is not injective");
  // existing central supplements map to the product supplement ind_(a<1)
  Bits z = A.center();
  for (int a = 0; a < A.n; ++a) {
    if (!A.has_supplement(a) || !z.get(A.supp_t[a])) continue;
    int s = A.supp_t[a];
    for (int k = 0; k < e.Y.size(); ++k) {
      int expect = e.tuple[a][k] == e.factors[k].top ? e.factors[k].bot : e.factors[k].top;
      if (e.tuple[s][k] != expect)
        throw InvariantBreach("central supplement does not map to the product supplement");
    }
  }
  return e;
}

struct DualityVerdict {
  bool ok = true;
  std::string detail;
};

// CoRg(A) is the powerset of Y under a |-> {y : a in y}
inline DualityVerdict coregular_minspace_duality(const HeytingAlgebra& A) {
  MinSpace Y = min_space(A);
  Bits coreg(A.n);
  for (int a = 0; a < A.n; ++a) coreg.set(A.supplement(a));
  DualityVerdict v;
  if ((size_t{1} << Y.size()) != static_cast<size_t>(coreg.count())) {
    v.ok = false;
    v.detail = "|CoRg| = " + std::to_string(coreg.count()) + " but |Y| = " +
               std::to_string(Y.size());
    return v;
  }
  auto trace = [&](int a) {
    Bits t(Y.size());
    for (int y = 0; y < Y.size(); ++y)
      if (Y.contains(y, a)) t.set(y);
    return t;
  };
  std::vector<Bits> seen;
  for (int u = coreg.first(); u >= 0; u = coreg.next(u)) {
    Bits tu = trace(u);
    for (const Bits& s : seen)
      if (s == tu) {
        v.ok = false;
        v.detail = "trace map is not injective on CoRg";
        return v;
      }
    seen.push_back(tu);
    for (int w = coreg.first(); w >= 0; w = coreg.next(w))
      if (A.leq(u, w) != trace(u).subset_of(trace(w))) {
        v.ok = false;
        v.detail = "trace map is not an order isomorphism at (" + std::to_string(u) + "," +
                   std::to_string(w) + ")";
        return v;
      }
  }
  return v;
}

}  // namespace heyting
