#pragma once

#include <algorithm>
#include <deque>
#include <string>
#include <vector>

#include "heyting/algebra.hpp"
#include "heyting/duality.hpp"

namespace heyting {

// S(A): the supplemented Heyting subalgebra of prod_Y A_y generated by A.
// Sections are tuples over the minimal-prime-filter quotients; for finite A
// the generated carrier is the whole product, which build_extension verifies.
struct ExtensionAlgebra {
  HeytingAlgebra base;
  SubdirectEmbedding rep;
  HeytingAlgebra alg;                      // S(A)
  std::vector<std::vector<int>> section;   // S(A) element -> tuple over Y
  std::vector<int> embed;                  // A -> S(A) element
  std::vector<int> radix;
  std::vector<int> elem_by_key;

  int coords() const { return static_cast<int>(radix.size()); }

  size_t key_of(const std::vector<int>& t) const {
    size_t k = 0;
    for (size_t i = 0; i < t.size(); ++i) k = k * radix[i] + t[i];
    return k;
  }
  int element_of(const std::vector<int>& t) const { return elem_by_key[key_of(t)]; }

  // the subset of Y where u sits strictly below the coordinate top
  Bits below_top(int u) const {
    Bits s(coords());
    for (int y = 0; y < coords(); ++y)
      if (section[u][y] != rep.factors[y].top) s.set(y);
    return s;
  }

  // characteristic section of a subset of Y
  int indicator(const Bits& set) const {
    std::vector<int> t(coords());
    for (int y = 0; y < coords(); ++y)
      t[y] = set.get(y) ? rep.factors[y].top : rep.factors[y].bot;
    return element_of(t);
  }
};

inline ExtensionAlgebra build_extension(const HeytingAlgebra& A, size_t max_carrier = 4096,
                                        bool verify_idempotence = true) {
  ExtensionAlgebra E;
  E.base = A;
  E.rep = subdirect_embed(A);
  const int ny = static_cast<int>(E.rep.factors.size());

  size_t total = 1;
  for (const auto& f : E.rep.factors) {
    total *= static_cast<size_t>(f.n);
    if (total > max_carrier)
      throw ResourceLimit("extension workspace prod |A_y| exceeds the carrier bound");
  }

  std::vector<int> radix(ny);
  for (int y = 0; y < ny; ++y) radix[y] = E.rep.factors[y].n;
  E.radix = radix;

  auto key_of = [&](const std::vector<int>& t) {
    size_t k = 0;
    for (int y = 0; y < ny; ++y) k = k * radix[y] + t[y];
    return k;
  };

  std::vector<char> present(total, 0);
  std::vector<std::vector<int>> members;
  std::deque<size_t> work;  // indices into members
  auto insert = [&](const std::vector<int>& t) {
    size_t k = key_of(t);
    if (present[k]) return;
    present[k] = 1;
    members.push_back(t);
    work.push_back(members.size() - 1);
  };

  for (int a = 0; a < A.n; ++a) insert(E.rep.tuple[a]);

  std::vector<int> tmp(ny);
  while (!work.empty()) {
    size_t i = work.front();
    work.pop_front();
    std::vector<int> u = members[i];  // copy: members may reallocate
    // supplement in the product: the indicator of [u < 1]
    for (int y = 0; y < ny; ++y)
      tmp[y] = u[y] == E.rep.factors[y].top ? E.rep.factors[y].bot : E.rep.factors[y].top;
    insert(tmp);
    for (size_t j = 0; j < members.size(); ++j) {
      std::vector<int> v = members[j];
      for (int y = 0; y < ny; ++y) tmp[y] = E.rep.factors[y].meet(u[y], v[y]);
      insert(tmp);
      for (int y = 0; y < ny; ++y) tmp[y] = E.rep.factors[y].join(u[y], v[y]);
      insert(tmp);
      for (int y = 0; y < ny; ++y) tmp[y] = E.rep.factors[y].implies(u[y], v[y]);
      insert(tmp);
      for (int y = 0; y < ny; ++y) tmp[y] = E.rep.factors[y].implies(v[y], u[y]);
      insert(tmp);
    }
  }

  // finite-minimum collapse: the generated carrier is the whole product
  if (members.size() != total)
    throw InvariantBreach("S(A) closure did not reach the full product over Y");

  const int m = static_cast<int>(members.size());
  std::vector<Bits> up(m, Bits(m));
  auto le = [&](const std::vector<int>& s, const std::vector<int>& t) {
    for (int y = 0; y < ny; ++y)
      if (!E.rep.factors[y].leq(s[y], t[y])) return false;
    return true;
  };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (le(members[i], members[j])) up[i].set(j);
  Built b = build_from_order(Poset::from_upsets(std::move(up)), HeytingAlgebra::Mode::heyting);

  E.section.resize(m);
  E.elem_by_key.assign(total, -1);
  for (int i = 0; i < m; ++i) {
    E.section[b.canon[i]] = members[i];
    E.elem_by_key[key_of(members[i])] = b.canon[i];
  }
  E.alg = std::move(b.algebra);
  E.embed.resize(A.n);
  for (int a = 0; a < A.n; ++a) E.embed[a] = E.elem_by_key[key_of(E.rep.tuple[a])];

  // the scan supplement of the carrier must be the product supplement
  for (int u = 0; u < m; ++u) {
    Bits lt = E.below_top(u);
    if (E.alg.supplement(u) != E.indicator(lt))
      throw InvariantBreach("carrier supplement differs from ind_(u<1)");
  }
  if (!is_centrally_supplemented(E.alg).holds)
    throw InvariantBreach("S(A) is not centrally supplemented");

  for (int a = 0; a < A.n; ++a)
    for (int c = 0; c < A.n; ++c) {
      if (E.embed[A.meet(a, c)] != E.alg.meet(E.embed[a], E.embed[c]) ||
          E.embed[A.join(a, c)] != E.alg.join(E.embed[a], E.embed[c]) ||
          E.embed[A.implies(a, c)] != E.alg.implies(E.embed[a], E.embed[c]))
        throw InvariantBreach("A does not embed as a Heyting subalgebra of S(A)");
    }

  if (verify_idempotence) {
    ExtensionAlgebra E2 = build_extension(E.alg, max_carrier, false);
    if (E2.alg.n != E.alg.n)
      throw InvariantBreach("S(S(A)) differs from S(A)");
    if (is_centrally_supplemented(A).holds && E.alg.n != A.n)
      throw InvariantBreach("A centrally supplemented but S(A) != A");
  }
  return E;
}

// f(s,a) = a ^ ind_(s<1) and g(t,b) = (b ^ ind_(t<1)) v ind_(t=1)
inline std::pair<int, int> indicator_sections(const ExtensionAlgebra& E, int s, int a) {
  std::vector<int> f(E.coords()), g(E.coords());
  for (int y = 0; y < E.coords(); ++y) {
    const HeytingAlgebra& F = E.rep.factors[y];
    bool s_top = E.rep.tuple[s][y] == F.top;
    f[y] = s_top ? F.bot : E.rep.tuple[a][y];
    g[y] = s_top ? F.top : E.rep.tuple[a][y];
  }
  return {E.element_of(f), E.element_of(g)};
}

struct Distinguished {
  Bits d_lattice;  // D(A) = { ind_(a=1) } inside S(A)
  Bits b_boolean;  // Boolean closure of D(A); equals Z(S(A))
};

inline Distinguished distinguished_sublattices(const ExtensionAlgebra& E) {
  const HeytingAlgebra& S = E.alg;
  Distinguished out{Bits(S.n), Bits(S.n)};
  for (int a = 0; a < E.base.n; ++a) {
    Bits at_top = E.below_top(E.embed[a]).complement();
    out.d_lattice.set(E.indicator(at_top));
  }
  Bits z = S.center();
  if (!out.d_lattice.subset_of(z))
    throw InvariantBreach("D(A) is not contained in the center of S(A)");
  if (!out.d_lattice.get(S.bot) || !out.d_lattice.get(S.top))
    throw InvariantBreach("D(A) misses a bound");
  for (int u = out.d_lattice.first(); u >= 0; u = out.d_lattice.next(u))
    for (int v = out.d_lattice.first(); v >= 0; v = out.d_lattice.next(v))
      if (!out.d_lattice.get(S.meet(u, v)) || !out.d_lattice.get(S.join(u, v)))
        throw InvariantBreach("D(A) is not a sublattice of S(A)");

  out.b_boolean = out.d_lattice;
  bool grew = true;
  while (grew) {
    grew = false;
    Bits cur = out.b_boolean;
    for (int u = cur.first(); u >= 0; u = cur.next(u)) {
      int cu = S.complement_of(u);
      if (cu >= 0 && !out.b_boolean.get(cu)) {
        out.b_boolean.set(cu);
        grew = true;
      }
      for (int v = cur.first(); v >= 0; v = cur.next(v)) {
        if (!out.b_boolean.get(S.meet(u, v))) {
          out.b_boolean.set(S.meet(u, v));
          grew = true;
        }
        if (!out.b_boolean.get(S.join(u, v))) {
          out.b_boolean.set(S.join(u, v));
          grew = true;
        }
      }
    }
  }
  if (out.b_boolean != z)
    throw InvariantBreach("B(A) differs from the center of S(A)");
  return out;
}

struct NormalForm {
  std::vector<int> unity;  // pairwise disjoint nonzero central elements of S(A)
  std::vector<int> coeff;  // elements of A
};

// deterministic normal form u = join_i coeff_i ^ unity_i: image elements get
// the trivial partition, otherwise coordinates are grouped by their
// least-index preimage in A
inline NormalForm normal_form(const ExtensionAlgebra& E, int u) {
  NormalForm nf;
  const HeytingAlgebra& S = E.alg;
  for (int a = 0; a < E.base.n; ++a)
    if (E.embed[a] == u) {
      nf.unity = {S.top};
      nf.coeff = {a};
      return nf;
    }
  std::vector<int> pre(E.coords(), -1);
  for (int y = 0; y < E.coords(); ++y)
    for (int a = 0; a < E.base.n; ++a)
      if (E.rep.tuple[a][y] == E.section[u][y]) {
        pre[y] = a;
        break;
      }
  std::vector<int> reps;
  for (int y = 0; y < E.coords(); ++y)
    if (std::find(reps.begin(), reps.end(), pre[y]) == reps.end()) reps.push_back(pre[y]);
  for (int a : reps) {
    Bits block(E.coords());
    for (int y = 0; y < E.coords(); ++y)
      if (pre[y] == a) block.set(y);
    nf.unity.push_back(E.indicator(block));
    nf.coeff.push_back(a);
  }
  return nf;
}

inline void verify_normal_form(const ExtensionAlgebra& E, int u, const NormalForm& nf) {
  const HeytingAlgebra& S = E.alg;
  Bits z = S.center();
  int join_all = S.bot, acc = S.bot;
  for (size_t i = 0; i < nf.unity.size(); ++i) {
    int e = nf.unity[i];
    if (e == S.bot) throw InvariantBreach("zero block in a partition of unity");
    if (!z.get(e)) throw InvariantBreach("partition block is not central");
    for (size_t j = i + 1; j < nf.unity.size(); ++j)
      if (S.meet(e, nf.unity[j]) != S.bot)
        throw InvariantBreach("partition blocks are not disjoint");
    join_all = S.join(join_all, e);
    acc = S.join(acc, S.meet(E.embed[nf.coeff[i]], e));
  }
  if (join_all != S.top) throw InvariantBreach("partition does not join to 1");
  if (acc != u) throw InvariantBreach("normal form does not evaluate back to u");
}

struct PsiTheta {
  std::vector<int> psi;       // A -> S(A), a |-> ind_(a=1)
  Congruence theta;           // theta_A from the co-join predicate
  HeytingAlgebra quotient;    // A/theta_A as a bounded lattice
  std::vector<int> qmap;      // A -> quotient
};

inline Bits co_annihilator(const HeytingAlgebra& A, int a) {
  Bits s(A.n);
  for (int b = 0; b < A.n; ++b)
    if (A.join(a, b) == A.top) s.set(b);
  return s;
}

inline PsiTheta psi_and_thetaA(const ExtensionAlgebra& E) {
  const HeytingAlgebra& A = E.base;
  PsiTheta out;
  out.psi.resize(A.n);
  for (int a = 0; a < A.n; ++a)
    out.psi[a] = E.indicator(E.below_top(E.embed[a]).complement());

  // c ~ d iff the same a join to 1 with them, i.e. equal co-annihilators
  std::vector<Bits> keys;
  out.theta.block_of.assign(A.n, -1);
  for (int c = 0; c < A.n; ++c) {
    Bits k = co_annihilator(A, c);
    int id = -1;
    for (size_t i = 0; i < keys.size(); ++i)
      if (keys[i] == k) id = static_cast<int>(i);
    if (id < 0) {
      id = static_cast<int>(keys.size());
      keys.push_back(k);
    }
    out.theta.block_of[c] = id;
  }
  out.theta.blocks = static_cast<int>(keys.size());

  for (int c = 0; c < A.n; ++c)
    for (int d = 0; d < A.n; ++d)
      if ((out.psi[c] == out.psi[d]) != (out.theta.block_of[c] == out.theta.block_of[d]))
        throw InvariantBreach("ker psi differs from theta_A");

  // A/theta_A ordered by [c] <= [d] iff c ^ d ~ c
  const int m = out.theta.blocks;
  std::vector<int> rep(m, -1);
  for (int c = 0; c < A.n; ++c)
    if (rep[out.theta.block_of[c]] < 0) rep[out.theta.block_of[c]] = c;
  std::vector<Bits> up(m, Bits(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (out.theta.block_of[A.meet(rep[i], rep[j])] == i) up[i].set(j);
  Built b = build_from_order(Poset::from_upsets(std::move(up)), HeytingAlgebra::Mode::lattice);
  out.qmap.resize(A.n);
  for (int c = 0; c < A.n; ++c) out.qmap[c] = b.canon[out.theta.block_of[c]];
  out.quotient = std::move(b.algebra);

  // the quotient is isomorphic to D(A) via [a] -> psi(a)
  for (int c = 0; c < A.n; ++c)
    for (int d = 0; d < A.n; ++d)
      if (E.alg.leq(out.psi[c], out.psi[d]) != out.quotient.leq(out.qmap[c], out.qmap[d]))
        throw InvariantBreach("A/theta_A is not isomorphic to D(A)");
  return out;
}

struct SHomVerdict {
  bool holds = true;
  int a = -1, b = -1;  // witness pair when !holds
};

// h must be a bounded lattice homomorphism; verdict asks whether equal
// co-annihilators are preserved
inline SHomVerdict is_S_homomorphism(const HeytingAlgebra& dom, const HeytingAlgebra& cod,
                                     const std::vector<int>& h) {
  if (static_cast<int>(h.size()) != dom.n)
    throw NotAHomomorphism("map does not cover the domain");
  if (h[dom.bot] != cod.bot || h[dom.top] != cod.top)
    throw NotAHomomorphism("bounds not preserved");
  for (int a = 0; a < dom.n; ++a)
    for (int b = 0; b < dom.n; ++b)
      if (h[dom.meet(a, b)] != cod.meet(h[a], h[b]) ||
          h[dom.join(a, b)] != cod.join(h[a], h[b]))
        throw NotAHomomorphism("not a lattice homomorphism at (" + std::to_string(a) + "," +
                               std::to_string(b) + ")");
  for (int a = 0; a < dom.n; ++a)
    for (int b = a + 1; b < dom.n; ++b)
      if (co_annihilator(dom, a) == co_annihilator(dom, b) &&
          co_annihilator(cod, h[a]) != co_annihilator(cod, h[b]))
        return SHomVerdict{false, a, b};
  return SHomVerdict{};
}

struct SHomExtension {
  std::vector<int> map;  // S(A) -> codomain
  bool unique = false;
};

// Davey-style extension of an S-homomorphism h : A -> E with E centrally
// supplemented to hbar : S(A) -> E
inline SHomExtension extend_S_hom(const ExtensionAlgebra& EA, const HeytingAlgebra& cod,
                                  const std::vector<int>& h) {
  const HeytingAlgebra& A = EA.base;
  const HeytingAlgebra& S = EA.alg;
  SHomVerdict sv = is_S_homomorphism(A, cod, h);
  if (!sv.holds)
    throw NotSHom("map does not preserve equality of co-annihilators at (" +
                  std::to_string(sv.a) + "," + std::to_string(sv.b) + ")");
  for (int a = 0; a < A.n; ++a)
    for (int b = 0; b < A.n; ++b)
      if (h[A.implies(a, b)] != cod.implies(h[a], h[b]))
        throw NotAHomomorphism("not a Heyting homomorphism");
  if (!is_centrally_supplemented(cod).holds)
    throw NotCentrallySupplemented("codomain is not centrally supplemented");

  // Boolean extension htilde of a |-> h(a)++ through psi, via the atoms of
  // the center of S(A)
  PsiTheta pt = psi_and_thetaA(EA);
  Bits z = S.center();
  std::vector<int> atoms;
  for (int c = z.first(); c >= 0; c = z.next(c)) {
    if (c == S.bot) continue;
    bool atom = true;
    for (int d = z.first(); d >= 0; d = z.next(d))
      if (d != S.bot && d != c && S.leq(d, c)) atom = false;
    if (atom) atoms.push_back(c);
  }
  auto hpp = [&](int a) { return cod.supplement(cod.supplement(h[a])); };
  std::vector<int> htilde(S.n, -1);
  std::vector<int> atom_val(atoms.size());
  for (size_t k = 0; k < atoms.size(); ++k) {
    int v = cod.top;
    for (int a = 0; a < A.n; ++a) {
      if (S.leq(atoms[k], pt.psi[a]))
        v = cod.meet(v, hpp(a));
      else
        v = cod.meet(v, cod.complement_of(hpp(a)));
    }
    atom_val[k] = v;
  }
  for (int e = z.first(); e >= 0; e = z.next(e)) {
    int v = cod.bot;
    for (size_t k = 0; k < atoms.size(); ++k)
      if (S.leq(atoms[k], e)) v = cod.join(v, atom_val[k]);
    htilde[e] = v;
  }
  for (int a = 0; a < A.n; ++a)
    if (htilde[pt.psi[a]] != hpp(a))
      throw InvariantBreach("htilde does not factor h++ through psi");
  for (int e = z.first(); e >= 0; e = z.next(e))
    for (int f = z.first(); f >= 0; f = z.next(f))
      if (htilde[S.meet(e, f)] != cod.meet(htilde[e], htilde[f]) ||
          htilde[S.join(e, f)] != cod.join(htilde[e], htilde[f]))
        throw InvariantBreach("htilde is not a Boolean homomorphism");

  SHomExtension out;
  out.map.assign(S.n, -1);
  for (int u = 0; u < S.n; ++u) {
    NormalForm nf = normal_form(EA, u);
    verify_normal_form(EA, u, nf);
    int v = cod.bot;
    for (size_t i = 0; i < nf.unity.size(); ++i)
      v = cod.join(v, cod.meet(h[nf.coeff[i]], htilde[nf.unity[i]]));
    out.map[u] = v;
  }

  for (int a = 0; a < A.n; ++a)
    if (out.map[EA.embed[a]] != h[a]) throw InvariantBreach("hbar does not restrict to h");
  for (int u = 0; u < S.n; ++u) {
    if (out.map[S.supplement(u)] != cod.supplement(out.map[u]))
      throw InvariantBreach("hbar does not preserve supplements");
    for (int v = 0; v < S.n; ++v)
      if (out.map[S.meet(u, v)] != cod.meet(out.map[u], out.map[v]) ||
          out.map[S.join(u, v)] != cod.join(out.map[u], out.map[v]) ||
          out.map[S.implies(u, v)] != cod.implies(out.map[u], out.map[v]))
        throw InvariantBreach("hbar is not a Heyting homomorphism");
  }

  // uniqueness: hbar is forced on A and on Z(S(A)), and A u Z(S(A))
  // generates S(A); any extension therefore agrees with hbar
  Bits gen(S.n);
  for (int a = 0; a < A.n; ++a) gen.set(EA.embed[a]);
  gen |= z;
  bool grew = true;
  while (grew) {
    grew = false;
    Bits cur = gen;
    for (int u = cur.first(); u >= 0; u = cur.next(u))
      for (int v = cur.first(); v >= 0; v = cur.next(v))
        for (int w : {S.meet(u, v), S.join(u, v), S.implies(u, v), S.supplement(u)})
          if (!gen.get(w)) {
            gen.set(w);
            grew = true;
          }
  }
  out.unique = gen.count() == S.n;
  return out;
}

struct EmbeddingProperties {
  bool essential = false;
  bool regular = false;
  bool externally_distributive = false;
};

// subset scans are exhaustive for |A| <= exhaustive_limit, sampled otherwise
inline EmbeddingProperties embedding_properties(const ExtensionAlgebra& E,
                                                int exhaustive_limit = 12,
                                                int samples = 4000, uint64_t seed = 1) {
  const HeytingAlgebra& A = E.base;
  const HeytingAlgebra& S = E.alg;
  EmbeddingProperties p;

  p.essential = true;
  for (int u = 0; u < S.n; ++u) {
    if (u == S.top) continue;
    bool below = false;
    for (int a = 0; a < A.n && !below; ++a)
      if (a != A.top && S.leq(u, E.embed[a])) below = true;
    if (!below) p.essential = false;
  }

  auto run_subset = [&](const Bits& sub, bool& regular, bool& extdist) {
    int meetA = A.meet_of(sub), joinA = A.join_of(sub);
    int meetS = S.top, joinS = S.bot;
    for (int a = sub.first(); a >= 0; a = sub.next(a)) {
      meetS = S.meet(meetS, E.embed[a]);
      joinS = S.join(joinS, E.embed[a]);
    }
    if (E.embed[meetA] != meetS || E.embed[joinA] != joinS) regular = false;
    for (int a = 0; a < A.n; ++a) {
      bool all_one = true;
      for (int s = sub.first(); s >= 0; s = sub.next(s))
        if (A.join(a, s) != A.top) all_one = false;
      if (all_one && A.join(a, meetA) != A.top) extdist = false;
    }
  };

  bool regular = true, extdist = true;
  if (A.n <= exhaustive_limit) {
    for (size_t mask = 0; mask < (size_t{1} << A.n); ++mask) {
      Bits sub(A.n);
      for (int i = 0; i < A.n; ++i)
        if (mask & (size_t{1} << i)) sub.set(i);
      run_subset(sub, regular, extdist);
    }
  } else {
    std::mt19937_64 rng(seed);
    for (int t = 0; t < samples; ++t) {
      Bits sub(A.n);
      for (int i = 0; i < A.n; ++i)
        if (rng() & 1) sub.set(i);
      run_subset(sub, regular, extdist);
    }
  }
  p.regular = regular;
  p.externally_distributive = extdist;
  if (p.regular != p.externally_distributive)
    throw InvariantBreach("regularity and external distributivity disagree on a finite algebra");
  if (!p.essential || !p.regular)
    throw InvariantBreach("A <= S(A) must be essential and regular for finite A");
  return p;
}

struct WitnessVerdict {
  bool ok = true;
  std::string detail;
};

// finite case of C(Y): the intersection formula picks out exactly Y inside
// the full prime filter space, and the atoms of Z(S(A)) trace out Y
inline WitnessVerdict closure_of_Y_witness(const ExtensionAlgebra& E) {
  const HeytingAlgebra& A = E.base;
  const HeytingAlgebra& S = E.alg;
  WitnessVerdict v;
  std::vector<PrimeFilter> X = prime_filters(A);
  MinSpace Y = min_space(A);

  Bits inter = Bits::ones(static_cast<int>(X.size()));
  for (int a = 0; a < A.n; ++a)
    for (int b = 0; b < A.n; ++b) {
      if (S.join(E.embed[a], S.supplement(E.embed[b])) != S.top) continue;
      Bits set(static_cast<int>(X.size()));
      for (size_t x = 0; x < X.size(); ++x)
        if (X[x].elements.get(a) || !X[x].elements.get(b)) set.set(static_cast<int>(x));
      inter &= set;
    }
  Bits ybits(static_cast<int>(X.size()));
  for (size_t x = 0; x < X.size(); ++x)
    for (const auto& y : Y.filters)
      if (X[x].elements == y.elements) ybits.set(static_cast<int>(x));
  if (inter != ybits) {
    v.ok = false;
    v.detail = "intersection formula selects " + inter.to_string() + " instead of Y";
    return v;
  }

  Bits z = S.center();
  std::vector<int> atoms;
  for (int c = z.first(); c >= 0; c = z.next(c)) {
    if (c == S.bot) continue;
    bool atom = true;
    for (int d = z.first(); d >= 0; d = z.next(d))
      if (d != S.bot && d != c && S.leq(d, c)) atom = false;
    if (atom) atoms.push_back(c);
  }
  if (atoms.size() != Y.filters.size()) {
    v.ok = false;
    v.detail = "atom count of Z(S(A)) differs from |Y|";
    return v;
  }
  std::vector<bool> used(Y.filters.size(), false);
  for (int z0 : atoms) {
    Bits pulled(A.n);
    for (int a = 0; a < A.n; ++a)
      if (S.leq(z0, E.embed[a])) pulled.set(a);
    bool matched = false;
    for (size_t k = 0; k < Y.filters.size(); ++k)
      if (!used[k] && Y.filters[k].elements == pulled) {
        used[k] = true;
        matched = true;
        break;
      }
    if (!matched) {
      v.ok = false;
      v.detail = "an atom of Z(S(A)) does not trace a minimal prime filter";
      return v;
    }
  }
  return v;
}

}  // namespace heyting
