#pragma once

#include <string>
#include <vector>

#include "heyting/duality.hpp"
#include "heyting/extension.hpp"
#include "heyting/frames.hpp"

namespace heyting {

// subdirect representation over a finite discrete index set
struct SubdirectRepresentation {
  HeytingAlgebra base;
  std::vector<HeytingAlgebra> factors;
  std::vector<std::vector<int>> coord_map;  // per factor: base -> factor

  int coords() const { return static_cast<int>(factors.size()); }
};

inline void validate_representation(const SubdirectRepresentation& r) {
  for (int k = 0; k < r.coords(); ++k) {
    std::vector<bool> hit(r.factors[k].n, false);
    for (int a = 0; a < r.base.n; ++a) hit[r.coord_map[k][a]] = true;
    for (bool h : hit)
      if (!h) throw InvariantBreach("a coordinate map is not surjective");
    for (int a = 0; a < r.base.n; ++a)
      for (int b = 0; b < r.base.n; ++b)
        if (r.coord_map[k][r.base.meet(a, b)] !=
                r.factors[k].meet(r.coord_map[k][a], r.coord_map[k][b]) ||
            r.coord_map[k][r.base.join(a, b)] !=
                r.factors[k].join(r.coord_map[k][a], r.coord_map[k][b]))
          throw InvariantBreach("a coordinate map is not a lattice homomorphism");
  }
  for (int a = 0; a < r.base.n; ++a)
    for (int b = a + 1; b < r.base.n; ++b) {
      bool equal = true;
      for (int k = 0; k < r.coords() && equal; ++k)
        if (r.coord_map[k][a] != r.coord_map[k][b]) equal = false;
      if (equal) throw InvariantBreach("the tuple map is not injective");
    }
}

inline SubdirectRepresentation minimum_representation(const HeytingAlgebra& A) {
  SubdirectEmbedding e = subdirect_embed(A);
  SubdirectRepresentation r;
  r.base = A;
  r.factors = std::move(e.factors);
  r.coord_map = std::move(e.coord_map);
  validate_representation(r);
  return r;
}

// the usual representation over the center: one stalk per atom of Z(A)
inline SubdirectRepresentation center_representation(const HeytingAlgebra& A) {
  Bits z = A.center();
  SubdirectRepresentation r;
  r.base = A;
  for (int c = z.first(); c >= 0; c = z.next(c)) {
    if (c == A.bot) continue;
    bool atom = true;
    for (int d = z.first(); d >= 0; d = z.next(d))
      if (d != A.bot && d != c && A.leq(d, c)) atom = false;
    if (!atom) continue;
    Quotient q = detail::quotient_by_meet_with(A, c);
    r.factors.push_back(std::move(q.algebra));
    r.coord_map.push_back(std::move(q.map));
  }
  validate_representation(r);
  return r;
}

struct WeakBooleanVerdict {
  // openness and clopenness of equalizers are automatic over a finite
  // discrete index space
  bool equalizers_open = true;
  bool equalizers_clopen = true;
  bool patchwork = true;
  std::string witness;
};

// patchwork: for every N and a, b there is c agreeing with a on N and with b
// off N
inline WeakBooleanVerdict weak_boolean_product_check(const SubdirectRepresentation& r) {
  WeakBooleanVerdict v;
  const int k = r.coords();
  if (k > 20) throw ResourceLimit("too many coordinates for the patchwork scan");
  for (size_t mask = 0; mask < (size_t{1} << k) && v.patchwork; ++mask) {
    for (int a = 0; a < r.base.n && v.patchwork; ++a)
      for (int b = 0; b < r.base.n; ++b) {
        bool found = false;
        for (int c = 0; c < r.base.n && !found; ++c) {
          bool agrees = true;
          for (int i = 0; i < k && agrees; ++i) {
            int want = (mask & (size_t{1} << i)) ? r.coord_map[i][a] : r.coord_map[i][b];
            if (r.coord_map[i][c] != want) agrees = false;
          }
          found = agrees;
        }
        if (!found) {
          v.patchwork = false;
          v.witness = "no patch of " + std::to_string(a) + " on N=" + std::to_string(mask) +
                      " with " + std::to_string(b) + " elsewhere";
          break;
        }
      }
  }
  return v;
}

struct StalkReport {
  bool ok = true;
  std::string detail;
  std::vector<int> stalk_sizes;
};

// stalks of the central sheaf of S(A) are the quotients A_y, matched through
// the atom that traces y
inline StalkReport central_sheaf_stalks(const ExtensionAlgebra& E) {
  const HeytingAlgebra& S = E.alg;
  const HeytingAlgebra& A = E.base;
  StalkReport r;
  Bits z = S.center();
  std::vector<int> atoms;
  for (int c = z.first(); c >= 0; c = z.next(c)) {
    if (c == S.bot) continue;
    bool atom = true;
    for (int d = z.first(); d >= 0; d = z.next(d))
      if (d != S.bot && d != c && S.leq(d, c)) atom = false;
    if (atom) atoms.push_back(c);
  }
  if (atoms.size() != static_cast<size_t>(E.coords())) {
    r.ok = false;
    r.detail = "atom count differs from |Y|";
    return r;
  }
  for (int z0 : atoms) {
    Quotient stalk = detail::quotient_by_meet_with(S, z0);
    r.stalk_sizes.push_back(stalk.algebra.n);
    Bits pulled(A.n);
    for (int a = 0; a < A.n; ++a)
      if (S.leq(z0, E.embed[a])) pulled.set(a);
    int match = -1;
    for (int y = 0; y < E.coords(); ++y)
      if (E.rep.Y.filters[y].elements == pulled) match = y;
    if (match < 0) {
      r.ok = false;
      r.detail = "an atom does not trace a minimal prime filter";
      return r;
    }
    if (!isomorphic(stalk.algebra, E.rep.factors[match])) {
      r.ok = false;
      r.detail = "stalk at atom " + std::to_string(z0) +
                 " is not isomorphic to the matching quotient A_y";
      return r;
    }
  }
  return r;
}

struct HausdorffVerdict {
  bool equivalence_holds = false;
  bool centrally_supplemented = false;
  bool boolean_product = false;  // center representation passes patchwork
  bool stalks_fsi = false;
};

// centrally supplemented iff the usual representation over the center is a
// Boolean product with fsi stalks; over a finite index space the equalizer
// conditions are automatic and patchwork carries the content
inline HausdorffVerdict hausdorff_characterization(const HeytingAlgebra& A) {
  HausdorffVerdict v;
  v.centrally_supplemented = is_centrally_supplemented(A).holds;
  SubdirectRepresentation r = center_representation(A);
  WeakBooleanVerdict w = weak_boolean_product_check(r);
  v.boolean_product = w.equalizers_clopen && w.patchwork;
  v.stalks_fsi = true;
  for (const auto& f : r.factors)
    if (!f.fsi()) v.stalks_fsi = false;
  v.equivalence_holds = v.centrally_supplemented == (v.boolean_product && v.stalks_fsi);
  return v;
}

struct ProductVerdict {
  bool ok = false;
  std::string detail;
};

// A+ = prod_Y A_y at finite scale, with the cardinality identity exact
inline ProductVerdict hyper_completion_as_product(const ExtensionAlgebra& E,
                                                  const FrameAlgebra& FA) {
  ProductVerdict v;
  size_t expect = 1;
  std::vector<const HeytingAlgebra*> fs;
  for (const auto& f : E.rep.factors) {
    expect *= static_cast<size_t>(f.n);
    fs.push_back(&f);
  }
  if (static_cast<size_t>(FA.alg.n) != expect) {
    v.detail = "|A+| = " + std::to_string(FA.alg.n) + " but prod |A_y| = " +
               std::to_string(expect);
    return v;
  }
  ProductAlgebra p = product_algebra(fs);
  if (!isomorphic(FA.alg, p.algebra)) {
    v.detail = "A+ is not isomorphic to the product of the quotients";
    return v;
  }
  v.ok = true;
  return v;
}

}  // namespace heyting
