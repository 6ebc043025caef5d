#include <catch2/catch_amalgamated.hpp>

#include "heyting/algebra.hpp"
#include "test_support.hpp"

using namespace heyting;
using namespace heyting::testing;

namespace {

// independent oracle: least x with a v x = top, scanning the raw order
int supplement_oracle(const HeytingAlgebra& A, int a) {
  std::vector<int> candidates;
  for (int x = 0; x < A.n; ++x) {
    // join from the order, not the table
    Bits ub = A.upset[a] & A.upset[x];
    int j = -1;
    for (int c = ub.first(); c >= 0; c = ub.next(c))
      if (ub.subset_of(A.upset[c])) j = c;
    if (j == A.top) candidates.push_back(x);
  }
  for (int x : candidates) {
    bool least = true;
    for (int y : candidates)
      if (!A.leq(x, y)) least = false;
    if (least) return x;
  }
  return -1;
}

}  // namespace

TEST_CASE("two-element chain has boolean tables") {
  HeytingAlgebra c2 = chain(2);
  REQUIRE(c2.n == 2);
  REQUIRE(c2.bot == 0);
  REQUIRE(c2.top == 1);
  REQUIRE(c2.meet(0, 1) == 0);
  REQUIRE(c2.join(0, 1) == 1);
  REQUIRE(c2.implies(1, 0) == 0);
  REQUIRE(c2.implies(0, 0) == 1);
  REQUIRE(c2.supplement(0) == 1);
  REQUIRE(c2.supplement(1) == 0);
  REQUIRE(c2.pseudocomplement(0) == 1);
}

TEST_CASE("figure-1 order builds in heyting mode") {
  HeytingAlgebra A = l5();
  REQUIRE(A.n == 5);
  // canonical order: 0 < m < a,b < 1
  REQUIRE(A.rank == std::vector<int>{0, 1, 2, 2, 3});
  REQUIRE(A.meet(2, 3) == 1);
  REQUIRE(A.join(2, 3) == 4);
  REQUIRE_FALSE(check_residuation(A).has_value());
}

TEST_CASE("pentagon rejected in heyting mode, accepted as a lattice") {
  REQUIRE_THROWS_AS(build_from_order(n5_order(), HeytingAlgebra::Mode::heyting),
                    NotDistributive);
  HeytingAlgebra L = build_from_order(n5_order(), HeytingAlgebra::Mode::lattice).algebra;
  REQUIRE(L.n == 5);
  REQUIRE(check_distributivity(L).has_value());
}

TEST_CASE("diamond has elements without supplements in lattice mode") {
  HeytingAlgebra m3 = build_from_order(m3_order(), HeytingAlgebra::Mode::lattice).algebra;
  int missing = 0;
  for (int a = 0; a < m3.n; ++a)
    if (!m3.has_supplement(a)) ++missing;
  REQUIRE(missing == 3);  // the three atoms
}

TEST_CASE("downset algebras of small posets") {
  REQUIRE(downset_algebra(antichain_poset(1)).algebra.n == 2);
  HeytingAlgebra b4 = boolean(2);
  REQUIRE(b4.n == 4);
  REQUIRE(b4.center() == b4.all());

  DownsetAlgebra d = downset_algebra(vee_poset());
  REQUIRE(d.algebra.n == 5);
  REQUIRE(isomorphic(d.algebra, l5()));
  // join-irreducibles of the downset algebra give back the poset
  REQUIRE(d.algebra.join_irreducibles().size() == 3);
}

TEST_CASE("downset algebra join-irreducible poset is the source poset") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    Poset p = random_poset(2 + t % 4, rng);
    DownsetAlgebra d = downset_algebra(p);
    auto ji = d.algebra.join_irreducibles();
    REQUIRE(static_cast<int>(ji.size()) == p.size());
    std::vector<Bits> up(p.size(), Bits(p.size()));
    for (size_t i = 0; i < ji.size(); ++i)
      for (size_t j = 0; j < ji.size(); ++j)
        if (d.algebra.leq(ji[j], ji[i])) up[j].set(i);
    REQUIRE(Poset::from_upsets(up).isomorphic_to(p));
  }
}

TEST_CASE("supplements match the exhaustive-scan oracle") {
  HeytingAlgebra c3 = chain(3);
  REQUIRE(c3.supplement(1) == 2);  // (C3, m) -> 1
  REQUIRE(c3.supplement(c3.top) == c3.bot);

  HeytingAlgebra A = l5();
  REQUIRE(A.supplement(2) == 3);
  REQUIRE(A.supplement(3) == 2);
  REQUIRE(A.supplement(1) == 4);

  std::mt19937_64 rng(11);
  for (int t = 0; t < 15; ++t) {
    HeytingAlgebra R = downset_algebra(random_poset(2 + t % 4, rng)).algebra;
    for (int a = 0; a < R.n; ++a) REQUIRE(R.supplement(a) == supplement_oracle(R, a));
  }
}

TEST_CASE("central supplement verdicts") {
  CsVerdict l5v = is_centrally_supplemented(l5());
  REQUIRE_FALSE(l5v.holds);
  // witness (a,b): (a v b)+ = 0 while a+ ^ b+ = m
  HeytingAlgebra A = l5();
  REQUIRE(A.supplement(A.join(l5v.x, l5v.y)) == A.bot);
  REQUIRE(A.meet(A.supplement(l5v.x), A.supplement(l5v.y)) == 1);

  REQUIRE(is_centrally_supplemented(boolean(2)).holds);
  REQUIRE(is_centrally_supplemented(chain(3)).holds);
}

TEST_CASE("centers") {
  REQUIRE(chain(3).center().members() == std::vector<int>{0, 2});
  HeytingAlgebra A = l5();
  REQUIRE(A.center().members() == std::vector<int>{0, 4});
  HeytingAlgebra c2 = chain(2), c3 = chain(3);
  ProductAlgebra p = product_algebra({&c2, &c3});
  REQUIRE(p.algebra.n == 6);
  REQUIRE(p.algebra.center().count() == 4);
}

TEST_CASE("element classification") {
  HeytingAlgebra A = l5();
  ElementClasses c = classify_elements(A);
  REQUIRE(c.codense.members() == std::vector<int>{0, 1});
  REQUIRE(c.dense.members() == std::vector<int>{1, 2, 3, 4});
  REQUIRE(c.coregular.members() == std::vector<int>{0, 2, 3, 4});
  REQUIRE(c.regular.members() == std::vector<int>{0, 4});

  HeytingAlgebra c4 = chain(4);
  ElementClasses cc = classify_elements(c4);
  REQUIRE(cc.codense.members() == std::vector<int>{0, 1, 2});
  REQUIRE(cc.dense.members() == std::vector<int>{1, 2, 3});

  HeytingAlgebra b4 = boolean(2);
  ElementClasses bc = classify_elements(b4);
  REQUIRE(bc.dense.members() == std::vector<int>{b4.top});
  REQUIRE(bc.codense.members() == std::vector<int>{b4.bot});
  REQUIRE(bc.regular == b4.all());
  REQUIRE(bc.coregular == b4.all());
}

TEST_CASE("de morgan half-law holds in every supplemented algebra") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 15; ++t) {
    HeytingAlgebra A = downset_algebra(random_poset(2 + t % 5, rng)).algebra;
    for (int x = 0; x < A.n; ++x)
      for (int y = 0; y < A.n; ++y)
        REQUIRE(A.supplement(A.meet(x, y)) ==
                A.join(A.supplement(x), A.supplement(y)));
  }
}

TEST_CASE("meet-dense supplement formula") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 15; ++t) {
    HeytingAlgebra A = downset_algebra(random_poset(2 + t % 5, rng)).algebra;
    // meet-irreducibles form a meet-dense set
    Bits S(A.n);
    for (int a = 0; a < A.n; ++a)
      if (A.meet_irreducible(a)) S.set(a);
    for (int x = 0; x < A.n; ++x) {
      int acc = A.bot;
      for (int s = S.first(); s >= 0; s = S.next(s))
        if (A.leq(x, s)) acc = A.join(acc, A.supplement(s));
      REQUIRE(acc == A.supplement(x));
    }
  }
}

TEST_CASE("center is closed under arbitrary meets and joins") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 10; ++t) {
    HeytingAlgebra A = downset_algebra(random_poset(2 + t % 4, rng)).algebra;
    Bits z = A.center();
    auto zs = z.members();
    REQUIRE(zs.size() <= 16);
    for (size_t mask = 0; mask < (size_t{1} << zs.size()); ++mask) {
      Bits sub(A.n);
      for (size_t i = 0; i < zs.size(); ++i)
        if (mask & (size_t{1} << i)) sub.set(zs[i]);
      REQUIRE(z.get(A.meet_of(sub)));
      REQUIRE(z.get(A.join_of(sub)));
    }
  }
}

TEST_CASE("dual delta-star predicate holds with witness a+") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 10; ++t) {
    HeytingAlgebra A = downset_algebra(random_poset(2 + t % 5, rng)).algebra;
    for (int a = 0; a < A.n; ++a) {
      int b = A.supplement(a);
      REQUIRE(A.join(a, b) == A.top);
      REQUIRE(A.supplement(A.meet(a, b)) == A.top);
    }
  }
}

TEST_CASE("glivenko dual") {
  GlivenkoDual g = glivenko_dual(l5());
  REQUIRE(g.algebra.n == 4);
  REQUIRE(g.algebra.center() == g.algebra.all());
  REQUIRE(g.quotient[0] == g.algebra.bot);
  REQUIRE(g.quotient[1] == g.algebra.bot);  // m++ = 0

  GlivenkoDual gc = glivenko_dual(chain(3));
  REQUIRE(gc.algebra.n == 2);
  REQUIRE(gc.quotient[1] == gc.algebra.bot);

  HeytingAlgebra b8 = boolean(3);
  GlivenkoDual gb = glivenko_dual(b8);
  REQUIRE(gb.algebra.n == 8);
  for (int a = 0; a < b8.n; ++a) REQUIRE(gb.carrier[gb.quotient[a]] == a);
}

TEST_CASE("isomorphism search") {
  REQUIRE(isomorphic(l5(), downset_algebra(vee_poset()).algebra));
  REQUIRE_FALSE(isomorphic(l5(), chain(5)));
  HeytingAlgebra c2 = chain(2), c3 = chain(3);
  ProductAlgebra p23 = product_algebra({&c2, &c3});
  REQUIRE_FALSE(isomorphic(p23.algebra, chain(6)));
  Poset two_chain_and_point(3, {{0, 1}});
  REQUIRE(isomorphic(p23.algebra, downset_algebra(two_chain_and_point).algebra));
  auto iso = find_isomorphism(l5(), l5());
  REQUIRE(iso.has_value());
  REQUIRE((*iso)[0] == 0);
}

TEST_CASE("residuation property on random downset algebras") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 10; ++t) {
    HeytingAlgebra A = downset_algebra(random_poset(2 + t % 5, rng)).algebra;
    REQUIRE_FALSE(check_residuation(A).has_value());
    REQUIRE_FALSE(check_supplement_characterization(A).has_value());
  }
}

TEST_CASE("corrupted implies table is caught with a witness") {
  HeytingAlgebra A = l5();
  A.imp_t[static_cast<size_t>(2) * A.n + 1] = A.top;  // a -> m is b, not top
  auto w = check_residuation(A);
  REQUIRE(w.has_value());
}

TEST_CASE("dot export lists cover edges only") {
  std::string dot = to_dot(chain(3), "c3");
  REQUIRE(dot.find("n0 -> n1") != std::string::npos);
  REQUIRE(dot.find("n1 -> n2") != std::string::npos);
  REQUIRE(dot.find("n0 -> n2") == std::string::npos);
}

TEST_CASE("errors carry structured witnesses") {
  try {
    build_from_order(n5_order(), HeytingAlgebra::Mode::heyting);
    FAIL("expected NotDistributive");
  } catch (const NotDistributive& e) {
    HeytingAlgebra L = build_from_order(n5_order(), HeytingAlgebra::Mode::lattice).algebra;
    REQUIRE(L.meet(e.a, L.join(e.b, e.c)) != L.join(L.meet(e.a, e.b), L.meet(e.a, e.c)));
  }
  REQUIRE_THROWS_AS(Poset(2, {{0, 1}, {1, 0}}), NotAPoset);
  REQUIRE_THROWS_AS(Poset(3, {{0, 1}, {1, 2}}), NotAPoset);  // not transitive
}
