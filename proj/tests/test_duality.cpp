#include <catch2/catch_amalgamated.hpp>

#include "heyting/duality.hpp"
#include "test_support.hpp"

using namespace heyting;
using namespace heyting::testing;

TEST_CASE("prime filters of the fixtures") {
  auto pf = prime_filters(chain(3));
  REQUIRE(pf.size() == 2);
  REQUIRE(pf[0].generator == 1);  // up(m)
  REQUIRE(pf[1].generator == 2);  // up(1)
  REQUIRE(pf[1].elements.subset_of(pf[0].elements));

  auto l = prime_filters(l5());
  REQUIRE(l.size() == 3);
  REQUIRE(l[0].generator == 1);
  REQUIRE(l[1].elements.subset_of(l[0].elements));
  REQUIRE(l[2].elements.subset_of(l[0].elements));
  REQUIRE_FALSE(l[1].elements.subset_of(l[2].elements));

  auto b = prime_filters(boolean(2));
  REQUIRE(b.size() == 2);
  REQUIRE_FALSE(b[0].elements.subset_of(b[1].elements));
  REQUIRE_FALSE(b[1].elements.subset_of(b[0].elements));
}

TEST_CASE("prime filter predicate agrees with the shortcut on random algebras") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 20; ++t) {
    HeytingAlgebra A = downset_algebra(random_poset(2 + t % 5, rng)).algebra;
    REQUIRE_NOTHROW(prime_filters(A));  // the cross-check lives inside
  }
}

TEST_CASE("minimum of the dual space") {
  MinSpace yc3 = min_space(chain(3));
  REQUIRE(yc3.size() == 1);
  REQUIRE(yc3.filters[0].generator == 2);

  MinSpace yl5 = min_space(l5());
  REQUIRE(yl5.size() == 2);
  REQUIRE(yl5.filters[0].generator == 2);
  REQUIRE(yl5.filters[1].generator == 3);

  for (int k = 1; k <= 4; ++k) REQUIRE(min_space(boolean(k)).size() == k);
}

TEST_CASE("quotients by prime filters") {
  HeytingAlgebra A = l5();
  auto Y = min_space(A);
  Quotient q = quotient_by_filter(A, Y.filters[0]);  // by up(a)
  REQUIRE(q.algebra.n == 3);
  REQUIRE(q.map[0] == q.algebra.bot);
  REQUIRE(q.map[1] == q.map[3]);  // m and b collapse
  REQUIRE(q.map[2] == q.algebra.top);
  REQUIRE(q.map[4] == q.algebra.top);

  HeytingAlgebra c3 = chain(3);
  Quotient qt = quotient_by_filter(c3, min_space(c3).filters[0]);
  REQUIRE(qt.algebra.n == 3);  // theta trivial

  HeytingAlgebra b4 = boolean(2);
  Quotient qb = quotient_by_filter(b4, min_space(b4).filters[0]);
  REQUIRE(qb.algebra.n == 2);
}

TEST_CASE("subdirect embedding of the figure-1 lattice") {
  HeytingAlgebra A = l5();
  SubdirectEmbedding e = subdirect_embed(A);
  REQUIRE(e.factors.size() == 2);
  REQUIRE(e.factors[0].n == 3);
  REQUIRE(e.factors[1].n == 3);
  REQUIRE(e.tuple[0] == std::vector<int>{0, 0});
  REQUIRE(e.tuple[1] == std::vector<int>{1, 1});
  REQUIRE(e.tuple[2] == std::vector<int>{2, 1});
  REQUIRE(e.tuple[3] == std::vector<int>{1, 2});
  REQUIRE(e.tuple[4] == std::vector<int>{2, 2});
}

TEST_CASE("subdirect embedding degenerate cases") {
  SubdirectEmbedding ec = subdirect_embed(chain(3));
  REQUIRE(ec.factors.size() == 1);
  REQUIRE(ec.factors[0].n == 3);

  SubdirectEmbedding eb = subdirect_embed(boolean(2));
  REQUIRE(eb.factors.size() == 2);
  REQUIRE(eb.factors[0].n == 2);
  // isomorphism onto C2 x C2: all four tuples distinct and the map is onto
  std::vector<std::vector<int>> seen(eb.tuple);
  std::sort(seen.begin(), seen.end());
  REQUIRE(std::unique(seen.begin(), seen.end()) == seen.end());
  REQUIRE(seen.size() == 4);
}

TEST_CASE("central congruences") {
  HeytingAlgebra b4 = boolean(2);
  int atom = -1;
  for (int a = 0; a < b4.n; ++a)
    if (a != b4.bot && b4.lower_cover_count(a) == 1 && b4.leq(b4.bot, a) && b4.rank[a] == 1)
      atom = a;
  Congruence t = central_congruence(b4, atom);
  REQUIRE(t.blocks == 2);

  Congruence id = central_congruence(b4, b4.top);
  REQUIRE(id.blocks == b4.n);
  Congruence total = central_congruence(b4, b4.bot);
  REQUIRE(total.blocks == 1);

  REQUIRE_THROWS_AS(central_congruence(l5(), 2), NotCentral);
}

TEST_CASE("congruence compatibility rejects arbitrary partitions") {
  HeytingAlgebra A = l5();
  Congruence bad;
  bad.block_of = {0, 0, 1, 2, 3};  // merge 0 with m only
  bad.blocks = 4;
  REQUIRE_FALSE(congruence_compatible(A, bad, false));
}

TEST_CASE("co-regular elements are dual to the minimum") {
  REQUIRE(coregular_minspace_duality(l5()).ok);
  REQUIRE(coregular_minspace_duality(chain(3)).ok);
  REQUIRE(coregular_minspace_duality(boolean(3)).ok);
  std::mt19937_64 rng(31);
  for (int t = 0; t < 15; ++t) {
    HeytingAlgebra A = downset_algebra(random_poset(2 + t % 5, rng)).algebra;
    DualityVerdict v = coregular_minspace_duality(A);
    INFO(v.detail);
    REQUIRE(v.ok);
  }
}

TEST_CASE("lemma-min checks run on random supplemented algebras") {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 20; ++t)
    REQUIRE_NOTHROW(min_space(downset_algebra(random_poset(2 + t % 5, rng)).algebra));
}
