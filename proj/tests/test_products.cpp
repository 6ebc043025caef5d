#include <catch2/catch_amalgamated.hpp>

#include "heyting/products.hpp"
#include "test_support.hpp"

using namespace heyting;
using namespace heyting::testing;

TEST_CASE("patchwork fails for L5 over its minimum and holds for the product") {
  SubdirectRepresentation r = minimum_representation(l5());
  WeakBooleanVerdict w = weak_boolean_product_check(r);
  REQUIRE(w.equalizers_open);
  REQUIRE_FALSE(w.patchwork);
  REQUIRE_FALSE(w.witness.empty());

  ExtensionAlgebra E = build_extension(l5());
  SubdirectRepresentation rs = minimum_representation(E.alg);
  REQUIRE(weak_boolean_product_check(rs).patchwork);
}

TEST_CASE("the usual center representation is always a weak Boolean product") {
  std::mt19937_64 rng(89);
  for (int t = 0; t < 15; ++t) {
    HeytingAlgebra A = downset_algebra(random_poset(2 + t % 5, rng)).algebra;
    SubdirectRepresentation r = center_representation(A);
    REQUIRE(weak_boolean_product_check(r).patchwork);
  }
}

TEST_CASE("patchwork over the minimum detects exactly the centrally supplemented case") {
  std::mt19937_64 rng(97);
  for (int t = 0; t < 15; ++t) {
    HeytingAlgebra A = downset_algebra(random_poset(2 + t % 5, rng)).algebra;
    SubdirectRepresentation r = minimum_representation(A);
    WeakBooleanVerdict w = weak_boolean_product_check(r);
    REQUIRE((w.patchwork && w.equalizers_clopen) == is_centrally_supplemented(A).holds);
  }
}

TEST_CASE("central sheaf stalks of S(A) are the quotients A_y") {
  StalkReport l = central_sheaf_stalks(build_extension(l5()));
  REQUIRE(l.ok);
  REQUIRE(l.stalk_sizes == std::vector<int>{3, 3});

  StalkReport c = central_sheaf_stalks(build_extension(chain(3)));
  REQUIRE(c.ok);
  REQUIRE(c.stalk_sizes == std::vector<int>{3});

  StalkReport b = central_sheaf_stalks(build_extension(boolean(3)));
  REQUIRE(b.ok);
  REQUIRE(b.stalk_sizes == std::vector<int>{2, 2, 2});
}

TEST_CASE("hausdorff characterization") {
  HausdorffVerdict v = hausdorff_characterization(l5());
  REQUIRE(v.equivalence_holds);
  REQUIRE_FALSE(v.centrally_supplemented);
  REQUIRE(v.boolean_product);   // single stalk over the trivial center
  REQUIRE_FALSE(v.stalks_fsi);  // that stalk is L5 itself, not fsi

  ExtensionAlgebra E = build_extension(l5());
  HausdorffVerdict vp = hausdorff_characterization(E.alg);
  REQUIRE(vp.equivalence_holds);
  REQUIRE(vp.centrally_supplemented);
  REQUIRE(vp.stalks_fsi);

  std::mt19937_64 rng(101);
  for (int t = 0; t < 15; ++t) {
    HeytingAlgebra A = downset_algebra(random_poset(2 + t % 5, rng)).algebra;
    REQUIRE(hausdorff_characterization(A).equivalence_holds);
  }
}

TEST_CASE("the completion is the product of the quotients") {
  for (const HeytingAlgebra& A : {l5(), chain(3), boolean(2), chain(4)}) {
    ExtensionAlgebra E = build_extension(A);
    FrameAlgebra FA = frame_algebra(hyper_frame(A));
    ProductVerdict v = hyper_completion_as_product(E, FA);
    INFO(v.detail);
    REQUIRE(v.ok);
  }
}

TEST_CASE("representation validation rejects broken data") {
  SubdirectRepresentation r = minimum_representation(l5());
  r.coord_map[0][2] = 0;  // break the homomorphism
  REQUIRE_THROWS_AS(validate_representation(r), InvariantBreach);
}
