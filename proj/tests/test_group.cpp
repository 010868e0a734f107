#include <doctest.h>

#include "levi/group.hpp"

using namespace levi;

namespace {

std::vector<std::vector<int>> c2_table() { return {{0, 1}, {1, 0}}; }

}  // namespace

TEST_CASE("trivial group from 1x1 table") {
  auto g = FiniteGroup::from_mul_table({{0}});
  CHECK(g->order() == 1);
  CHECK(g->identity() == 0);
  CHECK(g->inv(0) == 0);
}

TEST_CASE("order-2 group is forced") {
  auto g = FiniteGroup::from_mul_table(c2_table());
  CHECK(g->order() == 2);
  for (int x = 0; x < 2; ++x) CHECK(g->inv(x) == x);
}

TEST_CASE("S3 from its Cayley table has three elements of order 2") {
  auto s3 = FiniteGroup::symmetric(3);
  auto copy = FiniteGroup::from_mul_table(s3->mul_table());
  CHECK(copy->order() == 6);
  int involutions = 0;
  for (int x = 0; x < copy->order(); ++x)
    if (copy->element_order(x) == 2) ++involutions;
  CHECK(involutions == 3);
}

TEST_CASE("table validation reports the first violated law") {
  CHECK_THROWS_WITH_AS(FiniteGroup::from_mul_table({{0, 0}, {1, 1}}), doctest::Contains("row"),
                       Error);
  // Latin square without a two-sided identity.
  std::vector<std::vector<int>> no_identity = {{0, 1, 2}, {2, 0, 1}, {1, 2, 0}};
  try {
    FiniteGroup::from_mul_table(no_identity);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoIdentity);
  }
  // 5x5 Latin square with identity but not associative (row-shifted).
  std::vector<std::vector<int>> bad = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  try {
    FiniteGroup::from_mul_table(bad);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAssociative);
    CHECK(std::string(e.what()).find("witness") != std::string::npos);
  }
}

TEST_CASE("permutation closure") {
  SUBCASE("S3 generators") {
    auto g = FiniteGroup::from_permutations(3, {{1, 0, 2}, {1, 2, 0}});
    CHECK(g->order() == 6);
    CHECK(g->label(g->identity()) == "e");
  }
  SUBCASE("4-cycle generates C4") {
    auto g = FiniteGroup::from_permutations(4, {{1, 2, 3, 0}});
    CHECK(g->order() == 4);
    CHECK(g->element_order(1) == 4);
  }
  SUBCASE("no generators give the trivial group") {
    auto g = FiniteGroup::from_permutations(2, {});
    CHECK(g->order() == 1);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(FiniteGroup::from_permutations(3, {{0, 0, 1}}), Error);
    try {
      FiniteGroup::from_permutations(5, {{1, 2, 3, 4, 0}}, 3);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::OrderLimitExceeded);
    }
  }
}

TEST_CASE("subgroup closure") {
  auto c4 = FiniteGroup::cyclic(4);
  auto sq = Subgroup::closure(c4, {2});
  CHECK(sq.elements() == std::vector<int>{0, 2});

  auto s3 = FiniteGroup::symmetric(3);
  int three_cycle = -1;
  for (int x = 0; x < 6; ++x)
    if (s3->element_order(x) == 3) { three_cycle = x; break; }
  auto a3 = Subgroup::closure(s3, {three_cycle});
  CHECK(a3.size() == 3);

  auto trivial = Subgroup::closure(s3, {});
  CHECK(trivial.size() == 1);
  CHECK(trivial.contains(s3->identity()));

  CHECK_THROWS_AS(Subgroup::closure(c4, {7}), Error);
}

TEST_CASE("left cosets") {
  auto c2 = FiniteGroup::from_mul_table(c2_table());
  auto whole = Subgroup::whole(c2);
  auto dec = left_cosets(c2, whole);
  CHECK(dec.transversal == std::vector<int>{c2->identity()});

  auto s3 = FiniteGroup::symmetric(3);
  int three_cycle = -1;
  for (int x = 0; x < 6; ++x)
    if (s3->element_order(x) == 3) { three_cycle = x; break; }
  auto a3 = Subgroup::closure(s3, {three_cycle});
  auto s3_dec = left_cosets(s3, a3);
  REQUIRE(s3_dec.transversal.size() == 2);
  CHECK(s3_dec.transversal[0] == s3->identity());
  // The second representative is the minimal odd permutation.
  int min_odd = -1;
  for (int x = 0; x < 6; ++x)
    if (!a3.contains(x)) { min_odd = x; break; }
  CHECK(s3_dec.transversal[1] == min_odd);

  auto c4 = FiniteGroup::cyclic(4);
  auto dec4 = left_cosets(c4, Subgroup::closure(c4, {2}));
  CHECK(dec4.transversal.size() == 2);

  SUBCASE("cosets partition the group and recompose") {
    for (const auto& [g, h] : {std::pair{s3, a3}, {c4, Subgroup::closure(c4, {2})}}) {
      auto d = left_cosets(g, h);
      CHECK(static_cast<int>(d.transversal.size()) * h.size() == g->order());
      for (int x = 0; x < g->order(); ++x) {
        CHECK(h.contains(d.h_part[x]));
        CHECK(g->mul(d.transversal[d.coset_of[x]], d.h_part[x]) == x);
      }
    }
  }
}

TEST_CASE("partial homomorphisms") {
  auto s3 = FiniteGroup::symmetric(3);
  int three_cycle = -1;
  for (int x = 0; x < 6; ++x)
    if (s3->element_order(x) == 3) { three_cycle = x; break; }
  auto a3 = Subgroup::closure(s3, {three_cycle});

  SUBCASE("identity map on A3") {
    auto phi = PartialHom::identity_on(a3);
    CHECK(phi.injective());
    CHECK(phi.image() == a3);
    for (int a : a3.elements()) CHECK(phi.apply(a) == a);
  }
  SUBCASE("squaring on C4 has image {1, r^2}") {
    auto c4 = FiniteGroup::cyclic(4);
    auto whole = Subgroup::whole(c4);
    std::vector<int> images;
    for (int x : whole.elements()) images.push_back((2 * x) % 4);
    PartialHom phi(whole, c4, images);
    CHECK_FALSE(phi.injective());
    CHECK(phi.image().elements() == std::vector<int>{0, 2});
  }
  SUBCASE("empty generating set on the trivial subgroup") {
    auto triv = Subgroup::trivial(s3);
    auto phi = PartialHom::from_generators(triv, s3, {});
    CHECK(phi.injective());
    CHECK(phi.image().size() == 1);
  }
  SUBCASE("non-homomorphism is rejected with a witness pair") {
    auto c4 = FiniteGroup::cyclic(4);
    auto whole = Subgroup::whole(c4);
    try {
      PartialHom(whole, c4, {0, 1, 1, 3});
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotAHomomorphism);
      CHECK(std::string(e.what()).find("witness") != std::string::npos);
    }
  }
  SUBCASE("homomorphism law holds on the whole domain") {
    auto phi = PartialHom::from_generators(a3, s3, {{three_cycle, three_cycle}});
    for (int a : a3.elements())
      for (int b : a3.elements())
        CHECK(phi.apply(s3->mul(a, b)) == s3->mul(phi.apply(a), phi.apply(b)));
  }
}

TEST_CASE("inverses are two-sided") {
  for (const auto& g :
       {FiniteGroup::symmetric(3), FiniteGroup::cyclic(6), FiniteGroup::trivial()}) {
    for (int x = 0; x < g->order(); ++x) {
      CHECK(g->mul(x, g->inv(x)) == g->identity());
      CHECK(g->mul(g->inv(x), x) == g->identity());
    }
  }
}

TEST_CASE("quotient group") {
  auto s3 = FiniteGroup::symmetric(3);
  int three_cycle = -1;
  for (int x = 0; x < 6; ++x)
    if (s3->element_order(x) == 3) { three_cycle = x; break; }
  auto a3 = Subgroup::closure(s3, {three_cycle});
  auto q = quotient_group(s3, a3);
  CHECK(q.group->order() == 2);
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y)
      CHECK(q.projection[s3->mul(x, y)] == q.group->mul(q.projection[x], q.projection[y]));

  // Non-normal subgroups are rejected.
  int transposition = -1;
  for (int x = 0; x < 6; ++x)
    if (s3->element_order(x) == 2) { transposition = x; break; }
  CHECK_THROWS_AS(quotient_group(s3, Subgroup::closure(s3, {transposition})), Error);
}
