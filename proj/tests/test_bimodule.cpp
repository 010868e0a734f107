#include <doctest.h>

#include "levi/bimodule.hpp"

using namespace levi;

namespace {

GroupPtr s3() {
  static GroupPtr g = FiniteGroup::symmetric(3);
  return g;
}

Subgroup a3() {
  auto g = s3();
  for (int x = 0; x < 6; ++x)
    if (g->element_order(x) == 3) return Subgroup::closure(g, {x});
  throw std::logic_error("no 3-cycle");
}

GroupData s3_a3_identity() { return GroupData::graph_of(PartialHom::identity_on(a3())); }

GroupPtr c2() {
  static GroupPtr g = FiniteGroup::from_mul_table({{0, 1}, {1, 0}}, {"1", "s"}, "C2");
  return g;
}

GroupPtr c2xc2() {
  // elements 0=(0,0) 1=(1,0) 2=(0,1) 3=(1,1), product = xor
  std::vector<std::vector<int>> t(4, std::vector<int>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t[i][j] = i ^ j;
  static GroupPtr g = FiniteGroup::from_mul_table(t, {}, "C2xC2");
  return g;
}

}  // namespace

TEST_CASE("group data validation") {
  auto d = s3_a3_identity();
  CHECK(d.gamma.size() == 3);
  CHECK(d.gamma_functional());

  // gamma must project onto both components
  CHECK_THROWS_AS(GroupData::make(s3(), a3(), a3(), {{s3()->identity(), s3()->identity()}}),
                  Error);
}

TEST_CASE("from_group_data carrier sizes") {
  SUBCASE("trivial group") {
    auto t = FiniteGroup::trivial();
    auto d = GroupData::graph_of(PartialHom::identity_on(Subgroup::whole(t)));
    auto pb = from_group_data(d);
    CHECK(pb.bimodule->carrier_size() == 1);
  }
  SUBCASE("s3/a3/identity has 36/3 = 12 classes") {
    auto pb = from_group_data(s3_a3_identity());
    CHECK(pb.bimodule->carrier_size() == 12);
  }
  SUBCASE("c2 with trivial subgroups is bifree of size 4") {
    auto d = GroupData::graph_of(PartialHom::identity_on(Subgroup::trivial(c2())));
    auto pb = from_group_data(d);
    CHECK(pb.bimodule->carrier_size() == 4);
    auto flags = classify(*pb.bimodule);
    CHECK(flags.bifree);
    CHECK(flags.irreducible);
  }
}

TEST_CASE("extract_group_data round trip at the canonical point") {
  for (const auto& d : {s3_a3_identity(),
                        GroupData::full_product(a3(), a3()),
                        GroupData::graph_of(PartialHom::identity_on(Subgroup::trivial(c2())))}) {
    auto pb = from_group_data(d);
    auto back = extract_group_data(pb);
    CHECK(back == d);
  }
}

TEST_CASE("trivial bimodule extracts trivial data") {
  auto t = FiniteGroup::trivial();
  auto b = Bimodule::from_tables(t, 3, {{0, 1, 2}}, {{0}, {1}, {2}});
  auto d = extract_group_data(PointedBimodule{b, 1});
  CHECK(d.h.size() == 1);
  CHECK(d.k.size() == 1);
  CHECK(d.gamma.size() == 1);
}

TEST_CASE("group data at two points of one irreducible bimodule are conjugate") {
  auto pb = from_group_data(s3_a3_identity());
  auto d0 = extract_group_data(pb);
  for (int point = 0; point < pb.bimodule->carrier_size(); ++point) {
    auto d = extract_group_data(PointedBimodule{pb.bimodule, point});
    auto witness = conjugate_group_data(d0, d);
    REQUIRE(witness.has_value());
  }
}

TEST_CASE("conjugacy witness for identical data is the identity pair") {
  auto d = s3_a3_identity();
  auto w = conjugate_group_data(d, d);
  REQUIRE(w.has_value());
  CHECK(w->first == s3()->identity());
  CHECK(w->second == s3()->identity());
}

TEST_CASE("abelian group with different subgroups admits no conjugacy") {
  auto g = c2xc2();
  auto h1 = Subgroup::closure(g, {1});
  auto h2 = Subgroup::closure(g, {2});
  auto k = Subgroup::trivial(g);
  auto d1 = GroupData::full_product(h1, k);
  auto d2 = GroupData::full_product(h2, k);
  CHECK_FALSE(conjugate_group_data(d1, d2).has_value());
}

TEST_CASE("goursat form") {
  SUBCASE("graph of an isomorphism has trivial kernels and theta = phi") {
    auto d = s3_a3_identity();
    auto form = goursat_form(d);
    CHECK(form.n_h.size() == 1);
    CHECK(form.n_k.size() == 1);
    REQUIRE(form.h_reps.size() == 3);
    for (size_t i = 0; i < form.h_reps.size(); ++i)
      CHECK(form.k_reps[form.theta[i]] == form.h_reps[i]);
  }
  SUBCASE("full product collapses everything") {
    auto d = GroupData::full_product(a3(), a3());
    auto form = goursat_form(d);
    CHECK(form.n_h.size() == 3);
    CHECK(form.n_k.size() == 3);
    CHECK(form.h_reps.size() == 1);
  }
  SUBCASE("sign-style gamma on S3 has N_H = A3") {
    // H = S3, K = a transposition subgroup; gamma relates h to 1 or the
    // transposition according to parity.
    auto g = s3();
    int transposition = -1;
    for (int x = 0; x < 6; ++x)
      if (g->element_order(x) == 2) { transposition = x; break; }
    auto k = Subgroup::closure(g, {transposition});
    auto alternating = a3();
    std::vector<std::pair<int, int>> gamma;
    for (int h = 0; h < 6; ++h)
      gamma.emplace_back(h, alternating.contains(h) ? g->identity() : transposition);
    auto d = GroupData::make(g, Subgroup::whole(g), k, gamma);
    auto form = goursat_form(d);
    CHECK(form.n_h.elements() == alternating.elements());
    CHECK(form.n_k.size() == 1);
  }
}

TEST_CASE("classification") {
  SUBCASE("trivial group bimodules are bifree; irreducible iff singleton") {
    auto t = FiniteGroup::trivial();
    auto b1 = Bimodule::from_tables(t, 1, {{0}}, {{0}});
    auto b3 = Bimodule::from_tables(t, 3, {{0, 1, 2}}, {{0}, {1}, {2}});
    CHECK(classify(*b1).bifree);
    CHECK(classify(*b1).irreducible);
    CHECK(classify(*b3).bifree);
    CHECK_FALSE(classify(*b3).irreducible);
    CHECK(classify(*b3).orbit_count == 3);
  }
  SUBCASE("functional gamma gives right-free; automorphism graph gives bifree") {
    auto squaring = [&] {
      auto c4 = FiniteGroup::cyclic(4);
      auto whole = Subgroup::whole(c4);
      std::vector<int> images;
      for (int x : whole.elements()) images.push_back((2 * x) % 4);
      return GroupData::graph_of(PartialHom(whole, c4, images));
    }();
    auto flags = classify(*from_group_data(squaring).bimodule);
    CHECK(flags.right_free);
    CHECK_FALSE(flags.left_free);

    auto iso_flags = classify(*from_group_data(s3_a3_identity()).bimodule);
    CHECK(iso_flags.bifree);
  }
  SUBCASE("full product is not right free") {
    auto flags = classify(*from_group_data(GroupData::full_product(a3(), a3())).bimodule);
    CHECK_FALSE(flags.right_free);
    CHECK_FALSE(flags.left_free);
    CHECK(flags.irreducible);
  }
}

TEST_CASE("from_group_data invariants over a small corpus of data") {
  auto c4 = FiniteGroup::cyclic(4);
  auto whole4 = Subgroup::whole(c4);
  std::vector<int> squaring;
  for (int x : whole4.elements()) squaring.push_back((2 * x) % 4);

  std::vector<GroupData> corpus = {
      s3_a3_identity(),
      GroupData::full_product(a3(), a3()),
      GroupData::full_product(Subgroup::whole(s3()), a3()),
      GroupData::graph_of(PartialHom(whole4, c4, squaring)),
      GroupData::graph_of(PartialHom::identity_on(Subgroup::trivial(c2()))),
      GroupData::graph_of(PartialHom::identity_on(Subgroup::whole(c2()))),
  };
  for (const auto& d : corpus) {
    auto pb = from_group_data(d);
    const int order = d.group->order();
    CHECK(pb.bimodule->carrier_size() * static_cast<int>(d.gamma.size()) == order * order);
    CHECK(classify(*pb.bimodule).irreducible);
    CHECK(classify(*pb.bimodule).right_free == d.gamma_functional());
    CHECK(extract_group_data(pb) == d);
  }
}

TEST_CASE("basis transversal") {
  SUBCASE("trivial group: every carrier element is its own representative") {
    auto t = FiniteGroup::trivial();
    auto b = Bimodule::from_tables(t, 3, {{0, 1, 2}}, {{0}, {1}, {2}});
    CHECK(basis_transversal(*b) == std::vector<int>{0, 1, 2});
  }
  SUBCASE("s3/a3 bimodule has 12/6 = 2 representatives") {
    auto pb = from_group_data(s3_a3_identity());
    auto basis = basis_transversal(*pb.bimodule);
    CHECK(basis.size() == 2);

    // unique decomposition rep * g
    const auto& b = *pb.bimodule;
    for (int y = 0; y < b.carrier_size(); ++y) {
      int count = 0;
      for (int rep : basis)
        for (int u = 0; u < 6; ++u)
          if (b.right(rep, u) == y) ++count;
      CHECK(count == 1);
    }
  }
  SUBCASE("rejects non-right-free bimodules") {
    auto pb = from_group_data(GroupData::full_product(a3(), a3()));
    CHECK_THROWS_AS(basis_transversal(*pb.bimodule), Error);
  }
}
