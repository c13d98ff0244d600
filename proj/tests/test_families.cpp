#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <nildeg/errors.hpp>
#include <nildeg/families.hpp>
#include <nildeg/group.hpp>
#include <nildeg/isoclinism.hpp>
#include <nildeg/series.hpp>
#include <nildeg/spec_io.hpp>
#include <nildeg/subgroup.hpp>

#include "oracles.hpp"

using namespace nildeg;

namespace {

bool isomorphic(GroupPtr a, GroupPtr b) {
  auto res = find_group_isomorphism(a, b);
  REQUIRE(res.exhausted);  // a definite answer either way
  return res.iso.has_value();
}

std::vector<int> order_histogram(const FiniteGroup& g) {
  std::vector<int> h;
  for (int x = 0; x < g.order(); ++x) {
    int o = g.element_order(x);
    if (o >= static_cast<int>(h.size())) h.resize(o + 1, 0);
    ++h[o];
  }
  return h;
}

std::filesystem::path temp_file(const std::string& stem) {
  return std::filesystem::temp_directory_path() / stem;
}

}  // namespace

TEST_CASE("cyclic and abelian") {
  CHECK(cyclic(1)->order() == 1);
  auto c6 = cyclic(6);
  CHECK(c6->order() == 6);
  CHECK(c6->is_abelian());
  CHECK(c6->element_order(1) == 6);
  CHECK_THROWS_AS(cyclic(0), argument_error);
  CHECK_THROWS_AS(cyclic(-3), argument_error);

  auto ab = abelian({2, 4});
  CHECK(ab->order() == 8);
  CHECK(ab->is_abelian());
  int max_order = 0;
  for (int x = 0; x < 8; ++x) max_order = std::max(max_order, ab->element_order(x));
  CHECK(max_order == 4);
  CHECK(abelian({})->order() == 1);
  CHECK_THROWS_AS(abelian({1, 2}), argument_error);

  auto e8 = abelian({2, 2, 2});
  for (int x = 0; x < 8; ++x) CHECK(e8->mul(x, x) == 0);
}

TEST_CASE("dihedral groups") {
  CHECK(dihedral(1)->order() == 2);
  CHECK(dihedral(2)->order() == 4);
  CHECK(dihedral(2)->is_abelian());  // Klein four-group

  auto d4 = dihedral(4);
  CHECK(d4->order() == 8);
  CHECK_FALSE(d4->is_abelian());
  CHECK(isomorphic(d4, make_group(oracle::d4_table())));
  CHECK(isomorphic(dihedral(3), symmetric(3)));
  CHECK_THROWS_AS(dihedral(0), argument_error);
}

TEST_CASE("generalized quaternion groups") {
  CHECK(quaternion_generalized(1)->order() == 4);
  auto q8 = quaternion_generalized(2);
  CHECK(q8->order() == 8);
  CHECK(isomorphic(q8, make_group(oracle::q8_table())));

  // A unique involution is the signature property of the dicyclic 2-groups.
  for (int m : {2, 4}) {
    auto q = quaternion_generalized(m);
    int involutions = 0;
    for (int x = 0; x < q->order(); ++x)
      if (q->element_order(x) == 2) ++involutions;
    CHECK(involutions == 1);
  }
  CHECK_FALSE(isomorphic(q8, dihedral(4)));
}

TEST_CASE("symmetric groups") {
  CHECK(symmetric(1)->order() == 1);
  CHECK(symmetric(2)->order() == 2);
  CHECK(symmetric(3)->order() == 6);
  CHECK(symmetric(4)->order() == 24);
  CHECK(isomorphic(symmetric(3), make_group(oracle::s3_table())));
  CHECK(conjugacy_classes(*symmetric(4)).size() == 5);
  CHECK_THROWS_AS(symmetric(0), argument_error);
  CHECK_THROWS_AS(symmetric(7), argument_error);
}

TEST_CASE("order p^3 extraspecial constructions") {
  auto h3 = heisenberg(3);
  CHECK(h3->order() == 27);
  CHECK(is_extraspecial(*h3));
  for (int x = 1; x < 27; ++x) CHECK(h3->element_order(x) == 3);

  auto m3 = metacyclic_p3(3);
  CHECK(m3->order() == 27);
  CHECK(is_extraspecial(*m3));
  int max_order = 0;
  for (int x = 0; x < 27; ++x)
    max_order = std::max(max_order, m3->element_order(x));
  CHECK(max_order == 9);
  CHECK_FALSE(isomorphic(h3, m3));

  CHECK_THROWS_AS(heisenberg(2), argument_error);
  CHECK_THROWS_AS(heisenberg(4), argument_error);
  CHECK_THROWS_AS(metacyclic_p3(2), argument_error);
}

TEST_CASE("extraspecial family") {
  CHECK(isomorphic(extraspecial(2, 1, ExtraspecialType::plus_type),
                   dihedral(4)));
  CHECK(isomorphic(extraspecial(2, 1, ExtraspecialType::minus_type),
                   quaternion_generalized(2)));
  CHECK(isomorphic(extraspecial(3, 1, ExtraspecialType::plus_type),
                   heisenberg(3)));
  CHECK(isomorphic(extraspecial(3, 1, ExtraspecialType::minus_type),
                   metacyclic_p3(3)));

  for (auto type : {ExtraspecialType::plus_type, ExtraspecialType::minus_type}) {
    auto e32 = extraspecial(2, 2, type);
    CHECK(e32->order() == 32);
    CHECK(is_extraspecial(*e32));
    auto e125 = extraspecial(5, 1, type);
    CHECK(e125->order() == 125);
    CHECK(is_extraspecial(*e125));
  }

  // The two types of order 32 differ in their involution counts.
  auto plus = extraspecial(2, 2, ExtraspecialType::plus_type);
  auto minus = extraspecial(2, 2, ExtraspecialType::minus_type);
  CHECK(order_histogram(*plus) != order_histogram(*minus));
  CHECK_FALSE(isomorphic(plus, minus));

  CHECK_THROWS_AS(extraspecial(4, 1, ExtraspecialType::plus_type),
                  argument_error);
  CHECK_THROWS_AS(extraspecial(2, 0, ExtraspecialType::plus_type),
                  argument_error);
}

TEST_CASE("central products") {
  auto q8 = quaternion_generalized(2);
  auto d4 = dihedral(4);

  // Q8 o Q8 and D4 o D4 are the same group (the plus type of order 32);
  // D4 o Q8 is the other one.
  auto qq = central_product_over_centers(q8, q8);
  auto dd = central_product_over_centers(d4, d4);
  auto dq = central_product_over_centers(d4, q8);
  CHECK(qq->order() == 32);
  CHECK(dd->order() == 32);
  CHECK(dq->order() == 32);
  CHECK(isomorphic(qq, dd));
  CHECK(isomorphic(qq, extraspecial(2, 2, ExtraspecialType::plus_type)));
  CHECK(isomorphic(dq, extraspecial(2, 2, ExtraspecialType::minus_type)));
  CHECK_FALSE(isomorphic(qq, dq));

  // C4 o C4 over the shared C2: order 8, abelian.
  auto c4 = cyclic(4);
  SubgroupSet half = generated_subgroup(*c4, std::vector<int>{2});
  GroupMap match(subgroup_as_group(c4, half, "Z").group,
                 subgroup_as_group(c4, half, "Z").group, {0, 1});
  auto cc = central_product(c4, c4, half, half, match);
  CHECK(cc->order() == 8);
  CHECK(cc->is_abelian());

  // Amalgamation subgroup must be central.
  auto refl = generated_subgroup(*d4, std::vector<int>{4});
  GroupMap refl_match(subgroup_as_group(d4, refl, "R").group,
                      subgroup_as_group(d4, refl, "R").group, {0, 1});
  CHECK_THROWS_AS(central_product(d4, d4, refl, refl, refl_match),
                  argument_error);

  // Center orders must agree, and full centers must be cyclic.
  CHECK_THROWS_AS(central_product_over_centers(q8, heisenberg(3)),
                  argument_error);
  CHECK_THROWS_AS(central_product_over_centers(abelian({2, 2}), abelian({2, 2})),
                  argument_error);
}

TEST_CASE("permutation group closure") {
  auto s3 = group_from_permutations(3, {{1, 0, 2}, {1, 2, 0}}, "S3p");
  CHECK(s3->order() == 6);
  CHECK(isomorphic(s3, symmetric(3)));

  CHECK(group_from_permutations(5, {{1, 2, 3, 4, 0}}, "C5p")->order() == 5);
  CHECK(group_from_permutations(4, {}, "triv")->order() == 1);
  CHECK(group_from_permutations(4, {{0, 1, 2, 3}}, "triv2")->order() == 1);

  // Klein four-group as double transpositions.
  auto v4 = group_from_permutations(4, {{1, 0, 3, 2}, {2, 3, 0, 1}}, "V4");
  CHECK(v4->order() == 4);
  CHECK(v4->is_abelian());

  CHECK_THROWS_AS(group_from_permutations(3, {{0, 0, 1}}, "bad"),
                  argument_error);
  CHECK_THROWS_AS(group_from_permutations(3, {{0, 1}}, "bad"), argument_error);
  CHECK_THROWS_AS(group_from_permutations(0, {}, "bad"), argument_error);
  CHECK_THROWS_AS(group_from_permutations(3, {{0, 1, 3}}, "bad"),
                  argument_error);

  // S8 blows past the order cap.
  CHECK_THROWS_AS(group_from_permutations(
                      8, {{1, 2, 3, 4, 5, 6, 7, 0}, {1, 0, 2, 3, 4, 5, 6, 7}},
                      "S8"),
                  capacity_error);
}

TEST_CASE("spec parsing and realization") {
  // Family document.
  auto g = realize_group(parse_spec(
      R"({"kind":"family","family":"dihedral","params":{"m":4},"name":"mine"})"));
  CHECK(g->order() == 8);
  CHECK(g->name() == "mine");

  // Permutation document.
  auto p = realize_group(parse_spec(
      R"({"kind":"permutation","degree":3,"generators":[[1,0,2],[1,2,0]],"name":"S3p"})"));
  CHECK(p->order() == 6);

  // Extraspecial family document.
  auto e = realize_group(parse_spec(
      R"({"kind":"family","family":"extraspecial","params":{"p":3,"m":1,"type":"minus"}})"));
  CHECK(e->order() == 27);

  // Cayley document with the identity away from index 0 gets re-indexed.
  auto report = realize_spec(parse_spec(
      R"({"kind":"cayley","order":2,"table":[[1,0],[0,1]],"name":"flip"})"));
  CHECK(report.reindexed);
  CHECK(report.original_identity == 1);
  CHECK(report.group->order() == 2);
  CHECK(report.group->mul(0, 0) == 0);
  CHECK(report.group->mul(1, 1) == 0);

  // An in-order table is not re-indexed.
  auto straight = realize_spec(parse_spec(
      R"({"kind":"cayley","order":2,"table":[[0,1],[1,0]]})"));
  CHECK_FALSE(straight.reindexed);
}

TEST_CASE("spec round-trips are canonical") {
  for (auto g : {cyclic(6), dihedral(4), quaternion_generalized(2),
                 symmetric(3), heisenberg(3)}) {
    GroupSpec spec = cayley_spec(*g);
    const std::string text = save_spec(spec);
    GroupSpec back = parse_spec(text);
    CHECK(save_spec(back) == text);  // byte-stable
    auto h = realize_group(back);
    REQUIRE(h->order() == g->order());
    for (int x = 0; x < g->order(); ++x)
      for (int y = 0; y < g->order(); ++y) CHECK(h->mul(x, y) == g->mul(x, y));
    CHECK(h->name() == g->name());
  }

  // Family specs round-trip too.
  GroupSpec fam;
  fam.kind = GroupSpec::Kind::family;
  fam.family = "extraspecial";
  fam.int_params = {2, 2};
  fam.string_param = "minus";
  fam.name = "E32-";
  CHECK(save_spec(parse_spec(save_spec(fam))) == save_spec(fam));
  CHECK(realize_group(parse_spec(save_spec(fam)))->order() == 32);
}

TEST_CASE("spec parse and realize failures") {
  CHECK_THROWS_AS(parse_spec("not json at all"), parse_error);
  CHECK_THROWS_AS(parse_spec("[1,2,3]"), parse_error);
  CHECK_THROWS_AS(parse_spec(R"({"family":"cyclic"})"), parse_error);
  CHECK_THROWS_AS(parse_spec(R"({"kind":"sporadic"})"), parse_error);
  CHECK_THROWS_AS(parse_spec(R"({"kind":"family","family":"monster","params":{}})"),
                  parse_error);
  CHECK_THROWS_AS(parse_spec(R"({"kind":"family","family":"cyclic","params":{}})"),
                  parse_error);
  CHECK_THROWS_AS(
      parse_spec(R"({"kind":"cayley","order":3,"table":[[0,1],[1,0]]})"),
      parse_error);
  CHECK_THROWS_AS(
      parse_spec(
          R"({"kind":"family","family":"extraspecial","params":{"p":2,"m":1,"type":"weird"}})"),
      parse_error);

  // Parsable but unrealizable: the axioms are checked at realization time.
  CHECK_THROWS_AS(
      realize_spec(parse_spec(
          R"({"kind":"cayley","order":2,"table":[[0,1],[1,1]]})")),
      validation_error);
  CHECK_THROWS_AS(
      realize_spec(parse_spec(
          R"({"kind":"cayley","order":2,"table":[[0,1],[1,9]]})")),
      validation_error);
  CHECK_THROWS_AS(
      realize_spec(parse_spec(
          R"({"kind":"permutation","degree":3,"generators":[[0,0,1]]})")),
      argument_error);
  CHECK_THROWS_AS(
      realize_spec(parse_spec(
          R"({"kind":"family","family":"heisenberg","params":{"p":4}})")),
      argument_error);
}

TEST_CASE("group files and designators") {
  CHECK(parse_group_arg("family:cyclic:6")->order() == 6);
  CHECK(parse_group_arg("family:abelian:2,4")->order() == 8);
  CHECK(parse_group_arg("family:dihedral:8")->order() == 16);
  CHECK(parse_group_arg("family:quaternion:4")->order() == 16);
  CHECK(parse_group_arg("family:symmetric:4")->order() == 24);
  CHECK(parse_group_arg("family:heisenberg:5")->order() == 125);
  auto es = parse_group_arg("family:extraspecial:2:1:plus");
  CHECK(es->order() == 8);
  CHECK(is_extraspecial(*es));

  CHECK_THROWS_AS(parse_group_arg("cyclic:6"), argument_error);
  CHECK_THROWS_AS(parse_group_arg("family:monster:1"), argument_error);
  CHECK_THROWS_AS(parse_group_arg("family:dihedral"), argument_error);
  CHECK_THROWS_AS(parse_group_arg("family:dihedral:x"), argument_error);
  CHECK_THROWS_AS(parse_group_arg("family:extraspecial:2:1:weird"),
                  argument_error);

  // file: designator round-trip through disk.
  const auto path = temp_file("nildeg_test_spec.json");
  {
    std::ofstream out(path);
    out << save_spec(cayley_spec(*quaternion_generalized(2)));
  }
  auto loaded = parse_group_arg("file:" + path.string());
  CHECK(loaded->order() == 8);
  CHECK(load_group_file(path.string())->order() == 8);
  std::filesystem::remove(path);

  CHECK_THROWS_AS(load_group_file("/nonexistent/x.json"), parse_error);
}
