#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include <nildeg/degrees.hpp>
#include <nildeg/errors.hpp>
#include <nildeg/families.hpp>
#include <nildeg/group.hpp>
#include <nildeg/quotient.hpp>
#include <nildeg/series.hpp>
#include <nildeg/subgroup.hpp>

#include "oracles.hpp"

using namespace nildeg;

namespace {

struct NamedSubgroup {
  std::string name;
  SubgroupSet set;
};

std::vector<NamedSubgroup> sample_subgroups(const FiniteGroup& g) {
  std::vector<NamedSubgroup> out;
  auto add = [&](const std::string& name, SubgroupSet s) {
    for (const auto& existing : out)
      if (existing.set == s) return;
    out.push_back({name, std::move(s)});
  };
  add("1", SubgroupSet::trivial(g.order()));
  add("Z", center(g));
  add("G'", derived_subgroup(g));
  int best = 0;
  for (int x = 0; x < g.order(); ++x)
    if (g.element_order(x) > g.element_order(best)) best = x;
  add("cyc", generated_subgroup(g, std::vector<int>{best}));
  add("G", SubgroupSet::full(g.order()));
  return out;
}

}  // namespace

TEST_CASE("brute and centralizer counts match the literal tuple oracle") {
  struct Case {
    GroupPtr g;
    int max_n;
  };
  const Case cases[] = {
      {symmetric(3), 3},   {dihedral(4), 3},  {quaternion_generalized(2), 3},
      {cyclic(6), 3},      {dihedral(6), 3},  {heisenberg(3), 2},
      {symmetric(4), 2},   {dihedral(8), 2},
  };
  for (const auto& c : cases) {
    for (const auto& [name, h] : sample_subgroups(*c.g)) {
      for (int n = 1; n <= c.max_n; ++n) {
        CAPTURE(c.g->name());
        CAPTURE(name);
        CAPTURE(n);
        oracle::DegreeCount expect = oracle::degree_count(*c.g, h.members(), n);
        DegreeResult brute = relative_degree_brute(*c.g, h, n);
        DegreeResult cent = relative_degree_centralizer(*c.g, h, n);
        CHECK(brute.favorable == expect.favorable);
        CHECK(brute.total == expect.total);
        CHECK(cent.favorable == expect.favorable);
        CHECK(cent.total == expect.total);
        CHECK(brute.value == Rational(expect.favorable, expect.total));
        CHECK(cent.value == brute.value);
      }
    }
  }
}

TEST_CASE("known degree values") {
  auto d = [](GroupPtr g) {
    return nilpotency_degree(*g, 1, DegreeMethod::centralizer).value;
  };
  CHECK(d(symmetric(3)) == Rational(1, 2));
  CHECK(d(dihedral(4)) == Rational(5, 8));
  CHECK(d(quaternion_generalized(2)) == Rational(5, 8));
  CHECK(d(dihedral(5)) == Rational(2, 5));
  CHECK(d(symmetric(4)) == Rational(5, 24));
  CHECK(d(heisenberg(3)) == Rational(11, 27));
  CHECK(d(metacyclic_p3(3)) == Rational(11, 27));
  CHECK(d(dihedral(8)) == Rational(7, 16));
  CHECK(d(quaternion_generalized(4)) == Rational(7, 16));
  CHECK(d(extraspecial(5, 1, ExtraspecialType::plus_type)) ==
        Rational(29, 125));
  CHECK(d(extraspecial(5, 1, ExtraspecialType::minus_type)) ==
        Rational(29, 125));
  CHECK(d(extraspecial(2, 2, ExtraspecialType::plus_type)) ==
        Rational(17, 32));
  CHECK(d(extraspecial(2, 2, ExtraspecialType::minus_type)) ==
        Rational(17, 32));
  CHECK(d(cyclic(12)) == 1);

  // A4 standalone, carved out of S4.
  auto s4 = symmetric(4);
  auto a4 = subgroup_as_group(s4, derived_subgroup(*s4), "A4");
  CHECK(nilpotency_degree(*a4.group, 1, DegreeMethod::brute).value ==
        Rational(1, 3));
}

TEST_CASE("known relative degree values") {
  auto d4 = dihedral(4);
  SubgroupSet rot = generated_subgroup(*d4, std::vector<int>{1});
  CHECK(relative_degree_brute(*d4, rot, 1).value == Rational(3, 4));
  CHECK(relative_degree_brute(*d4, center(*d4), 1).value == 1);

  auto s4 = symmetric(4);
  CHECK(relative_degree_brute(*s4, derived_subgroup(*s4), 1).value ==
        Rational(1, 4));

  // Raw counts are reported unreduced.
  DegreeResult r = nilpotency_degree(*d4, 1, DegreeMethod::brute);
  CHECK(r.favorable == 40);
  CHECK(r.total == 64);
  CHECK(r.value == Rational(5, 8));
}

TEST_CASE("classes method is the n = 1 identity") {
  for (auto g : {symmetric(3), symmetric(4), dihedral(4), dihedral(6),
                 quaternion_generalized(2), heisenberg(3), cyclic(8)}) {
    DegreeResult via_classes = nilpotency_degree(*g, 1, DegreeMethod::classes);
    DegreeResult via_brute = nilpotency_degree(*g, 1, DegreeMethod::brute);
    CHECK(via_classes.value == via_brute.value);
    CHECK(via_classes.value == Rational(oracle::class_count(*g), g->order()));
  }
  CHECK_THROWS_AS(nilpotency_degree(*dihedral(4), 2, DegreeMethod::classes),
                  argument_error);
}

TEST_CASE("argument validation") {
  auto d4 = dihedral(4);
  const SubgroupSet full = SubgroupSet::full(8);
  CHECK_THROWS_AS(relative_degree_brute(*d4, full, 0), argument_error);
  CHECK_THROWS_AS(relative_degree_centralizer(*d4, full, -1), argument_error);
  CHECK_THROWS_AS(relative_degree_brute(*d4, SubgroupSet::full(6), 1),
                  argument_error);
  // {e, r} is not closed.
  CHECK_THROWS_AS(
      relative_degree_brute(*d4, SubgroupSet::from_members(8, {0, 1}), 1),
      argument_error);
}

TEST_CASE("degrees are monotone in n") {
  for (auto g : {dihedral(8), quaternion_generalized(4), heisenberg(3),
                 symmetric(4), extraspecial(2, 2, ExtraspecialType::minus_type)}) {
    Rational prev = 0;
    for (int n = 1; n <= 3; ++n) {
      Rational cur = nilpotency_degree(*g, n, DegreeMethod::centralizer).value;
      CHECK(cur >= prev);
      prev = cur;
    }
  }
}

TEST_CASE("degree is multiplicative over direct products") {
  auto d = [](const FiniteGroup& g) {
    return nilpotency_degree(g, 1, DegreeMethod::centralizer).value;
  };
  auto s3 = symmetric(3);
  auto d4 = dihedral(4);
  auto q8 = quaternion_generalized(2);
  CHECK(d(*direct_product(*s3, *cyclic(2))) == d(*s3));
  CHECK(d(*direct_product(*d4, *cyclic(3))) == d(*d4));
  CHECK(d(*direct_product(*q8, *q8)) == Rational(25, 64));
  CHECK(d(*direct_product(*s3, *d4)) == Rational(5, 16));
}

TEST_CASE("saturation at the nilpotency class") {
  struct Case {
    GroupPtr g;
    int cls;
  };
  const Case cases[] = {
      {dihedral(4), 2},
      {quaternion_generalized(2), 2},
      {heisenberg(3), 2},
      {dihedral(8), 3},
      {quaternion_generalized(4), 3},
  };
  for (const auto& c : cases) {
    REQUIRE(nilpotency_class(*c.g) == c.cls);
    CHECK(nilpotency_degree(*c.g, c.cls - 1, DegreeMethod::centralizer).value <
          1);
    CHECK(nilpotency_degree(*c.g, c.cls, DegreeMethod::centralizer).value == 1);
    CHECK(nilpotency_degree(*c.g, c.cls + 1, DegreeMethod::centralizer).value ==
          1);
  }
}

TEST_CASE("centralizer symmetry reduction changes nothing") {
  DegreeOptions plain;
  plain.use_symmetry = false;
  for (auto g : {dihedral(4), symmetric(4), heisenberg(3), dihedral(8)}) {
    for (const auto& [name, h] : sample_subgroups(*g)) {
      for (int n = 1; n <= 2; ++n) {
        DegreeResult with = relative_degree_centralizer(*g, h, n);
        DegreeResult without = relative_degree_centralizer(*g, h, n, plain);
        CHECK(with.favorable == without.favorable);
        CHECK(with.total == without.total);
      }
    }
  }
}

TEST_CASE("work budget") {
  DegreeOptions tiny;
  tiny.work_budget = 10;
  auto s4 = symmetric(4);
  const SubgroupSet full = SubgroupSet::full(24);
  CHECK_THROWS_AS(relative_degree_brute(*s4, full, 2, tiny), capacity_error);
  CHECK_THROWS_AS(relative_degree_centralizer(*s4, full, 2, tiny),
                  capacity_error);
  try {
    relative_degree_brute(*s4, full, 2, tiny);
    FAIL("expected capacity_error");
  } catch (const capacity_error& e) {
    CHECK(std::string(e.what()).find("budget") != std::string::npos);
  }
  // A generous budget still works.
  DegreeOptions ample;
  ample.work_budget = BigInt(1) << 40;
  CHECK(relative_degree_brute(*s4, full, 2, ample).value ==
        relative_degree_centralizer(*s4, full, 2).value);
}

TEST_CASE("monte carlo determinism") {
  auto q8 = quaternion_generalized(2);
  const SubgroupSet full = SubgroupSet::full(8);

  EstimateResult a = estimate_degree(*q8, full, 1, 20000, 42);
  EstimateResult b = estimate_degree(*q8, full, 1, 20000, 42);
  CHECK(a.hits == b.hits);
  CHECK(a.estimate == b.estimate);
  CHECK(a.samples == 20000);
  CHECK(a.seed == 42);

  // Worker count never changes the stream.
  for (int workers : {2, 3, 5, 8}) {
    EstimateResult w = estimate_degree(*q8, full, 1, 20000, 42, workers);
    CHECK(w.hits == a.hits);
  }

  // The reported half width matches the binomial formula.
  double p = a.estimate;
  double expect = 1.96 * std::sqrt(p * (1 - p) / 20000.0);
  CHECK(a.half_width_95 == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("monte carlo accuracy") {
  // On an abelian group every sample hits.
  auto c6 = cyclic(6);
  EstimateResult sure = estimate_degree(*c6, SubgroupSet::full(6), 1, 5000, 1);
  CHECK(sure.hits == 5000);
  CHECK(sure.estimate == 1.0);

  auto q8 = quaternion_generalized(2);
  EstimateResult est = estimate_degree(*q8, SubgroupSet::full(8), 1, 100000, 7);
  CHECK(std::abs(est.estimate - 0.625) <= 0.02);

  auto d4 = dihedral(4);
  SubgroupSet rot = generated_subgroup(*d4, std::vector<int>{1});
  EstimateResult rel = estimate_degree(*d4, rot, 1, 100000, 11);
  CHECK(std::abs(rel.estimate - 0.75) <= 0.02);

  auto h3 = heisenberg(3);
  EstimateResult deep = estimate_degree(*h3, SubgroupSet::full(27), 2, 100000, 3);
  CHECK(deep.estimate == 1.0);  // class 2: d^(2) = 1

  CHECK_THROWS_AS(estimate_degree(*q8, SubgroupSet::full(8), 1, 0, 1),
                  argument_error);
  CHECK_THROWS_AS(estimate_degree(*q8, SubgroupSet::full(8), 1, 10, 1, 0),
                  argument_error);
  CHECK_THROWS_AS(estimate_degree(*q8, SubgroupSet::full(8), 0, 10, 1),
                  argument_error);
}

TEST_CASE("degree bound report") {
  // Not applicable: central quotient trivial or not a prime power with k >= 2.
  CHECK_FALSE(check_prop25_bound(*cyclic(6)).applicable);
  CHECK_FALSE(check_prop25_bound(*symmetric(3)).applicable);
  CHECK_FALSE(check_prop25_bound(*symmetric(4)).applicable);

  Prop25Report d4 = check_prop25_bound(*dihedral(4));
  REQUIRE(d4.applicable);
  CHECK(d4.p == 2);
  CHECK(d4.k == 2);
  CHECK(d4.bound == Rational(5, 8));
  CHECK(d4.degree == Rational(5, 8));
  CHECK(d4.tight);

  Prop25Report d8 = check_prop25_bound(*dihedral(8));
  REQUIRE(d8.applicable);
  CHECK(d8.k == 3);
  CHECK(d8.bound == Rational(9, 16));
  CHECK(d8.degree == Rational(7, 16));
  CHECK_FALSE(d8.tight);
  CHECK(d8.degree < d8.bound);

  Prop25Report h3 = check_prop25_bound(*heisenberg(3));
  REQUIRE(h3.applicable);
  CHECK(h3.p == 3);
  CHECK(h3.bound == Rational(11, 27));
  CHECK(h3.tight);

  Prop25Report e32 =
      check_prop25_bound(*extraspecial(2, 2, ExtraspecialType::minus_type));
  REQUIRE(e32.applicable);
  CHECK(e32.k == 4);
  CHECK(e32.bound == Rational(17, 32));
  CHECK(e32.tight);

  // Applicable and tight without being extraspecial.
  Prop25Report qc =
      check_prop25_bound(*direct_product(*quaternion_generalized(2), *cyclic(2)));
  REQUIRE(qc.applicable);
  CHECK(qc.k == 2);
  CHECK(qc.tight);
}
