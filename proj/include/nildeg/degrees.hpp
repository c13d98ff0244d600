#pragma once

#include <cstdint>

#include "nildeg/group.hpp"
#include "nildeg/rational.hpp"
#include "nildeg/subgroup.hpp"

namespace nildeg {

enum class DegreeMethod { brute, centralizer, classes };

// Enumeration work ceiling: NILDEG_BUDGET when set, otherwise 10^9 tuples.
BigInt default_work_budget();

struct DegreeOptions {
  BigInt work_budget = default_work_budget();
  // Conjugacy reduction of the outermost tuple coordinate (centralizer
  // method only). Off switch exists so tests can compare against the
  // unreduced sum.
  bool use_symmetry = true;
};

struct DegreeResult {
  Rational value;
  DegreeMethod method = DegreeMethod::brute;
  BigInt favorable;  // |D_{n+1}| (or k(G)*|G| for the classes method)
  BigInt total;      // |H|^n * |G|
  int n = 1;
};

// d^(n)(H,G): the fraction of (h_1,...,h_n,g) in H^n x G whose left-normed
// commutator is trivial. Brute force counts tuples literally; the
// centralizer form replaces the inner loop over g by |C_G([h_1,...,h_n])|.
// Both throw capacity_error when the tuple space exceeds the budget.
DegreeResult relative_degree_brute(const FiniteGroup& g, const SubgroupSet& h,
                                   int n, const DegreeOptions& opt = {});
DegreeResult relative_degree_centralizer(const FiniteGroup& g,
                                         const SubgroupSet& h, int n,
                                         const DegreeOptions& opt = {});

// d^(n)(G) = d^(n)(G,G). method == classes is the k(G)/|G| identity and is
// valid only at n = 1.
DegreeResult nilpotency_degree(const FiniteGroup& g, int n, DegreeMethod method,
                               const DegreeOptions& opt = {});

struct EstimateResult {
  double estimate = 0.0;
  long long samples = 0;
  std::uint64_t seed = 0;
  double half_width_95 = 0.0;  // 1.96 * sqrt(e(1-e)/samples)
  long long hits = 0;
};

// Monte Carlo d^(n)(H,G): `samples` uniform tuples drawn from per-sample
// counter-mode streams, so the result is bit-identical for any worker count.
EstimateResult estimate_degree(const FiniteGroup& g, const SubgroupSet& h,
                               int n, long long samples, std::uint64_t seed,
                               int workers = 1);

struct Prop25Report {
  bool applicable = false;  // |G/Z(G)| = p^k with k >= 2
  int p = 0;
  int k = 0;
  Rational bound;   // (p^k + p - 1) / p^(k+1)
  Rational degree;  // d(G), exact
  bool tight = false;
};

Prop25Report check_prop25_bound(const FiniteGroup& g,
                                const DegreeOptions& opt = {});

}  // namespace nildeg
