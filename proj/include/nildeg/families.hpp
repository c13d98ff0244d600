#pragma once

#include <string>
#include <vector>

#include "nildeg/group.hpp"
#include "nildeg/quotient.hpp"
#include "nildeg/subgroup.hpp"

namespace nildeg {

bool is_prime(int p);

GroupPtr cyclic(int m);
// Direct product of cyclic groups; each invariant >= 2, empty list = trivial.
GroupPtr abelian(const std::vector<int>& invariants);
GroupPtr dihedral(int m);               // order 2m, m >= 1
GroupPtr quaternion_generalized(int m); // dicyclic of order 4m; Q8 at m=2
GroupPtr symmetric(int k);              // 1 <= k <= 6

// Unitriangular 3x3 matrices over F_p: extraspecial of order p^3, exponent p.
GroupPtr heisenberg(int p);
// <a,b | a^{p^2}, b^p, a^b = a^{1+p}>: extraspecial of order p^3, exponent p^2.
GroupPtr metacyclic_p3(int p);

enum class ExtraspecialType { plus_type, minus_type };

// Central product of order-p^3 factors amalgamating centers; order p^{2m+1}.
// p = 2: plus = D4 o ... o D4, minus has one Q8 factor; odd p: heisenberg
// factors, with one metacyclic factor for the minus (exponent p^2) type.
GroupPtr extraspecial(int p, int m, ExtraspecialType type);

// (A x B) / {(z, match(z)^-1) : z in za}. The match maps standalone indices
// of za (sorted-member order) to standalone indices of zb and must be an
// isomorphism; za, zb must be central. Throws argument_error otherwise.
GroupPtr central_product(GroupPtr a, GroupPtr b, const SubgroupSet& za,
                         const SubgroupSet& zb, const GroupMap& match);

// Amalgamates the full centers, which must be cyclic of equal order;
// generators are matched minimally (lowest standalone generator index).
GroupPtr central_product_over_centers(GroupPtr a, GroupPtr b);

// Closure of the generated permutation set, elements sorted lexicographically
// (the identity permutation sorts first). Throws on invalid generators.
GroupPtr group_from_permutations(int degree,
                                 const std::vector<std::vector<int>>& generators,
                                 const std::string& name);

}  // namespace nildeg
