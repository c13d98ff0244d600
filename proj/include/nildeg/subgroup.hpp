#pragma once

#include <span>
#include <vector>

#include "nildeg/group.hpp"
#include "nildeg/rational.hpp"

namespace nildeg {

// A subset of element indices of a parent group, kept both as a sorted member
// list and as a bitset for O(1) membership. Always contains the identity.
// Whether the set is actually closed under the parent multiplication is the
// caller's contract; is_subgroup() checks it.
class SubgroupSet {
 public:
  SubgroupSet() = default;

  // members must be sorted, duplicate-free, in range, and contain 0.
  static SubgroupSet from_members(int parent_order, std::vector<int> members);
  static SubgroupSet trivial(int parent_order);
  static SubgroupSet full(int parent_order);

  int parent_order() const { return parent_order_; }
  int size() const { return static_cast<int>(members_.size()); }
  const std::vector<int>& members() const { return members_; }

  bool contains(int x) const {
    return x >= 0 && x < parent_order_ && membership_[x];
  }

  bool operator==(const SubgroupSet& other) const {
    return parent_order_ == other.parent_order_ && members_ == other.members_;
  }

 private:
  int parent_order_ = 0;
  std::vector<int> members_;
  std::vector<char> membership_;
};

bool is_subgroup(const FiniteGroup& g, const SubgroupSet& s);
bool is_normal(const FiniteGroup& g, const SubgroupSet& s);

// Smallest subgroup containing the seeds, by breadth-first closure.
// An empty seed list yields the trivial subgroup.
SubgroupSet generated_subgroup(const FiniteGroup& g, std::span<const int> seeds);

// Set intersection of two subgroups of the same parent.
SubgroupSet intersect(const SubgroupSet& a, const SubgroupSet& b);

// {h*n : h in H, n in N}. Throws argument_error if the product set is not
// closed (N not normalized by H).
SubgroupSet set_product(const FiniteGroup& g, const SubgroupSet& h,
                        const SubgroupSet& n);

// |H|/|G| = 1 / [G:H], exact.
Rational subgroup_measure(const FiniteGroup& g, const SubgroupSet& h);

}  // namespace nildeg
