#pragma once

#include <vector>

#include "nildeg/group.hpp"
#include "nildeg/subgroup.hpp"

namespace nildeg {

// A total map between element indices of two groups.
class GroupMap {
 public:
  GroupMap(GroupPtr source, GroupPtr target, std::vector<int> images);

  const GroupPtr& source() const { return source_; }
  const GroupPtr& target() const { return target_; }
  const std::vector<int>& images() const { return images_; }
  int apply(int x) const;

  bool is_homomorphism() const;
  bool is_bijective() const;
  GroupMap inverse() const;  // throws argument_error unless bijective

  static GroupMap identity(GroupPtr g);
  // (f.then(g))(x) = g(f(x)); requires f.target order == g.source order.
  GroupMap then(const GroupMap& next) const;

 private:
  GroupPtr source_;
  GroupPtr target_;
  std::vector<int> images_;
};

struct QuotientResult {
  GroupPtr group;             // G/N with cosets as elements
  std::vector<int> coset_of;  // parent index -> coset index
  std::vector<int> reps;      // coset index -> minimal parent representative
};

// Cosets are numbered by increasing minimal representative, so the identity
// coset N is element 0. Throws unless n is normal in g.
QuotientResult quotient(GroupPtr g, const SubgroupSet& n);

struct SubgroupGroup {
  GroupPtr group;
  std::vector<int> to_parent;    // subgroup index -> parent index (sorted)
  std::vector<int> from_parent;  // parent index -> subgroup index or -1
};

SubgroupGroup subgroup_as_group(GroupPtr g, const SubgroupSet& h,
                                const std::string& name);

}  // namespace nildeg
