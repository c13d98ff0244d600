#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nildeg/group.hpp"
#include "nildeg/subgroup.hpp"

namespace nildeg {

struct CatalogEntry {
  std::string name;
  GroupPtr group;
  // Named subgroups the sample must include (e.g. the Q8 factor of Q8xC2).
  std::vector<std::pair<std::string, SubgroupSet>> pinned;
};

// One entry per isomorphism type: every group of order <= 16 the families
// module can construct, plus S3, S4, Q8xC2, D4xC3, Heis3, and the two
// extraspecial groups of order 32. Built once; deterministic order.
const std::vector<CatalogEntry>& default_catalog();

// Deterministic subgroup sample for one entry: trivial, center, derived
// subgroup, second center, the cyclic subgroup generated by the first
// maximal-order element, any pinned subgroups, and the full group.
// Duplicate sets are dropped, keeping the first name.
std::vector<std::pair<std::string, SubgroupSet>> subgroup_sample(
    const CatalogEntry& e);

// A catalog file is a JSON array of group spec documents.
std::vector<CatalogEntry> load_catalog_file(const std::string& path);

}  // namespace nildeg
