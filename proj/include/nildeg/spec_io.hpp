#pragma once

#include <string>
#include <vector>

#include "nildeg/group.hpp"

namespace nildeg {

// Serializable description of a group: an explicit Cayley table, permutation
// generators, or a family recipe.
struct GroupSpec {
  enum class Kind { cayley, permutation, family };
  Kind kind = Kind::cayley;
  std::string name;

  // kind == cayley
  std::vector<std::vector<int>> table;

  // kind == permutation
  int degree = 0;
  std::vector<std::vector<int>> generators;

  // kind == family
  std::string family;
  std::vector<int> int_params;     // positional numeric parameters
  std::string string_param;        // e.g. extraspecial type "plus"/"minus"
};

// JSON document <-> GroupSpec. parse_spec throws parse_error naming the
// offending field; save_spec emits a canonical (key-sorted, byte-stable)
// document that round-trips through parse_spec exactly.
GroupSpec parse_spec(const std::string& text);
std::string save_spec(const GroupSpec& spec);

struct RealizeReport {
  GroupPtr group;
  bool reindexed = false;   // identity moved to index 0 on load
  int original_identity = 0;
};

// Construct the group a spec describes. Cayley tables whose identity is not
// at index 0 are re-indexed (recorded in the report); tables failing the
// group axioms throw validation_error.
RealizeReport realize_spec(const GroupSpec& spec);
GroupPtr realize_group(const GroupSpec& spec);

// Read a JSON spec document from disk and realize it.
GroupPtr load_group_file(const std::string& path);

// Snapshot an existing group as a cayley-kind spec (for round-trips).
GroupSpec cayley_spec(const FiniteGroup& g);

// CLI group designator: "family:NAME:ARG[:ARG...]" or "file:PATH".
// abelian takes a comma-separated invariant list as its single argument.
GroupPtr parse_group_arg(const std::string& arg);

}  // namespace nildeg
