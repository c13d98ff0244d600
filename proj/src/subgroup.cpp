#include "nildeg/subgroup.hpp"

#include <algorithm>
#include <sstream>

#include "nildeg/errors.hpp"

namespace nildeg {

SubgroupSet SubgroupSet::from_members(int parent_order,
                                      std::vector<int> members) {
  if (parent_order < 1) throw argument_error("parent order must be positive");
  SubgroupSet s;
  s.parent_order_ = parent_order;
  s.membership_.assign(parent_order, 0);
  for (int m : members) {
    if (m < 0 || m >= parent_order) {
      std::ostringstream os;
      os << "member " << m << " out of range for parent of order "
         << parent_order;
      throw argument_error(os.str());
    }
    if (s.membership_[m]) throw argument_error("duplicate member");
    s.membership_[m] = 1;
  }
  if (!std::is_sorted(members.begin(), members.end()))
    throw argument_error("members must be sorted ascending");
  if (members.empty() || members[0] != 0)
    throw argument_error("a subgroup set must contain the identity");
  s.members_ = std::move(members);
  return s;
}

SubgroupSet SubgroupSet::trivial(int parent_order) {
  return from_members(parent_order, {0});
}

SubgroupSet SubgroupSet::full(int parent_order) {
  std::vector<int> all(parent_order);
  for (int i = 0; i < parent_order; ++i) all[i] = i;
  return from_members(parent_order, std::move(all));
}

bool is_subgroup(const FiniteGroup& g, const SubgroupSet& s) {
  if (s.parent_order() != g.order()) return false;
  for (int a : s.members()) {
    if (!s.contains(g.inv_unchecked(a))) return false;
    for (int b : s.members())
      if (!s.contains(g.mul_unchecked(a, b))) return false;
  }
  return true;
}

bool is_normal(const FiniteGroup& g, const SubgroupSet& s) {
  if (!is_subgroup(g, s)) return false;
  for (int x : s.members())
    for (int c = 0; c < g.order(); ++c)
      if (!s.contains(g.conjugate(x, c))) return false;
  return true;
}

SubgroupSet generated_subgroup(const FiniteGroup& g,
                               std::span<const int> seeds) {
  const int n = g.order();
  std::vector<char> in(n, 0);
  std::vector<int> frontier;
  in[0] = 1;
  std::vector<int> elements{0};
  for (int s : seeds) {
    if (s < 0 || s >= n) throw argument_error("seed element out of range");
    if (!in[s]) {
      in[s] = 1;
      elements.push_back(s);
      frontier.push_back(s);
    }
  }
  while (!frontier.empty()) {
    int x = frontier.back();
    frontier.pop_back();
    // Closure under products in both orders; inverses follow by finiteness.
    for (std::size_t i = 0; i < elements.size(); ++i) {
      int y = elements[i];
      for (int p : {g.mul_unchecked(x, y), g.mul_unchecked(y, x)}) {
        if (!in[p]) {
          in[p] = 1;
          elements.push_back(p);
          frontier.push_back(p);
        }
      }
    }
  }
  std::sort(elements.begin(), elements.end());
  return SubgroupSet::from_members(n, std::move(elements));
}

SubgroupSet intersect(const SubgroupSet& a, const SubgroupSet& b) {
  if (a.parent_order() != b.parent_order())
    throw argument_error("intersect: mismatched parent orders");
  std::vector<int> common;
  for (int m : a.members())
    if (b.contains(m)) common.push_back(m);
  return SubgroupSet::from_members(a.parent_order(), std::move(common));
}

SubgroupSet set_product(const FiniteGroup& g, const SubgroupSet& h,
                        const SubgroupSet& n) {
  if (h.parent_order() != g.order() || n.parent_order() != g.order())
    throw argument_error("set_product: subgroup parent mismatch");
  std::vector<char> in(g.order(), 0);
  std::vector<int> elements;
  for (int a : h.members())
    for (int b : n.members()) {
      int p = g.mul_unchecked(a, b);
      if (!in[p]) {
        in[p] = 1;
        elements.push_back(p);
      }
    }
  std::sort(elements.begin(), elements.end());
  SubgroupSet result =
      SubgroupSet::from_members(g.order(), std::move(elements));
  if (!is_subgroup(g, result))
    throw argument_error(
        "set_product: HN is not closed (N is not normalized by H)");
  return result;
}

Rational subgroup_measure(const FiniteGroup& g, const SubgroupSet& h) {
  if (h.parent_order() != g.order())
    throw argument_error("subgroup_measure: parent mismatch");
  if (!is_subgroup(g, h))
    throw argument_error("subgroup_measure: set is not a subgroup");
  return Rational(h.size(), g.order());
}

}  // namespace nildeg
