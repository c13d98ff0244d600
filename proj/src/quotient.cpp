#include "nildeg/quotient.hpp"

#include <algorithm>
#include <sstream>

#include "nildeg/errors.hpp"

namespace nildeg {

GroupMap::GroupMap(GroupPtr source, GroupPtr target, std::vector<int> images)
    : source_(std::move(source)),
      target_(std::move(target)),
      images_(std::move(images)) {
  if (!source_ || !target_) throw argument_error("GroupMap: null group");
  if (static_cast<int>(images_.size()) != source_->order())
    throw argument_error("GroupMap: image list size != source order");
  for (int y : images_)
    if (y < 0 || y >= target_->order())
      throw argument_error("GroupMap: image out of range");
}

int GroupMap::apply(int x) const {
  if (x < 0 || x >= source_->order())
    throw argument_error("GroupMap::apply: element out of range");
  return images_[static_cast<std::size_t>(x)];
}

bool GroupMap::is_homomorphism() const {
  const int n = source_->order();
  if (images_[0] != target_->identity()) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int lhs = images_[static_cast<std::size_t>(source_->mul_unchecked(a, b))];
      const int rhs = target_->mul_unchecked(images_[static_cast<std::size_t>(a)],
                                             images_[static_cast<std::size_t>(b)]);
      if (lhs != rhs) return false;
    }
  return true;
}

bool GroupMap::is_bijective() const {
  if (source_->order() != target_->order()) return false;
  std::vector<char> hit(images_.size(), 0);
  for (int y : images_) {
    if (hit[static_cast<std::size_t>(y)]) return false;
    hit[static_cast<std::size_t>(y)] = 1;
  }
  return true;
}

GroupMap GroupMap::inverse() const {
  if (!is_bijective()) throw argument_error("GroupMap::inverse: map is not bijective");
  std::vector<int> inv(images_.size());
  for (int x = 0; x < static_cast<int>(images_.size()); ++x)
    inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(x)])] = x;
  return GroupMap(target_, source_, std::move(inv));
}

GroupMap GroupMap::identity(GroupPtr g) {
  if (!g) throw argument_error("GroupMap::identity: null group");
  std::vector<int> ids(static_cast<std::size_t>(g->order()));
  for (int i = 0; i < g->order(); ++i) ids[static_cast<std::size_t>(i)] = i;
  return GroupMap(g, g, std::move(ids));
}

GroupMap GroupMap::then(const GroupMap& next) const {
  if (target_->order() != next.source_->order())
    throw argument_error("GroupMap::then: middle orders disagree");
  std::vector<int> composed(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    composed[i] = next.images_[static_cast<std::size_t>(images_[i])];
  return GroupMap(source_, next.target_, std::move(composed));
}

QuotientResult quotient(GroupPtr g, const SubgroupSet& n) {
  if (!g) throw argument_error("quotient: null group");
  if (n.parent_order() != g->order())
    throw argument_error("quotient: subgroup belongs to a different group");
  if (!is_normal(*g, n)) throw argument_error("quotient: subgroup is not normal");

  const int order = g->order();
  std::vector<int> coset_of(static_cast<std::size_t>(order), -1);
  std::vector<int> reps;
  // Scanning x in increasing order assigns coset numbers by minimal
  // representative; x = 0 lands in coset 0 = N.
  for (int x = 0; x < order; ++x) {
    if (coset_of[static_cast<std::size_t>(x)] >= 0) continue;
    const int idx = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int m : n.members())
      coset_of[static_cast<std::size_t>(g->mul_unchecked(x, m))] = idx;
  }

  const int q = static_cast<int>(reps.size());
  std::vector<std::vector<int>> table(static_cast<std::size_t>(q),
                                      std::vector<int>(static_cast<std::size_t>(q)));
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          coset_of[static_cast<std::size_t>(g->mul_unchecked(
              reps[static_cast<std::size_t>(a)], reps[static_cast<std::size_t>(b)]))];

  std::ostringstream name;
  name << g->name() << "/N" << n.size();
  QuotientResult out;
  out.group = make_group(table, name.str());
  out.coset_of = std::move(coset_of);
  out.reps = std::move(reps);
  return out;
}

SubgroupGroup subgroup_as_group(GroupPtr g, const SubgroupSet& h,
                                const std::string& name) {
  if (!g) throw argument_error("subgroup_as_group: null group");
  if (h.parent_order() != g->order())
    throw argument_error("subgroup_as_group: subgroup belongs to a different group");
  if (!is_subgroup(*g, h))
    throw argument_error("subgroup_as_group: member set is not a subgroup");

  const auto& mem = h.members();  // sorted, mem[0] == 0
  const int k = h.size();
  std::vector<int> from_parent(static_cast<std::size_t>(g->order()), -1);
  for (int i = 0; i < k; ++i) from_parent[static_cast<std::size_t>(mem[static_cast<std::size_t>(i)])] = i;

  std::vector<std::vector<int>> table(static_cast<std::size_t>(k),
                                      std::vector<int>(static_cast<std::size_t>(k)));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          from_parent[static_cast<std::size_t>(g->mul_unchecked(
              mem[static_cast<std::size_t>(a)], mem[static_cast<std::size_t>(b)]))];

  SubgroupGroup out;
  out.group = make_group(table, name);
  out.to_parent.assign(mem.begin(), mem.end());
  out.from_parent = std::move(from_parent);
  return out;
}

}  // namespace nildeg
