#include "nildeg/catalog.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nildeg/errors.hpp"
#include "nildeg/families.hpp"
#include "nildeg/series.hpp"
#include "nildeg/spec_io.hpp"

namespace nildeg {

namespace {

CatalogEntry plain(GroupPtr g) { return CatalogEntry{g->name(), g, {}}; }

std::vector<CatalogEntry> build_default_catalog() {
  std::vector<CatalogEntry> out;

  for (int m = 1; m <= 16; ++m) out.push_back(plain(cyclic(m)));

  // Non-cyclic abelian groups of order <= 16, by invariant factors.
  for (const auto& inv : std::vector<std::vector<int>>{
           {2, 2},
           {2, 4},
           {2, 2, 2},
           {3, 3},
           {2, 6},
           {2, 8},
           {4, 4},
           {2, 2, 4},
           {2, 2, 2, 2}})
    out.push_back(plain(abelian(inv)));

  // Non-abelian, one per isomorphism type reachable from the families
  // (D3 is S3, and the order-8 extraspecial groups are D4 and Q8).
  out.push_back(plain(symmetric(3)));
  for (int m = 4; m <= 8; ++m) out.push_back(plain(dihedral(m)));
  for (int m = 2; m <= 4; ++m) out.push_back(plain(quaternion_generalized(m)));

  out.push_back(plain(symmetric(4)));

  {
    GroupPtr q8 = quaternion_generalized(2);
    GroupPtr g = direct_product(*q8, *cyclic(2));
    std::vector<int> factor;
    for (int a = 0; a < 8; ++a) factor.push_back(2 * a);
    out.push_back(CatalogEntry{
        g->name(), g,
        {{"Q8 factor", SubgroupSet::from_members(g->order(), factor)}}});
  }
  {
    GroupPtr d4 = dihedral(4);
    GroupPtr g = direct_product(*d4, *cyclic(3));
    std::vector<int> factor;
    for (int a = 0; a < 8; ++a) factor.push_back(3 * a);
    out.push_back(CatalogEntry{
        g->name(), g,
        {{"D4 factor", SubgroupSet::from_members(g->order(), factor)}}});
  }

  out.push_back(plain(heisenberg(3)));
  out.push_back(plain(extraspecial(2, 2, ExtraspecialType::plus_type)));
  out.push_back(plain(extraspecial(2, 2, ExtraspecialType::minus_type)));
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& default_catalog() {
  static const std::vector<CatalogEntry> catalog = build_default_catalog();
  return catalog;
}

std::vector<std::pair<std::string, SubgroupSet>> subgroup_sample(
    const CatalogEntry& e) {
  const FiniteGroup& g = *e.group;
  std::vector<std::pair<std::string, SubgroupSet>> out;
  auto add = [&](const std::string& name, const SubgroupSet& s) {
    for (const auto& [have_name, have] : out)
      if (have == s) return;
    out.emplace_back(name, s);
  };

  add("1", SubgroupSet::trivial(g.order()));
  add("Z(G)", center(g));
  add("G'", derived_subgroup(g));
  add("Z_2(G)", nth_center(g, 2));
  {
    int best = 0;
    for (int x = 1; x < g.order(); ++x)
      if (g.element_order(x) > g.element_order(best)) best = x;
    const int seed[] = {best};
    std::ostringstream name;
    name << "<" << best << ">";
    add(name.str(), generated_subgroup(g, seed));
  }
  for (const auto& [name, s] : e.pinned) add(name, s);
  add("G", SubgroupSet::full(g.order()));
  return out;
}

std::vector<CatalogEntry> load_catalog_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot read catalog file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();

  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& err) {
    throw parse_error("catalog file " + path + ": " + err.what());
  }
  if (!doc.is_array())
    throw parse_error("catalog file must be a JSON array of group specs");

  std::vector<CatalogEntry> out;
  for (const auto& elem : doc) {
    GroupPtr g = realize_group(parse_spec(elem.dump()));
    out.push_back(plain(g));
  }
  return out;
}

}  // namespace nildeg
