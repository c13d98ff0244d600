#include "nildeg/families.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "nildeg/errors.hpp"
#include "nildeg/series.hpp"

namespace nildeg {

namespace {

void check_table_order(long long order, const char* who) {
  if (order > order_cap()) {
    std::ostringstream os;
    os << who << ": order " << order << " exceeds the order cap "
       << order_cap();
    throw capacity_error(os.str());
  }
}

}  // namespace

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

GroupPtr cyclic(int m) {
  if (m < 1) throw argument_error("cyclic: m must be >= 1");
  check_table_order(m, "cyclic");
  std::vector<std::vector<int>> t(static_cast<std::size_t>(m),
                                  std::vector<int>(static_cast<std::size_t>(m)));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % m;
  std::ostringstream name;
  name << "C" << m;
  return make_group(t, name.str());
}

GroupPtr abelian(const std::vector<int>& invariants) {
  for (int m : invariants)
    if (m < 2) throw argument_error("abelian: invariants must be >= 2");
  if (invariants.empty()) return cyclic(1);
  GroupPtr g = cyclic(invariants[0]);
  for (std::size_t i = 1; i < invariants.size(); ++i)
    g = direct_product(*g, *cyclic(invariants[i]));
  return g;
}

GroupPtr dihedral(int m) {
  if (m < 1) throw argument_error("dihedral: m must be >= 1");
  check_table_order(2LL * m, "dihedral");
  const int n = 2 * m;
  // 0..m-1 = r^i, m..2m-1 = s r^(i-m); s r^i s = r^-i.
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n),
                                  std::vector<int>(static_cast<std::size_t>(n)));
  auto R = [&](int i) { return ((i % m) + m) % m; };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      t[i][j] = R(i + j);              // r^i r^j
      t[i][m + j] = m + R(j - i);      // r^i (s r^j) = s r^(j-i)
      t[m + i][j] = m + R(i + j);      // (s r^i) r^j
      t[m + i][m + j] = R(j - i);      // (s r^i)(s r^j) = r^(j-i)
    }
  std::ostringstream name;
  name << "D" << m;
  return make_group(t, name.str());
}

GroupPtr quaternion_generalized(int m) {
  if (m < 1) throw argument_error("quaternion_generalized: m must be >= 1");
  check_table_order(4LL * m, "quaternion_generalized");
  const int two_m = 2 * m;
  const int n = 4 * m;
  // Dicyclic: a of order 2m, y with y^2 = a^m, y a y^-1 = a^-1.
  // Index of a^i y^e is e*2m + i.
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n),
                                  std::vector<int>(static_cast<std::size_t>(n)));
  auto A = [&](int i) { return ((i % two_m) + two_m) % two_m; };
  for (int i = 0; i < two_m; ++i)
    for (int j = 0; j < two_m; ++j) {
      t[i][j] = A(i + j);                        // a^i a^j
      t[i][two_m + j] = two_m + A(i + j);        // a^i (a^j y)
      t[two_m + i][j] = two_m + A(i - j);        // (a^i y) a^j = a^(i-j) y
      t[two_m + i][two_m + j] = A(i - j + m);    // (a^i y)(a^j y) = a^(i-j+m)
    }
  std::ostringstream name;
  name << "Q" << n;
  return make_group(t, name.str());
}

GroupPtr symmetric(int k) {
  if (k < 1 || k > 6) throw argument_error("symmetric: k must be in 1..6");
  std::vector<int> id(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) id[static_cast<std::size_t>(i)] = i;
  std::vector<std::vector<int>> perms;
  std::vector<int> p = id;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  // Lexicographic order puts the identity first.
  const int n = static_cast<int>(perms.size());
  check_table_order(n, "symmetric");
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < n; ++i) index[perms[static_cast<std::size_t>(i)]] = i;
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n),
                                  std::vector<int>(static_cast<std::size_t>(n)));
  std::vector<int> comp(static_cast<std::size_t>(k));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (int x = 0; x < k; ++x)
        comp[static_cast<std::size_t>(x)] = perms[static_cast<std::size_t>(a)]
            [static_cast<std::size_t>(perms[static_cast<std::size_t>(b)]
                                          [static_cast<std::size_t>(x)])];
      t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = index[comp];
    }
  std::ostringstream name;
  name << "S" << k;
  return make_group(t, name.str());
}

GroupPtr heisenberg(int p) {
  if (!is_prime(p) || p == 2)
    throw argument_error("heisenberg: p must be an odd prime");
  const long long n = 1LL * p * p * p;
  check_table_order(n, "heisenberg");
  // (a,b,c) = [[1,a,c],[0,1,b],[0,0,1]], index a*p^2 + b*p + c.
  // (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b').
  auto idx = [&](int a, int b, int c) { return (a * p + b) * p + c; };
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n),
                                  std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int a2 = 0; a2 < p; ++a2)
          for (int b2 = 0; b2 < p; ++b2)
            for (int c2 = 0; c2 < p; ++c2)
              t[static_cast<std::size_t>(idx(a, b, c))]
               [static_cast<std::size_t>(idx(a2, b2, c2))] =
                   idx((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p);
  std::ostringstream name;
  name << "Heis" << p;
  return make_group(t, name.str());
}

GroupPtr metacyclic_p3(int p) {
  if (!is_prime(p) || p == 2)
    throw argument_error("metacyclic_p3: p must be an odd prime");
  const int p2 = p * p;
  const long long n = 1LL * p2 * p;
  check_table_order(n, "metacyclic_p3");
  // a^i b^j with a^(p^2) = b^p = 1 and b^j a = a^((1+p)^j) b^j; index i*p + j.
  std::vector<int> pow1p(static_cast<std::size_t>(p));
  pow1p[0] = 1;
  for (int j = 1; j < p; ++j)
    pow1p[static_cast<std::size_t>(j)] =
        static_cast<int>((1LL * pow1p[static_cast<std::size_t>(j - 1)] * (1 + p)) % p2);
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n),
                                  std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < p2; ++i)
    for (int j = 0; j < p; ++j)
      for (int k = 0; k < p2; ++k)
        for (int l = 0; l < p; ++l)
          t[static_cast<std::size_t>(i * p + j)]
           [static_cast<std::size_t>(k * p + l)] =
              static_cast<int>(
                  ((i + 1LL * k * pow1p[static_cast<std::size_t>(j)]) % p2) * p +
                  (j + l) % p);
  std::ostringstream name;
  name << "M" << n;
  return make_group(t, name.str());
}

GroupPtr central_product(GroupPtr a, GroupPtr b, const SubgroupSet& za,
                         const SubgroupSet& zb, const GroupMap& match) {
  if (!a || !b) throw argument_error("central_product: null group");
  if (za.parent_order() != a->order() || zb.parent_order() != b->order())
    throw argument_error("central_product: amalgamation subgroup/group mismatch");
  if (!is_subgroup(*a, za) || !is_subgroup(*b, zb))
    throw argument_error("central_product: amalgamation set is not a subgroup");
  for (int z : za.members())
    for (int x = 0; x < a->order(); ++x)
      if (a->mul_unchecked(z, x) != a->mul_unchecked(x, z))
        throw argument_error("central_product: left subgroup is not central");
  for (int z : zb.members())
    for (int x = 0; x < b->order(); ++x)
      if (b->mul_unchecked(z, x) != b->mul_unchecked(x, z))
        throw argument_error("central_product: right subgroup is not central");
  if (za.size() != zb.size())
    throw argument_error("central_product: amalgamation subgroups differ in order");
  if (match.source()->order() != za.size() ||
      match.target()->order() != zb.size())
    throw argument_error("central_product: match does not span the subgroups");
  if (!match.is_bijective())
    throw argument_error("central_product: match is not bijective");

  // Verify the match is an isomorphism in parent terms: standalone index i
  // stands for the i-th sorted member.
  std::vector<int> to_b(static_cast<std::size_t>(a->order()), -1);
  for (int i = 0; i < za.size(); ++i)
    to_b[static_cast<std::size_t>(za.members()[static_cast<std::size_t>(i)])] =
        zb.members()[static_cast<std::size_t>(match.apply(i))];
  if (to_b[0] != 0)
    throw argument_error("central_product: match does not fix the identity");
  for (int z1 : za.members())
    for (int z2 : za.members()) {
      const int lhs = to_b[static_cast<std::size_t>(a->mul_unchecked(z1, z2))];
      const int rhs = b->mul_unchecked(to_b[static_cast<std::size_t>(z1)],
                                       to_b[static_cast<std::size_t>(z2)]);
      if (lhs != rhs)
        throw argument_error("central_product: match is not a homomorphism");
    }

  GroupPtr prod = direct_product(*a, *b);
  std::vector<int> kernel;
  kernel.reserve(static_cast<std::size_t>(za.size()));
  for (int z : za.members())
    kernel.push_back(z * b->order() +
                     b->inv_unchecked(to_b[static_cast<std::size_t>(z)]));
  std::sort(kernel.begin(), kernel.end());
  SubgroupSet n_set = SubgroupSet::from_members(prod->order(), kernel);
  QuotientResult q = quotient(prod, n_set);
  std::string name = !a->name().empty() && !b->name().empty()
                         ? a->name() + "o" + b->name()
                         : q.group->name();
  return with_name(*q.group, name);
}

GroupPtr central_product_over_centers(GroupPtr a, GroupPtr b) {
  if (!a || !b) throw argument_error("central_product_over_centers: null group");
  SubgroupSet za = center(*a);
  SubgroupSet zb = center(*b);
  if (za.size() != zb.size())
    throw argument_error("central_product_over_centers: centers differ in order");
  SubgroupGroup ga = subgroup_as_group(a, za, "Z(" + a->name() + ")");
  SubgroupGroup gb = subgroup_as_group(b, zb, "Z(" + b->name() + ")");
  const int m = ga.group->order();
  auto find_generator = [&](const FiniteGroup& g) {
    for (int x = 0; x < g.order(); ++x)
      if (g.element_order(x) == g.order()) return x;
    return -1;
  };
  const int gen_a = find_generator(*ga.group);
  const int gen_b = find_generator(*gb.group);
  if (gen_a < 0 || gen_b < 0)
    throw argument_error("central_product_over_centers: centers are not cyclic");
  // gen_a^k -> gen_b^k extends the generator matching to an isomorphism.
  std::vector<int> images(static_cast<std::size_t>(m), -1);
  int xa = 0, xb = 0;
  for (int k = 0; k < m; ++k) {
    images[static_cast<std::size_t>(xa)] = xb;
    xa = ga.group->mul_unchecked(xa, gen_a);
    xb = gb.group->mul_unchecked(xb, gen_b);
  }
  GroupMap match(ga.group, gb.group, images);
  return central_product(a, b, za, zb, match);
}

GroupPtr extraspecial(int p, int m, ExtraspecialType type) {
  if (!is_prime(p)) throw argument_error("extraspecial: p must be prime");
  if (m < 1) throw argument_error("extraspecial: m must be >= 1");
  long long order = p;
  for (int i = 0; i < 2 * m; ++i) order *= p;
  check_table_order(order, "extraspecial");
  auto plus_factor = [&]() {
    return p == 2 ? dihedral(4) : heisenberg(p);
  };
  auto minus_factor = [&]() {
    return p == 2 ? quaternion_generalized(2) : metacyclic_p3(p);
  };
  GroupPtr g = type == ExtraspecialType::minus_type && m == 1 ? minus_factor()
                                                              : plus_factor();
  for (int i = 2; i <= m; ++i) {
    GroupPtr factor = type == ExtraspecialType::minus_type && i == m
                          ? minus_factor()
                          : plus_factor();
    g = central_product_over_centers(g, factor);
  }
  std::ostringstream name;
  name << "ES(" << p << "," << m << ","
       << (type == ExtraspecialType::plus_type ? "+" : "-") << ")";
  return with_name(*g, name.str());
}

GroupPtr group_from_permutations(int degree,
                                 const std::vector<std::vector<int>>& generators,
                                 const std::string& name) {
  if (degree < 1) throw argument_error("group_from_permutations: degree must be >= 1");
  for (const auto& gen : generators) {
    if (static_cast<int>(gen.size()) != degree)
      throw argument_error("group_from_permutations: generator length != degree");
    std::vector<char> hit(static_cast<std::size_t>(degree), 0);
    for (int v : gen) {
      if (v < 0 || v >= degree)
        throw argument_error("group_from_permutations: image out of range");
      if (hit[static_cast<std::size_t>(v)])
        throw argument_error("group_from_permutations: generator is not a bijection");
      hit[static_cast<std::size_t>(v)] = 1;
    }
  }
  std::vector<int> id(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) id[static_cast<std::size_t>(i)] = i;
  std::map<std::vector<int>, int> index;  // lex order; identity sorts first
  std::vector<std::vector<int>> elements{id};
  index[id] = 0;
  std::vector<std::vector<int>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& x : frontier)
      for (const auto& gen : generators) {
        std::vector<int> prod(static_cast<std::size_t>(degree));
        for (int i = 0; i < degree; ++i)
          prod[static_cast<std::size_t>(i)] =
              x[static_cast<std::size_t>(gen[static_cast<std::size_t>(i)])];
        if (index.emplace(prod, static_cast<int>(elements.size())).second) {
          elements.push_back(prod);
          next.push_back(std::move(prod));
          if (static_cast<int>(elements.size()) > order_cap()) {
            std::ostringstream os;
            os << "group_from_permutations: closure exceeds the order cap "
               << order_cap();
            throw capacity_error(os.str());
          }
        }
      }
    frontier = std::move(next);
  }
  // Re-sort lexicographically and build the table on the sorted indexing.
  std::sort(elements.begin(), elements.end());
  for (int i = 0; i < static_cast<int>(elements.size()); ++i)
    index[elements[static_cast<std::size_t>(i)]] = i;
  const int n = static_cast<int>(elements.size());
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n),
                                  std::vector<int>(static_cast<std::size_t>(n)));
  std::vector<int> comp(static_cast<std::size_t>(degree));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (int i = 0; i < degree; ++i)
        comp[static_cast<std::size_t>(i)] = elements[static_cast<std::size_t>(a)]
            [static_cast<std::size_t>(elements[static_cast<std::size_t>(b)]
                                          [static_cast<std::size_t>(i)])];
      auto it = index.find(comp);
      if (it == index.end())
        throw validation_error("group_from_permutations: closure was incomplete");
      t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = it->second;
    }
  return make_group(t, name);
}

}  // namespace nildeg
