#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace nildeg {

using ElementIndex = int;

// A finite group as a multiplication table over indices 0..order-1 with the
// identity pinned at index 0. Construction verifies the group axioms
// (identity, Latin square, associativity, inverses) and caches inverses and
// element orders. Instances are immutable and safe to share across threads.
class FiniteGroup {
 public:
  // Validates the table and throws validation_error naming the first failing
  // row, column, or triple. Associativity is checked by full triple scan for
  // order <= 256 and by Light's generator test plus seeded random triples
  // above that.
  explicit FiniteGroup(const std::vector<std::vector<int>>& table,
                       std::string name = "");

  int order() const { return order_; }
  const std::string& name() const { return name_; }

  int identity() const { return 0; }

  // table[a][b]; throws argument_error on out-of-range indices.
  int mul(int a, int b) const {
    check_index(a);
    check_index(b);
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }

  int inv(int a) const {
    check_index(a);
    return inverses_[a];
  }

  int element_order(int a) const {
    check_index(a);
    return element_orders_[a];
  }

  const std::vector<int>& element_orders() const { return element_orders_; }

  // [x,y] = x^-1 y^-1 x y.
  int commutator(int x, int y) const;

  // Left-normed fold [x1,...,xk] = [[x1,...,x(k-1)], xk]; a singleton list is
  // its own value. Throws argument_error on an empty list.
  int iterated_commutator(std::span<const int> xs) const;

  // x^k for k >= 0.
  int power(int x, int k) const;

  // g^-1 x g.
  int conjugate(int x, int g) const {
    return mul(mul(inv(g), x), g);
  }

  bool is_abelian() const { return abelian_; }

  // Unchecked table lookup for hot loops; callers guarantee valid indices.
  int mul_unchecked(int a, int b) const {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }
  int inv_unchecked(int a) const { return inverses_[a]; }

 private:
  void check_index(int a) const;
  void validate() const;

  int order_ = 0;
  std::string name_;
  std::vector<std::uint16_t> table_;  // flattened order x order
  std::vector<int> inverses_;
  std::vector<int> element_orders_;
  bool abelian_ = false;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr make_group(const std::vector<std::vector<int>>& table,
                    std::string name = "");

// Componentwise product on pairs (a,b) encoded as a*|B|+b. Throws
// capacity_error when |A|*|B| exceeds the order cap.
GroupPtr direct_product(const FiniteGroup& a, const FiniteGroup& b);

// Same table under a different label.
GroupPtr with_name(const FiniteGroup& g, std::string name);

// Maximum order for table materialization (default 4096). Tables cost
// O(order^2) memory, which is the dominant resource at desk scale.
int order_cap();
void set_order_cap(int cap);

}  // namespace nildeg
