#include "nildeg/isoclinism.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "nildeg/errors.hpp"
#include "nildeg/series.hpp"

namespace nildeg {

namespace {

constexpr std::size_t kMaxViolations = 8;

std::string group_label(const FiniteGroup& g) {
  if (!g.name().empty()) return g.name();
  std::ostringstream os;
  os << "group<" << g.order() << ">";
  return os.str();
}

std::vector<int> sorted_order_profile(const FiniteGroup& g) {
  std::vector<int> v = g.element_orders();
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

PairData build_pair(GroupPtr g, const SubgroupSet& h, int n) {
  if (!g) throw argument_error("build_pair: null group");
  if (h.parent_order() != g->order())
    throw argument_error("build_pair: subgroup belongs to a different group");
  if (!is_subgroup(*g, h))
    throw argument_error("build_pair: member set is not a subgroup");
  if (n < 1) throw argument_error("build_pair: n must be >= 1");

  PairData p;
  p.G = g;
  p.H = h;
  p.n = n;
  p.Zn = nth_center(*g, n);
  p.quotientG = quotient(g, p.Zn);
  std::set<int> image;
  for (int x : h.members())
    image.insert(p.quotientG.coset_of[static_cast<std::size_t>(x)]);
  p.H_image = SubgroupSet::from_members(
      p.quotientG.group->order(), std::vector<int>(image.begin(), image.end()));
  p.K = n_commutator_subgroup(*g, h, n);
  p.K_group = subgroup_as_group(g, p.K, group_label(*g) + ":K");
  return p;
}

int gamma_eval(const PairData& p, std::span<const int> coset_tuple) {
  if (static_cast<int>(coset_tuple.size()) != p.n + 1)
    throw argument_error("gamma_eval: tuple length must be n+1");
  for (int i = 0; i < p.n; ++i)
    if (!p.H_image.contains(coset_tuple[static_cast<std::size_t>(i)]))
      throw argument_error("gamma_eval: entry outside the H image");
  const int last = coset_tuple[static_cast<std::size_t>(p.n)];
  if (last < 0 || last >= p.quotientG.group->order())
    throw argument_error("gamma_eval: quotient entry out of range");

  int acc = p.quotientG.reps[static_cast<std::size_t>(coset_tuple[0])];
  for (int i = 1; i <= p.n; ++i)
    acc = p.G->commutator(
        acc,
        p.quotientG.reps[static_cast<std::size_t>(coset_tuple[static_cast<std::size_t>(i)])]);
  const int idx = p.K_group.from_parent[static_cast<std::size_t>(acc)];
  if (idx < 0)
    throw validation_error("gamma_eval: commutator escaped [_nH,G]");
  return idx;
}

WitnessVerdict verify_witness(const PairData& p1, const PairData& p2,
                              const IsoclinismWitness& w) {
  if (p1.n != p2.n || w.n != p1.n)
    throw argument_error("verify_witness: n mismatch between pairs and witness");

  WitnessVerdict verdict;
  auto flag = [&](const std::string& msg) {
    if (verdict.violations.size() < kMaxViolations)
      verdict.violations.push_back(msg);
  };

  const FiniteGroup& q1 = *p1.quotientG.group;
  const FiniteGroup& q2 = *p2.quotientG.group;
  const FiniteGroup& k1 = *p1.K_group.group;
  const FiniteGroup& k2 = *p2.K_group.group;
  const auto& a_img = w.alpha.images();
  const auto& b_img = w.beta.images();

  if (q1.order() != q2.order())
    flag("(i) quotient orders differ");
  if (static_cast<int>(a_img.size()) != q1.order())
    flag("(i) alpha is not defined on all of G1/Zn(G1)");
  if (k1.order() != k2.order())
    flag("(ii) commutator subgroup orders differ");
  if (static_cast<int>(b_img.size()) != k1.order())
    flag("(ii) beta is not defined on all of [_nH1,G1]");
  if (!verdict.violations.empty()) return verdict;

  bool structure_ok = true;
  // (i) alpha: bijective homomorphism carrying the H1 image onto the H2
  // image. Checked against the pairs' own quotient tables.
  {
    std::vector<char> hit(static_cast<std::size_t>(q2.order()), 0);
    for (int y : a_img) {
      if (y < 0 || y >= q2.order() || hit[static_cast<std::size_t>(y)]) {
        flag("(i) alpha is not a bijection");
        structure_ok = false;
        break;
      }
      hit[static_cast<std::size_t>(y)] = 1;
    }
  }
  if (structure_ok && a_img[0] != 0) {
    flag("(i) alpha does not fix the identity coset");
    structure_ok = false;
  }
  if (structure_ok) {
    for (int a = 0; a < q1.order() && structure_ok; ++a)
      for (int b = 0; b < q1.order(); ++b) {
        const int lhs = a_img[static_cast<std::size_t>(q1.mul_unchecked(a, b))];
        const int rhs = q2.mul_unchecked(a_img[static_cast<std::size_t>(a)],
                                         a_img[static_cast<std::size_t>(b)]);
        if (lhs != rhs) {
          std::ostringstream os;
          os << "(i) alpha breaks multiplication at (" << a << ", " << b << ")";
          flag(os.str());
          structure_ok = false;
          break;
        }
      }
  }
  if (structure_ok) {
    std::set<int> mapped;
    for (int x : p1.H_image.members())
      mapped.insert(a_img[static_cast<std::size_t>(x)]);
    const auto& target = p2.H_image.members();
    if (!std::equal(mapped.begin(), mapped.end(), target.begin(), target.end()) ||
        static_cast<int>(mapped.size()) != p2.H_image.size()) {
      flag("(i) alpha does not carry the H1 image onto the H2 image");
      structure_ok = false;
    }
  }

  // (ii) beta: bijective homomorphism between the commutator subgroups.
  {
    std::vector<char> hit(static_cast<std::size_t>(k2.order()), 0);
    bool ok = true;
    for (int y : b_img) {
      if (y < 0 || y >= k2.order() || hit[static_cast<std::size_t>(y)]) {
        flag("(ii) beta is not a bijection");
        structure_ok = ok = false;
        break;
      }
      hit[static_cast<std::size_t>(y)] = 1;
    }
    if (ok && b_img[0] != 0) {
      flag("(ii) beta does not fix the identity");
      structure_ok = false;
    } else if (ok) {
      for (int a = 0; a < k1.order() && ok; ++a)
        for (int b = 0; b < k1.order(); ++b) {
          const int lhs = b_img[static_cast<std::size_t>(k1.mul_unchecked(a, b))];
          const int rhs = k2.mul_unchecked(b_img[static_cast<std::size_t>(a)],
                                           b_img[static_cast<std::size_t>(b)]);
          if (lhs != rhs) {
            std::ostringstream os;
            os << "(ii) beta breaks multiplication at (" << a << ", " << b
               << ")";
            flag(os.str());
            structure_ok = ok = false;
            break;
          }
        }
    }
  }

  // (iii) the diagram, over every tuple in H1_image^n x quotientG1. Only
  // meaningful once (i) and (ii) hold (otherwise alpha may not even map the
  // H image where gamma2 is defined).
  if (structure_ok) {
    const int n = p1.n;
    const auto& hmem = p1.H_image.members();
    const int hs = static_cast<int>(hmem.size());
    std::vector<int> idx(static_cast<std::size_t>(n), 0);
    std::vector<int> t1(static_cast<std::size_t>(n + 1), 0);
    std::vector<int> t2(static_cast<std::size_t>(n + 1), 0);
    bool done = false;
    while (!done) {
      for (int i = 0; i < n; ++i)
        t1[static_cast<std::size_t>(i)] =
            hmem[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
      for (int g = 0; g < q1.order(); ++g) {
        t1[static_cast<std::size_t>(n)] = g;
        for (int i = 0; i <= n; ++i)
          t2[static_cast<std::size_t>(i)] =
              a_img[static_cast<std::size_t>(t1[static_cast<std::size_t>(i)])];
        const int lhs = b_img[static_cast<std::size_t>(gamma_eval(p1, t1))];
        const int rhs = gamma_eval(p2, t2);
        if (lhs != rhs) {
          std::ostringstream os;
          os << "(iii) diagram fails at tuple (";
          for (int i = 0; i <= n; ++i)
            os << t1[static_cast<std::size_t>(i)] << (i < n ? ", " : ")");
          flag(os.str());
          if (verdict.violations.size() >= kMaxViolations) {
            done = true;
            break;
          }
        }
      }
      int pos = n - 1;
      while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == hs) {
        idx[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }

  verdict.valid = verdict.violations.empty();
  return verdict;
}

namespace {

// Backtracking search for bijective homomorphisms A -> B extending partial
// assignments by multiplicative closure. Deterministic: generators are the
// greedy order-descending sequence, candidate images are tried in increasing
// index order, and the first accepted branch (lexicographically least in the
// generator-image tuple) wins.
class IsoSearch {
 public:
  IsoSearch(const FiniteGroup& a, const FiniteGroup& b,
            const std::vector<char>* mask_a, const std::vector<char>* mask_b,
            const SearchConfig& cfg)
      : a_(a),
        b_(b),
        mask_a_(mask_a),
        mask_b_(mask_b),
        cfg_(cfg),
        deadline_(std::chrono::steady_clock::now() +
                  std::chrono::milliseconds(cfg.time_budget_ms)) {
    if (cfg.node_budget < 1 || cfg.time_budget_ms < 1)
      throw argument_error("search budgets must be positive");
    std::vector<int> by_order(static_cast<std::size_t>(a_.order()));
    for (int i = 0; i < a_.order(); ++i)
      by_order[static_cast<std::size_t>(i)] = i;
    std::sort(by_order.begin(), by_order.end(), [&](int x, int y) {
      const int ox = a_.element_order(x), oy = a_.element_order(y);
      return ox != oy ? ox > oy : x < y;
    });
    SubgroupSet span = SubgroupSet::trivial(a_.order());
    for (int x : by_order) {
      if (span.size() == a_.order()) break;
      if (span.contains(x)) continue;
      gens_.push_back(x);
      std::vector<int> seeds = gens_;
      span = generated_subgroup(a_, seeds);
    }
    cent_a_ = centralizer_sizes(a_);
    cent_b_ = centralizer_sizes(b_);
  }

  bool run(const std::function<bool(const std::vector<int>&)>& on_candidate) {
    State st;
    st.img.assign(static_cast<std::size_t>(a_.order()), -1);
    st.hit.assign(static_cast<std::size_t>(b_.order()), 0);
    st.img[0] = 0;
    st.hit[0] = 1;
    st.known.push_back(0);
    return dfs(st, 0, on_candidate);
  }

  long long nodes() const { return nodes_; }
  bool exhausted() const { return !stopped_; }

 private:
  struct State {
    std::vector<int> img;
    std::vector<char> hit;
    std::vector<int> known;
  };

  static std::vector<int> centralizer_sizes(const FiniteGroup& g) {
    std::vector<int> out(static_cast<std::size_t>(g.order()), 0);
    for (int x = 0; x < g.order(); ++x) {
      int c = 0;
      for (int y = 0; y < g.order(); ++y)
        if (g.mul_unchecked(x, y) == g.mul_unchecked(y, x)) ++c;
      out[static_cast<std::size_t>(x)] = c;
    }
    return out;
  }

  bool element_compatible(int x, int y) const {
    if (a_.element_order(x) != b_.element_order(y)) return false;
    if (cent_a_[static_cast<std::size_t>(x)] !=
        cent_b_[static_cast<std::size_t>(y)])
      return false;
    if (mask_a_ && (*mask_a_)[static_cast<std::size_t>(x)] !=
                       (*mask_b_)[static_cast<std::size_t>(y)])
      return false;
    return true;
  }

  bool budget_left() {
    ++nodes_;
    if (nodes_ > cfg_.node_budget ||
        std::chrono::steady_clock::now() > deadline_) {
      stopped_ = true;
    }
    return !stopped_;
  }

  // Assign img[x] = y and close under multiplication; false on conflict.
  bool close(State& st, int x, int y) {
    if (!budget_left()) return false;
    std::vector<std::pair<int, int>> pending{{x, y}};
    while (!pending.empty()) {
      auto [a, b] = pending.back();
      pending.pop_back();
      const int cur = st.img[static_cast<std::size_t>(a)];
      if (cur == b) continue;
      if (cur != -1 || st.hit[static_cast<std::size_t>(b)]) return false;
      if (cfg_.use_invariant_pruning && !element_compatible(a, b)) return false;
      st.img[static_cast<std::size_t>(a)] = b;
      st.hit[static_cast<std::size_t>(b)] = 1;
      st.known.push_back(a);
      for (int k : st.known) {
        const int kb = st.img[static_cast<std::size_t>(k)];
        pending.emplace_back(a_.mul_unchecked(a, k), b_.mul_unchecked(b, kb));
        pending.emplace_back(a_.mul_unchecked(k, a), b_.mul_unchecked(kb, b));
      }
    }
    return true;
  }

  bool dfs(const State& st, std::size_t depth,
           const std::function<bool(const std::vector<int>&)>& on_candidate) {
    if (stopped_) return false;
    if (depth == gens_.size()) {
      if (static_cast<int>(st.known.size()) != a_.order()) return false;
      return on_candidate(st.img);
    }
    const int g = gens_[depth];
    for (int y = 0; y < b_.order(); ++y) {
      if (st.hit[static_cast<std::size_t>(y)]) continue;
      if (cfg_.use_invariant_pruning && !element_compatible(g, y)) continue;
      State branch = st;
      if (!close(branch, g, y)) {
        if (stopped_) return false;
        continue;
      }
      if (dfs(branch, depth + 1, on_candidate)) return true;
      if (stopped_) return false;
    }
    return false;
  }

  const FiniteGroup& a_;
  const FiniteGroup& b_;
  const std::vector<char>* mask_a_;
  const std::vector<char>* mask_b_;
  SearchConfig cfg_;
  std::chrono::steady_clock::time_point deadline_;
  std::vector<int> gens_;
  std::vector<int> cent_a_;
  std::vector<int> cent_b_;
  long long nodes_ = 0;
  bool stopped_ = false;
};

// Beta is never searched: the diagram forces it on every gamma value, and
// multiplicative closure extends it to all of [_nH1,G1]. Returns nothing if
// the forced assignment is not single-valued, not injective, or fails to
// close into an isomorphism.
std::optional<IsoclinismWitness> force_beta(const PairData& p1,
                                            const PairData& p2,
                                            const std::vector<int>& alpha_img) {
  const FiniteGroup& k1 = *p1.K_group.group;
  const FiniteGroup& k2 = *p2.K_group.group;
  const int k = k1.order();
  std::vector<int> beta(static_cast<std::size_t>(k), -1);
  std::vector<char> hit(static_cast<std::size_t>(k), 0);
  std::vector<int> known;

  auto assign = [&](int a, int b) {
    // Assign and close multiplicatively, exactly as the alpha search does.
    std::vector<std::pair<int, int>> pending{{a, b}};
    while (!pending.empty()) {
      auto [x, y] = pending.back();
      pending.pop_back();
      const int cur = beta[static_cast<std::size_t>(x)];
      if (cur == y) continue;
      if (cur != -1 || hit[static_cast<std::size_t>(y)]) return false;
      beta[static_cast<std::size_t>(x)] = y;
      hit[static_cast<std::size_t>(y)] = 1;
      known.push_back(x);
      for (int w : known) {
        const int wy = beta[static_cast<std::size_t>(w)];
        pending.emplace_back(k1.mul_unchecked(x, w), k2.mul_unchecked(y, wy));
        pending.emplace_back(k1.mul_unchecked(w, x), k2.mul_unchecked(wy, y));
      }
    }
    return true;
  };
  if (!assign(0, 0)) return std::nullopt;

  // The diagram only makes sense when alpha carries the H-image into the
  // H-image; a candidate that fails that is not a witness, not an error.
  for (int c : p1.H_image.members())
    if (!p2.H_image.contains(alpha_img[static_cast<std::size_t>(c)]))
      return std::nullopt;

  const int n = p1.n;
  const auto& hmem = p1.H_image.members();
  const int hs = static_cast<int>(hmem.size());
  const int q = p1.quotientG.group->order();
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  std::vector<int> t1(static_cast<std::size_t>(n + 1), 0);
  std::vector<int> t2(static_cast<std::size_t>(n + 1), 0);
  for (;;) {
    for (int i = 0; i < n; ++i)
      t1[static_cast<std::size_t>(i)] =
          hmem[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
    for (int g = 0; g < q; ++g) {
      t1[static_cast<std::size_t>(n)] = g;
      for (int i = 0; i <= n; ++i)
        t2[static_cast<std::size_t>(i)] =
            alpha_img[static_cast<std::size_t>(t1[static_cast<std::size_t>(i)])];
      const int v1 = gamma_eval(p1, t1);
      const int v2 = gamma_eval(p2, t2);
      if (!assign(v1, v2)) return std::nullopt;
    }
    int pos = n - 1;
    while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == hs) {
      idx[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }

  if (static_cast<int>(known.size()) != k) return std::nullopt;

  IsoclinismWitness w{
      p1.n,
      GroupMap(p1.quotientG.group, p2.quotientG.group, alpha_img),
      GroupMap(p1.K_group.group, p2.K_group.group, std::move(beta))};
  return w;
}

}  // namespace

IsoclinismResult find_isoclinism(const PairData& p1, const PairData& p2,
                                 const SearchConfig& cfg) {
  if (p1.n != p2.n)
    throw argument_error("find_isoclinism: pairs have different n");

  IsoclinismResult res;
  auto reject = [&](const std::string& why) {
    res.status = IsoclinismStatus::not_isoclinic;
    res.reason = why;
    return res;
  };

  const FiniteGroup& q1 = *p1.quotientG.group;
  const FiniteGroup& q2 = *p2.quotientG.group;
  if (q1.order() != q2.order()) {
    std::ostringstream os;
    os << "quotient orders differ (" << q1.order() << " vs " << q2.order()
       << ")";
    return reject(os.str());
  }
  if (p1.K.size() != p2.K.size()) {
    std::ostringstream os;
    os << "commutator subgroup orders differ (" << p1.K.size() << " vs "
       << p2.K.size() << ")";
    return reject(os.str());
  }
  if (p1.H_image.size() != p2.H_image.size()) {
    std::ostringstream os;
    os << "H-image orders differ (" << p1.H_image.size() << " vs "
       << p2.H_image.size() << ")";
    return reject(os.str());
  }
  if (sorted_order_profile(q1) != sorted_order_profile(q2))
    return reject("quotient element-order profiles differ");
  if (sorted_order_profile(*p1.K_group.group) !=
      sorted_order_profile(*p2.K_group.group))
    return reject("commutator-subgroup element-order profiles differ");
  {
    auto hprofile = [](const PairData& p) {
      std::vector<int> v;
      v.reserve(static_cast<std::size_t>(p.H_image.size()));
      for (int x : p.H_image.members())
        v.push_back(p.quotientG.group->element_order(x));
      std::sort(v.begin(), v.end());
      return v;
    };
    if (hprofile(p1) != hprofile(p2))
      return reject("H-image element-order profiles differ");
  }

  std::vector<char> mask1(static_cast<std::size_t>(q1.order()), 0);
  std::vector<char> mask2(static_cast<std::size_t>(q2.order()), 0);
  for (int x : p1.H_image.members()) mask1[static_cast<std::size_t>(x)] = 1;
  for (int x : p2.H_image.members()) mask2[static_cast<std::size_t>(x)] = 1;

  IsoSearch search(q1, q2, &mask1, &mask2, cfg);
  std::optional<IsoclinismWitness> found;
  const bool accepted = search.run([&](const std::vector<int>& img) {
    auto w = force_beta(p1, p2, img);
    if (!w) return false;
    if (!verify_witness(p1, p2, *w).valid) return false;
    found = std::move(*w);
    return true;
  });
  res.nodes = search.nodes();
  if (accepted && found) {
    res.status = IsoclinismStatus::isoclinic;
    res.witness = std::move(found);
    return res;
  }
  if (search.exhausted()) {
    res.status = IsoclinismStatus::not_isoclinic;
    res.reason = "search space exhausted without a witness";
  } else {
    std::ostringstream os;
    os << "inconclusive: budget exhausted after " << res.nodes << " nodes";
    res.reason = os.str();
  }
  return res;
}

IsoclinismWitness invert_witness(const IsoclinismWitness& w) {
  return IsoclinismWitness{w.n, w.alpha.inverse(), w.beta.inverse()};
}

IsoclinismWitness compose_witness(const IsoclinismWitness& w12,
                                  const IsoclinismWitness& w23) {
  if (w12.n != w23.n)
    throw argument_error("compose_witness: witnesses have different n");
  return IsoclinismWitness{w12.n, w12.alpha.then(w23.alpha),
                           w12.beta.then(w23.beta)};
}

IsomorphismResult find_group_isomorphism(GroupPtr a, GroupPtr b,
                                         const SearchConfig& cfg) {
  if (!a || !b) throw argument_error("find_group_isomorphism: null group");
  IsomorphismResult res;
  if (a->order() != b->order()) return res;
  if (a->is_abelian() != b->is_abelian()) return res;
  if (sorted_order_profile(*a) != sorted_order_profile(*b)) return res;

  IsoSearch search(*a, *b, nullptr, nullptr, cfg);
  std::optional<GroupMap> found;
  search.run([&](const std::vector<int>& img) {
    found = GroupMap(a, b, img);
    return true;
  });
  res.nodes = search.nodes();
  res.exhausted = search.exhausted();
  res.iso = std::move(found);
  return res;
}

Lemma22Result lemma22_verify(GroupPtr g1, const SubgroupSet& h1,
                             const SubgroupSet& n1, GroupPtr g2,
                             const SubgroupSet& h2, const SubgroupSet& n2,
                             const GroupMap& alpha, const GroupMap& beta,
                             int n) {
  if (!g1 || !g2) throw argument_error("lemma22_verify: null group");
  if (n < 1) throw argument_error("lemma22_verify: n must be >= 1");
  auto check_side = [&](const FiniteGroup& g, const SubgroupSet& h,
                        const SubgroupSet& nset, const char* side) {
    if (h.parent_order() != g.order() || nset.parent_order() != g.order())
      throw argument_error(std::string("lemma22_verify: ") + side +
                           " subgroup/group mismatch");
    if (!is_subgroup(g, h))
      throw argument_error(std::string("lemma22_verify: ") + side +
                           " H is not a subgroup");
    if (!is_subgroup(g, nset) || !is_normal(g, nset))
      throw argument_error(std::string("lemma22_verify: ") + side +
                           " N is not a normal subgroup");
    const SubgroupSet zn = nth_center(g, n);
    for (int x : nset.members())
      if (!zn.contains(x))
        throw argument_error(std::string("lemma22_verify: ") + side +
                             " N is not contained in Z_n(G)");
  };
  check_side(*g1, h1, n1, "left");
  check_side(*g2, h2, n2, "right");

  Lemma22Result out;
  auto flag = [&](const std::string& msg) {
    if (out.violations.size() < kMaxViolations) out.violations.push_back(msg);
  };

  const QuotientResult q1 = quotient(g1, n1);
  const QuotientResult q2 = quotient(g2, n2);
  if (alpha.source()->order() != q1.group->order() ||
      alpha.target()->order() != q2.group->order())
    throw argument_error("lemma22_verify: alpha does not match G1/N1 -> G2/N2");
  const auto& a_img = alpha.images();

  // alpha must be an isomorphism of the N-quotients.
  {
    std::vector<char> hit(static_cast<std::size_t>(q2.group->order()), 0);
    bool bij = true;
    for (int y : a_img) {
      if (hit[static_cast<std::size_t>(y)]) {
        bij = false;
        break;
      }
      hit[static_cast<std::size_t>(y)] = 1;
    }
    if (!bij) flag("alpha is not a bijection");
  }
  for (int a = 0; a < q1.group->order() && out.violations.empty(); ++a)
    for (int b = 0; b < q1.group->order(); ++b) {
      const int lhs = a_img[static_cast<std::size_t>(q1.group->mul_unchecked(a, b))];
      const int rhs = q2.group->mul_unchecked(a_img[static_cast<std::size_t>(a)],
                                              a_img[static_cast<std::size_t>(b)]);
      if (lhs != rhs) {
        flag("alpha is not a homomorphism");
        break;
      }
    }

  // alpha(H1/(N1 cap H1)) = H2/(N2 cap H2) as subsets of the quotients.
  {
    std::set<int> img_h1, img_h2;
    for (int x : h1.members())
      img_h1.insert(a_img[static_cast<std::size_t>(
          q1.coset_of[static_cast<std::size_t>(x)])]);
    for (int x : h2.members())
      img_h2.insert(q2.coset_of[static_cast<std::size_t>(x)]);
    if (img_h1 != img_h2)
      flag("alpha does not carry H1/(N1 cap H1) onto H2/(N2 cap H2)");
  }

  const PairData p1 = build_pair(g1, h1, n);
  const PairData p2 = build_pair(g2, h2, n);
  if (beta.source()->order() != p1.K_group.group->order() ||
      beta.target()->order() != p2.K_group.group->order())
    throw argument_error(
        "lemma22_verify: beta does not match [_nH1,G1] -> [_nH2,G2]");
  const auto& b_img = beta.images();
  {
    const FiniteGroup& k1 = *p1.K_group.group;
    const FiniteGroup& k2 = *p2.K_group.group;
    std::vector<char> hit(static_cast<std::size_t>(k2.order()), 0);
    bool ok = true;
    for (int y : b_img) {
      if (hit[static_cast<std::size_t>(y)]) {
        ok = false;
        break;
      }
      hit[static_cast<std::size_t>(y)] = 1;
    }
    if (!ok) flag("beta is not a bijection");
    for (int a = 0; a < k1.order() && ok; ++a)
      for (int b = 0; b < k1.order(); ++b)
        if (b_img[static_cast<std::size_t>(k1.mul_unchecked(a, b))] !=
            k2.mul_unchecked(b_img[static_cast<std::size_t>(a)],
                             b_img[static_cast<std::size_t>(b)])) {
          flag("beta is not a homomorphism");
          ok = false;
          break;
        }
  }

  // Compatibility: beta([h1,...,hn,g]) = [k1,...,kn,g2] for EVERY choice of
  // representatives k_i in H2 meeting alpha's image coset of h_i N1, and
  // every g2 in alpha's image coset of g N1.
  if (out.violations.empty()) {
    // Representative lists per target coset.
    std::vector<std::vector<int>> coset_members(
        static_cast<std::size_t>(q2.group->order()));
    std::vector<std::vector<int>> coset_members_h(
        static_cast<std::size_t>(q2.group->order()));
    for (int x = 0; x < g2->order(); ++x) {
      coset_members[static_cast<std::size_t>(q2.coset_of[static_cast<std::size_t>(x)])]
          .push_back(x);
      if (h2.contains(x))
        coset_members_h[static_cast<std::size_t>(
                            q2.coset_of[static_cast<std::size_t>(x)])]
            .push_back(x);
    }

    const auto& hmem = h1.members();
    const int hs = static_cast<int>(hmem.size());
    std::vector<int> idx(static_cast<std::size_t>(n), 0);
    std::vector<int> tuple(static_cast<std::size_t>(n), 0);
    bool stop = false;
    while (!stop) {
      for (int i = 0; i < n; ++i)
        tuple[static_cast<std::size_t>(i)] =
            hmem[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
      for (int g = 0; g < g1->order() && !stop; ++g) {
        int c = tuple[0];
        for (int i = 1; i < n; ++i)
          c = g1->commutator(c, tuple[static_cast<std::size_t>(i)]);
        c = g1->commutator(c, g);
        const int k1_idx = p1.K_group.from_parent[static_cast<std::size_t>(c)];
        const int expected =
            p2.K_group.to_parent[static_cast<std::size_t>(
                b_img[static_cast<std::size_t>(k1_idx)])];

        // Enumerate all representative choices on the right.
        std::vector<const std::vector<int>*> pools;
        pools.reserve(static_cast<std::size_t>(n + 1));
        for (int i = 0; i < n; ++i) {
          const int target_coset = a_img[static_cast<std::size_t>(
              q1.coset_of[static_cast<std::size_t>(tuple[static_cast<std::size_t>(i)])])];
          pools.push_back(&coset_members_h[static_cast<std::size_t>(target_coset)]);
          if (pools.back()->empty()) {
            flag("alpha image coset of an H1 element misses H2");
            stop = true;
          }
        }
        if (stop) break;
        pools.push_back(&coset_members[static_cast<std::size_t>(
            a_img[static_cast<std::size_t>(q1.coset_of[static_cast<std::size_t>(g)])])]);

        std::vector<std::size_t> choice(static_cast<std::size_t>(n + 1), 0);
        for (;;) {
          int c2 = (*pools[0])[choice[0]];
          for (int i = 1; i <= n; ++i)
            c2 = g2->commutator(
                c2, (*pools[static_cast<std::size_t>(i)])[choice[static_cast<std::size_t>(i)]]);
          if (c2 != expected) {
            std::ostringstream os;
            os << "beta compatibility fails at ([";
            for (int i = 0; i < n; ++i)
              os << tuple[static_cast<std::size_t>(i)] << ",";
            os << g << "])";
            flag(os.str());
            stop = true;
            break;
          }
          int pos = n;
          while (pos >= 0 &&
                 ++choice[static_cast<std::size_t>(pos)] ==
                     pools[static_cast<std::size_t>(pos)]->size()) {
            choice[static_cast<std::size_t>(pos)] = 0;
            --pos;
          }
          if (pos < 0) break;
        }
      }
      int pos = n - 1;
      while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == hs) {
        idx[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }

  // Induce alpha' on G1/Z_n(G1) by the lemma's rule and hand back the full
  // witness; well-definedness is verified rather than assumed.
  if (out.violations.empty()) {
    const int qz1 = p1.quotientG.group->order();
    std::vector<int> induced(static_cast<std::size_t>(qz1), -1);
    for (int c = 0; c < qz1; ++c) {
      const int r = p1.quotientG.reps[static_cast<std::size_t>(c)];
      const int image_coset =
          a_img[static_cast<std::size_t>(q1.coset_of[static_cast<std::size_t>(r)])];
      const int rep2 = q2.reps[static_cast<std::size_t>(image_coset)];
      induced[static_cast<std::size_t>(c)] =
          p2.quotientG.coset_of[static_cast<std::size_t>(rep2)];
    }
    bool well_defined = true;
    for (int x = 0; x < g1->order() && well_defined; ++x) {
      const int image_coset =
          a_img[static_cast<std::size_t>(q1.coset_of[static_cast<std::size_t>(x)])];
      const int rep2 = q2.reps[static_cast<std::size_t>(image_coset)];
      const int via_x = p2.quotientG.coset_of[static_cast<std::size_t>(rep2)];
      if (via_x !=
          induced[static_cast<std::size_t>(
              p1.quotientG.coset_of[static_cast<std::size_t>(x)])]) {
        flag("induced map on G1/Z_n(G1) is not well defined");
        well_defined = false;
      }
    }
    if (well_defined) {
      IsoclinismWitness w{
          n, GroupMap(p1.quotientG.group, p2.quotientG.group, induced),
          GroupMap(p1.K_group.group, p2.K_group.group, b_img)};
      const WitnessVerdict verdict = verify_witness(p1, p2, w);
      for (const auto& v : verdict.violations) flag("induced witness: " + v);
      if (verdict.valid) out.witness = std::move(w);
    }
  }

  out.valid = out.violations.empty() && out.witness.has_value();
  return out;
}

Lemma23Result lemma23_witness(GroupPtr g, const SubgroupSet& h, int n) {
  if (!g) throw argument_error("lemma23_witness: null group");
  if (n < 1) throw argument_error("lemma23_witness: n must be >= 1");
  if (!is_subgroup(*g, h))
    throw argument_error("lemma23_witness: member set is not a subgroup");
  const SubgroupSet zn = nth_center(*g, n);
  const SubgroupSet product = set_product(*g, h, zn);
  if (product.size() != g->order()) {
    std::ostringstream os;
    os << "lemma23_witness: H Z_" << n << "(G) has order " << product.size()
       << ", not " << g->order() << "; the hypothesis G = HZ_n(G) fails";
    throw argument_error(os.str());
  }

  const std::string base = group_label(*g);
  SubgroupGroup h_standalone =
      subgroup_as_group(g, h, base + ":H" + std::to_string(h.size()));
  PairData pair_hh = build_pair(
      h_standalone.group, SubgroupSet::full(h_standalone.group->order()), n);
  PairData pair_hg = build_pair(g, h, n);
  PairData pair_gg = build_pair(g, SubgroupSet::full(g->order()), n);

  std::vector<std::string> violations;
  auto flag = [&](const std::string& msg) {
    if (violations.size() < kMaxViolations) violations.push_back(msg);
  };

  // alpha for (H,H) -> (H,G): induced by the inclusion H -> G.
  const int q_hh = pair_hh.quotientG.group->order();
  std::vector<int> alpha1(static_cast<std::size_t>(q_hh), -1);
  {
    std::vector<char> hit(
        static_cast<std::size_t>(pair_hg.quotientG.group->order()), 0);
    for (int c = 0; c < q_hh; ++c) {
      const int r = pair_hh.quotientG.reps[static_cast<std::size_t>(c)];
      const int x = h_standalone.to_parent[static_cast<std::size_t>(r)];
      const int img = pair_hg.quotientG.coset_of[static_cast<std::size_t>(x)];
      alpha1[static_cast<std::size_t>(c)] = img;
      if (hit[static_cast<std::size_t>(img)])
        flag("inclusion-induced alpha is not injective");
      hit[static_cast<std::size_t>(img)] = 1;
    }
    if (q_hh != pair_hg.quotientG.group->order())
      flag("H/Z_n(H) and G/Z_n(G) have different orders");
  }

  // beta for (H,H) -> (H,G): the identity on gamma_{n+1}(H), read through
  // the two standalone indexings.
  const int k_hh = pair_hh.K_group.group->order();
  std::vector<int> beta1(static_cast<std::size_t>(k_hh), -1);
  for (int i = 0; i < k_hh; ++i) {
    const int in_h = pair_hh.K_group.to_parent[static_cast<std::size_t>(i)];
    const int in_g = h_standalone.to_parent[static_cast<std::size_t>(in_h)];
    const int j = pair_hg.K_group.from_parent[static_cast<std::size_t>(in_g)];
    if (j < 0)
      throw validation_error(
          "lemma23_witness: [_nH,H] is not contained in [_nH,G]");
    beta1[static_cast<std::size_t>(i)] = j;
  }
  if (k_hh != pair_hg.K_group.group->order())
    flag("[_nH,H] and [_nH,G] have different orders");

  // alpha for (H,G) -> (G,G): both quotients are G/Z_n(G) with identical
  // canonical indexing; beta is the identity on the shared subgroup set.
  const int q_g = pair_hg.quotientG.group->order();
  std::vector<int> alpha2(static_cast<std::size_t>(q_g));
  for (int c = 0; c < q_g; ++c) alpha2[static_cast<std::size_t>(c)] = c;
  const int k_hg = pair_hg.K_group.group->order();
  std::vector<int> beta2(static_cast<std::size_t>(k_hg), -1);
  for (int i = 0; i < k_hg; ++i) {
    const int in_g = pair_hg.K_group.to_parent[static_cast<std::size_t>(i)];
    const int j = pair_gg.K_group.from_parent[static_cast<std::size_t>(in_g)];
    if (j < 0)
      throw validation_error(
          "lemma23_witness: [_nH,G] is not contained in [_nG,G]");
    beta2[static_cast<std::size_t>(i)] = j;
  }
  if (k_hg != pair_gg.K_group.group->order())
    flag("[_nH,G] and gamma_{n+1}(G) have different orders");

  IsoclinismWitness w_hh_hg{
      n,
      GroupMap(pair_hh.quotientG.group, pair_hg.quotientG.group, alpha1),
      GroupMap(pair_hh.K_group.group, pair_hg.K_group.group, beta1)};
  IsoclinismWitness w_hg_gg{
      n,
      GroupMap(pair_hg.quotientG.group, pair_gg.quotientG.group, alpha2),
      GroupMap(pair_hg.K_group.group, pair_gg.K_group.group, beta2)};
  IsoclinismWitness w_hh_gg = compose_witness(w_hh_hg, w_hg_gg);

  const WitnessVerdict v1 = verify_witness(pair_hh, pair_hg, w_hh_hg);
  for (const auto& v : v1.violations) flag("(H,H)~(H,G): " + v);
  const WitnessVerdict v2 = verify_witness(pair_hg, pair_gg, w_hg_gg);
  for (const auto& v : v2.violations) flag("(H,G)~(G,G): " + v);
  const WitnessVerdict v3 = verify_witness(pair_hh, pair_gg, w_hh_gg);
  for (const auto& v : v3.violations) flag("(H,H)~(G,G): " + v);

  const bool all_valid = violations.empty();
  return Lemma23Result{std::move(pair_hh),    std::move(pair_hg),
                       std::move(pair_gg),    std::move(h_standalone),
                       std::move(w_hh_hg),    std::move(w_hg_gg),
                       std::move(w_hh_gg),    all_valid,
                       std::move(violations)};
}

namespace {

nlohmann::json pair_description(const PairData& p) {
  nlohmann::json j;
  j["group"] = group_label(*p.G);
  j["order"] = p.G->order();
  j["subgroup"] = p.H.members();
  j["n_center"] = p.Zn.members();
  j["quotient_order"] = p.quotientG.group->order();
  j["commutator_subgroup"] = p.K.members();
  return j;
}

}  // namespace

std::string witness_to_json(const PairData& p1, const PairData& p2,
                            const IsoclinismWitness& w) {
  nlohmann::json j;
  j["n"] = w.n;
  j["alpha"] = w.alpha.images();
  j["beta"] = w.beta.images();
  j["source"] = pair_description(p1);
  j["target"] = pair_description(p2);
  return j.dump();
}

IsoclinismWitness witness_from_json(const PairData& p1, const PairData& p2,
                                    const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(std::string("witness: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer() ||
      !j.contains("alpha") || !j["alpha"].is_array() || !j.contains("beta") ||
      !j["beta"].is_array())
    throw parse_error("witness: expected {n, alpha, beta, ...}");
  const int n = j["n"].get<int>();
  if (n != p1.n || n != p2.n)
    throw parse_error("witness: n does not match the pairs");
  auto read_array = [](const nlohmann::json& arr, const char* what) {
    std::vector<int> out;
    for (const auto& v : arr) {
      if (!v.is_number_integer())
        throw parse_error(std::string("witness: ") + what +
                          " entries must be integers");
      out.push_back(v.get<int>());
    }
    return out;
  };
  std::vector<int> alpha = read_array(j["alpha"], "alpha");
  std::vector<int> beta = read_array(j["beta"], "beta");
  if (static_cast<int>(alpha.size()) != p1.quotientG.group->order())
    throw parse_error("witness: alpha length does not match G1/Z_n(G1)");
  if (static_cast<int>(beta.size()) != p1.K_group.group->order())
    throw parse_error("witness: beta length does not match [_nH1,G1]");
  for (const char* side : {"source", "target"}) {
    if (!j.contains(side)) continue;
    const nlohmann::json& d = j[side];
    const PairData& p = side == std::string("source") ? p1 : p2;
    if (d.contains("order") && d["order"].is_number_integer() &&
        d["order"].get<int>() != p.G->order())
      throw parse_error(std::string("witness: ") + side +
                        " order does not match the loaded pair");
  }
  return IsoclinismWitness{
      n, GroupMap(p1.quotientG.group, p2.quotientG.group, std::move(alpha)),
      GroupMap(p1.K_group.group, p2.K_group.group, std::move(beta))};
}

}  // namespace nildeg
