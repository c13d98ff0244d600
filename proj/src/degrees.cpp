#include "nildeg/degrees.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <thread>
#include <vector>

#include "nildeg/errors.hpp"
#include "nildeg/rng.hpp"
#include "nildeg/series.hpp"

namespace nildeg {

namespace {

void check_pair(const FiniteGroup& g, const SubgroupSet& h, int n,
                const char* who) {
  if (h.parent_order() != g.order())
    throw argument_error(std::string(who) + ": subgroup/group mismatch");
  if (!is_subgroup(g, h))
    throw argument_error(std::string(who) + ": member set is not a subgroup");
  if (n < 1) throw argument_error(std::string(who) + ": n must be >= 1");
}

void check_budget(const BigInt& work, const BigInt& budget, const char* who) {
  if (work > budget) {
    std::ostringstream os;
    os << who << ": " << work << " tuples exceed the work budget " << budget
       << " (raise NILDEG_BUDGET or use the montecarlo method)";
    throw capacity_error(os.str());
  }
}

// Orbits of H acting on its own members by conjugation. Summing over one
// representative per orbit with the orbit size as weight preserves the
// centralizer sum: conjugating a whole tuple by x permutes H^n and maps
// C_G([h_1,...,h_n]) to a conjugate subgroup of the same size.
std::vector<std::pair<int, long long>> h_class_reps(const FiniteGroup& g,
                                                    const SubgroupSet& h) {
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<std::pair<int, long long>> reps;
  for (int x : h.members()) {
    if (seen[static_cast<std::size_t>(x)]) continue;
    long long size = 0;
    for (int a : h.members()) {
      const int y = g.conjugate(x, a);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        ++size;
      }
    }
    reps.emplace_back(x, size);
  }
  return reps;
}

}  // namespace

BigInt default_work_budget() {
  if (const char* env = std::getenv("NILDEG_BUDGET")) {
    BigInt b;
    try {
      b = BigInt(std::string(env));
    } catch (const std::exception&) {
      throw argument_error("NILDEG_BUDGET is not an integer");
    }
    if (b < 1) throw argument_error("NILDEG_BUDGET must be positive");
    return b;
  }
  return BigInt(1000000000);
}

DegreeResult relative_degree_brute(const FiniteGroup& g, const SubgroupSet& h,
                                   int n, const DegreeOptions& opt) {
  check_pair(g, h, n, "relative_degree_brute");
  const int order = g.order();
  const auto& mem = h.members();
  const int hs = static_cast<int>(mem.size());
  const BigInt total = int_pow(BigInt(hs), n) * order;
  check_budget(total, opt.work_budget, "relative_degree_brute");

  // Odometer over H^n with cached commutator prefixes; the g coordinate is
  // evaluated literally so this stays an independent oracle for Lemma 2.1.
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  std::vector<int> prefix(static_cast<std::size_t>(n), 0);
  auto refresh = [&](int from) {
    for (int i = from; i < n; ++i) {
      const int hi = mem[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
      prefix[static_cast<std::size_t>(i)] =
          i == 0 ? hi
                 : g.commutator(prefix[static_cast<std::size_t>(i - 1)], hi);
    }
  };
  refresh(0);
  unsigned long long favorable = 0;
  for (;;) {
    const int p = prefix[static_cast<std::size_t>(n - 1)];
    for (int a = 0; a < order; ++a)
      if (g.commutator(p, a) == 0) ++favorable;
    int pos = n - 1;
    while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == hs) {
      idx[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    refresh(pos);
  }

  DegreeResult out;
  out.method = DegreeMethod::brute;
  out.favorable = favorable;
  out.total = total;
  out.n = n;
  out.value = Rational(out.favorable, total);
  return out;
}

DegreeResult relative_degree_centralizer(const FiniteGroup& g,
                                         const SubgroupSet& h, int n,
                                         const DegreeOptions& opt) {
  check_pair(g, h, n, "relative_degree_centralizer");
  const int order = g.order();
  const auto& mem = h.members();
  const int hs = static_cast<int>(mem.size());
  const BigInt outer = int_pow(BigInt(hs), n);
  check_budget(outer, opt.work_budget, "relative_degree_centralizer");

  std::vector<long long> csize(static_cast<std::size_t>(order), 0);
  for (int x = 0; x < order; ++x) {
    long long c = 0;
    for (int a = 0; a < order; ++a)
      if (g.mul_unchecked(a, x) == g.mul_unchecked(x, a)) ++c;
    csize[static_cast<std::size_t>(x)] = c;
  }

  // Outermost coordinate: either every h in H, or one representative per
  // H-conjugacy class weighted by class size.
  std::vector<std::pair<int, long long>> heads;
  if (opt.use_symmetry) {
    heads = h_class_reps(g, h);
  } else {
    heads.reserve(static_cast<std::size_t>(hs));
    for (int x : mem) heads.emplace_back(x, 1);
  }

  unsigned long long favorable = 0;
  if (n == 1) {
    for (const auto& [head, weight] : heads)
      favorable += static_cast<unsigned long long>(weight) *
                   static_cast<unsigned long long>(csize[static_cast<std::size_t>(head)]);
  } else {
    std::vector<int> idx(static_cast<std::size_t>(n - 1), 0);
    std::vector<int> prefix(static_cast<std::size_t>(n - 1), 0);
    for (const auto& [head, weight] : heads) {
      std::fill(idx.begin(), idx.end(), 0);
      auto refresh = [&](int from) {
        for (int i = from; i < n - 1; ++i) {
          const int hi = mem[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
          prefix[static_cast<std::size_t>(i)] = g.commutator(
              i == 0 ? head : prefix[static_cast<std::size_t>(i - 1)], hi);
        }
      };
      refresh(0);
      unsigned long long sub = 0;
      for (;;) {
        sub += static_cast<unsigned long long>(
            csize[static_cast<std::size_t>(prefix[static_cast<std::size_t>(n - 2)])]);
        int pos = n - 2;
        while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == hs) {
          idx[static_cast<std::size_t>(pos)] = 0;
          --pos;
        }
        if (pos < 0) break;
        refresh(pos);
      }
      favorable += static_cast<unsigned long long>(weight) * sub;
    }
  }

  DegreeResult out;
  out.method = DegreeMethod::centralizer;
  out.favorable = favorable;
  out.total = outer * order;
  out.n = n;
  out.value = Rational(out.favorable, out.total);
  return out;
}

DegreeResult nilpotency_degree(const FiniteGroup& g, int n, DegreeMethod method,
                               const DegreeOptions& opt) {
  const SubgroupSet full = SubgroupSet::full(g.order());
  switch (method) {
    case DegreeMethod::brute:
      return relative_degree_brute(g, full, n, opt);
    case DegreeMethod::centralizer:
      return relative_degree_centralizer(g, full, n, opt);
    case DegreeMethod::classes:
      break;
  }
  if (n != 1)
    throw argument_error("nilpotency_degree: the classes method needs n = 1");
  const long long k = static_cast<long long>(conjugacy_classes(g).size());
  DegreeResult out;
  out.method = DegreeMethod::classes;
  out.favorable = BigInt(k) * g.order();  // k(G)/|G| over total |G|^2
  out.total = BigInt(g.order()) * g.order();
  out.n = 1;
  out.value = Rational(out.favorable, out.total);
  return out;
}

EstimateResult estimate_degree(const FiniteGroup& g, const SubgroupSet& h,
                               int n, long long samples, std::uint64_t seed,
                               int workers) {
  check_pair(g, h, n, "estimate_degree");
  if (samples < 1) throw argument_error("estimate_degree: samples must be >= 1");
  if (workers < 1) throw argument_error("estimate_degree: workers must be >= 1");

  const auto& mem = h.members();
  const std::uint64_t hs = static_cast<std::uint64_t>(mem.size());
  const std::uint64_t order = static_cast<std::uint64_t>(g.order());
  const int stride = n + 1;

  // Sample s draws its n+1 words from counters s*(n+1)..s*(n+1)+n, so the
  // value of sample s does not depend on which worker evaluates it.
  auto run_range = [&](long long lo, long long hi) {
    long long local = 0;
    for (long long s = lo; s < hi; ++s) {
      const std::uint64_t base = static_cast<std::uint64_t>(s) *
                                 static_cast<std::uint64_t>(stride);
      int acc = mem[static_cast<std::size_t>(
          bounded_index(splitmix64_at(seed, base), hs))];
      for (int i = 1; i < n; ++i)
        acc = g.commutator(
            acc, mem[static_cast<std::size_t>(
                     bounded_index(splitmix64_at(seed, base + i), hs))]);
      const int last = static_cast<int>(
          bounded_index(splitmix64_at(seed, base + n), order));
      if (g.commutator(acc, last) == 0) ++local;
    }
    return local;
  };

  long long hits = 0;
  const int nw = static_cast<int>(std::min<long long>(workers, samples));
  if (nw <= 1) {
    hits = run_range(0, samples);
  } else {
    std::vector<long long> partial(static_cast<std::size_t>(nw), 0);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nw));
    for (int w = 0; w < nw; ++w) {
      const long long lo = samples * w / nw;
      const long long hi = samples * (w + 1) / nw;
      pool.emplace_back([&partial, &run_range, w, lo, hi] {
        partial[static_cast<std::size_t>(w)] = run_range(lo, hi);
      });
    }
    for (auto& t : pool) t.join();
    for (long long p : partial) hits += p;
  }

  EstimateResult out;
  out.samples = samples;
  out.seed = seed;
  out.hits = hits;
  out.estimate = static_cast<double>(hits) / static_cast<double>(samples);
  out.half_width_95 = 1.96 * std::sqrt(out.estimate * (1.0 - out.estimate) /
                                       static_cast<double>(samples));
  return out;
}

Prop25Report check_prop25_bound(const FiniteGroup& g, const DegreeOptions& opt) {
  Prop25Report report;
  const SubgroupSet z = center(g);
  long long q = g.order() / z.size();
  if (q <= 1) return report;
  int p = 2;
  while (q % p != 0) ++p;
  int k = 0;
  long long rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1 || k < 2) return report;

  report.applicable = true;
  report.p = p;
  report.k = k;
  const BigInt pk = int_pow(BigInt(p), k);
  report.bound = Rational(pk + p - 1, pk * p);
  report.degree = nilpotency_degree(g, 1, DegreeMethod::centralizer, opt).value;
  report.tight = report.degree == report.bound;
  return report;
}

}  // namespace nildeg
