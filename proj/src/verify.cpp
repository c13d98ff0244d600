#include "nildeg/verify.hpp"

#include <map>
#include <sstream>

#include <json.hpp>

#include "nildeg/degrees.hpp"
#include "nildeg/errors.hpp"
#include "nildeg/isoclinism.hpp"
#include "nildeg/series.hpp"

namespace nildeg {

namespace {

const std::map<std::string, ClaimId>& claim_table() {
  static const std::map<std::string, ClaimId> table = {
      {"theorem_1_2", ClaimId::theorem_1_2},
      {"theorem_1_3", ClaimId::theorem_1_3},
      {"lemma_2_1_agreement", ClaimId::lemma_2_1_agreement},
      {"lemma_2_3", ClaimId::lemma_2_3},
      {"lemma_2_4", ClaimId::lemma_2_4},
      {"prop_2_5", ClaimId::prop_2_5},
  };
  return table;
}

std::string raw_closed_note(const FiniteGroup& g, const SubgroupSet& h, int n,
                            const std::string& label) {
  const std::size_t raw = n_commutator_values(g, h, n).size();
  const int generated = n_commutator_subgroup(g, h, n).size();
  std::ostringstream os;
  os << label << " raw commutator set "
     << (static_cast<int>(raw) == generated ? "already closed"
                                            : "not closed (generated)");
  return os.str();
}

std::string subgroup_tag(const std::string& name, const SubgroupSet& h) {
  std::ostringstream os;
  os << name << " (order " << h.size() << ")";
  return os.str();
}

// (entry, named subgroup, n) cells with G = H Z_n(G), the shared hypothesis
// of Theorem 1.3 and Lemma 2.3.
struct HypothesisCase {
  const CatalogEntry* entry;
  std::string hname;
  SubgroupSet h;
  int n;
};

std::vector<HypothesisCase> hypothesis_cases(
    const std::vector<CatalogEntry>& catalog, int max_n) {
  std::vector<HypothesisCase> out;
  for (const CatalogEntry& e : catalog) {
    const auto sample = subgroup_sample(e);
    for (int n = 1; n <= max_n; ++n) {
      const SubgroupSet zn = nth_center(*e.group, n);
      for (const auto& [hname, h] : sample)
        if (set_product(*e.group, h, zn).size() == e.group->order())
          out.push_back(HypothesisCase{&e, hname, h, n});
    }
  }
  return out;
}

VerificationReport run_theorem_1_2(const std::vector<CatalogEntry>& catalog) {
  VerificationReport report;
  report.claim = ClaimId::theorem_1_2;

  std::map<std::pair<std::size_t, int>, Rational> degree_cache;
  auto degree_of = [&](std::size_t i, int n) {
    const auto key = std::make_pair(i, n);
    auto it = degree_cache.find(key);
    if (it == degree_cache.end())
      it = degree_cache
               .emplace(key, nilpotency_degree(*catalog[i].group, n,
                                               DegreeMethod::centralizer)
                                 .value)
               .first;
    return it->second;
  };

  auto process = [&](std::size_t i, std::size_t j, int n, const PairData& p1,
                     const PairData& p2) {
    const IsoclinismResult res = find_isoclinism(p1, p2);
    if (res.status == IsoclinismStatus::not_isoclinic) return;
    VerificationCase c;
    std::ostringstream in;
    in << "G1=" << catalog[i].name << ", G2=" << catalog[j].name
       << ", n=" << n;
    c.inputs = in.str();
    c.expected = "d^(n)(G1) = d^(n)(G2) when a witness exists";
    if (res.status == IsoclinismStatus::inconclusive) {
      c.computed = {"search inconclusive: " + res.reason};
      c.pass = false;
      report.cases.push_back(std::move(c));
      return;
    }
    const Rational d1 = degree_of(i, n);
    const Rational d2 = degree_of(j, n);
    c.computed = {"d^(n)(G1) = " + fraction_string(d1),
                  "d^(n)(G2) = " + fraction_string(d2),
                  raw_closed_note(*catalog[i].group, p1.H, n, "G1:"),
                  raw_closed_note(*catalog[j].group, p2.H, n, "G2:")};
    c.pass = d1 == d2;
    report.cases.push_back(std::move(c));
  };

  std::vector<PairData> at_n1;
  at_n1.reserve(catalog.size());
  for (const CatalogEntry& e : catalog)
    at_n1.push_back(build_pair(e.group, SubgroupSet::full(e.group->order()), 1));

  for (std::size_t i = 0; i < catalog.size(); ++i)
    for (std::size_t j = i; j < catalog.size(); ++j)
      process(i, j, 1, at_n1[i], at_n1[j]);
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    const PairData p =
        build_pair(catalog[i].group,
                   SubgroupSet::full(catalog[i].group->order()), 2);
    process(i, i, 2, p, p);
  }
  return report;
}

VerificationReport run_theorem_1_3(const std::vector<CatalogEntry>& catalog) {
  VerificationReport report;
  report.claim = ClaimId::theorem_1_3;
  for (const HypothesisCase& hc : hypothesis_cases(catalog, 2)) {
    VerificationCase c;
    std::ostringstream in;
    in << "G=" << hc.entry->name << ", H=" << subgroup_tag(hc.hname, hc.h)
       << ", n=" << hc.n;
    c.inputs = in.str();
    c.expected = "d^(n)(H) = d^(n)(H,G) = d^(n)(G)";
    const SubgroupGroup hg =
        subgroup_as_group(hc.entry->group, hc.h, hc.entry->name + ":H");
    const Rational dh =
        nilpotency_degree(*hg.group, hc.n, DegreeMethod::centralizer).value;
    const Rational dhg =
        relative_degree_centralizer(*hc.entry->group, hc.h, hc.n).value;
    const Rational dg =
        nilpotency_degree(*hc.entry->group, hc.n, DegreeMethod::centralizer)
            .value;
    c.computed = {"d^(n)(H) = " + fraction_string(dh),
                  "d^(n)(H,G) = " + fraction_string(dhg),
                  "d^(n)(G) = " + fraction_string(dg)};
    c.pass = dh == dhg && dhg == dg;
    report.cases.push_back(std::move(c));
  }
  return report;
}

VerificationReport run_lemma_2_1(const std::vector<CatalogEntry>& catalog) {
  VerificationReport report;
  report.claim = ClaimId::lemma_2_1_agreement;
  for (const CatalogEntry& e : catalog)
    for (int n = 1; n <= 3; ++n) {
      VerificationCase c;
      std::ostringstream in;
      in << "G=" << e.name << ", n=" << n;
      c.inputs = in.str();
      c.expected = n == 1 ? "brute = centralizer = classes"
                          : "brute = centralizer";
      const SubgroupSet full = SubgroupSet::full(e.group->order());
      const Rational brute = relative_degree_brute(*e.group, full, n).value;
      const Rational cent =
          relative_degree_centralizer(*e.group, full, n).value;
      c.computed = {"brute = " + fraction_string(brute),
                    "centralizer = " + fraction_string(cent)};
      c.pass = brute == cent;
      if (n == 1) {
        const Rational classes =
            nilpotency_degree(*e.group, 1, DegreeMethod::classes).value;
        c.computed.push_back("classes = " + fraction_string(classes));
        c.pass = c.pass && brute == classes;
      }
      report.cases.push_back(std::move(c));
    }
  return report;
}

VerificationReport run_lemma_2_3(const std::vector<CatalogEntry>& catalog) {
  VerificationReport report;
  report.claim = ClaimId::lemma_2_3;
  for (const HypothesisCase& hc : hypothesis_cases(catalog, 2)) {
    VerificationCase c;
    std::ostringstream in;
    in << "G=" << hc.entry->name << ", H=" << subgroup_tag(hc.hname, hc.h)
       << ", n=" << hc.n;
    c.inputs = in.str();
    c.expected = "(H,H) ~_n (H,G) ~_n (G,G) with all three witnesses verified";
    const Lemma23Result res = lemma23_witness(hc.entry->group, hc.h, hc.n);
    c.computed = {raw_closed_note(*hc.entry->group, hc.h, hc.n, "(H,G):")};
    if (res.all_valid) {
      c.computed.push_back("3 witnesses verified");
    } else {
      for (const std::string& v : res.violations) c.computed.push_back(v);
    }
    c.pass = res.all_valid;
    report.cases.push_back(std::move(c));
  }
  return report;
}

VerificationReport run_lemma_2_4(const std::vector<CatalogEntry>& catalog) {
  VerificationReport report;
  report.claim = ClaimId::lemma_2_4;
  for (const CatalogEntry& e : catalog)
    for (const auto& [hname, h] : subgroup_sample(e)) {
      VerificationCase c;
      std::ostringstream in;
      in << "G=" << e.name << ", H=" << subgroup_tag(hname, h);
      c.inputs = in.str();
      c.expected = "measure(H) * [G:H] = 1";
      const Rational measure = subgroup_measure(*e.group, h);
      const Rational index(e.group->order(), h.size());
      c.computed = {"measure = " + fraction_string(measure),
                    "[G:H] = " + fraction_string(index),
                    "product = " + fraction_string(measure * index)};
      c.pass = measure * index == 1 && measure == Rational(1) / index;
      report.cases.push_back(std::move(c));
    }
  return report;
}

VerificationReport run_prop_2_5(const std::vector<CatalogEntry>& catalog) {
  VerificationReport report;
  report.claim = ClaimId::prop_2_5;
  for (const CatalogEntry& e : catalog) {
    const Prop25Report r = check_prop25_bound(*e.group);
    if (!r.applicable) continue;
    const bool extraspecial = is_extraspecial(*e.group);
    VerificationCase c;
    std::ostringstream in;
    in << "G=" << e.name << ", |G/Z(G)|=" << r.p << "^" << r.k;
    c.inputs = in.str();
    c.expected = extraspecial ? "d(G) = (p^k+p-1)/p^(k+1) (extraspecial)"
                              : "d(G) <= (p^k+p-1)/p^(k+1)";
    c.computed = {"d(G) = " + fraction_string(r.degree),
                  "bound = " + fraction_string(r.bound),
                  std::string("tight: ") + (r.tight ? "yes" : "no")};
    c.pass = extraspecial ? r.tight : r.degree <= r.bound;
    report.cases.push_back(std::move(c));
  }
  return report;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  out += "\"";
  return out;
}

}  // namespace

std::optional<ClaimId> claim_from_string(const std::string& s) {
  const auto it = claim_table().find(s);
  if (it == claim_table().end()) return std::nullopt;
  return it->second;
}

std::string claim_name(ClaimId claim) {
  for (const auto& [name, id] : claim_table())
    if (id == claim) return name;
  throw argument_error("unknown claim id");
}

const std::vector<ClaimId>& all_claims() {
  static const std::vector<ClaimId> ids = [] {
    std::vector<ClaimId> v;
    for (const auto& [name, id] : claim_table()) v.push_back(id);
    return v;
  }();
  return ids;
}

int VerificationReport::passed() const {
  int count = 0;
  for (const VerificationCase& c : cases)
    if (c.pass) ++count;
  return count;
}

VerificationReport run_claim(ClaimId claim,
                             const std::vector<CatalogEntry>& catalog) {
  switch (claim) {
    case ClaimId::theorem_1_2:
      return run_theorem_1_2(catalog);
    case ClaimId::theorem_1_3:
      return run_theorem_1_3(catalog);
    case ClaimId::lemma_2_1_agreement:
      return run_lemma_2_1(catalog);
    case ClaimId::lemma_2_3:
      return run_lemma_2_3(catalog);
    case ClaimId::lemma_2_4:
      return run_lemma_2_4(catalog);
    case ClaimId::prop_2_5:
      return run_prop_2_5(catalog);
  }
  throw argument_error("unknown claim id");
}

std::string render_text(const VerificationReport& report) {
  std::ostringstream os;
  os << "claim: " << claim_name(report.claim) << "\n";
  for (const VerificationCase& c : report.cases) {
    os << (c.pass ? "[PASS] " : "[FAIL] ") << c.inputs << " | " << c.expected
       << " | ";
    for (std::size_t i = 0; i < c.computed.size(); ++i)
      os << (i ? "; " : "") << c.computed[i];
    os << "\n";
  }
  os << "summary: " << report.total() << " cases, " << report.passed()
     << " passed, " << report.failed() << " failed\n";
  return os.str();
}

std::string render_json(const VerificationReport& report) {
  nlohmann::json j;
  j["claim"] = claim_name(report.claim);
  j["cases"] = nlohmann::json::array();
  for (const VerificationCase& c : report.cases) {
    nlohmann::json jc;
    jc["inputs"] = c.inputs;
    jc["expected"] = c.expected;
    jc["computed"] = c.computed;
    jc["pass"] = c.pass;
    j["cases"].push_back(std::move(jc));
  }
  j["summary"] = {{"total", report.total()},
                  {"passed", report.passed()},
                  {"failed", report.failed()}};
  return j.dump();
}

std::string render_csv(const VerificationReport& report) {
  std::ostringstream os;
  os << "claim,inputs,expected,computed,pass\n";
  const std::string name = claim_name(report.claim);
  for (const VerificationCase& c : report.cases) {
    std::string joined;
    for (std::size_t i = 0; i < c.computed.size(); ++i)
      joined += (i ? "; " : "") + c.computed[i];
    os << name << "," << csv_quote(c.inputs) << "," << csv_quote(c.expected)
       << "," << csv_quote(joined) << "," << (c.pass ? "true" : "false")
       << "\n";
  }
  return os.str();
}

}  // namespace nildeg
