#include "nildeg/cli.hpp"

#include <chrono>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nildeg/catalog.hpp"
#include "nildeg/degrees.hpp"
#include "nildeg/errors.hpp"
#include "nildeg/isoclinism.hpp"
#include "nildeg/quotient.hpp"
#include "nildeg/series.hpp"
#include "nildeg/spec_io.hpp"
#include "nildeg/verify.hpp"

namespace nildeg {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitInconclusive = 4;

std::vector<int> parse_index_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw argument_error("subgroup list entry is not an integer: " + item);
    }
    if (used != item.size())
      throw argument_error("subgroup list entry is not an integer: " + item);
    out.push_back(value);
  }
  if (out.empty())
    throw argument_error("subgroup list is empty");
  return out;
}

SubgroupSet subgroup_from_flag(const FiniteGroup& g, const std::string& flag) {
  if (flag.empty()) return SubgroupSet::full(g.order());
  const std::vector<int> gens = parse_index_list(flag);
  return generated_subgroup(g, gens);
}

class Stopwatch {
 public:
  explicit Stopwatch(std::ostream& err) : err_(err) {}
  ~Stopwatch() {
    const auto elapsed = std::chrono::steady_clock::now() - start_;
    err_ << "time_ms="
         << std::chrono::duration_cast<std::chrono::milliseconds>(elapsed)
                .count()
         << "\n";
  }

 private:
  std::ostream& err_;
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

struct DegreeFlags {
  std::string group;
  std::string subgroup;
  int n = 1;
  std::string method = "brute";
  long long samples = 100000;
  std::uint64_t seed = 0;
  bool samples_given = false;
  bool seed_given = false;
  std::string format = "text";
};

int cmd_degree(const DegreeFlags& f, std::ostream& out, std::ostream& err) {
  if (f.method != "montecarlo" && (f.samples_given || f.seed_given))
    throw argument_error("--samples/--seed apply only to --method montecarlo");
  if (f.method == "classes" && f.n != 1)
    throw argument_error("--method classes is valid only at --n 1");
  if (f.method == "classes" && !f.subgroup.empty())
    throw argument_error(
        "--method classes computes the whole-group degree; drop --subgroup");
  if (f.method == "montecarlo" && f.samples < 1)
    throw argument_error("--samples must be positive");

  const GroupPtr g = parse_group_arg(f.group);
  const SubgroupSet h = subgroup_from_flag(*g, f.subgroup);
  Stopwatch timer(err);

  if (f.method == "montecarlo") {
    const EstimateResult r = estimate_degree(*g, h, f.n, f.samples, f.seed);
    if (f.format == "json") {
      nlohmann::json j;
      j["group"] = g->name();
      j["group_order"] = g->order();
      j["subgroup_order"] = h.size();
      j["n"] = f.n;
      j["method"] = "montecarlo";
      j["estimate"] = r.estimate;
      j["half_width_95"] = r.half_width_95;
      j["samples"] = r.samples;
      j["seed"] = r.seed;
      j["hits"] = r.hits;
      out << j.dump() << "\n";
    } else if (f.format == "csv") {
      out << "group,group_order,subgroup_order,n,method,estimate,"
             "half_width_95,samples,seed,hits\n"
          << g->name() << "," << g->order() << "," << h.size() << "," << f.n
          << ",montecarlo," << r.estimate << "," << r.half_width_95 << ","
          << r.samples << "," << r.seed << "," << r.hits << "\n";
    } else {
      out << "group: " << g->name() << " (order " << g->order() << ")\n"
          << "subgroup: order " << h.size() << "\n"
          << "n: " << f.n << "\n"
          << "method: montecarlo\n"
          << "estimate: " << r.estimate << "\n"
          << "half_width_95: " << r.half_width_95 << "\n"
          << "samples: " << r.samples << "\n"
          << "seed: " << r.seed << "\n"
          << "hits: " << r.hits << "\n";
    }
    return kExitOk;
  }

  DegreeResult r;
  if (f.method == "brute") {
    r = relative_degree_brute(*g, h, f.n);
  } else if (f.method == "centralizer") {
    r = relative_degree_centralizer(*g, h, f.n);
  } else {
    r = nilpotency_degree(*g, f.n, DegreeMethod::classes);
  }

  if (f.format == "json") {
    nlohmann::json j;
    j["group"] = g->name();
    j["group_order"] = g->order();
    j["subgroup_order"] = h.size();
    j["n"] = f.n;
    j["method"] = f.method;
    j["value"] = fraction_string(r.value);
    j["decimal"] = decimal_string(r.value);
    j["favorable"] = r.favorable.str();
    j["total"] = r.total.str();
    out << j.dump() << "\n";
  } else if (f.format == "csv") {
    out << "group,group_order,subgroup_order,n,method,value,decimal,"
           "favorable,total\n"
        << g->name() << "," << g->order() << "," << h.size() << "," << f.n
        << "," << f.method << "," << fraction_string(r.value) << ","
        << decimal_string(r.value) << "," << r.favorable.str() << ","
        << r.total.str() << "\n";
  } else {
    out << "group: " << g->name() << " (order " << g->order() << ")\n"
        << "subgroup: order " << h.size() << "\n"
        << "n: " << f.n << "\n"
        << "method: " << f.method << "\n"
        << "value: " << fraction_string(r.value) << "\n"
        << "decimal: " << decimal_string(r.value) << "\n"
        << "favorable: " << r.favorable.str() << "\n"
        << "total: " << r.total.str() << "\n";
  }
  return kExitOk;
}

struct IsoclinicFlags {
  std::string a;
  std::string a_subgroup;
  std::string b;
  std::string b_subgroup;
  int n = 1;
  long long budget = 0;  // 0: keep the default
  std::string format = "text";
};

int cmd_isoclinic(const IsoclinicFlags& f, std::ostream& out,
                  std::ostream& err) {
  const GroupPtr a = parse_group_arg(f.a);
  const GroupPtr b = parse_group_arg(f.b);
  const SubgroupSet ha = subgroup_from_flag(*a, f.a_subgroup);
  const SubgroupSet hb = subgroup_from_flag(*b, f.b_subgroup);
  SearchConfig cfg;
  if (f.budget < 0) throw argument_error("--budget must be positive");
  if (f.budget > 0) cfg.node_budget = f.budget;

  Stopwatch timer(err);
  const PairData p1 = build_pair(a, ha, f.n);
  const PairData p2 = build_pair(b, hb, f.n);
  const IsoclinismResult res = find_isoclinism(p1, p2, cfg);

  std::string status;
  int code = kExitOk;
  if (res.status == IsoclinismStatus::isoclinic) {
    status = "isoclinic";
  } else if (res.status == IsoclinismStatus::not_isoclinic) {
    status = "not_isoclinic";
    code = kExitNegative;
  } else {
    status = "inconclusive";
    code = kExitInconclusive;
  }

  std::string d1, d2;
  if (res.status == IsoclinismStatus::isoclinic) {
    d1 = fraction_string(relative_degree_centralizer(*a, ha, f.n).value);
    d2 = fraction_string(relative_degree_centralizer(*b, hb, f.n).value);
  }

  if (f.format == "json") {
    nlohmann::json j;
    j["status"] = status;
    j["n"] = f.n;
    j["nodes"] = res.nodes;
    if (!res.reason.empty()) j["reason"] = res.reason;
    if (res.witness) {
      j["witness"] =
          nlohmann::json::parse(witness_to_json(p1, p2, *res.witness));
      j["degree_a"] = d1;
      j["degree_b"] = d2;
    }
    out << j.dump() << "\n";
  } else if (f.format == "csv") {
    out << "status,n,degree_a,degree_b,nodes,reason\n"
        << status << "," << f.n << "," << d1 << "," << d2 << "," << res.nodes
        << ",\"" << res.reason << "\"\n";
  } else {
    out << "status: " << status << "\n";
    if (!res.reason.empty()) out << "reason: " << res.reason << "\n";
    if (res.witness) {
      out << "degree(H1,G1): " << d1 << "\n"
          << "degree(H2,G2): " << d2 << "\n"
          << "witness: " << witness_to_json(p1, p2, *res.witness) << "\n";
    }
    out << "nodes: " << res.nodes << "\n";
  }
  return code;
}

struct VerifyFlags {
  std::string claim;
  std::string catalog = "default";
  std::string format = "text";
};

int cmd_verify(const VerifyFlags& f, std::ostream& out, std::ostream& err) {
  const std::optional<ClaimId> claim = claim_from_string(f.claim);
  if (!claim) throw argument_error("unknown claim: " + f.claim);

  Stopwatch timer(err);
  std::vector<CatalogEntry> file_catalog;
  const bool use_default = f.catalog == "default";
  if (!use_default) file_catalog = load_catalog_file(f.catalog);
  const std::vector<CatalogEntry>& catalog =
      use_default ? default_catalog() : file_catalog;
  const VerificationReport report = run_claim(*claim, catalog);

  if (f.format == "json")
    out << render_json(report) << "\n";
  else if (f.format == "csv")
    out << render_csv(report);
  else
    out << render_text(report);
  return report.all_pass() ? kExitOk : kExitNegative;
}

struct InfoFlags {
  std::string group;
  std::string format = "text";
};

int cmd_info(const InfoFlags& f, std::ostream& out, std::ostream& err) {
  const GroupPtr g = parse_group_arg(f.group);
  Stopwatch timer(err);

  const std::vector<SubgroupSet> ucs = upper_central_series(*g);
  const std::optional<int> cls = nilpotency_class(*g);
  const SubgroupSet derived = derived_subgroup(*g);
  const std::size_t k = conjugacy_classes(*g).size();
  std::map<int, int> order_histogram;
  for (int o : g->element_orders()) ++order_histogram[o];

  std::vector<int> ucs_sizes;
  for (const SubgroupSet& z : ucs) ucs_sizes.push_back(z.size());

  if (f.format == "json") {
    nlohmann::json j;
    j["name"] = g->name();
    j["order"] = g->order();
    j["abelian"] = g->is_abelian();
    j["center_order"] = ucs.size() > 1 ? ucs[1].size() : 1;
    j["upper_central_series_orders"] = ucs_sizes;
    if (cls)
      j["nilpotency_class"] = *cls;
    else
      j["nilpotency_class"] = nullptr;
    j["conjugacy_classes"] = k;
    j["derived_subgroup_order"] = derived.size();
    nlohmann::json hist = nlohmann::json::object();
    for (const auto& [o, count] : order_histogram)
      hist[std::to_string(o)] = count;
    j["element_order_histogram"] = hist;
    out << j.dump() << "\n";
  } else if (f.format == "csv") {
    out << "name,order,abelian,center_order,nilpotency_class,"
           "conjugacy_classes,derived_subgroup_order\n"
        << g->name() << "," << g->order() << ","
        << (g->is_abelian() ? "true" : "false") << ","
        << (ucs.size() > 1 ? ucs[1].size() : 1) << ","
        << (cls ? std::to_string(*cls) : std::string("none")) << "," << k
        << "," << derived.size() << "\n";
  } else {
    out << "name: " << g->name() << "\n"
        << "order: " << g->order() << "\n"
        << "abelian: " << (g->is_abelian() ? "yes" : "no") << "\n"
        << "center order: " << (ucs.size() > 1 ? ucs[1].size() : 1) << "\n";
    out << "upper central series orders:";
    for (int s : ucs_sizes) out << " " << s;
    out << "\n";
    if (cls)
      out << "nilpotency class: " << *cls << "\n";
    else
      out << "nilpotency class: not nilpotent\n";
    out << "conjugacy classes: " << k << "\n"
        << "derived subgroup order: " << derived.size() << "\n";
    out << "element order histogram:";
    for (const auto& [o, count] : order_histogram)
      out << " " << o << ":" << count;
    out << "\n";
    out << "element indices are the canonical 0-based indices used by "
           "--subgroup\n";
  }
  return kExitOk;
}

void add_format_flag(CLI::App* cmd, std::string& target) {
  cmd->add_option("--format", target, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "nildeg: exact and sampled nilpotency degrees, relative n-isoclinism, "
      "and batch claim verification for small finite groups"};
  app.require_subcommand(1);

  DegreeFlags df;
  CLI::App* degree =
      app.add_subcommand("degree", "Compute d^(n)(H,G) exactly or by sampling");
  degree->add_option("--group", df.group, "Group spec (family:... or file:...)")
      ->required();
  degree->add_option("--subgroup", df.subgroup,
                     "Comma-separated generator indices (default: whole group)");
  degree->add_option("--n", df.n, "Degree index n >= 1")
      ->required()
      ->check(CLI::PositiveNumber);
  degree->add_option("--method", df.method, "brute|centralizer|classes|montecarlo")
      ->required()
      ->check(CLI::IsMember({"brute", "centralizer", "classes", "montecarlo"}));
  CLI::Option* samples_opt =
      degree->add_option("--samples", df.samples, "Monte Carlo sample count");
  CLI::Option* seed_opt =
      degree->add_option("--seed", df.seed, "Monte Carlo seed");
  add_format_flag(degree, df.format);

  IsoclinicFlags isf;
  CLI::App* iso = app.add_subcommand(
      "isoclinic", "Decide relative n-isoclinism of two subgroup pairs");
  iso->add_option("--a", isf.a, "First group spec")->required();
  iso->add_option("--a-subgroup", isf.a_subgroup,
                  "Generators of H1 (default: whole group)");
  iso->add_option("--b", isf.b, "Second group spec")->required();
  iso->add_option("--b-subgroup", isf.b_subgroup,
                  "Generators of H2 (default: whole group)");
  iso->add_option("--n", isf.n, "Isoclinism level n >= 1")
      ->required()
      ->check(CLI::PositiveNumber);
  iso->add_option("--budget", isf.budget, "Search node budget")
      ->check(CLI::PositiveNumber);
  add_format_flag(iso, isf.format);

  VerifyFlags vf;
  CLI::App* verify =
      app.add_subcommand("verify", "Run one claim's checks over a catalog");
  verify->add_option("--claim", vf.claim,
                     "theorem_1_2|theorem_1_3|lemma_2_1_agreement|lemma_2_3|"
                     "lemma_2_4|prop_2_5")
      ->required();
  verify->add_option("--catalog", vf.catalog,
                     "\"default\" or a JSON catalog file path");
  add_format_flag(verify, vf.format);

  InfoFlags inf;
  CLI::App* info =
      app.add_subcommand("info", "Print a structural summary of a group");
  info->add_option("--group", inf.group, "Group spec")->required();
  add_format_flag(info, inf.format);

  std::vector<const char*> argv;
  argv.push_back("nildeg");
  for (const std::string& s : args) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    df.samples_given = samples_opt->count() > 0;
    df.seed_given = seed_opt->count() > 0;
    if (degree->parsed()) return cmd_degree(df, out, err);
    if (iso->parsed()) return cmd_isoclinic(isf, out, err);
    if (verify->parsed()) return cmd_verify(vf, out, err);
    if (info->parsed()) return cmd_info(inf, out, err);
  } catch (const capacity_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const argument_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const validation_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace nildeg
