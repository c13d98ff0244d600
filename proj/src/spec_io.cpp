#include "nildeg/spec_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "nildeg/errors.hpp"
#include "nildeg/families.hpp"

namespace nildeg {

namespace {

using nlohmann::json;

int require_int(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number_integer())
    throw parse_error(std::string("spec: missing or non-integer field \"") +
                      field + "\"");
  return j[field].get<int>();
}

std::string require_string(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_string())
    throw parse_error(std::string("spec: missing or non-string field \"") +
                      field + "\"");
  return j[field].get<std::string>();
}

std::vector<std::vector<int>> require_int_matrix(const json& j,
                                                 const char* field) {
  if (!j.contains(field) || !j[field].is_array())
    throw parse_error(std::string("spec: missing or non-array field \"") +
                      field + "\"");
  std::vector<std::vector<int>> out;
  for (const auto& row : j[field]) {
    if (!row.is_array())
      throw parse_error(std::string("spec: \"") + field +
                        "\" rows must be arrays");
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer())
        throw parse_error(std::string("spec: \"") + field +
                          "\" entries must be integers");
      r.push_back(v.get<int>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

GroupSpec parse_spec(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("spec: ") + e.what());
  }
  if (!j.is_object()) throw parse_error("spec: document is not an object");

  GroupSpec spec;
  const std::string kind = require_string(j, "kind");
  spec.name = j.contains("name") ? require_string(j, "name") : "";

  if (kind == "cayley") {
    spec.kind = GroupSpec::Kind::cayley;
    const int order = require_int(j, "order");
    spec.table = require_int_matrix(j, "table");
    if (static_cast<int>(spec.table.size()) != order)
      throw parse_error("spec: table size disagrees with \"order\"");
  } else if (kind == "permutation") {
    spec.kind = GroupSpec::Kind::permutation;
    spec.degree = require_int(j, "degree");
    spec.generators = require_int_matrix(j, "generators");
  } else if (kind == "family") {
    spec.kind = GroupSpec::Kind::family;
    spec.family = require_string(j, "family");
    if (!j.contains("params") || !j["params"].is_object())
      throw parse_error("spec: family requires a \"params\" object");
    const json& p = j["params"];
    if (spec.family == "cyclic" || spec.family == "dihedral" ||
        spec.family == "quaternion") {
      spec.int_params = {require_int(p, "m")};
    } else if (spec.family == "symmetric") {
      spec.int_params = {require_int(p, "k")};
    } else if (spec.family == "heisenberg") {
      spec.int_params = {require_int(p, "p")};
    } else if (spec.family == "abelian") {
      if (!p.contains("invariants") || !p["invariants"].is_array())
        throw parse_error("spec: abelian requires \"invariants\" array");
      for (const auto& v : p["invariants"]) {
        if (!v.is_number_integer())
          throw parse_error("spec: invariants must be integers");
        spec.int_params.push_back(v.get<int>());
      }
    } else if (spec.family == "extraspecial") {
      spec.int_params = {require_int(p, "p"), require_int(p, "m")};
      spec.string_param = require_string(p, "type");
      if (spec.string_param != "plus" && spec.string_param != "minus")
        throw parse_error("spec: extraspecial type must be \"plus\" or \"minus\"");
    } else {
      throw parse_error("spec: unknown family \"" + spec.family + "\"");
    }
  } else {
    throw parse_error("spec: unknown kind \"" + kind + "\"");
  }
  return spec;
}

std::string save_spec(const GroupSpec& spec) {
  json j;
  switch (spec.kind) {
    case GroupSpec::Kind::cayley:
      j["kind"] = "cayley";
      j["order"] = static_cast<int>(spec.table.size());
      j["table"] = spec.table;
      break;
    case GroupSpec::Kind::permutation:
      j["kind"] = "permutation";
      j["degree"] = spec.degree;
      j["generators"] = spec.generators;
      break;
    case GroupSpec::Kind::family: {
      j["kind"] = "family";
      j["family"] = spec.family;
      json p;
      if (spec.family == "cyclic" || spec.family == "dihedral" ||
          spec.family == "quaternion") {
        p["m"] = spec.int_params.at(0);
      } else if (spec.family == "symmetric") {
        p["k"] = spec.int_params.at(0);
      } else if (spec.family == "heisenberg") {
        p["p"] = spec.int_params.at(0);
      } else if (spec.family == "abelian") {
        p["invariants"] = spec.int_params;
      } else if (spec.family == "extraspecial") {
        p["p"] = spec.int_params.at(0);
        p["m"] = spec.int_params.at(1);
        p["type"] = spec.string_param;
      }
      j["params"] = p;
      break;
    }
  }
  j["name"] = spec.name;
  return j.dump();  // keys sorted; byte-stable for fixed content
}

RealizeReport realize_spec(const GroupSpec& spec) {
  RealizeReport report;
  switch (spec.kind) {
    case GroupSpec::Kind::family: {
      GroupPtr g;
      const auto& ip = spec.int_params;
      auto arg = [&](std::size_t i) -> int {
        if (i >= ip.size())
          throw parse_error("spec: family \"" + spec.family +
                            "\" is missing a parameter");
        return ip[i];
      };
      if (spec.family == "cyclic") g = cyclic(arg(0));
      else if (spec.family == "abelian") g = abelian(ip);
      else if (spec.family == "dihedral") g = dihedral(arg(0));
      else if (spec.family == "quaternion") g = quaternion_generalized(arg(0));
      else if (spec.family == "symmetric") g = symmetric(arg(0));
      else if (spec.family == "heisenberg") g = heisenberg(arg(0));
      else if (spec.family == "extraspecial")
        g = extraspecial(arg(0), arg(1),
                         spec.string_param == "minus"
                             ? ExtraspecialType::minus_type
                             : ExtraspecialType::plus_type);
      else
        throw parse_error("spec: unknown family \"" + spec.family + "\"");
      report.group = spec.name.empty() ? g : with_name(*g, spec.name);
      return report;
    }
    case GroupSpec::Kind::permutation:
      report.group =
          group_from_permutations(spec.degree, spec.generators, spec.name);
      return report;
    case GroupSpec::Kind::cayley:
      break;
  }

  const auto& t = spec.table;
  const int n = static_cast<int>(t.size());
  if (n < 1) throw validation_error("spec: empty table");
  for (const auto& row : t)
    if (static_cast<int>(row.size()) != n)
      throw validation_error("spec: table is not square");
  // Locate the two-sided identity, then relabel it to index 0 if needed.
  int e = -1;
  for (int cand = 0; cand < n && e < 0; ++cand) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      const int l = t[static_cast<std::size_t>(cand)][static_cast<std::size_t>(a)];
      const int r = t[static_cast<std::size_t>(a)][static_cast<std::size_t>(cand)];
      ok = l == a && r == a;
    }
    if (ok) e = cand;
  }
  if (e < 0) throw validation_error("spec: table has no two-sided identity");
  std::vector<std::vector<int>> fixed = t;
  if (e != 0) {
    auto s = [&](int x) { return x == 0 ? e : x == e ? 0 : x; };
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const int v = t[static_cast<std::size_t>(s(a))][static_cast<std::size_t>(s(b))];
        if (v < 0 || v >= n)
          throw validation_error("spec: table entry out of range");
        fixed[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = s(v);
      }
    report.reindexed = true;
    report.original_identity = e;
  }
  report.group = make_group(fixed, spec.name);
  return report;
}

GroupPtr realize_group(const GroupSpec& spec) { return realize_spec(spec).group; }

GroupPtr load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open spec file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return realize_group(parse_spec(buf.str()));
}

GroupSpec cayley_spec(const FiniteGroup& g) {
  GroupSpec spec;
  spec.kind = GroupSpec::Kind::cayley;
  spec.name = g.name();
  const int n = g.order();
  spec.table.assign(static_cast<std::size_t>(n),
                    std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      spec.table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          g.mul_unchecked(a, b);
  return spec;
}

GroupPtr parse_group_arg(const std::string& arg) {
  auto split = [](const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
      if (c == sep) {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    parts.push_back(cur);
    return parts;
  };
  auto to_int = [](const std::string& s) {
    try {
      std::size_t pos = 0;
      const int v = std::stoi(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw argument_error("group designator: \"" + s + "\" is not an integer");
    }
  };

  if (arg.rfind("file:", 0) == 0) return load_group_file(arg.substr(5));
  if (arg.rfind("family:", 0) != 0)
    throw argument_error(
        "group designator must start with family: or file: (got \"" + arg +
        "\")");

  const auto parts = split(arg, ':');
  if (parts.size() < 3)
    throw argument_error("group designator needs family arguments: " + arg);
  const std::string& fam = parts[1];
  static const std::set<std::string> known{
      "cyclic",    "abelian",    "dihedral",    "quaternion",
      "symmetric", "heisenberg", "extraspecial"};
  if (!known.count(fam)) throw argument_error("unknown family \"" + fam + "\"");
  GroupSpec spec;
  spec.kind = GroupSpec::Kind::family;
  spec.family = fam;
  if (fam == "abelian") {
    for (const auto& tok : split(parts[2], ','))
      spec.int_params.push_back(to_int(tok));
  } else if (fam == "extraspecial") {
    if (parts.size() != 5)
      throw argument_error("extraspecial takes p:m:plus|minus");
    spec.int_params = {to_int(parts[2]), to_int(parts[3])};
    if (parts[4] != "plus" && parts[4] != "minus")
      throw argument_error("extraspecial type must be plus or minus");
    spec.string_param = parts[4];
  } else {
    if (parts.size() != 3)
      throw argument_error("family " + fam + " takes exactly one argument");
    spec.int_params = {to_int(parts[2])};
  }
  return realize_group(spec);
}

}  // namespace nildeg
