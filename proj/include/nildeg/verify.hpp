#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nildeg/catalog.hpp"

namespace nildeg {

enum class ClaimId {
  theorem_1_2,
  theorem_1_3,
  lemma_2_1_agreement,
  lemma_2_3,
  lemma_2_4,
  prop_2_5,
};

std::optional<ClaimId> claim_from_string(const std::string& s);
std::string claim_name(ClaimId claim);
const std::vector<ClaimId>& all_claims();

struct VerificationCase {
  std::string inputs;               // which group(s), subgroup, n
  std::string expected;             // the exact relation being checked
  std::vector<std::string> computed;  // exact rationals as "num/den" + notes
  bool pass = false;
};

struct VerificationReport {
  ClaimId claim = ClaimId::theorem_1_2;
  std::vector<VerificationCase> cases;
  int total() const { return static_cast<int>(cases.size()); }
  int passed() const;
  int failed() const { return total() - passed(); }
  bool all_pass() const { return passed() == total(); }
};

// Runs one claim's case generator over the catalog. Deterministic for a
// fixed catalog. Cases where [_nH,G] appears also note whether the raw
// commutator value set was already closed before taking the generated
// subgroup.
VerificationReport run_claim(ClaimId claim,
                             const std::vector<CatalogEntry>& catalog);

std::string render_text(const VerificationReport& report);
std::string render_json(const VerificationReport& report);
std::string render_csv(const VerificationReport& report);

}  // namespace nildeg
