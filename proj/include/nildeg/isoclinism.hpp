#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nildeg/group.hpp"
#include "nildeg/quotient.hpp"
#include "nildeg/subgroup.hpp"

namespace nildeg {

// Everything Definition 1.1 needs about one side (H, G, n): the n-th center,
// the quotient G/Z_n(G), the image of H inside it (realizing H/(Z_n(G) cap H)
// through the natural embedding), and [_nH,G] both as a subset of G and as a
// standalone group.
struct PairData {
  GroupPtr G;
  SubgroupSet H;
  int n = 1;
  SubgroupSet Zn;
  QuotientResult quotientG;
  SubgroupSet H_image;    // subgroup of quotientG.group
  SubgroupSet K;          // [_nH,G] inside G
  SubgroupGroup K_group;  // [_nH,G] standalone
};

PairData build_pair(GroupPtr g, const SubgroupSet& h, int n);

// gamma(n,H,G): lift each coset to its stored minimal representative,
// evaluate the left-normed commutator in G, return its K_group index. The
// first n entries must lie in H_image. Representative-independent because
// Z_n(G) entries die in the (n+1)-fold commutator.
int gamma_eval(const PairData& p, std::span<const int> coset_tuple);

struct IsoclinismWitness {
  int n = 1;
  GroupMap alpha;  // quotientG1.group -> quotientG2.group
  GroupMap beta;   // K1_group.group -> K2_group.group
};

struct WitnessVerdict {
  bool valid = false;
  std::vector<std::string> violations;  // first offenders, capped
};

// Checks Definition 1.1 (i)-(iii) exhaustively against the two pairs' own
// tables (the maps' stored group pointers are not trusted).
WitnessVerdict verify_witness(const PairData& p1, const PairData& p2,
                              const IsoclinismWitness& w);

struct SearchConfig {
  long long node_budget = 1000000;
  long long time_budget_ms = 30000;
  bool use_invariant_pruning = true;
};

enum class IsoclinismStatus { isoclinic, not_isoclinic, inconclusive };

struct IsoclinismResult {
  IsoclinismStatus status = IsoclinismStatus::inconclusive;
  std::optional<IsoclinismWitness> witness;
  std::string reason;  // rejection cause or budget note
  long long nodes = 0;
};

// Invariant rejections first, then deterministic backtracking over generator
// images of quotientG1; beta is forced from the diagram on the gamma image
// and closed multiplicatively, never searched. A definite negative is
// reported only when the space was exhausted within budget.
IsoclinismResult find_isoclinism(const PairData& p1, const PairData& p2,
                                 const SearchConfig& cfg = {});

// Witness algebra for the equivalence-relation checks.
IsoclinismWitness invert_witness(const IsoclinismWitness& w);
IsoclinismWitness compose_witness(const IsoclinismWitness& w12,
                                  const IsoclinismWitness& w23);

struct IsomorphismResult {
  std::optional<GroupMap> iso;
  bool exhausted = true;  // false when the budget cut the search short
  long long nodes = 0;
};

IsomorphismResult find_group_isomorphism(GroupPtr a, GroupPtr b,
                                         const SearchConfig& cfg = {});

// Lemma 2.2: from alpha on G1/N1 -> G2/N2 (N_i normal, N_i <= Z_n(G_i)) and
// beta on [_nH1,G1] -> [_nH2,G2], verify the lemma's conditions and induce
// the witness alpha' on G1/Z_n(G1) by lifting through the stored minimal
// representatives. Quotient indices follow this library's canonical coset
// numbering (ascending minimal representative); beta follows the sorted-
// member indexing of the commutator subgroups.
struct Lemma22Result {
  bool valid = false;
  std::vector<std::string> violations;
  std::optional<IsoclinismWitness> witness;  // (alpha', beta) when valid
};

Lemma22Result lemma22_verify(GroupPtr g1, const SubgroupSet& h1,
                             const SubgroupSet& n1, GroupPtr g2,
                             const SubgroupSet& h2, const SubgroupSet& n2,
                             const GroupMap& alpha, const GroupMap& beta,
                             int n);

// Lemma 2.3: for G = H Z_n(G), builds (H,H) ~n (H,G) ~n (G,G) with the
// inclusion-induced alpha and identity beta on gamma_{n+1}(H), and verifies
// all three witnesses. Throws argument_error when the hypothesis fails.
struct Lemma23Result {
  PairData pair_hh;  // (H, H) with H standalone
  PairData pair_hg;  // (H, G)
  PairData pair_gg;  // (G, G)
  SubgroupGroup h_standalone;
  IsoclinismWitness w_hh_hg;
  IsoclinismWitness w_hg_gg;
  IsoclinismWitness w_hh_gg;
  bool all_valid = false;
  std::vector<std::string> violations;
};

Lemma23Result lemma23_witness(GroupPtr g, const SubgroupSet& h, int n);

// Witness JSON: {"n", "alpha", "beta", "source", "target"} with explicit
// image arrays so external tools can re-verify without re-searching.
std::string witness_to_json(const PairData& p1, const PairData& p2,
                            const IsoclinismWitness& w);
IsoclinismWitness witness_from_json(const PairData& p1, const PairData& p2,
                                    const std::string& text);

}  // namespace nildeg
