#pragma once

#include <optional>
#include <vector>

#include "nildeg/group.hpp"
#include "nildeg/subgroup.hpp"

namespace nildeg {

// {g : gx = xg}.
SubgroupSet centralizer(const FiniteGroup& g, int x);

// Z(G) = Z_1(G).
SubgroupSet center(const FiniteGroup& g);

// [Z_0, Z_1, ..., Z_c] with Z_0 = 1 and Z_{i+1}/Z_i = Z(G/Z_i), listed up to
// the first repeat (Z_{c+1} = Z_c). The terms ascend and are normal in G.
std::vector<SubgroupSet> upper_central_series(const FiniteGroup& g);

// Z_n(G); n past the stabilization index returns the hypercenter.
SubgroupSet nth_center(const FiniteGroup& g, int n);

// gamma_k(G): gamma_1 = G, gamma_{k+1} = [gamma_k, G].
SubgroupSet lower_central_term(const FiniteGroup& g, int k);

// The raw value set {[h1,...,hn,g] : hi in H, g in G}, sorted. Computed by
// levels, so the cost is O(n |G| |H| + |G|^2) rather than |H|^n |G|.
std::vector<int> n_commutator_values(const FiniteGroup& g, const SubgroupSet& h,
                                     int n);

// [_nH,G]: the subgroup generated by the raw value set above. The raw set is
// often already closed; raw_set_closed() reports that for a given pair.
SubgroupSet n_commutator_subgroup(const FiniteGroup& g, const SubgroupSet& h,
                                  int n);

SubgroupSet derived_subgroup(const FiniteGroup& g);

// Orbits of conjugation, each sorted, ordered by minimal representative.
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g);

// Smallest c with Z_c(G) = G, or nullopt when the series stabilizes early.
std::optional<int> nilpotency_class(const FiniteGroup& g);

// |Z(G)| = p prime, Z(G) = [G,G], and G/Z(G) of exponent p.
bool is_extraspecial(const FiniteGroup& g);

}  // namespace nildeg
