#pragma once

#include "wpvol/volumes.hpp"

#include <string>
#include <vector>

namespace wpvol {

struct IdentityReport {
    std::string name;
    ConfigKey key;        // the (g, n+1) target
    bool pass = false;
    VolumePolynomial discrepancy; // must have no terms for a pass
    std::string detail;

    std::size_t discrepancy_terms() const { return discrepancy.term_count(); }
};

// V_{g,n+1}(L, 2 pi i) = sum_k int_0^{L_k} L_k V_{g,n}(L) dL_k, exactly.
// target = (g, n+1); for n = 0 the right side is the empty sum, which
// requires the closed-surface entry to exist (g >= 2).
IdentityReport check_limit_integral(ConfigKey target, VolumeTable& table);

// With dV_{g,n+1}/dL_{n+1} = L_{n+1} Q: Q at L_{n+1}^2 = -4 pi^2 equals
// (2g-2+n) V_{g,n}, exactly (the shared factor 2 pi i cancels).
IdentityReport check_limit_derivative(ConfigKey target, VolumeTable& table);

// V_{g,n+1}(0^n, 2 pi i) = 0 and, writing V(0^n, i theta) as a polynomial in
// theta^2, its theta-derivative at theta = 2 pi equals
// 2 pi (2 - 2g - n) V_{g,n}(0^n), both exactly.  (g, n) names the smaller
// space; n = 0 uses the closed-surface constant.
IdentityReport check_two_pi_corollary(int g, int n, VolumeTable& table);

// Both displayed rewritings of V_{0,5} at imaginary boundary data expand to
// exactly V_{0,5}(i theta): the 15-summand complementary-pair form and the
// 10-pair form plus (1/8) sum theta_j^4.
IdentityReport check_v05_factorizations(VolumeTable& table);

/// All limit-identity targets available in a table of the given bound:
/// stable (g, m) with dimension <= max_dim whose reduced space (g, m-1) is
/// stable or is a closed surface of genus >= 2.
std::vector<ConfigKey> identity_targets(const VolumeTable& table, bool integral);

/// Run the full identity suite; every report must pass.
std::vector<IdentityReport> run_identity_suite(VolumeTable& table);

} // namespace wpvol
