#pragma once

#include "skewsym/symfunc.hpp"

namespace skewsym {

/// Horizontal strip coefficient: product of (1 - q^{m_i(outer)}) over
/// columns i where the strip ends exactly one cell above the base in
/// column i and columns i, i+1 match below.
QPoly hs_coeff(const SkewShape& s);

/// Vertical strip coefficient: product of q-binomials over columns.
QPoly vs_coeff(const SkewShape& s);

/// Broken ribbon coefficient (-q)^{hgt} (1-q)^{rib}.
QPoly br_coeff(const SkewShape& s);

/// General-shape coefficient used by the first conjecture.
QPoly sk_coeff(const SkewShape& s);

/// Branching weights for horizontal strips in the Hall-Littlewood chain
/// expansion.
QPoly psi_branch(const SkewShape& s);
QPoly phi_branch(const SkewShape& s);

/// Skew Hall-Littlewood polynomial P_{outer/inner}(x_1..x_n; q) via
/// psi-weighted horizontal strip chains.
SymFunc hl_p_skew(const SkewShape& s, int nvars);

/// Single-case exact verdict for one of the conjectured product rules.
struct ConjectureReport {
    std::string id;  // "hl1", "hl2", "hl3", "hl-sqmnr"
    Partition lam, mu;
    int r = 0;
    int nvars = 0;
    bool pass = false;
    bool divisible = true;  // exact (1-q) division succeeded where required
    std::string detail;     // both sides in monomial coordinates on failure

    /// "conj<ID>\t<lam>\t<mu>\t<r>\t<n>\tPASS|FAIL"
    std::string verdict_line() const;
};

/// P_{lam/mu} * s_r as a signed sum of sk-weighted P_{lamPlus/muMinus},
/// mu/muMinus a vertical strip.
ConjectureReport conjecture1(const Partition& lam, const Partition& mu, int r, int nvars);

/// P_{lam/mu} * e_r with vs weights, lamPlus/lam and (mu/muMinus)^c
/// vertical strips.
ConjectureReport conjecture2(const Partition& lam, const Partition& mu, int r, int nvars);

/// P_{lam/mu} * P_r with hs and conjugated br weights and a global exact
/// division by (1-q). Requires r >= 1.
ConjectureReport conjecture3(const Partition& lam, const Partition& mu, int r, int nvars);

/// The product rule for s_{lam/mu} * P_r restated with br coefficients and
/// the (1-q) division; cross-checked against the closed form. Requires
/// r >= 1.
ConjectureReport verify_sqmnr_hl_form(const Partition& lam, const Partition& mu, int r, int nvars);

}  // namespace skewsym
