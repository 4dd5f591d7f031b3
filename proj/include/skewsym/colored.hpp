#pragma once

#include <variant>

#include "skewsym/symfunc.hpp"
#include "skewsym/tableaux.hpp"

namespace skewsym {

/// SSYT of shape lamPlus/muMinus together with the split of the broken
/// ribbons lamPlus/lam and mu/muMinus into horizontal and vertical strips.
/// White cells form splitOuter/splitInner; the gray cells are
/// (lamPlus/splitOuter) and (splitInner/muMinus).
struct ColoredTableau {
    SkewTableau tableau;
    Partition base_outer;   // lam
    Partition base_inner;   // mu
    Partition split_outer;  // lam'
    Partition split_inner;  // mu'

    const Partition& lam_plus() const { return tableau.outer(); }
    const Partition& mu_minus() const { return tableau.inner(); }
    int gray_count() const;
    QPoly weight() const;  // (-1)^{|mu/muMinus|} (-q)^{gray}
    void validate() const;

    bool operator==(const ColoredTableau& o) const = default;

    /// Tableau text format with a "g" suffix on gray entries.
    std::string to_string(bool single_line = false) const;
};

struct Survivor {
    SkewTableau tableau;   // R of shape lam/mu
    std::vector<int> v;    // weakly increasing word
    std::vector<int> w;    // strictly decreasing word
    bool operator==(const Survivor& o) const = default;
};

using CancelOutcome = std::variant<ColoredTableau, Survivor>;

/// All (splitOuter, splitInner) pairs satisfying the ColoredTableau
/// invariants; count is 2^(rib(lamPlus/lam) + rib(mu/muMinus)).
std::vector<std::pair<Partition, Partition>> enumerate_splits(const Partition& lam,
                                                              const Partition& lamPlus,
                                                              const Partition& muMinus,
                                                              const Partition& mu);

/// Sum of split weights; equals
/// (-1)^{|mu/muMinus|}(-q)^{hgt(lamPlus/lam)+wt(mu/muMinus)}
/// (1-q)^{rib(lamPlus/lam)+rib(mu/muMinus)}.
QPoly split_weight_sum(const Partition& lam, const Partition& lamPlus,
                       const Partition& muMinus, const Partition& mu);

/// The two-stage cancellation: psi on the gray cells, then the
/// The sign-reversing involution phi applied to the white tableau. Non-fixed inputs pair with an
/// opposite-weight partner; double fixed points decompose into (R, v, w).
CancelOutcome cancel_step(const ColoredTableau& ct);

/// Rebuild the colored tableau corresponding to a survivor triple.
ColoredTableau survivor_rebuild(const Survivor& s, const Partition& lam, const Partition& mu);

struct BijectiveReport {
    bool pass = true;
    long cases = 0;
    long survivors = 0;
    std::string detail;  // first counterexample, when failing
};

/// Enumerates all colored tableaux for (lam, mu, r) with entries <= nvars,
/// checks the pairing and the survivor generating function against the
/// left-hand side with the (1-q)^l(tau) weights.
BijectiveReport verify_sqmnr_bijective(const Partition& lam, const Partition& mu, int r,
                                       int nvars);

// Closed-form right-hand sides of the product rules.
SkewSchurSum rhs_sqmnr_prime(const Partition& lam, const Partition& mu, int r);
SkewSchurSum rhs_sqmnr(const Partition& lam, const Partition& mu, int r);
SkewSchurSum rhs_spr(const Partition& lam, const Partition& mu, int r);
SkewSchurSum rhs_cspr(const Partition& lam, const Partition& mu, int r);
SkewSchurSum rhs_smnr(const Partition& lam, const Partition& mu, int r);
SkewSchurSum rhs_qmnr(const Partition& lam, const Partition& mu, int r);
SkewSchurSum rhs_sqmnr3(const Partition& lam, const Partition& mu, int r);

/// Coefficient of s_{lamPlus/muMinus} in s_{lam/mu} * qpower_prod(tau),
/// summed over pairs of a broken ribbon tableau and a reverse broken ribbon
/// tableau whose types add to tau.
QPoly chi_coefficient(const Partition& lamPlus, const Partition& lam, const Partition& mu,
                      const Partition& muMinus, const Partition& tau);

/// The full corollary sum for a partition type tau.
SkewSchurSum rhs_qpower_prod(const Partition& lam, const Partition& mu, const Partition& tau);

}  // namespace skewsym
