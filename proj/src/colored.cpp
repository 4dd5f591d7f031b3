#include "skewsym/colored.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace skewsym {

namespace {

QPoly neg_q_pow(int e) { return QPoly::monomial(e % 2 ? -1 : 1, e); }

const QPoly kOneMinusQ{std::vector<std::int64_t>{1, -1}};

}  // namespace

int ColoredTableau::gray_count() const {
    return (lam_plus().size() - split_outer.size()) + (split_inner.size() - mu_minus().size());
}

QPoly ColoredTableau::weight() const {
    int sign = (base_inner.size() - mu_minus().size()) % 2 ? -1 : 1;
    return QPoly(sign) * neg_q_pow(gray_count());
}

void ColoredTableau::validate() const {
    auto fail = [](const char* msg) { throw std::invalid_argument(std::string("ColoredTableau: ") + msg); };
    if (!contains(base_outer, split_outer) || !contains(split_outer, lam_plus()))
        fail("need lam <= splitOuter <= lamPlus");
    if (!contains(mu_minus(), split_inner) || !contains(split_inner, base_inner))
        fail("need muMinus <= splitInner <= mu");
    if (!is_broken_ribbon(SkewShape(lam_plus(), base_outer))) fail("lamPlus/lam is not a broken ribbon");
    if (!is_broken_ribbon(SkewShape(base_inner, mu_minus()))) fail("mu/muMinus is not a broken ribbon");
    if (!is_horizontal_strip(SkewShape(split_outer, base_outer)))
        fail("splitOuter/lam is not a horizontal strip");
    if (!is_horizontal_strip(SkewShape(split_inner, mu_minus())))
        fail("splitInner/muMinus is not a horizontal strip");
    if (!is_vertical_strip(SkewShape(lam_plus(), split_outer)))
        fail("lamPlus/splitOuter is not a vertical strip");
    if (!is_vertical_strip(SkewShape(base_inner, split_inner)))
        fail("mu/splitInner is not a vertical strip");
}

std::string ColoredTableau::to_string(bool single_line) const {
    if (lam_plus().length() == 0) return "-";
    std::ostringstream out;
    for (int i = 1; i <= lam_plus().length(); ++i) {
        if (i > 1) out << (single_line ? " / " : "\n");
        bool first = true;
        for (int j = 1; j <= lam_plus().part(i); ++j) {
            if (j <= mu_minus().part(i)) {
                if (!first) out << " ";
                out << ".";
                first = false;
                continue;
            }
            bool gray = j > split_outer.part(i) ||
                        (j <= split_inner.part(i) && j > mu_minus().part(i));
            if (!first) out << " ";
            out << tableau.at(i, j);
            if (gray) out << "g";
            first = false;
        }
        if (first) out << ".";
    }
    return out.str();
}

std::vector<std::pair<Partition, Partition>> enumerate_splits(const Partition& lam,
                                                              const Partition& lamPlus,
                                                              const Partition& muMinus,
                                                              const Partition& mu) {
    if (!is_broken_ribbon(SkewShape(lamPlus, lam)))
        throw std::invalid_argument("enumerate_splits: lamPlus/lam is not a broken ribbon");
    if (!is_broken_ribbon(SkewShape(mu, muMinus)))
        throw std::invalid_argument("enumerate_splits: mu/muMinus is not a broken ribbon");
    std::vector<Partition> outers, inners;
    int top = lamPlus.size() - lam.size();
    for (int k = 0; k <= top; ++k)
        for (const Partition& cand : enumerate_outer_extensions(lam, k, StripKind::Horizontal))
            if (contains(cand, lamPlus) && is_vertical_strip(SkewShape(lamPlus, cand)))
                outers.push_back(cand);
    int bottom = mu.size() - muMinus.size();
    for (int k = 0; k <= bottom; ++k)
        for (const Partition& cand : enumerate_outer_extensions(muMinus, k, StripKind::Horizontal))
            if (contains(cand, mu) && is_vertical_strip(SkewShape(mu, cand)))
                inners.push_back(cand);
    std::vector<std::pair<Partition, Partition>> out;
    for (const auto& o : outers)
        for (const auto& in : inners) out.emplace_back(o, in);
    return out;
}

QPoly split_weight_sum(const Partition& lam, const Partition& lamPlus, const Partition& muMinus,
                       const Partition& mu) {
    QPoly total;
    int sign = (mu.size() - muMinus.size()) % 2 ? -1 : 1;
    for (const auto& [lp, mp] : enumerate_splits(lam, lamPlus, muMinus, mu)) {
        int gray = (lamPlus.size() - lp.size()) + (mp.size() - muMinus.size());
        total += QPoly(sign) * neg_q_pow(gray);
    }
    return total;
}

CancelOutcome cancel_step(const ColoredTableau& ct) {
    ct.validate();
    if (!psi_is_fixed(ct.tableau, ct.split_outer, ct.split_inner)) {
        ColoredTableau partner{psi(ct.tableau, ct.split_outer, ct.split_inner), ct.base_outer,
                               ct.base_inner, ct.split_outer, ct.split_inner};
        partner.validate();
        return partner;
    }
    auto [s, w] = psi_fixed_decompose(ct.tableau, ct.split_outer, ct.split_inner);
    PhiTrace tr;
    SkewTableau s2 = phi(s, ct.base_outer, ct.base_inner, &tr);
    if (tr.fixed_point) {
        auto [r, v] = phi_fixed_decompose(s, ct.base_outer, ct.base_inner);
        return Survivor{r, v, w};
    }
    SkewTableau rebuilt = s2;
    for (int k : w) rebuilt = insert(rebuilt, k).tableau;
    ColoredTableau partner{rebuilt, ct.base_outer, ct.base_inner, s2.outer(), s2.inner()};
    partner.validate();
    return partner;
}

ColoredTableau survivor_rebuild(const Survivor& s, const Partition& lam, const Partition& mu) {
    SkewTableau white = s.tableau;
    for (int k : s.v) white = insert(white, k).tableau;
    SkewTableau full = white;
    for (int k : s.w) full = insert(full, k).tableau;
    ColoredTableau ct{full, lam, mu, white.outer(), white.inner()};
    ct.validate();
    return ct;
}

BijectiveReport verify_sqmnr_bijective(const Partition& lam, const Partition& mu, int r, int nvars) {
    BijectiveReport report;
    auto fail = [&](const std::string& msg) {
        if (report.pass) {
            report.pass = false;
            report.detail = msg;
        }
    };
    std::map<std::vector<int>, QPoly> survivors;
    for (int j = 0; j <= r; ++j) {
        for (const Partition& lamPlus : enumerate_outer_extensions(lam, r - j, StripKind::BrokenRibbon)) {
            for (const Partition& muMinus : enumerate_inner_contractions(mu, j, StripKind::BrokenRibbon)) {
                auto splits = enumerate_splits(lam, lamPlus, muMinus, mu);
                for (const auto& [lp, mp] : splits) {
                    for (const SkewTableau& t : all_ssyt(SkewShape(lamPlus, muMinus), nvars)) {
                        ColoredTableau ct{t, lam, mu, lp, mp};
                        ++report.cases;
                        CancelOutcome outcome = cancel_step(ct);
                        if (auto* partner = std::get_if<ColoredTableau>(&outcome)) {
                            if (*partner == ct) {
                                fail("non-survivor mapped to itself");
                                continue;
                            }
                            if (partner->weight() != -ct.weight())
                                fail("partner weight is not the opposite");
                            if (partner->tableau.content(nvars) != t.content(nvars))
                                fail("partner content differs");
                            CancelOutcome back = cancel_step(*partner);
                            auto* orig = std::get_if<ColoredTableau>(&back);
                            if (!orig || !(*orig == ct)) fail("cancel_step is not an involution");
                        } else {
                            const Survivor& s = std::get<Survivor>(outcome);
                            ++report.survivors;
                            if (static_cast<int>(s.v.size() + s.w.size()) != r)
                                fail("survivor word lengths do not sum to r");
                            ColoredTableau round = survivor_rebuild(s, lam, mu);
                            if (!(round == ct)) fail("survivor round trip differs");
                            survivors[t.content(nvars)] += ct.weight();
                        }
                    }
                }
            }
        }
    }
    // Survivor generating function must match the left-hand side.
    SymFunc lhs = skew_schur(SkewShape(lam, mu), nvars);
    SymFunc weights(nvars);
    for (const Partition& tau : partitions_of(r))
        weights = weights + monomial(tau, nvars).scale(kOneMinusQ.power(tau.length()));
    lhs = lhs * weights;
    std::map<Partition, QPoly> sorted_terms;
    for (const auto& [content, coeff] : survivors) {
        if (coeff.is_zero()) continue;
        std::vector<int> sorted = content;
        std::sort(sorted.begin(), sorted.end(), std::greater<int>());
        // a symmetric sum has equal coefficients across each orbit
        auto it = survivors.find(sorted);
        if (it == survivors.end() || it->second != coeff) fail("survivor sum is not symmetric");
        sorted_terms[Partition(sorted)] = coeff;
    }
    if (report.pass) {
        std::map<Partition, QPoly> expected;
        for (const auto& [key, coeff] : lhs.terms()) expected[key] = coeff;
        if (sorted_terms != expected) fail("survivor generating function mismatch");
    }
    return report;
}

SkewSchurSum rhs_sqmnr_prime(const Partition& lam, const Partition& mu, int r) {
    SkewSchurSum out;
    if (r == 0) {
        out.add_term(SkewShape(lam, mu), QPoly(1));
        return out;
    }
    for (int j = 0; j <= r; ++j) {
        for (const Partition& lamPlus : enumerate_outer_extensions(lam, r - j, StripKind::BrokenRibbon)) {
            RibbonStats top = ribbon_stats(SkewShape(lamPlus, lam));
            for (const Partition& muMinus : enumerate_inner_contractions(mu, j, StripKind::BrokenRibbon)) {
                RibbonStats bottom = ribbon_stats(SkewShape(mu, muMinus));
                QPoly coeff = QPoly(j % 2 ? -1 : 1) * neg_q_pow(top.hgt + bottom.wt) *
                              kOneMinusQ.power(top.rib + bottom.rib - 1);
                out.add_term(SkewShape(lamPlus, muMinus), coeff);
            }
        }
    }
    return out;
}

SkewSchurSum rhs_sqmnr(const Partition& lam, const Partition& mu, int r) {
    SkewSchurSum out;
    if (r == 0) {
        out.add_term(SkewShape(lam, mu), QPoly(1));
        return out;
    }
    QPoly qMinusOne = -kOneMinusQ;
    for (int j = 0; j <= r; ++j) {
        for (const Partition& lamPlus : enumerate_outer_extensions(lam, r - j, StripKind::BrokenRibbon)) {
            RibbonStats top = ribbon_stats(SkewShape(lamPlus, lam));
            for (const Partition& muMinus : enumerate_inner_contractions(mu, j, StripKind::BrokenRibbon)) {
                RibbonStats bottom = ribbon_stats(SkewShape(mu, muMinus));
                int sign = ((r + 1 - j) + top.wt + bottom.hgt) % 2 ? -1 : 1;
                QPoly coeff = QPoly(sign) * QPoly::monomial(1, top.hgt + bottom.wt) *
                              qMinusOne.power(top.rib + bottom.rib - 1);
                out.add_term(SkewShape(lamPlus, muMinus), coeff);
            }
        }
    }
    return out;
}

SkewSchurSum rhs_spr(const Partition& lam, const Partition& mu, int r) {
    SkewSchurSum out;
    for (int j = 0; j <= r; ++j) {
        for (const Partition& lamPlus : enumerate_outer_extensions(lam, r - j, StripKind::Horizontal))
            for (const Partition& muMinus : enumerate_inner_contractions(mu, j, StripKind::Vertical))
                out.add_term(SkewShape(lamPlus, muMinus), QPoly(j % 2 ? -1 : 1));
    }
    return out;
}

SkewSchurSum rhs_cspr(const Partition& lam, const Partition& mu, int r) {
    SkewSchurSum out;
    for (int j = 0; j <= r; ++j) {
        for (const Partition& lamPlus : enumerate_outer_extensions(lam, r - j, StripKind::Vertical))
            for (const Partition& muMinus : enumerate_inner_contractions(mu, j, StripKind::Horizontal))
                out.add_term(SkewShape(lamPlus, muMinus), QPoly(j % 2 ? -1 : 1));
    }
    return out;
}

SkewSchurSum rhs_smnr(const Partition& lam, const Partition& mu, int r) {
    SkewSchurSum out;
    if (r == 0) {
        out.add_term(SkewShape(lam, mu), QPoly(1));
        return out;
    }
    for (const Partition& lamPlus : enumerate_outer_extensions(lam, r, StripKind::Ribbon)) {
        RibbonStats st = ribbon_stats(SkewShape(lamPlus, lam));
        out.add_term(SkewShape(lamPlus, mu), QPoly(st.hgt % 2 ? -1 : 1));
    }
    for (const Partition& muMinus : enumerate_inner_contractions(mu, r, StripKind::Ribbon)) {
        RibbonStats st = ribbon_stats(SkewShape(mu, muMinus));
        out.add_term(SkewShape(lam, muMinus), QPoly(st.hgt % 2 ? 1 : -1));
    }
    return out;
}

SkewSchurSum rhs_qmnr(const Partition& lam, const Partition& mu, int r) {
    SkewSchurSum out;
    if (r == 0) {
        out.add_term(SkewShape(lam, mu), QPoly(1));
        return out;
    }
    QPoly qMinusOne = -kOneMinusQ;
    for (const Partition& lamPlus : enumerate_outer_extensions(lam, r, StripKind::BrokenRibbon)) {
        RibbonStats st = ribbon_stats(SkewShape(lamPlus, lam));
        int sign = ((r + 1) + st.wt) % 2 ? -1 : 1;
        out.add_term(SkewShape(lamPlus, mu),
                     QPoly(sign) * QPoly::monomial(1, st.hgt) * qMinusOne.power(st.rib - 1));
    }
    return out;
}

SkewSchurSum rhs_sqmnr3(const Partition& lam, const Partition& mu, int r) {
    SkewSchurSum out;
    if (r == 0) {
        out.add_term(SkewShape(lam, mu), QPoly(1));
        return out;
    }
    int lead = (r - 1) % 2 ? -1 : 1;
    for (int j = 0; j <= r; ++j) {
        for (const Partition& lamPlus : enumerate_outer_extensions(lam, r - j, StripKind::BrokenRibbon)) {
            RibbonStats top = ribbon_stats(SkewShape(lamPlus, lam));
            for (const Partition& muMinus : enumerate_inner_contractions(mu, j, StripKind::BrokenRibbon)) {
                RibbonStats bottom = ribbon_stats(SkewShape(mu, muMinus));
                QPoly coeff = QPoly(lead * (j % 2 ? -1 : 1)) * neg_q_pow(top.wt + bottom.hgt) *
                              kOneMinusQ.power(top.rib + bottom.rib - 1);
                out.add_term(SkewShape(lamPlus, muMinus), coeff);
            }
        }
    }
    return out;
}

QPoly chi_coefficient(const Partition& lamPlus, const Partition& lam, const Partition& mu,
                      const Partition& muMinus, const Partition& tau) {
    if (!contains(lam, lamPlus) || !contains(muMinus, mu))
        throw std::invalid_argument("chi_coefficient: shapes are not nested");
    if (tau.empty()) return (lamPlus == lam && muMinus == mu) ? QPoly(1) : QPoly(0);
    QPoly total;
    int levels = tau.length();
    // Layers of the tableau pair are increasing (lam side) and decreasing
    // (mu side) chains of partitions with broken ribbon steps.
    std::function<void(int, const Partition&, const Partition&, int, int, int)> rec =
        [&](int level, const Partition& curLam, const Partition& curMu, int hgtTop, int wtBottom,
            int ribTotal) {
            if (level > levels) {
                // one (1-q) factor cancels per level, matching the iterated
                // single-row rule
                if (curLam == lamPlus && curMu == muMinus)
                    total += neg_q_pow(hgtTop + wtBottom) * kOneMinusQ.power(ribTotal - levels);
                return;
            }
            int layer = tau.part(level);
            for (int a = 0; a <= layer; ++a) {
                for (const Partition& nextLam :
                     enumerate_outer_extensions(curLam, a, StripKind::BrokenRibbon)) {
                    if (!contains(nextLam, lamPlus)) continue;
                    RibbonStats top = ribbon_stats(SkewShape(nextLam, curLam));
                    for (const Partition& nextMu :
                         enumerate_inner_contractions(curMu, layer - a, StripKind::BrokenRibbon)) {
                        if (!contains(muMinus, nextMu)) continue;
                        RibbonStats bottom = ribbon_stats(SkewShape(curMu, nextMu));
                        rec(level + 1, nextLam, nextMu, hgtTop + top.hgt, wtBottom + bottom.wt,
                            ribTotal + top.rib + bottom.rib);
                    }
                }
            }
        };
    rec(1, lam, mu, 0, 0, 0);
    return total;
}

SkewSchurSum rhs_qpower_prod(const Partition& lam, const Partition& mu, const Partition& tau) {
    SkewSchurSum out;
    int r = tau.size();
    for (int a = 0; a <= r; ++a) {
        for (const Partition& lamPlus : enumerate_outer_extensions(lam, a, StripKind::Any)) {
            for (const Partition& muMinus : enumerate_inner_contractions(mu, r - a, StripKind::Any)) {
                QPoly chi = chi_coefficient(lamPlus, lam, mu, muMinus, tau);
                if (chi.is_zero()) continue;
                int sign = (mu.size() - muMinus.size()) % 2 ? -1 : 1;
                out.add_term(SkewShape(lamPlus, muMinus), QPoly(sign) * chi);
            }
        }
    }
    return out;
}

}  // namespace skewsym
