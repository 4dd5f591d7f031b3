#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "doctest.h"
#include "skewsym/symfunc.hpp"

using namespace skewsym;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

// complete homogeneous h_r = sum of all monomials of degree r
SymFunc complete(int r, int nvars) {
    SymFunc out(nvars);
    if (r == 0) {
        out.add_term(Partition(), QPoly(1));
        return out;
    }
    if (r < 0) return out;
    for (const Partition& tau : partitions_of(r))
        if (tau.length() <= nvars) out.add_term(tau, QPoly(1));
    return out;
}

// independent reference for skew Schur: the h-determinant expansion,
// computed by Laplace expansion along the first row
SymFunc jacobi_trudi(const SkewShape& s, int nvars) {
    int l = s.outer().length();
    std::vector<std::vector<int>> deg(l, std::vector<int>(l));
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j)
            deg[i - 1][j - 1] = s.outer().part(i) - s.inner().part(j) - i + j;
    std::function<SymFunc(std::vector<int>, int)> det = [&](std::vector<int> cols,
                                                            int row) -> SymFunc {
        if (cols.empty()) {
            SymFunc one(nvars);
            one.add_term(Partition(), QPoly(1));
            return one;
        }
        SymFunc out(nvars);
        for (std::size_t c = 0; c < cols.size(); ++c) {
            std::vector<int> rest;
            for (std::size_t k = 0; k < cols.size(); ++k)
                if (k != c) rest.push_back(cols[k]);
            SymFunc term = complete(deg[row][cols[c]], nvars) * det(rest, row + 1);
            out = c % 2 ? out - term : out + term;
        }
        return out;
    };
    std::vector<int> cols;
    for (int j = 0; j < l; ++j) cols.push_back(j);
    return det(cols, 0);
}

}  // namespace

TEST_CASE("monomial basis elements and products") {
    SymFunc m1 = monomial(P({1}), 2);
    SymFunc prod = m1 * m1;  // (x1+x2)^2 = m2 + 2 m11
    CHECK(prod.coeff(P({2})) == QPoly(1));
    CHECK(prod.coeff(P({1, 1})) == QPoly(2));
    CHECK(prod.terms().size() == 2);
    // m_lambda with more parts than variables vanishes
    CHECK(monomial(P({1, 1, 1}), 2).is_zero());
    // product against a 3-variable hand expansion: m1 * m11 in 3 vars
    SymFunc p2 = monomial(P({1}), 3) * monomial(P({1, 1}), 3);
    CHECK(p2.coeff(P({2, 1})) == QPoly(1));
    CHECK(p2.coeff(P({1, 1, 1})) == QPoly(3));
    CHECK(p2.terms().size() == 2);
}

TEST_CASE("ring axioms on small sweeps") {
    std::vector<SymFunc> basis;
    for (const Partition& p : partitions_up_to(3)) basis.push_back(monomial(p, 3));
    for (const SymFunc& a : basis)
        for (const SymFunc& b : basis) {
            CHECK(a * b == b * a);
            CHECK((a + b) - b == a);
        }
    CHECK((basis[1] * basis[2]) * basis[1] == basis[1] * (basis[2] * basis[1]));
}

TEST_CASE("power sums and elementaries in monomial coordinates") {
    CHECK(power_sum(3, 4) == monomial(P({3}), 4));
    CHECK(elementary(2, 4) == monomial(P({1, 1}), 4));
    CHECK(elementary(3, 2).is_zero());  // e_r needs at least r variables
    SymFunc e0 = elementary(0, 3);
    CHECK(e0.coeff(Partition()) == QPoly(1));
}

TEST_CASE("skew Schur agrees with the h-determinant reference") {
    for (const char* text : {"1", "2", "1,1", "2,1", "3", "2,2", "3,1", "2,1/1", "2,2/1",
                             "3,1/1", "3,2,2/1,1", "2,2,1/1,1", "3,2/2"}) {
        SkewShape s = SkewShape::parse(text);
        for (int n : {2, 3, 4}) CHECK(skew_schur(s, n) == jacobi_trudi(s, n));
    }
    // disconnected shape: two free cells give the square of m1
    CHECK(skew_schur(SkewShape::parse("2,1/1"), 3) == monomial(P({1}), 3) * monomial(P({1}), 3));
}

TEST_CASE("skew Schur hand values") {
    SymFunc s21 = skew_schur(SkewShape::parse("2,1"), 3);
    CHECK(s21.coeff(P({2, 1})) == QPoly(1));
    CHECK(s21.coeff(P({1, 1, 1})) == QPoly(2));
    CHECK(s21.coeff(P({3})).is_zero());
    SymFunc s22 = skew_schur(SkewShape::parse("2,2"), 4);
    CHECK(s22.coeff(P({2, 2})) == QPoly(1));
    CHECK(s22.coeff(P({2, 1, 1})) == QPoly(1));
    CHECK(s22.coeff(P({1, 1, 1, 1})) == QPoly(2));
}

TEST_CASE("quantum power sum displayed expansions") {
    QPoly qm1(std::vector<std::int64_t>{-1, 1});  // q - 1
    SymFunc w4 = qpower(4, 4);
    CHECK(w4.coeff(P({4})) == QPoly(1));
    CHECK(w4.coeff(P({3, 1})) == -qm1);
    CHECK(w4.coeff(P({2, 2})) == -qm1);
    CHECK(w4.coeff(P({2, 1, 1})) == qm1 * qm1);
    CHECK(w4.coeff(P({1, 1, 1, 1})) == -(qm1 * qm1 * qm1));
    CHECK(w4.terms().size() == 5);

    SymFunc w22 = qpower_prod(P({2, 2}), 4);
    CHECK(w22.coeff(P({4})) == QPoly(1));
    CHECK(w22.coeff(P({3, 1})) == QPoly(-2) * qm1);
    CHECK(w22.coeff(P({2, 2})) == QPoly(std::vector<std::int64_t>{3, -2, 1}));
    CHECK(w22.coeff(P({2, 1, 1})) == QPoly(2) * qm1 * QPoly(std::vector<std::int64_t>{-2, 1}));
    CHECK(w22.coeff(P({1, 1, 1, 1})) == QPoly(6) * qm1 * qm1);
    CHECK(w22 == qpower(2, 4) * qpower(2, 4));
}

TEST_CASE("second deformation displayed expansion") {
    QPoly qm1(std::vector<std::int64_t>{-1, 1});  // q - 1
    QPoly q = QPoly::q();
    SymFunc b4 = barp(4, 4);
    CHECK(b4.coeff(P({4})) == q.power(3));
    CHECK(b4.coeff(P({3, 1})) == q.power(2) * qm1);
    CHECK(b4.coeff(P({2, 2})) == q.power(2) * qm1);
    CHECK(b4.coeff(P({2, 1, 1})) == q * qm1 * qm1);
    CHECK(b4.coeff(P({1, 1, 1, 1})) == qm1 * qm1 * qm1);
    // bar-p_22 display
    SymFunc b22 = barp(2, 4) * barp(2, 4);
    CHECK(b22.coeff(P({4})) == q.power(2));
    CHECK(b22.coeff(P({3, 1})) == QPoly(2) * q * qm1);
    CHECK(b22.coeff(P({2, 2})) == QPoly(std::vector<std::int64_t>{1, -2, 3}));
    CHECK(b22.coeff(P({2, 1, 1})) == QPoly(2) * qm1 * QPoly(std::vector<std::int64_t>{-1, 2}));
    CHECK(b22.coeff(P({1, 1, 1, 1})) == QPoly(6) * qm1 * qm1);
}

TEST_CASE("specializations of the deformed power sums") {
    for (int r = 1; r <= 4; ++r) {
        int n = r + 1;
        CHECK(qpower(r, n).specialize(1) == power_sum(r, n));
        CHECK(barp(r, n).specialize(1) == power_sum(r, n));
        CHECK(qpower(r, n).specialize(0) ==
              skew_schur(SkewShape(P({r}), Partition()), n));
        SymFunc sign_e(n);
        sign_e = elementary(r, n).scale(QPoly(r % 2 ? 1 : -1));
        CHECK(barp(r, n).specialize(0) == sign_e);
    }
}

TEST_CASE("formal sums expand linearly") {
    SkewSchurSum sum;
    sum.add_term(SkewShape::parse("2,1/1"), QPoly::q());
    sum.add_term(SkewShape::parse("2"), QPoly(-1));
    SymFunc expanded = expand_sum(sum, 3);
    CHECK(expanded == skew_schur(SkewShape::parse("2,1/1"), 3).scale(QPoly::q()) +
                          skew_schur(SkewShape::parse("2"), 3).scale(QPoly(-1)));
    // cancelling coefficients drop the term
    sum.add_term(SkewShape::parse("2"), QPoly(1));
    CHECK(sum.terms().size() == 1);
}

TEST_CASE("renderings parse back to equal values") {
    SymFunc f = qpower(3, 3) + skew_schur(SkewShape::parse("2,1"), 3);
    CHECK(SymFunc::parse(f.to_string(), 3) == f);
    SkewSchurSum sum;
    sum.add_term(SkewShape::parse("3,2,2/1,1"), QPoly(std::vector<std::int64_t>{0, -1}));
    sum.add_term(SkewShape::parse("2,2"), QPoly(2));
    CHECK(SkewSchurSum::parse(sum.to_string()) == sum);
    CHECK(sum.to_string() == "(-q) * s[3,2,2/1,1] + (2) * s[2,2]");
}

TEST_CASE("degree guardrail") {
    CHECK(max_degree() >= 1);
    CHECK_NOTHROW(check_degree(max_degree()));
    CHECK_THROWS_AS(check_degree(max_degree() + 1), degree_limit_error);
}

TEST_CASE("tableau content enumeration defines the Schur expansion") {
    // summing one monomial per tableau content reproduces skew_schur
    SkewShape s = SkewShape::parse("2,2/1");
    int n = 3;
    std::map<Partition, std::int64_t> counts;
    for_each_ssyt_content(s, n, [&](const std::vector<int>& content) {
        std::vector<int> trimmed(content);
        while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
        if (!std::is_sorted(trimmed.rbegin(), trimmed.rend())) return;
        counts[Partition(trimmed)] += 1;
    });
    SymFunc sch = skew_schur(s, n);
    CHECK(counts.size() == sch.terms().size());
    for (const auto& [key, c] : counts) CHECK(sch.coeff(key) == QPoly(c));
}
