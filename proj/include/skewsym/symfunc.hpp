#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "skewsym/qpoly.hpp"
#include "skewsym/shapes.hpp"

namespace skewsym {

struct degree_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Degree guardrail for symmetric-function operations; defaults to 14,
/// overridable via SKEWSYM_MAX_DEGREE.
int max_degree();
void check_degree(int degree);

/// Symmetric polynomial of bounded degree in a fixed number of variables,
/// stored in monomial coordinates: a map from partitions (exponent multisets)
/// to QPoly coefficients. m_lambda with more parts than variables is zero
/// and never stored.
class SymFunc {
public:
    explicit SymFunc(int nvars);

    int nvars() const { return nvars_; }
    const std::map<Partition, QPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    QPoly coeff(const Partition& key) const;
    void add_term(const Partition& key, const QPoly& c);

    SymFunc operator+(const SymFunc& o) const;
    SymFunc operator-(const SymFunc& o) const;
    SymFunc operator*(const SymFunc& o) const;
    SymFunc scale(const QPoly& c) const;
    bool operator==(const SymFunc& o) const;

    /// Every coefficient evaluated at q = v.
    SymFunc specialize(std::int64_t v) const;

    /// Lines "(<qpoly>) * m[<partition>]" in descending lexicographic order.
    std::string to_string() const;
    static SymFunc parse(const std::string& text, int nvars);

private:
    int nvars_;
    std::map<Partition, QPoly> terms_;
};

/// Formal QPoly-linear combination of skew shapes.
class SkewSchurSum {
public:
    SkewSchurSum() = default;

    const std::map<SkewShape, QPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    QPoly coeff(const SkewShape& key) const;
    void add_term(const SkewShape& key, const QPoly& c);

    SkewSchurSum operator+(const SkewSchurSum& o) const;
    SkewSchurSum scale(const QPoly& c) const;
    bool operator==(const SkewSchurSum& o) const;
    SkewSchurSum specialize(std::int64_t v) const;

    /// Single-line "(<qpoly>) * s[<outer>/<inner>]" joined by " + ",
    /// descending lexicographic by (outer, inner).
    std::string to_string() const;
    static SkewSchurSum parse(const std::string& text);

private:
    std::map<SkewShape, QPoly> terms_;
};

SymFunc monomial(const Partition& lam, int nvars);
SymFunc power_sum(int r, int nvars);
SymFunc elementary(int r, int nvars);
SymFunc skew_schur(const SkewShape& s, int nvars);  // memoized
SymFunc qpower(int r, int nvars);
SymFunc qpower_prod(const Partition& tau, int nvars);
SymFunc barp(int r, int nvars);
SymFunc expand_sum(const SkewSchurSum& ss, int nvars);

/// Enumerate SSYT of the given shape with entries in 1..maxEntry, invoking
/// visit with the content vector (counts of 1..maxEntry) for each tableau.
void for_each_ssyt_content(const SkewShape& s, int maxEntry,
                           const std::function<void(const std::vector<int>&)>& visit);

}  // namespace skewsym
