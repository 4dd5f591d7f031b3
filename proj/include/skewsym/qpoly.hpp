#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace skewsym {

struct overflow_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct not_divisible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Integer-coefficient polynomial in the single parameter q.
/// Coefficients are checked 64-bit; any overflow throws overflow_error.
/// Canonical form: no trailing zero coefficients, zero polynomial is empty.
class QPoly {
public:
    QPoly() = default;
    QPoly(std::int64_t constant);
    explicit QPoly(std::vector<std::int64_t> coeffs);

    static QPoly q();                        // the monomial q
    static QPoly monomial(std::int64_t c, int power);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::int64_t coeff(int i) const;
    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

    QPoly operator-() const;
    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly& operator+=(const QPoly& o) { return *this = *this + o; }
    QPoly& operator-=(const QPoly& o) { return *this = *this - o; }
    QPoly& operator*=(const QPoly& o) { return *this = *this * o; }
    bool operator==(const QPoly& o) const { return coeffs_ == o.coeffs_; }

    QPoly power(int e) const;
    std::int64_t eval_int(std::int64_t v) const;

    /// Exact quotient; throws not_divisible when the division leaves a
    /// remainder (an identity-violation signal, not a crash path).
    QPoly div_exact(const QPoly& b) const;

    /// Ascending-power rendering, e.g. "1 - 2*q + q^2"; zero renders "0".
    std::string to_string() const;
    static QPoly parse(const std::string& text);

private:
    void normalize();
    std::vector<std::int64_t> coeffs_;
};

/// Gaussian binomial coefficient [n k]_q via the Pascal recursion
/// [n,k] = [n-1,k-1] + q^k [n-1,k]; zero when k < 0 or k > n.
QPoly q_binomial(int n, int k);

}  // namespace skewsym
