#include "skewsym/qpoly.hpp"

#include <cctype>
#include <sstream>

namespace skewsym {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw overflow_error("QPoly: integer overflow in add");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("QPoly: integer overflow in mul");
    return r;
}

}  // namespace

QPoly::QPoly(std::int64_t constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

QPoly::QPoly(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void QPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly QPoly::q() { return monomial(1, 1); }

QPoly QPoly::monomial(std::int64_t c, int power) {
    if (c == 0) return QPoly();
    std::vector<std::int64_t> v(static_cast<std::size_t>(power) + 1, 0);
    v.back() = c;
    return QPoly(std::move(v));
}

std::int64_t QPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& c : r.coeffs_) c = checked_mul(c, -1);
    return r;
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<std::int64_t> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = checked_add(i < coeffs_.size() ? coeffs_[i] : 0,
                           i < o.coeffs_.size() ? o.coeffs_[i] : 0);
    return QPoly(std::move(v));
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    std::vector<std::int64_t> v(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            v[i + j] = checked_add(v[i + j], checked_mul(coeffs_[i], o.coeffs_[j]));
    return QPoly(std::move(v));
}

QPoly QPoly::power(int e) const {
    if (e < 0) throw std::invalid_argument("QPoly::power: negative exponent");
    QPoly r(1);
    for (int i = 0; i < e; ++i) r *= *this;
    return r;
}

std::int64_t QPoly::eval_int(std::int64_t v) const {
    std::int64_t r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        r = checked_add(checked_mul(r, v), *it);
    return r;
}

QPoly QPoly::div_exact(const QPoly& b) const {
    if (b.is_zero()) throw std::invalid_argument("QPoly::div_exact: division by zero");
    if (is_zero()) return QPoly();
    if (degree() < b.degree()) throw not_divisible("QPoly: degree of divisor exceeds dividend");
    std::vector<std::int64_t> rem = coeffs_;
    std::vector<std::int64_t> quot(coeffs_.size() - b.coeffs_.size() + 1, 0);
    std::int64_t lead = b.coeffs_.back();
    for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
        std::int64_t top = rem[static_cast<std::size_t>(i) + b.coeffs_.size() - 1];
        if (top % lead != 0) throw not_divisible("QPoly: not divisible");
        std::int64_t f = top / lead;
        quot[static_cast<std::size_t>(i)] = f;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            rem[i + j] = checked_add(rem[i + j], checked_mul(-f, b.coeffs_[j]));
    }
    for (auto c : rem)
        if (c != 0) throw not_divisible("QPoly: not divisible");
    return QPoly(std::move(quot));
}

std::string QPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        std::int64_t c = coeffs_[i];
        if (c == 0) continue;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::int64_t a = c < 0 ? -c : c;
        if (i == 0) {
            out << a;
        } else {
            if (a != 1) out << a << "*";
            out << "q";
            if (i > 1) out << "^" << i;
        }
        first = false;
    }
    return out.str();
}

QPoly QPoly::parse(const std::string& text) {
    std::size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    auto fail = [&]() -> void { throw std::invalid_argument("QPoly::parse: bad input '" + text + "'"); };

    QPoly result;
    skip_ws();
    if (pos >= text.size()) fail();
    bool first = true;
    while (pos < text.size()) {
        skip_ws();
        if (pos >= text.size()) break;
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            if (text[pos] == '-') sign = -1;
            ++pos;
            skip_ws();
        } else if (!first) {
            fail();
        }
        std::int64_t coef = 1;
        bool have_num = false;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            coef = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                coef = checked_add(checked_mul(coef, 10), text[pos++] - '0');
            have_num = true;
        }
        skip_ws();
        int power = 0;
        if (pos < text.size() && (text[pos] == '*' || text[pos] == 'q')) {
            if (text[pos] == '*') {
                if (!have_num) fail();
                ++pos;
                skip_ws();
                if (pos >= text.size() || text[pos] != 'q') fail();
            }
            ++pos;  // past 'q'
            power = 1;
            skip_ws();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                skip_ws();
                if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) fail();
                power = 0;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                    power = power * 10 + (text[pos++] - '0');
            }
        } else if (!have_num) {
            fail();
        }
        result += monomial(sign * coef, power);
        first = false;
        skip_ws();
    }
    return result;
}

QPoly q_binomial(int n, int k) {
    if (n < 0) throw std::invalid_argument("q_binomial: n must be nonnegative");
    if (k < 0 || k > n) return QPoly();
    // row-by-row Pascal recursion, stays in the polynomial ring
    std::vector<QPoly> row(static_cast<std::size_t>(k) + 1);
    row[0] = QPoly(1);
    for (int m = 1; m <= n; ++m) {
        for (int j = std::min(m, k); j >= 1; --j)
            row[static_cast<std::size_t>(j)] =
                row[static_cast<std::size_t>(j) - 1] +
                QPoly::monomial(1, j) * row[static_cast<std::size_t>(j)];
    }
    return row[static_cast<std::size_t>(k)];
}

}  // namespace skewsym
