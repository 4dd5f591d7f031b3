#include "skewsym/symfunc.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <sstream>

namespace skewsym {

int max_degree() {
    static int limit = [] {
        if (const char* env = std::getenv("SKEWSYM_MAX_DEGREE")) {
            int v = std::atoi(env);
            if (v > 0) return v;
        }
        return 14;
    }();
    return limit;
}

void check_degree(int degree) {
    if (degree > max_degree())
        throw degree_limit_error("total degree " + std::to_string(degree) +
                                 " exceeds limit " + std::to_string(max_degree()));
}

SymFunc::SymFunc(int nvars) : nvars_(nvars) {
    if (nvars < 1) throw std::invalid_argument("SymFunc: nvars must be positive");
}

QPoly SymFunc::coeff(const Partition& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? QPoly() : it->second;
}

void SymFunc::add_term(const Partition& key, const QPoly& c) {
    if (c.is_zero() || key.length() > nvars_) return;
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymFunc SymFunc::operator+(const SymFunc& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("SymFunc: nvars mismatch");
    SymFunc r = *this;
    for (const auto& [key, c] : o.terms_) r.add_term(key, c);
    return r;
}

SymFunc SymFunc::operator-(const SymFunc& o) const { return *this + o.scale(QPoly(-1)); }

SymFunc SymFunc::scale(const QPoly& c) const {
    SymFunc r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [key, v] : terms_) r.terms_.emplace(key, v * c);
    return r;
}

bool SymFunc::operator==(const SymFunc& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
}

SymFunc SymFunc::specialize(std::int64_t v) const {
    SymFunc r(nvars_);
    for (const auto& [key, c] : terms_) r.add_term(key, QPoly(c.eval_int(v)));
    return r;
}

namespace {

std::int64_t factorial(int n) {
    std::int64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// |orbit(lam)| in n variables: n! / (prod_m mult_m! * (n - len)!)
std::int64_t orbit_size(const Partition& lam, int n) {
    std::int64_t denom = factorial(n - lam.length());
    int run = 1;
    for (int i = 2; i <= lam.length() + 1; ++i) {
        if (i <= lam.length() && lam.part(i) == lam.part(i - 1)) {
            ++run;
        } else {
            denom *= factorial(run);
            run = 1;
        }
    }
    return factorial(n) / denom;
}

std::vector<int> padded_desc(const Partition& lam, int n) {
    std::vector<int> v(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= lam.length(); ++i) v[static_cast<std::size_t>(i) - 1] = lam.part(i);
    return v;
}

Partition sorted_partition(std::vector<int> v) {
    std::sort(v.begin(), v.end(), std::greater<int>());
    while (!v.empty() && v.back() == 0) v.pop_back();
    return Partition(std::move(v));
}

int total_degree(const SymFunc& f) {
    int d = 0;
    for (const auto& [key, c] : f.terms()) d = std::max(d, key.size());
    return d;
}

}  // namespace

SymFunc SymFunc::operator*(const SymFunc& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("SymFunc: nvars mismatch");
    check_degree(total_degree(*this) + total_degree(o));
    SymFunc result(nvars_);
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : o.terms_) {
            std::int64_t oa = orbit_size(ka, nvars_);
            std::int64_t ob = orbit_size(kb, nvars_);
            const Partition& big = oa >= ob ? ka : kb;
            const Partition& small = oa >= ob ? kb : ka;
            std::int64_t big_orbit = std::max(oa, ob);
            std::vector<int> fixed = padded_desc(big, nvars_);
            std::vector<int> perm = padded_desc(small, nvars_);
            std::sort(perm.begin(), perm.end());
            // count, per product partition nu, how many orbit members of
            // `small` land on nu against the fixed representative of `big`
            std::map<Partition, std::int64_t> hits;
            std::vector<int> sum(static_cast<std::size_t>(nvars_));
            do {
                for (int i = 0; i < nvars_; ++i)
                    sum[static_cast<std::size_t>(i)] =
                        fixed[static_cast<std::size_t>(i)] + perm[static_cast<std::size_t>(i)];
                ++hits[sorted_partition(sum)];
            } while (std::next_permutation(perm.begin(), perm.end()));
            QPoly c = ca * cb;
            for (const auto& [nu, m] : hits) {
                // pair count = |orbit(big)| * hits / |orbit(nu)|, always exact
                __int128 pairs = static_cast<__int128>(m) * big_orbit;
                std::int64_t on = orbit_size(nu, nvars_);
                std::int64_t mult = static_cast<std::int64_t>(pairs / on);
                result.add_term(nu, c * QPoly(mult));
            }
        }
    }
    return result;
}

SymFunc monomial(const Partition& lam, int nvars) {
    SymFunc r(nvars);
    r.add_term(lam, QPoly(1));
    return r;
}

SymFunc power_sum(int r, int nvars) {
    if (r < 1) throw std::invalid_argument("power_sum: r must be positive");
    return monomial(Partition({r}), nvars);
}

SymFunc elementary(int r, int nvars) {
    if (r < 0) throw std::invalid_argument("elementary: r must be nonnegative");
    return monomial(Partition(std::vector<int>(static_cast<std::size_t>(r), 1)), nvars);
}

void for_each_ssyt_content(const SkewShape& s, int maxEntry,
                           const std::function<void(const std::vector<int>&)>& visit) {
    auto cells = s.cells();
    std::vector<int> content(static_cast<std::size_t>(maxEntry), 0);
    // grid of values, 0 = unset
    int nrows = s.outer().length();
    int ncols = s.outer().part(1);
    std::vector<std::vector<int>> grid(static_cast<std::size_t>(nrows) + 1,
                                       std::vector<int>(static_cast<std::size_t>(ncols) + 1, 0));
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == cells.size()) {
            visit(content);
            return;
        }
        auto [row, col] = cells[idx];
        int lo = 1;
        if (s.contains({row, col - 1})) lo = std::max(lo, grid[row][col - 1]);
        if (s.contains({row - 1, col})) lo = std::max(lo, grid[row - 1][col] + 1);
        for (int v = lo; v <= maxEntry; ++v) {
            grid[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = v;
            ++content[static_cast<std::size_t>(v) - 1];
            rec(idx + 1);
            --content[static_cast<std::size_t>(v) - 1];
        }
        grid[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = 0;
    };
    rec(0);
}

SymFunc skew_schur(const SkewShape& s, int nvars) {
    static std::map<std::pair<SkewShape, int>, SymFunc> cache;
    static std::mutex cache_mutex;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find({s, nvars});
        if (it != cache.end()) return it->second;
    }
    check_degree(s.size());
    SymFunc r(nvars);
    for_each_ssyt_content(s, nvars, [&](const std::vector<int>& content) {
        for (std::size_t i = 1; i < content.size(); ++i)
            if (content[i] > content[i - 1]) return;  // only sorted contents give m-coefficients
        std::vector<int> v = content;
        while (!v.empty() && v.back() == 0) v.pop_back();
        r.add_term(Partition(std::move(v)), QPoly(1));
    });
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(std::make_pair(s, nvars), r);
    return r;
}

SymFunc qpower(int r, int nvars) {
    if (r < 0) throw std::invalid_argument("qpower: r must be nonnegative");
    SymFunc result(nvars);
    if (r == 0) {
        result.add_term(Partition(), QPoly(1));
        return result;
    }
    QPoly qm1 = QPoly::q() - QPoly(1);
    for (const auto& tau : partitions_of(r)) {
        int len = tau.length();
        QPoly c = qm1.power(len - 1);
        if ((len - 1) % 2 == 1) c = -c;
        result.add_term(tau, c);
    }
    return result;
}

SymFunc qpower_prod(const Partition& tau, int nvars) {
    SymFunc result(nvars);
    result.add_term(Partition(), QPoly(1));
    for (int i = 1; i <= tau.length(); ++i) result = result * qpower(tau.part(i), nvars);
    return result;
}

SymFunc barp(int r, int nvars) {
    if (r < 1) throw std::invalid_argument("barp: r must be positive");
    SymFunc result(nvars);
    QPoly qm1 = QPoly::q() - QPoly(1);
    for (const auto& tau : partitions_of(r)) {
        int len = tau.length();
        QPoly c = QPoly::monomial(1, r - len) * qm1.power(len - 1);
        result.add_term(tau, c);
    }
    return result;
}

SymFunc expand_sum(const SkewSchurSum& ss, int nvars) {
    SymFunc result(nvars);
    for (const auto& [shape, c] : ss.terms())
        result = result + skew_schur(shape, nvars).scale(c);
    return result;
}

QPoly SkewSchurSum::coeff(const SkewShape& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? QPoly() : it->second;
}

void SkewSchurSum::add_term(const SkewShape& key, const QPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SkewSchurSum SkewSchurSum::operator+(const SkewSchurSum& o) const {
    SkewSchurSum r = *this;
    for (const auto& [key, c] : o.terms_) r.add_term(key, c);
    return r;
}

SkewSchurSum SkewSchurSum::scale(const QPoly& c) const {
    SkewSchurSum r;
    if (c.is_zero()) return r;
    for (const auto& [key, v] : terms_) r.terms_.emplace(key, v * c);
    return r;
}

bool SkewSchurSum::operator==(const SkewSchurSum& o) const { return terms_ == o.terms_; }

SkewSchurSum SkewSchurSum::specialize(std::int64_t v) const {
    SkewSchurSum r;
    for (const auto& [key, c] : terms_) r.add_term(key, QPoly(c.eval_int(v)));
    return r;
}

namespace {

// descending lexicographic on part sequences; shorter prefix sorts below
template <typename K, typename V, typename Cmp>
std::vector<std::pair<K, V>> sorted_desc(const std::map<K, V>& m, Cmp cmp) {
    std::vector<std::pair<K, V>> v(m.begin(), m.end());
    std::sort(v.begin(), v.end(), [&](const auto& a, const auto& b) { return cmp(b.first, a.first); });
    return v;
}

}  // namespace

std::string SymFunc::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, c] :
         sorted_desc(terms_, [](const Partition& a, const Partition& b) { return a < b; })) {
        if (!first) out << "\n";
        out << "(" << c.to_string() << ") * m[" << key.to_string() << "]";
        first = false;
    }
    return out.str();
}

SymFunc SymFunc::parse(const std::string& text, int nvars) {
    SymFunc r(nvars);
    if (text == "0") return r;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto rp = line.rfind(')');
        auto lb = line.find("m[", rp);
        auto rb = line.find(']', lb);
        if (line.empty() || line[0] != '(' || rp == std::string::npos ||
            lb == std::string::npos || rb == std::string::npos)
            throw std::invalid_argument("SymFunc::parse: bad line '" + line + "'");
        QPoly c = QPoly::parse(line.substr(1, rp - 1));
        Partition key = Partition::parse(line.substr(lb + 2, rb - lb - 2));
        r.add_term(key, c);
    }
    return r;
}

std::string SkewSchurSum::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    auto cmp = [](const SkewShape& a, const SkewShape& b) { return a < b; };
    for (const auto& [key, c] : sorted_desc(terms_, cmp)) {
        if (!first) out << " + ";
        out << "(" << c.to_string() << ") * s[" << key.to_string() << "]";
        first = false;
    }
    return out.str();
}

SkewSchurSum SkewSchurSum::parse(const std::string& text) {
    SkewSchurSum r;
    if (text == "0") return r;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '+')) ++pos;
        if (pos >= text.size()) break;
        if (text[pos] != '(')
            throw std::invalid_argument("SkewSchurSum::parse: expected '(' in '" + text + "'");
        auto rp = text.find(')', pos);
        auto lb = text.find("s[", rp);
        auto rb = text.find(']', lb);
        if (rp == std::string::npos || lb == std::string::npos || rb == std::string::npos)
            throw std::invalid_argument("SkewSchurSum::parse: bad input '" + text + "'");
        QPoly c = QPoly::parse(text.substr(pos + 1, rp - pos - 1));
        SkewShape key = SkewShape::parse(text.substr(lb + 2, rb - lb - 2));
        r.add_term(key, c);
        pos = rb + 1;
    }
    return r;
}

}  // namespace skewsym
