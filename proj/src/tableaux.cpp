#include "skewsym/tableaux.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace skewsym {

namespace {

// Mutable row-offset representation used by the bumping algorithms.
struct Builder {
    std::vector<int> outer, inner;
    std::vector<std::vector<int>> rows;

    explicit Builder(const SkewTableau& t) {
        int n = t.outer().length();
        outer.resize(static_cast<std::size_t>(n));
        inner.resize(static_cast<std::size_t>(n));
        rows.resize(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i) {
            outer[static_cast<std::size_t>(i) - 1] = t.outer().part(i);
            inner[static_cast<std::size_t>(i) - 1] = t.inner().part(i);
            for (int j = t.inner().part(i) + 1; j <= t.outer().part(i); ++j)
                rows[static_cast<std::size_t>(i) - 1].push_back(t.at(i, j));
        }
    }

    int nrows() const { return static_cast<int>(outer.size()); }

    void ensure_row(int i) {
        while (nrows() < i) {
            outer.push_back(0);
            inner.push_back(0);
            rows.emplace_back();
        }
    }

    int out(int i) const { return i >= 1 && i <= nrows() ? outer[static_cast<std::size_t>(i) - 1] : 0; }
    int inn(int i) const { return i >= 1 && i <= nrows() ? inner[static_cast<std::size_t>(i) - 1] : 0; }

    int& at(int i, int j) { return rows[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j - inn(i)) - 1]; }

    SkewTableau finish() const {
        std::vector<int> o = outer, in = inner;
        while (!o.empty() && o.back() == 0) {
            o.pop_back();
        }
        std::vector<int> trimmed_inner(in.begin(), in.begin() + static_cast<long>(o.size()));
        while (!trimmed_inner.empty() && trimmed_inner.back() == 0) trimmed_inner.pop_back();
        std::vector<std::vector<int>> r(rows.begin(), rows.begin() + static_cast<long>(o.size()));
        return SkewTableau(SkewShape(Partition(o), Partition(trimmed_inner)), std::move(r));
    }

    // Bump k downward starting at the given row; returns the exit row.
    int bump_down(int start_row, int k, std::vector<BumpStep>& trace) {
        int cur = k;
        for (int i = start_row;; ++i) {
            ensure_row(i);
            int found = 0;
            for (int j = inn(i) + 1; j <= out(i); ++j) {
                if (at(i, j) > cur) {
                    found = j;
                    break;
                }
            }
            if (found) {
                int old = at(i, found);
                at(i, found) = cur;
                trace.push_back({i, found, old, cur});
                cur = old;
            } else {
                int col = out(i) + 1;
                outer[static_cast<std::size_t>(i) - 1] = col;
                rows[static_cast<std::size_t>(i) - 1].push_back(cur);
                trace.push_back({i, col, -1, cur});
                return i;
            }
        }
    }
};

int top_row_diff(const Partition& big, const Partition& small) {
    for (int i = 1; i <= big.length(); ++i)
        if (big.part(i) > small.part(i)) return i;
    return 0;
}

int bottom_row_diff(const Partition& big, const Partition& small) {
    for (int i = big.length(); i >= 1; --i)
        if (big.part(i) > small.part(i)) return i;
    return 0;
}

}  // namespace

SkewTableau::SkewTableau(SkewShape shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != shape_.outer().length())
        throw std::invalid_argument("SkewTableau: row count does not match shape");
    for (int i = 1; i <= shape_.outer().length(); ++i) {
        int expected = shape_.outer().part(i) - shape_.inner().part(i);
        if (static_cast<int>(rows_[static_cast<std::size_t>(i) - 1].size()) != expected)
            throw std::invalid_argument("SkewTableau: row length does not match shape");
    }
    if (!is_semistandard())
        throw std::invalid_argument("SkewTableau: filling is not semistandard");
}

int SkewTableau::at(int row, int col) const {
    if (!shape_.contains({row, col})) throw std::out_of_range("SkewTableau::at: cell outside shape");
    return rows_[static_cast<std::size_t>(row) - 1]
                [static_cast<std::size_t>(col - shape_.inner().part(row)) - 1];
}

std::vector<int> SkewTableau::content(int maxEntry) const {
    std::vector<int> c(static_cast<std::size_t>(maxEntry), 0);
    for (const auto& row : rows_)
        for (int v : row) {
            if (v < 1 || v > maxEntry) throw std::out_of_range("SkewTableau::content: entry out of range");
            ++c[static_cast<std::size_t>(v) - 1];
        }
    return c;
}

bool SkewTableau::is_semistandard() const {
    for (auto [i, j] : shape_.cells()) {
        int v = rows_[static_cast<std::size_t>(i) - 1]
                     [static_cast<std::size_t>(j - shape_.inner().part(i)) - 1];
        if (v < 1) return false;
        if (shape_.contains({i, j + 1}) && at(i, j + 1) < v) return false;
        if (shape_.contains({i + 1, j}) && at(i + 1, j) <= v) return false;
    }
    return true;
}

std::string SkewTableau::to_string(bool single_line) const {
    if (shape_.outer().length() == 0) return "-";
    std::ostringstream out;
    for (int i = 1; i <= shape_.outer().length(); ++i) {
        if (i > 1) out << (single_line ? " / " : "\n");
        bool first = true;
        for (int j = 0; j < shape_.inner().part(i); ++j) {
            if (!first) out << " ";
            out << ".";
            first = false;
        }
        for (int v : rows_[static_cast<std::size_t>(i) - 1]) {
            if (!first) out << " ";
            out << v;
            first = false;
        }
        if (first) out << ".";  // fully empty row still renders a placeholder
    }
    return out.str();
}

SkewTableau SkewTableau::parse(const std::string& text) {
    if (text == "-" || text.empty())
        return SkewTableau(SkewShape(Partition(), Partition()), {});
    std::vector<std::string> lines;
    if (text.find('/') != std::string::npos) {
        std::istringstream in(text);
        std::string piece;
        while (std::getline(in, piece, '/')) lines.push_back(piece);
    } else {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) lines.push_back(line);
    }
    std::vector<int> outer, inner;
    std::vector<std::vector<int>> rows;
    for (const auto& line : lines) {
        std::istringstream in(line);
        std::string tok;
        int dots = 0;
        std::vector<int> entries;
        while (in >> tok) {
            if (tok == ".") {
                if (!entries.empty())
                    throw std::invalid_argument("SkewTableau::parse: '.' after entries");
                ++dots;
            } else {
                entries.push_back(std::stoi(tok));
            }
        }
        if (dots == 1 && entries.empty()) dots = 0;  // placeholder for an empty row
        inner.push_back(dots);
        outer.push_back(dots + static_cast<int>(entries.size()));
        rows.push_back(std::move(entries));
    }
    while (!outer.empty() && outer.back() == 0) {
        outer.pop_back();
        inner.pop_back();
        rows.pop_back();
    }
    while (!inner.empty() && inner.back() == 0) inner.pop_back();
    return SkewTableau(SkewShape(Partition(outer), Partition(inner)), std::move(rows));
}

InsertionOutcome insert(const SkewTableau& t, int k) {
    if (k < 1) throw std::invalid_argument("insert: entries are positive integers");
    Builder b(t);
    InsertionOutcome out;
    out.exit_row = b.bump_down(1, k, out.trace);
    out.tableau = b.finish();
    return out;
}

InsertionOutcome insert_from_row(const SkewTableau& t, int i0) {
    const Partition& mu = t.inner();
    if (i0 < 1 || (i0 != 1 && mu.part(i0 - 1) <= mu.part(i0)))
        throw std::invalid_argument("insert_from_row: row has no inner corner");
    if (t.outer().part(i0) <= mu.part(i0))
        throw std::invalid_argument("insert_from_row: row has no cell to erase");
    Builder b(t);
    int k = b.at(i0, b.inn(i0) + 1);
    b.rows[static_cast<std::size_t>(i0) - 1].erase(b.rows[static_cast<std::size_t>(i0) - 1].begin());
    b.inner[static_cast<std::size_t>(i0) - 1] += 1;
    InsertionOutcome out;
    out.trace.push_back({i0, b.inn(i0), k, -1});
    out.exit_row = b.bump_down(i0 + 1, k, out.trace);
    out.tableau = b.finish();
    return out;
}

InsertionOutcome reverse_insert_from_row(const SkewTableau& t, int i1) {
    const Partition& lam = t.outer();
    if (i1 < 1 || i1 > lam.length() || lam.part(i1 + 1) >= lam.part(i1))
        throw std::invalid_argument("reverse_insert_from_row: row has no outer corner");
    if (lam.part(i1) <= t.inner().part(i1))
        throw std::invalid_argument("reverse_insert_from_row: row is empty");
    Builder b(t);
    InsertionOutcome out;
    int cur = b.at(i1, b.out(i1));
    b.rows[static_cast<std::size_t>(i1) - 1].pop_back();
    b.outer[static_cast<std::size_t>(i1) - 1] -= 1;
    out.trace.push_back({i1, b.out(i1) + 1, cur, -1});
    for (int i = i1 - 1; i >= 1; --i) {
        int found = 0;
        for (int j = b.out(i); j > b.inn(i); --j) {
            if (b.at(i, j) < cur) {
                found = j;
                break;
            }
        }
        if (found) {
            int old = b.at(i, found);
            b.at(i, found) = cur;
            out.trace.push_back({i, found, old, cur});
            cur = old;
        } else {
            // all entries >= cur (or the row is empty): exit here
            int col = b.inn(i);
            if (col < 1)
                throw std::invalid_argument("reverse_insert_from_row: no room to exit in row " +
                                            std::to_string(i));
            b.inner[static_cast<std::size_t>(i) - 1] -= 1;
            b.rows[static_cast<std::size_t>(i) - 1].insert(
                b.rows[static_cast<std::size_t>(i) - 1].begin(), cur);
            out.trace.push_back({i, col, -1, cur});
            out.exit_row = i;
            out.tableau = b.finish();
            return out;
        }
    }
    out.exit_row = 0;
    out.exit_value = cur;
    out.tableau = b.finish();
    return out;
}

namespace {

struct PhiLoop {
    SkewTableau tableau;                 // state after the while loop
    std::vector<int> word;               // v
    bool stopped_at_lam = false;         // loop ended because lamPlus == lam
    InsertionOutcome pending;            // the uncommitted reverse insertion otherwise
    int pending_row = 0;
};

PhiLoop phi_while_loop(const SkewTableau& t, const Partition& lam) {
    PhiLoop state;
    state.tableau = t;
    for (;;) {
        if (state.tableau.outer() == lam) {
            state.stopped_at_lam = true;
            return state;
        }
        int top = top_row_diff(state.tableau.outer(), lam);
        InsertionOutcome o = reverse_insert_from_row(state.tableau, top);
        if (o.exit_row == 0) {
            state.word.insert(state.word.begin(), *o.exit_value);
            state.tableau = std::move(o.tableau);
        } else {
            state.pending = std::move(o);
            state.pending_row = top;
            return state;
        }
    }
}

SkewTableau reinsert_word(SkewTableau t, const std::vector<int>& v) {
    for (int k : v) t = insert(t, k).tableau;
    return t;
}

void check_phi_preconditions(const SkewTableau& t, const Partition& lam, const Partition& mu) {
    if (!contains(mu, lam)) throw std::invalid_argument("phi: mu must be contained in lam");
    if (!contains(lam, t.outer()) || !is_horizontal_strip(SkewShape(t.outer(), lam)))
        throw std::invalid_argument("phi: lamPlus/lam must be a horizontal strip");
    if (!contains(t.inner(), mu) || !is_vertical_strip(SkewShape(mu, t.inner())))
        throw std::invalid_argument("phi: mu/muMinus must be a vertical strip");
}

}  // namespace

SkewTableau phi(const SkewTableau& t, const Partition& lam, const Partition& mu,
                PhiTrace* trace) {
    check_phi_preconditions(t, lam, mu);
    PhiLoop loop = phi_while_loop(t, lam);
    bool mu_equal = t.inner() == mu;
    int i = mu_equal ? 0 : top_row_diff(mu, t.inner());  // 0 stands for "infinity"
    SkewTableau result;
    bool fixed = false;
    if (loop.stopped_at_lam) {
        if (mu_equal) {
            fixed = true;
            result = loop.tableau;
        } else {
            result = insert_from_row(loop.tableau, i).tableau;
        }
    } else {
        int exit = loop.pending.exit_row;
        if (mu_equal || exit < i) {
            result = loop.pending.tableau;  // commit the reverse insertion
        } else {
            result = insert_from_row(loop.tableau, i).tableau;
        }
    }
    if (trace) {
        trace->loop_word = loop.word;
        trace->fixed_point = fixed;
    }
    return reinsert_word(std::move(result), loop.word);
}

std::pair<SkewTableau, std::vector<int>> phi_fixed_decompose(const SkewTableau& t,
                                                             const Partition& lam,
                                                             const Partition& mu) {
    check_phi_preconditions(t, lam, mu);
    if (t.inner() != mu)
        throw std::invalid_argument("phi_fixed_decompose: not a fixed point (muMinus != mu)");
    PhiLoop loop = phi_while_loop(t, lam);
    if (!loop.stopped_at_lam)
        throw std::invalid_argument("phi_fixed_decompose: not a fixed point (loop exit)");
    return {loop.tableau, loop.word};
}

namespace {

void check_psi_preconditions(const SkewTableau& t, const Partition& lam, const Partition& mu) {
    if (!contains(mu, lam)) throw std::invalid_argument("psi: mu must be contained in lam");
    if (!contains(lam, t.outer()) || !is_vertical_strip(SkewShape(t.outer(), lam)))
        throw std::invalid_argument("psi: lamPlus/lam must be a vertical strip");
    if (!contains(t.inner(), mu) || !is_horizontal_strip(SkewShape(mu, t.inner())))
        throw std::invalid_argument("psi: mu/muMinus must be a horizontal strip");
}

}  // namespace

SkewTableau psi(const SkewTableau& t, const Partition& lam, const Partition& mu) {
    check_psi_preconditions(t, lam, mu);
    bool mu_equal = t.inner() == mu;
    int i = mu_equal ? 0 : bottom_row_diff(mu, t.inner());
    if (t.outer() == lam) {
        if (mu_equal) return t;  // degenerate empty case
        return insert_from_row(t, i).tableau;
    }
    int bottom = bottom_row_diff(t.outer(), lam);
    InsertionOutcome o = reverse_insert_from_row(t, bottom);
    if (o.exit_row == 0) {
        if (mu_equal) return t;  // fixed point
        return insert_from_row(t, i).tableau;
    }
    if (o.exit_row >= i) return o.tableau;
    return insert_from_row(t, i).tableau;
}

bool psi_is_fixed(const SkewTableau& t, const Partition& lam, const Partition& mu) {
    check_psi_preconditions(t, lam, mu);
    if (t.inner() != mu) return false;
    if (t.outer() == lam) return true;
    int bottom = bottom_row_diff(t.outer(), lam);
    return reverse_insert_from_row(t, bottom).exit_row == 0;
}

std::pair<SkewTableau, std::vector<int>> psi_fixed_decompose(const SkewTableau& t,
                                                             const Partition& lam,
                                                             const Partition& mu) {
    if (!psi_is_fixed(t, lam, mu))
        throw std::invalid_argument("psi_fixed_decompose: not a fixed point");
    SkewTableau cur = t;
    std::vector<int> exits;
    while (cur.outer() != lam) {
        int bottom = bottom_row_diff(cur.outer(), lam);
        InsertionOutcome o = reverse_insert_from_row(cur, bottom);
        if (o.exit_row != 0)
            throw std::logic_error("psi_fixed_decompose: reverse insertion left through a row");
        exits.push_back(*o.exit_value);
        cur = std::move(o.tableau);
    }
    std::reverse(exits.begin(), exits.end());  // w = k_r ... k_1, strictly decreasing
    return {cur, exits};
}

std::vector<SkewTableau> all_ssyt(const SkewShape& s, int maxEntry) {
    std::vector<SkewTableau> out;
    auto cells = s.cells();
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(s.outer().length()));
    for (int i = 1; i <= s.outer().length(); ++i)
        rows[static_cast<std::size_t>(i) - 1].assign(
            static_cast<std::size_t>(s.outer().part(i) - s.inner().part(i)), 0);
    auto get = [&](int i, int j) {
        return rows[static_cast<std::size_t>(i) - 1]
                   [static_cast<std::size_t>(j - s.inner().part(i)) - 1];
    };
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == cells.size()) {
            out.emplace_back(s, rows);
            return;
        }
        auto [row, col] = cells[idx];
        int lo = 1;
        if (s.contains({row, col - 1})) lo = std::max(lo, get(row, col - 1));
        if (s.contains({row - 1, col})) lo = std::max(lo, get(row - 1, col) + 1);
        for (int v = lo; v <= maxEntry; ++v) {
            rows[static_cast<std::size_t>(row) - 1]
                [static_cast<std::size_t>(col - s.inner().part(row)) - 1] = v;
            rec(idx + 1);
        }
        rows[static_cast<std::size_t>(row) - 1]
            [static_cast<std::size_t>(col - s.inner().part(row)) - 1] = 0;
    };
    rec(0);
    return out;
}

}  // namespace skewsym
