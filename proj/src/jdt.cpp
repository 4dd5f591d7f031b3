#include "skewsym/jdt.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace skewsym {

namespace {

std::vector<int> adjust_row(const Partition& p, int row, int delta) {
    std::vector<int> parts(p.parts());
    if (static_cast<int>(parts.size()) < row) parts.resize(static_cast<std::size_t>(row), 0);
    parts[static_cast<std::size_t>(row) - 1] += delta;
    return parts;
}

std::map<Cell, int> to_grid(const StandardTableau& t) {
    std::map<Cell, int> grid;
    for (Cell c : t.shape().cells()) grid[c] = t.at(c.row, c.col);
    return grid;
}

StandardTableau from_grid(const SkewShape& shape, const std::map<Cell, int>& grid) {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.outer().length()));
    for (Cell c : shape.cells()) rows[static_cast<std::size_t>(c.row) - 1].push_back(grid.at(c));
    return StandardTableau(shape, std::move(rows));
}

}  // namespace

StandardTableau::StandardTableau(SkewShape shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != shape_.outer().length())
        throw std::invalid_argument("StandardTableau: row count does not match shape");
    std::vector<bool> seen(static_cast<std::size_t>(shape_.size()), false);
    for (int i = 1; i <= shape_.outer().length(); ++i) {
        int expected = shape_.outer().part(i) - shape_.inner().part(i);
        if (static_cast<int>(rows_[static_cast<std::size_t>(i) - 1].size()) != expected)
            throw std::invalid_argument("StandardTableau: row length does not match shape");
    }
    for (Cell c : shape_.cells()) {
        int v = at(c.row, c.col);
        if (v < 1 || v > shape_.size() || seen[static_cast<std::size_t>(v) - 1])
            throw std::invalid_argument("StandardTableau: entries must be a bijection to 1..n");
        seen[static_cast<std::size_t>(v) - 1] = true;
        if (shape_.contains({c.row, c.col + 1}) && at(c.row, c.col + 1) <= v)
            throw std::invalid_argument("StandardTableau: rows must strictly increase");
        if (shape_.contains({c.row + 1, c.col}) && at(c.row + 1, c.col) <= v)
            throw std::invalid_argument("StandardTableau: columns must strictly increase");
    }
}

int StandardTableau::at(int row, int col) const {
    if (!shape_.contains({row, col}))
        throw std::out_of_range("StandardTableau::at: cell outside shape");
    return rows_[static_cast<std::size_t>(row) - 1]
                [static_cast<std::size_t>(col - shape_.inner().part(row)) - 1];
}

std::string StandardTableau::to_string(bool single_line) const {
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
        if (first) out << ".";
    }
    return out.str();
}

StandardTableau StandardTableau::parse(const std::string& text) {
    if (text == "-" || text.empty()) return StandardTableau(SkewShape(), {});
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
                    throw std::invalid_argument("StandardTableau::parse: '.' after entries");
                ++dots;
            } else {
                entries.push_back(std::stoi(tok));
            }
        }
        if (dots == 1 && entries.empty()) dots = 0;
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
    return StandardTableau(SkewShape(Partition(outer), Partition(inner)), std::move(rows));
}

std::pair<StandardTableau, SlidePath> backward_slide(const StandardTableau& t, Cell c) {
    const SkewShape& s = t.shape();
    if (s.contains(c)) throw std::invalid_argument("backward_slide: hole is inside the shape");
    if (c.row < 1 || c.col < 1 || c.col != s.inner().part(c.row) ||
        s.inner().part(c.row) - 1 < s.inner().part(c.row + 1))
        throw std::invalid_argument("backward_slide: hole is not a removable inner corner");
    if (!s.contains({c.row, c.col + 1}) && !s.contains({c.row + 1, c.col}))
        throw std::invalid_argument("backward_slide: hole does not touch the shape");
    auto grid = to_grid(t);
    SlidePath path;
    Cell hole = c;
    path.cells.push_back(hole);
    for (;;) {
        Cell right{hole.row, hole.col + 1}, below{hole.row + 1, hole.col};
        bool hasR = s.contains(right) && grid.count(right);
        bool hasB = s.contains(below) && grid.count(below);
        if (!hasR && !hasB) break;
        Cell from;
        if (hasR && hasB)
            from = grid[right] < grid[below] ? right : below;
        else
            from = hasR ? right : below;
        grid[hole] = grid[from];
        grid.erase(from);
        hole = from;
        path.cells.push_back(hole);
    }
    SkewShape out(Partition(adjust_row(s.outer(), hole.row, -1)),
                  Partition(adjust_row(s.inner(), c.row, -1)));
    return {from_grid(out, grid), path};
}

std::pair<StandardTableau, SlidePath> forward_slide(const StandardTableau& t, Cell c) {
    const SkewShape& s = t.shape();
    if (s.contains(c)) throw std::invalid_argument("forward_slide: hole is inside the shape");
    if (c.row < 1 || c.col < 1 || c.col != s.outer().part(c.row) + 1 ||
        (c.row > 1 && s.outer().part(c.row - 1) < c.col))
        throw std::invalid_argument("forward_slide: hole is not an addable outer cell");
    if (!s.contains({c.row, c.col - 1}) && !s.contains({c.row - 1, c.col}))
        throw std::invalid_argument("forward_slide: hole does not touch the shape");
    auto grid = to_grid(t);
    SlidePath path;
    Cell hole = c;
    path.cells.push_back(hole);
    for (;;) {
        Cell left{hole.row, hole.col - 1}, above{hole.row - 1, hole.col};
        bool hasL = s.contains(left) && grid.count(left);
        bool hasA = s.contains(above) && grid.count(above);
        if (!hasL && !hasA) break;
        Cell from;
        if (hasL && hasA)
            from = grid[left] > grid[above] ? left : above;
        else
            from = hasL ? left : above;
        grid[hole] = grid[from];
        grid.erase(from);
        hole = from;
        path.cells.push_back(hole);
    }
    SkewShape out(Partition(adjust_row(s.outer(), c.row, 1)),
                  Partition(adjust_row(s.inner(), hole.row, 1)));
    return {from_grid(out, grid), path};
}

StandardTableau rectify(const StandardTableau& t) {
    std::vector<std::pair<Cell, SlidePath>> slides;
    return rectify(t, slides);
}

StandardTableau rectify(const StandardTableau& t,
                        std::vector<std::pair<Cell, SlidePath>>& slides) {
    StandardTableau cur = t;
    while (!cur.inner().empty()) {
        const Partition& inner = cur.inner();
        const Partition& outer = cur.outer();
        int row = 0;
        for (int i = 1; i <= inner.length(); ++i) {
            if (inner.part(i) > inner.part(i + 1)) {
                row = i;
                break;
            }
        }
        Cell c{row, inner.part(row)};
        if (!cur.shape().contains({c.row, c.col + 1}) && !cur.shape().contains({c.row + 1, c.col})) {
            // isolated hole on an empty row: shrink the row in place
            SkewShape shrunk(Partition(adjust_row(outer, row, -1)),
                             Partition(adjust_row(inner, row, -1)));
            cur = from_grid(shrunk, to_grid(cur));
            continue;
        }
        auto [next, path] = backward_slide(cur, c);
        slides.emplace_back(c, std::move(path));
        cur = std::move(next);
    }
    return cur;
}

StandardTableau hook_tableau(int r, int k) {
    if (k < 1 || k > r) throw std::invalid_argument("hook_tableau: k must be in 1..r");
    std::vector<int> shape{k};
    for (int i = k + 1; i <= r; ++i) shape.push_back(1);
    std::vector<std::vector<int>> rows;
    std::vector<int> first;
    for (int i = 1; i <= k; ++i) first.push_back(i);
    rows.push_back(first);
    for (int i = k + 1; i <= r; ++i) rows.push_back({i});
    return StandardTableau(SkewShape(Partition(shape), Partition()), std::move(rows));
}

bool has_kne(const StandardTableau& t, int k) {
    const SkewShape& s = t.shape();
    if (s.size() == 0) return false;
    int topRow = 0;
    for (int i = 1; i <= s.outer().length(); ++i) {
        if (s.outer().part(i) > s.inner().part(i)) {
            topRow = i;
            break;
        }
    }
    if (t.at(topRow, s.outer().part(topRow)) != k) return false;
    std::map<int, Cell> where;
    for (Cell c : s.cells()) where[t.at(c.row, c.col)] = c;
    int prevCol = 0;
    for (auto& [v, c] : where) {
        if (v >= k) break;
        if (prevCol && c.col <= prevCol) return false;
        prevCol = c.col;
    }
    int prevRow = 0;
    for (auto& [v, c] : where) {
        if (v <= k) continue;
        if (prevRow && c.row <= prevRow) return false;
        prevRow = c.row;
    }
    return true;
}

std::vector<StandardTableau> all_syt(const SkewShape& s) {
    std::vector<StandardTableau> out;
    auto cells = s.cells();
    std::map<Cell, int> grid;
    std::function<void(int)> rec = [&](int next) {
        if (next > static_cast<int>(cells.size())) {
            out.push_back(from_grid(s, grid));
            return;
        }
        for (Cell c : cells) {
            if (grid.count(c)) continue;
            Cell left{c.row, c.col - 1}, above{c.row - 1, c.col};
            if (s.contains(left) && !grid.count(left)) continue;
            if (s.contains(above) && !grid.count(above)) continue;
            grid[c] = next;
            rec(next + 1);
            grid.erase(c);
        }
    };
    rec(1);
    return out;
}

long count_rectify_to_hook(const SkewShape& s, int k) {
    int r = s.size();
    if (k < 1 || k > r) return 0;
    StandardTableau target = hook_tableau(r, k);
    long count = 0;
    for (const StandardTableau& t : all_syt(s))
        if (rectify(t) == target) ++count;
    return count;
}

namespace {

long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long result = 1;
    for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
    return result;
}

// Shape of the below-left concatenation: below's cells go under and
// strictly left of above's cells.
SkewShape star_shape(const SkewShape& below, const SkewShape& above) {
    if (below.size() == 0) return above;
    int shift = below.outer().part(1);
    int rows_above = above.outer().length();
    std::vector<int> outer, inner;
    for (int i = 1; i <= rows_above; ++i) {
        outer.push_back(above.outer().part(i) + shift);
        inner.push_back(above.inner().part(i) + shift);
    }
    for (int i = 1; i <= below.outer().length(); ++i) {
        outer.push_back(below.outer().part(i));
        inner.push_back(below.inner().part(i));
    }
    return SkewShape(Partition(outer), Partition(inner));
}

}  // namespace

long lemma2_formula(const SkewShape& s, int k) {
    if (s.size() == 0 || !is_broken_ribbon(s)) return 0;
    if (k < 1 || k > s.size()) return 0;
    RibbonStats st = ribbon_stats(s);
    return binomial(st.rib - 1, k - 1 - st.wt);
}

long slrr_coefficient_check(const Partition& lam, const Partition& mu, const Partition& lamPlus,
                            const Partition& muMinus, int r, int k) {
    if (!contains(mu, lam) || !contains(muMinus, mu) || !contains(lam, lamPlus))
        throw std::invalid_argument("slrr_coefficient_check: shapes are not nested");
    if (lamPlus.size() - lam.size() + mu.size() - muMinus.size() != r) return 0;
    if (k < 1 || k > r) return 0;
    StandardTableau target = hook_tableau(r, k);
    // entries of the two blocks interleave: the pair is a jointly standard
    // filling of the concatenated shape
    SkewShape combined = star_shape(skew_conjugate(SkewShape(mu, muMinus)), SkewShape(lamPlus, lam));
    long count = 0;
    for (const StandardTableau& t : all_syt(combined))
        if (rectify(t) == target) ++count;
    int sign = (mu.size() - muMinus.size()) % 2 ? -1 : 1;
    return sign * count;
}

}  // namespace skewsym
