#include "skewsym/shapes.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace skewsym {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
    if (i < 1 || i > length()) return 0;
    return parts_[static_cast<std::size_t>(i) - 1];
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "-";
    std::ostringstream out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ",";
        out << parts_[i];
    }
    return out.str();
}

Partition Partition::parse(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t == "-" || t.empty()) return Partition();
    std::vector<int> parts;
    std::istringstream in(t);
    std::string piece;
    while (std::getline(in, piece, ',')) {
        if (piece.empty()) throw std::invalid_argument("Partition::parse: bad input '" + text + "'");
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(piece, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("Partition::parse: bad input '" + text + "'");
        }
        if (used != piece.size()) throw std::invalid_argument("Partition::parse: bad input '" + text + "'");
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!skewsym::contains(inner_, outer_))
        throw std::invalid_argument("SkewShape: inner must be contained in outer");
}

bool SkewShape::contains(Cell c) const {
    return c.row >= 1 && c.row <= outer_.length() && c.col > inner_.part(c.row) &&
           c.col <= outer_.part(c.row);
}

std::vector<Cell> SkewShape::cells() const {
    std::vector<Cell> out;
    for (int i = 1; i <= outer_.length(); ++i)
        for (int j = inner_.part(i) + 1; j <= outer_.part(i); ++j) out.push_back({i, j});
    return out;
}

std::string SkewShape::to_string() const {
    if (inner_.empty()) return outer_.to_string();
    return outer_.to_string() + "/" + inner_.to_string();
}

SkewShape SkewShape::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return SkewShape(Partition::parse(text), Partition());
    return SkewShape(Partition::parse(text.substr(0, slash)),
                     Partition::parse(text.substr(slash + 1)));
}

Partition conjugate(const Partition& p) {
    std::vector<int> cols(static_cast<std::size_t>(p.part(1)), 0);
    for (int i = 1; i <= p.length(); ++i)
        for (int j = 0; j < p.part(i); ++j) ++cols[static_cast<std::size_t>(j)];
    return Partition(std::move(cols));
}

SkewShape skew_conjugate(const SkewShape& s) {
    return SkewShape(conjugate(s.outer()), conjugate(s.inner()));
}

bool contains(const Partition& inner, const Partition& outer) {
    for (int i = 1; i <= inner.length(); ++i)
        if (inner.part(i) > outer.part(i)) return false;
    return true;
}

bool is_horizontal_strip(const SkewShape& s) {
    Partition oc = conjugate(s.outer());
    Partition ic = conjugate(s.inner());
    for (int i = 1; i <= oc.length(); ++i)
        if (oc.part(i) > ic.part(i) + 1) return false;
    return true;
}

bool is_vertical_strip(const SkewShape& s) {
    for (int i = 1; i <= s.outer().length(); ++i)
        if (s.outer().part(i) > s.inner().part(i) + 1) return false;
    return true;
}

bool is_broken_ribbon(const SkewShape& s) {
    for (int i = 2; i <= s.outer().length(); ++i)
        if (s.outer().part(i) > s.inner().part(i - 1) + 1) return false;
    return true;
}

namespace {

// Edge-connected components of the cell set; returns component ids per cell.
int component_count(const std::vector<Cell>& cells, std::vector<int>& comp) {
    comp.assign(cells.size(), -1);
    int n = static_cast<int>(cells.size());
    int count = 0;
    for (int i = 0; i < n; ++i) {
        if (comp[static_cast<std::size_t>(i)] >= 0) continue;
        std::vector<int> stack{i};
        comp[static_cast<std::size_t>(i)] = count;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < n; ++v) {
                if (comp[static_cast<std::size_t>(v)] >= 0) continue;
                int dr = cells[static_cast<std::size_t>(u)].row - cells[static_cast<std::size_t>(v)].row;
                int dc = cells[static_cast<std::size_t>(u)].col - cells[static_cast<std::size_t>(v)].col;
                if ((dr == 0 && (dc == 1 || dc == -1)) || (dc == 0 && (dr == 1 || dr == -1))) {
                    comp[static_cast<std::size_t>(v)] = count;
                    stack.push_back(v);
                }
            }
        }
        ++count;
    }
    return count;
}

}  // namespace

bool is_ribbon(const SkewShape& s) {
    if (!is_broken_ribbon(s)) return false;
    auto cells = s.cells();
    if (cells.empty()) return false;
    std::vector<int> comp;
    return component_count(cells, comp) == 1;
}

RibbonStats ribbon_stats(const SkewShape& s) {
    if (!is_broken_ribbon(s))
        throw std::invalid_argument("ribbon_stats: shape is not a broken ribbon");
    auto cells = s.cells();
    std::vector<int> comp;
    int count = component_count(cells, comp);
    RibbonStats stats;
    stats.rib = count;
    for (int c = 0; c < count; ++c) {
        std::vector<int> rows, cols;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (comp[i] != c) continue;
            rows.push_back(cells[i].row);
            cols.push_back(cells[i].col);
        }
        auto distinct = [](std::vector<int>& v) {
            std::sort(v.begin(), v.end());
            v.erase(std::unique(v.begin(), v.end()), v.end());
            return static_cast<int>(v.size());
        };
        stats.hgt += distinct(rows) - 1;
        stats.wt += distinct(cols) - 1;
    }
    return stats;
}

int multiplicity(const Partition& p, int i) {
    if (i < 1) throw std::invalid_argument("multiplicity: i must be positive");
    int count = 0;
    for (int part : p.parts())
        if (part == i) ++count;
    return count;
}

bool matches_kind(const SkewShape& s, StripKind kind) {
    switch (kind) {
        case StripKind::Horizontal: return is_horizontal_strip(s);
        case StripKind::Vertical: return is_vertical_strip(s);
        case StripKind::Ribbon: return is_ribbon(s);
        case StripKind::BrokenRibbon: return is_broken_ribbon(s);
        case StripKind::Any: return true;
    }
    return false;
}

std::vector<Partition> enumerate_outer_extensions(const Partition& base, int size, StripKind kind) {
    if (size < 0) throw std::invalid_argument("enumerate_outer_extensions: negative size");
    if (size == 0) {
        if (kind == StripKind::Ribbon) return {};
        return {base};
    }
    std::vector<Partition> out;
    int max_rows = base.length() + size;
    std::vector<int> rows;
    // choose row values top-down; a candidate may stop at any row past the base
    std::function<void(int, int)> rec = [&](int row, int budget) {
        if (budget == 0 && row > base.length()) {
            Partition cand(rows);
            if (matches_kind(SkewShape(cand, base), kind)) out.push_back(cand);
            return;
        }
        if (row > max_rows) return;
        int lo = base.part(row);
        int hi = base.part(row) + budget;
        if (row > 1) hi = std::min(hi, rows.back());
        for (int v = std::max(lo, 1); v <= hi; ++v) {
            rows.push_back(v);
            rec(row + 1, budget - (v - base.part(row)));
            rows.pop_back();
        }
    };
    rec(1, size);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Partition> enumerate_inner_contractions(const Partition& base, int size, StripKind kind) {
    if (size < 0) throw std::invalid_argument("enumerate_inner_contractions: negative size");
    if (size == 0) {
        if (kind == StripKind::Ribbon) return {};
        return {base};
    }
    if (size > base.size()) return {};
    std::vector<Partition> out;
    int target = base.size() - size;
    std::vector<int> rows;
    std::function<void(int, int)> rec = [&](int row, int remaining) {
        if (remaining == 0) {
            Partition cand(rows);
            if (matches_kind(SkewShape(base, cand), kind)) out.push_back(cand);
            return;
        }
        if (row > base.length()) return;
        int hi = std::min(base.part(row), row > 1 ? rows.back() : base.part(1));
        for (int v = std::min(hi, remaining); v >= 1; --v) {
            rows.push_back(v);
            rec(row + 1, remaining - v);
            rows.pop_back();
        }
    };
    rec(1, target);
    if (target == 0) {
        Partition cand;
        if (matches_kind(SkewShape(base, cand), kind)) out.push_back(cand);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> rows;
    std::function<void(int, int)> rec = [&](int remaining, int maxpart) {
        if (remaining == 0) {
            out.push_back(Partition(rows));
            return;
        }
        for (int v = std::min(remaining, maxpart); v >= 1; --v) {
            rows.push_back(v);
            rec(remaining - v, v);
            rows.pop_back();
        }
    };
    rec(n, n);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k) {
        auto part = partitions_of(k);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<Partition> subpartitions(const Partition& lam) {
    std::vector<Partition> out;
    std::vector<int> rows;
    std::function<void(int)> rec = [&](int row) {
        out.push_back(Partition(rows));
        if (row > lam.length()) return;
        int hi = std::min(lam.part(row), row > 1 ? rows.back() : lam.part(1));
        for (int v = 1; v <= hi; ++v) {
            rows.push_back(v);
            rec(row + 1);
            rows.pop_back();
        }
    };
    rec(1);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace skewsym
