#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace skewsym {

/// Cell (row, col), 1-based.
struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

/// Weakly decreasing sequence of positive integers; empty sequence is the
/// empty partition. part(i) is 0 for i beyond the length.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    int part(int i) const;  // 1-based, 0 beyond length
    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    auto operator<=>(const Partition&) const = default;

    /// "3,2,2"; "-" for the empty partition.
    std::string to_string() const;
    static Partition parse(const std::string& text);

private:
    std::vector<int> parts_;
};

class SkewShape {
public:
    SkewShape() = default;
    SkewShape(Partition outer, Partition inner);

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    int size() const { return outer_.size() - inner_.size(); }
    bool contains(Cell c) const;
    std::vector<Cell> cells() const;  // row-major

    auto operator<=>(const SkewShape&) const = default;

    /// "3,2,2/1,1"; a bare partition denotes a straight shape.
    std::string to_string() const;
    static SkewShape parse(const std::string& text);

private:
    Partition outer_;
    Partition inner_;
};

struct RibbonStats {
    int hgt = 0;
    int wt = 0;
    int rib = 0;
};

enum class StripKind { Horizontal, Vertical, Ribbon, BrokenRibbon, Any };

Partition conjugate(const Partition& p);
SkewShape skew_conjugate(const SkewShape& s);

bool contains(const Partition& inner, const Partition& outer);

bool is_horizontal_strip(const SkewShape& s);
bool is_vertical_strip(const SkewShape& s);
bool is_broken_ribbon(const SkewShape& s);
bool is_ribbon(const SkewShape& s);
bool matches_kind(const SkewShape& s, StripKind kind);

/// hgt/wt/rib of a broken ribbon; hgt + wt + rib = size.
/// Throws std::invalid_argument on non-broken-ribbon input.
RibbonStats ribbon_stats(const SkewShape& s);

/// Number of parts of p equal to i.
int multiplicity(const Partition& p, int i);

/// All lamPlus >= base with lamPlus/base of the given kind and size,
/// in lexicographic order.
std::vector<Partition> enumerate_outer_extensions(const Partition& base, int size, StripKind kind);

/// All muMinus <= base with base/muMinus of the given kind and size,
/// in lexicographic order.
std::vector<Partition> enumerate_inner_contractions(const Partition& base, int size, StripKind kind);

/// All partitions of n, lexicographic order.
std::vector<Partition> partitions_of(int n);

/// All partitions of size <= n, lexicographic order by (size, parts).
std::vector<Partition> partitions_up_to(int n);

/// All sub-partitions mu of lam (any size), lexicographic order.
std::vector<Partition> subpartitions(const Partition& lam);

}  // namespace skewsym
