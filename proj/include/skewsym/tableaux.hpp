#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "skewsym/shapes.hpp"

namespace skewsym {

/// One bump during (reverse) insertion; out < 0 means a cell was created
/// rather than an entry displaced.
struct BumpStep {
    int row = 0;
    int col = 0;
    int out = -1;
    int in = 0;
};

/// Semistandard filling of a skew shape: rows weakly increase, columns
/// strictly increase.
class SkewTableau {
public:
    SkewTableau() = default;
    SkewTableau(SkewShape shape, std::vector<std::vector<int>> rows);

    const SkewShape& shape() const { return shape_; }
    const Partition& outer() const { return shape_.outer(); }
    const Partition& inner() const { return shape_.inner(); }
    int at(int row, int col) const;  // 1-based; cell must be in the shape
    bool empty() const { return shape_.size() == 0; }

    bool operator==(const SkewTableau& o) const = default;

    std::vector<int> content(int maxEntry) const;
    bool is_semistandard() const;

    /// One line per row, "." for inner cells, entries space-separated;
    /// single-line form joins rows with " / ".
    std::string to_string(bool single_line = false) const;
    static SkewTableau parse(const std::string& text);

private:
    friend class TableauEditor;
    SkewShape shape_;
    std::vector<std::vector<int>> rows_;  // rows_[i-1] holds columns inner_i+1..outer_i
};

struct InsertionOutcome {
    SkewTableau tableau;
    int exit_row = 0;
    std::optional<int> exit_value;  // present iff exit_row == 0
    std::vector<BumpStep> trace;
};

/// Row insertion of k; the outer shape gains one cell in the exit row.
InsertionOutcome insert(const SkewTableau& t, int k);

/// Insertion from row i0: the entry at (i0, inner_{i0}+1) is erased (the
/// inner shape gains a cell there) and bumped downward.
/// Requires i0 == 1 or inner_{i0-1} > inner_{i0}, and a cell at that spot.
InsertionOutcome insert_from_row(const SkewTableau& t, int i0);

/// Reverse insertion from row i1 (which must have an outer corner). Either
/// exits in row >= 1, where the inner shape loses a cell, or in row 0 with
/// an exiting integer.
InsertionOutcome reverse_insert_from_row(const SkewTableau& t, int i1);

struct PhiTrace {
    std::vector<int> loop_word;  // the word v accumulated by the while loop
    bool fixed_point = false;
};

/// Sign-reversing involution on insertion tableaux. t has shape lamPlus/muMinus where
/// lamPlus/lam is a horizontal strip and mu/muMinus is a vertical strip.
SkewTableau phi(const SkewTableau& t, const Partition& lam, const Partition& mu,
                PhiTrace* trace = nullptr);

/// Decomposition of a phi fixed point into (S of shape lam/mu, weakly
/// increasing word v); inserting v into S left to right reproduces t.
std::pair<SkewTableau, std::vector<int>> phi_fixed_decompose(const SkewTableau& t,
                                                             const Partition& lam,
                                                             const Partition& mu);

/// The dual involution. t has shape lamPlus/muMinus where lamPlus/lam is a
/// vertical strip and mu/muMinus is a horizontal strip.
SkewTableau psi(const SkewTableau& t, const Partition& lam, const Partition& mu);

bool psi_is_fixed(const SkewTableau& t, const Partition& lam, const Partition& mu);

/// Decomposition of a psi fixed point into (S of shape lam/mu, strictly
/// decreasing word w = k_r ... k_1).
std::pair<SkewTableau, std::vector<int>> psi_fixed_decompose(const SkewTableau& t,
                                                             const Partition& lam,
                                                             const Partition& mu);

/// All SSYT of the given shape with entries in 1..maxEntry.
std::vector<SkewTableau> all_ssyt(const SkewShape& s, int maxEntry);

}  // namespace skewsym
