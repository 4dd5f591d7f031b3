#pragma once

#include <string>
#include <vector>

#include "skewsym/qpoly.hpp"
#include "skewsym/shapes.hpp"

namespace skewsym {

/// Bijective filling of a skew shape by 1..n with strictly increasing rows
/// and columns.
class StandardTableau {
public:
    StandardTableau() = default;
    StandardTableau(SkewShape shape, std::vector<std::vector<int>> rows);

    const SkewShape& shape() const { return shape_; }
    const Partition& outer() const { return shape_.outer(); }
    const Partition& inner() const { return shape_.inner(); }
    int at(int row, int col) const;
    int size() const { return shape_.size(); }

    bool operator==(const StandardTableau& o) const = default;

    /// Shares the tableau text format ("." for inner cells).
    std::string to_string(bool single_line = false) const;
    static StandardTableau parse(const std::string& text);

private:
    SkewShape shape_;
    std::vector<std::vector<int>> rows_;
};

struct SlidePath {
    std::vector<Cell> cells;  // c_0 outside the shape, c_1..c_m inside
};

/// Backward slide into the hole c (an inner corner); ties move the smaller
/// entry.
std::pair<StandardTableau, SlidePath> backward_slide(const StandardTableau& t, Cell c);

/// Forward slide into the hole c (an outer addable cell); ties move the
/// larger entry. Inverse of backward_slide at the vacated cell.
std::pair<StandardTableau, SlidePath> forward_slide(const StandardTableau& t, Cell c);

/// Straight-shape rectification; independent of inner corner choices.
StandardTableau rectify(const StandardTableau& t);

/// As rectify, recording the hole and path of every slide performed.
StandardTableau rectify(const StandardTableau& t,
                        std::vector<std::pair<Cell, SlidePath>>& slides);

/// Hook shape (k,1^{r-k}) with 1..k in the first row and k+1..r below.
StandardTableau hook_tableau(int r, int k);

/// NE1: the northeast cell holds k. NE2: entries < k appear strictly left
/// to right in order. NE3: entries > k appear strictly top to bottom in
/// order.
bool has_kne(const StandardTableau& t, int k);

/// All standard tableaux of the shape.
std::vector<StandardTableau> all_syt(const SkewShape& s);

/// Number of standard tableaux of the shape rectifying to hook_tableau(r,k)
/// with r = |shape|, by exhaustive rectification.
long count_rectify_to_hook(const SkewShape& s, int k);

/// binom(rib-1, k-1-wt) for a broken ribbon, else 0; out-of-range binomial
/// arguments give 0.
long lemma2_formula(const SkewShape& s, int k);

/// Signed count of pairs (Rminus, Rplus) of standard tableaux of shapes
/// (mu/muMinus)^c and lamPlus/lam whose below-left concatenation rectifies
/// to hook_tableau(r,k); the sign is (-1)^{|mu/muMinus|}. Summing
/// (-q)^{r-k} times this over k gives the s_{lamPlus/muMinus} coefficient
/// of the broken ribbon product rule.
long slrr_coefficient_check(const Partition& lam, const Partition& mu, const Partition& lamPlus,
                            const Partition& muMinus, int r, int k);

}  // namespace skewsym
