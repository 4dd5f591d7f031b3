#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "skewsym/tableaux.hpp"

using namespace skewsym;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

std::vector<int> reverse_rows_of(const SkewShape& s) {
    std::vector<int> rows;
    for (int i = 1; i <= s.outer().length(); ++i)
        if (s.outer().part(i) > s.outer().part(i + 1) && s.outer().part(i) > s.inner().part(i))
            rows.push_back(i);
    return rows;
}

std::vector<int> insert_rows_of(const SkewShape& s) {
    std::vector<int> rows;
    for (int i = 1; i <= s.outer().length(); ++i) {
        if (i > 1 && s.inner().part(i - 1) <= s.inner().part(i)) continue;
        if (s.outer().part(i) >= s.inner().part(i) + 1) rows.push_back(i);
    }
    return rows;
}

}  // namespace

TEST_CASE("text format round trips") {
    SkewTableau t = SkewTableau::parse(". . 2\n1 3");
    CHECK(t.outer() == P({3, 2}));
    CHECK(t.inner() == P({2}));
    CHECK(t.at(1, 3) == 2);
    CHECK(t.at(2, 1) == 1);
    CHECK(t.to_string(true) == ". . 2 / 1 3");
    CHECK(SkewTableau::parse(t.to_string(true)) == t);
    CHECK(SkewTableau::parse(t.to_string()) == t);
    CHECK_THROWS_AS(SkewTableau::parse("2 1"), std::invalid_argument);   // row decreases
    CHECK_THROWS_AS(SkewTableau::parse("1\n1"), std::invalid_argument);  // column repeats
}

TEST_CASE("content and semistandardness") {
    SkewTableau t = SkewTableau::parse(". 1 1\n1 2");
    CHECK(t.content(3) == std::vector<int>{3, 1, 0});
    CHECK(t.is_semistandard());
}

TEST_CASE("insertion bump-by-bump") {
    SkewTableau t = SkewTableau::parse("1 2\n3");
    InsertionOutcome o = insert(t, 1);
    CHECK(o.exit_row == 3);
    CHECK(!o.exit_value);
    REQUIRE(o.trace.size() == 3);
    CHECK(o.trace[0].row == 1);
    CHECK(o.trace[0].col == 2);
    CHECK(o.trace[0].out == 2);
    CHECK(o.trace[0].in == 1);
    CHECK(o.trace[1].out == 3);
    CHECK(o.trace[2].out == -1);
    CHECK(o.tableau == SkewTableau::parse("1 1\n2\n3"));
    // appending when nothing bumps
    InsertionOutcome o2 = insert(t, 5);
    CHECK(o2.exit_row == 1);
    CHECK(o2.tableau == SkewTableau::parse("1 2 5\n3"));
}

TEST_CASE("insertion and reverse insertion invert each other") {
    for (const Partition& outer : partitions_up_to(6)) {
        for (const Partition& inner : subpartitions(outer)) {
            SkewShape shape(outer, inner);
            if (shape.size() == 0) continue;
            for (const SkewTableau& t : all_ssyt(shape, 4)) {
                // insert then reverse from the exit row
                for (int k = 1; k <= 4; ++k) {
                    InsertionOutcome ins = insert(t, k);
                    CHECK(ins.tableau.is_semistandard());
                    InsertionOutcome rev = reverse_insert_from_row(ins.tableau, ins.exit_row);
                    CHECK(rev.exit_row == 0);
                    REQUIRE(rev.exit_value.has_value());
                    CHECK(*rev.exit_value == k);
                    CHECK(rev.tableau == t);
                }
                // insert-from-row then reverse from the exit row
                for (int i0 : insert_rows_of(shape)) {
                    InsertionOutcome ins = insert_from_row(t, i0);
                    CHECK(ins.tableau.is_semistandard());
                    InsertionOutcome rev = reverse_insert_from_row(ins.tableau, ins.exit_row);
                    CHECK(rev.exit_row == i0);
                    CHECK(rev.tableau == t);
                }
                // reverse then re-insert
                for (int i1 : reverse_rows_of(shape)) {
                    InsertionOutcome rev = reverse_insert_from_row(t, i1);
                    CHECK(rev.tableau.is_semistandard());
                    if (rev.exit_row == 0) {
                        InsertionOutcome ins = insert(rev.tableau, *rev.exit_value);
                        CHECK(ins.exit_row == i1);
                        CHECK(ins.tableau == t);
                    } else {
                        InsertionOutcome ins = insert_from_row(rev.tableau, rev.exit_row);
                        CHECK(ins.exit_row == i1);
                        CHECK(ins.tableau == t);
                    }
                }
            }
        }
    }
}

TEST_CASE("insertions never cross") {
    for (const Partition& outer : partitions_up_to(5)) {
        for (const Partition& inner : subpartitions(outer)) {
            SkewShape shape(outer, inner);
            if (shape.size() == 0) continue;
            for (const SkewTableau& t : all_ssyt(shape, 3)) {
                for (int i1 : reverse_rows_of(shape)) {
                    InsertionOutcome o1 = reverse_insert_from_row(t, i1);
                    // a later insertion from below the exit row exits below
                    for (int i0p : insert_rows_of(shape)) {
                        if (i0p <= o1.exit_row) continue;
                        CHECK(insert_from_row(t, i0p).exit_row > i1);
                    }
                    // a second reverse insertion from a lower row exits higher
                    for (int i2 : reverse_rows_of(o1.tableau.shape())) {
                        if (i2 >= i1) continue;
                        InsertionOutcome o2 = reverse_insert_from_row(o1.tableau, i2);
                        if (o1.exit_row > 0) {
                            CHECK(o2.exit_row < o1.exit_row);
                        } else {
                            CHECK(o2.exit_row == 0);
                            CHECK(*o2.exit_value > *o1.exit_value);
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("phi is a sign-reversing involution with the stated fixed points") {
    long fixed = 0, moved = 0;
    for (const Partition& lam : partitions_up_to(3)) {
        for (const Partition& mu : subpartitions(lam)) {
            for (int a = 0; a <= 2; ++a) {
                for (const Partition& lamPlus :
                     enumerate_outer_extensions(lam, a, StripKind::Horizontal)) {
                    for (int b = 0; b <= 2; ++b) {
                        for (const Partition& muMinus :
                             enumerate_inner_contractions(mu, b, StripKind::Vertical)) {
                            SkewShape shape(lamPlus, muMinus);
                            for (const SkewTableau& t : all_ssyt(shape, 3)) {
                                PhiTrace tr;
                                SkewTableau image = phi(t, lam, mu, &tr);
                                CHECK(image.is_semistandard());
                                CHECK(image.content(3) == t.content(3));
                                if (tr.fixed_point) {
                                    ++fixed;
                                    CHECK(image == t);
                                    CHECK(t.inner() == mu);
                                    auto [s, v] = phi_fixed_decompose(t, lam, mu);
                                    CHECK(s.outer() == lam);
                                    CHECK(s.inner() == mu);
                                    CHECK(std::is_sorted(v.begin(), v.end()));
                                    SkewTableau rebuilt = s;
                                    for (int k : v) rebuilt = insert(rebuilt, k).tableau;
                                    CHECK(rebuilt == t);
                                } else {
                                    ++moved;
                                    // sign reversal: the inner strip grows or
                                    // shrinks by one cell
                                    int before = mu.size() - t.inner().size();
                                    int after = mu.size() - image.inner().size();
                                    CHECK(std::abs(after - before) == 1);
                                    CHECK(phi(image, lam, mu) == t);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    CHECK(fixed > 0);
    CHECK(moved > 0);
}

TEST_CASE("psi is a sign-reversing involution with the stated fixed points") {
    long fixed = 0, moved = 0;
    for (const Partition& lam : partitions_up_to(3)) {
        for (const Partition& mu : subpartitions(lam)) {
            for (int a = 0; a <= 2; ++a) {
                for (const Partition& lamPlus :
                     enumerate_outer_extensions(lam, a, StripKind::Vertical)) {
                    for (int b = 0; b <= 2; ++b) {
                        for (const Partition& muMinus :
                             enumerate_inner_contractions(mu, b, StripKind::Horizontal)) {
                            SkewShape shape(lamPlus, muMinus);
                            for (const SkewTableau& t : all_ssyt(shape, 3)) {
                                if (psi_is_fixed(t, lam, mu)) {
                                    ++fixed;
                                    CHECK(psi(t, lam, mu) == t);
                                    CHECK(t.inner() == mu);
                                    auto [s, w] = psi_fixed_decompose(t, lam, mu);
                                    CHECK(s.outer() == lam);
                                    CHECK(s.inner() == mu);
                                    CHECK(std::is_sorted(w.begin(), w.end(),
                                                         std::greater<int>()));
                                    CHECK(std::adjacent_find(w.begin(), w.end()) == w.end());
                                } else {
                                    ++moved;
                                    SkewTableau image = psi(t, lam, mu);
                                    CHECK(image.is_semistandard());
                                    CHECK(image.content(3) == t.content(3));
                                    int before = mu.size() - t.inner().size();
                                    int after = mu.size() - image.inner().size();
                                    CHECK(std::abs(after - before) == 1);
                                    CHECK(psi(image, lam, mu) == t);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    CHECK(fixed > 0);
    CHECK(moved > 0);
}

TEST_CASE("vertical strip fixed-point decomposition example") {
    // two stacked cells over an empty base decompose into the empty tableau
    // and the word 2,1
    SkewTableau t = SkewTableau::parse("1\n2");
    REQUIRE(psi_is_fixed(t, Partition(), Partition()));
    auto [s, w] = psi_fixed_decompose(t, Partition(), Partition());
    CHECK(s.empty());
    CHECK(w == std::vector<int>{2, 1});
}

TEST_CASE("all_ssyt counts") {
    CHECK(all_ssyt(SkewShape::parse("2"), 2).size() == 3);       // 11 12 22
    CHECK(all_ssyt(SkewShape::parse("1,1"), 2).size() == 1);     // column 12
    CHECK(all_ssyt(SkewShape::parse("2,1"), 2).size() == 2);
    CHECK(all_ssyt(SkewShape::parse("2/2"), 3).size() == 1);     // empty shape
    CHECK(all_ssyt(SkewShape::parse("2,1/1"), 2).size() == 4);   // two free cells
}
