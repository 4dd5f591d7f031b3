#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "skewsym/colored.hpp"
#include "skewsym/hall_littlewood.hpp"
#include "skewsym/jdt.hpp"
#include "skewsym/qpoly.hpp"
#include "skewsym/shapes.hpp"
#include "skewsym/symfunc.hpp"
#include "skewsym/tableaux.hpp"

namespace {

using namespace skewsym;

// Exit-code contract: 0 = all pass, 1 = identity/conjecture violation,
// 2 = usage/parse error.
constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// expand

struct Factor {
    std::string kind;  // s, e, p, qp, barp
    int r = 0;
    Partition tau;
    bool is_tau = false;
};

Factor parse_factor(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw usage_error("--with expects <kind>:<arg>");
    Factor f;
    f.kind = text.substr(0, colon);
    std::string arg = text.substr(colon + 1);
    if (f.kind != "s" && f.kind != "e" && f.kind != "p" && f.kind != "qp" && f.kind != "barp")
        throw usage_error("unknown factor kind '" + f.kind + "'");
    if (f.kind == "qp" && (arg == "-" || arg.find(',') != std::string::npos)) {
        f.is_tau = true;
        f.tau = Partition::parse(arg);
        return f;
    }
    try {
        std::size_t used = 0;
        f.r = std::stoi(arg, &used);
        if (used != arg.size()) throw std::invalid_argument(arg);
    } catch (const std::exception&) {
        throw usage_error("factor argument '" + arg + "' is not an integer");
    }
    if (f.r < 0) throw usage_error("factor degree must be nonnegative");
    return f;
}

int factor_degree(const Factor& f) { return f.is_tau ? f.tau.size() : f.r; }

SkewSchurSum formal_rhs(const SkewShape& shape, const Factor& f) {
    const Partition& lam = shape.outer();
    const Partition& mu = shape.inner();
    if (f.is_tau) return rhs_qpower_prod(lam, mu, f.tau);
    if (f.kind == "s") return rhs_spr(lam, mu, f.r);
    if (f.kind == "e") return rhs_cspr(lam, mu, f.r);
    if (f.kind == "p") return rhs_smnr(lam, mu, f.r);
    if (f.kind == "qp") return rhs_sqmnr_prime(lam, mu, f.r);
    return rhs_sqmnr3(lam, mu, f.r);  // barp
}

SymFunc factor_symfunc(const Factor& f, int nvars) {
    if (f.is_tau) return qpower_prod(f.tau, nvars);
    if (f.kind == "s")
        return skew_schur(SkewShape(f.r > 0 ? Partition(std::vector<int>{f.r}) : Partition(),
                                    Partition()),
                          nvars);
    if (f.kind == "e") return elementary(f.r, nvars);
    if (f.kind == "p") return power_sum(f.r, nvars);
    if (f.kind == "qp") return qpower(f.r, nvars);
    return barp(f.r, nvars);
}

int cmd_expand(const std::string& shapeText, const std::string& withText, const std::string& mode,
               int nvars) {
    SkewShape shape = SkewShape::parse(shapeText);
    Factor f = parse_factor(withText);
    if (mode == "formal") {
        std::cout << formal_rhs(shape, f).to_string() << "\n";
        return kExitPass;
    }
    int n = nvars > 0 ? nvars : shape.size() + factor_degree(f);
    if (n <= 0) n = 1;
    SymFunc product = skew_schur(shape, n) * factor_symfunc(f, n);
    std::cout << product.to_string() << "\n";
    return kExitPass;
}

// ---------------------------------------------------------------------------
// verify

struct SweepState {
    long cases = 0;
    long failures = 0;
};

void report_case(SweepState& st, const Partition& lam, const Partition& mu, int r, int n,
                 bool pass, const std::string& detail) {
    ++st.cases;
    if (!pass) ++st.failures;
    std::cout << (pass ? "PASS" : "FAIL") << " case=" << lam.to_string() << "|" << mu.to_string()
              << "|r=" << r << " n=" << n;
    if (!detail.empty()) std::cout << " " << detail;
    std::cout << "\n";
}

// product identity in monomial coordinates against the closed-form sum
bool check_rule_monomial(const std::string& rule, const Partition& lam, const Partition& mu,
                         int r, int n, std::string& detail) {
    SkewShape shape(lam, mu);
    SymFunc lhs = skew_schur(shape, n) * factor_symfunc(
                                             Factor{rule == "sqmnr" || rule == "qmnr" ? "qp"
                                                    : rule == "sqmnr3"               ? "barp"
                                                    : rule == "spr"                  ? "s"
                                                    : rule == "cspr"                 ? "e"
                                                                                     : "p",
                                                    r, Partition(), false},
                                             n);
    SkewSchurSum rhs;
    if (rule == "spr") rhs = rhs_spr(lam, mu, r);
    else if (rule == "cspr") rhs = rhs_cspr(lam, mu, r);
    else if (rule == "smnr") rhs = rhs_smnr(lam, mu, r);
    else if (rule == "qmnr") rhs = rhs_qmnr(lam, mu, r);
    else if (rule == "sqmnr") rhs = rhs_sqmnr_prime(lam, mu, r);
    else rhs = rhs_sqmnr3(lam, mu, r);
    bool pass = expand_sum(rhs, n) == lhs;
    if (!pass) detail = "monomial expansion differs from the product";
    if (pass && rule == "sqmnr") {
        if (!(rhs_sqmnr(lam, mu, r) == rhs)) {
            pass = false;
            detail = "ribbon-pair form differs termwise from the broken-ribbon form";
        } else if (!(rhs.specialize(0) == rhs_spr(lam, mu, r))) {
            pass = false;
            detail = "q=0 specialization differs from the Pieri form";
        } else if (!(rhs.specialize(1) == rhs_smnr(lam, mu, r))) {
            pass = false;
            detail = "q=1 specialization differs from the ribbon form";
        }
    }
    return pass;
}

int verify_products(const std::string& rule, int maxLambda, int maxR, SweepState& st) {
    for (const Partition& lam : partitions_up_to(maxLambda)) {
        // the straight-shape rule keeps the inner partition empty
        std::vector<Partition> mus =
            rule == "qmnr" ? std::vector<Partition>{Partition()} : subpartitions(lam);
        for (const Partition& mu : mus) {
            for (int r = 1; r <= maxR; ++r) {
                int n = lam.size() - mu.size() + r;
                std::string detail;
                bool pass = check_rule_monomial(rule, lam, mu, r, n, detail);
                report_case(st, lam, mu, r, n, pass, detail);
            }
        }
    }
    return st.failures ? kExitViolation : kExitPass;
}

int verify_bijective(int maxLambda, int maxR, int maxEntries, SweepState& st) {
    int entries = maxEntries > 0 ? maxEntries : 4;
    for (const Partition& lam : partitions_up_to(maxLambda)) {
        for (const Partition& mu : subpartitions(lam)) {
            for (int r = 1; r <= maxR; ++r) {
                BijectiveReport rep = verify_sqmnr_bijective(lam, mu, r, entries);
                std::ostringstream extra;
                extra << "cases=" << rep.cases << " survivors=" << rep.survivors;
                if (!rep.pass) extra << " " << rep.detail;
                report_case(st, lam, mu, r, entries, rep.pass, extra.str());
            }
        }
    }
    return st.failures ? kExitViolation : kExitPass;
}

int verify_lemma1(int maxR, SweepState& st) {
    for (int r = 1; r <= maxR; ++r) {
        SkewSchurSum hooks;
        for (int k = 1; k <= r; ++k) {
            std::vector<int> hook{k};
            for (int i = k + 1; i <= r; ++i) hook.push_back(1);
            hooks.add_term(SkewShape(Partition(hook), Partition()),
                           QPoly::monomial((r - k) % 2 ? -1 : 1, r - k));
        }
        bool pass = expand_sum(hooks, r) == qpower(r, r);
        report_case(st, Partition(), Partition(), r, r, pass,
                    pass ? "" : "hook expansion differs from the quantum power sum");
    }
    return st.failures ? kExitViolation : kExitPass;
}

int verify_lemma2(int maxCells, SweepState& st) {
    for (const Partition& outer : partitions_up_to(maxCells * maxCells)) {
        if (outer.length() > maxCells || outer.part(1) > maxCells) continue;
        for (const Partition& inner : subpartitions(outer)) {
            SkewShape shape(outer, inner);
            int size = shape.size();
            if (size < 1 || size > maxCells) continue;
            bool pass = true;
            std::string detail;
            for (int k = 1; k <= size && pass; ++k) {
                long counted = count_rectify_to_hook(shape, k);
                long formula = lemma2_formula(shape, k);
                if (counted != formula) {
                    pass = false;
                    std::ostringstream d;
                    d << "k=" << k << " count=" << counted << " formula=" << formula;
                    detail = d.str();
                }
            }
            report_case(st, outer, inner, size, size, pass, detail);
        }
    }
    return st.failures ? kExitViolation : kExitPass;
}

// rows from which reverse insertion is defined: outer corner with a cell
std::vector<int> reverse_rows(const SkewShape& s) {
    std::vector<int> rows;
    for (int i = 1; i <= s.outer().length(); ++i)
        if (s.outer().part(i) > s.outer().part(i + 1) && s.outer().part(i) > s.inner().part(i))
            rows.push_back(i);
    return rows;
}

// rows from which insertion-from-row is defined
std::vector<int> insert_rows(const SkewShape& s) {
    std::vector<int> rows;
    for (int i = 1; i <= s.outer().length(); ++i) {
        if (i > 1 && s.inner().part(i - 1) <= s.inner().part(i)) continue;
        if (s.outer().part(i) >= s.inner().part(i) + 1) rows.push_back(i);
    }
    return rows;
}

int verify_noncrossing(int maxCells, int maxEntries, SweepState& st) {
    int entries = maxEntries > 0 ? maxEntries : 3;
    for (const Partition& outer : partitions_up_to(maxCells)) {
        for (const Partition& inner : subpartitions(outer)) {
            SkewShape shape(outer, inner);
            if (shape.size() == 0) continue;
            long checks = 0;
            bool pass = true;
            std::string detail;
            for (const SkewTableau& t : all_ssyt(shape, entries)) {
                for (int i1 : reverse_rows(t.shape())) {
                    InsertionOutcome o1 = reverse_insert_from_row(t, i1);
                    // (c) a later insertion from below the exit row stays below
                    for (int i0p : insert_rows(t.shape())) {
                        if (i0p <= o1.exit_row) continue;
                        InsertionOutcome oi = insert_from_row(t, i0p);
                        ++checks;
                        if (oi.exit_row <= i1) {
                            pass = false;
                            detail = "part (c) failed on " + t.to_string(true);
                        }
                    }
                    // (a)/(b) a second reverse insertion from a lower row
                    for (int i2 : reverse_rows(o1.tableau.shape())) {
                        if (i2 >= i1) continue;
                        InsertionOutcome o2 = reverse_insert_from_row(o1.tableau, i2);
                        ++checks;
                        if (o1.exit_row > 0) {
                            if (o2.exit_row >= o1.exit_row) {
                                pass = false;
                                detail = "part (a) failed on " + t.to_string(true);
                            }
                        } else if (o2.exit_row != 0 || *o2.exit_value <= *o1.exit_value) {
                            pass = false;
                            detail = "part (b) failed on " + t.to_string(true);
                        }
                    }
                }
            }
            std::ostringstream extra;
            extra << "checks=" << checks;
            if (!detail.empty()) extra << " " << detail;
            report_case(st, outer, inner, 0, entries, pass, extra.str());
        }
    }
    return st.failures ? kExitViolation : kExitPass;
}

int cmd_verify(const std::string& rule, int maxLambda, int maxR, int maxEntries, int maxCells) {
    SweepState st;
    int code;
    if (rule == "lemma1") code = verify_lemma1(maxR, st);
    else if (rule == "lemma2") code = verify_lemma2(maxCells, st);
    else if (rule == "noncrossing") code = verify_noncrossing(maxCells, maxEntries, st);
    else if (rule == "sqmnr-bijective") code = verify_bijective(maxLambda, maxR, maxEntries, st);
    else code = verify_products(rule, maxLambda, maxR, st);
    std::cout << "cases=" << st.cases << " failures=" << st.failures << "\n";
    return code;
}

// ---------------------------------------------------------------------------
// conjecture

int cmd_conjecture(const std::string& id, int maxLambda, int maxR, const std::string& format) {
    long failures = 0;
    bool withDivisibility = id == "hl3" || id == "hl-sqmnr";
    for (const Partition& lam : partitions_up_to(maxLambda)) {
        for (const Partition& mu : subpartitions(lam)) {
            for (int r = 1; r <= maxR; ++r) {
                int n = lam.size() - mu.size() + r;
                if (n <= 0) n = 1;
                ConjectureReport rep;
                if (id == "hl1") rep = conjecture1(lam, mu, r, n);
                else if (id == "hl2") rep = conjecture2(lam, mu, r, n);
                else if (id == "hl3") rep = conjecture3(lam, mu, r, n);
                else rep = verify_sqmnr_hl_form(lam, mu, r, n);
                if (!rep.pass) ++failures;
                if (format == "tsv") {
                    std::cout << rep.verdict_line();
                    if (withDivisibility)
                        std::cout << "\t" << (rep.divisible ? "divisible" : "not-divisible");
                    std::cout << "\n";
                } else {
                    std::cout << "conj" << rep.id << " lam=" << lam.to_string()
                              << " mu=" << mu.to_string() << " r=" << r << " n=" << n << " "
                              << (rep.pass ? "PASS" : "FAIL");
                    if (withDivisibility)
                        std::cout << " " << (rep.divisible ? "divisible" : "not-divisible");
                    std::cout << "\n";
                }
                if (!rep.pass && !rep.detail.empty()) {
                    std::istringstream lines(rep.detail);
                    std::string line;
                    while (std::getline(lines, line)) std::cout << "  " << line << "\n";
                }
            }
        }
    }
    return failures ? kExitViolation : kExitPass;
}

// ---------------------------------------------------------------------------
// trace

std::string read_input(const std::string& path) {
    std::ostringstream out;
    if (path == "-") {
        out << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw usage_error("cannot open input file '" + path + "'");
        out << in.rdbuf();
    }
    std::string text = out.str();
    if (text.empty()) throw usage_error("empty trace input");
    return text;
}

void print_bumps(const std::vector<BumpStep>& steps) {
    for (const BumpStep& b : steps) {
        std::cout << "row=" << b.row << " col=" << b.col << " out=";
        if (b.out < 0) std::cout << "-";
        else std::cout << b.out;
        std::cout << " in=";
        if (b.in < 0) std::cout << "-";
        else std::cout << b.in;
        std::cout << "\n";
    }
}

std::string join_word(const std::vector<int>& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(w[i]);
    }
    return out;
}

int cmd_trace(const std::string& algorithm, const std::string& input, int k, int row,
              const std::string& lamText, const std::string& muText) {
    std::string text = read_input(input);
    if (algorithm == "rectify") {
        StandardTableau t = StandardTableau::parse(text);
        std::vector<std::pair<Cell, SlidePath>> slides;
        StandardTableau out = rectify(t, slides);
        for (const auto& [hole, path] : slides) {
            std::cout << "slide hole=(" << hole.row << "," << hole.col << ") path=";
            for (std::size_t i = 0; i < path.cells.size(); ++i) {
                if (i) std::cout << ",";
                std::cout << "(" << path.cells[i].row << "," << path.cells[i].col << ")";
            }
            std::cout << "\n";
        }
        std::cout << out.to_string(true) << "\n";
        return kExitPass;
    }
    SkewTableau t = SkewTableau::parse(text);
    if (algorithm == "insert") {
        InsertionOutcome o = insert(t, k);
        print_bumps(o.trace);
        std::cout << o.tableau.to_string(true) << "\n";
        return kExitPass;
    }
    if (algorithm == "reverse") {
        InsertionOutcome o = reverse_insert_from_row(t, row);
        print_bumps(o.trace);
        std::cout << "exit row=" << o.exit_row;
        if (o.exit_value) std::cout << " k=" << *o.exit_value;
        std::cout << "\n" << o.tableau.to_string(true) << "\n";
        return kExitPass;
    }
    Partition lam = Partition::parse(lamText);
    Partition mu = Partition::parse(muText);
    if (algorithm == "phi") {
        PhiTrace tr;
        SkewTableau out = phi(t, lam, mu, &tr);
        for (int v : tr.loop_word) std::cout << "loop k=" << v << "\n";
        if (tr.fixed_point) std::cout << "FIXED v=" << join_word(tr.loop_word) << "\n";
        std::cout << out.to_string(true) << "\n";
        return kExitPass;
    }
    // psi
    if (psi_is_fixed(t, lam, mu)) {
        auto [s, w] = psi_fixed_decompose(t, lam, mu);
        (void)s;
        std::cout << "FIXED w=" << join_word(w) << "\n" << t.to_string(true) << "\n";
        return kExitPass;
    }
    std::cout << psi(t, lam, mu).to_string(true) << "\n";
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for skew Schur products, quantum power sums, and the associated "
                 "tableau bijections"};
    app.require_subcommand(1);

    std::string shapeText = "-";
    std::string withText;
    std::string mode = "formal";
    int nvars = 0;
    CLI::App* expand = app.add_subcommand("expand", "expand a skew Schur product in closed form "
                                                    "or monomial coordinates");
    expand->add_option("--shape", shapeText, "skew shape, e.g. 3,2,2/1,1 ('-' = empty)");
    expand->add_option("--with", withText, "factor: s:<r>, e:<r>, p:<r>, qp:<r>, barp:<r>, "
                                           "or qp:<partition>")
        ->required();
    expand->add_option("--mode", mode, "formal (skew Schur sum) or monomial (SymFunc product)")
        ->check(CLI::IsMember({"formal", "monomial"}));
    expand->add_option("--nvars", nvars, "number of variables for monomial mode "
                                         "(default: total degree)");

    std::string rule;
    int maxLambda = 4;
    int maxR = 3;
    int maxEntries = 0;
    int maxCells = 5;
    CLI::App* verify = app.add_subcommand("verify", "sweep an identity over small cases");
    verify->add_option("rule", rule, "one of spr, cspr, smnr, qmnr, sqmnr, sqmnr3, "
                                     "sqmnr-bijective, lemma1, lemma2, noncrossing")
        ->required()
        ->check(CLI::IsMember({"spr", "cspr", "smnr", "qmnr", "sqmnr", "sqmnr3",
                               "sqmnr-bijective", "lemma1", "lemma2", "noncrossing"}));
    verify->add_option("--max-lambda", maxLambda, "bound on |lambda| (default 4)");
    verify->add_option("--max-r", maxR, "bound on r (default 3)");
    verify->add_option("--max-entries", maxEntries,
                       "entry bound for sqmnr-bijective (default 4) / noncrossing (default 3)");
    verify->add_option("--max-cells", maxCells,
                       "cell bound for lemma2 shapes and noncrossing outer shapes (default 5)");

    std::string conjId;
    std::string format = "tsv";
    int cMaxLambda = 4;
    int cMaxR = 3;
    CLI::App* conjecture =
        app.add_subcommand("conjecture", "exact verdict sweep for a conjectured product rule");
    conjecture->add_option("id", conjId, "one of hl1, hl2, hl3, hl-sqmnr")
        ->required()
        ->check(CLI::IsMember({"hl1", "hl2", "hl3", "hl-sqmnr"}));
    conjecture->add_option("--max-lambda", cMaxLambda, "bound on |lambda| (default 4)");
    conjecture->add_option("--max-r", cMaxR, "bound on r (default 3)");
    conjecture->add_option("--format", format, "verdict table format")
        ->check(CLI::IsMember({"tsv", "text"}));

    std::string algorithm;
    std::string input = "-";
    int k = 0;
    int row = 0;
    std::string lamText = "-";
    std::string muText = "-";
    CLI::App* trace = app.add_subcommand("trace", "step-by-step log of one algorithm run");
    trace->add_option("algorithm", algorithm, "one of insert, reverse, phi, psi, rectify")
        ->required()
        ->check(CLI::IsMember({"insert", "reverse", "phi", "psi", "rectify"}));
    trace->add_option("--input", input, "tableau text file, or '-' for stdin (default)");
    trace->add_option("--k", k, "entry to insert (insert)");
    trace->add_option("--row", row, "row to reverse insert from (reverse)");
    trace->add_option("--lam", lamText, "base outer partition (phi/psi)");
    trace->add_option("--mu", muText, "base inner partition (phi/psi)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (expand->parsed()) return cmd_expand(shapeText, withText, mode, nvars);
        if (verify->parsed()) return cmd_verify(rule, maxLambda, maxR, maxEntries, maxCells);
        if (conjecture->parsed()) return cmd_conjecture(conjId, cMaxLambda, cMaxR, format);
        return cmd_trace(algorithm, input, k, row, lamText, muText);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
