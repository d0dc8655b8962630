#pragma once

// One-shot verification ledger: every numeric claim the toolkit reproduces,
// replayed and reported as pass / fail / known_typo. The ledger is fully
// deterministic: fixed seeds, fixed formatting, fixed entry order.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qowp/analysis.hpp"
#include "qowp/chsh.hpp"
#include "qowp/gf2poly.hpp"
#include "qowp/levin.hpp"
#include "qowp/poset.hpp"
#include "qowp/qsim.hpp"
#include "qowp/reference_tables.hpp"
#include "qowp/satcheck.hpp"

namespace qowp::verify {

enum class Status { pass, fail, known_typo };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::known_typo: return "known_typo";
    }
    return "?";
}

struct Entry {
    std::string claim_id;
    std::string location;
    Status status = Status::fail;
    std::string detail;
};

struct VerificationLedger {
    std::vector<Entry> entries;

    int count(Status s) const {
        int n = 0;
        for (const Entry& e : entries) n += e.status == s;
        return n;
    }

    /// 0 when nothing failed (known typos are expected), 1 otherwise.
    int exit_status() const { return count(Status::fail) > 0 ? 1 : 0; }
};

namespace detail {

struct CheckResult {
    bool ok = false;
    std::string detail;
};

inline std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

template <typename Fn>
void add(VerificationLedger& ledger, const std::string& id, const std::string& location, Fn&& fn) {
    Entry e{id, location, Status::fail, ""};
    try {
        CheckResult r = fn();
        e.status = r.ok ? Status::pass : Status::fail;
        e.detail = r.detail;
    } catch (const std::exception& ex) {
        e.status = Status::fail;
        e.detail = std::string("exception: ") + ex.what();
    }
    ledger.entries.push_back(std::move(e));
}

}  // namespace detail

inline VerificationLedger build_ledger() {
    using detail::CheckResult;
    using detail::num;

    VerificationLedger ledger;
    const gf2::ExtField f8(gf2::parse_poly("x^3+x+1"));
    const gf2::OpTable mul = gf2::build_table(f8, gf2::TableKind::multiply);
    const gf2::OpTable add = gf2::build_table(f8, gf2::TableKind::add);

    detail::add(ledger, "mul-table", "GF(2^3) mod x^3+x+1 multiplication table vs printed copy",
                [&]() -> CheckResult {
                    int match = 0, allowlisted = 0, unexplained = 0;
                    for (unsigned r = 0; r < 8; ++r)
                        for (unsigned c = 0; c < 8; ++c) {
                            const std::uint8_t computed = mul.at(r, c);
                            const std::uint8_t printed = ref::kPrintedMulTable[r][c];
                            if (computed == printed) {
                                ++match;
                                continue;
                            }
                            bool known = false;
                            for (const ref::TypoCell& t : ref::kKnownMulTypos)
                                if (t.row == r && t.col == c && t.printed == printed &&
                                    t.computed == computed)
                                    known = true;
                            (known ? allowlisted : unexplained)++;
                        }
                    return {unexplained == 0 && allowlisted == 2,
                            std::to_string(match) + "/64 cells match, " +
                                std::to_string(allowlisted) + " allowlisted, " +
                                std::to_string(unexplained) + " unexplained"};
                });

    for (const ref::TypoCell& t : ref::kKnownMulTypos) {
        const std::string rl = gf2::label(gf2::GF2Poly::from_bits(t.row), 3);
        const std::string cl = gf2::label(gf2::GF2Poly::from_bits(t.col), 3);
        Entry e{"mul-table-typo-" + rl + "x" + cl,
                "printed multiplication cell (" + rl + ", " + cl + ")", Status::fail, ""};
        const std::uint8_t computed = mul.at(t.row, t.col);
        const std::uint8_t mirror = mul.at(t.col, t.row);
        const bool witness_ok = computed == t.computed && mirror == t.computed &&
                                ref::kPrintedMulTable[t.col][t.row] == t.computed &&
                                t.printed != t.computed;
        e.status = witness_ok ? Status::known_typo : Status::fail;
        e.detail = "printed " + gf2::to_string(gf2::GF2Poly::from_bits(t.printed)) + ", computed " +
                   gf2::to_string(gf2::GF2Poly::from_bits(t.computed)) +
                   "; mirror cell prints the computed value (commutativity witness)";
        ledger.entries.push_back(std::move(e));
    }

    detail::add(ledger, "add-table", "GF(2^3) addition table vs printed copy",
                [&]() -> CheckResult {
                    int match = 0;
                    for (unsigned r = 0; r < 8; ++r)
                        for (unsigned c = 0; c < 8; ++c) match += add.at(r, c) == ref::kPrintedAddTable[r][c];
                    return {match == 64, std::to_string(match) + "/64 cells match"};
                });

    detail::add(ledger, "field-axioms",
                "commutativity, associativity, distributivity on random triples",
                [&]() -> CheckResult {
                    std::mt19937 rng(424242);
                    std::uniform_int_distribution<std::uint64_t> pick(0, 7);
                    for (int i = 0; i < 1000; ++i) {
                        const gf2::GF2Poly p = f8.element(pick(rng));
                        const gf2::GF2Poly q = f8.element(pick(rng));
                        const gf2::GF2Poly r = f8.element(pick(rng));
                        if (!(gf2::field_mul(p, q, f8) == gf2::field_mul(q, p, f8)))
                            return {false, "commutativity broke"};
                        if (!(gf2::field_mul(gf2::field_mul(p, q, f8), r, f8) ==
                              gf2::field_mul(p, gf2::field_mul(q, r, f8), f8)))
                            return {false, "associativity broke"};
                        if (!(gf2::field_mul(p, gf2::poly_add(q, r), f8) ==
                              gf2::poly_add(gf2::field_mul(p, q, f8), gf2::field_mul(p, r, f8))))
                            return {false, "distributivity broke"};
                    }
                    return {true, "1000 random triples"};
                });

    detail::add(ledger, "eval-positivity", "x^2+x+1 = 1 and x^2+x = 0 on both GF(2) points",
                [&]() -> CheckResult {
                    for (int b : {0, 1}) {
                        if (gf2::poly_eval_gf2(gf2::parse_poly("x^2+x+1"), b) != 1)
                            return {false, "positive polynomial vanished"};
                        if (gf2::poly_eval_gf2(gf2::parse_poly("x^2+x"), b) != 0)
                            return {false, "zero polynomial fired"};
                    }
                    return {true, "both points"};
                });

    detail::add(ledger, "irreducibility", "irreducibility verdicts for the named polynomials",
                [&]() -> CheckResult {
                    for (const char* s : {"x^3+x+1", "x^3+x^2+1", "x^2+x+1", "x", "x+1"})
                        if (!gf2::is_irreducible(gf2::parse_poly(s)))
                            return {false, std::string(s) + " misjudged reducible"};
                    for (const char* s : {"x^2", "x^2+1", "x^2+x", "x^3+1"})
                        if (gf2::is_irreducible(gf2::parse_poly(s)))
                            return {false, std::string(s) + " misjudged irreducible"};
                    return {true, "9 verdicts"};
                });

    detail::add(ledger, "factor-reconstruction",
                "factors multiply back for every polynomial of degree <= 3",
                [&]() -> CheckResult {
                    for (std::uint64_t v = 1; v < 16; ++v) {
                        const gf2::GF2Poly p = gf2::GF2Poly::from_bits(v);
                        gf2::GF2Poly prod = gf2::kOne;
                        for (gf2::GF2Poly q : gf2::factor(p)) {
                            if (!gf2::is_irreducible(q)) return {false, "non-irreducible factor"};
                            prod = gf2::poly_mul(prod, q);
                        }
                        if (!(prod == p)) return {false, "product mismatch at " + gf2::to_string(p)};
                    }
                    try {
                        gf2::factor(gf2::kZero);
                        return {false, "zero polynomial was not rejected"};
                    } catch (const std::domain_error&) {
                    }
                    return {true, "15 reconstructions + zero rejected"};
                });

    detail::add(ledger, "quadratic-roots",
                "complex roots of x^2+x+1 are -1/2 +- i sqrt(3)/2 and cube to 1",
                [&]() -> CheckResult {
                    const auto [r1, r2] = gf2::complex_roots_quadratic(gf2::parse_poly("x^2+x+1"));
                    const std::complex<double> w1(-0.5, std::sqrt(3.0) / 2.0);
                    const std::complex<double> w2(-0.5, -std::sqrt(3.0) / 2.0);
                    if (std::abs(r1 - w1) > 1e-12 || std::abs(r2 - w2) > 1e-12)
                        return {false, "roots off target"};
                    if (std::abs(r1 * r1 * r1 - 1.0) > 1e-10 || std::abs(r2 * r2 * r2 - 1.0) > 1e-10)
                        return {false, "cubes off 1"};
                    return {true, "roots " + num(r1.real()) + " +- " + num(std::abs(r1.imag())) + "i"};
                });

    const levin::LengthPreservingF fid = levin::LengthPreservingF::identity();
    const levin::LengthPreservingF fnot = levin::LengthPreservingF::bitwise_not();
    const levin::TruthTable cnot_table = levin::truth_table(fid, 1);
    const levin::BinaryMatrix cnot_matrix = levin::permutation_matrix(cnot_table);

    detail::add(ledger, "cnot-truth-table", "g with f = identity at width 1 is the CNOT table",
                [&]() -> CheckResult {
                    const bool ok = cnot_table.at(0, 0) == 0b00 && cnot_table.at(0, 1) == 0b01 &&
                                    cnot_table.at(1, 0) == 0b11 && cnot_table.at(1, 1) == 0b10 &&
                                    cnot_table.is_bijection();
                    return {ok, "00->00 01->01 10->11 11->10"};
                });

    detail::add(ledger, "cnot-matrix", "permutation matrix equals the reference CNOT matrix",
                [&]() -> CheckResult {
                    for (std::size_t r = 0; r < 4; ++r)
                        for (std::size_t c = 0; c < 4; ++c)
                            if (cnot_matrix.at(r, c) != ref::kCnotMatrix[r][c])
                                return {false, "cell mismatch"};
                    return {true, "entry-for-entry"};
                });

    detail::add(ledger, "cnot-involution", "the CNOT matrix squares to the identity",
                [&]() -> CheckResult {
                    return {levin::is_involution(cnot_matrix) && cnot_matrix.is_orthogonal(),
                            "M*M = I and M*M^T = I, exact integers"};
                });

    detail::add(ledger, "block-diag-form", "diag(identity, NOT) assembles the same matrix",
                [&]() -> CheckResult {
                    return {levin::block_form(fid, fnot) == cnot_matrix, "entry-for-entry"};
                });

    detail::add(ledger, "qsim-cross-check", "gate-applied CNOT columns equal the table matrix",
                [&]() -> CheckResult {
                    for (std::uint64_t in = 0; in < 4; ++in) {
                        const qsim::StateVector out = qsim::cnot(qsim::StateVector::basis(2, in), 0, 1);
                        for (std::size_t r = 0; r < 4; ++r)
                            if (out.amplitude(r) !=
                                qsim::Complex(static_cast<double>(cnot_matrix.at(r, in)), 0.0))
                                return {false, "amplitude mismatch"};
                    }
                    return {true, "4 basis columns, exact"};
                });

    detail::add(ledger, "sibling-average", "g has mean = max = 1 preimage for widths 1..6",
                [&]() -> CheckResult {
                    for (const auto& f : {fid, fnot})
                        for (int w = 1; w <= 6; ++w) {
                            const levin::SiblingStats s = levin::sibling_stats(levin::truth_table(f, w));
                            if (s.mean_preimage_count() != 1.0 || s.max_preimage_count != 1)
                                return {false, "fibre found at width " + std::to_string(w)};
                        }
                    return {true, "both f, widths 1..6"};
                });

    detail::add(ledger, "hardcore-balance",
                "inner-product bit is balanced for every nonzero key, widths 1..6",
                [&]() -> CheckResult {
                    for (int w = 1; w <= 6; ++w) {
                        const std::uint64_t span = std::uint64_t{1} << w;
                        for (std::uint64_t a = 1; a < span; ++a) {
                            std::uint64_t ones = 0;
                            for (std::uint64_t x = 0; x < span; ++x)
                                ones += static_cast<std::uint64_t>(
                                    levin::hardcore_bit({a, w}, {x, w}));
                            if (ones != span / 2) return {false, "imbalance"};
                        }
                    }
                    return {true, "all keys, widths 1..6"};
                });

    detail::add(ledger, "hadamard-basis", "H sends |0>, |1> to the two uniform sign vectors",
                [&]() -> CheckResult {
                    const double r = 1.0 / std::sqrt(2.0);
                    const qsim::StateVector h0 = qsim::hadamard(qsim::StateVector::basis(1, 0), 0);
                    const qsim::StateVector h1 = qsim::hadamard(qsim::StateVector::basis(1, 1), 0);
                    const bool ok = std::abs(h0.amplitude(0) - qsim::Complex(r, 0)) < 1e-12 &&
                                    std::abs(h0.amplitude(1) - qsim::Complex(r, 0)) < 1e-12 &&
                                    std::abs(h1.amplitude(0) - qsim::Complex(r, 0)) < 1e-12 &&
                                    std::abs(h1.amplitude(1) - qsim::Complex(-r, 0)) < 1e-12;
                    return {ok, "amplitudes +-1/sqrt 2"};
                });

    detail::add(ledger, "bell-states", "the four circuits hit the four entangled targets",
                [&]() -> CheckResult {
                    const double r = 1.0 / std::sqrt(2.0);
                    struct Case {
                        int x;
                        qsim::TargetMode mode;
                        std::array<double, 4> want;
                    };
                    const Case cases[] = {
                        {0, qsim::TargetMode::x_squared, {r, 0, 0, r}},
                        {1, qsim::TargetMode::x_squared, {0, r, -r, 0}},
                        {0, qsim::TargetMode::x_squared_plus_1, {0, r, r, 0}},
                        {1, qsim::TargetMode::x_squared_plus_1, {r, 0, 0, -r}},
                    };
                    for (const Case& c : cases) {
                        const qsim::StateVector s = qsim::bell_state(c.x, c.mode);
                        for (std::size_t i = 0; i < 4; ++i)
                            if (std::abs(s.amplitude(i) - qsim::Complex(c.want[i], 0)) > 1e-12)
                                return {false, "amplitude off"};
                    }
                    return {true, "4 circuits within 1e-12"};
                });

    detail::add(ledger, "bell-orthogonality", "the four outputs are pairwise orthogonal",
                [&]() -> CheckResult {
                    std::vector<qsim::StateVector> all;
                    for (int x : {0, 1}) {
                        all.push_back(qsim::bell_state(x, qsim::TargetMode::x_squared));
                        all.push_back(qsim::bell_state(x, qsim::TargetMode::x_squared_plus_1));
                    }
                    for (std::size_t i = 0; i < all.size(); ++i)
                        for (std::size_t j = i + 1; j < all.size(); ++j) {
                            qsim::Complex o(0, 0);
                            for (std::size_t k = 0; k < 4; ++k)
                                o += std::conj(all[i].amplitude(k)) * all[j].amplitude(k);
                            if (std::abs(o) > 1e-12) return {false, "overlap found"};
                        }
                    return {true, "6 inner products below 1e-12"};
                });

    detail::add(ledger, "bell-marginals", "single-bit measurements are exactly fifty-fifty",
                [&]() -> CheckResult {
                    for (int x : {0, 1})
                        for (auto m : {qsim::TargetMode::x_squared, qsim::TargetMode::x_squared_plus_1})
                            for (int q : {0, 1}) {
                                const auto d = qsim::measure_distribution(qsim::bell_state(x, m), {q});
                                if (d.size() != 2 || d.at("0") != 0.5 || d.at("1") != 0.5)
                                    return {false, "marginal not exactly 1/2"};
                            }
                    return {true, "16 marginals, exact"};
                });

    detail::add(ledger, "bell-entropy", "reduced states are I/2 with entropy one bit",
                [&]() -> CheckResult {
                    for (int x : {0, 1})
                        for (auto m : {qsim::TargetMode::x_squared, qsim::TargetMode::x_squared_plus_1}) {
                            const qsim::DensityMatrix rho =
                                qsim::reduced_density(qsim::bell_state(x, m), {0});
                            if (std::abs(rho.at(0, 0) - qsim::Complex(0.5, 0)) > 1e-12 ||
                                std::abs(rho.at(1, 1) - qsim::Complex(0.5, 0)) > 1e-12 ||
                                std::abs(rho.at(0, 1)) > 1e-12)
                                return {false, "reduced state is not I/2"};
                            if (std::abs(qsim::entanglement_entropy(rho) - 1.0) > 1e-10)
                                return {false, "entropy off one bit"};
                        }
                    return {true, "4 states, entropy 1.0 +- 1e-10"};
                });

    detail::add(ledger, "pr-box", "PR box: S = 4 exactly and non-signalling marginals",
                [&]() -> CheckResult {
                    const chsh::ConditionalDistribution box = chsh::pr_box();
                    if (chsh::chsh_of_box(box) != 4.0) return {false, "S != 4"};
                    for (int a = 0; a < 2; ++a)
                        for (int x = 0; x < 2; ++x)
                            for (bool alice : {true, false})
                                for (int o : {0, 1})
                                    if (box.outcome_marginal(a, x, alice, o) != 0.5)
                                        return {false, "signalling marginal"};
                    return {true, "S = 4, all marginals 1/2"};
                });

    detail::add(ledger, "lhv-bound", "16 deterministic strategies max out at exactly 2",
                [&]() -> CheckResult {
                    const double m = chsh::lhv_max();
                    return {m == 2.0, "max |S| = " + num(m)};
                });

    detail::add(ledger, "tsirelson", "the first circuit output reaches 2 sqrt 2",
                [&]() -> CheckResult {
                    const double s = chsh::quantum_chsh(qsim::bell_state(0, qsim::TargetMode::x_squared),
                                                        chsh::standard_settings());
                    return {std::abs(s - 2.0 * std::sqrt(2.0)) <= 1e-9, "S = " + num(s)};
                });

    detail::add(ledger, "correlation-hierarchy", "strict chain 2 < 2 sqrt 2 < 4",
                [&]() -> CheckResult {
                    const double classical = chsh::lhv_max();
                    const double quantum = chsh::quantum_chsh(
                        qsim::bell_state(0, qsim::TargetMode::x_squared), chsh::standard_settings());
                    const double algebraic = chsh::chsh_of_box(chsh::pr_box());
                    return {classical < quantum && quantum < algebraic,
                            num(classical) + " < " + num(quantum) + " < " + num(algebraic)};
                });

    detail::add(ledger, "bell-test-angles", "the two printed numbers 0.2500 and 0.1464",
                [&]() -> CheckResult {
                    const chsh::BellAngleNumbers n = chsh::bell_test_angle_numbers();
                    const bool ok = n.lhs == 0.25 && std::abs(n.rhs - 0.1464) <= 5e-5 && n.lhs > n.rhs;
                    return {ok, "lhs = " + num(n.lhs) + ", rhs = " + num(n.rhs)};
                });

    detail::add(ledger, "sakurai-inequality", "outcome-probability inequality holds at both points",
                [&]() -> CheckResult {
                    for (int x : {0, 1}) {
                        const chsh::SakuraiCheck c = chsh::sakurai_check(x);
                        if (!c.holds || c.lhs != 1.0 || c.rhs != 2.0)
                            return {false, "inequality failed at x = " + std::to_string(x)};
                    }
                    return {true, "1 <= 2 at x = 0 and x = 1"};
                });

    detail::add(ledger, "powerset-encoding", "mask-to-polynomial map is bijective and XOR-linear",
                [&]() -> CheckResult {
                    std::set<std::uint64_t> seen;
                    for (unsigned u = 0; u < 8; ++u)
                        seen.insert(poset::encode_poly(poset::SubsetMask(u)).bits());
                    if (seen.size() != 8) return {false, "not a bijection"};
                    for (unsigned u = 0; u < 8; ++u)
                        for (unsigned v = 0; v < 8; ++v)
                            if (!(poset::encode_poly(poset::SubsetMask(u ^ v)) ==
                                  gf2::poly_add(poset::encode_poly(poset::SubsetMask(u)),
                                                poset::encode_poly(poset::SubsetMask(v)))))
                                return {false, "linearity broke"};
                    return {true, "64 pairs"};
                });

    detail::add(ledger, "pair-table", "complement pairs match the reference table bit-exactly",
                [&]() -> CheckResult {
                    const auto rows = poset::alice_bob_pairs();
                    for (std::size_t i = 0; i < 8; ++i) {
                        const ref::PairRowRef& want = ref::kPairTable[i];
                        if (rows[i].alice.label() != want.alice_bits ||
                            gf2::to_string(rows[i].alice_poly) != want.alice_poly ||
                            rows[i].bob.label() != want.bob_bits ||
                            gf2::to_string(rows[i].bob_poly) != want.bob_poly)
                            return {false, "row " + std::to_string(i + 1) + " differs"};
                    }
                    return {true, "8 rows"};
                });

    detail::add(ledger, "hasse-diagram", "8 nodes, 12 covers, all maximal chains length 3",
                [&]() -> CheckResult {
                    const poset::HasseDiagram d = poset::hasse_edges();
                    if (d.nodes.size() != 8 || d.edges.size() != 12) return {false, "wrong shape"};
                    int chains = 0;
                    bool graded = true;
                    std::function<void(unsigned, int)> walk = [&](unsigned at, int depth) {
                        bool extended = false;
                        for (const auto& [lo, hi] : d.edges)
                            if (lo.bits == at) {
                                extended = true;
                                walk(hi.bits, depth + 1);
                            }
                        if (!extended) {
                            if (at != 7u || depth != 3) graded = false;
                            ++chains;
                        }
                    };
                    walk(0, 0);
                    return {graded && chains == 6, "6 maximal chains of length 3"};
                });

    detail::add(ledger, "three-cnf-unsat", "the 8-clause expansion is unsatisfiable",
                [&]() -> CheckResult {
                    const sat::CNFFormula f = sat::expand_contradiction(3);
                    if (f.clauses.size() != 8) return {false, "clause count"};
                    const sat::SatResult r = sat::brute_force_sat(f);
                    return {!r.satisfiable, "8 clauses, no satisfying assignment"};
                });

    detail::add(ledger, "clause-deletion", "deleting any one clause leaves exactly one model",
                [&]() -> CheckResult {
                    const sat::CNFFormula whole = sat::expand_contradiction(3);
                    for (std::size_t skip = 0; skip < 8; ++skip) {
                        sat::CNFFormula f = whole;
                        f.clauses.erase(f.clauses.begin() + static_cast<std::ptrdiff_t>(skip));
                        int models = 0;
                        for (std::uint64_t a = 0; a < 8; ++a) {
                            bool all = true;
                            for (const auto& clause : f.clauses) {
                                bool sat_clause = false;
                                for (sat::Literal l : clause)
                                    if ((((a >> l.var) & 1u) != 0) != l.negated) sat_clause = true;
                                if (!sat_clause) all = false;
                            }
                            models += all;
                        }
                        if (models != 1) return {false, "deletion " + std::to_string(skip)};
                        if (!sat::brute_force_sat(f).satisfiable) return {false, "solver disagrees"};
                    }
                    return {true, "8 deletions, one model each"};
                });

    detail::add(ledger, "cauchy-normalization",
                "integral of 1/(x^2+x+1) over the line equals 2 pi / sqrt 3",
                [&]() -> CheckResult {
                    const analysis::NormalizationResult r =
                        analysis::reciprocal_poly_normalization(1e4, 1000000);
                    const bool ok = std::abs(r.normalized - 1.0) <= 1e-4 &&
                                    std::abs(r.n_const - 3.6275987) <= 1e-6;
                    return {ok, "normalized = " + num(r.normalized) + ", N = " + num(r.n_const)};
                });

    detail::add(ledger, "cauchy-median", "mass left of the median is half the total",
                [&]() -> CheckResult {
                    const double half = analysis::reciprocal_poly_half_line(1e4, 500000);
                    const double target = 3.14159265358979323846 / std::sqrt(3.0);
                    return {std::abs(half - target) <= 1e-3,
                            "half-line " + num(half) + " vs N/2 = " + num(target)};
                });

    detail::add(ledger, "negligibility", "reference decay verdicts, stable under refinement",
                [&]() -> CheckResult {
                    using analysis::RangeVerdict;
                    const analysis::RealFunction fast{[](double n) { return std::pow(2.0, -n); },
                                                      "2^-n"};
                    const analysis::RealFunction slow{[](double n) { return 1.0 / (n * n); },
                                                      "1/n^2"};
                    const analysis::RealFunction zero{[](double) { return 0.0; }, "0"};
                    for (int density : {1, 2}) {
                        if (analysis::negligibility_check(fast, 3, 64, density).verdict !=
                            RangeVerdict::negligible_on_range)
                            return {false, "fast decay misjudged"};
                        if (analysis::negligibility_check(slow, 3, 64, density).verdict !=
                            RangeVerdict::not_negligible_on_range)
                            return {false, "slow decay misjudged"};
                        if (analysis::negligibility_check(zero, 3, 64, density).verdict !=
                            RangeVerdict::negligible_on_range)
                            return {false, "zero misjudged"};
                    }
                    return {true, "3 functions x 2 grid densities"};
                });

    return ledger;
}

// ---- rendering ----

inline std::string to_text(const VerificationLedger& ledger, bool color) {
    auto paint = [color](Status s) -> std::string {
        const char* name = to_string(s);
        if (!color) return name;
        const char* code = s == Status::pass ? "32" : s == Status::fail ? "31" : "33";
        return std::string("\x1b[") + code + "m" + name + "\x1b[0m";
    };
    std::size_t idw = 0, locw = 0;
    for (const Entry& e : ledger.entries) {
        idw = std::max(idw, e.claim_id.size());
        locw = std::max(locw, e.location.size());
    }
    std::ostringstream os;
    for (const Entry& e : ledger.entries) {
        os << paint(e.status) << std::string(12 - std::string(to_string(e.status)).size(), ' ')
           << e.claim_id << std::string(idw - e.claim_id.size() + 2, ' ') << e.location
           << std::string(locw - e.location.size() + 2, ' ') << e.detail << '\n';
    }
    os << ledger.entries.size() << " claims: " << ledger.count(Status::pass) << " pass, "
       << ledger.count(Status::known_typo) << " known_typo, " << ledger.count(Status::fail)
       << " fail\n";
    return os.str();
}

inline nlohmann::json to_json(const VerificationLedger& ledger) {
    nlohmann::json entries = nlohmann::json::array();
    for (const Entry& e : ledger.entries)
        entries.push_back({{"claim_id", e.claim_id},
                           {"location", e.location},
                           {"status", to_string(e.status)},
                           {"detail", e.detail}});
    return {{"entries", entries},
            {"summary",
             {{"pass", ledger.count(Status::pass)},
              {"known_typo", ledger.count(Status::known_typo)},
              {"fail", ledger.count(Status::fail)}}}};
}

}  // namespace qowp::verify
