#pragma once

// Correlation laboratory: the PR box, the {+1,-1} <-> {0,1} group
// homomorphism, the exhaustive local-deterministic bound, quantum
// correlators for two-qubit states at arbitrary x-z measurement angles, and
// the small closed-form checks around the Bell test angles.

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "qowp/gf2poly.hpp"
#include "qowp/poset.hpp"
#include "qowp/qsim.hpp"

namespace qowp::chsh {

inline constexpr double kPi = 3.14159265358979323846;

/// One of the two observable outcomes; carrier of the multiplicative group.
struct PmValue {
    int value = +1;

    explicit PmValue(int v) : value(v) {
        if (v != 1 && v != -1) throw std::domain_error("chsh: PmValue is +1 or -1");
    }
    friend bool operator==(PmValue a, PmValue b) noexcept { return a.value == b.value; }
    friend PmValue operator*(PmValue a, PmValue b) { return PmValue(a.value * b.value); }
};

/// 0 <-> +1, 1 <-> -1; XOR of bits becomes multiplication of signs.
inline PmValue pm_encode(int bit) {
    if (bit != 0 && bit != 1) throw std::domain_error("chsh: pm_encode wants a bit");
    return PmValue(bit == 0 ? +1 : -1);
}
inline int pm_decode(PmValue v) { return v.value == +1 ? 0 : 1; }

/// Conditional outcome distribution P(a', x' | a, x) over bits.
class ConditionalDistribution {
  public:
    using Row = std::array<double, 4>;  // indexed (a' << 1) | x'

    explicit ConditionalDistribution(const std::array<Row, 4>& rows) : rows_(rows) {
        for (const Row& r : rows_) {
            double sum = 0;
            for (double p : r) {
                if (p < 0) throw std::domain_error("chsh: negative probability");
                sum += p;
            }
            if (std::abs(sum - 1.0) > 1e-12)
                throw std::domain_error("chsh: conditional row does not sum to 1");
        }
    }

    double prob(int a, int x, int ao, int xo) const {
        return rows_[static_cast<std::size_t>((a << 1) | x)][static_cast<std::size_t>((ao << 1) | xo)];
    }

    Row row(int a, int x) const { return rows_[static_cast<std::size_t>((a << 1) | x)]; }

    /// Marginal of one party's outcome given both inputs.
    double outcome_marginal(int a, int x, bool alice, int outcome) const {
        double s = 0;
        for (int other = 0; other < 2; ++other)
            s += alice ? prob(a, x, outcome, other) : prob(a, x, other, outcome);
        return s;
    }

  private:
    std::array<Row, 4> rows_;
};

/// One conditional row of the PR box: weight 1/2 on each outcome pair with
/// a' XOR x' = a AND x.
inline ConditionalDistribution::Row pr_box_row(int a, int x) {
    ConditionalDistribution::Row r{0, 0, 0, 0};
    const int target = a & x;
    for (int ao = 0; ao < 2; ++ao)
        for (int xo = 0; xo < 2; ++xo)
            if ((ao ^ xo) == target) r[static_cast<std::size_t>((ao << 1) | xo)] = 0.5;
    return r;
}

inline ConditionalDistribution pr_box() {
    return ConditionalDistribution(
        {pr_box_row(0, 0), pr_box_row(0, 1), pr_box_row(1, 0), pr_box_row(1, 1)});
}

/// Local deterministic box a' = A(a), x' = X(x).
inline ConditionalDistribution deterministic_box(const std::function<int(int)>& alice,
                                                 const std::function<int(int)>& bob) {
    std::array<ConditionalDistribution::Row, 4> rows{};
    for (int a = 0; a < 2; ++a)
        for (int x = 0; x < 2; ++x) {
            ConditionalDistribution::Row r{0, 0, 0, 0};
            r[static_cast<std::size_t>((alice(a) << 1) | bob(x))] = 1.0;
            rows[static_cast<std::size_t>((a << 1) | x)] = r;
        }
    return ConditionalDistribution(rows);
}

inline ConditionalDistribution uniform_box() {
    ConditionalDistribution::Row r{0.25, 0.25, 0.25, 0.25};
    return ConditionalDistribution({r, r, r, r});
}

/// E_{ax} = sum pm(a') pm(x') P(a', x' | a, x).
inline double correlator_of_box(const ConditionalDistribution& box, int a, int x) {
    double e = 0;
    for (int ao = 0; ao < 2; ++ao)
        for (int xo = 0; xo < 2; ++xo)
            e += pm_encode(ao).value * pm_encode(xo).value * box.prob(a, x, ao, xo);
    return e;
}

/// S = E00 + E01 + E10 - E11.
inline double chsh_of_box(const ConditionalDistribution& box) {
    return correlator_of_box(box, 0, 0) + correlator_of_box(box, 0, 1) +
           correlator_of_box(box, 1, 0) - correlator_of_box(box, 1, 1);
}

/// Exhaustive maximum of |S| over the 16 deterministic local strategies.
inline double lhv_max() {
    auto strategy = [](int code) {
        return [code](int bit) { return (code >> bit) & 1; };  // code bits: f(0), f(1)
    };
    double best = 0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            best = std::max(best, std::abs(chsh_of_box(deterministic_box(strategy(a), strategy(b)))));
    return best;
}

struct MeasurementSettings {
    double alice_0 = 0, alice_1 = 0, bob_0 = 0, bob_1 = 0;  // radians

    static MeasurementSettings from_degrees(double a0, double a1, double b0, double b1) {
        const double s = kPi / 180.0;
        return {a0 * s, a1 * s, b0 * s, b1 * s};
    }
};

/// Settings that drive the sum of correlators to its quantum maximum.
inline MeasurementSettings standard_settings() { return {0.0, kPi / 2, kPi / 4, -kPi / 4}; }

/// <state| A(ta) (x) A(tb) |state> with A(t) = cos t Z + sin t X.
inline double correlator(const qsim::StateVector& state, double theta_alice, double theta_bob) {
    if (state.qubit_count() != 2) throw std::domain_error("chsh: correlator wants two qubits");
    auto obs = [](double t) {
        return std::array<std::array<double, 2>, 2>{{{std::cos(t), std::sin(t)},
                                                     {std::sin(t), -std::cos(t)}}};
    };
    const auto a = obs(theta_alice);
    const auto b = obs(theta_bob);
    std::complex<double> e(0, 0);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    e += std::conj(state.amplitude(static_cast<std::size_t>((i << 1) | j))) *
                         a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                         b[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)] *
                         state.amplitude(static_cast<std::size_t>((k << 1) | l));
    return e.real() / state.norm_sq();
}

inline std::array<double, 4> quantum_correlators(const qsim::StateVector& state,
                                                 const MeasurementSettings& m) {
    return {correlator(state, m.alice_0, m.bob_0), correlator(state, m.alice_0, m.bob_1),
            correlator(state, m.alice_1, m.bob_0), correlator(state, m.alice_1, m.bob_1)};
}

inline double quantum_chsh(const qsim::StateVector& state, const MeasurementSettings& m) {
    const std::array<double, 4> e = quantum_correlators(state, m);
    return e[0] + e[1] + e[2] - e[3];
}

/// The two printed numbers around the Bell test angles: half the squared
/// 1/sqrt(2) amplitude versus two half-weighted sin^2(22.5 deg) terms.
/// Callers get both and can reproduce either ordering.
struct BellAngleNumbers {
    double lhs = 0;
    double rhs = 0;
};

inline BellAngleNumbers bell_test_angle_numbers() {
    // lhs through the normalized Born probability of the |+> state, which is
    // exactly one half, halved again.
    const qsim::StateVector plus = qsim::hadamard(qsim::StateVector::basis(1, 0), 0);
    const double p0 = qsim::measure_distribution(plus, {0}).at("0");
    const double half_sin_sq = 0.5 * std::pow(std::sin(22.5 * kPi / 180.0), 2);
    return {0.5 * p0, half_sin_sq + half_sin_sq};
}

/// Outcome-probability inequality over the complement-pair polynomials
/// evaluated at a GF(2) point: Pr3 + Pr4 <= Pr3 + Pr4 + Pr2 + Pr7.
struct SakuraiCheck {
    double lhs = 0;
    double rhs = 0;
    bool holds = false;
};

inline SakuraiCheck sakurai_check(int x) {
    if (x != 0 && x != 1) throw std::domain_error("chsh: sakurai check wants a bit");
    const auto rows = poset::alice_bob_pairs();
    auto pr = [&](int i) {  // 1-based row index in the pair table
        return std::abs(gf2::poly_eval_gf2(rows[static_cast<std::size_t>(i - 1)].alice_poly, x));
    };
    SakuraiCheck c;
    c.lhs = pr(3) + pr(4);
    c.rhs = pr(3) + pr(4) + pr(2) + pr(7);
    c.holds = c.lhs <= c.rhs;
    return c;
}

// ---- report assembly for the CLI ----

struct Report {
    std::string kind;   // "box" or "state"
    std::string label;  // "pr", "phi+", ...
    std::optional<MeasurementSettings> settings;
    std::array<double, 4> correlators{};
    double s_value = 0;
};

inline Report box_report(const ConditionalDistribution& box, const std::string& label) {
    Report r;
    r.kind = "box";
    r.label = label;
    r.correlators = {correlator_of_box(box, 0, 0), correlator_of_box(box, 0, 1),
                     correlator_of_box(box, 1, 0), correlator_of_box(box, 1, 1)};
    r.s_value = r.correlators[0] + r.correlators[1] + r.correlators[2] - r.correlators[3];
    return r;
}

inline Report state_report(const qsim::StateVector& state, const MeasurementSettings& m,
                           const std::string& label) {
    Report r;
    r.kind = "state";
    r.label = label;
    r.settings = m;
    r.correlators = quantum_correlators(state, m);
    r.s_value = r.correlators[0] + r.correlators[1] + r.correlators[2] - r.correlators[3];
    return r;
}

inline nlohmann::json report_to_json(const Report& r) {
    nlohmann::json j{{"kind", r.kind},
                     {"label", r.label},
                     {"correlators",
                      {{"E00", r.correlators[0]},
                       {"E01", r.correlators[1]},
                       {"E10", r.correlators[2]},
                       {"E11", r.correlators[3]}}},
                     {"S", r.s_value},
                     {"bounds",
                      {{"classical", 2.0},
                       {"tsirelson", 2.0 * std::sqrt(2.0)},
                       {"algebraic", 4.0},
                       {"within_classical", std::abs(r.s_value) <= 2.0 + 1e-9},
                       {"within_tsirelson", std::abs(r.s_value) <= 2.0 * std::sqrt(2.0) + 1e-9}}}};
    if (r.settings) {
        const MeasurementSettings& m = *r.settings;
        j["settings"] = {{"radians", {m.alice_0, m.alice_1, m.bob_0, m.bob_1}},
                         {"degrees",
                          {m.alice_0 * 180.0 / kPi, m.alice_1 * 180.0 / kPi, m.bob_0 * 180.0 / kPi,
                           m.bob_1 * 180.0 / kPi}}};
    }
    return j;
}

inline std::string report_to_text(const Report& r) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(6);
    os << r.kind << ' ' << r.label << '\n';
    if (r.settings) {
        const MeasurementSettings& m = *r.settings;
        os << "settings (deg): " << m.alice_0 * 180 / kPi << ' ' << m.alice_1 * 180 / kPi << ' '
           << m.bob_0 * 180 / kPi << ' ' << m.bob_1 * 180 / kPi << '\n';
        os << "settings (rad): " << m.alice_0 << ' ' << m.alice_1 << ' ' << m.bob_0 << ' '
           << m.bob_1 << '\n';
    }
    os << "E00 " << r.correlators[0] << "  E01 " << r.correlators[1] << "  E10 "
       << r.correlators[2] << "  E11 " << r.correlators[3] << '\n';
    os << "S = " << r.s_value << "  (classical 2, quantum max " << 2.0 * std::sqrt(2.0)
       << ", algebraic 4)\n";
    return os.str();
}

}  // namespace qowp::chsh
