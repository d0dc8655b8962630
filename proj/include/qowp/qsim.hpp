#pragma once

// Exact complex statevector simulation of 1..3 qubit registers: Hadamard,
// CNOT, the four Bell circuits, Born-rule measurement distributions (no
// sampling on the main path) and partial-trace entanglement checks.
//
// Tensor convention: qubit 0 is the most significant index, so |a,x> sits at
// amplitude index 2a + x and the CNOT matrix comes out in the lexicographic
// basis |00>, |01>, |10>, |11>.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "qowp/core.hpp"

namespace qowp::qsim {

using Complex = std::complex<double>;

class StateVector {
  public:
    StateVector(int qubit_count, std::vector<Complex> amplitudes)
        : qubits_(qubit_count), amp_(std::move(amplitudes)) {
        if (qubit_count < 1 || qubit_count > 12)
            throw std::domain_error("qsim: qubit count out of range");
        if (amp_.size() != (std::size_t{1} << qubit_count))
            throw std::domain_error("qsim: amplitude count must be 2^qubits");
        if (std::abs(norm_sq() - 1.0) > 1e-12)
            throw std::domain_error("qsim: state is not normalized");
    }

    static StateVector basis(int qubit_count, std::uint64_t index) {
        std::vector<Complex> a(std::size_t{1} << qubit_count, Complex(0, 0));
        a.at(index) = Complex(1, 0);
        return StateVector(qubit_count, std::move(a));
    }

    int qubit_count() const noexcept { return qubits_; }
    std::size_t dim() const noexcept { return amp_.size(); }
    const std::vector<Complex>& amplitudes() const noexcept { return amp_; }
    Complex amplitude(std::size_t i) const { return amp_.at(i); }

    double norm_sq() const noexcept {
        double s = 0;
        for (const Complex& c : amp_) s += std::norm(c);
        return s;
    }

    /// Position of a qubit's bit inside a basis index.
    int bit_shift(int qubit) const { return qubits_ - 1 - qubit; }

    std::string basis_label(std::size_t index) const {
        std::string s(static_cast<std::size_t>(qubits_), '0');
        for (int q = 0; q < qubits_; ++q)
            if ((index >> bit_shift(q)) & 1u) s[static_cast<std::size_t>(q)] = '1';
        return s;
    }

  private:
    int qubits_;
    std::vector<Complex> amp_;
};

namespace detail {
inline void check_qubit(const StateVector& s, int q, const char* who) {
    if (q < 0 || q >= s.qubit_count())
        throw std::domain_error(std::string("qsim: ") + who + ": qubit index out of range");
}
}  // namespace detail

/// |x> -> (1/sqrt 2) [(-1)^x |x> + |1-x>] on the indexed qubit.
inline StateVector hadamard(const StateVector& s, int qubit) {
    detail::check_qubit(s, qubit, "hadamard");
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const std::size_t mask = std::size_t{1} << s.bit_shift(qubit);
    std::vector<Complex> out(s.amplitudes());
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i & mask) continue;
        const Complex lo = s.amplitude(i);
        const Complex hi = s.amplitude(i | mask);
        out[i] = (lo + hi) * inv_sqrt2;
        out[i | mask] = (lo - hi) * inv_sqrt2;
    }
    return StateVector(s.qubit_count(), std::move(out));
}

/// Basis permutation |c,t> -> |c, t XOR c> lifted linearly.
inline StateVector cnot(const StateVector& s, int control, int target) {
    detail::check_qubit(s, control, "cnot");
    detail::check_qubit(s, target, "cnot");
    if (control == target) throw std::domain_error("qsim: cnot control equals target");
    const std::size_t cmask = std::size_t{1} << s.bit_shift(control);
    const std::size_t tmask = std::size_t{1} << s.bit_shift(target);
    std::vector<Complex> out(s.dim());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[(i & cmask) ? (i ^ tmask) : i] = s.amplitude(i);
    return StateVector(s.qubit_count(), std::move(out));
}

/// Which polynomial seeds the target wire: t = x for x^2 (they agree on
/// GF(2) points) or t = x XOR 1 for x^2 + 1.
enum class TargetMode { x_squared, x_squared_plus_1 };

/// Prepare |x>|t>, Hadamard the first wire, then CNOT it into the second.
/// The four (x, mode) combinations give the four Bell states.
inline StateVector bell_state(int x, TargetMode mode) {
    if (x != 0 && x != 1) throw std::domain_error("qsim: bell input is a bit");
    const int t = mode == TargetMode::x_squared ? x : x ^ 1;
    StateVector s = StateVector::basis(2, static_cast<std::uint64_t>((x << 1) | t));
    return cnot(hadamard(s, 0), 0, 1);
}

/// Exact Born marginal over the selected qubits, normalized by the state's
/// total weight. Keys are bit labels in the order the qubits were given.
inline std::map<std::string, double> measure_distribution(const StateVector& s,
                                                          const std::vector<int>& qubits) {
    if (qubits.empty()) throw std::domain_error("qsim: measurement needs at least one qubit");
    std::vector<int> seen;
    for (int q : qubits) {
        detail::check_qubit(s, q, "measure");
        if (std::find(seen.begin(), seen.end(), q) != seen.end())
            throw std::domain_error("qsim: duplicate qubit in measurement set");
        seen.push_back(q);
    }
    std::vector<double> p(std::size_t{1} << qubits.size(), 0.0);
    for (std::size_t i = 0; i < s.dim(); ++i) {
        std::size_t key = 0;
        for (int q : qubits) key = (key << 1) | ((i >> s.bit_shift(q)) & 1u);
        p[key] += std::norm(s.amplitude(i));
    }
    const double total = s.norm_sq();
    std::map<std::string, double> out;
    for (std::size_t key = 0; key < p.size(); ++key) {
        if (p[key] == 0.0) continue;
        std::string label(qubits.size(), '0');
        for (std::size_t j = 0; j < qubits.size(); ++j)
            if ((key >> (qubits.size() - 1 - j)) & 1u) label[j] = '1';
        out[label] = p[key] / total;
    }
    return out;
}

class DensityMatrix {
  public:
    explicit DensityMatrix(Eigen::MatrixXcd m) : m_(std::move(m)) {
        if (m_.rows() != m_.cols() || m_.rows() == 0)
            throw std::domain_error("qsim: density matrix must be square");
        if (!m_.isApprox(m_.adjoint(), 1e-12))
            throw std::domain_error("qsim: density matrix must be Hermitian");
        if (std::abs(m_.trace().real() - 1.0) > 1e-12 || std::abs(m_.trace().imag()) > 1e-12)
            throw std::domain_error("qsim: density matrix must have unit trace");
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m_, Eigen::EigenvaluesOnly);
        if (es.eigenvalues().minCoeff() < -1e-10)
            throw std::domain_error("qsim: density matrix must be positive semidefinite");
    }

    const Eigen::MatrixXcd& matrix() const noexcept { return m_; }
    Eigen::Index dim() const noexcept { return m_.rows(); }
    Complex at(Eigen::Index r, Eigen::Index c) const { return m_(r, c); }

    Eigen::VectorXd eigenvalues() const {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m_, Eigen::EigenvaluesOnly);
        return es.eigenvalues();
    }

  private:
    Eigen::MatrixXcd m_;
};

/// Partial trace onto the kept qubits (ascending order).
inline DensityMatrix reduced_density(const StateVector& s, const std::vector<int>& keep) {
    if (keep.empty()) throw std::domain_error("qsim: keep set must be nonempty");
    if (keep.size() >= static_cast<std::size_t>(s.qubit_count()))
        throw std::domain_error("qsim: keep set must be a proper subset");
    std::vector<int> k = keep;
    std::sort(k.begin(), k.end());
    if (std::unique(k.begin(), k.end()) != k.end())
        throw std::domain_error("qsim: duplicate qubit in keep set");
    for (int q : k) detail::check_qubit(s, q, "reduced_density");

    std::vector<int> traced;
    for (int q = 0; q < s.qubit_count(); ++q)
        if (std::find(k.begin(), k.end(), q) == k.end()) traced.push_back(q);

    auto compose = [&](std::size_t kept_bits, std::size_t traced_bits) {
        std::size_t idx = 0;
        for (std::size_t j = 0; j < k.size(); ++j)
            if ((kept_bits >> (k.size() - 1 - j)) & 1u)
                idx |= std::size_t{1} << s.bit_shift(k[j]);
        for (std::size_t j = 0; j < traced.size(); ++j)
            if ((traced_bits >> (traced.size() - 1 - j)) & 1u)
                idx |= std::size_t{1} << s.bit_shift(traced[j]);
        return idx;
    };

    const std::size_t kd = std::size_t{1} << k.size();
    const std::size_t td = std::size_t{1} << traced.size();
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(kd),
                                                  static_cast<Eigen::Index>(kd));
    for (std::size_t r = 0; r < kd; ++r)
        for (std::size_t c = 0; c < kd; ++c)
            for (std::size_t t = 0; t < td; ++t)
                rho(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) +=
                    s.amplitude(compose(r, t)) * std::conj(s.amplitude(compose(c, t)));
    return DensityMatrix(std::move(rho));
}

/// Von Neumann entropy in bits; 0 log 0 reads as 0.
inline double entanglement_entropy(const DensityMatrix& d) {
    double h = 0;
    Eigen::VectorXd ev = d.eigenvalues();
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        const double lambda = ev(i);
        if (lambda > 1e-15) h -= lambda * std::log2(lambda);
    }
    return h;
}

/// Seeded shot sampler, demonstration only; analysis paths use
/// measure_distribution.
inline std::map<std::string, std::uint64_t> sample_counts(const StateVector& s,
                                                          std::uint64_t shots,
                                                          std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<double> w;
    w.reserve(s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i) w.push_back(std::norm(s.amplitude(i)));
    std::discrete_distribution<std::size_t> pick(w.begin(), w.end());
    std::map<std::string, std::uint64_t> counts;
    for (std::uint64_t t = 0; t < shots; ++t) ++counts[s.basis_label(pick(rng))];
    return counts;
}

// ---- exports ----

inline nlohmann::json state_to_json(const StateVector& s) {
    nlohmann::json labels = nlohmann::json::array();
    nlohmann::json amps = nlohmann::json::array();
    nlohmann::json probs = nlohmann::json::array();
    const double total = s.norm_sq();
    for (std::size_t i = 0; i < s.dim(); ++i) {
        labels.push_back(s.basis_label(i));
        amps.push_back({s.amplitude(i).real(), s.amplitude(i).imag()});
        probs.push_back(std::norm(s.amplitude(i)) / total);
    }
    return {{"basis_labels", labels}, {"amplitudes", amps}, {"probabilities", probs}};
}

/// Dirac rendering that recognises the constants 1, 1/2 and 1/sqrt(2).
inline std::string dirac(const StateVector& s) {
    auto coeff = [](double mag) -> std::string {
        if (std::abs(mag - 1.0) < 1e-9) return "";
        if (std::abs(mag - 1.0 / std::sqrt(2.0)) < 1e-9) return "(1/\xE2\x88\x9A""2)";
        if (std::abs(mag - 0.5) < 1e-9) return "(1/2)";
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6f", mag);
        return buf;
    };
    std::string out;
    for (std::size_t i = 0; i < s.dim(); ++i) {
        const Complex a = s.amplitude(i);
        if (std::abs(a) < 1e-12) continue;
        std::string sign;
        std::string body;
        if (std::abs(a.imag()) < 1e-12) {
            sign = a.real() < 0 ? "-" : "+";
            body = coeff(std::abs(a.real()));
        } else {
            sign = "+";
            char buf[64];
            std::snprintf(buf, sizeof buf, "(%.6f%+.6fi)", a.real(), a.imag());
            body = buf;
        }
        if (out.empty())
            out = (sign == "-" ? "-" : "") + body;
        else
            out += " " + sign + " " + body;
        out += "|" + s.basis_label(i) + "\xE2\x9F\xA9";
    }
    return out.empty() ? "0" : out;
}

}  // namespace qowp::qsim
