#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <random>
#include <vector>

#include "qowp/levin.hpp"
#include "qowp/qsim.hpp"

using namespace qowp::qsim;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// Oracle: dense matrix route. Gates as explicit matrices lifted by Kronecker
// product, applied by row-times-vector; nothing shared with the bit-twiddling
// implementation.
using Mat = std::vector<std::vector<Complex>>;

Mat kron(const Mat& a, const Mat& b) {
    const std::size_t an = a.size(), bn = b.size();
    Mat out(an * bn, std::vector<Complex>(an * bn));
    for (std::size_t i = 0; i < an; ++i)
        for (std::size_t j = 0; j < an; ++j)
            for (std::size_t k = 0; k < bn; ++k)
                for (std::size_t l = 0; l < bn; ++l) out[i * bn + k][j * bn + l] = a[i][j] * b[k][l];
    return out;
}

std::vector<Complex> apply_mat(const Mat& m, const std::vector<Complex>& v) {
    std::vector<Complex> out(v.size(), Complex(0, 0));
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < v.size(); ++c) out[r] += m[r][c] * v[c];
    return out;
}

const Mat kI2{{1, 0}, {0, 1}};
const Mat kH{{kInvSqrt2, kInvSqrt2}, {kInvSqrt2, -kInvSqrt2}};
const Mat kCnot{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};

StateVector random_state(int qubits, std::mt19937& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Complex> a(std::size_t{1} << qubits);
    double n = 0;
    for (Complex& c : a) {
        c = Complex(gauss(rng), gauss(rng));
        n += std::norm(c);
    }
    for (Complex& c : a) c /= std::sqrt(n);
    return StateVector(qubits, std::move(a));
}

double dist(const StateVector& s, const std::vector<Complex>& want) {
    double d = 0;
    for (std::size_t i = 0; i < want.size(); ++i) d += std::abs(s.amplitude(i) - want[i]);
    return d;
}

Complex overlap(const StateVector& a, const StateVector& b) {
    Complex o(0, 0);
    for (std::size_t i = 0; i < a.dim(); ++i) o += std::conj(a.amplitude(i)) * b.amplitude(i);
    return o;
}

}  // namespace

TEST_CASE("hadamard matches the DFT columns") {
    StateVector h0 = hadamard(StateVector::basis(1, 0), 0);
    CHECK(dist(h0, {kInvSqrt2, kInvSqrt2}) < 1e-12);
    StateVector h1 = hadamard(StateVector::basis(1, 1), 0);
    CHECK(dist(h1, {kInvSqrt2, -kInvSqrt2}) < 1e-12);
    CHECK_THROWS_AS(hadamard(h0, 1), std::domain_error);

    SECTION("applying twice restores the state") {
        std::mt19937 rng(7);
        for (int trial = 0; trial < 50; ++trial) {
            StateVector s = random_state(2, rng);
            StateVector t = hadamard(hadamard(s, trial % 2), trial % 2);
            for (std::size_t i = 0; i < s.dim(); ++i)
                REQUIRE(std::abs(t.amplitude(i) - s.amplitude(i)) < 1e-12);
        }
    }
}

TEST_CASE("cnot permutes basis states") {
    CHECK(dist(cnot(StateVector::basis(2, 0b10), 0, 1), {0, 0, 0, 1}) == 0.0);
    CHECK(dist(cnot(StateVector::basis(2, 0b00), 0, 1), {1, 0, 0, 0}) == 0.0);

    StateVector plus0 = hadamard(StateVector::basis(2, 0), 0);  // (|00> + |10>)/sqrt2
    StateVector bell = cnot(plus0, 0, 1);
    CHECK(dist(bell, {kInvSqrt2, 0, 0, kInvSqrt2}) < 1e-12);

    CHECK_THROWS_AS(cnot(bell, 1, 1), std::domain_error);

    SECTION("cnot twice is the identity on random states") {
        std::mt19937 rng(11);
        for (int trial = 0; trial < 50; ++trial) {
            StateVector s = random_state(2, rng);
            StateVector t = cnot(cnot(s, 0, 1), 0, 1);
            for (std::size_t i = 0; i < s.dim(); ++i)
                REQUIRE(std::abs(t.amplitude(i) - s.amplitude(i)) < 1e-12);
        }
    }
}

TEST_CASE("gates agree with the dense-matrix oracle on random states") {
    std::mt19937 rng(23);
    const Mat h_on_0 = kron(kH, kI2);
    const Mat h_on_1 = kron(kI2, kH);
    for (int trial = 0; trial < 100; ++trial) {
        StateVector s = random_state(2, rng);
        CHECK(dist(hadamard(s, 0), apply_mat(h_on_0, s.amplitudes())) < 1e-12);
        CHECK(dist(hadamard(s, 1), apply_mat(h_on_1, s.amplitudes())) < 1e-12);
        CHECK(dist(cnot(s, 0, 1), apply_mat(kCnot, s.amplitudes())) < 1e-12);
    }

    SECTION("three-qubit register, gate on the middle wire") {
        const Mat h_mid = kron(kron(kI2, kH), kI2);
        for (int trial = 0; trial < 50; ++trial) {
            StateVector s = random_state(3, rng);
            CHECK(dist(hadamard(s, 1), apply_mat(h_mid, s.amplitudes())) < 1e-12);
        }
    }

    SECTION("norm is preserved") {
        for (int trial = 0; trial < 50; ++trial) {
            StateVector s = random_state(3, rng);
            CHECK(std::abs(hadamard(s, 2).norm_sq() - 1.0) < 1e-12);
            CHECK(std::abs(cnot(s, 2, 0).norm_sq() - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("the four bell circuits") {
    StateVector phi_plus = bell_state(0, TargetMode::x_squared);
    StateVector psi_minus = bell_state(1, TargetMode::x_squared);
    StateVector psi_plus = bell_state(0, TargetMode::x_squared_plus_1);
    StateVector phi_minus = bell_state(1, TargetMode::x_squared_plus_1);

    CHECK(dist(phi_plus, {kInvSqrt2, 0, 0, kInvSqrt2}) < 1e-12);
    CHECK(dist(psi_minus, {0, kInvSqrt2, -kInvSqrt2, 0}) < 1e-12);
    CHECK(dist(psi_plus, {0, kInvSqrt2, kInvSqrt2, 0}) < 1e-12);
    CHECK(dist(phi_minus, {kInvSqrt2, 0, 0, -kInvSqrt2}) < 1e-12);

    SECTION("pairwise orthogonal") {
        const StateVector* all[] = {&phi_plus, &psi_minus, &psi_plus, &phi_minus};
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) CHECK(std::abs(overlap(*all[i], *all[j])) < 1e-12);
    }

    SECTION("reduced states are maximally mixed with entropy one bit") {
        for (const StateVector* s : {&phi_plus, &psi_minus, &psi_plus, &phi_minus})
            for (int keep : {0, 1}) {
                DensityMatrix rho = reduced_density(*s, {keep});
                CHECK(std::abs(rho.at(0, 0) - Complex(0.5, 0)) < 1e-12);
                CHECK(std::abs(rho.at(1, 1) - Complex(0.5, 0)) < 1e-12);
                CHECK(std::abs(rho.at(0, 1)) < 1e-12);
                CHECK(std::abs(rho.at(1, 0)) < 1e-12);
                CHECK(entanglement_entropy(rho) == Catch::Approx(1.0).margin(1e-10));
            }
    }

    SECTION("single-qubit marginals are exactly one half") {
        for (const StateVector* s : {&phi_plus, &psi_minus, &psi_plus, &phi_minus})
            for (int q : {0, 1}) {
                auto dist01 = measure_distribution(*s, {q});
                REQUIRE(dist01.size() == 2);
                CHECK(dist01.at("0") == 0.5);
                CHECK(dist01.at("1") == 0.5);
            }
    }
}

TEST_CASE("measure_distribution") {
    CHECK(measure_distribution(StateVector::basis(2, 0), {0, 1}) ==
          std::map<std::string, double>{{"00", 1.0}});

    StateVector psi_plus = bell_state(0, TargetMode::x_squared_plus_1);
    auto both = measure_distribution(psi_plus, {0, 1});
    REQUIRE(both.size() == 2);
    CHECK(both.at("01") == 0.5);
    CHECK(both.at("10") == 0.5);

    CHECK_THROWS_AS(measure_distribution(psi_plus, {}), std::domain_error);
    CHECK_THROWS_AS(measure_distribution(psi_plus, {0, 0}), std::domain_error);
    CHECK_THROWS_AS(measure_distribution(psi_plus, {2}), std::domain_error);

    SECTION("marginal of the joint equals the direct single-qubit distribution") {
        std::mt19937 rng(37);
        for (int trial = 0; trial < 40; ++trial) {
            StateVector s = random_state(3, rng);
            for (int q = 0; q < 3; ++q) {
                auto joint = measure_distribution(s, {0, 1, 2});
                auto single = measure_distribution(s, {q});
                double p1 = 0;
                for (const auto& [label, p] : joint)
                    if (label[static_cast<std::size_t>(q)] == '1') p1 += p;
                double direct = single.count("1") ? single.at("1") : 0.0;
                REQUIRE(p1 == Catch::Approx(direct).margin(1e-12));
            }
        }
    }
}

TEST_CASE("reduced_density") {
    // Product state: kept qubit is a pure projector.
    StateVector s01 = StateVector::basis(2, 0b01);
    DensityMatrix rho = reduced_density(s01, {0});
    CHECK(std::abs(rho.at(0, 0) - Complex(1, 0)) < 1e-15);
    CHECK(std::abs(rho.at(1, 1)) < 1e-15);
    CHECK(entanglement_entropy(rho) == 0.0);

    CHECK_THROWS_AS(reduced_density(s01, {}), std::domain_error);
    CHECK_THROWS_AS(reduced_density(s01, {0, 1}), std::domain_error);

    SECTION("partial trace against the direct two-qubit computation") {
        std::mt19937 rng(41);
        for (int trial = 0; trial < 30; ++trial) {
            StateVector s = random_state(2, rng);
            DensityMatrix r0 = reduced_density(s, {0});
            // rho_0[r][c] = sum_t amp(r t) conj(amp(c t))
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) {
                    Complex want(0, 0);
                    for (int t = 0; t < 2; ++t)
                        want += s.amplitude(static_cast<std::size_t>((r << 1) | t)) *
                                std::conj(s.amplitude(static_cast<std::size_t>((c << 1) | t)));
                    REQUIRE(std::abs(r0.at(r, c) - want) < 1e-14);
                }
        }
    }

    SECTION("keeping two of three qubits") {
        StateVector ghzish = cnot(cnot(hadamard(StateVector::basis(3, 0), 0), 0, 1), 1, 2);
        DensityMatrix r01 = reduced_density(ghzish, {0, 1});
        CHECK(std::abs(r01.at(0, 0) - Complex(0.5, 0)) < 1e-12);
        CHECK(std::abs(r01.at(3, 3) - Complex(0.5, 0)) < 1e-12);
        CHECK(std::abs(r01.at(0, 3)) < 1e-12);  // coherence died with the traced qubit
        CHECK(entanglement_entropy(r01) == Catch::Approx(1.0).margin(1e-10));
    }
}

TEST_CASE("density matrix invariants are enforced") {
    Eigen::MatrixXcd bad(2, 2);
    bad << Complex(0.5, 0), Complex(0, 0.3), Complex(0, 0.3), Complex(0.5, 0);
    CHECK_THROWS_AS(DensityMatrix(bad), std::domain_error);  // not Hermitian

    Eigen::MatrixXcd scaled = Eigen::MatrixXcd::Identity(2, 2);
    CHECK_THROWS_AS(DensityMatrix(scaled), std::domain_error);  // trace 2

    Eigen::MatrixXcd neg(2, 2);
    neg << 1.5, 0, 0, -0.5;
    CHECK_THROWS_AS(DensityMatrix(neg), std::domain_error);  // negative eigenvalue
}

TEST_CASE("cnot matrix extracted from gate application equals the truth-table matrix") {
    qowp::levin::BinaryMatrix want =
        qowp::levin::permutation_matrix(qowp::levin::truth_table(qowp::levin::LengthPreservingF::identity(), 1));
    for (std::uint64_t in = 0; in < 4; ++in) {
        StateVector out = cnot(StateVector::basis(2, in), 0, 1);
        for (std::size_t r = 0; r < 4; ++r) {
            REQUIRE(out.amplitude(r).imag() == 0.0);
            REQUIRE(out.amplitude(r).real() == static_cast<double>(want.at(r, in)));
        }
    }
}

TEST_CASE("sampler approximates the distribution and is seed deterministic") {
    StateVector phi_plus = bell_state(0, TargetMode::x_squared);
    auto c1 = sample_counts(phi_plus, 4096, 99);
    auto c2 = sample_counts(phi_plus, 4096, 99);
    CHECK(c1 == c2);
    CHECK(c1.count("01") == 0);
    CHECK(c1.count("10") == 0);
    CHECK(c1.at("00") + c1.at("11") == 4096);
    CHECK(c1.at("00") > 1600);
    CHECK(c1.at("11") > 1600);
}

TEST_CASE("state JSON and Dirac rendering") {
    StateVector psi_minus = bell_state(1, TargetMode::x_squared);
    nlohmann::json j = state_to_json(psi_minus);
    CHECK(j["basis_labels"] == nlohmann::json({"00", "01", "10", "11"}));
    CHECK(j["amplitudes"].size() == 4);
    CHECK(j["probabilities"][1].get<double>() == 0.5);
    CHECK(dirac(psi_minus) == "(1/\xE2\x88\x9A""2)|01\xE2\x9F\xA9 - (1/\xE2\x88\x9A""2)|10\xE2\x9F\xA9");
    CHECK(dirac(StateVector::basis(2, 2)) == "|10\xE2\x9F\xA9");

    SECTION("invalid states are rejected") {
        CHECK_THROWS_AS(StateVector(1, {Complex(1, 0), Complex(1, 0)}), std::domain_error);
        CHECK_THROWS_AS(StateVector(2, {Complex(1, 0)}), std::domain_error);
    }
}
