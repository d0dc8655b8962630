#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <complex>
#include <random>
#include <set>
#include <vector>

#include "qowp/gf2poly.hpp"

using namespace qowp::gf2;

namespace {

// Independent oracle: dense coefficient vectors with arithmetic mod 2,
// no bit tricks shared with the implementation.
using Dense = std::vector<int>;

Dense dense_of(GF2Poly p) {
    Dense d;
    for (int i = 0; i <= p.degree(); ++i) d.push_back(p.coeff(i) ? 1 : 0);
    return d;
}

GF2Poly poly_of(const Dense& d) {
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] % 2) bits |= std::uint64_t{1} << i;
    return GF2Poly::from_bits(bits);
}

Dense dense_mul(const Dense& a, const Dense& b) {
    if (a.empty() || b.empty()) return {};
    Dense out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % 2;
    return out;
}

// Exhaustive reducibility oracle: p (deg n) is reducible iff some product
// of two lower-degree nonconstant polynomials equals it.
bool oracle_reducible(GF2Poly p) {
    const int n = p.degree();
    for (std::uint64_t u = 2; u < (std::uint64_t{1} << n); ++u) {
        if (GF2Poly::from_bits(u).degree() < 1) continue;
        for (std::uint64_t v = u; v < (std::uint64_t{1} << n); ++v) {
            if (GF2Poly::from_bits(v).degree() < 1) continue;
            Dense prod = dense_mul(dense_of(GF2Poly::from_bits(u)), dense_of(GF2Poly::from_bits(v)));
            if (poly_of(prod) == p) return true;
        }
    }
    return false;
}

const GF2Poly kMod = parse_poly("x^3+x+1");

}  // namespace

TEST_CASE("poly_add XORs coefficients") {
    // Addition-block cells: (x^2+1) + x^2 = 1 and (x+1) + (x^2+x) = x^2+1.
    CHECK(poly_add(parse_poly("x^2+1"), parse_poly("x^2")) == kOne);
    CHECK(poly_add(parse_poly("x+1"), parse_poly("x^2+x")) == parse_poly("x^2+1"));
    for (std::uint64_t v = 0; v < 16; ++v) {
        GF2Poly p = GF2Poly::from_bits(v);
        CHECK(poly_add(p, p) == kZero);
        CHECK(poly_add(p, kZero) == p);
    }
}

TEST_CASE("field_mul reduces modulo x^3+x+1") {
    ExtField f(kMod);
    CHECK(field_mul(kX, parse_poly("x^2"), f) == parse_poly("x+1"));
    CHECK(field_mul(parse_poly("x^2+x"), parse_poly("x^2+x"), f) == kX);
    for (std::uint64_t v = 0; v < 8; ++v)
        CHECK(field_mul(kOne, f.element(v), f) == f.element(v));
    CHECK_THROWS_AS(field_mul(parse_poly("x^3"), kOne, f), std::domain_error);
}

TEST_CASE("field_mul agrees with the dense mul+divmod oracle on all pairs") {
    ExtField f(kMod);
    for (std::uint64_t a = 0; a < 8; ++a)
        for (std::uint64_t b = 0; b < 8; ++b) {
            Dense prod = dense_mul(dense_of(f.element(a)), dense_of(f.element(b)));
            GF2Poly expect = poly_of(prod) % kMod;
            CHECK(field_mul(f.element(a), f.element(b), f) == expect);
        }
}

TEST_CASE("poly_eval_gf2 substitutes a bit") {
    CHECK(poly_eval_gf2(parse_poly("x^2+x+1"), 1) == 1);
    CHECK(poly_eval_gf2(parse_poly("x^2+x"), 0) == 0);
    CHECK(poly_eval_gf2(parse_poly("x^2+x"), 1) == 0);
    // The positive polynomial is 1 on both points, its complement 0 on both.
    for (int b : {0, 1}) {
        CHECK(poly_eval_gf2(parse_poly("x^2+x+1"), b) == 1);
        CHECK(poly_eval_gf2(parse_poly("x^2+x"), b) == 0);
    }
}

TEST_CASE("is_irreducible by trial division") {
    CHECK(is_irreducible(parse_poly("x^3+x+1")));
    CHECK_FALSE(is_irreducible(parse_poly("x^2+x")));
    CHECK(is_irreducible(parse_poly("x^2+x+1")));
    CHECK_THROWS_AS(is_irreducible(kOne), std::domain_error);
    CHECK_THROWS_AS(is_irreducible(kZero), std::domain_error);

    SECTION("matches the exhaustive product oracle up to degree 6") {
        for (std::uint64_t v = 2; v < (1u << 7); ++v) {
            GF2Poly p = GF2Poly::from_bits(v);
            if (p.degree() < 1) continue;
            CAPTURE(to_string(p));
            CHECK(is_irreducible(p) == !oracle_reducible(p));
        }
    }

    SECTION("every degree-1 polynomial is irreducible") {
        CHECK(is_irreducible(kX));
        CHECK(is_irreducible(parse_poly("x+1")));
    }
}

TEST_CASE("factor returns irreducible factors that multiply back") {
    CHECK(factor(parse_poly("x^2+x")) == std::vector<GF2Poly>{kX, parse_poly("x+1")});
    CHECK(factor(parse_poly("x^2+x+1")) == std::vector<GF2Poly>{parse_poly("x^2+x+1")});
    // (x+1)^2 = x^2+1 over GF(2).
    CHECK(factor(parse_poly("x^2+1")) == std::vector<GF2Poly>{parse_poly("x+1"), parse_poly("x+1")});
    CHECK(factor(kOne).empty());
    CHECK_THROWS_AS(factor(kZero), std::domain_error);

    SECTION("reconstruction and irreducibility of parts, all degree <= 6") {
        for (std::uint64_t v = 1; v < (1u << 7); ++v) {
            GF2Poly p = GF2Poly::from_bits(v);
            Dense acc{1};
            for (GF2Poly q : factor(p)) {
                CHECK(is_irreducible(q));
                acc = dense_mul(acc, dense_of(q));
            }
            CHECK(poly_of(acc) == p);
        }
    }
}

TEST_CASE("build_table produces the GF(2^3) Cayley tables") {
    ExtField f(kMod);
    OpTable mul = build_table(f, TableKind::multiply);
    OpTable add = build_table(f, TableKind::add);

    CHECK(mul.at(0b100, 0b100) == 0b110);  // x^2 * x^2 = x^2+x
    CHECK(mul.at(0b111, 0b101) == 0b110);  // computed value, commutative with (101,111)
    CHECK(mul.at(0b101, 0b111) == 0b110);

    SECTION("add table is symmetric with zero diagonal") {
        for (std::uint64_t r = 0; r < 8; ++r) {
            CHECK(add.at(r, r) == 0);
            for (std::uint64_t c = 0; c < 8; ++c) CHECK(add.at(r, c) == add.at(c, r));
        }
    }

    SECTION("nonzero rows and columns of the mul table are permutations") {
        for (std::uint64_t r = 1; r < 8; ++r) {
            std::set<std::uint8_t> row, col;
            for (std::uint64_t c = 1; c < 8; ++c) {
                row.insert(mul.at(r, c));
                col.insert(mul.at(c, r));
            }
            CHECK(row.size() == 7);
            CHECK(col.size() == 7);
            CHECK(row.count(0) == 0);
        }
    }

    SECTION("cap is enforced") {
        ExtField big(parse_poly("x^3+x^2+1"));
        CHECK_THROWS_AS(build_table(big, TableKind::multiply, 16), qowp::resource_error);
    }
}

TEST_CASE("field laws on random triples") {
    ExtField f(kMod);
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<std::uint64_t> pick(0, 7);
    for (int i = 0; i < 1500; ++i) {
        GF2Poly p = f.element(pick(rng));
        GF2Poly q = f.element(pick(rng));
        GF2Poly r = f.element(pick(rng));
        CHECK(field_mul(p, q, f) == field_mul(q, p, f));
        CHECK(field_mul(field_mul(p, q, f), r, f) == field_mul(p, field_mul(q, r, f), f));
        CHECK(field_mul(p, poly_add(q, r), f) ==
              poly_add(field_mul(p, q, f), field_mul(p, r, f)));
    }
}

TEST_CASE("nonzero elements of GF(2^3) form a cyclic group of order 7") {
    ExtField f(kMod);
    GF2Poly prod = kOne;
    for (std::uint64_t v = 1; v < 8; ++v) prod = field_mul(prod, f.element(v), f);
    CHECK(prod == kOne);

    std::set<std::uint64_t> powers;
    GF2Poly g = kX;
    GF2Poly acc = kOne;
    for (int i = 0; i < 7; ++i) {
        acc = field_mul(acc, g, f);
        powers.insert(acc.bits());
    }
    CHECK(powers.size() == 7);
    CHECK(acc == kOne);
}

TEST_CASE("frobenius_square") {
    ExtField f(kMod);
    // Must agree with the Cayley table diagonal; (x^2+1)^2 = x^4+1 = x^2+x+1.
    CHECK(frobenius_square(parse_poly("x^2+1"), f) == parse_poly("x^2+x+1"));
    CHECK(frobenius_square(parse_poly("x^2+1"), f) ==
          GF2Poly::from_bits(build_table(f, TableKind::multiply).at(0b101, 0b101)));
    CHECK(frobenius_square(kZero, f) == kZero);
    CHECK(frobenius_square(kX, f) == parse_poly("x^2"));
    // x and x^2 agree as functions on GF(2) points even though they differ in GF(2^3).
    for (int b : {0, 1}) CHECK(poly_eval_gf2(parse_poly("x^2"), b) == poly_eval_gf2(kX, b));
}

TEST_CASE("complex_roots_quadratic on x^2+x+1") {
    auto [r1, r2] = complex_roots_quadratic(parse_poly("x^2+x+1"));
    const std::complex<double> want1(-0.5, std::sqrt(3.0) / 2.0);
    const std::complex<double> want2(-0.5, -std::sqrt(3.0) / 2.0);
    CHECK(std::abs(r1 - want1) < 1e-12);
    CHECK(std::abs(r2 - want2) < 1e-12);
    CHECK(std::abs(std::abs(r1) - 1.0) < 1e-12);
    CHECK(std::abs(std::abs(r2) - 1.0) < 1e-12);
    // Primitive cube roots of unity.
    CHECK(std::abs(r1 * r1 * r1 - 1.0) < 1e-12);
    CHECK(std::abs(r2 * r2 * r2 - 1.0) < 1e-12);
    CHECK_THROWS_AS(complex_roots_quadratic(parse_poly("x^3+x")), std::domain_error);
}

TEST_CASE("polynomial text round trip") {
    for (std::uint64_t v = 0; v < 64; ++v) {
        GF2Poly p = GF2Poly::from_bits(v);
        CHECK(parse_poly(to_string(p)) == p);
    }
    CHECK(to_string(parse_poly("x^2 + x + 1")) == "x^2+x+1");
    CHECK(label(parse_poly("x^2+x"), 3) == "110");
    CHECK(label(kZero, 3) == "000");
    CHECK_THROWS_AS(parse_poly("x^"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("y+1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("x+"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly(""), std::invalid_argument);
}

TEST_CASE("factorization JSON") {
    nlohmann::json j = factorization_to_json(parse_poly("x^2+x"));
    CHECK(j["input"] == "x^2+x");
    CHECK(j["factors"] == nlohmann::json({"x", "x+1"}));
    CHECK(j["irreducible"] == false);
    CHECK(factorization_to_json(parse_poly("x^3+x+1"))["irreducible"] == true);
}

TEST_CASE("table text exports carry 3-bit headers") {
    ExtField f(kMod);
    OpTable mul = build_table(f, TableKind::multiply);
    std::string csv = table_to_csv(mul);
    CHECK(csv.rfind("mul,000,001,010,011,100,101,110,111\n", 0) == 0);
    CHECK(table_to_text(mul).find("(AND)") != std::string::npos);
    CHECK(table_to_text(build_table(f, TableKind::add)).find("(XOR)") != std::string::npos);
}
