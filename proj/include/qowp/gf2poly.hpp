#pragma once

// Exact arithmetic for polynomials over GF(2) and for the extension fields
// GF(2^n) defined by an irreducible modulus. Coefficients live in a single
// machine word, bit i = coefficient of x^i, so ring addition is one XOR.
// Everything here is a pure function over immutable values.

#include <algorithm>
#include <cctype>
#include <complex>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qowp/core.hpp"

namespace qowp::gf2 {

class GF2Poly {
  public:
    constexpr GF2Poly() = default;
    static constexpr GF2Poly from_bits(std::uint64_t bits) { return GF2Poly(bits); }

    constexpr std::uint64_t bits() const noexcept { return bits_; }
    constexpr bool is_zero() const noexcept { return bits_ == 0; }
    constexpr bool is_one() const noexcept { return bits_ == 1; }

    /// Degree of the polynomial; -1 for the zero polynomial.
    constexpr int degree() const noexcept {
        return bits_ == 0 ? -1 : 63 - std::countl_zero(bits_);
    }

    constexpr bool coeff(int i) const noexcept { return (bits_ >> i) & 1u; }

    friend constexpr bool operator==(GF2Poly a, GF2Poly b) noexcept { return a.bits_ == b.bits_; }
    friend constexpr bool operator<(GF2Poly a, GF2Poly b) noexcept { return a.bits_ < b.bits_; }

  private:
    constexpr explicit GF2Poly(std::uint64_t bits) : bits_(bits) {}
    std::uint64_t bits_ = 0;
};

inline constexpr GF2Poly kZero = GF2Poly::from_bits(0);
inline constexpr GF2Poly kOne = GF2Poly::from_bits(1);
inline constexpr GF2Poly kX = GF2Poly::from_bits(2);

/// Coefficient-wise XOR. Characteristic 2: p + p = 0.
inline constexpr GF2Poly poly_add(GF2Poly p, GF2Poly q) noexcept {
    return GF2Poly::from_bits(p.bits() ^ q.bits());
}
inline constexpr GF2Poly operator+(GF2Poly p, GF2Poly q) noexcept { return poly_add(p, q); }

/// Carry-less schoolbook product in GF(2)[x].
inline GF2Poly poly_mul(GF2Poly p, GF2Poly q) {
    if (p.is_zero() || q.is_zero()) return kZero;
    if (p.degree() + q.degree() > 63)
        throw std::domain_error("gf2: product degree exceeds the 63-bit coefficient word");
    std::uint64_t acc = 0;
    std::uint64_t a = p.bits();
    std::uint64_t b = q.bits();
    for (int i = 0; b != 0; ++i, b >>= 1)
        if (b & 1u) acc ^= a << i;
    return GF2Poly::from_bits(acc);
}
inline GF2Poly operator*(GF2Poly p, GF2Poly q) { return poly_mul(p, q); }

/// Quotient and remainder of p by nonzero d.
inline std::pair<GF2Poly, GF2Poly> poly_divmod(GF2Poly p, GF2Poly d) {
    if (d.is_zero()) throw std::domain_error("gf2: division by the zero polynomial");
    std::uint64_t rem = p.bits();
    std::uint64_t quo = 0;
    const int dd = d.degree();
    int rd = p.degree();
    while (rd >= dd) {
        const int shift = rd - dd;
        quo |= std::uint64_t{1} << shift;
        rem ^= d.bits() << shift;
        rd = GF2Poly::from_bits(rem).degree();
    }
    return {GF2Poly::from_bits(quo), GF2Poly::from_bits(rem)};
}
inline GF2Poly operator%(GF2Poly p, GF2Poly d) { return poly_divmod(p, d).second; }

/// Evaluation over GF(2) itself: substitute a bit, reduce mod 2.
/// p(0) is the constant term, p(1) the coefficient parity.
inline int poly_eval_gf2(GF2Poly p, int x) {
    if (x != 0 && x != 1) throw std::domain_error("gf2: evaluation point must be a bit");
    return x == 0 ? static_cast<int>(p.coeff(0)) : parity64(p.bits());
}

/// Trial division by every polynomial of degree 1..deg(p)/2. Inputs in scope
/// have degree <= 3, so nothing smarter is warranted.
inline bool is_irreducible(GF2Poly p) {
    const int n = p.degree();
    if (n < 1) throw std::domain_error("gf2: irreducibility is defined for degree >= 1");
    for (int d = 1; d <= n / 2; ++d) {
        const std::uint64_t lo = std::uint64_t{1} << d;
        for (std::uint64_t u = lo; u < (lo << 1); ++u)
            if (poly_divmod(p, GF2Poly::from_bits(u)).second.is_zero()) return false;
    }
    return true;
}

/// Irreducible factors of p, sorted, with multiplicity. The unit polynomial
/// factors as the empty product.
inline std::vector<GF2Poly> factor(GF2Poly p) {
    if (p.is_zero()) throw std::domain_error("gf2: the zero polynomial has no factorization");
    std::vector<GF2Poly> out;
    while (p.degree() >= 1) {
        GF2Poly hit = p;  // p itself when irreducible
        const int n = p.degree();
        for (int d = 1; d <= n / 2 && hit == p; ++d) {
            const std::uint64_t lo = std::uint64_t{1} << d;
            for (std::uint64_t u = lo; u < (lo << 1); ++u) {
                GF2Poly cand = GF2Poly::from_bits(u);
                if (poly_divmod(p, cand).second.is_zero()) {
                    hit = cand;  // smallest degree divisor is irreducible
                    break;
                }
            }
        }
        out.push_back(hit);
        p = poly_divmod(p, hit).first;
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// GF(2^n) presented as GF(2)[x] modulo an irreducible polynomial.
class ExtField {
  public:
    explicit ExtField(GF2Poly modulus) : modulus_(modulus) {
        if (modulus.degree() < 1 || !is_irreducible(modulus))
            throw std::domain_error("gf2: field modulus must be irreducible of degree >= 1");
    }

    GF2Poly modulus() const noexcept { return modulus_; }
    int extension_degree() const noexcept { return modulus_.degree(); }
    std::uint64_t order() const noexcept { return std::uint64_t{1} << modulus_.degree(); }

    bool contains(GF2Poly p) const noexcept { return p.degree() < extension_degree(); }

    GF2Poly element(std::uint64_t value) const {
        GF2Poly p = GF2Poly::from_bits(value);
        if (!contains(p)) throw std::domain_error("gf2: value is not a field element");
        return p;
    }

  private:
    GF2Poly modulus_;
};

/// Field product: polynomial product reduced by the modulus.
inline GF2Poly field_mul(GF2Poly p, GF2Poly q, const ExtField& f) {
    if (!f.contains(p) || !f.contains(q))
        throw std::domain_error("gf2: operand degree must be below the extension degree");
    return poly_mul(p, q) % f.modulus();
}

/// Squaring, the Frobenius endomorphism of a characteristic-2 field.
inline GF2Poly frobenius_square(GF2Poly p, const ExtField& f) { return field_mul(p, p, f); }

enum class TableKind { multiply, add };

/// Full Cayley table of a field operation, rows/columns indexed by element value.
struct OpTable {
    TableKind kind;
    int extension_degree;
    std::vector<std::uint8_t> entries;  // order x order, row-major

    std::uint64_t order() const noexcept { return std::uint64_t{1} << extension_degree; }
    std::uint8_t at(std::uint64_t row, std::uint64_t col) const {
        return entries[row * order() + col];
    }
};

inline OpTable build_table(const ExtField& f, TableKind kind,
                           std::uint64_t max_entries = Caps{}.table_max_entries) {
    const std::uint64_t n = f.order();
    if (n * n > max_entries)
        throw resource_error("gf2: Cayley table would exceed the enumeration cap");
    OpTable t{kind, f.extension_degree(), {}};
    t.entries.resize(n * n);
    for (std::uint64_t r = 0; r < n; ++r)
        for (std::uint64_t c = 0; c < n; ++c) {
            GF2Poly v = kind == TableKind::multiply
                            ? field_mul(GF2Poly::from_bits(r), GF2Poly::from_bits(c), f)
                            : poly_add(GF2Poly::from_bits(r), GF2Poly::from_bits(c));
            t.entries[r * n + c] = static_cast<std::uint8_t>(v.bits());
        }
    return t;
}

/// Both complex roots of a quadratic whose 0/1 coefficients are read as reals.
inline std::pair<std::complex<double>, std::complex<double>> complex_roots_quadratic(GF2Poly p) {
    if (p.degree() != 2) throw std::domain_error("gf2: quadratic formula needs degree exactly 2");
    const double a = 1.0;  // degree-2 leading coefficient is the set bit
    const double b = p.coeff(1) ? 1.0 : 0.0;
    const double c = p.coeff(0) ? 1.0 : 0.0;
    const std::complex<double> disc(b * b - 4.0 * a * c, 0.0);
    const std::complex<double> root = std::sqrt(disc);
    return {(-b + root) / (2.0 * a), (-b - root) / (2.0 * a)};
}

// ---- text formats ----

/// Canonical text form, descending powers: "x^2+x+1", "x", "1", "0".
inline std::string to_string(GF2Poly p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        if (!p.coeff(i)) continue;
        if (!out.empty()) out += '+';
        if (i == 0)
            out += '1';
        else if (i == 1)
            out += 'x';
        else
            out += "x^" + std::to_string(i);
    }
    return out;
}

/// Bit-string label, most significant coefficient first: x^2+x over GF(2^3) is "110".
inline std::string label(GF2Poly p, int width) {
    std::string s(static_cast<std::size_t>(width), '0');
    for (int i = 0; i < width; ++i)
        if (p.coeff(i)) s[static_cast<std::size_t>(width - 1 - i)] = '1';
    return s;
}

/// Parses "x^2+x+1" style text (caret powers, '+' separators, optional spaces).
inline GF2Poly parse_poly(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("gf2: empty polynomial text");
    std::uint64_t bits = 0;
    std::size_t i = 0;
    while (i < s.size()) {
        std::size_t j = s.find('+', i);
        if (j == std::string::npos) j = s.size();
        const std::string term = s.substr(i, j - i);
        if (term == "0") {
            // contributes nothing
        } else if (term == "1") {
            bits ^= 1u;
        } else if (term == "x") {
            bits ^= 2u;
        } else if (term.size() > 2 && term[0] == 'x' && term[1] == '^') {
            std::size_t pos = 0;
            const int e = std::stoi(term.substr(2), &pos);
            if (pos != term.size() - 2 || e < 0 || e > 63)
                throw std::invalid_argument("gf2: bad exponent in term '" + term + "'");
            bits ^= std::uint64_t{1} << e;
        } else {
            throw std::invalid_argument("gf2: bad polynomial term '" + term + "'");
        }
        i = j + 1;
        if (i == s.size() && j != s.size())
            throw std::invalid_argument("gf2: trailing '+' in polynomial text");
    }
    return GF2Poly::from_bits(bits);
}

inline std::string table_to_csv(const OpTable& t) {
    const std::uint64_t n = t.order();
    std::ostringstream os;
    os << (t.kind == TableKind::multiply ? "mul" : "add");
    for (std::uint64_t c = 0; c < n; ++c)
        os << ',' << label(GF2Poly::from_bits(c), t.extension_degree);
    os << '\n';
    for (std::uint64_t r = 0; r < n; ++r) {
        os << label(GF2Poly::from_bits(r), t.extension_degree);
        for (std::uint64_t c = 0; c < n; ++c)
            os << ',' << label(GF2Poly::from_bits(t.at(r, c)), t.extension_degree);
        os << '\n';
    }
    return os.str();
}

inline nlohmann::json factorization_to_json(GF2Poly p) {
    const std::vector<GF2Poly> parts = factor(p);
    nlohmann::json factors = nlohmann::json::array();
    for (GF2Poly q : parts) factors.push_back(to_string(q));
    return {{"input", to_string(p)},
            {"factors", factors},
            {"irreducible", parts.size() == 1 && parts[0] == p}};
}

/// Aligned plain-text rendering with 3-bit style row/column headers.
inline std::string table_to_text(const OpTable& t) {
    const std::uint64_t n = t.order();
    std::size_t w = 0;
    for (std::uint64_t v = 0; v < n; ++v)
        w = std::max(w, to_string(GF2Poly::from_bits(v)).size());
    w = std::max(w, static_cast<std::size_t>(t.extension_degree));
    auto pad = [w](const std::string& s) {
        return s + std::string(w - std::min(w, s.size()) + 2, ' ');
    };
    std::ostringstream os;
    os << pad(t.kind == TableKind::multiply ? "(AND)" : "(XOR)");
    for (std::uint64_t c = 0; c < n; ++c)
        os << pad(label(GF2Poly::from_bits(c), t.extension_degree));
    os << '\n';
    for (std::uint64_t r = 0; r < n; ++r) {
        os << pad(label(GF2Poly::from_bits(r), t.extension_degree));
        for (std::uint64_t c = 0; c < n; ++c)
            os << pad(to_string(GF2Poly::from_bits(t.at(r, c))));
        os << '\n';
    }
    return os.str();
}

}  // namespace qowp::gf2
