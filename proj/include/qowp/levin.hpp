#pragma once

// The universal permutation g(a, x) = (a, f(x) XOR a) on equal-length bit
// registers, with f drawn from the length-preserving maps {identity,
// bitwise_not} (or a validated custom map). Its truth table, the derived
// permutation matrix, block-diagonal assembly, preimage (sibling) statistics
// and the inner-product hard-core bit all live here.
//
// A second product mode composes the target register as f(x) XOR (a * x)
// with the GF(2^n) field product. That map is not injective for every key
// (the all-ones key collapses f(x) XOR x), which is exactly what the sibling
// statistics are for; the XOR mode is the permutation the matrix work uses.

#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qowp/core.hpp"
#include "qowp/gf2poly.hpp"

namespace qowp::levin {

struct BitString {
    std::uint64_t bits = 0;
    int width = 1;

    BitString(std::uint64_t b, int w) : bits(b), width(w) {
        if (w < 1 || w > 32) throw std::domain_error("levin: width must be in 1..32");
        if (b >> w) throw std::domain_error("levin: value does not fit the declared width");
    }

    static BitString parse(const std::string& s) {
        if (s.empty()) throw std::domain_error("levin: empty bit string");
        std::uint64_t b = 0;
        for (char c : s) {
            if (c != '0' && c != '1') throw std::domain_error("levin: bit strings are over {0,1}");
            b = (b << 1) | static_cast<std::uint64_t>(c - '0');
        }
        return BitString(b, static_cast<int>(s.size()));
    }

    std::uint64_t mask() const noexcept { return (std::uint64_t{1} << width) - 1; }

    std::string to_string() const {
        std::string s(static_cast<std::size_t>(width), '0');
        for (int i = 0; i < width; ++i)
            if ((bits >> i) & 1u) s[static_cast<std::size_t>(width - 1 - i)] = '1';
        return s;
    }

    friend bool operator==(const BitString& a, const BitString& b) noexcept {
        return a.width == b.width && a.bits == b.bits;
    }
};

/// A length-preserving map on bit strings. The two built-ins cover every
/// length-preserving one-way candidate the construction reduces to; custom
/// maps are accepted after an exhaustive range check up to a width cap.
class LengthPreservingF {
  public:
    using Fn = std::function<std::uint64_t(std::uint64_t, int)>;

    static LengthPreservingF identity() { return LengthPreservingF(Kind::identity); }
    static LengthPreservingF bitwise_not() { return LengthPreservingF(Kind::bitwise_not); }

    static LengthPreservingF custom(Fn fn, int max_checked_width = 10) {
        for (int w = 1; w <= max_checked_width; ++w) {
            const std::uint64_t span = std::uint64_t{1} << w;
            for (std::uint64_t v = 0; v < span; ++v)
                if (fn(v, w) >= span)
                    throw std::domain_error("levin: custom map is not length preserving");
        }
        LengthPreservingF f(Kind::custom);
        f.fn_ = std::move(fn);
        return f;
    }

    std::uint64_t apply_bits(std::uint64_t x, int width) const {
        const std::uint64_t m = (std::uint64_t{1} << width) - 1;
        switch (kind_) {
            case Kind::identity: return x;
            case Kind::bitwise_not: return ~x & m;
            case Kind::custom: return fn_(x, width);
        }
        return x;
    }

    BitString apply(const BitString& x) const { return {apply_bits(x.bits, x.width), x.width}; }

    std::string name() const {
        switch (kind_) {
            case Kind::identity: return "identity";
            case Kind::bitwise_not: return "bitwise_not";
            case Kind::custom: return "custom";
        }
        return "?";
    }

  private:
    enum class Kind { identity, bitwise_not, custom };
    explicit LengthPreservingF(Kind k) : kind_(k) {}
    Kind kind_;
    Fn fn_;
};

enum class ProductMode {
    xor_key,        // x' = f(x) XOR a; the permutation the matrices are built from
    field_product,  // x' = f(x) XOR (a * x) in GF(2^n); not injective for every key
};

/// One application of g. Both outputs keep the input width; the first output
/// coordinate is always the key register a.
inline std::pair<BitString, BitString> apply_g(const BitString& a, const BitString& x,
                                               const LengthPreservingF& f,
                                               ProductMode mode = ProductMode::xor_key,
                                               const gf2::ExtField* field = nullptr) {
    if (a.width != x.width) throw std::domain_error("levin: key and input widths differ");
    const std::uint64_t fx = f.apply_bits(x.bits, x.width);
    std::uint64_t xp = 0;
    if (mode == ProductMode::xor_key) {
        xp = fx ^ a.bits;
    } else {
        if (field == nullptr || field->extension_degree() != x.width)
            throw std::domain_error("levin: field mode needs a field of matching degree");
        xp = fx ^ gf2::field_mul(gf2::GF2Poly::from_bits(a.bits),
                                 gf2::GF2Poly::from_bits(x.bits), *field)
                      .bits();
    }
    return {a, BitString(xp, x.width)};
}

/// Rows of a 2-ary map on (a, x); row index is (a << width) | x.
struct TruthTable {
    int width = 1;
    std::vector<std::uint32_t> out;  // output index (a' << width) | x'

    std::uint64_t rows() const noexcept { return out.size(); }

    std::uint32_t at(std::uint64_t a, std::uint64_t x) const {
        return out[(a << width) | x];
    }

    bool is_bijection() const {
        std::vector<bool> seen(out.size(), false);
        for (std::uint32_t o : out) {
            if (o >= out.size() || seen[o]) return false;
            seen[o] = true;
        }
        return true;
    }

    static TruthTable from_map(int width,
                               const std::function<std::uint64_t(std::uint64_t, std::uint64_t)>& m) {
        TruthTable t;
        t.width = width;
        const std::uint64_t span = std::uint64_t{1} << width;
        t.out.resize(span * span);
        for (std::uint64_t a = 0; a < span; ++a)
            for (std::uint64_t x = 0; x < span; ++x)
                t.out[(a << width) | x] = static_cast<std::uint32_t>(m(a, x));
        return t;
    }
};

/// Enumerates all 2^(2n) rows of g and verifies bijectivity.
inline TruthTable truth_table(const LengthPreservingF& f, int width,
                              ProductMode mode = ProductMode::xor_key,
                              const gf2::ExtField* field = nullptr,
                              int max_width = Caps{}.truth_table_max_width) {
    if (width > max_width) throw resource_error("levin: table width exceeds the enumeration cap");
    TruthTable t = TruthTable::from_map(width, [&](std::uint64_t a, std::uint64_t x) {
        auto [ao, xo] = apply_g(BitString(a, width), BitString(x, width), f, mode, field);
        return (ao.bits << width) | xo.bits;
    });
    if (mode == ProductMode::xor_key && !t.is_bijection())
        throw std::logic_error("levin: g must be a bijection in xor_key mode");
    return t;
}

/// Square 0/1 matrix with integer-exact algebra; small dimensions only.
struct BinaryMatrix {
    std::size_t dim = 0;
    std::vector<std::uint8_t> e;  // row-major

    static BinaryMatrix zero(std::size_t d) { return {d, std::vector<std::uint8_t>(d * d, 0)}; }
    static BinaryMatrix identity(std::size_t d) {
        BinaryMatrix m = zero(d);
        for (std::size_t i = 0; i < d; ++i) m.at(i, i) = 1;
        return m;
    }

    std::uint8_t& at(std::size_t r, std::size_t c) { return e[r * dim + c]; }
    std::uint8_t at(std::size_t r, std::size_t c) const { return e[r * dim + c]; }

    friend bool operator==(const BinaryMatrix& a, const BinaryMatrix& b) {
        return a.dim == b.dim && a.e == b.e;
    }

    BinaryMatrix transpose() const {
        BinaryMatrix t = zero(dim);
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c < dim; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    /// Integer matrix product; inputs here are permutation matrices, so
    /// entries stay 0/1.
    friend BinaryMatrix operator*(const BinaryMatrix& a, const BinaryMatrix& b) {
        if (a.dim != b.dim) throw std::domain_error("levin: dimension mismatch");
        BinaryMatrix p = zero(a.dim);
        for (std::size_t r = 0; r < a.dim; ++r)
            for (std::size_t k = 0; k < a.dim; ++k) {
                if (!a.at(r, k)) continue;
                for (std::size_t c = 0; c < a.dim; ++c)
                    p.at(r, c) = static_cast<std::uint8_t>(p.at(r, c) + a.at(r, k) * b.at(k, c));
            }
        return p;
    }

    bool is_permutation() const {
        for (std::size_t r = 0; r < dim; ++r) {
            int rs = 0, cs = 0;
            for (std::size_t c = 0; c < dim; ++c) {
                rs += at(r, c);
                cs += at(c, r);
            }
            if (rs != 1 || cs != 1) return false;
        }
        return true;
    }

    bool is_orthogonal() const { return *this * transpose() == identity(dim); }
};

inline bool is_involution(const BinaryMatrix& m) {
    if (!m.is_permutation()) throw std::domain_error("levin: involution check wants a permutation");
    return m * m == BinaryMatrix::identity(m.dim);
}

/// M[out, in] = 1 for each table row, basis indexed lexicographically
/// (|00>, |01>, |10>, |11> at width 1).
inline BinaryMatrix permutation_matrix(const TruthTable& t) {
    if (!t.is_bijection()) throw std::domain_error("levin: table is not a bijection");
    BinaryMatrix m = BinaryMatrix::zero(t.rows());
    for (std::size_t in = 0; in < t.rows(); ++in) m.at(t.out[in], in) = 1;
    return m;
}

/// The basis order |00>, |01>, |11>, |10> some presentations use is the 2-bit
/// Gray sequence; returns that ordering of 2^bits basis indices for rendering.
inline std::vector<std::size_t> gray_basis_order(int bits) {
    std::vector<std::size_t> order(std::size_t{1} << bits);
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i ^ (i >> 1);
    return order;
}

/// diag(block(f_even), block(f_odd)) on one-bit registers: the key selects
/// which single-bit map acts on the target wire.
inline BinaryMatrix block_form(const LengthPreservingF& f_even, const LengthPreservingF& f_odd) {
    BinaryMatrix m = BinaryMatrix::zero(4);
    for (std::uint64_t x = 0; x < 2; ++x) {
        m.at(f_even.apply_bits(x, 1), x) = 1;
        m.at(2 + f_odd.apply_bits(x, 1), 2 + x) = 1;
    }
    return m;
}

/// Preimage multiplicity over attained outputs. A bijection has mean = max = 1.
struct SiblingStats {
    std::uint64_t input_count = 0;
    std::uint64_t attained_outputs = 0;
    std::uint64_t max_preimage_count = 0;

    double mean_preimage_count() const {
        return static_cast<double>(input_count) / static_cast<double>(attained_outputs);
    }
};

inline SiblingStats sibling_stats(const TruthTable& t) {
    std::vector<std::uint64_t> count(t.rows(), 0);
    for (std::uint32_t o : t.out) ++count[o];
    SiblingStats s;
    s.input_count = t.rows();
    for (std::uint64_t c : count) {
        if (c == 0) continue;
        ++s.attained_outputs;
        s.max_preimage_count = std::max(s.max_preimage_count, c);
    }
    return s;
}

/// Parity of the bitwise AND of a and x: the inner-product hidden bit.
inline int hardcore_bit(const BitString& a, const BitString& x) {
    if (a.width != x.width) throw std::domain_error("levin: hardcore bit needs equal widths");
    return parity64(a.bits & x.bits);
}

// ---- exports ----

inline std::string table_to_csv(const TruthTable& t) {
    std::ostringstream os;
    os << "a,x,a_out,x_out\n";
    const std::uint64_t span = std::uint64_t{1} << t.width;
    for (std::uint64_t a = 0; a < span; ++a)
        for (std::uint64_t x = 0; x < span; ++x) {
            const std::uint32_t o = t.at(a, x);
            os << BitString(a, t.width).to_string() << ',' << BitString(x, t.width).to_string()
               << ',' << BitString(o >> t.width, t.width).to_string() << ','
               << BitString(o & ((1u << t.width) - 1), t.width).to_string() << '\n';
        }
    return os.str();
}

inline nlohmann::json matrix_to_json(const BinaryMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.dim; ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.dim; ++c) row.push_back(static_cast<int>(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace qowp::levin
