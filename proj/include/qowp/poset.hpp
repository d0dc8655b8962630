#pragma once

// The power set of a 3-element universe as 3-bit masks: polynomial encoding
// (top bit = x^2 generator, bottom bit = 1), the inclusion order's covering
// relation (the 3-cube Hasse diagram), and the complement pairing table.

#include <array>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "qowp/gf2poly.hpp"

namespace qowp::poset {

struct SubsetMask {
    unsigned bits = 0;

    SubsetMask() = default;
    explicit SubsetMask(unsigned b) : bits(b) {
        if (b > 7) throw std::domain_error("poset: mask must be in 0..7");
    }

    SubsetMask complement() const { return SubsetMask(bits ^ 7u); }
    int size() const noexcept { return std::popcount(bits); }
    bool subset_of(SubsetMask other) const noexcept { return (bits & other.bits) == bits; }
    std::string label() const {
        return {static_cast<char>('0' + ((bits >> 2) & 1)), static_cast<char>('0' + ((bits >> 1) & 1)),
                static_cast<char>('0' + (bits & 1))};
    }

    friend bool operator==(SubsetMask a, SubsetMask b) noexcept { return a.bits == b.bits; }
};

/// Generators: first element -> x^2, second -> x, third -> 1; unions XOR.
/// The mask value doubles as the polynomial's coefficient word.
inline gf2::GF2Poly encode_poly(SubsetMask s) { return gf2::GF2Poly::from_bits(s.bits); }

struct HasseDiagram {
    std::vector<SubsetMask> nodes;
    std::vector<std::pair<SubsetMask, SubsetMask>> edges;  // (lower, upper) covers
};

/// All covering pairs of the inclusion order: u < v with |v| = |u| + 1.
inline HasseDiagram hasse_edges() {
    HasseDiagram d;
    for (unsigned v = 0; v < 8; ++v) d.nodes.emplace_back(v);
    for (unsigned lo = 0; lo < 8; ++lo)
        for (unsigned hi = 0; hi < 8; ++hi) {
            SubsetMask l(lo), h(hi);
            if (l.subset_of(h) && h.size() == l.size() + 1) d.edges.emplace_back(l, h);
        }
    return d;
}

struct PairRow {
    SubsetMask alice;
    gf2::GF2Poly alice_poly;
    SubsetMask bob;
    gf2::GF2Poly bob_poly;
};

/// The eight complement pairs, first coordinate descending 111..000.
inline std::array<PairRow, 8> alice_bob_pairs() {
    std::array<PairRow, 8> rows{};
    for (unsigned i = 0; i < 8; ++i) {
        SubsetMask alice(7 - i);
        rows[i] = {alice, encode_poly(alice), alice.complement(), encode_poly(alice.complement())};
    }
    return rows;
}

/// Deterministic DOT text: nodes 000..111 grouped by subset size, edges
/// lower -> upper in node order. Byte-identical across runs.
inline std::string export_dot(const HasseDiagram& d) {
    std::ostringstream os;
    os << "digraph hasse {\n  rankdir=BT;\n  node [shape=circle];\n";
    for (const SubsetMask& n : d.nodes) os << "  n" << n.label() << " [label=\"" << n.label() << "\"];\n";
    for (int size = 0; size <= 3; ++size) {
        os << "  { rank=same;";
        for (const SubsetMask& n : d.nodes)
            if (n.size() == size) os << " n" << n.label() << ';';
        os << " }\n";
    }
    for (const auto& [lo, hi] : d.edges)
        os << "  n" << lo.label() << " -> n" << hi.label() << ";\n";
    os << "}\n";
    return os.str();
}

inline std::string pairs_to_csv() {
    std::ostringstream os;
    os << "alice_bits,alice_poly,bob_bits,bob_poly\n";
    for (const PairRow& r : alice_bob_pairs())
        os << r.alice.label() << ',' << gf2::to_string(r.alice_poly) << ',' << r.bob.label() << ','
           << gf2::to_string(r.bob_poly) << '\n';
    return os.str();
}

}  // namespace qowp::poset
