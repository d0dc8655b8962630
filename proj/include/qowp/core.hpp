#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qowp {

/// Thrown when an exhaustive enumeration would exceed its configured cap.
class resource_error : public std::runtime_error {
  public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

/// Enumeration caps shared by the brute-force operations. Values can be
/// overridden from a key=value config file (see tools/).
struct Caps {
    std::uint64_t table_max_entries = 1u << 16;  // Cayley table cells
    int truth_table_max_width = 10;              // bits per register in g's table
    int sat_max_vars = 24;                       // 2^24 assignment budget
};

inline int parity64(std::uint64_t v) noexcept {
    return static_cast<int>(std::popcount(v) & 1u);
}

}  // namespace qowp
