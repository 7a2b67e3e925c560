#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "powerpath/graph.hpp"

namespace powerpath::detail {

// Canonical labeling kernel for order <= 64 (one 64-bit word per row).
struct CanonResult {
    std::vector<Vertex> vertex_at;
    // rows[i] has bit j set iff canonical positions i and j are adjacent.
    std::vector<std::uint64_t> rows;
    std::vector<std::vector<Vertex>> automorphisms;
};

CanonResult canonicalize(std::span<const std::uint64_t> rows, std::size_t n);

}  // namespace powerpath::detail
