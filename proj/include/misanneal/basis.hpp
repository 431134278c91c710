#ifndef MISANNEAL_BASIS_HPP
#define MISANNEAL_BASIS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "misanneal/graph.hpp"

namespace misanneal {

inline constexpr std::size_t kDefaultBasisCap = 5'000'000;

// Pair of basis indices whose masks differ by exactly one vertex;
// sizes[hi] == sizes[lo] + 1.
struct Hop {
    std::int32_t lo;
    std::int32_t hi;
};

// All independent sets of a graph, sorted ascending by mask value, with the
// one-vertex hop links between them.  Index 0 is always the empty set.
// Immutable once built; safe to share across threads.
class IsBasis {
public:
    IsBasis() = default;
    IsBasis(int num_vertices, std::vector<std::uint64_t> states, std::vector<Hop> hops);

    int num_vertices() const noexcept { return n_; }
    std::size_t dimension() const noexcept { return states_.size(); }

    const std::vector<std::uint64_t>& states() const noexcept { return states_; }
    const std::vector<std::int32_t>& sizes() const noexcept { return sizes_; }
    const std::vector<Hop>& hops() const noexcept { return hops_; }

    std::uint64_t state(std::size_t j) const { return states_[j]; }
    std::int32_t size_of(std::size_t j) const { return sizes_[j]; }

    // Index of a mask, or -1 if it is not an independent set of the graph.
    std::int64_t index_of(std::uint64_t mask) const;

    // Largest set size present (= independence number of the graph).
    std::int32_t max_size() const noexcept { return max_size_; }

    // Indices j with sizes[j] == max_size(), ascending.
    std::vector<std::size_t> mis_indices() const;

private:
    int n_ = 0;
    std::vector<std::uint64_t> states_;
    std::vector<std::int32_t> sizes_;
    std::vector<Hop> hops_;
    std::int32_t max_size_ = 0;
};

// Enumerates every independent set of g by depth-first extension over vertices
// in ascending order with adjacency-mask pruning, then sorts by mask value and
// links all Hamming-distance-1 pairs.  Throws CapExceededError if the count
// exceeds `cap`.
IsBasis build_basis(const Graph& g, std::size_t cap = kDefaultBasisCap);

}  // namespace misanneal

#endif
