#include "misanneal/basis.hpp"

#include <algorithm>
#include <bit>

#include "misanneal/errors.hpp"

namespace misanneal {

IsBasis::IsBasis(int num_vertices, std::vector<std::uint64_t> states, std::vector<Hop> hops)
    : n_(num_vertices), states_(std::move(states)), hops_(std::move(hops)) {
    sizes_.reserve(states_.size());
    for (const auto mask : states_) {
        sizes_.push_back(static_cast<std::int32_t>(std::popcount(mask)));
        max_size_ = std::max(max_size_, sizes_.back());
    }
}

std::int64_t IsBasis::index_of(std::uint64_t mask) const {
    const auto it = std::lower_bound(states_.begin(), states_.end(), mask);
    if (it == states_.end() || *it != mask) return -1;
    return it - states_.begin();
}

std::vector<std::size_t> IsBasis::mis_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < states_.size(); ++j)
        if (sizes_[j] == max_size_) out.push_back(j);
    return out;
}

namespace {

// Depth-first: extend `mask` by any vertex v > all chosen so far whose
// neighborhood avoids `mask`.
void enumerate(const Graph& g, std::uint64_t mask, int min_vertex,
               std::vector<std::uint64_t>& out, std::size_t cap) {
    out.push_back(mask);
    if (out.size() > cap)
        throw CapExceededError("independent-set count exceeds cap", out.size());
    for (int v = min_vertex; v < g.num_vertices(); ++v) {
        if (g.adjacency(v) & mask) continue;
        enumerate(g, mask | (1ULL << v), v + 1, out, cap);
    }
}

}  // namespace

IsBasis build_basis(const Graph& g, std::size_t cap) {
    std::vector<std::uint64_t> states;
    enumerate(g, 0, 0, states, cap);
    std::sort(states.begin(), states.end());

    std::vector<Hop> hops;
    for (std::size_t hi = 0; hi < states.size(); ++hi) {
        std::uint64_t rest = states[hi];
        while (rest) {
            const int v = std::countr_zero(rest);
            rest &= rest - 1;
            const std::uint64_t parent = states[hi] & ~(1ULL << v);
            // Parent is independent by heredity, so the lookup always hits.
            const auto it = std::lower_bound(states.begin(), states.end(), parent);
            hops.push_back({static_cast<std::int32_t>(it - states.begin()),
                            static_cast<std::int32_t>(hi)});
        }
    }
    return IsBasis(g.num_vertices(), std::move(states), std::move(hops));
}

}  // namespace misanneal
