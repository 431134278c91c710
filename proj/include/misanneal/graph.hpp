#ifndef MISANNEAL_GRAPH_HPP
#define MISANNEAL_GRAPH_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace misanneal {

inline constexpr int kMaxVertices = 64;

// Simple undirected graph on at most 64 vertices.  Vertex subsets are 64-bit
// masks throughout, and per-vertex neighborhoods are kept as masks so that
// independence tests are single AND instructions.  Edges are stored
// canonically: u < v, sorted lexicographically.
class Graph {
public:
    Graph() = default;

    // Vertices 0..n-1, no edges.
    explicit Graph(int n);

    // Validates: endpoints in range, no self-loops, no duplicates.
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int num_vertices() const noexcept { return n_; }
    int num_edges() const noexcept { return static_cast<int>(edges_.size()); }

    // Canonical edge list (u < v, lexicographically sorted).
    const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }

    // Neighbor mask of v.
    std::uint64_t adjacency(int v) const { return adj_[static_cast<std::size_t>(v)]; }

    bool has_edge(int u, int v) const {
        return (adj_[static_cast<std::size_t>(u)] >> v) & 1ULL;
    }

    // True if no edge has both endpoints in `mask`.
    bool is_independent(std::uint64_t mask) const;

    // Average degree 2m/n.
    double mean_degree() const { return n_ ? 2.0 * num_edges() / n_ : 0.0; }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::uint64_t> adj_;
};

// G(n,p): every one of the C(n,2) vertex pairs is included independently with
// probability p.  Pairs are visited in lexicographic order (0,1), (0,2), ...,
// (n-2,n-1) and one uniform01 draw is spent per pair (edge iff draw < p), so
// a given (n, p, seed) always produces the same graph.
Graph gen_gnp(int n, double p, std::uint64_t seed);

// G(n,m): a uniform random m-subset of the C(n,2) pairs, drawn by a partial
// Fisher-Yates shuffle of the lexicographic pair indices (one below(k) draw
// per selected edge).  Deterministic per seed.
Graph gen_gnm(int n, int m, std::uint64_t seed);

// Center vertex 0; for each leg i in 1..n_legs the path 0 - (2i-1) - (2i).
// 2*n_legs+1 vertices, 2*n_legs edges, 2^n_legs maximal independent sets of
// which exactly one (center plus all leg tips) is the maximum.
Graph spider(int n_legs);

Graph edgeless(int n);

// Exact maximum independent set data.
struct MisResult {
    int alpha = 0;                 // size of a maximum independent set
    std::uint64_t witness = 0;     // one independent set attaining alpha
    std::uint64_t count_max = 0;   // number of independent sets of size alpha
};

// Branch-and-bound over candidate masks; exact for every valid graph.
MisResult exact_mis(const Graph& g);

// Text format: first line "n m", then m lines "u v" with 0-based ids and
// u < v, sorted lexicographically on write.  ASCII, newline-terminated.
Graph read_graph(std::string_view text);
std::string write_graph(const Graph& g);

Graph load_graph_file(const std::string& path);
void save_graph_file(const Graph& g, const std::string& path);

}  // namespace misanneal

#endif
