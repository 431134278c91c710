#include "misanneal/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

#include "misanneal/errors.hpp"
#include "misanneal/prng.hpp"

namespace misanneal {

namespace {

int check_vertex_count(int n) {
    if (n < 1 || n > kMaxVertices)
        throw ParseError("vertex count must be in [1, 64], got " + std::to_string(n));
    return n;
}

int pair_count(int n) { return n * (n - 1) / 2; }

// Inverse of the lexicographic pair enumeration (0,1),(0,2),...,(n-2,n-1).
std::pair<int, int> pair_from_index(int idx, int n) {
    int a = 0;
    int off = idx;
    while (off >= n - 1 - a) {
        off -= n - 1 - a;
        ++a;
    }
    return {a, a + 1 + off};
}

}  // namespace

Graph::Graph(int n)
    : n_(check_vertex_count(n)), adj_(static_cast<std::size_t>(n), 0) {}

Graph::Graph(int n, std::vector<std::pair<int, int>> edges)
    : n_(check_vertex_count(n)) {
    adj_.assign(static_cast<std::size_t>(n), 0);
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n)
            throw ParseError("edge endpoint out of range: (" + std::to_string(u) + ", " +
                             std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u));
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw ParseError("duplicate edge");
    for (const auto& [u, v] : edges) {
        adj_[static_cast<std::size_t>(u)] |= 1ULL << v;
        adj_[static_cast<std::size_t>(v)] |= 1ULL << u;
    }
    edges_ = std::move(edges);
}

bool Graph::is_independent(std::uint64_t mask) const {
    std::uint64_t rest = mask;
    while (rest) {
        const int v = std::countr_zero(rest);
        rest &= rest - 1;
        if (adj_[static_cast<std::size_t>(v)] & mask) return false;
    }
    return true;
}

Graph gen_gnp(int n, double p, std::uint64_t seed) {
    check_vertex_count(n);
    if (!(p >= 0.0 && p <= 1.0))
        throw ParseError("edge probability must be in [0, 1]");
    Xoshiro256StarStar rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.uniform01() < p) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph gen_gnm(int n, int m, std::uint64_t seed) {
    check_vertex_count(n);
    const int total = pair_count(n);
    if (m < 0 || m > total)
        throw ParseError("edge count " + std::to_string(m) + " outside [0, " +
                         std::to_string(total) + "] for n=" + std::to_string(n));
    Xoshiro256StarStar rng(seed);
    std::vector<int> pool(static_cast<std::size_t>(total));
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        const auto j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(total - i)));
        std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
        edges.push_back(pair_from_index(pool[static_cast<std::size_t>(i)], n));
    }
    return Graph(n, std::move(edges));
}

Graph spider(int n_legs) {
    if (n_legs < 1) throw ParseError("spider needs at least one leg");
    if (2 * n_legs + 1 > kMaxVertices)
        throw ParseError("spider with " + std::to_string(n_legs) + " legs exceeds 64 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n_legs; ++i) {
        edges.emplace_back(0, 2 * i - 1);
        edges.emplace_back(2 * i - 1, 2 * i);
    }
    return Graph(2 * n_legs + 1, std::move(edges));
}

Graph edgeless(int n) { return Graph(n); }

namespace {

// Max independent set on the candidate mask; branches on a highest-degree
// candidate vertex.  Trivial popcount bound.
void mis_search(const Graph& g, std::uint64_t candidates, int current, int& best,
                std::uint64_t chosen, std::uint64_t& witness) {
    if (current + std::popcount(candidates) <= best) return;
    if (!candidates) {
        if (current > best) {
            best = current;
            witness = chosen;
        }
        return;
    }
    int pick = -1, pick_deg = -1;
    std::uint64_t rest = candidates;
    while (rest) {
        const int v = std::countr_zero(rest);
        rest &= rest - 1;
        const int deg = std::popcount(g.adjacency(v) & candidates);
        if (deg > pick_deg) {
            pick_deg = deg;
            pick = v;
        }
    }
    const std::uint64_t bit = 1ULL << pick;
    mis_search(g, candidates & ~(bit | g.adjacency(pick)), current + 1, best, chosen | bit,
               witness);
    mis_search(g, candidates & ~bit, current, best, chosen, witness);
}

// Counts independent sets of size exactly `need` inside the candidate mask.
// Branches on the lowest candidate vertex: include it or not.
std::uint64_t count_of_size(const Graph& g, std::uint64_t candidates, int need) {
    if (need == 0) return 1;
    if (std::popcount(candidates) < need) return 0;
    const int v = std::countr_zero(candidates);
    const std::uint64_t bit = 1ULL << v;
    return count_of_size(g, candidates & ~bit & ~g.adjacency(v), need - 1) +
           count_of_size(g, candidates & ~bit, need);
}

}  // namespace

MisResult exact_mis(const Graph& g) {
    const int n = g.num_vertices();
    const std::uint64_t all = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
    MisResult res;
    res.alpha = 0;
    res.witness = 0;
    int best = 0;
    std::uint64_t witness = 0;
    mis_search(g, all, 0, best, 0, witness);
    res.alpha = best;
    res.witness = witness;
    res.count_max = count_of_size(g, all, best);
    return res;
}

Graph read_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty graph text");
    std::istringstream header(line);
    int n = 0, m = 0;
    if (!(header >> n >> m)) throw ParseError("malformed header, expected \"n m\"");
    std::string extra;
    if (header >> extra) throw ParseError("trailing tokens in header");
    if (m < 0) throw ParseError("negative edge count");
    check_vertex_count(n);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        if (!std::getline(in, line))
            throw ParseError("expected " + std::to_string(m) + " edge lines, got " +
                             std::to_string(i));
        std::istringstream es(line);
        int u = 0, v = 0;
        if (!(es >> u >> v)) throw ParseError("malformed edge line: \"" + line + "\"");
        if (es >> extra) throw ParseError("trailing tokens in edge line: \"" + line + "\"");
        edges.emplace_back(u, v);
    }
    while (std::getline(in, line))
        if (!line.empty()) throw ParseError("trailing content after edge list");
    return Graph(n, std::move(edges));  // range/self-loop/duplicate checks live here
}

std::string write_graph(const Graph& g) {
    std::string out = std::to_string(g.num_vertices()) + " " + std::to_string(g.num_edges()) + "\n";
    for (const auto& [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("io", "cannot open graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return read_graph(buf.str());
}

void save_graph_file(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("io", "cannot write graph file: " + path);
    out << write_graph(g);
}

}  // namespace misanneal
