#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <deque>
#include <istream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "netgrowth/errors.hpp"
#include "netgrowth/rng.hpp"

namespace netgrowth {

// Undirected simple graph over node indices [0, node_count). Immutable after
// construction; edges are normalized (u < v), deduplicated and sorted so two
// graphs with the same edge set compare equal.
class Graph {
public:
    using Edge = std::pair<int, int>;

    Graph(int node_count, std::vector<Edge> edges) : node_count_(node_count) {
        if (node_count_ < 1) {
            throw BadSpec("Graph: need at least one node");
        }
        edges_.reserve(edges.size());
        for (auto [u, v] : edges) {
            if (u == v) {
                throw BadSpec("Graph: self-loops are not allowed");
            }
            if (u < 0 || v < 0 || u >= node_count_ || v >= node_count_) {
                throw BadSpec("Graph: node index out of range");
            }
            if (u > v) {
                std::swap(u, v);
            }
            edges_.emplace_back(u, v);
        }
        std::sort(edges_.begin(), edges_.end());
        const auto dup = std::adjacent_find(edges_.begin(), edges_.end());
        if (dup != edges_.end()) {
            throw BadSpec("Graph: duplicate edge");
        }
        adjacency_.assign(static_cast<std::size_t>(node_count_), {});
        for (auto [u, v] : edges_) {
            adjacency_[static_cast<std::size_t>(u)].push_back(v);
            adjacency_[static_cast<std::size_t>(v)].push_back(u);
        }
        for (auto& neighbors : adjacency_) {
            std::sort(neighbors.begin(), neighbors.end());
        }
    }

    int node_count() const { return node_count_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int u) const {
        return adjacency_[static_cast<std::size_t>(u)];
    }
    int degree(int u) const { return static_cast<int>(neighbors(u).size()); }

    bool has_edge(int u, int v) const {
        const auto& nb = neighbors(u);
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.node_count_ == b.node_count_ && a.edges_ == b.edges_;
    }

private:
    int node_count_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adjacency_;
};

inline constexpr int kUnreachable = -1;

namespace detail {

inline void bfs_row(const Graph& g, int source, std::vector<int>& dist) {
    dist.assign(static_cast<std::size_t>(g.node_count()), kUnreachable);
    dist[static_cast<std::size_t>(source)] = 0;
    std::deque<int> queue{source};
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        const int du = dist[static_cast<std::size_t>(u)];
        for (int v : g.neighbors(u)) {
            if (dist[static_cast<std::size_t>(v)] == kUnreachable) {
                dist[static_cast<std::size_t>(v)] = du + 1;
                queue.push_back(v);
            }
        }
    }
}

} // namespace detail

// All-pairs hop distances by breadth-first search from every node.
// Unreachable pairs hold kUnreachable. Rows are independent, so sources are
// processed in parallel for larger graphs; the result does not depend on the
// scheduling.
inline std::vector<std::vector<int>> shortest_path_matrix(const Graph& g) {
    const int n = g.node_count();
    std::vector<std::vector<int>> matrix(static_cast<std::size_t>(n));

    const unsigned hw = std::thread::hardware_concurrency();
    const unsigned workers = (n >= 256 && hw > 1) ? std::min<unsigned>(hw, 8) : 1;
    if (workers <= 1) {
        for (int s = 0; s < n; ++s) {
            detail::bfs_row(g, s, matrix[static_cast<std::size_t>(s)]);
        }
        return matrix;
    }

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (int s = static_cast<int>(w); s < n; s += static_cast<int>(workers)) {
                detail::bfs_row(g, s, matrix[static_cast<std::size_t>(s)]);
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
    return matrix;
}

enum class PathLengthMode {
    strict,           // any unreachable pair is an error
    largest_component // average within the largest connected component only
};

namespace detail {

inline std::vector<int> largest_component_nodes(const Graph& g) {
    const int n = g.node_count();
    std::vector<int> component(static_cast<std::size_t>(n), -1);
    int best_id = -1;
    std::size_t best_size = 0;
    int next_id = 0;
    std::vector<int> members;
    for (int start = 0; start < n; ++start) {
        if (component[static_cast<std::size_t>(start)] != -1) {
            continue;
        }
        members.clear();
        members.push_back(start);
        component[static_cast<std::size_t>(start)] = next_id;
        for (std::size_t head = 0; head < members.size(); ++head) {
            for (int v : g.neighbors(members[head])) {
                if (component[static_cast<std::size_t>(v)] == -1) {
                    component[static_cast<std::size_t>(v)] = next_id;
                    members.push_back(v);
                }
            }
        }
        if (members.size() > best_size) {
            best_size = members.size();
            best_id = next_id;
        }
        ++next_id;
    }
    std::vector<int> out;
    out.reserve(best_size);
    for (int v = 0; v < n; ++v) {
        if (component[static_cast<std::size_t>(v)] == best_id) {
            out.push_back(v);
        }
    }
    return out;
}

} // namespace detail

// Mean shortest-path distance over all unordered distinct node pairs
// (self-pairs excluded). This is the S that feeds the entropy formula.
inline double path_length(const Graph& g, PathLengthMode mode = PathLengthMode::strict) {
    std::vector<int> nodes;
    if (mode == PathLengthMode::largest_component) {
        nodes = detail::largest_component_nodes(g);
    } else {
        nodes.resize(static_cast<std::size_t>(g.node_count()));
        for (int v = 0; v < g.node_count(); ++v) {
            nodes[static_cast<std::size_t>(v)] = v;
        }
    }
    if (nodes.size() < 2) {
        throw TooSmall("path_length: need at least two effective nodes");
    }

    long long total = 0;
    std::vector<int> dist;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        detail::bfs_row(g, nodes[i], dist);
        for (std::size_t j = i + 1; j < nodes.size(); ++j) {
            const int d = dist[static_cast<std::size_t>(nodes[j])];
            if (d == kUnreachable) {
                throw Disconnected("path_length: graph has unreachable node pairs");
            }
            total += d;
        }
    }
    const double pairs = 0.5 * static_cast<double>(nodes.size()) *
                         static_cast<double>(nodes.size() - 1);
    return static_cast<double>(total) / pairs;
}

// Mean over all nodes of the fraction of a node's neighbor pairs that are
// themselves adjacent. Nodes of degree < 2 contribute 0 (conventions differ;
// this one keeps the mean defined on every graph).
inline double clustering_coefficient(const Graph& g) {
    const int n = g.node_count();
    double sum = 0.0;
    for (int u = 0; u < n; ++u) {
        const auto& nb = g.neighbors(u);
        const std::size_t deg = nb.size();
        if (deg < 2) {
            continue;
        }
        long long closed = 0;
        for (std::size_t i = 0; i < deg; ++i) {
            for (std::size_t j = i + 1; j < deg; ++j) {
                if (g.has_edge(nb[i], nb[j])) {
                    ++closed;
                }
            }
        }
        sum += static_cast<double>(closed) /
               (0.5 * static_cast<double>(deg) * static_cast<double>(deg - 1));
    }
    return sum / static_cast<double>(n);
}

struct GraphMetrics {
    int n = 0;
    double path_length = 0.0;
    double clustering = 0.0;
};

inline GraphMetrics measure(const Graph& g, PathLengthMode mode = PathLengthMode::strict) {
    return {g.node_count(), path_length(g, mode), clustering_coefficient(g)};
}

// Watts-Strogatz style generator parameters.
struct SmallWorldSpec {
    int n = 0;            // node count, >= 3
    int k = 0;            // even number of ring-lattice neighbors, 0 < k < n
    double p = 0.0;       // rewiring probability in [0, 1]
    std::uint64_t seed = 0;
};

// Ring lattice of n nodes each joined to its k nearest neighbors, then every
// lattice edge (i, i+j) is rewired with probability p to (i, w) for a uniform
// random w that avoids self-loops and duplicates. Fully deterministic in the
// spec: the lattice edges are visited lane by lane (j = 1..k/2), node order
// ascending, and randomness comes from SplitMix64(seed) in that fixed order.
inline Graph generate_small_world(const SmallWorldSpec& spec) {
    if (spec.n < 3) {
        throw BadSpec("generate_small_world: need at least 3 nodes");
    }
    if (spec.k <= 0 || spec.k >= spec.n || spec.k % 2 != 0) {
        throw BadSpec("generate_small_world: k must be even with 0 < k < n");
    }
    if (!(spec.p >= 0.0 && spec.p <= 1.0)) {
        throw BadSpec("generate_small_world: p must lie in [0, 1]");
    }

    const int n = spec.n;
    std::set<std::pair<int, int>> edge_set;
    auto normalized = [](int u, int v) {
        return u < v ? std::pair<int, int>{u, v} : std::pair<int, int>{v, u};
    };
    for (int j = 1; j <= spec.k / 2; ++j) {
        for (int i = 0; i < n; ++i) {
            edge_set.insert(normalized(i, (i + j) % n));
        }
    }

    SplitMix64 rng(spec.seed);
    if (spec.p > 0.0) {
        for (int j = 1; j <= spec.k / 2; ++j) {
            for (int i = 0; i < n; ++i) {
                const auto lattice_edge = normalized(i, (i + j) % n);
                if (rng.next_double() >= spec.p) {
                    continue;
                }
                if (edge_set.count(lattice_edge) == 0) {
                    continue; // already rewired away from the other endpoint
                }
                // A node adjacent to everything else has nowhere to rewire to.
                std::size_t attached = 0;
                for (int v = 0; v < n; ++v) {
                    if (v != i && edge_set.count(normalized(i, v)) > 0) {
                        ++attached;
                    }
                }
                if (attached >= static_cast<std::size_t>(n - 1)) {
                    continue;
                }
                int target = i;
                while (true) {
                    target = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
                    if (target != i && edge_set.count(normalized(i, target)) == 0) {
                        break;
                    }
                }
                edge_set.erase(lattice_edge);
                edge_set.insert(normalized(i, target));
            }
        }
    }

    return Graph(n, {edge_set.begin(), edge_set.end()});
}

// Edge-list text format: one "u v" pair per line with 0-based node ids,
// '#' starts a comment, blank lines ignored. Node count is max id + 1 unless
// an explicit "nodes N" header line raises it.
inline Graph read_edge_list(std::istream& in) {
    std::vector<Graph::Edge> edges;
    int declared_nodes = 0;
    int max_id = -1;
    std::string line;
    int line_no = 0;
    bool saw_content = false;
    auto fail = [&](const std::string& what) {
        throw ParseError("edge list line " + std::to_string(line_no) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream fields(line);
        std::string first;
        if (!(fields >> first)) {
            continue;
        }
        saw_content = true;
        if (first == "nodes") {
            long long n = 0;
            if (!(fields >> n) || n < 1) {
                fail("expected 'nodes N' with positive N");
            }
            declared_nodes = static_cast<int>(n);
            continue;
        }
        long long u = 0;
        long long v = 0;
        const auto parsed =
            std::from_chars(first.data(), first.data() + first.size(), u);
        if (parsed.ec != std::errc{} || parsed.ptr != first.data() + first.size()) {
            fail("expected integer node id, got '" + first + "'");
        }
        if (!(fields >> v)) {
            fail("expected two node ids");
        }
        std::string extra;
        if (fields >> extra) {
            fail("trailing content '" + extra + "'");
        }
        if (u < 0 || v < 0) {
            fail("node ids must be nonnegative");
        }
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        max_id = std::max(max_id, static_cast<int>(std::max(u, v)));
    }
    if (!saw_content) {
        throw ParseError("edge list: no content");
    }
    const int node_count = std::max(declared_nodes, max_id + 1);
    if (node_count < 1) {
        throw ParseError("edge list: no nodes");
    }
    try {
        return Graph(node_count, std::move(edges));
    } catch (const BadSpec& bad) {
        throw ValidationError(std::string("edge list: ") + bad.what());
    }
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    out << "nodes " << g.node_count() << "\n";
    for (auto [u, v] : g.edges()) {
        out << u << " " << v << "\n";
    }
}

} // namespace netgrowth
