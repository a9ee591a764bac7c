#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "crws/rng.hpp"

namespace crws {

struct Arc {
    int origin;
    int terminus;
};

/// Finite simple connected graph together with its symmetric arc set.
///
/// Arcs use the canonical ordering e_1..e_m, e_1^-1..e_m^-1: index j < m is the
/// j-th edge in input order as a forward arc, index j + m is its inverse. The
/// involution is therefore index arithmetic and fixed-point-free. Vertices are
/// 0-based internally; the edge-list file format is 1-based.
///
/// Construction validates: no self-loops, no parallel edges, connectivity,
/// positive vertex/edge counts. Instances are immutable after construction.
class Graph {
public:
    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges,
                                std::string label) {
        if (n < 2) throw std::invalid_argument("graph must have at least 2 vertices");
        if (edges.empty()) throw std::invalid_argument("graph must have at least 1 edge");

        Graph g;
        g.n_ = n;
        g.m_ = static_cast<int>(edges.size());
        g.label_ = std::move(label);
        g.degrees_.assign(n, 0);
        g.arcs_.reserve(2 * edges.size());

        std::set<std::pair<int, int>> seen;
        for (std::size_t idx = 0; idx < edges.size(); ++idx) {
            const auto [u, v] = edges[idx];
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw std::invalid_argument("edge " + std::to_string(idx + 1) +
                                            ": vertex label out of range");
            if (u == v)
                throw std::invalid_argument("edge " + std::to_string(idx + 1) + ": self-loop");
            const auto key = std::minmax(u, v);
            if (!seen.insert(key).second)
                throw std::invalid_argument("edge " + std::to_string(idx + 1) + ": duplicate edge");
            g.arcs_.push_back(Arc{u, v});
        }
        for (const auto& [u, v] : edges) g.arcs_.push_back(Arc{v, u});
        for (const Arc& a : g.arcs_) ++g.degrees_[a.origin];

        const int components = g.component_count();
        if (components != 1)
            throw std::invalid_argument("graph is disconnected (" + std::to_string(components) +
                                        " components)");
        return g;
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    int arc_count() const { return 2 * m_; }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const Arc& arc(int e) const { return arcs_[static_cast<std::size_t>(e)]; }
    int inverse(int e) const { return e < m_ ? e + m_ : e - m_; }
    int degree(int v) const { return degrees_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& degrees() const { return degrees_; }
    const std::string& label() const { return label_; }

    /// Common degree when the graph is regular.
    std::optional<int> regular_degree() const {
        const int d = degrees_[0];
        for (int v : degrees_)
            if (v != d) return std::nullopt;
        return d;
    }

    /// Two-coloring when the graph is bipartite; each part sorted ascending,
    /// the part containing vertex 0 first.
    std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition() const {
        std::vector<int> color(n_, -1);
        std::vector<int> queue{0};
        color[0] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int u = queue[head];
            for (int e = 0; e < arc_count(); ++e) {
                if (arcs_[e].origin != u) continue;
                const int v = arcs_[e].terminus;
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    return std::nullopt;
                }
            }
        }
        std::vector<int> a, b;
        for (int v = 0; v < n_; ++v) (color[v] == 0 ? a : b).push_back(v);
        return std::make_pair(std::move(a), std::move(b));
    }

private:
    Graph() = default;

    int component_count() const {
        std::vector<char> visited(n_, 0);
        int components = 0;
        for (int start = 0; start < n_; ++start) {
            if (visited[start]) continue;
            ++components;
            std::vector<int> stack{start};
            visited[start] = 1;
            while (!stack.empty()) {
                const int u = stack.back();
                stack.pop_back();
                for (const Arc& a : arcs_) {
                    if (a.origin == u && !visited[a.terminus]) {
                        visited[a.terminus] = 1;
                        stack.push_back(a.terminus);
                    }
                }
            }
        }
        return components;
    }

    int n_ = 0;
    int m_ = 0;
    std::vector<Arc> arcs_;
    std::vector<int> degrees_;
    std::string label_;
};

/// Parse the edge-list document format: first line "n m", then m lines "u v",
/// 1-based labels, whitespace-separated; lines starting with '#' are ignored.
/// Rejections carry the 1-based source line number.
inline Graph parse_edge_list(std::string_view text, std::string label = "edge-list") {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;

    auto next_content_line = [&](std::string& out) {
        while (std::getline(in, line)) {
            ++line_no;
            std::size_t i = line.find_first_not_of(" \t\r");
            if (i == std::string::npos) continue;
            if (line[i] == '#') continue;
            out = line;
            return true;
        }
        return false;
    };

    std::string header;
    if (!next_content_line(header)) throw std::invalid_argument("empty edge-list document");
    int n = 0, m = 0;
    {
        std::istringstream hs(header);
        std::string extra;
        if (!(hs >> n >> m) || (hs >> extra))
            throw std::invalid_argument("line " + std::to_string(line_no) +
                                        ": expected header 'n m'");
    }
    if (n < 1 || m < 1)
        throw std::invalid_argument("line " + std::to_string(line_no) +
                                    ": vertex and edge counts must be positive");

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    std::vector<int> edge_lines;
    for (int k = 0; k < m; ++k) {
        std::string body;
        if (!next_content_line(body))
            throw std::invalid_argument("unexpected end of document: expected " +
                                        std::to_string(m) + " edges, found " + std::to_string(k));
        std::istringstream es(body);
        int u = 0, v = 0;
        std::string extra;
        if (!(es >> u >> v) || (es >> extra))
            throw std::invalid_argument("line " + std::to_string(line_no) + ": expected 'u v'");
        if (u < 1 || u > n || v < 1 || v > n)
            throw std::invalid_argument("line " + std::to_string(line_no) +
                                        ": vertex label out of range 1.." + std::to_string(n));
        edges.emplace_back(u - 1, v - 1);
        edge_lines.push_back(line_no);
    }
    std::string trailing;
    if (next_content_line(trailing))
        throw std::invalid_argument("line " + std::to_string(line_no) +
                                    ": trailing content after " + std::to_string(m) + " edges");

    try {
        return Graph::from_edge_list(n, edges, std::move(label));
    } catch (const std::invalid_argument& err) {
        // re-map "edge k" diagnostics to source line numbers
        const std::string msg = err.what();
        const std::string prefix = "edge ";
        if (msg.rfind(prefix, 0) == 0) {
            const std::size_t colon = msg.find(':');
            const int k = std::stoi(msg.substr(prefix.size(), colon - prefix.size()));
            throw std::invalid_argument("line " + std::to_string(edge_lines[k - 1]) +
                                        msg.substr(colon));
        }
        throw;
    }
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n must be >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph::from_edge_list(n, edges, "C" + std::to_string(n));
}

inline Graph complete_graph(int n) {
    if (n < 3) throw std::invalid_argument("complete_graph: n must be >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges, "K" + std::to_string(n));
}

inline Graph complete_bipartite_graph(int p, int q) {
    if (p < 1 || q < 1) throw std::invalid_argument("complete_bipartite_graph: parts must be >= 1");
    if (p + q < 3) throw std::invalid_argument("complete_bipartite_graph: graph too small");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < p; ++u)
        for (int v = 0; v < q; ++v) edges.emplace_back(u, p + v);
    return Graph::from_edge_list(p + q, edges, "K" + std::to_string(p) + "," + std::to_string(q));
}

inline Graph petersen_graph() {
    std::vector<std::pair<int, int>> edges = {
        {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},  // outer 5-cycle
        {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},  // inner pentagram
        {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},  // spokes
    };
    return Graph::from_edge_list(10, edges, "Petersen");
}

/// Seed-deterministic connected graph: a random recursive tree (each new
/// vertex attaches to a uniformly chosen earlier vertex), then extra_edges
/// additional distinct non-loop edges by rejection sampling.
inline Graph random_connected_graph(int n, int extra_edges, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("random_connected_graph: n must be >= 2");
    if (extra_edges < 0) throw std::invalid_argument("random_connected_graph: extra_edges must be >= 0");
    const long capacity = static_cast<long>(n) * (n - 1) / 2 - (n - 1);
    if (extra_edges > capacity)
        throw std::invalid_argument("random_connected_graph: extra_edges exceeds " +
                                    std::to_string(capacity) + " available non-tree edges");

    std::mt19937_64 rng = make_rng(seed, /*stream=*/0xD1CE);
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    for (int v = 1; v < n; ++v) {
        const int parent = static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(v)));
        edges.emplace_back(parent, v);
        seen.insert(std::minmax(parent, v));
    }
    int added = 0;
    long attempts = 0;
    while (added < extra_edges) {
        if (++attempts > 100000)
            throw std::invalid_argument("random_connected_graph: rejection sampling stalled");
        const int u = static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(n)));
        const int v = static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(n)));
        if (u == v) continue;
        if (!seen.insert(std::minmax(u, v)).second) continue;
        edges.emplace_back(std::min(u, v), std::max(u, v));
        ++added;
    }

    return Graph::from_edge_list(n, edges,
                                 "random(n=" + std::to_string(n) + ",extra=" +
                                     std::to_string(extra_edges) + ",seed=" + std::to_string(seed) +
                                     ")");
}

}  // namespace crws
