#pragma once

#include <string>
#include <utility>
#include <vector>

#include "altkg/bits.hpp"
#include "altkg/errors.hpp"

namespace altkg {

/// Simple undirected graph on vertices 0..n-1, adjacency kept as bit rows.
/// Labels are optional decoration carried through constructions.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(size_t(n), DynBits(n)) {}

    int num_vertices() const { return n_; }

    int num_edges() const {
        int deg = 0;
        for (const auto& row : adj_) deg += row.count();
        return deg / 2;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw InputError("loops are not allowed");
        adj_[size_t(u)].set(v);
        adj_[size_t(v)].set(u);
    }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return adj_[size_t(u)].test(v);
    }

    const DynBits& neighbors(int u) const {
        check_vertex(u);
        return adj_[size_t(u)];
    }

    int degree(int u) const { return neighbors(u).count(); }

    std::vector<std::pair<int, int>> edge_list() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v = neighbors(u).next_after(u); v != -1; v = neighbors(u).next_after(v))
                out.emplace_back(u, v);
        return out;
    }

    void set_label(int u, std::string label) {
        check_vertex(u);
        if (labels_.empty()) labels_.resize(size_t(n_));
        labels_[size_t(u)] = std::move(label);
    }
    std::string label(int u) const {
        check_vertex(u);
        if (labels_.empty()) return "v" + std::to_string(u);
        return labels_[size_t(u)];
    }
    bool has_labels() const { return !labels_.empty(); }

    /// Two-colorable?  Plain BFS; used as the exact k=2 fast path.
    bool bipartite() const {
        std::vector<int> color(size_t(n_), -1);
        std::vector<int> queue;
        for (int s = 0; s < n_; ++s) {
            if (color[size_t(s)] != -1) continue;
            color[size_t(s)] = 0;
            queue.assign(1, s);
            while (!queue.empty()) {
                int u = queue.back();
                queue.pop_back();
                for (int v = neighbors(u).first(); v != -1; v = neighbors(u).next_after(v)) {
                    if (color[size_t(v)] == -1) {
                        color[size_t(v)] = 1 - color[size_t(u)];
                        queue.push_back(v);
                    } else if (color[size_t(v)] == color[size_t(u)]) {
                        return false;
                    }
                }
            }
        }
        return true;
    }

    bool operator==(const Graph& o) const {
        if (n_ != o.n_) return false;
        for (int u = 0; u < n_; ++u)
            if (!(adj_[size_t(u)] == o.adj_[size_t(u)])) return false;
        return true;
    }

    static Graph complete(int n) {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
        return g;
    }

    static Graph cycle(int n) {
        Graph g(n);
        for (int u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
        return g;
    }

    static Graph path(int n) {
        Graph g(n);
        for (int u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
        return g;
    }

private:
    void check_vertex(int u) const {
        if (u < 0 || u >= n_) throw InputError("vertex index " + std::to_string(u) + " out of range");
    }

    int n_ = 0;
    std::vector<DynBits> adj_;
    std::vector<std::string> labels_;
};

} // namespace altkg
