#include "ihara/multigraph.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <queue>
#include <sstream>

#include "ihara/errors.hpp"
#include "ihara/poly.hpp"

namespace ihara {

Multigraph::Multigraph(int n_vertices) : n_(n_vertices) {
    if (n_vertices < 0) throw InputError("negative vertex count");
    loops_.assign(std::size_t(n_), 0);
    mult_.assign(std::size_t(n_) * std::size_t(n_), 0);
}

void Multigraph::add_edge(int u, int v, int count) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw InputError("vertex index out of range: (" + std::to_string(u) + "," + std::to_string(v) +
                         ") with " + std::to_string(n_) + " vertices");
    if (count < 0) throw InputError("negative edge multiplicity");
    if (u == v) {
        loops_[u] += count;
    } else {
        mult_[std::size_t(u) * n_ + v] += count;
        mult_[std::size_t(v) * n_ + u] += count;
    }
    n_edges_ += count;
}

int Multigraph::multiplicity(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw InputError("vertex index out of range");
    return mult_[std::size_t(u) * n_ + v];
}

int Multigraph::degree(int v) const {
    int d = 2 * loops_.at(v);
    for (int w = 0; w < n_; ++w) d += mult_[std::size_t(v) * n_ + w];
    return d;
}

std::vector<int> Multigraph::degrees() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    return d;
}

std::vector<Edge> Multigraph::edge_list() const {
    std::vector<Edge> edges;
    edges.reserve(n_edges_);
    for (int v = 0; v < n_; ++v)
        for (int k = 0; k < loops_[v]; ++k) edges.push_back({v, v});
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            for (int k = 0; k < mult_[std::size_t(a) * n_ + b]; ++k) edges.push_back({a, b});
    return edges;
}

Multigraph build_multigraph(std::span<const Edge> edges, int n_vertices) {
    Multigraph g(n_vertices);
    for (const Edge& e : edges) g.add_edge(e.u, e.v);
    return g;
}

namespace {

std::vector<std::vector<int>> neighbours(const Multigraph& g) {
    std::vector<std::vector<int>> adj(g.n_vertices());
    for (int a = 0; a < g.n_vertices(); ++a)
        for (int b = 0; b < g.n_vertices(); ++b)
            if (a != b && g.multiplicity(a, b) > 0) adj[a].push_back(b);
    return adj;
}

bool is_connected(const Multigraph& g) {
    if (g.n_vertices() == 0) return false;
    auto adj = neighbours(g);
    std::vector<bool> seen(g.n_vertices(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
    }
    return count == g.n_vertices();
}

// Shortest cycle in the underlying simple graph (BFS from every vertex).
std::optional<int> simple_girth(const Multigraph& g) {
    auto adj = neighbours(g);
    const int n = g.n_vertices();
    int best = std::numeric_limits<int>::max();
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(n, -1), parent(n, -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adj[v]) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    q.push(w);
                } else if (parent[v] != w) {
                    best = std::min(best, dist[v] + dist[w] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

bool is_bipartite(const Multigraph& g) {
    for (int v = 0; v < g.n_vertices(); ++v)
        if (g.loops(v) > 0) return false;
    auto adj = neighbours(g);
    std::vector<int> colour(g.n_vertices(), -1);
    for (int s = 0; s < g.n_vertices(); ++s) {
        if (colour[s] >= 0) continue;
        colour[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v]) {
                if (colour[w] < 0) {
                    colour[w] = 1 - colour[v];
                    stack.push_back(w);
                } else if (colour[w] == colour[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

} // namespace

StructuralReport structural_report(const Multigraph& g) {
    StructuralReport r;
    r.connected = is_connected(g);
    r.rank = g.rank();
    auto d = g.degrees();
    r.min_degree = d.empty() ? 0 : *std::min_element(d.begin(), d.end());
    bool has_loop = false, has_multi = false;
    for (int v = 0; v < g.n_vertices(); ++v) {
        has_loop |= g.loops(v) > 0;
        for (int w = v + 1; w < g.n_vertices(); ++w) has_multi |= g.multiplicity(v, w) >= 2;
    }
    if (has_loop)
        r.girth = 1;
    else if (has_multi)
        r.girth = 2;
    else
        r.girth = simple_girth(g);
    r.bipartite = is_bipartite(g);
    return r;
}

void validate(const Multigraph& g) {
    if (g.n_vertices() == 0) throw ValidationError("graph has no vertices");
    if (!is_connected(g)) throw ValidationError("graph is not connected");
    for (int v = 0; v < g.n_vertices(); ++v)
        if (g.degree(v) < 2)
            throw ValidationError("vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) +
                                  " (need >= 2)");
}

GraphMatrices matrices(const Multigraph& g) {
    const auto n = std::size_t(g.n_vertices());
    GraphMatrices m{IntMatrix(n, 0), IntMatrix(n, 0)};
    for (int i = 0; i < g.n_vertices(); ++i) {
        m.adjacency(i, i) = 2 * g.loops(i);
        for (int j = 0; j < g.n_vertices(); ++j)
            if (i != j) m.adjacency(i, j) = g.multiplicity(i, j);
        m.q(i, i) = g.degree(i) - 1;
    }
    return m;
}

BigInt kirchhoff_tree_count(const Multigraph& g) {
    if (!is_connected(g)) throw StructuralError("spanning trees need a connected graph");
    const int n = g.n_vertices();
    if (n == 1) return 1;
    BigIntMatrix lap(std::size_t(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            lap(i, j) = -g.multiplicity(i, j);
            lap(i, i) += g.multiplicity(i, j);
        }
    return det_bareiss(lap.minor_without(0));
}

Multigraph parse_edge_list(std::istream& in) {
    std::optional<Multigraph> g;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        const std::string where = "line " + std::to_string(line_no) + ": ";
        if (!g) {
            int n = -1;
            if (first != "n" || !(ls >> n) || n < 0)
                throw InputError(where + "expected header `n <vertex_count>`");
            g.emplace(n);
        } else {
            int u = 0, v = 0;
            try {
                std::size_t pos = 0;
                u = std::stoi(first, &pos);
                if (pos != first.size()) throw InputError("");
            } catch (const std::exception&) {
                throw InputError(where + "expected `u v`");
            }
            if (!(ls >> v)) throw InputError(where + "expected `u v`");
            try {
                g->add_edge(u, v);
            } catch (const InputError& e) {
                throw InputError(where + e.what());
            }
        }
        std::string extra;
        if (ls >> extra) throw InputError(where + "trailing tokens");
    }
    if (!g) throw InputError("empty graph file (missing `n <vertex_count>` header)");
    return *g;
}

Multigraph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

Multigraph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read graph file: " + path);
    return parse_edge_list(in);
}

std::string format_edge_list(const Multigraph& g) {
    std::ostringstream out;
    out << "n " << g.n_vertices() << '\n';
    for (const Edge& e : g.edge_list()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

} // namespace ihara
