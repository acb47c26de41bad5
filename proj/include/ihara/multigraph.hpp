#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ihara/bigint.hpp"
#include "ihara/matrix.hpp"

namespace ihara {

using IntMatrix = SquareMatrix<BigInt>;

/// Unordered vertex pair; `u == v` denotes a loop.
struct Edge {
    int u = 0;
    int v = 0;
    bool operator==(const Edge&) const = default;
};

/// Undirected multigraph on dense 0-indexed vertices.
///
/// Loops are stored per vertex and contribute 2 to the vertex degree; parallel
/// edges are stored as a symmetric multiplicity table with a zero diagonal.
class Multigraph {
public:
    Multigraph() = default;
    explicit Multigraph(int n_vertices);

    /// Accumulates `count` copies of the edge {u, v}. Throws InputError on a bad index.
    void add_edge(int u, int v, int count = 1);

    [[nodiscard]] int n_vertices() const noexcept { return n_; }
    [[nodiscard]] int n_edges() const noexcept { return n_edges_; }
    [[nodiscard]] int loops(int v) const { return loops_.at(v); }
    [[nodiscard]] int multiplicity(int u, int v) const;
    [[nodiscard]] int degree(int v) const;
    [[nodiscard]] std::vector<int> degrees() const;

    /// Cycle rank |E| - |V| + 1.
    [[nodiscard]] long rank() const noexcept { return long(n_edges_) - n_ + 1; }

    /// One entry per edge: loops first (by vertex), then pairs u < v in
    /// lexicographic order, each repeated by multiplicity. This order defines
    /// edge ids everywhere in the library.
    [[nodiscard]] std::vector<Edge> edge_list() const;

    bool operator==(const Multigraph&) const = default;

private:
    int n_ = 0;
    int n_edges_ = 0;
    std::vector<int> loops_;
    std::vector<int> mult_;
};

Multigraph build_multigraph(std::span<const Edge> edges, int n_vertices);

struct StructuralReport {
    bool connected = false;
    int min_degree = 0;
    long rank = 0;
    /// Generalized girth: 1 with a loop, 2 with a multi-edge, else the shortest
    /// cycle; empty for acyclic graphs.
    std::optional<int> girth;
    bool bipartite = false;
};

StructuralReport structural_report(const Multigraph& g);

/// Throws ValidationError unless g is nonempty, connected and has min degree >= 2.
void validate(const Multigraph& g);

struct GraphMatrices {
    IntMatrix adjacency;
    IntMatrix q;  // diag(d(v) - 1)
};

GraphMatrices matrices(const Multigraph& g);

/// Matrix-tree count. Loops are ignored; parallel edges count by multiplicity.
/// Throws StructuralError on a disconnected graph.
BigInt kirchhoff_tree_count(const Multigraph& g);

// Edge-list text format:
//   n <vertex_count>
//   u v        (one edge per line, u u is a loop, repeats accumulate)
//   # comment
Multigraph parse_edge_list(std::istream& in);
Multigraph parse_edge_list(const std::string& text);
Multigraph read_edge_list_file(const std::string& path);
std::string format_edge_list(const Multigraph& g);

} // namespace ihara
