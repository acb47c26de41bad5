#pragma once

// Independent reference implementations used only by the tests. Each one is
// deliberately naive: exhaustive subsets, full permutation expansion, brute
// relabeling. None of them share code paths with the library algorithms they
// check.

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "ihara/multigraph.hpp"
#include "ihara/poly.hpp"

namespace oracle {

using ihara::BigInt;
using ihara::Edge;
using ihara::IntPoly;
using ihara::Multigraph;

inline int find_root(std::vector<int>& parent, int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
}

/// Spanning trees by trying every (n-1)-subset of non-loop edges.
inline long spanning_trees_by_subsets(const Multigraph& g) {
    std::vector<Edge> edges;
    for (const Edge& e : g.edge_list())
        if (e.u != e.v) edges.push_back(e);
    const int n = g.n_vertices();
    const int m = int(edges.size());
    if (n == 1) return 1;
    long count = 0;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        if (std::popcount(mask) != n - 1) continue;
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        bool acyclic = true;
        for (int i = 0; i < m && acyclic; ++i) {
            if (!(mask >> i & 1)) continue;
            int a = find_root(parent, edges[i].u), b = find_root(parent, edges[i].v);
            if (a == b) acyclic = false;
            else parent[a] = b;
        }
        count += acyclic;
    }
    return count;
}

/// Shortest cycle as the smallest edge subset in which every touched vertex
/// has degree exactly 2 and the touched vertices are connected. -1 if none.
inline int girth_by_subsets(const Multigraph& g) {
    const auto edges = g.edge_list();
    const int m = int(edges.size());
    int best = -1;
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        const int size = std::popcount(mask);
        if (best != -1 && size >= best) continue;
        std::vector<int> deg(g.n_vertices(), 0);
        std::vector<int> parent(g.n_vertices());
        std::iota(parent.begin(), parent.end(), 0);
        for (int i = 0; i < m; ++i) {
            if (!(mask >> i & 1)) continue;
            deg[edges[i].u] += 1;
            deg[edges[i].v] += 1;
            parent[find_root(parent, edges[i].u)] = find_root(parent, edges[i].v);
        }
        bool ok = true;
        int root = -1;
        for (int v = 0; v < g.n_vertices() && ok; ++v) {
            if (deg[v] == 0) continue;
            if (deg[v] != 2) ok = false;
            int r = find_root(parent, v);
            if (root == -1) root = r;
            else if (r != root) ok = false;
        }
        if (ok) best = size;
    }
    return best;
}

/// Bipartite iff some 2-colouring of the vertices makes every edge bichromatic.
inline bool bipartite_by_colourings(const Multigraph& g) {
    const int n = g.n_vertices();
    const auto edges = g.edge_list();
    for (unsigned colour = 0; colour < (1u << n); ++colour) {
        bool ok = true;
        for (const Edge& e : edges)
            if ((colour >> e.u & 1) == (colour >> e.v & 1)) ok = false;
        if (ok) return true;
    }
    return false;
}

/// Determinant by the Leibniz permutation expansion.
template <class T, class Matrix>
T leibniz_det(const Matrix& m, T one) {
    const int n = int(m.dim());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    T total = one - one;
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
        T term = one;
        for (int i = 0; i < n; ++i) term = term * m(i, perm[i]);
        if (inversions % 2) total = total - term;
        else total = total + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// Multiset of unordered vertex pairs; the plain relabeling-invariant form.
using PairMultiset = std::vector<std::pair<int, int>>;

inline PairMultiset relabeled(const Multigraph& g, const std::vector<int>& perm) {
    PairMultiset out;
    for (const Edge& e : g.edge_list()) {
        int a = perm[e.u], b = perm[e.v];
        out.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Minimum relabeled pair multiset over all n! permutations.
inline PairMultiset brute_certificate(const Multigraph& g) {
    std::vector<int> perm(g.n_vertices());
    std::iota(perm.begin(), perm.end(), 0);
    PairMultiset best = relabeled(g, perm);
    while (std::next_permutation(perm.begin(), perm.end())) best = std::min(best, relabeled(g, perm));
    return best;
}

inline bool connected(const Multigraph& g) {
    std::vector<int> parent(g.n_vertices());
    std::iota(parent.begin(), parent.end(), 0);
    for (const Edge& e : g.edge_list()) parent[find_root(parent, e.u)] = find_root(parent, e.v);
    for (int v = 1; v < g.n_vertices(); ++v)
        if (find_root(parent, v) != find_root(parent, 0)) return false;
    return true;
}

/// Isomorphism classes of connected multigraphs with exactly `edges` edges and
/// all degrees >= min_degree, by labeled generation of every edge multiset.
inline std::set<std::pair<int, PairMultiset>> brute_classes(int edges, int min_degree, bool loops, bool multi) {
    std::set<std::pair<int, PairMultiset>> out;
    for (int n = 1; n <= edges + 1; ++n) {
        std::vector<Edge> slots;
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                if (i != j || loops) slots.push_back({i, j});
        if (slots.empty()) continue;
        std::vector<int> pick(edges, 0);
        // non-decreasing index sequences = multisets of slots
        while (true) {
            bool valid = true;
            if (!multi)
                for (int k = 1; k < edges; ++k)
                    if (pick[k] == pick[k - 1]) valid = false;
            if (valid) {
                Multigraph g(n);
                for (int s : pick) g.add_edge(slots[s].u, slots[s].v);
                bool degree_ok = true;
                for (int d : g.degrees()) degree_ok &= d >= min_degree;
                if (degree_ok && connected(g)) out.emplace(n, brute_certificate(g));
            }
            int k = edges - 1;
            while (k >= 0 && pick[k] == int(slots.size()) - 1) --k;
            if (k < 0) break;
            ++pick[k];
            for (int t = k + 1; t < edges; ++t) pick[t] = pick[k];
        }
    }
    return out;
}

/// p(x + t) expanded in t by the binomial theorem; entry k is the t^k coefficient.
inline std::vector<BigInt> taylor_shift(const IntPoly& p, const BigInt& x) {
    const int d = p.degree();
    std::vector<BigInt> out(std::max(d + 1, 0), 0);
    for (int n = 0; n <= d; ++n) {
        BigInt binom = 1;
        for (int k = 0; k <= n; ++k) {
            BigInt xp = 1;
            for (int e = 0; e < n - k; ++e) xp *= x;
            out[k] += p.coeff(n) * binom * xp;
            binom = binom * (n - k) / (k + 1);
        }
    }
    return out;
}

} // namespace oracle
