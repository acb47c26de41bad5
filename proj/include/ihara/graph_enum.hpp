#pragma once

#include <vector>

#include "ihara/multigraph.hpp"

namespace ihara {

struct EnumerationOptions {
    int max_edges = 6;
    int min_edges = 1;
    int min_degree = 2;
    bool connected = true;
    bool allow_loops = true;
    bool allow_multi_edges = true;
};

/// Every multigraph satisfying the options, one representative per
/// isomorphism class, in a deterministic order (by |E|, then |V|, then the
/// canonical key).
std::vector<Multigraph> enumerate_multigraphs(const EnumerationOptions& options);

/// Isomorphism certificate: lexicographically smallest multiplicity vector
/// over all degree-respecting relabelings. Two graphs are isomorphic iff their
/// keys compare equal. Brute force, intended for graphs with at most ~8 vertices.
std::vector<int> canonical_key(const Multigraph& g);

bool isomorphic(const Multigraph& a, const Multigraph& b);

} // namespace ihara
