#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "ihara/families.hpp"

namespace ihara {

using RankTwoSpec = std::variant<DoubleCycle, SharedPath, Handcuff>;

FamilySpec to_family(const RankTwoSpec& spec);
std::string format_rank_two(const RankTwoSpec& spec);
int rank_two_edges(const RankTwoSpec& spec);

/// DoubleCycle/Handcuff: m <= n. SharedPath: 0 < 2p <= m <= n.
bool is_canonical(const RankTwoSpec& spec);

/// Unique canonical representative of the same graph. SharedPath sorts the
/// internal path lengths (p, m-p, n-p) in descending order a >= b >= c and
/// rebuilds (m, n, p) = (b + c, a + c, c). Throws ParameterError on
/// parameters that describe no rank-two multigraph.
RankTwoSpec canonicalize(const RankTwoSpec& spec);

/// All canonical specs with |E| <= max_edges, ordered by |E| then shape.
std::vector<RankTwoSpec> enumerate_rank2(int max_edges);

struct RankTwoRow {
    RankTwoSpec spec;
    int n_edges = 0;
    BigInt leading_coeff;
    int girth_readout = -1;
    BigInt tree_count;
    std::uint64_t poly_hash = 0;
    IntPoly poly;
};

struct CompletenessReport {
    int max_edges = 0;
    std::vector<RankTwoRow> rows;
};

/// Zeta reciprocal of every canonical spec up to max_edges, asserted
/// pairwise distinct. Throws TheoremViolation on a collision.
CompletenessReport completeness_check(int max_edges);

struct ExhaustivenessAudit {
    int max_edges = 0;
    std::size_t brute_force_classes = 0;
    std::size_t enumerated_specs = 0;
    /// Brute-force classes not isomorphic to any enumerated spec.
    std::vector<Multigraph> uncovered;
    /// Enumerated specs matched by more than one class, or none.
    std::vector<RankTwoSpec> unmatched_specs;
    [[nodiscard]] bool exhaustive() const {
        return uncovered.empty() && unmatched_specs.empty() && brute_force_classes == enumerated_specs;
    }
};

/// Compares enumerate_rank2 against brute-force generation of all connected
/// min-degree-2 rank-two multigraphs, up to isomorphism.
ExhaustivenessAudit audit_rank2_exhaustive(int max_edges);

/// FNV-1a over the JSON serialization of the coefficients.
std::uint64_t poly_hash(const IntPoly& p);

} // namespace ihara
