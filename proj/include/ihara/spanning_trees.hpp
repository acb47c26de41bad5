#pragma once

#include <string_view>

#include "ihara/families.hpp"
#include "ihara/poly.hpp"

namespace ihara {

enum class TreeCountMethod { ZetaDerivative, ClosedForm, Kirchhoff };

std::string_view method_name(TreeCountMethod m);

struct TreeCountResult {
    BigInt kappa;
    TreeCountMethod method = TreeCountMethod::Kirchhoff;
    long rank_used = 0;
};

/// kappa = (d^r/du^r zeta^{-1})(1) / ((-1)^(r-1) 2^r r! (r-1)).
/// Throws DegenerateRankError for r <= 1 and InvariantViolation when the
/// division is inexact.
TreeCountResult tree_count_from_zeta(const IntPoly& poly, long r);

/// Throws ParameterError for families without a closed-form count.
TreeCountResult tree_count_closed_form(const FamilySpec& spec);

TreeCountResult tree_count_kirchhoff(const Multigraph& g);

} // namespace ihara
