#include "ihara/spanning_trees.hpp"

#include "ihara/detail/overloaded.hpp"
#include "ihara/errors.hpp"

namespace ihara {

using detail::overloaded;

std::string_view method_name(TreeCountMethod m) {
    switch (m) {
    case TreeCountMethod::ZetaDerivative: return "zeta-derivative";
    case TreeCountMethod::ClosedForm: return "closed-form";
    case TreeCountMethod::Kirchhoff: return "kirchhoff";
    }
    return "?";
}

TreeCountResult tree_count_from_zeta(const IntPoly& poly, long r) {
    if (r <= 1)
        throw DegenerateRankError("zeta special value determines nothing at rank " + std::to_string(r) +
                                  "; use the Kirchhoff count");
    const BigInt value = poly.derivative(int(r)).eval(BigInt(1));
    BigInt divisor = 1;
    for (long t = 2; t <= r; ++t) divisor *= t;  // r!
    divisor *= BigInt(1) << static_cast<mp_bitcnt_t>(r);
    divisor *= r - 1;
    if (r % 2 == 0) divisor = -divisor;  // (-1)^(r-1)
    if (!mpz_divisible_p(value.get_mpz_t(), divisor.get_mpz_t()))
        throw InvariantViolation("r-th derivative at u=1 (" + value.get_str() + ") is not divisible by " +
                                 divisor.get_str() + " for r = " + std::to_string(r));
    TreeCountResult out;
    mpz_divexact(out.kappa.get_mpz_t(), value.get_mpz_t(), divisor.get_mpz_t());
    out.method = TreeCountMethod::ZetaDerivative;
    out.rank_used = r;
    if (out.kappa < 1) throw InvariantViolation("non-positive spanning tree count " + out.kappa.get_str());
    return out;
}

namespace {

BigInt ipow(long base, long exp) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
    return r;
}

} // namespace

TreeCountResult tree_count_closed_form(const FamilySpec& spec) {
    const Multigraph g = gen_family(spec);
    TreeCountResult out;
    out.method = TreeCountMethod::ClosedForm;
    out.rank_used = g.rank();
    out.kappa = std::visit(
        overloaded{
            [](const Complete& f) { return ipow(f.n, f.n - 2); },
            [](const CompleteBipartite& f) { return BigInt(ipow(f.m, f.n - 1) * ipow(f.n, f.m - 1)); },
            [](const CocktailParty& f) {
                const long n = f.order / 2;
                return BigInt(ipow(4, n - 1) * ipow(n, n - 2) * ipow(n - 1, n));
            },
            [](const MatchingDeleted& f) {
                const long n = f.order / 2;
                return BigInt(ipow(n, n - 2) * ipow(n - 2, n - 1) * (n - 1));
            },
            [](const DoubleCycle& f) { return BigInt(long(f.m) * f.n); },
            [](const Handcuff& f) { return BigInt(long(f.m) * f.n); },
            [](const SharedPath& f) { return BigInt(long(f.m) * f.n - long(f.p) * f.p); },
            [&](const auto&) -> BigInt {
                throw ParameterError("no closed-form spanning tree count for " + format_family(spec));
            },
        },
        spec);
    return out;
}

TreeCountResult tree_count_kirchhoff(const Multigraph& g) {
    return {kirchhoff_tree_count(g), TreeCountMethod::Kirchhoff, g.rank()};
}

} // namespace ihara
