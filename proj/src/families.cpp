#include "ihara/families.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ihara/detail/overloaded.hpp"
#include "ihara/errors.hpp"
#include "ihara/zeta.hpp"

namespace ihara {

using detail::overloaded;

namespace {

struct NamedInfo {
    NamedGraph id;
    std::string_view key;
    std::string_view poly;
};

constexpr NamedInfo kNamed[] = {
    {NamedGraph::K4Minus, "K4-", "-4u^10 + u^8 + 4u^7 + 4u^6 - 2u^4 - 4u^3 + 1"},
    {NamedGraph::K5Minus, "K5-",
     "108u^18 - 360u^16 - 80u^15 + 345u^14 + 252u^13 + 52u^12 - 222u^11 - 234u^10 - 32u^9 + 69u^8 + "
     "108u^7 + 37u^6 - 12u^5 - 18u^4 - 14u^3 + 1"},
    {NamedGraph::BQ2, "BQ2", "-3u^4 + 4u^3 + 2u^2 - 4u + 1"},
    {NamedGraph::BL, "BL", "-3u^6 + 2u^5 + 3u^4 - u^2 - 2u + 1"},
    {NamedGraph::BB, "BB", "-3u^8 + 4u^6 + 2u^4 - 4u^2 + 1"},
    {NamedGraph::Theta, "theta", "-4u^6 + 9u^4 - 6u^2 + 1"},
    {NamedGraph::Co2K2, "co2K2",
     "-48u^16 + 112u^14 + 32u^13 - 40u^12 - 64u^11 - 68u^10 + 8u^9 + 41u^8 + 40u^7 + 12u^6 - 8u^5 - "
     "10u^4 - 8u^3 + 1"},
    {NamedGraph::CoP3, "coP3",
     "-36u^16 + 73u^14 + 28u^13 - 4u^12 - 50u^11 - 62u^10 - 8u^9 + 17u^8 + 44u^7 + 21u^6 - 4u^5 - "
     "10u^4 - 10u^3 + 1"},
    {NamedGraph::CoK3, "coK3", "9u^14 - 4u^12 - 6u^11 - 18u^10 + 9u^8 + 12u^7 + 9u^6 - 6u^4 - 6u^3 + 1"},
    {NamedGraph::CoP4, "coP4",
     "12u^14 - 11u^12 - 10u^11 - 11u^10 + 6u^9 + 6u^8 + 12u^7 + 7u^6 - 2u^5 - 4u^4 - 6u^3 + 1"},
    {NamedGraph::CoP3K2, "coP3K2",
     "16u^14 - 20u^12 - 8u^11 - 12u^10 + 4u^9 + 17u^8 + 12u^7 + 4u^6 - 4u^5 - 6u^4 - 4u^3 + 1"},
    {NamedGraph::CoP5, "coP5", "-4u^12 + u^10 + 2u^9 + 3u^8 + 2u^7 + u^6 - 2u^5 - 2u^4 - 2u^3 + 1"},
    {NamedGraph::CoC4, "coC4", "-3u^12 + 4u^9 + 2u^6 - 4u^3 + 1"},
};

const NamedInfo& info(NamedGraph id) {
    for (const auto& n : kNamed)
        if (n.id == id) return n;
    throw InputError("unknown named graph");
}

// Complement in K_n of the listed edges.
Multigraph complement_of(int n, std::initializer_list<Edge> removed) {
    Multigraph g(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            bool skip = false;
            for (const Edge& e : removed)
                skip |= (e.u == a && e.v == b) || (e.u == b && e.v == a);
            if (!skip) g.add_edge(a, b);
        }
    return g;
}

// Closed walk through `vertices` in order (length 1 is a loop, 2 a bigon).
void add_cycle(Multigraph& g, const std::vector<int>& vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i) g.add_edge(vertices[i], vertices[(i + 1) % vertices.size()]);
}

// Path of `length` edges from a to b, allocating internal vertices from `next`.
void add_path(Multigraph& g, int a, int b, int length, int& next) {
    int prev = a;
    for (int i = 1; i < length; ++i) {
        g.add_edge(prev, next);
        prev = next++;
    }
    g.add_edge(prev, b);
}

std::vector<int> cycle_through(int anchor, int length, int& next) {
    std::vector<int> vs{anchor};
    for (int i = 1; i < length; ++i) vs.push_back(next++);
    return vs;
}

IntPoly mono(long c, int k) { return IntPoly::monomial(c, k); }

IntPoly quad(long c0, long c1, long c2) { return IntPoly{c0, c1, c2}; }

IntPoly one_minus_u2_pow(long e) {
    if (e < 0) throw ParameterError("closed form needs rank >= 1");
    return quad(1, 0, -1).pow(unsigned(e));
}

void require(bool ok, const FamilySpec& spec, std::string_view why) {
    if (!ok) throw ParameterError(format_family(spec) + ": " + std::string(why));
}

} // namespace

std::string_view named_graph_id(NamedGraph id) { return info(id).key; }

const std::vector<NamedGraph>& all_named_graphs() {
    static const std::vector<NamedGraph> all = [] {
        std::vector<NamedGraph> v;
        for (const auto& n : kNamed) v.push_back(n.id);
        return v;
    }();
    return all;
}

FamilySpec parse_family(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    const auto open = s.find('(');
    if (open == std::string::npos || s.empty() || s.back() != ')')
        throw InputError("malformed family spec: " + std::string(text));
    const std::string tag = s.substr(0, open);
    const std::string body = s.substr(open + 1, s.size() - open - 2);
    if (tag == "N") {
        for (const auto& n : kNamed)
            if (n.key == body) return NamedSmall{n.id};
        throw InputError("unknown named graph: " + body);
    }
    std::vector<int> args;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            args.push_back(std::stoi(item, &pos));
            if (pos != item.size()) throw InputError("");
        } catch (const std::exception&) {
            throw InputError("malformed family spec argument `" + item + "` in " + std::string(text));
        }
    }
    auto arity = [&](std::size_t n) {
        if (args.size() != n)
            throw InputError("family `" + tag + "` takes " + std::to_string(n) + " arguments: " + std::string(text));
    };
    if (tag == "C") { arity(1); return Cycle{args[0]}; }
    if (tag == "K") { arity(1); return Complete{args[0]}; }
    if (tag == "KL") { arity(2); return CompleteWithLoops{args[0], args[1]}; }
    if (tag == "Kb") { arity(2); return CompleteBipartite{args[0], args[1]}; }
    if (tag == "O") { arity(1); return CocktailParty{args[0]}; }
    if (tag == "B") { arity(1); return MatchingDeleted{args[0]}; }
    if (tag == "M") { arity(1); return MobiusLadder{args[0]}; }
    if (tag == "G") { arity(2); return DoubleCycle{args[0], args[1]}; }
    if (tag == "Gp") { arity(3); return SharedPath{args[0], args[1], args[2]}; }
    if (tag == "H") { arity(3); return Handcuff{args[0], args[1], args[2]}; }
    if (tag == "BQ") { arity(1); return Bouquet{args[0]}; }
    if (tag == "D") { arity(3); return Dumbbell{args[0], args[1], args[2]}; }
    if (tag == "T") { arity(6); return ThreeVertex{args[0], args[1], args[2], args[3], args[4], args[5]}; }
    throw InputError("unknown family tag `" + tag + "`");
}

std::string format_family(const FamilySpec& spec) {
    auto join = [](std::string_view tag, std::initializer_list<int> args) {
        std::string s(tag);
        s += '(';
        bool first = true;
        for (int a : args) {
            if (!first) s += ',';
            first = false;
            s += std::to_string(a);
        }
        return s + ')';
    };
    return std::visit(overloaded{
                          [&](const Cycle& f) { return join("C", {f.n}); },
                          [&](const Complete& f) { return join("K", {f.n}); },
                          [&](const CompleteWithLoops& f) { return join("KL", {f.n, f.k}); },
                          [&](const CompleteBipartite& f) { return join("Kb", {f.m, f.n}); },
                          [&](const CocktailParty& f) { return join("O", {f.order}); },
                          [&](const MatchingDeleted& f) { return join("B", {f.order}); },
                          [&](const MobiusLadder& f) { return join("M", {f.n}); },
                          [&](const DoubleCycle& f) { return join("G", {f.m, f.n}); },
                          [&](const SharedPath& f) { return join("Gp", {f.m, f.n, f.p}); },
                          [&](const Handcuff& f) { return join("H", {f.m, f.n, f.l}); },
                          [&](const Bouquet& f) { return join("BQ", {f.a}); },
                          [&](const Dumbbell& f) { return join("D", {f.a, f.b, f.c}); },
                          [&](const ThreeVertex& f) {
                              return join("T", {f.a1, f.a2, f.a3, f.b12, f.b13, f.b23});
                          },
                          [&](const NamedSmall& f) { return "N(" + std::string(named_graph_id(f.id)) + ")"; },
                      },
                      spec);
}

void check_domain(const FamilySpec& spec) {
    std::visit(overloaded{
                   [&](const Cycle& f) { require(f.n >= 1, spec, "need n >= 1"); },
                   [&](const Complete& f) { require(f.n >= 3, spec, "need n >= 3"); },
                   [&](const CompleteWithLoops& f) { require(f.n >= 3 && f.k >= 0, spec, "need n >= 3, k >= 0"); },
                   [&](const CompleteBipartite& f) { require(f.m >= 2 && f.n >= 2, spec, "need m, n >= 2"); },
                   [&](const CocktailParty& f) {
                       require(f.order >= 4 && f.order % 2 == 0, spec, "need an even order >= 4");
                   },
                   [&](const MatchingDeleted& f) {
                       require(f.order >= 6 && f.order % 2 == 0, spec, "need an even order >= 6");
                   },
                   [&](const MobiusLadder& f) { require(f.n >= 4 && f.n % 2 == 0, spec, "need even n >= 4"); },
                   [&](const DoubleCycle& f) { require(f.m >= 1 && f.n >= 1, spec, "need m, n >= 1"); },
                   [&](const SharedPath& f) {
                       require(f.p >= 1 && f.m > f.p && f.n > f.p, spec, "need p >= 1 and m, n > p");
                   },
                   [&](const Handcuff& f) {
                       require(f.m >= 1 && f.n >= 1 && f.l >= 1, spec, "need m, n >= 1 and l >= 1");
                   },
                   [&](const Bouquet& f) { require(f.a >= 1, spec, "need a >= 1"); },
                   [&](const Dumbbell& f) {
                       require(f.a >= 0 && f.b >= 0 && f.c >= 1, spec, "need a, b >= 0 and c >= 1");
                       require(2 * f.a + f.c >= 2 && 2 * f.b + f.c >= 2, spec, "every vertex needs degree >= 2");
                   },
                   [&](const ThreeVertex& f) {
                       require(f.a1 >= 0 && f.a2 >= 0 && f.a3 >= 0 && f.b12 >= 0 && f.b13 >= 0 && f.b23 >= 0, spec,
                               "multiplicities must be non-negative");
                       int links = (f.b12 > 0) + (f.b13 > 0) + (f.b23 > 0);
                       require(links >= 2, spec, "graph must be connected");
                       require(2 * f.a1 + f.b12 + f.b13 >= 2 && 2 * f.a2 + f.b12 + f.b23 >= 2 &&
                                   2 * f.a3 + f.b13 + f.b23 >= 2,
                               spec, "every vertex needs degree >= 2");
                   },
                   [&](const NamedSmall&) {},
               },
               spec);
}

Multigraph gen_family(const FamilySpec& spec) {
    check_domain(spec);
    return std::visit(
        overloaded{
            [](const Cycle& f) {
                Multigraph g(f.n);
                int next = 1;
                add_cycle(g, cycle_through(0, f.n, next));
                return g;
            },
            [](const Complete& f) { return complement_of(f.n, {}); },
            [](const CompleteWithLoops& f) {
                Multigraph g = complement_of(f.n, {});
                for (int v = 0; v < f.n; ++v) g.add_edge(v, v, f.k);
                return g;
            },
            [](const CompleteBipartite& f) {
                Multigraph g(f.m + f.n);
                for (int a = 0; a < f.m; ++a)
                    for (int b = 0; b < f.n; ++b) g.add_edge(a, f.m + b);
                return g;
            },
            [](const CocktailParty& f) {
                const int half = f.order / 2;
                Multigraph g(f.order);
                for (int a = 0; a < f.order; ++a)
                    for (int b = a + 1; b < f.order; ++b)
                        if (b != a + half) g.add_edge(a, b);
                return g;
            },
            [](const MatchingDeleted& f) {
                const int half = f.order / 2;
                Multigraph g(f.order);
                for (int a = 0; a < half; ++a)
                    for (int b = 0; b < half; ++b)
                        if (a != b) g.add_edge(a, half + b);
                return g;
            },
            [](const MobiusLadder& f) {
                Multigraph g(f.n);
                for (int v = 0; v < f.n; ++v) g.add_edge(v, (v + 1) % f.n);
                for (int v = 0; v < f.n / 2; ++v) g.add_edge(v, v + f.n / 2);
                return g;
            },
            [](const DoubleCycle& f) {
                Multigraph g(f.m + f.n - 1);
                int next = 1;
                add_cycle(g, cycle_through(0, f.m, next));
                add_cycle(g, cycle_through(0, f.n, next));
                return g;
            },
            [](const SharedPath& f) {
                Multigraph g(f.m + f.n - f.p - 1);
                int next = 2;
                add_path(g, 0, 1, f.p, next);
                add_path(g, 0, 1, f.m - f.p, next);
                add_path(g, 0, 1, f.n - f.p, next);
                return g;
            },
            [](const Handcuff& f) {
                Multigraph g(f.m + f.n + f.l - 1);
                // vertex 0 carries C_m, vertex 1 carries C_n
                int next = 2;
                add_cycle(g, cycle_through(0, f.m, next));
                add_path(g, 0, 1, f.l, next);
                add_cycle(g, cycle_through(1, f.n, next));
                return g;
            },
            [](const Bouquet& f) {
                Multigraph g(1);
                g.add_edge(0, 0, f.a);
                return g;
            },
            [](const Dumbbell& f) {
                Multigraph g(2);
                g.add_edge(0, 0, f.a);
                g.add_edge(1, 1, f.b);
                g.add_edge(0, 1, f.c);
                return g;
            },
            [](const ThreeVertex& f) {
                Multigraph g(3);
                g.add_edge(0, 0, f.a1);
                g.add_edge(1, 1, f.a2);
                g.add_edge(2, 2, f.a3);
                g.add_edge(0, 1, f.b12);
                g.add_edge(0, 2, f.b13);
                g.add_edge(1, 2, f.b23);
                return g;
            },
            [](const NamedSmall& f) {
                switch (f.id) {
                case NamedGraph::K4Minus: return complement_of(4, {{2, 3}});
                case NamedGraph::K5Minus: return complement_of(5, {{3, 4}});
                case NamedGraph::BQ2: return gen_family(Bouquet{2});
                case NamedGraph::BL: return gen_family(Dumbbell{0, 1, 2});
                case NamedGraph::BB: return gen_family(ThreeVertex{0, 0, 0, 0, 2, 2});
                case NamedGraph::Theta: return gen_family(Dumbbell{0, 0, 3});
                case NamedGraph::Co2K2: return complement_of(5, {{0, 1}, {2, 3}});
                case NamedGraph::CoP3: return complement_of(5, {{0, 1}, {1, 2}});
                case NamedGraph::CoK3: return complement_of(5, {{0, 1}, {1, 2}, {0, 2}});
                case NamedGraph::CoP4: return complement_of(5, {{0, 1}, {1, 2}, {2, 3}});
                case NamedGraph::CoP3K2: return complement_of(5, {{0, 1}, {1, 2}, {3, 4}});
                case NamedGraph::CoP5: return complement_of(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
                case NamedGraph::CoC4: return complement_of(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
                }
                throw InputError("unknown named graph");
            },
        },
        spec);
}

IntPoly closed_form(const FamilySpec& spec) {
    check_domain(spec);
    const IntPoly one{1};
    return std::visit(
        overloaded{
            [&](const Cycle& f) { return (one - mono(1, f.n)).pow(2); },
            [&](const Complete& f) {
                const long n = f.n;
                return one_minus_u2_pow(n * (n - 3) / 2) * quad(1, 1, n - 2).pow(unsigned(n - 1)) *
                       quad(1, 1 - n, n - 2);
            },
            [&](const CompleteWithLoops& f) {
                const long n = f.n, k = f.k;
                return one_minus_u2_pow(n * (n - 3) / 2 + n * k) *
                       quad(1, 1 - 2 * k, 2 * k + n - 2).pow(unsigned(n - 1)) *
                       quad(1, -(n + 2 * k - 1), 2 * k + n - 2);
            },
            [&](const CompleteBipartite& f) {
                const long m = f.m, n = f.n;
                const IntPoly a = quad(1, 0, m - 1), b = quad(1, 0, n - 1);
                return one_minus_u2_pow(m * n - m - n) *
                       (a.pow(unsigned(n)) * b.pow(unsigned(m)) -
                        mono(m * n, 2) * a.pow(unsigned(n - 1)) * b.pow(unsigned(m - 1)));
            },
            [&](const CocktailParty& f) {
                const long n = f.order / 2;
                const IntPoly quartic{1, 2, 4 * n - 6, 4 * n - 6, (2 * n - 3) * (2 * n - 3)};
                return one_minus_u2_pow(2 * n * n - 4 * n) * quartic.pow(unsigned(n - 1)) *
                       quad(1, 0, 2 * n - 3) * quad(1, 2 - 2 * n, 2 * n - 3);
            },
            [&](const MatchingDeleted& f) {
                const long n = f.order / 2;
                const IntPoly s = quad(1, 0, n - 2).pow(2);
                return one_minus_u2_pow(n * (n - 3)) * (s - mono(1, 2)).pow(unsigned(n - 1)) *
                       (s - mono((1 - n) * (1 - n), 2));
            },
            [&](const MobiusLadder&) -> IntPoly {
                throw UnsupportedFormError(
                    "the Mobius ladder closed form is a complex product; use verify (numeric check) instead");
            },
            [&](const DoubleCycle& f) {
                const int m = f.m, n = f.n;
                return mono(-3, 2 * (m + n)) + mono(2, m + 2 * n) + mono(2, 2 * m + n) + mono(1, 2 * n) +
                       mono(1, 2 * m) + mono(-2, n) + mono(-2, m) + one;
            },
            [&](const SharedPath& f) {
                const int m = f.m, n = f.n, p = f.p;
                return mono(-4, 2 * m + 2 * n - 2 * p) + mono(1, 2 * m + 2 * n - 4 * p) +
                       mono(2, m + 2 * n - 2 * p) + mono(2, 2 * m + n - 2 * p) + mono(1, 2 * n) + mono(1, 2 * m) +
                       mono(2, m + n) + mono(-2, m + n - 2 * p) + mono(-2, n) + mono(-2, m) + one;
            },
            [&](const Handcuff& f) {
                const int m = f.m, n = f.n, l = f.l;
                return mono(-4, 2 * m + 2 * n + 2 * l) + mono(1, 2 * m + 2 * n) + mono(4, 2 * m + n + 2 * l) +
                       mono(4, m + 2 * n + 2 * l) + mono(-2, 2 * m + n) + mono(-2, m + 2 * n) +
                       mono(-4, m + n + 2 * l) + mono(4, m + n) + mono(1, 2 * n) + mono(1, 2 * m) + mono(-2, n) +
                       mono(-2, m) + one;
            },
            [&](const Bouquet& f) {
                const long a = f.a;
                return one_minus_u2_pow(a - 1) * quad(1, -2 * a, 2 * a - 1);
            },
            [&](const Dumbbell& f) {
                const long a = f.a, b = f.b, c = f.c;
                return one_minus_u2_pow(a + b + c - 2) *
                       (quad(1, -2 * a, 2 * a + c - 1) * quad(1, -2 * b, 2 * b + c - 1) - mono(c * c, 2));
            },
            [&](const ThreeVertex& f) {
                const long a1 = f.a1, a2 = f.a2, a3 = f.a3, b12 = f.b12, b13 = f.b13, b23 = f.b23;
                const IntPoly d1 = quad(1, -2 * a1, 2 * a1 + b12 + b13 - 1);
                const IntPoly d2 = quad(1, -2 * a2, 2 * a2 + b12 + b23 - 1);
                const IntPoly d3 = quad(1, -2 * a3, 2 * a3 + b13 + b23 - 1);
                const IntPoly x = mono(-b12, 1), y = mono(-b13, 1), z = mono(-b23, 1);
                // symmetric 3x3 [[d1,x,y],[x,d2,z],[y,z,d3]]
                const IntPoly det = d1 * d2 * d3 + IntPoly{0, 0, 0, 2} * BigInt(-b12 * b13 * b23) - d1 * z * z -
                                    d2 * y * y - d3 * x * x;
                return one_minus_u2_pow(a1 + a2 + a3 + b12 + b13 + b23 - 3) * det;
            },
            [&](const NamedSmall& f) { return IntPoly::parse(std::string(info(f.id).poly)); },
        },
        spec);
}

std::function<std::complex<double>(double)> mobius_closed_form(int n) {
    check_domain(MobiusLadder{n});
    return [n](double u) {
        using C = std::complex<double>;
        const double theta = 2.0 * std::numbers::pi / n;
        C prod = std::pow(1.0 - u * u, n / 2) * std::pow(u, n);
        const C a = -(1.0 + 2.0 * u * u) / u;
        for (int k = 0; k < n; ++k) {
            // omega^k + omega^{k n/2} + omega^{k(n-1)}
            const C w1 = std::polar(1.0, theta * k);
            const C w2 = std::polar(1.0, theta * ((long(k) * (n / 2)) % n));
            const C w3 = std::polar(1.0, theta * ((long(k) * (n - 1)) % n));
            prod *= a + w1 + w2 + w3;
        }
        return prod;
    };
}

std::vector<Rational> mobius_sample_points() {
    std::vector<Rational> pts;
    for (int j = 1; j <= 8; ++j) {
        Rational q(j, 24);
        q.canonicalize();
        pts.push_back(q);
    }
    return pts;
}

FamilyVerification verify_family(const FamilySpec& spec) {
    FamilyVerification out{spec, false, {}, 0.0, {}};
    const Multigraph g = gen_family(spec);
    out.engine_poly = zeta_bass(g).poly;
    if (const auto* mob = std::get_if<MobiusLadder>(&spec)) {
        out.numeric = true;
        out.sample_points = mobius_sample_points();
        const auto closed = mobius_closed_form(mob->n);
        for (const Rational& t : out.sample_points) {
            const double exact = out.engine_poly.eval(t).get_d();
            const std::complex<double> approx = closed(t.get_d());
            const double residual = std::abs(approx - exact) / std::abs(exact);
            if (!(residual <= out.worst_residual)) out.worst_residual = residual;
        }
        if (!(out.worst_residual < kMobiusTolerance))
            throw FormulaViolation(format_family(spec) + ": worst relative residual " +
                                   std::to_string(out.worst_residual) + " exceeds 1e-9");
        return out;
    }
    const IntPoly expected = closed_form(spec);
    if (expected != out.engine_poly) {
        const int top = std::max(expected.degree(), out.engine_poly.degree());
        for (int k = 0; k <= top; ++k)
            if (expected.coeff(k) != out.engine_poly.coeff(k))
                throw FormulaViolation(format_family(spec) + ": first differing coefficient u^" + std::to_string(k) +
                                       ": closed form " + expected.coeff(k).get_str() + ", engine " +
                                       out.engine_poly.coeff(k).get_str());
    }
    return out;
}

} // namespace ihara
