#include "ihara/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <json.hpp>

#include "ihara/errors.hpp"

namespace ihara {

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(const BigInt& c, int k) {
    if (k < 0) throw InputError("negative monomial exponent");
    std::vector<BigInt> v(std::size_t(k) + 1, 0);
    v[k] = c;
    return IntPoly(std::move(v));
}

void IntPoly::normalize() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

BigInt IntPoly::coeff(int k) const {
    if (k < 0 || k >= int(coeffs_.size())) return 0;
    return coeffs_[k];
}

BigInt IntPoly::leading_coeff() const { return coeffs_.empty() ? BigInt(0) : coeffs_.back(); }

int IntPoly::first_nonzero_from(int from) const {
    for (int k = std::max(from, 0); k < int(coeffs_.size()); ++k)
        if (sgn(coeffs_[k]) != 0) return k;
    return -1;
}

bool IntPoly::is_even() const {
    for (std::size_t k = 1; k < coeffs_.size(); k += 2)
        if (sgn(coeffs_[k]) != 0) return false;
    return true;
}

BigInt IntPoly::eval(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rational IntPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + Rational(*it);
        acc.canonicalize();
    }
    return acc;
}

IntPoly IntPoly::derivative(int order) const {
    if (order < 0) throw InputError("negative derivative order");
    if (order == 0) return *this;
    if (order > degree()) return {};
    std::vector<BigInt> d(coeffs_.size() - order);
    for (std::size_t k = order; k < coeffs_.size(); ++k) {
        BigInt falling = 1;
        for (int t = 0; t < order; ++t) falling *= long(k) - t;
        d[k - order] = falling * coeffs_[k];
    }
    return IntPoly(std::move(d));
}

IntPoly IntPoly::pow(unsigned exponent) const {
    IntPoly result = constant(1);
    IntPoly base = *this;
    while (exponent) {
        if (exponent & 1u) result *= base;
        exponent >>= 1u;
        if (exponent) base *= base;
    }
    return result;
}

IntPoly IntPoly::divide_exact(const IntPoly& divisor) const {
    if (divisor.is_zero()) throw ConsistencyError("polynomial division by zero");
    if (is_zero()) return {};
    if (degree() < divisor.degree()) throw ConsistencyError("inexact polynomial division");
    std::vector<BigInt> rem = coeffs_;
    const int dd = divisor.degree();
    const BigInt& lead = divisor.coeffs_.back();
    std::vector<BigInt> quot(std::size_t(degree() - dd) + 1, 0);
    for (int k = degree() - dd; k >= 0; --k) {
        BigInt& top = rem[std::size_t(k + dd)];
        if (sgn(top) == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
            throw ConsistencyError("inexact polynomial division");
        BigInt q;
        mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        for (int t = 0; t <= dd; ++t) rem[std::size_t(k + t)] -= q * divisor.coeffs_[t];
        quot[k] = std::move(q);
    }
    for (const auto& r : rem)
        if (sgn(r) != 0) throw ConsistencyError("inexact polynomial division");
    return IntPoly(std::move(quot));
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
    for (std::size_t a = 0; a < coeffs_.size(); ++a) {
        if (sgn(coeffs_[a]) == 0) continue;
        for (std::size_t b = 0; b < rhs.coeffs_.size(); ++b) out[a + b] += coeffs_[a] * rhs.coeffs_[b];
    }
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& rhs) {
    for (auto& c : coeffs_) c *= rhs;
    normalize();
    return *this;
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const BigInt& c = coeffs_[k];
        if (sgn(c) == 0) continue;
        if (first)
            out << (sgn(c) < 0 ? "-" : "");
        else
            out << (sgn(c) < 0 ? " - " : " + ");
        first = false;
        BigInt mag = abs(c);
        if (k == 0 || mag != 1) out << mag.get_str();
        if (k >= 1) out << 'u';
        if (k >= 2) out << '^' << k;
    }
    return out.str();
}

std::string IntPoly::to_json() const {
    std::string s = "{\"coeffs\":[";
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (k) s += ',';
        s += '"' + coeffs_[k].get_str() + '"';
    }
    return s + "]}";
}

IntPoly IntPoly::from_json(const std::string& json) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed polynomial JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
        throw InputError("polynomial JSON needs a \"coeffs\" array");
    std::vector<BigInt> c;
    for (const auto& v : j["coeffs"]) {
        if (!v.is_string()) throw InputError("polynomial coefficients must be decimal strings");
        BigInt x;
        if (x.set_str(v.get<std::string>(), 10) != 0) throw InputError("bad coefficient: " + v.dump());
        c.push_back(std::move(x));
    }
    return IntPoly(std::move(c));
}

IntPoly IntPoly::parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw InputError("empty polynomial");
    if (s == "0") return {};
    IntPoly result;
    std::size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (i != 0) {
            throw InputError("expected sign in polynomial: " + text);
        }
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        BigInt c = 1;
        bool has_digits = j > i;
        if (has_digits) c = BigInt(s.substr(i, j - i));
        int k = 0;
        if (j < s.size() && s[j] == 'u') {
            ++j;
            k = 1;
            if (j < s.size() && s[j] == '^') {
                std::size_t e = ++j;
                while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
                if (j == e) throw InputError("missing exponent in polynomial: " + text);
                k = std::stoi(s.substr(e, j - e));
            }
        } else if (!has_digits) {
            throw InputError("malformed polynomial term: " + text);
        }
        result += monomial(sign * c, k);
        i = j;
    }
    return result;
}

BigInt det_bareiss(BigIntMatrix m) {
    const std::size_t n = m.dim();
    if (n == 0) return 1;
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(m(k, k)) == 0) {
            std::size_t r = k + 1;
            while (r < n && sgn(m(r, k)) == 0) ++r;
            if (r == n) return 0;
            m.swap_rows(k, r);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

std::vector<BigInt> interpolation_points(int count) {
    std::vector<BigInt> pts;
    pts.reserve(std::max(count, 0));
    for (int i = 0; int(pts.size()) < count; ++i) {
        if (i == 0) {
            pts.emplace_back(0);
        } else {
            pts.emplace_back(i);
            if (int(pts.size()) < count) pts.emplace_back(-i);
        }
    }
    return pts;
}

IntPoly interpolate_integer(const std::vector<BigInt>& points, const std::vector<BigInt>& values) {
    if (points.size() != values.size()) throw InputError("interpolation needs one value per point");
    const std::size_t n = points.size();
    if (n == 0) return {};
    // Newton divided differences.
    std::vector<Rational> dd(values.begin(), values.end());
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / Rational(points[i] - points[i - level]);
            dd[i].canonicalize();
        }
    // Expand the Newton form by Horner's scheme.
    std::vector<Rational> p{dd[n - 1]};
    for (std::size_t i = n - 1; i-- > 0;) {
        std::vector<Rational> next(p.size() + 1, 0);
        for (std::size_t k = 0; k < p.size(); ++k) {
            next[k + 1] += p[k];
            next[k] -= p[k] * Rational(points[i]);
        }
        next[0] += dd[i];
        p = std::move(next);
    }
    std::vector<BigInt> coeffs;
    coeffs.reserve(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) {
        p[k].canonicalize();
        if (p[k].get_den() != 1)
            throw ConsistencyError("interpolated coefficient of u^" + std::to_string(k) +
                                   " is not an integer: " + p[k].get_str());
        coeffs.push_back(p[k].get_num());
    }
    return IntPoly(std::move(coeffs));
}

namespace {

BigIntMatrix evaluate_matrix(const PolyMatrix& m, const BigInt& x) {
    BigIntMatrix e(m.dim(), 0);
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) e(i, j) = m(i, j).eval(x);
    return e;
}

IntPoly det_evaluation_interpolation(const PolyMatrix& m, int degree_bound) {
    // One extra point certifies the degree bound.
    auto pts = interpolation_points(degree_bound + 2);
    std::vector<BigInt> vals;
    vals.reserve(pts.size());
    for (const auto& x : pts) vals.push_back(det_bareiss(evaluate_matrix(m, x)));
    const BigInt check_point = pts.back();
    const BigInt check_value = vals.back();
    pts.pop_back();
    vals.pop_back();
    IntPoly det = interpolate_integer(pts, vals);
    if (det.eval(check_point) != check_value)
        throw ConsistencyError("determinant degree exceeds the supplied bound " + std::to_string(degree_bound));
    return det;
}

IntPoly det_fraction_free(PolyMatrix m) {
    const std::size_t n = m.dim();
    if (n == 0) return IntPoly::constant(1);
    int sign = 1;
    IntPoly prev = IntPoly::constant(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m(r, k).is_zero()) ++r;
            if (r == n) return {};
            m.swap_rows(k, r);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)).divide_exact(prev);
            m(i, k) = IntPoly{};
        }
        prev = m(k, k);
    }
    return sign < 0 ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

} // namespace

IntPoly det_poly_matrix(const PolyMatrix& m, int degree_bound, DetStrategy strategy) {
    if (degree_bound < 0) throw InputError("negative degree bound");
    switch (strategy) {
    case DetStrategy::EvaluationInterpolation:
        return det_evaluation_interpolation(m, degree_bound);
    case DetStrategy::FractionFree: {
        IntPoly det = det_fraction_free(m);
        if (det.degree() > degree_bound)
            throw ConsistencyError("determinant degree exceeds the supplied bound " + std::to_string(degree_bound));
        return det;
    }
    }
    throw InputError("unknown determinant strategy");
}

} // namespace ihara
