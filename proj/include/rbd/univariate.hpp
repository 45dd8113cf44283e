#pragma once

// Univariate helpers over Q used by the pencil computations: exact division,
// gcd, square-free decomposition and rational root extraction.  Coefficient
// vectors are ascending in degree.

#include "rbd/numeric.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rbd::fibration {

using UniPoly = std::vector<Rat>;  // coeffs[i] multiplies u^i

inline void uv_trim(UniPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

inline int uv_degree(const UniPoly& p) {
    for (std::size_t i = p.size(); i-- > 0;)
        if (sgn(p[i]) != 0) return static_cast<int>(i);
    return -1;
}

inline Rat uv_eval(const UniPoly& p, const Rat& u) {
    Rat s(0);
    for (std::size_t i = p.size(); i-- > 0;) s = s * u + p[i];
    return s;
}

inline UniPoly uv_derivative(const UniPoly& p) {
    UniPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(static_cast<long>(i)));
    uv_trim(d);
    return d;
}

/// Quotient and remainder of a by b over Q.
inline std::pair<UniPoly, UniPoly> uv_divmod(UniPoly a, const UniPoly& b) {
    int db = uv_degree(b);
    if (db < 0) throw std::invalid_argument("uv_divmod: division by zero polynomial");
    uv_trim(a);
    UniPoly q(a.size(), Rat(0));
    while (uv_degree(a) >= db) {
        int da = uv_degree(a);
        Rat f = a[da] / b[db];
        q[da - db] = f;
        for (int i = 0; i <= db; ++i) a[da - db + i] -= f * b[i];
        uv_trim(a);
    }
    uv_trim(q);
    return {q, a};
}

/// Monic gcd over Q.
inline UniPoly uv_gcd(UniPoly a, UniPoly b) {
    uv_trim(a);
    uv_trim(b);
    while (uv_degree(b) >= 0) {
        auto [q, r] = uv_divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    int d = uv_degree(a);
    if (d >= 0) {
        Rat lead = a[d];
        for (auto& c : a) c /= lead;
    }
    return a;
}

/// Scales to a primitive integer polynomial with positive leading coefficient.
inline std::vector<Int> uv_primitive_int(const UniPoly& p) {
    Int l(1);
    for (const auto& c : p) {
        Int num;
        mpz_lcm(num.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
        l = num;
    }
    std::vector<Int> v(p.size());
    Int content(0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        Rat s = p[i] * Rat(l);
        v[i] = s.get_num();
        content = gcd(content, v[i]);
    }
    while (!v.empty() && sgn(v.back()) == 0) v.pop_back();
    if (v.empty()) return v;
    if (content != 0)
        for (auto& c : v) c = exact_div(c, content);
    if (sgn(v.back()) < 0)
        for (auto& c : v) c = -c;
    return v;
}

inline UniPoly uv_from_int(const std::vector<Int>& v) {
    UniPoly p(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) p[i] = Rat(v[i]);
    return p;
}

/// f / gcd(f, f'), primitive integer normalized.
inline std::vector<Int> uv_squarefree_part(const UniPoly& f) {
    if (uv_degree(f) <= 0) return uv_primitive_int(f);
    UniPoly g = uv_gcd(f, uv_derivative(f));
    auto [q, r] = uv_divmod(f, g);
    if (uv_degree(r) >= 0) throw std::logic_error("uv_squarefree_part: inexact division");
    return uv_primitive_int(q);
}

/// Yun-style decomposition f = prod g_i^i (up to a constant), g_i square-free.
inline std::vector<UniPoly> uv_squarefree_decomposition(const UniPoly& f) {
    std::vector<UniPoly> out;  // out[i-1] = g_i
    if (uv_degree(f) <= 0) return out;
    UniPoly a = uv_gcd(f, uv_derivative(f));
    auto [b, r1] = uv_divmod(f, a);
    auto [c, r2] = uv_divmod(uv_derivative(f), a);
    UniPoly d = c;
    {
        UniPoly db = uv_derivative(b);
        for (std::size_t i = 0; i < d.size(); ++i) d[i] -= i < db.size() ? db[i] : Rat(0);
        uv_trim(d);
    }
    while (uv_degree(b) > 0) {
        UniPoly g = uv_gcd(b, d);
        out.push_back(g);
        auto [bn, rb] = uv_divmod(b, g);
        auto [cn, rc] = uv_divmod(d, g);
        b = std::move(bn);
        UniPoly db = uv_derivative(b);
        d = cn;
        for (std::size_t i = 0; i < d.size(); ++i) d[i] -= i < db.size() ? db[i] : Rat(0);
        uv_trim(d);
    }
    return out;
}

namespace detail {

inline std::vector<long> positive_divisors(const Int& value) {
    long v = std::labs(to_long(value));
    if (v == 0) throw std::invalid_argument("positive_divisors: zero");
    std::vector<long> out;
    for (long d = 1; d * d <= v; ++d)
        if (v % d == 0) {
            out.push_back(d);
            if (d != v / d) out.push_back(v / d);
        }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

struct RationalRoots {
    std::vector<std::pair<Rat, int>> roots;  // root, multiplicity
    UniPoly cofactor;                        // leftover with no rational roots
};

/// All rational roots with multiplicities, by the rational root bound on the
/// primitive integer form.
inline RationalRoots uv_rational_roots(UniPoly f) {
    uv_trim(f);
    RationalRoots out;
    if (uv_degree(f) <= 0) {
        out.cofactor = f;
        return out;
    }
    // Root 0 first.
    int k = 0;
    while (k < static_cast<int>(f.size()) && sgn(f[k]) == 0) ++k;
    if (k > 0) {
        out.roots.emplace_back(Rat(0), k);
        f.erase(f.begin(), f.begin() + k);
    }
    std::vector<Int> zi = uv_primitive_int(f);
    if (zi.size() <= 1) {
        out.cofactor = f;
        return out;
    }
    auto ps = detail::positive_divisors(zi.front());
    auto qs = detail::positive_divisors(zi.back());
    for (long p : ps)
        for (long q : qs) {
            if (std::gcd(p, q) != 1) continue;
            for (int s : {1, -1}) {
                Rat cand(s * p, q);
                cand.canonicalize();
                int mult = 0;
                while (uv_degree(f) > 0 && sgn(uv_eval(f, cand)) == 0) {
                    UniPoly lin{-cand, Rat(1)};
                    auto [qq, rr] = uv_divmod(f, lin);
                    if (uv_degree(rr) >= 0) throw std::logic_error("uv_rational_roots: inexact");
                    f = std::move(qq);
                    ++mult;
                }
                if (mult > 0) out.roots.emplace_back(cand, mult);
            }
        }
    std::sort(out.roots.begin(), out.roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    out.cofactor = std::move(f);
    return out;
}

}  // namespace rbd::fibration
