#pragma once

// Sparse multivariate polynomials with exact rational coefficients over the
// fixed variable slots (x, y, z).  Binary forms arising from line
// restrictions reuse the first two slots as (s, t).  Terms are kept in
// graded lexicographic order so printed reports are stable.

#include "rbd/numeric.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace rbd::fibration {

using Monomial = std::array<int, 3>;

struct GrlexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a[0] + a[1] + a[2], db = b[0] + b[1] + b[2];
        if (da != db) return da > db;
        return a > b;  // x before y before z
    }
};

class RationalPoly {
public:
    using TermMap = std::map<Monomial, Rat, GrlexDesc>;

    RationalPoly() = default;
    explicit RationalPoly(const Rat& c) {
        if (sgn(c) != 0) terms_[{0, 0, 0}] = c;
    }

    static RationalPoly variable(int v, int power = 1) {
        RationalPoly p;
        Monomial m{0, 0, 0};
        m[v] = power;
        p.terms_[m] = 1;
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void set_term(const Monomial& m, const Rat& c) {
        if (sgn(c) == 0)
            terms_.erase(m);
        else
            terms_[m] = c;
    }

    Rat coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    int total_degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m[0] + m[1] + m[2]);
        return d;  // -1 for the zero polynomial
    }

    int degree_in(int v) const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
        return is_zero() ? -1 : d;
    }

    bool is_homogeneous() const {
        if (is_zero()) return true;
        int d = total_degree();
        for (const auto& [m, c] : terms_)
            if (m[0] + m[1] + m[2] != d) return false;
        return true;
    }

    RationalPoly operator-() const {
        RationalPoly r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }
    RationalPoly operator+(const RationalPoly& o) const {
        RationalPoly r = *this;
        for (const auto& [m, c] : o.terms_) {
            Rat s = r.coeff(m) + c;
            r.set_term(m, s);
        }
        return r;
    }
    RationalPoly operator-(const RationalPoly& o) const { return *this + (-o); }
    RationalPoly operator*(const RationalPoly& o) const {
        RationalPoly r;
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) {
                Monomial m{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]};
                Rat s = r.coeff(m) + ca * cb;
                r.set_term(m, s);
            }
        return r;
    }
    RationalPoly operator*(const Rat& c) const {
        RationalPoly r;
        if (sgn(c) == 0) return r;
        r = *this;
        for (auto& [m, v] : r.terms_) v *= c;
        return r;
    }

    bool operator==(const RationalPoly& o) const { return terms_ == o.terms_; }

    Rat eval(const std::array<Rat, 3>& at) const {
        Rat s(0);
        for (const auto& [m, c] : terms_) {
            Rat t = c;
            for (int v = 0; v < 3; ++v)
                for (int e = 0; e < m[v]; ++e) t *= at[v];
            s += t;
        }
        return s;
    }

    /// Exact formal partial derivative.
    RationalPoly derivative(int v) const {
        if (v < 0 || v > 2) throw std::invalid_argument("derivative: unknown variable");
        RationalPoly r;
        for (const auto& [m, c] : terms_) {
            if (m[v] == 0) continue;
            Monomial n = m;
            n[v] -= 1;
            r.set_term(n, r.coeff(n) + c * Rat(m[v]));
        }
        return r;
    }

    /// Substitute a rational constant for one variable.
    RationalPoly substitute(int v, const Rat& value) const {
        RationalPoly r;
        for (const auto& [m, c] : terms_) {
            Rat f = c;
            for (int e = 0; e < m[v]; ++e) f *= value;
            Monomial n = m;
            n[v] = 0;
            r.set_term(n, r.coeff(n) + f);
        }
        return r;
    }

    /// Substitute polynomials for all three variables.
    RationalPoly compose(const std::array<RationalPoly, 3>& images) const {
        RationalPoly r;
        for (const auto& [m, c] : terms_) {
            RationalPoly t(Rat(1));
            for (int v = 0; v < 3; ++v)
                for (int e = 0; e < m[v]; ++e) t = t * images[v];
            r = r + t * c;
        }
        return r;
    }

    /// Multiply each term by z^(d - deg) to reach total degree d.
    RationalPoly homogenize_to(int d) const {
        RationalPoly r;
        for (const auto& [m, c] : terms_) {
            int deg = m[0] + m[1] + m[2];
            if (deg > d) throw std::invalid_argument("homogenize_to: degree too low");
            Monomial n = m;
            n[2] += d - deg;
            r.set_term(n, c);
        }
        return r;
    }

    std::string to_string(const std::array<std::string, 3>& vars = {"x", "y", "z"}) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Rat a = c;
            if (first) {
                if (sgn(a) < 0) {
                    os << "-";
                    a = -a;
                }
            } else {
                os << (sgn(a) < 0 ? " - " : " + ");
                if (sgn(a) < 0) a = -a;
            }
            first = false;
            bool has_var = m[0] + m[1] + m[2] > 0;
            if (a != 1 || !has_var) {
                os << rbd::to_string(a);
                if (has_var) os << "*";
            }
            bool star = false;
            for (int v = 0; v < 3; ++v) {
                if (m[v] == 0) continue;
                if (star) os << "*";
                os << vars[v];
                if (m[v] > 1) os << "^" << m[v];
                star = true;
            }
        }
        return os.str();
    }

private:
    TermMap terms_;
};

inline RationalPoly poly_x() { return RationalPoly::variable(0); }
inline RationalPoly poly_y() { return RationalPoly::variable(1); }
inline RationalPoly poly_z() { return RationalPoly::variable(2); }

}  // namespace rbd::fibration
