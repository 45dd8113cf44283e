#pragma once

// SL(2,Z) monodromy words, Euler-characteristic bookkeeping for singular
// fibers, and the exact pencil-singularity and base-point computations over
// the rationals.

#include "rbd/numeric.hpp"
#include "rbd/poly.hpp"
#include "rbd/univariate.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rbd::fibration {

// --- monodromy --------------------------------------------------------------

struct Mat2 {
    std::array<std::array<Int, 2>, 2> a{};

    static Mat2 identity() {
        Mat2 m;
        m.a[0][0] = 1;
        m.a[1][1] = 1;
        return m;
    }

    static Mat2 of(long a00, long a01, long a10, long a11) {
        Mat2 m;
        m.a[0][0] = a00;
        m.a[0][1] = a01;
        m.a[1][0] = a10;
        m.a[1][1] = a11;
        return m;
    }

    Int det() const { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }

    Mat2 operator*(const Mat2& o) const {
        Mat2 r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                r.a[i][j] = a[i][0] * o.a[0][j] + a[i][1] * o.a[1][j];
        return r;
    }
    bool operator==(const Mat2& o) const { return a == o.a; }

    /// Inverse of a determinant-1 matrix.
    Mat2 inverse() const {
        if (det() != 1) throw std::invalid_argument("Mat2::inverse: determinant != 1");
        Mat2 m;
        m.a[0][0] = a[1][1];
        m.a[0][1] = -a[0][1];
        m.a[1][0] = -a[1][0];
        m.a[1][1] = a[0][0];
        return m;
    }
};

using MonodromyWord = std::vector<Mat2>;

/// Exact ordered product; every factor must have determinant 1.
inline Mat2 word_product(const MonodromyWord& w) {
    Mat2 p = Mat2::identity();
    for (const auto& m : w) {
        if (m.det() != 1) throw std::invalid_argument("word_product: factor determinant != 1");
        p = p * m;
    }
    return p;
}

// --- fiber Euler characteristics --------------------------------------------

struct FiberDescriptor {
    enum class Kind { tree_of_spheres, fishtail };
    Kind kind = Kind::tree_of_spheres;
    int vertices = 0;  // sphere components (tree kind)
    int edges = 0;     // plumbing intersections (tree kind)
};

/// Tree of spheres: 2V - E; fishtail (nodal sphere): 1.
inline int fiber_euler(const FiberDescriptor& f) {
    switch (f.kind) {
        case FiberDescriptor::Kind::fishtail:
            return 1;
        case FiberDescriptor::Kind::tree_of_spheres:
            if (f.vertices < 1 || f.edges != f.vertices - 1)
                throw std::invalid_argument("fiber_euler: malformed tree");
            return 2 * f.vertices - f.edges;
    }
    throw std::invalid_argument("fiber_euler: unknown descriptor");
}

// --- formal derivatives -------------------------------------------------------

inline RationalPoly poly_derivative(const RationalPoly& p, int var) {
    return p.derivative(var);
}

// --- linear factorization of binary forms ------------------------------------

struct LineComponent {
    std::array<Int, 3> form;  // alpha x + beta y + gamma z, primitive
    int multiplicity = 1;
};

namespace detail {

inline std::array<Int, 3> normalize_triple(std::array<Int, 3> v) {
    Int content = gcd(gcd(v[0], v[1]), v[2]);
    if (sgn(content) != 0)
        for (auto& c : v) c = exact_div(c, content);
    for (const auto& c : v) {
        if (sgn(c) == 0) continue;
        if (sgn(c) < 0)
            for (auto& x : v) x = -x;
        break;
    }
    return v;
}

/// Factors a homogeneous form depending on at most two of the variables into
/// rational linear components; empty result means the split failed.
inline std::optional<std::vector<LineComponent>> factor_linear(const RationalPoly& p) {
    if (p.is_zero() || !p.is_homogeneous()) return std::nullopt;
    int va = -1, vb = -1;
    for (int v = 0; v < 3; ++v)
        if (p.degree_in(v) > 0) {
            if (va < 0)
                va = v;
            else if (vb < 0)
                vb = v;
            else
                return std::nullopt;  // genuinely ternary: unsupported
        }
    std::vector<LineComponent> out;
    int d = p.total_degree();
    if (d == 0) return out;
    if (va < 0) return std::nullopt;
    if (vb < 0) {
        // A power of a single variable.
        std::array<Int, 3> f{0, 0, 0};
        f[va] = 1;
        out.push_back({f, d});
        return out;
    }
    // Binary form in (va, vb): q = va^a vb^b r, then factor r(u, 1) with
    // u = va/vb by rational roots.
    int a = p.total_degree(), b = p.total_degree();
    for (const auto& [m, c] : p.terms()) {
        a = std::min(a, m[va]);
        b = std::min(b, m[vb]);
    }
    if (a > 0) {
        std::array<Int, 3> f{0, 0, 0};
        f[va] = 1;
        out.push_back({f, a});
    }
    if (b > 0) {
        std::array<Int, 3> f{0, 0, 0};
        f[vb] = 1;
        out.push_back({f, b});
    }
    UniPoly r(static_cast<std::size_t>(d - a - b) + 1, Rat(0));
    for (const auto& [m, c] : p.terms()) r[m[va] - a] = c;
    if (uv_degree(r) != d - a - b) return std::nullopt;
    auto roots = uv_rational_roots(r);
    if (uv_degree(roots.cofactor) > 0) return std::nullopt;  // irrational component
    for (const auto& [u, mult] : roots.roots) {
        // root u = num/den gives the component den*va - num*vb.
        std::array<Int, 3> f{0, 0, 0};
        f[va] = u.get_den();
        f[vb] = -u.get_num();
        out.push_back({normalize_triple(f), mult});
    }
    return out;
}

/// Two deterministic rational points spanning the line alpha x + beta y +
/// gamma z = 0.
inline std::pair<std::array<Int, 3>, std::array<Int, 3>> span_points(
    const std::array<Int, 3>& l) {
    const Int &al = l[0], &be = l[1], &ga = l[2];
    if (sgn(be) != 0) return {{be, -al, Int(0)}, {Int(0), -ga, be}};
    if (sgn(al) != 0) return {{Int(0), Int(1), Int(0)}, {-ga, Int(0), al}};
    if (sgn(ga) != 0) return {{Int(1), Int(0), Int(0)}, {Int(0), Int(1), Int(0)}};
    throw std::invalid_argument("span_points: zero line");
}

}  // namespace detail

// --- pencil singular members --------------------------------------------------

struct PencilReport {
    bool t2_zero_singular = false;
    std::string t2_zero_reason;              // "non-reduced component" | "reducible" | "smooth"
    RationalPoly m00, m01, m10, m11;         // y=0 branch coefficient matrix
    RationalPoly determinant;                // univariate in x
    RationalPoly square_free;                // primitive integer, positive leading
    int distinct_roots = 0;
    std::vector<Rat> rational_roots;
    std::vector<std::pair<RationalPoly, int>> irrational_factors;  // factor, root count
    std::vector<std::array<Int, 2>> members;  // rational singular members (t1 : t2)
    int singular_member_count = 0;
};

namespace detail {

inline RationalPoly from_univariate(const UniPoly& f, int var) {
    RationalPoly p;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (sgn(f[i]) == 0) continue;
        Monomial m{0, 0, 0};
        m[var] = static_cast<int>(i);
        p.set_term(m, f[i]);
    }
    return p;
}

inline UniPoly to_univariate(const RationalPoly& p, int var) {
    for (int v = 0; v < 3; ++v)
        if (v != var && p.degree_in(v) > 0)
            throw std::invalid_argument("to_univariate: polynomial not univariate");
    UniPoly f(static_cast<std::size_t>(std::max(p.degree_in(var), 0)) + 1, Rat(0));
    for (const auto& [m, c] : p.terms()) f[m[var]] = c;
    uv_trim(f);
    return f;
}

inline std::array<Int, 2> normalize_pair(std::array<Int, 2> v) {
    Int content = gcd(v[0], v[1]);
    if (sgn(content) != 0)
        for (auto& c : v) c = exact_div(c, content);
    if (sgn(v[0]) < 0 || (sgn(v[0]) == 0 && sgn(v[1]) < 0))
        for (auto& c : v) c = -c;
    return v;
}

}  // namespace detail

/// Singular members of the pencil t1 p1 + t2 p2 for the supported
/// elimination shape: p1 independent of y and d(p_t)/dy = t2 c y.  Inputs
/// may be affine or homogeneous; the t2 = 0 member is judged on the
/// homogenization to the common degree.
inline PencilReport pencil_singular_members(const RationalPoly& p1_in,
                                            const RationalPoly& p2_in) {
    if (p1_in.is_zero() || p2_in.is_zero())
        throw std::invalid_argument("pencil_singular_members: zero polynomial");
    const int d = std::max(p1_in.total_degree(), p2_in.total_degree());
    RationalPoly p1h = p1_in.homogenize_to(d);
    RationalPoly p1 = p1_in.substitute(2, Rat(1));
    RationalPoly p2 = p2_in.substitute(2, Rat(1));
    if (p1.degree_in(1) > 0)
        throw std::invalid_argument("pencil_singular_members: unsupported pencil (p1 depends on y)");
    RationalPoly dy = p2.derivative(1);
    // The y-derivative of the pencil must be t2 * c * y.
    bool shape_ok = !dy.is_zero();
    for (const auto& [m, c] : dy.terms())
        if (m != Monomial{0, 1, 0}) shape_ok = false;
    if (!shape_ok)
        throw std::invalid_argument(
            "pencil_singular_members: unsupported pencil (dp/dy not proportional to y)");

    PencilReport rep;

    // (a) The t2 = 0 member: a y-free form of degree >= 2 is a union of
    // lines through [0:1:0], hence singular; non-reduced when not
    // square-free.
    if (d <= 1) {
        rep.t2_zero_singular = false;
        rep.t2_zero_reason = "smooth";
    } else {
        rep.t2_zero_singular = true;
        UniPoly f = detail::to_univariate(p1h.substitute(1, Rat(1)).substitute(2, Rat(1)), 0);
        // Square-free over the binary form <=> square-free dehomogenizations
        // in both charts; checking total multiplicity via degree drop.
        UniPoly g;
        {
            // combine the x-chart and z-chart checks: use gcd(f, f') plus the
            // monomial content in each variable of p1h
            g = uv_gcd(f, uv_derivative(f));
        }
        int min_x = d, min_z = d;
        for (const auto& [m, c] : p1h.terms()) {
            min_x = std::min(min_x, m[0]);
            min_z = std::min(min_z, m[2]);
        }
        bool nonreduced = uv_degree(g) > 0 || min_x >= 2 || min_z >= 2;
        rep.t2_zero_reason = nonreduced ? "non-reduced component" : "reducible";
    }

    // (b) The y = 0 branch and its 2x2 coefficient matrix.
    RationalPoly zero_y1 = p1.substitute(1, Rat(0));
    RationalPoly zero_y2 = p2.substitute(1, Rat(0));
    rep.m00 = zero_y1;
    rep.m01 = zero_y2;
    rep.m10 = p1.derivative(0).substitute(1, Rat(0));
    rep.m11 = p2.derivative(0).substitute(1, Rat(0));
    rep.determinant = rep.m00 * rep.m11 - rep.m01 * rep.m10;
    if (rep.determinant.is_zero())
        throw std::invalid_argument("pencil_singular_members: degenerate pencil (zero determinant)");

    // (c, d) Determinant roots, exactly.
    UniPoly det_u = detail::to_univariate(rep.determinant, 0);
    std::vector<Int> sf = uv_squarefree_part(det_u);
    rep.square_free = detail::from_univariate(uv_from_int(sf), 0);
    rep.distinct_roots = static_cast<int>(sf.size()) - 1;
    auto roots = uv_rational_roots(uv_from_int(sf));
    for (const auto& [r, mult] : roots.roots) rep.rational_roots.push_back(r);
    if (uv_degree(roots.cofactor) > 0) {
        std::vector<Int> left = uv_primitive_int(roots.cofactor);
        rep.irrational_factors.emplace_back(detail::from_univariate(uv_from_int(left), 0),
                                            static_cast<int>(left.size()) - 1);
    }

    // (e) Members.  Each determinant root carries a rational or conjugate
    // (t1 : t2); the kernel of the coefficient matrix at the root gives it
    // for rational roots.
    if (rep.t2_zero_singular) rep.members.push_back({Int(1), Int(0)});
    int member_count = rep.t2_zero_singular ? 1 : 0;
    for (const Rat& r : rep.rational_roots) {
        Rat a = rep.m00.eval({r, Rat(0), Rat(0)});
        Rat b = rep.m01.eval({r, Rat(0), Rat(0)});
        if (sgn(a) == 0 && sgn(b) == 0) {
            a = rep.m10.eval({r, Rat(0), Rat(0)});
            b = rep.m11.eval({r, Rat(0), Rat(0)});
        }
        if (sgn(a) == 0 && sgn(b) == 0)
            throw std::invalid_argument("pencil_singular_members: degenerate member system");
        // (t1, t2) spans the kernel of [a b].
        Rat t1 = -b, t2 = a;
        Int l;
        mpz_lcm(l.get_mpz_t(), t1.get_den().get_mpz_t(), t2.get_den().get_mpz_t());
        Rat s1 = t1 * Rat(l), s2 = t2 * Rat(l);
        std::array<Int, 2> m{s1.get_num(), s2.get_num()};
        m = detail::normalize_pair(m);
        bool seen = false;
        for (const auto& prev : rep.members) seen = seen || prev == m;
        if (!seen) {
            rep.members.push_back(m);
            ++member_count;
        }
    }
    for (const auto& [f, count] : rep.irrational_factors) member_count += count;
    rep.singular_member_count = member_count;
    return rep;
}

// --- base points ---------------------------------------------------------------

struct BasePointsReport {
    struct ConjugateGroup {
        std::array<Int, 3> line;  // the p1 component carrying the group
        RationalPoly factor;      // binary form in the line parameters (s, t)
        int count = 0;            // number of conjugate points
        Int multiplicity;         // per point
    };
    std::vector<std::pair<std::array<Int, 3>, Int>> rational_points;  // point, multiplicity
    std::vector<ConjugateGroup> conjugate_groups;
    Int total;  // sum of all multiplicities, = d^2

    std::vector<Int> multiplicities() const {
        std::vector<Int> out;
        for (const auto& [p, m] : rational_points) out.push_back(m);
        for (const auto& g : conjugate_groups)
            for (int i = 0; i < g.count; ++i) out.push_back(g.multiplicity);
        std::sort(out.begin(), out.end(), [](const Int& a, const Int& b) { return a > b; });
        return out;
    }
};

/// Intersection points of two equal-degree curves where the first factors
/// into rational lines: per-component univariate restriction with exact root
/// multiplicities; component multiplicities multiply and the total is d^2.
inline BasePointsReport base_points(const RationalPoly& p1, const RationalPoly& p2) {
    if (p1.is_zero() || p2.is_zero()) throw std::invalid_argument("base_points: zero polynomial");
    if (!p1.is_homogeneous() || !p2.is_homogeneous())
        throw std::invalid_argument("base_points: inputs must be homogeneous");
    const int d = p1.total_degree();
    if (p2.total_degree() != d)
        throw std::invalid_argument("base_points: inputs must have equal degree");
    auto comps = detail::factor_linear(p1);
    if (!comps)
        throw std::invalid_argument("base_points: p1 does not split into rational lines");

    BasePointsReport rep;
    rep.total = 0;
    std::vector<std::pair<std::array<Int, 3>, Int>> points;  // accumulated rational points

    auto add_point = [&](std::array<Int, 3> pt, const Int& mult) {
        pt = detail::normalize_triple(pt);
        for (auto& [p, m] : points)
            if (p == pt) {
                m += mult;
                return;
            }
        points.emplace_back(pt, mult);
    };

    for (const auto& comp : *comps) {
        auto [P0, P1] = detail::span_points(comp.form);
        std::array<RationalPoly, 3> images;
        for (int v = 0; v < 3; ++v) {
            RationalPoly lin;
            lin.set_term(Monomial{1, 0, 0}, Rat(P0[v]));  // s-slot
            lin.set_term(Monomial{0, 1, 0}, Rat(P1[v]));  // t-slot
            images[v] = lin;
        }
        RationalPoly q = p2.compose(images);  // binary form in (s, t)
        if (q.is_zero())
            throw std::invalid_argument("base_points: shared positive-dimensional component");
        // Monomial factors: s^a vanishes at P1, t^b at P0.
        int a = d, b = d;
        for (const auto& [m, c] : q.terms()) {
            a = std::min(a, m[0]);
            b = std::min(b, m[1]);
        }
        Int cm(comp.multiplicity);
        if (a > 0) add_point(P1, cm * a);
        if (b > 0) add_point(P0, cm * b);
        UniPoly r(static_cast<std::size_t>(d - a - b) + 1, Rat(0));
        for (const auto& [m, c] : q.terms()) r[m[0] - a] = c;
        auto roots = uv_rational_roots(r);
        for (const auto& [u, mult] : roots.roots) {
            // (s : t) = (num : den) gives the point num*P0 + den*P1.
            std::array<Int, 3> pt;
            for (int v = 0; v < 3; ++v) pt[v] = u.get_num() * P0[v] + u.get_den() * P1[v];
            add_point(pt, cm * mult);
        }
        if (uv_degree(roots.cofactor) > 0) {
            // Group conjugate points by multiplicity via square-free structure.
            auto pieces = uv_squarefree_decomposition(roots.cofactor);
            for (std::size_t i = 0; i < pieces.size(); ++i) {
                int deg = uv_degree(pieces[i]);
                if (deg <= 0) continue;
                std::vector<Int> prim = uv_primitive_int(pieces[i]);
                // Rebuild the binary form g(s/t) t^deg for the report.
                RationalPoly form;
                for (std::size_t k = 0; k < prim.size(); ++k) {
                    if (sgn(prim[k]) == 0) continue;
                    form.set_term(Monomial{static_cast<int>(k), deg - static_cast<int>(k), 0},
                                  Rat(prim[k]));
                }
                rep.conjugate_groups.push_back(
                    {comp.form, form, deg, cm * Int(static_cast<long>(i + 1))});
            }
        }
    }
    rep.rational_points = std::move(points);
    for (const auto& [p, m] : rep.rational_points) rep.total += m;
    for (const auto& g : rep.conjugate_groups) rep.total += Int(g.count) * g.multiplicity;
    if (rep.total != Int(d) * Int(d))
        throw std::logic_error("base_points: multiplicities do not sum to d^2");
    return rep;
}

}  // namespace rbd::fibration
