#pragma once

// Exact intersection-form arithmetic in the odd unimodular lattice of a
// blown-up projective plane: the diagonal form <1> + n<-1> on the basis
// h, e_1, ..., e_n.  Everything here is pure value semantics.

#include "rbd/intmat.hpp"
#include "rbd/numeric.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rbd::lattice {

/// Rank-(1+n) lattice with pairing h.h = +1, e_i.e_i = -1, mixed 0.
struct AmbientLattice {
    std::size_t n = 0;  // number of exceptional generators

    std::size_t rank() const { return 1 + n; }
    bool operator==(const AmbientLattice&) const = default;

    std::string basis_label(std::size_t i) const {
        return i == 0 ? "h" : "e" + std::to_string(i);
    }
};

/// Integer homology class; coeffs[0] is the h-coefficient.
struct HomologyClass {
    AmbientLattice ambient;
    std::vector<Int> coeffs;

    HomologyClass() = default;
    HomologyClass(AmbientLattice amb, std::vector<Int> c)
        : ambient(amb), coeffs(std::move(c)) {
        if (coeffs.size() != ambient.rank())
            throw std::invalid_argument("HomologyClass: coefficient count != 1+n");
    }

    bool operator==(const HomologyClass&) const = default;

    HomologyClass operator+(const HomologyClass& o) const {
        require_same_ambient(o);
        HomologyClass r = *this;
        for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] += o.coeffs[i];
        return r;
    }
    HomologyClass operator-() const {
        HomologyClass r = *this;
        for (auto& c : r.coeffs) c = -c;
        return r;
    }
    HomologyClass operator-(const HomologyClass& o) const { return *this + (-o); }

    void require_same_ambient(const HomologyClass& o) const {
        if (ambient != o.ambient)
            throw std::invalid_argument("HomologyClass: ambient lattice mismatch");
    }
};

inline HomologyClass make_class(const AmbientLattice& amb, std::vector<long> c) {
    std::vector<Int> v(c.begin(), c.end());
    return HomologyClass(amb, std::move(v));
}

/// h generator.
inline HomologyClass h_class(const AmbientLattice& amb) {
    std::vector<Int> c(amb.rank());
    c[0] = 1;
    return HomologyClass(amb, std::move(c));
}

/// i-th exceptional generator (1-based).
inline HomologyClass e_class(const AmbientLattice& amb, std::size_t i) {
    if (i < 1 || i > amb.n) throw std::invalid_argument("e_class: index out of range");
    std::vector<Int> c(amb.rank());
    c[i] = 1;
    return HomologyClass(amb, std::move(c));
}

/// Intersection pairing a.b = a_h b_h - sum a_i b_i.
inline Int pair(const HomologyClass& a, const HomologyClass& b) {
    a.require_same_ambient(b);
    Int s = a.coeffs[0] * b.coeffs[0];
    for (std::size_t i = 1; i < a.coeffs.size(); ++i) s -= a.coeffs[i] * b.coeffs[i];
    return s;
}

inline Int square(const HomologyClass& a) { return pair(a, a); }

/// Characteristic means pair(k, x) == pair(x, x) mod 2 for all x; since
/// the form is diagonal with odd diagonal, this holds iff every
/// coordinate of k is odd (checking on a basis suffices by linearity of
/// both sides mod 2).
inline bool is_characteristic(const HomologyClass& k) {
    for (const Int& c : k.coeffs)
        if (!is_odd(c)) return false;
    return true;
}

using GramMatrix = IntMat;

/// Symmetric matrix of pairwise pairings.
inline GramMatrix gram(const std::vector<HomologyClass>& classes) {
    for (std::size_t i = 1; i < classes.size(); ++i)
        classes[0].require_same_ambient(classes[i]);
    GramMatrix g(classes.size(), classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i) {
        g(i, i) = pair(classes[i], classes[i]);
        for (std::size_t j = i + 1; j < classes.size(); ++j) {
            g(i, j) = pair(classes[i], classes[j]);
            g(j, i) = g(i, j);
        }
    }
    return g;
}

/// Canonical integer basis of {x : x.c = 0 for all c in classes}
/// (echelon-reduced rows, positive leading pivots).
inline std::vector<HomologyClass> orthogonal_complement(
    const std::vector<HomologyClass>& classes, const AmbientLattice& amb) {
    const std::size_t r = amb.rank();
    for (const auto& c : classes)
        if (c.ambient != amb)
            throw std::invalid_argument("orthogonal_complement: ambient mismatch");
    // pair(x, c) = sum_j x_j * (D c)_j with D = diag(1, -1, ..., -1), so the
    // complement is the integer kernel of the matrix with rows D c.
    IntMat a(classes.size(), r);
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = 0; j < r; ++j)
            a(i, j) = j == 0 ? classes[i].coeffs[j] : Int(-classes[i].coeffs[j]);
    IntMat k = kernel_basis(a);
    std::vector<HomologyClass> basis;
    basis.reserve(k.rows());
    for (std::size_t i = 0; i < k.rows(); ++i) {
        std::vector<Int> v(r);
        for (std::size_t j = 0; j < r; ++j) v[j] = k(i, j);
        basis.emplace_back(amb, std::move(v));
    }
    return basis;
}

/// Invariant factors of the cokernel, ascending, 1-entries included
/// (zeros appear for singular input).
inline std::vector<Int> smith_invariants(const GramMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("smith_invariants: matrix not square");
    auto snf = smith_normal_form(m);
    std::vector<Int> factors = snf.diagonal;
    // SNF already yields ascending divisibility with zeros last; nonzero
    // entries are normalized positive.
    return factors;
}

// --- characteristic-vector normalization -----------------------------------

/// One reflection certificate entry: the lattice vector reflected along.
using ReflectionMove = HomologyClass;

struct ReflectResult {
    HomologyClass normalized;
    std::vector<ReflectionMove> moves;  // replayable, in application order
};

/// Reflection x -> x - 2 (x.v)/(v.v) v; integral whenever v.v divides 2(x.v),
/// which holds for all vectors of square +-1 and +-2.
inline HomologyClass reflect(const HomologyClass& x, const HomologyClass& v) {
    Int vv = square(v);
    if (sgn(vv) == 0) throw std::invalid_argument("reflect: isotropic vector");
    Int t = 2 * pair(x, v);
    if (!divisible(t, vv)) throw std::invalid_argument("reflect: non-integral reflection");
    Int f = exact_div(t, vv);
    HomologyClass r = x;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] -= f * v.coeffs[i];
    return r;
}

inline HomologyClass replay_moves(HomologyClass x, const std::vector<ReflectionMove>& moves) {
    for (const auto& v : moves) x = reflect(x, v);
    return x;
}

inline HomologyClass canonical_characteristic(const AmbientLattice& amb) {
    std::vector<Int> c(amb.rank(), Int(-1));
    c[0] = 3;
    return HomologyClass(amb, std::move(c));
}

/// Normalizes a characteristic class of square 9-n to 3h - e_1 - ... - e_n by
/// reflections along h, e_i, h-e_i-e_j and h-e_i-e_j-e_k, resolving the sign
/// ambiguity toward positive h-coefficient.  Throws on a non-characteristic
/// input or wrong square; returns nothing if the move budget is exhausted
/// (possible outside the range n <= 8 where the descent provably terminates).
inline std::optional<ReflectResult> reflect_normalize(const HomologyClass& k,
                                                      std::size_t move_budget = 100000) {
    const AmbientLattice amb = k.ambient;
    const std::size_t n = amb.n;
    if (!is_characteristic(k)) throw std::invalid_argument("reflect_normalize: not characteristic");
    if (square(k) != Int(9) - Int(n))
        throw std::invalid_argument("reflect_normalize: square != 9-n");

    const HomologyClass target = canonical_characteristic(amb);
    ReflectResult res{k, {}};
    auto apply = [&](const HomologyClass& v) {
        res.normalized = reflect(res.normalized, v);
        res.moves.push_back(v);
    };

    for (;;) {
        if (res.normalized == target) return res;
        if (res.moves.size() >= move_budget) return std::nullopt;
        const auto& c = res.normalized.coeffs;
        // Search order: square 1 (h), square -1 (e_i, then h-e_i-e_j),
        // square -2 degree-3 classes last.
        if (sgn(c[0]) < 0) {
            apply(h_class(amb));
            continue;
        }
        std::size_t pos = 0;
        for (std::size_t i = 1; i <= n; ++i)
            if (sgn(c[i]) > 0) {
                pos = i;
                break;
            }
        if (pos != 0) {
            apply(e_class(amb, pos));
            continue;
        }
        // Now a = c[0] > 0 and all e-coefficients negative (odd, so nonzero).
        // With b_i = -c_i >= 1, descend on |a| along the largest b's:
        // first try h - e_i - e_j, then h - e_i - e_j - e_k.  For a
        // characteristic class of square 9-n with n <= 8 one of the two
        // always strictly decreases |a|, and a = 3 forces the normal form.
        std::size_t i1 = 0, i2 = 0, i3 = 0;
        for (std::size_t i = 1; i <= n; ++i) {
            Int b = -c[i];
            if (i1 == 0 || b > -c[i1]) {
                i3 = i2;
                i2 = i1;
                i1 = i;
            } else if (i2 == 0 || b > -c[i2]) {
                i3 = i2;
                i2 = i;
            } else if (i3 == 0 || b > -c[i3]) {
                i3 = i;
            }
        }
        if (i2 != 0) {
            // x -> x + 2t'(h-e_i-e_j) with t' = a - b_i - b_j shrinks |a|
            // exactly when -a < t' < 0.
            Int t2 = c[0] + c[i1] + c[i2];
            if (sgn(t2) < 0 && -t2 < c[0]) {
                apply(h_class(amb) - e_class(amb, i1) - e_class(amb, i2));
                continue;
            }
        }
        if (i3 != 0) {
            // x -> x + t(h-e_i-e_j-e_k) with t = a - b_i - b_j - b_k shrinks
            // |a| exactly when -2a < t < 0.
            Int t3 = c[0] + c[i1] + c[i2] + c[i3];
            if (sgn(t3) < 0 && -t3 < 2 * c[0]) {
                apply(h_class(amb) - e_class(amb, i1) - e_class(amb, i2) - e_class(amb, i3));
                continue;
            }
        }
        return std::nullopt;  // descent stuck; report rather than loop
    }
}

}  // namespace rbd::lattice
