#pragma once

// Shared test data: the x1 configuration in CP^2 # 17 CP^2-bar, its
// complement basis A_1..A_7, the period class alpha, and a few independent
// oracles kept deliberately naive.

#include "rbd/lattice.hpp"
#include "rbd/plumbing.hpp"
#include "rbd/rationalmat.hpp"

#include <random>
#include <vector>

namespace fixtures {

using rbd::Int;
using rbd::Rat;
using rbd::lattice::AmbientLattice;
using rbd::lattice::HomologyClass;
using rbd::lattice::make_class;

inline AmbientLattice x1_ambient() { return AmbientLattice{17}; }

inline std::vector<HomologyClass> x1_classes() {
    AmbientLattice amb = x1_ambient();
    auto C = [&](std::vector<long> v) { return make_class(amb, std::move(v)); };
    return {
        C({0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1}),
        C({0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, -1, 0}),
        C({9, -2, -3, -3, -3, -3, -3, -3, -3, -3, -2, -2, -2, -1, -1, -1, -1, -1}),
        C({1, -1, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}),
        C({0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}),
        C({0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}),
        C({0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}),
        C({0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}),
        C({0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0}),
        C({0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0}),
        C({0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, -1, -1, -1, 0, 0}),
    };
}

/// Variant of the third class with its e2 term dropped (a transcription
/// slip the verifier must catch).
inline HomologyClass x1_third_class_missing_e2() {
    return make_class(x1_ambient(),
                      {9, -2, 0, -3, -3, -3, -3, -3, -3, -3, -2, -2, -2, -1, -1, -1, -1, -1});
}

inline std::vector<HomologyClass> x1_a_basis() {
    AmbientLattice amb = x1_ambient();
    auto C = [&](std::vector<long> v) { return make_class(amb, std::move(v)); };
    return {
        C({0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0}),
        C({0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0}),
        C({0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0}),
        C({3, -1, -1, -1, -1, -1, -1, -1, -1, -1, 0, 0, 0, -1, 0, 0, 0, 0}),
        C({0, -2, 2, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0}),
        C({4, -1, -2, -1, -1, -1, -1, -1, -1, -1, 0, -2, -1, -1, 0, 0, 0, 0}),
        C({1, 0, -1, 0, 0, 0, 0, 0, 0, 0, -1, -1, 0, 0, 0, 0, -1, -1}),
    };
}

inline HomologyClass x1_alpha() {
    return make_class(x1_ambient(),
                      {7, -2, -3, -2, -2, -2, -2, -2, -2, -2, -1, 0, -1, -2, 0, 0, -1, -1});
}

inline rbd::plumbing::LinearChain x1_chain() {
    return rbd::plumbing::LinearChain(
        std::vector<Int>{-2, -2, -12, -2, -2, -2, -2, -2, -2, -2, -4},
        std::make_pair(Int(28), Int(9)));
}

// --- oracles -----------------------------------------------------------------

/// Pairing recomputed from the definition, independent of lattice::pair.
inline Int oracle_pair(const HomologyClass& a, const HomologyClass& b) {
    Int s = a.coeffs[0] * b.coeffs[0];
    for (std::size_t i = 1; i < a.coeffs.size(); ++i) s -= a.coeffs[i] * b.coeffs[i];
    return s;
}

/// Exact determinant by rational Gaussian elimination, a different route
/// from the library's fraction-free one.
inline Rat oracle_det(const rbd::IntMat& m) {
    const std::size_t n = m.rows();
    rbd::RatMat a = rbd::to_rat(m);
    Rat d(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && rbd::sgn(a(p, k)) == 0) ++p;
        if (p == n) return Rat(0);
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            d = -d;
        }
        d *= a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            Rat f = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return d;
}

inline HomologyClass random_class(std::mt19937_64& rng, const AmbientLattice& amb, long lo = -9,
                                  long hi = 9) {
    std::uniform_int_distribution<long> dist(lo, hi);
    std::vector<Int> v(amb.rank());
    for (auto& c : v) c = dist(rng);
    return HomologyClass(amb, std::move(v));
}

}  // namespace fixtures
