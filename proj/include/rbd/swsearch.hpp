#pragma once

// Combinatorial Seiberg-Witten layer: dimension formula, adjunction-
// constrained enumeration of characteristic candidates on a complement
// basis, chamber/wall sign logic, and the blow-up formula on sets of basic
// classes.  No analytic content: the enumeration narrows candidates and the
// wall test decides nonvanishing by a sign comparison.

#include "rbd/embedding.hpp"
#include "rbd/intmat.hpp"
#include "rbd/lattice.hpp"
#include "rbd/numeric.hpp"
#include "rbd/rationalmat.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <thread>
#include <vector>

namespace rbd::swsearch {

using embedding::Genus;

/// Formal dimension (square - 3 sigma - 2 chi)/4; throws when the division
/// is not exact (such a square is not spin-c realizable).
inline Int dimension(const Int& square, const Int& chi, const Int& sigma) {
    Int num = square - 3 * sigma - 2 * chi;
    if (!divisible(num, Int(4)))
        throw std::invalid_argument("dimension: square - 3*sigma - 2*chi not divisible by 4");
    return exact_div(num, Int(4));
}

/// Adjunction bound on an embedded sphere or torus of negative square:
/// square + |eval| <= 0, with eval parity matching the square.
struct AdjunctionConstraint {
    lattice::HomologyClass cls;
    Genus genus = Genus::sphere;
    Int square;

    AdjunctionConstraint(lattice::HomologyClass c, Genus g)
        : cls(std::move(c)), genus(g), square(lattice::square(cls)) {
        if (square > -1) throw std::invalid_argument("AdjunctionConstraint: square > -1");
    }
};

inline bool adjunction_ok(const Int& square, const Int& eval) {
    if (square + abs(eval) > 0) return false;
    return mod_euclid(eval - square, Int(2)) == 0;
}

inline bool adjunction_ok(const AdjunctionConstraint& c, const Int& eval) {
    return adjunction_ok(c.square, eval);
}

/// Exact v . G^-1 . v for an evaluation vector on a basis with Gram G.
inline Rat rational_square(const std::vector<Int>& evals, const IntMat& g) {
    if (g.rows() != g.cols() || g.rows() != evals.size())
        throw std::invalid_argument("rational_square: size mismatch");
    Int d = det(g);
    if (sgn(d) == 0) throw std::invalid_argument("rational_square: singular Gram matrix");
    IntMat adj = adjugate(g);
    Int num = 0;
    for (std::size_t i = 0; i < evals.size(); ++i)
        for (std::size_t j = 0; j < evals.size(); ++j) num += evals[i] * adj(i, j) * evals[j];
    Rat r(num, d);
    r.canonicalize();
    return r;
}

/// Extra constraint on an integer combination of basis elements; its square
/// is computed from the Gram matrix, never hand-entered.
struct DerivedConstraint {
    std::vector<std::size_t> combo;  // basis indices, eval is the sum of evals
    Genus genus = Genus::torus;
};

struct EnumerationResult {
    std::uint64_t stage1 = 0;  // parity-and-adjunction admissible tuples
    std::uint64_t stage2 = 0;  // integer square >= 3 and == 3 mod 8
    std::uint64_t stage3 = 0;  // survivors of the derived constraints
    std::uint64_t nondivisible_excluded = 0;
    std::vector<std::vector<Int>> survivors;  // sorted evaluation tuples
    std::vector<Rat> survivor_squares;
    std::vector<Int> survivor_dimensions;
};

namespace detail {

inline std::vector<Int> admissible_evals(const Int& square) {
    // eval in [-|square|, |square|] with eval == square mod 2.
    std::vector<Int> out;
    Int s = abs(square);
    for (Int e = -s; e <= s; e += 2) out.push_back(e);
    return out;
}

struct EnumerationPlan {
    std::vector<std::vector<Int>> grids;  // admissible evals per constraint
    IntMat adj;                           // adjugate of the Gram matrix
    Int det;
    std::vector<std::pair<std::vector<std::size_t>, Int>> derived;  // combo, square
    Int chi, sigma;
};

inline void enumerate_slice(const EnumerationPlan& plan, std::size_t first_lo,
                            std::size_t first_hi, EnumerationResult& out) {
    const std::size_t n = plan.grids.size();
    std::vector<std::size_t> idx(n, 0);
    std::vector<Int> v(n);
    if (n == 0) {
        // Rank-0 complement: the single empty tuple has square 0 < 3.
        out.stage1 = 1;
        return;
    }
    for (std::size_t f = first_lo; f < first_hi; ++f) {
        v[0] = plan.grids[0][f];
        std::fill(idx.begin(), idx.end(), 0);
        for (;;) {
            for (std::size_t i = 1; i < n; ++i) v[i] = plan.grids[i][idx[i]];
            ++out.stage1;

            // Stage 2: exact square integral, >= 3 and == 3 mod 8.
            Int num = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (sgn(v[i]) == 0) continue;
                num += plan.adj(i, i) * v[i] * v[i];
                for (std::size_t j = i + 1; j < n; ++j)
                    num += 2 * plan.adj(i, j) * v[i] * v[j];
            }
            if (divisible(num, plan.det)) {
                Int sq = exact_div(num, plan.det);
                if (sq >= 3 && mod_euclid(sq, Int(8)) == 3) {
                    ++out.stage2;
                    if (!divisible(sq - 3 * plan.sigma - 2 * plan.chi, Int(4))) {
                        ++out.nondivisible_excluded;
                    } else {
                        bool ok = true;
                        for (const auto& [combo, dsq] : plan.derived) {
                            Int eval = 0;
                            for (std::size_t ci : combo) eval += v[ci];
                            if (!adjunction_ok(dsq, eval)) {
                                ok = false;
                                break;
                            }
                        }
                        if (ok) {
                            ++out.stage3;
                            out.survivors.push_back(v);
                            Rat s(sq);
                            out.survivor_squares.push_back(s);
                            out.survivor_dimensions.push_back(
                                dimension(sq, plan.chi, plan.sigma));
                        }
                    }
                }
            }

            // Odometer over positions 1..n-1 (position 0 is the slice).
            std::size_t pos = n - 1;
            for (;;) {
                if (pos == 0) goto next_first;
                if (++idx[pos] < plan.grids[pos].size()) break;
                idx[pos] = 0;
                --pos;
            }
        }
    next_first:;
    }
}

}  // namespace detail

/// Three-stage enumeration of candidate basic-class restrictions.  Stage 1
/// applies the per-element adjunction bounds, stage 2 the square test,
/// stage 3 the derived-combination bounds.  Deterministic: survivors are
/// sorted, independent of the worker count.
inline EnumerationResult enumerate_candidates(
    const std::vector<AdjunctionConstraint>& basis_constraints,
    const std::vector<DerivedConstraint>& derived, const IntMat& g, const Int& chi,
    const Int& sigma, unsigned workers = 1) {
    const std::size_t n = basis_constraints.size();
    if (g.rows() != n || g.cols() != n)
        throw std::invalid_argument("enumerate_candidates: Gram size mismatch");
    for (std::size_t i = 0; i < n; ++i)
        if (basis_constraints[i].square != g(i, i))
            throw std::invalid_argument("enumerate_candidates: constraint square != Gram diagonal");

    detail::EnumerationPlan plan;
    plan.chi = chi;
    plan.sigma = sigma;
    plan.grids.reserve(n);
    for (const auto& c : basis_constraints) plan.grids.push_back(detail::admissible_evals(c.square));
    if (n > 0) {
        plan.det = det(g);
        if (sgn(plan.det) == 0)
            throw std::invalid_argument("enumerate_candidates: singular Gram matrix");
        plan.adj = adjugate(g);
    }
    for (const auto& d : derived) {
        Int dsq = 0;
        for (std::size_t a : d.combo)
            for (std::size_t b : d.combo) {
                if (a >= n || b >= n)
                    throw std::invalid_argument("enumerate_candidates: derived index out of range");
                dsq += g(a, b);
            }
        plan.derived.emplace_back(d.combo, dsq);
    }

    EnumerationResult total;
    if (n == 0) {
        detail::enumerate_slice(plan, 0, 0, total);
        return total;
    }

    const std::size_t first_size = plan.grids[0].size();
    if (workers < 1) workers = 1;
    if (workers > first_size) workers = static_cast<unsigned>(first_size);
    std::vector<EnumerationResult> parts(workers);
    if (workers == 1) {
        detail::enumerate_slice(plan, 0, first_size, parts[0]);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            std::size_t lo = first_size * w / workers;
            std::size_t hi = first_size * (w + 1) / workers;
            pool.emplace_back(
                [&plan, lo, hi, &parts, w] { detail::enumerate_slice(plan, lo, hi, parts[w]); });
        }
        for (auto& t : pool) t.join();
    }
    for (auto& p : parts) {
        total.stage1 += p.stage1;
        total.stage2 += p.stage2;
        total.stage3 += p.stage3;
        total.nondivisible_excluded += p.nondivisible_excluded;
        for (std::size_t i = 0; i < p.survivors.size(); ++i) {
            total.survivors.push_back(std::move(p.survivors[i]));
            total.survivor_squares.push_back(std::move(p.survivor_squares[i]));
            total.survivor_dimensions.push_back(std::move(p.survivor_dimensions[i]));
        }
    }
    // Canonical order regardless of partitioning.
    std::vector<std::size_t> order(total.survivors.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return total.survivors[a] < total.survivors[b];
    });
    EnumerationResult sorted = total;
    for (std::size_t i = 0; i < order.size(); ++i) {
        sorted.survivors[i] = total.survivors[order[i]];
        sorted.survivor_squares[i] = total.survivor_squares[order[i]];
        sorted.survivor_dimensions[i] = total.survivor_dimensions[order[i]];
    }
    return sorted;
}

// --- chamber / wall logic ---------------------------------------------------

enum class WallResult { same_chamber, wall, on_wall };

/// Compares the sign of k against a reference period point and another
/// period point; a sign change means a wall separates the two chambers.
/// Zero pairings are reported distinctly as on_wall.
inline WallResult wall_test(const lattice::HomologyClass& k,
                            const lattice::HomologyClass& reference,
                            const lattice::HomologyClass& period) {
    if (sgn(lattice::pair(period, period)) < 0)
        throw std::invalid_argument("wall_test: period point has negative square");
    if (sgn(lattice::pair(period, reference)) <= 0)
        throw std::invalid_argument("wall_test: period point not on the reference side");
    int a = sgn(lattice::pair(k, reference));
    int b = sgn(lattice::pair(k, period));
    if (a == 0 || b == 0) return WallResult::on_wall;
    return a == b ? WallResult::same_chamber : WallResult::wall;
}

// --- blow-up formula --------------------------------------------------------

/// Set of signed basic classes, closed under negation.
struct BasicClassSet {
    lattice::AmbientLattice ambient;
    std::set<std::vector<Int>> classes;

    void insert(const lattice::HomologyClass& c) {
        if (c.ambient != ambient) throw std::invalid_argument("BasicClassSet: ambient mismatch");
        classes.insert(c.coeffs);
    }
    std::size_t size() const { return classes.size(); }
};

/// Blow-up formula: each step replaces every class K by K + E and K - E in
/// the enlarged ambient; the cardinality doubles per step.
inline BasicClassSet blow_up_basics(const BasicClassSet& s, std::size_t times) {
    BasicClassSet cur = s;
    for (std::size_t t = 0; t < times; ++t) {
        BasicClassSet next;
        next.ambient = lattice::AmbientLattice{cur.ambient.n + 1};
        for (const auto& v : cur.classes) {
            std::vector<Int> plus = v, minus = v;
            plus.push_back(1);
            minus.push_back(-1);
            next.classes.insert(std::move(plus));
            next.classes.insert(std::move(minus));
        }
        cur = std::move(next);
    }
    return cur;
}

}  // namespace rbd::swsearch
