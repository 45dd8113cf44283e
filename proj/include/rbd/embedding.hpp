#pragma once

// Verifies that explicit homology-class lists realize plumbing chains inside
// blown-up projective planes, computes blow-down topological invariants, and
// solves fiber-multiplicity null vectors.

#include "rbd/intmat.hpp"
#include "rbd/lattice.hpp"
#include "rbd/numeric.hpp"
#include "rbd/plumbing.hpp"

#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace rbd::embedding {

enum class Genus { sphere, torus };

/// Ordered homology classes claimed to realize a chain inside an ambient
/// lattice.  Whether the Gram matrix really is the chain's tridiagonal one
/// is checked by verify_configuration, never assumed.
struct SphereConfiguration {
    lattice::AmbientLattice ambient;
    std::vector<lattice::HomologyClass> classes;
    plumbing::LinearChain chain;
    std::vector<Genus> genus_tags;

    SphereConfiguration(lattice::AmbientLattice amb, std::vector<lattice::HomologyClass> cls,
                        plumbing::LinearChain ch, std::vector<Genus> tags = {})
        : ambient(amb), classes(std::move(cls)), chain(std::move(ch)), genus_tags(std::move(tags)) {
        if (classes.size() != chain.length())
            throw std::invalid_argument("SphereConfiguration: class count != chain length");
        if (genus_tags.empty()) genus_tags.assign(classes.size(), Genus::sphere);
        if (genus_tags.size() != classes.size())
            throw std::invalid_argument("SphereConfiguration: genus tag count mismatch");
        for (const auto& c : classes)
            if (c.ambient != ambient)
                throw std::invalid_argument("SphereConfiguration: ambient mismatch");
    }
};

struct VerificationFailure {
    std::size_t i, j;  // positions (0-based); i == j is a self-intersection
    Int expected, actual;

    std::string describe() const {
        std::ostringstream os;
        if (i == j)
            os << "class " << i + 1 << ": square " << actual.get_str() << " != "
               << expected.get_str();
        else
            os << "classes " << i + 1 << "," << j + 1 << ": pairing " << actual.get_str()
               << " != " << expected.get_str();
        return os.str();
    }
};

struct VerificationReport {
    bool pass = false;
    std::vector<VerificationFailure> failures;
};

/// Pass iff self-intersections equal the chain weights, consecutive pairings
/// equal 1 and all other pairings vanish.  Failures are data, not errors.
inline VerificationReport verify_configuration(const SphereConfiguration& c) {
    VerificationReport rep;
    IntMat g = lattice::gram(c.classes);
    IntMat want = c.chain.gram();
    for (std::size_t i = 0; i < c.classes.size(); ++i)
        for (std::size_t j = i; j < c.classes.size(); ++j)
            if (g(i, j) != want(i, j))
                rep.failures.push_back({i, j, want(i, j), g(i, j)});
    rep.pass = rep.failures.empty();
    return rep;
}

/// Rational blow-down bookkeeping data for a named construction.
struct BlowdownScenario {
    std::string name;  // x1 | x2 | x3 | y
    std::size_t ambient_n = 0;
    std::size_t chain_length = 0;
};

struct TopInvariants {
    Int chi, sigma, b2_plus, b2_minus;
    bool odd_form = true;
};

/// chi(X) = chi(ambient) - chi(C) + 1 and sigma(X) = sigma(ambient) + len,
/// with chi(ambient) = n + 3, sigma(ambient) = 1 - n, chi(C) = len + 1.
inline TopInvariants blowdown_invariants(const BlowdownScenario& s) {
    TopInvariants inv;
    Int n(static_cast<long>(s.ambient_n)), len(static_cast<long>(s.chain_length));
    inv.chi = (n + 3) - (len + 1) + 1;
    inv.sigma = (1 - n) + len;
    inv.b2_plus = 1;
    inv.b2_minus = (inv.chi - 2) - inv.b2_plus;
    inv.odd_form = true;
    return inv;
}

struct NullVectorResult {
    std::size_t kernel_rank = 0;
    std::optional<std::vector<Int>> marks;  // primitive positive generator if rank 1
};

/// Primitive positive generator of the kernel of the graph's Gram matrix,
/// when the kernel has rank 1 and admits one; kernel ranks 0 and > 1 are
/// reported distinctly.
inline NullVectorResult null_vector(const plumbing::FramedGraph& g) {
    IntMat k = kernel_basis(g.gram());
    NullVectorResult res;
    res.kernel_rank = k.rows();
    if (k.rows() != 1) return res;
    std::vector<Int> v(k.cols());
    Int content = 0;
    for (std::size_t j = 0; j < k.cols(); ++j) {
        v[j] = k(0, j);
        content = gcd(content, v[j]);
    }
    if (sgn(content) != 0)
        for (auto& x : v) x = exact_div(x, content);
    int s = 0;
    for (const Int& x : v) {
        if (sgn(x) == 0) continue;
        if (s == 0) s = sgn(x);
        if (sgn(x) != s) return res;  // mixed signs: no positive generator
    }
    if (s < 0)
        for (auto& x : v) x = -x;
    for (const Int& x : v)
        if (sgn(x) == 0) return res;  // not strictly positive
    res.marks = std::move(v);
    return res;
}

/// Homology class of the smoothing of two transversely intersecting
/// surfaces: their sum.  Rejected unless the pairing is >= 1.
inline lattice::HomologyClass smooth_pair(const lattice::HomologyClass& a,
                                          const lattice::HomologyClass& b) {
    if (lattice::pair(a, b) < 1)
        throw std::invalid_argument("smooth_pair: classes do not intersect positively");
    return a + b;
}

/// One blow-up: the ambient gains e_{n+1}; each listed class becomes its
/// proper transform, dropping by its declared multiplicity at the point.
struct BlowUpThrough {
    std::size_t class_index;
    Int multiplicity;  // 1 for a simple point, 2 for a double point
};

inline std::vector<lattice::HomologyClass> blow_up(
    const std::vector<lattice::HomologyClass>& classes,
    const std::vector<BlowUpThrough>& through) {
    for (const auto& t : through) {
        if (t.class_index >= classes.size())
            throw std::invalid_argument("blow_up: class index out of range");
        if (sgn(t.multiplicity) < 0) throw std::invalid_argument("blow_up: negative multiplicity");
    }
    lattice::AmbientLattice bigger{classes.empty() ? 1 : classes[0].ambient.n + 1};
    std::vector<lattice::HomologyClass> out;
    out.reserve(classes.size());
    for (const auto& c : classes) {
        std::vector<Int> v = c.coeffs;
        v.push_back(0);
        out.emplace_back(bigger, std::move(v));
    }
    for (const auto& t : through) out[t.class_index].coeffs.back() = -t.multiplicity;
    return out;
}

}  // namespace rbd::embedding
