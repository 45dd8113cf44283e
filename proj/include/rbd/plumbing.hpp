#pragma once

// Linear plumbings C_{p,q}: Hirzebruch-Jung continued fractions, boundary
// lens-space first homology, rational-ball extension tests, Wahl-chain
// generation and blow-down calculus on framed graphs.

#include "rbd/intmat.hpp"
#include "rbd/numeric.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rbd::plumbing {

/// Weight sequence d_i <= -2, optionally tagged with its (p, q) source.
struct LinearChain {
    std::vector<Int> weights;
    std::optional<std::pair<Int, Int>> provenance;  // (p, q), p > q >= 1, coprime

    LinearChain() = default;
    explicit LinearChain(std::vector<Int> w, std::optional<std::pair<Int, Int>> pq = {})
        : weights(std::move(w)), provenance(std::move(pq)) {
        for (const Int& d : weights)
            if (d > -2) throw std::invalid_argument("LinearChain: weight > -2");
    }

    std::size_t length() const { return weights.size(); }
    bool operator==(const LinearChain& o) const { return weights == o.weights; }

    LinearChain reversed() const {
        std::vector<Int> w(weights.rbegin(), weights.rend());
        return LinearChain(std::move(w), provenance);
    }
    /// Lexicographically smaller of the chain and its reversal.
    LinearChain canonical() const {
        std::vector<Int> rev(weights.rbegin(), weights.rend());
        if (rev < weights) return LinearChain(std::move(rev), provenance);
        return *this;
    }
    bool equal_up_to_reversal(const LinearChain& o) const {
        return weights == o.weights ||
               std::equal(weights.begin(), weights.end(), o.weights.rbegin(), o.weights.rend());
    }

    /// Tridiagonal intersection matrix of the plumbing.
    IntMat gram() const {
        IntMat g(length(), length());
        for (std::size_t i = 0; i < length(); ++i) {
            g(i, i) = weights[i];
            if (i + 1 < length()) {
                g(i, i + 1) = 1;
                g(i + 1, i) = 1;
            }
        }
        return g;
    }
};

inline LinearChain make_chain(std::vector<long> w) {
    return LinearChain(std::vector<Int>(w.begin(), w.end()));
}

/// Weights of the negative continued fraction for -p^2/(pq-1); every entry
/// is <= -2 and the expansion is the canonical Hirzebruch-Jung one (listed
/// chains in the other orientation compare equal up to reversal).
inline LinearChain cf_expand(const Int& p, const Int& q) {
    if (!(p > q && q >= 1)) throw std::invalid_argument("cf_expand: need p > q >= 1");
    if (gcd(p, q) != 1) throw std::invalid_argument("cf_expand: p, q not coprime");
    Int num = p * p;
    Int den = p * q - 1;
    std::vector<Int> weights;
    while (sgn(den) != 0) {
        // a = ceil(num/den); then num/den = a - den'/num' with
        // (num', den') = (den, a*den - num).
        Int a = tdiv(num + den - 1, den);
        weights.push_back(-a);
        Int next = a * den - num;
        num = den;
        den = next;
    }
    return LinearChain(std::move(weights), std::make_pair(p, q));
}

/// Exact value of d_1 - 1/(d_2 - 1/(...)); cf_eval(cf_expand(p,q)) equals
/// -p^2/(pq-1).
inline Rat cf_eval(const LinearChain& chain) {
    if (chain.weights.empty()) throw std::invalid_argument("cf_eval: empty chain");
    Rat v(chain.weights.back());
    for (std::size_t i = chain.length() - 1; i-- > 0;) {
        if (sgn(v) == 0) throw std::invalid_argument("cf_eval: division by zero in fold");
        v = Rat(chain.weights[i]) - 1 / v;
    }
    return v;
}

/// All chains reachable from (-4) by the two end transformations
///   (b_1, ..., b_k) -> (b_1 - 1, b_2, ..., b_k, -2)
///   (b_1, ..., b_k) -> (-2, b_1, ..., b_{k-1}, b_k - 1)
/// with length <= max_len, as exact weight sequences (both orientations).
inline std::set<std::vector<Int>> wahl_generate(std::size_t max_len) {
    if (max_len < 1) throw std::invalid_argument("wahl_generate: max_len < 1");
    std::set<std::vector<Int>> out;
    std::vector<std::vector<Int>> frontier{{Int(-4)}};
    out.insert(frontier.front());
    for (std::size_t len = 1; len < max_len; ++len) {
        std::vector<std::vector<Int>> next;
        for (const auto& c : frontier) {
            std::vector<Int> a = c;
            a.front() -= 1;
            a.push_back(-2);
            if (out.insert(a).second) next.push_back(a);
            std::vector<Int> b;
            b.reserve(c.size() + 1);
            b.push_back(-2);
            b.insert(b.end(), c.begin(), c.end());
            b.back() -= 1;
            if (out.insert(b).second) next.push_back(b);
        }
        frontier = std::move(next);
    }
    return out;
}

/// Element of H_1(boundary) = Z/p^2 expressed against a chosen generating
/// meridian.
struct BoundaryClass {
    Int residue;               // in [0, p^2)
    Int order;                 // p^2
    std::size_t generator_vertex;
};

namespace detail {

// Cokernel data for the chain's intersection matrix: H_1(boundary) is
// Z^k / im(G).  For these chains all invariant factors are 1 except the
// last, so the class of x is the last coordinate of U x mod p^2.
struct CokernelMap {
    std::vector<Int> last_row;  // last row of the left SNF transform
    Int order;                  // final invariant factor
};

inline CokernelMap cokernel_map(const LinearChain& chain) {
    if (!chain.provenance) throw std::invalid_argument("chain has no (p,q) provenance");
    auto snf = smith_normal_form(chain.gram());
    const std::size_t k = chain.length();
    for (std::size_t i = 0; i + 1 < k; ++i)
        if (snf.diagonal[i] != 1)
            throw std::logic_error("chain cokernel is not cyclic");
    Int p = chain.provenance->first;
    if (snf.diagonal.back() != p * p) throw std::logic_error("chain cokernel order != p^2");
    CokernelMap m;
    m.order = snf.diagonal.back();
    m.last_row.resize(k);
    for (std::size_t j = 0; j < k; ++j) m.last_row[j] = snf.left(k - 1, j);
    return m;
}

inline Int coset_value(const CokernelMap& m, const std::vector<Int>& x) {
    Int s = 0;
    for (std::size_t j = 0; j < x.size(); ++j) s += m.last_row[j] * x[j];
    return mod_euclid(s, m.order);
}

}  // namespace detail

/// Residue c with mu_vertex = c * mu_generator in H_1(boundary) = Z/p^2.
/// Throws if the generator meridian does not generate.
inline BoundaryClass meridian_class(const LinearChain& chain, std::size_t vertex,
                                    std::size_t generator_vertex) {
    if (vertex >= chain.length() || generator_vertex >= chain.length())
        throw std::invalid_argument("meridian_class: vertex index out of range");
    auto m = detail::cokernel_map(chain);
    Int g = m.last_row[generator_vertex];
    if (gcd(g, m.order) != 1)
        throw std::invalid_argument("meridian_class: generator meridian does not generate");
    Int c = mod_euclid(m.last_row[vertex] * inverse_mod(g, m.order), m.order);
    return BoundaryClass{std::move(c), m.order, generator_vertex};
}

/// Residue of an arbitrary evaluation vector (as a class of the boundary's
/// first homology) relative to the chosen generating meridian.
inline BoundaryClass restriction_class(const LinearChain& chain, const std::vector<Int>& evals,
                                       std::size_t generator_vertex) {
    if (generator_vertex >= chain.length())
        throw std::invalid_argument("restriction_class: vertex index out of range");
    if (evals.size() != chain.length())
        throw std::invalid_argument("restriction_class: evaluation vector length mismatch");
    auto m = detail::cokernel_map(chain);
    Int g = m.last_row[generator_vertex];
    if (gcd(g, m.order) != 1)
        throw std::invalid_argument("restriction_class: generator meridian does not generate");
    Int v = detail::coset_value(m, evals);
    Int c = mod_euclid(v * inverse_mod(g, m.order), m.order);
    return BoundaryClass{std::move(c), m.order, generator_vertex};
}

/// Residue of the restriction K|boundary relative to the chosen generating
/// meridian, where K evaluates d_i + 2 on the i-th sphere.  The sign of the
/// Poincare duality identification is fixed so that the restriction is the
/// class of the nonnegative evaluation vector (|d_i| - 2).
inline BoundaryClass k_restriction(const LinearChain& chain, std::size_t generator_vertex) {
    std::vector<Int> evals(chain.length());
    for (std::size_t i = 0; i < chain.length(); ++i) evals[i] = -(chain.weights[i] + 2);
    return restriction_class(chain, evals, generator_vertex);
}

/// The restriction extends over the rational ball iff the residue lies in
/// the order-p subgroup of Z/p^2, i.e. p divides it.
inline bool extends_over_ball(const LinearChain& chain, const BoundaryClass& b) {
    if (!chain.provenance) throw std::invalid_argument("extends_over_ball: no provenance");
    return divisible(b.residue, chain.provenance->first);
}

// --- framed graphs and blow-down calculus -----------------------------------

/// Vertices carry integer framings; edges are unordered pairs with a
/// positive multiplicity (the geometric linking number).
struct FramedGraph {
    std::vector<Int> framings;
    std::map<std::pair<std::size_t, std::size_t>, Int> edges;  // key i < j

    std::size_t vertex_count() const { return framings.size(); }

    void add_edge(std::size_t i, std::size_t j, Int mult) {
        if (i == j) throw std::invalid_argument("FramedGraph: self-edge");
        if (sgn(mult) <= 0) throw std::invalid_argument("FramedGraph: multiplicity < 1");
        if (i > j) std::swap(i, j);
        edges[{i, j}] += mult;
    }

    IntMat gram() const {
        IntMat g(vertex_count(), vertex_count());
        for (std::size_t i = 0; i < vertex_count(); ++i) g(i, i) = framings[i];
        for (const auto& [e, m] : edges) {
            g(e.first, e.second) = m;
            g(e.second, e.first) = m;
        }
        return g;
    }

    static FramedGraph from_chain(const LinearChain& chain) {
        FramedGraph g;
        g.framings = chain.weights;
        for (std::size_t i = 0; i + 1 < chain.length(); ++i) g.add_edge(i, i + 1, Int(1));
        return g;
    }
};

struct BlowDownStep {
    std::size_t vertex;                                // original index of the deleted vertex
    std::vector<std::pair<std::size_t, Int>> links;    // neighbors and multiplicities
};

struct BlowDownResult {
    FramedGraph reduced;
    std::vector<std::size_t> surviving;  // original indices of the reduced vertices
    std::size_t count = 0;
    std::vector<BlowDownStep> trace;
};

/// Repeatedly deletes the lowest-index (-1)-framed vertex, adding m_u^2 to
/// each neighbor framing and m_u * m_w to each neighbor-pair edge.
inline BlowDownResult blow_down_reduce(const FramedGraph& g) {
    std::vector<Int> framings = g.framings;
    std::map<std::pair<std::size_t, std::size_t>, Int> edges = g.edges;
    std::vector<bool> alive(framings.size(), true);
    BlowDownResult res;

    for (;;) {
        std::size_t v = framings.size();
        for (std::size_t i = 0; i < framings.size(); ++i)
            if (alive[i] && framings[i] == -1) {
                v = i;
                break;
            }
        if (v == framings.size()) break;

        BlowDownStep step;
        step.vertex = v;
        for (auto it = edges.begin(); it != edges.end();) {
            if (it->first.first == v || it->first.second == v) {
                std::size_t u = it->first.first == v ? it->first.second : it->first.first;
                step.links.emplace_back(u, it->second);
                it = edges.erase(it);
            } else {
                ++it;
            }
        }
        alive[v] = false;
        for (const auto& [u, m] : step.links) framings[u] += m * m;
        for (std::size_t a = 0; a < step.links.size(); ++a)
            for (std::size_t b = a + 1; b < step.links.size(); ++b) {
                auto [u, mu] = step.links[a];
                auto [w, mw] = step.links[b];
                if (u > w) std::swap(u, w);
                edges[{u, w}] += mu * mw;
            }
        res.trace.push_back(std::move(step));
        ++res.count;
    }

    std::vector<std::size_t> remap(framings.size(), std::size_t(-1));
    for (std::size_t i = 0; i < framings.size(); ++i)
        if (alive[i]) {
            remap[i] = res.surviving.size();
            res.surviving.push_back(i);
            res.reduced.framings.push_back(framings[i]);
        }
    for (const auto& [e, m] : edges)
        res.reduced.edges[{remap[e.first], remap[e.second]}] = m;
    return res;
}

/// Multiplicities of the edges joining one extra (-1)-framed vertex to the
/// chain vertices (0 = no edge).
using Attachment = std::vector<Int>;

inline FramedGraph attach_unknot(const LinearChain& chain, const Attachment& mults) {
    FramedGraph g = FramedGraph::from_chain(chain);
    std::size_t k = chain.length();
    g.framings.push_back(-1);
    for (std::size_t i = 0; i < k; ++i)
        if (sgn(mults[i]) > 0) g.add_edge(i, k, mults[i]);
    return g;
}

namespace detail {

// Lexicographic DFS over attachments satisfying the determinant constraint
// m^T P m = |det G| with P = adj(-G); P is entrywise nonnegative and positive
// definite for these chains, so the quadratic form is monotone in each
// coordinate and the search prunes on partial bounds.
inline bool certificate_dfs(const LinearChain& chain, const IntMat& p, const Int& target,
                            long max_mult, Attachment& m, std::size_t depth,
                            std::optional<Attachment>& found) {
    const std::size_t k = chain.length();
    if (depth == k) {
        bool all_zero = true;
        for (const Int& x : m)
            if (sgn(x) != 0) all_zero = false;
        if (all_zero) return false;
        Int q = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if (sgn(m[i]) == 0) continue;
            q += p(i, i) * m[i] * m[i];
            for (std::size_t j = i + 1; j < k; ++j) q += 2 * p(i, j) * m[i] * m[j];
        }
        if (q != target) return false;
        auto res = blow_down_reduce(attach_unknot(chain, m));
        if (res.count == k && res.reduced.vertex_count() == 1 &&
            sgn(res.reduced.framings[0]) == 0) {
            found = m;
            return true;
        }
        return false;
    }
    for (long v = 0; v <= max_mult; ++v) {
        m[depth] = v;
        // Lower bound with the remaining coordinates at zero; monotonicity
        // makes this sound.
        Int lo = 0;
        for (std::size_t i = 0; i <= depth; ++i) {
            if (sgn(m[i]) == 0) continue;
            lo += p(i, i) * m[i] * m[i];
            for (std::size_t j = i + 1; j <= depth; ++j) lo += 2 * p(i, j) * m[i] * m[j];
        }
        if (lo > target) break;  // larger v only grows the form
        if (certificate_dfs(chain, p, target, max_mult, m, depth + 1, found)) return true;
    }
    m[depth] = 0;
    return false;
}

}  // namespace detail

/// First attachment in lexicographic order whose blow-down ends at a single
/// 0-framed vertex with count == length(chain), or nothing.
inline std::optional<Attachment> embedding_certificate(const LinearChain& chain,
                                                       long max_mult = 3) {
    if (max_mult < 1) throw std::invalid_argument("embedding_certificate: max_mult < 1");
    const std::size_t k = chain.length();
    if (k == 0) return std::nullopt;
    IntMat g = chain.gram();
    // Reduction to a 0-framed vertex needs det of the extended Gram to be 0,
    // i.e. m^T adj(-G) m = |det G| (blow-downs preserve |det|).
    IntMat neg(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) neg(i, j) = -g(i, j);
    IntMat p = adjugate(neg);
    Int target = abs(det(g));
    Attachment m(k, Int(0));
    std::optional<Attachment> found;
    detail::certificate_dfs(chain, p, target, max_mult, m, 0, found);
    return found;
}

}  // namespace rbd::plumbing
