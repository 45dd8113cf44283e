#pragma once

// Scenario files and the reproduction pipeline: loads versioned JSON
// scenario descriptions, sequences the verification steps, and emits
// deterministic text or JSON reports.

#include "rbd/embedding.hpp"
#include "rbd/fibration.hpp"
#include "rbd/lattice.hpp"
#include "rbd/plumbing.hpp"
#include "rbd/swsearch.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rbd::cli {

using json = nlohmann::ordered_json;

struct ScenarioError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConstraintSpec {
    std::vector<lattice::HomologyClass> basis;
    std::vector<embedding::Genus> genera;
    std::vector<swsearch::DerivedConstraint> derived;
};

struct Scenario {
    std::string name;
    std::string kind;  // blowdown | appendix | corollary
    std::size_t ambient_n = 0;
    std::optional<plumbing::LinearChain> chain;  // weights in the listed order
    std::vector<lattice::HomologyClass> classes;
    std::vector<embedding::Genus> genus_tags;  // per class; spheres when absent
    std::optional<lattice::HomologyClass> alpha;
    std::optional<ConstraintSpec> constraints;
    std::vector<lattice::HomologyClass> initial_basics;  // corollary
    fibration::MonodromyWord monodromy;                  // appendix
    std::vector<fibration::FiberDescriptor> fibers;
    std::optional<fibration::RationalPoly> pencil_p1, pencil_p2;
    json expected;
};

namespace detail {

inline Int json_int(const json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return parse_int(j.get<std::string>());
    throw ScenarioError("expected an integer value");
}

inline lattice::HomologyClass json_class(const json& j, const lattice::AmbientLattice& amb) {
    std::vector<Int> v;
    for (const auto& c : j) v.push_back(json_int(c));
    return lattice::HomologyClass(amb, std::move(v));
}

inline fibration::RationalPoly json_poly(const json& j) {
    fibration::RationalPoly p;
    for (const auto& t : j) {
        const auto& e = t.at("term");
        fibration::Monomial m{e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>()};
        Rat c = t.at("coeff").is_string() ? parse_rat(t.at("coeff").get<std::string>())
                                          : Rat(json_int(t.at("coeff")));
        p.set_term(m, p.coeff(m) + c);
    }
    return p;
}

inline json poly_json(const fibration::RationalPoly& p) {
    json out = json::array();
    for (const auto& [m, c] : p.terms()) {
        json t;
        t["term"] = {m[0], m[1], m[2]};
        t["coeff"] = rbd::to_string(c);
        out.push_back(t);
    }
    return out;
}

inline embedding::Genus json_genus(const json& j) {
    std::string s = j.get<std::string>();
    if (s == "sphere") return embedding::Genus::sphere;
    if (s == "torus") return embedding::Genus::torus;
    throw ScenarioError("unknown genus tag '" + s + "'");
}

}  // namespace detail

inline ConstraintSpec load_constraints(const std::filesystem::path& path,
                                       const lattice::AmbientLattice& amb) {
    std::ifstream in(path);
    if (!in) throw ScenarioError("cannot open constraint file " + path.string());
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ScenarioError("constraint file " + path.string() + ": " + e.what());
    }
    ConstraintSpec spec;
    for (const auto& b : j.at("basis")) spec.basis.push_back(detail::json_class(b, amb));
    spec.genera.assign(spec.basis.size(), embedding::Genus::sphere);
    for (const auto& c : j.at("constraints")) {
        std::size_t idx = c.at("index").get<std::size_t>();
        if (idx >= spec.basis.size()) throw ScenarioError("constraint index out of range");
        spec.genera[idx] = detail::json_genus(c.at("genus"));
    }
    if (j.contains("derived"))
        for (const auto& d : j.at("derived")) {
            swsearch::DerivedConstraint dc;
            for (const auto& i : d.at("combo")) dc.combo.push_back(i.get<std::size_t>());
            dc.genus = detail::json_genus(d.at("genus"));
            spec.derived.push_back(std::move(dc));
        }
    return spec;
}

inline Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ScenarioError("cannot open scenario file " + path.string());
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ScenarioError("scenario file " + path.string() + ": " + e.what());
    }
    if (!j.contains("schema") || j.at("schema").get<int>() != 1)
        throw ScenarioError("scenario file " + path.string() + ": unsupported schema");
    Scenario s;
    s.name = j.at("name").get<std::string>();
    s.kind = j.value("kind", std::string("blowdown"));
    s.ambient_n = j.value("ambient_n", std::size_t(0));
    lattice::AmbientLattice amb{s.ambient_n};

    if (j.contains("chain")) {
        const auto& c = j.at("chain");
        std::vector<Int> w;
        for (const auto& x : c.at("weights")) w.push_back(detail::json_int(x));
        std::optional<std::pair<Int, Int>> pq;
        if (c.contains("p")) pq = std::make_pair(detail::json_int(c.at("p")),
                                                 detail::json_int(c.at("q")));
        try {
            s.chain = plumbing::LinearChain(std::move(w), pq);
        } catch (const std::exception& e) {
            throw ScenarioError(std::string("bad chain: ") + e.what());
        }
    }
    if (j.contains("classes"))
        for (const auto& c : j.at("classes")) s.classes.push_back(detail::json_class(c, amb));
    if (j.contains("genus_tags")) {
        for (const auto& g : j.at("genus_tags")) s.genus_tags.push_back(detail::json_genus(g));
        if (s.genus_tags.size() != s.classes.size())
            throw ScenarioError("genus_tags length does not match the class list");
    }
    if (j.contains("alpha")) s.alpha = detail::json_class(j.at("alpha"), amb);
    if (j.contains("constraints")) {
        std::filesystem::path ref = j.at("constraints").get<std::string>();
        if (ref.is_relative()) ref = path.parent_path() / ref;
        s.constraints = load_constraints(ref, amb);
    }
    if (j.contains("initial")) {
        lattice::AmbientLattice amb0{s.ambient_n};
        for (const auto& c : j.at("initial"))
            s.initial_basics.push_back(detail::json_class(c, amb0));
    }
    if (j.contains("monodromy"))
        for (const auto& m : j.at("monodromy")) {
            fibration::Mat2 mat;
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) mat.a[r][c] = detail::json_int(m.at(r).at(c));
            s.monodromy.push_back(mat);
        }
    if (j.contains("fibers"))
        for (const auto& f : j.at("fibers")) {
            fibration::FiberDescriptor d;
            if (f.at("kind").get<std::string>() == "fishtail") {
                d.kind = fibration::FiberDescriptor::Kind::fishtail;
            } else {
                d.kind = fibration::FiberDescriptor::Kind::tree_of_spheres;
                d.vertices = f.at("vertices").get<int>();
                d.edges = f.at("edges").get<int>();
            }
            s.fibers.push_back(d);
        }
    if (j.contains("pencil")) {
        s.pencil_p1 = detail::json_poly(j.at("pencil").at("p1"));
        s.pencil_p2 = detail::json_poly(j.at("pencil").at("p2"));
    }
    if (j.contains("expected")) s.expected = j.at("expected");
    return s;
}

// --- reports -----------------------------------------------------------------

struct ReportStep {
    std::string name;
    std::string status;  // pass | fail | skip
    std::string detail;
    json values;
};

struct Report {
    std::string scenario;
    std::vector<ReportStep> steps;
    bool overall = false;
    std::string conclusion;
};

inline std::string emit(const Report& r, const std::string& format) {
    if (format == "json") {
        json out;
        out["schema"] = 1;
        out["scenario"] = r.scenario;
        out["steps"] = json::array();
        for (const auto& s : r.steps) {
            json step;
            step["name"] = s.name;
            step["status"] = s.status;
            if (!s.detail.empty()) step["detail"] = s.detail;
            if (!s.values.is_null()) step["values"] = s.values;
            out["steps"].push_back(step);
        }
        out["overall"] = r.overall ? "pass" : "fail";
        out["conclusion"] = r.conclusion;
        return out.dump(2) + "\n";
    }
    if (format == "text") {
        std::ostringstream os;
        for (const auto& s : r.steps) {
            std::string tag = s.status == "pass" ? "PASS" : s.status == "skip" ? "SKIP" : "FAIL";
            os << tag << " " << s.name;
            if (!s.detail.empty()) os << ": " << s.detail;
            os << "\n";
        }
        os << "RESULT " << (r.overall ? "pass" : "fail") << ": " << r.conclusion << "\n";
        return os.str();
    }
    throw ScenarioError("unknown emit format '" + format + "'");
}

// --- the reproduction pipeline -------------------------------------------------

namespace detail {

struct StepSink {
    Report& report;
    bool any_fail = false;

    void pass(const std::string& name, const std::string& detail, json values = {}) {
        report.steps.push_back({name, "pass", detail, std::move(values)});
    }
    void fail(const std::string& name, const std::string& detail, json values = {}) {
        report.steps.push_back({name, "fail", detail, std::move(values)});
        any_fail = true;
    }
    void check(bool ok, const std::string& name, const std::string& detail, json values = {}) {
        if (ok)
            pass(name, detail, std::move(values));
        else
            fail(name, detail, std::move(values));
    }
    void skip(const std::string& name, const std::string& detail) {
        report.steps.push_back({name, "skip", detail, {}});
    }
};

inline std::string int_str(const Int& v) { return v.get_str(); }

}  // namespace detail

inline Report run_scenario(const Scenario& s, long max_mult = 3, unsigned workers = 1);

namespace detail {

inline void run_blowdown(const Scenario& s, StepSink& sink, long max_mult, unsigned workers) {
    using namespace rbd::lattice;
    using namespace rbd::plumbing;
    if (!s.chain || !s.chain->provenance) throw ScenarioError("blowdown scenario needs a chain");
    const LinearChain& chain = *s.chain;
    const auto& [p, q] = *chain.provenance;
    AmbientLattice amb{s.ambient_n};
    const json& exp = s.expected;

    // Continued-fraction check: stored weights must match cf_expand(p, q)
    // up to reversal.
    {
        LinearChain computed = cf_expand(p, q);
        json v;
        v["p"] = int_str(p);
        v["q"] = int_str(q);
        v["length"] = chain.length();
        sink.check(computed.equal_up_to_reversal(chain), "cf",
                   "C(" + int_str(p) + "," + int_str(q) + ") weights vs continued fraction", v);
        if (!computed.equal_up_to_reversal(chain)) return;  // later steps meaningless
    }

    // Configuration verification.
    if (!s.classes.empty()) {
        embedding::SphereConfiguration cfg(amb, s.classes, chain, s.genus_tags);
        auto rep = embedding::verify_configuration(cfg);
        json v;
        v["failures"] = rep.failures.size();
        sink.check(rep.pass, "configuration",
                   rep.pass ? "Gram matrix is the chain tridiagonal"
                            : rep.failures.front().describe(),
                   v);
    } else {
        sink.skip("configuration", "no class list in scenario");
    }

    // Topological invariants of the blow-down.
    {
        embedding::BlowdownScenario bs{s.name, s.ambient_n, chain.length()};
        auto inv = embedding::blowdown_invariants(bs);
        json v;
        v["chi"] = int_str(inv.chi);
        v["sigma"] = int_str(inv.sigma);
        v["b2plus"] = int_str(inv.b2_plus);
        v["b2minus"] = int_str(inv.b2_minus);
        bool ok = true;
        if (exp.contains("chi")) ok = ok && inv.chi == json_int(exp.at("chi"));
        if (exp.contains("sigma")) ok = ok && inv.sigma == json_int(exp.at("sigma"));
        if (exp.contains("b2plus")) ok = ok && inv.b2_plus == json_int(exp.at("b2plus"));
        if (exp.contains("b2minus")) ok = ok && inv.b2_minus == json_int(exp.at("b2minus"));
        sink.check(ok, "invariants",
                   "chi=" + int_str(inv.chi) + " sigma=" + int_str(inv.sigma) + " b2=(" +
                       int_str(inv.b2_plus) + "," + int_str(inv.b2_minus) + ")",
                   v);
    }

    // Orthogonal complement of the configuration.
    std::vector<HomologyClass> comp;
    if (!s.classes.empty()) {
        comp = orthogonal_complement(s.classes, amb);
        Int disc = abs(det(gram(comp)));
        json v;
        v["rank"] = comp.size();
        v["discriminant"] = int_str(disc);
        bool ok = true;
        if (exp.contains("complement_rank"))
            ok = ok && comp.size() == exp.at("complement_rank").get<std::size_t>();
        if (exp.contains("discriminant")) ok = ok && disc == json_int(exp.at("discriminant"));
        if (s.alpha) {
            bool orth = true;
            for (const auto& c : s.classes) orth = orth && sgn(pair(*s.alpha, c)) == 0;
            ok = ok && orth;
            v["alpha_orthogonal"] = orth;
        }
        sink.check(ok, "complement",
                   "rank " + std::to_string(comp.size()) + ", |det| " + int_str(disc), v);
    } else {
        sink.skip("complement", "no class list in scenario");
    }

    // Candidate enumeration on the complement basis.
    if (s.constraints) {
        std::vector<swsearch::AdjunctionConstraint> cons;
        for (std::size_t i = 0; i < s.constraints->basis.size(); ++i)
            cons.emplace_back(s.constraints->basis[i], s.constraints->genera[i]);
        IntMat g = gram(s.constraints->basis);
        embedding::BlowdownScenario bs{s.name, s.ambient_n, chain.length()};
        auto inv = embedding::blowdown_invariants(bs);
        auto res = swsearch::enumerate_candidates(cons, s.constraints->derived, g, inv.chi,
                                                  inv.sigma, workers);
        json v;
        v["stages"] = {res.stage1, res.stage2, res.stage3};
        v["survivors"] = json::array();
        for (const auto& sv : res.survivors) {
            json row = json::array();
            for (const auto& e : sv) row.push_back(int_str(e));
            v["survivors"].push_back(row);
        }
        v["dimensions"] = json::array();
        for (const auto& d : res.survivor_dimensions) v["dimensions"].push_back(int_str(d));
        bool ok = true;
        if (exp.contains("stages")) {
            const auto& st = exp.at("stages");
            ok = ok && res.stage1 == st.at(0).get<std::uint64_t>() &&
                 res.stage2 == st.at(1).get<std::uint64_t>() &&
                 res.stage3 == st.at(2).get<std::uint64_t>();
        }
        if (exp.contains("survivors")) {
            std::vector<std::vector<Int>> want;
            for (const auto& row : exp.at("survivors")) {
                std::vector<Int> w;
                for (const auto& e : row) w.push_back(json_int(e));
                want.push_back(std::move(w));
            }
            ok = ok && want == res.survivors;
        }
        sink.check(ok, "enumeration",
                   "stages (" + std::to_string(res.stage1) + ", " + std::to_string(res.stage2) +
                       ", " + std::to_string(res.stage3) + ")",
                   v);
    } else {
        sink.skip("enumeration", "no constraint file in scenario");
    }

    // K restriction and the rational-ball extension.
    {
        auto kr = k_restriction(chain, 0);
        bool ext = extends_over_ball(chain, kr);
        json v;
        v["residue"] = int_str(kr.residue);
        v["order"] = int_str(kr.order);
        v["extends"] = ext;
        bool ok = ext;
        if (exp.contains("k_residue")) {
            Int want = json_int(exp.at("k_residue"));
            ok = ok && (kr.residue == want || kr.residue == mod_euclid(-want, kr.order));
        }
        if (exp.contains("extends")) ok = ok && ext == exp.at("extends").get<bool>();
        sink.check(ok, "k-extension",
                   "K|boundary = " + int_str(kr.residue) + " mod " + int_str(kr.order) +
                       (ext ? ", extends over the rational ball" : ", does not extend"),
                   v);
    }

    // Meridian sweep against the last-sphere generator.
    if (exp.contains("meridian_multiple")) {
        Int want = json_int(exp.at("meridian_multiple"));
        std::size_t gen = chain.length() - 1;
        bool found = false;
        std::size_t at = 0;
        Int order;
        for (std::size_t j = 0; j < chain.length() && !found; ++j) {
            auto b = meridian_class(chain, j, gen);
            order = b.order;
            if (b.residue == mod_euclid(want, b.order) ||
                b.residue == mod_euclid(-want, b.order)) {
                found = true;
                at = j;
            }
        }
        bool coprime = found && gcd(want, order) == 1;
        json v;
        v["multiple"] = int_str(want);
        v["vertex"] = at;
        v["coprime"] = coprime;
        sink.check(found && coprime, "meridian",
                   found ? "vertex " + std::to_string(at) + " realizes " + int_str(want) +
                               " x generator (coprime to " + int_str(order) + ")"
                         : "no vertex realizes the expected multiple",
                   v);
    } else {
        sink.skip("meridian", "no expected multiple in scenario");
    }

    // Chamber comparison against the positive-scalar-curvature side.
    if (s.alpha) {
        HomologyClass k = canonical_characteristic(amb);
        HomologyClass h = h_class(amb);
        Int kh = pair(k, h), ka = pair(k, *s.alpha), ah = pair(*s.alpha, h),
            aa = pair(*s.alpha, *s.alpha);
        auto res = swsearch::wall_test(k, h, *s.alpha);
        json v;
        v["K.h"] = int_str(kh);
        v["K.alpha"] = int_str(ka);
        v["alpha.h"] = int_str(ah);
        v["alpha.alpha"] = int_str(aa);
        v["result"] = res == swsearch::WallResult::wall
                          ? "wall"
                          : res == swsearch::WallResult::same_chamber ? "same" : "on-wall";
        bool ok = true;
        if (exp.contains("wall")) ok = (res == swsearch::WallResult::wall) ==
                                       exp.at("wall").get<bool>();
        sink.check(ok, "chamber",
                   "K(h)=" + int_str(kh) + " K(alpha)=" + int_str(ka) + " alpha.h=" +
                       int_str(ah) + " alpha^2=" + int_str(aa) +
                       (res == swsearch::WallResult::wall
                            ? ": SW nonzero (odd number of walls = 1)"
                            : ": same chamber"),
                   v);
    } else {
        sink.skip("chamber", "no period class in scenario");
    }

    // Blow-down certificate for the rational ball.
    {
        auto cert = embedding_certificate(chain, max_mult);
        bool ok = false;
        json v;
        if (cert) {
            auto red = blow_down_reduce(attach_unknot(chain, *cert));
            ok = red.count == chain.length() && red.reduced.vertex_count() == 1 &&
                 sgn(red.reduced.framings[0]) == 0;
            json att = json::array();
            for (const auto& m : *cert) att.push_back(int_str(m));
            v["attachment"] = att;
            v["blowdowns"] = red.count;
            if (exp.contains("certificate_count"))
                ok = ok && red.count == exp.at("certificate_count").get<std::size_t>();
            sink.check(ok, "certificate",
                       "reduces to a single 0-framed vertex in " + std::to_string(red.count) +
                           " blow-downs",
                       v);
        } else {
            sink.fail("certificate", "no attachment found within max multiplicity " +
                                         std::to_string(max_mult));
        }
    }
}

inline void run_appendix(const Scenario& s, StepSink& sink) {
    using namespace rbd::fibration;
    const json& exp = s.expected;
    if (!s.monodromy.empty()) {
        Mat2 prod = word_product(s.monodromy);
        bool identity = prod == Mat2::identity();
        json v;
        json rows = json::array();
        rows.push_back(json::array({int_str(prod.a[0][0]), int_str(prod.a[0][1])}));
        rows.push_back(json::array({int_str(prod.a[1][0]), int_str(prod.a[1][1])}));
        v["product"] = rows;
        bool ok = identity;
        if (exp.contains("word_identity")) ok = identity == exp.at("word_identity").get<bool>();
        sink.check(ok, "monodromy", identity ? "word product is the identity"
                                             : "word product is not the identity",
                   v);
    } else {
        sink.skip("monodromy", "no word in scenario");
    }

    if (!s.fibers.empty()) {
        int total = 0;
        json each = json::array();
        for (const auto& f : s.fibers) {
            int e = fiber_euler(f);
            each.push_back(e);
            total += e;
        }
        json v;
        v["each"] = each;
        v["total"] = total;
        bool ok = true;
        if (exp.contains("fiber_euler_total"))
            ok = total == exp.at("fiber_euler_total").get<int>();
        sink.check(ok, "fiber-euler", "total Euler characteristic " + std::to_string(total), v);
    } else {
        sink.skip("fiber-euler", "no fiber list in scenario");
    }

    if (s.pencil_p1 && s.pencil_p2) {
        auto rep = pencil_singular_members(*s.pencil_p1, *s.pencil_p2);
        json v;
        v["determinant"] = rep.determinant.to_string();
        v["square_free"] = rep.square_free.to_string();
        v["distinct_roots"] = rep.distinct_roots;
        v["singular_members"] = rep.singular_member_count;
        json irr = json::array();
        for (const auto& [f, n] : rep.irrational_factors) {
            json e;
            e["factor"] = f.to_string();
            e["roots"] = n;
            irr.push_back(e);
        }
        v["irrational_factors"] = irr;
        bool ok = true;
        if (exp.contains("determinant")) {
            RationalPoly want = json_poly(exp.at("determinant"));
            ok = ok && want == rep.determinant;
        }
        if (exp.contains("singular_members"))
            ok = ok && rep.singular_member_count == exp.at("singular_members").get<int>();
        if (exp.contains("distinct_roots"))
            ok = ok && rep.distinct_roots == exp.at("distinct_roots").get<int>();
        sink.check(ok, "pencil",
                   "determinant " + rep.determinant.to_string() + ", " +
                       std::to_string(rep.singular_member_count) + " singular members",
                   v);

        auto bp = base_points(*s.pencil_p1, *s.pencil_p2);
        json w;
        json mults = json::array();
        for (const auto& m : bp.multiplicities()) mults.push_back(int_str(m));
        w["multiplicities"] = mults;
        w["total"] = int_str(bp.total);
        bool bok = true;
        if (exp.contains("base_multiplicities")) {
            std::vector<Int> want;
            for (const auto& m : exp.at("base_multiplicities")) want.push_back(json_int(m));
            bok = want == bp.multiplicities();
        }
        std::ostringstream os;
        os << "multiplicities";
        for (const auto& m : bp.multiplicities()) os << " " << m.get_str();
        os << ", total " << bp.total.get_str();
        sink.check(bok, "base-points", os.str(), w);
    } else {
        sink.skip("pencil", "no pencil in scenario");
        sink.skip("base-points", "no pencil in scenario");
    }
}

inline void run_corollary(const Scenario& s, StepSink& sink) {
    const json& exp = s.expected;
    if (s.initial_basics.empty()) throw ScenarioError("corollary scenario needs initial classes");
    swsearch::BasicClassSet set;
    set.ambient = lattice::AmbientLattice{s.ambient_n};
    for (const auto& c : s.initial_basics) set.insert(c);
    std::vector<std::size_t> counts;
    std::size_t times = exp.contains("counts") ? exp.at("counts").size() : 3;
    for (std::size_t t = 0; t < times; ++t)
        counts.push_back(swsearch::blow_up_basics(set, t).size());
    json v;
    v["counts"] = counts;
    bool ok = true;
    if (exp.contains("counts")) {
        const auto& want = exp.at("counts");
        ok = want.size() == counts.size();
        for (std::size_t i = 0; ok && i < counts.size(); ++i)
            ok = counts[i] == want.at(i).get<std::size_t>();
    }
    std::ostringstream os;
    os << "basic-class counts";
    for (auto c : counts) os << " " << c;
    sink.check(ok, "blowup-counts", os.str(), v);
}

}  // namespace detail

inline Report run_scenario(const Scenario& s, long max_mult, unsigned workers) {
    Report rep;
    rep.scenario = s.name;
    detail::StepSink sink{rep};
    if (s.kind == "blowdown")
        detail::run_blowdown(s, sink, max_mult, workers);
    else if (s.kind == "appendix")
        detail::run_appendix(s, sink);
    else if (s.kind == "corollary")
        detail::run_corollary(s, sink);
    else
        throw ScenarioError("unknown scenario kind '" + s.kind + "'");

    rep.overall = !sink.any_fail;
    if (!rep.overall) {
        rep.conclusion = "verification failed";
    } else if (s.kind == "blowdown") {
        bool full_sw = true;
        for (const auto& step : rep.steps)
            if (step.status == "skip" &&
                (step.name == "enumeration" || step.name == "chamber" ||
                 step.name == "configuration"))
                full_sw = false;
        rep.conclusion = full_sw
                             ? "exotic: SW nonvanishing in the unique small-perturbation chamber"
                             : "topological checks passed; SW chamber step not applicable";
    } else {
        rep.conclusion = "all checks passed";
    }
    return rep;
}

}  // namespace rbd::cli
