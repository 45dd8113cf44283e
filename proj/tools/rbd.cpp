// Command-line front end: single computations (continued fractions, Wahl
// chains, complements, enumerations, certificates, monodromy, pencils) and
// the full scenario reproduction pipeline.
//
// Exit codes: 0 all checks pass, 1 a verification mismatch, 2 input error.

#include "rbd/scenario.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace rbd;
using cli::json;

struct CommonOpts {
    std::string scenario_path;
    std::string emit = "text";
    long max_mult = 3;
    unsigned parallel = 1;
};

void print(const json& j, const std::string& emit) {
    if (emit == "json") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    if (emit != "text") throw cli::ScenarioError("unknown emit format '" + emit + "'");
    for (const auto& [k, v] : j.items())
        std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
}

plumbing::LinearChain chain_from_options(const CommonOpts& opts, long p, long q,
                                         const std::vector<long>& weights) {
    if (!opts.scenario_path.empty()) {
        auto s = cli::load_scenario(opts.scenario_path);
        if (!s.chain) throw cli::ScenarioError("scenario has no chain");
        return *s.chain;
    }
    if (p > 0 && q > 0) return plumbing::cf_expand(p, q).reversed();
    if (!weights.empty()) return plumbing::LinearChain(std::vector<Int>(weights.begin(), weights.end()));
    throw cli::ScenarioError("need --scenario, (-p, -q) or --weights");
}

json chain_json(const plumbing::LinearChain& c) {
    json w = json::array();
    for (const auto& d : c.weights) w.push_back(d.get_str());
    return w;
}

json graph_json(const plumbing::FramedGraph& g) {
    json out;
    json vertices = json::array();
    for (const auto& f : g.framings) vertices.push_back(f.get_str());
    out["vertices"] = vertices;
    json edges = json::array();
    for (const auto& [e, m] : g.edges) edges.push_back({e.first, e.second, m.get_str()});
    out["edges"] = edges;
    return out;
}

int cmd_cf(const CommonOpts& opts, long p, long q) {
    auto c = plumbing::cf_expand(p, q);
    json out;
    out["p"] = p;
    out["q"] = q;
    out["weights"] = chain_json(c);
    out["length"] = c.length();
    print(out, opts.emit);
    return 0;
}

int cmd_chain(const CommonOpts& opts, const std::vector<long>& weights) {
    plumbing::LinearChain c(std::vector<Int>(weights.begin(), weights.end()));
    Rat v = plumbing::cf_eval(c);
    json out;
    out["weights"] = chain_json(c);
    out["value"] = to_string(v);
    // Recognize a (p, q) source: value must be -p^2/(pq-1).
    Int num = -v.get_num(), den = v.get_den();
    bool recognized = false;
    if (sgn(num) > 0 && is_perfect_square(num)) {
        Int p = isqrt(num);
        if (divisible(den + 1, p)) {
            Int q = exact_div(den + 1, p);
            if (p > q && q >= 1 && gcd(p, q) == 1 &&
                plumbing::cf_expand(p, q).equal_up_to_reversal(c)) {
                recognized = true;
                out["p"] = p.get_str();
                out["q"] = q.get_str();
            }
        }
    }
    out["wahl"] = recognized;
    print(out, opts.emit);
    return 0;
}

int cmd_wahl(const CommonOpts& opts, std::size_t max_len) {
    auto chains = plumbing::wahl_generate(max_len);
    json out;
    out["max_len"] = max_len;
    out["count"] = chains.size();
    json list = json::array();
    for (const auto& w : chains) {
        json row = json::array();
        for (const auto& d : w) row.push_back(d.get_str());
        list.push_back(row);
    }
    out["chains"] = list;
    print(out, opts.emit);
    return 0;
}

cli::Scenario require_scenario(const CommonOpts& opts) {
    if (opts.scenario_path.empty()) throw cli::ScenarioError("this command needs --scenario");
    return cli::load_scenario(opts.scenario_path);
}

int cmd_verify_config(const CommonOpts& opts) {
    auto s = require_scenario(opts);
    if (s.classes.empty() || !s.chain)
        throw cli::ScenarioError("scenario has no class list to verify");
    embedding::SphereConfiguration cfg(lattice::AmbientLattice{s.ambient_n}, s.classes, *s.chain);
    auto rep = embedding::verify_configuration(cfg);
    json out;
    out["pass"] = rep.pass;
    json fails = json::array();
    for (const auto& f : rep.failures) fails.push_back(f.describe());
    out["failures"] = fails;
    print(out, opts.emit);
    return rep.pass ? 0 : 1;
}

int cmd_complement(const CommonOpts& opts) {
    auto s = require_scenario(opts);
    if (s.classes.empty()) throw cli::ScenarioError("scenario has no class list");
    lattice::AmbientLattice amb{s.ambient_n};
    auto comp = lattice::orthogonal_complement(s.classes, amb);
    json out;
    out["rank"] = comp.size();
    out["discriminant"] = abs(det(lattice::gram(comp))).get_str();
    json basis = json::array();
    for (const auto& b : comp) {
        json row = json::array();
        for (const auto& c : b.coeffs) row.push_back(c.get_str());
        basis.push_back(row);
    }
    out["basis"] = basis;
    print(out, opts.emit);
    return 0;
}

int cmd_enumerate(const CommonOpts& opts) {
    auto s = require_scenario(opts);
    if (!s.constraints) throw cli::ScenarioError("scenario has no constraint file");
    std::vector<swsearch::AdjunctionConstraint> cons;
    for (std::size_t i = 0; i < s.constraints->basis.size(); ++i)
        cons.emplace_back(s.constraints->basis[i], s.constraints->genera[i]);
    IntMat g = lattice::gram(s.constraints->basis);
    embedding::BlowdownScenario bs{s.name, s.ambient_n, s.chain ? s.chain->length() : 0};
    auto inv = embedding::blowdown_invariants(bs);
    auto res = swsearch::enumerate_candidates(cons, s.constraints->derived, g, inv.chi, inv.sigma,
                                              opts.parallel);
    json out;
    out["stages"] = {res.stage1, res.stage2, res.stage3};
    json survivors = json::array();
    for (const auto& sv : res.survivors) {
        json row = json::array();
        for (const auto& e : sv) row.push_back(e.get_str());
        survivors.push_back(row);
    }
    out["survivors"] = survivors;
    json dims = json::array();
    for (const auto& d : res.survivor_dimensions) dims.push_back(d.get_str());
    out["dimensions"] = dims;
    print(out, opts.emit);
    return 0;
}

int cmd_chamber(const CommonOpts& opts) {
    auto s = require_scenario(opts);
    if (!s.alpha) throw cli::ScenarioError("scenario has no period class");
    lattice::AmbientLattice amb{s.ambient_n};
    auto k = lattice::canonical_characteristic(amb);
    auto h = lattice::h_class(amb);
    auto res = swsearch::wall_test(k, h, *s.alpha);
    json out;
    out["K.h"] = lattice::pair(k, h).get_str();
    out["K.alpha"] = lattice::pair(k, *s.alpha).get_str();
    out["alpha.h"] = lattice::pair(*s.alpha, h).get_str();
    out["alpha.alpha"] = lattice::pair(*s.alpha, *s.alpha).get_str();
    out["result"] = res == swsearch::WallResult::wall
                        ? "wall"
                        : res == swsearch::WallResult::same_chamber ? "same" : "on-wall";
    print(out, opts.emit);
    return 0;
}

int cmd_extend_k(const CommonOpts& opts, long p, long q, const std::vector<long>& weights) {
    auto chain = chain_from_options(opts, p, q, weights);
    auto kr = plumbing::k_restriction(chain, 0);
    json out;
    out["residue"] = kr.residue.get_str();
    out["order"] = kr.order.get_str();
    out["extends"] = plumbing::extends_over_ball(chain, kr);
    print(out, opts.emit);
    return 0;
}

int cmd_meridian(const CommonOpts& opts, long p, long q, const std::vector<long>& weights,
                 std::optional<std::size_t> vertex, std::optional<std::size_t> generator) {
    auto chain = chain_from_options(opts, p, q, weights);
    std::size_t gen = generator.value_or(chain.length() - 1);
    json out;
    out["generator_vertex"] = gen;
    if (vertex) {
        auto b = plumbing::meridian_class(chain, *vertex, gen);
        out["vertex"] = *vertex;
        out["residue"] = b.residue.get_str();
        out["order"] = b.order.get_str();
    } else {
        json list = json::array();
        for (std::size_t j = 0; j < chain.length(); ++j)
            list.push_back(plumbing::meridian_class(chain, j, gen).residue.get_str());
        out["residues"] = list;
    }
    print(out, opts.emit);
    return 0;
}

int cmd_blowdown_cert(const CommonOpts& opts, long p, long q, const std::vector<long>& weights) {
    auto chain = chain_from_options(opts, p, q, weights);
    auto cert = plumbing::embedding_certificate(chain, opts.max_mult);
    json out;
    if (!cert) {
        out["found"] = false;
        print(out, opts.emit);
        return 1;
    }
    out["found"] = true;
    json att = json::array();
    for (const auto& m : *cert) att.push_back(m.get_str());
    out["attachment"] = att;
    auto attached = plumbing::attach_unknot(chain, *cert);
    out["graph"] = graph_json(attached);
    auto red = plumbing::blow_down_reduce(attached);
    out["blowdowns"] = red.count;
    json trace = json::array();
    for (const auto& step : red.trace) trace.push_back(step.vertex);
    out["trace"] = trace;
    out["reduced"] = graph_json(red.reduced);
    print(out, opts.emit);
    return 0;
}

int cmd_monodromy(const CommonOpts& opts) {
    auto s = require_scenario(opts);
    if (s.monodromy.empty()) throw cli::ScenarioError("scenario has no monodromy word");
    auto prod = fibration::word_product(s.monodromy);
    json out;
    json rows = json::array();
    rows.push_back(json::array({prod.a[0][0].get_str(), prod.a[0][1].get_str()}));
    rows.push_back(json::array({prod.a[1][0].get_str(), prod.a[1][1].get_str()}));
    out["product"] = rows;
    out["identity"] = prod == fibration::Mat2::identity();
    print(out, opts.emit);
    return 0;
}

int cmd_pencil(const CommonOpts& opts) {
    auto s = require_scenario(opts);
    if (!s.pencil_p1 || !s.pencil_p2) throw cli::ScenarioError("scenario has no pencil");
    auto rep = fibration::pencil_singular_members(*s.pencil_p1, *s.pencil_p2);
    json out;
    out["determinant"] = rep.determinant.to_string();
    out["square_free"] = rep.square_free.to_string();
    out["distinct_roots"] = rep.distinct_roots;
    json roots = json::array();
    for (const auto& r : rep.rational_roots) roots.push_back(to_string(r));
    out["rational_roots"] = roots;
    json irr = json::array();
    for (const auto& [f, n] : rep.irrational_factors)
        irr.push_back(f.to_string() + ": " + std::to_string(n) + " roots, irrational");
    out["irrational_factors"] = irr;
    out["t2_zero_member"] = rep.t2_zero_reason;
    out["singular_members"] = rep.singular_member_count;
    auto bp = fibration::base_points(*s.pencil_p1, *s.pencil_p2);
    json mults = json::array();
    for (const auto& m : bp.multiplicities()) mults.push_back(m.get_str());
    out["base_multiplicities"] = mults;
    out["base_total"] = bp.total.get_str();
    print(out, opts.emit);
    return 0;
}

int cmd_reproduce(const CommonOpts& opts) {
    auto s = require_scenario(opts);
    auto rep = cli::run_scenario(s, opts.max_mult, opts.parallel);
    std::cout << cli::emit(rep, opts.emit);
    return rep.overall ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations for rational blow-downs of rational surfaces"};
    app.require_subcommand(1);

    CommonOpts opts;
    long p = 0, q = 0;
    std::vector<long> weights;
    std::optional<std::size_t> vertex, generator;
    std::size_t max_len = 8;

    auto add_common = [&](CLI::App* cmd, bool with_scenario = true) {
        cmd->add_option("--emit", opts.emit, "output format: text|json")
            ->check(CLI::IsMember({"text", "json"}));
        if (with_scenario) cmd->add_option("--scenario", opts.scenario_path, "scenario JSON file");
    };
    auto add_chain_opts = [&](CLI::App* cmd) {
        cmd->add_option("-p", p, "p of C(p,q)");
        cmd->add_option("-q", q, "q of C(p,q)");
        cmd->add_option("--weights", weights, "chain weights, comma separated")->delimiter(',');
    };

    auto* cf = app.add_subcommand("cf", "continued-fraction expansion of -p^2/(pq-1)");
    add_common(cf, false);
    cf->add_option("-p", p, "p")->required();
    cf->add_option("-q", q, "q")->required();

    auto* chain = app.add_subcommand("chain", "evaluate a chain and recognize its (p,q) source");
    add_common(chain, false);
    chain->add_option("--weights", weights, "chain weights, comma separated")
        ->delimiter(',')
        ->required();

    auto* wahl = app.add_subcommand("wahl", "chains generated from (-4) by the end rules");
    add_common(wahl, false);
    wahl->add_option("--max-len", max_len, "maximum chain length");

    auto* verify = app.add_subcommand("verify-config", "check a configuration's Gram matrix");
    add_common(verify);

    auto* complement = app.add_subcommand("complement", "orthogonal complement of a configuration");
    add_common(complement);

    auto* enumerate = app.add_subcommand("enumerate-basic", "candidate basic-class enumeration");
    add_common(enumerate);
    enumerate->add_option("--parallel", opts.parallel, "worker count");

    auto* chamber = app.add_subcommand("chamber", "wall test against the reference chamber");
    add_common(chamber);

    auto* extend = app.add_subcommand("extend-k", "restriction of K to the boundary lens space");
    add_common(extend);
    add_chain_opts(extend);

    auto* meridian = app.add_subcommand("meridian", "meridian residues in boundary homology");
    add_common(meridian);
    add_chain_opts(meridian);
    std::size_t vertex_arg = 0, generator_arg = 0;
    auto* vopt = meridian->add_option("--vertex", vertex_arg, "vertex index");
    auto* gopt = meridian->add_option("--generator", generator_arg, "generator vertex index");

    auto* cert = app.add_subcommand("blowdown-cert", "attachment certificate and blow-down trace");
    add_common(cert);
    add_chain_opts(cert);
    cert->add_option("--max-mult", opts.max_mult, "max edge multiplicity in the search");

    auto* monodromy = app.add_subcommand("monodromy", "product of a monodromy word");
    add_common(monodromy);

    auto* pencil = app.add_subcommand("pencil", "singular members and base points of a pencil");
    add_common(pencil);

    auto* reproduce = app.add_subcommand("reproduce", "run the full pipeline for a scenario");
    add_common(reproduce);
    reproduce->add_option("--max-mult", opts.max_mult, "max edge multiplicity for certificates");
    reproduce->add_option("--parallel", opts.parallel, "enumeration worker count");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cf->parsed()) return cmd_cf(opts, p, q);
        if (chain->parsed()) return cmd_chain(opts, weights);
        if (wahl->parsed()) return cmd_wahl(opts, max_len);
        if (verify->parsed()) return cmd_verify_config(opts);
        if (complement->parsed()) return cmd_complement(opts);
        if (enumerate->parsed()) return cmd_enumerate(opts);
        if (chamber->parsed()) return cmd_chamber(opts);
        if (extend->parsed()) return cmd_extend_k(opts, p, q, weights);
        if (meridian->parsed()) {
            if (*vopt) vertex = vertex_arg;
            if (*gopt) generator = generator_arg;
            return cmd_meridian(opts, p, q, weights, vertex, generator);
        }
        if (cert->parsed()) return cmd_blowdown_cert(opts, p, q, weights);
        if (monodromy->parsed()) return cmd_monodromy(opts);
        if (pencil->parsed()) return cmd_pencil(opts);
        if (reproduce->parsed()) return cmd_reproduce(opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
