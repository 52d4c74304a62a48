// lefkit command-line front end: analyze / perazzo / rollercoaster / sweep.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lefkit/algebra.hpp"
#include "lefkit/graph_enum.hpp"
#include "lefkit/perazzo.hpp"
#include "lefkit/rollercoaster.hpp"

using json = nlohmann::ordered_json;
using namespace lefkit;

namespace {

constexpr long kMonomialGuardrail = 50000;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoi(tok));
    }
    return out;
}

// "complete:5,minus-edge" / "star:4" / "broom:3,minus-triangle"
Graph from_generator(const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) parts.push_back(tok);
    if (parts.empty()) throw std::runtime_error("empty generator spec");

    auto colon = parts[0].find(':');
    if (colon == std::string::npos)
        throw std::runtime_error("generator must look like name:n");
    std::string name = parts[0].substr(0, colon);
    int n = std::stoi(parts[0].substr(colon + 1));

    Graph g = [&] {
        if (name == "complete") return complete_graph(n);
        if (name == "star") return star_graph(n);
        if (name == "broom") return broom_graph(n);
        throw std::runtime_error("unknown generator: " + name);
    }();
    for (std::size_t i = 1; i < parts.size(); ++i) {
        if (parts[i] == "minus-edge")
            g = remove_edges(g, {{1, 2}});
        else if (parts[i] == "minus-triangle")
            g = remove_edges(g, {{1, 2}, {1, 3}, {2, 3}});
        else
            throw std::runtime_error("unknown modifier: " + parts[i]);
    }
    return g;
}

std::vector<int> resolve_caps(const std::string& caps_str, int nvars) {
    std::vector<int> caps = parse_int_list(caps_str);
    if (caps.size() == 1) caps.assign(nvars, caps[0]);
    if (static_cast<int>(caps.size()) != nvars)
        throw std::runtime_error("need " + std::to_string(nvars) + " caps, got " +
                                 std::to_string(caps.size()));
    return caps;
}

// Graded dimensions without building monomial bases, for the size guardrail.
std::vector<mpz_class> predicted_dims(const SimplicialComplex& c, const std::vector<int>& caps) {
    int total = 0;
    for (int d : caps) total += d - 1;
    std::vector<mpz_class> dims(total + 1, 0);
    for (int k = 0; k <= c.dimension() + 1; ++k)
        for (std::uint64_t face : c.faces_of_card(k)) {
            std::vector<mpz_class> poly = {1};
            for (int v = 1; v <= c.vertex_count(); ++v) {
                if (!(face & (1ull << (v - 1)))) continue;
                std::vector<mpz_class> next(poly.size() + caps[v - 1] - 2, 0);
                for (std::size_t i = 0; i < poly.size(); ++i)
                    for (int e = 1; e < caps[v - 1]; ++e) next[i + e - 1] += poly[i];
                poly = std::move(next);
            }
            for (std::size_t i = 0; i < poly.size(); ++i) dims[k + i] += poly[i];
        }
    while (dims.size() > 1 && dims.back() == 0) dims.pop_back();
    return dims;
}

void enforce_guardrail(const std::vector<mpz_class>& dims, bool force) {
    mpz_class biggest = 0;
    for (const auto& d : dims) biggest = std::max(biggest, d);
    if (biggest > kMonomialGuardrail && !force) {
        std::cerr << "refusing: largest graded piece has " << biggest << " monomials (limit "
                  << kMonomialGuardrail << "); pass --force to override\n";
        std::exit(3);
    }
}

int default_jobs() {
    if (const char* env = std::getenv("LEFKIT_JOBS")) {
        int j = std::atoi(env);
        if (j >= 1) return j;
    }
    return 1;
}

const char* status_name(MapStatus s) {
    switch (s) {
        case MapStatus::injective: return "injective";
        case MapStatus::surjective: return "surjective";
        case MapStatus::bijective: return "bijective";
        case MapStatus::deficient: return "deficient";
    }
    return "?";
}

json hilbert_json(const std::vector<mpz_class>& h) {
    json out = json::array();
    for (const auto& v : h) out.push_back(v.get_str());
    return out;
}

json maps_json(const std::vector<MapRecord>& maps) {
    json out = json::array();
    for (const auto& m : maps) {
        json rec;
        rec["i"] = m.degree;
        rec["s"] = m.shift;
        rec["dims"] = {m.source_dim, m.target_dim};
        rec["rank"] = m.rank;
        rec["status"] = status_name(m.status);
        rec["certified"] = m.certified;
        out.push_back(rec);
    }
    return out;
}

void emit(const json& report, const std::string& format, const std::string& out_path) {
    std::ostringstream body;
    if (format == "json") {
        body << report.dump(2) << "\n";
    } else if (format == "csv") {
        body << "i,s,source,target,rank,status\n";
        if (report.contains("maps"))
            for (const auto& m : report["maps"])
                body << m["i"] << "," << m["s"] << "," << m["dims"][0] << "," << m["dims"][1]
                     << "," << m["rank"] << "," << m["status"].get<std::string>() << "\n";
    } else {  // text
        if (report.contains("hilbert")) {
            body << "hilbert:";
            for (const auto& v : report["hilbert"]) body << " " << v.get<std::string>();
            body << "\n";
        }
        if (report.contains("verdicts"))
            for (const auto& [k, v] : report["verdicts"].items())
                body << k << ": " << v.dump() << "\n";
        if (report.contains("maps"))
            for (const auto& m : report["maps"])
                body << "map i=" << m["i"] << " s=" << m["s"] << " " << m["dims"][0] << "->"
                     << m["dims"][1] << " rank=" << m["rank"] << " "
                     << m["status"].get<std::string>() << "\n";
    }
    if (out_path.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << body.str();
    }
}

long ms_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 t0)
        .count();
}

struct CommonOpts {
    std::string generator, graph_path, complex_path, caps = "2";
    std::string format = "json", out_path;
    unsigned long characteristic = 0;
    int jobs = default_jobs();
    bool force = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_complex = true) {
    cmd->add_option("--generator", o.generator, "named graph: complete:n | star:n | broom:m, "
                                                "modifiers minus-edge, minus-triangle");
    cmd->add_option("--graph", o.graph_path, "edge-list file: 'n m' then m lines 'u v'");
    if (with_complex)
        cmd->add_option("--complex", o.complex_path, "facet-list file: 'm s' then s facet lines");
    cmd->add_option("--caps", o.caps, "power caps, single value or comma list (default 2)");
    cmd->add_option("--char", o.characteristic, "field characteristic (0 = rationals)");
    cmd->add_option("--jobs", o.jobs, "worker threads (default $LEFKIT_JOBS or 1)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--format", o.format, "json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", o.out_path, "write output to a file instead of stdout");
    cmd->add_flag("--force", o.force, "ignore the size guardrail");
}

Graph load_graph(const CommonOpts& o) {
    if (!o.generator.empty()) return from_generator(o.generator);
    if (!o.graph_path.empty()) return parse_graph(slurp(o.graph_path));
    throw std::runtime_error("need --generator or --graph");
}

json config_json(const CommonOpts& o) {
    json cfg;
    cfg["caps"] = o.caps;
    cfg["char"] = o.characteristic;
    cfg["jobs"] = o.jobs;
    return cfg;
}

int cmd_analyze(const CommonOpts& o, bool do_whisker, bool do_wlp, bool do_slp,
                const std::string& witness_spec) {
    auto t0 = std::chrono::steady_clock::now();
    json report;
    json timings;

    Graph base(1, {});
    bool have_graph = !o.generator.empty() || !o.graph_path.empty();
    SimplicialComplex complex(0, std::vector<std::uint64_t>{});
    std::vector<int> caps;

    if (have_graph) {
        base = load_graph(o);
        report["input"] = !o.generator.empty() ? o.generator : o.graph_path;
        Graph target = do_whisker ? whisker(base) : base;
        complex = independence_complex(target);
        if (do_whisker) {
            caps = resolve_caps(o.caps, base.vertex_count());
            std::vector<int> doubled(caps);
            doubled.insert(doubled.end(), caps.begin(), caps.end());
            caps = doubled;
        } else {
            caps = resolve_caps(o.caps, target.vertex_count());
        }
    } else if (!o.complex_path.empty()) {
        complex = parse_complex(slurp(o.complex_path));
        report["input"] = o.complex_path;
        caps = resolve_caps(o.caps, complex.vertex_count());
    } else {
        throw std::runtime_error("need --generator, --graph, or --complex");
    }
    report["config"] = config_json(o);
    report["config"]["whisker"] = do_whisker;

    enforce_guardrail(predicted_dims(complex, caps), o.force);

    GradedMonomialAlgebra algebra = build_algebra(complex, caps);
    report["hilbert"] = hilbert_json(algebra.hilbert());
    timings["build_ms"] = ms_since(t0);

    json verdicts = json::object();
    json maps = json::array();
    if (do_slp) {
        auto t1 = std::chrono::steady_clock::now();
        LefschetzReport r = slp_check(algebra, FieldSpec{o.characteristic}, o.jobs);
        verdicts["wlp"] = r.wlp;
        verdicts["slp"] = r.slp;
        verdicts["field"] = r.field.name();
        maps = maps_json(r.maps);
        timings["slp_ms"] = ms_since(t1);
    } else if (do_wlp) {
        auto t1 = std::chrono::steady_clock::now();
        LefschetzReport r = wlp_check(algebra, FieldSpec{o.characteristic}, o.jobs);
        verdicts["wlp"] = r.wlp;
        verdicts["field"] = r.field.name();
        maps = maps_json(r.maps);
        timings["wlp_ms"] = ms_since(t1);
    }
    report["maps"] = maps;
    report["verdicts"] = verdicts;

    json witnesses = json::array();
    if (!witness_spec.empty()) {
        if (!have_graph || !do_whisker)
            throw std::runtime_error("--witness needs a graph input with --whisker");
        std::vector<int> c;
        if (witness_spec == "auto") {
            auto maximal = maximal_independent_sets(base);
            if (maximal.empty()) throw std::runtime_error("no independent set available");
            c = mask_to_vertices(maximal.front());
        } else if (witness_spec != "empty") {
            c = parse_int_list(witness_spec);
        }
        Witness w = non_surjectivity_witness(base, c);
        json wj;
        wj["independent_set"] = c;
        wj["degree"] = w.degree;
        wj["terms"] = json::array();
        for (const auto& [e, coeff] : w.expansion)
            wj["terms"].push_back({{"exponents", e}, {"coeff", coeff}});
        witnesses.push_back(wj);
    }
    report["witnesses"] = witnesses;
    timings["total_ms"] = ms_since(t0);
    report["timings"] = timings;

    emit(report, o.format, o.out_path);
    return 0;
}

int cmd_perazzo(const CommonOpts& o) {
    auto t0 = std::chrono::steady_clock::now();
    Graph g = load_graph(o);
    json report;
    report["input"] = !o.generator.empty() ? o.generator : o.graph_path;
    report["config"] = config_json(o);

    SimplicialComplex c = independence_complex(whisker(g));
    enforce_guardrail(predicted_dims(c, std::vector<int>(c.vertex_count(), 2)), o.force);

    report["facets"] = c.facets().size();
    report["vertices"] = c.vertex_count();
    report["perazzo"] = is_perazzo(c);

    IdealizationHilbert ih = idealization_hilbert(c);
    report["socle_degree"] = ih.socle_degree;
    report["hilbert"] = hilbert_json(ih.h);

    MultilinearForm f = simplicial_form(c);
    std::vector<long> dims = apolarity_dims(f);
    report["apolarity_dims"] = dims;
    bool match = dims.size() == ih.h.size();
    for (std::size_t i = 0; match && i < dims.size(); ++i)
        if (mpz_class(dims[i]) != ih.h[i]) match = false;
    report["dims_match"] = match;

    PerazzoVerdict v = perazzo_wlp_predicate(g);
    json verdicts;
    verdicts["alpha_criterion_applicable"] = v.applicable;
    verdicts["wlp_fails"] = v.wlp_fails;
    verdicts["restriction_degree"] = v.restriction_degree;
    verdicts["restriction_confirmed"] = v.restriction_confirmed;
    verdicts["cross_checked"] = v.cross_checked;
    verdicts["deficient_degree"] = v.deficient_degree;
    report["verdicts"] = verdicts;
    report["timings"] = {{"total_ms", ms_since(t0)}};

    emit(report, o.format, o.out_path);
    return 0;
}

int cmd_rollercoaster(int q, const std::string& pi_spec, const std::string& cert_path,
                      const std::string& scale, const std::string& eps,
                      const std::string& seq_spec, const CommonOpts& o) {
    json report;
    report["input"] = "q=" + std::to_string(q);
    report["config"] = config_json(o);

    std::vector<int> pi =
        pi_spec.empty() ? identity_permutation(q) : parse_int_list(pi_spec);
    TargetSequence t = target_sequence(q, pi);
    report["pi"] = t.pi;
    report["sequence"] = hilbert_json(t.a);
    report["c"] = t.c.get_str();

    json verdicts;
    verdicts["ratio_condition"] = ratio_condition(t.a);
    try {
        EpsilonBound b = epsilon_bound(t.a);
        verdicts["epsilon_bound"] = b.bound.get_str();
        json zero_pairs = json::array();
        for (auto [k, l] : b.zero_gap_pairs) zero_pairs.push_back({k, l});
        verdicts["equal_pair_sums"] = zero_pairs;
    } catch (const std::invalid_argument&) {
        // every pair sum ties (always the case at q = 2)
        verdicts["epsilon_bound"] = nullptr;
        verdicts["equal_pair_sums"] = "all";
    }
    verdicts["pair_order"] = pair_order_check(t.a, t.pi, default_pair_order_range(q));

    if (!cert_path.empty()) {
        Certificate cert{parse_graph(slurp(cert_path)), mpq_class(scale), mpq_class(eps)};
        cert.scaling_factor.canonicalize();
        cert.epsilon.canonicalize();
        // verify against an explicitly supplied sequence, or the target one
        std::vector<mpz_class> target = t.a;
        if (!seq_spec.empty()) {
            target.clear();
            std::stringstream ss(seq_spec);
            std::string tok;
            while (std::getline(ss, tok, ',')) target.emplace_back(tok);
            report["certificate_sequence"] = hilbert_json(target);
        }
        verdicts["certificate"] = certificate_check(cert, target);
    }
    report["verdicts"] = verdicts;

    emit(report, o.format, o.out_path);
    return 0;
}

int cmd_sweep(int max_vertices, bool bipartite_only, int min_alpha, const CommonOpts& o) {
    if (max_vertices > 6) {
        std::cerr << "refusing: sweep supports at most 6 vertices\n";
        return 3;
    }
    auto t0 = std::chrono::steady_clock::now();
    json report;
    report["input"] = "sweep<=" + std::to_string(max_vertices);
    report["config"] = config_json(o);
    report["config"]["bipartite_only"] = bipartite_only;
    report["config"]["min_alpha"] = min_alpha;

    long checked = 0;
    json counterexamples = json::array();
    for (int n = 1; n <= max_vertices; ++n)
        for (const Graph& g : all_graphs_up_to_iso(n)) {
            if (independence_number(g) < min_alpha) continue;
            if (bipartite_only && !bipartite_check(g)) continue;
            GradedMonomialAlgebra a =
                whiskered_algebra(g, std::vector<int>(g.vertex_count(), 2));
            LefschetzReport r = wlp_check(a, FieldSpec{o.characteristic}, o.jobs);
            ++checked;
            if (r.wlp) {
                json ce;
                ce["n"] = n;
                json edges = json::array();
                for (auto [u, v] : g.edges()) edges.push_back({u, v});
                ce["edges"] = edges;
                counterexamples.push_back(ce);
            }
        }
    report["checked"] = checked;
    report["counterexamples"] = counterexamples;
    report["verdicts"] = {{"all_fail_wlp", counterexamples.empty()}};
    report["timings"] = {{"total_ms", ms_since(t0)}};

    emit(report, o.format, o.out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"artinian monomial algebras, Lefschetz properties, Perazzo forms"};
    app.require_subcommand(1);

    CommonOpts a_opts;
    bool a_whisker = false, a_wlp = false, a_slp = false;
    std::string a_witness;
    CLI::App* analyze = app.add_subcommand("analyze", "Hilbert function and Lefschetz checks");
    add_common(analyze, a_opts);
    analyze->add_flag("--whisker", a_whisker, "whisker the graph before building the algebra");
    analyze->add_flag("--wlp", a_wlp, "run the weak Lefschetz check");
    analyze->add_flag("--slp", a_slp, "run the strong Lefschetz check");
    analyze->add_option("--witness", a_witness,
                        "non-surjectivity witness: 'auto', 'empty', or a vertex list");

    CommonOpts p_opts;
    CLI::App* perazzo = app.add_subcommand("perazzo", "simplicial Perazzo form of a whiskered graph");
    add_common(perazzo, p_opts, false);

    CommonOpts r_opts;
    int r_q = 0;
    std::string r_pi, r_cert, r_scale = "1", r_eps = "1", r_seq;
    CLI::App* roller = app.add_subcommand("rollercoaster", "target sequences and certificates");
    roller->add_option("--q", r_q, "sequence length")->required()->check(CLI::PositiveNumber);
    roller->add_option("--pi", r_pi, "permutation images of ceil(q/2)..q, comma separated");
    roller->add_option("--certificate", r_cert, "graph file to verify against the sequence");
    roller->add_option("--scale", r_scale, "certificate scaling factor T (rational)");
    roller->add_option("--epsilon", r_eps, "certificate tolerance (rational)");
    roller->add_option("--sequence", r_seq,
                       "verify the certificate against this comma-separated sequence "
                       "instead of the generated one");
    roller->add_option("--format", r_opts.format, "json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    roller->add_option("--out", r_opts.out_path, "write output to a file");

    CommonOpts s_opts;
    int s_max = 5, s_min_alpha = 3;
    bool s_bip = false;
    CLI::App* sweep = app.add_subcommand("sweep", "exhaustive WLP-failure sweep after whiskering");
    sweep->add_option("--max-vertices", s_max, "largest vertex count (at most 6)")->required();
    sweep->add_flag("--bipartite-only", s_bip, "restrict to bipartite graphs");
    sweep->add_option("--min-alpha", s_min_alpha, "independence number threshold (default 3)");
    sweep->add_option("--jobs", s_opts.jobs, "worker threads")->check(CLI::PositiveNumber);
    sweep->add_option("--format", s_opts.format, "json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sweep->add_option("--out", s_opts.out_path, "write output to a file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return cmd_analyze(a_opts, a_whisker, a_wlp, a_slp, a_witness);
        if (perazzo->parsed()) return cmd_perazzo(p_opts);
        if (roller->parsed())
            return cmd_rollercoaster(r_q, r_pi, r_cert, r_scale, r_eps, r_seq, r_opts);
        if (sweep->parsed()) return cmd_sweep(s_max, s_bip, s_min_alpha, s_opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
