#include "plab/io.hpp"

#include <fstream>
#include <sstream>

namespace plab {

json graph_to_json(const Graph& g) {
    json j;
    j["name"] = g.name();
    j["n"] = g.order();
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    j["edges"] = edges;
    return j;
}

Graph graph_from_json(const json& j) {
    Graph g(j.at("n").get<int>(),
            j.contains("name") && !j["name"].is_null() ? j["name"].get<std::string>() : "");
    for (const auto& e : j.at("edges"))
        g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    return g;
}

json product_to_json(const ProductGraph& pg) {
    json j = graph_to_json(pg.graph);
    json factors = json::array();
    for (const auto& f : pg.factors) factors.push_back(graph_to_json(f));
    j["factors"] = factors;
    return j;
}

ProductGraph product_from_json(const json& j) {
    std::vector<Graph> factors;
    for (const auto& f : j.at("factors")) factors.push_back(graph_from_json(f));
    auto pg = cartesian_product(factors);
    if (j.contains("name")) pg.graph.rename(j["name"].get<std::string>());
    if (j.contains("n") && j["n"].get<int>() != pg.order())
        throw std::invalid_argument("product JSON order mismatch");
    return pg;
}

json labelling_to_json(const Labelling& phi) {
    json j;
    j["mode"] = phi.mode == LabelMode::linear ? "linear" : "cyclic";
    if (phi.mode == LabelMode::cyclic)
        j["k"] = phi.modulus;
    else
        j["k"] = nullptr;
    j["labels"] = phi.labels;
    return j;
}

Labelling labelling_from_json(const json& j) {
    std::string mode = j.at("mode").get<std::string>();
    auto labels = j.at("labels").get<std::vector<int>>();
    if (mode == "linear") return linear_labelling(std::move(labels));
    if (mode == "cyclic")
        return cyclic_labelling(std::move(labels), j.at("k").get<int>());
    throw std::invalid_argument("labelling mode must be linear or cyclic");
}

json report_to_json(const VerificationReport& report) {
    json j;
    j["pass"] = report.pass;
    json violations = json::array();
    for (const auto& v : report.violations)
        violations.push_back({{"u", v.u},
                              {"v", v.v},
                              {"distance", v.distance},
                              {"required", v.required},
                              {"observed", v.observed}});
    j["violations"] = violations;
    j["pairs_checked"] = report.pairs_checked;
    j["no_hole"] = report.no_hole;
    return j;
}

json colouring_to_json(const ColouringReport& report) {
    json j;
    j["proper"] = report.proper;
    j["colours"] = report.colours;
    j["pairs_checked"] = report.pairs_checked;
    json clashes = json::array();
    for (const auto& v : report.clashes)
        clashes.push_back({{"u", v.u}, {"v", v.v}, {"distance", v.distance}});
    j["clashes"] = clashes;
    return j;
}

json solve_result_to_json(const SolveResult& result) {
    json j;
    j["invariant"] = invariant_name(result.invariant);
    switch (result.status) {
        case SolveResult::Status::finite: j["value"] = result.value; break;
        case SolveResult::Status::infinite: j["value"] = "infinity"; break;
        case SolveResult::Status::unresolved:
            j["value"] = "unresolved";
            j["bracket"] = json::array({result.bracket_lo, result.bracket_hi});
            break;
    }
    j["witness"] = result.witness ? labelling_to_json(*result.witness) : json();
    j["nodes"] = result.nodes;
    return j;
}

json construction_trace_to_json(const ConstructionResult& result) {
    json j;
    j["permutation"] = result.permutation;
    j["offsets"] = result.offsets.vectors;
    j["candidates_rejected_per_t"] = result.rejected_per_step;
    j["modulus"] = result.modulus;
    j["hypothesis_holds"] = result.hypothesis_holds;
    return j;
}

json instance_spec_to_json(const InstanceSpec& spec) {
    json j;
    j["name"] = spec.name;
    json factors = json::array();
    for (const auto& f : spec.factors) {
        json jf;
        jf["kind"] = f.kind;
        jf["n"] = f.n;
        if (f.kind == "edges") {
            json edges = json::array();
            for (auto [u, v] : f.edges) edges.push_back(json::array({u, v}));
            jf["edges"] = edges;
        }
        factors.push_back(jf);
    }
    j["factors"] = factors;
    j["l"] = spec.l;
    j["h"] = spec.h;
    j["q_l"] = spec.separation;
    j["gstar"] = spec.gstar;
    j["residue_numbered_tail"] = spec.residue_numbered_tail;
    j["seed"] = spec.seed;
    j["samples"] = spec.samples;
    j["density"] = spec.density;
    return j;
}

InstanceSpec instance_spec_from_json(const json& j) {
    InstanceSpec spec;
    spec.name = j.value("name", "");
    for (const auto& jf : j.at("factors")) {
        FactorSpec f;
        f.kind = jf.at("kind").get<std::string>();
        f.n = jf.at("n").get<int>();
        if (jf.contains("edges"))
            for (const auto& e : jf["edges"])
                f.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        spec.factors.push_back(std::move(f));
    }
    spec.l = j.at("l").get<int>();
    spec.h = j.at("h").get<int>();
    spec.separation = j.at("q_l").get<int>();
    if (j.contains("gstar")) spec.gstar = j["gstar"].get<std::vector<int>>();
    spec.residue_numbered_tail = j.value("residue_numbered_tail", true);
    spec.seed = j.value("seed", static_cast<std::uint64_t>(1));
    spec.samples = j.value("samples", 20);
    spec.density = j.value("density", 0.5);
    return spec;
}

json condition_to_json(const ConditionCheck& check) {
    return {{"name", check.name},
            {"lhs", check.lhs},
            {"rhs", check.rhs},
            {"holds", check.holds}};
}

json experiment_to_json(const ExperimentReport& report) {
    json j;
    j["instance"] = report.instance;
    j["l"] = report.l;
    j["h"] = report.h;
    j["q_l"] = report.separation;
    j["target"] = report.target;

    json conditions = json::array();
    for (const auto& c : report.conditions) {
        json jc = condition_to_json(c);
        if (c.name == "necessary_ball_condition")
            jc["ball_count"] = c.rhs + 1;  // printed bound omits the centre
        conditions.push_back(jc);
    }
    j["conditions"] = conditions;
    j["hypothesis_ok"] = report.hypothesis_ok;

    j["constructed"] = report.constructed;
    if (!report.constructed) j["stuck_step"] = report.stuck_step;
    j["constructed_span"] = report.constructed_span;
    j["verifications"] = {{"cyclic", report.cyclic_ok},
                          {"linear", report.linear_ok},
                          {"no_hole_cyclic", report.no_hole_cyclic_ok},
                          {"no_hole_linear", report.no_hole_linear_ok}};

    j["certificate"] = {{"order", report.certificate.order},
                        {"diameter", report.certificate.diameter
                                         ? json(*report.certificate.diameter)
                                         : json()},
                        {"accepted", report.certificate.accepted},
                        {"bound", report.certificate.bound}};

    j["chi"] = {{"ok", report.chi_ok},
                {"value", report.chi},
                {"pairs_checked", report.chi_pairs_checked}};

    j["reproduced"] = report.reproduced;
    if (report.invariant_value)
        j["invariants"] = {{"lambda", *report.invariant_value},
                           {"nlambda", *report.invariant_value},
                           {"sigma", *report.invariant_value},
                           {"nsigma", *report.invariant_value}};
    j["timings_ms"] = report.timings_ms;
    if (report.construction)
        j["trace"] = construction_trace_to_json(*report.construction);
    return j;
}

json sandwich_to_json(const SandwichReport& report) {
    json j;
    j["base"] = experiment_to_json(report.base);
    json samples = json::array();
    for (const auto& s : report.samples)
        samples.push_back({{"seed", s.seed},
                           {"edges", s.edge_count},
                           {"linear", s.linear_ok},
                           {"cyclic", s.cyclic_ok},
                           {"no_hole_linear", s.no_hole_linear_ok},
                           {"no_hole_cyclic", s.no_hole_cyclic_ok},
                           {"span", s.span_ok},
                           {"bijection", s.bijection_ok},
                           {"chi", s.chi_ok},
                           {"reproduced", s.reproduced}});
    j["samples"] = samples;
    j["all_reproduced"] = report.all_reproduced;
    return j;
}

std::string experiment_csv_header() {
    return "instance,l,h,condition,constructed,certificate,reproduced";
}

std::string experiment_csv_row(const ExperimentReport& report) {
    std::ostringstream out;
    out << report.instance << ',' << report.l << ',' << report.h << ','
        << (report.hypothesis_ok ? "true" : "false") << ',';
    if (report.constructed)
        out << report.constructed_span;
    else
        out << "stuck@" << report.stuck_step;
    out << ',' << report.certificate.bound << ','
        << (report.reproduced ? "true" : "false");
    return out.str();
}

Graph read_dimacs(std::istream& in, std::string name) {
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        char tag;
        ls >> tag;
        if (tag == 'c') continue;
        if (tag == 'p') {
            std::string kind;
            long long m;
            ls >> kind >> n >> m;
            if (!ls || n < 1) throw std::invalid_argument("bad DIMACS problem line");
        } else if (tag == 'e') {
            int u, v;
            ls >> u >> v;
            if (!ls) throw std::invalid_argument("bad DIMACS edge line");
            edges.emplace_back(u - 1, v - 1);
        }
    }
    if (n < 1) throw std::invalid_argument("DIMACS input without a problem line");
    return graph_from_edges(n, edges, std::move(name));
}

Graph read_graph_file(const std::string& path, const std::string& format) {
    if (format == "dimacs") {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open " + path);
        return read_dimacs(in, path);
    }
    if (format != "json")
        throw std::invalid_argument("unknown graph format: " + format);
    return graph_from_json(read_json_file(path));
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
    out << j.dump(2) << '\n';
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
    out << text;
}

}  // namespace plab
