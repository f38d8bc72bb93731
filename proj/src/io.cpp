#include "dks/io.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "dks/errors.hpp"
#include "json.hpp"

namespace dks {

namespace {

using nlohmann::json;

std::ifstream open_input(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    return is;
}

}  // namespace

void write_edge_list(const Graph& g, std::ostream& os) {
    os << g.node_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

Graph read_edge_list(std::istream& is) {
    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(is, line)) throw ParseError(1, "missing header line");
    ++line_no;
    int n = 0;
    long long m = 0;
    {
        std::istringstream ss(line);
        std::string extra;
        if (!(ss >> n >> m) || (ss >> extra))
            throw ParseError(line_no, "header must be \"n m\"");
    }
    if (n < 1) throw ParseError(line_no, "node count must be positive");
    if (m < 0) throw ParseError(line_no, "edge count must be non-negative");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!std::getline(is, line))
            throw ParseError(line_no + 1, "fewer edge lines than the header announced");
        ++line_no;
        std::istringstream ss(line);
        int u = 0, v = 0;
        std::string extra;
        if (!(ss >> u >> v) || (ss >> extra))
            throw ParseError(line_no, "edge line must be \"u v\"");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError(line_no, "edge endpoint out of range");
        if (u >= v) throw ParseError(line_no, "edges must satisfy u < v");
        edges.emplace_back(u, v);
    }
    try {
        return Graph(n, edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
    }
}

Graph read_edge_list_file(const std::string& path) {
    auto is = open_input(path);
    return read_edge_list(is);
}

void write_instance_metadata(const PlantedInstance& instance, std::ostream& os) {
    json doc;
    doc["n"] = instance.graph.node_count();
    doc["p"] = instance.p;
    doc["k"] = static_cast<int>(instance.planted.size());
    doc["seed"] = instance.seed;
    doc["planted"] = instance.planted;
    doc["rng"] =
        "xoshiro256** seeded via splitmix64; edges use the instance seed, "
        "clique placement uses seed+1";
    os << doc.dump(2) << '\n';
}

void write_trace_csv(const Trace& trace, std::ostream& os) {
    os << "iteration,density,best_density,temperature,accepted,region\n";
    char buf[160];
    for (const TraceRecord& r : trace.records) {
        std::snprintf(buf, sizeof(buf), "%" PRIu64 ",%.17g,%.17g,%.17g,%d,",
                      r.iteration, r.density, r.best_density, r.temperature,
                      r.accepted ? 1 : 0);
        os << buf;
        if (r.region > 0) os << r.region;
        os << '\n';
    }
}

namespace {

std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

double parse_double_field(const std::string& field, std::size_t line_no) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(field, &used);
    } catch (const std::exception&) {
        throw ParseError(line_no, "not a number: \"" + field + "\"");
    }
    if (used != field.size())
        throw ParseError(line_no, "trailing characters in number: \"" + field + "\"");
    return value;
}

std::uint64_t parse_uint_field(const std::string& field, std::size_t line_no) {
    if (field.empty() || field.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(line_no, "not a non-negative integer: \"" + field + "\"");
    try {
        return std::stoull(field);
    } catch (const std::out_of_range&) {
        throw ParseError(line_no, "integer out of range: \"" + field + "\"");
    }
}

}  // namespace

Trace read_trace_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw ParseError(1, "missing CSV header");
    if (line == "iteration,density,best_density,temperature,accepted,region\r")
        line.pop_back();
    if (line != "iteration,density,best_density,temperature,accepted,region")
        throw ParseError(1, "unexpected CSV header: \"" + line + "\"");
    Trace trace;
    std::size_t line_no = 1;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto fields = split_csv_row(line);
        if (fields.size() != 6)
            throw ParseError(line_no, "expected 6 fields, got " + std::to_string(fields.size()));
        TraceRecord r;
        r.iteration = parse_uint_field(fields[0], line_no);
        r.density = parse_double_field(fields[1], line_no);
        r.best_density = parse_double_field(fields[2], line_no);
        r.temperature = parse_double_field(fields[3], line_no);
        const std::uint64_t accepted = parse_uint_field(fields[4], line_no);
        if (accepted > 1) throw ParseError(line_no, "accepted must be 0 or 1");
        r.accepted = accepted == 1;
        r.region = fields[5].empty()
                       ? 0
                       : static_cast<int>(parse_uint_field(fields[5], line_no));
        trace.records.push_back(r);
    }
    return trace;
}

Trace read_trace_csv_file(const std::string& path) {
    auto is = open_input(path);
    return read_trace_csv(is);
}

namespace {

json aggregate_to_json(const AlgorithmAggregate& agg) {
    json out;
    out["success_count"] = agg.success_count;
    out["median_first_hit"] =
        agg.median_first_hit ? json(*agg.median_first_hit) : json(nullptr);
    out["mean_wall_seconds"] = agg.mean_wall_seconds;
    return out;
}

}  // namespace

void write_summary_json(const StudySummary& summary, std::ostream& os) {
    const StudyConfig& cfg = summary.config;
    json doc;
    json config;
    config["replicates"] = cfg.replicates;
    config["n"] = cfg.n;
    config["p"] = cfg.p;
    config["k"] = cfg.k;
    config["max_iterations"] = cfg.max_iterations;
    config["master_seed"] = cfg.master_seed;
    config["alpha"] = cfg.alpha;
    config["stop_when_found"] = cfg.stop_when_found;
    json algos = json::array();
    for (Algorithm a : cfg.algorithms) algos.push_back(to_string(a));
    config["algorithms"] = algos;
    json saa;
    saa["n_regions"] = cfg.saa.partition.regions();
    saa["thresholds"] = cfg.saa.partition.thresholds;
    saa["plateau"] = cfg.saa.plateau;
    saa["base_temperature"] = cfg.saa.base_temperature;
    config["saa"] = saa;
    doc["config"] = config;

    json rows = json::array();
    for (const ReplicateRow& row : summary.rows) {
        json r;
        r["replicate"] = row.replicate;
        r["algorithm"] = to_string(row.algorithm);
        r["success"] = row.success;
        r["first_hit"] = row.first_hit ? json(*row.first_hit) : json(nullptr);
        r["wall_seconds"] = row.wall_seconds;
        r["best_density"] = row.best_density;
        if (!row.error.empty()) r["error"] = row.error;
        rows.push_back(r);
    }
    doc["replicates"] = rows;

    json aggregates;
    for (const auto& [algo, agg] : summary.aggregates)
        aggregates[to_string(algo)] = aggregate_to_json(agg);
    doc["aggregates"] = aggregates;

    os << doc.dump(2) << '\n';
}

namespace {

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> known,
                         const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (const char* k : known) {
            if (key == k) {
                ok = true;
                break;
            }
        }
        if (!ok) throw std::invalid_argument("unknown field \"" + key + "\" in " + where);
    }
}

}  // namespace

RunConfig parse_run_config(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("run config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("run config must be a JSON object");
    reject_unknown_keys(doc,
                        {"graph", "generate", "algorithm", "k", "iterations", "alpha",
                         "seed", "target_density", "stop_at_target", "saa"},
                        "run config");
    RunConfig rc;
    if (doc.contains("graph")) rc.graph_path = doc.at("graph").get<std::string>();
    if (doc.contains("generate")) {
        const json& gen = doc.at("generate");
        reject_unknown_keys(gen, {"n", "p", "k", "seed"}, "generate");
        GenerateParams gp;
        if (gen.contains("n")) gp.n = gen.at("n").get<int>();
        if (gen.contains("p")) gp.p = gen.at("p").get<double>();
        if (gen.contains("k")) gp.k = gen.at("k").get<int>();
        if (gen.contains("seed")) gp.seed = gen.at("seed").get<std::uint64_t>();
        rc.generate = gp;
    }
    if (rc.graph_path && rc.generate)
        throw std::invalid_argument("run config: give either \"graph\" or \"generate\", not both");
    if (doc.contains("algorithm")) {
        const auto name = doc.at("algorithm").get<std::string>();
        const auto algo = parse_algorithm(name);
        if (!algo) throw std::invalid_argument("unknown algorithm \"" + name + "\"");
        rc.algorithm = *algo;
    }
    if (doc.contains("k")) rc.k = doc.at("k").get<int>();
    if (doc.contains("iterations")) rc.iterations = doc.at("iterations").get<std::uint64_t>();
    if (doc.contains("alpha")) rc.alpha = doc.at("alpha").get<double>();
    if (doc.contains("seed")) rc.seed = doc.at("seed").get<std::uint64_t>();
    if (doc.contains("target_density")) rc.target_density = doc.at("target_density").get<double>();
    if (doc.contains("stop_at_target")) rc.stop_at_target = doc.at("stop_at_target").get<bool>();
    if (doc.contains("saa")) {
        const json& saa = doc.at("saa");
        reject_unknown_keys(saa,
                            {"n_regions", "a_first", "a_last", "thresholds", "plateau",
                             "base_temperature"},
                            "saa");
        if (saa.contains("n_regions")) rc.saa_regions = saa.at("n_regions").get<int>();
        if (saa.contains("a_first")) rc.saa_a_first = saa.at("a_first").get<double>();
        if (saa.contains("a_last")) rc.saa_a_last = saa.at("a_last").get<double>();
        if (saa.contains("thresholds"))
            rc.saa_thresholds = saa.at("thresholds").get<std::vector<double>>();
        if (saa.contains("plateau")) rc.saa_plateau = saa.at("plateau").get<std::uint64_t>();
        if (saa.contains("base_temperature"))
            rc.saa_base_temperature = saa.at("base_temperature").get<double>();
    }
    return rc;
}

SaaConfig saa_config_from_run_config(const RunConfig& rc) {
    SaaConfig cfg;
    cfg.partition = rc.saa_thresholds
                        ? make_partition(*rc.saa_thresholds)
                        : default_partition(rc.saa_regions, rc.saa_a_first, rc.saa_a_last);
    cfg.pi = desired_distribution(cfg.partition.regions());
    cfg.theta_init.assign(cfg.partition.regions(), 0.0);
    cfg.plateau = rc.saa_plateau;
    cfg.base_temperature = rc.saa_base_temperature;
    validate_saa_config(cfg);
    return cfg;
}

}  // namespace dks
