#include "liftcut/run_record.hpp"

#include <fstream>
#include <sstream>

#include "liftcut/errors.hpp"
#include "liftcut/objectives.hpp"

namespace liftcut {

using nlohmann::json;

std::string rle_encode(std::span<const std::uint8_t> bits) {
    if (bits.empty()) return "";
    std::ostringstream out;
    out << static_cast<int>(bits[0] ? 1 : 0) << ':';
    std::uint8_t current = bits[0];
    std::int64_t run = 0;
    bool first = true;
    for (std::uint8_t b : bits) {
        if (b != 0 && b != 1) throw ValidationError("rle_encode: assignment must be 0/1");
        if (b == current) {
            ++run;
            continue;
        }
        out << (first ? "" : ",") << run;
        first = false;
        current = b;
        run = 1;
    }
    out << (first ? "" : ",") << run;
    return out.str();
}

std::vector<std::uint8_t> rle_decode(const std::string& encoded, std::int64_t expected_size) {
    if (encoded.empty()) {
        if (expected_size != 0) throw ParseError("rle_decode: empty encoding for nonempty assignment");
        return {};
    }
    const std::size_t colon = encoded.find(':');
    if (colon == std::string::npos) throw ParseError("rle_decode: missing ':' separator");
    const std::string head = encoded.substr(0, colon);
    if (head != "0" && head != "1") throw ParseError("rle_decode: first bit must be 0 or 1");
    std::uint8_t bit = head == "1" ? 1 : 0;

    std::vector<std::uint8_t> bits;
    bits.reserve(static_cast<std::size_t>(expected_size));
    std::istringstream runs(encoded.substr(colon + 1));
    std::string token;
    while (std::getline(runs, token, ',')) {
        std::int64_t run = 0;
        try {
            std::size_t used = 0;
            run = std::stoll(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw ParseError("rle_decode: bad run length '" + token + "'");
        }
        if (run < 1) throw ParseError("rle_decode: run lengths must be >= 1");
        bits.insert(bits.end(), static_cast<std::size_t>(run), bit);
        bit = static_cast<std::uint8_t>(1 - bit);
    }
    if (static_cast<std::int64_t>(bits.size()) != expected_size)
        throw ParseError("rle_decode: decoded " + std::to_string(bits.size()) +
                         " bits, expected " + std::to_string(expected_size));
    return bits;
}

RunRecord make_record(const std::string& graph_id, const std::string& graph_path,
                      const Graph& g, const SolverConfig& cfg, std::uint64_t seed,
                      const SolveOutcome& outcome) {
    RunRecord r;
    r.graph_id = graph_id;
    r.graph_path = graph_path;
    r.nodes = g.node_count();
    r.edges = g.edge_count();
    r.config = cfg;
    r.seed = seed;
    r.best_cut = outcome.best.cut_value;
    r.assignment_rle = rle_encode(outcome.best.assignment);
    r.best_batch = outcome.best.batch_index;
    r.best_member = outcome.best.member_index;
    r.batch_trace = outcome.batch_trace;
    r.phase_trace = outcome.phase_trace;
    r.search_trace = outcome.search_trace;
    r.stage_times = outcome.stage_times;
    r.wall_time_s = outcome.best.wall_time_s;
    r.batches_run = outcome.batches_run;
    return r;
}

bool verify_record(const Graph& g, const RunRecord& record) {
    if (record.nodes != g.node_count() || record.edges != g.edge_count()) return false;
    const std::vector<std::uint8_t> z = rle_decode(record.assignment_rle, record.nodes);
    return cut_value(g, z) == record.best_cut;
}

json config_to_json(const SolverConfig& cfg) {
    json j;
    j["algorithm"] = to_string(cfg.algorithm);
    j["batch_size"] = cfg.batch_size;
    j["lift_dim"] = cfg.lift_dim;
    j["ascent"] = {{"alpha", cfg.ascent.alpha},
                   {"iterations", cfg.ascent.iterations},
                   {"momentum", cfg.ascent.momentum},
                   {"early_exit", cfg.ascent.early_exit}};
    if (cfg.lifted_ascent)
        j["lifted_ascent"] = {{"alpha", cfg.lifted_ascent->alpha},
                              {"iterations", cfg.lifted_ascent->iterations},
                              {"momentum", cfg.lifted_ascent->momentum},
                              {"early_exit", cfg.lifted_ascent->early_exit}};
    j["init"] = {{"method", to_string(cfg.init.method)},
                 {"beta", cfg.init.beta},
                 {"eta", cfg.init.eta},
                 {"init_scale", cfg.init.init_scale},
                 {"seed", cfg.init.seed},
                 {"resample_idi", cfg.init.resample_idi},
                 {"scale_noise", cfg.init.scale_noise}};
    j["num_batches"] = cfg.num_batches;
    if (cfg.time_budget_s) j["time_budget_s"] = *cfg.time_budget_s;
    if (cfg.search)
        j["search"] = {{"t_lower", cfg.search->t_lower},
                       {"t_upper", cfg.search->t_upper},
                       {"e_lower", cfg.search->e_lower},
                       {"e_upper", cfg.search->e_upper},
                       {"population_size", cfg.search->population_size},
                       {"rounds", cfg.search->rounds}};
    j["search_refresh"] = cfg.search_refresh;
    j["deco_alternations"] = cfg.deco_alternations;
    j["deco_carry"] = cfg.deco_carry == DecoCarry::IncumbentColumn ? "incumbent-column" : "fresh";
    return j;
}

namespace {

AscentParams ascent_from_json(const json& j) {
    AscentParams p;
    p.alpha = j.at("alpha").get<double>();
    p.iterations = j.at("iterations").get<std::int64_t>();
    p.momentum = j.at("momentum").get<double>();
    p.early_exit = j.at("early_exit").get<bool>();
    return p;
}

} // namespace

SolverConfig config_from_json(const json& j) {
    SolverConfig cfg;
    cfg.algorithm = algorithm_from_string(j.at("algorithm").get<std::string>());
    cfg.batch_size = j.at("batch_size").get<std::int64_t>();
    cfg.lift_dim = j.at("lift_dim").get<int>();
    cfg.ascent = ascent_from_json(j.at("ascent"));
    if (j.contains("lifted_ascent")) cfg.lifted_ascent = ascent_from_json(j.at("lifted_ascent"));
    const json& init = j.at("init");
    cfg.init.method = init_method_from_string(init.at("method").get<std::string>());
    cfg.init.beta = init.at("beta").get<double>();
    cfg.init.eta = init.at("eta").get<double>();
    cfg.init.init_scale = init.at("init_scale").get<double>();
    cfg.init.seed = init.at("seed").get<std::uint64_t>();
    cfg.init.resample_idi = init.at("resample_idi").get<bool>();
    cfg.init.scale_noise = init.at("scale_noise").get<bool>();
    cfg.num_batches = j.at("num_batches").get<std::int64_t>();
    if (j.contains("time_budget_s")) cfg.time_budget_s = j.at("time_budget_s").get<double>();
    if (j.contains("search")) {
        SearchConfig s;
        const json& sj = j.at("search");
        s.t_lower = sj.at("t_lower").get<std::int64_t>();
        s.t_upper = sj.at("t_upper").get<std::int64_t>();
        s.e_lower = sj.at("e_lower").get<double>();
        s.e_upper = sj.at("e_upper").get<double>();
        s.population_size = sj.at("population_size").get<int>();
        s.rounds = sj.at("rounds").get<int>();
        cfg.search = s;
    }
    cfg.search_refresh = j.value("search_refresh", 0);
    cfg.deco_alternations = j.value("deco_alternations", 2);
    const std::string carry = j.value("deco_carry", "incumbent-column");
    cfg.deco_carry = carry == "fresh" ? DecoCarry::Fresh : DecoCarry::IncumbentColumn;
    return cfg;
}

json record_to_json(const RunRecord& r) {
    json j;
    j["graph_id"] = r.graph_id;
    j["graph_path"] = r.graph_path;
    j["nodes"] = r.nodes;
    j["edges"] = r.edges;
    j["config"] = config_to_json(r.config);
    j["seed"] = r.seed;
    j["best_cut"] = r.best_cut;
    j["assignment_rle"] = r.assignment_rle;
    j["best_batch"] = r.best_batch;
    j["best_member"] = r.best_member;
    j["batch_trace"] = json::array();
    for (const BatchTraceEntry& e : r.batch_trace)
        j["batch_trace"].push_back({{"serial", e.serial},
                                    {"kind", e.kind},
                                    {"alpha", e.alpha},
                                    {"iterations", e.iterations},
                                    {"batch_best", e.batch_best},
                                    {"best_so_far", e.best_so_far}});
    j["phase_trace"] = json::array();
    for (const PhaseTraceEntry& e : r.phase_trace)
        j["phase_trace"].push_back({{"phase", e.phase}, {"kind", e.kind},
                                    {"best_after", e.best_after}});
    j["search_trace"] = json::array();
    for (const SearchTraceEntry& e : r.search_trace)
        j["search_trace"].push_back({{"round", e.round},
                                     {"exponent", e.exponent},
                                     {"iterations", e.iterations},
                                     {"fitness", e.fitness}});
    j["stage_times"] = {{"init_s", r.stage_times.init_s},
                        {"ascent_s", r.stage_times.ascent_s},
                        {"rounding_s", r.stage_times.rounding_s},
                        {"search_s", r.stage_times.search_s}};
    j["wall_time_s"] = r.wall_time_s;
    j["batches_run"] = r.batches_run;
    j["version"] = r.version;
    return j;
}

RunRecord record_from_json(const json& j) {
    RunRecord r;
    r.graph_id = j.at("graph_id").get<std::string>();
    r.graph_path = j.at("graph_path").get<std::string>();
    r.nodes = j.at("nodes").get<std::int64_t>();
    r.edges = j.at("edges").get<std::int64_t>();
    r.config = config_from_json(j.at("config"));
    r.seed = j.at("seed").get<std::uint64_t>();
    r.best_cut = j.at("best_cut").get<std::int64_t>();
    r.assignment_rle = j.at("assignment_rle").get<std::string>();
    r.best_batch = j.at("best_batch").get<std::int64_t>();
    r.best_member = j.at("best_member").get<std::int64_t>();
    for (const json& e : j.at("batch_trace"))
        r.batch_trace.push_back({e.at("serial").get<std::int64_t>(),
                                 e.at("kind").get<std::string>(),
                                 e.at("alpha").get<double>(),
                                 e.at("iterations").get<std::int64_t>(),
                                 e.at("batch_best").get<std::int64_t>(),
                                 e.at("best_so_far").get<std::int64_t>()});
    for (const json& e : j.at("phase_trace"))
        r.phase_trace.push_back({e.at("phase").get<int>(), e.at("kind").get<std::string>(),
                                 e.at("best_after").get<std::int64_t>()});
    for (const json& e : j.at("search_trace"))
        r.search_trace.push_back({e.at("round").get<int>(), e.at("exponent").get<double>(),
                                  e.at("iterations").get<std::int64_t>(),
                                  e.at("fitness").get<double>()});
    const json& st = j.at("stage_times");
    r.stage_times = {st.at("init_s").get<double>(), st.at("ascent_s").get<double>(),
                     st.at("rounding_s").get<double>(), st.at("search_s").get<double>()};
    r.wall_time_s = j.at("wall_time_s").get<double>();
    r.batches_run = j.at("batches_run").get<std::int64_t>();
    r.version = j.at("version").get<std::string>();
    return r;
}

json record_core_json(const RunRecord& record) {
    json j = record_to_json(record);
    j.erase("wall_time_s");
    j.erase("stage_times");
    return j;
}

void write_record_file(const std::string& path, const RunRecord& record) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open record file for writing: " + path);
    out << record_to_json(record).dump(2) << '\n';
    if (!out) throw Error("failed writing record file: " + path);
}

RunRecord load_record_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open record file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError("bad record JSON in " + path + ": " + e.what());
    }
    return record_from_json(j);
}

} // namespace liftcut
