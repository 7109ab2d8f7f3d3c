#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "liftcut/graph.hpp"
#include "liftcut/solver.hpp"

namespace liftcut {

inline constexpr const char* kVersion = "0.1.0";

/// Run-length encoding of a 0/1 assignment: "<first_bit>:<len>,<len>,...".
/// Keeps records small for graphs with tens of thousands of nodes.
std::string rle_encode(std::span<const std::uint8_t> bits);
std::vector<std::uint8_t> rle_decode(const std::string& encoded, std::int64_t expected_size);

/// Persistent result of one solve: everything needed to audit or replay it.
struct RunRecord {
    std::string graph_id;
    std::string graph_path;
    std::int64_t nodes = 0;
    std::int64_t edges = 0;
    SolverConfig config;
    std::uint64_t seed = 0;
    std::int64_t best_cut = 0;
    std::string assignment_rle;
    std::int64_t best_batch = -1;
    std::int64_t best_member = -1;
    std::vector<BatchTraceEntry> batch_trace;
    std::vector<PhaseTraceEntry> phase_trace;
    std::vector<SearchTraceEntry> search_trace;
    StageTimes stage_times;
    double wall_time_s = 0.0;
    std::int64_t batches_run = 0;
    std::string version = kVersion;
};

RunRecord make_record(const std::string& graph_id, const std::string& graph_path,
                      const Graph& g, const SolverConfig& cfg, std::uint64_t seed,
                      const SolveOutcome& outcome);

/// The stored assignment re-evaluates to the stored cut on the given graph.
bool verify_record(const Graph& g, const RunRecord& record);

nlohmann::json config_to_json(const SolverConfig& cfg);
SolverConfig config_from_json(const nlohmann::json& j);

nlohmann::json record_to_json(const RunRecord& record);
RunRecord record_from_json(const nlohmann::json& j);

/// Record JSON with wall-clock fields removed; equal across reruns of the same
/// (graph, config, seed) at any worker count.
nlohmann::json record_core_json(const RunRecord& record);

void write_record_file(const std::string& path, const RunRecord& record);
RunRecord load_record_file(const std::string& path);

} // namespace liftcut
