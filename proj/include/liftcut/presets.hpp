#pragma once

#include <string>
#include <vector>

#include "liftcut/evo_search.hpp"
#include "liftcut/solver.hpp"

namespace liftcut {

/// Hand-tuned (alpha, T) presets per dataset family. pDECO presets carry a
/// second pair for the lifted phase.
enum class PresetFamily { SmallEr, Gset, LargeEr };

/// Accepts "smallER", "gset", "largeER" (case-insensitive, '-'/'_' ignored),
/// with an optional "-manual" suffix.
PresetFamily preset_from_string(const std::string& name);
const char* to_string(PresetFamily family);
std::vector<std::string> preset_names();

/// Overwrites cfg.ascent (and cfg.lifted_ascent for pDECO) with the preset's
/// step size and iteration count for cfg.algorithm.
void apply_manual_preset(SolverConfig& cfg, PresetFamily family);
void apply_manual_preset(SolverConfig& cfg, const std::string& name);

/// Search bounds for automatic mode: T in [3000, 10000], exponent in [-4, -1],
/// population 6, 5 rounds.
SearchConfig auto_search_bounds();

} // namespace liftcut
