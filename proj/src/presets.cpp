#include "liftcut/presets.hpp"

#include <algorithm>
#include <cctype>

#include "liftcut/errors.hpp"

namespace liftcut {

namespace {

struct PresetRow {
    double quco_alpha;
    std::int64_t quco_iters;
    double luco_alpha;
    std::int64_t luco_iters;
    double deco_alpha;
    std::int64_t deco_iters;
    double deco_lifted_alpha;
    std::int64_t deco_lifted_iters;
};

PresetRow row_for(PresetFamily family) {
    switch (family) {
        case PresetFamily::SmallEr:
            return {0.15, 48000, 0.001, 2500, 0.10, 30000, 0.001, 2000};
        case PresetFamily::Gset:
            return {0.01, 60000, 0.001, 3000, 0.012, 80000, 0.001, 2000};
        case PresetFamily::LargeEr:
            return {0.01, 100000, 0.001, 5000, 0.02, 60000, 0.005, 1000};
    }
    throw ValidationError("unknown preset family");
}

std::string normalize(const std::string& name) {
    std::string out;
    for (char c : name) {
        if (c == '-' || c == '_') continue;
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    const std::string suffix = "manual";
    if (out.size() > suffix.size() && out.compare(out.size() - suffix.size(), suffix.size(), suffix) == 0)
        out.erase(out.size() - suffix.size());
    return out;
}

} // namespace

PresetFamily preset_from_string(const std::string& name) {
    const std::string key = normalize(name);
    if (key == "smaller") return PresetFamily::SmallEr;
    if (key == "gset") return PresetFamily::Gset;
    if (key == "largeer" || key == "largescaleer") return PresetFamily::LargeEr;
    throw ValidationError("unknown preset '" + name + "' (expected smallER, gset, or largeER)");
}

const char* to_string(PresetFamily family) {
    switch (family) {
        case PresetFamily::SmallEr: return "smallER";
        case PresetFamily::Gset: return "gset";
        case PresetFamily::LargeEr: return "largeER";
    }
    return "smallER";
}

std::vector<std::string> preset_names() { return {"smallER", "gset", "largeER"}; }

void apply_manual_preset(SolverConfig& cfg, PresetFamily family) {
    const PresetRow row = row_for(family);
    switch (cfg.algorithm) {
        case Algorithm::pQUCO:
            cfg.ascent.alpha = row.quco_alpha;
            cfg.ascent.iterations = row.quco_iters;
            cfg.lifted_ascent.reset();
            break;
        case Algorithm::pLUCO:
            cfg.ascent.alpha = row.luco_alpha;
            cfg.ascent.iterations = row.luco_iters;
            cfg.lifted_ascent.reset();
            break;
        case Algorithm::pDECO:
            cfg.ascent.alpha = row.deco_alpha;
            cfg.ascent.iterations = row.deco_iters;
            cfg.lifted_ascent = cfg.ascent;
            cfg.lifted_ascent->alpha = row.deco_lifted_alpha;
            cfg.lifted_ascent->iterations = row.deco_lifted_iters;
            break;
    }
}

void apply_manual_preset(SolverConfig& cfg, const std::string& name) {
    apply_manual_preset(cfg, preset_from_string(name));
}

SearchConfig auto_search_bounds() { return SearchConfig{}; }

} // namespace liftcut
