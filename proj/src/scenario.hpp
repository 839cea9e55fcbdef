#pragma once

#include <optional>
#include <string>

#include "entropy.hpp"
#include "model.hpp"

// vendor single-header nlohmann/json
#include "json.hpp"

namespace entropia {

/// A parsed scenario file: one model, the endomorphisms and subgroups the
/// requested command needs, and engine options.
struct Scenario {
    std::shared_ptr<const GroupModel> model;
    std::optional<Endo> endo;
    std::optional<Endo> endo2;  // second factor for weak addition
    std::optional<Endo> alpha;  // conjugating automorphism
    std::optional<Subgroup> u;  // base subgroup for tables / pointwise entropy
    std::optional<Subgroup> h;  // closed normal subgroup for addition/monotonicity
    std::optional<Subgroup> a;  // inversely invariant subgroup
    int power = 1;              // m for the logarithmic law
    EngineOptions options;
    bool allow_heuristic = false;
};

/// Parse a scenario object; errors carry the JSON path of the offender.
Scenario parse_scenario(const nlohmann::json& spec);

std::shared_ptr<const GroupModel> parse_model(const nlohmann::json& spec,
                                              const std::string& path);
Endo parse_endo(const std::shared_ptr<const GroupModel>& model, const nlohmann::json& spec,
                const std::string& path);
Subgroup parse_subgroup(const std::shared_ptr<const GroupModel>& model,
                        const nlohmann::json& spec, const std::string& path);

} // namespace entropia
