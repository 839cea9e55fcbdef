#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "entropy.hpp"
#include "model.hpp"

namespace entropia {

/// Outcome of one theorem check: a verdict from exact comparisons, the
/// exact quantities both sides were computed from, and hypothesis status
/// for checks with side conditions.
struct CheckReport {
    std::string name;
    bool holds = false;
    bool hypothesis_ok = true;
    std::string hypothesis_note;
    std::string relation; // the identity or inequality that was evaluated
    std::vector<std::pair<std::string, EntropyValue>> entropies;
    std::vector<std::pair<std::string, Factored>> rationals;
    std::string detail;
};

/// h(phi^m) = m * h(phi), m >= 0.
CheckReport check_logarithmic_law(const Endo& phi, int m, const EngineOptions& opts = {});

/// h(phi1 x phi2) = h(phi1) + h(phi2) on the product model.
CheckReport check_weak_addition(const Endo& phi1, const Endo& phi2,
                                const EngineOptions& opts = {});

/// h(phi) = h(alpha phi alpha^{-1}), with trajectory transport spot-checks.
CheckReport check_conjugation_invariance(const Endo& phi, const Endo& alpha,
                                         const EngineOptions& opts = {});

/// h(phi^{-1}) = h(phi) - log modulus(phi), for automorphisms.
CheckReport check_inverse_modulus(const Endo& phi, const EngineOptions& opts = {});

/// h(phi) = h(induced on G/H) + h(restriction to H) when H is stable under
/// phi with kernel inside H; falls back to the monotonicity inequality
/// when only invariance holds.
CheckReport check_addition_theorem(const Endo& phi, const Subgroup& h,
                                   const EngineOptions& opts = {});

/// h_alg(phi) = h_top(dual of phi) across the duality of the model.
CheckReport check_bridge(const Endo& phi, const EngineOptions& opts = {});

/// Entropy grows along the chain; with H, h(phi) >= max of the induced
/// entropies for an invariant H.
CheckReport check_monotonicity(const Endo& phi, const std::optional<Subgroup>& h,
                               const EngineOptions& opts = {});

} // namespace entropia
