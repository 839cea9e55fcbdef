#pragma once

#include "json.hpp"

#include "finite_group.hpp"
#include "model.hpp"

namespace entropia {

struct SweepParams {
    int order_max = 24;
    int min_endo_count = 200;
    unsigned seed = 1;
};

/// Randomized endomorphisms over the small-group catalog: every sampled
/// endomorphism must have zero entropy (the models are compact), with the
/// trajectory-limit and limit-free paths agreeing exactly.  Deterministic
/// for a fixed seed.
nlohmann::json sweep_finite_models(const SweepParams& params);

/// Seeded endomorphism sampler: random images of a generating set,
/// extended and validated; retries until one sticks.
std::vector<FiniteEndoMap> sample_endos(const FiniteGroup& g, int want, unsigned seed);

} // namespace entropia
