#pragma once

#include <optional>
#include <string>
#include <vector>

#include "factored.hpp"
#include "model.hpp"

namespace entropia {

struct EngineOptions {
    int iteration_budget = 64;
    int heuristic_window = 3;     // stop after this many constant ratios without a certificate
    bool use_model_bounds = true; // disabled only by tests exercising the heuristic path
    std::optional<int> family_cutoff_override;
    int verify_chain_members = 3; // prefix of the chain checked for sup independence
    int htop_power_range = 6;     // how far candidates are chased under powers of phi
};

/// The sequence of trajectory indices t_n = [T_n : U] together with the
/// ratios beta_n = t_{n+1}/t_n.  Ratios are positive integers and weakly
/// decreasing; both facts are asserted at construction.
struct TrajectoryReport {
    std::vector<Factored> t;    // t[0] = [T_1:U] = 1
    std::vector<Factored> beta; // beta[i] = t[i+1]/t[i]
    bool certified = false;
    std::string certificate;

    static TrajectoryReport make(std::vector<Factored> t, bool certified, std::string certificate);
    int steps() const { return static_cast<int>(t.size()); }
};

struct HullResult {
    Subgroup hull;               // smallest inversely invariant subgroup above u
    int iteration_steps = 0;     // fixed-point steps, when reached by iteration
    bool closed_form = false;    // true when the model supplied the limit handle
};

struct EntropyAtResult {
    EntropyValue value;
    TrajectoryReport trajectory; // empty for the limit-free path
};

struct SupResult {
    EntropyValue value;
    int members_used = 0;
    bool chain_verified = false; // prefix members agreed exactly
    std::string certificate;
    std::vector<EntropyValue> member_values;
};

/// T_n(phi, u) = u * phi(u) * ... * phi^{n-1}(u), built incrementally.
Subgroup trajectory(const Endo& phi, const Subgroup& u, int n);

/// Growth rate of [T_n:u] along the trajectory, as log of the stabilized
/// index ratio.  Certified when a model bound was reached or a trajectory
/// fixed point forces the ratio to 1; otherwise the heuristic window rule
/// applies and the result is flagged uncertified.
EntropyAtResult entropy_by_limit(const Endo& phi, const Subgroup& u,
                                 const EngineOptions& opts = {});

/// Fixed-point iteration for the smallest subgroup above u that is closed
/// under preimage; falls back to the model's closed form on unbounded growth.
HullResult inverse_invariant_hull(const Endo& phi, const Subgroup& u,
                                  const EngineOptions& opts = {});

/// Entropy with respect to u without taking a limit: the index of the
/// preimage of the inverse-invariant hull inside the hull, evaluated as
/// [u : u n preimage(hull)] which is always finite.
EntropyValue entropy_limit_free(const Endo& phi, const Subgroup& u,
                                const EngineOptions& opts = {});

/// log [a : preimage(phi, a)] for an open normal a with preimage(a) <= a.
EntropyValue entropy_of_inverse_invariant(const Endo& phi, const Subgroup& a);

/// Algebraic entropy: supremum over the model's cofinal chain, limit-free
/// path, with the model's cutoff certificate and an independent check that
/// a prefix of the chain yields one value.
SupResult algebraic_entropy(const Endo& phi, const EngineOptions& opts = {});

/// Same supremum through the trajectory-limit path; used for cross-checks.
SupResult algebraic_entropy_via_limit(const Endo& phi, const EngineOptions& opts = {});

/// Haar modulus of an automorphism as an exact index ratio, asserted
/// independent of the chosen chain member.
Factored modulus(const Endo& phi, const EngineOptions& opts = {});
Factored modulus_at(const Endo& phi, const Subgroup& u);

/// Topological entropy on totally disconnected models: supremum of
/// log [image(phi,m) : m] over compact candidates m with m <= image(phi,m),
/// searched over the chain and its images under powers of phi.
SupResult topological_entropy(const Endo& phi, const EngineOptions& opts = {});

} // namespace entropia
