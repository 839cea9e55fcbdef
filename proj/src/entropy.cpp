#include "entropy.hpp"

#include <algorithm>
#include <sstream>

namespace entropia {

namespace {

void require_chain_like(const Subgroup& u, const char* who)
{
    if (!u.normal() || !u.compact() || !u.open())
        fail(ErrorCode::PreconditionFailed,
             std::string(who) + " needs a compact open normal subgroup");
}

Factored finite_index(const Subgroup& a, const Subgroup& b, const char* what)
{
    Index ix = index(a, b);
    if (ix.infinite)
        fail(ErrorCode::PreconditionFailed, std::string(what) + " produced an infinite index");
    return ix.value;
}

} // namespace

TrajectoryReport TrajectoryReport::make(std::vector<Factored> t, bool certified,
                                        std::string certificate)
{
    if (t.empty() || !t.front().is_one())
        fail(ErrorCode::PreconditionFailed, "trajectory index sequence must start at 1");
    TrajectoryReport r;
    r.t = std::move(t);
    r.certified = certified;
    r.certificate = std::move(certificate);
    for (std::size_t i = 0; i + 1 < r.t.size(); ++i) {
        Factored ratio = r.t[i + 1].divided_by(r.t[i]);
        if (!ratio.is_integer())
            fail(ErrorCode::PreconditionFailed, "trajectory index ratios must be integers");
        if (!r.beta.empty() && r.beta.back().compare(ratio) < 0)
            fail(ErrorCode::PreconditionFailed,
                 "trajectory index ratios must be weakly decreasing");
        r.beta.push_back(std::move(ratio));
    }
    return r;
}

Subgroup trajectory(const Endo& phi, const Subgroup& u, int n)
{
    require_same_model(phi, u);
    require_chain_like(u, "trajectory");
    if (n < 1)
        fail(ErrorCode::InvalidArgument, "trajectory length must be >= 1");
    Subgroup t = u;
    Subgroup v = u;
    for (int k = 1; k < n; ++k) {
        v = image(phi, v);
        t = product(t, v);
    }
    return t;
}

EntropyAtResult entropy_by_limit(const Endo& phi, const Subgroup& u, const EngineOptions& opts)
{
    require_same_model(phi, u);
    require_chain_like(u, "entropy_by_limit");

    std::optional<int> bound;
    if (opts.use_model_bounds)
        bound = phi.model().stabilization_bound(phi, u);

    std::vector<Factored> t;
    t.push_back(Factored()); // [T_1 : u] = 1
    std::vector<Factored> beta;

    Subgroup big = u;
    Subgroup power_image = u;
    for (int n = 1; n <= opts.iteration_budget; ++n) {
        power_image = image(phi, power_image);
        Subgroup next = product(big, power_image);
        Factored ratio = finite_index(next, big, "trajectory step");
        beta.push_back(ratio);
        t.push_back(t.back().times(ratio));

        bool fixed = equal(next, big);
        big = next;

        if (fixed) {
            // ratios are >= 1 and weakly decreasing, so they stay at 1
            auto report = TrajectoryReport::make(std::move(t), true,
                                                 "fixed point at step " + std::to_string(n));
            return {EntropyValue::zero(), std::move(report)};
        }
        if (bound && static_cast<int>(beta.size()) > *bound) {
            int n0 = *bound;
            if (beta[static_cast<std::size_t>(n0 - 1)] != beta.back())
                fail(ErrorCode::PreconditionFailed,
                     "model stabilization bound is inconsistent with the computed ratios");
            EntropyValue value = EntropyValue::log_of(beta[static_cast<std::size_t>(n0 - 1)]);
            auto report = TrajectoryReport::make(
                std::move(t), true, "model stabilization bound n0=" + std::to_string(n0));
            return {std::move(value), std::move(report)};
        }
        if (!bound && static_cast<int>(beta.size()) >= opts.heuristic_window) {
            bool flat = true;
            for (int w = 1; w < opts.heuristic_window && flat; ++w)
                flat = beta[beta.size() - 1 - static_cast<std::size_t>(w)] == beta.back();
            if (flat) {
                EntropyValue value = EntropyValue::log_of(beta.back());
                auto report = TrajectoryReport::make(
                    std::move(t), false,
                    "heuristic: ratio constant for " + std::to_string(opts.heuristic_window) +
                        " steps (no model certificate)");
                return {std::move(value), std::move(report)};
            }
        }
    }
    fail(ErrorCode::IterationBudgetExceeded,
         "no stabilization signal within " + std::to_string(opts.iteration_budget) + " steps");
}

HullResult inverse_invariant_hull(const Endo& phi, const Subgroup& u, const EngineOptions& opts)
{
    require_same_model(phi, u);
    require_chain_like(u, "inverse_invariant_hull");

    const int consult_after = std::min(4, opts.iteration_budget);
    Subgroup x = u;
    for (int k = 1; k <= opts.iteration_budget; ++k) {
        Subgroup next = product(u, preimage(phi, x));
        if (equal(next, x)) {
            HullResult out{x, k - 1, false};
            if (!contains(out.hull, preimage(phi, out.hull)))
                fail(ErrorCode::PreconditionFailed, "hull is not inversely invariant");
            return out;
        }
        x = next;
        if (k >= consult_after) {
            if (auto cf = phi.model().inverse_invariant_hull_closed_form(phi, u)) {
                if (!contains(*cf, u) || !contains(*cf, x) ||
                    !contains(*cf, preimage(phi, *cf)))
                    fail(ErrorCode::PreconditionFailed,
                         "model closed form fails the hull invariants");
                return HullResult{*cf, k, true};
            }
        }
    }
    fail(ErrorCode::IterationBudgetExceeded,
         "inverse-invariant hull did not stabilize within " +
             std::to_string(opts.iteration_budget) + " steps");
}

EntropyValue entropy_limit_free(const Endo& phi, const Subgroup& u, const EngineOptions& opts)
{
    HullResult h = inverse_invariant_hull(phi, u, opts);
    Subgroup pre = preimage(phi, h.hull);
    // [hull : preimage] = [u : u n preimage]; the right side is always finite
    Factored via_u = finite_index(u, intersect(u, pre), "limit-free index");
    Index direct = index(h.hull, pre);
    if (!direct.infinite && direct.value != via_u)
        fail(ErrorCode::PreconditionFailed, "limit-free index routes disagree");
    return EntropyValue::log_of(via_u);
}

EntropyValue entropy_of_inverse_invariant(const Endo& phi, const Subgroup& a)
{
    require_same_model(phi, a);
    if (!a.open() || !a.normal())
        fail(ErrorCode::PreconditionFailed, "needs an open normal subgroup");
    Subgroup pre = preimage(phi, a);
    if (!contains(a, pre))
        fail(ErrorCode::PreconditionFailed, "subgroup is not inversely invariant");
    Index ix = index(a, pre);
    if (ix.infinite)
        fail(ErrorCode::PreconditionFailed, "index of the preimage is infinite");
    return EntropyValue::log_of(ix.value);
}

namespace {

SupResult sup_over_chain(const Endo& phi, const EngineOptions& opts, bool limit_path)
{
    const GroupModel& model = phi.model();
    int cutoff = opts.family_cutoff_override.value_or(model.family_cutoff(phi));
    if (cutoff < 1)
        fail(ErrorCode::InvalidArgument, "family cutoff must be >= 1");
    int members = std::max(cutoff, opts.verify_chain_members);

    SupResult out;
    out.members_used = members;
    for (int k = 1; k <= members; ++k) {
        Subgroup u = model.chain_member(k);
        EntropyValue v = limit_path ? entropy_by_limit(phi, u, opts).value
                                    : entropy_limit_free(phi, u, opts);
        out.member_values.push_back(std::move(v));
    }
    EntropyValue sup = out.member_values.front();
    EntropyValue sup_at_cutoff = sup;
    for (int k = 2; k <= members; ++k) {
        const EntropyValue& v = out.member_values[static_cast<std::size_t>(k - 1)];
        if (v.compare(sup) > 0)
            sup = v;
        if (k <= cutoff && v.compare(sup_at_cutoff) > 0)
            sup_at_cutoff = v;
    }
    if (sup != sup_at_cutoff)
        fail(ErrorCode::PreconditionFailed,
             "family cutoff certificate violated: a later chain member exceeds the sup");
    out.value = sup;
    out.chain_verified = true;
    std::ostringstream os;
    os << "family_cutoff=" << cutoff << ", chain members 1.." << members
       << " stay within the sup";
    out.certificate = os.str();
    return out;
}

} // namespace

SupResult algebraic_entropy(const Endo& phi, const EngineOptions& opts)
{
    return sup_over_chain(phi, opts, /*limit_path=*/false);
}

SupResult algebraic_entropy_via_limit(const Endo& phi, const EngineOptions& opts)
{
    return sup_over_chain(phi, opts, /*limit_path=*/true);
}

Factored modulus_at(const Endo& phi, const Subgroup& u)
{
    require_same_model(phi, u);
    if (!is_automorphism(phi))
        fail(ErrorCode::NotAutomorphism, "modulus is defined for automorphisms");
    require_chain_like(u, "modulus");
    Subgroup fu = image(phi, u);
    Subgroup v = product(u, fu);
    Factored a = finite_index(v, u, "modulus numerator");
    Factored b = finite_index(v, fu, "modulus denominator");
    return a.divided_by(b);
}

Factored modulus(const Endo& phi, const EngineOptions& opts)
{
    Factored value = modulus_at(phi, phi.model().chain_member(1));
    for (int k = 2; k <= std::max(2, opts.verify_chain_members); ++k) {
        Factored again = modulus_at(phi, phi.model().chain_member(k));
        if (again != value)
            fail(ErrorCode::PreconditionFailed, "modulus is not independent of the chain member");
    }
    return value;
}

SupResult topological_entropy(const Endo& phi, const EngineOptions& opts)
{
    const GroupModel& model = phi.model();
    int cutoff = opts.family_cutoff_override.value_or(model.family_cutoff(phi));
    int members = std::max(cutoff, opts.verify_chain_members);

    // best value per chain member over its orbit under powers of phi;
    // the trivial subgroup always competes, so the sup is at least 0
    auto best_for = [&](Subgroup m) -> EntropyValue {
        EntropyValue best = EntropyValue::zero();
        for (int hop = 0; hop <= opts.htop_power_range; ++hop) {
            if (hop > 0)
                m = image(phi, m);
            if (!m.compact())
                continue;
            Subgroup fm = image(phi, m);
            if (!contains(fm, m))
                continue;
            Index ix = index(fm, m);
            if (ix.infinite)
                continue;
            EntropyValue v = EntropyValue::log_of(ix.value);
            if (v.compare(best) > 0)
                best = v;
        }
        return best;
    };

    SupResult out;
    out.members_used = members;
    EntropyValue trivial_value = best_for(model.trivial_subgroup());
    EntropyValue sup = trivial_value;
    EntropyValue sup_at_cutoff = trivial_value;
    for (int k = 1; k <= members; ++k) {
        EntropyValue v = best_for(model.chain_member(k));
        out.member_values.push_back(v);
        if (v.compare(sup) > 0)
            sup = v;
        if (k <= cutoff && v.compare(sup_at_cutoff) > 0)
            sup_at_cutoff = v;
    }
    if (sup != sup_at_cutoff)
        fail(ErrorCode::PreconditionFailed,
             "family cutoff certificate violated: a later chain member exceeds the sup");
    out.value = sup;
    out.chain_verified = true;
    std::ostringstream os;
    os << "family_cutoff=" << cutoff << ", chain members 1.." << members
       << " and their forward images up to power " << opts.htop_power_range
       << " stay within the sup";
    out.certificate = os.str();
    return out;
}

} // namespace entropia
