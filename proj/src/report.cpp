#include "report.hpp"

#include <cmath>
#include <cstdio>

#include "checks.hpp"
#include "scenario.hpp"
#include "product_model.hpp"
#include "sweep.hpp"

namespace entropia {

using nlohmann::json;

namespace {

std::string float_display(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

} // namespace

json factored_json(const Factored& f)
{
    json factors = json::object();
    for (const auto& [p, e] : f.exponents())
        factors[std::to_string(p)] = e;
    return json{{"factors", factors}, {"decimal", f.decimal()}, {"display", f.format()}};
}

json value_json(const EntropyValue& v)
{
    if (v.is_infinite())
        return json{{"infinite", true}, {"display", "infinity"}};
    json out = factored_json(v.rational());
    out["infinite"] = false;
    out["display"] = v.format();
    out["log"] = v.log_natural();
    out["log_display"] = float_display(v.log_natural());
    return out;
}

json index_json(const Index& ix)
{
    if (ix.infinite)
        return json{{"infinite", true}, {"display", "infinite"}};
    json out = factored_json(ix.value);
    out["infinite"] = false;
    return out;
}

Factored factored_from_json(const json& j)
{
    Factored out;
    for (const auto& [key, val] : j.at("factors").items()) {
        long long p = std::stoll(key);
        long long e = val.get<long long>();
        out = out.times(Factored::prime_power(p, e));
    }
    return out;
}

EntropyValue value_from_json(const json& j)
{
    if (j.at("infinite").get<bool>())
        return EntropyValue::infinity();
    return EntropyValue::log_of(factored_from_json(j));
}

int exit_code_for(ErrorCode code)
{
    switch (code) {
    case ErrorCode::HypothesisFailed:
        return 2;
    case ErrorCode::IterationBudgetExceeded:
        return 4;
    default:
        return 3;
    }
}

namespace {

json trajectory_json(const TrajectoryReport& tr)
{
    json t = json::array();
    for (const auto& v : tr.t)
        t.push_back(factored_json(v));
    json beta = json::array();
    for (const auto& v : tr.beta)
        beta.push_back(factored_json(v));
    return json{{"t", t},
                {"beta", beta},
                {"steps", tr.steps()},
                {"certified", tr.certified},
                {"certificate", tr.certificate}};
}

Endo required_endo(const Scenario& sc)
{
    if (!sc.endo)
        fail(ErrorCode::ParseError, "at /endo: this command needs an endomorphism");
    return *sc.endo;
}

json cmd_entropy(const Scenario& sc)
{
    Endo phi = required_endo(sc);
    json report;
    report["command"] = "entropy";
    report["model"] = sc.model->describe();
    report["endo"] = phi.describe();

    SupResult lf = algebraic_entropy(phi, sc.options);
    json lf_members = json::array();
    for (std::size_t k = 0; k < lf.member_values.size(); ++k)
        lf_members.push_back(json{{"k", k + 1}, {"value", value_json(lf.member_values[k])}});
    report["paths"]["limit_free"] = json{{"value", value_json(lf.value)},
                                         {"members", lf_members},
                                         {"certificate", lf.certificate}};

    bool certified = true;
    bool agreement = true;
    try {
        int members = std::max(sc.options.family_cutoff_override.value_or(
                                   sc.model->family_cutoff(phi)),
                               sc.options.verify_chain_members);
        json lim_members = json::array();
        EntropyValue lim_sup = EntropyValue::zero();
        for (int k = 1; k <= members; ++k) {
            EntropyAtResult at = entropy_by_limit(phi, sc.model->chain_member(k), sc.options);
            certified = certified && at.trajectory.certified;
            if (at.value.compare(lim_sup) > 0)
                lim_sup = at.value;
            agreement = agreement &&
                        at.value == lf.member_values[static_cast<std::size_t>(k - 1)];
            lim_members.push_back(json{{"k", k},
                                       {"value", value_json(at.value)},
                                       {"certified", at.trajectory.certified},
                                       {"certificate", at.trajectory.certificate},
                                       {"table", trajectory_json(at.trajectory)}});
        }
        agreement = agreement && lim_sup == lf.value;
        report["paths"]["limit"] =
            json{{"available", true}, {"value", value_json(lim_sup)}, {"members", lim_members}};
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NotRepresentable)
            throw;
        // the trajectory path needs images; fall back to the limit-free value
        report["paths"]["limit"] = json{{"available", false}, {"reason", e.what()}};
    }

    // entropy of a user-supplied inversely invariant subgroup, when given
    if (sc.a) {
        EntropyValue via = entropy_of_inverse_invariant(phi, *sc.a);
        report["via_inverse_invariant"] =
            json{{"A", sc.a->describe()}, {"value", value_json(via)}};
        agreement = agreement && via.compare(lf.value) <= 0; // part of the sup family
    }

    report["h_alg"] = value_json(lf.value);
    report["agreement"] = agreement;
    report["certified"] = certified;
    bool ok = agreement && (certified || sc.allow_heuristic);
    report["ok"] = ok;
    report["exit_code"] = ok ? 0 : 1;
    return report;
}

json cmd_table(const Scenario& sc, int n)
{
    Endo phi = required_endo(sc);
    Subgroup u = sc.u ? *sc.u : sc.model->chain_member(1);
    EngineOptions opts = sc.options;
    opts.iteration_budget = std::max(opts.iteration_budget, n);

    // drive the trajectory exactly n steps, ignoring stabilization
    std::vector<Factored> t;
    t.push_back(Factored());
    Subgroup big = u;
    Subgroup power_image = u;
    for (int k = 1; k < n; ++k) {
        power_image = image(phi, power_image);
        Subgroup next = product(big, power_image);
        Index step = index(next, big);
        if (step.infinite)
            fail(ErrorCode::PreconditionFailed, "trajectory step has infinite index");
        t.push_back(t.back().times(step.value));
        big = next;
    }
    TrajectoryReport tr = TrajectoryReport::make(std::move(t), false, "table only");

    json report;
    report["command"] = "table";
    report["model"] = sc.model->describe();
    report["endo"] = phi.describe();
    report["U"] = u.describe();
    report["n"] = n;
    report["table"] = trajectory_json(tr);
    report["ok"] = true;
    report["exit_code"] = 0;
    return report;
}

json check_report_json(const CheckReport& r)
{
    json values = json::object();
    for (const auto& [label, v] : r.entropies)
        values[label] = value_json(v);
    for (const auto& [label, v] : r.rationals)
        values[label] = factored_json(v);
    json out{{"which", r.name},
             {"holds", r.holds},
             {"hypothesis_ok", r.hypothesis_ok},
             {"relation", r.relation},
             {"values", values}};
    if (!r.hypothesis_note.empty())
        out["hypothesis_note"] = r.hypothesis_note;
    if (!r.detail.empty())
        out["detail"] = r.detail;
    return out;
}

json cmd_check(const Scenario& sc, const std::string& which)
{
    Endo phi = required_endo(sc);
    std::vector<CheckReport> reports;

    auto run_one = [&](const std::string& name) {
        if (name == "logarithmic-law") {
            reports.push_back(check_logarithmic_law(phi, sc.power, sc.options));
        } else if (name == "weak-addition") {
            if (sc.model->kind() == ModelKind::Product && !sc.endo2) {
                // a product scenario already carries both factors
                const auto& parts = ProductModel::parts_of(phi);
                reports.push_back(check_weak_addition(parts.first, parts.second, sc.options));
            } else if (sc.endo2) {
                reports.push_back(check_weak_addition(phi, *sc.endo2, sc.options));
            } else {
                fail(ErrorCode::ParseError,
                     "at /endo2: weak-addition needs a second endomorphism or a product model");
            }
        } else if (name == "conjugation") {
            if (!sc.alpha)
                fail(ErrorCode::ParseError, "at /alpha: conjugation needs an automorphism");
            reports.push_back(check_conjugation_invariance(phi, *sc.alpha, sc.options));
        } else if (name == "inverse-modulus") {
            reports.push_back(check_inverse_modulus(phi, sc.options));
        } else if (name == "addition-theorem") {
            if (!sc.h)
                fail(ErrorCode::ParseError, "at /H: addition-theorem needs a subgroup");
            reports.push_back(check_addition_theorem(phi, *sc.h, sc.options));
        } else if (name == "bridge") {
            reports.push_back(check_bridge(phi, sc.options));
        } else if (name == "monotonicity") {
            reports.push_back(check_monotonicity(phi, sc.h, sc.options));
        } else {
            fail(ErrorCode::ParseError, "unknown check '" + name + "'");
        }
    };

    if (which == "properties-all") {
        run_one("logarithmic-law");
        run_one("monotonicity");
        if (is_automorphism(phi))
            run_one("inverse-modulus");
        if (sc.alpha)
            run_one("conjugation");
        if (sc.model->is_abelian() && sc.model->kind() != ModelKind::PAdic &&
            sc.model->kind() != ModelKind::Product)
            run_one("bridge");
        if (sc.h)
            run_one("addition-theorem");
    } else {
        run_one(which);
    }

    json checks = json::array();
    bool all_hold = true;
    bool all_hypotheses = true;
    for (const auto& r : reports) {
        checks.push_back(check_report_json(r));
        all_hold = all_hold && r.holds;
        all_hypotheses = all_hypotheses && r.hypothesis_ok;
    }
    json report;
    report["command"] = "check";
    report["model"] = sc.model->describe();
    report["endo"] = phi.describe();
    report["checks"] = checks;
    report["holds"] = all_hold;
    report["hypothesis_ok"] = all_hypotheses;
    report["ok"] = all_hold && all_hypotheses;
    report["exit_code"] = !all_hold ? 1 : (!all_hypotheses ? 2 : 0);
    return report;
}

} // namespace

json run_request(const json& request)
{
    if (!request.is_object() || !request.contains("command"))
        fail(ErrorCode::ParseError, "at /: request needs a 'command'");
    std::string command = request.at("command").get<std::string>();

    if (command == "sweep") {
        SweepParams params;
        if (request.contains("order_max"))
            params.order_max = request.at("order_max").get<int>();
        if (request.contains("count"))
            params.min_endo_count = request.at("count").get<int>();
        if (request.contains("seed"))
            params.seed = request.at("seed").get<unsigned>();
        return sweep_finite_models(params);
    }

    if (!request.contains("scenario"))
        fail(ErrorCode::ParseError, "at /scenario: request needs a scenario");
    Scenario sc = parse_scenario(request.at("scenario"));

    if (command == "entropy")
        return cmd_entropy(sc);
    if (command == "table") {
        int n = request.contains("n") ? request.at("n").get<int>() : 8;
        if (n < 1)
            fail(ErrorCode::ParseError, "at /n: table length must be >= 1");
        return cmd_table(sc, n);
    }
    if (command == "check") {
        if (!request.contains("which"))
            fail(ErrorCode::ParseError, "at /which: check needs a check name");
        return cmd_check(sc, request.at("which").get<std::string>());
    }
    fail(ErrorCode::ParseError, "unknown command '" + command + "'");
}

} // namespace entropia
