// Command-line front end for the entropia shared library.  Talks to the
// core exclusively through the C API; scenario files go in as JSON and
// reports come back as JSON, rendered here for humans.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "entropia/entropia.h"

namespace {

using nlohmann::json;

constexpr int kExitInputError = 3;

struct CommonFlags {
    std::optional<int> budget;
    std::optional<int> window;
    bool allow_heuristic = false;
    std::string json_out;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags)
{
    cmd->add_option("--budget", flags.budget, "Iteration budget for trajectories and hulls");
    cmd->add_option("--window", flags.window, "Heuristic stop window (uncertified runs)");
    cmd->add_flag("--allow-heuristic", flags.allow_heuristic,
                  "Exit 0 even when only a heuristic certificate was found");
    cmd->add_option("--json", flags.json_out, "Write the machine-readable report to this file");
}

json load_scenario(const std::string& path, const CommonFlags& flags)
{
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open scenario file: " << path << "\n";
        std::exit(kExitInputError);
    }
    json scenario;
    try {
        in >> scenario;
    } catch (const json::exception& e) {
        std::cerr << "error: " << path << " is not valid JSON: " << e.what() << "\n";
        std::exit(kExitInputError);
    }
    json& options = scenario["options"];
    if (flags.budget)
        options["budget"] = *flags.budget;
    if (flags.window)
        options["window"] = *flags.window;
    if (flags.allow_heuristic)
        options["allow_heuristic"] = true;
    return scenario;
}

int run_and_report(const json& request, const CommonFlags& flags,
                   void (*render)(const json&))
{
    char* report_text = nullptr;
    entropia_status status = entropia_run_command(request.dump().c_str(), &report_text);
    if (status != ENTROPIA_OK) {
        std::cerr << "error (" << entropia_status_name(status) << "): " << entropia_last_error()
                  << "\n";
        switch (status) {
        case ENTROPIA_ERR_HYPOTHESIS_FAILED:
            return 2;
        case ENTROPIA_ERR_ITERATION_BUDGET_EXCEEDED:
            return 4;
        default:
            return kExitInputError;
        }
    }
    json report = json::parse(report_text);
    entropia_string_free(report_text);

    if (!flags.json_out.empty()) {
        std::ofstream out(flags.json_out);
        if (!out) {
            std::cerr << "error: cannot write report to " << flags.json_out << "\n";
            return kExitInputError;
        }
        out << report.dump(2) << "\n";
    }
    render(report);
    return report.value("exit_code", 0);
}

std::string value_text(const json& v)
{
    std::string out = v.value("display", "?");
    if (v.contains("log_display") && out != "0")
        out += "  (~" + v["log_display"].get<std::string>() + ")";
    return out;
}

void print_trajectory_table(const json& table)
{
    const json& t = table.at("t");
    const json& beta = table.at("beta");
    std::printf("    %-4s %-28s %s\n", "n", "t_n = [T_n:U]", "beta_n");
    for (std::size_t i = 0; i < t.size(); ++i) {
        std::string tn = t[i].value("decimal", "?");
        std::string bn = i < beta.size() ? beta[i].value("decimal", "") : "";
        std::printf("    %-4zu %-28s %s\n", i + 1, tn.c_str(), bn.c_str());
    }
}

void render_entropy(const json& report)
{
    std::cout << "model: " << report.value("model", "?") << "\n";
    std::cout << "endo:  " << report.value("endo", "?") << "\n";
    std::cout << "h_alg = " << value_text(report.at("h_alg")) << "\n";
    const json& lf = report.at("paths").at("limit_free");
    std::cout << "limit-free path: " << value_text(lf.at("value")) << "  ["
              << lf.value("certificate", "") << "]\n";
    const json& lim = report.at("paths").at("limit");
    if (lim.value("available", false)) {
        std::cout << "limit path:      " << value_text(lim.at("value")) << "\n";
        for (const auto& member : lim.at("members")) {
            std::cout << "  chain member " << member.at("k") << ": "
                      << value_text(member.at("value"))
                      << (member.value("certified", false) ? "  [certified: " : "  [uncertified: ")
                      << member.value("certificate", "") << "]\n";
            print_trajectory_table(member.at("table"));
        }
    } else {
        std::cout << "limit path unavailable: " << lim.value("reason", "") << "\n";
    }
    std::cout << "paths agree: " << (report.value("agreement", false) ? "yes" : "NO") << "\n";
    std::cout << "certified:   " << (report.value("certified", false) ? "yes" : "no") << "\n";
}

void render_table(const json& report)
{
    std::cout << "model: " << report.value("model", "?") << "\n";
    std::cout << "endo:  " << report.value("endo", "?") << "\n";
    std::cout << "U:     " << report.value("U", "?") << "\n";
    print_trajectory_table(report.at("table"));
}

void render_check(const json& report)
{
    std::cout << "model: " << report.value("model", "?") << "\n";
    std::cout << "endo:  " << report.value("endo", "?") << "\n";
    for (const auto& check : report.at("checks")) {
        std::cout << check.value("which", "?") << ": "
                  << (check.value("holds", false) ? "HOLDS" : "VIOLATED");
        if (!check.value("hypothesis_ok", true))
            std::cout << "  (hypothesis failed)";
        std::cout << "\n  relation: " << check.value("relation", "") << "\n";
        for (const auto& [label, v] : check.at("values").items())
            std::cout << "  " << label << " = " << value_text(v) << "\n";
        if (check.contains("hypothesis_note"))
            std::cout << "  note: " << check["hypothesis_note"].get<std::string>() << "\n";
        if (check.contains("detail"))
            std::cout << "  " << check["detail"].get<std::string>() << "\n";
    }
}

void render_sweep(const json& report)
{
    std::cout << "groups:        " << report.value("groups", 0) << "\n";
    std::cout << "endos checked: " << report.value("endos_checked", 0) << "\n";
    std::cout << "failures:      " << report.at("failures").size() << "\n";
    std::cout << (report.value("ok", false) ? "sweep PASSED" : "sweep FAILED") << "\n";
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact algebraic entropy on finitely representable group models"};
    app.require_subcommand(1);

    std::string scenario_path;
    std::string which;
    int table_n = 8;
    int order_max = 24;
    int count = 200;
    unsigned seed = 1;
    CommonFlags flags;

    CLI::App* entropy = app.add_subcommand("entropy", "Compute h_alg by both routes");
    entropy->add_option("file", scenario_path, "Scenario JSON file")->required();
    add_common_flags(entropy, flags);

    CLI::App* check = app.add_subcommand("check", "Verify one of the entropy identities");
    check
        ->add_option("which", which,
                     "logarithmic-law | weak-addition | conjugation | inverse-modulus | "
                     "addition-theorem | bridge | monotonicity | properties-all")
        ->required();
    check->add_option("file", scenario_path, "Scenario JSON file")->required();
    add_common_flags(check, flags);

    CLI::App* table = app.add_subcommand("table", "Print the trajectory index table");
    table->add_option("file", scenario_path, "Scenario JSON file")->required();
    table->add_option("--n", table_n, "Number of trajectory steps");
    add_common_flags(table, flags);

    CLI::App* sweep = app.add_subcommand("sweep", "Randomized small-group property sweep");
    sweep->add_option("--order-max", order_max, "Largest group order in the sweep");
    sweep->add_option("--count", count, "Minimum number of endomorphisms to sample");
    sweep->add_option("--seed", seed, "Random seed (sweeps are deterministic per seed)");
    add_common_flags(sweep, flags);

    CLI11_PARSE(app, argc, argv);

    if (entropy->parsed()) {
        json request{{"command", "entropy"}, {"scenario", load_scenario(scenario_path, flags)}};
        return run_and_report(request, flags, render_entropy);
    }
    if (check->parsed()) {
        json request{{"command", "check"},
                     {"which", which},
                     {"scenario", load_scenario(scenario_path, flags)}};
        return run_and_report(request, flags, render_check);
    }
    if (table->parsed()) {
        json request{{"command", "table"},
                     {"n", table_n},
                     {"scenario", load_scenario(scenario_path, flags)}};
        return run_and_report(request, flags, render_table);
    }
    json request{{"command", "sweep"}, {"order_max", order_max}, {"count", count}, {"seed", seed}};
    return run_and_report(request, flags, render_sweep);
}
