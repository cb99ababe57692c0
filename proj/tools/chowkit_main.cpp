#include "chowkit/runner.hpp"
#include "chowkit/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#ifndef CHOWKIT_DEFAULT_TABLES
#define CHOWKIT_DEFAULT_TABLES "data/fano_threefolds_rho_ge5.txt"
#endif

namespace {

int run_eval(const std::string& path, const std::string& format,
             const chowkit::RunOptions& opt) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "chowkit: cannot open " << path << "\n";
        return 2;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    chowkit::Script script;
    try {
        script = chowkit::parse(buf.str());
    } catch (const chowkit::ParseError& e) {
        std::cerr << "chowkit: " << path << ": " << e.what() << "\n";
        return 2;
    }
    try {
        chowkit::Report report = chowkit::run(script, opt);
        if (format == "json")
            std::cout << report.to_json().dump(2) << "\n";
        else
            std::cout << report.to_text();
        return report.all_ok() ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "chowkit: " << e.what() << "\n";
        return 1;
    }
}

int run_check_paper(const chowkit::VerifyOptions& opt, const std::string& format) {
    std::vector<chowkit::CheckResult> checks;
    try {
        checks = chowkit::run_paper_checks(opt);
    } catch (const std::exception& e) {
        std::cerr << "chowkit: " << e.what() << "\n";
        return 1;
    }
    if (format == "json") {
        nlohmann::json j;
        j["schema"] = 1;
        j["ok"] = chowkit::all_pass(checks);
        auto arr = nlohmann::json::array();
        for (const auto& c : checks)
            arr.push_back({{"id", c.id}, {"label", c.label}, {"pass", c.pass},
                           {"details", c.details}});
        j["checks"] = std::move(arr);
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& c : checks) {
            std::cout << (c.pass ? "PASS " : "FAIL ") << c.id << ". " << c.label << "\n";
            for (const auto& d : c.details) std::cout << "       " << d << "\n";
        }
        std::cout << (chowkit::all_pass(checks) ? "all checks passed"
                                                : "some checks FAILED")
                  << "\n";
    }
    return chowkit::all_pass(checks) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"chowkit: exact intersection-theory calculator and verification CLI"};
    app.require_subcommand(1);

    std::string format = "text";
    chowkit::RunOptions ropt;
    std::string eval_path;
    auto* eval = app.add_subcommand("eval", "evaluate a .chow script");
    eval->add_option("file", eval_path, "script file")->required();
    eval->add_option("--format", format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    eval->add_option("--seed", ropt.seed, "seed for stochastic checks");
    eval->add_option("--p", ropt.p, "default prime for ffcheck");
    eval->add_option("--budget", ropt.budget, "ambient point budget");
    eval->add_option("--trials", ropt.trials, "Jacobian samples per instance");
    eval->add_flag("--strict", ropt.strict, "treat uncertified h0 values as failures");

    chowkit::VerifyOptions vopt;
    vopt.tables_path = CHOWKIT_DEFAULT_TABLES;
    auto* check = app.add_subcommand("check-paper", "run the built-in verification suite");
    check->add_option("--format", format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    check->add_option("--seeds", vopt.seeds_per_prime, "seeds per prime");
    check->add_option("--trials", vopt.jacobian_trials, "Jacobian samples per instance");
    check->add_option("--redraw-cap", vopt.redraw_cap, "redraw attempts per seed");
    check->add_option("--budget", vopt.budget, "ambient point budget");
    check->add_option("--tables", vopt.tables_path, "Fano-threefold table path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // usage errors exit with 2
    }

    if (eval->parsed()) return run_eval(eval_path, format, ropt);
    return run_check_paper(vopt, format);
}
