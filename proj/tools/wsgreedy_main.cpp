#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wsgreedy/clustering.hpp"
#include "wsgreedy/csv.hpp"
#include "wsgreedy/errors.hpp"
#include "wsgreedy/oracle.hpp"
#include "wsgreedy/regression.hpp"
#include "wsgreedy/runner.hpp"

using nlohmann::json;

namespace {

int emit_error(const std::string& message, int code) {
    json err;
    err["error"] = message;
    err["exit_code"] = code;
    std::cerr << err.dump() << "\n";
    return code;
}

json verify_command(const std::string& objective, const std::string& check,
                    const std::string& input_path, const std::string& target_path, double alpha,
                    int k) {
    using namespace wsgreedy;
    const Eigen::MatrixXd input = load_matrix(input_path);
    const auto kind = objective_from_string(objective);

    std::unique_ptr<SetObjective> f;
    std::optional<RegressionInstance> inst;
    switch (kind) {
        case ObjectiveKind::KMedian:
            f = std::make_unique<KMedianObjective>(input);
            break;
        case ObjectiveKind::KMeans:
            f = std::make_unique<KMedianObjective>(kmeans_constrained_objective(input));
            break;
        case ObjectiveKind::Css: {
            RegressionInstance normalized(input, input);
            inst.emplace(input, normalized.design());
            f = std::make_unique<SmlrObjective>(*inst);
            break;
        }
        case ObjectiveKind::Sparse:
        case ObjectiveKind::Smlr: {
            if (target_path.empty()) throw ConfigError("this objective requires --target");
            inst.emplace(input, load_matrix(target_path));
            f = std::make_unique<SmlrObjective>(*inst);
            break;
        }
    }
    const int n = f->ground_size();

    json out;
    out["objective"] = objective;
    out["check"] = check;
    if (check == "supermodular") {
        const auto report = verify_supermodular(*f, n);
        out["holds"] = report.holds;
        if (report.witness)
            out["witness"] = {{"S", report.witness->first}, {"T", report.witness->second}};
    } else if (check == "weak") {
        double a = alpha;
        if (a <= 0.0) {
            if (inst)
                a = alpha_exact(*inst, inst->num_columns()).alpha;
            else
                a = 1.0;
        }
        const auto report = verify_weak_supermodularity(*f, a, n);
        out["alpha"] = a;
        out["verified"] = report.verified;
        out["pairs_checked"] = report.enumerated_count;
        if (report.witness)
            out["witness"] = {{"S", report.witness->first}, {"T", report.witness->second}};
    } else if (check == "alpha") {
        out["alpha_empirical"] = estimate_alpha_empirical(*f, n);
        if (inst) out["alpha_exact"] = alpha_exact(*inst, inst->num_columns()).alpha;
    } else if (check == "curvature") {
        const auto c = estimate_curvature(*f, n);
        if (c)
            out["curvature"] = *c;
        else
            out["curvature"] = "undefined";
        if (inst && c) {
            const Eigen::JacobiSVD<Eigen::MatrixXd> svd(inst->design());
            const auto& sv = svd.singularValues();
            const double kappa = sv[0] / sv[sv.size() - 1];
            out["condition_number_sq"] = kappa * kappa;
            out["bound_holds"] = 1.0 / (1.0 - *c) <= kappa * kappa + 1e-9;
        }
    } else if (check == "optimum") {
        const auto report = brute_force_min(*f, k, n);
        out["optimum"] = report.optimum_value;
        out["set"] = report.optimum_set.elements();
        out["enumerated"] = report.enumerated_count;
    } else {
        throw ConfigError("unknown check '" + check + "'");
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Greedy extension solver for weakly-supermodular minimization"};
    app.require_subcommand(1);

    wsgreedy::RunConfig cfg;
    std::string objective = "kmedian";
    std::string init = "greedy";
    double epsilon = -1.0, target_error = -1.0, f_stop = -1.0;

    auto* solve = app.add_subcommand("solve", "Run one greedy extension solve");
    solve->add_option("--objective", objective, "kmedian|kmeans|sparse|smlr|css")->required();
    solve->add_option("--k", cfg.k, "cardinality of the comparison optimum")->required();
    solve->add_option("--epsilon", epsilon, "bicriteria mode: relative error target");
    solve->add_option("--target-error", target_error, "additive mode: error target E");
    solve->add_option("--f-stop", f_stop, "stopping-value mode: run until f(S) <= f_stop");
    solve->add_option("--alpha", cfg.alpha_mode, "auto|exact|spectral|manual:<value>");
    solve->add_option("--init", init, "d2|greedy|none");
    solve->add_option("--init-set", cfg.explicit_init, "explicit warm start for --init none");
    solve->add_option("--beta", cfg.beta, "d2 oversampling factor");
    solve->add_option("--rho", cfg.rho, "warm-start approximation ratio override");
    solve->add_option("--seed", cfg.seed, "RNG seed");
    solve->add_option("--max-steps", cfg.max_steps, "safety bound for the f-stop mode");
    solve->add_option("--input", cfg.input_path, "CSV matrix (costs, points, or design)")
        ->required();
    solve->add_option("--target", cfg.target_path, "CSV target matrix (smlr/sparse)");
    solve->add_option("--output", cfg.output_path, "write the run record JSON here");
    solve->add_flag("--oracle", cfg.with_oracle, "include the brute-force optimum comparison");

    std::string check = "weak";
    double verify_alpha = -1.0;
    int verify_k = 1;
    std::string verify_input, verify_target;
    auto* verify = app.add_subcommand("verify", "Exhaustive desk-scale verifiers");
    verify->add_option("--objective", objective, "kmedian|kmeans|sparse|smlr|css")->required();
    verify->add_option("--check", check, "supermodular|weak|alpha|curvature|optimum");
    verify->add_option("--alpha", verify_alpha, "alpha to verify (default: certified)");
    verify->add_option("--k", verify_k, "cardinality bound for --check optimum");
    verify->add_option("--input", verify_input, "CSV matrix")->required();
    verify->add_option("--target", verify_target, "CSV target matrix (smlr/sparse)");

    wsgreedy::BenchConfig bench_cfg;
    std::string bench_objective = "kmeans";
    std::string bench_output;
    auto* bench_cmd = app.add_subcommand("bench", "Random-instance approximation-ratio sweep");
    bench_cmd->add_option("--objective", bench_objective, "kmedian|kmeans|sparse|smlr|css");
    bench_cmd->add_option("--n", bench_cfg.n, "ground-set size");
    bench_cmd->add_option("--k", bench_cfg.k, "cardinality bound");
    bench_cmd->add_option("--dims", bench_cfg.dims, "point dimension / design row count");
    bench_cmd->add_option("--epsilon", bench_cfg.epsilons, "epsilon sweep values");
    bench_cmd->add_option("--reps", bench_cfg.repetitions, "instances per epsilon");
    bench_cmd->add_option("--seed", bench_cfg.seed, "master seed");
    bench_cmd->add_option("--output", bench_output, "write the CSV table here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) {
            cfg.objective = wsgreedy::objective_from_string(objective);
            cfg.init = wsgreedy::init_from_string(init);
            if (epsilon >= 0.0) cfg.epsilon = epsilon;
            if (target_error >= 0.0) cfg.target_error = target_error;
            if (f_stop >= 0.0) cfg.f_stop = f_stop;
            const json record = wsgreedy::run(cfg);
            std::cout << record.dump(2) << "\n";
        } else if (verify->parsed()) {
            std::cout
                << verify_command(objective, check, verify_input, verify_target, verify_alpha,
                                  verify_k)
                       .dump(2)
                << "\n";
        } else if (bench_cmd->parsed()) {
            bench_cfg.objective = wsgreedy::objective_from_string(bench_objective);
            const std::string table = wsgreedy::bench(bench_cfg);
            if (!bench_output.empty()) {
                std::ofstream out(bench_output);
                if (!out) throw wsgreedy::ParseError(bench_output + ": cannot open for writing");
                out << table;
            } else {
                std::cout << table;
            }
        }
    } catch (const wsgreedy::ConfigError& e) {
        return emit_error(e.what(), 2);
    } catch (const wsgreedy::ParseError& e) {
        return emit_error(e.what(), 3);
    } catch (const wsgreedy::StallError& e) {
        return emit_error(e.what(), 4);
    } catch (const wsgreedy::GuardError& e) {
        return emit_error(e.what(), 5);
    } catch (const std::exception& e) {
        return emit_error(e.what(), 1);
    }
    return 0;
}
