#include "wsgreedy/runner.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <memory>
#include <sstream>

#include "wsgreedy/clustering.hpp"
#include "wsgreedy/csv.hpp"
#include "wsgreedy/errors.hpp"
#include "wsgreedy/greedy.hpp"
#include "wsgreedy/initializers.hpp"
#include "wsgreedy/oracle.hpp"
#include "wsgreedy/regression.hpp"

namespace wsgreedy {

using nlohmann::json;

ObjectiveKind objective_from_string(const std::string& s) {
    if (s == "kmedian") return ObjectiveKind::KMedian;
    if (s == "kmeans") return ObjectiveKind::KMeans;
    if (s == "sparse") return ObjectiveKind::Sparse;
    if (s == "smlr") return ObjectiveKind::Smlr;
    if (s == "css") return ObjectiveKind::Css;
    throw ConfigError("unknown objective '" + s + "'");
}

std::string to_string(ObjectiveKind kind) {
    switch (kind) {
        case ObjectiveKind::KMedian: return "kmedian";
        case ObjectiveKind::KMeans: return "kmeans";
        case ObjectiveKind::Sparse: return "sparse";
        case ObjectiveKind::Smlr: return "smlr";
        case ObjectiveKind::Css: return "css";
    }
    return "unknown";
}

InitKind init_from_string(const std::string& s) {
    if (s == "d2") return InitKind::D2;
    if (s == "greedy") return InitKind::Greedy;
    if (s == "none") return InitKind::None;
    throw ConfigError("unknown initializer '" + s + "'");
}

std::string to_string(InitKind kind) {
    switch (kind) {
        case InitKind::D2: return "d2";
        case InitKind::Greedy: return "greedy";
        case InitKind::None: return "none";
    }
    return "unknown";
}

namespace {

bool is_regression(ObjectiveKind kind) {
    return kind == ObjectiveKind::Sparse || kind == ObjectiveKind::Smlr ||
           kind == ObjectiveKind::Css;
}

struct BuiltObjective {
    std::unique_ptr<SetObjective> objective;
    std::optional<RegressionInstance> instance;  // regression families only
};

BuiltObjective build_objective(const RunConfig& config, const Eigen::MatrixXd& input,
                               const std::optional<Eigen::MatrixXd>& target) {
    BuiltObjective out;
    switch (config.objective) {
        case ObjectiveKind::KMedian:
            out.objective = std::make_unique<KMedianObjective>(input);
            return out;
        case ObjectiveKind::KMeans:
            out.objective = std::make_unique<KMedianObjective>(kmeans_constrained_objective(input));
            return out;
        case ObjectiveKind::Css: {
            RegressionInstance normalized(input, input);
            out.instance.emplace(input, normalized.design());
            break;
        }
        case ObjectiveKind::Sparse:
        case ObjectiveKind::Smlr: {
            if (!target) throw ConfigError("this objective requires a target matrix");
            if (config.objective == ObjectiveKind::Sparse && target->cols() != 1)
                throw ConfigError("sparse regression expects a single target column");
            out.instance.emplace(input, *target);
            break;
        }
    }
    out.objective = std::make_unique<SmlrObjective>(*out.instance);
    return out;
}

struct AlphaChoice {
    double value = 1.0;
    std::string scope = "exact";
    std::string detail;
};

AlphaChoice choose_alpha(const RunConfig& config, const BuiltObjective& built) {
    AlphaChoice out;
    if (config.alpha_mode.rfind("manual:", 0) == 0) {
        out.value = std::stod(config.alpha_mode.substr(7));
        if (out.value < 1.0) throw ConfigError("manual alpha must be >= 1");
        out.scope = "manual";
        return out;
    }
    if (!is_regression(config.objective)) {
        // k-median style objectives are supermodular, hence weakly-1-supermodular.
        out.value = 1.0;
        out.scope = "exact";
        out.detail = "supermodular objective";
        return out;
    }
    const auto& inst = *built.instance;
    if (config.alpha_mode == "spectral") {
        const auto cert = alpha_spectral_bound(inst);
        return {cert.alpha, to_string(cert.scope), cert.detail};
    }
    if (config.alpha_mode == "exact") {
        const auto cert = alpha_exact(inst, inst.num_columns());
        return {cert.alpha, to_string(cert.scope), cert.detail};
    }
    if (config.alpha_mode != "auto") throw ConfigError("unknown alpha mode '" + config.alpha_mode + "'");
    try {
        const auto cert = alpha_exact(inst, inst.num_columns());
        return {cert.alpha, to_string(cert.scope), cert.detail};
    } catch (const GuardError&) {
        const auto cert = alpha_spectral_bound(inst);  // may throw on rank deficiency
        return {cert.alpha, to_string(cert.scope), cert.detail};
    }
}

json config_json(const RunConfig& config) {
    json j;
    j["objective"] = to_string(config.objective);
    j["k"] = config.k;
    if (config.epsilon) j["epsilon"] = *config.epsilon;
    if (config.target_error) j["target_error"] = *config.target_error;
    if (config.f_stop) j["f_stop"] = *config.f_stop;
    j["alpha_mode"] = config.alpha_mode;
    j["init"] = to_string(config.init);
    if (config.init == InitKind::None) j["init_set"] = config.explicit_init;
    j["beta"] = config.beta;
    if (config.rho > 0.0) j["rho"] = config.rho;
    j["seed"] = config.seed;
    return j;
}

json trace_json(const GreedyTrace& trace) {
    json steps = json::array();
    for (const auto& s : trace.steps)
        steps.push_back({{"t", s.iteration}, {"element", s.element}, {"value", s.value}});
    return steps;
}

}  // namespace

nlohmann::json run_on(const RunConfig& config, const Eigen::MatrixXd& input,
                      const std::optional<Eigen::MatrixXd>& target) {
    const int modes = (config.epsilon ? 1 : 0) + (config.target_error ? 1 : 0) +
                      (config.f_stop ? 1 : 0);
    if (modes != 1)
        throw ConfigError("exactly one of epsilon, target_error, f_stop must be set");
    if (config.k < 1) throw ConfigError("k must be >= 1");

    const auto t_start = std::chrono::steady_clock::now();
    auto built = build_objective(config, input, target);
    const SetObjective& f = *built.objective;
    const AlphaChoice alpha = choose_alpha(config, built);

    // Warm start.
    InitializerResult init;
    SeededRng rng(config.seed);
    switch (config.init) {
        case InitKind::D2:
            if (config.objective != ObjectiveKind::KMeans)
                throw ConfigError("d2 initializer requires the kmeans objective (point inputs)");
            init = d2_adaptive_sample(input, config.k, config.beta, rng);
            break;
        case InitKind::Greedy:
            init = greedy_init(f, config.k, config.objective == ObjectiveKind::Css);
            break;
        case InitKind::None:
            if (!is_regression(config.objective) && config.explicit_init.empty())
                throw ConfigError("clustering objectives need a non-empty explicit warm start");
            init.solution = SolutionSet(config.explicit_init);
            init.method = "none";
            init.claimed_rho = config.rho > 0.0 ? config.rho : 1.0;
            break;
    }
    const double init_value = f.evaluate(init.solution);

    // Solve.
    GreedyResult result;
    json sparse_section;
    if (config.epsilon) {
        const double rho = config.rho > 0.0 ? config.rho : init.claimed_rho;
        result = bicriteria_solve(
            f, [&](const SetObjective&, int) { return init.solution; }, rho, config.k, alpha.value,
            *config.epsilon);
    } else if (config.target_error) {
        result = greedy_extend(f, init.solution, {alpha.value, config.k, *config.target_error});
    } else if (config.objective == ObjectiveKind::Sparse) {
        const auto report = sparse_regress(*built.instance, *config.f_stop, 0, config.max_steps);
        result = report.result;
        sparse_section["k"] = report.k;
        sparse_section["size_bound"] = report.size_bound;
        sparse_section["natarajan_bound"] = report.natarajan_bound;
        sparse_section["coefficients"] = std::vector<double>(
            report.coefficients.data(), report.coefficients.data() + report.coefficients.size());
    } else {
        const int max_steps = config.max_steps > 0 ? config.max_steps : f.ground_size();
        result = greedy_extend_until(f, init.solution, *config.f_stop, max_steps);
    }
    if (result.stop_reason == StopReason::Stalled && config.f_stop)
        throw StallError("no candidate improves the objective before reaching f_stop");

    const double final_value = f.evaluate(result.solution);

    json record;
    record["config"] = config_json(config);
    record["init"] = {{"method", init.method},
                      {"set", init.solution.elements()},
                      {"value", init_value},
                      {"claimed_rho", init.claimed_rho}};
    record["trace"] = trace_json(result.trace);
    record["result"] = {{"set", result.solution.elements()},
                        {"value", final_value},
                        {"size", result.solution.size()}};
    record["stop_reason"] = to_string(result.stop_reason);
    record["alpha"] = {{"value", alpha.value}, {"scope", alpha.scope}};
    if (!sparse_section.is_null()) record["sparse"] = sparse_section;

    if (config.with_oracle) {
        const auto oracle = brute_force_min(f, config.k, f.ground_size());
        record["oracle"] = {{"optimum", oracle.optimum_value},
                            {"set", oracle.optimum_set.elements()},
                            {"ratio", oracle.optimum_value > 0.0
                                          ? final_value / oracle.optimum_value
                                          : (final_value <= 0.0 ? 1.0 : std::numeric_limits<double>::infinity())}};
    }
    const auto t_end = std::chrono::steady_clock::now();
    record["timings_ms"] = {
        {"total", std::chrono::duration<double, std::milli>(t_end - t_start).count()}};
    return record;
}

nlohmann::json run(const RunConfig& config) {
    const Eigen::MatrixXd input = load_matrix(config.input_path);
    std::optional<Eigen::MatrixXd> target;
    if (!config.target_path.empty()) target = load_matrix(config.target_path);
    json record = run_on(config, input, target);
    if (!config.output_path.empty()) {
        std::ofstream out(config.output_path);
        if (!out) throw ParseError(config.output_path + ": cannot open for writing");
        out << record.dump(2) << "\n";
    }
    return record;
}

std::string bench(const BenchConfig& config) {
    if (config.repetitions < 0) throw ConfigError("repetitions must be >= 0");

    std::ostringstream out;
    out << "objective,n,k,epsilon,repetitions,mean_ratio,max_ratio,mean_size,size_bound,"
           "runtime_ms\n";

    for (double eps : config.epsilons) {
        double ratio_sum = 0.0, ratio_max = 0.0, size_sum = 0.0;
        int bound = 0;
        const auto t_start = std::chrono::steady_clock::now();
        for (int rep = 0; rep < config.repetitions; ++rep) {
            // Fixed per-repetition offset keeps streams independent and
            // reproducible.
            SeededRng rng(config.seed + 1000003ull * static_cast<std::uint64_t>(rep));
            auto uniform = [&rng]() { return rng.uniform01(); };

            std::unique_ptr<SetObjective> f;
            std::optional<RegressionInstance> inst;
            Eigen::MatrixXd points;
            const int rows = config.dims > 0 && is_regression(config.objective)
                                 ? std::max(config.dims, config.n)
                                 : config.n;
            switch (config.objective) {
                case ObjectiveKind::KMedian: {
                    Eigen::MatrixXd w(config.n, config.n);
                    for (Eigen::Index i = 0; i < w.size(); ++i) w.data()[i] = uniform();
                    f = std::make_unique<KMedianObjective>(w);
                    break;
                }
                case ObjectiveKind::KMeans: {
                    points.resize(config.n, std::max(1, config.dims));
                    for (Eigen::Index i = 0; i < points.size(); ++i) points.data()[i] = uniform();
                    f = std::make_unique<KMedianObjective>(kmeans_constrained_objective(points));
                    break;
                }
                default: {
                    std::normal_distribution<double> gauss;
                    Eigen::MatrixXd x(rows, config.n);
                    for (Eigen::Index i = 0; i < x.size(); ++i) x.data()[i] = gauss(rng.engine());
                    Eigen::MatrixXd y;
                    if (config.objective == ObjectiveKind::Css) {
                        y = x;
                    } else {
                        y.resize(rows, 1);
                        for (Eigen::Index i = 0; i < y.size(); ++i) y.data()[i] = gauss(rng.engine());
                    }
                    inst.emplace(x, y);
                    if (config.objective == ObjectiveKind::Css)
                        inst.emplace(x, inst->design());
                    f = std::make_unique<SmlrObjective>(*inst);
                    break;
                }
            }

            double alpha = 1.0;
            if (inst) alpha = alpha_exact(*inst, inst->num_columns()).alpha;

            InitializerResult init;
            if (config.objective == ObjectiveKind::KMeans) {
                init = d2_adaptive_sample(points, config.k, 2.0, rng);
            } else {
                try {
                    init = greedy_init(*f, config.k, config.objective == ObjectiveKind::Css);
                } catch (const StallError&) {
                    init = greedy_init(*f, 1);
                }
            }
            const double rho = init.claimed_rho;
            const auto result = bicriteria_solve(
                *f, [&](const SetObjective&, int) { return init.solution; }, rho, config.k, alpha,
                eps);

            const auto oracle = brute_force_min(*f, config.k, f->ground_size());
            const double value = f->evaluate(result.solution);
            const double ratio =
                oracle.optimum_value > 0.0 ? value / oracle.optimum_value : 1.0;
            ratio_sum += ratio;
            ratio_max = std::max(ratio_max, ratio);
            size_sum += static_cast<double>(result.solution.size());
            const int budget = rho > eps ? static_cast<int>(std::ceil(
                                               alpha * config.k * std::log(rho / eps)))
                                         : 0;
            bound = std::max(bound, static_cast<int>(init.solution.size()) + budget);
        }
        const auto t_end = std::chrono::steady_clock::now();
        const double ms = std::chrono::duration<double, std::milli>(t_end - t_start).count();
        if (config.repetitions == 0) continue;
        out << to_string(config.objective) << ',' << config.n << ',' << config.k << ',' << eps
            << ',' << config.repetitions << ',' << ratio_sum / config.repetitions << ','
            << ratio_max << ',' << size_sum / config.repetitions << ',' << bound << ',' << ms
            << "\n";
    }
    return out.str();
}

}  // namespace wsgreedy
