#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace wsgreedy {

enum class ObjectiveKind { KMedian, KMeans, Sparse, Smlr, Css };
enum class InitKind { D2, Greedy, None };

ObjectiveKind objective_from_string(const std::string& s);
std::string to_string(ObjectiveKind kind);
InitKind init_from_string(const std::string& s);
std::string to_string(InitKind kind);

// One solver invocation. Exactly one of epsilon / target_error / f_stop must
// be set.
struct RunConfig {
    ObjectiveKind objective = ObjectiveKind::KMedian;
    int k = 1;
    std::optional<double> epsilon;
    std::optional<double> target_error;
    std::optional<double> f_stop;
    std::string alpha_mode = "auto";  // auto | exact | spectral | manual:<value>
    InitKind init = InitKind::Greedy;
    std::vector<int> explicit_init;  // used when init == None
    double beta = 2.0;
    double rho = 0.0;  // 0: use the initializer's claimed rho
    std::uint64_t seed = 0;
    int max_steps = 0;  // 0: ground-set size
    bool with_oracle = false;
    std::string input_path;
    std::string target_path;
    std::string output_path;
};

// Runs a config against in-memory matrices. `target` is required for smlr and
// sparse objectives. Returns the RunRecord as JSON (keys sorted, reloadable).
nlohmann::json run_on(const RunConfig& config, const Eigen::MatrixXd& input,
                      const std::optional<Eigen::MatrixXd>& target = std::nullopt);

// Loads matrices from the config's paths, runs, and writes the record to
// output_path when set.
nlohmann::json run(const RunConfig& config);

struct BenchConfig {
    ObjectiveKind objective = ObjectiveKind::KMeans;
    int n = 8;
    int k = 2;
    int dims = 2;   // point dimension (kmeans) / row count (regression; 0 = n)
    std::vector<double> epsilons = {0.25};
    int repetitions = 10;
    std::uint64_t seed = 0;
};

// Random-instance sweep reproducing the size-vs-accuracy tradeoff; returns a
// CSV table with one row per epsilon.
std::string bench(const BenchConfig& config);

}  // namespace wsgreedy
