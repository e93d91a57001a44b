#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wsgreedy/clustering.hpp"
#include "wsgreedy/greedy.hpp"
#include "wsgreedy/initializers.hpp"
#include "wsgreedy/oracle.hpp"
#include "wsgreedy/regression.hpp"

namespace py = pybind11;
using namespace wsgreedy;

PYBIND11_MODULE(_wsgreedy, m) {
    m.doc() = "Greedy extension algorithms for weakly-supermodular minimization";

    py::class_<SolutionSet>(m, "SolutionSet")
        .def(py::init<>())
        .def(py::init<const std::vector<int>&>())
        .def("add", &SolutionSet::add)
        .def("contains", &SolutionSet::contains)
        .def_property_readonly("elements", &SolutionSet::elements)
        .def("__len__", &SolutionSet::size)
        .def("__repr__", [](const SolutionSet& s) {
            std::string out = "SolutionSet([";
            for (std::size_t i = 0; i < s.elements().size(); ++i)
                out += (i ? ", " : "") + std::to_string(s.elements()[i]);
            return out + "])";
        });

    py::class_<SetObjective>(m, "SetObjective")
        .def("evaluate", &SetObjective::evaluate)
        .def("gain", &SetObjective::gain)
        .def_property_readonly("ground_size", &SetObjective::ground_size);

    py::class_<KMedianObjective, SetObjective>(m, "KMedianObjective")
        .def(py::init<Eigen::MatrixXd>());
    m.def("kmeans_constrained_objective", &kmeans_constrained_objective, py::arg("points"));

    py::class_<RegressionInstance>(m, "RegressionInstance")
        .def(py::init<Eigen::MatrixXd, Eigen::MatrixXd, double>(), py::arg("design"),
             py::arg("target"), py::arg("column_norm_tolerance") = 1e-12)
        .def_property_readonly("design", &RegressionInstance::design)
        .def_property_readonly("target", &RegressionInstance::target)
        .def_property_readonly("original_column_norms", &RegressionInstance::original_column_norms);

    py::class_<SmlrObjective, SetObjective>(m, "SmlrObjective")
        .def(py::init<RegressionInstance>());
    m.def("css_objective", &css_objective, py::arg("x"));

    py::class_<TraceStep>(m, "TraceStep")
        .def_readonly("iteration", &TraceStep::iteration)
        .def_readonly("element", &TraceStep::element)
        .def_readonly("value", &TraceStep::value);
    py::class_<GreedyTrace>(m, "GreedyTrace")
        .def_readonly("initial_value", &GreedyTrace::initial_value)
        .def_readonly("steps", &GreedyTrace::steps);
    py::class_<GreedyResult>(m, "GreedyResult")
        .def_readonly("solution", &GreedyResult::solution)
        .def_readonly("trace", &GreedyResult::trace)
        .def_property_readonly("stop_reason",
                               [](const GreedyResult& r) { return to_string(r.stop_reason); });

    m.def("iteration_budget", &iteration_budget, py::arg("alpha"), py::arg("k"),
          py::arg("f_initial"), py::arg("target_error"));
    m.def(
        "greedy_extend",
        [](const SetObjective& f, const SolutionSet& s0, double alpha, int k,
           double target_error) {
            return greedy_extend(f, s0, {alpha, k, target_error});
        },
        py::arg("f"), py::arg("s0"), py::arg("alpha"), py::arg("k"), py::arg("target_error"));
    m.def(
        "greedy_extend_until",
        [](const SetObjective& f, const SolutionSet& s0, double f_stop, int max_steps) {
            return greedy_extend_until(f, s0, f_stop, max_steps);
        },
        py::arg("f"), py::arg("s0"), py::arg("f_stop"), py::arg("max_steps"));
    m.def(
        "bicriteria_solve",
        [](const SetObjective& f, const SolutionSet& s0, double rho, int k, double alpha,
           double epsilon) {
            return bicriteria_solve(
                f, [&](const SetObjective&, int) { return s0; }, rho, k, alpha, epsilon);
        },
        py::arg("f"), py::arg("s0"), py::arg("rho"), py::arg("k"), py::arg("alpha"),
        py::arg("epsilon"));

    py::class_<InitializerResult>(m, "InitializerResult")
        .def_readonly("solution", &InitializerResult::solution)
        .def_readonly("claimed_rho", &InitializerResult::claimed_rho)
        .def_readonly("method", &InitializerResult::method);
    m.def(
        "d2_adaptive_sample",
        [](const Eigen::MatrixXd& points, int k, double beta, std::uint64_t seed) {
            SeededRng rng(seed);
            return d2_adaptive_sample(points, k, beta, rng);
        },
        py::arg("points"), py::arg("k"), py::arg("beta") = 2.0, py::arg("seed") = 0);
    m.def("greedy_init", &greedy_init, py::arg("f"), py::arg("k"),
          py::arg("rho_certified") = false);

    py::class_<AlphaCertificate>(m, "AlphaCertificate")
        .def_readonly("alpha", &AlphaCertificate::alpha)
        .def_property_readonly("scope",
                               [](const AlphaCertificate& c) { return to_string(c.scope); })
        .def_readonly("detail", &AlphaCertificate::detail);
    m.def("alpha_exact", &alpha_exact, py::arg("instance"), py::arg("max_subset_size"),
          py::arg("guard") = std::size_t{1} << 20);
    m.def("alpha_spectral_bound", &alpha_spectral_bound, py::arg("instance"),
          py::arg("rank_tolerance") = 1e-10);

    py::class_<SparseRegressReport>(m, "SparseRegressReport")
        .def_readonly("result", &SparseRegressReport::result)
        .def_readonly("achieved_value", &SparseRegressReport::achieved_value)
        .def_readonly("alpha", &SparseRegressReport::alpha)
        .def_readonly("k", &SparseRegressReport::k)
        .def_readonly("size_bound", &SparseRegressReport::size_bound)
        .def_readonly("natarajan_bound", &SparseRegressReport::natarajan_bound)
        .def_readonly("coefficients", &SparseRegressReport::coefficients);
    m.def(
        "sparse_regress",
        [](const RegressionInstance& instance, double target_error, int known_k, int max_steps) {
            return sparse_regress(instance, target_error, known_k, max_steps);
        },
        py::arg("instance"), py::arg("target_error"), py::arg("known_k") = 0,
        py::arg("max_steps") = 0);

    py::class_<OracleReport>(m, "OracleReport")
        .def_readonly("optimum_value", &OracleReport::optimum_value)
        .def_readonly("optimum_set", &OracleReport::optimum_set)
        .def_readonly("enumerated_count", &OracleReport::enumerated_count)
        .def_readonly("verified", &OracleReport::verified)
        .def_readonly("witness", &OracleReport::witness);
    m.def("brute_force_min", &brute_force_min, py::arg("f"), py::arg("k"), py::arg("n"),
          py::arg("guard") = std::uint64_t{1} << 22);
    m.def("verify_weak_supermodularity", &verify_weak_supermodularity, py::arg("f"),
          py::arg("alpha"), py::arg("n"), py::arg("tol") = 1e-9, py::arg("max_n") = 10);
    m.def("estimate_alpha_empirical", &estimate_alpha_empirical, py::arg("f"), py::arg("n"),
          py::arg("max_n") = 10);
    m.def("estimate_curvature", &estimate_curvature, py::arg("f"), py::arg("n"),
          py::arg("max_n") = 8, py::arg("denom_tol") = 1e-12);
    m.def(
        "verify_supermodular",
        [](const SetObjective& f, int n, double tol) {
            const auto report = verify_supermodular(f, n, tol);
            return std::make_pair(report.holds, report.witness);
        },
        py::arg("f"), py::arg("n"), py::arg("tol") = 1e-9);
}
