// Python bindings. The surface is numpy-array based: grids are rebuilt from
// the array length per call and every result is copied out, so no Python
// object ever aliases an internal Grid pointer.
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cluster1d/diagnostics.hpp"
#include "cluster1d/elliptic.hpp"
#include "cluster1d/experiments.hpp"
#include "cluster1d/mild.hpp"
#include "cluster1d/model.hpp"
#include "cluster1d/stepper.hpp"

namespace py = pybind11;
using namespace cluster1d;

namespace {

Field field_from(const Grid& g, const py::array_t<double>& a) {
    const auto buf = a.unchecked<1>();
    if (static_cast<int>(buf.shape(0)) != g.n)
        throw std::invalid_argument("array length does not match the grid");
    Field f(g);
    for (int i = 0; i < g.n; ++i) f.values[i] = buf(i);
    return f;
}

py::array_t<double> make_1d(py::ssize_t n) {
    return py::array_t<double>(std::vector<py::ssize_t>{n});
}

py::array_t<double> to_numpy(const Field& f) {
    py::array_t<double> out = make_1d(f.size());
    auto buf = out.mutable_unchecked<1>();
    for (int i = 0; i < f.size(); ++i) buf(i) = f.values[i];
    return out;
}

py::array_t<double> stack(const std::vector<Field>& fields) {
    const py::ssize_t rows = static_cast<py::ssize_t>(fields.size());
    const py::ssize_t cols = rows > 0 ? fields[0].size() : 0;
    py::array_t<double> out({rows, cols});
    auto buf = out.mutable_unchecked<2>();
    for (py::ssize_t k = 0; k < rows; ++k)
        for (py::ssize_t i = 0; i < cols; ++i) buf(k, i) = fields[k].values[i];
    return out;
}

struct PyRunResult {
    std::vector<double> times;
    py::array_t<double> states;
    std::vector<DiagRecord> records;
    bool steady_state_reached = false;
    double final_time = 0.0;
};

PyRunResult convert(const RunResult& rr) {
    PyRunResult out;
    std::vector<Field> fields;
    for (const SimState& s : rr.snapshots) {
        out.times.push_back(s.t);
        fields.push_back(s.u);
    }
    out.states = stack(fields);
    out.records = rr.records;
    out.steady_state_reached = rr.steady_state_reached;
    out.final_time = rr.final_time;
    return out;
}

struct PyPicardResult {
    double t_final = 0.0;
    py::array_t<double> samples;
    int iterations = 0;
    double final_residual = 0.0;
    double contraction_ratio = 0.0;
    bool converged = false;
    bool non_contraction = false;
};

}  // namespace

PYBIND11_MODULE(_cluster1d, m) {
    m.doc() = "1D individual-clustering model: solvers and diagnostics";

    py::register_exception<SolverAbort>(m, "SolverAbort", PyExc_RuntimeError);

    py::class_<ReproductionLaw>(m, "ReproductionLaw")
        .def_static("bistable", &ReproductionLaw::bistable, py::arg("a"))
        .def_static("monostable", &ReproductionLaw::monostable)
        .def("E", &ReproductionLaw::E, py::arg("u"))
        .def("E_prime", &ReproductionLaw::E_prime, py::arg("u"))
        .def("E_second", &ReproductionLaw::E_second, py::arg("u"))
        .def_property_readonly("is_bistable", &ReproductionLaw::is_bistable)
        .def_property_readonly("is_monostable", &ReproductionLaw::is_monostable);

    py::class_<ModelParams>(m, "ModelParams")
        .def(py::init([](double delta, double epsilon, double r, const ReproductionLaw& law) {
                 ModelParams p{delta, epsilon, r, law};
                 validate_params(p);
                 return p;
             }),
             py::arg("delta") = 0.1, py::arg("epsilon") = 0.01, py::arg("r") = 0.0,
             py::arg("law") = ReproductionLaw::monostable())
        .def_readwrite("delta", &ModelParams::delta)
        .def_readwrite("epsilon", &ModelParams::epsilon)
        .def_readwrite("r", &ModelParams::r)
        .def_readwrite("law", &ModelParams::law);

    py::class_<StepperConfig>(m, "StepperConfig")
        .def(py::init([](double dt, double theta, double cfl_safety, bool minmod_faces,
                         bool steady_state_stop, double steady_state_tol) {
                 StepperConfig cfg{dt, theta, cfl_safety, minmod_faces, steady_state_stop,
                                   steady_state_tol};
                 cfg.validate();
                 return cfg;
             }),
             py::arg("dt") = 1e-4, py::arg("theta") = 1.0, py::arg("cfl_safety") = 0.9,
             py::arg("minmod_faces") = false, py::arg("steady_state_stop") = false,
             py::arg("steady_state_tol") = 1e-10)
        .def_readwrite("dt", &StepperConfig::dt)
        .def_readwrite("theta", &StepperConfig::theta)
        .def_readwrite("cfl_safety", &StepperConfig::cfl_safety)
        .def_readwrite("minmod_faces", &StepperConfig::minmod_faces)
        .def_readwrite("steady_state_stop", &StepperConfig::steady_state_stop)
        .def_readwrite("steady_state_tol", &StepperConfig::steady_state_tol);

    py::class_<DiagRecord>(m, "DiagRecord")
        .def_readonly("t", &DiagRecord::t)
        .def_readonly("mass", &DiagRecord::mass)
        .def_readonly("l1", &DiagRecord::l1)
        .def_readonly("l2sq", &DiagRecord::l2sq)
        .def_readonly("liapunov", &DiagRecord::liapunov)
        .def_readonly("dissipation", &DiagRecord::dissipation)
        .def_readonly("grad_sqrt_sq", &DiagRecord::grad_sqrt_sq)
        .def_readonly("phi_l2sq", &DiagRecord::phi_l2sq)
        .def_readonly("phi_h1sq", &DiagRecord::phi_h1sq)
        .def_readonly("min_u", &DiagRecord::min_u)
        .def_readonly("max_u", &DiagRecord::max_u)
        .def_readonly("grad_u_l2sq", &DiagRecord::grad_u_l2sq);

    py::class_<PyRunResult>(m, "RunResult")
        .def_readonly("times", &PyRunResult::times)
        .def_readonly("states", &PyRunResult::states)
        .def_readonly("records", &PyRunResult::records)
        .def_readonly("steady_state_reached", &PyRunResult::steady_state_reached)
        .def_readonly("final_time", &PyRunResult::final_time);

    py::class_<PyPicardResult>(m, "PicardResult")
        .def_readonly("t_final", &PyPicardResult::t_final)
        .def_readonly("samples", &PyPicardResult::samples)
        .def_readonly("iterations", &PyPicardResult::iterations)
        .def_readonly("final_residual", &PyPicardResult::final_residual)
        .def_readonly("contraction_ratio", &PyPicardResult::contraction_ratio)
        .def_readonly("converged", &PyPicardResult::converged)
        .def_readonly("non_contraction", &PyPicardResult::non_contraction);

    py::class_<SweepResult>(m, "SweepResult")
        .def_readonly("epsilon_list", &SweepResult::epsilon_list)
        .def_readonly("errors", &SweepResult::errors)
        .def_readonly("runtime_seconds", &SweepResult::runtime_seconds);

    py::class_<SteadyStateStudy>(m, "SteadyStateStudy")
        .def_readonly("times", &SteadyStateStudy::times)
        .def_readonly("distance", &SteadyStateStudy::distance)
        .def_readonly("limit_value", &SteadyStateStudy::limit_value)
        .def_readonly("classification", &SteadyStateStudy::classification)
        .def_readonly("final_distance", &SteadyStateStudy::final_distance)
        .def_readonly("converged", &SteadyStateStudy::converged);

    m.def(
        "grid_nodes",
        [](int n) {
            const Grid g(n);
            py::array_t<double> out = make_1d(g.n);
            auto buf = out.mutable_unchecked<1>();
            for (int i = 0; i < g.n; ++i) buf(i) = g.x[i];
            return out;
        },
        py::arg("n"), "Node coordinates of the uniform grid on [-1, 1].");

    m.def(
        "solve_elliptic",
        [](const py::array_t<double>& f, double epsilon) {
            const Grid g(static_cast<int>(f.size()));
            return to_numpy(solve_elliptic(epsilon, field_from(g, f)));
        },
        py::arg("f"), py::arg("epsilon"),
        "Solve -eps phi'' + phi = f with phi(+-1) = 0.");

    m.def(
        "solve_elliptic_neumann",
        [](const py::array_t<double>& f, double epsilon) {
            const Grid g(static_cast<int>(f.size()));
            return to_numpy(solve_elliptic_neumann(epsilon, field_from(g, f)));
        },
        py::arg("f"), py::arg("epsilon"),
        "Solve -eps psi'' + psi = f with psi'(+-1) = 0.");

    m.def(
        "compute_velocity",
        [](const py::array_t<double>& u, const ModelParams& p) {
            const Grid g(static_cast<int>(u.size()));
            return to_numpy(compute_velocity(field_from(g, u), p));
        },
        py::arg("u"), py::arg("params"),
        "Velocity phi from -eps phi'' + phi = d/dx E(u), phi(+-1) = 0.");

    m.def(
        "step",
        [](const py::array_t<double>& u, double t, const ModelParams& p,
           const StepperConfig& cfg) {
            const Grid g(static_cast<int>(u.size()));
            const SimState next = step(SimState(t, field_from(g, u)), p, cfg);
            return py::make_tuple(next.t, to_numpy(next.u));
        },
        py::arg("u"), py::arg("t"), py::arg("params"), py::arg("config"),
        "One IMEX step of the coupled system; returns (t_next, u_next).");

    m.def(
        "step_limit",
        [](const py::array_t<double>& u, double t, const ModelParams& p,
           const StepperConfig& cfg) {
            const Grid g(static_cast<int>(u.size()));
            const SimState next = step_limit(SimState(t, field_from(g, u)), p, cfg);
            return py::make_tuple(next.t, to_numpy(next.u));
        },
        py::arg("u"), py::arg("t"), py::arg("params"), py::arg("config"),
        "One step of the limiting equation u_t = (delta u + u^2/2)_xx + r u (1-u).");

    m.def(
        "run",
        [](const py::array_t<double>& u0, const ModelParams& p, const StepperConfig& cfg,
           double t_final, int sample_every, const std::vector<double>& snapshot_times) {
            const Grid g(static_cast<int>(u0.size()));
            return convert(run(field_from(g, u0), p, cfg, t_final, sample_every, snapshot_times));
        },
        py::arg("u0"), py::arg("params"), py::arg("config"), py::arg("t_final"),
        py::arg("sample_every") = 100, py::arg("snapshot_times") = std::vector<double>{},
        "Integrate the coupled system; returns snapshots and diagnostics.");

    m.def(
        "run_limit",
        [](const py::array_t<double>& u0, const ModelParams& p, const StepperConfig& cfg,
           double t_final, int sample_every, const std::vector<double>& snapshot_times) {
            const Grid g(static_cast<int>(u0.size()));
            return convert(
                run_limit(field_from(g, u0), p, cfg, t_final, sample_every, snapshot_times));
        },
        py::arg("u0"), py::arg("params"), py::arg("config"), py::arg("t_final"),
        py::arg("sample_every") = 100, py::arg("snapshot_times") = std::vector<double>{},
        "Integrate the limiting equation; returns snapshots and diagnostics.");

    m.def(
        "heat_semigroup_apply",
        [](const py::array_t<double>& u, double tau, double delta) {
            const Grid g(static_cast<int>(u.size()));
            return to_numpy(heat_semigroup_apply(field_from(g, u), tau, delta));
        },
        py::arg("u"), py::arg("tau"), py::arg("delta"),
        "Exact Neumann heat semigroup applied through the cosine spectrum.");

    m.def(
        "spectral_derivative",
        [](const py::array_t<double>& u) {
            const Grid g(static_cast<int>(u.size()));
            return to_numpy(spectral_derivative(field_from(g, u)));
        },
        py::arg("u"), "Derivative of the cosine interpolant at the nodes.");

    m.def(
        "picard_iterate",
        [](const py::array_t<double>& u0, const ModelParams& p, double T, int samples,
           double tol, int max_iter) {
            const Grid g(static_cast<int>(u0.size()));
            const PicardResult pr = picard_iterate(field_from(g, u0), p, T, samples, tol, max_iter);
            PyPicardResult out;
            out.t_final = pr.trajectory.t_final;
            out.samples = stack(pr.trajectory.samples);
            out.iterations = pr.iterations;
            out.final_residual = pr.final_residual;
            out.contraction_ratio = pr.contraction_ratio;
            out.converged = pr.converged;
            out.non_contraction = pr.non_contraction;
            return out;
        },
        py::arg("u0"), py::arg("params"), py::arg("T"), py::arg("samples") = 8,
        py::arg("tol") = 1e-10, py::arg("max_iter") = 50,
        "Picard iteration for the mild solution on [0, T].");

    m.def(
        "compute_record",
        [](const py::array_t<double>& u, double t, const ModelParams& p) {
            const Grid g(static_cast<int>(u.size()));
            return compute_record(SimState(t, field_from(g, u)), p);
        },
        py::arg("u"), py::arg("t"), py::arg("params"),
        "Mass, norms, Liapunov functional and dissipation of a state.");

    m.def(
        "epsilon_sweep",
        [](const py::array_t<double>& u0, const ModelParams& p, const StepperConfig& cfg,
           double T, const std::vector<double>& epsilon_list, int workers) {
            const Grid g(static_cast<int>(u0.size()));
            return epsilon_sweep(field_from(g, u0), p, cfg, T, epsilon_list, workers);
        },
        py::arg("u0"), py::arg("params"), py::arg("config"), py::arg("T"),
        py::arg("epsilon_list"), py::arg("workers") = 0,
        "Error of the coupled system against the limiting equation per epsilon.");

    m.def(
        "chemorepulsion_crosscheck",
        [](const py::array_t<double>& u0, double delta, double epsilon, const StepperConfig& cfg,
           double T, int compare_every) {
            const Grid g(static_cast<int>(u0.size()));
            return chemorepulsion_crosscheck(field_from(g, u0), delta, epsilon, cfg, T,
                                             compare_every);
        },
        py::arg("u0"), py::arg("delta"), py::arg("epsilon"), py::arg("config"), py::arg("T"),
        py::arg("compare_every") = 100,
        "Max L2 deviation between the chemorepulsion form and the coupled run.");

    m.def(
        "steady_state_study",
        [](const py::array_t<double>& u0, const ModelParams& p, const StepperConfig& cfg,
           double t_max) {
            const Grid g(static_cast<int>(u0.size()));
            return steady_state_study(field_from(g, u0), p, cfg, t_max);
        },
        py::arg("u0"), py::arg("params"), py::arg("config"), py::arg("t_max"),
        "Track ||u(t) - limit||_2 and classify the large-time limit.");
}
