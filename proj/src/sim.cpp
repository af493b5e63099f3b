#include "wxmor/sim.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace wxmor {

namespace {

Eigen::Index step_count(double h, double T) {
    if (!(h > 0.0)) throw std::invalid_argument("step size must be positive");
    if (!(T >= h)) throw std::invalid_argument("horizon must cover one step");
    return static_cast<Eigen::Index>(std::llround(T / h));
}

}  // namespace

Eigen::VectorXd binary_signal(const Excitation& exc, Eigen::Index channel,
                              Eigen::Index steps) {
    std::mt19937_64 rng(exc.seed ^
                        (0x9E3779B97F4A7C15ULL *
                         (static_cast<std::uint64_t>(channel) + 1)));
    Eigen::VectorXd u(steps);
    for (Eigen::Index k = 0; k < steps; ++k)
        u[k] = (rng() & 1u) ? exc.amplitude : 0.0;
    return u;
}

Trajectory integrate(const LtiSystem& sys, const Eigen::MatrixXd& u,
                     const Eigen::VectorXd& x0, double h, double T) {
    const Eigen::Index n = sys.order();
    const Eigen::Index steps = step_count(h, T);
    if (x0.size() != n)
        throw std::invalid_argument("initial state has wrong dimension");
    const bool forced = u.cols() > 0;
    if (forced && (u.rows() != sys.inputs() || u.cols() < steps))
        throw std::invalid_argument("input samples do not match system/grid");

    const Eigen::MatrixXd stepper = sys.E - h * sys.A;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(stepper);
    const double scale = stepper.cwiseAbs().maxCoeff();
    const double pivot_tol =
        static_cast<double>(n) * std::numeric_limits<double>::epsilon() * scale;
    if (scale == 0.0 ||
        lu.matrixLU().diagonal().cwiseAbs().minCoeff() <= pivot_tol)
        throw std::runtime_error("implicit Euler matrix (E - h*A) is singular at h = " +
                                 std::to_string(h));

    Trajectory traj;
    traj.step = h;
    traj.values.resize(n, steps);

    Eigen::VectorXd x = x0;
    Eigen::VectorXd rhs(n);
    for (Eigen::Index k = 0; k < steps; ++k) {
        rhs.noalias() = sys.E * x;
        if (forced) rhs.noalias() += h * (sys.B * u.col(k));
        x = lu.solve(rhs);
        traj.values.col(k) = x;
    }
    return traj;
}

Trajectory integrate(const LtiSystem& sys, const Eigen::VectorXd& x0, double h,
                     double T) {
    return integrate(sys, Eigen::MatrixXd(sys.inputs(), 0), x0, h, T);
}

Trajectory impulse_response(const LtiSystem& sys, double h, double T) {
    Eigen::VectorXd b = sys.B.rowwise().sum();
    Eigen::VectorXd x0 = sys.E.partialPivLu().solve(b);
    Trajectory states = integrate(sys, x0, h, T);
    Trajectory out;
    out.step = h;
    out.values.noalias() = sys.C * states.values;
    return out;
}

double l2_norm(const Trajectory& traj) {
    return std::sqrt(traj.step) * traj.values.norm();
}

}  // namespace wxmor
