#ifndef WXMOR_SIM_HPP
#define WXMOR_SIM_HPP

#include <cstdint>

#include "wxmor/lti.hpp"

namespace wxmor {

/// Uniformly sampled time series. Column k holds the sample at
/// t = (k+1)*step; the initial condition at t = 0 is not stored.
struct Trajectory {
    double step = 0.0;
    Eigen::MatrixXd values;  ///< dim x K, one column per sample

    Eigen::Index samples() const { return values.cols(); }
};

/// Training input for empirical Gramians. An impulse is realized as an
/// initial condition (exact for linear systems); binary inputs hold a
/// value from {0, amplitude} per step, drawn from a seeded PRNG.
struct Excitation {
    enum class Kind { impulse, binary };
    Kind kind = Kind::impulse;
    std::uint64_t seed = 0;   // binary only
    double amplitude = 1.0;   // binary only

    static Excitation impulse() { return Excitation{}; }
    static Excitation binary(std::uint64_t seed, double amplitude = 1.0) {
        return Excitation{Kind::binary, seed, amplitude};
    }
};

/// Deterministic binary signal for one input channel: K steps of values
/// drawn uniformly from {0, amplitude}. The stream depends only on
/// (seed, channel), so runs are reproducible channel by channel.
Eigen::VectorXd binary_signal(const Excitation& exc, Eigen::Index channel,
                              Eigen::Index steps);

/// Implicit Euler for E*x' = A*x + B*u from x(0) = x0:
///   (E - h*A) * x_{k+1} = E*x_k + h*B*u_{k+1}.
/// The factorization of (E - h*A) is formed once. u has one column per
/// step (value of u at t_{k+1}); pass a 0-column matrix for u == 0.
Trajectory integrate(const LtiSystem& sys, const Eigen::MatrixXd& u,
                     const Eigen::VectorXd& x0, double h, double T);

/// Homogeneous integration, u == 0.
Trajectory integrate(const LtiSystem& sys, const Eigen::VectorXd& x0, double h,
                     double T);

/// Output trajectory y = C*x under a Dirac input on all channels jointly,
/// realized as x0 = E^{-1} * (row-sum of B); exact for linear systems and
/// independent of the step size.
Trajectory impulse_response(const LtiSystem& sys, double h, double T);

/// Discrete L2 norm sqrt(h * sum_k |y_k|^2) (rectangle rule).
double l2_norm(const Trajectory& traj);

}  // namespace wxmor

#endif  // WXMOR_SIM_HPP
