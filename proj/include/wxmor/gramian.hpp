#ifndef WXMOR_GRAMIAN_HPP
#define WXMOR_GRAMIAN_HPP

#include <vector>

#include "wxmor/lti.hpp"
#include "wxmor/sim.hpp"

namespace wxmor {

/// Tall snapshot matrix Z with Z*Z^T approximating a system Gramian.
struct GramianFactor {
    enum class Kind { controllability, observability };
    Kind kind = Kind::controllability;
    double step = 0.0;
    Eigen::MatrixXd data;  ///< N x K, columns scaled by sqrt(step)
};

/// Dense (approximation of the) cross Gramian W_X.
struct CrossGramian {
    Eigen::MatrixXd data;  ///< N x N

    /// Column blocks of at most `width` columns, left to right.
    std::vector<Eigen::MatrixXd> column_blocks(Eigen::Index width) const;
};

/// Splits the columns of any matrix into blocks of at most `width`.
std::vector<Eigen::MatrixXd> partition_columns(const Eigen::MatrixXd& m,
                                               Eigen::Index width);

/// Snapshot factors (Z_C, Z_O) from per-channel simulations of the system
/// and its adjoint on a shared grid. Impulse excitation starts from
/// x0 = E^{-1} b_m (resp. E^{-T} c_q^T); binary excitation forces the
/// system from x0 = 0 with the channel's seeded signal.
std::pair<GramianFactor, GramianFactor> empirical_factors(
    const LtiSystem& sys, const Excitation& exc, double h, double T);

/// Empirical cross Gramian W_X = sum_m h * sum_k x^m(t_k) z^m(t_k)^T for a
/// square system, pairing input column b_m with output row c_m. With
/// impulse excitation this discretizes the defining integral of W_X.
/// Non-square systems must be averaged first.
CrossGramian empirical_cross_gramian(const LtiSystem& sys, double h, double T,
                                     const Excitation& exc = Excitation::impulse());

/// Dense solve of A*W*E + E*W*A = -B*C through the N^2 x N^2 Kronecker
/// system; test oracle for the empirical path. Requires a stable pencil
/// and order() <= cap.
CrossGramian dense_cross_gramian_oracle(const LtiSystem& sys,
                                        Eigen::Index cap = 200);

/// Dense solve of A*W*E^T + E*W*A^T = -B*B^T (controllability Gramian).
Eigen::MatrixXd dense_controllability_gramian_oracle(const LtiSystem& sys,
                                                     Eigen::Index cap = 200);

/// Dense solve of A^T*W*E + E^T*W*A = -C^T*C (observability Gramian).
Eigen::MatrixXd dense_observability_gramian_oracle(const LtiSystem& sys,
                                                   Eigen::Index cap = 200);

/// Relative equation residual |A*W*E + E*W*A + B*C|_F / |B*C|_F.
double sylvester_residual(const LtiSystem& sys, const CrossGramian& w);

/// Relative residual of the projected-exponential identity
/// U e^{U^T A U} U^T = U U^T e^{A U U^T}, normalized by |e^A|_F.
double exp_projection_residual(const Eigen::MatrixXd& a,
                               const Eigen::MatrixXd& u);

}  // namespace wxmor

#endif  // WXMOR_GRAMIAN_HPP
