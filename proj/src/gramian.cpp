#include "wxmor/gramian.hpp"

#include <cmath>
#include <stdexcept>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

namespace wxmor {

std::vector<Eigen::MatrixXd> partition_columns(const Eigen::MatrixXd& m,
                                               Eigen::Index width) {
    if (width <= 0) throw std::invalid_argument("partition width must be positive");
    std::vector<Eigen::MatrixXd> blocks;
    for (Eigen::Index c = 0; c < m.cols(); c += width)
        blocks.emplace_back(m.middleCols(c, std::min(width, m.cols() - c)));
    return blocks;
}

std::vector<Eigen::MatrixXd> CrossGramian::column_blocks(
    Eigen::Index width) const {
    return partition_columns(data, width);
}

namespace {

// States of one family of channel runs, concatenated channel-major and
// scaled by sqrt(h). Columns of `rhs` drive the runs (initial condition
// for impulse, input channel for binary).
Eigen::MatrixXd channel_snapshots(const LtiSystem& sys,
                                  const Eigen::MatrixXd& rhs_cols,
                                  const Excitation& exc, double h, double T) {
    const Eigen::Index n = sys.order();
    const Eigen::Index channels = rhs_cols.cols();
    const Eigen::Index steps =
        static_cast<Eigen::Index>(std::llround(T / h));

    Eigen::PartialPivLU<Eigen::MatrixXd> lu_e(sys.E);
    Eigen::MatrixXd snaps(n, channels * steps);
    const double scale = std::sqrt(h);
    for (Eigen::Index m = 0; m < channels; ++m) {
        Trajectory traj;
        if (exc.kind == Excitation::Kind::impulse) {
            Eigen::VectorXd x0 = lu_e.solve(rhs_cols.col(m));
            traj = integrate(sys, x0, h, T);
        } else {
            Eigen::MatrixXd u = Eigen::MatrixXd::Zero(sys.inputs(), steps);
            u.row(m) = binary_signal(exc, m, steps).transpose();
            traj = integrate(sys, u, Eigen::VectorXd::Zero(n), h, T);
        }
        snaps.middleCols(m * steps, steps) = scale * traj.values;
    }
    return snaps;
}

}  // namespace

std::pair<GramianFactor, GramianFactor> empirical_factors(
    const LtiSystem& sys, const Excitation& exc, double h, double T) {
    GramianFactor zc;
    zc.kind = GramianFactor::Kind::controllability;
    zc.step = h;
    zc.data = channel_snapshots(sys, sys.B, exc, h, T);

    const LtiSystem adj = adjoint(sys);
    GramianFactor zo;
    zo.kind = GramianFactor::Kind::observability;
    zo.step = h;
    zo.data = channel_snapshots(adj, adj.B, exc, h, T);
    return {std::move(zc), std::move(zo)};
}

CrossGramian empirical_cross_gramian(const LtiSystem& sys, double h, double T,
                                     const Excitation& exc) {
    if (!sys.is_square())
        throw std::invalid_argument(
            "cross Gramian needs a square system; average_system first");
    auto [zc, zo] = empirical_factors(sys, exc, h, T);
    CrossGramian w;
    w.data.noalias() = zc.data * zo.data.transpose();
    return w;
}

namespace {

// Solves (p1 kron q1 + p2 kron q2) vec(W) = -vec(rhs) for W.
Eigen::MatrixXd kron_solve(const Eigen::MatrixXd& p1, const Eigen::MatrixXd& q1,
                           const Eigen::MatrixXd& p2, const Eigen::MatrixXd& q2,
                           const Eigen::MatrixXd& minus_rhs) {
    const Eigen::Index n = minus_rhs.rows();
    Eigen::MatrixXd op = Eigen::kroneckerProduct(p1, q1).eval() +
                         Eigen::kroneckerProduct(p2, q2).eval();
    Eigen::VectorXd rhs =
        -Eigen::Map<const Eigen::VectorXd>(minus_rhs.data(), n * n);
    Eigen::VectorXd w = op.partialPivLu().solve(rhs);
    if (!w.allFinite())
        throw std::runtime_error("Kronecker system is singular (pencil not stable?)");
    return Eigen::Map<Eigen::MatrixXd>(w.data(), n, n);
}

void check_cap(const LtiSystem& sys, Eigen::Index cap) {
    if (sys.order() > cap)
        throw std::invalid_argument("dense Gramian oracle capped at order " +
                                    std::to_string(cap));
}

}  // namespace

CrossGramian dense_cross_gramian_oracle(const LtiSystem& sys,
                                        Eigen::Index cap) {
    check_cap(sys, cap);
    if (!sys.is_square())
        throw std::invalid_argument("cross Gramian needs a square system");
    // A*W*E + E*W*A = -B*C  <=>  (E^T kron A + A^T kron E) vec(W) = -vec(BC)
    CrossGramian w;
    w.data = kron_solve(sys.E.transpose(), sys.A, sys.A.transpose(), sys.E,
                        sys.B * sys.C);
    const double res = sylvester_residual(sys, w);
    if (!(res <= 1e-8))
        throw std::runtime_error(
            "Sylvester oracle solve failed, relative residual " +
            std::to_string(res));
    return w;
}

Eigen::MatrixXd dense_controllability_gramian_oracle(const LtiSystem& sys,
                                                     Eigen::Index cap) {
    check_cap(sys, cap);
    const Eigen::MatrixXd bbt = sys.B * sys.B.transpose();
    Eigen::MatrixXd w = kron_solve(sys.E, sys.A, sys.A, sys.E, bbt);
    const double res = (sys.A * w * sys.E.transpose() +
                        sys.E * w * sys.A.transpose() + bbt)
                           .norm() /
                       bbt.norm();
    if (!(res <= 1e-8))
        throw std::runtime_error("Lyapunov oracle solve failed");
    return w;
}

Eigen::MatrixXd dense_observability_gramian_oracle(const LtiSystem& sys,
                                                   Eigen::Index cap) {
    check_cap(sys, cap);
    const Eigen::MatrixXd ctc = sys.C.transpose() * sys.C;
    Eigen::MatrixXd w = kron_solve(sys.E.transpose(), sys.A.transpose(),
                                   sys.A.transpose(), sys.E.transpose(), ctc);
    const double res =
        (sys.A.transpose() * w * sys.E + sys.E.transpose() * w * sys.A + ctc)
            .norm() /
        ctc.norm();
    if (!(res <= 1e-8))
        throw std::runtime_error("Lyapunov oracle solve failed");
    return w;
}

double sylvester_residual(const LtiSystem& sys, const CrossGramian& w) {
    if (w.data.rows() != sys.order() || w.data.cols() != sys.order())
        throw std::invalid_argument("Gramian dimension mismatch");
    const Eigen::MatrixXd bc = sys.B * sys.C;
    return (sys.A * w.data * sys.E + sys.E * w.data * sys.A + bc).norm() /
           bc.norm();
}

double exp_projection_residual(const Eigen::MatrixXd& a,
                               const Eigen::MatrixXd& u) {
    const Eigen::MatrixXd small = (u.transpose() * a * u).exp();
    const Eigen::MatrixXd lhs = u * small * u.transpose();
    const Eigen::MatrixXd rhs = u * u.transpose() * (a * u * u.transpose()).exp();
    return (lhs - rhs).norm() / a.exp().norm();
}

}  // namespace wxmor
