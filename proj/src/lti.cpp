#include "wxmor/lti.hpp"

#include <limits>
#include <stdexcept>

namespace wxmor {

LtiSystem::LtiSystem(Eigen::MatrixXd E_, Eigen::MatrixXd A_,
                     Eigen::MatrixXd B_, Eigen::MatrixXd C_)
    : E(std::move(E_)), A(std::move(A_)), B(std::move(B_)), C(std::move(C_)) {
    const Eigen::Index n = A.rows();
    if (A.cols() != n) throw std::invalid_argument("A must be square");
    if (E.rows() != n || E.cols() != n)
        throw std::invalid_argument("E must match the order of A");
    if (B.rows() != n)
        throw std::invalid_argument("B must have as many rows as A");
    if (C.cols() != n)
        throw std::invalid_argument("C must have as many columns as A");
    if (n == 0) throw std::invalid_argument("system order must be positive");
    if (B.cols() == 0 || C.rows() == 0)
        throw std::invalid_argument("input and output counts must be positive");
}

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();

bool lu_nonsingular(const Eigen::MatrixXd& E) {
    const double scale = E.cwiseAbs().maxCoeff();
    if (scale == 0.0) return false;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(E);
    const double tol = static_cast<double>(E.rows()) * eps * scale;
    return lu.matrixLU().diagonal().cwiseAbs().minCoeff() > tol;
}

}  // namespace

DissipativityReport validate(const LtiSystem& sys) {
    DissipativityReport rep;
    rep.is_square = sys.is_square();
    rep.is_siso = sys.is_siso();
    rep.mass_nonsingular = lu_nonsingular(sys.E);

    const double n = static_cast<double>(sys.order());
    const double tol =
        n * eps *
        std::max(sys.A.cwiseAbs().maxCoeff(), sys.E.cwiseAbs().maxCoeff());

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> asym(
        0.5 * (sys.A + sys.A.transpose()), Eigen::EigenvaluesOnly);
    rep.symmetric_part_negative_definite =
        asym.eigenvalues().maxCoeff() < -tol;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> esym(
        0.5 * (sys.E + sys.E.transpose()), Eigen::EigenvaluesOnly);
    rep.mass_positive_definite = esym.eigenvalues().minCoeff() > tol;

    rep.stability_preserving =
        rep.symmetric_part_negative_definite && rep.mass_positive_definite;
    return rep;
}

LtiSystem adjoint(const LtiSystem& sys) {
    return LtiSystem(sys.E.transpose(), sys.A.transpose(), sys.C.transpose(),
                     sys.B.transpose());
}

LtiSystem average_system(const LtiSystem& sys) {
    Eigen::MatrixXd b_bar = sys.B.rowwise().sum();
    Eigen::MatrixXd c_bar = sys.C.colwise().sum();
    return LtiSystem(sys.E, sys.A, std::move(b_bar), std::move(c_bar));
}

}  // namespace wxmor
