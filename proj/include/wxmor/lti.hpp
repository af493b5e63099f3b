#ifndef WXMOR_LTI_HPP
#define WXMOR_LTI_HPP

#include <Eigen/Dense>

namespace wxmor {

/// Generalized linear time-invariant system E*x' = A*x + B*u, y = C*x
/// with non-singular mass matrix E.
struct LtiSystem {
    Eigen::MatrixXd E;  ///< N x N mass matrix
    Eigen::MatrixXd A;  ///< N x N system matrix
    Eigen::MatrixXd B;  ///< N x M input matrix
    Eigen::MatrixXd C;  ///< Q x N output matrix

    LtiSystem() = default;
    LtiSystem(Eigen::MatrixXd E_, Eigen::MatrixXd A_, Eigen::MatrixXd B_,
              Eigen::MatrixXd C_);

    Eigen::Index order() const { return A.rows(); }    ///< N
    Eigen::Index inputs() const { return B.cols(); }   ///< M
    Eigen::Index outputs() const { return C.rows(); }  ///< Q

    bool is_square() const { return inputs() == outputs(); }
    bool is_siso() const { return inputs() == 1 && outputs() == 1; }
};

/// Structural checks relevant for Galerkin stability preservation.
struct DissipativityReport {
    bool is_square = false;
    bool is_siso = false;
    bool mass_nonsingular = false;
    bool symmetric_part_negative_definite = false;
    bool mass_positive_definite = false;
    /// True iff A + A^T < 0 and E > 0 (strict dissipativity), in which
    /// case any orthonormal Galerkin projection yields a stable ROM.
    bool stability_preserving = false;
};

/// Checks dissipativity of a system. Definiteness is decided by the
/// eigenvalues of the symmetric parts against a numerical-rank style
/// tolerance N*eps*max(|A|,|E|). A singular E is reported via
/// mass_nonsingular, not thrown.
DissipativityReport validate(const LtiSystem& sys);

/// Adjoint system (E^T, A^T, C^T, B^T). Involutive.
LtiSystem adjoint(const LtiSystem& sys);

/// SISO surrogate (E, A, sum of B columns, sum of C rows) whose cross
/// Gramian is the non-symmetric cross Gramian of the original system.
LtiSystem average_system(const LtiSystem& sys);

}  // namespace wxmor

#endif  // WXMOR_LTI_HPP
