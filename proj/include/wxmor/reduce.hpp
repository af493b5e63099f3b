#ifndef WXMOR_REDUCE_HPP
#define WXMOR_REDUCE_HPP

#include "wxmor/gramian.hpp"
#include "wxmor/hapod.hpp"
#include "wxmor/lti.hpp"

namespace wxmor {

/// Reduction / lifting operator pair. Galerkin projectors satisfy
/// V1 = U1^T with orthonormal U1; Petrov-Galerkin pairs satisfy
/// V1 * U1 = I.
struct Projector {
    Eigen::MatrixXd U1;  ///< N x n lifting basis
    Eigen::MatrixXd V1;  ///< n x N reducing map
    bool galerkin = true;
    Eigen::VectorXd singular_values;  ///< retained values of the defining SVD
    Eigen::VectorXd discarded;        ///< values truncated by that SVD

    Eigen::Index reduced_order() const { return U1.cols(); }
    bool empty() const { return U1.cols() == 0; }
};

enum class Method { WXDS, DSPMR, DSPMR_R, LREBT };

const char* method_name(Method m);

/// A projector together with the model it produced.
struct Reduction {
    Projector projector;
    LtiSystem rom;
    Method method = Method::WXDS;
    Eigen::VectorXd discarded_svals;
};

/// Reduced quantities (V1 E U1, V1 A U1, V1 B, C U1).
LtiSystem project(const LtiSystem& sys, const Projector& p);

/// Cross-Gramian dominant subspaces: rank-revealing SVD of the conjoined
/// singular-value-scaled bases [U_X D_X | V_X D_X]; the retained left
/// singular vectors form a Galerkin projection. This is the flat
/// reference path; dominant_pair computes the same basis via the HAPOD.
Projector wxds(const Eigen::MatrixXd& ux, const Eigen::VectorXd& dx,
               const Eigen::MatrixXd& vx);

/// Dominant subspaces from Gramian factors. Unrefined: each factor is
/// POD-compressed to `tol` and the orthonormal bases are conjoined.
/// Refined: the factors are conjoined as passed, weighted by
/// w_C = |Z_O|_F / |Z_C|_F against w_O = 1 (tol is not used; callers
/// compress the factors beforehand).
Projector dspmr(const GramianFactor& zc, const GramianFactor& zo, bool refined,
                double tol = 0.0);

/// Square-root balanced truncation of low-rank factors: SVD of
/// Z_O^T E Z_C, truncated where values drop below tol * sigma_1 (or the
/// numerical rank), balancing transformations from the factors. The
/// resulting pair is Petrov-Galerkin with V1 E U1 = I.
Projector balanced_truncation(const GramianFactor& zc, const GramianFactor& zo,
                              const Eigen::MatrixXd& e, double tol);

/// Projects and bundles. For WXDS the caller typically overwrites
/// discarded_svals with the cross Gramian's singular value tail.
Reduction reduce_system(const LtiSystem& sys, Projector p, Method method);

/// True iff all generalized eigenvalues of (A, E) lie in the open left
/// half-plane.
bool pencil_stable(const Eigen::MatrixXd& a, const Eigen::MatrixXd& e);

}  // namespace wxmor

#endif  // WXMOR_REDUCE_HPP
