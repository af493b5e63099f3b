#ifndef WXMOR_ERRIND_HPP
#define WXMOR_ERRIND_HPP

#include <utility>

#include "wxmor/lti.hpp"

namespace wxmor {

/// Quantities the impulse-response error indicator is built from. The
/// underlying system must be SISO, averaged, or a selected SISO
/// sub-system. This is an indicator, not a bound: it over- and
/// under-estimates across the tolerance range.
struct IndicatorInputs {
    double b_norm = 0.0;  ///< |E^{-1} B|_2 (spectral norm)
    double c_norm = 0.0;  ///< |C|_2
    Eigen::VectorXd discarded;  ///< sigma_{n+1..N} of the cross Gramian
    double epsilon = 0.0;       ///< total projection-error target
    Eigen::Index full_order = 0;
};

/// L2 impulse-response error indicator
/// sqrt( b_norm * c_norm * sqrt(sum of discarded^2) ).
double h2_indicator(const IndicatorInputs& inp);

/// Predicted error sqrt(epsilon_total * b_norm * c_norm), available before
/// any Gramian is formed. epsilon_total is the total squared-error target;
/// a mean-per-column tolerance converts as eps_total = eps_mean * sqrt(K)
/// with K the compressed column count.
double h2_apriori(double b_norm, double c_norm, double epsilon_total);

/// |E^{-1} B|_2 via one linear solve (E is never inverted explicitly).
double input_operator_norm(const LtiSystem& sys);

/// |C|_2.
double output_operator_norm(const LtiSystem& sys);

/// Index pair (k, l), zero-based, maximizing <|b_k|, |c_l|> over input
/// columns and output rows; ties break toward the smallest k, then l.
std::pair<Eigen::Index, Eigen::Index> select_siso_subsystem(
    const LtiSystem& sys);

}  // namespace wxmor

#endif  // WXMOR_ERRIND_HPP
