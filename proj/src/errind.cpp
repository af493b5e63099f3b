#include "wxmor/errind.hpp"

#include <cmath>

namespace wxmor {

double h2_indicator(const IndicatorInputs& inp) {
    if (inp.discarded.size() == 0) return 0.0;
    return std::sqrt(inp.b_norm * inp.c_norm * inp.discarded.norm());
}

double h2_apriori(double b_norm, double c_norm, double epsilon_total) {
    return std::sqrt(epsilon_total * b_norm * c_norm);
}

double input_operator_norm(const LtiSystem& sys) {
    const Eigen::MatrixXd eb = sys.E.partialPivLu().solve(sys.B);
    if (eb.cols() == 1) return eb.norm();
    return Eigen::JacobiSVD<Eigen::MatrixXd>(eb).singularValues()[0];
}

double output_operator_norm(const LtiSystem& sys) {
    if (sys.C.rows() == 1) return sys.C.norm();
    return Eigen::JacobiSVD<Eigen::MatrixXd>(sys.C).singularValues()[0];
}

std::pair<Eigen::Index, Eigen::Index> select_siso_subsystem(
    const LtiSystem& sys) {
    // <|b_i|, |c_j|> for all pairs in one product.
    const Eigen::MatrixXd scores =
        sys.B.cwiseAbs().transpose() * sys.C.cwiseAbs().transpose();
    Eigen::Index best_k = 0, best_l = 0;
    double best = scores(0, 0);
    for (Eigen::Index i = 0; i < scores.rows(); ++i)
        for (Eigen::Index j = 0; j < scores.cols(); ++j)
            if (scores(i, j) > best) {
                best = scores(i, j);
                best_k = i;
                best_l = j;
            }
    return {best_k, best_l};
}

}  // namespace wxmor
