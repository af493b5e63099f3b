#include "wxmor/benchmark.hpp"

namespace wxmor {

LtiSystem fom_system() {
    const Eigen::Index n = 1006;
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    const double freqs[3] = {100.0, 200.0, 400.0};
    for (int b = 0; b < 3; ++b) {
        const Eigen::Index at = 2 * b;
        a(at, at) = -1.0;
        a(at + 1, at + 1) = -1.0;
        a(at, at + 1) = freqs[b];
        a(at + 1, at) = -freqs[b];
    }
    for (Eigen::Index k = 0; k < 1000; ++k)
        a(6 + k, 6 + k) = -static_cast<double>(k + 1);

    Eigen::MatrixXd c(1, n);
    c.leftCols(6).setConstant(10.0);
    c.rightCols(1000).setConstant(1.0);

    return LtiSystem(Eigen::MatrixXd::Identity(n, n), std::move(a),
                     c.transpose(), c);
}

}  // namespace wxmor
