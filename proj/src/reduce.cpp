#include "wxmor/reduce.hpp"

#include <limits>
#include <stdexcept>

namespace wxmor {

const char* method_name(Method m) {
    switch (m) {
        case Method::WXDS: return "WXDS";
        case Method::DSPMR: return "DSPMR";
        case Method::DSPMR_R: return "DSPMR_R";
        case Method::LREBT: return "LREBT";
    }
    return "?";
}

LtiSystem project(const LtiSystem& sys, const Projector& p) {
    if (p.U1.rows() != sys.order() || p.V1.cols() != sys.order())
        throw std::invalid_argument("projector does not match system order");
    return LtiSystem(p.V1 * sys.E * p.U1, p.V1 * sys.A * p.U1, p.V1 * sys.B,
                     sys.C * p.U1);
}

namespace {

void fix_signs(Eigen::MatrixXd& modes) {
    for (Eigen::Index j = 0; j < modes.cols(); ++j) {
        Eigen::Index at = 0;
        modes.col(j).cwiseAbs().maxCoeff(&at);
        if (modes(at, j) < 0.0) modes.col(j) = -modes.col(j);
    }
}

// Orthonormal Galerkin basis from a rank-revealing SVD of the conjoined
// data; values at or below sigma_1 * max(dim) * eps are dropped.
Projector galerkin_from_svd(const Eigen::MatrixXd& conjoined) {
    Projector p;
    p.galerkin = true;
    if (conjoined.cols() == 0 || conjoined.rows() == 0 ||
        conjoined.norm() == 0.0) {
        p.U1.resize(conjoined.rows(), 0);
        p.V1.resize(0, conjoined.rows());
        return p;
    }
    Eigen::BDCSVD<Eigen::MatrixXd> svd(conjoined, Eigen::ComputeThinU);
    const Eigen::VectorXd& sv = svd.singularValues();
    const double cut =
        sv[0] *
        static_cast<double>(std::max(conjoined.rows(), conjoined.cols())) *
        std::numeric_limits<double>::epsilon();
    Eigen::Index n = sv.size();
    while (n > 0 && sv[n - 1] <= cut) --n;

    p.U1 = svd.matrixU().leftCols(n);
    fix_signs(p.U1);
    p.V1 = p.U1.transpose();
    p.singular_values = sv.head(n);
    p.discarded = sv.tail(sv.size() - n);
    return p;
}

}  // namespace

Projector wxds(const Eigen::MatrixXd& ux, const Eigen::VectorXd& dx,
               const Eigen::MatrixXd& vx) {
    if (ux.cols() != dx.size() || vx.cols() != dx.size() ||
        ux.rows() != vx.rows())
        throw std::invalid_argument("inconsistent truncated SVD triple");
    if (dx.size() == 0) return galerkin_from_svd(Eigen::MatrixXd(ux.rows(), 0));
    Eigen::MatrixXd conjoined(ux.rows(), 2 * dx.size());
    conjoined << ux * dx.asDiagonal(), vx * dx.asDiagonal();
    return galerkin_from_svd(conjoined);
}

Projector dspmr(const GramianFactor& zc, const GramianFactor& zo, bool refined,
                double tol) {
    const Eigen::Index n = zc.data.rows();
    if (zo.data.rows() != n)
        throw std::invalid_argument("factor row counts differ");

    if (!refined) {
        PodResult pc = pod(zc.data, tol);
        PodResult po = pod(zo.data, tol);
        Eigen::MatrixXd conjoined(n, pc.rank() + po.rank());
        conjoined << pc.modes, po.modes;
        return galerkin_from_svd(conjoined);
    }

    const double nc = zc.data.norm();
    const double no = zo.data.norm();
    if (nc == 0.0 || no == 0.0)
        return galerkin_from_svd(Eigen::MatrixXd(n, 0));
    const double wc = no / nc;
    Eigen::MatrixXd conjoined(n, zc.data.cols() + zo.data.cols());
    conjoined << wc * zc.data, zo.data;
    return galerkin_from_svd(conjoined);
}

Projector balanced_truncation(const GramianFactor& zc, const GramianFactor& zo,
                              const Eigen::MatrixXd& e, double tol) {
    Eigen::MatrixXd product = zo.data.transpose() * e * zc.data;
    Projector p;
    p.galerkin = false;
    if (product.norm() == 0.0) {
        p.U1.resize(zc.data.rows(), 0);
        p.V1.resize(0, zc.data.rows());
        return p;
    }
    Eigen::BDCSVD<Eigen::MatrixXd> svd(product,
                                       Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd& sv = svd.singularValues();
    const double numerical =
        sv[0] *
        static_cast<double>(std::max(product.rows(), product.cols())) *
        std::numeric_limits<double>::epsilon();
    const double cut = std::max(numerical, tol * sv[0]);
    Eigen::Index r = sv.size();
    while (r > 0 && sv[r - 1] <= cut) --r;

    const Eigen::VectorXd scale = sv.head(r).cwiseSqrt().cwiseInverse();
    p.U1 = zc.data * svd.matrixV().leftCols(r) * scale.asDiagonal();
    p.V1 = scale.asDiagonal() * svd.matrixU().leftCols(r).transpose() *
           zo.data.transpose();
    p.singular_values = sv.head(r);
    p.discarded = sv.tail(sv.size() - r);
    return p;
}

Reduction reduce_system(const LtiSystem& sys, Projector p, Method method) {
    Reduction red;
    red.rom = project(sys, p);
    red.method = method;
    red.discarded_svals = p.discarded;
    red.projector = std::move(p);
    return red;
}

bool pencil_stable(const Eigen::MatrixXd& a, const Eigen::MatrixXd& e) {
    Eigen::GeneralizedEigenSolver<Eigen::MatrixXd> ges(a, e, false);
    const auto alphas = ges.alphas();
    const auto betas = ges.betas();
    for (Eigen::Index i = 0; i < alphas.size(); ++i) {
        if (betas[i] == 0.0) return false;
        if ((alphas[i] / betas[i]).real() >= 0.0) return false;
    }
    return true;
}

}  // namespace wxmor
