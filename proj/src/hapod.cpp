#include "wxmor/hapod.hpp"

#include <future>
#include <limits>
#include <stdexcept>

namespace wxmor {

Eigen::MatrixXd concat_columns(const std::vector<Eigen::MatrixXd>& blocks) {
    if (blocks.empty()) return {};
    const Eigen::Index rows = blocks.front().rows();
    Eigen::Index cols = 0;
    for (const auto& b : blocks) {
        if (b.rows() != rows)
            throw std::invalid_argument("partitions must share the row count");
        cols += b.cols();
    }
    Eigen::MatrixXd joined(rows, cols);
    Eigen::Index at = 0;
    for (const auto& b : blocks) {
        joined.middleCols(at, b.cols()) = b;
        at += b.cols();
    }
    return joined;
}

namespace {

void fix_mode_signs(Eigen::MatrixXd& modes) {
    for (Eigen::Index j = 0; j < modes.cols(); ++j) {
        Eigen::Index at = 0;
        modes.col(j).cwiseAbs().maxCoeff(&at);
        if (modes(at, j) < 0.0) modes.col(j) = -modes.col(j);
    }
}

struct TruncatedSvd {
    PodResult result;
    double discarded = 0.0;  // energy dropped, sum of truncated sigma^2
};

// POD keeping the smallest rank whose discarded energy stays within
// `budget` (a total, not per-column, allowance).
TruncatedSvd pod_with_budget(const Eigen::MatrixXd& data, double budget) {
    TruncatedSvd out;
    if (data.cols() == 0 || data.rows() == 0) return out;

    Eigen::BDCSVD<Eigen::MatrixXd> svd(data, Eigen::ComputeThinU);
    const Eigen::VectorXd& sv = svd.singularValues();

    Eigen::Index n = sv.size();
    double tail = 0.0;
    while (n > 0) {
        const double s2 = sv[n - 1] * sv[n - 1];
        if (tail + s2 > budget) break;
        tail += s2;
        --n;
    }
    out.discarded = tail;
    out.result.modes = svd.matrixU().leftCols(n);
    out.result.singular_values = sv.head(n);
    fix_mode_signs(out.result.modes);
    return out;
}

Eigen::Index total_columns(const std::vector<Eigen::MatrixXd>& partitions) {
    Eigen::Index cols = 0;
    for (const auto& p : partitions) cols += p.cols();
    return cols;
}

// Folds partitions left to right. Every node's discarded energy is capped
// so that the branch total stays within `share` of the budget per column
// folded so far; `spent` tracks energy already discarded.
PodResult fold_branch(const std::vector<Eigen::MatrixXd>& partitions,
                      double per_column_share, double& spent) {
    PodResult carry;
    Eigen::Index folded = 0;
    for (const auto& p : partitions) {
        folded += p.cols();
        Eigen::MatrixXd input =
            carry.rank() > 0 ? concat_columns({carry.scaled_modes(), p})
                             : p;
        const double allowance = std::max(
            0.0, per_column_share * static_cast<double>(folded) - spent);
        TruncatedSvd node = pod_with_budget(input, allowance);
        spent += node.discarded;
        carry = std::move(node.result);
    }
    return carry;
}

}  // namespace

PodResult pod(const Eigen::MatrixXd& snapshots, double epsilon) {
    if (epsilon < 0.0) throw std::invalid_argument("epsilon must be >= 0");
    const double budget =
        epsilon * epsilon * static_cast<double>(snapshots.cols());
    PodResult res = pod_with_budget(snapshots, budget).result;
    res.tolerance_used = epsilon;
    return res;
}

PodResult incremental_hapod(const std::vector<Eigen::MatrixXd>& partitions,
                            const HapodConfig& config) {
    if (partitions.empty())
        throw std::invalid_argument("at least one partition required");
    if (!(config.omega > 0.0 && config.omega < 1.0))
        throw std::invalid_argument("omega must lie in (0, 1)");

    const double total = static_cast<double>(total_columns(partitions));
    const double eps2 = config.epsilon * config.epsilon;
    const double internal_share = eps2 * (1.0 - config.omega * config.omega);

    double spent = 0.0;
    std::vector<Eigen::MatrixXd> head(partitions.begin(),
                                      std::prev(partitions.end()));
    PodResult carry;
    if (!head.empty()) carry = fold_branch(head, internal_share, spent);

    // Final node is the tree root: it may use everything still unspent.
    Eigen::MatrixXd input =
        carry.rank() > 0
            ? concat_columns({carry.scaled_modes(), partitions.back()})
            : partitions.back();
    const double root_budget = std::max(0.0, eps2 * total - spent);
    PodResult res = pod_with_budget(input, root_budget).result;
    res.tolerance_used = config.epsilon;
    return res;
}

PodResult dominant_pair(const std::vector<Eigen::MatrixXd>& w_blocks,
                        const std::vector<Eigen::MatrixXd>& wt_blocks,
                        const HapodConfig& config) {
    if (w_blocks.empty() || wt_blocks.empty())
        throw std::invalid_argument("both block sequences must be non-empty");
    if (!(config.omega > 0.0 && config.omega < 1.0))
        throw std::invalid_argument("omega must lie in (0, 1)");

    const double eps2 = config.epsilon * config.epsilon;
    const double internal_share = eps2 * (1.0 - config.omega * config.omega);

    double spent_left = 0.0;
    double spent_right = 0.0;
    auto right = std::async(std::launch::async, [&] {
        return fold_branch(wt_blocks, internal_share, spent_right);
    });
    PodResult left = fold_branch(w_blocks, internal_share, spent_left);
    PodResult right_res = right.get();

    const double total = static_cast<double>(total_columns(w_blocks) +
                                             total_columns(wt_blocks));
    const double root_budget =
        eps2 * config.omega * config.omega * total;

    std::vector<Eigen::MatrixXd> conjoined;
    if (left.rank() > 0) conjoined.push_back(left.scaled_modes());
    if (right_res.rank() > 0) conjoined.push_back(right_res.scaled_modes());

    PodResult res;
    if (!conjoined.empty())
        res = pod_with_budget(concat_columns(conjoined), root_budget).result;
    res.tolerance_used = config.epsilon;

    // Rank-revealing cut below sigma_1 * N * eps.
    if (res.rank() > 0) {
        const double rows = static_cast<double>(res.modes.rows());
        const double cut = res.singular_values[0] * rows *
                           std::numeric_limits<double>::epsilon();
        Eigen::Index n = res.rank();
        while (n > 0 && res.singular_values[n - 1] <= cut) --n;
        res.modes.conservativeResize(Eigen::NoChange, n);
        res.singular_values.conservativeResize(n);
    }
    return res;
}

}  // namespace wxmor
