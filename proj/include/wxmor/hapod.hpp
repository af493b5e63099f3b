#ifndef WXMOR_HAPOD_HPP
#define WXMOR_HAPOD_HPP

#include <vector>

#include <Eigen/Dense>

namespace wxmor {

/// Retained left singular vectors and values of a snapshot set.
struct PodResult {
    Eigen::MatrixXd modes;            ///< N x n, orthonormal columns
    Eigen::VectorXd singular_values;  ///< descending, strictly positive
    double tolerance_used = 0.0;

    Eigen::Index rank() const { return singular_values.size(); }

    /// Modes scaled column-wise by their singular values; what tree nodes
    /// exchange, and the weighting the dominant-subspace conjoining uses.
    Eigen::MatrixXd scaled_modes() const {
        return modes * singular_values.asDiagonal();
    }
};

/// Tree parameters for the hierarchical POD. epsilon bounds the mean
/// squared column projection error of the output basis on the input data;
/// omega splits the error budget between internal nodes and the root.
struct HapodConfig {
    double epsilon = 0.0;
    double omega = 0.75;
    Eigen::Index partition_width = 64;
};

/// Joins column blocks into one matrix.
Eigen::MatrixXd concat_columns(const std::vector<Eigen::MatrixXd>& blocks);

/// Tolerance-driven truncated SVD: keeps the smallest n with
/// sum_{k>n} sigma_k^2 <= epsilon^2 * K (mean-per-column convention).
/// All-zero input yields an empty result. Mode signs are fixed so the
/// entry of largest magnitude is positive.
PodResult pod(const Eigen::MatrixXd& snapshots, double epsilon);

/// Incremental HAPOD over a maximally unbalanced binary tree: partitions
/// are folded left to right, each node taking the previous scaled modes
/// next to the next partition. Internal nodes share the
/// (1 - omega^2) part of the total error budget, capped by the column
/// count folded so far; the final node receives whatever remains, so a
/// single partition reduces to a flat POD.
PodResult incremental_hapod(const std::vector<Eigen::MatrixXd>& partitions,
                            const HapodConfig& config);

/// Dominant-subspace basis of a (cross) Gramian from partitions of it and
/// of its transpose: one incremental HAPOD per branch (run concurrently),
/// then a root POD of the conjoined scaled modes with the omega^2 share
/// of the budget. Singular values at or below sigma_1 * N * eps are
/// dropped (rank-revealing).
PodResult dominant_pair(const std::vector<Eigen::MatrixXd>& w_blocks,
                        const std::vector<Eigen::MatrixXd>& wt_blocks,
                        const HapodConfig& config);

}  // namespace wxmor

#endif  // WXMOR_HAPOD_HPP
