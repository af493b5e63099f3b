#ifndef WXMOR_MATRIX_MARKET_HPP
#define WXMOR_MATRIX_MARKET_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "wxmor/lti.hpp"

namespace wxmor {

/// File-system or parse failure; carries the offending path (and line).
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Reads a real Matrix Market file (array or coordinate, general,
/// symmetric or skew-symmetric) into a dense matrix. Explicit zeros in
/// coordinate files are kept; the stated dimensions are authoritative.
Eigen::MatrixXd read_matrix_market(const std::string& path);

/// Writes a dense matrix in array format with shortest round-trip
/// decimals, so write/read is bit-exact.
void write_matrix_market(const std::string& path, const Eigen::MatrixXd& m);

/// Assembles a system from Matrix Market files; an absent E path means
/// E = I. Dimension mismatches and a singular E are rejected.
LtiSystem load_system(const std::optional<std::string>& e_path,
                      const std::string& a_path, const std::string& b_path,
                      const std::string& c_path);

/// Writes E/A/B/C of a system as <prefix>{E,A,B,C}.mtx.
void save_system(const LtiSystem& sys, const std::string& prefix);

}  // namespace wxmor

#endif  // WXMOR_MATRIX_MARKET_HPP
