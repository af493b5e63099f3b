#ifndef WXMOR_BENCHMARK_HPP
#define WXMOR_BENCHMARK_HPP

#include "wxmor/lti.hpp"

namespace wxmor {

/// Built-in SISO benchmark of order 1006: three lightly damped rotation
/// blocks with frequencies 100, 200 and 400 stacked over a diagonal decay
/// chain -1..-1000, C = [10 x6, 1 x1000], B = C^T, E = I. Strictly
/// dissipative, so Galerkin reductions of it stay stable.
LtiSystem fom_system();

}  // namespace wxmor

#endif  // WXMOR_BENCHMARK_HPP
