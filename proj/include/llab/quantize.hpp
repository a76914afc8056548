#pragma once

#include <cstddef>
#include <vector>

#include "llab/core.hpp"

namespace llab::quantize {

// Cones A_n of c_0 sequences taking at most n distinct values. A finitely
// supported approximant has an infinite zero tail, so 0 is always one of its
// values and only n - 1 levels are free.

struct LevelSet {
  std::vector<double> levels;  ///< sorted, distinct
  bool contains_zero = true;
};

struct QuantResult {
  RealSeq approximant;
  LevelSet levels;
  double error = 0.0;  ///< sup-norm distance to the input, recomputed from the approximant
  ErrorKind kind = ErrorKind::Exact;
  double bound = 0.0;  ///< 2M/n for the uniform-level construction; error for the exact oracle
};

/// Uniform levels c_k = M - 2kM/n (k = 1..n-1), M = ||x||_inf. Coordinates
/// up to the last one with |x_k| >= 2M/n snap to the nearest level, later ones
/// to 0. Guarantees error <= 2M/n. kind = UPPER_BOUND.
QuantResult quantize_paper(const RealSeq& x, std::size_t n);

/// Exact E(x, A_n): minimal covering radius of the values of x by n centers,
/// one of them fixed at 0. Binary search over the finite candidate radii
/// (distances to 0 and half-spreads of value pairs) with a greedy
/// left-to-right interval cover as the feasibility test.
QuantResult quantize_exact(const RealSeq& x, std::size_t n);

struct CollapseProfile {
  ErrorCurve curve;       ///< EXACT, n = 1..n_max
  double envelope = 0.0;  ///< max_n n E(x, A_n)
  double bound = 0.0;     ///< 2 ||x||_inf
  bool holds = true;      ///< envelope <= bound
};

CollapseProfile collapse_profile(const RealSeq& x, std::size_t n_max, Exec exec = Exec::Parallel);

/// The quantization scheme: K(n) = n^2, exact errors, E(x, A_0) = ||x||.
SchemeDescriptor scheme();

/// Witness candidate for level n: n^2 + 1 equally spaced positive values, so
/// x is outside the closure of A_{n^2}.
RealSeq witness_element(std::size_t n);

}  // namespace llab::quantize
