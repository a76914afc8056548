#pragma once

#include <cstddef>
#include <vector>

#include "llab/core.hpp"

namespace llab::freeknot {

/// Piecewise-constant function on [0,1]: pieces [0,b_1), [b_1,b_2), ..., [b_k,1].
struct PiecewiseConst {
  std::vector<double> breakpoints;  ///< strictly increasing, inside (0,1)
  std::vector<double> values;       ///< breakpoints.size() + 1 entries
  bool canonical = true;            ///< no two adjacent pieces share a value

  double operator()(double t) const;
  std::size_t pieces() const { return values.size(); }
};

/// c * indicator of [a, b], 0 <= a < b <= 1.
struct IntervalTerm {
  double coefficient = 0.0;
  double a = 0.0;
  double b = 1.0;
};

double evaluate_terms(const std::vector<IntervalTerm>& terms, double t);

/// Step representation of sum c_k chi_{I_k}. Adjacent equal pieces are merged,
/// so the result is canonical and has at most 2n breakpoints (well inside the
/// 4n + 2 free-knot budget). Rejects degenerate or out-of-range intervals.
PiecewiseConst canonicalize(const std::vector<IntervalTerm>& terms);

struct PcFit {
  PiecewiseConst fit;
  double error = 0.0;               ///< max over pieces of (max - min) / 2
  std::vector<std::size_t> starts;  ///< first cell of each piece
};

/// Best sup-norm approximation of f by at most m pieces whose knots sit on
/// cell edges. Each piece takes the midrange of its cells. Finds the least
/// radius whose greedy cover needs <= m pieces by bisection over the ordered
/// doubles, with O(1) range extrema from a sparse table.
PcFit best_pc_sup(const StepFn& f, std::size_t m, Exec exec = Exec::Parallel);

/// Same optimum by dynamic programming over (pieces, prefix length),
/// O(m N^2). Each DP layer is parallel over its end cell.
PcFit best_pc_sup_dp(const StepFn& f, std::size_t m, Exec exec = Exec::Parallel);

/// sup over cells of |f - fit| at cell midpoints.
double sup_distance(const StepFn& f, const PiecewiseConst& fit);

/// sin(h pi t) sampled at cell midpoints, measured in L^inf.
StepFn sin_step(double h, int grid_log2);

struct WitnessResult {
  std::size_t n = 0;
  double h = 0.0;                 ///< oscillation parameter 4 (8n + 4)
  std::size_t pieces_small = 0;   ///< 4n + 3
  std::size_t pieces_large = 0;   ///< 8n + 5
  double error_small = 0.0;
  double error_large = 0.0;
  double tolerance = 0.0;         ///< pi h / 2^g, the sampling error bound
};

/// Errors of sin(h(n) pi t) against 4n+3 and 8n+5 pieces, h(n) = 4(8n+4):
/// every admissible piece then spans a full period, so both errors are 1 up
/// to sampling. Rejects grids with fewer than 4 cells per period.
WitnessResult equioscillation_witness(std::size_t n, int grid_log2, Exec exec = Exec::Parallel);

/// Oscillation parameter 4 (8n + 4).
double witness_frequency(std::size_t n);

/// Free-knot scheme A_n = {at most 4n + 3 pieces} on the element's grid,
/// A_0 = {0}, K(n) = 2n.
SchemeDescriptor scheme();

}  // namespace llab::freeknot
