#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "llab/core.hpp"

namespace llab::nterm {

enum class DictKind { OrthonormalCoord, Haar };

/// Normalized dictionary: unit vectors of l^2, or the L^p-normalized Haar
/// system on a grid of 2^grid_log2 cells. Elements are indexed from 1.
struct Dictionary {
  DictKind kind = DictKind::OrthonormalCoord;
  std::size_t size = 0;  ///< number of enumerated elements
  double p = 2.0;        ///< Haar exponent
  int grid_log2 = 0;     ///< Haar grid

  static Dictionary coord(std::size_t size);
  static Dictionary haar(int grid_log2, double p);
};

/// Haar index k = 2^level + shift with 1 <= shift <= 2^level; k = 1 is the
/// constant function and reports level -1, shift 1.
struct HaarIndex {
  int level = -1;
  std::size_t shift = 1;
};

HaarIndex haar_index(std::size_t k);

/// h_k on a grid of 2^grid_log2 cells:
/// h_{2^j+t} = 2^{j/p} (1 on the left half of [2^-j (t-1), 2^-j t], -1 on the
/// right half), h_1 = 1. Rejects k whose level needs a finer grid.
StepFn haar(std::size_t k, int grid_log2, double p);

/// Coefficients c_1..c_N (stored at [k-1]) of f in the L^p-normalized Haar
/// system on f's own grid, N = 2^g. Pyramid of block sums, one parallel pass
/// per level.
std::vector<double> haar_coefficients(const StepFn& f, double p, Exec exec = Exec::Parallel);
/// Serial reference: each coefficient from its own dual pairing
/// c_k = 2^{j(1-1/p)} * integral(f * sign pattern of h_k).
std::vector<double> haar_coefficients_reference(const StepFn& f, double p);
/// sum_k c_k h_k; coeffs.size() must be 2^grid_log2.
StepFn haar_synthesis(const std::vector<double>& coeffs, int grid_log2, double p);

/// Best n-term error in an orthonormal system: the l^2 norm of all but the n
/// largest-modulus coefficients. x must carry the L2 tag.
double sigma_n_orthonormal(const RealSeq& x, std::size_t n);

/// Indices (1-based) ordered by non-increasing |c|, ties by smaller index.
std::vector<std::size_t> greedy_order(const std::vector<double>& coeffs);

struct GreedyResult {
  std::size_t n = 0;
  Element approximant;  ///< RealSeq for coordinates, StepFn for Haar
  double residual_norm = 0.0;
  std::vector<std::size_t> permutation_head;  ///< the n chosen indices, 1-based
};

/// G_n(x): keeps the n largest coefficients. Coordinate dictionaries take a
/// RealSeq and measure the residual in its own norm; Haar takes a StepFn on
/// the dictionary's grid and measures in L^p with the dictionary's p.
GreedyResult greedy(const Element& x, const Dictionary& dict, std::size_t n);

/// ||sum_{k in lambda} phi_k|| / ||sum_{k in lambda_star} phi_k||.
double democracy_ratio(const Dictionary& dict, const std::vector<std::size_t>& lambda,
                       const std::vector<std::size_t>& lambda_star);

struct DemocracySample {
  double max_ratio = 0.0;  ///< empirical maximum, a lower bound for the true constant
  std::size_t pairs = 0;
  std::vector<std::size_t> worst_lambda;
  std::vector<std::size_t> worst_lambda_star;
};

/// Random pairs of m-element index sets; pair i draws from its own stream
/// derived from (seed, i), so the result does not depend on the policy.
DemocracySample democracy_sample(const Dictionary& dict, std::size_t m, std::size_t pairs,
                                 std::uint64_t seed, Exec exec = Exec::Parallel);

/// x_n = phi_1 + ... + phi_{3n}, as a RealSeq (L2) or StepFn.
Element witness_element(const Dictionary& dict, std::size_t n);

/// (||x_n - G_n(x_n)||, ||x_n - G_{2n}(x_n)||) for x_n = witness_element(dict, n).
std::pair<double, double> jump_witness_nterm(const Dictionary& dict, std::size_t n);

/// n-term approximation in an orthonormal system, K(n) = 2n. Accepts RealSeq
/// (unit vector basis of l^2) or StepFn with p = 2 (Haar system of L^2).
SchemeDescriptor orthonormal_scheme();

}  // namespace llab::nterm
