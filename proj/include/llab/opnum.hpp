#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "llab/core.hpp"

namespace llab::opnum {

using MatrixOp = Matrix;

struct Svd {
  Matrix u;               ///< rows x r, orthonormal columns where s > 0
  std::vector<double> s;  ///< r = min(rows, cols) values, non-increasing
  Matrix v;               ///< cols x r
};

/// One-sided (Hestenes) Jacobi SVD.
Svd svd(const Matrix& a);
std::vector<double> singular_values(const Matrix& a);

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, descending.
std::vector<double> symmetric_eigenvalues(const Matrix& s);

/// Euclidean operator norm sqrt(lambda_max(A^T A)), computed from the Gram
/// matrix so it stays independent of svd().
double operator_norm(const Matrix& a);

/// U_k S_k V_k^T, the best approximation of rank <= k.
Matrix truncated(const Svd& f, std::size_t k);

/// a_n(T) = inf{||T - R|| : rank R < n} = n-th singular value, n = 1..n_max.
/// Requires n_max <= min(rows, cols) + 1.
ErrorCurve approx_numbers(const Matrix& t, std::size_t n_max);

std::size_t numerical_rank(const Matrix& a);

struct ProjectionJump {
  std::size_t n = 0;
  std::size_t half_index = 0;  ///< max(1, floor(n/2))
  double a_half = 0.0;         ///< a_{half_index}(P)
  double norm = 0.0;           ///< ||P||
  double a_n = 0.0;            ///< a_n(P)
  bool holds = false;          ///< a_half <= ||P||^2 a_n
};

/// Checks a_{floor(n/2)}(P) <= ||P||^2 a_n(P) for a rank-n projection P.
/// Rejects P with max|P^2 - P| > idempotence_tol or rank(P) != n.
ProjectionJump projection_jump(const Matrix& p, std::size_t n, double idempotence_tol = 1e-10);

Matrix inverse(const Matrix& a);

/// B (C^T B)^{-1} C^T with Gaussian B and C = B + G/2: an oblique projection
/// of the given rank.
Matrix random_oblique_projection(std::size_t dim, std::size_t rank, std::mt19937_64& rng);

Matrix random_gaussian(std::size_t rows, std::size_t cols, std::mt19937_64& rng);

/// Rank-r projection on R^{2r} with norm <= sqrt(2): a direct sum of sheared
/// 2x2 projections [[1, t], [0, 0]], t uniform in [0, 1], conjugated by a
/// random orthogonal matrix. Its nonzero singular values lie in [1, sqrt 2].
Matrix witness_projection(std::size_t rank, std::mt19937_64& rng);

/// Finite-rank scheme A_n = {rank <= n}, so E(T, A_n) = a_{n+1}(T); K(n) = 2n.
SchemeDescriptor scheme();

}  // namespace llab::opnum
