#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "llab/parallel.hpp"

namespace llab {

/// A contract violated by the caller (bad shape, out-of-range index,
/// non-monotone input...). The CLI reports these as "precondition" errors.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Failure raised while evaluating a scheme's error functional.
class SchemeError : public std::runtime_error {
 public:
  SchemeError(const std::string& scheme, std::size_t n, const std::string& what);
  std::size_t n() const { return n_; }

 private:
  std::size_t n_;
};

inline constexpr double kInfExponent = std::numeric_limits<double>::infinity();

enum class NormTag { Sup, L2 };

/// Finitely supported real sequence x = (x_1, ..., x_N, 0, 0, ...).
/// values[k-1] holds x_k.
struct RealSeq {
  std::vector<double> values;
  NormTag tag = NormTag::Sup;

  std::size_t size() const { return values.size(); }
  /// 1-based coordinate access; indices past the stored prefix are 0.
  double at(std::size_t k) const {
    return (k >= 1 && k <= values.size()) ? values[k - 1] : 0.0;
  }
};

double norm(const RealSeq& x);

/// Norm of the tail (x_{n+1}, x_{n+2}, ...), i.e. the distance from x to the
/// coordinate subspace spanned by e_1..e_n.
double tail_norm(const RealSeq& x, std::size_t n);

/// Piecewise-constant function on the uniform grid of 2^grid_log2 cells of
/// [0,1], carrying the exponent of the L^p space it is measured in.
class StepFn {
 public:
  StepFn(int grid_log2, std::vector<double> cells, double p);
  static StepFn zero(int grid_log2, double p);

  int grid_log2() const { return grid_log2_; }
  double p() const { return p_; }
  std::size_t cell_count() const { return cells_.size(); }
  double cell_width() const;
  const std::vector<double>& cells() const { return cells_; }
  std::vector<double>& cells() { return cells_; }
  /// Value at t in [0,1); t = 1 maps to the last cell.
  double operator()(double t) const;

  StepFn with_exponent(double p) const;

 private:
  int grid_log2_;
  std::vector<double> cells_;
  double p_;
};

/// Exact L^p norm: (sum |v|^p 2^-g)^(1/p), or max |v| for p = inf.
double lp_norm(const StepFn& f);
/// Exact L^2 inner product over cells.
double inner_product(const StepFn& f, const StepFn& g);
StepFn operator-(const StepFn& f, const StepFn& g);
/// Cell-midpoint samples of fn on a grid of 2^grid_log2 cells.
StepFn sample_midpoints(const std::function<double(double)>& fn, int grid_log2, double p);

/// Dense row-major real matrix.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}
  static Matrix identity(std::size_t n);
  static Matrix diagonal(const std::vector<double>& d);

  double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);
double max_abs(const Matrix& a);

enum class ErrorKind { Exact, UpperBound, Sampled };

const char* to_string(ErrorKind k);
ErrorKind error_kind_from_string(const std::string& s);

struct ErrorEntry {
  std::size_t n = 0;
  double value = 0.0;
  ErrorKind kind = ErrorKind::Exact;

  bool operator==(const ErrorEntry&) const = default;
};

/// Table n -> E(x, A_n) with per-entry provenance.
struct ErrorCurve {
  std::vector<ErrorEntry> entries;

  /// True when every value is >= 0 and the EXACT entries are non-increasing
  /// in n (A_n is nested, so exact best errors cannot grow).
  bool exact_monotone() const;
  bool operator==(const ErrorCurve&) const = default;
};

using Element = std::variant<RealSeq, StepFn, Matrix>;

struct ErrorValue {
  double value = 0.0;
  ErrorKind kind = ErrorKind::Exact;
};

/// A chain A_0 ⊆ A_1 ⊆ ... of cones in a normed space, with a jump map K
/// such that A_n + A_n ⊆ A_{K(n)} and the functional n -> E(x, A_n).
struct SchemeDescriptor {
  std::string name;
  std::function<std::size_t(std::size_t)> jump_map;
  std::function<ErrorValue(const Element&, std::size_t)> error_fn;

  /// K(n), checked against K(n) >= n.
  std::size_t jump(std::size_t n) const;
  /// E(x, A_n); failures are rethrown as SchemeError carrying n.
  ErrorValue error(const Element& x, std::size_t n) const;
};

/// E(x, A_n) for n = 0..n_max, evaluated independently per n.
ErrorCurve error_curve(const SchemeDescriptor& scheme, const Element& x, std::size_t n_max,
                       Exec exec = Exec::Parallel);

}  // namespace llab
