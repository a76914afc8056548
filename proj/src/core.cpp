#include "llab/core.hpp"

#include <algorithm>
#include <cmath>

namespace llab {

SchemeError::SchemeError(const std::string& scheme, std::size_t n, const std::string& what)
    : std::runtime_error("scheme '" + scheme + "' failed at n=" + std::to_string(n) + ": " + what),
      n_(n) {}

namespace {

double sup_range(const std::vector<double>& v, std::size_t first) {
  double m = 0.0;
  for (std::size_t i = first; i < v.size(); ++i) m = std::max(m, std::abs(v[i]));
  return m;
}

// Summed from the far end so small tail terms are not swamped.
double l2_range(const std::vector<double>& v, std::size_t first) {
  double s = 0.0;
  for (std::size_t i = v.size(); i > first; --i) s += v[i - 1] * v[i - 1];
  return std::sqrt(s);
}

}  // namespace

double norm(const RealSeq& x) { return tail_norm(x, 0); }

double tail_norm(const RealSeq& x, std::size_t n) {
  if (n >= x.values.size()) return 0.0;
  return x.tag == NormTag::Sup ? sup_range(x.values, n) : l2_range(x.values, n);
}

StepFn::StepFn(int grid_log2, std::vector<double> cells, double p)
    : grid_log2_(grid_log2), cells_(std::move(cells)), p_(p) {
  if (grid_log2 < 0 || grid_log2 > 30)
    throw PreconditionError("StepFn: grid_log2 must lie in [0, 30]");
  if (cells_.size() != (std::size_t{1} << grid_log2))
    throw PreconditionError("StepFn: expected 2^" + std::to_string(grid_log2) + " cells, got " +
                            std::to_string(cells_.size()));
  if (!(p >= 1.0)) throw PreconditionError("StepFn: exponent p must be >= 1 or infinity");
}

StepFn StepFn::zero(int grid_log2, double p) {
  if (grid_log2 < 0 || grid_log2 > 30)
    throw PreconditionError("StepFn: grid_log2 must lie in [0, 30]");
  return StepFn(grid_log2, std::vector<double>(std::size_t{1} << grid_log2, 0.0), p);
}

double StepFn::cell_width() const { return std::ldexp(1.0, -grid_log2_); }

double StepFn::operator()(double t) const {
  auto i = static_cast<std::size_t>(std::floor(std::ldexp(t, grid_log2_)));
  return cells_[std::min(i, cells_.size() - 1)];
}

StepFn StepFn::with_exponent(double p) const { return StepFn(grid_log2_, cells_, p); }

double lp_norm(const StepFn& f) {
  const auto& v = f.cells();
  const double m = sup_range(v, 0);
  if (std::isinf(f.p()) || m == 0.0) return m;
  // m * (2^-g sum (|v|/m)^p)^(1/p), scaled against overflow; the 2^-g
  // factor is exact so unit-norm inputs come out as exactly 1.
  double s = 0.0;
  for (double c : v) s += std::pow(std::abs(c) / m, f.p());
  return m * std::pow(std::ldexp(s, -f.grid_log2()), 1.0 / f.p());
}

double inner_product(const StepFn& f, const StepFn& g) {
  if (f.grid_log2() != g.grid_log2())
    throw PreconditionError("inner_product: grids differ");
  double s = 0.0;
  for (std::size_t i = 0; i < f.cell_count(); ++i) s += f.cells()[i] * g.cells()[i];
  return s * f.cell_width();
}

StepFn operator-(const StepFn& f, const StepFn& g) {
  if (f.grid_log2() != g.grid_log2()) throw PreconditionError("StepFn difference: grids differ");
  std::vector<double> d(f.cell_count());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = f.cells()[i] - g.cells()[i];
  return StepFn(f.grid_log2(), std::move(d), f.p());
}

StepFn sample_midpoints(const std::function<double(double)>& fn, int grid_log2, double p) {
  StepFn f = StepFn::zero(grid_log2, p);
  const double w = f.cell_width();
  for (std::size_t i = 0; i < f.cell_count(); ++i)
    f.cells()[i] = fn((static_cast<double>(i) + 0.5) * w);
  return f;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(const std::vector<double>& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows) throw PreconditionError("matrix product: inner dimensions differ");
  Matrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const double aik = a(i, k);
      for (std::size_t j = 0; j < b.cols; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw PreconditionError("matrix difference: shapes differ");
  Matrix c(a.rows, a.cols);
  for (std::size_t i = 0; i < a.data.size(); ++i) c.data[i] = a.data[i] - b.data[i];
  return c;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols, a.rows);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) t(j, i) = a(i, j);
  return t;
}

double max_abs(const Matrix& a) { return sup_range(a.data, 0); }

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::Exact: return "EXACT";
    case ErrorKind::UpperBound: return "UPPER_BOUND";
    case ErrorKind::Sampled: return "SAMPLED";
  }
  return "?";
}

ErrorKind error_kind_from_string(const std::string& s) {
  if (s == "EXACT") return ErrorKind::Exact;
  if (s == "UPPER_BOUND") return ErrorKind::UpperBound;
  if (s == "SAMPLED") return ErrorKind::Sampled;
  throw PreconditionError("unknown error kind '" + s + "'");
}

bool ErrorCurve::exact_monotone() const {
  const ErrorEntry* prev = nullptr;
  for (const auto& e : entries) {
    if (!(e.value >= 0.0)) return false;
    if (e.kind != ErrorKind::Exact) continue;
    if (prev && prev->n < e.n && e.value > prev->value) return false;
    prev = &e;
  }
  return true;
}

std::size_t SchemeDescriptor::jump(std::size_t n) const {
  const std::size_t k = jump_map(n);
  if (k < n)
    throw SchemeError(name, n, "jump map returned K(n)=" + std::to_string(k) + " < n");
  return k;
}

ErrorValue SchemeDescriptor::error(const Element& x, std::size_t n) const {
  try {
    return error_fn(x, n);
  } catch (const SchemeError&) {
    throw;
  } catch (const std::exception& e) {
    throw SchemeError(name, n, e.what());
  }
}

ErrorCurve error_curve(const SchemeDescriptor& scheme, const Element& x, std::size_t n_max,
                       Exec exec) {
  if (n_max < 1) throw PreconditionError("error_curve: n_max must be >= 1");
  ErrorCurve curve;
  curve.entries.resize(n_max + 1);
  for_each_index(
      n_max + 1,
      [&](std::size_t n) {
        const ErrorValue v = scheme.error(x, n);
        curve.entries[n] = {n, v.value, v.kind};
      },
      exec);
  return curve;
}

}  // namespace llab
