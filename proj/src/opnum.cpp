#include "llab/opnum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace llab::opnum {

namespace {

Svd svd_tall(const Matrix& a) {
  const std::size_t m = a.rows, n = a.cols;
  Matrix u = a;
  Matrix v = Matrix::identity(n);
  const double eps = 1e-15;
  for (int sweep = 0; sweep < 100; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double alpha = 0.0, beta = 0.0, gamma = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
          alpha += u(i, p) * u(i, p);
          beta += u(i, q) * u(i, q);
          gamma += u(i, p) * u(i, q);
        }
        if (gamma == 0.0 || std::abs(gamma) <= eps * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t i = 0; i < m; ++i) {
          const double up = u(i, p), uq = u(i, q);
          u(i, p) = c * up - s * uq;
          u(i, q) = s * up + c * uq;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const double vp = v(i, p), vq = v(i, q);
          v(i, p) = c * vp - s * vq;
          v(i, q) = s * vp + c * vq;
        }
      }
    }
    if (!rotated) break;
  }

  std::vector<double> s(n);
  for (std::size_t j = 0; j < n; ++j) {
    double acc = 0.0;
    for (std::size_t i = 0; i < m; ++i) acc += u(i, j) * u(i, j);
    s[j] = std::sqrt(acc);
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return s[x] > s[y]; });

  Svd out{Matrix(m, n), std::vector<double>(n), Matrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t j = order[k];
    out.s[k] = s[j];
    for (std::size_t i = 0; i < m; ++i) out.u(i, k) = s[j] > 0.0 ? u(i, j) / s[j] : 0.0;
    for (std::size_t i = 0; i < n; ++i) out.v(i, k) = v(i, j);
  }
  return out;
}

}  // namespace

Svd svd(const Matrix& a) {
  for (double x : a.data)
    if (!std::isfinite(x)) throw PreconditionError("svd: non-finite entry");
  if (a.rows >= a.cols) return svd_tall(a);
  Svd t = svd_tall(transpose(a));
  return Svd{std::move(t.v), std::move(t.s), std::move(t.u)};
}

std::vector<double> singular_values(const Matrix& a) { return svd(a).s; }

std::vector<double> symmetric_eigenvalues(const Matrix& s_in) {
  if (s_in.rows != s_in.cols) throw PreconditionError("symmetric_eigenvalues: matrix not square");
  Matrix s = s_in;
  const std::size_t n = s.rows;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0, diag = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) (i == j ? diag : off) += s(i, j) * s(i, j);
    if (off <= 1e-32 * diag || off == 0.0) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (s(p, q) == 0.0) continue;
        const double theta = (s(q, q) - s(p, p)) / (2.0 * s(p, q));
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = c * t;
        for (std::size_t k = 0; k < n; ++k) {
          const double kp = s(k, p), kq = s(k, q);
          s(k, p) = c * kp - sn * kq;
          s(k, q) = sn * kp + c * kq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double pk = s(p, k), qk = s(q, k);
          s(p, k) = c * pk - sn * qk;
          s(q, k) = sn * pk + c * qk;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = s(i, i);
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

double operator_norm(const Matrix& a) {
  if (a.rows == 0 || a.cols == 0) return 0.0;
  const Matrix gram = a.rows >= a.cols ? transpose(a) * a : a * transpose(a);
  return std::sqrt(std::max(0.0, symmetric_eigenvalues(gram).front()));
}

Matrix truncated(const Svd& f, std::size_t k) {
  const std::size_t rows = f.u.rows, cols = f.v.rows;
  Matrix out(rows, cols);
  for (std::size_t r = 0; r < std::min(k, f.s.size()); ++r)
    for (std::size_t i = 0; i < rows; ++i) {
      const double ui = f.u(i, r) * f.s[r];
      for (std::size_t j = 0; j < cols; ++j) out(i, j) += ui * f.v(j, r);
    }
  return out;
}

ErrorCurve approx_numbers(const Matrix& t, std::size_t n_max) {
  const std::size_t r = std::min(t.rows, t.cols);
  if (n_max > r + 1)
    throw PreconditionError("approx_numbers: n_max must be <= min(rows, cols) + 1 = " +
                            std::to_string(r + 1));
  const auto s = singular_values(t);
  ErrorCurve c;
  for (std::size_t n = 1; n <= n_max; ++n)
    c.entries.push_back({n, n <= r ? s[n - 1] : 0.0, ErrorKind::Exact});
  return c;
}

std::size_t numerical_rank(const Matrix& a) {
  const auto s = singular_values(a);
  if (s.empty()) return 0;
  const double tol = 1e-9 * std::max(1.0, s.front());
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [&](double x) { return x > tol; }));
}

ProjectionJump projection_jump(const Matrix& p, std::size_t n, double idempotence_tol) {
  if (p.rows != p.cols) throw PreconditionError("projection_jump: matrix not square");
  if (n < 1) throw PreconditionError("projection_jump: n must be >= 1");
  const double defect = max_abs(p * p - p);
  if (!(defect <= idempotence_tol))
    throw PreconditionError("projection_jump: not idempotent (max|P^2 - P| = " +
                            std::to_string(defect) + ")");
  const std::size_t rank = numerical_rank(p);
  if (rank != n)
    throw PreconditionError("projection_jump: rank(P) = " + std::to_string(rank) + " but n = " +
                            std::to_string(n));
  const auto s = singular_values(p);
  ProjectionJump j;
  j.n = n;
  // a_0 would be an infimum over an empty family; index 1 is used instead.
  j.half_index = std::max<std::size_t>(1, n / 2);
  j.a_half = s[j.half_index - 1];
  j.norm = operator_norm(p);
  j.a_n = s[n - 1];
  j.holds = j.a_half <= j.norm * j.norm * j.a_n;
  return j;
}

Matrix inverse(const Matrix& a) {
  if (a.rows != a.cols) throw PreconditionError("inverse: matrix not square");
  const std::size_t n = a.rows;
  Matrix w = a, inv = Matrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(w(r, c)) > std::abs(w(piv, c))) piv = r;
    if (w(piv, c) == 0.0) throw PreconditionError("inverse: singular matrix");
    if (piv != c)
      for (std::size_t k = 0; k < n; ++k) {
        std::swap(w(c, k), w(piv, k));
        std::swap(inv(c, k), inv(piv, k));
      }
    const double d = w(c, c);
    for (std::size_t k = 0; k < n; ++k) {
      w(c, k) /= d;
      inv(c, k) /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || w(r, c) == 0.0) continue;
      const double f = w(r, c);
      for (std::size_t k = 0; k < n; ++k) {
        w(r, k) -= f * w(c, k);
        inv(r, k) -= f * inv(c, k);
      }
    }
  }
  return inv;
}

Matrix random_gaussian(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix m(rows, cols);
  for (auto& x : m.data) x = g(rng);
  return m;
}

Matrix random_oblique_projection(std::size_t dim, std::size_t rank, std::mt19937_64& rng) {
  if (rank < 1 || rank > dim) throw PreconditionError("random_oblique_projection: need 1 <= rank <= dim");
  const Matrix b = random_gaussian(dim, rank, rng);
  Matrix c = random_gaussian(dim, rank, rng);
  for (std::size_t i = 0; i < c.data.size(); ++i) c.data[i] = b.data[i] + 0.5 * c.data[i];
  const Matrix ct = transpose(c);
  return b * inverse(ct * b) * ct;
}

namespace {

// Orthonormalized Gaussian matrix (modified Gram-Schmidt).
Matrix random_orthogonal(std::size_t n, std::mt19937_64& rng) {
  Matrix q = random_gaussian(n, n, rng);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      double d = 0.0;
      for (std::size_t i = 0; i < n; ++i) d += q(i, j) * q(i, k);
      for (std::size_t i = 0; i < n; ++i) q(i, j) -= d * q(i, k);
    }
    double nrm = 0.0;
    for (std::size_t i = 0; i < n; ++i) nrm += q(i, j) * q(i, j);
    nrm = std::sqrt(nrm);
    for (std::size_t i = 0; i < n; ++i) q(i, j) /= nrm;
  }
  return q;
}

}  // namespace

Matrix witness_projection(std::size_t rank, std::mt19937_64& rng) {
  if (rank < 1) throw PreconditionError("witness_projection: rank must be >= 1");
  std::uniform_real_distribution<double> shear(0.0, 1.0);
  const std::size_t dim = 2 * rank;
  Matrix block(dim, dim);
  for (std::size_t b = 0; b < rank; ++b) {
    block(2 * b, 2 * b) = 1.0;
    block(2 * b, 2 * b + 1) = shear(rng);
  }
  const Matrix q = random_orthogonal(dim, rng);
  return q * block * transpose(q);
}

SchemeDescriptor scheme() {
  SchemeDescriptor s;
  s.name = "opnum";
  s.jump_map = [](std::size_t n) { return 2 * n; };
  s.error_fn = [](const Element& x, std::size_t n) -> ErrorValue {
    const auto* t = std::get_if<Matrix>(&x);
    if (!t) throw PreconditionError("finite-rank scheme expects a matrix element");
    const auto sv = singular_values(*t);
    return {n < sv.size() ? sv[n] : 0.0, ErrorKind::Exact};
  };
  return s;
}

}  // namespace llab::opnum
