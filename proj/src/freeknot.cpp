#include "llab/freeknot.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

namespace llab::freeknot {

double PiecewiseConst::operator()(double t) const {
  auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), t);
  return values[static_cast<std::size_t>(it - breakpoints.begin())];
}

double evaluate_terms(const std::vector<IntervalTerm>& terms, double t) {
  double s = 0.0;
  for (const auto& term : terms)
    if (term.a <= t && t <= term.b) s += term.coefficient;
  return s;
}

PiecewiseConst canonicalize(const std::vector<IntervalTerm>& terms) {
  if (terms.empty()) throw PreconditionError("canonicalize: need at least one term");
  std::vector<double> edges{0.0, 1.0};
  for (const auto& t : terms) {
    if (!std::isfinite(t.coefficient) || !(t.a < t.b) || t.a < 0.0 || t.b > 1.0)
      throw PreconditionError("canonicalize: interval must satisfy 0 <= a < b <= 1");
    edges.push_back(t.a);
    edges.push_back(t.b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  PiecewiseConst pc;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double lo = edges[i], hi = edges[i + 1];
    double v = 0.0;
    for (const auto& t : terms)
      if (t.a <= lo && hi <= t.b) v += t.coefficient;
    if (!pc.values.empty() && pc.values.back() == v) continue;
    if (!pc.values.empty()) pc.breakpoints.push_back(lo);
    pc.values.push_back(v);
  }
  return pc;
}

namespace {

inline double half_spread(double mx, double mn) { return 0.5 * (mx - mn); }

// Sparse tables of range min / max: level l holds extrema of [i, i + 2^l).
class RangeExtrema {
 public:
  RangeExtrema(const std::vector<double>& v, Exec exec) {
    const std::size_t n = v.size();
    mins_.push_back(v);
    maxs_.push_back(v);
    for (std::size_t len = 2; len <= n; len *= 2) {
      const auto& pmin = mins_.back();
      const auto& pmax = maxs_.back();
      const std::size_t half = len / 2;
      std::vector<double> cmin(n - len + 1), cmax(n - len + 1);
      for_each_index(
          cmin.size(),
          [&](std::size_t i) {
            cmin[i] = std::min(pmin[i], pmin[i + half]);
            cmax[i] = std::max(pmax[i], pmax[i + half]);
          },
          exec);
      mins_.push_back(std::move(cmin));
      maxs_.push_back(std::move(cmax));
    }
  }

  // Half-spread of cells [i, j], i <= j.
  double cost(std::size_t i, std::size_t j) const {
    const std::size_t len = j - i + 1;
    const auto l = static_cast<std::size_t>(std::bit_width(len) - 1);
    const std::size_t k = j + 1 - (std::size_t{1} << l);
    return half_spread(std::max(maxs_[l][i], maxs_[l][k]), std::min(mins_[l][i], mins_[l][k]));
  }

  double min(std::size_t i, std::size_t j) const {
    const auto l = static_cast<std::size_t>(std::bit_width(j - i + 1) - 1);
    return std::min(mins_[l][i], mins_[l][j + 1 - (std::size_t{1} << l)]);
  }
  double max(std::size_t i, std::size_t j) const {
    const auto l = static_cast<std::size_t>(std::bit_width(j - i + 1) - 1);
    return std::max(maxs_[l][i], maxs_[l][j + 1 - (std::size_t{1} << l)]);
  }

 private:
  std::vector<std::vector<double>> mins_, maxs_;
};

// Greedy left-to-right cover with pieces of cost <= r. Stops once more than
// cap pieces are needed. Returns the piece starts.
std::vector<std::size_t> greedy_starts(const RangeExtrema& rx, std::size_t n, double r,
                                       std::size_t cap) {
  std::vector<std::size_t> starts;
  std::size_t s = 0;
  while (s < n) {
    starts.push_back(s);
    if (starts.size() > cap) break;
    // Largest e with cost(s, e) <= r; cost is monotone in e.
    std::size_t lo = s, hi = n - 1;
    while (lo < hi) {
      const std::size_t mid = lo + (hi - lo + 1) / 2;
      if (rx.cost(s, mid) <= r)
        lo = mid;
      else
        hi = mid - 1;
    }
    s = lo + 1;
  }
  return starts;
}

PcFit assemble(const StepFn& f, std::vector<std::size_t> starts, const RangeExtrema& rx) {
  PcFit out;
  const std::size_t n = f.cell_count();
  out.error = 0.0;
  for (std::size_t p = 0; p < starts.size(); ++p) {
    const std::size_t i = starts[p];
    const std::size_t j = (p + 1 < starts.size() ? starts[p + 1] : n) - 1;
    const double mx = rx.max(i, j), mn = rx.min(i, j);
    out.error = std::max(out.error, half_spread(mx, mn));
    out.fit.values.push_back(0.5 * (mx + mn));
    if (p > 0) out.fit.breakpoints.push_back(static_cast<double>(i) * f.cell_width());
  }
  out.fit.canonical = true;
  for (std::size_t p = 1; p < out.fit.values.size(); ++p)
    if (out.fit.values[p] == out.fit.values[p - 1]) out.fit.canonical = false;
  out.starts = std::move(starts);
  return out;
}

void require_finite(const StepFn& f, std::size_t m, const char* who) {
  if (m < 1) throw PreconditionError(std::string(who) + ": need at least one piece");
  for (double v : f.cells())
    if (!std::isfinite(v)) throw PreconditionError(std::string(who) + ": non-finite cell value");
}

}  // namespace

PcFit best_pc_sup(const StepFn& f, std::size_t m, Exec exec) {
  require_finite(f, m, "best_pc_sup");
  const std::size_t n = f.cell_count();
  const RangeExtrema rx(f.cells(), exec);
  auto feasible = [&](double r) { return greedy_starts(rx, n, r, m).size() <= m; };

  double best = 0.0;
  if (!feasible(0.0)) {
    // Piece counts only change at realized piece costs, so the least
    // feasible double is the optimum exactly. Non-negative doubles order
    // like their bit patterns.
    std::uint64_t lo = std::bit_cast<std::uint64_t>(0.0);           // infeasible
    std::uint64_t hi = std::bit_cast<std::uint64_t>(rx.cost(0, n - 1));  // feasible
    while (hi - lo > 1) {
      const std::uint64_t mid = lo + (hi - lo) / 2;
      if (feasible(std::bit_cast<double>(mid)))
        hi = mid;
      else
        lo = mid;
    }
    best = std::bit_cast<double>(hi);
  }
  return assemble(f, greedy_starts(rx, n, best, m), rx);
}

PcFit best_pc_sup_dp(const StepFn& f, std::size_t m, Exec exec) {
  require_finite(f, m, "best_pc_sup_dp");
  const std::size_t n = f.cell_count();
  const double inf = std::numeric_limits<double>::infinity();
  m = std::min(m, n);
  // cost[k][i]: best objective covering cells [0, i) with exactly k pieces.
  std::vector<std::vector<double>> cost(m + 1, std::vector<double>(n + 1, inf));
  std::vector<std::vector<std::size_t>> arg(m + 1, std::vector<std::size_t>(n + 1, 0));
  cost[0][0] = 0.0;
  for (std::size_t k = 1; k <= m; ++k) {
    const auto& prev = cost[k - 1];
    auto& cur = cost[k];
    auto& where = arg[k];
    for_each_index(
        n,
        [&](std::size_t i0) {
          const std::size_t i = i0 + 1;
          double mx = -inf, mn = inf, best = inf;
          std::size_t best_j = 0;
          for (std::size_t j = i; j-- > 0;) {  // last piece is [j, i)
            mx = std::max(mx, f.cells()[j]);
            mn = std::min(mn, f.cells()[j]);
            const double c = std::max(prev[j], half_spread(mx, mn));
            if (c < best) {
              best = c;
              best_j = j;
            }
          }
          cur[i] = best;
          where[i] = best_j;
        },
        exec);
  }
  std::size_t k_best = 1;
  for (std::size_t k = 1; k <= m; ++k)
    if (cost[k][n] < cost[k_best][n]) k_best = k;
  std::vector<std::size_t> starts;
  for (std::size_t k = k_best, i = n; k > 0; --k) {
    i = arg[k][i];
    starts.push_back(i);
  }
  std::reverse(starts.begin(), starts.end());
  const RangeExtrema rx(f.cells(), Exec::Serial);
  return assemble(f, std::move(starts), rx);
}

double sup_distance(const StepFn& f, const PiecewiseConst& fit) {
  double e = 0.0;
  const double w = f.cell_width();
  for (std::size_t i = 0; i < f.cell_count(); ++i)
    e = std::max(e, std::abs(f.cells()[i] - fit((static_cast<double>(i) + 0.5) * w)));
  return e;
}

StepFn sin_step(double h, int grid_log2) {
  return sample_midpoints([h](double t) { return std::sin(h * std::numbers::pi * t); }, grid_log2,
                          kInfExponent);
}

double witness_frequency(std::size_t n) { return 4.0 * (8.0 * static_cast<double>(n) + 4.0); }

WitnessResult equioscillation_witness(std::size_t n, int grid_log2, Exec exec) {
  if (n < 1) throw PreconditionError("equioscillation_witness: n must be >= 1");
  WitnessResult w;
  w.n = n;
  w.h = witness_frequency(n);
  w.pieces_small = 4 * n + 3;
  w.pieces_large = 8 * n + 5;
  // A period 2/h spans 2^{g+1}/h cells.
  if (grid_log2 < 0 || grid_log2 > 30 || std::ldexp(2.0, grid_log2) / w.h < 4.0)
    throw PreconditionError("equioscillation_witness: grid 2^" + std::to_string(grid_log2) +
                            " gives fewer than 4 cells per period for h = " +
                            std::to_string(static_cast<long long>(w.h)));
  const StepFn f = sin_step(w.h, grid_log2);
  w.error_small = best_pc_sup(f, w.pieces_small, exec).error;
  w.error_large = best_pc_sup(f, w.pieces_large, exec).error;
  w.tolerance = std::numbers::pi * w.h / std::ldexp(1.0, grid_log2);
  return w;
}

SchemeDescriptor scheme() {
  SchemeDescriptor s;
  s.name = "freeknot";
  s.jump_map = [](std::size_t n) { return 2 * n; };
  s.error_fn = [](const Element& x, std::size_t n) -> ErrorValue {
    const auto* f = std::get_if<StepFn>(&x);
    if (!f) throw PreconditionError("free-knot scheme expects a step function");
    if (n == 0) return {lp_norm(f->with_exponent(kInfExponent)), ErrorKind::Exact};
    return {best_pc_sup(*f, 4 * n + 3, Exec::Serial).error, ErrorKind::Exact};
  };
  return s;
}

}  // namespace llab::freeknot
