#include "llab/quantize.hpp"

#include <algorithm>
#include <cmath>

namespace llab::quantize {

namespace {

void require_sup(const RealSeq& x, std::size_t n, const char* who) {
  if (x.tag != NormTag::Sup) throw PreconditionError(std::string(who) + ": expects a c_0 element");
  if (n < 1) throw PreconditionError(std::string(who) + ": n must be >= 1");
  for (double v : x.values)
    if (!std::isfinite(v)) throw PreconditionError(std::string(who) + ": non-finite coordinate");
}

double sup_distance(const RealSeq& x, const RealSeq& a) {
  double e = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) e = std::max(e, std::abs(x.values[i] - a.values[i]));
  return e;
}

LevelSet levels_of(const RealSeq& a) {
  LevelSet ls;
  ls.levels = a.values;
  ls.levels.push_back(0.0);
  std::sort(ls.levels.begin(), ls.levels.end());
  ls.levels.erase(std::unique(ls.levels.begin(), ls.levels.end()), ls.levels.end());
  ls.contains_zero = true;
  return ls;
}

// Error of serving the sorted group [lo, hi] with its floating midpoint.
double group_error(double lo, double hi) {
  const double mid = 0.5 * (lo + hi);
  return std::max(mid - lo, hi - mid);
}

struct Cover {
  std::vector<double> group_lo;
  std::vector<double> group_hi;
};

// Greedy cover of the sorted nonzero values at radius r: values within r of 0
// go to the fixed center, the rest are swept left to right into maximal groups.
Cover greedy_cover(const std::vector<double>& pts, double r) {
  Cover c;
  std::size_t i = 0;
  while (i < pts.size()) {
    if (std::abs(pts[i]) <= r) {
      ++i;
      continue;
    }
    const double lo = pts[i];
    double hi = lo;
    std::size_t j = i + 1;
    for (; j < pts.size(); ++j) {
      if (std::abs(pts[j]) <= r) continue;  // served by 0 regardless
      if (group_error(lo, pts[j]) > r) break;
      hi = pts[j];
    }
    c.group_lo.push_back(lo);
    c.group_hi.push_back(hi);
    i = j;
  }
  return c;
}

}  // namespace

QuantResult quantize_paper(const RealSeq& x, std::size_t n) {
  require_sup(x, n, "quantize_paper");
  QuantResult r;
  r.kind = ErrorKind::UpperBound;
  r.approximant = RealSeq{std::vector<double>(x.size(), 0.0), NormTag::Sup};
  const double M = norm(x);
  if (M == 0.0) {
    r.levels = levels_of(r.approximant);
    return r;
  }
  const double step = 2.0 * M / static_cast<double>(n);
  std::vector<double> c;
  // c_k = M - 2kM/n, formed directly so c_{n-k} = -c_k exactly.
  const double nd = static_cast<double>(n);
  for (std::size_t k = 1; k + 1 <= n; ++k) c.push_back(M * ((nd - 2.0 * static_cast<double>(k)) / nd));

  // Last (1-based) index with |x_k| >= 2M/n; everything after it snaps to 0.
  std::size_t last = 0;
  for (std::size_t k = 1; k <= x.size(); ++k)
    if (std::abs(x.at(k)) >= step) last = k;

  for (std::size_t k = 1; k <= last && !c.empty(); ++k) {
    const double v = x.at(k);
    std::size_t best = 0;
    for (std::size_t j = 1; j < c.size(); ++j)
      if (std::abs(v - c[j]) < std::abs(v - c[best])) best = j;
    r.approximant.values[k - 1] = c[best];
  }
  r.error = sup_distance(x, r.approximant);
  r.bound = step;
  r.levels = levels_of(r.approximant);
  return r;
}

QuantResult quantize_exact(const RealSeq& x, std::size_t n) {
  require_sup(x, n, "quantize_exact");
  std::vector<double> pts;
  for (double v : x.values)
    if (v != 0.0) pts.push_back(v);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  const std::size_t free_centers = n - 1;
  QuantResult r;
  r.kind = ErrorKind::Exact;
  r.approximant = RealSeq{std::vector<double>(x.size(), 0.0), NormTag::Sup};

  double radius = 0.0;
  if (pts.size() > free_centers) {
    std::vector<double> cand{0.0};
    cand.reserve(pts.size() * (pts.size() + 3) / 2 + 1);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      cand.push_back(std::abs(pts[i]));
      for (std::size_t j = i + 1; j < pts.size(); ++j) cand.push_back(group_error(pts[i], pts[j]));
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    // Smallest candidate whose greedy cover fits in the free centers; the
    // largest candidate (max |p|) always fits via the center at 0.
    std::size_t lo = 0, hi = cand.size() - 1;
    while (lo < hi) {
      const std::size_t mid = lo + (hi - lo) / 2;
      if (greedy_cover(pts, cand[mid]).group_lo.size() <= free_centers)
        hi = mid;
      else
        lo = mid + 1;
    }
    radius = cand[lo];
  }

  const Cover cover = greedy_cover(pts, radius);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double v = x.values[i];
    if (v == 0.0 || std::abs(v) <= radius) continue;
    auto it = std::upper_bound(cover.group_lo.begin(), cover.group_lo.end(), v);
    const auto g = static_cast<std::size_t>(it - cover.group_lo.begin()) - 1;
    r.approximant.values[i] = 0.5 * (cover.group_lo[g] + cover.group_hi[g]);
  }
  r.error = sup_distance(x, r.approximant);
  r.bound = r.error;
  r.levels = levels_of(r.approximant);
  return r;
}

CollapseProfile collapse_profile(const RealSeq& x, std::size_t n_max, Exec exec) {
  if (n_max < 1) throw PreconditionError("collapse_profile: n_max must be >= 1");
  CollapseProfile p;
  p.curve.entries.resize(n_max);
  for_each_index(
      n_max,
      [&](std::size_t i) {
        const std::size_t n = i + 1;
        p.curve.entries[i] = {n, quantize_exact(x, n).error, ErrorKind::Exact};
      },
      exec);
  p.bound = 2.0 * norm(x);
  for (const auto& e : p.curve.entries)
    p.envelope = std::max(p.envelope, static_cast<double>(e.n) * e.value);
  p.holds = p.envelope <= p.bound;
  return p;
}

SchemeDescriptor scheme() {
  SchemeDescriptor s;
  s.name = "quantize";
  s.jump_map = [](std::size_t n) { return n * n; };
  s.error_fn = [](const Element& x, std::size_t n) -> ErrorValue {
    const auto* seq = std::get_if<RealSeq>(&x);
    if (!seq) throw PreconditionError("quantization scheme expects a sequence element");
    if (n == 0) return {norm(*seq), ErrorKind::Exact};
    return {quantize_exact(*seq, n).error, ErrorKind::Exact};
  };
  return s;
}

RealSeq witness_element(std::size_t n) {
  const std::size_t count = n * n + 1;
  RealSeq x{std::vector<double>(count), NormTag::Sup};
  for (std::size_t k = 0; k < count; ++k)
    x.values[k] = static_cast<double>(count - k) / static_cast<double>(count);
  return x;
}

}  // namespace llab::quantize
