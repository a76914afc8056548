#include "llab/nterm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "llab/random.hpp"

namespace llab::nterm {

Dictionary Dictionary::coord(std::size_t size) {
  return Dictionary{DictKind::OrthonormalCoord, size, 2.0, 0};
}

Dictionary Dictionary::haar(int grid_log2, double p) {
  if (grid_log2 < 0 || grid_log2 > 30) throw PreconditionError("haar dictionary: bad grid");
  if (!(p >= 1.0)) throw PreconditionError("haar dictionary: p must be >= 1 or infinity");
  return Dictionary{DictKind::Haar, std::size_t{1} << grid_log2, p, grid_log2};
}

HaarIndex haar_index(std::size_t k) {
  if (k == 0) throw PreconditionError("haar index starts at 1");
  if (k == 1) return {-1, 1};
  int j = 0;
  while ((std::size_t{1} << (j + 1)) < k) ++j;  // 2^j < k <= 2^{j+1}
  return {j, k - (std::size_t{1} << j)};
}

namespace {

// 2^{level/p}; p = inf gives 1.
double haar_amplitude(int level, double p) { return std::exp2(level / p); }

void require_on_grid(std::size_t k, int grid_log2) {
  const HaarIndex hi = haar_index(k);
  if (hi.level + 1 > grid_log2)
    throw PreconditionError("haar: index " + std::to_string(k) + " (level " +
                            std::to_string(hi.level) + ") needs a grid finer than 2^" +
                            std::to_string(grid_log2));
}

}  // namespace

StepFn haar(std::size_t k, int grid_log2, double p) {
  require_on_grid(k, grid_log2);
  StepFn f = StepFn::zero(grid_log2, p);
  const HaarIndex hi = haar_index(k);
  auto& c = f.cells();
  if (hi.level < 0) {
    std::fill(c.begin(), c.end(), 1.0);
    return f;
  }
  const std::size_t block = c.size() >> hi.level;
  const std::size_t first = (hi.shift - 1) * block;
  const double amp = haar_amplitude(hi.level, p);
  for (std::size_t i = 0; i < block / 2; ++i) {
    c[first + i] = amp;
    c[first + block / 2 + i] = -amp;
  }
  return f;
}

std::vector<double> haar_coefficients(const StepFn& f, double p, Exec exec) {
  const int g = f.grid_log2();
  const std::size_t N = f.cell_count();
  std::vector<double> coeffs(N, 0.0);
  // sums[l] holds the 2^l block sums at level l.
  std::vector<std::vector<double>> sums(static_cast<std::size_t>(g) + 1);
  sums[g] = f.cells();
  for (int l = g - 1; l >= 0; --l) {
    const auto& child = sums[l + 1];
    auto& parent = sums[l];
    parent.resize(std::size_t{1} << l);
    for_each_index(
        parent.size(), [&](std::size_t i) { parent[i] = child[2 * i] + child[2 * i + 1]; }, exec);
  }
  const double w = f.cell_width();
  coeffs[0] = sums[0][0] * w;
  for (int j = 0; j < g; ++j) {
    const auto& child = sums[j + 1];
    const double scale = std::exp2(j * (1.0 - 1.0 / p)) * w;
    const std::size_t base = std::size_t{1} << j;
    for_each_index(
        base,
        [&](std::size_t t0) {
          coeffs[base + t0] = scale * (child[2 * t0] - child[2 * t0 + 1]);
        },
        exec);
  }
  return coeffs;
}

std::vector<double> haar_coefficients_reference(const StepFn& f, double p) {
  const std::size_t N = f.cell_count();
  const auto& v = f.cells();
  const double w = f.cell_width();
  std::vector<double> coeffs(N, 0.0);
  for (std::size_t k = 1; k <= N; ++k) {
    const HaarIndex hi = haar_index(k);
    if (hi.level < 0) {
      double s = 0.0;
      for (double c : v) s += c;
      coeffs[0] = s * w;
      continue;
    }
    const std::size_t block = N >> hi.level;
    const std::size_t first = (hi.shift - 1) * block;
    double s = 0.0;
    for (std::size_t i = 0; i < block; ++i) s += (i < block / 2 ? 1.0 : -1.0) * v[first + i];
    coeffs[k - 1] = std::exp2(hi.level * (1.0 - 1.0 / p)) * s * w;
  }
  return coeffs;
}

StepFn haar_synthesis(const std::vector<double>& coeffs, int grid_log2, double p) {
  StepFn f = StepFn::zero(grid_log2, p);
  if (coeffs.size() != f.cell_count())
    throw PreconditionError("haar_synthesis: expected 2^g coefficients");
  auto& c = f.cells();
  for (std::size_t k = 1; k <= coeffs.size(); ++k) {
    const double a = coeffs[k - 1];
    if (a == 0.0) continue;
    const HaarIndex hi = haar_index(k);
    if (hi.level < 0) {
      for (auto& x : c) x += a;
      continue;
    }
    const std::size_t block = c.size() >> hi.level;
    const std::size_t first = (hi.shift - 1) * block;
    const double amp = a * haar_amplitude(hi.level, p);
    for (std::size_t i = 0; i < block / 2; ++i) {
      c[first + i] += amp;
      c[first + block / 2 + i] -= amp;
    }
  }
  return f;
}

std::vector<std::size_t> greedy_order(const std::vector<double>& coeffs) {
  std::vector<std::size_t> idx(coeffs.size());
  std::iota(idx.begin(), idx.end(), std::size_t{1});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return std::abs(coeffs[a - 1]) > std::abs(coeffs[b - 1]);
  });
  return idx;
}

namespace {

double l2_tail_of_sorted(const std::vector<double>& coeffs, std::size_t n) {
  std::vector<double> mags(coeffs.size());
  std::transform(coeffs.begin(), coeffs.end(), mags.begin(), [](double c) { return std::abs(c); });
  std::sort(mags.begin(), mags.end(), std::greater<>());
  double s = 0.0;
  for (std::size_t i = mags.size(); i > n; --i) s += mags[i - 1] * mags[i - 1];
  return std::sqrt(s);
}

}  // namespace

double sigma_n_orthonormal(const RealSeq& x, std::size_t n) {
  if (x.tag != NormTag::L2) throw PreconditionError("sigma_n_orthonormal: expects an l^2 element");
  return l2_tail_of_sorted(x.values, n);
}

GreedyResult greedy(const Element& x, const Dictionary& dict, std::size_t n) {
  GreedyResult r;
  r.n = n;
  if (dict.kind == DictKind::OrthonormalCoord) {
    const auto* seq = std::get_if<RealSeq>(&x);
    if (!seq) throw PreconditionError("greedy: coordinate dictionary expects a sequence");
    const auto order = greedy_order(seq->values);
    r.permutation_head.assign(order.begin(), order.begin() + std::min(n, order.size()));
    RealSeq approx{std::vector<double>(seq->size(), 0.0), seq->tag};
    for (std::size_t k : r.permutation_head) approx.values[k - 1] = seq->values[k - 1];
    RealSeq residual{seq->values, seq->tag};
    for (std::size_t k : r.permutation_head) residual.values[k - 1] = 0.0;
    // Same summation as sigma_n_orthonormal, so greedy and sigma_n agree bitwise.
    r.residual_norm = seq->tag == NormTag::L2 ? l2_tail_of_sorted(seq->values, r.permutation_head.size())
                                              : norm(residual);
    r.approximant = std::move(approx);
    return r;
  }

  const auto* f = std::get_if<StepFn>(&x);
  if (!f) throw PreconditionError("greedy: Haar dictionary expects a step function");
  if (f->grid_log2() != dict.grid_log2)
    throw PreconditionError("greedy: element grid differs from the dictionary grid");
  const auto coeffs = haar_coefficients(*f, dict.p);
  const auto order = greedy_order(coeffs);
  r.permutation_head.assign(order.begin(), order.begin() + std::min(n, order.size()));
  std::vector<double> kept(coeffs.size(), 0.0);
  for (std::size_t k : r.permutation_head) kept[k - 1] = coeffs[k - 1];
  StepFn approx = haar_synthesis(kept, dict.grid_log2, dict.p);
  r.residual_norm = lp_norm(f->with_exponent(dict.p) - approx);
  r.approximant = std::move(approx);
  return r;
}

namespace {

void require_index_set(const Dictionary& dict, const std::vector<std::size_t>& s,
                       const char* label) {
  if (s.empty()) throw PreconditionError(std::string("democracy_ratio: ") + label + " is empty");
  std::set<std::size_t> seen;
  for (std::size_t k : s) {
    if (k < 1 || k > dict.size)
      throw PreconditionError(std::string("democracy_ratio: index ") + std::to_string(k) +
                              " outside 1.." + std::to_string(dict.size));
    if (!seen.insert(k).second)
      throw PreconditionError(std::string("democracy_ratio: repeated index in ") + label);
  }
}

double indicator_sum_norm(const Dictionary& dict, const std::vector<std::size_t>& s) {
  if (dict.kind == DictKind::OrthonormalCoord) {
    RealSeq x{std::vector<double>(*std::max_element(s.begin(), s.end()), 0.0), NormTag::L2};
    for (std::size_t k : s) x.values[k - 1] = 1.0;
    return norm(x);
  }
  std::vector<double> coeffs(dict.size, 0.0);
  for (std::size_t k : s) coeffs[k - 1] = 1.0;
  return lp_norm(haar_synthesis(coeffs, dict.grid_log2, dict.p));
}

}  // namespace

double democracy_ratio(const Dictionary& dict, const std::vector<std::size_t>& lambda,
                       const std::vector<std::size_t>& lambda_star) {
  require_index_set(dict, lambda, "lambda");
  require_index_set(dict, lambda_star, "lambda_star");
  if (lambda.size() != lambda_star.size())
    throw PreconditionError("democracy_ratio: index sets must have equal cardinality");
  return indicator_sum_norm(dict, lambda) / indicator_sum_norm(dict, lambda_star);
}

DemocracySample democracy_sample(const Dictionary& dict, std::size_t m, std::size_t pairs,
                                 std::uint64_t seed, Exec exec) {
  if (m == 0 || m > dict.size)
    throw PreconditionError("democracy_sample: need 1 <= m <= dictionary size");
  struct Draw {
    double ratio = 0.0;
    std::vector<std::size_t> a, b;
  };
  auto draws = map_index<Draw>(
      pairs,
      [&](std::size_t i) {
        auto rng = substream(seed, i);
        std::vector<std::size_t> all(dict.size);
        std::iota(all.begin(), all.end(), std::size_t{1});
        Draw d;
        std::shuffle(all.begin(), all.end(), rng);
        d.a.assign(all.begin(), all.begin() + m);
        std::shuffle(all.begin(), all.end(), rng);
        d.b.assign(all.begin(), all.begin() + m);
        std::sort(d.a.begin(), d.a.end());
        std::sort(d.b.begin(), d.b.end());
        d.ratio = democracy_ratio(dict, d.a, d.b);
        return d;
      },
      exec);
  DemocracySample out;
  out.pairs = pairs;
  for (auto& d : draws) {
    if (d.ratio > out.max_ratio) {
      out.max_ratio = d.ratio;
      out.worst_lambda = d.a;
      out.worst_lambda_star = d.b;
    }
  }
  return out;
}

Element witness_element(const Dictionary& dict, std::size_t n) {
  if (n == 0) throw PreconditionError("nterm witness: n must be >= 1");
  if (3 * n > dict.size)
    throw PreconditionError("nterm witness: dictionary has " + std::to_string(dict.size) +
                            " elements, need 3n = " + std::to_string(3 * n));
  if (dict.kind == DictKind::OrthonormalCoord)
    return RealSeq{std::vector<double>(3 * n, 1.0), NormTag::L2};
  std::vector<double> coeffs(dict.size, 0.0);
  std::fill(coeffs.begin(), coeffs.begin() + 3 * n, 1.0);
  return haar_synthesis(coeffs, dict.grid_log2, dict.p);
}

std::pair<double, double> jump_witness_nterm(const Dictionary& dict, std::size_t n) {
  const Element x = witness_element(dict, n);
  return {greedy(x, dict, n).residual_norm, greedy(x, dict, 2 * n).residual_norm};
}

SchemeDescriptor orthonormal_scheme() {
  SchemeDescriptor s;
  s.name = "nterm";
  s.jump_map = [](std::size_t n) { return 2 * n; };
  s.error_fn = [](const Element& x, std::size_t n) -> ErrorValue {
    if (const auto* seq = std::get_if<RealSeq>(&x)) return {sigma_n_orthonormal(*seq, n), ErrorKind::Exact};
    if (const auto* f = std::get_if<StepFn>(&x)) {
      if (f->p() != 2.0) throw PreconditionError("orthonormal n-term scheme needs p = 2");
      return {l2_tail_of_sorted(haar_coefficients(*f, 2.0), n), ErrorKind::Exact};
    }
    throw PreconditionError("orthonormal n-term scheme expects a sequence or step function");
  };
  return s;
}

}  // namespace llab::nterm
