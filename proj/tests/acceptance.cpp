// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "llab/certify.hpp"
#include "llab/freeknot.hpp"
#include "llab/lethargy.hpp"
#include "llab/nterm.hpp"
#include "llab/opnum.hpp"
#include "llab/quantize.hpp"

using namespace llab;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void run(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = secs < limit_s;
  const bool pass = r.ok && in_time;
  if (!pass) ++failures;
  std::printf("%s [%d] %s: %s (%.3f s, limit %.0f s%s)\n", pass ? "PASS" : "FAIL", id, title, r.detail.c_str(), secs,
              limit_s, in_time ? "" : ", too slow");
  std::fflush(stdout);
}

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

// Exhaustive level search for the quantization optimum on small supports.
double exhaustive_quant(const std::vector<double>& values, std::size_t n) {
  std::set<double> distinct;
  for (double v : values)
    if (v != 0.0) distinct.insert(v);
  const std::vector<double> pts(distinct.begin(), distinct.end());
  std::set<double> cs(pts.begin(), pts.end());
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) cs.insert(0.5 * (pts[i] + pts[j]));
  const std::vector<double> cand(cs.begin(), cs.end());
  double best = INFINITY;
  std::vector<double> levels;
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t from, std::size_t left) {
    double e = 0.0;
    for (double p : pts) {
      double d = std::abs(p);
      for (double l : levels) d = std::min(d, std::abs(p - l));
      e = std::max(e, d);
    }
    best = std::min(best, e);
    if (best == 0.0 || left == 0) return;
    for (std::size_t i = from; i < cand.size(); ++i) {
      levels.push_back(cand[i]);
      go(i + 1, left - 1);
      levels.pop_back();
    }
  };
  go(0, n - 1);
  return best;
}

Outcome orthonormal_ratio() {
  double worst = 0.0;
  for (std::size_t n = 1; n <= 64; ++n) {
    const RealSeq x{std::vector<double>(3 * n, 1.0), NormTag::L2};
    const double r = nterm::sigma_n_orthonormal(x, n) / nterm::sigma_n_orthonormal(x, 2 * n);
    worst = std::max(worst, std::abs(r - std::sqrt(2.0)));
  }
  return {worst <= 1e-12, fmt("max |ratio - sqrt2| = %.3g over n = 1..64", worst)};
}

Outcome dominating_sequence() {
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const std::size_t N = 10000;
  std::size_t bad = 0, pairs = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> eps(N + 1);
    eps[0] = 0.5 + 4 * u(rng);
    const int shape = trial % 4;
    const double power = 0.1 + 2.0 * u(rng);
    for (std::size_t n = 1; n <= N; ++n) {
      switch (shape) {
        case 0: eps[n] = eps[n - 1] * (rng() % 4 == 0 ? 0.5 + 0.5 * u(rng) : 1.0); break;
        case 1: eps[n] = eps[0] / std::pow(static_cast<double>(n + 1), power); break;
        case 2: eps[n] = std::max(eps[n - 1] * (0.9 + 0.1 * u(rng)), 1e-300); break;
        default: eps[n] = rng() % 50 == 0 ? eps[n - 1] * 1e-3 : eps[n - 1]; break;
      }
      eps[n] = std::min(eps[n], eps[n - 1]);
      if (!(eps[n] > 0.0)) eps[n] = eps[n - 1];
    }
    lethargy::JumpFn h;
    const std::size_t a = 1 + rng() % 4, b = rng() % 7;
    switch (trial % 3) {
      case 0: h = lethargy::JumpFn([a, b](std::size_t n) { return a * n + b; }, "affine"); break;
      case 1: h = lethargy::JumpFn([b](std::size_t n) { return n * n + b; }, "square"); break;
      default: h = lethargy::JumpFn([b](std::size_t n) { return n + b + n / 3; }, "slow"); break;
    }
    const auto rep = lethargy::check_invariants(lethargy::build_xi(eps, h));
    pairs += rep.jump_pairs_checked;
    if (!rep.pass()) ++bad;
  }
  return {bad == 0, fmt("%.0f of 200 instances failed; %.0f jump pairs checked", static_cast<double>(bad),
                        static_cast<double>(pairs))};
}

Outcome quantization_collapse() {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(-1, 1);
  std::size_t violations = 0;
  double worst_env = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> v(1 + rng() % 32);
    for (auto& x : v) x = u(rng);
    const RealSeq x{v, NormTag::Sup};
    const double M = norm(x);
    for (std::size_t n = 1; n <= 16; ++n) {
      const double e = quantize::quantize_exact(x, n).error;
      const double p = quantize::quantize_paper(x, n).error;
      const double nd = static_cast<double>(n);
      // 2M/n is attained at +-M, so allow a few ulps of rounding in the levels.
      const double slack = 4 * std::numeric_limits<double>::epsilon() * M;
      if (!(e <= p && p <= 2 * M / nd + slack && nd * e <= 2 * M)) ++violations;
      worst_env = std::max(worst_env, nd * e / M);
    }
  }
  std::size_t mismatches = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> v(1 + rng() % 8);
    for (auto& x : v) x = trial % 3 == 0 ? std::round(4 * u(rng)) / 4 : u(rng);
    for (std::size_t n = 1; n <= 5; ++n)
      if (quantize::quantize_exact(RealSeq{v, NormTag::Sup}, n).error != exhaustive_quant(v, n)) ++mismatches;
  }
  return {violations == 0 && mismatches == 0,
          fmt("bound violations %.0f, max n*E/||x|| = %.6f", static_cast<double>(violations), worst_env) +
              fmt(", oracle mismatches %.0f of 1000", static_cast<double>(mismatches))};
}

Outcome equioscillation() {
  bool ok = true;
  std::string d;
  for (std::size_t n : {1, 2, 4, 8}) {
    const auto w = freeknot::equioscillation_witness(n, 16);
    const double tol = std::numbers::pi * w.h / 65536.0 + 1e-9;
    const double dev = std::max(std::abs(w.error_small - 1.0), std::abs(w.error_large - 1.0));
    ok = ok && dev <= tol;
    d += fmt("n=%.0f dev %.3g", static_cast<double>(n), dev) + fmt(" (tol %.3g) ", tol);
  }
  return {ok, d};
}

Outcome separation() {
  double closed_dev = 0.0;
  for (const auto& e : certify::brudnyi_gap_interleaved(64).per_n)
    closed_dev = std::max(closed_dev, std::abs(e.value - 1.0 / static_cast<double>(e.n + 1)));
  double sampled_dev = 0.0;
  for (std::size_t n : {1, 2, 4, 8, 16, 32, 64}) {
    const double s = certify::sampled_gap(n, 10000, 11);
    sampled_dev = std::max(sampled_dev, std::abs(s * static_cast<double>(n + 1) - 1.0));
  }
  std::vector<std::size_t> ns(64);
  std::iota(ns.begin(), ns.end(), std::size_t{1});
  const auto cert = certify::check_jump(certify::interleaved_scheme(), certify::interleaved_witnesses(ns), 2.0);
  const bool ok = closed_dev <= 1e-15 && sampled_dev <= 0.05 && cert.verdict == certify::Verdict::Witnessed &&
                  cert.c == 1.0;
  return {ok, fmt("closed-form dev %.3g, sampled rel dev %.4f", closed_dev, sampled_dev) + ", jump " +
                  certify::to_string(cert.verdict) + fmt(" c = %.17g", cert.c)};
}

Outcome bernstein() {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> eps(1 + rng() % 200);
    eps[0] = 0.1 + 5 * u(rng);
    for (std::size_t n = 1; n < eps.size(); ++n) eps[n] = eps[n - 1] * (rng() % 5 == 0 ? 1.0 : u(rng));
    const auto c0 = lethargy::bernstein_c0(eps);
    const auto l2 = lethargy::bernstein_l2(eps);
    for (std::size_t n = 0; n < eps.size(); ++n)
      worst = std::max({worst, std::abs(tail_norm(c0, n) - eps[n]), std::abs(tail_norm(l2, n) - eps[n])});
  }
  return {worst <= 1e-12, fmt("max deviation %.3g", worst)};
}

Outcome approximation_numbers() {
  const auto d = opnum::approx_numbers(Matrix::diagonal({3, 2, 1}), 4);
  bool diag_ok = d.entries.size() == 4 && d.entries[0].value == 3.0 && d.entries[1].value == 2.0 &&
                 d.entries[2].value == 1.0 && d.entries[3].value == 0.0;
  std::mt19937_64 rng(31337);
  double ey = 0.0;
  bool ordered = true;
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix t = opnum::random_gaussian(8, 8, rng);
    const auto c = opnum::approx_numbers(t, 8);
    for (std::size_t i = 1; i < 8; ++i) ordered = ordered && c.entries[i].value <= c.entries[i - 1].value;
    ey = std::max(ey, std::abs(c.entries[0].value - opnum::operator_norm(t)));
    const auto f = opnum::svd(t);
    for (std::size_t n = 1; n <= 8; ++n)
      ey = std::max(ey, std::abs(opnum::operator_norm(t - opnum::truncated(f, n - 1)) - c.entries[n - 1].value));
  }
  std::size_t proj_fail = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t rank = 1 + trial % 8;
    const Matrix p = opnum::random_oblique_projection(2 * rank + 4, rank, rng);
    if (!opnum::projection_jump(p, rank, 1e-8).holds) ++proj_fail;
  }
  return {diag_ok && ordered && ey <= 1e-10 && proj_fail == 0,
          std::string("diag ") + (diag_ok ? "exact" : "WRONG") + fmt(", Eckart-Young dev %.3g", ey) +
              fmt(", projection failures %.0f of 50", static_cast<double>(proj_fail))};
}

Outcome haar_democracy() {
  const int g = 10;
  const std::size_t N = std::size_t{1} << g;
  std::vector<StepFn> h;
  h.reserve(N);
  for (std::size_t k = 1; k <= N; ++k) h.push_back(nterm::haar(k, g, 2.0));
  double worst = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i; j < N; ++j)
      worst = std::max(worst, std::abs(inner_product(h[i], h[j]) - (i == j ? 1.0 : 0.0)));
  const auto dict = nterm::Dictionary::haar(g, 2.0);
  std::mt19937_64 rng(99);
  std::vector<std::size_t> all(N);
  std::iota(all.begin(), all.end(), std::size_t{1});
  double dem = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 1 + rng() % 64;
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<std::size_t> a(all.begin(), all.begin() + m);
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<std::size_t> b(all.begin(), all.begin() + m);
    dem = std::max(dem, std::abs(nterm::democracy_ratio(dict, a, b) - 1.0));
  }
  return {worst <= 1e-10 && dem <= 1e-10, fmt("orthonormality dev %.3g, democracy dev %.3g", worst, dem)};
}

}  // namespace

int main() {
  run(1, "orthonormal n-term jump ratio", 1, orthonormal_ratio);
  run(2, "dominating sequence invariants", 10, dominating_sequence);
  run(3, "quantization collapse", 30, quantization_collapse);
  run(4, "equioscillation witness", 60, equioscillation);
  run(5, "interleaved cone separation", 30, separation);
  run(6, "prescribed-error reconstruction", 5, bernstein);
  run(7, "approximation numbers", 10, approximation_numbers);
  run(8, "Haar orthonormality and democracy", 60, haar_democracy);
  std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
