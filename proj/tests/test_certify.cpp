#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "llab/certify.hpp"
#include "llab/lethargy.hpp"
#include "llab/zoo.hpp"

using namespace llab;
using namespace llab::certify;

namespace {

RealSeq c0(std::vector<double> v) { return RealSeq{std::move(v), NormTag::Sup}; }

// Distance to B_m by bisection on t: feasible when the tail fits and some
// coordinate j < m, pushed outward by t, lets |y_m| = max(0, |x_m| - t) fit.
double brute_distance_to_b(const RealSeq& x, std::size_t m) {
  double tail = 0.0;
  for (std::size_t k = m + 1; k <= x.size(); ++k) tail = std::max(tail, std::abs(x.at(k)));
  double best = INFINITY;
  const double md = static_cast<double>(m);
  for (std::size_t j = 1; j < m; ++j)
    for (double s : {-1.0, 1.0}) {
      auto feasible = [&](double t) {
        return t >= tail && std::max(0.0, std::abs(x.at(m)) - t) <= std::abs(x.at(j) + s * t) / md;
      };
      double lo = 0.0, hi = 2.0 * (norm(x) + 1.0);
      if (feasible(lo)) hi = lo;
      for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        const double mid = 0.5 * (lo + hi);
        (feasible(mid) ? hi : lo) = mid;
      }
      best = std::min(best, hi);
    }
  return best;
}

bool in_b(const RealSeq& y, std::size_t m) {
  double s = 0.0;
  for (std::size_t k = 1; k < m; ++k) s = std::max(s, std::abs(y.at(k)));
  for (std::size_t k = m + 1; k <= y.size(); ++k)
    if (y.at(k) != 0.0) return false;
  return std::abs(y.at(m)) <= s / static_cast<double>(m);
}

double sup_dist(const RealSeq& a, const RealSeq& b) {
  double d = 0.0;
  for (std::size_t k = 1; k <= std::max(a.size(), b.size()); ++k) d = std::max(d, std::abs(a.at(k) - b.at(k)));
  return d;
}

}  // namespace

TEST_CASE("jump checks on the witness families") {
  zoo::FamilyOptions opt;
  opt.grid_log2 = 12;

  const auto nt = check_jump(zoo::scheme_by_name("nterm"), zoo::witness_family("nterm", 16, opt), 2.0);
  CHECK(nt.verdict == Verdict::Witnessed);
  CHECK(std::abs(nt.c - std::sqrt(2.0)) <= 1e-12);
  CHECK(nt.checks.size() == 16);
  CHECK(verify_certificate(nt, zoo::scheme_by_name("nterm"), zoo::witness_family("nterm", 16, opt)));

  const auto iw = interleaved_witnesses({1, 2, 3, 4, 5, 6});
  const auto il = check_jump(interleaved_scheme(), iw, 2.0);
  CHECK(il.verdict == Verdict::Witnessed);
  CHECK(il.c == 1.0);

  const auto fk = check_jump(zoo::scheme_by_name("freeknot"), zoo::witness_family("freeknot", 2, opt), 2.0);
  CHECK(fk.verdict == Verdict::Witnessed);
  CHECK(fk.c <= 1.0 + 1e-2);

  const auto op = check_jump(zoo::scheme_by_name("opnum"), zoo::witness_family("opnum", 4, opt), 2.0);
  CHECK(op.verdict == Verdict::Witnessed);
  CHECK(op.c <= 2.0);

  const auto co = check_jump(zoo::scheme_by_name("coordinate"), zoo::witness_family("coordinate", 8, opt), 2.0);
  CHECK(co.verdict == Verdict::Witnessed);
  CHECK(co.c == 1.0);

  // Quantization: no bounded ratio on its witnesses.
  const auto qz = check_jump(zoo::scheme_by_name("quantize"), zoo::witness_family("quantize", 4, opt), 2.0);
  CHECK(qz.verdict == Verdict::Inconclusive);
  CHECK(qz.c > 2.0);

  // A cap below the true constant leaves the verdict open.
  CHECK(check_jump(zoo::scheme_by_name("nterm"), zoo::witness_family("nterm", 4, opt), 1.2).verdict ==
        Verdict::Inconclusive);
  const auto none = check_jump(interleaved_scheme(), {}, 2.0);
  CHECK(none.verdict == Verdict::Inconclusive);
  CHECK(!none.notes.empty());
}

TEST_CASE("zero errors are rejected and tampering is caught") {
  std::vector<Witness> zero{{1, c0({1.0}), "e_1"}};
  CHECK_THROWS_AS(check_jump(interleaved_scheme(), zero, 2.0), PreconditionError);

  const auto iw = interleaved_witnesses({1, 2, 3});
  auto cert = check_jump(interleaved_scheme(), iw, 2.0);
  CHECK(verify_certificate(cert, interleaved_scheme(), iw));
  cert.checks[1].e_k *= 1.5;
  CHECK(!verify_certificate(cert, interleaved_scheme(), iw));

  const auto ser = check_jump(interleaved_scheme(), iw, 2.0, Exec::Serial);
  const auto par = check_jump(interleaved_scheme(), iw, 2.0, Exec::Parallel);
  CHECK(ser.c == par.c);
}

TEST_CASE("collapse detection") {
  zoo::FamilyOptions opt;
  opt.seed = 3;
  const auto q = collapse_detect(zoo::scheme_by_name("quantize"), zoo::sample_family("quantize", opt), 16);
  CHECK(q.verdict == Verdict::Collapsed);
  CHECK(q.envelope_constant <= 2.0);
  CHECK(q.envelope.has_value());
  CHECK(q.min_ratio_profile.size() == 16);

  // Bernstein elements with slowly decaying errors do not collapse.
  std::vector<Element> slow;
  for (int s = 0; s < 5; ++s) {
    std::vector<double> eps(80);
    for (std::size_t n = 0; n < eps.size(); ++n) eps[n] = (1.0 + 0.1 * s) / std::sqrt(n + 1.0);
    slow.push_back(lethargy::bernstein_c0(eps));
  }
  const auto cc = collapse_detect(lethargy::coordinate_chain_scheme(), slow, 32);
  CHECK(cc.verdict != Verdict::Collapsed);
  CHECK(cc.envelope_constant > 2.0);

  const auto z = collapse_detect(zoo::scheme_by_name("quantize"), {c0({0, 0}), c0({})}, 8);
  CHECK(z.verdict == Verdict::Inconclusive);
  CHECK(!z.notes.empty());

  const auto samples = zoo::sample_family("quantize", opt);
  const auto a = collapse_detect(zoo::scheme_by_name("quantize"), samples, 8, 2.0, Exec::Serial);
  const auto b = collapse_detect(zoo::scheme_by_name("quantize"), samples, 8, 2.0, Exec::Parallel);
  CHECK(a.envelope_constant == b.envelope_constant);
  CHECK_THROWS_AS(collapse_detect(zoo::scheme_by_name("quantize"), samples, 0), PreconditionError);
}

TEST_CASE("interleaved distances match a bisection oracle") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<double> v(1 + rng() % 6);
    for (auto& x : v) x = u(rng);
    const RealSeq x = c0(v);
    for (std::size_t m = 2; m <= 5; ++m) {
      const double d = distance_to_b(x, m);
      CHECK(std::abs(d - brute_distance_to_b(x, m)) <= 1e-9);
      // Any member of B_m is at least d away.
      for (int probe = 0; probe < 20; ++probe) {
        RealSeq y{std::vector<double>(m), NormTag::Sup};
        double s = 0.0;
        for (std::size_t k = 0; k + 1 < m; ++k) {
          y.values[k] = x.at(k + 1) + 0.3 * u(rng);
          s = std::max(s, std::abs(y.values[k]));
        }
        y.values[m - 1] = std::clamp(x.at(m), -s / m, s / m);
        REQUIRE(in_b(y, m));
        CHECK(d <= sup_dist(x, y) + 1e-12);
      }
    }
  }
  const RealSeq e5 = c0({0, 0, 0, 0, 1});
  const auto s = interleaved_scheme();
  CHECK(s.jump(4) == 5);
  CHECK(s.error(e5, 0).value == 1.0);
  CHECK(s.error(e5, 3).value == 1.0);   // Pi_2
  CHECK(s.error(e5, 4).value == 1.0);   // B_3
  CHECK(s.error(e5, 8).value == doctest::Approx(5.0 / 6.0).epsilon(1e-15));  // B_5
  CHECK(s.error(e5, 9).value == 0.0);   // Pi_5
  CHECK_THROWS_AS(distance_to_b(e5, 1), PreconditionError);
  CHECK_THROWS_AS(s.error(RealSeq{{1}, NormTag::L2}, 1), SchemeError);
}

TEST_CASE("gap between the cones") {
  const auto g = brudnyi_gap_interleaved(12);
  REQUIRE(g.per_n.size() == 12);
  CHECK(g.per_n[0].value == 0.5);
  CHECK(g.per_n[8].value == 0.1);
  CHECK(g.infimum_estimate == 1.0 / 13.0);

  const auto sg = brudnyi_gap_interleaved(6, 10000, 5);
  REQUIRE(sg.per_n.size() == 12);
  for (std::size_t i = 0; i < sg.per_n.size(); i += 2) {
    const auto& exact = sg.per_n[i];
    const auto& sampled = sg.per_n[i + 1];
    CHECK(sampled.kind == ErrorKind::Sampled);
    CHECK(sampled.value <= exact.value);
    CHECK(std::abs(sampled.value - exact.value) <= 0.05 * exact.value);
  }
  CHECK(sampled_gap(4, 2000, 9, Exec::Serial) == sampled_gap(4, 2000, 9, Exec::Parallel));
  CHECK_THROWS_AS(sampled_gap(0, 10, 1), PreconditionError);
}
