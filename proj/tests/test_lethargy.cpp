#include <doctest.h>

#include <cmath>
#include <random>

#include "llab/lethargy.hpp"

using namespace llab;
using namespace llab::lethargy;

namespace {

std::vector<std::size_t> tabulate(const JumpFn& h, std::size_t N) {
  std::vector<std::size_t> v;
  for (std::size_t n = 0; n <= N; ++n) v.push_back(h(n));
  return v;
}

JumpFn fn(std::size_t (*f)(std::size_t), const char* name) { return JumpFn(f, name); }

}  // namespace

TEST_CASE("normalize_jump") {
  CHECK(tabulate(normalize_jump(fn([](std::size_t n) { return n; }, "id"), 4), 4) ==
        std::vector<std::size_t>{0, 2, 4, 6, 8});
  const auto succ = normalize_jump(fn([](std::size_t n) { return n + 1; }, "succ"), 10);
  for (std::size_t n = 0; n <= 10; ++n) CHECK(succ(n) == 2 * n + 1);
  const auto bump = normalize_jump(fn([](std::size_t n) { return n == 0 ? std::size_t{5} : n; }, "bump"), 5);
  for (std::size_t n = 0; n <= 5; ++n) CHECK(bump(n) == 5 + n);
  CHECK_THROWS_AS(bump(6), PreconditionError);
  CHECK_THROWS_AS(normalize_jump(fn([](std::size_t n) { return n / 2; }, "half"), 4), PreconditionError);
}

TEST_CASE("build_a block structure") {
  const auto a = build_a(fn([](std::size_t n) { return 2 * n + 1; }, "2n+1"), 20);
  for (std::size_t n = 0; n <= 20; ++n) {
    const double expect = n < 3 ? 1.0 : n < 7 ? 0.5 : n < 15 ? 0.25 : 0.125;
    CHECK(a[n] == expect);
  }
  const auto b = build_a(fn([](std::size_t n) { return n + 2; }, "n+2"), 8);
  CHECK(b == std::vector<double>{1, 1, 1, 0.5, 0.5, 0.25, 0.25, 0.125, 0.125});

  // a at block starts and the doubling bound a_n <= 2 a_{h*(n)}.
  const auto h = fn([](std::size_t n) { return 3 * n + 2; }, "3n+2");
  const std::size_t N = 2000;
  const auto c = build_a(h, N);
  std::size_t start = 1;
  for (int s = 0; start <= N; ++s, start = h(start)) CHECK(c[start] == std::ldexp(1.0, -s));
  for (std::size_t n = 0; n <= N && h(n) <= N; ++n) CHECK(c[n] <= 2 * c[h(n)]);

  CHECK_THROWS_AS(build_a(fn([](std::size_t n) { return n; }, "id"), 4), PreconditionError);
  CHECK_THROWS_AS(build_a(fn([](std::size_t) { return std::size_t{3}; }, "const"), 4), PreconditionError);
}

TEST_CASE("build_xi examples") {
  std::vector<double> geo(101);
  for (std::size_t n = 0; n <= 100; ++n) geo[n] = std::ldexp(1.0, -static_cast<int>(n));
  const auto s = build_xi(geo, fn([](std::size_t n) { return n + 1; }, "succ"));
  for (std::size_t n = 0; n < 100; ++n) {
    CHECK(s.xi[n] >= geo[n]);
    CHECK(s.xi[n] <= 2 * s.xi[n + 1]);
  }
  CHECK(check_invariants(s).pass());

  const double delta = 1e-3;
  const std::vector<double> drop{1, 1, delta, delta, delta, delta};
  for (auto h : {fn([](std::size_t n) { return n; }, "id"), fn([](std::size_t n) { return n * n; }, "sq")}) {
    const auto d = build_xi(drop, h);
    for (std::size_t n = 0; n < drop.size(); ++n) CHECK(d.xi[n] >= drop[n]);
    CHECK(check_invariants(d).pass());
  }

  const std::size_t N = 4000;
  std::vector<double> inv(N + 1);
  for (std::size_t n = 0; n <= N; ++n) inv[n] = 1.0 / std::pow(static_cast<double>(n + 1), 2);
  const auto q = build_xi(inv, fn([](std::size_t n) { return 2 * n; }, "double"));
  for (std::size_t n = 0; n <= N / 2; ++n) CHECK(q.xi[n] <= 2 * q.xi[2 * n]);
  const auto rep = check_invariants(q);
  CHECK(rep.pass());
  CHECK(rep.jump_pairs_checked == N / 2 + 1);
  CHECK(q.xi[N] < q.xi[0] / 2);  // empirical decay on a long prefix
}

TEST_CASE("build_xi prefix handling and rejection") {
  const auto h = fn([](std::size_t n) { return 2 * n; }, "double");
  const auto ext = build_xi({1.0, 0.5}, h, 5);
  CHECK(ext.eps_extended == 4);
  CHECK(ext.eps == std::vector<double>{1, 0.5, 0.25, 0.125, 0.0625, 0.03125});
  CHECK(check_invariants(ext).pass());
  const auto cut = build_xi({1.0, 0.5, 0.25, 0.1}, h, 2);
  CHECK(cut.xi.size() == 3);
  CHECK(cut.eps_extended == 0);

  CHECK_THROWS_AS(build_xi({1.0, 2.0}, h), PreconditionError);
  CHECK_THROWS_AS(build_xi({1.0, 0.0}, h), PreconditionError);
  CHECK_THROWS_AS(build_xi({1.0, NAN}, h), PreconditionError);
  CHECK_THROWS_AS(build_xi({}, h), PreconditionError);
  CHECK_THROWS_AS(build_xi({1.0}, fn([](std::size_t n) { return n == 3 ? std::size_t{1} : n; }, "bad"), 5),
                  PreconditionError);
}

TEST_CASE("check_invariants detects violations") {
  DominatedSeq s;
  s.h = fn([](std::size_t n) { return n + 1; }, "succ");
  s.eps = {1, 0.5, 0.25};
  s.xi = {1, 0.4, 0.5};
  const auto r = check_invariants(s);
  CHECK(r.domination_failures == 1);
  CHECK(r.monotonicity_failures == 1);
  CHECK(r.jump_failures == 1);  // xi_0 = 1 > 2 * 0.4
  CHECK_FALSE(r.pass());
}

TEST_CASE("randomized dominating-sequence invariants") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t N = 2000;
    std::vector<double> eps(N + 1);
    std::uniform_real_distribution<double> ratio(0.5, 1.0);
    eps[0] = 1.0 + 10 * ratio(rng);
    for (std::size_t n = 1; n <= N; ++n) eps[n] = eps[n - 1] * (rng() % 3 == 0 ? ratio(rng) : 1.0);
    const std::size_t a = 1 + rng() % 3, b = rng() % 5;
    const auto h = JumpFn([a, b](std::size_t n) { return a * n + b; }, "affine");
    const auto rep = check_invariants(build_xi(eps, h));
    CHECK(rep.pass());
  }
}

TEST_CASE("Bernstein constructors reproduce eps exactly") {
  const auto x = bernstein_c0({1, 0.5, 0.25});
  CHECK(x.values == std::vector<double>{1, 0.5, 0.25});
  CHECK(tail_norm(x, 1) == 0.5);
  const auto ones = bernstein_c0({1, 1, 1});
  for (std::size_t n = 0; n < 3; ++n) CHECK(tail_norm(ones, n) == 1.0);

  const auto y = bernstein_l2({std::sqrt(2.0), 1, 0});
  REQUIRE(y.size() == 2);
  CHECK(y.values[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(y.values[1] == 1.0);
  CHECK(tail_norm(y, 1) == 1.0);
  const auto z = bernstein_l2({1, 0});
  CHECK(z.values == std::vector<double>{1});
  CHECK(tail_norm(z, 0) == 1.0);

  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> eps(1 + rng() % 60);
    eps[0] = 1 + u(rng);
    for (std::size_t n = 1; n < eps.size(); ++n) eps[n] = eps[n - 1] * (rng() % 4 == 0 ? 1.0 : u(rng));
    const auto c0 = bernstein_c0(eps);
    const auto l2 = bernstein_l2(eps);
    for (std::size_t n = 0; n < eps.size(); ++n) {
      CHECK(tail_norm(c0, n) == eps[n]);
      CHECK(std::abs(tail_norm(l2, n) - eps[n]) <= 1e-12);
    }
  }
  CHECK_THROWS_AS(bernstein_c0({1, 2}), PreconditionError);
  CHECK_THROWS_AS(bernstein_l2({0.5, 1}), PreconditionError);
  CHECK_THROWS_AS(bernstein_l2({-1}), PreconditionError);
}

TEST_CASE("coordinate chain scheme") {
  const auto s = coordinate_chain_scheme();
  CHECK(s.jump(5) == 5);
  const Element x = bernstein_c0({1, 0.5, 0.25});
  const auto c = error_curve(s, x, 3);
  CHECK(c.entries[1].value == 0.5);
  CHECK(c.entries[3].value == 0.0);
  CHECK_THROWS_AS(s.error(Matrix(1, 1), 0), SchemeError);
}
