#include "generators.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "llab/io.hpp"
#include "llab/random.hpp"

namespace lab {

namespace {

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  return out;
}

std::size_t parse_count(const std::string& s, const std::string& what) {
  const double v = llab::io::parse_double(s);
  if (!(v >= 0.0) || v != std::floor(v) || v > 1e9)
    throw llab::PreconditionError(what + ": expected a non-negative integer, got '" + s + "'");
  return static_cast<std::size_t>(v);
}

}  // namespace

std::vector<double> make_eps(const std::string& spec, std::size_t N) {
  std::vector<double> eps(N + 1);
  if (starts_with(spec, "geometric:")) {
    const double r = llab::io::parse_double(spec.substr(10));
    if (!(r > 0.0 && r <= 1.0)) throw llab::PreconditionError("geometric:r needs 0 < r <= 1");
    for (std::size_t n = 0; n <= N; ++n) eps[n] = std::pow(r, static_cast<double>(n));
  } else if (spec == "inverse-square") {
    for (std::size_t n = 0; n <= N; ++n) eps[n] = 1.0 / std::pow(static_cast<double>(n + 1), 2);
  } else if (spec == "harmonic") {
    for (std::size_t n = 0; n <= N; ++n) eps[n] = 1.0 / static_cast<double>(n + 1);
  } else {
    eps = llab::io::values_from_csv(llab::io::read_file(spec));
  }
  return eps;
}

llab::lethargy::JumpFn make_jump(const std::string& spec) {
  using llab::lethargy::JumpFn;
  if (spec == "identity") return JumpFn([](std::size_t n) { return n; }, spec);
  if (spec == "succ") return JumpFn([](std::size_t n) { return n + 1; }, spec);
  if (spec == "double") return JumpFn([](std::size_t n) { return 2 * n; }, spec);
  if (spec == "square") return JumpFn([](std::size_t n) { return n * n; }, spec);
  throw llab::PreconditionError("unknown jump map '" + spec + "' (identity, succ, double, square)");
}

std::function<double(double)> make_function(const std::string& spec) {
  if (spec == "identity") return [](double t) { return t; };
  if (starts_with(spec, "sin:")) {
    const double m = llab::io::parse_double(spec.substr(4));
    return [m](double t) { return std::sin(m * std::numbers::pi * t); };
  }
  throw llab::PreconditionError("unknown function '" + spec + "' (identity, sin:M, or a CSV file)");
}

llab::StepFn make_step(const std::string& spec, int grid_log2, double p) {
  if (spec == "identity" || starts_with(spec, "sin:"))
    return llab::sample_midpoints(make_function(spec), grid_log2, p);
  auto cells = llab::io::values_from_csv(llab::io::read_file(spec));
  int g = 0;
  while ((std::size_t{1} << g) < cells.size()) ++g;
  return llab::StepFn(g, std::move(cells), p);
}

std::vector<double> make_values(const std::string& spec, std::uint64_t seed) {
  if (starts_with(spec, "uniform:")) {
    const std::size_t n = parse_count(spec.substr(8), "uniform:N");
    auto rng = llab::substream(seed, 0);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> v(n);
    for (auto& x : v) x = u(rng);
    return v;
  }
  if (starts_with(spec, "geometric:")) {
    const auto parts = split(spec, ':');
    if (parts.size() != 3) throw llab::PreconditionError("expected geometric:r:N");
    const double r = llab::io::parse_double(parts[1]);
    const std::size_t n = parse_count(parts[2], "geometric:r:N");
    std::vector<double> v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = std::pow(r, static_cast<double>(k));
    return v;
  }
  return llab::io::values_from_csv(llab::io::read_file(spec));
}

}  // namespace lab
