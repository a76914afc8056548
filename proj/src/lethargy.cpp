#include "llab/lethargy.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

namespace llab::lethargy {

JumpFn::JumpFn(std::function<std::size_t(std::size_t)> h, std::string name)
    : fn_(std::move(h)), name_(std::move(name)) {}

JumpFn JumpFn::table(std::vector<std::size_t> values, std::string name) {
  auto shared = std::make_shared<const std::vector<std::size_t>>(std::move(values));
  auto label = name;
  return JumpFn(
      [shared, label](std::size_t n) {
        if (n >= shared->size())
          throw PreconditionError("jump map '" + label + "' is tabulated on 0.." +
                                  std::to_string(shared->size() - 1) + " only, asked for " +
                                  std::to_string(n));
        return (*shared)[n];
      },
      std::move(name));
}

JumpFn normalize_jump(const JumpFn& h, std::size_t N) {
  std::vector<std::size_t> hstar(N + 1);
  std::size_t running_max = 0;
  for (std::size_t n = 0; n <= N; ++n) {
    const std::size_t hn = h(n);
    if (hn < n)
      throw PreconditionError("jump map violates h(n) >= n at n=" + std::to_string(n) +
                              " (h(n)=" + std::to_string(hn) + ")");
    running_max = std::max(running_max, hn);
    hstar[n] = running_max + n;
  }
  return JumpFn::table(std::move(hstar), h.name() + "*");
}

std::vector<double> build_a(const JumpFn& hstar, std::size_t N) {
  for (std::size_t n = 1; n <= N; ++n)
    if (hstar(n) <= hstar(n - 1))
      throw PreconditionError("build_a: h* must be strictly increasing");
  if (N >= 1 && hstar(1) <= 1) throw PreconditionError("build_a: need h*(1) > 1");

  std::vector<double> a(N + 1, 1.0);
  int s = 0;
  std::size_t start = 1;
  while (start <= N) {
    const std::size_t next = hstar(start);
    if (next <= start)
      throw PreconditionError("build_a: iterates of h* stalled at " + std::to_string(start));
    const double level = std::ldexp(1.0, -s);
    for (std::size_t n = start; n < next && n <= N; ++n) a[n] = level;
    start = next;
    ++s;
  }
  return a;
}

namespace {

void require_admissible_eps(const std::vector<double>& eps) {
  if (eps.empty()) throw PreconditionError("build_xi: eps is empty");
  for (std::size_t n = 0; n < eps.size(); ++n) {
    if (!(eps[n] > 0.0) || !std::isfinite(eps[n]))
      throw PreconditionError("build_xi: eps must be positive and finite (eps_" +
                              std::to_string(n) + "=" + std::to_string(eps[n]) + ")");
    if (n > 0 && eps[n] > eps[n - 1])
      throw PreconditionError("build_xi: eps must be non-increasing (eps_" + std::to_string(n) +
                              " > eps_" + std::to_string(n - 1) + ")");
  }
}

}  // namespace

DominatedSeq build_xi(const std::vector<double>& eps, const JumpFn& h) {
  require_admissible_eps(eps);
  return build_xi(eps, h, eps.size() - 1);
}

DominatedSeq build_xi(const std::vector<double>& eps_in, const JumpFn& h, std::size_t N) {
  require_admissible_eps(eps_in);
  DominatedSeq out;
  out.h = h;
  out.eps.assign(eps_in.begin(), eps_in.begin() + std::min(eps_in.size(), N + 1));
  while (out.eps.size() < N + 1) {
    out.eps.push_back(out.eps.back() * 0.5);
    ++out.eps_extended;
  }

  out.a = build_a(normalize_jump(h, N), N);
  const auto& a = out.a;
  const auto& eps = out.eps;

  out.xi.resize(N + 1);
  out.xi[0] = std::max(a[0], eps[0]);
  for (std::size_t n = 0; n < N; ++n) {
    const double b_next = std::max(a[n + 1], eps[n + 1]);
    const double step = a[n] - a[n + 1];
    // Descend by the block drop only when the result still dominates b_{n+1};
    // equality descends. Comparing the computed candidate keeps xi >= b
    // under rounding.
    const double candidate = out.xi[n] - step;
    out.xi[n + 1] = candidate >= b_next ? candidate : out.xi[n];
  }
  return out;
}

InvariantReport check_invariants(const DominatedSeq& seq) {
  InvariantReport r;
  const auto& xi = seq.xi;
  const std::size_t N = xi.empty() ? 0 : xi.size() - 1;
  r.checked = xi.size();
  for (std::size_t n = 0; n < xi.size(); ++n) {
    if (!(xi[n] > 0.0)) ++r.positivity_failures;
    if (n < seq.eps.size() && xi[n] < seq.eps[n]) ++r.domination_failures;
    if (n > 0 && xi[n] > xi[n - 1]) ++r.monotonicity_failures;
    const std::size_t hn = seq.h(n);
    if (hn <= N) {
      ++r.jump_pairs_checked;
      if (xi[n] > 2.0 * xi[hn]) ++r.jump_failures;
    }
  }
  return r;
}

namespace {

void require_non_increasing(const std::vector<double>& eps, const char* who) {
  for (std::size_t n = 0; n < eps.size(); ++n) {
    if (!(eps[n] >= 0.0) || !std::isfinite(eps[n]))
      throw PreconditionError(std::string(who) + ": eps must be finite and >= 0");
    if (n > 0 && eps[n] > eps[n - 1])
      throw PreconditionError(std::string(who) + ": eps_" + std::to_string(n) + " > eps_" +
                              std::to_string(n - 1));
  }
}

}  // namespace

RealSeq bernstein_c0(const std::vector<double>& eps) {
  require_non_increasing(eps, "bernstein_c0");
  return RealSeq{eps, NormTag::Sup};
}

RealSeq bernstein_l2(const std::vector<double>& eps) {
  require_non_increasing(eps, "bernstein_l2");
  RealSeq x{std::vector<double>(eps.size()), NormTag::L2};
  for (std::size_t k = 1; k <= eps.size(); ++k) {
    const double hi = eps[k - 1];
    const double lo = k < eps.size() ? eps[k] : 0.0;
    x.values[k - 1] = std::sqrt((hi - lo) * (hi + lo));
  }
  while (!x.values.empty() && x.values.back() == 0.0) x.values.pop_back();
  return x;
}

SchemeDescriptor coordinate_chain_scheme() {
  SchemeDescriptor s;
  s.name = "coordinate-chain";
  s.jump_map = [](std::size_t n) { return n; };
  s.error_fn = [](const Element& x, std::size_t n) -> ErrorValue {
    const auto* seq = std::get_if<RealSeq>(&x);
    if (!seq) throw PreconditionError("coordinate chain expects a sequence element");
    return {tail_norm(*seq, n), ErrorKind::Exact};
  };
  return s;
}

}  // namespace llab::lethargy
