#include "llab/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "llab/io.hpp"
#include "llab/opnum.hpp"
#include "llab/random.hpp"

namespace llab::certify {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Witnessed: return "WITNESSED";
    case Verdict::Collapsed: return "COLLAPSED";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

namespace {

RatioCheck ratio_check(const SchemeDescriptor& scheme, const Witness& w) {
  RatioCheck r;
  r.n = w.n;
  r.k = scheme.jump(w.n);
  const ErrorValue en = scheme.error(w.x, r.n);
  const ErrorValue ek = scheme.error(w.x, r.k);
  r.e_n = en.value;
  r.e_k = ek.value;
  r.kind_n = en.kind;
  r.kind_k = ek.kind;
  if (!(r.e_n > 0.0))
    throw PreconditionError("check_jump: witness " + w.label + " at n = " + std::to_string(w.n) +
                            " lies in the closure of A_n (E = 0)");
  if (!(r.e_k > 0.0))
    throw PreconditionError("check_jump: witness " + w.label + " at n = " + std::to_string(w.n) +
                            " lies in the closure of A_" + std::to_string(r.k) + " (E = 0)");
  r.ratio = r.e_n / r.e_k;
  return r;
}

}  // namespace

JumpCertificate check_jump(const SchemeDescriptor& scheme, const std::vector<Witness>& witnesses,
                           double c_cap, Exec exec) {
  if (!(c_cap > 0.0)) throw PreconditionError("check_jump: c_cap must be positive");
  JumpCertificate cert;
  cert.scheme = scheme.name;
  cert.c_cap = c_cap;
  cert.checks = map_index<RatioCheck>(
      witnesses.size(), [&](std::size_t i) { return ratio_check(scheme, witnesses[i]); }, exec);
  for (const auto& w : witnesses) {
    cert.witness_ns.push_back(w.n);
    cert.witness_labels.push_back(w.label);
  }
  if (witnesses.empty()) {
    cert.notes.push_back("no witnesses supplied");
    return cert;
  }

  bool exact_k = true;
  for (const auto& r : cert.checks) {
    cert.c = std::max(cert.c, r.ratio);
    if (r.kind_k != ErrorKind::Exact) exact_k = false;
  }
  if (!exact_k) cert.notes.push_back("E(x_n, A_K(n)) not exact for some witness; ratios are not certified");
  if (cert.c > c_cap) {
    std::size_t failing = 0;
    for (const auto& r : cert.checks)
      if (r.ratio > c_cap) ++failing;
    cert.notes.push_back(std::to_string(failing) + " of " + std::to_string(cert.checks.size()) +
                         " ratios exceed c_cap = " + io::format_double(c_cap));
  }
  cert.verdict = (exact_k && cert.c <= c_cap) ? Verdict::Witnessed : Verdict::Inconclusive;
  return cert;
}

bool verify_certificate(const JumpCertificate& cert, const SchemeDescriptor& scheme,
                        const std::vector<Witness>& witnesses) {
  if (cert.verdict != Verdict::Witnessed) return false;
  if (witnesses.size() != cert.checks.size() || witnesses.empty()) return false;
  for (std::size_t i = 0; i < witnesses.size(); ++i) {
    const auto& w = witnesses[i];
    if (w.n != cert.witness_ns[i]) return false;
    const std::size_t k = scheme.jump(w.n);
    const double en = scheme.error(w.x, w.n).value;
    const double ek = scheme.error(w.x, k).value;
    if (!(ek > 0.0) || !(en <= cert.c * ek * (1.0 + 4 * std::numeric_limits<double>::epsilon())))
      return false;
    if (en != cert.checks[i].e_n || ek != cert.checks[i].e_k) return false;
  }
  return true;
}

double element_norm(const Element& x) {
  if (const auto* s = std::get_if<RealSeq>(&x)) return norm(*s);
  if (const auto* f = std::get_if<StepFn>(&x)) return lp_norm(*f);
  return opnum::operator_norm(std::get<Matrix>(x));
}

JumpCertificate collapse_detect(const SchemeDescriptor& scheme, const std::vector<Element>& samples,
                                std::size_t n_max, double envelope_cap, Exec exec) {
  if (n_max < 1) throw PreconditionError("collapse_detect: n_max must be >= 1");
  JumpCertificate cert;
  cert.scheme = scheme.name;

  std::vector<const Element*> live;
  std::vector<double> norms;
  for (const auto& x : samples) {
    const double nx = element_norm(x);
    if (nx > 0.0) {
      live.push_back(&x);
      norms.push_back(nx);
    }
  }
  if (live.empty()) {
    cert.notes.push_back("degenerate sample set: every sample is zero");
    return cert;
  }

  struct Cell {
    double scaled = 0.0;  // n E(x, A_n) / ||x||
    double ratio = std::numeric_limits<double>::infinity();
    bool used = false;
  };
  const std::size_t cells = live.size() * n_max;
  std::vector<Cell> grid(cells);
  for_each_index(
      cells,
      [&](std::size_t idx) {
        const std::size_t s = idx / n_max;
        const std::size_t n = idx % n_max + 1;
        const ErrorValue en = scheme.error(*live[s], n);
        if (en.kind != ErrorKind::Exact)
          throw PreconditionError("collapse_detect: scheme " + scheme.name + " reports non-exact errors");
        Cell c;
        c.scaled = static_cast<double>(n) * en.value / norms[s];
        const double ek = scheme.error(*live[s], scheme.jump(n)).value;
        if (ek > 0.0) {
          c.ratio = en.value / ek;
          c.used = true;
        }
        grid[idx] = c;
      },
      exec);

  for (std::size_t n = 1; n <= n_max; ++n) {
    ProfileEntry pe;
    pe.n = n;
    pe.min_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < live.size(); ++s) {
      const Cell& c = grid[s * n_max + n - 1];
      cert.envelope_constant = std::max(cert.envelope_constant, c.scaled);
      if (c.used) {
        pe.min_ratio = std::min(pe.min_ratio, c.ratio);
        ++pe.used;
      }
    }
    cert.min_ratio_profile.push_back(pe);
  }
  cert.envelope = "n*E(x,A_n) <= C*||x|| for n <= " + std::to_string(n_max) + " over " +
                  std::to_string(live.size()) + " samples, C = " + io::format_double(cert.envelope_constant);
  cert.verdict = cert.envelope_constant <= envelope_cap ? Verdict::Collapsed : Verdict::Inconclusive;
  if (cert.verdict == Verdict::Collapsed)
    cert.notes.push_back("empirical envelope over the samples only");
  else
    cert.notes.push_back("envelope constant exceeds cap " + io::format_double(envelope_cap));
  return cert;
}

double distance_to_pi(const RealSeq& x, std::size_t m) { return tail_norm(RealSeq{x.values, NormTag::Sup}, m); }

double distance_to_b(const RealSeq& x, std::size_t m) {
  if (m < 2) throw PreconditionError("distance_to_b: m must be >= 2");
  const double tail = distance_to_pi(x, m);
  double s = 0.0;
  for (std::size_t k = 1; k < m; ++k) s = std::max(s, std::abs(x.at(k)));
  // Lowering |y_m| by d and raising the largest |y_k| by t costs max(d, t)
  // subject to |x_m| - d <= (S + t)/m; the optimum has d = t.
  const double md = static_cast<double>(m);
  const double excess = std::abs(x.at(m)) - s / md;
  const double core = excess > 0.0 ? excess * md / (md + 1.0) : 0.0;
  return std::max(tail, core);
}

SchemeDescriptor interleaved_scheme() {
  SchemeDescriptor s;
  s.name = "interleaved";
  s.jump_map = [](std::size_t n) { return n + 1; };
  s.error_fn = [](const Element& x, std::size_t n) -> ErrorValue {
    const auto* seq = std::get_if<RealSeq>(&x);
    if (!seq || seq->tag != NormTag::Sup)
      throw PreconditionError("interleaved scheme expects a c_0 sequence");
    if (n == 0) return {norm(*seq), ErrorKind::Exact};
    if (n % 2 == 1) return {distance_to_pi(*seq, (n + 1) / 2), ErrorKind::Exact};
    return {distance_to_b(*seq, n / 2 + 1), ErrorKind::Exact};
  };
  return s;
}

std::vector<Witness> interleaved_witnesses(const std::vector<std::size_t>& ns) {
  std::vector<Witness> out;
  for (std::size_t n : ns) {
    RealSeq e{std::vector<double>(n + 3, 0.0), NormTag::Sup};
    e.values.back() = 1.0;
    out.push_back({n, e, "e_" + std::to_string(n + 3)});
  }
  return out;
}

double sampled_gap(std::size_t n, std::size_t samples, std::uint64_t seed, Exec exec) {
  if (n < 1) throw PreconditionError("sampled_gap: n must be >= 1");
  const std::uint64_t base = splitmix64(seed ^ (0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(n)));
  const auto dists = map_index<double>(
      samples,
      [&](std::size_t i) {
        auto rng = substream(base, i);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        RealSeq y{std::vector<double>(n + 1), NormTag::Sup};
        double s = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          y.values[k] = u(rng);
          s = std::max(s, std::abs(y.values[k]));
        }
        if (s == 0.0) return 0.0;
        for (std::size_t k = 0; k < n; ++k) y.values[k] /= s;
        // On the unit sphere of the cone: |y_{n+1}| <= 1/(n+1).
        y.values[n] = u(rng) / static_cast<double>(n + 1);
        return distance_to_pi(y, n);
      },
      exec);
  return dists.empty() ? 0.0 : *std::max_element(dists.begin(), dists.end());
}

BrudnyiGap brudnyi_gap_interleaved(std::size_t n_max, std::size_t samples, std::uint64_t seed, Exec exec) {
  if (n_max < 1) throw PreconditionError("brudnyi_gap_interleaved: n_max must be >= 1");
  BrudnyiGap g;
  g.infimum_estimate = std::numeric_limits<double>::infinity();
  for (std::size_t n = 1; n <= n_max; ++n) {
    const double exact = 1.0 / static_cast<double>(n + 1);
    g.per_n.push_back({n, exact, ErrorKind::Exact});
    g.infimum_estimate = std::min(g.infimum_estimate, exact);
    if (samples > 0) g.per_n.push_back({n, sampled_gap(n, samples, seed, exec), ErrorKind::Sampled});
  }
  return g;
}

}  // namespace llab::certify
