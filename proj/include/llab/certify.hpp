#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "llab/core.hpp"

namespace llab::certify {

enum class Verdict { Witnessed, Collapsed, Inconclusive };

const char* to_string(Verdict v);

struct Witness {
  std::size_t n = 0;
  Element x;
  std::string label;
};

struct RatioCheck {
  std::size_t n = 0;
  std::size_t k = 0;  ///< K(n)
  double e_n = 0.0;
  double e_k = 0.0;
  ErrorKind kind_n = ErrorKind::Exact;
  ErrorKind kind_k = ErrorKind::Exact;
  double ratio = 0.0;
};

struct ProfileEntry {
  std::size_t n = 0;
  double min_ratio = 0.0;  ///< smallest E(x,A_n)/E(x,A_K(n)) over the samples
  std::size_t used = 0;    ///< samples with E(x, A_K(n)) > 0
};

struct JumpCertificate {
  std::string scheme;
  Verdict verdict = Verdict::Inconclusive;
  double c = 0.0;
  double c_cap = 0.0;
  std::vector<std::size_t> witness_ns;
  std::vector<std::string> witness_labels;
  std::vector<RatioCheck> checks;
  std::optional<std::string> envelope;
  double envelope_constant = 0.0;
  std::vector<ProfileEntry> min_ratio_profile;
  std::vector<std::string> notes;
};

/// Tests E(x_n, A_n) <= c E(x_n, A_K(n)) on every witness. WITNESSED with
/// c = max ratio when c <= c_cap and every E(x_n, A_K(n)) is exact.
/// Throws PreconditionError when a witness has E(x_n, A_n) = 0 or
/// E(x_n, A_K(n)) = 0.
JumpCertificate check_jump(const SchemeDescriptor& scheme, const std::vector<Witness>& witnesses,
                           double c_cap, Exec exec = Exec::Parallel);

/// Recomputes every ratio of a WITNESSED certificate from the scheme. False if
/// any value differs or exceeds c.
bool verify_certificate(const JumpCertificate& cert, const SchemeDescriptor& scheme,
                        const std::vector<Witness>& witnesses);

/// Envelope sup_x sup_{n <= n_max} n E(x, A_n) / ||x|| over the nonzero samples,
/// plus the per-n minimum ratio profile. COLLAPSED when the envelope constant
/// is <= envelope_cap; zero-only sample sets are INCONCLUSIVE.
JumpCertificate collapse_detect(const SchemeDescriptor& scheme, const std::vector<Element>& samples,
                                std::size_t n_max, double envelope_cap = 2.0,
                                Exec exec = Exec::Parallel);

/// Sup / L^p / operator norm, by element type.
double element_norm(const Element& x);

// ---- interleaved B / Pi scheme on c_0 ----

/// sup_{k>m} |x_k|.
double distance_to_pi(const RealSeq& x, std::size_t m);

/// Distance to B_m = {y : |y_m| <= max_{k<m} |y_k| / m, y_k = 0 for k > m},
/// m >= 2.
double distance_to_b(const RealSeq& x, std::size_t m);

/// A_0 = {0}, A_{2m-1} = Pi_m, A_{2m} = B_{m+1}; K(n) = n + 1.
SchemeDescriptor interleaved_scheme();

/// Unit vectors e_{n+3}, n in ns.
std::vector<Witness> interleaved_witnesses(const std::vector<std::size_t>& ns);

struct GapEntry {
  std::size_t n = 0;
  double value = 0.0;
  ErrorKind kind = ErrorKind::Exact;
};

struct BrudnyiGap {
  std::vector<GapEntry> per_n;
  double infimum_estimate = 0.0;
};

/// dist(B_{n+1} ∩ S, Pi_n) = 1/(n+1) for n = 1..n_max. When samples > 0 a
/// SAMPLED entry follows each EXACT one.
BrudnyiGap brudnyi_gap_interleaved(std::size_t n_max, std::size_t samples = 0, std::uint64_t seed = 0,
                                   Exec exec = Exec::Parallel);

/// Random search over the unit sphere of B_{n+1}: max of the distance to Pi_n.
double sampled_gap(std::size_t n, std::size_t samples, std::uint64_t seed, Exec exec = Exec::Parallel);

}  // namespace llab::certify
