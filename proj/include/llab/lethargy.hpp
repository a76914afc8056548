#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "llab/core.hpp"

namespace llab::lethargy {

/// A map h: N -> N, given as a closure or as a finite table.
class JumpFn {
 public:
  JumpFn() = default;
  JumpFn(std::function<std::size_t(std::size_t)> h, std::string name);
  /// h(n) = values[n]; evaluating past the table is a PreconditionError.
  static JumpFn table(std::vector<std::size_t> values, std::string name);

  std::size_t operator()(std::size_t n) const { return fn_(n); }
  const std::string& name() const { return name_; }

 private:
  std::function<std::size_t(std::size_t)> fn_;
  std::string name_;
};

/// h*(n) = max{h(0), ..., h(n)} + n on 0..N. h* is strictly increasing,
/// h*(1) > 1 and h* >= h. Rejects any h with h(n) < n.
JumpFn normalize_jump(const JumpFn& h, std::size_t N);

/// Block sequence a_0..a_N for a strictly increasing h* with h*(1) > 1:
/// a_0 = a_1 = 1 and a_n = 2^-s on [h*^s(1), h*^{s+1}(1) - 1].
std::vector<double> build_a(const JumpFn& hstar, std::size_t N);

struct DominatedSeq {
  std::vector<double> xi;   ///< xi_0..xi_N
  std::vector<double> eps;  ///< the eps actually used, including any extension
  std::vector<double> a;    ///< block sequence the recursion descends along
  JumpFn h;
  /// Number of eps entries appended past the supplied prefix (each half of
  /// the previous one).
  std::size_t eps_extended = 0;
};

/// Runs the dominating-sequence recursion on eps_0..eps_N:
/// xi_0 = b_0, and xi_{n+1} = xi_n - (a_n - a_{n+1}) when that stays >= b_{n+1},
/// else xi_n, where b_n = max(a_n, eps_n) and a comes from normalize_jump(h).
/// eps must be positive and non-increasing.
DominatedSeq build_xi(const std::vector<double>& eps, const JumpFn& h);
/// Same, on indices 0..N; eps is truncated, or extended geometrically with
/// ratio 1/2 when shorter than N+1.
DominatedSeq build_xi(const std::vector<double>& eps, const JumpFn& h, std::size_t N);

struct InvariantReport {
  std::size_t checked = 0;
  std::size_t domination_failures = 0;    // xi_n < eps_n
  std::size_t jump_failures = 0;          // xi_n > 2 xi_{h(n)}, h(n) <= N
  std::size_t monotonicity_failures = 0;  // xi_{n+1} > xi_n
  std::size_t positivity_failures = 0;    // xi_n <= 0
  std::size_t jump_pairs_checked = 0;

  bool pass() const {
    return domination_failures + jump_failures + monotonicity_failures + positivity_failures == 0;
  }
};

InvariantReport check_invariants(const DominatedSeq& seq);

/// x in c_0 with E(x, Pi_n) = eps_n for every n < eps.size(): x_k = eps_{k-1}.
RealSeq bernstein_c0(const std::vector<double>& eps);

/// x in l^2 with E(x, Pi_n) = eps_n: x_k = sqrt(eps_{k-1}^2 - eps_k^2), where
/// the sequence is taken to reach 0 right after its last supplied entry.
/// Trailing zero coordinates are dropped.
RealSeq bernstein_l2(const std::vector<double>& eps);

/// Linear scheme of coordinate subspaces Pi_n = span{e_1..e_n}, K(n) = n.
/// E(x, Pi_n) is the tail norm of x past n in the element's own norm.
SchemeDescriptor coordinate_chain_scheme();

}  // namespace llab::lethargy
