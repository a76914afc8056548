#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "llab/certify.hpp"

namespace llab::zoo {

/// nterm, freeknot, quantize, interleaved, opnum, coordinate.
const std::vector<std::string>& scheme_names();
SchemeDescriptor scheme_by_name(const std::string& name);

struct FamilyOptions {
  std::uint64_t seed = 0;
  int grid_log2 = 16;        ///< freeknot witnesses
  std::size_t samples = 50;  ///< collapse samples
  std::size_t max_support = 32;
};

/// The scheme's witness family for n = 1..n_max:
///   nterm        sum_{k <= 3n} e_k in l^2
///   freeknot     sin(4(8n+4) pi t) on the grid
///   quantize     n^2 + 1 equally spaced values
///   interleaved  e_{n+3}
///   opnum        rank 2n+1 projection of norm <= sqrt 2 (seeded)
///   coordinate   e_{n+1}
std::vector<certify::Witness> witness_family(const std::string& name, std::size_t n_max,
                                             const FamilyOptions& opt);

/// Seeded random elements of the scheme's space for collapse detection.
std::vector<Element> sample_family(const std::string& name, const FamilyOptions& opt);

}  // namespace llab::zoo
