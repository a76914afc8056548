#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "llab/core.hpp"
#include "llab/lethargy.hpp"

namespace lab {

/// eps_0..eps_N from `geometric:r`, `inverse-square`, `harmonic` or a CSV file.
std::vector<double> make_eps(const std::string& spec, std::size_t N);

/// `identity`, `succ`, `double`, `square`.
llab::lethargy::JumpFn make_jump(const std::string& spec);

/// f on [0,1] from `identity` or `sin:M` (sin(M pi t)).
std::function<double(double)> make_function(const std::string& spec);

/// Step function on 2^grid_log2 cells: a named function sampled at midpoints,
/// or a CSV of cell values (whose length fixes the grid).
llab::StepFn make_step(const std::string& spec, int grid_log2, double p);

/// A sequence from a CSV file, `uniform:N` (seeded, values in [-1, 1]) or
/// `geometric:r:N`.
std::vector<double> make_values(const std::string& spec, std::uint64_t seed);

}  // namespace lab
