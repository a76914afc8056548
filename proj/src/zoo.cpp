#include "llab/zoo.hpp"

#include <random>

#include "llab/freeknot.hpp"
#include "llab/lethargy.hpp"
#include "llab/nterm.hpp"
#include "llab/opnum.hpp"
#include "llab/quantize.hpp"
#include "llab/random.hpp"

namespace llab::zoo {

const std::vector<std::string>& scheme_names() {
  static const std::vector<std::string> names{"nterm", "freeknot", "quantize", "interleaved", "opnum",
                                              "coordinate"};
  return names;
}

SchemeDescriptor scheme_by_name(const std::string& name) {
  if (name == "nterm") return nterm::orthonormal_scheme();
  if (name == "freeknot") return freeknot::scheme();
  if (name == "quantize") return quantize::scheme();
  if (name == "interleaved") return certify::interleaved_scheme();
  if (name == "opnum") return opnum::scheme();
  if (name == "coordinate") return lethargy::coordinate_chain_scheme();
  throw PreconditionError("unknown scheme '" + name + "'");
}

std::vector<certify::Witness> witness_family(const std::string& name, std::size_t n_max,
                                             const FamilyOptions& opt) {
  scheme_by_name(name);
  std::vector<certify::Witness> out;
  if (name == "interleaved") {
    std::vector<std::size_t> ns;
    for (std::size_t n = 1; n <= n_max; ++n) ns.push_back(n);
    return certify::interleaved_witnesses(ns);
  }
  for (std::size_t n = 1; n <= n_max; ++n) {
    if (name == "nterm") {
      out.push_back({n, nterm::witness_element(nterm::Dictionary::coord(3 * n), n),
                     "sum_{k<=" + std::to_string(3 * n) + "} e_k"});
    } else if (name == "freeknot") {
      const double h = freeknot::witness_frequency(n);
      out.push_back({n, freeknot::sin_step(h, opt.grid_log2),
                     "sin(" + std::to_string(static_cast<long long>(h)) + " pi t)"});
    } else if (name == "quantize") {
      out.push_back({n, quantize::witness_element(n), "uniform levels, " + std::to_string(n * n + 1) + " values"});
    } else if (name == "opnum") {
      auto rng = substream(opt.seed, n);
      out.push_back({n, opnum::witness_projection(2 * n + 1, rng),
                     "projection of rank " + std::to_string(2 * n + 1)});
    } else if (name == "coordinate") {
      RealSeq e{std::vector<double>(n + 1, 0.0), NormTag::Sup};
      e.values.back() = 1.0;
      out.push_back({n, e, "e_" + std::to_string(n + 1)});
    }
  }
  return out;
}

std::vector<Element> sample_family(const std::string& name, const FamilyOptions& opt) {
  scheme_by_name(name);
  std::vector<Element> out;
  for (std::size_t i = 0; i < opt.samples; ++i) {
    auto rng = substream(opt.seed, 1'000'000 + i);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_int_distribution<std::size_t> len(1, opt.max_support);
    if (name == "freeknot") {
      std::vector<double> cells(std::size_t{1} << 10);
      for (auto& c : cells) c = u(rng);
      out.emplace_back(StepFn(10, std::move(cells), kInfExponent));
    } else if (name == "opnum") {
      out.emplace_back(opnum::random_gaussian(8, 8, rng));
    } else {
      RealSeq x{std::vector<double>(len(rng)), name == "nterm" ? NormTag::L2 : NormTag::Sup};
      for (auto& v : x.values) v = u(rng);
      out.emplace_back(std::move(x));
    }
  }
  return out;
}

}  // namespace llab::zoo
