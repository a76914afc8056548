// lethargy-lab: command-line front end for the llab library.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "generators.hpp"
#include "llab/certify.hpp"
#include "llab/freeknot.hpp"
#include "llab/io.hpp"
#include "llab/lethargy.hpp"
#include "llab/nterm.hpp"
#include "llab/opnum.hpp"
#include "llab/quantize.hpp"
#include "llab/zoo.hpp"

namespace {

using nlohmann::json;
using llab::io::format_double;

struct Global {
  std::uint64_t seed = 0;
  std::string output;
  std::string format = "auto";
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const Global& g, const std::string& text) {
  if (g.output.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(g.output, std::ios::binary);
  if (!out) throw IoError("cannot open output file '" + g.output + "'");
  out << text;
  if (!out) throw IoError("write failed for '" + g.output + "'");
}

bool want_json(const Global& g, bool json_default) {
  if (g.format == "json") return true;
  if (g.format == "csv") return false;
  return json_default;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json num(double v) {
  if (std::isfinite(v)) return v;
  return format_double(v);
}

std::string row(std::initializer_list<std::string> fields) {
  std::string s;
  for (const auto& f : fields) {
    if (!s.empty()) s += ',';
    s += f;
  }
  return s + "\n";
}

// ---------------------------------------------------------------- lethargy

struct XiArgs {
  std::string eps = "geometric:0.5";
  std::string h = "double";
  std::size_t n = 100;
};

void run_xi(const Global& g, const XiArgs& a) {
  const auto eps = lab::make_eps(a.eps, a.n);
  const auto seq = llab::lethargy::build_xi(eps, lab::make_jump(a.h), a.n);
  const auto rep = llab::lethargy::check_invariants(seq);
  if (want_json(g, false)) {
    json j;
    j["eps_extended"] = seq.eps_extended;
    j["rows"] = json::array();
    for (std::size_t n = 0; n < seq.xi.size(); ++n)
      j["rows"].push_back({{"n", n}, {"eps", seq.eps[n]}, {"xi", seq.xi[n]}});
    j["invariants"] = {{"pass", rep.pass()},
                       {"checked", rep.checked},
                       {"jump_pairs_checked", rep.jump_pairs_checked},
                       {"domination_failures", rep.domination_failures},
                       {"jump_failures", rep.jump_failures},
                       {"monotonicity_failures", rep.monotonicity_failures},
                       {"positivity_failures", rep.positivity_failures}};
    emit(g, dump(j));
    return;
  }
  std::string out = "n,eps,xi\n";
  for (std::size_t n = 0; n < seq.xi.size(); ++n)
    out += row({std::to_string(n), format_double(seq.eps[n]), format_double(seq.xi[n])});
  if (seq.eps_extended > 0) out += "# eps extended by " + std::to_string(seq.eps_extended) + " terms\n";
  out += std::string("# invariants: ") + (rep.pass() ? "PASS" : "FAIL") + "\n";
  emit(g, out);
}

// ------------------------------------------------------------------- nterm

struct NtermArgs {
  std::string dict = "coord";
  double p = 2.0;
  int grid = 0;  // 0: smallest grid holding the witness
  std::size_t n = 4;
  std::size_t m = 8;
  std::size_t pairs = 100;
  std::string input;
};

llab::nterm::Dictionary dictionary(const NtermArgs& a, std::size_t need) {
  if (a.dict == "coord") return llab::nterm::Dictionary::coord(need);
  if (a.dict == "haar") {
    int grid = a.grid;
    if (grid == 0)
      while ((std::size_t{1} << grid) < need) ++grid;
    return llab::nterm::Dictionary::haar(grid, a.p);
  }
  throw llab::PreconditionError("unknown dictionary '" + a.dict + "' (coord, haar)");
}

llab::Element nterm_input(const Global& g, const NtermArgs& a) {
  if (a.input.empty()) throw llab::PreconditionError("--input is required");
  if (a.dict == "coord") return llab::RealSeq{lab::make_values(a.input, g.seed), llab::NormTag::L2};
  return lab::make_step(a.input, a.grid == 0 ? 10 : a.grid, a.p);
}

void run_sigma(const Global& g, const NtermArgs& a) {
  const llab::Element x = nterm_input(g, a);
  llab::ErrorCurve curve;
  if (a.dict == "coord") {
    const auto& seq = std::get<llab::RealSeq>(x);
    for (std::size_t n = 0; n <= a.n; ++n)
      curve.entries.push_back({n, llab::nterm::sigma_n_orthonormal(seq, n), llab::ErrorKind::Exact});
  } else {
    const auto& f = std::get<llab::StepFn>(x);
    const auto dict = llab::nterm::Dictionary::haar(f.grid_log2(), a.p);
    // Greedy is optimal only in the orthonormal case p = 2.
    const auto kind = a.p == 2.0 ? llab::ErrorKind::Exact : llab::ErrorKind::UpperBound;
    for (std::size_t n = 0; n <= a.n; ++n)
      curve.entries.push_back({n, llab::nterm::greedy(x, dict, n).residual_norm, kind});
  }
  emit(g, want_json(g, false) ? dump(llab::io::to_json(curve)) : llab::io::to_csv(curve));
}

void run_greedy(const Global& g, const NtermArgs& a) {
  const llab::Element x = nterm_input(g, a);
  llab::nterm::Dictionary dict = a.dict == "coord"
                                     ? llab::nterm::Dictionary::coord(std::get<llab::RealSeq>(x).size())
                                     : llab::nterm::Dictionary::haar(std::get<llab::StepFn>(x).grid_log2(), a.p);
  std::vector<double> coeffs = a.dict == "coord" ? std::get<llab::RealSeq>(x).values
                                                 : llab::nterm::haar_coefficients(std::get<llab::StepFn>(x), a.p);
  const std::size_t steps = std::min(a.n, coeffs.size());
  if (want_json(g, false)) {
    json j;
    j["steps"] = json::array();
    for (std::size_t s = 1; s <= steps; ++s) {
      const auto r = llab::nterm::greedy(x, dict, s);
      const std::size_t k = r.permutation_head.back();
      j["steps"].push_back({{"step", s}, {"index", k}, {"coefficient", coeffs[k - 1]}, {"residual", r.residual_norm}});
    }
    emit(g, dump(j));
    return;
  }
  std::string out = "step,index,coefficient,residual\n";
  for (std::size_t s = 1; s <= steps; ++s) {
    const auto r = llab::nterm::greedy(x, dict, s);
    const std::size_t k = r.permutation_head.back();
    out += row({std::to_string(s), std::to_string(k), format_double(coeffs[k - 1]), format_double(r.residual_norm)});
  }
  emit(g, out);
}

void run_democracy(const Global& g, const NtermArgs& a) {
  const auto dict = dictionary(a, a.dict == "coord" ? std::max<std::size_t>(2 * a.m, 64) : 1024);
  const auto s = llab::nterm::democracy_sample(dict, a.m, a.pairs, g.seed);
  if (want_json(g, false)) {
    emit(g, dump({{"m", a.m},
                  {"pairs", s.pairs},
                  {"max_ratio", s.max_ratio},
                  {"worst_lambda", s.worst_lambda},
                  {"worst_lambda_star", s.worst_lambda_star}}));
    return;
  }
  emit(g, "m,pairs,max_ratio\n" + row({std::to_string(a.m), std::to_string(s.pairs), format_double(s.max_ratio)}));
}

void run_nterm_witness(const Global& g, const NtermArgs& a) {
  const auto dict = dictionary(a, 3 * a.n);
  const auto [sn, s2n] = llab::nterm::jump_witness_nterm(dict, a.n);
  if (want_json(g, false)) {
    emit(g, dump({{"n", a.n}, {"sigma_n", sn}, {"sigma_2n", s2n}, {"ratio", sn / s2n}}));
    return;
  }
  emit(g, "n,sigma_n,sigma_2n\n" + row({std::to_string(a.n), format_double(sn), format_double(s2n)}));
}

// ---------------------------------------------------------------- quantize

struct QuantArgs {
  std::string input;
  std::size_t n = 4;
  bool paper = false;
  std::size_t nmax = 0;
};

json quant_json(const llab::quantize::QuantResult& r, std::size_t n) {
  json levels = json::array(), approx = json::array();
  for (double v : r.levels.levels) levels.push_back(v);
  for (double v : r.approximant.values) approx.push_back(v);
  return {{"n", n},
          {"error", r.error},
          {"kind", llab::to_string(r.kind)},
          {"bound", r.bound},
          {"levels", levels},
          {"approximant", approx}};
}

void run_quantize(const Global& g, const QuantArgs& a) {
  if (a.input.empty()) throw llab::PreconditionError("--input is required");
  const llab::RealSeq x{lab::make_values(a.input, g.seed), llab::NormTag::Sup};
  if (a.nmax > 0) {
    const auto prof = llab::quantize::collapse_profile(x, a.nmax);
    if (want_json(g, false)) {
      json j = llab::io::to_json(prof.curve);
      j["envelope"] = prof.envelope;
      j["bound"] = prof.bound;
      j["holds"] = prof.holds;
      emit(g, dump(j));
    } else {
      emit(g, llab::io::to_csv(prof.curve) + "# envelope max n*E = " + format_double(prof.envelope) +
                  " <= 2||x|| = " + format_double(prof.bound) + ": " + (prof.holds ? "PASS" : "FAIL") + "\n");
    }
    return;
  }
  const auto r = a.paper ? llab::quantize::quantize_paper(x, a.n) : llab::quantize::quantize_exact(x, a.n);
  if (want_json(g, true)) {
    emit(g, dump(quant_json(r, a.n)));
    return;
  }
  std::string out = "k,x,approximant\n";
  for (std::size_t k = 1; k <= x.size(); ++k)
    out += row({std::to_string(k), format_double(x.at(k)), format_double(r.approximant.at(k))});
  out += "# error " + format_double(r.error) + " (" + llab::to_string(r.kind) + ")\n";
  emit(g, out);
}

// ---------------------------------------------------------------- freeknot

struct FitArgs {
  std::size_t pieces = 3;
  std::string fn = "identity";
  int grid = 10;
  bool dp = false;
};

void run_fit(const Global& g, const FitArgs& a) {
  const auto f = lab::make_step(a.fn, a.grid, llab::kInfExponent);
  const auto r = a.dp ? llab::freeknot::best_pc_sup_dp(f, a.pieces) : llab::freeknot::best_pc_sup(f, a.pieces);
  const std::size_t cells = f.cell_count();
  if (want_json(g, false)) {
    emit(g, dump({{"pieces", r.fit.pieces()},
                  {"error", r.error},
                  {"breakpoints", r.fit.breakpoints},
                  {"values", r.fit.values},
                  {"canonical", r.fit.canonical}}));
    return;
  }
  std::string out = "piece,start,end,value\n";
  for (std::size_t p = 0; p < r.starts.size(); ++p) {
    const std::size_t end = p + 1 < r.starts.size() ? r.starts[p + 1] : cells;
    out += row({std::to_string(p + 1), format_double(static_cast<double>(r.starts[p]) * f.cell_width()),
                format_double(static_cast<double>(end) * f.cell_width()), format_double(r.fit.values[p])});
  }
  out += "# error " + format_double(r.error) + "\n";
  emit(g, out);
}

struct FkWitnessArgs {
  std::size_t n = 1;
  int grid = 16;
};

void run_fk_witness(const Global& g, const FkWitnessArgs& a) {
  const auto w = llab::freeknot::equioscillation_witness(a.n, a.grid);
  if (want_json(g, false)) {
    emit(g, dump({{"n", w.n},
                  {"h", w.h},
                  {"pieces_small", w.pieces_small},
                  {"error_small", w.error_small},
                  {"pieces_large", w.pieces_large},
                  {"error_large", w.error_large},
                  {"tolerance", w.tolerance}}));
    return;
  }
  emit(g, "n,h,pieces_small,error_small,pieces_large,error_large,tolerance\n" +
              row({std::to_string(w.n), format_double(w.h), std::to_string(w.pieces_small),
                   format_double(w.error_small), std::to_string(w.pieces_large), format_double(w.error_large),
                   format_double(w.tolerance)}));
}

// ------------------------------------------------------------------- opnum

struct OpnumArgs {
  std::string matrix;
  std::size_t n = 0;  // 0: min(rows, cols) + 1
  bool projection = false;
  double idem_tol = 1e-10;
};

void run_opnum(const Global& g, const OpnumArgs& a) {
  if (a.matrix.empty()) throw llab::PreconditionError("--matrix is required");
  const auto t = llab::io::matrix_from_csv(llab::io::read_file(a.matrix));
  if (a.projection) {
    const auto rank = a.n > 0 ? a.n : llab::opnum::numerical_rank(t);
    const auto j = llab::opnum::projection_jump(t, rank, a.idem_tol);
    if (want_json(g, false)) {
      emit(g, dump({{"n", j.n},
                    {"half_index", j.half_index},
                    {"a_half", j.a_half},
                    {"norm", j.norm},
                    {"a_n", j.a_n},
                    {"holds", j.holds}}));
    } else {
      emit(g, "n,half_index,a_half,norm,a_n,holds\n" +
                  row({std::to_string(j.n), std::to_string(j.half_index), format_double(j.a_half),
                       format_double(j.norm), format_double(j.a_n), j.holds ? "1" : "0"}));
    }
    return;
  }
  const std::size_t n_max = a.n > 0 ? a.n : std::min(t.rows, t.cols) + 1;
  const auto curve = llab::opnum::approx_numbers(t, n_max);
  emit(g, want_json(g, false) ? dump(llab::io::to_json(curve)) : llab::io::to_csv(curve));
}

// ----------------------------------------------------------------- certify

struct CertifyArgs {
  std::string scheme;
  std::size_t nmax = 8;
  double c_cap = 2.0;
  double envelope_cap = 2.0;
  std::size_t samples = 50;
  int grid = 16;
  std::size_t gap_samples = 10000;
};

json cert_json(const llab::certify::JumpCertificate& c) {
  json j;
  j["scheme"] = c.scheme;
  j["verdict"] = llab::certify::to_string(c.verdict);
  j["c"] = num(c.c);
  j["c_cap"] = num(c.c_cap);
  j["witness_ns"] = c.witness_ns;
  j["witness_elements"] = c.witness_labels;
  j["checks"] = json::array();
  for (const auto& r : c.checks)
    j["checks"].push_back({{"n", r.n},
                           {"K", r.k},
                           {"e_n", num(r.e_n)},
                           {"e_K", num(r.e_k)},
                           {"kind_n", llab::to_string(r.kind_n)},
                           {"kind_K", llab::to_string(r.kind_k)},
                           {"ratio", num(r.ratio)}});
  j["envelope"] = c.envelope ? json(*c.envelope) : json(nullptr);
  j["envelope_constant"] = num(c.envelope_constant);
  j["min_ratio_profile"] = json::array();
  for (const auto& p : c.min_ratio_profile)
    j["min_ratio_profile"].push_back({{"n", p.n}, {"min_ratio", num(p.min_ratio)}, {"samples_used", p.used}});
  j["notes"] = c.notes;
  return j;
}

void run_certify(const Global& g, const CertifyArgs& a) {
  using namespace llab;
  const auto scheme = zoo::scheme_by_name(a.scheme);
  zoo::FamilyOptions opt;
  opt.seed = g.seed;
  opt.grid_log2 = a.grid;
  opt.samples = a.samples;

  const auto witnesses = zoo::witness_family(a.scheme, a.nmax, opt);
  const auto jump = certify::check_jump(scheme, witnesses, a.c_cap);
  json out;
  out["scheme"] = a.scheme;
  out["nmax"] = a.nmax;
  out["seed"] = g.seed;
  out["jump"] = cert_json(jump);
  out["jump"]["self_check"] =
      jump.verdict == certify::Verdict::Witnessed ? certify::verify_certificate(jump, scheme, witnesses) : false;

  certify::Verdict verdict = jump.verdict;
  std::optional<certify::JumpCertificate> collapse;
  if (jump.verdict != certify::Verdict::Witnessed) {
    collapse = certify::collapse_detect(scheme, zoo::sample_family(a.scheme, opt), a.nmax, a.envelope_cap);
    out["collapse"] = cert_json(*collapse);
    if (collapse->verdict == certify::Verdict::Collapsed) verdict = certify::Verdict::Collapsed;
  } else {
    out["collapse"] = nullptr;
  }
  if (a.scheme == "interleaved") {
    const auto gap = certify::brudnyi_gap_interleaved(a.nmax, a.gap_samples, g.seed);
    json per = json::array();
    for (const auto& e : gap.per_n) per.push_back({{"n", e.n}, {"gap", e.value}, {"kind", to_string(e.kind)}});
    out["brudnyi_gap"] = {{"per_n", per}, {"infimum_estimate", gap.infimum_estimate}};
  }
  out["verdict"] = certify::to_string(verdict);
  emit(g, dump(out));

  auto pad = [](std::string v, std::size_t w) { return v.size() < w ? v + std::string(w - v.size(), ' ') : v + ' '; };
  std::ostringstream table;
  table << pad("scheme", 14) << pad("verdict", 14) << pad("c", 22) << "envelope C\n";
  table << pad(a.scheme, 14) << pad(certify::to_string(verdict), 14) << pad(format_double(jump.c), 22)
        << (collapse ? format_double(collapse->envelope_constant) : std::string("-")) << "\n";
  std::cerr << table.str();
}

// ------------------------------------------------------------------ errors

int fail(const std::string& type, const std::string& message, std::optional<std::size_t> n, int code) {
  json e{{"error", {{"type", type}, {"message", message}}}};
  if (n) e["error"]["n"] = *n;
  std::cerr << e.dump() << "\n";
  return code;
}

std::uint64_t default_seed() {
  const char* env = std::getenv("LETHARGY_LAB_SEED");
  if (!env || !*env) return 0;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(env, &used);
    if (used == std::string(env).size()) return v;
  } catch (const std::exception&) {
  }
  throw llab::PreconditionError("LETHARGY_LAB_SEED must be an unsigned integer");
}

}  // namespace

int main(int argc, char** argv) {
  Global g;
  try {
    g.seed = default_seed();
  } catch (const std::exception& e) {
    return fail("usage", e.what(), std::nullopt, 2);
  }

  CLI::App app{"lethargy-lab: approximation schemes, error curves and jump certificates"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  app.add_option("--seed", g.seed, "RNG seed (default: $LETHARGY_LAB_SEED or 0)");
  app.add_option("--output,-o", g.output, "write the result here instead of stdout");
  app.add_option("--format", g.format, "csv, json or auto (per-command default)")
      ->check(CLI::IsMember({"auto", "csv", "json"}));

  XiArgs xi;
  auto* leth = app.add_subcommand("lethargy", "dominating sequences");
  leth->require_subcommand(1);
  auto* xi_cmd = leth->add_subcommand("xi", "xi_n >= eps_n with xi_n <= 2 xi_{h(n)}");
  xi_cmd->set_help_flag("--help", "Print this help message and exit");  // -h would clash with --h
  xi_cmd->add_option("--eps", xi.eps, "geometric:r, inverse-square, harmonic, or a CSV file")->capture_default_str();
  xi_cmd->add_option("--h", xi.h, "identity, succ, double, square")->capture_default_str();
  xi_cmd->add_option("--n", xi.n, "last index N")->capture_default_str();

  NtermArgs nt;
  auto* nterm = app.add_subcommand("nterm", "n-term and greedy approximation");
  nterm->require_subcommand(1);
  auto add_dict = [&](CLI::App* c) {
    c->add_option("--dict", nt.dict, "coord or haar")->check(CLI::IsMember({"coord", "haar"}))->capture_default_str();
    c->add_option("--p", nt.p, "Haar exponent")->capture_default_str();
    c->add_option("--grid", nt.grid, "Haar grid log2 (0: automatic)")->capture_default_str();
  };
  auto* sigma = nterm->add_subcommand("sigma", "best n-term error curve, n = 0..N");
  add_dict(sigma);
  sigma->add_option("--n", nt.n, "largest n")->capture_default_str();
  sigma->add_option("--input", nt.input, "CSV file, uniform:N or geometric:r:N (haar: identity, sin:M or CSV)");
  auto* greedy = nterm->add_subcommand("greedy", "greedy steps and residuals");
  add_dict(greedy);
  greedy->add_option("--n", nt.n, "number of steps")->capture_default_str();
  greedy->add_option("--input", nt.input, "as for sigma");
  auto* demo = nterm->add_subcommand("democracy", "sampled democracy ratio");
  add_dict(demo);
  demo->add_option("--m", nt.m, "cardinality of the index sets")->capture_default_str();
  demo->add_option("--pairs", nt.pairs, "number of random pairs")->capture_default_str();
  auto* ntw = nterm->add_subcommand("witness", "sigma_n and sigma_2n of sum_{k<=3n} phi_k");
  add_dict(ntw);
  ntw->add_option("--n", nt.n, "n")->capture_default_str();

  QuantArgs qa;
  auto* quant = app.add_subcommand("quantize", "best approximation by n distinct values (0 included)");
  quant->add_option("--input", qa.input, "CSV file, uniform:N or geometric:r:N");
  quant->add_option("--n", qa.n, "number of values")->capture_default_str();
  quant->add_flag("--paper,!--exact", qa.paper, "uniform-level construction instead of the exact optimum");
  quant->add_option("--nmax", qa.nmax, "emit the exact error curve n = 1..nmax instead");

  FitArgs fa;
  FkWitnessArgs fw;
  auto* fk = app.add_subcommand("freeknot", "piecewise-constant sup-norm fits");
  fk->require_subcommand(1);
  auto* fit = fk->add_subcommand("fit", "best fit with at most --pieces pieces");
  fit->add_option("--pieces", fa.pieces, "piece budget")->capture_default_str();
  fit->add_option("--fn", fa.fn, "identity, sin:M, or a CSV of cell values")->capture_default_str();
  fit->add_option("--grid", fa.grid, "grid log2")->capture_default_str();
  fit->add_flag("--dp", fa.dp, "use the O(m N^2) dynamic program");
  auto* fkw = fk->add_subcommand("witness", "errors of sin(4(8n+4) pi t) with 4n+3 and 8n+5 pieces");
  fkw->add_option("--n", fw.n, "n")->capture_default_str();
  fkw->add_option("--grid", fw.grid, "grid log2")->capture_default_str();

  OpnumArgs oa;
  auto* op = app.add_subcommand("opnum", "approximation numbers of a matrix");
  op->add_option("--matrix", oa.matrix, "CSV matrix file, no header");
  op->add_option("--n", oa.n, "largest n (default min(rows, cols) + 1); rank with --projection");
  op->add_flag("--projection", oa.projection, "check a_{n/2}(P) <= ||P||^2 a_n(P)");
  op->add_option("--idempotence-tol", oa.idem_tol, "max |P^2 - P| accepted")->capture_default_str();

  CertifyArgs ca;
  auto* cert = app.add_subcommand("certify", "jump-condition certificate for a scheme");
  cert->add_option("--scheme", ca.scheme, "scheme")
      ->required()
      ->check(CLI::IsMember({"nterm", "freeknot", "quantize", "interleaved", "opnum", "coordinate"}));
  cert->add_option("--nmax", ca.nmax, "witnesses n = 1..nmax")->capture_default_str();
  cert->add_option("--ccap", ca.c_cap, "largest constant c accepted")->capture_default_str();
  cert->add_option("--envelope-cap", ca.envelope_cap, "collapse envelope bound on n*E/||x||")->capture_default_str();
  cert->add_option("--samples", ca.samples, "collapse samples")->capture_default_str();
  cert->add_option("--grid", ca.grid, "freeknot witness grid log2")->capture_default_str();
  cert->add_option("--gap-samples", ca.gap_samples, "interleaved gap samples per n")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("usage", e.what(), std::nullopt, 2);
  }

  try {
    if (*xi_cmd) run_xi(g, xi);
    else if (*sigma) run_sigma(g, nt);
    else if (*greedy) run_greedy(g, nt);
    else if (*demo) run_democracy(g, nt);
    else if (*ntw) run_nterm_witness(g, nt);
    else if (*quant) run_quantize(g, qa);
    else if (*fit) run_fit(g, fa);
    else if (*fkw) run_fk_witness(g, fw);
    else if (*op) run_opnum(g, oa);
    else if (*cert) run_certify(g, ca);
  } catch (const llab::SchemeError& e) {
    return fail("scheme", e.what(), e.n(), 4);
  } catch (const llab::PreconditionError& e) {
    return fail("precondition", e.what(), std::nullopt, 3);
  } catch (const IoError& e) {
    return fail("io", e.what(), std::nullopt, 5);
  } catch (const std::exception& e) {
    return fail("internal", e.what(), std::nullopt, 1);
  }
  return 0;
}
