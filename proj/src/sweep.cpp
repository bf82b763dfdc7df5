#include "spinwit/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace spinwit {

std::string_view to_string(ModelFamily family) {
  switch (family) {
  case ModelFamily::heisenberg: return "heisenberg";
  case ModelFamily::ising: return "ising";
  case ModelFamily::xyz: return "xyz";
  case ModelFamily::general: return "general";
  }
  return "unknown";
}

std::string_view to_string(CrossingQuantity quantity) {
  switch (quantity) {
  case CrossingQuantity::negativity: return "negativity";
  case CrossingQuantity::r_expect: return "r";
  case CrossingQuantity::w_value: return "w";
  }
  return "unknown";
}

void SweepConfig::validate() const {
  if (model.n_spins < 2 || model.n_spins > kMaxSpins) {
    throw ConfigError("n must be in [2, " + std::to_string(kMaxSpins) + "], got " +
                      std::to_string(model.n_spins));
  }
  if (!std::isfinite(beta_min) || !std::isfinite(beta_max) || beta_min < 0.0) {
    throw ConfigError("beta range must be finite with beta_min >= 0");
  }
  if (!(beta_min < beta_max)) {
    throw ConfigError("beta_min must be < beta_max");
  }
  if (steps < 2) {
    throw ConfigError("steps must be >= 2");
  }
  if (grid == BetaGrid::log && !(beta_min > 0.0)) {
    throw ConfigError("log grid needs beta_min > 0");
  }
  if (model.theta && model.family != ModelFamily::xyz && model.family != ModelFamily::general) {
    throw ConfigError("theta applies only to the xyz and general models");
  }
  for (double lambda : lambdas) {
    if (!std::isfinite(lambda)) {
      throw ConfigError("lambda values must be finite");
    }
  }
}

std::vector<double> SweepConfig::betas() const {
  std::vector<double> out(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    const double t = static_cast<double>(i) / (steps - 1);
    out[static_cast<std::size_t>(i)] =
        grid == BetaGrid::linear
            ? beta_min + t * (beta_max - beta_min)
            : std::exp(std::log(beta_min) + t * (std::log(beta_max) - std::log(beta_min)));
  }
  out.front() = beta_min;
  out.back() = beta_max;
  return out;
}

namespace {

ResolvedModel from_xyz(const XYZChainModel& m, std::optional<WitnessOperator> preset,
                       const std::optional<Eigen::Vector3d>& theta) {
  ResolvedModel r;
  r.n_spins = m.n_spins;
  r.lambda = m.lambda.value_or(std::numeric_limits<double>::quiet_NaN());
  r.terms = hamiltonian_terms(m);
  if (theta) {
    r.terms = conjugate_local(r.terms, LocalRotation(*theta));
  } else {
    r.general = as_general(m);
  }
  r.preset_witness = std::move(preset);
  return r;
}

} // namespace

std::vector<ResolvedModel> resolve_models(const SweepConfig& cfg) {
  cfg.validate();
  const ModelSpec& spec = cfg.model;
  std::vector<ResolvedModel> out;
  switch (spec.family) {
  case ModelFamily::heisenberg:
    out.push_back(from_xyz(XYZChainModel::heisenberg(spec.j, spec.n_spins, spec.boundary),
                           heisenberg_witness(), std::nullopt));
    break;
  case ModelFamily::ising: {
    std::vector<double> lambdas = cfg.lambdas;
    std::sort(lambdas.begin(), lambdas.end());
    for (double lambda : lambdas) {
      out.push_back(
          from_xyz(XYZChainModel::transverse_ising(spec.j, lambda, spec.n_spins, spec.boundary),
                   ising_witness(), std::nullopt));
    }
    break;
  }
  case ModelFamily::xyz: {
    XYZChainModel m;
    m.n_spins = spec.n_spins;
    m.boundary = spec.boundary;
    m.jx = spec.jx;
    m.jy = spec.jy;
    m.jz = spec.jz;
    m.jxy = spec.jxy;
    m.jyx = spec.jyx;
    m.h = spec.h;
    out.push_back(from_xyz(m, std::nullopt, spec.theta));
    break;
  }
  case ModelFamily::general: {
    GeneralChainModel g;
    g.n_spins = spec.n_spins;
    g.boundary = spec.boundary;
    g.field_B = spec.field;
    g.exchange_J = {spec.jx, spec.jy, spec.jz};
    g.dm_A = spec.dm;
    g.cvec_C = spec.cvec;
    ResolvedModel r;
    r.n_spins = g.n_spins;
    r.terms = hamiltonian_terms(g);
    if (spec.theta) {
      r.terms = conjugate_local(r.terms, LocalRotation(*spec.theta));
    } else {
      r.general = g;
    }
    out.push_back(std::move(r));
    break;
  }
  }
  return out;
}

PointEvaluator::PointEvaluator(ResolvedModel model)
    : model_(std::move(model)),
      table_(std::make_shared<const ChainSpectrum>(ChainSpectrum::diagonalize(model_.terms))) {}

ThermalObservables PointEvaluator::observables(InverseTemperature beta) const {
  return table_.observables(boltzmann_weights(spectrum().energies(), beta));
}

TwoSiteDensity PointEvaluator::pair_density(InverseTemperature beta) const {
  return table_.pair_density(boltzmann_weights(spectrum().energies(), beta));
}

WitnessReport PointEvaluator::evaluate(InverseTemperature beta) const {
  const Eigen::VectorXd weights = boltzmann_weights(spectrum().energies(), beta);
  const ThermalObservables obs = table_.observables(weights);
  const TwoSiteDensity rho = table_.pair_density(weights);

  WitnessReport report;
  const NegativityResult neg = negativity(rho);
  report.mu_min = neg.spectrum.mu_min;
  report.negativity = neg.negativity;
  try {
    report.branch = mu_closed_forms(extract_x_state(rho)).branch;
  } catch (const StructureViolation&) {
    report.branch = 0;
  }

  const WitnessOperator r_op =
      model_.preset_witness ? *model_.preset_witness : witness_for_state(rho);
  report.r_kind = r_op.kind;
  report.r_expect = witness_expectation(r_op, rho);

  report.w_value = std::numeric_limits<double>::quiet_NaN();
  if (model_.general) {
    try {
      report.w_value = hamiltonian_witness(obs, *model_.general);
    } catch (const WitnessUndefined&) {
    }
  }
  const bool entangled = r_certifies(report.r_expect) ||
                         (std::isfinite(report.w_value) && w_certifies(report.w_value));
  report.verdict = entangled ? Verdict::entangled : Verdict::undetected;
  return report;
}

SweepRow evaluate_row(const PointEvaluator& evaluator, InverseTemperature beta) {
  SweepRow row;
  row.beta = beta.value();
  row.lambda = evaluator.model().lambda;
  row.n_spins = evaluator.model().n_spins;
  row.observables = evaluator.observables(beta);
  row.report = evaluator.evaluate(beta);
  return row;
}

std::vector<SweepRow> sweep(const SweepConfig& cfg) {
  const std::vector<double> betas = cfg.betas();
  std::vector<SweepRow> rows;
  for (ResolvedModel& model : resolve_models(cfg)) {
    const PointEvaluator evaluator(std::move(model));
    for (double beta : betas) {
      rows.push_back(evaluate_row(evaluator, InverseTemperature(beta)));
    }
  }
  return rows;
}

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

} // namespace

std::string csv_header() {
  return "beta,lambda,n,u,mx,my,mz,w_value,mu_min,negativity,r_expect,branch,entangled";
}

std::string format_row(const SweepRow& row) {
  std::string line;
  const auto& m = row.observables.m;
  for (double v : {row.beta, row.lambda}) {
    line += fmt17(v) + ',';
  }
  line += std::to_string(row.n_spins) + ',';
  for (double v : {row.observables.u, m.x(), m.y(), m.z(), row.report.w_value, row.report.mu_min,
                   row.report.negativity, row.report.r_expect}) {
    line += fmt17(v) + ',';
  }
  line += std::to_string(row.report.branch) + ',';
  line += row.report.verdict == Verdict::entangled ? '1' : '0';
  return line;
}

void emit_csv(std::ostream& os, std::span<const SweepRow> rows) {
  os << csv_header() << '\n';
  for (const auto& row : rows) {
    os << format_row(row) << '\n';
  }
}

void emit_csv(const std::string& path, std::span<const SweepRow> rows) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw IoError("cannot open " + path + " for writing");
  }
  emit_csv(file, rows);
  file.flush();
  if (!file) {
    throw IoError("write to " + path + " failed");
  }
}

double crossing_signal(const WitnessReport& report, CrossingQuantity quantity) {
  switch (quantity) {
  case CrossingQuantity::negativity: return report.mu_min + kEntanglementGuard;
  case CrossingQuantity::r_expect: return report.r_expect + kEntanglementGuard;
  case CrossingQuantity::w_value: return 1.0 + kEntanglementGuard - report.w_value;
  }
  return 0.0;
}

CrossingResult find_crossing(const PointEvaluator& evaluator, CrossingQuantity quantity,
                             std::span<const double> grid, double tol) {
  if (grid.size() < 2) {
    throw ConfigError("crossing search needs at least two grid points");
  }
  if (!(tol > 0.0)) {
    throw ConfigError("crossing tolerance must be > 0");
  }
  auto entangled_at = [&](double beta) {
    const WitnessReport report = evaluator.evaluate(InverseTemperature(beta));
    if (quantity == CrossingQuantity::w_value && !std::isfinite(report.w_value)) {
      throw ConfigError("Hamiltonian witness is not defined for this model");
    }
    return crossing_signal(report, quantity) < 0.0;
  };

  double lo = grid.front();
  bool lo_state = entangled_at(lo);
  std::optional<double> hi;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (entangled_at(grid[i]) != lo_state) {
      hi = grid[i];
      break;
    }
    lo = grid[i];
  }
  if (!hi) {
    throw NoCrossing(std::string("no crossing of ") + std::string(to_string(quantity)) +
                     " on [" + fmt17(grid.front()) + ", " + fmt17(grid.back()) + "]: " +
                     (lo_state ? "always entangled" : "never entangled"));
  }

  CrossingResult result;
  result.quantity = quantity;
  result.lambda = evaluator.model().lambda;
  double upper = *hi;
  while (upper - lo > tol) {
    const double mid = 0.5 * (lo + upper);
    if (entangled_at(mid) == lo_state) {
      lo = mid;
    } else {
      upper = mid;
    }
    ++result.iterations;
  }
  result.bracket = {lo, upper};
  result.beta_c = 0.5 * (lo + upper);
  return result;
}

std::vector<CrossingResult> find_crossings(const SweepConfig& cfg, CrossingQuantity quantity,
                                           double tol) {
  const std::vector<double> grid = cfg.betas();
  std::vector<CrossingResult> out;
  for (ResolvedModel& model : resolve_models(cfg)) {
    const PointEvaluator evaluator(std::move(model));
    out.push_back(find_crossing(evaluator, quantity, grid, tol));
  }
  return out;
}

std::string crossing_header() { return "lambda,quantity,beta_c,bracket_lo,bracket_hi,iterations"; }

std::string format_crossing(const CrossingResult& r) {
  return fmt17(r.lambda) + ',' + std::string(to_string(r.quantity)) + ',' + fmt17(r.beta_c) + ',' +
         fmt17(r.bracket.first) + ',' + fmt17(r.bracket.second) + ',' +
         std::to_string(r.iterations);
}

} // namespace spinwit
