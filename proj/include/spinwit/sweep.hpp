#pragma once

#include <iosfwd>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "spinwit/witness.hpp"

namespace spinwit {

enum class ModelFamily { heisenberg, ising, xyz, general };
enum class BetaGrid { linear, log };
enum class CrossingQuantity { negativity, r_expect, w_value };

std::string_view to_string(ModelFamily family);
std::string_view to_string(CrossingQuantity quantity);

/// Model description as written in a config file, before lambda is fixed.
struct ModelSpec {
  ModelFamily family = ModelFamily::heisenberg;
  int n_spins = 10;
  Boundary boundary = Boundary::periodic;
  double j = 1.0;  // heisenberg / ising scale
  double jx = 0.0; // xyz; jx, jy, jz are also the general-model exchange
  double jy = 0.0;
  double jz = 0.0;
  double jxy = 0.0;
  double jyx = 0.0;
  double h = 0.0;
  Eigen::Vector3d field = Eigen::Vector3d::Zero(); // general
  Eigen::Vector3d dm = Eigen::Vector3d::Zero();
  Eigen::Vector3d cvec = Eigen::Vector3d::Zero();
  std::optional<Eigen::Vector3d> theta; // uniform local rotation (xyz, general)
};

struct SweepConfig {
  ModelSpec model;
  double beta_min = 0.0;
  double beta_max = 5.0;
  int steps = 200;
  BetaGrid grid = BetaGrid::linear;
  std::vector<double> lambdas{0.5, 1.0, 1.5, 2.0}; // ising only
  std::string out;                                 // empty: standard output

  /// Throws ConfigError on any violated constraint.
  void validate() const;
  [[nodiscard]] std::vector<double> betas() const;
};

/// One concrete Hamiltonian: a ModelSpec with lambda fixed.
struct ResolvedModel {
  int n_spins = 0;
  double lambda = std::numeric_limits<double>::quiet_NaN();
  PauliSum terms{2};
  /// (B, J, A, C) form when it exists; needed for the Hamiltonian witness.
  std::optional<GeneralChainModel> general;
  /// Fixed spin witness for the heisenberg and ising families.
  std::optional<WitnessOperator> preset_witness;
};

/// One ResolvedModel per lambda for ising, a single one otherwise.
std::vector<ResolvedModel> resolve_models(const SweepConfig& cfg);

/// Diagonalizes one model and evaluates every witness at any temperature
/// from the cached eigenstate table.
class PointEvaluator {
public:
  explicit PointEvaluator(ResolvedModel model);

  [[nodiscard]] const ResolvedModel& model() const { return model_; }
  [[nodiscard]] const ChainSpectrum& spectrum() const { return table_.spectrum(); }
  [[nodiscard]] ThermalObservables observables(InverseTemperature beta) const;
  [[nodiscard]] TwoSiteDensity pair_density(InverseTemperature beta) const;
  [[nodiscard]] WitnessReport evaluate(InverseTemperature beta) const;

private:
  ResolvedModel model_;
  EigenstateTable table_;
};

struct SweepRow {
  double beta = 0.0; // +inf for the ground state
  double lambda = std::numeric_limits<double>::quiet_NaN();
  int n_spins = 0;
  ThermalObservables observables;
  WitnessReport report;
};

SweepRow evaluate_row(const PointEvaluator& evaluator, InverseTemperature beta);

/// Rows ordered by lambda (ascending) then beta (ascending).
std::vector<SweepRow> sweep(const SweepConfig& cfg);

std::string csv_header();
/// Floats with 17 significant digits; `entangled` is 0 or 1.
std::string format_row(const SweepRow& row);
void emit_csv(std::ostream& os, std::span<const SweepRow> rows);
/// Throws IoError when the file cannot be written.
void emit_csv(const std::string& path, std::span<const SweepRow> rows);

struct CrossingResult {
  double beta_c = 0.0;
  CrossingQuantity quantity = CrossingQuantity::r_expect;
  std::pair<double, double> bracket;
  int iterations = 0;
  double lambda = std::numeric_limits<double>::quiet_NaN();
};

/// Signed distance from the entangled/undetected threshold; negative means
/// the quantity certifies entanglement.
double crossing_signal(const WitnessReport& report, CrossingQuantity quantity);

/// Scans `grid` for the first change of verdict, then bisects the bracket
/// until its width is at most `tol`. beta_c is the bracket midpoint. Throws
/// NoCrossing when the verdict never changes.
CrossingResult find_crossing(const PointEvaluator& evaluator, CrossingQuantity quantity,
                             std::span<const double> grid, double tol);
std::vector<CrossingResult> find_crossings(const SweepConfig& cfg, CrossingQuantity quantity,
                                           double tol = 1e-4);

std::string crossing_header();
std::string format_crossing(const CrossingResult& result);

// Config files: `key = value` lines, `#` comments, vectors as "x, y, z".

using ConfigValues = std::map<std::string, std::string>;

ConfigValues parse_config(std::istream& in);
ConfigValues read_config_file(const std::string& path);

/// Builds a validated SweepConfig. Keys not consumed here are rejected
/// unless listed in `extra_keys`.
SweepConfig config_from_values(const ConfigValues& values,
                               std::span<const std::string> extra_keys = {});

double parse_real(const std::string& key, const std::string& text);
Eigen::Vector3d parse_triple(const std::string& key, const std::string& text);
std::vector<double> parse_real_list(const std::string& key, const std::string& text);
CrossingQuantity parse_quantity(const std::string& text);
InverseTemperature parse_beta(const std::string& text);

} // namespace spinwit
