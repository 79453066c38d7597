#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <ostream>

#include "finsler/error.hpp"
#include "finsler/identities.hpp"
#include "finsler/motion.hpp"
#include "finsler/ortho.hpp"
#include "finsler/sampling.hpp"

namespace finsler::cli {

namespace {

DerivativeOptions derivatives(const SpaceConfig& cfg) {
  DerivativeOptions d;
  d.method = cfg.method;
  return d;
}

ordered_json basis_json(const Basis& b) {
  ordered_json rows = ordered_json::array();
  for (const Vector& v : b.vectors()) rows.push_back(to_json(v));
  return rows;
}

ordered_json generators_json(const LieAlgebraBasis& alg) {
  ordered_json out = ordered_json::array();
  for (const MotionGenerator& g : alg.generators) out.push_back(to_json(g.coefficients));
  return out;
}

NormalizedBasis orthonormal(const SpaceConfig& cfg, Orthogonalization* detail = nullptr) {
  OrthogonalizeOptions opts;
  opts.derivatives = derivatives(cfg);
  opts.reorder_pivots = cfg.norm.definiteness() != Definiteness::Positive;
  Orthogonalization o = orthogonalize_detailed(cfg.norm, cfg.basis, opts);
  NormalizedBasis nb = normalize(cfg.norm, o.basis, opts.isotropic_threshold);
  if (detail) *detail = std::move(o);
  return nb;
}

void add_profile_checks(Report& r, const MetricProfile& profile, const SpaceConfig& cfg) {
  const double tol = cfg.tolerances.profile.value_or(profile_tolerance(profile.source));
  const ProfileCheck pc = check_orthonormal_pattern(profile, tol);
  r.add_check({"profile_upper", pc.max_upper, tol, pc.max_upper <= tol});
  r.add_check({"profile_diagonal", pc.max_diagonal_defect, tol, pc.max_diagonal_defect <= tol});
  r.add_check({"profile_lower", pc.max_lower, 0.0, true, false});
}

MotionOptions motion_options(const SpaceConfig& cfg) {
  MotionOptions m;
  m.derivatives = derivatives(cfg);
  m.profile_tolerance = cfg.tolerances.profile;
  return m;
}

void cmd_identities(Report& r, const SpaceConfig& cfg) {
  const std::vector<Vector> samples = sample_admissible_directions(cfg.norm, cfg.samples, cfg.seed);
  IdentityOptions opts;
  opts.derivatives = derivatives(cfg);
  opts.tolerance = cfg.tolerances.identities;
  const std::vector<IdentityReport> reports = check_euler_identities(cfg.norm, samples, opts);
  r.set("method", to_string(reports.front().method));
  r.set("sample_count", reports.front().sample_count);
  for (const IdentityReport& rep : reports) {
    if (rep.f_level_max_residual) r.set("euler_f_level_max_residual", *rep.f_level_max_residual);
    r.add_check({rep.name, rep.max_residual, rep.tolerance, rep.pass});
  }
}

void cmd_orthogonalize(Report& r, const SpaceConfig& cfg) {
  Orthogonalization detail{cfg.basis, {}, {}};
  const NormalizedBasis nb = orthonormal(cfg, &detail);
  r.set("input_order", detail.input_order);
  r.set("basis", basis_json(nb.basis));
  r.set("signature", nb.signature);
  r.set("coefficients", to_json(detail.coefficients));
  add_profile_checks(r, metric_profile(cfg.norm, nb.basis, derivatives(cfg)), cfg);
}

void cmd_profile(Report& r, const SpaceConfig& cfg) {
  const NormalizedBasis nb = orthonormal(cfg);
  const MetricProfile profile = metric_profile(cfg.norm, nb.basis, derivatives(cfg));
  r.set("basis", basis_json(nb.basis));
  r.set("source", to_string(profile.source));
  ordered_json p = ordered_json::array();
  for (const Matrix& g : profile.pointwise) p.push_back(to_json(g));
  r.set("P", std::move(p));
  r.set("G", to_json(profile.contracted));
  add_profile_checks(r, profile, cfg);
}

struct Solved {
  Basis basis;
  ConstraintSystem system;
  LieAlgebraBasis algebra;
};

Solved solve_motions(const SpaceConfig& cfg) {
  Basis b = orthonormal(cfg).basis;
  ConstraintSystem s = assemble_motion_constraints(cfg.norm, b, motion_options(cfg));
  LieAlgebraBasis alg = solve_lie_algebra(s);
  return {std::move(b), std::move(s), std::move(alg)};
}

void add_generator_checks(Report& r, const ConstraintSystem& s, const LieAlgebraBasis& alg, const SpaceConfig& cfg) {
  const double tol = cfg.tolerances.closure.value_or(1e-8);
  double worst = 0.0;
  for (const MotionGenerator& g : alg.generators) worst = std::max(worst, s.residual(g.coefficients));
  r.add_check({"generator_residual", worst, tol, worst <= tol});
  const double cartan_tol = 1e-6 * (1.0 + s.cartan_scale);
  r.add_check({"cartan_contribution", s.cartan_contribution, cartan_tol, s.cartan_contribution <= cartan_tol});
}

void cmd_motions(Report& r, const SpaceConfig& cfg) {
  const Solved m = solve_motions(cfg);
  r.set("basis", basis_json(m.basis));
  r.set("dimension", m.algebra.dimension());
  r.set("rank", m.algebra.rank);
  r.set("singular_values", to_json(m.algebra.singular_values));
  r.set("generators", generators_json(m.algebra));
  add_generator_checks(r, m.system, m.algebra, cfg);
}

void cmd_quasimotions(Report& r, const SpaceConfig& cfg) {
  const Solved m = solve_motions(cfg);
  const ConstraintSystem q = assemble_quasimotion_constraints(cfg.norm, m.basis, motion_options(cfg));
  const LieAlgebraBasis qalg = solve_lie_algebra(q);
  const double angle_tol = cfg.tolerances.angle.value_or(1e-6);
  const EquivalenceReport eq = compare_algebras(m.system, q, angle_tol);
  r.set("basis", basis_json(m.basis));
  r.set("motion_dimension", eq.dimension_a);
  r.set("quasimotion_dimension", eq.dimension_b);
  r.set("max_principal_angle", eq.max_angle);
  r.set("equivalent", eq.equivalent);
  r.set("generators", generators_json(qalg));
  const double ddim = std::abs(static_cast<double>(eq.dimension_a) - static_cast<double>(eq.dimension_b));
  r.add_check({"dimension_match", ddim, 0.0, ddim == 0.0});
  r.add_check({"principal_angle", eq.max_angle, angle_tol, eq.max_angle <= angle_tol});
  add_generator_checks(r, q, qalg, cfg);
}

void cmd_drift(Report& r, const SpaceConfig& cfg) {
  const Solved m = solve_motions(cfg);
  const double min_order = cfg.tolerances.drift_min_order;
  r.set("basis", basis_json(m.basis));
  ordered_json fits = ordered_json::array();
  for (std::size_t i = 0; i < m.algebra.dimension(); ++i) {
    const DriftReport d = verify_first_order_preservation(cfg.norm, m.basis, m.algebra.generators[i], {1e-2, 1e-3, 1e-4},
                                                          min_order, motion_options(cfg));
    fits.push_back({{"generator", i},
                    {"eps", d.eps},
                    {"deviation", d.deviation},
                    {"fitted_order", d.fitted_order},
                    {"constant", d.constant},
                    {"exact", d.exact}});
    r.add_check({"drift_order[" + std::to_string(i) + "]", d.fitted_order, min_order, d.pass});
  }
  r.set("drift", std::move(fits));
}

void cmd_bracket(Report& r, const SpaceConfig& cfg) {
  const Solved m = solve_motions(cfg);
  const bool provable = cfg.norm.has_constant_metric();
  const double tol = cfg.tolerances.bracket.value_or(1e-10);
  r.set("basis", basis_json(m.basis));
  r.set("generators", generators_json(m.algebra));
  ordered_json table = ordered_json::array();
  double worst = 0.0;
  for (std::size_t i = 0; i < m.algebra.dimension(); ++i) {
    for (std::size_t j = i + 1; j < m.algebra.dimension(); ++j) {
      const BracketResult b = bracket(m.algebra.generators[i], m.algebra.generators[j], m.system);
      worst = std::max(worst, b.residual);
      table.push_back({{"i", i}, {"j", j}, {"residual", b.residual}, {"commutator", to_json(b.commutator)}});
    }
  }
  r.set("asserted", provable);
  r.set("brackets", std::move(table));
  r.add_check({"bracket_closure", worst, tol, worst <= tol, provable});
}

using Handler = std::function<void(Report&, const SpaceConfig&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"identities", cmd_identities}, {"orthogonalize", cmd_orthogonalize},
      {"profile", cmd_profile},       {"motions", cmd_motions},
      {"quasimotions", cmd_quasimotions}, {"drift", cmd_drift},
      {"bracket", cmd_bracket},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"identities", "orthogonalize", "profile", "motions",
                                              "quasimotions", "drift", "bracket"};
  return names;
}

void apply_overrides(SpaceConfig& config, const Invocation& inv) {
  if (inv.seed) config.seed = *inv.seed;
  if (inv.samples) config.samples = *inv.samples;
  config.echo["seed"] = config.seed;
  config.echo["samples"] = config.samples;
  if (inv.tol) {
    Tolerances& t = config.tolerances;
    t.identities = t.profile = t.closure = t.angle = t.bracket = *inv.tol;
    config.echo["tol"] = *inv.tol;
  }
}

Report run_command(const std::string& command, const SpaceConfig& config) {
  ordered_json inputs = ordered_json::parse(config.echo.dump());
  Report report(command, std::move(inputs));
  const auto it = handlers().find(command);
  if (it == handlers().end()) {
    report.set_error("unknown command '" + command + "'");
    return report;
  }
  try {
    it->second(report, config);
  } catch (const std::exception& e) {
    report.set_error(e.what());
  }
  return report;
}

int run(const Invocation& inv, std::ostream& out, std::ostream& err) {
  if (handlers().find(inv.command) == handlers().end()) {
    err << "error: unknown command '" << inv.command << "'\n";
    return 2;
  }
  if (inv.format != "text" && inv.format != "json") {
    err << "error: --format must be text or json\n";
    return 2;
  }
  std::optional<SpaceConfig> config;
  try {
    config.emplace(load_config(inv.config_path));
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return 2;
  }
  apply_overrides(*config, inv);
  const Report report = run_command(inv.command, *config);
  if (inv.format == "json") {
    report.write_json(out);
  } else {
    report.write_text(out);
  }
  return report.exit_code();
}

}  // namespace finsler::cli
