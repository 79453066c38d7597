// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "finsler/error.hpp"
#include "finsler/identities.hpp"
#include "finsler/linalg.hpp"
#include "finsler/metric.hpp"
#include "finsler/motion.hpp"
#include "finsler/ortho.hpp"
#include "finsler/sampling.hpp"
#include "oracles/oracles.hpp"
#include "support/models.hpp"

using namespace finsler;
using namespace finsler::testing;

namespace {

struct NamedNorm {
  std::string name;
  NormModel model;
};

NormModel randers4() {
  Matrix alpha = Matrix::Identity(4, 4);
  for (int i = 0; i + 1 < 4; ++i) alpha(i, i + 1) = alpha(i + 1, i) = 0.25;
  Vector beta = vec({0.3, -0.5, 0.2, 0.4});
  const double scale = 0.8 / randers_beta_norm(alpha, beta);
  return NormModel::randers(alpha, beta * scale);
}

std::vector<NamedNorm> positive_definite_norms() {
  return {{"euclidean3", NormModel::euclidean(3)},
          {"randers2", randers_example()},
          {"randers3", randers3()},
          {"randers4", randers4()},
          {"quartic3", quartic(3)}};
}

std::vector<NamedNorm> identity_suite_norms() {
  std::vector<NamedNorm> out = positive_definite_norms();
  out.push_back({"pseudo(1,3)", NormModel::pseudo_euclidean({-1, 1, 1, 1})});
  out.push_back({"pseudo(2,2)", NormModel::pseudo_euclidean({-1, -1, 1, 1})});
  out.push_back({"pseudo(3,1)", NormModel::pseudo_euclidean({-1, -1, -1, 1})});
  return out;
}

/// Orthonormalized basis from seeded random input; indefinite norms reorder pivots.
Basis orthonormal_basis(const NormModel& model, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  OrthogonalizeOptions opts;
  opts.reorder_pivots = model.definiteness() != Definiteness::Positive;
  return orthonormalize(model, Basis(random_basis(model.dimension(), rng)), opts).basis;
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const char* title, const std::function<Outcome()>& body) {
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.pass) ++failures;
  std::printf("%s  %2d  %-34s %s\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

// Structure constants for so(3) and so(1,3) in the diag(-1,1,1,1) convention.
int levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

Matrix rotation(int i, int n, int offset) {
  Matrix j = Matrix::Zero(n, n);
  const int a = (i + 1) % 3, b = (i + 2) % 3;
  j(offset + a, offset + b) = -1;
  j(offset + b, offset + a) = 1;
  return j;
}

Matrix boost(int i) {
  Matrix k = Matrix::Zero(4, 4);
  k(0, 1 + i) = k(1 + i, 0) = 1;
  return k;
}

Outcome euler_suite() {
  const auto start = std::chrono::steady_clock::now();
  double worst_exact = 0.0, worst_fd = 0.0;
  bool ok = true;
  for (const auto& [name, model] : identity_suite_norms()) {
    const auto samples = sample_admissible_directions(model, 100, 2024);
    for (const auto& opts : {hyperdual(), finite_difference()}) {
      IdentityOptions io;
      io.derivatives = opts;
      for (const IdentityReport& r : check_euler_identities(model, samples, io)) {
        const bool exact = opts.method == DerivativeMethod::Hyperdual;
        (exact ? worst_exact : worst_fd) = std::max(exact ? worst_exact : worst_fd, r.max_residual);
        ok = ok && r.pass && r.tolerance <= (exact ? 1e-10 : 1e-6) && r.sample_count == 100;
      }
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ok = ok && secs < 5.0;
  return {ok, fmt("hyperdual max %.2e", worst_exact) + fmt(", fd max %.2e", worst_fd) + fmt(", %.2fs", secs)};
}

Outcome cross_path() {
  double worst = 0.0;
  for (const auto& [name, model] : identity_suite_norms()) {
    for (const Vector& v : sample_admissible_directions(model, 100, 2024)) {
      const Matrix gh = metric_at(model, v, hyperdual()).g;
      const Matrix gf = metric_at(model, v, finite_difference()).g;
      worst = std::max(worst, (gh - gf).cwiseAbs().maxCoeff() / gh.cwiseAbs().maxCoeff());
    }
  }
  return {worst <= 1e-5, fmt("max relative difference %.2e", worst)};
}

Outcome orthogonalization_round_trip() {
  double upper = 0.0, diag = 0.0, span = 0.0, gs = 0.0;
  for (const auto& [name, model] : positive_definite_norms()) {
    const int n = model.dimension();
    std::mt19937_64 rng(77);
    for (int t = 0; t < 100; ++t) {
      const std::vector<Vector> in = random_basis(n, rng);
      const Basis out = orthonormalize(model, Basis(in)).basis;
      const ProfileCheck pc = check_orthonormal_pattern(metric_profile(model, out), 1e-8);
      upper = std::max(upper, pc.max_upper);
      diag = std::max(diag, pc.max_diagonal_defect);
      const Matrix a = Basis(in).columns(), b = out.columns();
      for (int k = 1; k <= n; ++k) span = std::max(span, oracle::span_residual(a.leftCols(k), b.leftCols(k)));
      if (model.kind() == NormKind::Euclidean) {
        const auto ref = oracle::classical_gram_schmidt(in);
        for (int k = 0; k < n; ++k) gs = std::max(gs, (ref[k] - out[k]).cwiseAbs().maxCoeff());
      }
    }
  }
  const bool ok = upper <= 1e-8 && diag <= 1e-8 && span <= 1e-8 && gs <= 1e-12;
  return {ok, fmt("upper %.1e", upper) + fmt(", diag %.1e", diag) + fmt(", span %.1e", span) +
                  fmt(", gram-schmidt %.1e", gs)};
}

Outcome triangular_profile() {
  bool ok = true;
  std::string detail;
  for (const NormModel& model : {randers_example(), randers3()}) {
    double best_lower = 0.0, worst_upper = 0.0;
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
      const Basis out = orthonormalize(model, Basis(random_basis(model.dimension(), rng))).basis;
      const ProfileCheck pc = check_orthonormal_pattern(metric_profile(model, out), 1e-8);
      worst_upper = std::max(worst_upper, pc.max_upper);
      best_lower = std::max(best_lower, pc.max_lower);
    }
    ok = ok && best_lower > 1e-4 && worst_upper <= 1e-8;
    detail += "n=" + std::to_string(model.dimension()) + fmt(" lower %.3f", best_lower) +
              fmt(" upper %.1e; ", worst_upper);
  }
  return {ok, detail};
}

Outcome lie_dimensions() {
  std::vector<std::vector<int>> signatures;
  for (int n = 2; n <= 6; ++n) signatures.emplace_back(static_cast<std::size_t>(n), 1);
  signatures.push_back({-1, 1});
  signatures.push_back({-1, 1, 1});
  signatures.push_back({-1, 1, 1, 1});
  signatures.push_back({-1, -1, 1, 1});
  bool ok = true;
  std::string detail;
  for (const auto& sig : signatures) {
    const int n = static_cast<int>(sig.size());
    const ConstraintSystem s = assemble_motion_constraints(NormModel::pseudo_euclidean(sig), Basis::standard(n));
    const int dim = static_cast<int>(solve_lie_algebra(s).dimension());
    const int oracle_dim = oracle::brute_force_nullity(oracle::antisymmetry_system(sig));
    ok = ok && dim == n * (n - 1) / 2 && dim == oracle_dim && oracle::brute_force_nullity(s.rows) == dim;
    detail += std::to_string(dim) + " ";
  }
  const int lorentz =
      static_cast<int>(solve_lie_algebra(assemble_motion_constraints(NormModel::pseudo_euclidean({-1, 1, 1, 1}),
                                                                     Basis::standard(4)))
                           .dimension());
  ok = ok && lorentz == 6;
  return {ok, "dimensions " + detail};
}

std::vector<NamedNorm> algebra_norms() {
  std::vector<NamedNorm> out = positive_definite_norms();
  out.push_back({"pseudo(1,3)", NormModel::pseudo_euclidean({-1, 1, 1, 1})});
  out.push_back({"pseudo(2,2)", NormModel::pseudo_euclidean({-1, -1, 1, 1})});
  return out;
}

Outcome first_order() {
  double worst = 1e300;
  int count = 0, exact = 0;
  bool ok = true;
  for (const auto& [name, model] : algebra_norms()) {
    const Basis b = orthonormal_basis(model, 11);
    for (const MotionGenerator& g : solve_lie_algebra(assemble_motion_constraints(model, b)).generators) {
      const DriftReport r = verify_first_order_preservation(model, b, g);
      ok = ok && r.pass;
      ++count;
      if (r.exact) ++exact;
      else worst = std::min(worst, r.fitted_order);
    }
  }
  return {ok, std::to_string(count) + " generators" + fmt(", min order %.3f", worst) + ", " +
                  std::to_string(exact) + " exact"};
}

Outcome additive_closure() {
  double worst = 0.0;
  std::normal_distribution<double> normal;
  std::mt19937_64 rng(99);
  for (const auto& [name, model] : algebra_norms()) {
    const Basis b = orthonormal_basis(model, 11);
    const ConstraintSystem s = assemble_motion_constraints(model, b);
    const LieAlgebraBasis alg = solve_lie_algebra(s);
    const int n = model.dimension();
    for (int t = 0; t < 50; ++t) {
      Matrix f = Matrix::Zero(n, n), g = Matrix::Zero(n, n);
      for (const auto& x : alg.generators) {
        f += normal(rng) * x.coefficients;
        g += normal(rng) * x.coefficients;
      }
      worst = std::max(worst, verify_additive_closure(s, {f}, {g}).residual_sum);
    }
  }
  return {worst <= 1e-12, fmt("max sum residual %.2e", worst)};
}

Outcome bracket_closure() {
  double table = 0.0, membership = 0.0;
  const ConstraintSystem so3 = assemble_motion_constraints(NormModel::euclidean(3), Basis::standard(3));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Matrix expected = Matrix::Zero(3, 3);
      for (int k = 0; k < 3; ++k) expected += levi_civita(i, j, k) * rotation(k, 3, 0);
      const BracketResult r = bracket({rotation(i, 3, 0)}, {rotation(j, 3, 0)}, so3);
      table = std::max(table, (r.commutator - expected).cwiseAbs().maxCoeff());
      membership = std::max(membership, r.residual);
    }
  }

  // [J_i,J_j] = ε J_k, [J_i,K_j] = ε K_k, [K_i,K_j] = −ε J_k.
  const ConstraintSystem so13 =
      assemble_motion_constraints(NormModel::pseudo_euclidean({-1, 1, 1, 1}), Basis::standard(4));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Matrix jj = Matrix::Zero(4, 4), jk = Matrix::Zero(4, 4), kk = Matrix::Zero(4, 4);
      for (int k = 0; k < 3; ++k) {
        jj += levi_civita(i, j, k) * rotation(k, 4, 1);
        jk += levi_civita(i, j, k) * boost(k);
        kk -= levi_civita(i, j, k) * rotation(k, 4, 1);
      }
      const std::array<std::pair<BracketResult, Matrix>, 3> cases{{
          {bracket({rotation(i, 4, 1)}, {rotation(j, 4, 1)}, so13), jj},
          {bracket({rotation(i, 4, 1)}, {boost(j)}, so13), jk},
          {bracket({boost(i)}, {boost(j)}, so13), kk},
      }};
      for (const auto& [r, expected] : cases) {
        table = std::max(table, (r.commutator - expected).cwiseAbs().maxCoeff());
        membership = std::max(membership, r.residual);
      }
    }
  }

  // Randers: measured only.
  double randers = 0.0;
  for (const NormModel& model : {randers_example(), randers3(), randers4()}) {
    const Basis b = orthonormal_basis(model, 11);
    const ConstraintSystem s = assemble_motion_constraints(model, b);
    const LieAlgebraBasis alg = solve_lie_algebra(s);
    for (const auto& f : alg.generators) {
      for (const auto& g : alg.generators) randers = std::max(randers, bracket(f, g, s).residual);
    }
  }
  return {table <= 1e-12 && membership <= 1e-12,
          fmt("table %.1e", table) + fmt(", membership %.1e", membership) + fmt(", randers (reported) %.2e", randers)};
}

Outcome motions_vs_quasimotions() {
  double worst = 0.0;
  bool ok = true;
  for (const auto& [name, model] : algebra_norms()) {
    const Basis b = orthonormal_basis(model, 11);
    const EquivalenceReport r =
        compare_algebras(assemble_motion_constraints(model, b), assemble_quasimotion_constraints(model, b));
    ok = ok && r.equivalent && r.dimension_a == r.dimension_b && r.max_angle <= 1e-6;
    worst = std::max(worst, r.max_angle);
  }
  return {ok, fmt("max principal angle %.2e", worst)};
}

Outcome negative_controls() {
  // F² = v1⁴ + v2² at (1,1): v·∇F² − 2F² = (4 + 2) − 4 = 2.
  const IdentityResiduals nh = identity_residuals(nonhomogeneous(), vec({1, 1}));
  const bool homogeneity = std::abs(nh.euler - 2.0) <= 1e-12;
  const IdentityReport rep = check_euler_identities(nonhomogeneous(), std::vector<Vector>{vec({1, 1})}).front();

  // The identity leaves every diagonal row at 2.
  const ConstraintSystem s = assemble_motion_constraints(NormModel::euclidean(3), Basis::standard(3));
  const double identity_residual = s.residual(Matrix::Identity(3, 3));

  bool isotropic = false;
  try {
    orthogonalize(NormModel::pseudo_euclidean({-1, 1}), Basis({vec({1, 1}), vec({1, 0})}));
  } catch (const IsotropicPivot&) {
    isotropic = true;
  }
  const bool ok = homogeneity && !rep.pass && std::abs(identity_residual - 2.0) <= 1e-15 && isotropic;
  return {ok, fmt("euler residual %.17g", nh.euler) + fmt(", identity residual %.17g", identity_residual) +
                  (isotropic ? ", IsotropicPivot raised" : ", no error raised")};
}

}  // namespace

int main() {
  report(1, "euler identity suite", euler_suite);
  report(2, "cross-path metric agreement", cross_path);
  report(3, "orthogonalization round-trip", orthogonalization_round_trip);
  report(4, "triangular profile", triangular_profile);
  report(5, "lie algebra dimensions", lie_dimensions);
  report(6, "first-order preservation", first_order);
  report(7, "additive closure", additive_closure);
  report(8, "bracket closure", bracket_closure);
  report(9, "motions match quasimotions", motions_vs_quasimotions);
  report(10, "negative controls", negative_controls);
  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
