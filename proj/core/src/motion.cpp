#include "finsler/motion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "finsler/error.hpp"
#include "finsler/linalg.hpp"

namespace finsler {

Vector flatten(const Matrix& a) {
  const auto n = a.rows();
  Vector x(a.size());
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index m = 0; m < a.cols(); ++m) x[k * a.cols() + m] = a(k, m);
  }
  return x;
}

Matrix unflatten(const Vector& x, int n) {
  if (x.size() != static_cast<Eigen::Index>(n) * n) throw DimensionMismatch("flattened generator has wrong size");
  Matrix a(n, n);
  for (int k = 0; k < n; ++k) {
    for (int m = 0; m < n; ++m) a(k, m) = x[k * n + m];
  }
  return a;
}

ConstraintSystem ConstraintSystem::from_rows(int n, Matrix rows, std::string origin) {
  if (rows.cols() != static_cast<Eigen::Index>(n) * n) {
    throw DimensionMismatch("constraint matrix must have n^2 columns");
  }
  ConstraintSystem s;
  s.dimension = n;
  s.rows = std::move(rows);
  s.origin = std::move(origin);
  return s;
}

double ConstraintSystem::residual(const Matrix& a) const {
  if (a.rows() != dimension || a.cols() != dimension) throw DimensionMismatch("generator has wrong shape");
  if (rows.rows() == 0) return 0.0;
  return (rows * flatten(a)).cwiseAbs().maxCoeff();
}

int ConstraintSystem::rank(double relative_tolerance) const { return numerical_rank(rows, relative_tolerance); }

int ConstraintSystem::nullity(double relative_tolerance) const {
  return dimension * dimension - rank(relative_tolerance);
}

namespace {

void require_orthonormal(const NormModel& model, const Basis& basis, const MotionOptions& options) {
  const MetricProfile profile = metric_profile(model, basis, options.derivatives);
  const double tol = options.profile_tolerance.value_or(profile_tolerance(profile.source));
  const ProfileCheck check = check_orthonormal_pattern(profile, tol);
  if (!check.pass) {
    std::ostringstream msg;
    msg << "basis is not orthonormal: max upper |G_kl| = " << check.max_upper
        << ", max diagonal defect = " << check.max_diagonal_defect << " (tolerance " << tol << ")";
    throw NotOrthonormalBasis(msg.str());
  }
}

// Fills one row per pair k <= l from basis-frame metrics ĝ(e_k) and the
// Cartan coefficients cartan(k, l, m) = 2 C(e_k)(e_k, e_l, e_m).
ConstraintSystem build_rows(int n, const std::vector<Matrix>& metrics, const std::vector<Tensor3>& cartan,
                            std::string origin) {
  ConstraintSystem s;
  s.dimension = n;
  s.origin = std::move(origin);
  s.rows = Matrix::Zero(n * (n + 1) / 2, n * n);
  Eigen::Index row = 0;
  for (int k = 0; k < n; ++k) {
    const Matrix& g = metrics[static_cast<std::size_t>(k)];
    const Tensor3& c = cartan[static_cast<std::size_t>(k)];
    for (int l = k; l < n; ++l) {
      for (int m = 0; m < n; ++m) {
        s.rows(row, k * n + m) += g(m, l) + c(k, l, m);
        s.rows(row, l * n + m) += g(k, m);
        s.cartan_contribution = std::max(s.cartan_contribution, std::abs(c(k, l, m)));
      }
      s.labels.emplace_back(k, l);
      ++row;
    }
  }
  return s;
}

}  // namespace

ConstraintSystem assemble_motion_constraints(const NormModel& model, const Basis& basis,
                                             const MotionOptions& options) {
  require_orthonormal(model, basis, options);
  const int n = basis.dimension();
  const Matrix e = basis.columns();

  std::vector<Matrix> metrics;
  std::vector<Tensor3> cartan;
  double scale = 0.0;
  for (int k = 0; k < n; ++k) {
    const Vector& ek = basis[static_cast<std::size_t>(k)];
    const MetricTensor g = metric_at(model, ek, options.derivatives);
    metrics.push_back(e.transpose() * g.g * e);

    const CartanTensor c = cartan_at(model, ek, options.derivatives);
    scale = std::max(scale, c.c.max_abs());
    Tensor3 contracted(n);
    for (int l = 0; l < n; ++l) {
      for (int m = 0; m < n; ++m) contracted(k, l, m) = 2.0 * c(ek, basis[static_cast<std::size_t>(l)], basis[static_cast<std::size_t>(m)]);
    }
    cartan.push_back(std::move(contracted));
  }
  ConstraintSystem s = build_rows(n, metrics, cartan, "motion");
  s.cartan_scale = scale;
  return s;
}

NormModel pull_back(const NormModel& model, const Basis& basis) {
  const int n = basis.dimension();
  if (n != model.dimension()) throw DimensionMismatch("basis dimension does not match the norm");
  const Matrix e = basis.columns();

  CustomNorm pulled;
  pulled.label = std::string(model.kind_name()) + " in basis coordinates";
  pulled.f2 = [model, e](std::span<const double> x) {
    const Eigen::Map<const Vector> coords(x.data(), static_cast<Eigen::Index>(x.size()));
    return model.f2(Vector(e * coords));
  };
  if (model.has_jet_evaluator()) {
    pulled.f2_jet = [model, e](std::span<const Jet> x) {
      const auto dim = static_cast<int>(x.size());
      std::vector<Jet> y;
      y.reserve(x.size());
      for (int i = 0; i < dim; ++i) {
        Jet yi(x[0].dimension(), x[0].order(), 0.0);
        for (int j = 0; j < dim; ++j) {
          if (e(i, j) != 0.0) yi += e(i, j) * x[static_cast<std::size_t>(j)];
        }
        y.push_back(std::move(yi));
      }
      return model.f2(std::span<const Jet>(y));
    };
  }
  return NormModel::custom(n, std::move(pulled));
}

ConstraintSystem assemble_quasimotion_constraints(const NormModel& model, const Basis& basis,
                                                  const MotionOptions& options) {
  require_orthonormal(model, basis, options);
  const int n = basis.dimension();
  const NormModel local = pull_back(model, basis);

  DerivativeOptions local_options = options.derivatives;
  if (local_options.method == DerivativeMethod::Analytic) local_options.method = DerivativeMethod::Automatic;

  std::vector<Matrix> metrics;
  std::vector<Tensor3> cartan;
  double scale = 0.0;
  for (int k = 0; k < n; ++k) {
    const Vector unit = Vector::Unit(n, k);
    metrics.push_back(metric_at(local, unit, local_options).g);
    // ∂_m ĝ_kl = 2 Ĉ_klm
    const CartanTensor c = cartan_at(local, unit, local_options);
    scale = std::max(scale, c.c.max_abs());
    Tensor3 derivative(n);
    for (int l = 0; l < n; ++l) {
      for (int m = 0; m < n; ++m) derivative(k, l, m) = 2.0 * c.c(k, l, m);
    }
    cartan.push_back(std::move(derivative));
  }
  ConstraintSystem s = build_rows(n, metrics, cartan, "quasimotion");
  s.cartan_scale = scale;
  return s;
}

LieAlgebraBasis solve_lie_algebra(const ConstraintSystem& system, double relative_tolerance) {
  const Nullspace ns = nullspace(system.rows, relative_tolerance);
  LieAlgebraBasis out;
  out.singular_values = ns.singular_values;
  out.rank = ns.rank;
  for (Eigen::Index j = 0; j < ns.basis.cols(); ++j) {
    out.generators.push_back(MotionGenerator{unflatten(ns.basis.col(j), system.dimension)});
  }
  return out;
}

ClosureReport verify_additive_closure(const ConstraintSystem& system, const MotionGenerator& f,
                                      const MotionGenerator& g, double tol) {
  ClosureReport r;
  r.tolerance = tol;
  r.residual_f = system.residual(f.coefficients);
  r.residual_g = system.residual(g.coefficients);
  r.residual_sum = system.residual(f.coefficients + g.coefficients);
  r.pass = r.residual_sum <= tol;
  return r;
}

double first_order_drift(const NormModel& model, const Basis& basis, const MotionGenerator& gen, double eps,
                         const DerivativeOptions& options) {
  const int n = basis.dimension();
  if (gen.coefficients.rows() != n || gen.coefficients.cols() != n) {
    throw DimensionMismatch("generator shape does not match the basis");
  }
  std::vector<Vector> moved;
  for (int k = 0; k < n; ++k) {
    Vector v = basis[static_cast<std::size_t>(k)];
    for (int m = 0; m < n; ++m) v += eps * gen.coefficients(k, m) * basis[static_cast<std::size_t>(m)];
    moved.push_back(std::move(v));
  }
  const MetricProfile profile = metric_profile(model, Basis(std::move(moved)), options);
  const ProfileCheck check = check_orthonormal_pattern(profile, 0.0);
  return std::max(check.max_upper, check.max_diagonal_defect);
}

DriftReport verify_first_order_preservation(const NormModel& model, const Basis& basis,
                                            const MotionGenerator& gen, const std::vector<double>& ladder,
                                            double min_order, const MotionOptions& options) {
  require_orthonormal(model, basis, options);
  DriftReport r;
  r.min_order = min_order;
  for (double eps : ladder) {
    if (!(eps >= 1e-6 && eps <= 1e-2)) throw std::invalid_argument("drift eps must lie in [1e-6, 1e-2]");
    r.eps.push_back(eps);
    r.deviation.push_back(first_order_drift(model, basis, gen, eps, options.derivatives));
  }

  std::vector<double> xs;
  std::vector<double> ys;
  for (std::size_t i = 0; i < r.eps.size(); ++i) {
    if (r.deviation[i] > kDriftFloor) {
      xs.push_back(std::log(r.eps[i]));
      ys.push_back(std::log(r.deviation[i]));
    }
  }
  if (xs.size() < 2) {
    // Nothing above rounding: the motion is exact to the precision available.
    r.exact = std::all_of(r.deviation.begin(), r.deviation.end(), [](double d) { return d <= kDriftFloor; });
    r.fitted_order = std::numeric_limits<double>::infinity();
    r.pass = r.exact;
    return r;
  }
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  r.fitted_order = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  r.constant = std::exp((sy - r.fitted_order * sx) / n);
  r.pass = r.fitted_order >= min_order;
  return r;
}

EquivalenceReport compare_algebras(const ConstraintSystem& a, const ConstraintSystem& b, double angle_tol,
                                   double rank_tol) {
  if (a.rows.cols() != b.rows.cols()) throw DimensionMismatch("constraint systems act on different spaces");
  const Nullspace na = nullspace(a.rows, rank_tol);
  const Nullspace nb = nullspace(b.rows, rank_tol);
  EquivalenceReport r;
  r.angle_tolerance = angle_tol;
  r.dimension_a = static_cast<std::size_t>(na.basis.cols());
  r.dimension_b = static_cast<std::size_t>(nb.basis.cols());
  r.max_angle = largest_principal_angle(na.basis, nb.basis);
  r.equivalent = r.dimension_a == r.dimension_b && r.max_angle <= angle_tol;
  return r;
}

BracketResult bracket(const MotionGenerator& f, const MotionGenerator& g, const ConstraintSystem& system) {
  BracketResult r;
  r.commutator = f.coefficients * g.coefficients - g.coefficients * f.coefficients;
  r.residual = system.residual(r.commutator);
  return r;
}

Matrix to_ambient(const Basis& basis, const MotionGenerator& gen) {
  const Matrix e = basis.columns();
  return e * gen.coefficients.transpose() * e.inverse();
}

}  // namespace finsler
