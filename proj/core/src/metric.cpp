#include "finsler/metric.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "finsler/error.hpp"

namespace finsler {

DerivativeMethod resolve_method(const NormModel& model, DerivativeMethod requested) {
  switch (requested) {
    case DerivativeMethod::Automatic:
    case DerivativeMethod::Analytic:
      if (model.has_analytic_metric()) return DerivativeMethod::Analytic;
      return model.has_jet_evaluator() ? DerivativeMethod::Hyperdual : DerivativeMethod::FiniteDifference;
    case DerivativeMethod::Hyperdual:
      if (!model.has_jet_evaluator()) {
        throw Error("hyperdual derivatives requested for a norm without a jet evaluator");
      }
      return DerivativeMethod::Hyperdual;
    case DerivativeMethod::FiniteDifference:
      return DerivativeMethod::FiniteDifference;
  }
  return requested;
}

namespace {

void require_nonzero(const NormModel& model, const Vector& v) {
  model.check_vector(v);
  if (v.isZero(0.0)) throw NonAdmissibleDirection("the zero vector is not an admissible direction");
}

F2Derivatives jet_derivatives(const NormModel& model, const Vector& v, int order) {
  const int n = model.dimension();
  std::vector<Jet> seeds;
  seeds.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) seeds.push_back(Jet::variable(n, order, i, v[i]));
  const Jet f = model.f2(std::span<const Jet>(seeds));

  F2Derivatives d;
  d.source = DerivativeMethod::Hyperdual;
  d.value = f.value();
  d.gradient = Vector::Zero(n);
  for (int i = 0; i < n; ++i) d.gradient[i] = f.d1(i);
  d.hessian = Matrix::Zero(n, n);
  if (order >= 2) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) d.hessian(i, j) = f.d2(i, j);
    }
  }
  if (order >= 3) {
    d.third = Tensor3(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) d.third(i, j, k) = f.d3(i, j, k);
      }
    }
  }
  return d;
}

F2Derivatives fd_derivatives(const NormModel& model, const Vector& v, int order,
                             const FiniteDifferenceOptions& fd) {
  const int n = model.dimension();
  const ScalarField field = [&model](std::span<const double> x) { return model.f2(x); };
  const double h2 = scaled_step(fd.second_order_step, v);
  const double h3 = scaled_step(fd.third_order_step, v);

  F2Derivatives d;
  d.source = DerivativeMethod::FiniteDifference;
  d.value = model.f2(v);
  d.gradient = Vector::Zero(n);
  for (int i = 0; i < n; ++i) {
    const std::array<int, 1> axes{i};
    d.gradient[i] = central_partial(field, v, axes, h2, fd.accuracy);
  }
  d.hessian = Matrix::Zero(n, n);
  if (order >= 2) {
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        const std::array<int, 2> axes{i, j};
        d.hessian(i, j) = d.hessian(j, i) = central_partial(field, v, axes, h2, fd.accuracy);
      }
    }
  }
  if (order >= 3) {
    d.third = Tensor3(n);
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        for (int k = j; k < n; ++k) {
          const std::array<int, 3> axes{i, j, k};
          const double x = central_partial(field, v, axes, h3, fd.accuracy);
          d.third(i, j, k) = d.third(i, k, j) = d.third(j, i, k) = x;
          d.third(j, k, i) = d.third(k, i, j) = d.third(k, j, i) = x;
        }
      }
    }
  }
  return d;
}

}  // namespace

Matrix randers_metric(const RandersNorm& norm, const Vector& v) {
  const Vector av = norm.alpha * v;
  const double alpha = std::sqrt(v.dot(av));
  const double f = alpha + norm.beta.dot(v);
  const Vector ell = av / alpha;
  const Vector shifted = ell + norm.beta;
  return (f / alpha) * (norm.alpha - ell * ell.transpose()) + shifted * shifted.transpose();
}

F2Derivatives f2_derivatives(const NormModel& model, const Vector& v, int order,
                             const DerivativeOptions& options) {
  if (order < 1 || order > 3) throw std::invalid_argument("f2_derivatives: order must be 1..3");
  require_nonzero(model, v);
  const DerivativeMethod method = resolve_method(model, options.method);
  if (method == DerivativeMethod::FiniteDifference) {
    return fd_derivatives(model, v, order, options.finite_difference);
  }
  if (method == DerivativeMethod::Hyperdual || (order == 3 && !model.has_constant_metric())) {
    return jet_derivatives(model, v, order);
  }

  // Closed forms.
  const int n = model.dimension();
  F2Derivatives d;
  d.source = DerivativeMethod::Analytic;
  d.value = model.f2(v);
  if (const auto* p = std::get_if<PseudoEuclideanNorm>(&model.parameters())) {
    Vector s(n);
    for (int i = 0; i < n; ++i) s[i] = p->signature[i];
    d.gradient = 2.0 * s.cwiseProduct(v);
    d.hessian = 2.0 * Matrix(s.asDiagonal());
  } else if (const auto* r = std::get_if<RandersNorm>(&model.parameters())) {
    const Vector av = r->alpha * v;
    const double alpha = std::sqrt(v.dot(av));
    if (!(alpha > 0.0)) throw NonAdmissibleDirection("Randers alpha-length vanishes");
    const double f = alpha + r->beta.dot(v);
    d.gradient = 2.0 * f * (av / alpha + r->beta);
    d.hessian = 2.0 * randers_metric(*r, v);
  } else {
    d.gradient = 2.0 * v;
    d.hessian = 2.0 * Matrix::Identity(n, n);
  }
  if (order >= 3) d.third = Tensor3(n);
  return d;
}

MetricTensor metric_at(const NormModel& model, const Vector& v, const DerivativeOptions& options) {
  const F2Derivatives d = f2_derivatives(model, v, 2, options);
  MetricTensor m;
  m.direction = v;
  m.source = d.source;
  const Matrix half = 0.5 * d.hessian;
  m.asymmetry = (half - half.transpose()).cwiseAbs().maxCoeff();
  m.g = 0.5 * (half + half.transpose());

  const Eigen::JacobiSVD<Matrix> svd(m.g);
  const auto& sv = svd.singularValues();
  if (!(sv.minCoeff() > kMetricRankTolerance * sv.maxCoeff())) {
    std::ostringstream msg;
    msg << "metric is singular at this direction (singular values " << sv.maxCoeff() << " .. "
        << sv.minCoeff() << ")";
    throw SingularMetric(msg.str());
  }
  return m;
}

CartanTensor cartan_at(const NormModel& model, const Vector& v, const DerivativeOptions& options) {
  F2Derivatives d = f2_derivatives(model, v, 3, options);
  const int n = model.dimension();
  CartanTensor c;
  c.direction = v;
  c.source = d.source;
  c.c = Tensor3(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) c.c(i, j, k) = 0.25 * d.third(i, j, k);
    }
  }
  c.asymmetry = c.c.max_asymmetry();
  c.c.symmetrize();
  return c;
}

double CartanTensor::direction_contraction() const {
  const int n = c.dimension();
  double m = 0.0;
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += direction[i] * c(i, j, k);
      m = std::max(m, std::abs(s));
    }
  }
  return m;
}

double CartanTensor::operator()(const Vector& x, const Vector& y, const Vector& z) const {
  const int n = c.dimension();
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) s += c(i, j, k) * x[i] * y[j] * z[k];
    }
  }
  return s;
}

}  // namespace finsler
