#include "finsler/norm.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "finsler/error.hpp"

namespace finsler {

const char* to_string(DerivativeMethod method) {
  switch (method) {
    case DerivativeMethod::Automatic: return "automatic";
    case DerivativeMethod::Analytic: return "analytic";
    case DerivativeMethod::Hyperdual: return "hyperdual";
    case DerivativeMethod::FiniteDifference: return "finite-difference";
  }
  return "unknown";
}

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double scalar_value(double x) { return x; }
double scalar_value(const Jet& x) { return x.value(); }

double constant_like(double, double c) { return c; }
Jet constant_like(const Jet& ref, double c) { return Jet(ref.dimension(), ref.order(), c); }

template <class T>
bool is_zero(std::span<const T> v) {
  return std::all_of(v.begin(), v.end(), [](const T& x) { return scalar_value(x) == 0.0; });
}

template <class T>
T monomial_sum(std::span<const T> v, const std::vector<Monomial>& terms) {
  T sum = constant_like(v[0], 0.0);
  for (const Monomial& term : terms) {
    T prod = constant_like(v[0], term.coefficient);
    for (std::size_t i = 0; i < term.powers.size(); ++i) {
      for (int p = 0; p < term.powers[i]; ++p) prod *= v[i];
    }
    sum += prod;
  }
  return sum;
}

void check_monomials(int n, const std::vector<Monomial>& terms, int required_degree) {
  if (terms.empty()) throw InvalidModel("polynomial norm needs at least one term");
  for (const Monomial& term : terms) {
    if (static_cast<int>(term.powers.size()) != n) {
      throw InvalidModel("monomial power list must have one entry per coordinate");
    }
    if (!std::isfinite(term.coefficient)) throw InvalidModel("monomial coefficient must be finite");
    int degree = 0;
    for (int p : term.powers) {
      if (p < 0) throw InvalidModel("monomial powers must be non-negative");
      degree += p;
    }
    if (required_degree > 0 && degree != required_degree) {
      std::ostringstream msg;
      msg << "monomial of degree " << degree << " in a homogeneous polynomial of degree "
          << required_degree;
      throw InvalidModel(msg.str());
    }
  }
}

}  // namespace

NormModel NormModel::euclidean(int n) {
  if (n < 2) throw InvalidModel("dimension must be at least 2");
  return NormModel(n, EuclideanNorm{});
}

NormModel NormModel::pseudo_euclidean(std::vector<int> signature) {
  const int n = static_cast<int>(signature.size());
  if (n < 2) throw InvalidModel("dimension must be at least 2");
  for (int s : signature) {
    if (s != 1 && s != -1) throw InvalidModel("signature entries must be +1 or -1");
  }
  return NormModel(n, PseudoEuclideanNorm{std::move(signature)});
}

double randers_beta_norm(const Matrix& alpha, const Vector& beta) {
  Eigen::LLT<Matrix> llt(alpha);
  if (llt.info() != Eigen::Success) throw InvalidModel("Randers alpha must be positive definite");
  return std::sqrt(beta.dot(llt.solve(beta)));
}

NormModel NormModel::randers(Matrix alpha, Vector beta) {
  const auto n = alpha.rows();
  if (n < 2) throw InvalidModel("dimension must be at least 2");
  if (alpha.cols() != n || beta.size() != n) {
    throw InvalidModel("Randers alpha must be n x n and beta must have n entries");
  }
  if (!alpha.allFinite() || !beta.allFinite()) throw InvalidModel("Randers parameters must be finite");
  if ((alpha - alpha.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, alpha.cwiseAbs().maxCoeff())) {
    throw InvalidModel("Randers alpha must be symmetric");
  }
  alpha = 0.5 * (alpha + alpha.transpose()).eval();
  if (randers_beta_norm(alpha, beta) >= 1.0) {
    throw InvalidModel("Randers beta must have alpha-norm strictly below 1");
  }
  return NormModel(static_cast<int>(n), RandersNorm{std::move(alpha), std::move(beta)});
}

NormModel NormModel::mth_root(int n, int order, std::vector<Monomial> terms) {
  if (n < 2) throw InvalidModel("dimension must be at least 2");
  if (order < 3) throw InvalidModel("m-th root norm needs order m >= 3");
  check_monomials(n, terms, order);
  return NormModel(n, MthRootNorm{order, std::move(terms)});
}

NormModel NormModel::custom(int n, CustomNorm norm) {
  if (n < 2) throw InvalidModel("dimension must be at least 2");
  if (!norm.f2) throw InvalidModel("custom norm needs an F² evaluator");
  return NormModel(n, std::move(norm));
}

NormModel NormModel::polynomial_f2(int n, std::vector<Monomial> terms, std::string label) {
  if (n < 2) throw InvalidModel("dimension must be at least 2");
  check_monomials(n, terms, 0);
  CustomNorm norm;
  norm.label = std::move(label);
  norm.defined_at_origin = true;
  norm.f2 = [terms](std::span<const double> v) { return monomial_sum(v, terms); };
  norm.f2_jet = [terms](std::span<const Jet> v) { return monomial_sum(v, terms); };
  return NormModel(n, std::move(norm));
}

NormKind NormModel::kind() const {
  return std::visit(Overloaded{
                        [](const EuclideanNorm&) { return NormKind::Euclidean; },
                        [](const PseudoEuclideanNorm&) { return NormKind::PseudoEuclidean; },
                        [](const RandersNorm&) { return NormKind::Randers; },
                        [](const MthRootNorm&) { return NormKind::MthRoot; },
                        [](const CustomNorm&) { return NormKind::Custom; },
                    },
                    params_);
}

std::string_view NormModel::kind_name() const {
  switch (kind()) {
    case NormKind::Euclidean: return "euclidean";
    case NormKind::PseudoEuclidean: return "pseudo_euclidean";
    case NormKind::Randers: return "randers";
    case NormKind::MthRoot: return "mth_root";
    case NormKind::Custom: return "custom";
  }
  return "unknown";
}

Definiteness NormModel::definiteness() const {
  switch (kind()) {
    case NormKind::Euclidean:
    case NormKind::Randers:
      return Definiteness::Positive;
    case NormKind::PseudoEuclidean: {
      const auto& sig = std::get<PseudoEuclideanNorm>(params_).signature;
      return std::all_of(sig.begin(), sig.end(), [](int s) { return s > 0; }) ? Definiteness::Positive
                                                                              : Definiteness::Indefinite;
    }
    default:
      return Definiteness::Unknown;
  }
}

bool NormModel::has_constant_metric() const {
  return kind() == NormKind::Euclidean || kind() == NormKind::PseudoEuclidean;
}

bool NormModel::has_analytic_metric() const {
  return kind() == NormKind::Euclidean || kind() == NormKind::PseudoEuclidean ||
         kind() == NormKind::Randers;
}

bool NormModel::has_jet_evaluator() const {
  if (const auto* c = std::get_if<CustomNorm>(&params_)) return static_cast<bool>(c->f2_jet);
  return true;
}

void NormModel::check_vector(const Vector& v) const {
  if (v.size() != n_) {
    std::ostringstream msg;
    msg << "vector of dimension " << v.size() << " used with a norm of dimension " << n_;
    throw DimensionMismatch(msg.str());
  }
  if (!v.allFinite()) throw NonAdmissibleDirection("vector has non-finite entries");
}

template <class T>
T NormModel::evaluate(std::span<const T> v) const {
  if (static_cast<int>(v.size()) != n_) throw DimensionMismatch("vector dimension does not match the norm");
  return std::visit(
      Overloaded{
          [&](const EuclideanNorm&) {
            T sum = constant_like(v[0], 0.0);
            for (const T& x : v) sum += x * x;
            return sum;
          },
          [&](const PseudoEuclideanNorm& p) {
            T sum = constant_like(v[0], 0.0);
            for (int i = 0; i < n_; ++i) sum += static_cast<double>(p.signature[i]) * (v[i] * v[i]);
            return sum;
          },
          [&](const RandersNorm& r) {
            if constexpr (std::is_same_v<T, Jet>) {
              if (is_zero(v)) throw NonAdmissibleDirection("Randers norm is not differentiable at the origin");
            }
            T quad = constant_like(v[0], 0.0);
            T drift = constant_like(v[0], 0.0);
            for (int i = 0; i < n_; ++i) {
              T row = constant_like(v[0], 0.0);
              for (int j = 0; j < n_; ++j) row += r.alpha(i, j) * v[j];
              quad += v[i] * row;
              drift += r.beta(i) * v[i];
            }
            using std::sqrt;
            T f = sqrt(quad) + drift;
            return f * f;
          },
          [&](const MthRootNorm& m) {
            if (is_zero(v)) throw NonAdmissibleDirection("m-th root norm is undefined at the origin");
            T poly = monomial_sum(v, m.terms);
            if (scalar_value(poly) <= 0.0) {
              throw NonAdmissibleDirection("m-th root polynomial is not positive at this direction");
            }
            using std::pow;
            return pow(poly, 2.0 / m.order);
          },
          [&](const CustomNorm& c) {
            if (!c.defined_at_origin && is_zero(v)) {
              throw NonAdmissibleDirection("custom norm is undefined at the origin");
            }
            if constexpr (std::is_same_v<T, Jet>) {
              if (!c.f2_jet) throw Error("custom norm '" + c.label + "' has no jet evaluator");
              return c.f2_jet(v);
            } else {
              return c.f2(v);
            }
          },
      },
      params_);
}

double NormModel::f2(std::span<const double> v) const { return evaluate<double>(v); }

double NormModel::f2(const Vector& v) const {
  check_vector(v);
  return evaluate<double>(std::span<const double>(v.data(), static_cast<std::size_t>(v.size())));
}

Jet NormModel::f2(std::span<const Jet> v) const { return evaluate<Jet>(v); }

double evaluate_F2(const NormModel& model, const Vector& v) { return model.f2(v); }

double signed_length(double f2) { return f2 < 0.0 ? -std::sqrt(-f2) : std::sqrt(f2); }

double homogeneity_residual(const NormModel& model, const Vector& v, double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("homogeneity_residual: lambda must be a positive finite number");
  }
  const double base = model.f2(v);
  const double scaled = model.f2(Vector(lambda * v));
  return std::abs(scaled - lambda * lambda * base) / std::max(1.0, std::abs(base));
}

}  // namespace finsler
