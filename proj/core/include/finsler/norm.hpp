#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "finsler/jet.hpp"
#include "finsler/types.hpp"

namespace finsler {

/// Monomial term c · Π x_i^{p_i}.
struct Monomial {
  double coefficient = 0.0;
  std::vector<int> powers;
};

struct EuclideanNorm {};

/// F²(v) = Σ s_i v_i² with s_i = ±1.
struct PseudoEuclideanNorm {
  std::vector<int> signature;
};

/// F(v) = sqrt(vᵀ A v) + b·v, with A symmetric positive definite and |b|_A < 1.
struct RandersNorm {
  Matrix alpha;
  Vector beta;
};

/// F(v) = P(v)^(1/m) for a homogeneous polynomial P of degree m >= 3, so
/// F² = P^(2/m). Directions with P(v) <= 0 are not admissible.
struct MthRootNorm {
  int order = 4;
  std::vector<Monomial> terms;
};

/// User-supplied F². The double evaluator is mandatory; the jet evaluator is
/// optional and enables the hyperdual derivative path. Both must be pure.
struct CustomNorm {
  std::string label;
  std::function<double(std::span<const double>)> f2;
  std::function<Jet(std::span<const Jet>)> f2_jet;
  bool defined_at_origin = false;
};

enum class NormKind { Euclidean, PseudoEuclidean, Randers, MthRoot, Custom };

enum class Definiteness { Positive, Indefinite, Unknown };

/// An immutable Minkowski norm on R^n, represented through F².
class NormModel {
 public:
  using Parameters =
      std::variant<EuclideanNorm, PseudoEuclideanNorm, RandersNorm, MthRootNorm, CustomNorm>;

  static NormModel euclidean(int n);
  static NormModel pseudo_euclidean(std::vector<int> signature);
  static NormModel randers(Matrix alpha, Vector beta);
  static NormModel mth_root(int n, int order, std::vector<Monomial> terms);
  static NormModel custom(int n, CustomNorm norm);

  /// Custom model whose F² is the given polynomial (not necessarily
  /// homogeneous). Provides both the double and the jet evaluator.
  static NormModel polynomial_f2(int n, std::vector<Monomial> terms, std::string label = "polynomial");

  int dimension() const { return n_; }
  NormKind kind() const;
  std::string_view kind_name() const;
  const Parameters& parameters() const { return params_; }

  Definiteness definiteness() const;
  /// True when F² is a quadratic form, so the metric does not depend on direction.
  bool has_constant_metric() const;
  bool has_analytic_metric() const;
  bool has_jet_evaluator() const;

  /// F²(v). Throws NonAdmissibleDirection outside the domain.
  double f2(std::span<const double> v) const;
  double f2(const Vector& v) const;
  /// F² propagated through jet arithmetic.
  Jet f2(std::span<const Jet> v) const;

  /// Throws unless v has the right dimension and finite entries.
  void check_vector(const Vector& v) const;

 private:
  NormModel(int n, Parameters params) : n_(n), params_(std::move(params)) {}

  template <class T>
  T evaluate(std::span<const T> v) const;

  int n_ = 0;
  Parameters params_;
};

double evaluate_F2(const NormModel& model, const Vector& v);

/// sign(F²)·sqrt(|F²|).
double signed_length(double f2);

/// |F²(λv) − λ²F²(v)| / max(1, |F²(v)|), for λ > 0.
double homogeneity_residual(const NormModel& model, const Vector& v, double lambda);

/// sqrt(bᵀ A⁻¹ b), the dual alpha-norm of the Randers drift covector.
double randers_beta_norm(const Matrix& alpha, const Vector& beta);

}  // namespace finsler
