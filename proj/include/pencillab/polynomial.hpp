#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "pencillab/types.hpp"

namespace pencillab {

struct Monomial {
  std::vector<int> exp;  // one exponent per axis
  double coef = 0.0;
  int total_degree() const {
    int d = 0;
    for (int e : exp) d += e;
    return d;
  }
};

/// Real polynomial on R^n as a merged monomial list.
struct PolynomialSpec {
  int n = 1;
  std::vector<Monomial> monomials;

  int degree() const;
  bool empty() const { return monomials.empty(); }
  double evaluate(std::span<const double> x) const;

  PolynomialSpec times(const PolynomialSpec& other) const;
  PolynomialSpec square() const { return times(*this); }
  PolynomialSpec scaled(double c) const;
  PolynomialSpec plus(const PolynomialSpec& other) const;
  PolynomialSpec homogeneous_part(int deg) const;

  /// Drops zero coefficients and merges duplicate exponent keys.
  void normalize();

  /// Minimum of the top-degree homogeneous part over random unit-sphere
  /// samples. Positive result supports the elliptic-positive claim.
  double min_on_sphere_sampled(std::mt19937& rng, int samples = 512) const;

  static PolynomialSpec x_power(int n, int axis, int power, double coef = 1.0);
  static PolynomialSpec constant(int n, double value);
};

/// Parse the JSON monomial list [{"exp": [2,0], "coef": 1.0}, ...].
/// All exponent vectors must have length n.
PolynomialSpec polynomial_from_json_text(const std::string& text, int n);
std::string polynomial_to_json_text(const PolynomialSpec& p);

}  // namespace pencillab
