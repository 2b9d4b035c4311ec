#include "pencillab/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <json.hpp>

namespace pencillab {

int PolynomialSpec::degree() const {
  int d = 0;
  for (const auto& m : monomials) d = std::max(d, m.total_degree());
  return d;
}

double PolynomialSpec::evaluate(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != n)
    throw std::invalid_argument("PolynomialSpec::evaluate: wrong point dimension");
  double sum = 0.0;
  for (const auto& m : monomials) {
    double t = m.coef;
    for (int a = 0; a < n; ++a)
      for (int e = 0; e < m.exp[static_cast<std::size_t>(a)]; ++e) t *= x[static_cast<std::size_t>(a)];
    sum += t;
  }
  return sum;
}

void PolynomialSpec::normalize() {
  std::map<std::vector<int>, double> acc;
  for (const auto& m : monomials) {
    if (static_cast<int>(m.exp.size()) != n)
      throw std::invalid_argument("PolynomialSpec: exponent arity mismatch");
    acc[m.exp] += m.coef;
  }
  monomials.clear();
  for (auto& [e, c] : acc)
    if (c != 0.0) monomials.push_back({e, c});
}

PolynomialSpec PolynomialSpec::times(const PolynomialSpec& other) const {
  if (n != other.n) throw std::invalid_argument("PolynomialSpec::times: dimension mismatch");
  PolynomialSpec out;
  out.n = n;
  for (const auto& a : monomials)
    for (const auto& b : other.monomials) {
      Monomial m;
      m.exp.resize(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i)
        m.exp[static_cast<std::size_t>(i)] =
            a.exp[static_cast<std::size_t>(i)] + b.exp[static_cast<std::size_t>(i)];
      m.coef = a.coef * b.coef;
      out.monomials.push_back(std::move(m));
    }
  out.normalize();
  return out;
}

PolynomialSpec PolynomialSpec::scaled(double c) const {
  PolynomialSpec out = *this;
  for (auto& m : out.monomials) m.coef *= c;
  out.normalize();
  return out;
}

PolynomialSpec PolynomialSpec::plus(const PolynomialSpec& other) const {
  if (n != other.n) throw std::invalid_argument("PolynomialSpec::plus: dimension mismatch");
  PolynomialSpec out = *this;
  out.monomials.insert(out.monomials.end(), other.monomials.begin(), other.monomials.end());
  out.normalize();
  return out;
}

PolynomialSpec PolynomialSpec::homogeneous_part(int deg) const {
  PolynomialSpec out;
  out.n = n;
  for (const auto& m : monomials)
    if (m.total_degree() == deg) out.monomials.push_back(m);
  return out;
}

double PolynomialSpec::min_on_sphere_sampled(std::mt19937& rng, int samples) const {
  const PolynomialSpec top = homogeneous_part(degree());
  std::normal_distribution<double> gauss;
  double worst = std::numeric_limits<double>::infinity();
  std::vector<double> x(static_cast<std::size_t>(n));
  for (int s = 0; s < samples; ++s) {
    double norm = 0.0;
    for (auto& xi : x) {
      xi = gauss(rng);
      norm += xi * xi;
    }
    norm = std::sqrt(norm);
    if (norm == 0.0) continue;
    for (auto& xi : x) xi /= norm;
    worst = std::min(worst, top.evaluate(x));
  }
  return worst;
}

PolynomialSpec PolynomialSpec::x_power(int n, int axis, int power, double coef) {
  if (axis < 0 || axis >= n) throw std::invalid_argument("PolynomialSpec::x_power: bad axis");
  PolynomialSpec p;
  p.n = n;
  Monomial m;
  m.exp.assign(static_cast<std::size_t>(n), 0);
  m.exp[static_cast<std::size_t>(axis)] = power;
  m.coef = coef;
  p.monomials.push_back(std::move(m));
  return p;
}

PolynomialSpec PolynomialSpec::constant(int n, double value) {
  PolynomialSpec p;
  p.n = n;
  if (value != 0.0) {
    Monomial m;
    m.exp.assign(static_cast<std::size_t>(n), 0);
    m.coef = value;
    p.monomials.push_back(std::move(m));
  }
  return p;
}

PolynomialSpec polynomial_from_json_text(const std::string& text, int n) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  PolynomialSpec p;
  p.n = n;
  for (const auto& item : j) {
    if (!item.is_object() || !item.contains("exp") || !item.contains("coef"))
      throw std::invalid_argument("polynomial JSON items need \"exp\" and \"coef\"");
    for (const auto& [key, _] : item.items())
      if (key != "exp" && key != "coef")
        throw std::invalid_argument("polynomial JSON: unknown key \"" + key + "\"");
    Monomial m;
    for (const auto& e : item["exp"]) {
      const int v = e.get<int>();
      if (v < 0) throw std::invalid_argument("polynomial JSON: negative exponent");
      m.exp.push_back(v);
    }
    if (static_cast<int>(m.exp.size()) != n)
      throw std::invalid_argument("polynomial JSON: exponent arity != n");
    m.coef = item["coef"].get<double>();
    p.monomials.push_back(std::move(m));
  }
  p.normalize();
  return p;
}

std::string polynomial_to_json_text(const PolynomialSpec& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& m : p.monomials) arr.push_back({{"exp", m.exp}, {"coef", m.coef}});
  return arr.dump();
}

}  // namespace pencillab
