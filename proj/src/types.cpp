#include "pencillab/types.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace pencillab {

const LabConfig& default_config() {
  static const LabConfig cfg{};
  return cfg;
}

std::vector<cplx> Spectrum::converged_values() const {
  std::vector<cplx> out;
  if (converged.size() != values.size()) return values;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (converged[i]) out.push_back(values[i]);
  return out;
}

double canonical_arg(cplx z) {
  double a = std::arg(z);
  if (a <= -M_PI) a = M_PI;  // normalize -pi to +pi
  return a;
}

bool canonical_less(cplx a, cplx b) {
  const double ma = std::abs(a), mb = std::abs(b);
  if (ma != mb) return ma < mb;
  return canonical_arg(a) < canonical_arg(b);
}

void sort_canonical(std::vector<cplx>& v) {
  std::sort(v.begin(), v.end(), canonical_less);
}

Vec sorted_canonical(const Vec& v) {
  std::vector<cplx> tmp(v.data(), v.data() + v.size());
  sort_canonical(tmp);
  Vec out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = tmp[static_cast<std::size_t>(i)];
  return out;
}

std::vector<EigenCluster> cluster_eigenvalues(const std::vector<cplx>& sorted_values,
                                              double rel_tol) {
  std::vector<EigenCluster> clusters;
  std::vector<char> used(sorted_values.size(), 0);
  for (std::size_t i = 0; i < sorted_values.size(); ++i) {
    if (used[i]) continue;
    EigenCluster c;
    c.members.push_back(static_cast<int>(i));
    used[i] = 1;
    // chain-link: anything close to any current member joins
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t j = 0; j < sorted_values.size(); ++j) {
        if (used[j]) continue;
        for (int k : c.members) {
          const cplx a = sorted_values[static_cast<std::size_t>(k)];
          if (std::abs(a - sorted_values[j]) <= rel_tol * (1.0 + std::abs(a))) {
            c.members.push_back(static_cast<int>(j));
            used[j] = 1;
            grew = true;
            break;
          }
        }
      }
    }
    cplx sum = 0;
    for (int k : c.members) sum += sorted_values[static_cast<std::size_t>(k)];
    c.multiplicity = static_cast<int>(c.members.size());
    c.center = sum / static_cast<double>(c.multiplicity);
    std::sort(c.members.begin(), c.members.end());
    clusters.push_back(std::move(c));
  }
  std::sort(clusters.begin(), clusters.end(),
            [](const EigenCluster& a, const EigenCluster& b) {
              return canonical_less(a.center, b.center);
            });
  return clusters;
}

double multiset_match_distance(std::vector<cplx> a, std::vector<cplx> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  std::vector<char> used(b.size(), 0);
  sort_canonical(a);
  for (const cplx& x : a) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_j = b.size();
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(x - b[j]);
      if (d < best) {
        best = d;
        best_j = j;
      }
    }
    if (best_j == b.size()) return std::numeric_limits<double>::infinity();
    used[best_j] = 1;
    worst = std::max(worst, best / (1.0 + std::abs(x)));
  }
  return worst;
}

std::string format_numeric(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace pencillab
