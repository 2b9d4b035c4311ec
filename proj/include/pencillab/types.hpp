#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace pencillab {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using RealMat = Eigen::MatrixXd;
using Vec = Eigen::VectorXcd;
using RealVec = Eigen::VectorXd;

/// Every tolerance used by the lab flows from this one record.
struct Tolerances {
  double residual_rel = 1e-9;    // eigen/solve residual acceptance, relative
  double symmetry = 1e-9;        // max|M - M*| <= symmetry*(1+max|M|) for hermitian inputs
  double psd_clip = 1e-12;       // eigenvalues in [-psd_clip*|M|, 0) are clipped to 0
  double cluster_rel = 1e-7;     // |a-b| <= cluster_rel*(1+|a|) counts as one eigenvalue
  double sigma_verify = 1e-6;    // sigma_min/sigma_max certificate for reported eigenvalues
  double sigma_floor = 1e-14;    // resolvent sentinel: sigma_min < sigma_floor*sigma_max
  double rank_rel = 1e-8;        // rank tolerance for nullspace extraction
  double converged_move = 1e-3;  // drift filter between basis rungs, relative to 1+|lambda|
};

struct Caps {
  int degree_cap = 12;  // total polynomial degree
  int dim_cap = 4096;   // basis dimension guard before dense companion doubling
};

struct LabConfig {
  Tolerances tol;
  Caps caps;
  // Keldysh chain equations: false = derivative coefficients as-is, true = 1/j! factors.
  bool factorial_normalization = false;
};

const LabConfig& default_config();

/// Dense square-or-rectangular complex matrix with a self-adjointness hint.
struct DenseMatrix {
  Mat entries;
  bool hermitian_hint = false;

  DenseMatrix() = default;
  explicit DenseMatrix(Mat m, bool hermitian = false)
      : entries(std::move(m)), hermitian_hint(hermitian) {}
  explicit DenseMatrix(const RealMat& m, bool hermitian = false)
      : entries(m.cast<cplx>()), hermitian_hint(hermitian) {}

  Eigen::Index rows() const { return entries.rows(); }
  Eigen::Index cols() const { return entries.cols(); }
  bool square() const { return rows() == cols(); }
};

/// Result of a dense eigendecomposition. Eigenvalues are sorted by
/// (modulus, argument); right eigenvectors, when present, follow that order.
/// residual_bound satisfies ||M v - lambda v|| <= residual_bound * ||M||_F * ||v||.
struct EigenDecomposition {
  Vec eigenvalues;
  std::optional<Mat> right_eigenvectors;
  double residual_bound = 0.0;
};

/// Pencil spectrum: all k*d companion eigenvalues in canonical order,
/// optional pencil eigenvectors (first companion block), per-value
/// sigma_min/sigma_max certificates (NaN when not computed) and
/// refinement-filter marks.
struct Spectrum {
  std::vector<cplx> values;
  std::vector<double> sigma_ratio;
  std::vector<std::uint8_t> converged;
  std::optional<Mat> vectors;

  std::size_t size() const { return values.size(); }
  std::vector<cplx> converged_values() const;
};

/// Hermite-function basis of the omega-scaled harmonic oscillator,
/// modes per axis, total dimension modes^n.
struct HermiteBasis {
  int n = 1;
  int modes = 2;
  double scale = 1.0;

  long dim() const {
    long d = 1;
    for (int a = 0; a < n; ++a) d *= modes;
    return d;
  }
  void validate() const {
    if (n < 1) throw std::invalid_argument("HermiteBasis: dimension n must be >= 1");
    if (modes < 2) throw std::invalid_argument("HermiteBasis: modes must be >= 2");
    if (!(scale > 0.0)) throw std::invalid_argument("HermiteBasis: scale must be positive");
  }
};

/// Matrix of an operator expressed in a HermiteBasis.
struct OperatorMatrix {
  Mat mat;
  bool selfadjoint = true;
  HermiteBasis basis;
};

// --- canonical ordering and clustering -------------------------------------

/// Argument normalized to (-pi, pi].
double canonical_arg(cplx z);

/// Sort key (modulus, then argument in (-pi, pi]), both ascending.
bool canonical_less(cplx a, cplx b);

void sort_canonical(std::vector<cplx>& v);
Vec sorted_canonical(const Vec& v);

struct EigenCluster {
  cplx center;
  int multiplicity = 0;
  std::vector<int> members;  // indices into the sorted value list
};

/// Greedy chain clustering of canonically sorted values:
/// consecutive values within rel_tol*(1+|a|) belong to one cluster.
std::vector<EigenCluster> cluster_eigenvalues(const std::vector<cplx>& sorted_values,
                                              double rel_tol);

/// Greedy nearest-neighbour multiset match; returns the largest relative
/// mismatch max |a_i - b_match(i)| / (1 + |a_i|) over all pairs.
double multiset_match_distance(std::vector<cplx> a, std::vector<cplx> b);

/// Fixed-format numeric serialization: 17 significant digits, C locale.
std::string format_numeric(double x);

}  // namespace pencillab
