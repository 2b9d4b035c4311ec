#include "pencillab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace pencillab {

namespace {

void require_finite(const Mat& m, const char* who) {
  if (!m.allFinite()) throw std::invalid_argument(std::string(who) + ": non-finite entries");
}

void require_square(const DenseMatrix& m, const char* who) {
  if (!m.square() || m.rows() == 0)
    throw std::invalid_argument(std::string(who) + ": matrix must be square and non-empty");
}

// Reorders eigenvalues (and matching vector columns) into canonical order.
void sort_pairs(Vec& w, Mat* v) {
  const Eigen::Index n = w.size();
  std::vector<Eigen::Index> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](Eigen::Index a, Eigen::Index b) {
    return canonical_less(w[a], w[b]);
  });
  Vec w2(n);
  Mat v2;
  if (v) v2.resize(v->rows(), v->cols());
  for (Eigen::Index i = 0; i < n; ++i) {
    w2[i] = w[idx[static_cast<std::size_t>(i)]];
    if (v) v2.col(i) = v->col(idx[static_cast<std::size_t>(i)]);
  }
  w = std::move(w2);
  if (v) *v = std::move(v2);
}

double max_vector_residual(const Mat& M, const Vec& w, const Mat& V) {
  const double mnorm = M.norm();
  if (mnorm == 0.0) return 0.0;
  double worst = 0.0;
  for (Eigen::Index j = 0; j < w.size(); ++j) {
    const double vn = V.col(j).norm();
    if (vn == 0.0) continue;
    const double r = (M * V.col(j) - w[j] * V.col(j)).norm() / (mnorm * vn);
    worst = std::max(worst, r);
  }
  return worst;
}

}  // namespace

Mat hermitian_part(const Mat& M) { return 0.5 * (M + M.adjoint()); }

EigenDecomposition eig_general(const DenseMatrix& M, bool want_vectors,
                               const LabConfig& cfg) {
  require_square(M, "eig_general");
  require_finite(M.entries, "eig_general");
  const lapack_int n = static_cast<lapack_int>(M.rows());
  Mat a = M.entries;  // zgeev overwrites
  Vec w(n);
  Mat vr;
  if (want_vectors) vr.resize(n, n);
  lapack_int info = LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', want_vectors ? 'V' : 'N', n,
                                  a.data(), n, w.data(), nullptr, 1,
                                  want_vectors ? vr.data() : nullptr, n);
  if (info < 0) throw std::invalid_argument("eig_general: bad argument to zgeev");
  if (info > 0)
    throw std::runtime_error(
        "eig_general: QR iteration failed to converge (ill-conditioned input; "
        "consider rebalancing or rescaling)");
  EigenDecomposition out;
  if (want_vectors) {
    sort_pairs(w, &vr);
    out.right_eigenvectors = std::move(vr);
    out.residual_bound = max_vector_residual(M.entries, w, *out.right_eigenvectors);
  } else {
    sort_pairs(w, nullptr);
    out.residual_bound =
        static_cast<double>(n) * std::numeric_limits<double>::epsilon() * 8.0;
  }
  out.eigenvalues = std::move(w);
  (void)cfg;
  return out;
}

EigenDecomposition eig_selfadjoint(const DenseMatrix& M, bool want_vectors,
                                   const LabConfig& cfg) {
  require_square(M, "eig_selfadjoint");
  require_finite(M.entries, "eig_selfadjoint");
  if (!M.hermitian_hint)
    throw std::invalid_argument("eig_selfadjoint: hermitian_hint not set");
  const double scale = 1.0 + M.entries.cwiseAbs().maxCoeff();
  const double asym = (M.entries - M.entries.adjoint()).cwiseAbs().maxCoeff();
  if (asym > cfg.tol.symmetry * scale)
    throw std::invalid_argument("eig_selfadjoint: symmetry tolerance violated, max|M-M*| = " +
                                format_numeric(asym));
  const lapack_int n = static_cast<lapack_int>(M.rows());
  Mat a = hermitian_part(M.entries);
  RealVec e(n);
  lapack_int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, want_vectors ? 'V' : 'N', 'L', n,
                                   a.data(), n, e.data());
  if (info != 0) throw std::runtime_error("eig_selfadjoint: zheevd failed");
  EigenDecomposition out;
  out.eigenvalues = e.cast<cplx>();  // ascending from LAPACK
  if (want_vectors) {
    out.right_eigenvectors = std::move(a);
    out.residual_bound =
        max_vector_residual(M.entries, out.eigenvalues, *out.right_eigenvectors);
  } else {
    out.residual_bound =
        static_cast<double>(n) * std::numeric_limits<double>::epsilon() * 8.0;
  }
  return out;
}

DenseMatrix sqrt_psd(const DenseMatrix& M, const LabConfig& cfg) {
  DenseMatrix h(M.entries, true);
  EigenDecomposition ed = eig_selfadjoint(h, true, cfg);
  const Eigen::Index n = M.rows();
  RealVec e = ed.eigenvalues.real();
  const double norm = std::max(std::abs(e[0]), std::abs(e[n - 1]));
  RealVec root(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double v = e[i];
    if (v < 0.0) {
      if (v < -cfg.tol.psd_clip * norm)
        throw std::domain_error("sqrt_psd: eigenvalue " + format_numeric(v) +
                                " below the PSD clipping band");
      v = 0.0;
    }
    root[i] = std::sqrt(v);
  }
  const Mat& V = *ed.right_eigenvectors;
  Mat R = V * root.cast<cplx>().asDiagonal() * V.adjoint();
  R = hermitian_part(R);  // scrub roundoff asymmetry
  return DenseMatrix(std::move(R), true);
}

RealVec singular_values(const DenseMatrix& M) {
  require_finite(M.entries, "singular_values");
  const lapack_int rows = static_cast<lapack_int>(M.rows());
  const lapack_int cols = static_cast<lapack_int>(M.cols());
  Mat a = M.entries;
  RealVec s(std::min(rows, cols));
  lapack_int info = LAPACKE_zgesdd(LAPACK_COL_MAJOR, 'N', rows, cols, a.data(), rows,
                                   s.data(), nullptr, 1, nullptr, 1);
  if (info != 0) throw std::runtime_error("singular_values: zgesdd failed");
  return s;  // LAPACK returns descending
}

double schatten_norm(const DenseMatrix& M, double p) {
  if (!(p > 0.0)) throw std::invalid_argument("schatten_norm: p must be positive");
  RealVec s = singular_values(M);
  if (s.size() == 0) return 0.0;
  const double smax = s[0];
  if (smax == 0.0) return 0.0;
  // factor out s_max to avoid overflow for large p
  double sum = 0.0;
  for (Eigen::Index i = 0; i < s.size(); ++i) sum += std::pow(s[i] / smax, p);
  return smax * std::pow(sum, 1.0 / p);
}

cplx inverse_power_trace(const DenseMatrix& M, int ell, const LabConfig& cfg) {
  require_square(M, "inverse_power_trace");
  require_finite(M.entries, "inverse_power_trace");
  if (ell < 1) throw std::invalid_argument("inverse_power_trace: ell must be >= 1");
  RealVec s = singular_values(M);
  if (s[s.size() - 1] <= cfg.tol.sigma_floor * s[0])
    throw std::domain_error("inverse_power_trace: matrix is singular to working precision");
  Eigen::PartialPivLU<Mat> lu(M.entries);
  const Eigen::Index n = M.rows();
  Mat X = lu.solve(Mat::Identity(n, n));
  if (ell == 1) return X.trace();
  if (ell == 2) return X.cwiseProduct(X.transpose()).sum();
  Mat P = X;
  for (int i = 2; i < ell; ++i) P = P * X;
  return P.cwiseProduct(X.transpose()).sum();  // Tr(P * X)
}

}  // namespace pencillab
