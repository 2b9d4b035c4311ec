#pragma once

#include <functional>

#include "pencillab/linalg.hpp"
#include "pencillab/types.hpp"

namespace pencillab {

/// Monic operator polynomial L(lambda) = H_0 + lambda H_1 + ... + lambda^k I.
struct PolynomialPencil {
  int k = 1;
  std::vector<Mat> coeffs;  // H_0 .. H_{k-1}
  std::optional<HermiteBasis> basis;

  Eigen::Index dim() const { return coeffs.empty() ? 0 : coeffs.front().rows(); }
  void validate() const;
};

enum class CompanionFlavor { raw, symmetrized };

/// Block companion linearization; spectrum equals the pencil spectrum.
struct CompanionMatrix {
  Mat mat;
  int k = 1;
  Eigen::Index block_dim = 0;
  CompanionFlavor flavor = CompanionFlavor::raw;
};

/// Generalized eigenvector chain u_0..u_l at an anchor eigenvalue, with the
/// per-equation residuals of the derivative-coupled chain system.
struct KeldyshChain {
  cplx anchor{};
  std::vector<Vec> vectors;
  std::vector<double> residuals;
  int length() const { return static_cast<int>(vectors.size()); }
};

struct KeldyshResult {
  std::vector<KeldyshChain> chains;
  std::vector<std::string> warnings;
};

CompanionMatrix companion(const PolynomialPencil& pencil,
                          const LabConfig& cfg = default_config());

/// Symmetrized linearization for k = 2 with H_0 positive definite:
/// rows (0, H0^(1/2); -H0^(1/2), -H1). Same spectrum and power traces.
CompanionMatrix symmetrized_companion(const PolynomialPencil& pencil,
                                      const LabConfig& cfg = default_config());

/// L(lambda) as a dense matrix.
Mat evaluate(const PolynomialPencil& pencil, cplx lambda);

/// j-th lambda-derivative of L at lambda0 (j = 0..k).
Mat pencil_derivative(const PolynomialPencil& pencil, cplx lambda0, int j);

struct SpectrumOptions {
  bool want_vectors = false;
  enum class Certify { none, automatic, all } certify = Certify::automatic;
  Eigen::Index certify_dim_cap = 300;  // "automatic" certifies everything below this
};

/// All k*d companion eigenvalues in canonical order, optional pencil
/// eigenvectors and sigma_min/sigma_max certificates.
Spectrum pencil_spectrum(const PolynomialPencil& pencil, SpectrumOptions opts = {},
                         const LabConfig& cfg = default_config());

/// sigma_min/sigma_max of L(lambda).
double sigma_ratio(const PolynomialPencil& pencil, cplx lambda);

/// Fill in sigma ratios for the subset of indices (in-place).
void certify_values(const PolynomialPencil& pencil, Spectrum& sp,
                    const std::vector<std::size_t>& indices);

/// Marks eigenvalues of `fine` that moved less than move_rel*(1+|lambda|)
/// relative to the nearest eigenvalue of `coarse`.
void filter_converged(const Spectrum& coarse, Spectrum& fine,
                      double move_rel = default_config().tol.converged_move);

/// 1/sigma_min(L(lambda)); +inf sentinel below the sigma floor.
double resolvent_norm(const PolynomialPencil& pencil, cplx lambda,
                      const LabConfig& cfg = default_config());

struct RayFit {
  double slope = 0.0;
  double intercept = 0.0;
  double rms_residual = 0.0;
  int points_used = 0;
  std::vector<double> skipped_r;                  // grid points on the spectrum
  std::vector<std::pair<double, double>> samples;  // (r, resolvent norm)
};

/// Least-squares slope of log||L(r e^{i alpha})^-1|| against log r.
RayFit ray_exponent_fit(const PolynomialPencil& pencil, double alpha,
                        const std::vector<double>& r_grid,
                        const LabConfig& cfg = default_config());

/// Chains recovered from the Jordan structure of the linearization at the
/// eigenvalue cluster nearest lambda0, residual-verified against the chain
/// system in the configured normalization.
KeldyshResult keldysh_chains(const PolynomialPencil& pencil, cplx lambda0, double tol,
                             const LabConfig& cfg = default_config());

/// CSV export: re, im, modulus, multiplicity, converged_flag, sigma_min_ratio.
/// One row per eigenvalue cluster.
std::string spectrum_to_csv(const Spectrum& sp,
                            const LabConfig& cfg = default_config());

}  // namespace pencillab
