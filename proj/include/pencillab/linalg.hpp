#pragma once

#include "pencillab/types.hpp"

namespace pencillab {

/// Full complex spectrum of a general square matrix, with multiplicity.
/// Eigenvalues come back in canonical (modulus, argument) order.
/// Throws std::invalid_argument on non-square or non-finite input and
/// std::runtime_error when the QR iteration fails to converge.
EigenDecomposition eig_general(const DenseMatrix& M, bool want_vectors = true,
                               const LabConfig& cfg = default_config());

/// Spectrum of a self-adjoint matrix: real eigenvalues ascending, orthonormal
/// eigenvectors. Requires hermitian_hint and max|M - M*| within the symmetry
/// tolerance.
EigenDecomposition eig_selfadjoint(const DenseMatrix& M, bool want_vectors = true,
                                   const LabConfig& cfg = default_config());

/// Positive square root of a positive semidefinite matrix. Eigenvalues in
/// [-psd_clip*|M|, 0) are clipped to zero; anything below that signals a
/// non-PSD input and throws std::domain_error.
DenseMatrix sqrt_psd(const DenseMatrix& M, const LabConfig& cfg = default_config());

/// Singular values, descending.
RealVec singular_values(const DenseMatrix& M);

/// Schatten p-norm (sum s_j^p)^(1/p), p > 0.
double schatten_norm(const DenseMatrix& M, double p);

/// Tr(M^-ell) computed through an LU factorization (never through
/// eigenvalues, so it can be cross-checked against the eigenvalue sum).
/// Throws std::domain_error when the smallest singular value is below
/// sigma_floor * sigma_max.
cplx inverse_power_trace(const DenseMatrix& M, int ell,
                         const LabConfig& cfg = default_config());

/// (M + M*)/2
Mat hermitian_part(const Mat& M);

}  // namespace pencillab
