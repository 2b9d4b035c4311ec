#pragma once

#include "pencillab/pencil.hpp"
#include "pencillab/polynomial.hpp"
#include "pencillab/types.hpp"

namespace pencillab {

/// Basis-scale heuristic for a pencil built from P of degree m:
/// omega = modes^((m-1)/(m+1)).
double default_scale(int modes, int degree_m);

/// Matrix of multiplication by x_axis^power, exact on the span of the first
/// (modes - power) basis functions: products of the tridiagonal position
/// matrix are formed with modes+power rows, then cut back.
OperatorMatrix position_matrix(const HermiteBasis& basis, int axis, int power,
                               const LabConfig& cfg = default_config());

/// Matrix of -Laplace (sum over axes).
OperatorMatrix kinetic_matrix(const HermiteBasis& basis);

/// Matrix of multiplication by P(x), built monomial-by-monomial from exact
/// 1D blocks combined over axes.
OperatorMatrix potential_matrix(const HermiteBasis& basis, const PolynomialSpec& P,
                                const LabConfig& cfg = default_config());

/// diag((-1)^(j_1+...+j_n)) in the tensor basis.
Mat parity_matrix(const HermiteBasis& basis);

/// Discretized L(lambda) = -Laplace + (P - lambda)^2 + Q^2 + eta^2:
/// H_0 = kinetic + P^2 + Q^2 + eta^2, H_1 = -2 P, monic quadratic.
/// When n > 1 the elliptic-positivity of P is sample-checked; failure is
/// warning-grade (recorded in *warnings when given) and assembly proceeds.
PolynomialPencil assemble_quadratic_pencil(const HermiteBasis& basis,
                                           const PolynomialSpec& P,
                                           const PolynomialSpec* Q = nullptr,
                                           double eta = 0.0,
                                           std::vector<std::string>* warnings = nullptr,
                                           const LabConfig& cfg = default_config());

/// Monic pencil from explicit coefficient matrices H_0..H_{k-1}.
PolynomialPencil assemble_general_pencil(std::vector<Mat> H, int k);

/// H_0 = -d^2/dx^2 + x^2 in 1D; with H_1 = 0 its quadratic pencil has the
/// exactly known spectrum +-i sqrt(2j+1).
PolynomialPencil harmonic_pencil(int modes, double scale = 1.0);

/// Kronecker product (axis 0 slowest index).
RealMat kron(const RealMat& A, const RealMat& B);

}  // namespace pencillab
