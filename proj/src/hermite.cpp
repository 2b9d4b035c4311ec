#include "pencillab/hermite.hpp"

#include <cmath>

namespace pencillab {

namespace {

// Tridiagonal position matrix for the omega-scaled basis, size rows.
RealMat position_1d(int rows, double omega) {
  RealMat x = RealMat::Zero(rows, rows);
  const double inv_sqrt_omega = 1.0 / std::sqrt(omega);
  for (int j = 0; j + 1 < rows; ++j) {
    const double v = std::sqrt((j + 1) / 2.0) * inv_sqrt_omega;
    x(j, j + 1) = v;
    x(j + 1, j) = v;
  }
  return x;
}

// Exact modes x modes block of x^power via the enlarged basis.
RealMat position_1d_power(int modes, double omega, int power) {
  if (power == 0) return RealMat::Identity(modes, modes);
  const int enlarged = modes + power;
  RealMat x = position_1d(enlarged, omega);
  RealMat p = x;
  for (int i = 1; i < power; ++i) p = p * x;
  return p.topLeftCorner(modes, modes);
}

// D^2 = -d^2/dx^2 for the omega-scaled basis.
RealMat kinetic_1d(int modes, double omega) {
  RealMat d2 = RealMat::Zero(modes, modes);
  for (int j = 0; j < modes; ++j) d2(j, j) = omega * (j + 0.5);
  for (int j = 0; j + 2 < modes; ++j) {
    const double v = -omega * std::sqrt(double(j + 1) * (j + 2)) / 2.0;
    d2(j, j + 2) = v;
    d2(j + 2, j) = v;
  }
  return d2;
}

// I(pre) (x) M (x) I(post) with axis 0 as the slowest tensor index.
RealMat axis_lift(const RealMat& block, int n, int axis, int modes) {
  long pre = 1, post = 1;
  for (int a = 0; a < axis; ++a) pre *= modes;
  for (int a = axis + 1; a < n; ++a) post *= modes;
  RealMat out = block;
  if (pre > 1) out = kron(RealMat::Identity(pre, pre), out);
  if (post > 1) out = kron(out, RealMat::Identity(post, post));
  return out;
}

void check_dim_cap(const HermiteBasis& basis, const LabConfig& cfg) {
  if (basis.dim() > cfg.caps.dim_cap)
    throw std::invalid_argument("basis dimension " + std::to_string(basis.dim()) +
                                " exceeds the dimension cap " +
                                std::to_string(cfg.caps.dim_cap));
}

}  // namespace

RealMat kron(const RealMat& A, const RealMat& B) {
  RealMat out(A.rows() * B.rows(), A.cols() * B.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j)
      out.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
  return out;
}

double default_scale(int modes, int degree_m) {
  if (degree_m < 1) throw std::invalid_argument("default_scale: degree must be >= 1");
  return std::pow(static_cast<double>(modes),
                  (degree_m - 1.0) / (degree_m + 1.0));
}

OperatorMatrix position_matrix(const HermiteBasis& basis, int axis, int power,
                               const LabConfig& cfg) {
  basis.validate();
  check_dim_cap(basis, cfg);
  if (axis < 0 || axis >= basis.n)
    throw std::invalid_argument("position_matrix: axis out of range");
  if (power < 1) throw std::invalid_argument("position_matrix: power must be >= 1");
  if (power > cfg.caps.degree_cap)
    throw std::invalid_argument("position_matrix: power exceeds the degree cap");
  RealMat block = position_1d_power(basis.modes, basis.scale, power);
  RealMat full = axis_lift(block, basis.n, axis, basis.modes);
  return OperatorMatrix{full.cast<cplx>(), true, basis};
}

OperatorMatrix kinetic_matrix(const HermiteBasis& basis) {
  basis.validate();
  RealMat block = kinetic_1d(basis.modes, basis.scale);
  const long d = basis.dim();
  RealMat full = RealMat::Zero(d, d);
  for (int a = 0; a < basis.n; ++a) full += axis_lift(block, basis.n, a, basis.modes);
  return OperatorMatrix{full.cast<cplx>(), true, basis};
}

OperatorMatrix potential_matrix(const HermiteBasis& basis, const PolynomialSpec& P,
                                const LabConfig& cfg) {
  basis.validate();
  check_dim_cap(basis, cfg);
  if (P.n != basis.n)
    throw std::invalid_argument("potential_matrix: polynomial/basis dimension mismatch");
  if (P.degree() > cfg.caps.degree_cap)
    throw std::invalid_argument("potential_matrix: polynomial degree " +
                                std::to_string(P.degree()) + " exceeds the degree cap");
  const long d = basis.dim();
  RealMat full = RealMat::Zero(d, d);
  for (const auto& mono : P.monomials) {
    RealMat term(1, 1);
    term(0, 0) = mono.coef;
    for (int a = 0; a < basis.n; ++a) {
      const int e = mono.exp[static_cast<std::size_t>(a)];
      RealMat block = position_1d_power(basis.modes, basis.scale, e);
      term = kron(term, block);
    }
    full += term;
  }
  return OperatorMatrix{full.cast<cplx>(), true, basis};
}

Mat parity_matrix(const HermiteBasis& basis) {
  const long d = basis.dim();
  Vec diag(d);
  for (long idx = 0; idx < d; ++idx) {
    long rest = idx;
    int total = 0;
    for (int a = 0; a < basis.n; ++a) {
      long stride = 1;
      for (int b = a + 1; b < basis.n; ++b) stride *= basis.modes;
      total += static_cast<int>((rest / stride) % basis.modes);
      rest %= stride;
    }
    diag[idx] = (total % 2 == 0) ? 1.0 : -1.0;
  }
  return diag.asDiagonal();
}

PolynomialPencil assemble_quadratic_pencil(const HermiteBasis& basis,
                                           const PolynomialSpec& P,
                                           const PolynomialSpec* Q, double eta,
                                           std::vector<std::string>* warnings,
                                           const LabConfig& cfg) {
  basis.validate();
  check_dim_cap(basis, cfg);
  if (eta < 0.0) throw std::invalid_argument("assemble_quadratic_pencil: eta must be >= 0");
  if (basis.n > 1) {
    std::mt19937 rng(0x5eed);
    const double min_top = P.min_on_sphere_sampled(rng);
    if (!(min_top > 0.0) && warnings)
      warnings->push_back("elliptic-positivity sample check failed: min of top part on "
                          "sphere samples = " + format_numeric(min_top));
  }
  const long d = basis.dim();
  Mat H0 = kinetic_matrix(basis).mat + potential_matrix(basis, P.square(), cfg).mat;
  if (Q && !Q->empty()) H0 += potential_matrix(basis, Q->square(), cfg).mat;
  if (eta > 0.0) H0 += (eta * eta) * Mat::Identity(d, d);
  Mat H1 = -2.0 * potential_matrix(basis, P, cfg).mat;
  PolynomialPencil pencil;
  pencil.k = 2;
  pencil.coeffs = {std::move(H0), std::move(H1)};
  pencil.basis = basis;
  return pencil;
}

PolynomialPencil assemble_general_pencil(std::vector<Mat> H, int k) {
  if (k < 1) throw std::invalid_argument("assemble_general_pencil: k must be >= 1");
  if (static_cast<int>(H.size()) != k)
    throw std::invalid_argument("assemble_general_pencil: need exactly k coefficients");
  const Eigen::Index d = H.front().rows();
  for (const auto& h : H)
    if (h.rows() != d || h.cols() != d)
      throw std::invalid_argument("assemble_general_pencil: coefficient dimension mismatch");
  PolynomialPencil pencil;
  pencil.k = k;
  pencil.coeffs = std::move(H);
  return pencil;
}

PolynomialPencil harmonic_pencil(int modes, double scale) {
  HermiteBasis basis{1, modes, scale};
  Mat H0 = kinetic_matrix(basis).mat +
           potential_matrix(basis, PolynomialSpec::x_power(1, 0, 2)).mat;
  PolynomialPencil pencil;
  pencil.k = 2;
  pencil.coeffs = {std::move(H0), Mat::Zero(basis.dim(), basis.dim())};
  pencil.basis = basis;
  return pencil;
}

void PolynomialPencil::validate() const {
  if (k < 1) throw std::invalid_argument("PolynomialPencil: k must be >= 1");
  if (static_cast<int>(coeffs.size()) != k)
    throw std::invalid_argument("PolynomialPencil: coefficient count != k");
  const Eigen::Index d = dim();
  for (const auto& h : coeffs)
    if (h.rows() != d || h.cols() != d)
      throw std::invalid_argument("PolynomialPencil: coefficient dimension mismatch");
}

}  // namespace pencillab
