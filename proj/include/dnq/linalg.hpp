// Dense complex linear algebra for small, well-conditioned operators.
//
// Storage is Eigen row-major; row/column i is the coset representative R_i.
// Spectral decompositions are never computed numerically here: callers supply
// them in closed form (DFT basis, involution projectors) and the
// Lagrange-Sylvester formula turns them into matrix functions.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace dnq {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ComplexVector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

inline constexpr double kPi = std::numbers::pi;

/// Library default for equality and unitarity checks on n x n operators.
inline double default_tolerance(int n) { return 1e-10 * n; }

/// e^{2 pi i p / n}, with p reduced mod n before the angle is formed.
inline Complex unit_root(long long p, int n) {
  long long r = p % n;
  if (r < 0) r += n;
  const double angle = 2.0 * kPi * static_cast<double>(r) / n;
  return {std::cos(angle), std::sin(angle)};
}

inline std::string format_complex(Complex z) {
  std::ostringstream os;
  os.precision(17);
  os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

// ---------------------------------------------------------------------------
// Elementary operations. Eigen would assert on shape mismatch; these throw.

namespace detail {
inline void require_square(const ComplexMatrix& a, const char* what) {
  if (a.rows() != a.cols() || a.rows() < 1) {
    throw std::invalid_argument(std::string(what) + ": matrix must be square and non-empty");
  }
}
inline void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                " vs " + std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()) + ")");
  }
}
}  // namespace detail

inline ComplexMatrix identity_matrix(int n) { return ComplexMatrix::Identity(n, n); }
inline ComplexMatrix zero_matrix(int n) { return ComplexMatrix::Zero(n, n); }

inline ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("multiply: inner dimensions differ (" +
                                std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + ")");
  }
  return a * b;
}

inline ComplexVector multiply(const ComplexMatrix& a, const ComplexVector& v) {
  if (a.cols() != v.size()) {
    throw std::invalid_argument("multiply: matrix/vector dimension mismatch");
  }
  return a * v;
}

inline ComplexMatrix adjoint(const ComplexMatrix& a) { return a.adjoint(); }

inline ComplexMatrix scalar_multiply(Complex c, const ComplexMatrix& a) { return c * a; }

inline ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
  detail::require_same_shape(a, b, "add");
  return a + b;
}

/// Entrywise max |a_ij - b_ij|.
inline double max_norm_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  detail::require_same_shape(a, b, "max_norm_diff");
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

inline double max_norm_diff(const ComplexVector& a, const ComplexVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("max_norm_diff: dimension mismatch");
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

/// max |A A^dagger - I|.
inline double unitarity_defect(const ComplexMatrix& a) {
  detail::require_square(a, "unitarity_defect");
  return max_norm_diff(a * a.adjoint(), identity_matrix(static_cast<int>(a.rows())));
}

inline bool is_unitary(const ComplexMatrix& a, double tol) { return unitarity_defect(a) <= tol; }

inline double hermiticity_defect(const ComplexMatrix& a) {
  detail::require_square(a, "hermiticity_defect");
  return max_norm_diff(a, a.adjoint());
}

/// <u, v> = sum_i conj(u_i) v_i (antilinear in the first slot).
inline Complex inner(const ComplexVector& u, const ComplexVector& v) {
  if (u.size() != v.size()) {
    throw std::invalid_argument("inner: dimension mismatch (" + std::to_string(u.size()) +
                                " vs " + std::to_string(v.size()) + ")");
  }
  Complex s{0.0, 0.0};
  for (Eigen::Index i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
  return s;
}

/// Rank of an orthogonal projector, read off its trace.
inline int projector_rank(const ComplexMatrix& p) {
  return static_cast<int>(std::lround(p.trace().real()));
}

// ---------------------------------------------------------------------------
// Fourier basis of the cyclic shift.

/// Normalized eigenvector |k> of V1(R_1) for eigenvalue e^{2 pi i k/n}:
/// entries (l_k^{n-1}, l_k^{n-2}, ..., l_k, 1) / sqrt(n).
inline ComplexVector dft_eigenvector(int n, int k) {
  if (n < 1) throw std::domain_error("dft_eigenvector: n must be positive");
  if (k < 0 || k >= n) {
    throw std::out_of_range("dft_eigenvector: k=" + std::to_string(k) + " outside [0, " +
                            std::to_string(n) + ")");
  }
  ComplexVector v(n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (int i = 0; i < n; ++i) {
    v[i] = scale * unit_root(static_cast<long long>(k) * (n - 1 - i), n);
  }
  return v;
}

/// (P_k)_{lm} = e^{2 pi i k (m - l)/n} / n, i.e. |k><k|.
inline ComplexMatrix circulant_projector(int n, int k) {
  if (n < 1) throw std::domain_error("circulant_projector: n must be positive");
  if (k < 0 || k >= n) {
    throw std::out_of_range("circulant_projector: k=" + std::to_string(k) + " outside [0, " +
                            std::to_string(n) + ")");
  }
  ComplexMatrix p(n, n);
  for (int l = 0; l < n; ++l) {
    for (int m = 0; m < n; ++m) {
      p(l, m) = unit_root(static_cast<long long>(k) * (m - l), n) / static_cast<double>(n);
    }
  }
  return p;
}

// ---------------------------------------------------------------------------
// Spectral data and matrix functions.

/// Distinct eigenvalues with multiplicities and orthogonal spectral projectors.
struct SpectralData {
  std::vector<Complex> eigenvalues;
  std::vector<int> multiplicities;
  std::vector<ComplexMatrix> projectors;

  int dim() const {
    return projectors.empty() ? 0 : static_cast<int>(projectors.front().rows());
  }
  std::size_t size() const { return eigenvalues.size(); }

  /// Spectral data of c*A from that of A.
  SpectralData scaled(Complex c) const {
    SpectralData out = *this;
    for (auto& l : out.eigenvalues) l *= c;
    return out;
  }
};

/// Worst violation of the spectral-decomposition identities for A.
struct SpectralResidual {
  double completeness = 0;   // |sum P_j - I|
  double idempotence = 0;    // |P_j^2 - P_j|
  double orthogonality = 0;  // |P_j P_l|, j != l
  double reconstruction = 0; // |A - sum lambda_j P_j|
  int rank_mismatch = 0;     // sum |rank P_j - q_j| + |sum q_j - dim|

  double max() const {
    return std::max({completeness, idempotence, orthogonality, reconstruction,
                     static_cast<double>(rank_mismatch)});
  }
};

inline SpectralResidual spectral_residual(const SpectralData& spec, const ComplexMatrix& a) {
  detail::require_square(a, "spectral_residual");
  const int n = static_cast<int>(a.rows());
  if (spec.eigenvalues.size() != spec.projectors.size() ||
      spec.eigenvalues.size() != spec.multiplicities.size()) {
    throw std::invalid_argument("spectral_residual: inconsistent SpectralData lengths");
  }
  SpectralResidual r;
  ComplexMatrix sum = zero_matrix(n);
  ComplexMatrix recon = zero_matrix(n);
  int total = 0;
  for (std::size_t j = 0; j < spec.size(); ++j) {
    const auto& p = spec.projectors[j];
    detail::require_same_shape(p, a, "spectral_residual");
    sum += p;
    recon += spec.eigenvalues[j] * p;
    total += spec.multiplicities[j];
    r.idempotence = std::max(r.idempotence, max_norm_diff(p * p, p));
    r.rank_mismatch += std::abs(projector_rank(p) - spec.multiplicities[j]);
    for (std::size_t l = j + 1; l < spec.size(); ++l) {
      r.orthogonality = std::max(r.orthogonality, (p * spec.projectors[l]).cwiseAbs().maxCoeff());
    }
  }
  r.rank_mismatch += std::abs(total - n);
  r.completeness = max_norm_diff(sum, identity_matrix(n));
  r.reconstruction = max_norm_diff(recon, a);
  return r;
}

/// A scalar function with derivative callbacks: derivatives[k] evaluates f^(k).
/// Callbacks may throw std::domain_error where f is undefined.
struct ScalarFunction {
  std::string name;
  std::vector<std::function<Complex(Complex)>> derivatives;
};

inline ScalarFunction identity_function() {
  return {"id", {[](Complex z) { return z; }, [](Complex) { return Complex{1.0, 0.0}; }}};
}

/// z -> exp(c z), with `orders` derivatives c^k exp(c z).
inline ScalarFunction exponential(Complex c = 1.0, int orders = 4) {
  ScalarFunction f{"exp", {}};
  Complex ck{1.0, 0.0};
  for (int k = 0; k < orders; ++k) {
    f.derivatives.push_back([c, ck](Complex z) { return ck * std::exp(c * z); });
    ck *= c;
  }
  return f;
}

/// Logarithm with arguments taken in [branch_start, branch_start + 2 pi).
inline ScalarFunction logarithm(double branch_start = 0.0, int orders = 4) {
  ScalarFunction f{"log", {}};
  f.derivatives.push_back([branch_start](Complex z) {
    if (std::abs(z) == 0.0) {
      throw std::domain_error("log undefined at eigenvalue " + format_complex(z));
    }
    double theta = std::arg(z);
    const double two_pi = 2.0 * kPi;
    theta -= two_pi * std::floor((theta - branch_start) / two_pi);
    return Complex{std::log(std::abs(z)), theta};
  });
  double fact = 1.0;  // (k-1)!
  for (int k = 1; k < orders; ++k) {
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;
    const double c = sign * fact;
    f.derivatives.push_back([c, k](Complex z) {
      if (std::abs(z) == 0.0) {
        throw std::domain_error("log derivative undefined at eigenvalue " + format_complex(z));
      }
      return c / std::pow(z, k);
    });
    fact *= k;
  }
  return f;
}

/// f(A) = sum_j sum_{k<q_j} f^(k)(l_j)/k! (A - l_j I)^k P_j.
///
/// Higher-order terms use N_j = (A - l_j I) P_j; once N_j^k is below
/// `nilpotent_tol` the remaining terms vanish and no further derivatives are
/// needed. A non-negligible term without a matching derivative callback is an
/// error.
inline ComplexMatrix lagrange_sylvester(const ScalarFunction& f, const SpectralData& spec,
                                        const ComplexMatrix& a, double nilpotent_tol = 1e-13) {
  detail::require_square(a, "lagrange_sylvester");
  if (f.derivatives.empty()) throw std::invalid_argument("lagrange_sylvester: f has no callbacks");
  if (spec.eigenvalues.size() != spec.projectors.size() ||
      spec.eigenvalues.size() != spec.multiplicities.size()) {
    throw std::invalid_argument("lagrange_sylvester: inconsistent SpectralData lengths");
  }
  const int n = static_cast<int>(a.rows());
  ComplexMatrix out = zero_matrix(n);
  for (std::size_t j = 0; j < spec.size(); ++j) {
    const Complex lambda = spec.eigenvalues[j];
    const ComplexMatrix& p = spec.projectors[j];
    detail::require_same_shape(p, a, "lagrange_sylvester");

    const Complex f0 = f.derivatives[0](lambda);
    if (!std::isfinite(f0.real()) || !std::isfinite(f0.imag())) {
      throw std::domain_error(f.name + " undefined at eigenvalue " + format_complex(lambda));
    }
    out += f0 * p;

    const ComplexMatrix nil = (a - lambda * identity_matrix(n)) * p;
    ComplexMatrix power = nil;
    double factorial = 1.0;
    for (int k = 1; k < spec.multiplicities[j]; ++k) {
      factorial *= k;
      if (power.cwiseAbs().maxCoeff() <= nilpotent_tol) break;
      if (static_cast<std::size_t>(k) >= f.derivatives.size()) {
        throw std::invalid_argument("lagrange_sylvester: " + f.name + " needs derivative of order " +
                                    std::to_string(k) + " at eigenvalue " + format_complex(lambda));
      }
      const Complex fk = f.derivatives[static_cast<std::size_t>(k)](lambda);
      if (!std::isfinite(fk.real()) || !std::isfinite(fk.imag())) {
        throw std::domain_error(f.name + " derivative undefined at eigenvalue " +
                                format_complex(lambda));
      }
      out += (fk / factorial) * power;
      power = power * nil;
    }
  }
  return out;
}

/// Frobenius covariants P_j = prod_{l != j} (l_l I - A) / (l_l - l_j) for a
/// diagonalizable A with the given distinct eigenvalues.
inline std::vector<ComplexMatrix> spectral_projectors(const ComplexMatrix& a,
                                                      const std::vector<Complex>& eigenvalues) {
  detail::require_square(a, "spectral_projectors");
  const int n = static_cast<int>(a.rows());
  std::vector<ComplexMatrix> out;
  out.reserve(eigenvalues.size());
  for (std::size_t j = 0; j < eigenvalues.size(); ++j) {
    ComplexMatrix p = identity_matrix(n);
    for (std::size_t l = 0; l < eigenvalues.size(); ++l) {
      if (l == j) continue;
      const Complex gap = eigenvalues[l] - eigenvalues[j];
      if (std::abs(gap) == 0.0) {
        throw std::invalid_argument("spectral_projectors: eigenvalues must be distinct");
      }
      p = p * ((eigenvalues[l] * identity_matrix(n) - a) / gap);
    }
    out.push_back(std::move(p));
  }
  return out;
}

/// Spectral projectors of an involution V (V^2 = I).
struct InvolutionProjectors {
  ComplexMatrix plus;   // (V + I)/2
  ComplexMatrix minus;  // -(V - I)/2
};

inline InvolutionProjectors involution_projectors(const ComplexMatrix& v, double tol) {
  detail::require_square(v, "involution_projectors");
  const int n = static_cast<int>(v.rows());
  const ComplexMatrix id = identity_matrix(n);
  const double defect = max_norm_diff(v * v, id);
  if (defect > tol) {
    throw std::invalid_argument("involution_projectors: V^2 = I violated (max deviation " +
                                std::to_string(defect) + ")");
  }
  return {(v + id) / 2.0, -(v - id) / 2.0};
}

inline InvolutionProjectors involution_projectors(const ComplexMatrix& v) {
  return involution_projectors(v, default_tolerance(static_cast<int>(v.rows())));
}

// ---------------------------------------------------------------------------

/// Neumaier-compensated entrywise accumulator for sums of many matrices.
class CompensatedMatrixSum {
 public:
  explicit CompensatedMatrixSum(int n)
      : re_(Eigen::MatrixXd::Zero(n, n)), im_(Eigen::MatrixXd::Zero(n, n)),
        re_c_(Eigen::MatrixXd::Zero(n, n)), im_c_(Eigen::MatrixXd::Zero(n, n)) {}

  void add(const ComplexMatrix& term) {
    for (Eigen::Index i = 0; i < re_.rows(); ++i) {
      for (Eigen::Index j = 0; j < re_.cols(); ++j) {
        accumulate(re_(i, j), re_c_(i, j), term(i, j).real());
        accumulate(im_(i, j), im_c_(i, j), term(i, j).imag());
      }
    }
  }

  ComplexMatrix value() const {
    ComplexMatrix out(re_.rows(), re_.cols());
    for (Eigen::Index i = 0; i < re_.rows(); ++i) {
      for (Eigen::Index j = 0; j < re_.cols(); ++j) {
        out(i, j) = {re_(i, j) + re_c_(i, j), im_(i, j) + im_c_(i, j)};
      }
    }
    return out;
  }

 private:
  static void accumulate(double& sum, double& comp, double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }

  Eigen::MatrixXd re_, im_, re_c_, im_c_;
};

}  // namespace dnq
