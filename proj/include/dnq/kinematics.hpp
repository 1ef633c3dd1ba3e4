// The two systems of imprimitivity (V1, E) and (V2, E) on Z_n with symmetry
// D_n, and the observables built from them: position Q, momentum P and the
// parity generators P_{M_k}.
#pragma once

#include <cstddef>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "dnq/dihedral.hpp"
#include "dnq/linalg.hpp"
#include "dnq/verdict.hpp"

namespace dnq {

/// Irreducible representations of the stabilizer Z_2 = {R_0, M_0}.
enum class StabilizerIrrep {
  trivial,     // T1: +-1 -> 1
  alternating  // T2: +1 -> +1, -1 -> -1
};

enum class Representation { v1, v2 };

inline std::string to_string(Representation rep) { return rep == Representation::v1 ? "V1" : "V2"; }

inline Representation parse_representation(const std::string& text) {
  if (text == "V1" || text == "v1") return Representation::v1;
  if (text == "V2" || text == "v2") return Representation::v2;
  throw std::invalid_argument("unknown representation '" + text + "' (expected V1 or V2)");
}

/// V1 = Ind(T1), V2 = Ind(T2).
inline StabilizerIrrep inducing_irrep(Representation rep) {
  return rep == Representation::v1 ? StabilizerIrrep::trivial : StabilizerIrrep::alternating;
}

/// T_l(h) for h in the stabilizer.
inline double character(StabilizerIrrep irrep, const DihedralElement& h) {
  if (h.index() != 0) throw std::invalid_argument(h.to_string() + " is not in the stabilizer");
  if (irrep == StabilizerIrrep::alternating && h.is_mirror()) return -1.0;
  return 1.0;
}

// ---------------------------------------------------------------------------

/// Standard projection-valued measure on Z_n: E(r_i) = diag(0,..,1,..,0).
class ProjectionMeasure {
 public:
  explicit ProjectionMeasure(int n) : dim_(n) { require_order(n); }

  int dim() const { return dim_; }

  ComplexMatrix atom(int i) const {
    if (i < 0 || i >= dim_) {
      throw std::out_of_range("atom index " + std::to_string(i) + " outside [0, " +
                              std::to_string(dim_) + ")");
    }
    ComplexMatrix e = zero_matrix(dim_);
    e(i, i) = 1.0;
    return e;
  }

  ComplexMatrix atom(const ConfigPoint& p) const {
    detail::require_same_order(p.order(), dim_);
    return atom(p.site());
  }

  /// E(S) = sum_{i in S} E(r_i). Sites must be distinct.
  ComplexMatrix of(const std::vector<int>& subset) const {
    std::set<int> seen;
    ComplexMatrix e = zero_matrix(dim_);
    for (int i : subset) {
      if (!seen.insert(i).second) {
        throw std::invalid_argument("site " + std::to_string(i) + " repeated in subset");
      }
      e += atom(i);
    }
    return e;
  }

  ComplexMatrix whole() const { return identity_matrix(dim_); }
  ComplexMatrix empty() const { return zero_matrix(dim_); }

 private:
  int dim_;
};

inline ProjectionMeasure standard_pvm(int n) { return ProjectionMeasure(n); }

// ---------------------------------------------------------------------------
// Induced representations.

/// Block rule for Ind_{Z_2}^{D_n}(T): entry (i, j) is T(h) when
/// t_i^{-1} g t_j = h lies in the stabilizer, 0 otherwise. Evaluated literally.
inline ComplexMatrix induce_rep(StabilizerIrrep irrep, const DihedralElement& g) {
  const int n = g.order();
  const CosetDecomposition cosets(n);
  const auto& t = cosets.representatives();
  ComplexMatrix v = zero_matrix(n);
  for (int i = 0; i < n; ++i) {
    const DihedralElement left = inverse(t[static_cast<std::size_t>(i)]) * g;
    for (int j = 0; j < n; ++j) {
      const DihedralElement h = left * t[static_cast<std::size_t>(j)];
      if (cosets.in_stabilizer(h)) v(i, j) = character(irrep, h);
    }
  }
  return v;
}

/// V1(R_k)_{ij} = d(i, j+k), V1(M_k)_{ij} = d(i, k-j); V2 flips the sign on mirrors.
inline ComplexMatrix rep_closed_form(Representation rep, const DihedralElement& g) {
  const int n = g.order();
  const int k = g.index();
  const double sign = (rep == Representation::v2 && g.is_mirror()) ? -1.0 : 1.0;
  ComplexMatrix v = zero_matrix(n);
  for (int j = 0; j < n; ++j) {
    const int i = g.is_rotation() ? wrap(j + k, n) : wrap(k - j, n);
    v(i, j) = sign;
  }
  return v;
}

/// Covariance, homomorphism and unitarity of one system of imprimitivity.
struct ImprimitivityReport {
  Representation rep = Representation::v1;
  int order = 0;
  Verdict covariance;    // V(g) E(r_i) V(g)^{-1} = E(g.r_i)
  Verdict homomorphism;  // V(g) V(h) = V(gh)
  Verdict unitarity;     // V(g) V(g)^dagger = I
  std::size_t covariance_checks = 0;
  std::size_t homomorphism_checks = 0;

  bool all_pass() const { return covariance.pass && homomorphism.pass && unitarity.pass; }
};

inline ImprimitivityReport verify_imprimitivity(Representation rep, int n, double tol = 1e-12) {
  const auto group = enumerate_group(n);
  const ProjectionMeasure measure(n);

  std::vector<ComplexMatrix> images;
  images.reserve(group.size());
  for (const auto& g : group) images.push_back(rep_closed_form(rep, g));

  ImprimitivityReport report;
  report.rep = rep;
  report.order = n;
  report.covariance = Verdict("imprimitivity_covariance", 0.0, tol);
  report.homomorphism = Verdict("homomorphism", 0.0, tol);
  report.unitarity = Verdict("unitarity", 0.0, tol);

  for (std::size_t a = 0; a < group.size(); ++a) {
    const auto& g = group[a];
    const ComplexMatrix& vg = images[a];
    const ComplexMatrix& vg_inv = images[inverse(g).position()];
    report.unitarity.observe(unitarity_defect(vg));
    for (int i = 0; i < n; ++i) {
      const ComplexMatrix lhs = vg * measure.atom(i) * vg_inv;
      report.covariance.observe(max_norm_diff(lhs, measure.atom(act(g, ConfigPoint(i, n)))));
      ++report.covariance_checks;
    }
    for (std::size_t b = 0; b < group.size(); ++b) {
      const auto gh = g * group[b];
      report.homomorphism.observe(max_norm_diff(vg * images[b], images[gh.position()]));
      ++report.homomorphism_checks;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Observables.

/// Q = sum_k k E(r_k) = diag(0, 1, ..., n-1).
inline ComplexMatrix position_operator(int n) {
  const ProjectionMeasure measure(n);
  ComplexMatrix q = zero_matrix(n);
  for (int k = 0; k < n; ++k) q += static_cast<double>(k) * measure.atom(k);
  return q;
}

/// Momentum matrix elements:
///   P_lm = (2 pi / n) / (1 - e^{2 pi i (m-l)/n}),  m != l
///   P_ll = -pi (n-1)/n
/// so that exp(-i P) = V1(R_1).
inline ComplexMatrix momentum_operator(int n) {
  require_order(n);
  ComplexMatrix p(n, n);
  for (int l = 0; l < n; ++l) {
    for (int m = 0; m < n; ++m) {
      p(l, m) = (m == l) ? Complex{-kPi * (n - 1) / n, 0.0}
                         : (2.0 * kPi / n) / (1.0 - unit_root(m - l, n));
    }
  }
  return p;
}

/// Argument of e^{2 pi i j/n} taken in [branch_start, branch_start + 2 pi).
inline double branch_angle(int j, int n, double branch_start) {
  const double two_pi = 2.0 * kPi;
  const double theta = two_pi * wrap(j, n) / n;
  return theta - two_pi * std::floor((theta - branch_start) / two_pi);
}

/// Spectral data of V1(R_k): eigenvalue e^{2 pi i j k/n} on |j>. When
/// gcd(k, n) > 1 equal eigenvalues are merged and their projectors summed.
inline SpectralData rotation_spectrum(int n, int k) {
  require_order(n);
  if (k < 0 || k >= n) {
    throw std::out_of_range("rotation_spectrum: k=" + std::to_string(k) + " outside [0, " +
                            std::to_string(n) + ")");
  }
  SpectralData spec;
  std::vector<int> slot_of_phase(static_cast<std::size_t>(n), -1);
  for (int j = 0; j < n; ++j) {
    const int phase = wrap(static_cast<long long>(j) * k, n);
    int& slot = slot_of_phase[static_cast<std::size_t>(phase)];
    if (slot < 0) {
      slot = static_cast<int>(spec.size());
      spec.eigenvalues.push_back(unit_root(phase, n));
      spec.multiplicities.push_back(0);
      spec.projectors.push_back(zero_matrix(n));
    }
    spec.multiplicities[static_cast<std::size_t>(slot)] += 1;
    spec.projectors[static_cast<std::size_t>(slot)] += circulant_projector(n, j);
  }
  return spec;
}

/// Spectral data of P = i ln V1(R_1) for the given log branch: eigenvalue
/// -theta_j on |j>. branch_start = 0 gives the closed-form momentum_operator.
inline SpectralData momentum_spectrum(int n, double branch_start = 0.0) {
  require_order(n);
  SpectralData spec;
  for (int j = 0; j < n; ++j) {
    spec.eigenvalues.emplace_back(-branch_angle(j, n, branch_start), 0.0);
    spec.multiplicities.push_back(1);
    spec.projectors.push_back(circulant_projector(n, j));
  }
  return spec;
}

/// i ln V1(R_1) through Lagrange-Sylvester with an explicit log branch.
inline ComplexMatrix momentum_from_logarithm(int n, double branch_start = 0.0) {
  const ComplexMatrix shift = rep_closed_form(Representation::v1, DihedralElement::rotation(1, n));
  const ComplexMatrix log_shift =
      lagrange_sylvester(logarithm(branch_start), rotation_spectrum(n, 1), shift);
  return Complex{0.0, 1.0} * log_shift;
}

/// Multiplicities (q+, q-) of the eigenvalues +1 and -1 of V1(M_k).
struct MirrorSpectrum {
  int plus_multiplicity = 0;
  int minus_multiplicity = 0;
  friend bool operator==(const MirrorSpectrum&, const MirrorSpectrum&) = default;
};

/// n odd: ((n+1)/2, (n-1)/2). n even: (n/2+1, n/2-1) if k even, (n/2, n/2) if k odd.
inline MirrorSpectrum mirror_spectrum(int n, int k) {
  require_order(n);
  if (k < 0 || k >= n) {
    throw std::out_of_range("mirror_spectrum: k=" + std::to_string(k) + " outside [0, " +
                            std::to_string(n) + ")");
  }
  if (n % 2 == 1) return {(n + 1) / 2, (n - 1) / 2};
  if (k % 2 == 0) return {n / 2 + 1, n / 2 - 1};
  return {n / 2, n / 2};
}

/// Spectral data of V_rep(M_k) from its involution projectors. Eigenvalues
/// with an empty eigenspace are omitted.
inline SpectralData mirror_spectral_data(Representation rep, int n, int k) {
  const ComplexMatrix v = rep_closed_form(rep, DihedralElement::mirror(k, n));
  const auto [plus, minus] = involution_projectors(v);
  SpectralData spec;
  for (auto [lambda, proj] : {std::pair{1.0, &plus}, std::pair{-1.0, &minus}}) {
    const int rank = projector_rank(*proj);
    if (rank == 0) continue;
    spec.eigenvalues.emplace_back(lambda, 0.0);
    spec.multiplicities.push_back(rank);
    spec.projectors.push_back(*proj);
  }
  return spec;
}

/// P_{M_k} = (pi/2)(V(M_k) - I); exp(-i P_{M_k}) = V(M_k).
inline ComplexMatrix parity_generator(Representation rep, int n, int k) {
  const ComplexMatrix v = rep_closed_form(rep, DihedralElement::mirror(k, n));
  return (kPi / 2.0) * (v - identity_matrix(n));
}

/// Spectral data of P_{M_k}: 0 on the +1 eigenspace of V(M_k), -pi on the -1 eigenspace.
inline SpectralData parity_generator_spectrum(Representation rep, int n, int k) {
  SpectralData spec = mirror_spectral_data(rep, n, k);
  for (auto& l : spec.eigenvalues) l = (kPi / 2.0) * (l - 1.0);
  return spec;
}

/// i ln V(M_k) via Lagrange-Sylvester on the involution projectors. The
/// default branch (ln(-1) = i pi) reproduces parity_generator.
inline ComplexMatrix parity_generator_from_logarithm(Representation rep, int n, int k,
                                                     double branch_start = 0.0) {
  const ComplexMatrix v = rep_closed_form(rep, DihedralElement::mirror(k, n));
  return Complex{0.0, 1.0} *
         lagrange_sylvester(logarithm(branch_start), mirror_spectral_data(rep, n, k), v);
}

/// exp(c A) for A with known spectral data.
inline ComplexMatrix spectral_exp(Complex c, const SpectralData& spec, const ComplexMatrix& a) {
  return lagrange_sylvester(exponential(c), spec, a);
}

}  // namespace dnq
