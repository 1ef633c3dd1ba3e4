// Generalized Weyl operators W(a, g) = e^{(2 pi i a/n) Q} V(g) over
// Z_n x D_n, the admissible vacua |0>^(k), and the n coherent-state families
// |a, g>^(k) = W(a, g) |0>^(k) for both kinematics.
//
// Sign convention: in the vacuum condition and the rotation commutation
// relation the momentum exponential e^{i m P} stands for the unit translation
// V1(R_m). With P normalised so that exp(-i P) = V1(R_1), that operator is
// exp(-i m P), which is what is built below.
#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "dnq/dihedral.hpp"
#include "dnq/kinematics.hpp"
#include "dnq/linalg.hpp"

namespace dnq {

struct WeylLabel {
  int a = 0;
  DihedralElement g = DihedralElement::identity(2);
  Representation rep = Representation::v1;

  int order() const { return g.order(); }
  std::string to_string() const {
    return "(" + std::to_string(a) + "," + g.to_string() + ")_" + dnq::to_string(rep);
  }
  friend bool operator==(const WeylLabel&, const WeylLabel&) = default;
};

namespace detail {
inline void require_index(int value, int n, const char* what) {
  if (value < 0 || value >= n) {
    throw std::out_of_range(std::string(what) + "=" + std::to_string(value) + " outside [0, " +
                            std::to_string(n) + ")");
  }
}
}  // namespace detail

/// Labels in summation order: a-major, then canonical group order.
inline std::vector<WeylLabel> all_labels(int n, Representation rep) {
  const auto group = enumerate_group(n);
  std::vector<WeylLabel> labels;
  labels.reserve(static_cast<std::size_t>(n) * group.size());
  for (int a = 0; a < n; ++a) {
    for (const auto& g : group) labels.push_back({a, g, rep});
  }
  return labels;
}

/// exp((2 pi i a/n) Q) = diag(1, w^a, ..., w^{a(n-1)}).
inline ComplexMatrix position_phase(int a, int n) {
  require_order(n);
  detail::require_index(a, n, "a");
  ComplexMatrix d = zero_matrix(n);
  for (int j = 0; j < n; ++j) d(j, j) = unit_root(static_cast<long long>(a) * j, n);
  return d;
}

/// exp((2 pi/n) Q) = diag(e^{2 pi j/n}); positive, not unitary.
inline ComplexMatrix position_weight(int n) {
  require_order(n);
  ComplexMatrix d = zero_matrix(n);
  for (int j = 0; j < n; ++j) d(j, j) = std::exp(2.0 * kPi * j / n);
  return d;
}

inline ComplexMatrix weyl_operator(const WeylLabel& label) {
  const int n = label.order();
  return position_phase(label.a, n) * rep_closed_form(label.rep, label.g);
}

/// exp(-i m P) via Lagrange-Sylvester on the momentum spectrum; equals V1(R_m).
inline ComplexMatrix translation_exponential(int n, int m) {
  return spectral_exp(Complex{0.0, -static_cast<double>(m)}, momentum_spectrum(n),
                      momentum_operator(n));
}

/// e^{(2 pi/n) Q} e^{i P} in the translation convention: the operator whose
/// eigenvectors are the admissible vacua.
inline ComplexMatrix annihilation_analogue(int n) {
  return position_weight(n) * translation_exponential(n, 1);
}

// ---------------------------------------------------------------------------
// Commutation defects.

/// Entrywise ratios (D_a U)_{jc} / (U D_a)_{jc} on the support of U, where
/// D_a = exp((2 pi i a/n) Q). U is a (signed) permutation so every column
/// carries exactly one multiplier.
struct CommutationDefect {
  ComplexMatrix multipliers;              // ratio on the support, 0 elsewhere
  std::vector<Complex> column_multipliers;

  /// Largest distance between any two column multipliers.
  double spread() const {
    double s = 0.0;
    for (const auto& x : column_multipliers) {
      for (const auto& y : column_multipliers) s = std::max(s, std::abs(x - y));
    }
    return s;
  }
};

namespace detail {
inline CommutationDefect commutation_ratios(int a, const ComplexMatrix& u) {
  const int n = static_cast<int>(u.rows());
  const ComplexMatrix d = position_phase(a, n);
  const ComplexMatrix left = d * u;
  const ComplexMatrix right = u * d;
  CommutationDefect out{zero_matrix(n), std::vector<Complex>(static_cast<std::size_t>(n))};
  for (int c = 0; c < n; ++c) {
    int support = -1;
    for (int j = 0; j < n; ++j) {
      if (std::abs(right(j, c)) > 0.5) {
        if (support >= 0) throw std::logic_error("commutation_ratios: operator is not monomial");
        support = j;
      }
    }
    if (support < 0) throw std::logic_error("commutation_ratios: empty column");
    const Complex ratio = left(support, c) / right(support, c);
    out.multipliers(support, c) = ratio;
    out.column_multipliers[static_cast<std::size_t>(c)] = ratio;
  }
  return out;
}
}  // namespace detail

/// Multipliers of e^{(2 pi i a/n) Q} e^{i P_{M_m}} against
/// e^{i P_{M_m}} e^{(2 pi i a/n) Q}. Column c carries e^{(2 pi i a/n)(m - 2c)},
/// so for a != 0 and n >= 3 they are not all equal.
inline CommutationDefect commutation_defect(int a, int m, int n) {
  require_order(n);
  detail::require_index(a, n, "a");
  detail::require_index(m, n, "m");
  const ComplexMatrix parity =
      spectral_exp(Complex{0.0, 1.0}, parity_generator_spectrum(Representation::v1, n, m),
                   parity_generator(Representation::v1, n, m));
  return detail::commutation_ratios(a, parity);
}

/// Same ratios with the rotation V1(R_m); the multiplier is the constant e^{2 pi i a m/n}.
inline CommutationDefect rotation_commutation_defect(int a, int m, int n) {
  require_order(n);
  detail::require_index(a, n, "a");
  detail::require_index(m, n, "m");
  return detail::commutation_ratios(a, translation_exponential(n, m));
}

// ---------------------------------------------------------------------------
// Vacua and coherent states.

/// A_n = (sum_j e^{(2 pi/n) j (j - n + 2)})^{-1/2}.
inline double vacuum_normalization(int n) {
  require_order(n);
  double s = 0.0;
  for (int j = 0; j < n; ++j) s += std::exp(2.0 * kPi / n * j * (j - n + 2));
  return 1.0 / std::sqrt(s);
}

/// lambda_k = e^{pi (n-1)/n} e^{2 pi i k/n}.
inline Complex vacuum_eigenvalue(int n, int k) {
  return std::exp(kPi * (n - 1) / n) * unit_root(k, n);
}

struct VacuumVector {
  int n = 0;
  int k = 0;
  double normalization = 0.0;
  Complex eigenvalue;
  ComplexVector components;
};

/// g_j^(k) = A_n e^{pi j (j - n + 2)/n} e^{-2 pi i j k/n}.
inline VacuumVector vacuum(int n, int k) {
  require_order(n);
  detail::require_index(k, n, "k");
  VacuumVector v{n, k, vacuum_normalization(n), vacuum_eigenvalue(n, k), ComplexVector(n)};
  for (int j = 0; j < n; ++j) {
    v.components[j] = v.normalization * std::exp(kPi * j * (j - n + 2) / n) *
                      unit_root(-static_cast<long long>(j) * k, n);
  }
  return v;
}

struct CoherentState {
  WeylLabel label;
  int k = 0;
  ComplexVector components;

  int order() const { return label.order(); }
};

/// Component formulas: e^{2 pi i a j/n} g_{j-m} for R_m, e^{2 pi i a j/n} g_{m-j}
/// for M_m, with an overall -1 on V2 mirrors.
inline CoherentState coherent_state(const WeylLabel& label, int k) {
  const int n = label.order();
  detail::require_index(label.a, n, "a");
  const auto vac = vacuum(n, k);
  const int m = label.g.index();
  const double sign = (label.rep == Representation::v2 && label.g.is_mirror()) ? -1.0 : 1.0;
  CoherentState s{label, k, ComplexVector(n)};
  for (int j = 0; j < n; ++j) {
    const int source = label.g.is_rotation() ? wrap(j - m, n) : wrap(m - j, n);
    s.components[j] =
        sign * unit_root(static_cast<long long>(label.a) * j, n) * vac.components[source];
  }
  return s;
}

/// W(a, g) |0>^(k) by explicit matrix-vector product.
inline CoherentState coherent_state_by_operator(const WeylLabel& label, int k) {
  const auto vac = vacuum(label.order(), k);
  return {label, k, weyl_operator(label) * vac.components};
}

enum class LabelSubset { all, rotations, mirrors };

/// sum |a, g><a, g| over the chosen labels, in all_labels order. Compensated
/// accumulation for n > 64.
inline ComplexMatrix resolution_of_unity(int n, int k, Representation rep,
                                         LabelSubset subset = LabelSubset::all) {
  require_order(n);
  detail::require_index(k, n, "k");
  const bool compensated = n > 64;
  CompensatedMatrixSum kahan(compensated ? n : 1);
  ComplexMatrix plain = zero_matrix(n);
  for (const auto& label : all_labels(n, rep)) {
    if (subset == LabelSubset::rotations && !label.g.is_rotation()) continue;
    if (subset == LabelSubset::mirrors && !label.g.is_mirror()) continue;
    const auto state = coherent_state(label, k);
    const ComplexMatrix term = state.components * state.components.adjoint();
    if (compensated) {
      kahan.add(term);
    } else {
      plain += term;
    }
  }
  return compensated ? kahan.value() : plain;
}

inline Complex overlap(const CoherentState& s1, const CoherentState& s2) {
  if (s1.order() != s2.order() || s1.k != s2.k || s1.label.rep != s2.label.rep) {
    throw std::invalid_argument("overlap: states differ in n, k or representation");
  }
  return inner(s1.components, s2.components);
}

/// Finite-sum overlap formulas:
///   <a,R_p|b,R_q> = sum_j e^{2 pi i j (b-a)/n} conj(g_{j-p}) g_{j-q}
///   <a,M_p|b,M_q> = sum_j e^{2 pi i j (b-a)/n} conj(g_{p-j}) g_{q-j}
///   <a,R_p|b,M_q> = sum_j e^{2 pi i j (b-a)/n} conj(g_{j-p}) g_{q-j}
/// The mixed V2 pair carries the mirror sign -1; <M|R> is conj(<R|M>).
inline Complex overlap_closed_form(const WeylLabel& l1, const WeylLabel& l2,
                                   const VacuumVector& vac) {
  if (l1.order() != l2.order() || l1.rep != l2.rep || l1.order() != vac.n) {
    throw std::invalid_argument("overlap_closed_form: labels differ in n or representation");
  }
  const int n = l1.order();
  if (l1.g.is_mirror() && l2.g.is_rotation()) return std::conj(overlap_closed_form(l2, l1, vac));

  const auto& g = vac.components;
  const int p = l1.g.index();
  const int q = l2.g.index();
  auto left_index = [&](int j) { return l1.g.is_rotation() ? wrap(j - p, n) : wrap(p - j, n); };
  auto right_index = [&](int j) { return l2.g.is_rotation() ? wrap(j - q, n) : wrap(q - j, n); };
  Complex sum{0.0, 0.0};
  for (int j = 0; j < n; ++j) {
    sum += unit_root(static_cast<long long>(j) * (l2.a - l1.a), n) *
           std::conj(g[left_index(j)]) * g[right_index(j)];
  }
  const bool mixed = l1.g.is_rotation() != l2.g.is_rotation();
  return (mixed && l1.rep == Representation::v2) ? -sum : sum;
}

inline Complex overlap_closed_form(const WeylLabel& l1, const WeylLabel& l2, int k) {
  return overlap_closed_form(l1, l2, vacuum(l1.order(), k));
}

/// |<j|s>|^2 read from the state's components.
inline double position_probability(int j, const CoherentState& s) {
  detail::require_index(j, s.order(), "j");
  return std::norm(s.components[j]);
}

/// A_n^2 e^{(2 pi/n) x (x - n + 2)} with x = (j - m) mod n for R_m and
/// x = (m - j) mod n for M_m. Independent of a, k and the representation.
inline double position_probability_closed_form(int j, const DihedralElement& g) {
  const int n = g.order();
  detail::require_index(j, n, "j");
  const int m = g.index();
  const int x = g.is_rotation() ? wrap(j - m, n) : wrap(m - j, n);
  const double a = vacuum_normalization(n);
  return a * a * std::exp(2.0 * kPi / n * x * (x - n + 2));
}

}  // namespace dnq
