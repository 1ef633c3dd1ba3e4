// Full invariant sweep for one n: group axioms, both systems of
// imprimitivity, spectra, momentum and parity reconstruction, vacua and
// coherent-state identities. Every check reports its max deviation.
#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "dnq/coherent.hpp"
#include "dnq/dihedral.hpp"
#include "dnq/kinematics.hpp"
#include "dnq/linalg.hpp"
#include "dnq/verdict.hpp"

namespace dnq {

/// Associativity (all 8n^3 triples), identity and inverse axioms; each
/// deviation is the number of violations.
inline std::vector<Verdict> group_axiom_verdicts(int n) {
  const auto group = enumerate_group(n);
  const auto e = DihedralElement::identity(n);
  double assoc = 0, ident = 0, inv = 0;
  for (const auto& a : group) {
    if (a * e != a || e * a != a) ++ident;
    if (a * inverse(a) != e || inverse(a) * a != e) ++inv;
    for (const auto& b : group) {
      const auto ab = a * b;
      for (const auto& c : group) {
        if (ab * c != a * (b * c)) ++assoc;
      }
    }
  }
  return {Verdict("associativity", assoc, 0.0, std::to_string(8LL * n * n * n) + " triples"),
          Verdict("identity", ident, 0.0), Verdict("inverse", inv, 0.0)};
}

/// 1 when no reflection has a nonzero character difference trace(V1) - trace(V2).
inline Verdict check_inequivalence(int n) {
  double best = 0.0;
  for (int k = 0; k < n; ++k) {
    const auto m = DihedralElement::mirror(k, n);
    const Complex diff = rep_closed_form(Representation::v1, m).trace() -
                         rep_closed_form(Representation::v2, m).trace();
    best = std::max(best, std::abs(diff));
  }
  return {"inequivalence_witness", best > 0.5 ? 0.0 : 1.0, 0.0, "trace difference on mirrors"};
}

inline std::vector<Verdict> verify_kinematics_common(int n, double tol) {
  std::vector<Verdict> out;

  Verdict rotation("rotation_spectra", 0.0, tol);
  for (int k = 0; k < n; ++k) {
    const auto spec = rotation_spectrum(n, k);
    const auto v = rep_closed_form(Representation::v1, DihedralElement::rotation(k, n));
    rotation.observe(spectral_residual(spec, v).max());
    // every e^{2 pi i j k/n} must be among the distinct eigenvalues
    for (int j = 0; j < n; ++j) {
      double nearest = 2.0;
      const Complex target = unit_root(static_cast<long long>(j) * k, n);
      for (const auto& l : spec.eigenvalues) nearest = std::min(nearest, std::abs(l - target));
      rotation.observe(nearest);
    }
  }
  out.push_back(rotation);

  const ComplexMatrix p = momentum_operator(n);
  out.emplace_back("momentum_self_adjoint", hermiticity_defect(p), tol);
  out.emplace_back("momentum_log_route", max_norm_diff(momentum_from_logarithm(n), p), tol,
                   "i ln V1(R1) vs closed form");

  Verdict recon("momentum_exp_reconstruction", 0.0, tol, "exp(-ikP) = V1(Rk)");
  const auto pspec = momentum_spectrum(n);
  for (int k = 0; k < n; ++k) {
    recon.observe(max_norm_diff(spectral_exp(Complex{0.0, -static_cast<double>(k)}, pspec, p),
                                rep_closed_form(Representation::v1,
                                                DihedralElement::rotation(k, n))));
  }
  out.push_back(recon);

  const ComplexMatrix lowering = annihilation_analogue(n);
  Verdict eigen("vacuum_eigen_relation", 0.0, tol, "e^{2pi Q/n} V1(R1) |0>k = lambda_k |0>k");
  Verdict norm("vacuum_norm", 0.0, tol);
  for (int k = 0; k < n; ++k) {
    const auto vac = vacuum(n, k);
    eigen.observe(max_norm_diff(ComplexVector(lowering * vac.components),
                                ComplexVector(vac.eigenvalue * vac.components)));
    norm.observe(std::abs(vac.components.norm() - 1.0));
  }
  out.push_back(eigen);
  out.push_back(norm);

  Verdict rot_comm("rotation_commutation", 0.0, tol, "constant multiplier e^{2pi i a m/n}");
  Verdict mir_comm("mirror_commutation", 0.0, tol, "column multiplier e^{2pi i a (m-2c)/n}");
  for (int a = 0; a < n; ++a) {
    for (int m = 0; m < n; ++m) {
      const auto rd = rotation_commutation_defect(a, m, n);
      for (const auto& x : rd.column_multipliers) {
        rot_comm.observe(std::abs(x - unit_root(static_cast<long long>(a) * m, n)));
      }
      const auto md = commutation_defect(a, m, n);
      for (int c = 0; c < n; ++c) {
        mir_comm.observe(std::abs(md.column_multipliers[static_cast<std::size_t>(c)] -
                                  unit_root(static_cast<long long>(a) * (m - 2 * c), n)));
      }
    }
  }
  out.push_back(rot_comm);
  out.push_back(mir_comm);
  out.push_back(check_inequivalence(n));
  return out;
}

inline std::vector<Verdict> verify_representation(int n, Representation rep, double tol) {
  const std::string tag = "[" + to_string(rep) + "]";
  std::vector<Verdict> out;

  Verdict oracle("induce_rep_oracle" + tag, 0.0, tol, "coset condition vs closed form");
  for (const auto& g : enumerate_group(n)) {
    oracle.observe(max_norm_diff(induce_rep(inducing_irrep(rep), g), rep_closed_form(rep, g)));
  }
  out.push_back(oracle);

  auto report = verify_imprimitivity(rep, n, tol);
  for (Verdict* v : {&report.homomorphism, &report.unitarity, &report.covariance}) {
    v->name += tag;
    out.push_back(*v);
  }

  Verdict mult("mirror_multiplicities" + tag, 0.0, 0.0, "projector ranks vs parity rule");
  Verdict parity("parity_exp" + tag, 0.0, tol, "exp(-i P_Mk) = V(Mk)");
  for (int k = 0; k < n; ++k) {
    const auto v = rep_closed_form(Representation::v1, DihedralElement::mirror(k, n));
    const auto [plus, minus] = involution_projectors(v, tol);
    const auto expected = mirror_spectrum(n, k);
    mult.observe(std::abs(projector_rank(plus) - expected.plus_multiplicity) +
                 std::abs(projector_rank(minus) - expected.minus_multiplicity));
    parity.observe(max_norm_diff(spectral_exp(Complex{0.0, -1.0},
                                              parity_generator_spectrum(rep, n, k),
                                              parity_generator(rep, n, k)),
                                 rep_closed_form(rep, DihedralElement::mirror(k, n))));
  }
  out.push_back(mult);
  out.push_back(parity);

  const auto labels = all_labels(n, rep);
  const ComplexMatrix id = identity_matrix(n);
  Verdict consistency("coherent_formula_vs_operator" + tag, 0.0, tol);
  Verdict unity("resolution_of_unity" + tag, 0.0, tol, std::to_string(2 * n) + "*I");
  Verdict partial("resolution_rotations" + tag, 0.0, tol, std::to_string(n) + "*I");
  Verdict overlaps("overlap_closed_form" + tag, 0.0, tol);
  Verdict probs("position_probabilities" + tag, 0.0, tol);
  for (int k = 0; k < n; ++k) {
    const auto vac = vacuum(n, k);
    std::vector<CoherentState> states;
    states.reserve(labels.size());
    for (const auto& label : labels) {
      states.push_back(coherent_state(label, k));
      const auto& s = states.back();
      consistency.observe(
          max_norm_diff(s.components, coherent_state_by_operator(label, k).components));
      for (int j = 0; j < n; ++j) {
        probs.observe(
            std::abs(position_probability(j, s) - position_probability_closed_form(j, label.g)));
      }
    }
    unity.observe(max_norm_diff(resolution_of_unity(n, k, rep), (2.0 * n) * id));
    partial.observe(max_norm_diff(resolution_of_unity(n, k, rep, LabelSubset::rotations),
                                  static_cast<double>(n) * id));
    for (std::size_t x = 0; x < states.size(); ++x) {
      for (std::size_t y = 0; y < states.size(); ++y) {
        overlaps.observe(std::abs(overlap(states[x], states[y]) -
                                  overlap_closed_form(labels[x], labels[y], vac)));
      }
    }
  }
  out.push_back(consistency);
  out.push_back(unity);
  out.push_back(partial);
  out.push_back(overlaps);
  out.push_back(probs);
  return out;
}

/// Everything, for the given representations.
inline std::vector<Verdict> run_verification(int n, const std::vector<Representation>& reps,
                                             double tol) {
  require_order(n);
  std::vector<Verdict> out = group_axiom_verdicts(n);
  for (auto& v : verify_kinematics_common(n, tol)) out.push_back(std::move(v));
  for (auto rep : reps) {
    for (auto& v : verify_representation(n, rep, tol)) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace dnq
