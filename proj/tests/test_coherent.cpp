#include <gtest/gtest.h>

#include "dnq/coherent.hpp"
#include "oracles.hpp"

using namespace dnq;

namespace {
constexpr Complex I{0.0, 1.0};

DihedralElement R(int k, int n) { return DihedralElement::rotation(k, n); }
DihedralElement M(int k, int n) { return DihedralElement::mirror(k, n); }

// Vacuum as the eigenvector of e^{2 pi Q/n} exp(-i P) for lambda_k, found
// numerically and phase-fixed so that the first component is positive.
ComplexVector numeric_vacuum(int n, int k) {
  ComplexMatrix weight = zero_matrix(n);
  for (int j = 0; j < n; ++j) weight(j, j) = std::exp(2.0 * kPi * j / n);
  const ComplexMatrix a = weight * oracle::hermitian_exp(momentum_operator(n), -I);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(a);
  const Complex target = std::exp(kPi * (n - 1) / n) * std::polar(1.0, 2 * kPi * k / n);
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < solver.eigenvalues().size(); ++i) {
    if (std::abs(solver.eigenvalues()[i] - target) < std::abs(solver.eigenvalues()[best] - target)) best = i;
  }
  ComplexVector v = solver.eigenvectors().col(best);
  v /= v.norm();
  return v * (std::abs(v[0]) / v[0]);
}
}  // namespace

TEST(Weyl, PositionPhaseExamples) {
  EXPECT_EQ(position_phase(0, 4), identity_matrix(4));
  ComplexMatrix d(2, 2);
  d << 1, 0, 0, -1;
  EXPECT_LT(max_norm_diff(position_phase(1, 2), d), 1e-15);
  for (int n = 2; n <= 9; ++n) {
    EXPECT_LT(max_norm_diff(position_phase(1, n) * position_phase(n - 1, n), identity_matrix(n)), 1e-12);
  }
  EXPECT_THROW(position_phase(3, 3), std::out_of_range);
}

TEST(Weyl, OperatorExamples) {
  EXPECT_EQ(weyl_operator({0, R(0, 5), Representation::v1}), identity_matrix(5));
  const auto w = weyl_operator({1, R(1, 2), Representation::v1});
  ComplexMatrix expected(2, 2);
  expected << 0, 1, -1, 0;
  EXPECT_LT(max_norm_diff(w, expected), 1e-15);
  EXPECT_LT(std::abs(w.determinant() - 1.0), 1e-15);
  for (int n = 2; n <= 7; ++n) {
    for (auto rep : {Representation::v1, Representation::v2}) {
      for (const auto& label : all_labels(n, rep)) EXPECT_LT(unitarity_defect(weyl_operator(label)), 1e-12);
    }
  }
}

TEST(Weyl, LabelsAreEnumeratedOnce) {
  const auto labels = all_labels(4, Representation::v2);
  ASSERT_EQ(labels.size(), 32u);
  EXPECT_EQ(labels.front(), (WeylLabel{0, R(0, 4), Representation::v2}));
  EXPECT_EQ(labels.back(), (WeylLabel{3, M(3, 4), Representation::v2}));
}

TEST(Commutation, Examples) {
  for (int m = 0; m < 4; ++m) {
    for (const auto& x : commutation_defect(0, m, 4).column_multipliers) EXPECT_LT(std::abs(x - 1.0), 1e-15);
  }
  const auto d = commutation_defect(1, 0, 3);
  EXPECT_LT(std::abs(d.column_multipliers[1] - std::polar(1.0, -4 * kPi / 3)), 1e-12);
}

TEST(Commutation, MirrorMultipliersDependOnColumn) {
  // direct products with the plain permutation matrix, no matrix exponential
  for (int n = 2; n <= 9; ++n) {
    for (int a = 0; a < n; ++a) {
      for (int m = 0; m < n; ++m) {
        const auto defect = commutation_defect(a, m, n);
        const ComplexMatrix v = rep_closed_form(Representation::v1, M(m, n));
        const ComplexMatrix lhs = position_phase(a, n) * v;
        const ComplexMatrix rhs = v * position_phase(a, n);
        for (int c = 0; c < n; ++c) {
          const int row = wrap(m - c, n);
          const Complex expected = std::polar(1.0, 2 * kPi * a * (m - 2 * c) / n);
          EXPECT_LT(std::abs(lhs(row, c) / rhs(row, c) - expected), 1e-12);
          EXPECT_LT(std::abs(defect.column_multipliers[static_cast<std::size_t>(c)] - expected), 1e-12);
        }
      }
    }
  }
}

TEST(Commutation, RotationMultiplierIsConstant) {
  for (int n = 2; n <= 9; ++n) {
    for (int a = 0; a < n; ++a) {
      for (int m = 0; m < n; ++m) {
        const auto d = rotation_commutation_defect(a, m, n);
        EXPECT_LT(d.spread(), 1e-12);
        EXPECT_LT(std::abs(d.column_multipliers[0] - std::polar(1.0, 2 * kPi * a * m / n)), 1e-12);
      }
    }
  }
}

TEST(Commutation, NoProjectiveRepresentation) {
  EXPECT_GT(commutation_defect(1, 0, 3).spread(), 1e-6);
  EXPECT_LT(commutation_defect(1, 0, 2).spread(), 1e-12);  // e^{-2 pi i c} is 1 at n = 2
}

TEST(Vacuum, TwoSiteExample) {
  const auto v = vacuum(2, 0);
  const double norm = std::sqrt(1.0 + std::exp(kPi));
  EXPECT_LT(std::abs(v.components[0] - 1.0 / norm), 1e-15);
  EXPECT_LT(std::abs(v.components[1] - std::exp(kPi / 2) / norm), 1e-15);
}

TEST(Vacuum, EigenRelationAndNorm) {
  for (int n = 2; n <= 12; ++n) {
    const auto a = annihilation_analogue(n);
    for (int k = 0; k < n; ++k) {
      const auto v = vacuum(n, k);
      EXPECT_LT(std::abs(v.components.norm() - 1.0), 1e-12);
      EXPECT_LT(max_norm_diff(ComplexVector(a * v.components), ComplexVector(v.eigenvalue * v.components)),
                1e-10);
      EXPECT_LT(max_norm_diff(v.components, numeric_vacuum(n, k)), 1e-9) << "n=" << n << " k=" << k;
    }
  }
}

TEST(Vacuum, PositiveExponentialOfMomentumIsNotTheLoweringOperator) {
  for (int n = 3; n <= 8; ++n) {
    ComplexMatrix weight = zero_matrix(n);
    for (int j = 0; j < n; ++j) weight(j, j) = std::exp(2.0 * kPi * j / n);
    const ComplexMatrix literal = weight * oracle::hermitian_exp(momentum_operator(n), I);
    const auto v = vacuum(n, 0);
    EXPECT_GT(max_norm_diff(ComplexVector(literal * v.components), ComplexVector(v.eigenvalue * v.components)),
              1e-3);
  }
}

TEST(CoherentStates, Examples) {
  for (int n = 2; n <= 6; ++n) {
    for (int k = 0; k < n; ++k) {
      const auto s = coherent_state({0, R(0, n), Representation::v1}, k);
      EXPECT_EQ(s.components, vacuum(n, k).components);
      for (int a = 0; a < n; ++a) {
        for (int m = 0; m < n; ++m) {
          const auto s1 = coherent_state({a, M(m, n), Representation::v1}, k);
          const auto s2 = coherent_state({a, M(m, n), Representation::v2}, k);
          EXPECT_EQ(s2.components, ComplexVector(-s1.components));
        }
      }
    }
  }
}

TEST(CoherentStates, FormulaMatchesOperator) {
  for (int n = 2; n <= 8; ++n) {
    for (int k = 0; k < n; ++k) {
      const ComplexVector vac = numeric_vacuum(n, k);
      for (auto rep : {Representation::v1, Representation::v2}) {
        for (const auto& label : all_labels(n, rep)) {
          const auto s = coherent_state(label, k);
          EXPECT_LT(max_norm_diff(s.components, coherent_state_by_operator(label, k).components), 1e-12);
          EXPECT_LT(max_norm_diff(s.components, ComplexVector(weyl_operator(label) * vac)), 1e-9);
        }
      }
    }
  }
}

TEST(Resolution, Examples) {
  EXPECT_LT(max_norm_diff(resolution_of_unity(2, 0, Representation::v1), 4.0 * identity_matrix(2)), 1e-10);
  EXPECT_LT(max_norm_diff(resolution_of_unity(5, 3, Representation::v2), 10.0 * identity_matrix(5)), 1e-9);
  for (int n = 2; n <= 12; ++n) {
    for (int k = 0; k < n; ++k) {
      for (auto rep : {Representation::v1, Representation::v2}) {
        EXPECT_LT(max_norm_diff(resolution_of_unity(n, k, rep), 2.0 * n * identity_matrix(n)), 1e-9);
        EXPECT_LT(max_norm_diff(resolution_of_unity(n, k, rep, LabelSubset::rotations),
                                static_cast<double>(n) * identity_matrix(n)),
                  1e-10);
        EXPECT_LT(max_norm_diff(resolution_of_unity(n, k, rep, LabelSubset::mirrors),
                                static_cast<double>(n) * identity_matrix(n)),
                  1e-10);
      }
    }
  }
}

TEST(Resolution, BruteForceOuterProducts) {
  const int n = 3;
  ComplexMatrix sum = zero_matrix(n);
  for (int a = 0; a < n; ++a) {
    for (const auto& g : enumerate_group(n)) {
      const ComplexVector s = weyl_operator({a, g, Representation::v1}) * numeric_vacuum(n, 1);
      sum += s * s.adjoint();
    }
  }
  EXPECT_LT(max_norm_diff(sum, 6.0 * identity_matrix(n)), 1e-9);
}

TEST(Resolution, CompensatedPathForLargeOrder) {
  const int n = 70;
  EXPECT_LT(max_norm_diff(resolution_of_unity(n, 5, Representation::v1), 2.0 * n * identity_matrix(n)), 1e-9);
}

TEST(Overlaps, Examples) {
  for (int n = 2; n <= 6; ++n) {
    for (auto rep : {Representation::v1, Representation::v2}) {
      const auto labels = all_labels(n, rep);
      for (int k = 0; k < n; ++k) {
        for (const auto& l1 : labels) {
          const auto s1 = coherent_state(l1, k);
          EXPECT_LT(std::abs(overlap(s1, s1) - 1.0), 1e-12);
          for (const auto& l2 : labels) {
            const auto s2 = coherent_state(l2, k);
            EXPECT_LT(std::abs(overlap(s1, s2) - std::conj(overlap(s2, s1))), 1e-12);
            EXPECT_LT(std::abs(overlap(s1, s2) - overlap_closed_form(l1, l2, k)), 1e-12);
          }
        }
      }
    }
  }
}

TEST(Overlaps, RotationPairByHand) {
  // <a, R_p | b, R_q> = sum_j e^{2 pi i j (b - a)/n} conj(g_{j-p}) g_{j-q}
  const int n = 3, k = 1;
  const ComplexVector g = numeric_vacuum(n, k);
  Complex expected{0.0, 0.0};
  for (int j = 0; j < n; ++j) {
    expected += std::polar(1.0, 2 * kPi * j * (0 - 2) / n) * std::conj(g[wrap(j - 1, n)]) * g[wrap(j - 2, n)];
  }
  const WeylLabel l1{2, R(1, n), Representation::v1};
  const WeylLabel l2{0, R(2, n), Representation::v1};
  EXPECT_LT(std::abs(overlap_closed_form(l1, l2, k) - expected), 1e-9);
}

TEST(Overlaps, RejectsMismatchedStates) {
  const auto s1 = coherent_state({0, R(0, 3), Representation::v1}, 0);
  const auto s2 = coherent_state({0, R(0, 3), Representation::v1}, 1);
  const auto s3 = coherent_state({0, R(0, 3), Representation::v2}, 0);
  EXPECT_THROW(overlap(s1, s2), std::invalid_argument);
  EXPECT_THROW(overlap(s1, s3), std::invalid_argument);
}

TEST(Probabilities, Examples) {
  const auto s = coherent_state({0, R(0, 2), Representation::v1}, 0);
  EXPECT_LT(std::abs(position_probability(0, s) - 1.0 / (1.0 + std::exp(kPi))), 1e-15);
  EXPECT_THROW(position_probability(2, s), std::out_of_range);
}

TEST(Probabilities, InvariantUnderPhaseVacuumAndRep) {
  for (int n = 2; n <= 8; ++n) {
    for (const auto& g : enumerate_group(n)) {
      const auto ref = coherent_state({0, g, Representation::v1}, 0);
      double total = 0.0;
      for (int j = 0; j < n; ++j) {
        total += position_probability(j, ref);
        EXPECT_LT(std::abs(position_probability(j, ref) - position_probability_closed_form(j, g)), 1e-10);
      }
      EXPECT_LT(std::abs(total - 1.0), 1e-12);
      for (int a = 0; a < n; ++a) {
        for (int k = 0; k < n; ++k) {
          for (auto rep : {Representation::v1, Representation::v2}) {
            const auto s = coherent_state({a, g, rep}, k);
            for (int j = 0; j < n; ++j) {
              EXPECT_LT(std::abs(position_probability(j, s) - position_probability(j, ref)), 1e-12);
            }
          }
        }
      }
    }
  }
}

TEST(Probabilities, ProfilesAreShiftsAndReflections) {
  for (int n = 2; n <= 9; ++n) {
    const ComplexVector g = numeric_vacuum(n, 0);
    for (int m = 0; m < n; ++m) {
      for (int j = 0; j < n; ++j) {
        EXPECT_LT(std::abs(position_probability_closed_form(j, R(m, n)) - std::norm(g[wrap(j - m, n)])), 1e-10);
        EXPECT_LT(std::abs(position_probability_closed_form(j, M(m, n)) - std::norm(g[wrap(m - j, n)])), 1e-10);
      }
    }
  }
}
