// Builds one coherent-state family for n = 6 and prints the frame constant
// and a position probability profile.
#include <cstdio>

#include "dnq/dnq.hpp"

int main() {
  const int n = 6;
  const int k = 2;
  const auto frame = dnq::resolution_of_unity(n, k, dnq::Representation::v1);
  std::printf("sum |a,g><a,g| = %.12f * I (deviation %.2e)\n", frame(0, 0).real(),
              dnq::max_norm_diff(frame, frame(0, 0).real() * dnq::identity_matrix(n)));

  const dnq::WeylLabel label{1, dnq::DihedralElement::mirror(3, n), dnq::Representation::v1};
  const auto state = dnq::coherent_state(label, k);
  std::printf("|%d,%s>^(%d) position profile:", label.a, label.g.to_string().c_str(), k);
  for (int j = 0; j < n; ++j) std::printf(" %.6f", dnq::position_probability(j, state));
  std::printf("\n");
}
