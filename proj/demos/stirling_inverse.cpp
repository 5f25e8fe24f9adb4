// Prints the triangle of Stirling numbers of the second kind, built as the
// partial Bell matrix of exp(t)-1, and its inverse. The inverse is the partial
// Bell matrix of log(1+t), i.e. the signed Stirling numbers of the first kind.

#include <iostream>

#include "tripow/tripow.hpp"

namespace {

void print(const char* title, const tripow::TriMatrix& m) {
  std::cout << title << '\n';
  for (std::size_t k = 1; k <= m.order(); ++k) {
    for (std::size_t n = 1; n <= m.order(); ++n) std::cout << '\t' << tripow::to_string(m(k, n));
    std::cout << '\n';
  }
}

}  // namespace

int main() {
  using namespace tripow;
  const std::size_t N = 7;
  const C3Params stirling{preset_series({PresetKind::expm1, 0}, N), Weights::ones(N)};

  const TriMatrix S = special_power(stirling, 1);
  const TriMatrix S_inv = special_power(stirling, -1);
  print("S(n,k), row k, column n:", S);
  print("inverse:", S_inv);

  const bool inverse_ok = mat_mul(S, S_inv) == TriMatrix::identity(N);
  const bool closed_ok = power_closed(restricted_spec(stirling), -1) == S_inv;
  std::cout << "S * S^-1 = I: " << (inverse_ok ? "yes" : "no") << '\n'
            << "closed form agrees: " << (closed_ok ? "yes" : "no") << '\n';
  return inverse_ok && closed_ok ? 0 : 1;
}
