// Powers of the matrix with phi = t, g = 1, h = exp(t). Here omega = t exp(omega)
// is the tree function, whose coefficients are n^(n-1)/n!.

#include <iostream>

#include "tripow/tripow.hpp"

int main() {
  using namespace tripow;
  const std::size_t N = 6;
  const Series t = Series::variable(N);
  const Series one = Series::constant(Rational(1), N);
  const Series h = preset_series({PresetKind::exp_full, 0}, N);
  const MatrixSpec spec(t, one, h);

  std::cout << "omega = " << to_string(solve_omega(h)) << "\n\n";

  bool ok = true;
  for (long s : {-2L, -1L, 1L, 2L, 3L}) {
    const TriMatrix closed = power_closed(spec, s);
    const bool agree = closed == power_oracle(spec, s);
    ok = ok && agree;
    std::cout << "s = " << s << (agree ? "" : "  (MISMATCH)") << '\n';
    for (std::size_t k = 1; k <= N; ++k) {
      for (std::size_t n = 1; n <= N; ++n) std::cout << '\t' << to_string(closed(k, n));
      std::cout << '\n';
    }
    std::cout << '\n';
  }
  return ok ? 0 : 1;
}
