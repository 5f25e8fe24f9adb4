#pragma once

// Random parser inputs up to 4 KiB: raw bytes, long token soups, and short
// token strings that often form valid expressions.

#include <random>
#include <string>
#include <vector>

namespace fuzz {

inline std::string random_input(std::mt19937_64& rng) {
  static const std::vector<std::string> tokens = {"t", "(", ")", "+", "-", "*", "/", "^", "1", "2", "0", "-1", "1/2",
                                                  "(1/3)", "exp(", "log(", "1+t", " ", "\n", "sin(", "x", "99999999"};
  const std::size_t limit = 1 + rng() % 4096;
  std::string out;
  switch (rng() % 3) {
    case 0:
      while (out.size() < limit) out += static_cast<char>(rng() % 256);
      break;
    case 1:
      while (out.size() < limit) out += tokens[rng() % tokens.size()];
      break;
    default: {
      const std::size_t len = 1 + rng() % 40;
      for (std::size_t i = 0; i < len; ++i) out += tokens[rng() % tokens.size()];
    }
  }
  if (out.size() > 4096) out.resize(4096);
  return out;
}

}  // namespace fuzz
