#pragma once

#include "vekua/clifford.hpp"

#include <algorithm>
#include <vector>

namespace vekua::testing {

/// Independent blade-product oracle: multiply generator lists by explicit
/// bubble sort with a sign flip per transposition and e_i e_i = -1
/// contraction of adjacent equal generators. Shares no code with the
/// popcount-based table.
struct OracleBlade {
  int sign = 1;
  std::vector<int> generators;  // strictly increasing after normalization
};

inline OracleBlade oracle_multiply(unsigned a, unsigned b, int n) {
  OracleBlade out;
  for (int i = 0; i < n; ++i)
    if (a & (1u << i)) out.generators.push_back(i);
  for (int i = 0; i < n; ++i)
    if (b & (1u << i)) out.generators.push_back(i);
  // bubble toward sorted order, flipping the sign per swap, contracting pairs
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < out.generators.size(); ++k) {
      if (out.generators[k] == out.generators[k + 1]) {
        out.generators.erase(out.generators.begin() + k, out.generators.begin() + k + 2);
        out.sign = -out.sign;  // e_i e_i = -1
        changed = true;
        break;
      }
      if (out.generators[k] > out.generators[k + 1]) {
        std::swap(out.generators[k], out.generators[k + 1]);
        out.sign = -out.sign;
        changed = true;
      }
    }
  }
  return out;
}

inline unsigned oracle_bitmask(const OracleBlade& blade) {
  unsigned mask = 0;
  for (int g : blade.generators) mask |= 1u << g;
  return mask;
}

}  // namespace vekua::testing
