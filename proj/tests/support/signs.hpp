#pragma once

#include <string_view>

#include "extlift/sign.hpp"

namespace extlift::testing {

// Positional sign vector: "+-00" is (1:+, 2:-, 3:0, 4:0).
inline SignedSet sv(std::string_view s) {
  Mask pos = 0, neg = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '+') pos |= bit(static_cast<int>(i));
    if (s[i] == '-') neg |= bit(static_cast<int>(i));
  }
  return SignedSet(static_cast<int>(s.size()), pos, neg);
}

// 1-based element list, e.g. set({1, 3}).
inline Mask set(std::initializer_list<int> one_based) {
  Mask m = 0;
  for (int e : one_based) m |= bit(e - 1);
  return m;
}

}  // namespace extlift::testing
