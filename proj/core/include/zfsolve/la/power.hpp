#pragma once

#include <cstdint>
#include <utility>

namespace zfsolve::la {

// Right-to-left binary exponentiation. Uses at most
// 2 * ceil(log2(e + 1)) calls to mul; squarings past the top bit are skipped.
template <typename T, typename Mul>
T power_by_squaring(T base, std::uint64_t e, T identity, Mul&& mul) {
  T result = std::move(identity);
  bool result_is_identity = true;
  while (e != 0) {
    if (e & 1u) {
      if (result_is_identity) {
        result = base;
        result_is_identity = false;
      } else {
        result = mul(result, base);
      }
    }
    e >>= 1;
    if (e != 0) base = mul(base, base);
  }
  return result;
}

}  // namespace zfsolve::la
