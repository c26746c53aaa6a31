#pragma once

#include <cstdint>

namespace chern {

/// Binomial coefficient with the convention shared by every closed-form
/// coefficient formula in this library:
///   C(m, k) is the usual value for m >= k >= 0,
///   C(m, k) = 0 when k < 0 or m < k,
///   except C(-1, -1) = 1.
/// Throws on int64 overflow.
std::int64_t binomial(std::int64_t m, std::int64_t k);

}  // namespace chern
