#include "chern/binomial.hpp"

#include "chern/error.hpp"

namespace chern {

std::int64_t binomial(std::int64_t m, std::int64_t k) {
  if (m == -1 && k == -1) return 1;
  if (k < 0 || m < k) return 0;
  if (k > m - k) k = m - k;
  // C(m, j) = C(m, j - 1) * (m - j + 1) / j, exact at every step.
  __int128 c = 1;
  for (std::int64_t j = 1; j <= k; ++j) {
    c = c * (m - j + 1) / j;
    if (c > INT64_MAX) throw Error("binomial coefficient overflows 64 bits");
  }
  return static_cast<std::int64_t>(c);
}

}  // namespace chern
