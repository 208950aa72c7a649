#include "splinedim/formulas.hpp"

#include <stdexcept>

namespace splinedim {

long binom_safe(long n, long k) {
  if (k < 0 || n < k) return 0;
  long long value = 1;
  for (long i = 1; i <= k; ++i) {
    value = value * (n - k + i) / i;
  }
  return static_cast<long>(value);
}

namespace {

void check_params(int k, long d, int r) {
  if (k < 1 || d < 0 || r < 0) {
    throw std::invalid_argument("need k >= 1, d >= 0, r >= 0");
  }
}

}  // namespace

long A_term(int k, long d, int r) {
  check_params(k, d, r);
  if (r % 2 == 1) {
    return k * binom_safe(d + k - static_cast<long>(r + 1) * (k + 1) / 2, k);
  }
  const long shift = static_cast<long>(r) * (k + 1) / 2;
  long total = 0;
  for (long t = 0; t < k; ++t) {
    total += binom_safe(d + k - 1 - shift - t, k);
  }
  return total;
}

long P_term(int k, long d, int r) {
  check_params(k, d, r);
  if (r % 2 == 1) {
    return (k - 1) * binom_safe(d + k - static_cast<long>(r + 1) * k / 2, k);
  }
  const long shift = static_cast<long>(r) * k / 2;
  long total = 0;
  for (long t = 0; t < k - 1; ++t) {
    total += binom_safe(d + k - 1 - shift - t, k);
  }
  return total;
}

long dim_alfeld(int k, long d, int r) {
  return binom_safe(d + k, k) + A_term(k, d, r);
}

long dim_pyramid(int k, long d, int r) {
  if (k < 2) throw std::invalid_argument("pyramid formula needs k >= 2");
  return binom_safe(d + k, k) + P_term(k, d, r);
}

long dim_facet(int k, long d, int r) {
  return binom_safe(d + k, k) + A_term(k, d, r) + (k + 1) * P_term(k, d, r);
}

long dim_double_alfeld(int k, long d, int r) {
  return binom_safe(d + k, k) + (k + 2) * A_term(k, d, r);
}

bool pyramid_sum_identity(int k, long d, int r) {
  if (k < 2) throw std::invalid_argument("pyramid formula needs k >= 2");
  long total = 0;
  for (long i = 0; i <= d; ++i) {
    total += binom_safe(i + k - 1, k - 1) + A_term(k - 1, i, r);
  }
  return total == dim_pyramid(k, d, r);
}

std::map<long, long> infer_generator_degrees(const std::vector<long>& h, int k) {
  std::map<long, long> degrees;
  std::vector<long> residual = h;
  for (long d = 0; d < static_cast<long>(residual.size()); ++d) {
    if (residual[d] < 0) {
      throw std::invalid_argument(
          "dimension sequence is not of free form within the given range");
    }
    if (residual[d] == 0) continue;
    const long count = residual[d];
    degrees[d] = count;
    for (long t = d; t < static_cast<long>(residual.size()); ++t) {
      residual[t] -= count * binom_safe(t - d + k, k);
    }
  }
  return degrees;
}

}  // namespace splinedim
