// SPDX-License-Identifier: Apache-2.0
#include "oia/complexity.hpp"

namespace oia {

std::int64_t op_flops(FlopOp op, std::int64_t m, std::int64_t n) {
  if (n < 1 || m < n) {
    throw InvalidShape("op_flops: requires m >= n >= 1");
  }
  switch (op) {
    case FlopOp::ScaleOrAdd: return 2 * m * n;
    case FlopOp::FrobeniusNorm: return 4 * m * n;
    case FlopOp::Gram:
    case FlopOp::GramSchmidt: return 8 * m * n * n - 2 * m * n;
    case FlopOp::Svd: return 24 * m * m * n + 48 * m * n * n + 54 * n * n * n;
  }
  throw InvalidShape("op_flops: unknown operation");
}

std::int64_t scheme_flops(SchemeId scheme, std::int64_t users,
                          std::int64_t rx_antennas) {
  if (users < 1) throw InvalidShape("scheme_flops: K must be >= 1");
  if (rx_antennas < 2 || rx_antennas % 2 != 0) {
    throw InvalidShape("scheme_flops: N_R must be even and >= 2");
  }
  const std::int64_t n = rx_antennas;
  const std::int64_t n2 = n * n;
  const std::int64_t n3 = n2 * n;
  const std::int64_t scalar_ops = 3 * n / 2;  // 2M additions + M products
  switch (scheme) {
    case SchemeId::MaxSnr:
      return users * (128 * n3 - n2 + scalar_ops);
    case SchemeId::Oia1:
      return users * (130 * n3 + 3 * n2 + scalar_ops);
    case SchemeId::Oia2:
      // Per-user geometric feedback, plus one postprocessor computation at
      // the selected user.
      return users * (8 * n3 + 2 * n2) + 130 * n3 + 3 * n2;
    default:
      throw InvalidParams("scheme_flops: model covers MAX_SNR, OIA1 and OIA2");
  }
}

double complexity_ratio(SchemeId a, SchemeId b, std::int64_t users,
                        std::int64_t rx_antennas) {
  return static_cast<double>(scheme_flops(a, users, rx_antennas)) /
         static_cast<double>(scheme_flops(b, users, rx_antennas));
}

}  // namespace oia
