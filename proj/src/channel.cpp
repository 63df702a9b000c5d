// SPDX-License-Identifier: Apache-2.0
#include "oia/channel.hpp"

#include <string>

namespace oia {

namespace {

void require_user_shapes(const UserChannels& user) {
  const auto rows = user.h1.rows();
  const auto cols = user.h1.cols();
  if (cols < 1 || rows != 2 * cols) {
    throw ShapeMismatch("user channels must be N_R x M with N_R = 2M");
  }
  if (user.h2.rows() != rows || user.h2.cols() != cols ||
      user.h3.rows() != rows || user.h3.cols() != cols) {
    throw ShapeMismatch("user channel matrices must share one shape");
  }
}

void require_postprocessor(const Postprocessor& f, const UserChannels& user) {
  if (f.rows() != user.h1.cols() || f.cols() != user.h1.rows()) {
    throw ShapeMismatch("postprocessor must be M x N_R");
  }
}

void require_power(double p) {
  if (!(p > 0.0)) throw InvalidParams("transmit power must be positive");
}

// log2 det(I + c (A + X)^-1-style quotient evaluated directly: with
// X = I + c*B Hermitian positive definite and W = L^{-1} G for X = L L^H,
// det(I + c G G^H X^{-1}) = det(I + c W^H W).
double whitened_rate(const ComplexMatrix& g, const ComplexMatrix& b, double c) {
  const Eigen::Index n = g.rows();
  const ComplexMatrix x = ComplexMatrix::Identity(n, n) + c * b;
  Eigen::LLT<ComplexMatrix> llt(x);
  if (llt.info() != Eigen::Success) {
    throw Error("whitened_rate: Cholesky of I + c*B failed");
  }
  const ComplexMatrix w = llt.matrixL().solve(g);
  return log_det_identity_plus(w.adjoint() * w, c);
}

}  // namespace

SystemConfig SystemConfig::make(int streams, int users, double power,
                                std::uint64_t seed) {
  SystemConfig cfg;
  cfg.streams = streams;
  cfg.rx_antennas = 2 * streams;
  cfg.users = users;
  cfg.power = power;
  cfg.seed = seed;
  cfg.validate();
  return cfg;
}

void SystemConfig::validate() const {
  if (streams < 1) throw InvalidParams("config: M must be >= 1");
  if (rx_antennas != 2 * streams) {
    throw InvalidParams("config: N_R must equal 2M (got N_R = " +
                        std::to_string(rx_antennas) + ", M = " +
                        std::to_string(streams) + ")");
  }
  if (users < 1) throw InvalidParams("config: K must be >= 1");
  if (!(power > 0.0)) throw InvalidParams("config: P must be positive");
}

std::vector<UserChannels> draw_group(const SystemConfig& config,
                                     RngStream& rng) {
  config.validate();
  std::vector<UserChannels> group;
  group.reserve(static_cast<std::size_t>(config.users));
  for (int k = 0; k < config.users; ++k) {
    UserChannels user;
    user.h1 = random_gaussian_matrix(config.rx_antennas, config.streams, rng);
    user.h2 = random_gaussian_matrix(config.rx_antennas, config.streams, rng);
    user.h3 = random_gaussian_matrix(config.rx_antennas, config.streams, rng);
    group.push_back(std::move(user));
  }
  return group;
}

ComplexMatrix interference_gram(const UserChannels& user) {
  require_user_shapes(user);
  return user.h2 * user.h2.adjoint() + user.h3 * user.h3.adjoint();
}

double rate_plus(const Postprocessor& f, const UserChannels& user, double p) {
  require_user_shapes(user);
  require_postprocessor(f, user);
  require_power(p);
  const double c = p / user.h1.cols();
  const ComplexMatrix f1 = f * user.h1;
  const ComplexMatrix f2 = f * user.h2;
  const ComplexMatrix f3 = f * user.h3;
  return log_det_identity_plus(
      f1 * f1.adjoint() + f2 * f2.adjoint() + f3 * f3.adjoint(), c);
}

double rate_minus(const Postprocessor& f, const UserChannels& user, double p) {
  require_user_shapes(user);
  require_postprocessor(f, user);
  require_power(p);
  const double c = p / user.h1.cols();
  const ComplexMatrix f2 = f * user.h2;
  const ComplexMatrix f3 = f * user.h3;
  return log_det_identity_plus(f2 * f2.adjoint() + f3 * f3.adjoint(), c);
}

double achievable_rate(const Postprocessor& f, const UserChannels& user,
                       double p) {
  require_user_shapes(user);
  require_postprocessor(f, user);
  require_power(p);
  const double c = p / user.h1.cols();
  const ComplexMatrix f2 = f * user.h2;
  const ComplexMatrix f3 = f * user.h3;
  return whitened_rate(f * user.h1, f2 * f2.adjoint() + f3 * f3.adjoint(), c);
}

double capacity_joint(const UserChannels& user, double p) {
  require_user_shapes(user);
  require_power(p);
  const double c = p / user.h1.cols();
  return whitened_rate(user.h1, interference_gram(user), c);
}

}  // namespace oia
