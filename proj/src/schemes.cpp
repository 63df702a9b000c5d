// SPDX-License-Identifier: Apache-2.0
#include "oia/schemes.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "oia/grassmann.hpp"

namespace oia {

namespace {

double eigenvalue_product(const RealVector& eigenvalues, Eigen::Index first,
                          Eigen::Index count, double c) {
  double product = 1.0;
  for (Eigen::Index i = first; i < first + count; ++i) {
    product *= 1.0 + c * std::max(0.0, eigenvalues[i]);
  }
  return product;
}

UserChannels without_interferers(const UserChannels& user, bool keep_h2) {
  UserChannels quiet = user;
  if (!keep_h2) quiet.h2.setZero();
  quiet.h3.setZero();
  return quiet;
}

}  // namespace

const char* scheme_name(SchemeId scheme) {
  switch (scheme) {
    case SchemeId::Oia1: return "OIA1";
    case SchemeId::Oia2: return "OIA2";
    case SchemeId::MaxSnr: return "MAX_SNR";
    case SchemeId::Tdm1: return "TDM1";
    case SchemeId::Tdm2: return "TDM2";
    case SchemeId::Opt: return "OPT";
  }
  throw InvalidParams("unknown scheme id");
}

std::optional<SchemeId> parse_scheme(std::string_view name) {
  for (SchemeId s : kAllSchemes) {
    if (name == scheme_name(s)) return s;
  }
  return std::nullopt;
}

ScalarFeedback oia1_feedback(const UserChannels& user, double p) {
  const Eigen::Index m = user.h1.cols();
  const HermitianEigen eig = hermitian_eigen(interference_gram(user));
  ScalarFeedback fb;
  fb.value = eigenvalue_product(eig.eigenvalues, m, m, p / m);
  fb.postprocessor = eig.eigenvectors.rightCols(m).adjoint();
  return fb;
}

double oia2_feedback(const UserChannels& user) {
  return chordal_distance_sq(orthonormal_basis(user.h2),
                             orthonormal_basis(user.h3));
}

Postprocessor min_rate_loss_postprocessor(const UserChannels& user) {
  const Eigen::Index m = user.h1.cols();
  return hermitian_eigen(interference_gram(user))
      .eigenvectors.rightCols(m)
      .adjoint();
}

ScalarFeedback maxsnr_feedback(const UserChannels& user, double p) {
  const Eigen::Index m = user.h1.cols();
  const HermitianEigen eig = hermitian_eigen(user.h1 * user.h1.adjoint());
  ScalarFeedback fb;
  fb.value = eigenvalue_product(eig.eigenvalues, 0, m, p / m);
  fb.postprocessor = eig.eigenvectors.leftCols(m).adjoint();
  return fb;
}

ScalarFeedback tdm2_feedback(const UserChannels& user, double p) {
  const Eigen::Index m = user.h1.cols();
  const HermitianEigen eig = hermitian_eigen(user.h2 * user.h2.adjoint());
  ScalarFeedback fb;
  fb.value = eigenvalue_product(eig.eigenvalues, m, m, p / m);
  fb.postprocessor = eig.eigenvectors.rightCols(m).adjoint();
  return fb;
}

std::size_t select_user(std::span<const double> feedbacks,
                        SelectDirection direction) {
  if (feedbacks.empty()) throw EmptyGroup("select_user: empty feedback list");
  std::size_t best = 0;
  for (std::size_t k = 1; k < feedbacks.size(); ++k) {
    const bool better = direction == SelectDirection::Argmin
                            ? feedbacks[k] < feedbacks[best]
                            : feedbacks[k] > feedbacks[best];
    if (better) best = k;
  }
  return best;
}

SchemeOutcome run_scheme(SchemeId scheme, std::span<const UserChannels> group,
                         double p) {
  if (group.empty()) throw EmptyGroup("run_scheme: empty user group");

  SchemeOutcome out;
  std::vector<double> feedbacks(group.size());

  switch (scheme) {
    case SchemeId::Oia1: {
      std::vector<Postprocessor> posts(group.size());
      for (std::size_t k = 0; k < group.size(); ++k) {
        ScalarFeedback fb = oia1_feedback(group[k], p);
        feedbacks[k] = fb.value;
        posts[k] = std::move(fb.postprocessor);
      }
      out.selected = select_user(feedbacks, SelectDirection::Argmin);
      out.postprocessor = std::move(posts[out.selected]);
      out.rate = achievable_rate(*out.postprocessor, group[out.selected], p);
      break;
    }
    case SchemeId::Oia2: {
      for (std::size_t k = 0; k < group.size(); ++k) {
        feedbacks[k] = oia2_feedback(group[k]);
      }
      out.selected = select_user(feedbacks, SelectDirection::Argmin);
      out.postprocessor = min_rate_loss_postprocessor(group[out.selected]);
      out.rate = achievable_rate(*out.postprocessor, group[out.selected], p);
      break;
    }
    case SchemeId::MaxSnr: {
      std::vector<Postprocessor> posts(group.size());
      for (std::size_t k = 0; k < group.size(); ++k) {
        ScalarFeedback fb = maxsnr_feedback(group[k], p);
        feedbacks[k] = fb.value;
        posts[k] = std::move(fb.postprocessor);
      }
      out.selected = select_user(feedbacks, SelectDirection::Argmax);
      out.postprocessor = std::move(posts[out.selected]);
      out.rate = achievable_rate(*out.postprocessor, group[out.selected], p);
      break;
    }
    case SchemeId::Tdm1: {
      // Selection, feedback and postprocessor are those of MAX-SNR; the
      // exclusive slot removes all interference and costs a 1/3 duty cycle.
      std::vector<Postprocessor> posts(group.size());
      for (std::size_t k = 0; k < group.size(); ++k) {
        ScalarFeedback fb = maxsnr_feedback(group[k], p);
        feedbacks[k] = fb.value;
        posts[k] = std::move(fb.postprocessor);
      }
      out.selected = select_user(feedbacks, SelectDirection::Argmax);
      out.postprocessor = std::move(posts[out.selected]);
      out.rate = achievable_rate(*out.postprocessor,
                                 without_interferers(group[out.selected],
                                                     /*keep_h2=*/false),
                                 p) /
                 3.0;
      break;
    }
    case SchemeId::Tdm2: {
      // Transmitters 1 and 2 share the slot; interferer 3 stays silent.
      std::vector<Postprocessor> posts(group.size());
      for (std::size_t k = 0; k < group.size(); ++k) {
        ScalarFeedback fb = tdm2_feedback(group[k], p);
        feedbacks[k] = fb.value;
        posts[k] = std::move(fb.postprocessor);
      }
      out.selected = select_user(feedbacks, SelectDirection::Argmin);
      out.postprocessor = std::move(posts[out.selected]);
      out.rate = achievable_rate(*out.postprocessor,
                                 without_interferers(group[out.selected],
                                                     /*keep_h2=*/true),
                                 p) *
                 (2.0 / 3.0);
      break;
    }
    case SchemeId::Opt: {
      for (std::size_t k = 0; k < group.size(); ++k) {
        feedbacks[k] = capacity_joint(group[k], p);
      }
      out.selected = select_user(feedbacks, SelectDirection::Argmax);
      out.postprocessor = std::nullopt;
      out.rate = feedbacks[out.selected];
      break;
    }
  }

  out.feedback = feedbacks[out.selected];
  return out;
}

}  // namespace oia
