// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "oia/channel.hpp"

namespace oia {

enum class SchemeId { Oia1, Oia2, MaxSnr, Tdm1, Tdm2, Opt };

inline constexpr SchemeId kAllSchemes[] = {SchemeId::Oia1,   SchemeId::Oia2,
                                           SchemeId::MaxSnr, SchemeId::Tdm1,
                                           SchemeId::Tdm2,   SchemeId::Opt};

/// Canonical token used in CLI arguments and CSV output.
const char* scheme_name(SchemeId scheme);
std::optional<SchemeId> parse_scheme(std::string_view name);

enum class SelectDirection { Argmin, Argmax };

/// Scalar feedback value plus the postprocessor derived alongside it.
struct ScalarFeedback {
  double value = 0.0;
  Postprocessor postprocessor;
};

/// Rate-loss-minimizing feedback: F spans the M trailing eigenvectors of
/// B_k = H2 H2^H + H3 H3^H, and the feedback value is
/// prod_{m=M+1}^{2M} (1 + (P/M) lambda_m(B_k)). Selection direction: argmin.
ScalarFeedback oia1_feedback(const UserChannels& user, double p);

/// Squared chordal distance between the orthonormalized interferer spans;
/// independent of P. Selection direction: argmin.
double oia2_feedback(const UserChannels& user);

/// Postprocessor that minimizes the rate loss term (trailing eigenvectors
/// of B_k); computed only at the selected user under OIA2.
Postprocessor min_rate_loss_postprocessor(const UserChannels& user);

/// Interference-blind feedback: F spans the M leading eigenvectors of
/// A_k = H1 H1^H, feedback prod_{m=1}^{M} (1 + (P/M) lambda_m(A_k)).
/// Selection direction: argmax.
ScalarFeedback maxsnr_feedback(const UserChannels& user, double p);

/// Two-transmitter slot feedback over the single active interferer:
/// prod_{m=M+1}^{2M} (1 + (P/M) lambda_m(H2 H2^H)); the tail eigenvalues
/// vanish almost surely, so the value is 1. Selection direction: argmin.
ScalarFeedback tdm2_feedback(const UserChannels& user, double p);

/// Extremal index; ties break toward the lowest index.
std::size_t select_user(std::span<const double> feedbacks,
                        SelectDirection direction);

struct SchemeOutcome {
  std::size_t selected = 0;
  double feedback = 0.0;
  std::optional<Postprocessor> postprocessor;  // absent for OPT
  double rate = 0.0;  // realized transmitter-1 rate, duty factors applied
};

/// Runs one scheme on a drawn group: feedback per user, selection, the
/// selected user's postprocessor, and the realized transmitter-1 rate
/// (TDM1 charges 1/3 of the interference-free rate, TDM2 charges 2/3 of
/// the single-interferer rate, OPT uses joint decoding with no projection).
SchemeOutcome run_scheme(SchemeId scheme, std::span<const UserChannels> group,
                         double p);

}  // namespace oia
