#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "retract/engine.hpp"

namespace retract {

enum class OutcomeKind { Ok, Invalid, NotIdempotent, CertificateFailure, Other };

struct AnalysisOutcome {
  OutcomeKind kind = OutcomeKind::Ok;
  std::optional<RetractReport> report;
  std::string error;
};

/// analyze() with every exception captured into the outcome.
AnalysisOutcome analyze_captured(const Endomorphism& phi);

/// Reference path: one analysis after another.
std::vector<AnalysisOutcome> analyze_batch_serial(std::span<const Endomorphism> maps);

/// OpenMP fan-out over independent analyses; results are in input order.
/// threads <= 0 uses the OpenMP default.
std::vector<AnalysisOutcome> analyze_batch(std::span<const Endomorphism> maps, int threads = 0);

/// Worker count analyze_batch would use for the given request.
int effective_threads(int threads);

}  // namespace retract
