#include "retract/batch.hpp"

#include <omp.h>

#include "retract/errors.hpp"

namespace retract {

AnalysisOutcome analyze_captured(const Endomorphism& phi) {
  AnalysisOutcome out;
  try {
    out.report = analyze(phi);
  } catch (const InvalidEndomorphism& e) {
    out.kind = OutcomeKind::Invalid;
    out.error = e.what();
  } catch (const NotIdempotent& e) {
    out.kind = OutcomeKind::NotIdempotent;
    out.error = e.what();
  } catch (const CertificateFailure& e) {
    out.kind = OutcomeKind::CertificateFailure;
    out.error = e.what();
  } catch (const std::exception& e) {
    out.kind = OutcomeKind::Other;
    out.error = e.what();
  }
  return out;
}

std::vector<AnalysisOutcome> analyze_batch_serial(std::span<const Endomorphism> maps) {
  std::vector<AnalysisOutcome> out;
  out.reserve(maps.size());
  for (const auto& phi : maps) out.push_back(analyze_captured(phi));
  return out;
}

int effective_threads(int threads) { return threads > 0 ? threads : omp_get_max_threads(); }

std::vector<AnalysisOutcome> analyze_batch(std::span<const Endomorphism> maps, int threads) {
  std::vector<AnalysisOutcome> out(maps.size());
  const long count = static_cast<long>(maps.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(effective_threads(threads))
  for (long i = 0; i < count; ++i) {
    out[i] = analyze_captured(maps[i]);
  }
  return out;
}

}  // namespace retract
