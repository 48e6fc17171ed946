#pragma once

#include <string>

#include "retract/engine.hpp"

namespace retract {

enum class ReportFormat { Text, Json };

/// Stable-key-order JSON (two-space indent) or an equivalent text listing.
std::string render_report(const RetractReport& report, ReportFormat format);

}  // namespace retract
