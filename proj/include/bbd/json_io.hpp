#pragma once

/// \file json_io.hpp
/// \brief JSON encodings of reports and verdicts. Field order is fixed, so
/// equal inputs dump to identical bytes.

#include <string>

#include <json.hpp>

#include "bbd/harness.hpp"

namespace bbd {

inline constexpr int kReportFormatVersion = 1;

using Json = nlohmann::ordered_json;

Json to_json(const ReportDocument& doc);
Json to_json(const TheoremVerdict& verdict);
Json to_json(const Population& population);

/// Human-readable rendering of a report, one property per line.
std::string to_text(const ReportDocument& doc);

}  // namespace bbd
