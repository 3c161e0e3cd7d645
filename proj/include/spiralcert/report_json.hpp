#pragma once

#include <string>
#include <string_view>

#include "spiralcert/gaps.hpp"
#include "spiralcert/geometry.hpp"
#include "spiralcert/spiral.hpp"
#include "spiralcert/stats.hpp"

// JSON serialization of report types. Documents carry schema_version 1 and a
// type tag; every float is emitted with 17 significant digits so values
// round-trip bit for bit. Non-finite values serialize as null.

namespace spiralcert {

std::string to_json(const AnnulusWindow& window);
std::string to_json(const GapReport& report);
std::string to_json(const GapProfile& profile);
std::string to_json(const DeloneReport& report);
std::string to_json(const GapHistogram& histogram);
std::string to_json(const PairCorrelationReport& report);

AnnulusWindow parse_annulus_window(std::string_view text);
GapReport parse_gap_report(std::string_view text);
GapProfile parse_gap_profile(std::string_view text);
DeloneReport parse_delone_report(std::string_view text);
GapHistogram parse_gap_histogram(std::string_view text);
PairCorrelationReport parse_pair_correlation(std::string_view text);

}  // namespace spiralcert
