#pragma once

// Structured and human-readable renderings of classifications, certificates
// and oracle reports. JSON documents carry "schema": 1.

#include <string>

#include <json.hpp>

#include "fatlin/criteria.hpp"
#include "fatlin/oracle.hpp"

namespace fatlin {

inline constexpr int kReportSchema = 1;

nlohmann::ordered_json to_json(const Classification& c);
nlohmann::ordered_json to_json(const Certificate& c);
nlohmann::ordered_json to_json(const OracleReport& r, const Agreement* agreement = nullptr);
nlohmann::ordered_json to_json(const Reduction& r);

std::string render_text(const Classification& c);
std::string render_text(const Certificate& c);
std::string render_text(const OracleReport& r, const Agreement* agreement = nullptr);

}  // namespace fatlin
