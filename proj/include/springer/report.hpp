#pragma once

#include <string>

#include <json.hpp>

#include "springer/poincare.hpp"

namespace springer {

// Exact integers render as JSON numbers when they fit in 53 bits and as
// decimal strings otherwise; num_row_standard is always a decimal string.
nlohmann::json betti_report_json(const BettiTable& table);

std::string betti_report_text(const BettiTable& table);

std::string betti_csv_header();
std::string betti_csv_row(const BettiTable& table);

} // namespace springer
