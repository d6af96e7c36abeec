#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "quartic/classifier.hpp"
#include "quartic/oracle.hpp"

namespace quartic::report {

using Json = nlohmann::ordered_json;

struct InputEcho {
  std::string form;  // "general" or "depressed"
  std::vector<double> coefficients;
};

Json classification_json(InputEcho const& input, Classification const& c);

// `agrees` is the verify-mode verdict on the distinct real-root count.
Json oracle_json(oracle::OracleReport const& report, bool agrees);

// Compact single-line JSON with keys in insertion order and every float
// written with 17 significant digits, so parse + serialize is byte-stable.
std::string serialize(Json const& j);

// %.17g, with negative zero written as 0.
std::string format_double(double v);

std::string human_summary(InputEcho const& input, Classification const& c);

}  // namespace quartic::report
