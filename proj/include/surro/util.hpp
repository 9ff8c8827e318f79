#pragma once

#include <string>

namespace surro {

// Shortest decimal form that parses back to the identical double.
std::string format_double(double v);

// Strict, locale-independent parse of a full string; returns false on any
// trailing garbage or non-finite value.
bool parse_double(const std::string& text, double& out);

}  // namespace surro
