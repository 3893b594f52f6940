#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "polysurj/certify.hpp"
#include "polysurj/fiber.hpp"

namespace polysurj {

// Human-readable reports.
std::string to_text(const Certificate& c);
std::string to_text(const FiberReport& r);

// JSON documents; the layout is described in docs/report-schema.md.
std::string to_json_string(const Certificate& c);
std::string to_json_string(const std::vector<Certificate>& certs);
std::string to_json_string(const FiberReport& r);

/// Parses one certificate object. Throws std::invalid_argument on malformed
/// input and std::logic_error when the evidence contradicts the verdict.
Certificate certificate_from_json(std::string_view text);
/// Parses {"certificates": [...]}.
std::vector<Certificate> certificates_from_json(std::string_view text);

}  // namespace polysurj
