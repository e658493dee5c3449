#pragma once

#include "waring/certifier.hpp"
#include "waring/extract.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace waring {

inline constexpr const char* kInstanceFormat = "waring-instance/1";
inline constexpr const char* kVerdictFormat = "waring-verdict/1";

// Malformed instance file; the message names the line or the field.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Instance {
  Decomposition decomposition;
  std::optional<std::uint64_t> seed;
  std::string provenance;
};

// Validates the optional "form" against the weighted Veronese sum. Bad input throws ParseError.
Instance parse_instance(const std::string& text);
Instance load_instance(const std::string& path);

// Canonical text: fixed key order, two-space indent, trailing newline.
std::string serialize_instance(const Instance& inst, bool with_form);

std::string verdict_json(const Verdict& v);
std::string verdict_text(const Verdict& v);
std::string numeric_decomposition_text(const NumericDecomposition& nd);

}  // namespace waring
