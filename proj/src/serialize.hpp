#pragma once

#include <string>
#include <vector>

#include "hirz/lattice.hpp"
#include "hirz/rational.hpp"
#include "json.hpp"

namespace hirz::serialize {

using Json = nlohmann::json;

/// {"num", "den", "decimal"}; num and den are JSON integers when they fit
/// in 64 bits and decimal strings otherwise.
Json rational(const Rational& q);
/// {"a", "b", "m"} plus "m_x" when the class carries an E_x coordinate.
Json divisor(const DivisorClass& d);
Json int_list(const std::vector<std::int64_t>& v);

/// RFC 4180 quoting when the field needs it.
std::string csv_field(const std::string& s);
std::string csv_row(const std::vector<std::string>& fields);
/// Multiplicities joined by ';' so they fit one CSV field.
std::string join_ints(const std::vector<std::int64_t>& v, const char* sep = ";");

}  // namespace hirz::serialize
