#include "serialize.hpp"

namespace hirz::serialize {

namespace {

Json integer(const Rational::Integer& v) {
  std::int64_t small = 0;
  if (fits_int64(v, small)) return small;
  return v.str();
}

}  // namespace

Json rational(const Rational& q) {
  return Json{{"num", integer(q.num())}, {"den", integer(q.den())}, {"decimal", q.decimal()}};
}

Json divisor(const DivisorClass& d) {
  Json out{{"a", d.a}, {"b", d.b}, {"m", int_list(d.m)}};
  if (d.m_x) out["m_x"] = *d.m_x;
  return out;
}

Json int_list(const std::vector<std::int64_t>& v) {
  Json out = Json::array();
  for (auto x : v) out.push_back(x);
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  return out + "\n";
}

std::string join_ints(const std::vector<std::int64_t>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace hirz::serialize
