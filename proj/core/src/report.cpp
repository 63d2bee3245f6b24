#include <eulersum/report.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>

namespace eulersum {
namespace {

// escape for the few string fields we emit (names are plain identifiers,
// but stay safe if a parameter digest ever grows richer characters)
std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += ch;
    }
  }
  return out;
}

// number token for JSON: quoted when not a valid JSON number
std::string json_number(double v) {
  if (!std::isfinite(v)) return "\"" + float17(v) + "\"";
  return float17(v);
}

}  // namespace

std::size_t verification_report::passed() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(),
                    [](const check_row& r) { return r.pass; }));
}

std::string float17(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0.0 ? "inf" : "-inf";

  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  std::string s(buf, res.ptr);

  const std::size_t epos = s.find_first_of("eE");
  std::string mant = epos == std::string::npos ? s : s.substr(0, epos);
  const std::string exp = epos == std::string::npos ? "" : s.substr(epos);

  const bool neg = !mant.empty() && mant[0] == '-';
  if (neg) mant.erase(0, 1);

  const std::size_t dot = mant.find('.');
  std::string intpart = dot == std::string::npos ? mant : mant.substr(0, dot);
  std::string frac = dot == std::string::npos ? "" : mant.substr(dot + 1);

  // significant digits = all digits minus leading zeros
  std::string digits = intpart + frac;
  std::size_t lead = 0;
  while (lead < digits.size() && digits[lead] == '0') ++lead;
  const std::size_t sig = digits.size() - lead;

  if (sig == 0) return neg ? "-0.0000000000000000" : "0.0000000000000000";
  if (sig < 17) frac.append(17 - sig, '0');

  std::string out = neg ? "-" : "";
  out += intpart;
  if (!frac.empty()) {
    out += '.';
    out += frac;
  }
  out += exp;
  return out;
}

void sort_rows(std::vector<check_row>& rows) {
  std::sort(rows.begin(), rows.end(), [](const check_row& a, const check_row& b) {
    if (a.name != b.name) return a.name < b.name;
    return a.x < b.x;
  });
}

std::string to_json(const verification_report& report) {
  std::string out = "{\n";
  out += "  \"suite\": \"" + json_escape(report.suite) + "\",\n";
  out += "  \"checks\": [";
  for (std::size_t i = 0; i < report.checks.size(); ++i) {
    const check_row& r = report.checks[i];
    out += i == 0 ? "\n" : ",\n";
    out += "    {\"name\": \"" + json_escape(r.name) + "\"";
    out += ", \"x\": " + json_number(r.x);
    out += ", \"lhs\": " + json_number(r.lhs);
    out += ", \"rhs\": " + json_number(r.rhs);
    out += ", \"abs_diff\": " + json_number(r.abs_diff);
    out += ", \"allowed\": " + json_number(r.allowed);
    out += std::string(", \"pass\": ") + (r.pass ? "true" : "false") + "}";
  }
  out += report.checks.empty() ? "],\n" : "\n  ],\n";
  out += "  \"summary\": {\"total\": " + std::to_string(report.total()) +
         ", \"passed\": " + std::to_string(report.passed()) +
         ", \"failed\": " + std::to_string(report.failed()) + "},\n";
  out += "  \"runtime_ms\": " + std::to_string(report.runtime_ms) + "\n";
  out += "}\n";
  return out;
}

std::string to_csv(const verification_report& report) {
  std::string out = "name,x,lhs,rhs,abs_diff,allowed,pass\n";
  for (const check_row& r : report.checks) {
    out += r.name;
    out += ',';
    out += float17(r.x);
    out += ',';
    out += float17(r.lhs);
    out += ',';
    out += float17(r.rhs);
    out += ',';
    out += float17(r.abs_diff);
    out += ',';
    out += float17(r.allowed);
    out += ',';
    out += r.pass ? "true" : "false";
    out += '\n';
  }
  return out;
}

}  // namespace eulersum
