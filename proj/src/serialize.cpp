#include "fraczeta/serialize.hpp"

#include <cstdio>

namespace fraczeta {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 8);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string to_json(const Complex& z) {
  return "{\"re\": " + fmt17(z.real()) + ", \"im\": " + fmt17(z.imag()) + "}";
}

std::string to_json(const MethodResult& r) {
  std::string s = "{\"value\": " + to_json(r.value) +
                  ", \"err_estimate\": " + fmt17(r.err_estimate) +
                  ", \"terms_used\": " + std::to_string(r.terms_used) +
                  ", \"converged\": " + (r.converged ? "true" : "false");
  if (!r.variant.empty()) s += ", \"variant\": \"" + json_escape(r.variant) + "\"";
  return s + "}";
}

std::string to_json(const EvalPoint& p) {
  return "{\"s\": " + to_json(p.s) + ", \"a\": " + fmt17(p.a) +
         ", \"alpha\": " + fmt17(p.alpha) + "}";
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::DocumentedDiscrepancy: return "documented-discrepancy";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::string to_json(const ResidualReport& r) {
  std::string s = "{\"identity_id\": \"" + json_escape(r.identity_id) +
                  "\", \"verdict\": \"" + verdict_name(r.verdict) +
                  "\", \"tolerance\": " + fmt17(r.tolerance) + ", \"points\": [";
  for (size_t i = 0; i < r.points.size(); ++i) {
    const auto& p = r.points[i];
    if (i) s += ", ";
    s += "{\"point\": " + to_json(p.point) +
         ", \"residual\": " + fmt17(p.residual);
    if (!p.variant.empty()) s += ", \"variant\": \"" + json_escape(p.variant) + "\"";
    if (!p.error.empty()) s += ", \"error\": \"" + json_escape(p.error) + "\"";
    s += "}";
  }
  s += "]";
  if (!r.notes.empty()) s += ", \"notes\": \"" + json_escape(r.notes) + "\"";
  return s + "}";
}

std::string error_json(const std::string& kind, const std::string& message) {
  return "{\"error\": {\"kind\": \"" + json_escape(kind) + "\", \"message\": \"" +
         json_escape(message) + "\"}}";
}

}  // namespace fraczeta
