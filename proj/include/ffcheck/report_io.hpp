#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ffcheck/cubic_families.hpp"
#include "ffcheck/suites.hpp"

namespace ffcheck {

using Json = nlohmann::ordered_json;

enum class Format { Json, Csv, Text };

inline Format parse_format(std::string_view s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "text") return Format::Text;
  throw InvalidInput("unknown format '" + std::string(s) + "'; known: json, csv, text");
}

inline Json fields_json(const Fields& fields) {
  Json j = Json::object();
  for (const auto& [k, v] : fields) j[k] = v;
  return j;
}

inline Json to_json(const BoundReport& r) {
  Json j;
  j["check"] = r.check;
  j["inputs"] = fields_json(r.inputs);
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["holds"] = r.holds();
  j["verdict"] = to_string(r.verdict);
  j["branch"] = r.branch;
  j["notes"] = r.notes;
  j["context"] = fields_json(r.context);
  if (r.cubed)
    j["rhs_cubed_comparison"] = {{"lhs_cubed", r.cubed->lhs_cubed.get_str()},
                                 {"constant", r.cubed->constant.get_str()},
                                 {"product", r.cubed->product.get_str()}};
  if (!r.parts.empty()) {
    Json parts = Json::array();
    for (const auto& p : r.parts) parts.push_back(to_json(p));
    j["parts"] = std::move(parts);
  }
  return j;
}

inline Json to_json(const FamilyCertificate& c) {
  Json components = Json::object();
  for (const auto& [name, w] : c.component_witnesses) components[name] = detail::monomial_string(w);
  Json j;
  j["check"] = "family-certificate";
  j["family"] = c.family;
  j["n"] = c.n;
  j["morphism"] = c.morphism.to_string();
  j["divisor"] = c.divisor_id;
  j["form"] = c.form;
  j["witness"] = detail::monomial_string(c.avoidance_witness);
  j["components"] = std::move(components);
  j["degree"] = c.degree;
  j["second_chart_degree"] = c.second_chart_degree;
  j["euler_char"] = c.euler_char;
  j["degree_claim"] = c.degree_claim;
  j["claim_verdict"] = to_string(c.claim_verdict);
  j["notes"] = c.notes;
  return j;
}

inline Json to_json(const UnboundednessTable& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows) rows.push_back(to_json(r));
  Json j;
  j["check"] = "unboundedness";
  j["family"] = t.family;
  j["rows"] = std::move(rows);
  j["strictly_increasing"] = t.strictly_increasing;
  j["euler_constant"] = t.euler_constant;
  j["verdict"] = to_string(t.verdict);
  j["notes"] = t.notes;
  return j;
}

inline Json to_json(const SuiteResult& s) {
  Json failures = Json::array();
  for (const auto& f : s.failures) failures.push_back(to_json(f));
  Json j;
  j["suite"] = s.name;
  j["parameters"] = fields_json(s.parameters);
  j["checked"] = s.checked;
  j["held"] = s.held;
  j["violated"] = s.violated;
  j["inconclusive"] = s.inconclusive;
  j["failures"] = std::move(failures);
  j["notes"] = s.notes;
  return j;
}

namespace detail {

inline std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline void text_fields(std::ostringstream& os, const char* label, const Fields& fields, const std::string& indent) {
  if (fields.empty()) return;
  os << indent << label << ":";
  for (const auto& [k, v] : fields) os << " " << k << "=" << v;
  os << "\n";
}

inline void text_report(std::ostringstream& os, const BoundReport& r, const std::string& indent) {
  os << indent << r.check << ": " << to_string(r.verdict) << " [" << r.branch << "]\n";
  text_fields(os, "inputs", r.inputs, indent + "  ");
  os << indent << "  lhs: " << r.lhs << "\n" << indent << "  rhs: " << r.rhs << "\n";
  if (r.cubed)
    os << indent << "  cubed: " << r.cubed->lhs_cubed.get_str() << " <= " << r.cubed->constant.get_str() << " * "
       << r.cubed->product.get_str() << "\n";
  text_fields(os, "context", r.context, indent + "  ");
  for (const auto& n : r.notes) os << indent << "  note: " << n << "\n";
  for (const auto& p : r.parts) text_report(os, p, indent + "  ");
}

}  // namespace detail

inline std::string render(const std::vector<BoundReport>& reports, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::Json: {
      if (reports.size() == 1) return to_json(reports.front()).dump(2) + "\n";
      Json arr = Json::array();
      for (const auto& r : reports) arr.push_back(to_json(r));
      return arr.dump(2) + "\n";
    }
    case Format::Csv:
      os << "check,lhs,rhs,holds,verdict,branch\n";
      for (const auto& r : reports)
        os << detail::csv_cell(r.check) << "," << detail::csv_cell(r.lhs) << "," << detail::csv_cell(r.rhs) << ","
           << (r.holds() ? "true" : "false") << "," << to_string(r.verdict) << "," << detail::csv_cell(r.branch)
           << "\n";
      return os.str();
    case Format::Text:
      for (const auto& r : reports) detail::text_report(os, r, "");
      return os.str();
  }
  return {};
}

inline std::string render(const std::vector<FamilyCertificate>& rows, Format format) {
  switch (format) {
    case Format::Json: {
      if (rows.size() == 1) return to_json(rows.front()).dump(2) + "\n";
      Json arr = Json::array();
      for (const auto& r : rows) arr.push_back(to_json(r));
      return arr.dump(2) + "\n";
    }
    case Format::Csv: return to_csv(rows);
    case Format::Text: {
      std::ostringstream os;
      for (const auto& r : rows) {
        os << r.family << " n=" << r.n << ": " << r.morphism.to_string() << "\n";
        os << "  avoids " << r.divisor_id << " (" << r.form << "), witness " << detail::monomial_string(r.avoidance_witness)
           << "\n";
        os << "  degree " << r.degree << ", euler_char " << r.euler_char << ", claim " << r.degree_claim << ": "
           << to_string(r.claim_verdict) << "\n";
        for (const auto& n : r.notes) os << "  note: " << n << "\n";
      }
      return os.str();
    }
  }
  return {};
}

inline std::string render(const UnboundednessTable& t, Format format) {
  switch (format) {
    case Format::Json: return to_json(t).dump(2) + "\n";
    case Format::Csv: return to_csv(t.rows);
    case Format::Text: {
      std::string out = render(t.rows, Format::Text);
      out += "growth: " + std::string(t.strictly_increasing ? "strictly increasing" : "not strictly increasing") +
             ", euler characteristic " + (t.euler_constant ? "constant" : "varying") + ": " + to_string(t.verdict) +
             "\n";
      for (const auto& n : t.notes) out += "note: " + n + "\n";
      return out;
    }
  }
  return {};
}

inline std::string render(const SuiteResult& s, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::Json: return to_json(s).dump(2) + "\n";
    case Format::Csv:
      os << "suite,checked,held,violated,inconclusive\n"
         << s.name << "," << s.checked << "," << s.held << "," << s.violated << "," << s.inconclusive << "\n";
      return os.str();
    case Format::Text:
      os << "suite " << s.name << ":";
      for (const auto& [k, v] : s.parameters) os << " " << k << "=" << v;
      os << "\n  checked " << s.checked << ", held " << s.held << ", violated " << s.violated << ", inconclusive "
         << s.inconclusive << "\n";
      for (const auto& n : s.notes) os << "  note: " << n << "\n";
      for (const auto& f : s.failures) detail::text_report(os, f, "  ");
      return os.str();
  }
  return {};
}

}  // namespace ffcheck
