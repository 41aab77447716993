#include "mordell/reports.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "mordell/errors.hpp"

namespace mordell {

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "text") return OutputFormat::Text;
  throw ParseError("unknown output format: " + s);
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string format_real_machine(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%a", v);
  return buf;
}

void Report::add(const std::string& key, const std::string& value) {
  rows.emplace_back(key, value);
}
void Report::add(const std::string& key, long v) {
  rows.emplace_back(key, std::to_string(v));
}
void Report::add(const std::string& key, const mpz_class& v) {
  rows.emplace_back(key, v.get_str());
}
void Report::add(const std::string& key, const mpq_class& v) {
  rows.emplace_back(key, v.get_str());
}
void Report::add_real(const std::string& key, double v) {
  rows.emplace_back(key, format_real(v));
  rows.emplace_back(key + "_machine", format_real_machine(v));
}

namespace {

nlohmann::ordered_json to_json(const Report& rep) {
  nlohmann::ordered_json j;
  j["report"] = rep.name;
  for (const auto& [k, v] : rep.rows) j[k] = v;
  return j;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string render(const Report& rep, OutputFormat f) {
  switch (f) {
    case OutputFormat::Json:
      return to_json(rep).dump(2) + "\n";
    case OutputFormat::Csv: {
      std::ostringstream os;
      os << "report,key,value\n";
      for (const auto& [k, v] : rep.rows)
        os << csv_escape(rep.name) << ',' << csv_escape(k) << ','
           << csv_escape(v) << '\n';
      return os.str();
    }
    case OutputFormat::Text: {
      std::ostringstream os;
      os << "[" << rep.name << "]\n";
      size_t w = 0;
      for (const auto& [k, v] : rep.rows) w = std::max(w, k.size());
      for (const auto& [k, v] : rep.rows)
        os << "  " << k << std::string(w - k.size() + 2, ' ') << v << '\n';
      return os.str();
    }
  }
  return {};
}

std::string render_all(const std::vector<Report>& reps, OutputFormat f) {
  if (f == OutputFormat::Json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Report& r : reps) arr.push_back(to_json(r));
    return arr.dump(2) + "\n";
  }
  std::string out;
  bool first = true;
  for (const Report& r : reps) {
    std::string s = render(r, f);
    if (f == OutputFormat::Csv && !first) {
      // drop the repeated header line
      s.erase(0, s.find('\n') + 1);
    }
    out += s;
    first = false;
  }
  return out;
}

}  // namespace mordell
