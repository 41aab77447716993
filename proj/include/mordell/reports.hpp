#pragma once
// Output formatting: every numeric report can be emitted as JSON (default),
// CSV, or aligned text. Certified reals are printed as 12-significant-digit
// decimal strings together with an exact machine-binary field.

#include <map>
#include <string>
#include <vector>

#include "mordell/real.hpp"

namespace mordell {

enum class OutputFormat { Json, Csv, Text };

OutputFormat parse_format(const std::string& s);  // "json" / "csv" / "text"

// One flat report: ordered key -> value rows; values are preformatted.
struct Report {
  std::string name;
  std::vector<std::pair<std::string, std::string>> rows;

  void add(const std::string& key, const std::string& value);
  void add(const std::string& key, long v);
  void add(const std::string& key, const mpz_class& v);
  void add(const std::string& key, const mpq_class& v);
  // emits "<12-digit decimal>" under key and the hex-float under key_machine
  void add_real(const std::string& key, double v);
};

std::string render(const Report& rep, OutputFormat f);
std::string render_all(const std::vector<Report>& reps, OutputFormat f);

std::string format_real(double v);          // 12 significant digits
std::string format_real_machine(double v);  // hex-float (%a)

}  // namespace mordell
