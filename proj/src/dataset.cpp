#include "mordell/dataset.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mordell/errors.hpp"

namespace mordell {

namespace {

using nlohmann::json;

mpz_class as_int(const json& j, const std::string& key) {
  if (!j.contains(key) || !j[key].is_string())
    throw ParseError("curve record: missing integer field '" + key + "'");
  const std::string s = j[key].get<std::string>();
  mpz_class z;
  if (mpz_set_str(z.get_mpz_t(), s.c_str(), 10) != 0)
    throw ParseError("curve record: bad integer in '" + key + "': " + s);
  return z;
}

mpq_class as_rat(const json& j, const std::string& num_key,
                 const std::string& den_key) {
  mpq_class q(as_int(j, num_key), as_int(j, den_key));
  if (q.get_den() == 0)
    throw ParseError("curve record: zero denominator in '" + den_key + "'");
  q.canonicalize();
  return q;
}

}  // namespace

std::string default_curves_path() {
  if (const char* env = std::getenv("MORDELL_CURVES"); env && *env)
    return env;
#ifdef MORDELL_DATA_DIR
  return std::string(MORDELL_DATA_DIR) + "/curves.jsonl";
#else
  return "data/curves.jsonl";
#endif
}

std::vector<CurveRecord> load_curves(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open curve dataset: " + path);
  std::vector<CurveRecord> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const std::exception& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
    CurveRecord rec;
    rec.label = j.value("label", std::string("line") + std::to_string(lineno));
    rec.curve = curve_new(as_int(j, "A"), as_int(j, "B"));
    rec.rank = j.value("rank", 0);
    if (rec.rank > 0) {
      rec.generator = ECPoint::affine(as_rat(j, "x_num", "x_den"),
                                      as_rat(j, "y_num", "y_den"));
      if (!on_curve(rec.curve, rec.generator))
        throw ValidationError(rec.label + ": generator is not on the curve");
    }
    rec.torsion_order = j.value("torsion_order", 1);
    rec.torsion = torsion_subgroup(rec.curve);
    if (static_cast<long>(rec.torsion.size()) != rec.torsion_order)
      throw ValidationError(rec.label + ": torsion order mismatch (computed " +
                            std::to_string(rec.torsion.size()) + ", declared " +
                            std::to_string(rec.torsion_order) + ")");
    out.push_back(std::move(rec));
  }
  return out;
}

const CurveRecord& find_curve(const std::vector<CurveRecord>& curves,
                              const std::string& label) {
  for (const CurveRecord& r : curves)
    if (r.label == label) return r;
  throw ValidationError("no curve with label '" + label + "' in the dataset");
}

}  // namespace mordell
