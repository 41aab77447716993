#pragma once
// Curve dataset: JSONL records with exact decimal-string integers, loaded and
// validated (model nonsingular, generator on the curve, torsion order as
// declared).

#include <gmpxx.h>

#include <string>
#include <vector>

#include "mordell/ec.hpp"

namespace mordell {

struct CurveRecord {
  std::string label;
  EllipticCurveQ curve;
  int rank = 0;
  ECPoint generator;              // infinity when rank 0
  std::vector<ECPoint> torsion;   // full torsion subgroup, validated
  long torsion_order = 1;
};

// Load and validate records from a JSONL file. Throws ParseError on malformed
// input and ValidationError when a record's claims fail the exact checks.
std::vector<CurveRecord> load_curves(const std::string& path);

// Resolution order: explicit path argument, MORDELL_CURVES environment
// variable, then the bundled dataset.
std::string default_curves_path();

const CurveRecord& find_curve(const std::vector<CurveRecord>& curves,
                              const std::string& label);

}  // namespace mordell
