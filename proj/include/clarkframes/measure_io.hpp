#pragma once

#include <string>

#include "clarkframes/measure.hpp"

namespace clarkframes {

// Parses a measure spec.  Three shapes, selected by "type":
//   {"type":"atomic","atoms":[{"t":0.0,"w":1.0},...],
//    "allowNonProbability":false}
//   {"type":"ifs","base":3,"digits":[0,2],"probs":[0.5,0.5],"depth":30}
//   {"type":"density","coeffs":[{"n":1,"re":0.5,"im":0.0},...]}
// Malformed input throws std::invalid_argument with a message naming the
// offending field.
Measure parse_measure_spec(const std::string& json_text);
Measure load_measure_spec(const std::string& path);

// FNV-1a 64-bit hash of a file's bytes, formatted "fnv1a64:<16 hex digits>";
// recorded in reports so a run names its exact input.
std::string file_hash(const std::string& path);

}  // namespace clarkframes
