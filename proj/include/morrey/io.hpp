#pragma once

#include <string>

#include <json.hpp>

#include "morrey/lattice.hpp"
#include "morrey/piecewise.hpp"

namespace morrey {

using ordered_json = nlohmann::ordered_json;

// Sparse sequence wire format:
//   {"d": int, "entries": [{"k": [int,...], "v": number | "a/b"}, ...]}
// Duplicate keys are rejected; zero values are dropped (canonical form).
ordered_json seq_to_json(const SparseSequence<double>& x);
ordered_json seq_to_json(const SparseSequence<Rational>& x);
SparseSequence<double> seq_from_json(const ordered_json& j);
SparseSequence<Rational> seq_from_json_exact(const ordered_json& j);

// Piecewise power function wire format:
//   {"d": int, "pieces": [{"lo": num, "hi": num | "inf", "c": num, "alpha": num}]}
ordered_json fn_to_json(const PiecewisePowerFn& fn);
PiecewisePowerFn fn_from_json(const ordered_json& j);

ordered_json load_json_file(const std::string& path);

// Depth-first flattening with dotted keys; arrays/objects inside become JSON
// text cells. One header row plus one row per record, RFC 4180 quoting.
std::string csv_from_records(const std::vector<ordered_json>& records);

}  // namespace morrey
