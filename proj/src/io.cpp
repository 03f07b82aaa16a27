#include "morrey/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace morrey {

namespace {

std::vector<std::int64_t> key_from_json(const ordered_json& jk, int d) {
  if (!jk.is_array() || static_cast<int>(jk.size()) != d)
    raise(errc::parse_error, "entry key must be an array of d integers");
  std::vector<std::int64_t> c;
  c.reserve(jk.size());
  for (const auto& v : jk) {
    if (!v.is_number_integer()) raise(errc::parse_error, "entry key coordinates must be integers");
    c.push_back(v.get<std::int64_t>());
  }
  return c;
}

int dim_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("d") || !j["d"].is_number_integer())
    raise(errc::parse_error, "expected an object with integer field \"d\"");
  int d = j["d"].get<int>();
  if (d < 1) raise(errc::parse_error, "dimension must be >= 1");
  return d;
}

template <class S, class Convert>
SparseSequence<S> parse_seq(const ordered_json& j, Convert convert) {
  int d = dim_from_json(j);
  SparseSequence<S> out(d);
  if (!j.contains("entries") || !j["entries"].is_array())
    raise(errc::parse_error, "expected array field \"entries\"");
  std::set<LatticePoint> seen;
  for (const auto& e : j["entries"]) {
    if (!e.is_object() || !e.contains("k") || !e.contains("v"))
      raise(errc::parse_error, "entry needs fields \"k\" and \"v\"");
    LatticePoint k(key_from_json(e["k"], d));
    if (!seen.insert(k).second) raise(errc::parse_error, "duplicate entry key");
    out.set(k, convert(e["v"]));
  }
  return out;
}

double value_as_double(const ordered_json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return Rational::from_string(v.get<std::string>()).to_double();
  raise(errc::parse_error, "entry value must be a number or a rational string");
}

Rational value_as_rational(const ordered_json& v) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_number()) return Rational::from_double(v.get<double>());
  if (v.is_string()) return Rational::from_string(v.get<std::string>());
  raise(errc::parse_error, "entry value must be a number or a rational string");
}

ordered_json rational_to_json(const Rational& v) {
  if (v.is_integer() && v.num().fits_int64()) return ordered_json(v.num().to_int64());
  return ordered_json(v.to_string());
}

}  // namespace

ordered_json seq_to_json(const SparseSequence<double>& x) {
  ordered_json j;
  j["d"] = x.d;
  j["entries"] = ordered_json::array();
  for (const auto& [k, v] : x.entries) {
    ordered_json e;
    e["k"] = k.coords;
    e["v"] = v;
    j["entries"].push_back(std::move(e));
  }
  return j;
}

ordered_json seq_to_json(const SparseSequence<Rational>& x) {
  ordered_json j;
  j["d"] = x.d;
  j["entries"] = ordered_json::array();
  for (const auto& [k, v] : x.entries) {
    ordered_json e;
    e["k"] = k.coords;
    e["v"] = rational_to_json(v);
    j["entries"].push_back(std::move(e));
  }
  return j;
}

SparseSequence<double> seq_from_json(const ordered_json& j) {
  return parse_seq<double>(j, value_as_double);
}

SparseSequence<Rational> seq_from_json_exact(const ordered_json& j) {
  return parse_seq<Rational>(j, value_as_rational);
}

ordered_json fn_to_json(const PiecewisePowerFn& fn) {
  ordered_json j;
  j["d"] = fn.d;
  j["pieces"] = ordered_json::array();
  for (const auto& pc : fn.pieces) {
    ordered_json e;
    e["lo"] = pc.lo;
    if (std::isfinite(pc.hi))
      e["hi"] = pc.hi;
    else
      e["hi"] = "inf";
    e["c"] = pc.c;
    e["alpha"] = pc.alpha;
    j["pieces"].push_back(std::move(e));
  }
  return j;
}

PiecewisePowerFn fn_from_json(const ordered_json& j) {
  int d = dim_from_json(j);
  if (!j.contains("pieces") || !j["pieces"].is_array())
    raise(errc::parse_error, "expected array field \"pieces\"");
  std::vector<PowerPiece> pieces;
  for (const auto& e : j["pieces"]) {
    if (!e.is_object() || !e.contains("lo") || !e.contains("hi") || !e.contains("c") ||
        !e.contains("alpha"))
      raise(errc::parse_error, "piece needs fields lo, hi, c, alpha");
    PowerPiece pc;
    if (!e["lo"].is_number()) raise(errc::parse_error, "piece lo must be a number");
    pc.lo = e["lo"].get<double>();
    if (e["hi"].is_string()) {
      if (e["hi"].get<std::string>() != "inf") raise(errc::parse_error, "piece hi must be a number or \"inf\"");
      pc.hi = kInf;
    } else if (e["hi"].is_number()) {
      pc.hi = e["hi"].get<double>();
    } else {
      raise(errc::parse_error, "piece hi must be a number or \"inf\"");
    }
    if (!e["c"].is_number() || !e["alpha"].is_number())
      raise(errc::parse_error, "piece c and alpha must be numbers");
    pc.c = e["c"].get<double>();
    pc.alpha = e["alpha"].get<double>();
    pieces.push_back(pc);
  }
  try {
    return PiecewisePowerFn(d, std::move(pieces));
  } catch (const Error& err) {
    raise(errc::parse_error, std::string("invalid piece layout: ") + err.what());
  }
}

ordered_json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(errc::parse_error, "cannot open " + path);
  ordered_json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    raise(errc::parse_error, std::string("invalid JSON in ") + path + ": " + e.what());
  }
  return j;
}

namespace {

void flatten(const ordered_json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    }
  } else if (j.is_string()) {
    out.emplace_back(prefix, j.get<std::string>());
  } else {
    out.emplace_back(prefix, j.dump());
  }
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += "\"\"";
    else quoted += c;
  }
  quoted += "\"";
  return quoted;
}

}  // namespace

std::string csv_from_records(const std::vector<ordered_json>& records) {
  std::vector<std::string> header;
  std::vector<std::vector<std::pair<std::string, std::string>>> rows;
  for (const auto& rec : records) {
    std::vector<std::pair<std::string, std::string>> flat;
    flatten(rec, "", flat);
    for (const auto& [k, v] : flat) {
      if (std::find(header.begin(), header.end(), k) == header.end()) header.push_back(k);
    }
    rows.push_back(std::move(flat));
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) os << ',';
    os << csv_escape(header[i]);
  }
  os << "\r\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (i) os << ',';
      auto it = std::find_if(row.begin(), row.end(),
                             [&](const auto& kv) { return kv.first == header[i]; });
      if (it != row.end()) os << csv_escape(it->second);
    }
    os << "\r\n";
  }
  return os.str();
}

}  // namespace morrey
