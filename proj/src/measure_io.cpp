#include "clarkframes/measure_io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace clarkframes {

namespace {

using json = nlohmann::json;

double number_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number())
    throw std::invalid_argument(std::string("measure spec: missing numeric field '") +
                                key + "'");
  return j[key].get<double>();
}

Measure parse(const json& spec) {
  if (!spec.is_object() || !spec.contains("type") || !spec["type"].is_string())
    throw std::invalid_argument("measure spec: need an object with a 'type' string");
  std::string type = spec["type"].get<std::string>();

  if (type == "atomic") {
    if (!spec.contains("atoms") || !spec["atoms"].is_array() || spec["atoms"].empty())
      throw std::invalid_argument("measure spec: 'atoms' must be a nonempty array");
    std::vector<std::pair<double, double>> atoms;
    for (const json& a : spec["atoms"])
      atoms.emplace_back(number_field(a, "t"), number_field(a, "w"));
    bool allow = spec.value("allowNonProbability", false);
    return atomic_measure(atoms, allow);
  }

  if (type == "ifs") {
    if (!spec.contains("digits") || !spec["digits"].is_array())
      throw std::invalid_argument("measure spec: 'digits' must be an array");
    if (!spec.contains("probs") || !spec["probs"].is_array())
      throw std::invalid_argument("measure spec: 'probs' must be an array");
    std::vector<int> digits;
    for (const json& d : spec["digits"]) {
      if (!d.is_number_integer())
        throw std::invalid_argument("measure spec: digits must be integers");
      digits.push_back(d.get<int>());
    }
    std::vector<double> probs;
    for (const json& p : spec["probs"]) {
      if (!p.is_number())
        throw std::invalid_argument("measure spec: probs must be numbers");
      probs.push_back(p.get<double>());
    }
    int base = static_cast<int>(number_field(spec, "base"));
    int depth = spec.contains("depth") ? static_cast<int>(number_field(spec, "depth"))
                                       : 30;
    return self_similar_measure(base, std::move(digits), std::move(probs), depth);
  }

  if (type == "density") {
    if (!spec.contains("coeffs") || !spec["coeffs"].is_array())
      throw std::invalid_argument("measure spec: 'coeffs' must be an array");
    std::vector<cplx> coeffs;
    for (const json& c : spec["coeffs"]) {
      int n = static_cast<int>(number_field(c, "n"));
      if (n != static_cast<int>(coeffs.size()) + 1)
        throw std::invalid_argument(
            "measure spec: density coeffs must list n = 1, 2, ... in order");
      coeffs.emplace_back(number_field(c, "re"), number_field(c, "im"));
    }
    return density_measure(std::move(coeffs));
  }

  throw std::invalid_argument("measure spec: unknown type '" + type + "'");
}

}  // namespace

Measure parse_measure_spec(const std::string& json_text) {
  json spec;
  try {
    spec = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("measure spec: invalid JSON: ") + e.what());
  }
  return parse(spec);
}

Measure load_measure_spec(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open measure spec: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_measure_spec(buffer.str());
}

std::string file_hash(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  char buf[65536];
  while (in.read(buf, sizeof buf) || in.gcount() > 0) {
    std::streamsize got = in.gcount();
    for (std::streamsize i = 0; i < got; ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 0x100000001b3ULL;
    }
    if (!in) break;
  }
  char out[32];
  std::snprintf(out, sizeof out, "fnv1a64:%016llx",
                static_cast<unsigned long long>(h));
  return out;
}

}  // namespace clarkframes
