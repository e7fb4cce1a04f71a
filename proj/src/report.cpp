#include "bindkit/report.hpp"

#include "bindkit/rng.hpp"

namespace bindkit {

std::uint64_t mix_seed(std::uint64_t seed, const std::string& tag) {
  // FNV-1a over the tag, folded into the seed.
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return seed ^ h;
}

nlohmann::ordered_json LawReport::to_json() const {
  nlohmann::ordered_json j;
  j["law"] = law;
  j["trials"] = trials;
  j["seed"] = seed;
  j["pass"] = pass();
  nlohmann::ordered_json vs = nlohmann::ordered_json::array();
  for (const auto& v : violations) {
    nlohmann::ordered_json jv;
    jv["inputs"] = v.inputs;
    jv["lhs"] = v.lhs;
    jv["rhs"] = v.rhs;
    vs.push_back(std::move(jv));
  }
  j["violations"] = std::move(vs);
  if (!meta.empty()) j["meta"] = meta;
  return j;
}

nlohmann::ordered_json reports_to_json(const std::vector<LawReport>& rs) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rs) arr.push_back(r.to_json());
  return arr;
}

std::string summarize(const std::vector<LawReport>& rs) {
  std::string out;
  for (const auto& r : rs) {
    std::string line = r.law + " ";
    while (line.size() < 44) line += '.';
    line += r.pass() ? " pass" : " FAIL";
    line += " (" + std::to_string(r.trials) + " trials)";
    if (!r.pass()) {
      const auto& v = r.violations.front();
      line += "\n    witness: " + v.inputs + "\n    lhs: " + v.lhs +
              "\n    rhs: " + v.rhs;
    }
    out += line + "\n";
  }
  return out;
}

bool all_pass(const std::vector<LawReport>& rs) {
  for (const auto& r : rs)
    if (!r.pass()) return false;
  return true;
}

}  // namespace bindkit
