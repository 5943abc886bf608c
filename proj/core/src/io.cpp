#include "nsw/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace nsw {

namespace {

using nlohmann::json;

json valuation_to_json(const Valuation& v) {
  json out;
  out["family"] = family_name(v.family);
  switch (v.family) {
    case Family::kAdditive:
      out["values"] = v.values;
      break;
    case Family::kRestrictedAdditive:
      out["values"] = v.values;
      out["interest"] = std::vector<int>(v.interest.begin(), v.interest.end());
      break;
    case Family::kBudgetAdditive:
      out["values"] = v.values;
      out["cap"] = v.cap;
      break;
    case Family::kSplc:
      out["copy_values"] = v.copy_values;
      break;
    case Family::kCoverage:
      out["universe_weights"] = v.universe_weights;
      out["covers"] = v.covers;
      break;
    case Family::kXos:
      out["clauses"] = v.clauses;
      break;
    case Family::kSubadditiveHalves:
      out["M"] = v.big_m;
      out["own"] = std::vector<int>(v.own.begin(), v.own.end());
      break;
  }
  return out;
}

std::vector<char> to_flags(const json& arr, const std::string& field) {
  if (!arr.is_array()) throw std::runtime_error(field + " must be an array");
  std::vector<char> out;
  for (const auto& x : arr) out.push_back(x.get<int>() != 0);
  return out;
}

Valuation valuation_from_json(const json& j, int agent) {
  const std::string tag = "valuations[" + std::to_string(agent) + "]";
  if (!j.contains("family")) throw std::runtime_error(tag + ": missing family");
  const std::string fname = j.at("family").get<std::string>();
  const auto fam = family_from_name(fname);
  if (!fam) throw std::runtime_error(tag + ": unknown family '" + fname + "'");
  Valuation v;
  v.family = *fam;
  switch (*fam) {
    case Family::kAdditive:
      v.values = j.at("values").get<std::vector<double>>();
      break;
    case Family::kRestrictedAdditive:
      v.values = j.at("values").get<std::vector<double>>();
      v.interest = to_flags(j.at("interest"), tag + ".interest");
      break;
    case Family::kBudgetAdditive:
      v.values = j.at("values").get<std::vector<double>>();
      v.cap = j.at("cap").get<double>();
      break;
    case Family::kSplc:
      // Stored per original item; the expanded virtual-copy space is
      // rebuilt here so solvers see one index per copy.
      v = Valuation::splc(
          j.at("copy_values").get<std::vector<std::vector<double>>>());
      break;
    case Family::kCoverage:
      v.universe_weights =
          j.at("universe_weights").get<std::vector<double>>();
      v.covers = j.at("covers").get<std::vector<std::vector<int>>>();
      break;
    case Family::kXos:
      v.clauses = j.at("clauses").get<std::vector<std::vector<double>>>();
      break;
    case Family::kSubadditiveHalves:
      v.big_m = j.at("M").get<double>();
      v.own = to_flags(j.at("own"), tag + ".own");
      break;
  }
  return v;
}

}  // namespace

std::string instance_to_json(const Instance& inst) {
  json out;
  out["schema_version"] = kSchemaVersion;
  out["n"] = inst.agents();
  out["m"] = inst.items();
  out["weights"] = inst.weights;
  out["valuations"] = json::array();
  for (const Valuation& v : inst.valuations) {
    out["valuations"].push_back(valuation_to_json(v));
  }
  json meta;
  if (!inst.meta.family.empty()) meta["family"] = inst.meta.family;
  if (!inst.meta.params.empty()) meta["params"] = inst.meta.params;
  if (inst.meta.seed != 0) meta["seed"] = inst.meta.seed;
  if (inst.meta.known_opt_nsw) meta["known_opt_nsw"] = *inst.meta.known_opt_nsw;
  if (!meta.empty()) out["meta"] = meta;
  return out.dump(2) + "\n";
}

Instance instance_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("instance JSON parse error: ") +
                             e.what());
  }
  try {
    if (j.at("schema_version").get<int>() != kSchemaVersion) {
      throw std::runtime_error("unsupported schema_version");
    }
    Instance inst;
    const int n = j.at("n").get<int>();
    inst.item_count = j.at("m").get<int>();
    inst.weights = j.at("weights").get<std::vector<double>>();
    if (static_cast<int>(inst.weights.size()) != n) {
      throw std::runtime_error("weights length does not match n");
    }
    const json& vals = j.at("valuations");
    if (!vals.is_array() || static_cast<int>(vals.size()) != n) {
      throw std::runtime_error("valuations length does not match n");
    }
    for (int i = 0; i < n; ++i) {
      inst.valuations.push_back(valuation_from_json(vals[i], i));
    }
    if (j.contains("meta")) {
      const json& meta = j.at("meta");
      inst.meta.family = meta.value("family", std::string());
      if (meta.contains("params")) {
        inst.meta.params =
            meta.at("params").get<std::map<std::string, double>>();
      }
      inst.meta.seed = meta.value("seed", std::uint64_t{0});
      if (meta.contains("known_opt_nsw")) {
        inst.meta.known_opt_nsw = meta.at("known_opt_nsw").get<double>();
      }
    }
    validate_instance(inst);
    return inst;
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("instance schema error: ") + e.what());
  }
}

void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << instance_to_json(inst);
  if (!out) throw std::runtime_error("write failed: " + path);
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return instance_from_json(buf.str());
}

}  // namespace nsw
