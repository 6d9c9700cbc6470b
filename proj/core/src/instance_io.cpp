#include "minsmc/instance_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace minsmc {

namespace {

using json = nlohmann::ordered_json;

void require_keys(const json& obj, std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional,
                  const char* what) {
  for (const char* key : required) {
    if (!obj.contains(key)) {
      throw InputError(std::string("schema violation: missing \"") + key +
                       "\" in " + what);
    }
  }
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const auto known = [&](std::initializer_list<const char*> keys) {
      for (const char* key : keys) {
        if (it.key() == key) return true;
      }
      return false;
    };
    if (!known(required) && !known(optional)) {
      throw InputError("schema violation: unknown field \"" + it.key() +
                       "\" in " + what);
    }
  }
}

std::int64_t as_int(const json& v, const char* what) {
  if (!v.is_number_integer()) {
    throw InputError(std::string("schema violation: ") + what +
                     " must be an integer");
  }
  return v.get<std::int64_t>();
}

}  // namespace

CoverageInstance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("schema violation: not valid JSON: ") +
                     e.what());
  }
  if (!doc.is_object()) {
    throw InputError("schema violation: top level must be an object");
  }
  require_keys(doc, {"m", "universe_size", "k", "elements"}, {"item_weights"},
               "instance");

  const std::int64_t m = as_int(doc["m"], "m");
  const std::int64_t universe = as_int(doc["universe_size"], "universe_size");
  const std::int64_t k = as_int(doc["k"], "k");
  if (m < 0 || universe < 0) {
    throw InputError("schema violation: m and universe_size must be >= 0");
  }
  if (k < 0) throw InputError("schema violation: k must be >= 0");

  std::vector<std::int64_t> weights;
  if (doc.contains("item_weights")) {
    const auto& jw = doc["item_weights"];
    if (!jw.is_array()) {
      throw InputError("schema violation: item_weights must be an array");
    }
    for (const auto& w : jw) weights.push_back(as_int(w, "item weight"));
  }

  const auto& jelems = doc["elements"];
  if (!jelems.is_array()) {
    throw InputError("schema violation: elements must be an array");
  }
  if (static_cast<std::int64_t>(jelems.size()) != m) {
    throw InputError("schema violation: elements length must equal m");
  }

  std::vector<IdSet> covers(static_cast<std::size_t>(m));
  std::vector<double> costs(static_cast<std::size_t>(m), 0.0);
  std::int64_t expected_id = 0;
  for (const auto& je : jelems) {
    if (!je.is_object()) {
      throw InputError("schema violation: element must be an object");
    }
    require_keys(je, {"id", "cost", "covers"}, {}, "element");
    const std::int64_t id = as_int(je["id"], "id");
    if (id != expected_id) {
      throw InputError(
          "schema violation: element ids must be dense and sorted");
    }
    ++expected_id;
    const auto& jc = je["cost"];
    if (!jc.is_number()) {
      throw InputError("schema violation: cost must be a number");
    }
    const double cost = jc.get<double>();
    if (!(cost > 0.0)) throw InputError("nonpositive cost");
    costs[static_cast<std::size_t>(id)] = cost;

    const auto& jcov = je["covers"];
    if (!jcov.is_array()) {
      throw InputError("schema violation: covers must be an array");
    }
    auto& cov = covers[static_cast<std::size_t>(id)];
    std::int64_t prev = -1;
    for (const auto& ji : jcov) {
      const std::int64_t item = as_int(ji, "covers entry");
      if (item < 0 || item >= universe) {
        throw InputError("schema violation: covers index out of range");
      }
      if (item <= prev) {
        throw InputError(
            "schema violation: covers must be strictly ascending");
      }
      prev = item;
      cov.push_back(static_cast<ElementId>(item));
    }
  }

  // Construction re-validates invariants and raises "infeasible demand"
  // when k > f(V).
  return CoverageInstance(static_cast<std::size_t>(universe),
                          std::move(covers), std::move(costs), k,
                          std::move(weights));
}

std::string serialize_instance(const CoverageInstance& inst) {
  json doc;
  doc["m"] = inst.m();
  doc["universe_size"] = inst.universe_size();
  doc["k"] = inst.k();
  if (inst.weighted()) doc["item_weights"] = inst.item_weights();
  json elems = json::array();
  for (std::size_t v = 0; v < inst.m(); ++v) {
    json e;
    e["id"] = v;
    e["cost"] = inst.cost(static_cast<ElementId>(v));
    e["covers"] = inst.covers()[v];
    elems.push_back(std::move(e));
  }
  doc["elements"] = std::move(elems);
  return doc.dump(2) + "\n";
}

CoverageInstance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open instance file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void save_instance_file(const CoverageInstance& inst,
                        const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write instance file: " + path);
  out << serialize_instance(inst);
}

}  // namespace minsmc
