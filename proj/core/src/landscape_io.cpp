#include "fwcycles/landscape_io.hpp"

#include <fstream>
#include <sstream>

#include "fwcycles/error.hpp"

namespace fwc {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedInput, what); }

Rational exact_value(const Json& value, const std::string& where) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  malformed(where + " must be a decimal string or an integer");
}

std::string text_field(const Json& object, const char* key, const std::string& where) {
  auto it = object.find(key);
  if (it == object.end() || !it->is_string()) malformed(where + " needs a string '" + key + "'");
  return it->get<std::string>();
}

}  // namespace

Landscape landscape_from_json(const Json& document) {
  if (!document.is_object()) malformed("landscape document must be an object");

  std::int64_t scale = kDefaultEnergyScale;
  if (auto it = document.find("energy_scale"); it != document.end()) {
    if (!it->is_number_integer() || it->get<std::int64_t>() <= 0)
      malformed("energy_scale must be a positive integer");
    scale = it->get<std::int64_t>();
  }

  auto states_it = document.find("states");
  if (states_it == document.end() || !states_it->is_array()) malformed("missing 'states' array");
  std::vector<StateRecord> states;
  for (const auto& entry : *states_it) {
    if (!entry.is_object()) malformed("each state must be an object");
    std::string id = text_field(entry, "id", "state");
    auto energy_it = entry.find("energy");
    if (energy_it == entry.end()) malformed("state '" + id + "' has no energy");
    Energy energy = energy_from_rational(exact_value(*energy_it, "energy of '" + id + "'"), scale);
    states.push_back({std::move(id), energy});
  }

  std::vector<EdgeRecord> edges;
  if (auto edges_it = document.find("edges"); edges_it != document.end()) {
    if (!edges_it->is_array()) malformed("'edges' must be an array");
    for (const auto& entry : *edges_it) {
      const Json* pair = &entry;
      std::optional<Rational> rate;
      if (entry.is_object()) {
        auto pair_it = entry.find("pair");
        if (pair_it == entry.end()) malformed("edge object needs 'pair'");
        pair = &*pair_it;
        if (auto q_it = entry.find("q"); q_it != entry.end()) rate = exact_value(*q_it, "edge rate");
      }
      if (!pair->is_array() || pair->size() != 2 || !(*pair)[0].is_string() || !(*pair)[1].is_string())
        malformed("edge endpoints must be a pair of state ids");
      edges.push_back({(*pair)[0].get<std::string>(), (*pair)[1].get<std::string>(), rate});
    }
  }

  return Landscape::create(std::move(states), std::move(edges), scale);
}

Landscape load_landscape(std::istream& source, LandscapeFormat format) {
  switch (format) {
    case LandscapeFormat::json: {
      Json document;
      try {
        document = Json::parse(source);
      } catch (const Json::parse_error& e) {
        malformed(std::string("syntax error: ") + e.what());
      }
      return landscape_from_json(document);
    }
  }
  malformed("unsupported landscape format");
}

Landscape load_landscape(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot open '" + path.string() + "'");
  return load_landscape(in, LandscapeFormat::json);
}

Json landscape_to_json(const Landscape& landscape) {
  Json doc = Json::object();
  doc["energy_scale"] = landscape.energy_scale();
  Json states = Json::array();
  for (StateIndex x = 0; x < landscape.size(); ++x) {
    Json s = Json::object();
    s["id"] = landscape.id(x);
    s["energy"] = landscape.format(landscape.energy(x));
    states.push_back(std::move(s));
  }
  doc["states"] = std::move(states);
  Json edges = Json::array();
  for (const auto& e : landscape.edge_records()) {
    if (e.rate) {
      Json obj = Json::object();
      obj["pair"] = Json::array({e.from, e.to});
      obj["q"] = format_rational(*e.rate);
      edges.push_back(std::move(obj));
    } else {
      edges.push_back(Json::array({e.from, e.to}));
    }
  }
  doc["edges"] = std::move(edges);
  return doc;
}

std::string write_landscape(const Landscape& landscape) {
  return landscape_to_json(landscape).dump(2) + "\n";
}

}  // namespace fwc
