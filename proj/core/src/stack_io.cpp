#include "casimir/stack_io.hpp"

#include <charconv>
#include <cmath>
#include <system_error>
#include <vector>

#include "json.hpp"

namespace casimir {
namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw StackFileError("schema error: " + path + ": " + what);
}

double number_field(const json& obj, const std::string& key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) schema_error(path, "missing field \"" + key + "\"");
  if (!it->is_number()) schema_error(path + "." + key, "must be a number");
  const double v = it->get<double>();
  if (!std::isfinite(v)) schema_error(path + "." + key, "must be finite");
  return v;
}

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed,
                    const std::string& path) {
  for (const auto& [key, _] : obj.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) schema_error(path, "unknown field \"" + key + "\"");
  }
}

Material parse_material(const json& j, const std::string& path) {
  if (j.is_string()) {
    const auto name = j.get<std::string>();
    if (name == "vacuum") return Vacuum{};
    if (name == "perfect_conductor") return PerfectConductor{};
    schema_error(path, "unknown material \"" + name + "\"");
  }
  if (!j.is_object()) schema_error(path, "must be a string or an object");
  const auto model = j.find("model");
  if (model == j.end() || !model->is_string()) schema_error(path, "missing string field \"model\"");
  const auto name = model->get<std::string>();
  Material m;
  if (name == "constant") {
    reject_unknown(j, {"model", "epsilon"}, path);
    m = ConstantEpsilon{number_field(j, "epsilon", path)};
  } else if (name == "drude") {
    reject_unknown(j, {"model", "omega_p", "gamma"}, path);
    m = Drude{number_field(j, "omega_p", path), number_field(j, "gamma", path)};
  } else if (name == "lorentz") {
    reject_unknown(j, {"model", "omega_0", "omega_p", "gamma"}, path);
    m = Lorentz{number_field(j, "omega_0", path), number_field(j, "omega_p", path),
                number_field(j, "gamma", path)};
  } else if (name == "vacuum") {
    reject_unknown(j, {"model"}, path);
    m = Vacuum{};
  } else if (name == "perfect_conductor") {
    reject_unknown(j, {"model"}, path);
    m = PerfectConductor{};
  } else {
    schema_error(path + ".model", "unknown model \"" + name + "\"");
  }
  try {
    validate(m);
  } catch (const InputError& e) {
    throw StackFileError("invalid stack: " + path + ": " + e.what());
  }
  return m;
}

Layer parse_layer(const json& j, const std::string& path) {
  if (!j.is_object()) schema_error(path, "must be an object");
  reject_unknown(j, {"material", "thickness_m"}, path);
  const auto mat = j.find("material");
  if (mat == j.end()) schema_error(path, "missing field \"material\"");
  Layer layer{parse_material(*mat, path + ".material"), std::nullopt};
  const auto th = j.find("thickness_m");
  if (th == j.end()) {
    if (!is_perfect_conductor(layer.material)) schema_error(path, "missing field \"thickness_m\"");
  } else if (th->is_string()) {
    if (th->get<std::string>() != "semi_infinite") {
      schema_error(path + ".thickness_m", "must be a number or \"semi_infinite\"");
    }
  } else if (th->is_number()) {
    layer.thickness = th->get<double>();
  } else {
    schema_error(path + ".thickness_m", "must be a number or \"semi_infinite\"");
  }
  return layer;
}

std::vector<Layer> parse_layers(const json& arr, const std::string& path) {
  if (!arr.is_array()) schema_error(path, "must be an array");
  std::vector<Layer> layers;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    layers.push_back(parse_layer(arr[i], path + "[" + std::to_string(i) + "]"));
  }
  return layers;
}

json parse_document(std::string_view text) {
  try {
    json doc = json::parse(text);
    if (!doc.is_object()) schema_error("document", "top level must be an object");
    return doc;
  } catch (const json::parse_error& e) {
    throw StackFileError(std::string("schema error: malformed JSON: ") + e.what());
  }
}

json material_json(const Material& m) {
  struct Visitor {
    json operator()(const Vacuum&) const { return "vacuum"; }
    json operator()(const PerfectConductor&) const { return "perfect_conductor"; }
    json operator()(const ConstantEpsilon& c) const {
      return {{"model", "constant"}, {"epsilon", c.epsilon}};
    }
    json operator()(const Drude& d) const {
      return {{"model", "drude"}, {"omega_p", d.plasma_frequency}, {"gamma", d.damping}};
    }
    json operator()(const Lorentz& l) const {
      return {{"model", "lorentz"},
              {"omega_0", l.resonance_frequency},
              {"omega_p", l.plasma_frequency},
              {"gamma", l.damping}};
    }
  };
  return std::visit(Visitor{}, m);
}

}  // namespace

Stack parse_stack(std::string_view text) {
  const json doc = parse_document(text);
  reject_unknown(doc, {"layers"}, "document");
  const auto it = doc.find("layers");
  if (it == doc.end()) schema_error("document", "missing field \"layers\"");
  auto layers = parse_layers(*it, "layers");
  try {
    return Stack(std::move(layers));
  } catch (const InputError& e) {
    throw StackFileError(std::string("invalid stack: ") + e.what());
  }
}

std::string serialize_stack(const Stack& stack) {
  json layers = json::array();
  for (const Layer& layer : stack.layers()) {
    json entry{{"material", material_json(layer.material)}};
    if (layer.thickness) {
      entry["thickness_m"] = *layer.thickness;
    } else {
      entry["thickness_m"] = "semi_infinite";
    }
    layers.push_back(std::move(entry));
  }
  return json{{"layers", layers}}.dump(2) + "\n";
}

CavityConfig parse_cavity(std::string_view text) {
  const json doc = parse_document(text);
  reject_unknown(doc, {"medium", "slab", "d1_m", "d2_m", "left_mirror", "right_mirror"},
                 "document");
  CavityConfig cfg;
  const auto medium = doc.find("medium");
  if (medium == doc.end()) schema_error("document", "missing field \"medium\"");
  cfg.medium = parse_material(*medium, "medium");

  const auto slab = doc.find("slab");
  if (slab == doc.end() || !slab->is_object()) schema_error("slab", "missing object");
  reject_unknown(*slab, {"material", "thickness_m"}, "slab");
  const auto slab_mat = slab->find("material");
  if (slab_mat == slab->end()) schema_error("slab", "missing field \"material\"");
  cfg.slab = parse_material(*slab_mat, "slab.material");
  cfg.slab_thickness = number_field(*slab, "thickness_m", "slab");
  cfg.d1 = number_field(doc, "d1_m", "document");
  cfg.d2 = number_field(doc, "d2_m", "document");

  auto mirror = [&doc](const char* key) -> std::vector<Layer> {
    const auto it = doc.find(key);
    if (it == doc.end()) return {Layer::half_space(PerfectConductor{})};
    if (it->is_string()) {
      if (it->get<std::string>() != "perfect_conductor") {
        schema_error(key, "must be a layer array or \"perfect_conductor\"");
      }
      return {Layer::half_space(PerfectConductor{})};
    }
    return parse_layers(*it, key);
  };
  cfg.left_mirror = mirror("left_mirror");
  cfg.right_mirror = mirror("right_mirror");
  try {
    cfg.validate();
  } catch (const InputError& e) {
    throw StackFileError(std::string("invalid cavity: ") + e.what());
  }
  return cfg;
}

std::string format_number(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  if (res.ec != std::errc{}) return "nan";
  return std::string(buf, res.ptr);
}

}  // namespace casimir
