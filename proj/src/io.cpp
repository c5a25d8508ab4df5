#include "gnatfam/io.hpp"

#include "gnatfam/error.hpp"

#include <fstream>
#include <iostream>
#include <limits>
#include <set>
#include <sstream>

namespace gnatfam::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::Input, what); }

Rational rational_from(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  bad("expected a rational string, got " + j.dump());
}

RationalVector vector_from(const Json& j) {
  RationalVector v;
  if (j.is_string()) {
    std::stringstream ss(j.get<std::string>());
    std::string part;
    while (std::getline(ss, part, ',')) v.push_back(parse_rational(part));
  } else if (j.is_array()) {
    for (const auto& x : j) v.push_back(rational_from(x));
  } else {
    bad("expected a rational vector, got " + j.dump());
  }
  return v;
}

std::string vector_text(const RationalVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s;
}

std::int64_t integer_from(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

IntVector int_list(const std::string& text) {
  IntVector out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(part, &used);
    } catch (const std::exception&) {
      bad("malformed character label '" + text + "'");
    }
    if (used != part.size()) bad("malformed character label '" + text + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

InstanceFile parse_instance(const Json& j) {
  if (!j.is_object()) bad("instance must be a JSON object");
  InstanceFile file;
  if (!j.contains("dimension")) bad("instance lacks 'dimension'");
  const auto n = integer_from(j.at("dimension"), "dimension");
  if (n < 1) bad("dimension must be positive");
  file.group.dimension = static_cast<std::size_t>(n);

  const auto& group = j.contains("group") ? j.at("group") : Json::object();
  if (!group.is_object()) bad("'group' must be an object");
  if (group.contains("generators")) {
    const auto& gens = group.at("generators");
    if (!gens.is_array()) bad("'generators' must be a list");
    for (const auto& gj : gens) {
      if (!gj.is_object() || !gj.contains("order") || !gj.contains("weights"))
        bad("generator needs 'order' and 'weights'");
      GroupGenerator gen;
      gen.order = integer_from(gj.at("order"), "order");
      if (!gj.at("weights").is_array()) bad("'weights' must be a list");
      for (const auto& w : gj.at("weights")) gen.weights.push_back(integer_from(w, "weight"));
      file.group.generators.push_back(std::move(gen));
    }
  }
  if (group.contains("quotient_nonfaithful")) {
    if (!group.at("quotient_nonfaithful").is_boolean()) bad("'quotient_nonfaithful' must be boolean");
    file.options.strict_presentation = !group.at("quotient_nonfaithful").get<bool>();
  }
  if (group.contains("max_order")) {
    const auto cap = integer_from(group.at("max_order"), "max_order");
    if (cap < 1) bad("'max_order' must be positive");
    file.options.max_order = static_cast<std::size_t>(cap);
  }

  const auto& fan = j.contains("fan") ? j.at("fan") : Json("minimal");
  if (fan.is_string()) {
    if (fan.get<std::string>() != "minimal") bad("fan must be \"minimal\" or an object");
  } else if (fan.is_object()) {
    if (!fan.contains("rays") || !fan.contains("cones")) bad("fan needs 'rays' and 'cones'");
    if (!fan.at("rays").is_array() || !fan.at("cones").is_array()) bad("'rays' and 'cones' must be lists");
    ExplicitFan ef;
    for (const auto& r : fan.at("rays")) ef.rays.push_back(vector_from(r));
    for (const auto& c : fan.at("cones")) {
      if (!c.is_array()) bad("each cone must be a list of ray indices");
      std::vector<std::size_t> cone;
      for (const auto& idx : c) {
        const auto i = integer_from(idx, "cone index");
        if (i < 0 || static_cast<std::size_t>(i) >= ef.rays.size())
          bad("cone index " + std::to_string(i) + " out of range");
        cone.push_back(static_cast<std::size_t>(i));
      }
      ef.cones.push_back(std::move(cone));
    }
    file.fan = std::move(ef);
  } else {
    bad("fan must be \"minimal\" or an object");
  }
  return file;
}

OrderedJson to_json(const InstanceFile& file) {
  OrderedJson j;
  j["dimension"] = file.group.dimension;
  OrderedJson gens = OrderedJson::array();
  for (const auto& g : file.group.generators) {
    OrderedJson gj;
    gj["order"] = g.order;
    gj["weights"] = g.weights;
    gens.push_back(std::move(gj));
  }
  OrderedJson group;
  group["generators"] = std::move(gens);
  if (!file.options.strict_presentation) group["quotient_nonfaithful"] = true;
  if (file.options.max_order != GroupOptions{}.max_order) group["max_order"] = file.options.max_order;
  j["group"] = std::move(group);
  if (!file.fan) {
    j["fan"] = "minimal";
  } else {
    OrderedJson rays = OrderedJson::array();
    for (const auto& r : file.fan->rays) rays.push_back(vector_text(r));
    j["fan"]["rays"] = std::move(rays);
    j["fan"]["cones"] = file.fan->cones;
  }
  return j;
}

Json read_json_file(const std::string& path) {
  try {
    if (path == "-") return Json::parse(std::cin);
    std::ifstream in(path);
    if (!in) bad("cannot open '" + path + "'");
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    bad("malformed JSON in '" + path + "': " + e.what());
  }
}

Instance load_instance(const InstanceFile& file) {
  return make_instance(file.group, file.fan, file.options);
}

OrderedJson family_to_json(const Instance& inst, const ReductorSet& set) {
  OrderedJson j = OrderedJson::object();
  const auto& chars = inst.group.characters();
  for (std::size_t c = 0; c < chars.size(); ++c) {
    OrderedJson d = OrderedJson::object();
    for (const auto& [ray, q] : set[c].coefficients()) d[std::to_string(ray)] = to_string(q);
    j[to_string(chars[c])] = std::move(d);
  }
  return j;
}

ReductorSet family_from_json(const Instance& inst, const Json& j) {
  if (!j.is_object()) bad("family must be a JSON object");
  const auto& g = inst.group;
  std::vector<QDivisor> ds(g.order());
  std::set<std::size_t> seen;
  for (const auto& [label, divisor] : j.items()) {
    const auto rep = int_list(label);
    if (rep.size() != g.dimension()) bad("character label '" + label + "' has wrong length");
    const auto idx = g.index_of(g.reduce(rep));
    if (!seen.insert(idx).second) bad("character '" + label + "' given twice");
    if (!divisor.is_object()) bad("divisor for '" + label + "' must be an object");
    for (const auto& [ray_text, coeff] : divisor.items()) {
      const auto ray = int_list(ray_text);
      if (ray.size() != 1 || ray[0] < 0 || static_cast<std::size_t>(ray[0]) >= inst.fan.rays.size())
        bad("unknown ray id '" + ray_text + "'");
      ds[idx].set(static_cast<std::size_t>(ray[0]), rational_from(coeff));
    }
  }
  return ReductorSet(std::move(ds));
}

OrderedJson rays_to_json(const Fan& fan) {
  OrderedJson rays = OrderedJson::array();
  for (const auto& r : fan.rays) {
    OrderedJson rj;
    rj["id"] = r.id;
    rj["vector"] = vector_text(r.vector);
    if (r.kind != RayKind::Unclassified) rj["kind"] = to_string(r.kind);
    rays.push_back(std::move(rj));
  }
  return rays;
}

OrderedJson fan_report_to_json(const Fan& fan, const FanReport& report) {
  OrderedJson j;
  j["valid"] = report.passed();
  OrderedJson checks;
  for (auto c : {FanCheck::Containment, FanCheck::Primitivity, FanCheck::Smoothness, FanCheck::Properness})
    checks[to_string(c)] = report.passed(c);
  j["checks"] = std::move(checks);
  OrderedJson failures = OrderedJson::array();
  for (const auto& f : report.failures) {
    OrderedJson fj;
    fj["check"] = to_string(f.check);
    fj["detail"] = f.detail;
    fj["rays"] = f.rays;
    fj["cone"] = f.cone ? OrderedJson(*f.cone) : OrderedJson(nullptr);
    failures.push_back(std::move(fj));
  }
  j["failures"] = std::move(failures);
  j["rays"] = rays_to_json(fan);
  j["cones"] = fan.max_cones;
  return j;
}

OrderedJson violations_to_json(const Instance& inst, const std::vector<Violation>& violations) {
  OrderedJson arr = OrderedJson::array();
  for (const auto& v : violations) {
    OrderedJson vj;
    vj["kind"] = v.kind == ViolationKind::GWeil ? "g-weil" : "inequality";
    vj["ray"] = v.ray;
    vj["character"] = to_string(inst.group.characters()[v.character]);
    vj["generator"] = v.generator ? OrderedJson(*v.generator) : OrderedJson(nullptr);
    vj["value"] = to_string(v.value);
    if (v.kind == ViolationKind::GWeil)
      vj["expected_fract"] = to_string(char_valuation(inst.fan.rays[v.ray], inst.group.characters()[v.character]));
    arr.push_back(std::move(vj));
  }
  return arr;
}

OrderedJson big_to_json(const BigCount& n) {
  if (n <= std::numeric_limits<std::uint64_t>::max()) return n.convert_to<std::uint64_t>();
  return n.str();
}

OrderedJson counts_to_json(const FamilyCatalog& catalog) {
  OrderedJson j;
  j["total"] = big_to_json(catalog.total_count);
  OrderedJson per_ray = OrderedJson::object();
  for (const auto& s : catalog.per_ray) per_ray[std::to_string(s.ray)] = s.solutions.size();
  j["per_ray"] = std::move(per_ray);
  return j;
}

std::string dump(const OrderedJson& j) { return j.dump(2) + "\n"; }

}  // namespace gnatfam::io
