#pragma once

// JSON forms of instances, families and reports. Rationals are always
// strings ("p/q" or "p"); objects are emitted in canonical order (character
// order, then ray id) so output is byte-stable.

#include "gnatfam/enumerate.hpp"
#include "gnatfam/lattice.hpp"
#include "gnatfam/reductor.hpp"

#include <json.hpp>

#include <string>

namespace gnatfam::io {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

struct InstanceFile {
  GroupSpec group;
  GroupOptions options;
  FanSpec fan;  // nullopt means "minimal"
};

InstanceFile parse_instance(const Json& j);
OrderedJson to_json(const InstanceFile& file);

/// Reads a JSON document from `path`, or from stdin when `path` is "-".
Json read_json_file(const std::string& path);

Instance load_instance(const InstanceFile& file);

OrderedJson family_to_json(const Instance& inst, const ReductorSet& set);
/// Characters may be written with any exponent representative; absent
/// characters and rays mean zero.
ReductorSet family_from_json(const Instance& inst, const Json& j);

OrderedJson fan_report_to_json(const Fan& fan, const FanReport& report);
OrderedJson rays_to_json(const Fan& fan);
OrderedJson violations_to_json(const Instance& inst, const std::vector<Violation>& violations);
OrderedJson counts_to_json(const FamilyCatalog& catalog);
OrderedJson big_to_json(const BigCount& n);

std::string dump(const OrderedJson& j);

}  // namespace gnatfam::io
