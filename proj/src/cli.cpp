#include "gnatfam/cli.hpp"

#include "gnatfam/error.hpp"
#include "gnatfam/io.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <thread>

namespace gnatfam::cli {

namespace {

struct Options {
  std::string instance;
  std::string which;
  bool count_only = false;
  std::string materialize_dir;
  bool with_orbits = false;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::string set_path;
  std::string a_path;
  std::string b_path;
};

int cmd_validate(const Options& opt, std::ostream& out) {
  const auto file = io::parse_instance(io::read_json_file(opt.instance));
  const auto group = build_group(file.group, file.options);
  const Overlattice lat(group);
  Fan fan = file.fan ? make_fan(group.dimension(), file.fan->rays, file.fan->cones)
                     : minimal_resolution_2d(lat);
  const auto report = validate_fan(fan, lat);
  if (report.passed()) fan = classify_rays(std::move(fan), lat);

  io::OrderedJson j;
  j["group_order"] = group.order();
  j["lattice_index"] = lat.index();
  const auto report_json = io::fan_report_to_json(fan, report);
  for (const auto& [k, v] : report_json.items()) j[k] = v;
  std::size_t exceptional = 0;
  for (const auto& r : fan.rays) exceptional += r.kind == RayKind::Exceptional;
  if (report.passed()) j["exceptional_rays"] = exceptional;
  out << io::dump(j);
  return report.passed() ? kExitOk : kExitCheckFailed;
}

int cmd_families(const Options& opt, std::ostream& out) {
  const auto inst = io::load_instance(io::parse_instance(io::read_json_file(opt.instance)));
  ReductorSet set;
  if (opt.which == "canonical") set = canonical_set(inst);
  else if (opt.which == "maxshift") set = maxshift_set(inst);
  else set = minshift_set(inst);
  out << io::dump(io::family_to_json(inst, set));
  return kExitOk;
}

int cmd_enumerate(const Options& opt, std::ostream& out) {
  const auto inst = io::load_instance(io::parse_instance(io::read_json_file(opt.instance)));
  const auto catalog = build_catalog(inst, opt.jobs);
  auto j = io::counts_to_json(catalog);
  if (!opt.count_only && (!opt.materialize_dir.empty() || opt.with_orbits)) {
    const auto cap = default_catalog_cap();
    if (!opt.materialize_dir.empty()) {
      namespace fs = std::filesystem;
      const fs::path dir(opt.materialize_dir);
      std::error_code ec;
      fs::create_directories(dir, ec);
      if (ec) throw Error(ErrorKind::Input, "cannot create '" + dir.string() + "': " + ec.message());
      const auto width = catalog.total_count.str().size();
      std::uint64_t written = 0;
      for_each_family(inst, catalog, cap, [&](std::uint64_t idx, const ReductorSet& set) {
        auto name = std::to_string(idx);
        name.insert(0, width - std::min(width, name.size()), '0');
        std::ofstream f(dir / ("family_" + name + ".json"));
        if (!f) throw Error(ErrorKind::Input, "cannot write into '" + dir.string() + "'");
        f << io::dump(io::family_to_json(inst, set));
        ++written;
      });
      j["materialized"] = written;
      j["directory"] = opt.materialize_dir;
    }
    if (opt.with_orbits) {
      const auto orbs = orbits(inst, catalog, cap);
      j["orbit_count"] = orbs.size();
      j["orbits"] = orbs;
    }
  }
  out << io::dump(j);
  return kExitOk;
}

int cmd_check(const Options& opt, std::ostream& out) {
  const auto inst = io::load_instance(io::parse_instance(io::read_json_file(opt.instance)));
  const auto set = io::family_from_json(inst, io::read_json_file(opt.set_path));
  const auto violations = check_reductor(inst, set);
  io::OrderedJson j;
  j["pass"] = violations.empty();
  j["normalised"] = is_normalised(set);
  j["violations"] = io::violations_to_json(inst, violations);
  out << io::dump(j);
  return violations.empty() ? kExitOk : kExitCheckFailed;
}

int cmd_equiv(const Options& opt, std::ostream& out) {
  const auto inst = io::load_instance(io::parse_instance(io::read_json_file(opt.instance)));
  const auto a = io::family_from_json(inst, io::read_json_file(opt.a_path));
  const auto b = io::family_from_json(inst, io::read_json_file(opt.b_path));
  const auto witness = linear_equivalence_witness(inst, a, b);
  io::OrderedJson j;
  j["linearly_equivalent"] = witness.has_value();
  j["witness"] = witness ? io::OrderedJson(*witness) : io::OrderedJson(nullptr);
  out << io::dump(j);
  return kExitOk;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidFan:
    case ErrorKind::NotGWeil:
      return kExitCheckFailed;
    default:
      return kExitInput;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerate and check gnat-families on toric resolutions of C^n/G"};
  app.name(args.empty() ? "gnatfam" : args.front());
  app.require_subcommand(1);
  Options opt;

  auto* validate = app.add_subcommand("validate", "Validate the group and fan of an instance");
  validate->add_option("instance", opt.instance, "Instance JSON ('-' for stdin)")->required();

  auto* families = app.add_subcommand("families", "Print the canonical, maximal or minimal shift family");
  families->add_option("which", opt.which, "canonical | maxshift | minshift")
      ->required()
      ->check(CLI::IsMember({"canonical", "maxshift", "minshift"}));
  families->add_option("instance", opt.instance, "Instance JSON")->required();

  auto* enumerate = app.add_subcommand("enumerate", "Count or list every normalised reductor set");
  enumerate->add_option("instance", opt.instance, "Instance JSON")->required();
  auto* count_flag = enumerate->add_flag("--count-only", opt.count_only, "Only report counts");
  enumerate->add_option("--materialize", opt.materialize_dir, "Write one family file per member into DIR")
      ->excludes(count_flag);
  enumerate->add_flag("--orbits", opt.with_orbits, "Report orbits under shifts and reflection")
      ->excludes(count_flag);
  enumerate->add_option("--jobs", opt.jobs, "Worker threads for per-ray work")->check(CLI::PositiveNumber);

  auto* check = app.add_subcommand("check", "Check a family file against the reductor condition");
  check->add_option("instance", opt.instance, "Instance JSON")->required();
  check->add_option("--set", opt.set_path, "Family JSON")->required();

  auto* equiv = app.add_subcommand("equiv", "Test two family files for linear equivalence");
  equiv->add_option("instance", opt.instance, "Instance JSON")->required();
  equiv->add_option("--a", opt.a_path, "First family JSON")->required();
  equiv->add_option("--b", opt.b_path, "Second family JSON")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("gnatfam");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*validate) return cmd_validate(opt, out);
    if (*families) return cmd_families(opt, out);
    if (*enumerate) return cmd_enumerate(opt, out);
    if (*check) return cmd_check(opt, out);
    if (*equiv) return cmd_equiv(opt, out);
  } catch (const Error& e) {
    io::OrderedJson j;
    j["error"] = to_string(e.kind());
    j["message"] = e.what();
    err << io::dump(j);
    return exit_code_for(e.kind());
  } catch (const io::Json::exception& e) {
    err << "{\"error\": \"InputError\", \"message\": " << io::OrderedJson(e.what()).dump() << "}\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace gnatfam::cli
