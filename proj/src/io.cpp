#include "bikraw/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace bikraw {

void write_meta_comment(std::ostream& os, const RunMeta& meta) {
  os << "# bikraw " << kVersion << "\n";
  os << "# params: " << meta.params << "\n";
  os << "# mode: " << meta.mode << "\n";
  os << "# seed: " << meta.seed << "\n";
  if (!meta.extra.empty()) os << "# config: " << meta.extra << "\n";
}

namespace {

nlohmann::ordered_json meta_json(const RunMeta& meta) {
  nlohmann::ordered_json j;
  j["version"] = kVersion;
  j["params"] = meta.params;
  j["mode"] = meta.mode;
  j["seed"] = meta.seed;
  if (!meta.extra.empty()) j["config"] = meta.extra;
  return j;
}

}  // namespace

std::string report_to_json(const VerificationReport& report, const RunMeta& meta) {
  nlohmann::ordered_json j;
  j["meta"] = meta_json(meta);
  j["suite"] = report.suite;
  j["mode"] = report.mode;
  if (report.mode == "float") j["tolerance"] = report.tolerance;
  j["all_pass"] = report.all_pass();
  auto cases = nlohmann::ordered_json::array();
  for (const auto& c : report.cases) {
    nlohmann::ordered_json cj;
    cj["id"] = c.id;
    cj["residual"] = c.residual;
    cj["pass"] = c.pass;
    cases.push_back(std::move(cj));
  }
  j["cases"] = std::move(cases);
  return j.dump(2) + "\n";
}

namespace {

template <class Fd>
std::string grid_json_impl(const GridFunction<Fd>& g, const RunMeta& meta) {
  nlohmann::ordered_json j;
  j["meta"] = meta_json(meta);
  j["N"] = g.lattice.n();
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    auto [x, y] = g.lattice.point(i);
    nlohmann::ordered_json r;
    r["x"] = x;
    r["y"] = y;
    if constexpr (Fd::exact) {
      r["re"] = rat_str(g.values[i].re);
      r["im"] = rat_str(g.values[i].im);
    } else {
      r["re"] = g.values[i].re;
      r["im"] = g.values[i].im;
    }
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

}  // namespace

std::string grid_to_json(const GridFunction<ExactField>& g, const RunMeta& meta) { return grid_json_impl(g, meta); }
std::string grid_to_json(const GridFunction<FloatField>& g, const RunMeta& meta) { return grid_json_impl(g, meta); }

ParamFile load_param_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open parameter file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("parameter file " + path + " is not valid JSON: " + e.what());
  }
  auto field = [&](const char* key) -> Rat {
    if (!j.contains(key)) throw std::runtime_error("parameter file " + path + " missing key \"" + key + "\"");
    return parse_rat(j.at(key).get<std::string>());
  };
  ParamFile out{{field("p1"), field("p2"), field("p3"), field("p4")}, std::nullopt};
  out.params.validate();
  if (j.contains("omega1") != j.contains("omega2"))
    throw std::runtime_error("parameter file " + path + " must define both omega1 and omega2 or neither");
  if (j.contains("omega1")) {
    FrequencyPair f{parse_rat(j.at("omega1").get<std::string>()), parse_rat(j.at("omega2").get<std::string>())};
    f.validate();
    out.frequencies = f;
  }
  return out;
}

RahmanParams parse_params_flag(const std::string& csv) {
  std::vector<std::string> parts;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.size() != 4)
    throw std::invalid_argument("--params expects p1,p2,p3,p4 (rationals as num/den), got \"" + csv + "\"");
  RahmanParams p{parse_rat(parts[0]), parse_rat(parts[1]), parse_rat(parts[2]), parse_rat(parts[3])};
  p.validate();
  return p;
}

}  // namespace bikraw
