#include "adsvol/rep_json.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "adsvol/errors.hpp"

namespace adsvol::surface {

using nlohmann::json;

json to_json(const Representation &rep) {
  json gens = json::array();
  for (const auto &m : rep.images()) gens.push_back({{m.a(), m.b()}, {m.c(), m.d()}});
  return {{"genus", rep.genus()}, {"generators", gens}};
}

Representation representation_from_json(const json &j) {
  if (!j.is_object()) throw InputError("representation must be a JSON object");
  if (!j.contains("genus") || !j["genus"].is_number_integer())
    throw InputError("representation: missing integer field 'genus'");
  if (!j.contains("generators") || !j["generators"].is_array())
    throw InputError("representation: missing array field 'generators'");

  const auto group = SurfaceGroup::make(j["genus"].get<int>());
  std::vector<Moebius> images;
  for (const auto &g : j["generators"]) {
    auto row_ok = [](const json &r) {
      return r.is_array() && r.size() == 2 && r[0].is_number() && r[1].is_number();
    };
    if (!g.is_array() || g.size() != 2 || !row_ok(g[0]) || !row_ok(g[1]))
      throw InputError("representation: each generator must be a 2x2 array of numbers");
    const double a = g[0][0], b = g[0][1], c = g[1][0], d = g[1][1];
    const double det = a * d - b * c;
    if (!(std::abs(det - 1) <= kDeterminantTolerance))
      throw InputError("representation: generator " + std::to_string(images.size() + 1) +
                       " has determinant " + std::to_string(det));
    images.push_back(Moebius::from_entries(a, b, c, d));
  }
  return Representation(group, std::move(images));
}

void write_representation(const Representation &rep, const std::filesystem::path &path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << to_json(rep).dump(2) << '\n';
  out.close();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

Representation read_representation(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::stringstream buf;
  buf << in.rdbuf();
  json j;
  try {
    j = json::parse(buf.str());
  } catch (const json::parse_error &e) {
    throw InputError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
  return representation_from_json(j);
}

} // namespace adsvol::surface
