#include "conecalc/field_io.hpp"

#include <bit>
#include <fstream>
#include <istream>
#include <ostream>

#include <nlohmann/json.hpp>

namespace conecalc {

namespace {

nlohmann::ordered_json header_json(const LatticeGeometry& g) {
  nlohmann::ordered_json j;
  j["dims"] = g.dims;
  j["spacing"] = g.spacing;
  j["M"] = g.M;
  j["components"] = g.components;
  return j;
}

LatticeGeometry geometry_from_json(const nlohmann::json& j) {
  LatticeGeometry g;
  try {
    j.at("dims").get_to(g.dims);
    j.at("spacing").get_to(g.spacing);
    g.M = j.at("M").get<double>();
    g.components = j.at("components").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput(std::string("field header: ") + e.what());
  }
  g.validate();
  return g;
}

}  // namespace

void save_field_json(std::ostream& os, const MomentumLatticeField& f) {
  nlohmann::ordered_json j = header_json(f.geometry());
  std::vector<double> flat;
  flat.reserve(f.values().size() * 2);
  for (const auto& v : f.values()) {
    flat.push_back(v.real());
    flat.push_back(v.imag());
  }
  j["values"] = std::move(flat);
  os << j.dump() << '\n';
}

MomentumLatticeField load_field_json(std::istream& is) {
  nlohmann::json j;
  try {
    is >> j;
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput(std::string("field JSON parse: ") + e.what());
  }
  MomentumLatticeField f(geometry_from_json(j));
  const auto it = j.find("values");
  if (it == j.end() || !it->is_array())
    throw MalformedInput("field JSON missing values array");
  if (it->size() != f.values().size() * 2)
    throw MalformedInput("field values length does not match dims x components");
  for (std::size_t i = 0; i < f.values().size(); ++i)
    f.values()[i] = {(*it)[2 * i].get<double>(), (*it)[2 * i + 1].get<double>()};
  f.check_finite();
  return f;
}

void save_field_binary(const std::string& data_path, const MomentumLatticeField& f) {
  static_assert(std::endian::native == std::endian::little,
                "payload is written little-endian");
  {
    std::ofstream hdr(data_path + ".json");
    if (!hdr) throw Error("cannot write " + data_path + ".json");
    hdr << header_json(f.geometry()).dump() << '\n';
  }
  std::ofstream out(data_path, std::ios::binary);
  if (!out) throw Error("cannot write " + data_path);
  std::vector<double> flat;
  flat.reserve(f.values().size() * 2);
  for (const auto& v : f.values()) {
    flat.push_back(v.real());
    flat.push_back(v.imag());
  }
  out.write(reinterpret_cast<const char*>(flat.data()),
            static_cast<std::streamsize>(flat.size() * sizeof(double)));
  if (!out) throw Error("short write to " + data_path);
}

MomentumLatticeField load_field_binary(const std::string& data_path) {
  static_assert(std::endian::native == std::endian::little,
                "payload is read little-endian");
  nlohmann::json j;
  {
    std::ifstream hdr(data_path + ".json");
    if (!hdr) throw MalformedInput("missing header " + data_path + ".json");
    try {
      hdr >> j;
    } catch (const nlohmann::json::exception& e) {
      throw MalformedInput(std::string("field header parse: ") + e.what());
    }
  }
  MomentumLatticeField f(geometry_from_json(j));
  std::ifstream in(data_path, std::ios::binary);
  if (!in) throw MalformedInput("cannot open " + data_path);
  std::vector<double> flat(f.values().size() * 2);
  in.read(reinterpret_cast<char*>(flat.data()),
          static_cast<std::streamsize>(flat.size() * sizeof(double)));
  if (static_cast<std::size_t>(in.gcount()) != flat.size() * sizeof(double))
    throw MalformedInput("payload size does not match header in " + data_path);
  for (std::size_t i = 0; i < f.values().size(); ++i)
    f.values()[i] = {flat[2 * i], flat[2 * i + 1]};
  f.check_finite();
  return f;
}

}  // namespace conecalc
