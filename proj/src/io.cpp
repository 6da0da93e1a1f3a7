#include "exh/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "exh/error.hpp"

namespace exh {

using nlohmann::json;

namespace {

const json& field(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw InvalidInput(std::string("family file: missing \"") + key + "\"");
  return *it;
}

Vector parse_point(const json& j) {
  if (!j.is_array()) throw InvalidInput("family file: vertex must be an array of numbers");
  Vector v;
  v.reserve(j.size());
  for (const json& x : j) {
    if (!x.is_number()) throw InvalidInput("family file: vertex coordinate is not a number");
    v.push_back(x.get<double>());
  }
  return v;
}

}  // namespace

Family parse_family(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("family file: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidInput("family file: top level must be an object");

  const json& kind_j = field(doc, "kind");
  if (!kind_j.is_string()) throw InvalidInput("family file: \"kind\" must be a string");
  const auto kind = parse_kind(kind_j.get<std::string>());
  if (!kind) throw InvalidInput("family file: unknown kind \"" + kind_j.get<std::string>() + "\"");

  const json& dim_j = field(doc, "space_dim");
  if (!dim_j.is_number_unsigned() || dim_j.get<std::uint64_t>() == 0)
    throw InvalidInput("family file: \"space_dim\" must be a positive integer");
  const auto space_dim = dim_j.get<std::size_t>();

  const json& sets_j = field(doc, "sets");
  if (!sets_j.is_array() || sets_j.empty())
    throw InvalidInput("family file: \"sets\" must be a nonempty array");

  std::vector<Polytope> sets;
  sets.reserve(sets_j.size());
  for (const json& s : sets_j) {
    if (!s.is_object()) throw InvalidInput("family file: each set must be an object");
    const json& verts_j = field(s, "vertices");
    if (!verts_j.is_array() || verts_j.empty())
      throw InvalidInput("family file: \"vertices\" must be a nonempty array");
    std::vector<Vector> verts;
    verts.reserve(verts_j.size());
    for (const json& v : verts_j) verts.push_back(parse_point(v));
    sets.emplace_back(verts);
  }
  return Family(*kind, space_dim, std::move(sets));
}

Family read_family(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_family(buf.str());
}

std::string format_family(const Family& f) {
  // Keys in schema order, one vertex per line.
  std::string s = "{\n  \"kind\": " + json(std::string(kind_name(f.kind()))).dump() +
                  ",\n  \"space_dim\": " + std::to_string(f.space_dim()) + ",\n  \"sets\": [";
  for (std::size_t i = 0; i < f.size(); ++i) {
    s += i ? ",\n    {\"vertices\": [" : "\n    {\"vertices\": [";
    const Polytope& c = f[i];
    for (std::size_t j = 0; j < c.size(); ++j) {
      s += j ? ",\n      " : "\n      ";
      s += json(c.vertex(j)).dump();
    }
    s += "\n    ]}";
  }
  s += "\n  ]\n}\n";
  return s;
}

void write_family(const Family& f, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path.string());
  out << format_family(f);
  if (!out) throw InvalidInput("write failed for " + path.string());
}

}  // namespace exh
