#include "ringfill/io.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace ringfill {

namespace {

Json rational_pair(const Rational& r) { return Json::array({r.get_num().get_str(), r.get_den().get_str()}); }

BigInt big_from_json(const Json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>(), 10);
  if (j.is_number_integer()) return BigInt(j.get<long>());
  throw std::invalid_argument("expected an integer or decimal string");
}

template <class T>
T require(const Json& j, const char* key) {
  if (!j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  return j.at(key).get<T>();
}

}  // namespace

Json to_json(const Triangulation& t) {
  Json j;
  j["n"] = t.boundary_length();
  Json vertices = Json::array();
  for (VertexId v = 0; v < t.vertex_count(); ++v) {
    const auto& info = t.vertex(v);
    Json rec;
    rec["id"] = v;
    rec["layer"] = info.layer;
    rec["index_in_layer"] = info.index_in_layer;
    if (auto theta = t.theta(v)) {
      rec["theta_num"] = theta->get_num().get_str();
      rec["theta_den"] = theta->get_den().get_str();
    } else {
      rec["theta_num"] = nullptr;
      rec["theta_den"] = nullptr;
    }
    vertices.push_back(std::move(rec));
  }
  j["vertices"] = std::move(vertices);
  Json tris = Json::array();
  for (const auto& tri : t.triangles()) tris.push_back({tri.v[0], tri.v[1], tri.v[2]});
  j["triangles"] = std::move(tris);
  return j;
}

Triangulation triangulation_from_json(const Json& j) {
  try {
    const auto n = require<std::uint32_t>(j, "n");
    const auto& verts = j.at("vertices");
    std::vector<VertexInfo> vertices(verts.size());
    std::vector<LayerInfo> layers;
    // Phase of a layer is the theta of its index-0 vertex.
    for (const auto& rec : verts) {
      const auto id = require<std::size_t>(rec, "id");
      if (id >= vertices.size()) throw std::invalid_argument("vertex id out of range");
      VertexInfo info{require<std::uint32_t>(rec, "layer"), require<std::uint32_t>(rec, "index_in_layer")};
      vertices[id] = info;
      if (info.layer >= layers.size()) layers.resize(info.layer + 1);
      auto& layer = layers[info.layer];
      layer.size = std::max(layer.size, info.index_in_layer + 1);
      const bool phased = rec.contains("theta_num") && !rec.at("theta_num").is_null();
      if (phased && info.index_in_layer == 0) {
        Rational theta(big_from_json(rec.at("theta_num")), big_from_json(rec.at("theta_den")));
        theta.canonicalize();
        layer.phase = theta;
      }
    }
    std::vector<Triangle> triangles;
    for (const auto& tri : j.at("triangles")) {
      if (!tri.is_array() || tri.size() != 3) throw std::invalid_argument("triangle must have 3 vertices");
      triangles.emplace_back(tri[0].get<VertexId>(), tri[1].get<VertexId>(), tri[2].get<VertexId>());
    }
    Triangulation t(n, std::move(vertices), std::move(layers), std::move(triangles));
    // Every stated theta must agree with the reconstructed layer phase.
    for (const auto& rec : verts) {
      if (!rec.contains("theta_num") || rec.at("theta_num").is_null()) continue;
      Rational theta(big_from_json(rec.at("theta_num")), big_from_json(rec.at("theta_den")));
      theta.canonicalize();
      const auto expected = t.theta(rec.at("id").get<VertexId>());
      if (!expected || *expected != theta) throw std::invalid_argument("theta inconsistent with layer phase");
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed triangulation JSON: ") + e.what());
  }
}

Json to_json(const Schedule& s) {
  Json j;
  j["n"] = s.n;
  j["rho"] = to_string(s.rho);
  j["eta"] = to_string(s.eta);
  j["w"] = s.collar_width;
  j["B"] = s.block_count;
  j["t_eta"] = to_string(s.t_eta);
  j["delta_n"] = to_string(s.block_width);
  Json t = Json::array();
  for (const auto& tb : s.block_start) t.push_back(to_string(tb));
  j["t_b"] = std::move(t);
  j["M_b"] = s.cycle_length;
  j["L_b"] = s.block_layers;
  return j;
}

Json to_json(const LayerLedger& ledger) {
  Json out = Json::array();
  for (const auto& rec : ledger.layers()) {
    Json j;
    j["r"] = rec.r;
    j["m"] = rec.length;
    j["phase"] = rational_pair(rec.phase.value());
    j["first"] = rec.first;
    j["kind"] = std::string(to_string(rec.kind));
    j["b"] = rec.drift_bound ? rational_pair(*rec.drift_bound) : Json(nullptr);
    out.push_back(std::move(j));
  }
  return out;
}

Json to_json(const BuildResult& b) {
  Json j = to_json(b.complex);
  Json params;
  params["n"] = b.params.n;
  params["rho"] = to_string(b.params.rho);
  params["eta"] = to_string(b.params.eta);
  j["params"] = std::move(params);
  j["schedule"] = to_json(b.schedule);
  j["ledger"] = to_json(b.ledger);
  j["apex"] = b.apex;
  j["predicted_vertex_count"] = b.predicted_vertex_count;
  j["predicted_triangle_count"] = b.predicted_triangle_count;
  return j;
}

std::optional<Params> params_from_json(const Json& j) {
  if (!j.contains("params")) return std::nullopt;
  const auto& p = j.at("params");
  const auto rational = [&](const char* key) {
    Rational r(p.at(key).get<std::string>(), 10);
    r.canonicalize();
    return r;
  };
  return Params{p.at("n").get<std::uint32_t>(), rational("rho"), rational("eta")};
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["n"] = r.n;
  j["delta_num"] = r.delta_num;
  j["delta_den"] = r.delta_den;
  j["is_isometric"] = r.is_isometric;
  Json worst;
  worst["x"] = r.worst_pair.x;
  worst["y"] = r.worst_pair.y;
  worst["d_k"] = r.worst_pair.d_k;
  worst["d_c"] = r.worst_pair.d_c;
  j["worst_pair"] = std::move(worst);
  j["eps_n"] = r.eps_n ? Json(*r.eps_n) : Json(nullptr);
  return j;
}

Json to_json(const DriftAudit& a) {
  Json j;
  j["ok"] = a.ok();
  j["violations"] = a.violations;
  Json annuli = Json::array();
  for (const auto& x : a.annuli) {
    Json rec;
    rec["r"] = x.r;
    rec["kind"] = std::string(to_string(x.kind));
    rec["bound"] = to_string(x.bound);
    rec["max"] = to_string(x.max_displacement);
    rec["min"] = to_string(x.min_displacement);
    rec["slanted_edges"] = x.slanted_edges;
    rec["ok"] = x.ok;
    annuli.push_back(std::move(rec));
  }
  j["annuli"] = std::move(annuli);
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump() << "\n";
}

MeshFormat parse_mesh_format(std::string_view name) {
  if (name == "off") return MeshFormat::off;
  if (name == "obj") return MeshFormat::obj;
  throw std::invalid_argument("unknown mesh format '" + std::string(name) + "' (expected off or obj)");
}

void write_mesh(std::ostream& out, const Triangulation& t, MeshFormat format) {
  std::uint32_t deepest = 0;
  for (const auto& v : t.vertices()) deepest = std::max(deepest, v.layer);
  const double n = t.boundary_length();
  const auto layers = t.layers();

  const auto position = [&](VertexId v) -> std::pair<double, double> {
    const auto& info = t.vertex(v);
    const auto& layer = layers[info.layer];
    const auto theta = t.theta(v);
    if (!theta && layer.size == 1) return {0.0, 0.0};
    const double radius = static_cast<double>(deepest + 1 - info.layer) / (deepest + 1);
    const double turn = theta ? theta->get_d() / n : static_cast<double>(info.index_in_layer) / layer.size;
    const double angle = 2.0 * std::numbers::pi * turn;
    return {radius * std::cos(angle), radius * std::sin(angle)};
  };

  if (format == MeshFormat::off) {
    out << "OFF\n" << t.vertex_count() << ' ' << t.triangle_count() << " 0\n";
  } else {
    out << "# ringfill filling of C_" << t.boundary_length() << "\n";
  }
  for (VertexId v = 0; v < t.vertex_count(); ++v) {
    const auto [x, y] = position(v);
    if (format == MeshFormat::obj) out << "v ";
    out << format_double(x) << ' ' << format_double(y) << " 0\n";
  }
  for (const auto& tri : t.triangles()) {
    if (format == MeshFormat::off) {
      out << "3 " << tri.v[0] << ' ' << tri.v[1] << ' ' << tri.v[2] << "\n";
    } else {
      out << "f " << tri.v[0] + 1 << ' ' << tri.v[1] + 1 << ' ' << tri.v[2] + 1 << "\n";
    }
  }
}

}  // namespace ringfill
