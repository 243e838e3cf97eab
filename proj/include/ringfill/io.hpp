#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ringfill/analysis.hpp"
#include "ringfill/filling.hpp"
#include "ringfill/triangulation.hpp"
#include "ringfill/verifier.hpp"

namespace ringfill {

using Json = nlohmann::ordered_json;

/// {"n", "vertices": [{"id","layer","index_in_layer","theta_num","theta_den"}],
///  "triangles": [[a,b,c], ...]}. Theta numerator/denominator are decimal
/// strings (they outgrow 64 bits), or null for vertices off every cycle.
Json to_json(const Triangulation& t);
/// Throws std::invalid_argument on malformed input.
Triangulation triangulation_from_json(const Json& j);

Json to_json(const Schedule& s);
Json to_json(const LayerLedger& ledger);
/// Triangulation fields plus "params", "schedule", "ledger", "apex" and the
/// predicted counts.
Json to_json(const BuildResult& b);
/// The "params" object of a build file, if present.
std::optional<Params> params_from_json(const Json& j);

Json to_json(const VerificationReport& r);
Json to_json(const DriftAudit& a);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

enum class MeshFormat { off, obj };
/// Throws std::invalid_argument for anything but "off" or "obj".
MeshFormat parse_mesh_format(std::string_view name);

/// Planar embedding for inspection: layer r at radius (R + 1 - r)/(R + 1)
/// with R the deepest layer, angle 2 pi theta / n; a lone unphased vertex
/// in a layer sits at the origin.
void write_mesh(std::ostream& out, const Triangulation& t, MeshFormat format);

}  // namespace ringfill
