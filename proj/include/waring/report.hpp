#pragma once

#include <string>

#include <json.hpp>

#include "waring/certify.hpp"
#include "waring/hilbert.hpp"
#include "waring/kruskal.hpp"
#include "waring/point_file.hpp"
#include "waring/terracini.hpp"

namespace waring {

using Json = nlohmann::ordered_json;

Json to_json(const HilbertProfile& profile);
Json to_json(const KruskalReport& report);
Json to_json(const TerraciniReport& report);
Json to_json(const Diagnostics& diagnostics);
Json to_json(const Certificate& cert);
Json to_json(const GenericInfo& info);

/// Echo of the input: label, n, canonical coordinates and a digest.
Json input_json(const PointSetDocument& doc, const PointSet& points);

/// FNV-1a 64-bit hash of the canonical coordinates, as "fnv1a64:<hex>".
std::string input_digest(const PointSet& points);

}  // namespace waring
