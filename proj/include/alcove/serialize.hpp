#pragma once

// JSON round-trips for datum specs and report types, DOT export for the
// quantum Bruhat graph, and an on-disk cache of enumerated Weyl groups.
//
// All output is deterministic byte for byte: object keys are emitted in a
// fixed order and element lists keep the (length, word) order used
// everywhere else. The cache file is keyed by a content hash of the datum
// spec; a file whose recorded hash disagrees is ignored and rebuilt.

#include <optional>
#include <string>
#include <utility>

#include "json.hpp"

#include "alcove/fibers.hpp"
#include "alcove/irreducibility.hpp"
#include "alcove/qbg.hpp"

namespace alcove {

using json = nlohmann::ordered_json;

// --- datum specs ---
json datum_to_json(const CartanSpec& cs, const LatticeSpec& ls);
std::pair<CartanSpec, LatticeSpec> datum_from_json(const json& j);
std::string datum_hash(const CartanSpec& cs, const LatticeSpec& ls);  // 16 hex digits

// --- elements ---
// Inverse of aff_to_string: canonical affine word, then an optional
// "@[a,b,...]" length-zero part named by its translation coordinates.
AffineElement aff_from_string(const RootDatum& rd, const std::string& s);

// --- reports ---
json report_to_json(const RootDatum& rd, const ComponentReport& r);
json fiber_to_json(const FiberDescriptor& d);
json classify_to_json(const std::vector<ClassifyRow>& rows);
ComponentReport report_from_json(const json& j);
FiberDescriptor fiber_from_json(const RootDatum& rd, const json& j);
std::vector<ClassifyRow> classify_from_json(const json& j);

// --- DOT ---
std::string qbg_to_dot(const QBG& graph);

// --- cache ---
// Load the enumerated group from cache_dir if a file with a matching content
// hash exists, otherwise enumerate and write the file. Returns whether the
// cache was hit. Pass an empty dir to skip caching entirely.
WeylGroup cached_weyl_group(const RootDatum& rd, const std::string& cache_dir,
                            bool* hit = nullptr);
std::string cache_path(const RootDatum& rd, const std::string& cache_dir);

}  // namespace alcove
