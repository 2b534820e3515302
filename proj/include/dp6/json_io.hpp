#pragma once

// JSON schemas of the external interfaces: classifier inputs, classification
// reports, type tables and quiver-module serialization.  Rationals appear as
// bare integers when integral and as "p/q" strings otherwise; reports use
// insertion-ordered JSON so identical inputs give byte-identical output.

#include <json.hpp>
#include <string>

#include "dp6/auslander.hpp"
#include "dp6/classify.hpp"
#include "dp6/sod.hpp"

namespace dp6::io {

using OrderedJson = nlohmann::ordered_json;

// --- rationals -------------------------------------------------------------

OrderedJson rat_to_json(const Rat& q);
Rat rat_from_json(const nlohmann::json& j);  // throws ParseError

// --- classifier inputs -----------------------------------------------------

classify::BilinearPencil parse_pencil(const nlohmann::json& j);
classify::Tensor222 parse_tensor(const nlohmann::json& j);
classify::PointConfigP2 parse_blowup_p2(const nlohmann::json& j);
classify::ConfigP1P1 parse_blowup_p1p1(const nlohmann::json& j);

// --- outputs ---------------------------------------------------------------

OrderedJson report_to_json(const classify::ClassificationReport& r);
std::string report_to_table(const classify::ClassificationReport& r);

// One row of the type tables (delta set, singularities, blocks, Z-schemes).
OrderedJson type_row_json(const surface::DP6Type& t);
std::string type_table_text(const std::vector<int>& type_ids);

// Divisor classes serialize as [a, b1, b2, b3].
OrderedJson divisor_to_json(const lattice::DivisorClass& d);
lattice::DivisorClass divisor_from_json(const nlohmann::json& j);

// {dim: [...], alpha: [matrices], beta: [matrices]}, entries as rationals.
OrderedJson module_to_json(const auslander::QuiverModule& m);
auslander::QuiverModule module_from_json(const nlohmann::json& j);

OrderedJson gram_to_json(const sod::GramMatrix& g);

// FNV-1a digest of raw bytes, as fixed-width hex.
std::string digest(const std::string& bytes);

// Top-level run report wrapper: {command, input_digest, versions, results}.
OrderedJson run_report(const std::string& command, const std::string& input_digest,
                       OrderedJson results);

inline constexpr const char* kVersion = "0.1.0";

}  // namespace dp6::io
