#pragma once

#include <filesystem>

#include <json.hpp>

#include "adsvol/surface.hpp"

// Representation files: {"genus": int, "generators": [[[a, b], [c, d]], ...]}
// with 2g row-major matrices in the order a_1, b_1, ..., a_g, b_g.
namespace adsvol::surface {

/// Largest |det - 1| accepted when reading.
inline constexpr double kDeterminantTolerance = 1e-6;

nlohmann::json to_json(const Representation &rep);
/// Throws InputError on schema violations or |det - 1| > kDeterminantTolerance.
Representation representation_from_json(const nlohmann::json &j);

/// Throws IoError if the file cannot be written.
void write_representation(const Representation &rep, const std::filesystem::path &path);
/// Throws IoError if the file cannot be read, InputError if it is malformed.
Representation read_representation(const std::filesystem::path &path);

} // namespace adsvol::surface
