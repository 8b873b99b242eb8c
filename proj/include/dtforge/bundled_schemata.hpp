#pragma once

#include <filesystem>
#include <span>
#include <string_view>

#include "dtforge/identifier.hpp"

namespace dtforge::bundled {

/// One schema document of the compiled-in catalogue, in the same JSON format
/// the static bundle directory and the registry endpoints use.
struct BundledDocument {
  std::string_view suffix;
  std::string_view constructor_name;
  std::string_view text;
};

std::span<const BundledDocument> documents();
const BundledDocument* find_by_suffix(std::string_view suffix);
const BundledDocument* find_by_constructor(std::string_view constructor);

/// All bundled types live in the ePIC handle prefix.
SchemaId id_of(const BundledDocument& doc);

/// The analytic schemata plus the overarching data_analysis type.
std::span<const std::string_view> analysis_constructors();

/// Writes every bundled document as <suffix>.json, the layout --bundle-dir
/// and the registry mock expect.
void export_to_directory(const std::filesystem::path& dir);

}  // namespace dtforge::bundled
