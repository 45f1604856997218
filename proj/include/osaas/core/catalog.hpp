#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "osaas/core/types.hpp"

namespace osaas {

using Catalog = std::vector<PltConfig>;

nlohmann::json to_json(const PltConfig& c);
PltConfig config_from_json(const nlohmann::json& j);

nlohmann::json catalog_to_json(const Catalog& catalog);
// Validates every record; throws ConfigError on malformed input or duplicate ids.
Catalog catalog_from_json(const nlohmann::json& j);
Catalog load_catalog(const std::filesystem::path& path);
void save_catalog(const Catalog& catalog, const std::filesystem::path& path);

// Throws ConfigError when `id` is not in the catalog.
const PltConfig& find_config(const Catalog& catalog, const std::string& id);

}  // namespace osaas
