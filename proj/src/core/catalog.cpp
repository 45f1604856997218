#include "osaas/core/catalog.hpp"

#include <fstream>
#include <set>

#include "osaas/core/errors.hpp"

namespace osaas {

using nlohmann::json;

json to_json(const PltConfig& c) {
    return json{{"format", format_name(c.format)},
                {"symbol_rate_gbd", c.symbol_rate_gbd},
                {"roll_off", c.roll_off},
                {"line_rate_gbps", c.line_rate_gbps},
                {"required_gsnr_db", c.required_gsnr_db},
                {"fec_threshold_ber", c.fec_threshold_ber}};
}

PltConfig config_from_json(const json& j) {
    try {
        PltConfig c;
        c.format = parse_format(j.at("format").get<std::string>());
        c.symbol_rate_gbd = j.at("symbol_rate_gbd").get<double>();
        c.roll_off = j.value("roll_off", kDefaultRollOff);
        c.line_rate_gbps = j.at("line_rate_gbps").get<double>();
        c.required_gsnr_db = j.at("required_gsnr_db").get<double>();
        c.fec_threshold_ber = j.value("fec_threshold_ber", kDefaultFecThreshold);
        c.validate();
        return c;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("malformed catalog record: ") + e.what());
    }
}

json catalog_to_json(const Catalog& catalog) {
    json arr = json::array();
    for (const auto& c : catalog) arr.push_back(to_json(c));
    return arr;
}

Catalog catalog_from_json(const json& j) {
    if (!j.is_array()) throw ConfigError("catalog must be a JSON array");
    Catalog out;
    std::set<std::string> ids;
    for (const auto& rec : j) {
        out.push_back(config_from_json(rec));
        if (!ids.insert(out.back().id()).second) throw ConfigError("duplicate catalog entry " + out.back().id());
    }
    return out;
}

Catalog load_catalog(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open catalog " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError("catalog " + path.string() + ": " + e.what());
    }
    return catalog_from_json(j);
}

void save_catalog(const Catalog& catalog, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write " + path.string());
    out << catalog_to_json(catalog).dump(2) << '\n';
}

const PltConfig& find_config(const Catalog& catalog, const std::string& id) {
    for (const auto& c : catalog) {
        if (c.id() == id) return c;
    }
    throw ConfigError("config " + id + " not in catalog");
}

}  // namespace osaas
