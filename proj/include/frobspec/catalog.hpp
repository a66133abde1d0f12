#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace frobspec {

struct CatalogEntry {
    std::string id;
    std::string spec;
    std::uint64_t order = 0;
    std::map<std::string, std::string> tags; // key=value pairs, e.g. family=D
};

/// Parse TSV text: one entry per line, four tab-separated fields
/// (id, spec, order, comma-separated key=value tags). Blank lines and
/// lines starting with '#' are skipped. Throws ParseError on bad rows.
std::vector<CatalogEntry> parse_catalog(const std::string& text);

std::string render_catalog(const std::vector<CatalogEntry>& entries);

std::vector<CatalogEntry> load_catalog_file(const std::string& path);
void write_catalog_file(const std::string& path,
                        const std::vector<CatalogEntry>& entries);

/// The built-in corpus of small groups used by the scan commands.
const std::vector<CatalogEntry>& load_catalog();

} // namespace frobspec
