#include "frobspec/catalog.hpp"

#include "frobspec/errors.hpp"

#include <fstream>
#include <sstream>

namespace frobspec {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

} // namespace

std::vector<CatalogEntry> parse_catalog(const std::string& text) {
    std::vector<CatalogEntry> entries;
    std::size_t lineno = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields = split(line, '\t');
        if (fields.size() != 4)
            throw ParseError(lineno, "catalog line needs 4 tab-separated fields");
        CatalogEntry e;
        e.id = fields[0];
        e.spec = fields[1];
        if (e.id.empty() || e.spec.empty())
            throw ParseError(lineno, "catalog id and spec must be nonempty");
        try {
            std::size_t used = 0;
            e.order = std::stoull(fields[2], &used);
            if (used != fields[2].size()) throw std::invalid_argument("trail");
        } catch (const std::exception&) {
            throw ParseError(lineno, "catalog order is not a number: " + fields[2]);
        }
        if (!fields[3].empty()) {
            for (const std::string& kv : split(fields[3], ',')) {
                std::size_t eq = kv.find('=');
                if (eq == std::string::npos || eq == 0)
                    throw ParseError(lineno, "catalog tag is not key=value: " + kv);
                e.tags[kv.substr(0, eq)] = kv.substr(eq + 1);
            }
        }
        entries.push_back(std::move(e));
    }
    return entries;
}

std::string render_catalog(const std::vector<CatalogEntry>& entries) {
    std::ostringstream out;
    for (const CatalogEntry& e : entries) {
        out << e.id << '\t' << e.spec << '\t' << e.order << '\t';
        bool first = true;
        for (const auto& [k, v] : e.tags) {
            if (!first) out << ',';
            out << k << '=' << v;
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

std::vector<CatalogEntry> load_catalog_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot open catalog file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_catalog(buf.str());
}

void write_catalog_file(const std::string& path,
                        const std::vector<CatalogEntry>& entries) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("cannot write catalog file: " + path);
    out << render_catalog(entries);
    if (!out) throw DomainError("catalog write failed: " + path);
}

} // namespace frobspec
