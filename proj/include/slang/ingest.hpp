#pragma once

#include <filesystem>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "slang/records.hpp"
#include "slang/util.hpp"

namespace slang::ingest {

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

enum class DumpFormat { line_delimited, tabular };

inline DumpFormat parse_format(std::string_view name) {
    if (name == "line-delimited" || name == "jsonl") return DumpFormat::line_delimited;
    if (name == "tabular" || name == "tsv") return DumpFormat::tabular;
    throw ConfigError("unknown dump format: " + std::string(name));
}

// A malformed input line: recorded, never fatal.
struct ParseError {
    size_t line_no = 0;  // 1-based
    std::string reason;
};

struct ParseResult {
    std::vector<RawEntry> entries;
    std::vector<ParseError> errors;
};

namespace detail {

// Validates invariants shared by both input formats. Returns the reason a
// candidate entry is rejected, or empty when it is well-formed.
inline std::string validate(RawEntry& e) {
    e.phrase = util::trim(e.phrase);
    if (e.phrase.empty()) return "missing phrase";
    if (util::trim(e.definition).empty()) return "missing definition";
    if (e.upvotes < 0) return "negative upvotes";
    if (e.downvotes < 0) return "negative downvotes";
    return {};
}

inline void parse_jsonl_line(const std::string& line, size_t line_no, ParseResult& out) {
    if (util::trim(line).empty()) {
        out.errors.push_back({line_no, "empty line"});
        return;
    }
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded()) {
        out.errors.push_back({line_no, "invalid JSON"});
        return;
    }
    for (const char* field : {"phrase", "definition", "upvotes", "downvotes", "added_date"}) {
        if (!j.contains(field)) {
            out.errors.push_back({line_no, std::string("missing ") + field});
            return;
        }
    }
    RawEntry e;
    try {
        e = j.get<RawEntry>();
    } catch (const std::exception& ex) {
        out.errors.push_back({line_no, ex.what()});
        return;
    }
    if (auto reason = validate(e); !reason.empty()) {
        out.errors.push_back({line_no, reason});
        return;
    }
    out.entries.push_back(std::move(e));
}

inline std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> cells;
    size_t start = 0;
    for (;;) {
        size_t tab = line.find('\t', start);
        if (tab == std::string::npos) {
            cells.push_back(line.substr(start));
            break;
        }
        cells.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
    return cells;
}

}  // namespace detail

// Parses a raw dictionary dump. Malformed lines become ParseErrors; the
// stream is always consumed to the end.
inline ParseResult parse_dump(std::istream& in, DumpFormat format) {
    if (!in.good()) throw IoError("input stream not readable");
    ParseResult out;
    std::string line;
    size_t line_no = 0;

    if (format == DumpFormat::line_delimited) {
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            detail::parse_jsonl_line(line, line_no, out);
        }
        return out;
    }

    // Tabular: first line is a header naming the columns.
    std::unordered_map<std::string, size_t> columns;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line_no == 1) {
            auto cells = detail::split_tabs(line);
            for (size_t i = 0; i < cells.size(); ++i) columns[util::trim(cells[i])] = i;
            for (const char* field : {"phrase", "definition", "upvotes", "downvotes", "added_date"}) {
                if (!columns.count(field))
                    throw ConfigError(std::string("tabular header missing column: ") + field);
            }
            continue;
        }
        if (util::trim(line).empty()) {
            out.errors.push_back({line_no, "empty line"});
            continue;
        }
        auto cells = detail::split_tabs(line);
        auto cell = [&](const char* name) -> std::string {
            auto it = columns.find(name);
            if (it == columns.end() || it->second >= cells.size()) return {};
            return cells[it->second];
        };
        RawEntry e;
        e.phrase = cell("phrase");
        e.definition = cell("definition");
        e.example = cell("example");
        e.source_id = cell("source_id");
        try {
            e.upvotes = std::stol(cell("upvotes"));
            e.downvotes = std::stol(cell("downvotes"));
        } catch (const std::exception&) {
            out.errors.push_back({line_no, "invalid vote count"});
            continue;
        }
        auto date = util::parse_iso_date(cell("added_date"));
        if (!date) {
            out.errors.push_back({line_no, "invalid added_date"});
            continue;
        }
        e.added_date = *date;
        if (auto reason = detail::validate(e); !reason.empty()) {
            out.errors.push_back({line_no, reason});
            continue;
        }
        out.entries.push_back(std::move(e));
    }
    return out;
}

inline ParseResult parse_dump_file(const std::filesystem::path& path, DumpFormat format) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    return parse_dump(in, format);
}

// Writes records in the canonical line-delimited format (one JSON object per
// line). Round-trips losslessly: embedded newlines are escaped by JSON.
template <typename Record>
size_t write_dataset(const std::vector<Record>& records, std::ostream& out) {
    for (const auto& r : records) {
        nlohmann::json j = r;
        out << j.dump() << '\n';
        if (!out) throw IoError("write failed");
    }
    return records.size();
}

template <typename Record>
size_t write_dataset(const std::vector<Record>& records, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    size_t n = write_dataset(records, out);
    out.flush();
    if (!out) throw IoError("write failed: " + path.string());
    return n;
}

// Strict loader for datasets this toolbox wrote itself (any malformed line
// is a hard error, unlike parse_dump).
template <typename Record>
std::vector<Record> load_dataset(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    std::vector<Record> out;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (util::trim(line).empty()) continue;
        try {
            out.push_back(nlohmann::json::parse(line).get<Record>());
        } catch (const std::exception& ex) {
            throw IoError(path.string() + ":" + std::to_string(line_no) + ": " + ex.what());
        }
    }
    return out;
}

}  // namespace slang::ingest
