#pragma once

#include <charconv>
#include <cstdlib>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cavmode/errors.hpp"

namespace cavmode {

/// Shortest decimal representation that round-trips to the same double.
inline std::string format_double(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    if (ec != std::errc{})
        throw Error("format_double: conversion failed");
    return std::string(buf, ptr);
}

inline double parse_double(std::string_view s) {
    // std::from_chars(double) is incomplete on some libstdc++ builds; strtod
    // accepts the same grammar and more, which is fine for file input.
    std::string tmp(s);
    char* end = nullptr;
    const double v = std::strtod(tmp.c_str(), &end);
    if (end == tmp.c_str())
        throw DomainError("could not parse number: '" + tmp + "'");
    return v;
}

/// A CSV file with an optional block of `# key=value` sidecar lines before
/// the header row.
struct CsvTable {
    std::map<std::string, std::string> sidecar;
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    double sidecar_number(const std::string& key) const {
        auto it = sidecar.find(key);
        if (it == sidecar.end())
            throw DomainError("missing sidecar key '" + key + "'");
        return parse_double(it->second);
    }
    bool has_sidecar(const std::string& key) const {
        return sidecar.count(key) != 0;
    }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

inline std::vector<std::string> split_csv(std::string_view line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == ',') {
            out.emplace_back(trim(line.substr(start, i - start)));
            start = i + 1;
        }
    }
    return out;
}

} // namespace detail

/// Parses a sidecar-annotated CSV stream.
inline CsvTable read_csv(std::istream& in) {
    CsvTable table;
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        std::string_view v = detail::trim(line);
        if (v.empty())
            continue;
        if (v.front() == '#') {
            v.remove_prefix(1);
            v = detail::trim(v);
            const auto eq = v.find('=');
            if (eq != std::string_view::npos) {
                std::string key(detail::trim(v.substr(0, eq)));
                std::string value(detail::trim(v.substr(eq + 1)));
                table.sidecar[key] = value;
            }
            continue;
        }
        if (!have_header) {
            for (auto& name : detail::split_csv(v))
                table.header.push_back(name);
            have_header = true;
            continue;
        }
        const auto fields = detail::split_csv(v);
        if (fields.size() != table.header.size())
            throw DomainError("CSV row has " + std::to_string(fields.size()) +
                              " fields, expected " + std::to_string(table.header.size()));
        std::vector<double> row;
        row.reserve(fields.size());
        for (const auto& f : fields)
            row.push_back(parse_double(f));
        table.rows.push_back(std::move(row));
    }
    if (!have_header)
        throw DomainError("CSV stream has no header row");
    return table;
}

} // namespace cavmode
