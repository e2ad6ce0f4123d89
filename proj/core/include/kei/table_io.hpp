#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "kei/finite_group.hpp"
#include "kei/finite_quandle.hpp"

namespace kei {

// Text format: line 1 holds n, the next n lines hold n space-separated
// 0-based entries (row i is λ_i). Group tables add a trailing `id <index>`
// line. Blank lines and lines starting with '#' are ignored.
//
// JSON mirror: {"n": 3, "table": [[...], ...]} with an extra "id" field for
// groups.
//
// All parsers throw ParseError carrying the 1-based line and column of the
// offending token; for JSON tables the position of the offending entry in
// the source text is reported.

FiniteQuandle parse_quandle_text(std::string_view text,
                                 std::size_t max_order = Limits{}.max_order);
FiniteGroup parse_group_text(std::string_view text,
                             std::size_t max_order = Limits{}.max_order);

FiniteQuandle parse_quandle_json(std::string_view text,
                                 std::size_t max_order = Limits{}.max_order);
FiniteGroup parse_group_json(std::string_view text,
                             std::size_t max_order = Limits{}.max_order);

/// Dispatches on the first non-blank character: '{' selects JSON.
FiniteQuandle parse_quandle(std::string_view text,
                            std::size_t max_order = Limits{}.max_order);
FiniteGroup parse_group(std::string_view text,
                        std::size_t max_order = Limits{}.max_order);

/// Reads a whole file; throws Error if it cannot be opened.
std::string read_file(const std::filesystem::path& path);

std::string to_text(const FiniteQuandle& q);
std::string to_text(const FiniteGroup& g);
nlohmann::json to_json(const FiniteQuandle& q);
nlohmann::json to_json(const FiniteGroup& g);

}  // namespace kei
