#include "kei/table_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "kei/error.hpp"

namespace kei {

namespace {

struct Token {
  std::string_view text;
  std::size_t line;
  std::size_t column;
};

// Splits the input into non-blank, non-comment lines of tokens.
std::vector<std::vector<Token>> tokenize(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(pos, end - pos);
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      if (i >= line.size()) break;
      if (tokens.empty() && line[i] == '#') break;
      std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
      tokens.push_back({line.substr(start, i - start), line_no, start + 1});
    }
    if (!tokens.empty()) lines.push_back(std::move(tokens));
    pos = end + 1;
  }
  return lines;
}

std::size_t to_index(const Token& t) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
    throw ParseError(t.line, t.column,
                     "expected a non-negative integer, got '" + std::string(t.text) + "'");
  }
  return value;
}

struct RawTable {
  std::size_t n = 0;
  std::vector<Element> entries;
  std::optional<Element> identity;
};

RawTable parse_raw_text(std::string_view text, bool want_identity,
                        std::size_t max_order) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, 1, "missing element count");
  const auto& header = lines.front();
  if (header.size() != 1)
    throw ParseError(header[1].line, header[1].column, "first line must hold only n");
  RawTable raw;
  raw.n = to_index(header[0]);
  if (raw.n > max_order)
    throw ParseError(header[0].line, header[0].column,
                     "n = " + std::to_string(raw.n) + " exceeds the cap " +
                         std::to_string(max_order));

  const std::size_t expected_lines = 1 + raw.n + (want_identity ? 1 : 0);
  if (lines.size() < 1 + raw.n) {
    const auto& last = lines.back().back();
    throw ParseError(last.line + 1, 1,
                     "expected " + std::to_string(raw.n) + " table rows, found " +
                         std::to_string(lines.size() - 1));
  }
  raw.entries.reserve(raw.n * raw.n);
  for (std::size_t r = 0; r < raw.n; ++r) {
    const auto& row = lines[1 + r];
    if (row.size() != raw.n) {
      const auto& where = row.size() > raw.n ? row[raw.n] : row.back();
      throw ParseError(where.line, row.size() > raw.n ? where.column : where.column + where.text.size(),
                       "row " + std::to_string(r) + " has " + std::to_string(row.size()) +
                           " entries, expected " + std::to_string(raw.n));
    }
    for (const auto& tok : row) {
      std::size_t v = to_index(tok);
      if (v >= raw.n) {
        throw ParseError(tok.line, tok.column,
                         "entry " + std::to_string(v) + " is out of range 0.." +
                             (raw.n == 0 ? std::string("-1") : std::to_string(raw.n - 1)));
      }
      raw.entries.push_back(static_cast<Element>(v));
    }
  }
  if (want_identity) {
    if (lines.size() < expected_lines) {
      const auto& last = lines.back().back();
      throw ParseError(last.line + 1, 1, "missing 'id <index>' line");
    }
    const auto& id_line = lines[1 + raw.n];
    if (id_line.size() != 2 || id_line[0].text != "id")
      throw ParseError(id_line[0].line, id_line[0].column, "expected 'id <index>'");
    std::size_t id = to_index(id_line[1]);
    if (id >= raw.n)
      throw ParseError(id_line[1].line, id_line[1].column, "identity index out of range");
    raw.identity = static_cast<Element>(id);
  }
  if (lines.size() > expected_lines) {
    const auto& extra = lines[expected_lines].front();
    throw ParseError(extra.line, extra.column, "unexpected trailing content");
  }
  return raw;
}

std::pair<std::size_t, std::size_t> line_column_of(std::string_view text,
                                                   std::size_t offset) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

nlohmann::json parse_json_document(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, column] = line_column_of(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError(line, column, "invalid JSON");
  }
}

// Locates the first occurrence of the row/column entry by scanning the text
// for the "table" array. Good enough for diagnostics; falls back to (1,1).
std::pair<std::size_t, std::size_t> locate_entry(std::string_view text,
                                                 std::size_t row, std::size_t col) {
  std::size_t pos = text.find("\"table\"");
  if (pos == std::string_view::npos) return {1, 1};
  pos = text.find('[', pos);
  if (pos == std::string_view::npos) return {1, 1};
  ++pos;
  std::size_t r = 0;
  while (pos < text.size()) {
    pos = text.find('[', pos);
    if (pos == std::string_view::npos) return {1, 1};
    ++pos;
    if (r == row) {
      std::size_t c = 0;
      while (pos < text.size()) {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\n' ||
                                     text[pos] == '\t' || text[pos] == '\r'))
          ++pos;
        if (c == col) return line_column_of(text, pos);
        pos = text.find_first_of(",]", pos);
        if (pos == std::string_view::npos || text[pos] == ']') return {1, 1};
        ++pos;
        ++c;
      }
      return {1, 1};
    }
    pos = text.find(']', pos);
    if (pos == std::string_view::npos) return {1, 1};
    ++pos;
    ++r;
  }
  return {1, 1};
}

RawTable parse_raw_json(std::string_view text, bool want_identity,
                        std::size_t max_order) {
  const auto doc = parse_json_document(text);
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("table"))
    throw ParseError(1, 1, "expected an object with \"n\" and \"table\"");
  if (!doc["n"].is_number_unsigned())
    throw ParseError(1, 1, "\"n\" must be a non-negative integer");
  RawTable raw;
  raw.n = doc["n"].get<std::size_t>();
  if (raw.n > max_order)
    throw ParseError(1, 1, "n = " + std::to_string(raw.n) + " exceeds the cap");
  const auto& table = doc["table"];
  if (!table.is_array() || table.size() != raw.n)
    throw ParseError(1, 1, "\"table\" must hold exactly n rows");
  for (std::size_t r = 0; r < raw.n; ++r) {
    if (!table[r].is_array() || table[r].size() != raw.n) {
      auto [line, column] = locate_entry(text, r, 0);
      throw ParseError(line, column, "row " + std::to_string(r) + " must hold n entries");
    }
    for (std::size_t c = 0; c < raw.n; ++c) {
      const auto& v = table[r][c];
      if (!v.is_number_unsigned() || v.get<std::size_t>() >= raw.n) {
        auto [line, column] = locate_entry(text, r, c);
        throw ParseError(line, column,
                         "table[" + std::to_string(r) + "][" + std::to_string(c) +
                             "] is out of range");
      }
      raw.entries.push_back(v.get<Element>());
    }
  }
  if (want_identity) {
    if (!doc.contains("id") || !doc["id"].is_number_unsigned() ||
        doc["id"].get<std::size_t>() >= raw.n)
      throw ParseError(1, 1, "\"id\" must be an element index");
    raw.identity = doc["id"].get<Element>();
  }
  return raw;
}

bool looks_like_json(std::string_view text) {
  auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string_view::npos && text[pos] == '{';
}

FiniteGroup group_from_raw(RawTable raw) {
  if (raw.n == 0) throw ParseError(1, 1, "a group has at least one element");
  try {
    return FiniteGroup(raw.n, std::move(raw.entries), *raw.identity);
  } catch (const ValidationError& e) {
    throw ParseError(1, 1, e.what());
  }
}

}  // namespace

FiniteQuandle parse_quandle_text(std::string_view text, std::size_t max_order) {
  auto raw = parse_raw_text(text, false, max_order);
  return FiniteQuandle(raw.n, std::move(raw.entries), max_order);
}

FiniteGroup parse_group_text(std::string_view text, std::size_t max_order) {
  return group_from_raw(parse_raw_text(text, true, max_order));
}

FiniteQuandle parse_quandle_json(std::string_view text, std::size_t max_order) {
  auto raw = parse_raw_json(text, false, max_order);
  return FiniteQuandle(raw.n, std::move(raw.entries), max_order);
}

FiniteGroup parse_group_json(std::string_view text, std::size_t max_order) {
  return group_from_raw(parse_raw_json(text, true, max_order));
}

FiniteQuandle parse_quandle(std::string_view text, std::size_t max_order) {
  return looks_like_json(text) ? parse_quandle_json(text, max_order)
                               : parse_quandle_text(text, max_order);
}

FiniteGroup parse_group(std::string_view text, std::size_t max_order) {
  return looks_like_json(text) ? parse_group_json(text, max_order)
                               : parse_group_text(text, max_order);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string to_text(const FiniteQuandle& q) {
  std::ostringstream out;
  out << q.size() << '\n';
  for (Element x = 0; x < q.size(); ++x) {
    auto row = q.row(x);
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << '\n';
  }
  return out.str();
}

std::string to_text(const FiniteGroup& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = 0; b < g.order(); ++b) out << (b ? " " : "") << g.mul(a, b);
    out << '\n';
  }
  out << "id " << g.identity() << '\n';
  return out.str();
}

nlohmann::json to_json(const FiniteQuandle& q) {
  auto rows = nlohmann::json::array();
  for (Element x = 0; x < q.size(); ++x) {
    auto row = q.row(x);
    rows.push_back(std::vector<Element>(row.begin(), row.end()));
  }
  return {{"n", q.size()}, {"table", std::move(rows)}};
}

nlohmann::json to_json(const FiniteGroup& g) {
  auto rows = nlohmann::json::array();
  for (Element a = 0; a < g.order(); ++a) {
    auto row = g.table().subspan(static_cast<std::size_t>(a) * g.order(), g.order());
    rows.push_back(std::vector<Element>(row.begin(), row.end()));
  }
  return {{"n", g.order()}, {"table", std::move(rows)}, {"id", g.identity()}};
}

}  // namespace kei
