#include "nonolab/puzzle_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace nonolab {

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  // A trailing newline does not start another line.
  if (!lines.empty() && lines.back().empty() && !text.empty() && text.back() == '\n') {
    lines.pop_back();
  }
  return lines;
}

namespace {

std::vector<int> parse_ints(std::string_view line) {
  std::vector<int> values;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i])) || line[i] == ',') {
      ++i;
      continue;
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc{} || ptr == line.data() + i) {
      throw FormatError("expected an integer in '" + std::string(line) + "'");
    }
    values.push_back(value);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  return values;
}

}  // namespace

Description parse_description(std::string_view line) {
  try {
    return Description(parse_ints(line));
  } catch (const BoardError& e) {
    throw FormatError(e.what());
  }
}

std::string format_description(const Description& d) {
  std::string out;
  for (std::size_t i = 0; i < d.runs().size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(d.runs()[i]);
  }
  return out;
}

Puzzle parse_puzzle_lines(const std::vector<std::string>& lines, std::size_t& pos) {
  if (pos >= lines.size()) throw FormatError("missing puzzle header");
  auto header = parse_ints(lines[pos]);
  if (header.size() != 2 || header[0] < 1 || header[1] < 1) {
    throw FormatError("puzzle header must be 'm n' with positive dimensions, got '" + lines[pos] +
                      "'");
  }
  ++pos;
  const auto m = static_cast<std::size_t>(header[0]);
  const auto n = static_cast<std::size_t>(header[1]);
  if (lines.size() - pos < m + n) {
    throw FormatError("expected " + std::to_string(m + n) + " description lines, found " +
                      std::to_string(lines.size() - pos));
  }
  std::vector<Description> rows;
  std::vector<Description> cols;
  for (std::size_t i = 0; i < m; ++i) rows.push_back(parse_description(lines[pos++]));
  for (std::size_t i = 0; i < n; ++i) cols.push_back(parse_description(lines[pos++]));
  try {
    return Puzzle(header[0], header[1], std::move(rows), std::move(cols));
  } catch (const BoardError& e) {
    throw FormatError(e.what());
  }
}

Puzzle parse_puzzle_text(std::string_view text) {
  auto lines = split_lines(text);
  std::size_t pos = 0;
  Puzzle puzzle = parse_puzzle_lines(lines, pos);
  for (; pos < lines.size(); ++pos) {
    if (!lines[pos].empty()) throw FormatError("trailing content after puzzle: '" + lines[pos] + "'");
  }
  return puzzle;
}

std::string format_puzzle_text(const Puzzle& puzzle) {
  std::ostringstream out;
  out << puzzle.rows() << ' ' << puzzle.cols() << '\n';
  for (const auto& d : puzzle.row_descriptions()) out << format_description(d) << '\n';
  for (const auto& d : puzzle.col_descriptions()) out << format_description(d) << '\n';
  return out.str();
}

Puzzle puzzle_from_json(const nlohmann::json& doc) {
  try {
    auto read = [](const nlohmann::json& arr) {
      std::vector<Description> out;
      for (const auto& runs : arr) out.emplace_back(runs.get<std::vector<int>>());
      return out;
    };
    return Puzzle(doc.at("m").get<int>(), doc.at("n").get<int>(), read(doc.at("rows")),
                  read(doc.at("cols")));
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad puzzle document: ") + e.what());
  } catch (const BoardError& e) {
    throw FormatError(e.what());
  }
}

nlohmann::json puzzle_to_json(const Puzzle& puzzle) {
  auto write = [](const std::vector<Description>& descs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& d : descs) arr.push_back(d.runs());
    return arr;
  };
  return {{"m", puzzle.rows()},
          {"n", puzzle.cols()},
          {"rows", write(puzzle.row_descriptions())},
          {"cols", write(puzzle.col_descriptions())}};
}

PartialFill parse_partial_text(std::string_view text) {
  std::vector<std::string> lines;
  for (auto& line : split_lines(text)) {
    auto last = line.find_last_not_of(" \t");
    line.erase(last == std::string::npos ? 0 : last + 1);
    if (!line.empty()) lines.push_back(std::move(line));
  }
  if (lines.empty()) throw FormatError("empty fill");
  const auto cols = lines.front().size();
  PartialFill fill(static_cast<int>(lines.size()), static_cast<int>(cols));
  for (std::size_t r = 0; r < lines.size(); ++r) {
    if (lines[r].size() != cols) {
      throw FormatError("fill row " + std::to_string(r) + " has " +
                        std::to_string(lines[r].size()) + " cells, expected " +
                        std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) {
      CellState s;
      switch (lines[r][c]) {
        case '#': s = CellState::Filled; break;
        case '.': s = CellState::Empty; break;
        case '?': s = CellState::Indeterminate; break;
        default:
          throw FormatError(std::string("unexpected fill character '") + lines[r][c] + "'");
      }
      fill(static_cast<int>(r), static_cast<int>(c)) = s;
    }
  }
  return fill;
}

CompleteFill parse_fill_text(std::string_view text) {
  try {
    return to_complete(parse_partial_text(text));
  } catch (const BoardError& e) {
    throw FormatError(e.what());
  }
}

std::string format_fill_text(const CompleteFill& fill) { return format_partial_text(to_partial(fill)); }

std::string format_partial_text(const PartialFill& fill) {
  std::string out;
  for (int r = 0; r < fill.rows(); ++r) {
    for (int c = 0; c < fill.cols(); ++c) out += to_char(fill(r, c));
    out += '\n';
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path.string());
  out << text;
  if (!out) throw FormatError("write failed for " + path.string());
}

Puzzle read_puzzle_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return puzzle_from_json(nlohmann::json::parse(text));
    } catch (const nlohmann::json::parse_error& e) {
      throw FormatError(path.string() + ": " + e.what());
    }
  }
  return parse_puzzle_text(text);
}

}  // namespace nonolab
