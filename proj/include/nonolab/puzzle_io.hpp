// Text and JSON formats for puzzles and fills.
//
// Puzzle text: a header line "m n", then m row lines and n column lines of
// space-separated run lengths. A blank line is an empty description.
// Fill text: m lines of n characters, '#' filled and '.' empty ('?' is also
// accepted for partial fills).
#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "nonolab/board.hpp"

namespace nonolab {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_lines(std::string_view text);

Description parse_description(std::string_view line);
std::string format_description(const Description& d);

// Parses one puzzle starting at lines[pos]; advances pos past it.
Puzzle parse_puzzle_lines(const std::vector<std::string>& lines, std::size_t& pos);
Puzzle parse_puzzle_text(std::string_view text);
std::string format_puzzle_text(const Puzzle& puzzle);

Puzzle puzzle_from_json(const nlohmann::json& doc);
nlohmann::json puzzle_to_json(const Puzzle& puzzle);

CompleteFill parse_fill_text(std::string_view text);
PartialFill parse_partial_text(std::string_view text);
std::string format_fill_text(const CompleteFill& fill);
std::string format_partial_text(const PartialFill& fill);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);
// Accepts either the text format or a JSON document.
Puzzle read_puzzle_file(const std::filesystem::path& path);

}  // namespace nonolab
