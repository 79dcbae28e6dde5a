#pragma once

#include <filesystem>
#include <functional>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace texttiger::io {

using nlohmann::json;

std::string read_file(const std::filesystem::path& path);

/// Writes via a temporary sibling and renames, so readers never see a partial file.
void write_file(const std::filesystem::path& path, std::string_view contents);

/// Calls fn(record, line_number) for every non-blank line. Lines that are not
/// valid JSON raise ParseError carrying the 1-based line number.
void for_each_jsonl(std::istream& in, const std::function<void(const json&, std::size_t)>& fn);
std::vector<json> read_jsonl(const std::filesystem::path& path);

/// One compact JSON document per line, UTF-8, '\n' terminated.
std::string to_jsonl(const std::vector<json>& records);

std::string sha256_hex(std::string_view data);
std::string base64_decode(std::string_view encoded);

}  // namespace texttiger::io
