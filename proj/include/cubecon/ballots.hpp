#pragma once

// Approval-ballot files. Two encodings:
//
//   line format   one 0/1 string per ballot, '#' starts a comment, blank
//                 lines ignored
//   JSON format   {"n": int, "candidates": [str]?, "ballots": [str]}
//
// The parser picks JSON when the first non-blank character is '{'.

#include <cctype>
#include <cstddef>
#include <istream>
#include <iterator>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "cubecon/errors.hpp"
#include "cubecon/profile.hpp"
#include "cubecon/vertex.hpp"

namespace cubecon {

struct BallotFile {
  std::size_t dimension;
  std::vector<std::string> candidates;  // empty, or one name per coordinate
  Profile ballots;
};

enum class BallotFormat { lines, json };

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline void check_candidates(const std::vector<std::string>& names, std::size_t n) {
  if (names.empty()) return;
  if (names.size() != n) {
    throw ValidationError("expected " + std::to_string(n) + " candidate names, got " +
                          std::to_string(names.size()));
  }
  std::set<std::string> seen;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!seen.insert(names[i]).second) {
      throw ValidationError("duplicate candidate name '" + names[i] + "' at position " +
                            std::to_string(i + 1));
    }
  }
}

inline Vertex parse_ballot_at(std::string_view text, std::size_t line, std::size_t offset) {
  try {
    return Vertex::parse(text);
  } catch (const ValidationError& e) {
    // Vertex::parse reports bare messages with a column relative to `text`.
    throw ValidationError(e.what(), line, e.column() == 0 ? 0 : e.column() + offset);
  }
}

inline BallotFile parse_line_format(std::string_view text) {
  std::vector<Vertex> ballots;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::string_view body = trim(line);
    if (body.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const std::size_t offset = static_cast<std::size_t>(body.data() - line.data());
    Vertex v = parse_ballot_at(body, line_no, offset);
    if (!ballots.empty() && v.dimension() != ballots.front().dimension()) {
      throw ValidationError("ragged ballot: length " + std::to_string(v.dimension()) +
                                ", expected " + std::to_string(ballots.front().dimension()),
                            line_no);
    }
    ballots.push_back(std::move(v));
    if (end == text.size()) break;
  }
  if (ballots.empty()) throw ValidationError("no ballots");
  const std::size_t n = ballots.front().dimension();
  return BallotFile{n, {}, Profile(std::move(ballots))};
}

inline BallotFile parse_json_format(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("ballot JSON must be an object");
  if (!doc.contains("n") || !doc["n"].is_number_integer() || doc["n"].get<long long>() < 1) {
    throw ValidationError("\"n\" must be a positive integer");
  }
  const auto n = doc["n"].get<std::size_t>();
  std::vector<std::string> names;
  if (doc.contains("candidates")) {
    if (!doc["candidates"].is_array()) throw ValidationError("\"candidates\" must be an array");
    for (const auto& c : doc["candidates"]) {
      if (!c.is_string()) throw ValidationError("candidate names must be strings");
      names.push_back(c.get<std::string>());
    }
  }
  check_candidates(names, n);
  if (!doc.contains("ballots") || !doc["ballots"].is_array()) {
    throw ValidationError("\"ballots\" must be an array");
  }
  std::vector<Vertex> ballots;
  std::size_t index = 0;
  for (const auto& b : doc["ballots"]) {
    ++index;
    if (!b.is_string()) throw ValidationError("ballot " + std::to_string(index) + " is not a string");
    Vertex v = [&] {
      try {
        return Vertex::parse(b.get<std::string>());
      } catch (const ValidationError& e) {
        throw ValidationError("ballot " + std::to_string(index) + ": " + e.what());
      }
    }();
    if (v.dimension() != n) {
      throw ValidationError("ragged ballot " + std::to_string(index) + ": length " +
                            std::to_string(v.dimension()) + ", expected " + std::to_string(n));
    }
    ballots.push_back(std::move(v));
  }
  if (ballots.empty()) throw ValidationError("no ballots");
  return BallotFile{n, std::move(names), Profile(std::move(ballots))};
}

}  // namespace detail

inline BallotFile parse_ballots(std::string_view text) {
  const std::string_view body = detail::trim(text);
  if (!body.empty() && body.front() == '{') return detail::parse_json_format(text);
  return detail::parse_line_format(text);
}

inline BallotFile parse_ballots(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_ballots(text);
}

inline std::string serialize_ballots(const BallotFile& file, BallotFormat format) {
  if (format == BallotFormat::lines) {
    if (!file.candidates.empty()) {
      throw ValidationError("the line format cannot carry candidate names");
    }
    std::string out;
    for (const auto& b : file.ballots) out += b.to_string() + "\n";
    return out;
  }
  nlohmann::ordered_json doc;
  doc["n"] = file.dimension;
  if (!file.candidates.empty()) doc["candidates"] = file.candidates;
  auto ballots = nlohmann::ordered_json::array();
  for (const auto& b : file.ballots) ballots.push_back(b.to_string());
  doc["ballots"] = ballots;
  return doc.dump() + "\n";
}

// Names of the approved candidates of v, or empty when the file has none.
inline std::vector<std::string> candidate_names(const BallotFile& file, const Vertex& v) {
  std::vector<std::string> out;
  if (file.candidates.empty()) return out;
  for (std::size_t j = 1; j <= v.dimension(); ++j) {
    if (v.test(j)) out.push_back(file.candidates[j - 1]);
  }
  return out;
}

}  // namespace cubecon
