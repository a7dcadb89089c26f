#pragma once

// Line-oriented text formats shared by every command.
//
//   h <d> <num_vertices> <num_edges>     first line; vertices are 0..n-1
//   e v1 v2 ... vd                        exactly num_edges lines, d distinct ids
//   # ...                                 comment, ignored by the parser
//
// A stash file holds one line `S v <vertex ids...>` or `S e <edge ids...>`,
// where edge ids are 0-based line indices in the instance file.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "stashpeel/hypergraph.hpp"

namespace stashpeel {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

Hypergraph parse_hypergraph(std::string_view text);

/// Canonical graphs serialize with their own ids. A graph with removed
/// elements is compacted first, and the original ids are listed in
/// `# vertex-ids:` / `# edge-ids:` comment lines after the header.
std::string serialize_hypergraph(const Hypergraph& h);

enum class StashKind { vertex, edge };

struct StashFile {
  StashKind kind = StashKind::vertex;
  std::vector<std::uint32_t> ids;

  bool operator==(const StashFile&) const = default;
};

StashFile parse_stash(std::string_view text);
std::string serialize_stash(const StashFile& stash);

std::vector<std::string_view> split_words(std::string_view line);
std::uint32_t parse_count(std::string_view word, std::size_t line);

std::string read_file(const std::string& path);

}  // namespace stashpeel
