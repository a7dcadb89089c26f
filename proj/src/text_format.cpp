#include "stashpeel/text_format.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace stashpeel {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
    if (end > pos) words.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return words;
}

std::uint32_t parse_count(std::string_view word, std::size_t line) {
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size()) {
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(word) + "'");
  }
  return value;
}

namespace {

// Calls fn(line_number, words) for every non-blank, non-comment line.
template <class Fn>
void for_each_content_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    ++line_no;
    pos = nl + 1;
    auto words = split_words(line);
    if (words.empty() || words.front().starts_with('#')) continue;
    fn(line_no, words);
  }
}

}  // namespace

Hypergraph parse_hypergraph(std::string_view text) {
  std::optional<Hypergraph> graph;
  std::size_t expected_edges = 0;
  std::size_t header_line = 0;
  std::vector<VertexId> members;
  for_each_content_line(text, [&](std::size_t line, const std::vector<std::string_view>& words) {
    if (!graph) {
      if (words.size() != 4 || words[0] != "h") {
        throw ParseError(line, "malformed header, expected 'h <d> <num_vertices> <num_edges>'");
      }
      std::uint32_t d = parse_count(words[1], line);
      if (d < 2) throw ParseError(line, "arity must be at least 2");
      graph.emplace(d);
      graph->add_vertices(parse_count(words[2], line));
      expected_edges = parse_count(words[3], line);
      header_line = line;
      return;
    }
    if (words[0] != "e") throw ParseError(line, "expected an edge line 'e v1 ... vd'");
    if (graph->num_edges() == expected_edges) {
      throw ParseError(line, "more edge lines than the header declares");
    }
    if (words.size() - 1 != graph->arity()) {
      throw ParseError(line, "edge has " + std::to_string(words.size() - 1) + " vertices, expected " +
                                 std::to_string(graph->arity()));
    }
    members.clear();
    for (std::size_t i = 1; i < words.size(); ++i) {
      std::uint32_t v = parse_count(words[i], line);
      if (v >= graph->vertex_bound()) {
        throw ParseError(line, "vertex " + std::to_string(v) + " out of range");
      }
      for (VertexId seen : members) {
        if (seen.value == v) throw ParseError(line, "duplicate vertex " + std::to_string(v) + " in edge");
      }
      members.emplace_back(v);
    }
    graph->add_edge(members);
  });
  if (!graph) throw ParseError(1, "missing header line");
  if (graph->num_edges() != expected_edges) {
    throw ParseError(header_line, "header declares " + std::to_string(expected_edges) +
                                      " edges but " + std::to_string(graph->num_edges()) + " were given");
  }
  return std::move(*graph);
}

namespace {

void write_edges(std::ostringstream& out, const Hypergraph& h) {
  for (EdgeId e : h.edges()) {
    out << 'e';
    for (VertexId v : h.edge(e)) out << ' ' << v.value;
    out << '\n';
  }
}

template <class Ids>
void write_id_comment(std::ostringstream& out, const char* label, const Ids& ids) {
  out << "# " << label << ':';
  for (auto id : ids) out << ' ' << id.value;
  out << '\n';
}

}  // namespace

std::string serialize_hypergraph(const Hypergraph& h) {
  std::ostringstream out;
  if (h.is_canonical()) {
    out << "h " << h.arity() << ' ' << h.num_vertices() << ' ' << h.num_edges() << '\n';
    write_edges(out, h);
    return out.str();
  }
  Compacted c = compact(h);
  out << "h " << h.arity() << ' ' << c.graph.num_vertices() << ' ' << c.graph.num_edges() << '\n';
  write_id_comment(out, "vertex-ids", c.old_vertex);
  write_id_comment(out, "edge-ids", c.old_edge);
  write_edges(out, c.graph);
  return out.str();
}

StashFile parse_stash(std::string_view text) {
  std::optional<StashFile> stash;
  for_each_content_line(text, [&](std::size_t line, const std::vector<std::string_view>& words) {
    if (stash) throw ParseError(line, "a stash file holds a single 'S' line");
    if (words.size() < 2 || words[0] != "S" || (words[1] != "v" && words[1] != "e")) {
      throw ParseError(line, "malformed stash line, expected 'S v|e <ids...>'");
    }
    StashFile s;
    s.kind = words[1] == "v" ? StashKind::vertex : StashKind::edge;
    for (std::size_t i = 2; i < words.size(); ++i) s.ids.push_back(parse_count(words[i], line));
    stash = std::move(s);
  });
  if (!stash) throw ParseError(1, "missing stash line");
  return *stash;
}

std::string serialize_stash(const StashFile& stash) {
  std::ostringstream out;
  out << "S " << (stash.kind == StashKind::vertex ? 'v' : 'e');
  for (auto id : stash.ids) out << ' ' << id;
  out << '\n';
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace stashpeel
