#include "kronctrl/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <vector>

#include "kronctrl/error.hpp"

namespace kronctrl {

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

// Non-blank, non-comment lines split on whitespace.
std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    std::istringstream ss(text);
    Line line{number, {}};
    std::string tok;
    while (ss >> tok) line.tokens.push_back(tok);
    if (line.tokens.empty() || line.tokens.front().front() == '#') continue;
    lines.push_back(std::move(line));
  }
  return lines;
}

std::size_t parse_count(const std::string& tok, std::size_t line, const char* what) {
  std::size_t value = 0;
  const auto* end = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc() || ptr != end) throw ParseError(std::string("invalid ") + what + " '" + tok + "'", line);
  return value;
}

Rational parse_literal(const std::string& tok, std::size_t line) {
  try {
    return Rational::parse(tok);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), line);
  }
}

Mat parse_matrix_lines(const std::vector<Line>& lines) {
  if (lines.empty()) throw ParseError("empty matrix file");
  const Line& header = lines.front();
  if (header.tokens.size() != 2) throw ParseError("expected 'rows cols' header", header.number);
  const std::size_t rows = parse_count(header.tokens[0], header.number, "row count");
  const std::size_t cols = parse_count(header.tokens[1], header.number, "column count");

  Mat m(rows, cols);
  std::size_t k = 0;
  std::size_t last_line = header.number;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    for (const auto& tok : lines[li].tokens) {
      if (k == rows * cols) throw ParseError("more than " + std::to_string(rows * cols) + " entries", lines[li].number);
      m(k / cols, k % cols) = parse_literal(tok, lines[li].number);
      ++k;
    }
    last_line = lines[li].number;
  }
  if (k != rows * cols)
    throw ParseError("expected " + std::to_string(rows * cols) + " entries, found " + std::to_string(k), last_line);
  return m;
}

WeightedDigraph parse_graph_lines(const std::vector<Line>& lines) {
  if (lines.empty()) throw ParseError("empty graph file");
  const Line& header = lines.front();
  if (header.tokens.size() != 3 || header.tokens[0] != "graph")
    throw ParseError("expected 'graph <node_count> directed|undirected' header", header.number);
  const std::size_t n = parse_count(header.tokens[1], header.number, "node count");
  const std::string& kind = header.tokens[2];
  if (kind != "directed" && kind != "undirected")
    throw ParseError("graph kind must be 'directed' or 'undirected', got '" + kind + "'", header.number);
  const bool undirected = kind == "undirected";

  WeightedDigraph g(n);
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    if (line.tokens.size() != 3) throw ParseError("expected 'from to weight'", line.number);
    const std::size_t from = parse_count(line.tokens[0], line.number, "node index");
    const std::size_t to = parse_count(line.tokens[1], line.number, "node index");
    const Rational w = parse_literal(line.tokens[2], line.number);
    try {
      g.add_edge(from, to, w);
      if (undirected && from != to) g.add_edge(to, from, w);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.what(), line.number);
    }
  }
  return g;
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  return in;
}

bool looks_like_graph(const std::vector<Line>& lines) {
  return !lines.empty() && lines.front().tokens.front() == "graph";
}

}  // namespace

Mat parse_matrix(std::istream& in) { return parse_matrix_lines(tokenize(in)); }

Mat parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_matrix(in);
}

std::string serialize_matrix(const Mat& m) {
  std::ostringstream out;
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m(r, c);
    out << '\n';
  }
  return out.str();
}

WeightedDigraph parse_graph(std::istream& in) { return parse_graph_lines(tokenize(in)); }

WeightedDigraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

std::string serialize_graph(const WeightedDigraph& g) {
  std::ostringstream out;
  out << "graph " << g.node_count() << " directed\n";
  for (const auto& e : g.edges()) out << e.from << ' ' << e.to << ' ' << e.weight << '\n';
  return out.str();
}

std::string to_dot(const WeightedDigraph& g, std::size_t second_factor_nodes) {
  std::ostringstream out;
  out << "digraph G {\n";
  for (std::size_t k = 1; k <= g.node_count(); ++k) {
    out << "  " << k << " [label=\"";
    if (second_factor_nodes > 0)
      out << (k - 1) / second_factor_nodes + 1 << ',' << (k - 1) % second_factor_nodes + 1;
    else
      out << k;
    out << "\"];\n";
  }
  for (const auto& e : g.edges()) out << "  " << e.from << " -> " << e.to << " [label=\"" << e.weight << "\"];\n";
  out << "}\n";
  return out.str();
}

std::vector<std::size_t> parse_node_list(std::string_view text) {
  std::vector<std::size_t> nodes;
  if (text.empty()) return nodes;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    std::string_view tok = text.substr(start, comma - start);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
    nodes.push_back(parse_count(std::string(tok), 0, "node index"));
    start = comma + 1;
  }
  return nodes;
}

LoadedMatrix load_matrix_or_graph_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  const auto lines = tokenize(in);
  if (looks_like_graph(lines)) {
    WeightedDigraph g = parse_graph_lines(lines);
    Mat a = adjacency(g);
    return {std::move(a), std::move(g)};
  }
  return {parse_matrix_lines(lines), std::nullopt};
}

LoadedMatrix load_matrix_or_graph(const std::filesystem::path& path) {
  auto in = open(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_matrix_or_graph_text(buf.str());
}

Mat load_matrix(const std::filesystem::path& path) {
  auto in = open(path);
  return parse_matrix(in);
}

WeightedDigraph load_graph(const std::filesystem::path& path) {
  auto in = open(path);
  return parse_graph(in);
}

}  // namespace kronctrl
