#include "ecctree/edge_list.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace ecctree {

namespace {

bool skippable(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

std::uint64_t read_number(std::istringstream& in, std::size_t line_no) {
  std::string token;
  if (!(in >> token)) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": missing number");
  }
  if (token.find_first_not_of("0123456789") != std::string::npos || token.size() > 18) {
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line_no) + ": '" + token + "' is not a vertex label");
  }
  return std::stoull(token);
}

void expect_end(std::istringstream& in, std::size_t line_no) {
  std::string extra;
  if (in >> extra) {
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line_no) + ": unexpected token '" + extra + "'");
  }
}

}  // namespace

Tree parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::uint64_t> n;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    std::istringstream fields(line);
    if (!n) {
      n = read_number(fields, line_no);
      expect_end(fields, line_no);
      if (*n > kMaxOrder) throw Error(ErrorCode::SizeLimit, "order " + std::to_string(*n) + " exceeds cap");
      continue;
    }
    auto u = read_number(fields, line_no);
    auto v = read_number(fields, line_no);
    expect_end(fields, line_no);
    if (u >= *n || v >= *n) {
      throw Error(ErrorCode::BadLabel, "line " + std::to_string(line_no) + ": label out of range");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!n) throw Error(ErrorCode::ParseError, "empty edge list");
  return Tree::from_edge_list(*n, edges);
}

Tree parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Tree& t, std::span<const std::string> comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  out << t.order() << '\n';
  for (const auto& [u, v] : t.edges()) out << u << ' ' << v << '\n';
}

std::string to_edge_list(const Tree& t) {
  std::ostringstream out;
  write_edge_list(out, t);
  return out.str();
}

}  // namespace ecctree
