#include "netdist/io.hpp"

#include "netdist/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace netdist::io {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view token, std::size_t line) {
  T value{};
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw Error(ErrorKind::ParseError,
                "line " + std::to_string(line) + ": bad number '" + std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? s.npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t j = s.find_first_of(" \t", i);
    if (i < s.size()) out.push_back(s.substr(i, (j == s.npos ? s.size() : j) - i));
    i = j == s.npos ? s.size() : j;
  }
  return out;
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
  return in;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::vector<EdgeInput> edges;
  std::optional<std::size_t> declared_n;
  bool seen_content = false;
  Vertex max_id = -1;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != line.npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.starts_with("n=")) {
      if (seen_content) {
        throw Error(ErrorKind::ParseError,
                    "line " + std::to_string(line_no) + ": 'n=' header must come first");
      }
      declared_n = parse_number<std::size_t>(trim(line.substr(2)), line_no);
      seen_content = true;
      continue;
    }
    seen_content = true;

    const auto tokens = split_ws(line);
    if (tokens.size() != 2 && tokens.size() != 3) {
      throw Error(ErrorKind::ParseError,
                  "line " + std::to_string(line_no) + ": expected 'i j' or 'i j w'");
    }
    EdgeInput e;
    e.i = parse_number<Vertex>(tokens[0], line_no);
    e.j = parse_number<Vertex>(tokens[1], line_no);
    if (tokens.size() == 3) e.w = parse_number<double>(tokens[2], line_no);
    if (e.i < 0 || e.j < 0) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": negative id");
    }
    max_id = std::max({max_id, e.i, e.j});
    edges.push_back(e);
  }

  const std::size_t n = declared_n.value_or(static_cast<std::size_t>(max_id + 1));
  try {
    return Graph(n, edges);
  } catch (const Error& err) {
    throw Error(ErrorKind::ParseError, err.what());
  }
}

Graph read_edge_list(const std::filesystem::path& path) {
  auto in = open(path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  Vertex max_id = -1;
  for (const auto& e : g.edges()) max_id = std::max(max_id, e.j);
  if (static_cast<std::size_t>(max_id + 1) != g.n()) out << "n=" << g.n() << '\n';
  for (const auto& e : g.edges()) {
    out << e.i << ' ' << e.j;
    if (e.w != 1.0) out << ' ' << format_double(e.w);
    out << '\n';
  }
}

void write_edge_list(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path.string());
  write_edge_list(out, g);
}

std::vector<ContactEvent> read_contacts(std::istream& in) {
  std::vector<ContactEvent> events;
  std::string raw;
  std::size_t line_no = 0;
  bool header = false;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty()) continue;
    if (!header) {
      const auto cols = split(line, ',');
      if (cols.size() != 3 || cols[0] != "t" || cols[1] != "u" || cols[2] != "v") {
        throw Error(ErrorKind::ParseError, "contact CSV must start with header 't,u,v'");
      }
      header = true;
      continue;
    }
    const auto cols = split(line, ',');
    if (cols.size() != 3) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": expected t,u,v");
    }
    ContactEvent ev{parse_number<double>(cols[0], line_no), parse_number<Vertex>(cols[1], line_no),
                    parse_number<Vertex>(cols[2], line_no)};
    if (ev.u == ev.v || ev.u < 0 || ev.v < 0 || !std::isfinite(ev.t)) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": invalid contact");
    }
    events.push_back(ev);
  }
  if (!header) throw Error(ErrorKind::ParseError, "contact CSV must start with header 't,u,v'");
  return events;
}

std::vector<ContactEvent> read_contacts(const std::filesystem::path& path) {
  auto in = open(path);
  return read_contacts(in);
}

Eigen::MatrixXd read_matrix_csv(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty()) continue;
    auto& row = rows.emplace_back();
    for (auto tok : split(line, ',')) row.push_back(parse_number<double>(tok, line_no));
  }
  const auto n = rows.size();
  Eigen::MatrixXd m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n) {
      throw Error(ErrorKind::ParseError, "matrix CSV row " + std::to_string(r) + " has " +
                                             std::to_string(rows[r].size()) + " entries, want " +
                                             std::to_string(n));
    }
    for (std::size_t c = 0; c < n; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
    }
  }
  return m;
}

Eigen::MatrixXd read_matrix_csv(const std::filesystem::path& path) {
  auto in = open(path);
  return read_matrix_csv(in);
}

std::string format_double(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

}  // namespace netdist::io
