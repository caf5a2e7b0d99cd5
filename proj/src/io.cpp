#include "chromabij/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "chromabij/errors.hpp"

namespace chromabij {

namespace {

constexpr int kG6Min = 63;
constexpr int kG6Max = 126;

int g6_byte(std::string_view line, std::size_t pos) {
  const unsigned char c = static_cast<unsigned char>(line[pos]);
  if (c < kG6Min || c > kG6Max)
    throw parse_error("graph6 byte out of range 63..126", pos);
  return c - kG6Min;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  if (line.empty()) throw parse_error("empty graph6 input", 0);

  std::size_t pos = 0;
  long long n = 0;
  if (g6_byte(line, 0) < 63) {
    n = g6_byte(line, 0);
    pos = 1;
  } else if (line.size() >= 4 && g6_byte(line, 1) < 63) {
    n = (static_cast<long long>(g6_byte(line, 1)) << 12) |
        (g6_byte(line, 2) << 6) | g6_byte(line, 3);
    pos = 4;
  } else if (line.size() >= 8) {
    n = 0;
    for (int k = 0; k < 6; ++k) n = (n << 6) | g6_byte(line, 2 + k);
    pos = 8;
  } else {
    throw parse_error("malformed graph6 size header", 0);
  }
  if (n > 100000) throw parse_error("graph6 vertex count too large", 0);

  const long long bits = n * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (line.size() - pos != need)
    throw parse_error("graph6 body has wrong length", pos);

  std::vector<Edge> edges;
  long long bit = 0;
  // Upper triangle in column order: for each v, the bits pair v with
  // 0..v-1.
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      const int value = g6_byte(line, pos + bit / 6);
      if ((value >> (5 - bit % 6)) & 1) edges.push_back(Edge{u, v});
    }
  }
  for (; bit < static_cast<long long>(need) * 6; ++bit) {
    const int value = g6_byte(line, pos + bit / 6);
    if ((value >> (5 - bit % 6)) & 1)
      throw parse_error("nonzero padding bits", pos + bit / 6);
  }
  return Graph::from_edge_set(static_cast<int>(n), std::move(edges));
}

std::string to_graph6(const Graph& g) {
  const int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kG6Min));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(kG6Max));
    out.push_back(static_cast<char>(((n >> 12) & 63) + kG6Min));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kG6Min));
    out.push_back(static_cast<char>((n & 63) + kG6Min));
  } else {
    throw invalid_input_error("graph too large for graph6");
  }

  std::vector<bool> adjacent(static_cast<std::size_t>(n) * n, false);
  for (const Edge& e : g.edges()) {
    adjacent[static_cast<std::size_t>(e.u) * n + e.v] = true;
    adjacent[static_cast<std::size_t>(e.v) * n + e.u] = true;
  }
  int group = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      group = (group << 1) | (adjacent[static_cast<std::size_t>(u) * n + v] ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + kG6Min));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + kG6Min));
  return out;
}

namespace {

std::vector<long long> parse_ints(std::string_view line, std::size_t line_no,
                                  std::size_t expected) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    long long value = 0;
    const auto [ptr, ec] =
        std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc())
      throw parse_error("expected an integer", line_no);
    i = static_cast<std::size_t>(ptr - line.data());
    out.push_back(value);
  }
  if (out.size() != expected)
    throw parse_error("expected " + std::to_string(expected) + " integers", line_no);
  return out;
}

}  // namespace

Graph parse_edgelist(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  while (!lines.empty() && lines.back().find_first_not_of(" \t\r") ==
                               std::string_view::npos)
    lines.pop_back();

  if (lines.empty()) throw parse_error("empty edge list", 1);
  const auto header = parse_ints(lines[0], 1, 2);
  const long long n = header[0];
  const long long m = header[1];
  if (n < 0 || m < 0) throw parse_error("negative counts in header", 1);
  if (static_cast<long long>(lines.size()) - 1 != m)
    throw parse_error("edge count does not match header", lines.size());

  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    const std::size_t line_no = static_cast<std::size_t>(i) + 2;
    const auto uv = parse_ints(lines[i + 1], line_no, 2);
    if (uv[0] < 0 || uv[0] >= n || uv[1] < 0 || uv[1] >= n)
      throw parse_error("vertex out of range", line_no);
    if (uv[0] == uv[1]) throw parse_error("loops are not allowed", line_no);
    const Edge e = uv[0] < uv[1]
                       ? Edge{static_cast<int>(uv[0]), static_cast<int>(uv[1])}
                       : Edge{static_cast<int>(uv[1]), static_cast<int>(uv[0])};
    for (const Edge& prior : edges)
      if (prior == e) throw parse_error("duplicate edge", line_no);
    edges.push_back(e);
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string to_edgelist(const Graph& g) {
  std::ostringstream os;
  os << g.vertex_count() << " " << g.edge_count() << "\n";
  for (const Edge& e : g.edges()) os << e.u << " " << e.v << "\n";
  return os.str();
}

GraphDocument load_graph_argument(const std::string& arg) {
  for (const std::string& name : named_graph_names()) {
    if (arg == name) {
      GraphDocument doc;
      doc.format = GraphDocument::Format::named;
      doc.graph = named_graph(arg);
      doc.name = arg;
      return doc;
    }
  }

  std::ifstream in(arg, std::ios::binary);
  if (!in) throw invalid_input_error("cannot open graph file: " + arg);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  GraphDocument doc;
  doc.name = arg;
  const bool g6_ext = arg.size() >= 3 && (arg.rfind(".g6") == arg.size() - 3 ||
                                          (arg.size() >= 7 &&
                                           arg.rfind(".graph6") == arg.size() - 7));
  // Edge lists always start with a digit; graph6 bytes for n >= 1 do not.
  const bool looks_g6 = !text.empty() && !(text[0] >= '0' && text[0] <= '9');
  if (g6_ext || looks_g6) {
    std::string line = text;
    if (const auto nl = line.find('\n'); nl != std::string::npos) line.resize(nl);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    doc.format = GraphDocument::Format::graph6;
    doc.graph = parse_graph6(line);
  } else {
    doc.format = GraphDocument::Format::edgelist;
    doc.graph = parse_edgelist(text);
  }
  return doc;
}

nlohmann::json to_json(const BigInt& v) {
  static const BigInt kMin = std::numeric_limits<std::int64_t>::min();
  static const BigInt kMax = std::numeric_limits<std::int64_t>::max();
  if (v >= kMin && v <= kMax) return v.convert_to<std::int64_t>();
  return v.str();
}

nlohmann::json to_json(const IntPolynomial& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const BigInt& c : p.coefficients()) coeffs.push_back(to_json(c));
  return nlohmann::json{{"coeffs", coeffs}};
}

nlohmann::json to_json(const PSymFunc& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [lambda, c] : f.terms()) {
    terms.push_back(nlohmann::json{{"partition", lambda.parts()},
                                   {"coeff", to_json(c)}});
  }
  return nlohmann::json{{"basis", "p"}, {"terms", terms}};
}

nlohmann::json to_json(const MonomialMap& m) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [expo, c] : m.terms())
    terms.push_back(nlohmann::json{{"exponents", expo}, {"coeff", to_json(c)}});
  return nlohmann::json{{"mu", m.variable_count()}, {"terms", terms}};
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckResult& c : r.checks)
    checks.push_back(nlohmann::json{
        {"name", c.name}, {"status", c.status}, {"details", c.details}});
  return nlohmann::json{{"graph", r.graph_id}, {"checks", checks},
                        {"passed", r.passed},  {"failed", r.failed},
                        {"skipped", r.skipped}};
}

nlohmann::json to_json(const InvolutionAudit& a) {
  return nlohmann::json{{"pairs", a.pair_count},
                        {"fixed_points", a.fixed_count},
                        {"signed_sum", to_json(a.signed_sum)},
                        {"proper_colorings", to_json(a.proper_count)},
                        {"failures", a.failures}};
}

nlohmann::json to_json(const BenchResult& b) {
  return nlohmann::json{{"full", {{"subsets", b.full_subsets}, {"ms", b.full_ms}}},
                        {"nbc", {{"subsets", b.nbc_subsets}, {"ms", b.nbc_ms}}},
                        {"agree", b.agree},
                        {"poly", to_json(b.poly)}};
}

std::string orientation_to_string(const Orientation& o) {
  std::string s;
  s.reserve(o.normal.size());
  for (bool b : o.normal) s.push_back(b ? '+' : '-');
  return s;
}

Orientation parse_orientation(const Graph& g, std::string_view text) {
  if (text.size() != static_cast<std::size_t>(g.edge_count()))
    throw invalid_input_error("orientation needs one +/- per edge");
  Orientation o;
  o.normal.reserve(text.size());
  for (char c : text) {
    if (c == '+')
      o.normal.push_back(true);
    else if (c == '-')
      o.normal.push_back(false);
    else
      throw invalid_input_error("orientation characters are '+' or '-'");
  }
  return o;
}

std::string subset_to_string(const EdgeSubset& s) {
  std::ostringstream os;
  for (std::size_t i = 0; i < s.indices().size(); ++i)
    os << (i ? "," : "") << s.indices()[i] + 1;
  return os.str();
}

EdgeSubset parse_subset(const Graph& g, std::string_view text) {
  std::vector<int> indices;
  std::size_t i = 0;
  while (i < text.size()) {
    long long value = 0;
    const auto [ptr, ec] =
        std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc()) throw invalid_input_error("bad edge index list");
    if (value < 1 || value > g.edge_count())
      throw invalid_input_error("edge index out of range (1-based)");
    indices.push_back(static_cast<int>(value - 1));
    i = static_cast<std::size_t>(ptr - text.data());
    if (i < text.size()) {
      if (text[i] != ',') throw invalid_input_error("bad edge index list");
      ++i;
    }
  }
  return EdgeSubset(std::move(indices));
}

}  // namespace chromabij
