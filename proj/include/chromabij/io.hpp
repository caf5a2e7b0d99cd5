#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json_fwd.hpp>

#include "chromabij/bigint.hpp"
#include "chromabij/chromatic.hpp"
#include "chromabij/graph.hpp"
#include "chromabij/involution.hpp"
#include "chromabij/polynomial.hpp"
#include "chromabij/symfunc.hpp"
#include "chromabij/verify.hpp"

namespace chromabij {

/// Decodes one line of graph6 (printable bytes 63..126; size header
/// followed by the upper-triangular adjacency bit vector in 6-bit groups).
/// The resulting edges are ordered lexicographically by (min, max).
Graph parse_graph6(std::string_view line);

std::string to_graph6(const Graph& g);

/// Edge-list format: first line "n m", then m lines "u v" with 0-based
/// vertices. The file order of the edge lines IS the edge order, which is
/// the only way to choose a custom total ordering.
Graph parse_edgelist(std::string_view text);

std::string to_edgelist(const Graph& g);

/// A parsed graph together with where it came from.
struct GraphDocument {
  enum class Format { graph6, edgelist, named };
  Format format = Format::edgelist;
  Graph graph;
  std::string name;
};

/// Resolves a CLI --graph argument: a fixture name (butterfly, kite, net,
/// x169, fig1), else a file path. Files ending in .g6/.graph6 parse as
/// graph6; anything else parses as an edge list unless its first line looks
/// like graph6.
GraphDocument load_graph_argument(const std::string& arg);

// JSON serialization. Integers that fit in 64 bits are emitted as JSON
// numbers, anything larger as a decimal string.
nlohmann::json to_json(const BigInt& v);
nlohmann::json to_json(const IntPolynomial& p);
nlohmann::json to_json(const PSymFunc& f);
nlohmann::json to_json(const MonomialMap& m);
nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const InvolutionAudit& a);
nlohmann::json to_json(const BenchResult& b);

/// Orientation as a +/- string, '+' meaning the normal (low -> high) arc.
std::string orientation_to_string(const Orientation& o);
Orientation parse_orientation(const Graph& g, std::string_view text);

/// Comma-separated 1-based edge indices.
std::string subset_to_string(const EdgeSubset& s);
EdgeSubset parse_subset(const Graph& g, std::string_view text);

}  // namespace chromabij
