#include "chromabij/involution.hpp"

#include <algorithm>
#include <sstream>

#include "chromabij/chromatic.hpp"
#include "chromabij/errors.hpp"

namespace chromabij {

void require_member(const Graph& g, const ColoredSubgraph& p) {
  if (!is_monochromatic_on(g, p.subset, p.coloring))
    throw precondition_error("coloring is not monochromatic on the subset");
}

int sign_of(const ColoredSubgraph& p) {
  return p.subset.size() % 2 == 0 ? 1 : -1;
}

std::optional<int> last_monochromatic_edge(const Graph& g, const Coloring& k) {
  validate_coloring(g, k);
  for (int i = g.edge_count() - 1; i >= 0; --i) {
    const Edge& e = g.edge(i);
    if (k.colors[e.u] == k.colors[e.v]) return i;
  }
  return std::nullopt;
}

ColoredSubgraph involute(const Graph& g, const ColoredSubgraph& p) {
  require_member(g, p);
  const auto last = last_monochromatic_edge(g, p.coloring);
  if (!last) return p;
  return ColoredSubgraph{p.subset.toggled(*last), p.coloring};
}

namespace {

std::string describe(const ColoredSubgraph& p) {
  std::ostringstream os;
  os << "S={";
  for (std::size_t i = 0; i < p.subset.indices().size(); ++i)
    os << (i ? "," : "") << p.subset.indices()[i] + 1;
  os << "} k=(";
  for (std::size_t i = 0; i < p.coloring.colors.size(); ++i)
    os << (i ? "," : "") << p.coloring.colors[i];
  os << ")";
  return os.str();
}

}  // namespace

InvolutionAudit audit_involution(const Graph& g, int t, const Budget& budget) {
  InvolutionAudit audit;
  const auto broken = broken_circuits(g);
  const auto fail = [&](const ColoredSubgraph& p, const std::string& what) {
    if (audit.failures.size() < 50)
      audit.failures.push_back(what + " at " + describe(p));
  };

  for_each_coloring(g, t, budget, [&](const Coloring& k) {
    // The pairs with this coloring are exactly the subsets of its
    // monochromatic edges.
    std::vector<int> mono;
    for (int i = 0; i < g.edge_count(); ++i)
      if (k.colors[g.edge(i).u] == k.colors[g.edge(i).v]) mono.push_back(i);
    const bool proper = mono.empty();
    if (proper) ++audit.proper_count;
    if (mono.size() >= 63) throw budget_error("monochromatic subset blowup");

    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << mono.size()); ++mask) {
      if (++audit.pair_count > budget.max_subsets)
        throw budget_error("involution audit exceeds budget");
      std::vector<int> idx;
      for (std::size_t b = 0; b < mono.size(); ++b)
        if ((mask >> b) & 1) idx.push_back(mono[b]);
      const ColoredSubgraph p{EdgeSubset(std::move(idx)), k};
      audit.signed_sum += sign_of(p);

      const ColoredSubgraph q = involute(g, p);
      if (q.coloring != p.coloring) fail(p, "coloring changed");
      if (!is_monochromatic_on(g, q.subset, q.coloring)) fail(p, "image left the set");

      if (q == p) {
        ++audit.fixed_count;
        if (!proper || !p.subset.empty())
          fail(p, "fixed point is not (empty, proper)");
        if (sign_of(p) != 1) fail(p, "fixed point with negative sign");
      } else {
        if (proper) fail(p, "proper pair moved");
        if (sign_of(q) != -sign_of(p)) fail(p, "sign not reversed");
        const int diff = std::abs(q.subset.size() - p.subset.size());
        if (diff != 1) fail(p, "image differs by more than one edge");
        if (involute(g, q) != p) fail(p, "not an involution");
      }

      // Restriction to pairs whose subset contains a broken circuit: no
      // fixed points, and each contained broken circuit stays contained.
      for (const EdgeSubset& b : broken) {
        const bool contained = std::includes(p.subset.indices().begin(),
                                             p.subset.indices().end(),
                                             b.indices().begin(), b.indices().end());
        if (!contained) continue;
        if (q == p) fail(p, "broken-circuit pair is fixed");
        if (!std::includes(q.subset.indices().begin(), q.subset.indices().end(),
                           b.indices().begin(), b.indices().end()))
          fail(p, "broken circuit not preserved");
      }
    }
  });

  if (audit.fixed_count != audit.proper_count)
    audit.failures.push_back("fixed points do not match proper colorings");
  if (audit.signed_sum != BigInt(audit.fixed_count))
    audit.failures.push_back("signed sum does not match fixed points");
  if (BigInt(audit.fixed_count) != chromatic_count(g, t, budget))
    audit.failures.push_back("fixed points do not match the chromatic count");
  return audit;
}

}  // namespace chromabij
