#include "chromabij/symfunc.hpp"

#include <algorithm>
#include <utility>

#include "chromabij/chromatic.hpp"
#include "chromabij/coloring.hpp"
#include "chromabij/detail/union_find.hpp"
#include "chromabij/errors.hpp"

namespace chromabij {

PSymFunc PSymFunc::basis(const Partition& lambda) {
  PSymFunc f;
  f.terms_.emplace(lambda, BigInt(1));
  return f;
}

PSymFunc& PSymFunc::add_term(const Partition& lambda, const BigInt& c) {
  if (c == 0) return *this;
  auto [it, inserted] = terms_.emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

PSymFunc& PSymFunc::operator+=(const PSymFunc& other) {
  for (const auto& [lambda, c] : other.terms_) add_term(lambda, c);
  return *this;
}

PSymFunc& PSymFunc::operator-=(const PSymFunc& other) {
  for (const auto& [lambda, c] : other.terms_) add_term(lambda, -c);
  return *this;
}

PSymFunc operator*(const PSymFunc& a, const PSymFunc& b) {
  PSymFunc out;
  for (const auto& [la, ca] : a.terms_)
    for (const auto& [lb, cb] : b.terms_)
      out.add_term(merge_parts(la, lb), ca * cb);
  return out;
}

PSymFunc PSymFunc::scaled(const BigInt& c) const {
  PSymFunc out;
  if (c == 0) return out;
  for (const auto& [lambda, coeff] : terms_) out.terms_.emplace(lambda, coeff * c);
  return out;
}

MonomialMap::MonomialMap(int variable_count) : mu_(variable_count) {
  if (variable_count < 1) throw invalid_input_error("need at least one variable");
}

MonomialMap& MonomialMap::add_term(const std::vector<int>& exponents, const BigInt& c) {
  if (exponents.size() != static_cast<std::size_t>(mu_))
    throw invalid_input_error("exponent vector length does not match");
  if (c == 0) return *this;
  auto [it, inserted] = terms_.emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

namespace {

// Shared subset sweep: calls on_subset(|S|, lambda(S)) for the selected
// family of spanning subgraphs.
template <bool NbcOnly, typename F>
void subset_sweep(const Graph& g, int edge, detail::RollbackUnionFind& uf,
                  int included, std::uint64_t& visited, std::uint64_t limit, F& fn) {
  const int n = g.vertex_count();
  if (edge == g.edge_count()) {
    if (++visited > limit) throw budget_error("subset enumeration exceeds budget");
    std::vector<int> sizes;
    for (int v = 0; v < n; ++v)
      if (uf.find(v) == v) sizes.push_back(uf.size_of_root(v));
    fn(included, Partition::from_unsorted(std::move(sizes)));
    return;
  }
  const Edge& e = g.edge(edge);
  if (NbcOnly && uf.connected(e.u, e.v)) return;
  subset_sweep<NbcOnly>(g, edge + 1, uf, included, visited, limit, fn);
  const std::size_t mark = uf.mark();
  uf.unite(e.u, e.v);
  subset_sweep<NbcOnly>(g, edge + 1, uf, included + 1, visited, limit, fn);
  uf.rollback_to(mark);
}

template <bool NbcOnly>
PSymFunc csf_sweep(const Graph& g, const Budget& budget) {
  PSymFunc f;
  detail::RollbackUnionFind uf(g.vertex_count());
  std::uint64_t visited = 0;
  auto fn = [&](int included, const Partition& lambda) {
    f.add_term(lambda, (included % 2 == 0) ? 1 : -1);
  };
  subset_sweep<NbcOnly>(g, 0, uf, 0, visited, budget.max_subsets, fn);
  return f;
}

}  // namespace

PSymFunc csf_all_subgraphs(const Graph& g, const Budget& budget) {
  return csf_sweep<false>(g, budget);
}

PSymFunc csf_nbc(const Graph& g, const Budget& budget) {
  return csf_sweep<true>(g, budget);
}

PSymFunc omega(const PSymFunc& f) {
  PSymFunc out;
  for (const auto& [lambda, c] : f.terms()) {
    const bool flip = (lambda.sum() - lambda.length()) % 2 != 0;
    out.add_term(lambda, flip ? -c : c);
  }
  return out;
}

IntPolynomial specialize(const PSymFunc& f) {
  int max_len = 0;
  for (const auto& [lambda, c] : f.terms()) max_len = std::max(max_len, lambda.length());
  std::vector<BigInt> coeffs(max_len + 1, BigInt(0));
  for (const auto& [lambda, c] : f.terms()) coeffs[lambda.length()] += c;
  return IntPolynomial(std::move(coeffs));
}

MonomialMap expand_monomials(const PSymFunc& f, int mu, const Budget& budget) {
  MonomialMap out(mu);
  for (const auto& [lambda, c] : f.terms()) {
    // Expand p_lambda part by part: multiplying by p_k sends each monomial
    // to mu shifted copies.
    MonomialMap::TermMap acc;
    acc.emplace(std::vector<int>(mu, 0), BigInt(1));
    for (int part : lambda.parts()) {
      MonomialMap::TermMap next;
      for (const auto& [expo, coeff] : acc) {
        for (int i = 0; i < mu; ++i) {
          std::vector<int> shifted = expo;
          shifted[i] += part;
          auto [it, inserted] = next.emplace(std::move(shifted), coeff);
          if (!inserted) it->second += coeff;
        }
      }
      if (next.size() > budget.max_terms)
        throw budget_error("monomial expansion exceeds budget");
      acc = std::move(next);
    }
    for (const auto& [expo, coeff] : acc) out.add_term(expo, coeff * c);
  }
  return out;
}

MonomialMap csf_bruteforce(const Graph& g, int mu, const Budget& budget) {
  MonomialMap out(mu);
  std::vector<int> expo(mu);
  for_each_coloring(g, mu, budget, [&](const Coloring& k) {
    if (!is_proper(g, k)) return;
    std::fill(expo.begin(), expo.end(), 0);
    for (int c : k.colors) ++expo[c - 1];
    out.add_term(expo, 1);
  });
  return out;
}

MonomialMap compatible_pair_generating(const Graph& g, int mu, const Budget& budget) {
  checked_coloring_count(g, mu, budget);
  MonomialMap out(mu);
  std::vector<int> expo(mu);
  for (const Orientation& o : acyclic_orientations(g, budget)) {
    for_each_coloring(g, mu, budget, [&](const Coloring& k) {
      if (!is_compatible(g, o, k)) return;
      std::fill(expo.begin(), expo.end(), 0);
      for (int c : k.colors) ++expo[c - 1];
      out.add_term(expo, 1);
    });
  }
  return out;
}

}  // namespace chromabij
