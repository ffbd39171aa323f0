#include "tda/homology.hpp"

#include <algorithm>
#include <iterator>
#include <unordered_map>

namespace tda {

namespace {

template <typename SimplexRange>
BoundaryMatrix build_boundary(const SimplexRange& simplices) {
  BoundaryMatrix bm;
  std::unordered_map<Simplex, Index, SimplexHash> position;
  position.reserve(simplices.size());
  bm.columns.reserve(simplices.size());
  bm.dimensions.reserve(simplices.size());
  Index next = 0;
  for (const Simplex& s : simplices) {
    std::vector<Index> column;
    column.reserve(s.size() > 1 ? s.size() : 0);
    for (const auto& f : s.facets()) {
      auto it = position.find(f);
      if (it == position.end())
        throw structure_error("boundary_matrix: a facet is missing or follows its coface");
      column.push_back(it->second);
    }
    std::sort(column.begin(), column.end());
    bm.columns.push_back(std::move(column));
    bm.dimensions.push_back(s.dimension());
    if (!position.emplace(s, next).second) throw structure_error("boundary_matrix: duplicate simplex");
    ++next;
  }
  return bm;
}

struct FilteredView {
  const FilteredComplex& fc;
  struct iterator {
    std::vector<FilteredSimplex>::const_iterator it;
    const Simplex& operator*() const { return it->simplex; }
    iterator& operator++() {
      ++it;
      return *this;
    }
    bool operator!=(const iterator& o) const { return it != o.it; }
  };
  iterator begin() const { return {fc.entries().begin()}; }
  iterator end() const { return {fc.entries().end()}; }
  std::size_t size() const { return fc.size(); }
};

// a <- a + b over the two-element field.
void add_column(std::vector<Index>& a, const std::vector<Index>& b, std::vector<Index>& scratch) {
  scratch.clear();
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(scratch));
  a.swap(scratch);
}

}  // namespace

BoundaryMatrix boundary_matrix(const FilteredComplex& fc) { return build_boundary(FilteredView{fc}); }

BoundaryMatrix boundary_matrix(const SimplicialComplex& complex) {
  std::vector<Simplex> ordered;
  ordered.reserve(complex.size());
  for (int d = 0; d <= complex.max_dimension(); ++d) {
    const auto& group = complex.simplices(d);
    ordered.insert(ordered.end(), group.begin(), group.end());
  }
  return build_boundary(ordered);
}

Reduction reduce(BoundaryMatrix bm) {
  const std::size_t n = bm.size();
  Reduction out;
  out.columns = std::move(bm.columns);
  out.low.assign(n, -1);
  std::vector<Index> column_with_low(n, -1);
  std::vector<char> cleared(n, 0);
  std::vector<Index> scratch;

  int top = -1;
  for (int d : bm.dimensions) top = std::max(top, d);
  for (int dim = top; dim >= 1; --dim) {
    for (std::size_t j = 0; j < n; ++j) {
      if (bm.dimensions[j] != dim) continue;
      auto& col = out.columns[j];
      if (cleared[j]) {
        col.clear();
        continue;
      }
      while (!col.empty()) {
        const Index pivot = col.back();
        const Index other = column_with_low[static_cast<std::size_t>(pivot)];
        if (other < 0) break;
        add_column(col, out.columns[static_cast<std::size_t>(other)], scratch);
      }
      if (!col.empty()) {
        const Index pivot = col.back();
        out.low[j] = pivot;
        column_with_low[static_cast<std::size_t>(pivot)] = static_cast<Index>(j);
        cleared[static_cast<std::size_t>(pivot)] = 1;
      }
    }
  }

  for (std::size_t j = 0; j < n; ++j) {
    if (out.low[j] >= 0) out.pairs.emplace_back(out.low[j], static_cast<Index>(j));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (out.low[i] < 0 && column_with_low[i] < 0) out.essential.push_back(static_cast<Index>(i));
  }
  return out;
}

std::vector<PersistencePair> PersistenceDiagram::in_dimension(int dim, bool include_zero_length) const {
  std::vector<PersistencePair> out;
  for (const auto& p : pairs)
    if (p.dimension == dim && (include_zero_length || !p.zero_length())) out.push_back(p);
  return out;
}

std::vector<int> PersistenceDiagram::betti_at(double scale, int up_to) const {
  std::vector<int> betti(static_cast<std::size_t>(std::max(up_to, -1) + 1), 0);
  for (const auto& p : pairs) {
    if (p.dimension > up_to) continue;
    if (p.birth <= scale && scale < p.death) ++betti[static_cast<std::size_t>(p.dimension)];
  }
  return betti;
}

PersistenceDiagram persistence_diagram(const FilteredComplex& fc) {
  const Reduction red = reduce(boundary_matrix(fc));
  PersistenceDiagram diagram;
  diagram.max_scale = fc.max_value();
  diagram.top_dimension = fc.max_dimension();
  for (const auto& [creator, destroyer] : red.pairs) {
    const auto& c = fc[static_cast<std::size_t>(creator)];
    diagram.pairs.push_back({c.simplex.dimension(), c.value, fc[static_cast<std::size_t>(destroyer)].value, creator,
                             destroyer});
  }
  for (Index creator : red.essential) {
    const auto& c = fc[static_cast<std::size_t>(creator)];
    diagram.pairs.push_back(
        {c.simplex.dimension(), c.value, std::numeric_limits<double>::infinity(), creator, -1});
  }
  std::sort(diagram.pairs.begin(), diagram.pairs.end(), [](const PersistencePair& a, const PersistencePair& b) {
    if (a.dimension != b.dimension) return a.dimension < b.dimension;
    if (a.birth != b.birth) return a.birth < b.birth;
    if (a.death != b.death) return a.death < b.death;
    return a.creator < b.creator;
  });
  return diagram;
}

BettiVector betti_numbers(const SimplicialComplex& complex, int up_to) {
  if (up_to < 0) throw parameter_error("betti_numbers: up_to must be >= 0");
  const BoundaryMatrix bm = boundary_matrix(complex);
  const std::vector<int> dims = bm.dimensions;
  const Reduction red = reduce(bm);
  const int top = std::max(complex.max_dimension(), up_to) + 1;
  std::vector<long> rank(static_cast<std::size_t>(top + 1), 0);
  for (std::size_t j = 0; j < red.low.size(); ++j)
    if (red.low[j] >= 0) ++rank[static_cast<std::size_t>(dims[j])];
  BettiVector betti(static_cast<std::size_t>(up_to + 1), 0);
  for (int k = 0; k <= up_to; ++k) {
    const long simplices = static_cast<long>(complex.count(k));
    betti[static_cast<std::size_t>(k)] =
        static_cast<int>(simplices - rank[static_cast<std::size_t>(k)] - rank[static_cast<std::size_t>(k + 1)]);
  }
  return betti;
}

}  // namespace tda
