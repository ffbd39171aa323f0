#include "tda/complex.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "tda/union_find.hpp"

namespace tda {

Simplex::Simplex(std::vector<Index> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw input_error("simplex has a repeated vertex");
  if (!vertices_.empty() && vertices_.front() < 0) throw input_error("simplex has a negative vertex index");
}

std::vector<Simplex> Simplex::facets() const {
  std::vector<Simplex> out;
  if (vertices_.size() < 2) return out;
  out.reserve(vertices_.size());
  // Dropping the last vertex first yields lexicographic order.
  for (std::size_t skip = vertices_.size(); skip-- > 0;) {
    std::vector<Index> face;
    face.reserve(vertices_.size() - 1);
    for (std::size_t k = 0; k < vertices_.size(); ++k)
      if (k != skip) face.push_back(vertices_[k]);
    out.push_back(from_sorted(std::move(face)));
  }
  return out;
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Index v : s.vertices()) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

// --- SimplicialComplex -------------------------------------------------------

SimplicialComplex::SimplicialComplex(std::vector<Simplex> simplices) {
  for (auto& s : simplices) {
    if (s.size() == 0) continue;
    const auto dim = static_cast<std::size_t>(s.dimension());
    if (by_dim_.size() <= dim) by_dim_.resize(dim + 1);
    by_dim_[dim].push_back(std::move(s));
  }
  for (auto& group : by_dim_) {
    std::sort(group.begin(), group.end());
    group.erase(std::unique(group.begin(), group.end()), group.end());
  }
}

SimplicialComplex SimplicialComplex::from_maximal(std::span<const Simplex> maximal) {
  std::vector<Simplex> all;
  for (const auto& top : maximal) {
    const auto& v = top.vertices();
    if (v.size() > 24) throw parameter_error("from_maximal: simplex too large to enumerate faces");
    const std::uint32_t subsets = 1u << v.size();
    for (std::uint32_t mask = 1; mask < subsets; ++mask) {
      std::vector<Index> face;
      for (std::size_t k = 0; k < v.size(); ++k)
        if (mask & (1u << k)) face.push_back(v[k]);
      all.push_back(Simplex::from_sorted(std::move(face)));
    }
  }
  return SimplicialComplex(std::move(all));
}

std::size_t SimplicialComplex::count(int dim) const {
  if (dim < 0 || dim > max_dimension()) return 0;
  return by_dim_[static_cast<std::size_t>(dim)].size();
}

std::size_t SimplicialComplex::size() const {
  std::size_t total = 0;
  for (const auto& group : by_dim_) total += group.size();
  return total;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int dim) const {
  static const std::vector<Simplex> empty;
  if (dim < 0 || dim > max_dimension()) return empty;
  return by_dim_[static_cast<std::size_t>(dim)];
}

std::vector<std::size_t> SimplicialComplex::counts() const {
  std::vector<std::size_t> out;
  for (const auto& group : by_dim_) out.push_back(group.size());
  return out;
}

bool SimplicialComplex::contains(const Simplex& s) const {
  const auto& group = simplices(s.dimension());
  return std::binary_search(group.begin(), group.end(), s);
}

bool SimplicialComplex::is_face_closed() const {
  for (int d = 1; d <= max_dimension(); ++d)
    for (const auto& s : simplices(d))
      for (const auto& f : s.facets())
        if (!contains(f)) return false;
  return true;
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
  for (int d = 0; d <= max_dimension(); ++d) {
    const auto& mine = simplices(d);
    const auto& theirs = other.simplices(d);
    if (!std::includes(theirs.begin(), theirs.end(), mine.begin(), mine.end())) return false;
  }
  return true;
}

SimplicialComplex SimplicialComplex::skeleton(int k) const {
  SimplicialComplex out;
  for (int d = 0; d <= std::min(k, max_dimension()); ++d) out.by_dim_.push_back(by_dim_[static_cast<std::size_t>(d)]);
  return out;
}

// --- FilteredComplex ---------------------------------------------------------

namespace {

bool filtration_less(const FilteredSimplex& a, const FilteredSimplex& b) {
  if (a.value != b.value) return a.value < b.value;
  if (a.simplex.size() != b.simplex.size()) return a.simplex.size() < b.simplex.size();
  return a.simplex < b.simplex;
}

}  // namespace

FilteredComplex::FilteredComplex(std::vector<FilteredSimplex> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(), filtration_less);
}

int FilteredComplex::max_dimension() const {
  int out = -1;
  for (const auto& e : entries_) out = std::max(out, e.simplex.dimension());
  return out;
}

double FilteredComplex::max_value() const { return entries_.empty() ? 0.0 : entries_.back().value; }

bool FilteredComplex::is_valid() const {
  std::unordered_map<Simplex, std::size_t, SimplexHash> position;
  position.reserve(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (!(e.value >= 0.0) || e.simplex.size() == 0) return false;
    for (const auto& f : e.simplex.facets()) {
      auto it = position.find(f);
      if (it == position.end() || entries_[it->second].value > e.value) return false;
    }
    if (!position.emplace(e.simplex, i).second) return false;
  }
  return true;
}

SimplicialComplex FilteredComplex::threshold(double alpha) const {
  std::vector<Simplex> kept;
  for (const auto& e : entries_)
    if (e.value <= alpha) kept.push_back(e.simplex);
  return SimplicialComplex(std::move(kept));
}

// --- construction ------------------------------------------------------------

namespace {

void check_square(const Eigen::Ref<const DistanceMatrix>& dm) {
  if (dm.rows() != dm.cols()) throw input_error("distance matrix is not square");
}

/// Lower-neighbour expansion: each simplex is extended only by vertices larger
/// than its last vertex that are adjacent to all of its vertices, so every
/// clique is produced exactly once, in lexicographic order.
template <typename Visit>
void expand_cliques(const Eigen::Ref<const DistanceMatrix>& dm, double alpha, int max_dim, Visit&& visit) {
  const Index n = dm.rows();
  std::vector<std::vector<Index>> upper(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      if (dm(i, j) <= alpha) upper[static_cast<std::size_t>(i)].push_back(j);

  std::vector<Index> current;
  auto recurse = [&](auto& self, const std::vector<Index>& candidates, double value) -> void {
    visit(current, value);
    if (static_cast<int>(current.size()) - 1 >= max_dim) return;
    for (Index w : candidates) {
      double next_value = value;
      for (Index u : current) next_value = std::max(next_value, dm(u, w));
      const auto& wn = upper[static_cast<std::size_t>(w)];
      std::vector<Index> next;
      std::set_intersection(candidates.begin(), candidates.end(), wn.begin(), wn.end(), std::back_inserter(next));
      current.push_back(w);
      self(self, next, next_value);
      current.pop_back();
    }
  };
  for (Index v = 0; v < n; ++v) {
    current.assign(1, v);
    recurse(recurse, upper[static_cast<std::size_t>(v)], 0.0);
  }
}

}  // namespace

NeighborGraph neighbor_graph(const Eigen::Ref<const DistanceMatrix>& dm, double r) {
  check_square(dm);
  if (!(r >= 0.0)) throw parameter_error("neighbor_graph: radius must be >= 0");
  NeighborGraph g;
  g.n = dm.rows();
  g.radius = r;
  const double reach = 2.0 * r;
  for (Index i = 0; i < g.n; ++i)
    for (Index j = i + 1; j < g.n; ++j)
      if (dm(i, j) <= reach) g.edges.emplace_back(i, j);
  return g;
}

std::vector<std::vector<Index>> connected_components(const NeighborGraph& g) {
  const auto n = static_cast<std::size_t>(g.n);
  UnionFind uf(n);
  for (const auto& [i, j] : g.edges) uf.unite(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  std::vector<std::vector<Index>> clusters;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t root = uf.find(i);
    if (slot[root] == n) {
      slot[root] = clusters.size();
      clusters.emplace_back();
    }
    clusters[slot[root]].push_back(static_cast<Index>(i));
  }
  return clusters;
}

SimplicialComplex rips_complex(const Eigen::Ref<const DistanceMatrix>& dm, double alpha, int max_dim) {
  check_square(dm);
  if (!(alpha >= 0.0)) throw parameter_error("rips_complex: alpha must be >= 0");
  if (max_dim < 0) throw parameter_error("rips_complex: max_dim must be >= 0");
  std::vector<Simplex> simplices;
  expand_cliques(dm, alpha, max_dim,
                 [&](const std::vector<Index>& v, double) { simplices.push_back(Simplex::from_sorted(v)); });
  return SimplicialComplex(std::move(simplices));
}

double minimum_enclosing_radius(const Eigen::Ref<const PointCloud>& cloud, std::span<const Index> vertices) {
  if (cloud.cols() != 2) throw unsupported_error("minimum_enclosing_radius: planar points only");
  auto dist = [&](Index a, Index b) { return p_norm_distance(cloud.row(a), cloud.row(b), 2.0); };
  switch (vertices.size()) {
    case 1:
      return 0.0;
    case 2:
      return 0.5 * dist(vertices[0], vertices[1]);
    case 3: {
      const Index a = vertices[0], b = vertices[1], c = vertices[2];
      const double ab = dist(a, b), bc = dist(b, c), ca = dist(c, a);
      const double longest = std::max({ab, bc, ca});
      // Non-acute (or degenerate) triangles are enclosed by the diametral disc
      // of the longest side; acute ones by the circumcircle.
      const double sq = ab * ab + bc * bc + ca * ca - longest * longest;
      if (sq <= longest * longest) return 0.5 * longest;
      const double cross = (cloud(b, 0) - cloud(a, 0)) * (cloud(c, 1) - cloud(a, 1)) -
                           (cloud(b, 1) - cloud(a, 1)) * (cloud(c, 0) - cloud(a, 0));
      const double area = 0.5 * std::abs(cross);
      if (area == 0.0) return 0.5 * longest;
      return std::max(0.5 * longest, ab * bc * ca / (4.0 * area));
    }
    default:
      throw unsupported_error("minimum_enclosing_radius: 1 to 3 points only");
  }
}

SimplicialComplex cech_complex(const Eigen::Ref<const PointCloud>& cloud, double alpha, int max_dim) {
  validate_cloud(cloud);
  if (cloud.cols() != 2) throw unsupported_error("cech_complex: only planar clouds are supported");
  if (max_dim > 2) throw unsupported_error("cech_complex: max_dim > 2 is not supported in the plane");
  if (max_dim < 0) throw parameter_error("cech_complex: max_dim must be >= 0");
  if (!(alpha >= 0.0)) throw parameter_error("cech_complex: alpha must be >= 0");
  const Index n = cloud.rows();
  std::vector<Simplex> simplices;
  for (Index i = 0; i < n; ++i) simplices.push_back(Simplex::from_sorted({i}));
  if (max_dim >= 1) {
    std::vector<std::vector<char>> adjacent(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    for (Index i = 0; i < n; ++i)
      for (Index j = i + 1; j < n; ++j) {
        const Index pair[] = {i, j};
        if (minimum_enclosing_radius(cloud, pair) <= alpha) {
          adjacent[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
          simplices.push_back(Simplex::from_sorted({i, j}));
        }
      }
    if (max_dim >= 2) {
      auto adj = [&](Index a, Index b) { return adjacent[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != 0; };
      for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j) {
          if (!adj(i, j)) continue;
          for (Index k = j + 1; k < n; ++k) {
            if (!adj(i, k) || !adj(j, k)) continue;
            const Index tri[] = {i, j, k};
            if (minimum_enclosing_radius(cloud, tri) <= alpha) simplices.push_back(Simplex::from_sorted({i, j, k}));
          }
        }
    }
  }
  return SimplicialComplex(std::move(simplices));
}

FilteredComplex rips_filtration(const Eigen::Ref<const DistanceMatrix>& dm, int max_dim, double max_scale) {
  check_square(dm);
  if (max_dim < 0) throw parameter_error("rips_filtration: max_dim must be >= 0");
  if (!(max_scale >= 0.0)) throw parameter_error("rips_filtration: max_scale must be >= 0");
  std::vector<FilteredSimplex> entries;
  expand_cliques(dm, max_scale, max_dim, [&](const std::vector<Index>& v, double value) {
    entries.push_back({Simplex::from_sorted(v), value});
  });
  return FilteredComplex(std::move(entries));
}

}  // namespace tda
