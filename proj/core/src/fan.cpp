#include "bergfan/fan.hpp"

#include <algorithm>
#include <set>

#include "bergfan/error.hpp"

namespace bergfan {

namespace zl = zlattice;

QuotientVector QuotientVector::from_raw(zl::Vector raw) {
  QuotientVector q;
  if (!raw.empty()) {
    const zl::Int last = raw.back();
    for (auto& x : raw) x = zl::checked_add(x, -last);
  }
  q.coords_ = std::move(raw);
  return q;
}

QuotientVector QuotientVector::from_reduced(zl::Vector reduced) {
  reduced.push_back(0);
  QuotientVector q;
  q.coords_ = std::move(reduced);
  return q;
}

zl::Vector QuotientVector::reduced() const {
  if (coords_.empty()) return {};
  return zl::Vector(coords_.begin(), coords_.end() - 1);
}

bool QuotientVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](zl::Int x) { return x == 0; });
}

QuotientVector QuotientVector::primitive() const {
  QuotientVector q;
  q.coords_ = zl::primitive(coords_);
  return q;
}

QuotientVector operator+(const QuotientVector& a, const QuotientVector& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw PreconditionError("quotient vector dimension mismatch");
  return QuotientVector::from_raw(zl::add(a.coords_, b.coords_));
}

QuotientVector operator-(const QuotientVector& a, const QuotientVector& b) { return a + (-1) * b; }

QuotientVector operator*(zl::Int k, const QuotientVector& a) {
  return QuotientVector::from_raw(zl::scale(a.coords_, k));
}

QuotientVector ray_of_flat(const Flat& f, const Graph& ambient) {
  if (!ambient.contains(f.base)) throw PreconditionError("flat does not lie over the ambient graph");
  EdgeSet expected;
  for (const auto& b : f.blocks) {
    for (auto l : b) {
      if (!ambient.has_vertex(l)) throw PreconditionError("flat block label outside the ambient graph");
    }
    expected = expected | ambient.clique_edges(b);
  }
  if (expected != f.base) throw PreconditionError("flat edges do not match its blocks in the ambient graph");
  zl::Vector raw(ambient.edge_count(), 0);
  for (auto i : f.base.indices()) raw[i] = -1;
  return QuotientVector::from_raw(std::move(raw));
}

// ---------------------------------------------------------------------------
// Fan

Fan::Fan(Graph ambient, Graph source) : ambient_(std::move(ambient)), source_(std::move(source)) {}

std::size_t Fan::max_dim() const {
  std::size_t d = 0;
  for (const auto& c : cones_) d = std::max(d, c.dim());
  return d;
}

std::size_t Fan::intern_ray(const QuotientVector& ray) {
  if (ray.ambient_dim() != ambient_.edge_count()) throw PreconditionError("ray dimension mismatch");
  if (ray.is_zero()) throw PreconditionError("zero ray");
  if (ray.primitive() != ray) throw PreconditionError("ray is not primitive");
  const auto [it, inserted] = ray_index_.emplace(ray, rays_.size());
  if (inserted) rays_.push_back(ray);
  return it->second;
}

std::size_t Fan::add_cone(std::vector<std::size_t> rays, std::int64_t weight,
                          std::vector<ChainOfFlats> sources) {
  std::sort(rays.begin(), rays.end());
  if (std::adjacent_find(rays.begin(), rays.end()) != rays.end()) {
    throw PreconditionError("repeated ray in cone");
  }
  for (auto r : rays) {
    if (r >= rays_.size()) throw PreconditionError("cone ray index out of range");
  }
  const auto [it, inserted] = cone_index_.emplace(rays, cones_.size());
  if (inserted) {
    cones_.push_back(Cone{std::move(rays), weight, std::move(sources)});
  } else {
    auto& existing = cones_[it->second].sources;
    for (auto& s : sources) {
      if (std::find(existing.begin(), existing.end(), s) == existing.end()) existing.push_back(std::move(s));
    }
  }
  return it->second;
}

void Fan::set_weight(std::size_t cone, std::int64_t weight) { cones_.at(cone).weight = weight; }

std::optional<std::size_t> Fan::find_ray(const QuotientVector& ray) const {
  const auto it = ray_index_.find(ray);
  if (it == ray_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Fan::find_cone(std::vector<std::size_t> rays) const {
  std::sort(rays.begin(), rays.end());
  const auto it = cone_index_.find(rays);
  if (it == cone_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> Fan::cones_of_dim(std::size_t d) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cones_.size(); ++i) {
    if (cones_[i].dim() == d) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> Fan::maximal_cones() const {
  // Every face of a listed cone is listed, so a cone is non-maximal exactly
  // when it is a facet of some cone one dimension up.
  std::vector<bool> covered(cones_.size(), false);
  for (const auto& c : cones_) {
    for (std::size_t skip = 0; skip < c.rays.size(); ++skip) {
      std::vector<std::size_t> facet;
      for (std::size_t i = 0; i < c.rays.size(); ++i) {
        if (i != skip) facet.push_back(c.rays[i]);
      }
      if (const auto f = find_cone(facet)) covered[*f] = true;
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cones_.size(); ++i) {
    if (!covered[i]) out.push_back(i);
  }
  return out;
}

bool Fan::is_pure() const {
  const std::size_t d = max_dim();
  const auto maximal = maximal_cones();
  return std::all_of(maximal.begin(), maximal.end(), [&](std::size_t i) { return cones_[i].dim() == d; });
}

bool Fan::is_face(std::size_t tau, std::size_t sigma) const {
  const auto& t = cones_.at(tau).rays;
  const auto& s = cones_.at(sigma).rays;
  return std::includes(s.begin(), s.end(), t.begin(), t.end());
}

std::vector<QuotientVector> Fan::cone_rays(std::size_t cone) const {
  std::vector<QuotientVector> out;
  for (auto r : cones_.at(cone).rays) out.push_back(rays_[r]);
  return out;
}

std::vector<std::size_t> Fan::census() const {
  std::vector<std::size_t> out(max_dim() + 1, 0);
  for (const auto& c : cones_) ++out[c.dim()];
  return out;
}

void Fan::canonicalize() {
  std::vector<std::size_t> order(rays_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rays_[a] < rays_[b]; });
  std::vector<std::size_t> new_index(rays_.size());
  std::vector<QuotientVector> rays;
  for (std::size_t i = 0; i < order.size(); ++i) {
    new_index[order[i]] = i;
    rays.push_back(rays_[order[i]]);
  }
  for (auto& c : cones_) {
    for (auto& r : c.rays) r = new_index[r];
    std::sort(c.rays.begin(), c.rays.end());
  }
  std::sort(cones_.begin(), cones_.end(), [](const Cone& a, const Cone& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.rays < b.rays;
  });
  rays_ = std::move(rays);
  ray_index_.clear();
  for (std::size_t i = 0; i < rays_.size(); ++i) ray_index_.emplace(rays_[i], i);
  cone_index_.clear();
  for (std::size_t i = 0; i < cones_.size(); ++i) cone_index_.emplace(cones_[i].rays, i);
}

// ---------------------------------------------------------------------------

namespace {

zl::Rows reduced_rows(const std::vector<QuotientVector>& vs) {
  zl::Rows out;
  for (const auto& v : vs) out.push_back(v.reduced());
  return out;
}

}  // namespace

Fan bergman_fan(const Graph& g) {
  Fan fan(g, g);
  const std::size_t dim = g.edge_count() == 0 ? 0 : g.edge_count() - 1;
  for (auto& chain : enumerate_all_chains(g)) {
    std::vector<std::size_t> rays;
    std::vector<QuotientVector> vectors;
    for (const auto& f : chain.flats()) {
      vectors.push_back(ray_of_flat(f, g));
      rays.push_back(fan.intern_ray(vectors.back()));
    }
    if (zl::rank(reduced_rows(vectors), dim) != chain.length()) {
      throw PreconditionError("chain rays are not linearly independent");
    }
    fan.add_cone(std::move(rays), 1, {std::move(chain)});
  }
  fan.canonicalize();
  return fan;
}

QuotientVector primitive_normal(const std::vector<QuotientVector>& sigma_in,
                                const std::vector<QuotientVector>& tau_in) {
  if (sigma_in.empty()) throw PreconditionError("sigma has no rays");
  const std::size_t m = sigma_in.front().ambient_dim();
  if (m == 0) throw PreconditionError("empty ambient");
  const std::size_t dim = m - 1;
  std::vector<QuotientVector> sigma;
  std::vector<QuotientVector> tau;
  for (const auto& v : sigma_in) {
    if (v.ambient_dim() != m || v.is_zero()) throw PreconditionError("bad ray in sigma");
    sigma.push_back(v.primitive());
  }
  for (const auto& v : tau_in) {
    if (v.ambient_dim() != m || v.is_zero()) throw PreconditionError("bad ray in tau");
    tau.push_back(v.primitive());
  }
  if (tau.size() + 1 != sigma.size()) throw PreconditionError("tau is not of codimension one in sigma");
  std::vector<QuotientVector> extra;
  for (const auto& v : sigma) {
    if (std::find(tau.begin(), tau.end(), v) == tau.end()) extra.push_back(v);
  }
  if (extra.size() != 1) throw PreconditionError("tau is not a face of sigma");
  const zl::Rows sigma_rows = reduced_rows(sigma);
  const zl::Rows tau_rows = reduced_rows(tau);
  if (zl::rank(sigma_rows, dim) != sigma.size()) throw PreconditionError("sigma is not simplicial");

  const zl::Rows lattice = zl::saturation(sigma_rows, dim);
  const zl::Rows functionals = zl::integer_kernel(tau_rows, dim);
  // Images of the lattice basis under the functionals lie on one line Z z.
  std::vector<zl::Vector> images;
  for (const auto& b : lattice) {
    zl::Vector w;
    for (const auto& k : functionals) w.push_back(zl::dot(k, b));
    images.push_back(std::move(w));
  }
  zl::Vector z;
  for (const auto& w : images) {
    if (zl::content(w) != 0) {
      z = zl::primitive(w);
      break;
    }
  }
  if (z.empty()) throw PreconditionError("sigma does not leave the span of tau");
  const auto pivot = static_cast<std::size_t>(
      std::find_if(z.begin(), z.end(), [](zl::Int x) { return x != 0; }) - z.begin());
  auto coefficient = [&](const zl::Vector& w) { return w[pivot] / z[pivot]; };

  zl::Vector u(dim, 0);
  zl::Int g = 0;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const zl::Int lambda = coefficient(images[i]);
    if (lambda == 0) continue;
    const auto [ng, s, t] = zl::extended_gcd(g, lambda);
    u = zl::add(zl::scale(u, s), zl::scale(lattice[i], t));
    g = ng;
  }
  zl::Vector extra_image;
  for (const auto& k : functionals) extra_image.push_back(zl::dot(k, extra.front().reduced()));
  if (coefficient(extra_image) < 0) u = zl::scale(u, -1);

  const zl::Rows tau_lattice = zl::hermite_normal_form(zl::saturation(tau_rows, dim), dim);
  return QuotientVector::from_reduced(zl::reduce_modulo(std::move(u), tau_lattice));
}

BalanceReport is_balanced(const Fan& fan) {
  if (!fan.is_pure()) throw PreconditionError("balancing requires a pure fan");
  const std::size_t d = fan.max_dim();
  BalanceReport report;
  if (d == 0) return report;
  const std::size_t dim = fan.ambient().edge_count() - 1;
  const auto top = fan.cones_of_dim(d);
  for (auto tau : fan.cones_of_dim(d - 1)) {
    const auto tau_rays = fan.cone_rays(tau);
    zl::Vector sum(dim, 0);
    for (auto sigma : top) {
      if (!fan.is_face(tau, sigma)) continue;
      const auto u = primitive_normal(fan.cone_rays(sigma), tau_rays);
      sum = zl::add(sum, zl::scale(u.reduced(), fan.cones()[sigma].weight));
    }
    if (!zl::in_rational_span(sum, reduced_rows(tau_rays), dim)) {
      report.balanced = false;
      report.failing_face = tau;
      return report;
    }
  }
  return report;
}

namespace {

std::vector<std::size_t> kept_coordinates(const Graph& ambient, const Graph& gamma) {
  if (gamma.labels() != ambient.labels()) throw PreconditionError("projection target has different labels");
  std::vector<std::size_t> kept;  // ambient edge index of each gamma edge
  for (const auto& e : gamma.edges()) {
    const auto idx = ambient.edge_index(e.u, e.v);
    if (!idx) throw PreconditionError("projection target is not a subgraph of the ambient graph");
    kept.push_back(*idx);
  }
  if (kept.empty()) throw PreconditionError("projection target has no edges");
  return kept;
}

QuotientVector keep(const QuotientVector& v, const std::vector<std::size_t>& kept) {
  zl::Vector raw;
  for (auto i : kept) raw.push_back(v.coords().at(i));
  return QuotientVector::from_raw(std::move(raw));
}

}  // namespace

QuotientVector project_vector(const QuotientVector& v, const Graph& ambient, const Graph& gamma) {
  if (v.ambient_dim() != ambient.edge_count()) throw PreconditionError("vector dimension mismatch");
  return keep(v, kept_coordinates(ambient, gamma));
}

Fan project_fan(const Fan& fan, const Graph& gamma) {
  const auto kept = kept_coordinates(fan.ambient(), gamma);
  Fan image(gamma, fan.source());
  const std::size_t dim = gamma.edge_count() - 1;

  std::vector<std::optional<QuotientVector>> projected;
  for (const auto& r : fan.rays()) {
    const auto q = keep(r, kept).primitive();
    projected.push_back(q.is_zero() ? std::nullopt : std::optional<QuotientVector>(q));
  }
  for (const auto& c : fan.cones()) {
    std::vector<QuotientVector> vectors;
    for (auto r : c.rays) {
      if (projected[r] && std::find(vectors.begin(), vectors.end(), *projected[r]) == vectors.end()) {
        vectors.push_back(*projected[r]);
      }
    }
    if (zl::rank(reduced_rows(vectors), dim) != vectors.size()) {
      throw PreconditionError("projected cone is not simplicial");
    }
    std::vector<std::size_t> rays;
    for (const auto& v : vectors) rays.push_back(image.intern_ray(v));
    image.add_cone(std::move(rays), 1, c.sources);
  }
  image.canonicalize();
  return image;
}

bool fans_equal(const Fan& a, const Fan& b) {
  if (a.ambient().edges() != b.ambient().edges()) return false;
  auto cone_sets = [](const Fan& f) {
    std::set<std::set<QuotientVector>> out;
    for (const auto& c : f.cones()) {
      std::set<QuotientVector> rays;
      for (auto r : c.rays) rays.insert(f.rays()[r]);
      out.insert(std::move(rays));
    }
    return out;
  };
  return cone_sets(a) == cone_sets(b);
}

}  // namespace bergfan
