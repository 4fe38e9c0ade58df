#include "bergfan/moduli.hpp"

#include <algorithm>

#include "bergfan/catalog.hpp"
#include "bergfan/error.hpp"

namespace bergfan {

namespace {

Graph stability_graph(int n, const std::optional<Graph>& gamma) {
  if (!gamma) return ambient_complete(n);
  if (gamma->labels() != ambient_complete(n).labels()) {
    throw PreconditionError("stability graph labels must be 2.." + std::to_string(n));
  }
  if (!is_connected(*gamma)) throw PreconditionError("stability graph must be connected");
  return *gamma;
}

}  // namespace

std::vector<std::size_t> TropicalComplex::census() const {
  std::vector<std::size_t> out(static_cast<std::size_t>(std::max(n - 2, 1)), 0);
  for (const auto& t : types) ++out[t.bounded_edge_count()];
  return out;
}

TropicalComplex moduli_fan_trop(int n, const std::optional<Graph>& gamma) {
  if (n < 4 || n > 8) throw SizeLimitError("moduli_fan_trop supports 4 <= n <= 8");
  TropicalComplex out;
  out.n = n;
  out.gamma = stability_graph(n, gamma);
  for (auto& t : enumerate_types(n)) {
    if (is_gamma_stable(t, out.gamma).stable) out.types.push_back(std::move(t));
  }
  return out;
}

ModuliFan moduli_fan_rad(int n, const std::optional<Graph>& gamma) {
  if (n < 4 || n > 7) throw SizeLimitError("moduli_fan_rad supports 4 <= n <= 7");
  ModuliFan out;
  out.n = n;
  out.ambient = ambient_complete(n);
  out.gamma = stability_graph(n, gamma);
  out.complex = Fan(out.ambient, out.ambient);

  for (const auto& t : enumerate_types(n)) {
    if (!is_gamma_stable(t, out.gamma).stable) continue;
    for (auto& r : radial_alignments(t)) out.radial_types.push_back(std::move(r));
  }
  std::sort(out.radial_types.begin(), out.radial_types.end());

  std::vector<std::vector<std::size_t>> cone_rays;
  for (const auto& r : out.radial_types) {
    auto chain = psi_radial_to_cof(r);
    std::vector<std::size_t> rays;
    for (const auto& f : chain.flats()) rays.push_back(out.complex.intern_ray(ray_of_flat(f, out.ambient)));
    out.complex.add_cone(rays, 1, {std::move(chain)});
  }
  out.complex.canonicalize();
  out.image = project_fan(out.complex, out.gamma);

  for (const auto& r : out.radial_types) {
    const auto chain = psi_radial_to_cof(r);
    std::vector<std::size_t> rays;
    std::vector<std::size_t> image_rays;
    for (const auto& f : chain.flats()) {
      const auto v = ray_of_flat(f, out.ambient);
      rays.push_back(*out.complex.find_ray(v));
      const auto p = project_vector(v, out.ambient, out.gamma).primitive();
      if (p.is_zero()) continue;
      const auto idx = *out.image.find_ray(p);
      if (std::find(image_rays.begin(), image_rays.end(), idx) == image_rays.end()) image_rays.push_back(idx);
    }
    out.complex_of.push_back(*out.complex.find_cone(rays));
    out.image_of.push_back(*out.image.find_cone(image_rays));
  }
  return out;
}

bool ModuliFan::bijective() const {
  std::vector<std::size_t> preimages(image.cones().size(), 0);
  for (std::size_t i = 0; i < radial_types.size(); ++i) {
    ++preimages[image_of[i]];
    if (complex.cones()[complex_of[i]].dim() != image.cones()[image_of[i]].dim()) return false;
  }
  return std::all_of(preimages.begin(), preimages.end(), [](std::size_t c) { return c == 1; });
}

bool ModuliFan::identified() const { return bijective() && fans_equal(image, bergman_fan(gamma)); }

std::vector<std::size_t> ModuliFan::fiber(std::size_t image_cone) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < image_of.size(); ++i) {
    if (image_of[i] == image_cone) out.push_back(i);
  }
  return out;
}

}  // namespace bergfan
