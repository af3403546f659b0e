#include "dgla/sdr.hpp"

#include <stdexcept>
#include <string>

namespace dgla {

std::size_t Homology::betti(int degree) const {
  const auto it = degrees.find(degree);
  return it == degrees.end() ? 0 : it->second.harmonic.size();
}

GradedDims Homology::harmonic_dims() const {
  std::map<int, std::size_t> dims;
  for (const auto& [deg, h] : degrees) dims[deg] = h.harmonic.size();
  return GradedDims(std::move(dims));
}

namespace {

SubspaceBasis boundaries_in(const Dgla& g, int degree) {
  const auto& d = g.differential();
  const auto it = d.blocks.find(degree - 1);
  if (it == d.blocks.end()) return SubspaceBasis(g.dim(degree));
  return image_basis(it->second);
}

}  // namespace

Homology compute_homology(const Dgla& g) {
  Homology out;
  for (const auto& [deg, dim] : g.dims().map()) {
    HomologyDegree h;
    h.cycles = kernel_basis(g.differential().block(deg));
    h.boundaries = boundaries_in(g, deg);
    h.harmonic = complement_basis(h.boundaries, h.cycles);
    out.degrees.emplace(deg, std::move(h));
  }
  return out;
}

Splitting build_splitting(const Dgla& g) {
  Splitting out;
  const Homology hom = compute_homology(g);
  for (const auto& [deg, h] : hom.degrees) {
    out.degrees.emplace(deg, DegreeSplitting{h.boundaries, h.harmonic, complement_basis(h.cycles)});
  }
  return out;
}

SdrData build_contraction(const Dgla& g, const Splitting& splitting) {
  const GradedDims& dims = g.dims();
  std::map<int, std::size_t> hdims;
  for (const auto& [deg, part] : splitting.degrees) hdims[deg] = part.harmonic.size();
  const GradedDims harmonic_dims(std::move(hdims));

  SdrData sdr;
  sdr.splitting = splitting;
  sdr.d = g.differential();
  sdr.h = GradedMap::zero(dims, -1);
  sdr.projection = GradedMap::zero(dims, harmonic_dims, 0);
  sdr.inclusion = GradedMap::zero(harmonic_dims, dims, 0);
  sdr.boundary_projection = GradedMap::zero(dims, 0);
  sdr.harmonic_projection = GradedMap::zero(dims, 0);
  sdr.complement_projection = GradedMap::zero(dims, 0);

  for (const auto& [deg, dim] : dims.map()) {
    const DegreeSplitting& part = splitting.at(deg);
    if (part.boundaries.size() + part.harmonic.size() + part.complement.size() != dim) {
      throw std::logic_error("splitting does not fill g^" + std::to_string(deg));
    }

    Matrix& inclusion = sdr.inclusion.blocks.at(deg);
    for (std::size_t k = 0; k < part.harmonic.size(); ++k) {
      for (std::size_t r = 0; r < dim; ++r) inclusion.set(r, k, part.harmonic[k][r]);
    }

    // d restricted to C^{deg-1}, as a map from C-coordinates into g^deg.
    Matrix d_on_complement;
    if (part.boundaries.size() != 0) {
      const DegreeSplitting& below = splitting.at(deg - 1);
      d_on_complement = sdr.d.block(deg - 1) * below.complement.as_matrix();
    }

    for (std::size_t j = 0; j < dim; ++j) {
      Vector e = zero_vector(dim);
      e[j] = 1;
      const auto coords =
          split_coordinates({&part.boundaries, &part.harmonic, &part.complement}, e);

      Vector vb = zero_vector(dim);
      Vector vh = zero_vector(dim);
      Vector vc = zero_vector(dim);
      for (std::size_t k = 0; k < part.boundaries.size(); ++k) vb += coords[0][k] * part.boundaries[k];
      for (std::size_t k = 0; k < part.harmonic.size(); ++k) vh += coords[1][k] * part.harmonic[k];
      for (std::size_t k = 0; k < part.complement.size(); ++k) vc += coords[2][k] * part.complement[k];
      for (std::size_t r = 0; r < dim; ++r) {
        sdr.boundary_projection.blocks.at(deg).set(r, j, vb[r]);
        sdr.harmonic_projection.blocks.at(deg).set(r, j, vh[r]);
        sdr.complement_projection.blocks.at(deg).set(r, j, vc[r]);
      }
      for (std::size_t k = 0; k < part.harmonic.size(); ++k) {
        sdr.projection.blocks.at(deg).set(k, j, coords[1][k]);
      }

      if (is_zero(vb)) continue;
      const auto y = solve_linear(d_on_complement, vb);
      if (!y) {
        throw std::logic_error("d restricted to C^" + std::to_string(deg - 1) +
                               " does not reach B^" + std::to_string(deg));
      }
      const Vector preimage = splitting.at(deg - 1).complement.as_matrix().apply(*y);
      Matrix& h = sdr.h.blocks.at(deg);
      for (std::size_t r = 0; r < preimage.size(); ++r) h.set(r, j, preimage[r]);
    }
  }
  return sdr;
}

SdrData build_sdr(const Dgla& g) { return build_contraction(g, build_splitting(g)); }

namespace {

std::string first_bad_degree(const GradedMap& lhs, const GradedMap& rhs) {
  for (const auto& [deg, block] : lhs.blocks) {
    if (!(block == rhs.blocks.at(deg))) return "fails in degree " + std::to_string(deg);
  }
  return "shape mismatch";
}

Check identity_check(std::string name, const GradedMap& lhs, const GradedMap& rhs) {
  const bool ok = lhs == rhs;
  return {std::move(name), ok, ok ? "" : first_bad_degree(lhs, rhs)};
}

}  // namespace

CheckList verify_sdr(const SdrData& sdr) {
  const GradedDims& dims = sdr.dims();
  const GradedMap id = GradedMap::identity(dims);
  const GradedMap laplace = compose(sdr.d, sdr.h) + compose(sdr.h, sdr.d);
  CheckList out;

  out.push_back(identity_check("homotopy", laplace, id - compose(sdr.inclusion, sdr.projection)));

  {
    Check c = identity_check("boundary-inverse", compose(laplace, sdr.boundary_projection),
                             sdr.boundary_projection);
    for (const auto& [deg, part] : sdr.splitting.degrees) {
      for (const auto& z : part.boundaries.vectors()) {
        if (sdr.d.apply(deg - 1, sdr.h.apply(deg, z)) != z) {
          c.passed = false;
          c.detail = "d h z != z for a boundary in degree " + std::to_string(deg);
        }
      }
    }
    out.push_back(std::move(c));
  }

  const GradedMap hh = compose(sdr.h, sdr.h);
  out.push_back(identity_check("h-squared", hh, GradedMap::zero(dims, -2)));
  out.push_back(identity_check("retract", compose(sdr.projection, sdr.inclusion),
                               GradedMap::identity(sdr.inclusion.source)));
  out.push_back(identity_check("h-inclusion", compose(sdr.h, sdr.inclusion),
                               GradedMap::zero(sdr.inclusion.source, dims, -1)));
  out.push_back(identity_check("projection-h", compose(sdr.projection, sdr.h),
                               GradedMap::zero(dims, sdr.projection.target, -1)));

  Check harmonic{"harmonic", true, ""};
  for (const auto& [deg, part] : sdr.splitting.degrees) {
    for (const auto& v : part.harmonic.vectors()) {
      if (!is_zero(sdr.d.apply(deg, v)) || !is_zero(sdr.h.apply(deg, v))) {
        harmonic.passed = false;
        harmonic.detail = "harmonic representative not killed by d and h in degree " +
                          std::to_string(deg);
      }
    }
  }
  out.push_back(std::move(harmonic));
  return out;
}

}  // namespace dgla
