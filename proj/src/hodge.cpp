#include "dgla/hodge.hpp"

#include <stdexcept>
#include <string>

namespace dgla {

namespace {

void require_valid(const SdrData& sdr) {
  for (const auto& c : verify_sdr(sdr)) {
    if (!c.passed) throw std::invalid_argument("SDR side condition '" + c.name + "' fails");
  }
}

SubspaceBasis span_of(std::size_t dim, const std::vector<Vector>& vs) {
  // Reduce to an independent subset, keeping order.
  std::vector<Vector> kept;
  for (const auto& v : vs) {
    kept.push_back(v);
    if (rank(kept, dim) != kept.size()) kept.pop_back();
  }
  return SubspaceBasis(dim, std::move(kept));
}

bool same_span(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.size() != b.size()) return false;
  std::vector<Vector> joint = a.vectors();
  joint.insert(joint.end(), b.vectors().begin(), b.vectors().end());
  return rank(joint, a.ambient_dim()) == a.size();
}

}  // namespace

Matrix star_operator(const SdrData& sdr) {
  require_valid(sdr);
  return compose(sdr.inclusion, sdr.projection).total() + sdr.d.total() + sdr.h.total();
}

Codifferential codifferential(const SdrData& sdr) {
  const Matrix star = star_operator(sdr);
  return {sdr.h, star * sdr.d.total() * star == sdr.h.total()};
}

Laplacian laplacian(const SdrData& sdr) {
  GradedMap lap = compose(sdr.d, sdr.h) + compose(sdr.h, sdr.d);
  const bool ok = lap == GradedMap::identity(sdr.dims()) - compose(sdr.inclusion, sdr.projection);
  return {std::move(lap), ok};
}

HodgeData build_hodge(const SdrData& sdr) {
  HodgeData out;
  out.star = star_operator(sdr);
  out.codifferential = sdr.h;
  out.laplacian = laplacian(sdr).map;
  out.double_projection = out.laplacian;
  return out;
}

HodgeParts hodge_decompose(const SdrData& sdr, int degree, const Vector& v) {
  const DegreeSplitting& part = sdr.splitting.at(degree);
  const auto coords = split_coordinates({&part.boundaries, &part.harmonic, &part.complement}, v);
  HodgeParts out{zero_vector(v.size()), zero_vector(v.size()), zero_vector(v.size())};
  for (std::size_t k = 0; k < part.boundaries.size(); ++k) out.boundary += coords[0][k] * part.boundaries[k];
  for (std::size_t k = 0; k < part.harmonic.size(); ++k) out.harmonic += coords[1][k] * part.harmonic[k];
  for (std::size_t k = 0; k < part.complement.size(); ++k) out.coboundary += coords[2][k] * part.complement[k];
  return out;
}

CartanResult check_cartan(const Dgla& g, const SdrData& sdr) {
  for (const auto& [p, left] : sdr.splitting.degrees) {
    for (const auto& [q, right] : sdr.splitting.degrees) {
      const int target = p + q;
      if (g.dim(target) == 0 || g.dim(target - 1) == 0) continue;
      const SubspaceBasis& coboundaries = sdr.splitting.at(target - 1).complement;
      for (std::size_t i = 0; i < left.harmonic.size(); ++i) {
        for (std::size_t j = 0; j < right.harmonic.size(); ++j) {
          const Vector w = sdr.h.apply(target, g.bracket(p, left.harmonic[i], q, right.harmonic[j]));
          if (is_zero(w)) continue;
          if (coboundaries.empty() || !coboundaries.contains(w)) {
            return {false, std::make_pair(HarmonicRef{p, i}, HarmonicRef{q, j})};
          }
        }
      }
    }
  }
  return {};
}

CheckList verify_hodge(const Dgla& g, const SdrData& sdr) {
  CheckList out;
  const GradedDims& dims = sdr.dims();
  const Matrix star = star_operator(sdr);
  out.push_back({"star-involution", star * star == Matrix::identity(dims.total()), ""});
  out.push_back({"star-codifferential", codifferential(sdr).star_identity, ""});

  const Laplacian lap = laplacian(sdr);
  out.push_back({"laplacian-projection", lap.is_projection_identity, ""});

  Check kernel{"laplacian-kernel", true, ""};
  Check image{"double-image", true, ""};
  Check decomposition{"decomposition", true, ""};
  Check coboundaries{"coboundaries-image-h", true, ""};
  Check d_injective{"d-injective-on-coboundaries", true, ""};
  Check h_injective{"h-injective-on-boundaries", true, ""};
  for (const auto& [deg, dim] : dims.map()) {
    const DegreeSplitting& part = sdr.splitting.at(deg);
    const std::string where = " in degree " + std::to_string(deg);
    if (!same_span(kernel_basis(lap.map.block(deg)), part.harmonic)) {
      kernel.passed = false;
      kernel.detail = "ker laplacian != H" + where;
    }
    std::vector<Vector> doubled = part.boundaries.vectors();
    doubled.insert(doubled.end(), part.complement.vectors().begin(), part.complement.vectors().end());
    if (!same_span(image_basis(lap.map.block(deg)), SubspaceBasis(dim, doubled))) {
      image.passed = false;
      image.detail = "im laplacian != B + B*" + where;
    }
    for (std::size_t j = 0; j < dim; ++j) {
      Vector e = zero_vector(dim);
      e[j] = 1;
      const HodgeParts parts = hodge_decompose(sdr, deg, e);
      const bool members = part.boundaries.contains(parts.boundary) &&
                           part.harmonic.contains(parts.harmonic) &&
                           part.complement.contains(parts.coboundary);
      if (!members || parts.boundary + parts.harmonic + parts.coboundary != e) {
        decomposition.passed = false;
        decomposition.detail = "basis vector does not decompose" + where;
      }
    }
    // B*^deg = im(h: g^{deg+1} -> g^deg).
    const auto h_up = sdr.h.blocks.find(deg + 1);
    const SubspaceBasis im_h = h_up == sdr.h.blocks.end() ? SubspaceBasis(dim)
                                                          : span_of(dim, image_basis(h_up->second).vectors());
    if (!same_span(im_h, part.complement)) {
      coboundaries.passed = false;
      coboundaries.detail = "im h != C" + where;
    }
    if (!part.complement.empty()) {
      const Matrix dc = sdr.d.block(deg) * part.complement.as_matrix();
      if (rank(dc) != part.complement.size()) {
        d_injective.passed = false;
        d_injective.detail = "d not injective on B*" + where;
      }
    }
    if (!part.boundaries.empty()) {
      const Matrix hb = sdr.h.block(deg) * part.boundaries.as_matrix();
      if (rank(hb) != part.boundaries.size()) {
        h_injective.passed = false;
        h_injective.detail = "h not injective on B" + where;
      }
    }
  }
  out.push_back(std::move(kernel));
  const GradedMap& p = lap.map;
  out.push_back({"double-idempotent", compose(p, p) == p, ""});
  out.push_back(std::move(image));
  out.push_back(std::move(decomposition));
  out.push_back(std::move(coboundaries));
  out.push_back(std::move(d_injective));
  out.push_back(std::move(h_injective));

  const CartanResult cartan = check_cartan(g, sdr);
  std::string detail;
  if (cartan.witness) {
    detail = "h[H,H] leaves B* at harmonic pair (" + std::to_string(cartan.witness->first.degree) +
             ":" + std::to_string(cartan.witness->first.index) + ", " +
             std::to_string(cartan.witness->second.degree) + ":" +
             std::to_string(cartan.witness->second.index) + ")";
  }
  out.push_back({"cartan", cartan.holds, detail});
  return out;
}

}  // namespace dgla
