#include "edsn/compression.hpp"

#include "edsn/error.hpp"

namespace edsn {

TripleIndex::TripleIndex(std::size_t n) : n_(n) {
  if (n < 3) throw Error(Errc::InvalidArgument, "triples need n >= 3");
}

Triple TripleIndex::at(std::size_t position) const {
  const std::size_t per_r = (n_ - 1) * (n_ - 2);
  const std::size_t r = position / per_r;
  std::size_t rest = position % per_r;
  std::size_t s = rest / (n_ - 2);
  std::size_t t = rest % (n_ - 2);
  if (s >= r) ++s;
  // t skips both r and s, smaller one first
  const std::size_t lo = r < s ? r : s;
  const std::size_t hi = r < s ? s : r;
  if (t >= lo) ++t;
  if (t >= hi) ++t;
  return {r, s, t};
}

std::size_t TripleIndex::position(const Triple& tr) const {
  const auto [r, s, t] = tr;
  const std::size_t s_rel = s - (s > r ? 1 : 0);
  const std::size_t t_rel = t - (t > r ? 1 : 0) - (t > s ? 1 : 0);
  return r * (n_ - 1) * (n_ - 2) + s_rel * (n_ - 2) + t_rel;
}

namespace {

void require_off_delta(const AmbientPoint& a) {
  if (in_discriminant(a)) throw Error(Errc::OnDiscriminant, "point lies on the discriminant");
}

}  // namespace

CompressionImage pi_eval(const AmbientPoint& a) {
  require_off_delta(a);
  const Field& f = a.field;
  const TripleIndex index(a.size());
  CompressionImage img{a.size(), {}};
  img.values.reserve(index.size());
  for (std::size_t pos = 0; pos < index.size(); ++pos) {
    const auto [r, s, t] = index.at(pos);
    img.values.push_back(f.div(f.sub(a.coords[r], a.coords[s]), f.sub(a.coords[r], a.coords[t])));
  }
  return img;
}

CompressionImage sigma_on_image(const Permutation& sigma, const CompressionImage& img) {
  if (sigma.size() != img.n) throw Error(Errc::SizeMismatch, "permutation/image size");
  const TripleIndex index(img.n);
  const Permutation inv = sigma.inverse();
  CompressionImage out{img.n, {}};
  out.values.reserve(img.values.size());
  for (std::size_t pos = 0; pos < index.size(); ++pos) {
    const auto [r, s, t] = index.at(pos);
    out.values.push_back(img.values[index.position({inv(r), inv(s), inv(t)})]);
  }
  return out;
}

bool affine_invariance_check(const AmbientPoint& a, const BorelElement& g) {
  require_off_delta(a);
  if (a.field.is_zero(g.alpha)) throw Error(Errc::InvalidArgument, "alpha must be nonzero");
  return pi_eval(borel_act(g, a)) == pi_eval(a);
}

KernelWitness kernel_witness(const AmbientPoint& a) {
  if (a.size() < 5) throw Error(Errc::InvalidArgument, "the witness needs n >= 5");
  const CompressionImage img = pi_eval(a);
  const TripleIndex index(a.size());
  const Permutation sigma = Permutation::cycle(a.size(), {2, 4, 5});
  KernelWitness w{img.values[index.position({0, 1, 2})], img.values[index.position({0, 3, 2})]};
  w.image_moved = sigma_on_image(sigma, img) != img;
  w.holds = w.image_moved && w.moved_component != w.fixed_component;
  return w;
}

Matrix pi_jacobian(const AmbientPoint& a) {
  require_off_delta(a);
  const Field& f = a.field;
  const TripleIndex index(a.size());
  Matrix jac(f, index.size(), a.size());
  for (std::size_t pos = 0; pos < index.size(); ++pos) {
    const auto [r, s, t] = index.at(pos);
    const Element denom_inv = f.inv(f.sub(a.coords[r], a.coords[t]));
    const Element denom_inv_sq = f.square(denom_inv);
    jac.at(pos, r) = f.mul(f.sub(a.coords[s], a.coords[t]), denom_inv_sq);
    jac.at(pos, s) = f.neg(denom_inv);
    jac.at(pos, t) = f.mul(f.sub(a.coords[r], a.coords[s]), denom_inv_sq);
  }
  return jac;
}

RankCertificate rank_certificate(const AmbientPoint& a) {
  if (!on_x12(a)) throw Error(Errc::NotOnVariety, "point is not on X_{1,2}");
  require_off_delta(a);
  const Field& f = a.field;
  const std::size_t n = a.size();

  Matrix tangent_eqs(f, 2, n);
  for (std::size_t i = 0; i < n; ++i) {
    tangent_eqs.at(0, i) = f.one();
    tangent_eqs.at(1, i) = f.add(a.coords[i], a.coords[i]);
  }
  const std::vector<Vector> tangent = kernel_basis(tangent_eqs);
  const Matrix jac = pi_jacobian(a);

  RankCertificate cert;
  cert.ambient_rank = rank(jac);
  cert.tangent_dim = tangent.size();
  cert.restricted_rank = restricted_rank(jac, tangent);
  cert.bound = n % f.characteristic() == 0 ? n - 4 : n - 3;
  cert.satisfied = cert.restricted_rank <= cert.bound;
  return cert;
}

}  // namespace edsn
