#include "retract/endomorphism.hpp"

#include <stdexcept>

#include "retract/errors.hpp"

namespace retract {

Endomorphism::Endomorphism(RingPtr ring, std::vector<MixedPoly> images)
    : ring_(std::move(ring)), images_(std::move(images)) {
  if (images_.size() != ring_->n()) throw std::invalid_argument("endomorphism needs one image per variable");
  for (const auto& img : images_) {
    if (!same_ring(img.ring(), ring_)) throw RingMismatch();
  }
}

Endomorphism Endomorphism::identity(RingPtr ring) {
  std::vector<MixedPoly> images;
  for (std::size_t i = 0; i < ring->n(); ++i) images.push_back(MixedPoly::variable(ring, i));
  return Endomorphism(std::move(ring), std::move(images));
}

bool Endomorphism::validate() const {
  for (std::size_t i = 0; i < ring_->d(); ++i) {
    if (!images_[i].is_unit()) return false;
  }
  return true;
}

MixedPoly Endomorphism::apply(const MixedPoly& p) const {
  if (!same_ring(p.ring(), ring_)) throw RingMismatch();
  if (!validate()) throw InvalidEndomorphism("a Laurent variable maps to a non-unit");
  return p.substitute(images_);
}

std::vector<IdempotencyDefect> Endomorphism::idempotency_defects() const {
  std::vector<IdempotencyDefect> out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    MixedPoly twice = apply(images_[i]);
    if (!(twice == images_[i])) out.push_back(IdempotencyDefect{i, std::move(twice), images_[i]});
  }
  return out;
}

bool Endomorphism::is_idempotent() const { return idempotency_defects().empty(); }

MonomialData Endomorphism::monomial_part() const {
  const std::size_t d = ring_->d();
  MonomialData md{IntMatrix(d, d), {}};
  for (std::size_t i = 0; i < d; ++i) {
    auto u = images_[i].is_unit();
    if (!u) throw InvalidEndomorphism(ring_->name(i) + " maps to the non-unit " + images_[i].to_string());
    for (std::size_t j = 0; j < d; ++j) md.m(j, i) = static_cast<long>(u->exp[j]);
    md.lambdas.push_back(u->scalar);
  }
  return md;
}

Endomorphism compose(const Endomorphism& phi, const Endomorphism& psi) {
  if (!same_ring(phi.ring(), psi.ring())) throw RingMismatch();
  std::vector<MixedPoly> images;
  images.reserve(psi.images().size());
  for (const auto& img : psi.images()) images.push_back(phi.apply(img));
  return Endomorphism(phi.ring(), std::move(images));
}

Endomorphism conjugate(const Endomorphism& phi, const Endomorphism& alpha, const Endomorphism& alpha_inv) {
  Endomorphism id = Endomorphism::identity(phi.ring());
  if (!(compose(alpha, alpha_inv) == id) || !(compose(alpha_inv, alpha) == id)) {
    throw InvalidEndomorphism("conjugate: alpha_inv is not a two-sided inverse of alpha");
  }
  return compose(alpha, compose(phi, alpha_inv));
}

Endomorphism standard_projection(RingPtr ring, const std::set<std::size_t>& keep_laurent,
                                 const std::set<std::size_t>& keep_poly) {
  std::vector<MixedPoly> images;
  for (std::size_t i = 0; i < ring->n(); ++i) {
    if (ring->is_laurent(i)) {
      images.push_back(keep_laurent.contains(i) ? MixedPoly::variable(ring, i) : MixedPoly::one(ring));
    } else {
      images.push_back(keep_poly.contains(i) ? MixedPoly::variable(ring, i) : MixedPoly(ring));
    }
  }
  return Endomorphism(std::move(ring), std::move(images));
}

MixedPoly laurent_monomial(const RingPtr& ring, const IntVector& e, const Coeff& c) {
  Exponent exp(ring->n(), 0);
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!e[i].fits_slong_p()) throw std::overflow_error("exponent overflow");
    exp[i] = e[i].get_si();
  }
  return MixedPoly::monomial(ring, c, std::move(exp));
}

}  // namespace retract
