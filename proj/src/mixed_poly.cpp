#include "retract/mixed_poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "retract/errors.hpp"

namespace retract {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("exponent overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("exponent overflow");
  return out;
}

Exponent add_exponents(const Exponent& a, const Exponent& b) {
  Exponent out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_add(a[i], b[i]);
  return out;
}

bool term_greater(const Term& a, const Term& b) { return grlex_compare(a.exp, b.exp) > 0; }

// Sorts, merges equal exponents and drops zero coefficients.
std::vector<Term> canonical(const Domain& domain, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coeff = domain.add(out.back().coeff, t.coeff);
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      t.coeff = domain.from_rational(t.coeff);
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return out;
}

void require_same_ring(const MixedPoly& p, const MixedPoly& q) {
  if (!same_ring(p.ring(), q.ring())) throw RingMismatch();
}

// Linear merge of two canonical term lists; q's coefficients are scaled by sign.
std::vector<Term> merge(const Domain& domain, const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int cmp = 0;
    if (i == a.size()) {
      cmp = -1;
    } else if (j == b.size()) {
      cmp = 1;
    } else {
      cmp = grlex_compare(a[i].exp, b[j].exp);
    }
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      Term t = b[j++];
      if (negate_b) t.coeff = domain.neg(t.coeff);
      out.push_back(std::move(t));
    } else {
      Coeff c = negate_b ? domain.sub(a[i].coeff, b[j].coeff) : domain.add(a[i].coeff, b[j].coeff);
      if (c != 0) out.push_back(Term{c, a[i].exp});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

int grlex_compare(const Exponent& a, const Exponent& b) {
  __int128 da = 0, db = 0;
  for (auto v : a) da += v;
  for (auto v : b) db += v;
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

MixedPoly MixedPoly::from_terms(RingPtr ring, std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (!ring->admits(t.exp)) throw std::invalid_argument("exponent not admitted by the ring");
  }
  MixedPoly p(std::move(ring));
  p.terms_ = canonical(p.ring_->domain(), std::move(terms));
  return p;
}

MixedPoly MixedPoly::constant(RingPtr ring, const Coeff& c) {
  Exponent zero(ring->n(), 0);
  return from_terms(std::move(ring), {Term{c, std::move(zero)}});
}

MixedPoly MixedPoly::variable(RingPtr ring, std::size_t i) {
  if (i >= ring->n()) throw std::out_of_range("variable index");
  Exponent e(ring->n(), 0);
  e[i] = 1;
  return from_terms(std::move(ring), {Term{Coeff(1), std::move(e)}});
}

MixedPoly MixedPoly::monomial(RingPtr ring, const Coeff& c, Exponent e) {
  return from_terms(std::move(ring), {Term{c, std::move(e)}});
}

bool MixedPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  return std::all_of(terms_[0].exp.begin(), terms_[0].exp.end(), [](auto v) { return v == 0; });
}

Coeff MixedPoly::constant_value() const {
  for (const auto& t : terms_) {
    if (std::all_of(t.exp.begin(), t.exp.end(), [](auto v) { return v == 0; })) return t.coeff;
  }
  return Coeff(0);
}

std::optional<UnitMonomial> MixedPoly::is_unit() const {
  if (terms_.size() != 1) return std::nullopt;
  const Term& t = terms_[0];
  if (!ring_->domain().is_unit(t.coeff)) return std::nullopt;
  for (std::size_t i = ring_->d(); i < t.exp.size(); ++i) {
    if (t.exp[i] != 0) return std::nullopt;
  }
  return UnitMonomial{t.coeff, t.exp};
}

MixedPoly MixedPoly::invert_unit() const {
  auto u = is_unit();
  if (!u) throw NotAUnit(to_string() + " is not a unit");
  Exponent e(u->exp.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked_mul(u->exp[i], -1);
  MixedPoly out(ring_);
  out.terms_.push_back(Term{ring_->domain().inverse(u->scalar), std::move(e)});
  return out;
}

MixedPoly MixedPoly::pow(std::int64_t k) const {
  if (k < 0) return invert_unit().pow(checked_mul(k, -1));
  if (auto u = is_unit(); u && k > 1) {
    Exponent e(u->exp.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked_mul(u->exp[i], k);
    return monomial(ring_, ring_->domain().pow(u->scalar, mpz_class(static_cast<long>(k))), std::move(e));
  }
  MixedPoly result = one(ring_);
  MixedPoly base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

MixedPoly MixedPoly::substitute(std::span<const MixedPoly> images) const {
  if (images.size() != ring_->n()) throw std::invalid_argument("substitute: wrong number of images");
  if (images.empty()) return *this;
  const RingPtr& target = images[0].ring();
  for (const auto& img : images) {
    if (!same_ring(img.ring(), target)) throw RingMismatch();
  }
  if (!(target->domain() == ring_->domain())) throw RingMismatch();

  std::vector<std::map<std::int64_t, MixedPoly>> cache(images.size());
  auto power = [&](std::size_t i, std::int64_t k) -> const MixedPoly& {
    auto it = cache[i].find(k);
    if (it != cache[i].end()) return it->second;
    return cache[i].emplace(k, images[i].pow(k)).first->second;
  };

  std::vector<Term> acc;
  for (const auto& t : terms_) {
    MixedPoly prod = constant(target, t.coeff);
    for (std::size_t i = 0; i < t.exp.size() && !prod.is_zero(); ++i) {
      if (t.exp[i] != 0) prod = prod * power(i, t.exp[i]);
    }
    acc.insert(acc.end(), prod.terms_.begin(), prod.terms_.end());
  }
  MixedPoly out(target);
  out.terms_ = canonical(target->domain(), std::move(acc));
  return out;
}

MixedPoly MixedPoly::partial_derivative(std::size_t i) const {
  if (i >= ring_->n()) throw std::out_of_range("variable index");
  const Domain& domain = ring_->domain();
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.exp[i] == 0) continue;
    Term d{domain.mul(t.coeff, domain.from_int(static_cast<long>(t.exp[i]))), t.exp};
    d.exp[i] = checked_add(d.exp[i], -1);
    out.push_back(std::move(d));
  }
  MixedPoly p(ring_);
  p.terms_ = canonical(domain, std::move(out));
  return p;
}

Coeff MixedPoly::evaluate(std::span<const Coeff> point) const {
  if (point.size() != ring_->n()) throw std::invalid_argument("evaluate: wrong point dimension");
  const Domain field = ring_->domain().fraction_field();
  std::vector<Coeff> pt;
  pt.reserve(point.size());
  for (const auto& c : point) pt.push_back(field.from_rational(c));
  Coeff sum(0);
  for (const auto& t : terms_) {
    Coeff v = t.coeff;
    for (std::size_t i = 0; i < t.exp.size(); ++i) {
      if (t.exp[i] == 0) continue;
      if (pt[i] == 0) {
        if (t.exp[i] < 0) throw EvaluationPole("zero substituted for " + ring_->name(i) + " at a negative exponent");
        v = 0;
        break;
      }
      v = field.mul(v, field.pow(pt[i], mpz_class(static_cast<long>(t.exp[i]))));
    }
    sum = field.add(sum, v);
  }
  return sum;
}

MixedPoly MixedPoly::shift(const Exponent& s) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(Term{t.coeff, add_exponents(t.exp, s)});
  return from_terms(ring_, std::move(out));
}

Exponent MixedPoly::min_exponent() const {
  Exponent m(ring_->n(), 0);
  if (terms_.empty()) return m;
  m = terms_[0].exp;
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], t.exp[i]);
  }
  return m;
}

std::string monomial_to_string(const Ring& ring, const Exponent& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

std::string MixedPoly::to_string() const {
  if (terms_.empty()) return "0";
  const Domain& domain = ring_->domain();
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const Term& t = terms_[k];
    bool negative = t.coeff < 0;
    Coeff mag = negative ? Coeff(-t.coeff) : t.coeff;
    if (k == 0) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono = monomial_to_string(*ring_, t.exp);
    if (mono == "1") {
      out += domain.to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += domain.to_string(mag) + "*" + mono;
    }
  }
  return out;
}

MixedPoly add(const MixedPoly& p, const MixedPoly& q) {
  require_same_ring(p, q);
  return MixedPoly::from_terms(p.ring(), merge(p.ring()->domain(), p.terms(), q.terms(), false));
}

MixedPoly sub(const MixedPoly& p, const MixedPoly& q) {
  require_same_ring(p, q);
  return MixedPoly::from_terms(p.ring(), merge(p.ring()->domain(), p.terms(), q.terms(), true));
}

MixedPoly neg(const MixedPoly& p) { return sub(MixedPoly(p.ring()), p); }

MixedPoly scale(const MixedPoly& p, const Coeff& c) {
  std::vector<Term> out;
  out.reserve(p.size());
  const Domain& domain = p.ring()->domain();
  for (const auto& t : p.terms()) out.push_back(Term{domain.mul(t.coeff, c), t.exp});
  return MixedPoly::from_terms(p.ring(), std::move(out));
}

MixedPoly mul(const MixedPoly& p, const MixedPoly& q) {
  require_same_ring(p, q);
  const Domain& domain = p.ring()->domain();
  std::vector<Term> out;
  out.reserve(p.size() * q.size());
  for (const auto& a : p.terms()) {
    for (const auto& b : q.terms()) out.push_back(Term{domain.mul(a.coeff, b.coeff), add_exponents(a.exp, b.exp)});
  }
  MixedPoly r = MixedPoly::from_terms(p.ring(), std::move(out));
  // R is a domain, so nonzero factors give a nonzero product.
  if (!p.is_zero() && !q.is_zero() && r.is_zero()) throw std::logic_error("zero divisor in a domain");
  return r;
}

MixedPoly divide_exact(const MixedPoly& p, const MixedPoly& q) {
  require_same_ring(p, q);
  if (q.is_zero()) throw std::domain_error("division by zero");
  auto nonnegative = [](const MixedPoly& f) {
    for (const auto& t : f.terms()) {
      for (auto v : t.exp) {
        if (v < 0) return false;
      }
    }
    return true;
  };
  if (!nonnegative(p) || !nonnegative(q)) throw std::invalid_argument("divide_exact needs nonnegative exponents");

  const Domain& domain = p.ring()->domain();
  const Domain field = domain.fraction_field();
  const Term& lead = q.terms().front();
  MixedPoly rem = p;
  std::vector<Term> quotient;
  while (!rem.is_zero()) {
    const Term& lt = rem.terms().front();
    Exponent e(lt.exp.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      e[i] = lt.exp[i] - lead.exp[i];
      if (e[i] < 0) throw std::domain_error("divide_exact: not divisible");
    }
    Coeff c = field.mul(lt.coeff, field.inverse(lead.coeff));
    if (!domain.contains(c)) throw std::domain_error("divide_exact: not divisible");
    quotient.push_back(Term{c, e});
    rem = rem - scale(q, c).shift(e);
  }
  return MixedPoly::from_terms(p.ring(), std::move(quotient));
}

}  // namespace retract
