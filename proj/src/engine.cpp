#include "retract/engine.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "retract/errors.hpp"
#include "retract/random.hpp"

namespace retract {

namespace {

using Matrix = std::vector<std::vector<MixedPoly>>;

std::string describe_defects(const Endomorphism& phi, const std::vector<IdempotencyDefect>& defects) {
  std::ostringstream os;
  os << "endomorphism is not idempotent:";
  for (const auto& def : defects) {
    const std::string& name = phi.ring()->name(def.index);
    os << "\n  phi^2(" << name << ") = " << def.twice.to_string() << " != " << def.once.to_string() << " = phi("
       << name << ")";
  }
  return os.str();
}

IntVector laurent_part(const Exponent& e, std::size_t d) {
  IntVector v(d);
  for (std::size_t i = 0; i < d; ++i) v[i] = static_cast<long>(e[i]);
  return v;
}

std::size_t rank_over_q(std::vector<std::vector<Coeff>> a) {
  std::size_t r = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      Coeff f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

// Jacobian rows with Laurent denominators cleared, over QQ with no inverted variables.
Matrix cleared_jacobian(std::span<const MixedPoly> generators, const Ring& ring) {
  RingPtr cleared = Ring::make(Domain::rationals(), 0, ring.names());
  Matrix rows;
  for (const auto& g : generators) {
    std::vector<MixedPoly> row;
    for (std::size_t j = 0; j < ring.n(); ++j) row.push_back(g.partial_derivative(j));
    Exponent lift(ring.n(), 0);
    for (const auto& entry : row) {
      if (entry.is_zero()) continue;
      Exponent m = entry.min_exponent();
      for (std::size_t j = 0; j < lift.size(); ++j) lift[j] = std::max(lift[j], -m[j]);
    }
    std::vector<MixedPoly> out;
    for (const auto& entry : row) {
      std::vector<Term> terms;
      for (const auto& t : entry.terms()) {
        Exponent e = t.exp;
        for (std::size_t j = 0; j < e.size(); ++j) e[j] += lift[j];
        terms.push_back(Term{t.coeff, std::move(e)});
      }
      out.push_back(MixedPoly::from_terms(cleared, std::move(terms)));
    }
    rows.push_back(std::move(out));
  }
  return rows;
}

// Fraction-free elimination over QQ[x]; every division below is exact.
std::size_t bareiss_rank(Matrix a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size(), cols = a[0].size();
  MixedPoly prev = MixedPoly::one(a[0][0].ring());
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (a[i][c].is_zero()) continue;
      if (piv == rows || a[i][c].size() < a[piv][c].size()) piv = i;
    }
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        MixedPoly num = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        a[i][j] = divide_exact(num, prev);
      }
      a[i][c] = MixedPoly(a[i][c].ring());
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

}  // namespace

std::string classification_tag(const Classification& c) {
  struct Visitor {
    std::string operator()(const verdict::CoefficientRing&) const { return "CoefficientRing"; }
    std::string operator()(const verdict::WholeRing&) const { return "WholeRing"; }
    std::string operator()(const verdict::PureLaurent&) const { return "PureLaurent"; }
    std::string operator()(const verdict::LaurentTensorPoly&) const { return "LaurentTensorPoly"; }
    std::string operator()(const verdict::UFDClassified&) const { return "UFDClassified"; }
    std::string operator()(const verdict::BoundsOnly&) const { return "BoundsOnly"; }
  };
  return std::visit(Visitor{}, c);
}

std::string to_string(Rationality r) {
  switch (r) {
    case Rationality::Rational:
      return "Rational";
    case Rationality::Unknown:
      return "Unknown";
    case Rationality::NotApplicable:
      return "NotApplicable";
  }
  return "";
}

bool RetractReport::certified() const {
  return std::all_of(certificates.begin(), certificates.end(), [](const Certificate& c) { return c.passed; });
}

YVariables compute_y_variables(const Endomorphism& phi) {
  if (!phi.validate()) throw InvalidEndomorphism("a Laurent variable maps to a non-unit");
  if (auto defects = phi.idempotency_defects(); !defects.empty()) {
    throw NotIdempotent(describe_defects(phi, defects));
  }
  const RingPtr& ring = phi.ring();
  const Domain& domain = ring->domain();
  YVariables out{decompose(phi.monomial_part().m), {}};
  const SummandDecomposition& dec = out.decomposition;

  for (const auto& b : dec.fixed_basis) {
    MixedPoly y = laurent_monomial(ring, b);
    MixedPoly img = phi.apply(y);
    if (!(img == y)) {
      throw CertificateFailure("fixed monomial " + y.to_string() + " maps to " + img.to_string() +
                               " (expected itself); M = " + dec.m.to_string());
    }
    out.y.push_back(YVariable{b, Coeff(1), YVariable::Kind::Fixed});
  }
  for (const auto& b : dec.kernel_basis) {
    MixedPoly mono = laurent_monomial(ring, b);
    MixedPoly img = phi.apply(mono);
    if (!img.is_constant() || !domain.is_unit(img.constant_value())) {
      throw CertificateFailure("killed monomial " + mono.to_string() + " maps to " + img.to_string() +
                               " (expected a unit scalar); M = " + dec.m.to_string());
    }
    Coeff lambda = img.constant_value();
    MixedPoly normalized = scale(mono, domain.inverse(lambda));
    if (!(phi.apply(normalized) == MixedPoly::one(ring))) {
      throw CertificateFailure("normalized killed variable " + normalized.to_string() + " does not map to 1");
    }
    out.y.push_back(YVariable{b, lambda, YVariable::Kind::Killed});
  }
  return out;
}

RingPtr quotient_ring(const Ring& ring, std::size_t r) {
  std::vector<std::string> poly_names(ring.names().begin() + static_cast<std::ptrdiff_t>(ring.d()),
                                      ring.names().end());
  for (std::string prefix : {"y", "Y", "y_", "u", "v"}) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < r; ++i) names.push_back(prefix + std::to_string(i + 1));
    bool clash = std::any_of(names.begin(), names.end(), [&](const std::string& s) {
      return std::find(poly_names.begin(), poly_names.end(), s) != poly_names.end();
    });
    if (clash) continue;
    names.insert(names.end(), poly_names.begin(), poly_names.end());
    return Ring::make(ring.domain(), r, std::move(names));
  }
  throw std::logic_error("no fresh names for the quotient ring");
}

MixedPoly quotient_mod_J(const MixedPoly& p, const SummandDecomposition& dec, std::span<const YVariable> y,
                         const RingPtr& target) {
  const Ring& src = *p.ring();
  const std::size_t d = src.d(), r = dec.r;
  if (dec.dim() != d || y.size() != d) throw std::invalid_argument("decomposition does not match the ring");
  if (target->d() != r || target->n() != r + src.n() - d) throw std::invalid_argument("wrong quotient ring");
  const Domain& domain = src.domain();
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    IntVector c = dec.t * laurent_part(t.exp, d);
    Coeff coeff = t.coeff;
    for (std::size_t i = r; i < d; ++i) {
      if (c[i] != 0) coeff = domain.mul(coeff, domain.pow(y[i].normalizer, c[i]));
    }
    Exponent e(target->n(), 0);
    for (std::size_t i = 0; i < r; ++i) {
      if (!c[i].fits_slong_p()) throw std::overflow_error("exponent overflow");
      e[i] = c[i].get_si();
    }
    for (std::size_t j = d; j < src.n(); ++j) e[r + (j - d)] = t.exp[j];
    terms.push_back(Term{coeff, std::move(e)});
  }
  return MixedPoly::from_terms(target, std::move(terms));
}

std::size_t jacobian_rank_at(std::span<const MixedPoly> generators, const Ring& ring, std::span<const Coeff> point) {
  std::vector<std::vector<Coeff>> a;
  for (const auto& g : generators) {
    std::vector<Coeff> row;
    for (std::size_t j = 0; j < ring.n(); ++j) row.push_back(g.partial_derivative(j).evaluate(point));
    a.push_back(std::move(row));
  }
  return rank_over_q(std::move(a));
}

std::size_t jacobian_rank(std::span<const MixedPoly> generators, const Ring& ring, RankMode mode,
                          std::uint64_t seed) {
  if (ring.domain().characteristic() != 0) throw std::invalid_argument("Jacobian rank needs characteristic 0");
  if (generators.empty() || ring.n() == 0) return 0;
  if (mode == RankMode::Probabilistic) {
    // Evaluation never overshoots the generic rank, so observing the maximum is conclusive.
    const std::size_t full = std::min(generators.size(), ring.n());
    Rng rng(seed);
    for (int attempt = 0; attempt < 3; ++attempt) {
      std::vector<Coeff> point;
      for (std::size_t j = 0; j < ring.n(); ++j) point.emplace_back(static_cast<long>(rng.uniform(1, 1L << 30)));
      if (jacobian_rank_at(generators, ring, point) == full) return full;
    }
  }
  return bareiss_rank(cleared_jacobian(generators, ring));
}

Trdeg transcendence_degree(std::span<const MixedPoly> generators, const Ring& ring,
                           std::optional<std::size_t> unit_rank) {
  if (generators.empty()) return {0, 0};
  if (ring.domain().characteristic() == 0) {
    std::size_t k = jacobian_rank(generators, ring);
    return {k, k};
  }
  if (!unit_rank) return {0, std::min(generators.size(), ring.n())};
  const std::size_t r = *unit_rank;
  return {r, r + ring.n() - ring.d()};
}

std::optional<std::size_t> idempotent_jacobian_trace(const Endomorphism& phi) {
  const Ring& ring = *phi.ring();
  if (ring.domain().characteristic() != 0) throw std::invalid_argument("Jacobian trace needs characteristic 0");
  MixedPoly trace = MixedPoly::constant(phi.ring(), Coeff(0));
  for (std::size_t i = 0; i < ring.n(); ++i) trace = trace + phi.apply(phi.image(i).partial_derivative(i));
  if (!trace.is_constant()) return std::nullopt;
  Coeff t = trace.constant_value();
  if (t.get_den() != 1 || t < 0 || t > static_cast<long>(ring.n())) return std::nullopt;
  return static_cast<std::size_t>(t.get_num().get_ui());
}

Classification classify(std::size_t n, std::size_t d, std::size_t r, const Trdeg& t, const Domain& domain,
                        bool generators_explicit) {
  if (d > n || r > d || t.lo > t.hi || t.lo < r || t.hi > r + n - d) {
    std::ostringstream os;
    os << "inconsistent classification inputs n=" << n << " d=" << d << " r=" << r << " trdeg=[" << t.lo << ","
       << t.hi << "]";
    throw std::invalid_argument(os.str());
  }
  if (!t.exact()) return verdict::BoundsOnly{t.lo, t.hi};
  const std::size_t k = t.lo;
  if (k == 0) return verdict::CoefficientRing{};
  if (k == n) return verdict::WholeRing{};
  if (k == r) return verdict::PureLaurent{r};
  if (k == r + n - d) return verdict::LaurentTensorPoly{r, n - d};
  // r < k < r + n - d leaves no room when d >= n - 1.
  if (d + 1 >= n) throw std::logic_error("intermediate transcendence degree with d >= n - 1");
  if (n - d == 2 && domain.is_ufd()) return verdict::UFDClassified{r, k - r, generators_explicit};
  return verdict::BoundsOnly{r, r + n - d};
}

Rationality rationality_verdict(std::size_t n, std::size_t d, std::size_t r, const Trdeg& t, const Domain& domain) {
  (void)r;
  if (!domain.is_field()) throw std::invalid_argument("rationality verdict needs a field, got " + domain.name());
  if (n <= 3 || d + 2 >= n) return Rationality::Rational;
  for (std::size_t k = t.lo; k <= t.hi; ++k) {
    if (k != 0 && k != 1 && k != n) return Rationality::Unknown;
  }
  return Rationality::Rational;
}

RetractReport analyze(const Endomorphism& phi) {
  const RingPtr& ring = phi.ring();
  const std::size_t n = ring->n(), d = ring->d();
  const Domain& domain = ring->domain();

  YVariables yv = compute_y_variables(phi);
  RetractReport rep;
  rep.ring = ring;
  rep.r = yv.decomposition.r;
  rep.decomposition = std::move(yv.decomposition);
  rep.y = std::move(yv.y);
  const SummandDecomposition& dec = rep.decomposition;
  const std::size_t r = rep.r;
  auto certify = [&](std::string name, bool ok) { rep.certificates.push_back(Certificate{std::move(name), ok}); };

  certify("M_idempotent", mat_is_idempotent(dec.m));
  mpz_class det = determinant(dec.y);
  certify("det_Y_unit", det == 1 || det == -1);
  certify("T_inverse_of_Y", dec.t * dec.y == IntMatrix::identity(d) && dec.y * dec.t == IntMatrix::identity(d));
  {
    IntMatrix diag(d, d);
    for (std::size_t i = 0; i < r; ++i) diag(i, i) = 1;
    certify("M_Y_diagonal", dec.m * dec.y == dec.y * diag);
  }
  // compute_y_variables throws unless both hold.
  certify("fixed_y_fixed", true);
  certify("killed_y_one", true);
  {
    bool ok = true;
    for (std::size_t i = 0; i < d && ok; ++i) ok = solve_in_lattice(dec.m.column(i), dec.fixed_basis).has_value();
    certify("image_lattice_membership", ok);
  }

  for (std::size_t i = 0; i < r; ++i) rep.generators.push_back(laurent_monomial(ring, rep.y[i].exponent));
  for (std::size_t j = d; j < n; ++j) rep.generators.push_back(phi.image(j));

  rep.quotient_ring = quotient_ring(*ring, r);
  for (const auto& g : rep.generators) rep.quotient_generators.push_back(quotient_mod_J(g, dec, rep.y, rep.quotient_ring));
  {
    bool ok = true;
    for (std::size_t i = 0; i < r; ++i) {
      ok = ok && rep.quotient_generators[i] == MixedPoly::variable(rep.quotient_ring, i);
    }
    certify("quotient_fixed_y", ok);
  }

  // J-generators vanish under φ, also inside sampled B-combinations.
  Rng rng(0x5eed5eedULL + n * 131 + d);
  {
    std::vector<MixedPoly> jgens;
    for (std::size_t i = r; i < d; ++i) {
      jgens.push_back(laurent_monomial(ring, rep.y[i].exponent, domain.inverse(rep.y[i].normalizer)) -
                      MixedPoly::one(ring));
    }
    bool ok = true;
    for (const auto& g : jgens) ok = ok && phi.apply(g).is_zero();
    for (int s = 0; s < 4 && ok && !jgens.empty(); ++s) {
      MixedPoly comb(ring);
      for (const auto& g : jgens) comb = comb + random_poly(ring, rng, 2, 1, 3) * g;
      ok = phi.apply(comb).is_zero();
    }
    certify("phi_J_zero", ok);
  }
  {
    bool ok = true;
    for (int s = 0; s < 4 && ok; ++s) {
      MixedPoly img = phi.apply(random_poly(ring, rng, 3, 1, 3));
      if (!img.is_zero()) ok = !quotient_mod_J(img, dec, rep.y, rep.quotient_ring).is_zero();
    }
    certify("quotient_injective_sample", ok);
  }

  if (domain.characteristic() == 0) {
    auto t = idempotent_jacobian_trace(phi);
    certify("jacobian_trace_constant", t.has_value());
    rep.trdeg = t ? Trdeg{*t, *t} : transcendence_degree(rep.generators, *ring, r);
  } else {
    rep.trdeg = transcendence_degree(rep.generators, *ring, r);
  }
  if (domain.characteristic() != 0 && !rep.trdeg.exact()) {
    // In B/J ≅ S[x_{d+1..n}], a generator outside S is transcendental over S and
    // generators inside S add nothing.
    std::size_t outside = 0;
    for (std::size_t k = r; k < rep.quotient_generators.size(); ++k) {
      const auto& terms = rep.quotient_generators[k].terms();
      bool uses_poly = std::any_of(terms.begin(), terms.end(), [&](const Term& t) {
        return std::any_of(t.exp.begin() + static_cast<std::ptrdiff_t>(r), t.exp.end(), [](auto v) { return v != 0; });
      });
      if (uses_poly) ++outside;
    }
    rep.trdeg.hi = std::min(rep.trdeg.hi, r + outside);
    if (outside > 0) rep.trdeg.lo = std::max(rep.trdeg.lo, r + 1);
  }
  certify("trdeg_bounds", r <= rep.trdeg.lo && rep.trdeg.lo <= rep.trdeg.hi && rep.trdeg.hi <= r + n - d);
  if (domain.characteristic() == 0) {
    // Best evaluation rank over three seeded points against the exact rank.
    std::size_t best = 0;
    Rng points(0xc0ffee);
    for (int attempt = 0; attempt < 3 && ring->n() > 0; ++attempt) {
      std::vector<Coeff> point;
      for (std::size_t j = 0; j < n; ++j) point.emplace_back(static_cast<long>(points.uniform(1, 1L << 30)));
      best = std::max(best, jacobian_rank_at(rep.generators, *ring, point));
    }
    certify("jacobian_crosscheck", best == rep.trdeg.lo);
  }

  // The polynomial-variable generators witness A = S[g] when exactly one distinct
  // one leaves S.
  bool explicit_generators = false;
  if (rep.trdeg.exact() && rep.trdeg.lo > r) {
    std::vector<MixedPoly> outside;
    for (std::size_t k = r; k < rep.quotient_generators.size(); ++k) {
      const MixedPoly& g = rep.quotient_generators[k];
      bool uses_poly = std::any_of(g.terms().begin(), g.terms().end(), [&](const Term& t) {
        return std::any_of(t.exp.begin() + static_cast<std::ptrdiff_t>(r), t.exp.end(), [](auto v) { return v != 0; });
      });
      if (uses_poly && std::find(outside.begin(), outside.end(), g) == outside.end()) outside.push_back(g);
    }
    explicit_generators = outside.size() == rep.trdeg.lo - r;
  }
  rep.classification = classify(n, d, r, rep.trdeg, domain, explicit_generators);
  rep.rationality = domain.is_field() ? rationality_verdict(n, d, r, rep.trdeg, domain) : Rationality::NotApplicable;
  return rep;
}

}  // namespace retract
