#include "retract/selftest.hpp"

#include <unistd.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "retract/batch.hpp"
#include "retract/cli.hpp"
#include "retract/corpus.hpp"
#include "retract/generator.hpp"
#include "retract/problem.hpp"
#include "retract/report_io.hpp"

namespace retract {

namespace {

constexpr double kLaurentSuiteBudgetSeconds = 60.0;

struct Instance {
  GeneratorSpec spec;
  Endomorphism map;
};

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d, std::uint64_t e) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::uint64_t v : {a, b, c, d, e}) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

// The retract of rank r is R^{[±r]}; the two extreme ranks carry their own tags.
bool is_laurent_verdict(const Classification& c, std::size_t r, std::size_t n) {
  if (auto* v = std::get_if<verdict::PureLaurent>(&c)) return v->r == r;
  if (std::holds_alternative<verdict::CoefficientRing>(c)) return r == 0;
  if (std::holds_alternative<verdict::WholeRing>(c)) return r == n;
  return false;
}

MixedPoly x_power(const RingPtr& ring, const IntVector& b, const Coeff& c = Coeff(1)) {
  return laurent_monomial(ring, b, c);
}

std::vector<Instance> pure_instances() {
  std::vector<Instance> out;
  const Domain domains[] = {Domain::rationals(), Domain::prime_field(5)};
  for (std::size_t di = 0; di < 2; ++di) {
    for (std::size_t n = 1; n <= 4; ++n) {
      for (std::size_t r = 0; r <= n; ++r) {
        for (unsigned c = 0; c <= 3; ++c) {
          for (std::uint64_t s = 0; s < 5; ++s) {
            GeneratorSpec spec{n, n, r, mix_seed(di, n, r, c, s), c, domains[di]};
            out.push_back(Instance{spec, gen_random_idempotent(spec)});
          }
        }
      }
    }
  }
  return out;
}

std::vector<Instance> mixed_instances() {
  std::vector<Instance> out;
  const Domain domains[] = {Domain::rationals(), Domain::prime_field(5)};
  for (std::size_t di = 0; di < 2; ++di) {
    for (std::size_t n = 2; n <= 4; ++n) {
      for (std::size_t d = 0; d < n; ++d) {
        for (std::size_t r = 0; r <= d; ++r) {
          for (unsigned c = 0; c <= 3; ++c) {
            for (std::uint64_t s = 0; s < 3; ++s) {
              GeneratorSpec spec{n, d, r, mix_seed(100 + di, n * 10 + d, r, c, s), c, domains[di]};
              out.push_back(Instance{spec, gen_random_idempotent(spec)});
            }
          }
        }
      }
    }
  }
  return out;
}

struct Tally {
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }
  std::string summary(const std::string& unit) const {
    std::ostringstream os;
    os << checked << " " << unit << ", " << failures << " failures";
    if (failures) os << " (first: " << first_failure << ")";
    return os.str();
  }
};

std::string describe(const Instance& inst) {
  std::ostringstream os;
  os << inst.spec.domain.name() << " n=" << inst.spec.n << " d=" << inst.spec.d << " r=" << inst.spec.r
     << " c=" << inst.spec.complexity << " seed=" << inst.spec.seed;
  return os.str();
}

// Re-derives every certificate of a pure Laurent instance from scratch.
bool laurent_retract_holds(const Instance& inst, const AnalysisOutcome& outcome, std::string& why) {
  auto fail = [&](std::string message) {
    why = std::move(message);
    return false;
  };
  if (!outcome.report) return fail(outcome.error);
  const RetractReport& rep = *outcome.report;
  const Endomorphism& phi = inst.map;
  const RingPtr& ring = phi.ring();
  const SummandDecomposition& dec = rep.decomposition;
  const IntMatrix m = phi.monomial_part().m;
  const Domain& domain = ring->domain();
  if (!rep.certified()) return fail("certificate failed");
  if (rep.r != inst.spec.r || rep.r != rank(m)) return fail("rank mismatch");
  if (!is_laurent_verdict(rep.classification, rep.r, ring->n())) {
    return fail("verdict " + classification_tag(rep.classification));
  }
  if (!(m * m == m)) return fail("M^2 != M");
  mpz_class det = determinant(dec.y);
  if (det != 1 && det != -1) return fail("|det Y| != 1");
  for (std::size_t i = 0; i < ring->d(); ++i) {
    const YVariable& y = rep.y[i];
    if (y.kind == YVariable::Kind::Fixed) {
      MixedPoly mono = x_power(ring, y.exponent);
      if (!(phi.apply(mono) == mono)) return fail("phi(y_i) != y_i");
    } else {
      MixedPoly mono = x_power(ring, y.exponent, domain.inverse(y.normalizer));
      if (!(phi.apply(mono) == MixedPoly::one(ring))) return fail("phi(y_i) != 1");
    }
    auto u = phi.image(i).is_unit();
    IntVector e(ring->d());
    for (std::size_t j = 0; j < ring->d(); ++j) e[j] = static_cast<long>(u->exp[j]);
    if (!solve_in_lattice(e, dec.fixed_basis)) return fail("image exponent outside the fixed lattice");
  }
  return true;
}

// Scalar-fixedness, φ(J) = 0, injectivity of B/J on A.
void check_retract_structure(const Instance& inst, const RetractReport& rep, Tally& tally) {
  const Endomorphism& phi = inst.map;
  const RingPtr& ring = phi.ring();
  const Domain& domain = ring->domain();
  const std::size_t d = ring->d(), r = rep.r;
  const auto& fixed = rep.decomposition.fixed_basis;
  Rng rng(inst.spec.seed ^ 0xabcdefULL);
  const std::string tag = describe(inst);

  std::vector<IntVector> lattice_points = fixed;
  for (int k = 0; k < 3 && !fixed.empty(); ++k) {
    IntVector b(d);
    for (const auto& v : fixed) {
      long c = static_cast<long>(rng.uniform(-3, 3));
      for (std::size_t i = 0; i < d; ++i) b[i] += c * v[i];
    }
    lattice_points.push_back(std::move(b));
  }
  for (const auto& b : lattice_points) {
    MixedPoly mono = x_power(ring, b);
    tally.check(phi.apply(mono) == mono, "scalar-fixedness " + tag);
  }

  std::vector<MixedPoly> jgens;
  for (std::size_t i = r; i < d; ++i) {
    jgens.push_back(x_power(ring, rep.y[i].exponent, domain.inverse(rep.y[i].normalizer)) - MixedPoly::one(ring));
  }
  for (const auto& g : jgens) tally.check(phi.apply(g).is_zero(), "phi(J generator) != 0 " + tag);
  if (!jgens.empty()) {
    for (int k = 0; k < 20; ++k) {
      MixedPoly comb(ring);
      for (const auto& g : jgens) comb = comb + random_poly(ring, rng, 2, 1, 3) * g;
      tally.check(phi.apply(comb).is_zero(), "phi(J combination) != 0 " + tag);
    }
  }

  for (int k = 0; k < 5; ++k) {
    MixedPoly img = phi.apply(random_poly(ring, rng, 3, 1, 4));
    if (img.is_zero()) continue;
    tally.check(!quotient_mod_J(img, rep.decomposition, rep.y, rep.quotient_ring).is_zero(),
                "quotient kills phi(b) " + tag);
  }
}

MixedPoly extend_poly(const MixedPoly& p, const RingPtr& ring) {
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    Exponent e = t.exp;
    e.resize(ring->n(), 0);
    terms.push_back(Term{t.coeff, std::move(e)});
  }
  return MixedPoly::from_terms(ring, std::move(terms));
}

std::string temp_path(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path();
  return (dir / ("retract-selftest-" + std::to_string(::getpid()) + "-" + name)).string();
}

int cli(const std::vector<std::string>& args, std::string& out) {
  std::ostringstream os, es;
  int code = run_cli(args, os, es);
  out = os.str();
  return code;
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << ": " << r.detail << " (" << r.seconds
     << " s)";
  return os.str();
}

std::vector<CriterionResult> run_acceptance(const SelftestOptions& options) {
  std::vector<CriterionResult> results;
  auto record = [&](CriterionResult res) {
    if (options.on_result) options.on_result(res);
    results.push_back(std::move(res));
  };

  // 1. Every retract of a Laurent polynomial ring is a Laurent polynomial ring.
  auto t0 = Clock::now();
  std::vector<Instance> pure = pure_instances();
  std::vector<Endomorphism> pure_maps;
  for (const auto& inst : pure) pure_maps.push_back(inst.map);
  std::vector<AnalysisOutcome> pure_out = analyze_batch(pure_maps, options.threads);
  {
    Tally tally;
    for (std::size_t i = 0; i < pure.size(); ++i) {
      std::string why;
      bool ok = laurent_retract_holds(pure[i], pure_out[i], why);
      tally.check(ok, describe(pure[i]) + ": " + why);
    }
    double secs = seconds_since(t0);
    bool ok = tally.failures == 0 && tally.checked >= 500 && secs < kLaurentSuiteBudgetSeconds;
    record({1, "laurent-retracts", ok, tally.summary("pure Laurent instances over QQ and GF(5)"), secs});
  }

  // 2. Worked example E1.
  t0 = Clock::now();
  {
    ProblemFile pf = parse_problem(corpus_text("e1"));
    RetractReport rep = analyze(pf.map);
    const RingPtr& ring = pf.ring;
    bool ok = rep.r == 1;
    ok = ok && rep.y.size() == 2 && x_power(ring, rep.y[0].exponent) == parse_poly("x1*x2", ring) &&
         x_power(ring, rep.y[1].exponent) == parse_poly("x2", ring) && rep.y[0].normalizer == 1 &&
         rep.y[1].normalizer == 1 && rep.y[0].kind == YVariable::Kind::Fixed &&
         rep.y[1].kind == YVariable::Kind::Killed;
    ok = ok && rep.decomposition.y == IntMatrix::from_rows({{1, 0}, {1, 1}});
    ok = ok && rep.decomposition.t == IntMatrix::from_rows({{1, 0}, {-1, 1}});
    ok = ok && rep.classification == Classification(verdict::PureLaurent{1}) && rep.certified();
    record({2, "worked-example-E1", ok,
            "r=" + std::to_string(rep.r) + " Y=" + rep.decomposition.y.to_string() +
                " T=" + rep.decomposition.t.to_string() + " " + classification_tag(rep.classification),
            seconds_since(t0)});
  }

  // 3./4. Invariants on every generated instance, pure and mixed.
  t0 = Clock::now();
  std::vector<Instance> mixed = mixed_instances();
  std::vector<Endomorphism> mixed_maps;
  for (const auto& inst : mixed) mixed_maps.push_back(inst.map);
  std::vector<AnalysisOutcome> mixed_out = analyze_batch(mixed_maps, options.threads);
  double mixed_analysis_secs = seconds_since(t0);
  {
    Tally tally;
    std::size_t instances = 0;
    auto visit = [&](const std::vector<Instance>& insts, const std::vector<AnalysisOutcome>& outs) {
      for (std::size_t i = 0; i < insts.size(); ++i) {
        ++instances;
        if (!outs[i].report) {
          tally.check(false, describe(insts[i]) + ": " + outs[i].error);
          continue;
        }
        check_retract_structure(insts[i], *outs[i].report, tally);
      }
    };
    visit(pure, pure_out);
    visit(mixed, mixed_out);
    record({3, "retract-structure", tally.failures == 0,
            std::to_string(instances) + " instances, " + tally.summary("checks"), seconds_since(t0)});
  }

  t0 = Clock::now();
  {
    Tally bounds, oracle;
    auto visit = [&](const std::vector<Instance>& insts, const std::vector<AnalysisOutcome>& outs, bool cross) {
      for (std::size_t i = 0; i < insts.size(); ++i) {
        if (!outs[i].report) {
          bounds.check(false, describe(insts[i]) + ": " + outs[i].error);
          continue;
        }
        const RetractReport& rep = *outs[i].report;
        const std::size_t n = rep.ring->n(), d = rep.ring->d();
        bounds.check(rep.r <= rep.trdeg.lo && rep.trdeg.lo <= rep.trdeg.hi && rep.trdeg.hi <= rep.r + n - d,
                     describe(insts[i]));
        if (cross && rep.ring->domain().characteristic() == 0) {
          std::vector<MixedPoly> ys(rep.generators.begin(), rep.generators.begin() + static_cast<long>(rep.r));
          oracle.check(jacobian_rank(ys, *rep.ring) == rep.r, "Jacobian rank of y's " + describe(insts[i]));
        }
      }
    };
    visit(pure, pure_out, false);
    visit(mixed, mixed_out, true);
    bool ok = bounds.failures == 0 && oracle.failures == 0 && oracle.checked >= 200;
    record({4, "trdeg-bounds", ok,
            bounds.summary("bound checks") + "; " + oracle.summary("mixed QQ Jacobian cross-checks"),
            seconds_since(t0) + mixed_analysis_secs});
  }

  // 5. Cancellation: adjoining m fixed Laurent variables raises the rank by m.
  t0 = Clock::now();
  {
    Tally tally;
    Rng rng(20240501);
    for (int k = 0; k < 50; ++k) {
      std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
      std::size_t r = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n)));
      std::size_t m = static_cast<std::size_t>(rng.uniform(1, 2));
      GeneratorSpec spec{n, n, r, rng.next(), static_cast<unsigned>(rng.uniform(0, 3)), Domain::rationals()};
      Endomorphism phi = gen_random_idempotent(spec);
      RingPtr big = Ring::make(Domain::rationals(), n + m, n + m);
      std::vector<MixedPoly> images;
      for (const auto& img : phi.images()) images.push_back(extend_poly(img, big));
      for (std::size_t j = n; j < n + m; ++j) images.push_back(MixedPoly::variable(big, j));
      AnalysisOutcome out = analyze_captured(Endomorphism(big, std::move(images)));
      bool ok = out.report && out.report->r == r + m && out.report->certified() &&
                is_laurent_verdict(out.report->classification, r + m, n + m);
      tally.check(ok, "n=" + std::to_string(n) + " r=" + std::to_string(r) + " m=" + std::to_string(m));
    }
    record({5, "laurent-cancellation", tally.failures == 0, tally.summary("extensions"), seconds_since(t0)});
  }

  // 6. Classification table.
  t0 = Clock::now();
  {
    struct Row {
      const char* entry;
      Classification expected;
    };
    const Row rows[] = {
        {"identity", verdict::WholeRing{}},
        {"constant", verdict::CoefficientRing{}},
        {"e3", verdict::PureLaurent{1}},
        {"e7", verdict::LaurentTensorPoly{1, 1}},
        {"ufd", verdict::UFDClassified{1, 1, true}},
    };
    Tally tally;
    std::string got;
    for (const auto& row : rows) {
      RetractReport rep = analyze(parse_problem(corpus_text(row.entry)).map);
      bool ok = rep.classification == row.expected && rep.rationality == Rationality::Rational && rep.certified();
      got += std::string(got.empty() ? "" : ", ") + row.entry + "=" + classification_tag(rep.classification);
      tally.check(ok, row.entry);
    }
    record({6, "classification-table", tally.failures == 0, got + "; " + tally.summary("rows"), seconds_since(t0)});
  }

  // 7. Oracle equivalences.
  t0 = Clock::now();
  {
    Tally idem;
    std::size_t idempotent_seen = 0;
    Rng rng(77);
    const Domain qq = Domain::rationals();
    for (int k = 0; k < 1000; ++k) {
      std::size_t d = static_cast<std::size_t>(rng.uniform(1, 3));
      RingPtr ring = Ring::make(qq, d, d);
      IntMatrix m(d, d);
      if (k % 2 == 0) {
        IntMatrix c = random_unimodular(d, rng, 3);
        IntMatrix diag(d, d);
        for (std::size_t i = 0; i < d; ++i) diag(i, i) = rng.coin() ? 1 : 0;
        m = c * diag * unimodular_inverse(c);
      } else {
        for (std::size_t i = 0; i < d; ++i) {
          for (std::size_t j = 0; j < d; ++j) m(i, j) = static_cast<long>(rng.uniform(-1, 1));
        }
      }
      std::vector<Coeff> lambdas;
      bool unit_scalars = rng.coin();
      for (std::size_t i = 0; i < d; ++i) {
        static const long choices[] = {1, -1, 2, 3};
        lambdas.emplace_back(unit_scalars ? 1L : choices[rng.uniform(0, 3)]);
      }
      std::vector<MixedPoly> images;
      for (std::size_t i = 0; i < d; ++i) images.push_back(laurent_monomial(ring, m.column(i), lambdas[i]));
      Endomorphism phi(ring, std::move(images));

      bool criterion = mat_is_idempotent(m);
      for (std::size_t i = 0; i < d && criterion; ++i) {
        Coeff prod(1);
        for (std::size_t j = 0; j < d; ++j) prod = qq.mul(prod, qq.pow(lambdas[j], m(j, i)));
        criterion = prod == 1;
      }
      bool symbolic = phi.is_idempotent();
      idempotent_seen += symbolic ? 1 : 0;
      idem.check(criterion == symbolic, "monomial map " + m.to_string());
    }

    Tally lattice;
    for (int k = 0; k < 300; ++k) {
      std::size_t d = static_cast<std::size_t>(rng.uniform(1, 3));
      IntMatrix m;
      bool small = false;
      while (!small) {
        IntMatrix c = random_unimodular(d, rng, 2);
        IntMatrix diag(d, d);
        for (std::size_t i = 0; i < d; ++i) diag(i, i) = rng.coin() ? 1 : 0;
        m = c * diag * unimodular_inverse(c);
        small = true;
        for (std::size_t i = 0; i < d; ++i) {
          for (std::size_t j = 0; j < d; ++j) small = small && abs(m(i, j)) <= 3;
        }
      }
      std::vector<IntVector> basis = fixed_lattice_basis(m);
      IntVector v(d);
      if (rng.coin()) {
        IntVector w(d);
        for (auto& x : w) x = static_cast<long>(rng.uniform(-2, 2));
        v = m * w;
      } else {
        for (auto& x : v) x = static_cast<long>(rng.uniform(-4, 4));
      }
      // Enumerate coordinates in [-9, 9]^k.
      bool found = false;
      const std::size_t kdim = basis.size();
      std::vector<long> c(kdim, -9);
      while (!found) {
        IntVector s(d);
        for (std::size_t i = 0; i < kdim; ++i) {
          for (std::size_t j = 0; j < d; ++j) s[j] += c[i] * basis[i][j];
        }
        found = s == v;
        std::size_t pos = 0;
        while (pos < kdim && c[pos] == 9) c[pos++] = -9;
        if (pos == kdim) break;
        ++c[pos];
      }
      auto solved = solve_in_lattice(v, basis);
      bool in_range = false;
      if (solved) {
        IntVector s(d);
        in_range = true;
        for (std::size_t i = 0; i < kdim; ++i) {
          in_range = in_range && abs((*solved)[i]) <= 9;
          for (std::size_t j = 0; j < d; ++j) s[j] += (*solved)[i] * basis[i][j];
        }
        lattice.check(s == v, "solve_in_lattice returned wrong coordinates");
      }
      lattice.check(found == (solved.has_value() && in_range), "membership disagreement for M = " + m.to_string());
    }
    bool ok = idem.failures == 0 && lattice.failures == 0 && idempotent_seen > 0 && idempotent_seen < 1000;
    record({7, "oracle-equivalences", ok,
            idem.summary("monomial maps") + " (" + std::to_string(idempotent_seen) + " idempotent); " +
                lattice.summary("lattice membership checks"),
            seconds_since(t0)});
  }

  // 8. CLI and golden behaviour.
  t0 = Clock::now();
  {
    Tally tally;
    std::size_t round_trips = 0;
    for (const auto& entry : embedded_corpus()) {
      if (entry.name == "bad_parse") continue;
      ProblemFile pf = parse_problem(entry.text);
      std::string printed = print_problem(pf.map, pf.options);
      ProblemFile again = parse_problem(printed);
      tally.check(again.map == pf.map && print_problem(again.map, again.options) == printed,
                  "round trip " + entry.name);
      ++round_trips;
      AnalysisOutcome out = analyze_captured(pf.map);
      if (!out.report) continue;
      for (const auto& g : out.report->generators) {
        tally.check(parse_poly(g.to_string(), pf.ring) == g, "generator round trip " + entry.name);
      }
      for (const auto& g : out.report->quotient_generators) {
        tally.check(parse_poly(g.to_string(), out.report->quotient_ring) == g, "quotient round trip " + entry.name);
      }
    }
    for (std::size_t k = 0; k < 20; ++k) {
      GeneratorSpec spec{2 + k % 3, 1 + k % 2, k % 2, 900 + k, 2, k % 3 == 0 ? Domain::prime_field(7) : Domain::rationals()};
      std::string text = generated_problem_text(spec, gen_random_idempotent(spec));
      tally.check(text == generated_problem_text(spec, gen_random_idempotent(spec)), "generator determinism");
      ProblemFile pf = parse_problem(text);
      tally.check(print_problem(pf.map, pf.options, {"generated idempotent endomorphism (prng mt19937_64)"}) == text,
                  "generated round trip");
      ++round_trips;
    }

    auto write = [](const std::string& path, const std::string& text) {
      std::ofstream(path, std::ios::binary) << text;
    };
    const std::string e1 = temp_path("e1.ring"), swap = temp_path("swap.ring"), bad = temp_path("bad.ring");
    write(e1, corpus_text("e1"));
    write(swap, corpus_text("swap"));
    write(bad, corpus_text("bad_parse"));
    std::string json1, json2, ignored;
    int a1 = cli({"analyze", e1, "--json"}, json1);
    int a2 = cli({"analyze", e1, "--json"}, json2);
    tally.check(a1 == kExitOk && a2 == kExitOk && !json1.empty() && json1 == json2, "analyze --json determinism");
    int c0 = cli({"check", e1}, ignored);
    int c1 = cli({"check", swap}, ignored);
    int c2 = cli({"check", bad}, ignored);
    tally.check(c0 == kExitOk && c1 == kExitNotIdempotent && c2 == kExitParseError, "exit codes");
    std::filesystem::remove(e1);
    std::filesystem::remove(swap);
    std::filesystem::remove(bad);
    record({8, "cli-golden", tally.failures == 0,
            std::to_string(round_trips) + " round trips, exit codes " + std::to_string(c0) + "/" + std::to_string(c1) +
                "/" + std::to_string(c2) + ", " + tally.summary("checks"),
            seconds_since(t0)});
  }
  return results;
}

}  // namespace retract
