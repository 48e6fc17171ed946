#include "retract/report_io.hpp"

#include <sstream>

#include <json.hpp>

#include "retract/problem.hpp"

namespace retract {

namespace {

using Json = nlohmann::ordered_json;

Json integer(const mpz_class& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Json matrix(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json vectors(const std::vector<IntVector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) {
    Json row = Json::array();
    for (const auto& x : v) row.push_back(integer(x));
    out.push_back(std::move(row));
  }
  return out;
}

Json classification_json(const Classification& c) {
  Json out;
  out["tag"] = classification_tag(c);
  if (auto* v = std::get_if<verdict::PureLaurent>(&c)) {
    out["r"] = v->r;
  } else if (auto* v = std::get_if<verdict::LaurentTensorPoly>(&c)) {
    out["r"] = v->r;
    out["s"] = v->s;
  } else if (auto* v = std::get_if<verdict::UFDClassified>(&c)) {
    out["r"] = v->r;
    out["s"] = v->s;
    out["generatorsExplicit"] = v->generators_explicit;
  } else if (auto* v = std::get_if<verdict::BoundsOnly>(&c)) {
    out["lo"] = v->lo;
    out["hi"] = v->hi;
  }
  return out;
}

std::string y_monomial(const RetractReport& rep, const YVariable& y) {
  Exponent e(rep.ring->n(), 0);
  for (std::size_t i = 0; i < y.exponent.size(); ++i) e[i] = y.exponent[i].get_si();
  return monomial_to_string(*rep.ring, e);
}

std::string classification_text(const Classification& c) {
  std::ostringstream os;
  os << classification_tag(c);
  if (auto* v = std::get_if<verdict::PureLaurent>(&c)) {
    os << "(r=" << v->r << ")";
  } else if (auto* v = std::get_if<verdict::LaurentTensorPoly>(&c)) {
    os << "(r=" << v->r << ", s=" << v->s << ")";
  } else if (auto* v = std::get_if<verdict::UFDClassified>(&c)) {
    os << "(r=" << v->r << ", s=" << v->s << ", generators " << (v->generators_explicit ? "explicit" : "implicit")
       << ")";
  } else if (auto* v = std::get_if<verdict::BoundsOnly>(&c)) {
    os << "(" << v->lo << ".." << v->hi << ")";
  }
  return os.str();
}

Json to_json(const RetractReport& rep) {
  const Domain& domain = rep.ring->domain();
  Json j;
  j["ring"] = ring_header(*rep.ring);
  j["domain"] = domain.name();
  j["n"] = rep.ring->n();
  j["d"] = rep.ring->d();
  j["r"] = rep.r;
  if (rep.trdeg.exact()) {
    j["trdeg"] = rep.trdeg.lo;
  } else {
    j["trdeg"] = Json::array({rep.trdeg.lo, rep.trdeg.hi});
  }
  j["classification"] = classification_json(rep.classification);
  j["rationality"] = to_string(rep.rationality);
  Json ys = Json::array(), norms = Json::array(), kinds = Json::array();
  for (const auto& y : rep.y) {
    ys.push_back(y_monomial(rep, y));
    norms.push_back(domain.to_string(y.normalizer));
    kinds.push_back(y.kind == YVariable::Kind::Fixed ? "fixed" : "killed");
  }
  j["yVariables"] = std::move(ys);
  j["normalizers"] = std::move(norms);
  j["yKinds"] = std::move(kinds);
  Json dec;
  dec["M"] = matrix(rep.decomposition.m);
  dec["fixedBasis"] = vectors(rep.decomposition.fixed_basis);
  dec["kernelBasis"] = vectors(rep.decomposition.kernel_basis);
  dec["Y"] = matrix(rep.decomposition.y);
  dec["T"] = matrix(rep.decomposition.t);
  dec["detSign"] = rep.decomposition.det_sign;
  j["decomposition"] = std::move(dec);
  Json gens = Json::array();
  for (const auto& g : rep.generators) gens.push_back(g.to_string());
  j["generators"] = std::move(gens);
  j["quotientRing"] = ring_header(*rep.quotient_ring);
  Json qgens = Json::array();
  for (const auto& g : rep.quotient_generators) qgens.push_back(g.to_string());
  j["quotientGenerators"] = std::move(qgens);
  Json certs;
  for (const auto& c : rep.certificates) certs[c.name] = c.passed;
  j["certificates"] = std::move(certs);
  return j;
}

std::string to_text(const RetractReport& rep) {
  const Domain& domain = rep.ring->domain();
  std::ostringstream os;
  os << ring_header(*rep.ring) << "\n";
  os << "n = " << rep.ring->n() << ", d = " << rep.ring->d() << ", r = " << rep.r << "\n";
  os << "trdeg = ";
  if (rep.trdeg.exact()) {
    os << rep.trdeg.lo;
  } else {
    os << "[" << rep.trdeg.lo << ", " << rep.trdeg.hi << "]";
  }
  os << "\n";
  os << "classification: " << classification_text(rep.classification) << "\n";
  os << "rationality: " << to_string(rep.rationality) << "\n";
  os << "M = " << rep.decomposition.m.to_string() << "\n";
  os << "Y = " << rep.decomposition.y.to_string() << "\n";
  os << "T = " << rep.decomposition.t.to_string() << "\n";
  os << "y-variables:\n";
  for (std::size_t i = 0; i < rep.y.size(); ++i) {
    const auto& y = rep.y[i];
    os << "  y" << i + 1 << " = ";
    os << y_monomial(rep, y) << "  [" << (y.kind == YVariable::Kind::Fixed ? "fixed" : "killed");
    if (y.normalizer != 1) os << ", normalizer " << domain.to_string(y.normalizer);
    os << "]\n";
  }
  os << "generators of A:\n";
  for (const auto& g : rep.generators) os << "  " << g.to_string() << "\n";
  os << "in " << ring_header(*rep.quotient_ring) << ":\n";
  for (const auto& g : rep.quotient_generators) os << "  " << g.to_string() << "\n";
  os << "certificates:\n";
  for (const auto& c : rep.certificates) os << "  " << c.name << ": " << (c.passed ? "ok" : "FAILED") << "\n";
  return os.str();
}

}  // namespace

std::string render_report(const RetractReport& report, ReportFormat format) {
  if (format == ReportFormat::Json) return to_json(report).dump(2) + "\n";
  return to_text(report);
}

}  // namespace retract
