#include "retract/problem.hpp"

#include <cctype>
#include <optional>
#include <sstream>

#include "retract/errors.hpp"

namespace retract {

namespace {

constexpr std::string_view kPlusMinus = "\xC2\xB1";
constexpr std::int64_t kMaxExponent = 1 << 20;

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

// Cursor over one line of input.
class Cursor {
 public:
  Cursor(std::string_view text, std::size_t line) : s_(text), line_(line) {}

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(line_, pos_ + 1, message); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& message) const {
    throw ParseError(line_, pos + 1, message);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool at_end() {
    skip();
    return pos_ >= s_.size();
  }
  bool accept(std::string_view token) {
    skip();
    if (s_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }
  std::string identifier() {
    skip();
    if (pos_ >= s_.size() || !ident_start(s_[pos_])) fail("expected an identifier");
    std::size_t start = pos_;
    while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  mpz_class integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }
  std::size_t pos() const { return pos_; }
  std::string_view rest() const { return s_.substr(pos_); }

 private:
  std::string_view s_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

class ExprParser {
 public:
  ExprParser(Cursor& cur, const RingPtr& ring) : cur_(cur), ring_(ring) {}

  MixedPoly expr() {
    bool negate = cur_.accept("-");
    if (!negate) cur_.accept("+");
    MixedPoly acc = term();
    if (negate) acc = -acc;
    while (true) {
      char c = cur_.peek();
      if (c != '+' && c != '-') break;
      cur_.accept(std::string_view(&c, 1));
      MixedPoly t = term();
      acc = c == '+' ? acc + t : acc - t;
    }
    return acc;
  }

 private:
  MixedPoly term() {
    MixedPoly acc = unary();
    while (true) {
      char c = cur_.peek();
      if (c == '*') {
        cur_.accept("*");
        acc = acc * unary();
      } else if (c == '/') {
        cur_.accept("/");
        std::size_t at = cur_.pos();
        MixedPoly den = unary();
        if (!den.is_constant() || den.is_zero()) cur_.fail_at(at, "division by a non-constant or zero");
        const Domain& domain = ring_->domain();
        if (!domain.is_unit(den.constant_value())) {
          cur_.fail_at(at, "division by " + den.to_string() + ", which is not a unit of " + domain.name());
        }
        acc = scale(acc, domain.inverse(den.constant_value()));
      } else {
        return acc;
      }
    }
  }

  MixedPoly unary() {
    if (cur_.peek() == '-') {
      cur_.accept("-");
      return -unary();
    }
    if (cur_.peek() == '+') {
      cur_.accept("+");
      return unary();
    }
    return power();
  }

  MixedPoly power() {
    std::optional<std::size_t> var;
    MixedPoly base = atom(var);
    if (cur_.peek() != '^') return base;
    cur_.accept("^");
    bool negative = false;
    if (cur_.peek() == '-' || cur_.peek() == '+') {
      negative = cur_.peek() == '-';
      cur_.accept(negative ? "-" : "+");
    }
    std::size_t at = cur_.pos();
    mpz_class k = cur_.integer();
    if (k > kMaxExponent) cur_.fail_at(at, "exponent too large");
    if (negative && k != 0) {
      if (var && !ring_->is_laurent(*var)) {
        cur_.fail_at(at, "negative exponent on polynomial variable " + ring_->name(*var));
      }
      if (!base.is_unit()) cur_.fail_at(at, "negative exponent on a non-unit");
    }
    std::int64_t e = k.get_si();
    return base.pow(negative ? -e : e);
  }

  MixedPoly atom(std::optional<std::size_t>& var) {
    char c = cur_.peek();
    if (c == '(') {
      cur_.accept("(");
      MixedPoly inner = expr();
      cur_.expect(")");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t at = cur_.pos();
      mpz_class v = cur_.integer();
      try {
        return MixedPoly::constant(ring_, Coeff(v));
      } catch (const std::exception& e) {
        cur_.fail_at(at, e.what());
      }
    }
    if (ident_start(c)) {
      std::size_t at = cur_.pos();
      std::string name = cur_.identifier();
      std::size_t i = ring_->index_of(name);
      if (i == ring_->n()) cur_.fail_at(at, "undeclared identifier " + name);
      var = i;
      return MixedPoly::variable(ring_, i);
    }
    if (c == '\0') cur_.fail("unexpected end of expression");
    cur_.fail(std::string("unexpected character '") + c + "'");
  }

  Cursor& cur_;
  const RingPtr& ring_;
};

RingPtr parse_header(Cursor& cur) {
  cur.skip();
  if (cur.identifier() != "ring") cur.fail("expected 'ring' header");
  std::size_t at = cur.pos();
  std::string dom = cur.identifier();
  std::optional<Domain> domain;
  if (dom == "QQ") {
    domain = Domain::rationals();
  } else if (dom == "ZZ") {
    domain = Domain::integers();
  } else if (dom == "GF") {
    cur.expect("(");
    std::size_t pat = cur.pos();
    mpz_class p = cur.integer();
    if (!p.fits_ulong_p()) cur.fail_at(pat, "characteristic too large");
    try {
      domain = Domain::prime_field(p.get_ui());
    } catch (const std::invalid_argument&) {
      cur.fail_at(pat, p.get_str() + " is not prime");
    }
    cur.expect(")");
  } else {
    cur.fail_at(at, "unknown domain " + dom + " (expected QQ, ZZ or GF(p))");
  }
  cur.expect("[");
  std::vector<std::string> names;
  std::size_t d = 0;
  bool plain_seen = false;
  if (!cur.accept("]")) {
    do {
      std::size_t vat = cur.pos();
      std::string name = cur.identifier();
      for (const auto& seen : names) {
        if (seen == name) cur.fail_at(vat, "duplicate variable " + name);
      }
      bool laurent = false;
      if (cur.accept("^")) {
        if (!cur.accept(kPlusMinus) && !cur.accept("+-")) cur.fail("expected '\xC2\xB1' after '^'");
        laurent = true;
      }
      if (laurent && plain_seen) cur.fail_at(vat, "Laurent variable " + name + " after a polynomial variable");
      if (laurent) ++d;
      plain_seen = plain_seen || !laurent;
      names.push_back(std::move(name));
    } while (cur.accept(","));
    cur.expect("]");
  }
  if (!cur.at_end()) cur.fail("trailing input after ring header");
  return Ring::make(*domain, d, std::move(names));
}

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

bool blank(std::string_view s) {
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

RingPtr parse_ring(std::string_view text) {
  Cursor cur(strip_comment(text), 1);
  return parse_header(cur);
}

MixedPoly parse_poly(std::string_view text, const RingPtr& ring) {
  Cursor cur(text, 1);
  MixedPoly p = ExprParser(cur, ring).expr();
  if (!cur.at_end()) cur.fail("unexpected trailing input");
  return p;
}

ProblemFile parse_problem(std::string_view text) {
  RingPtr ring;
  std::vector<std::optional<MixedPoly>> images;
  Options options;
  std::size_t line_no = 0, header_line = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = strip_comment(text.substr(start, end - start));
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    start = end + 1;
    if (blank(line)) continue;

    Cursor cur(line, line_no);
    if (!ring) {
      ring = parse_header(cur);
      header_line = line_no;
      images.assign(ring->n(), std::nullopt);
      continue;
    }
    std::size_t at = (cur.skip(), cur.pos());
    std::string name = cur.identifier();
    if (!cur.accept("->")) {
      if (name != "option") cur.fail("expected '->'");
      std::string key = cur.identifier();
      cur.expect("=");
      std::string value = trim(cur.rest());
      if (value.empty()) cur.fail("empty option value");
      options.emplace_back(std::move(key), std::move(value));
      continue;
    }
    std::size_t i = ring->index_of(name);
    if (i == ring->n()) cur.fail_at(at, "undeclared identifier " + name);
    if (images[i]) cur.fail_at(at, "duplicate map line for " + name);
    MixedPoly img = ExprParser(cur, ring).expr();
    if (!cur.at_end()) cur.fail("unexpected trailing input");
    images[i] = std::move(img);
  }
  if (!ring) throw ParseError(1, 1, "missing ring header");
  std::vector<MixedPoly> maps;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!images[i]) throw ParseError(header_line, 1, "no image for " + ring->name(i));
    maps.push_back(std::move(*images[i]));
  }
  return ProblemFile{ring, Endomorphism(ring, std::move(maps)), std::move(options)};
}

std::string ring_header(const Ring& ring) {
  std::string out = "ring " + ring.domain().name() + "[";
  for (std::size_t i = 0; i < ring.n(); ++i) {
    if (i) out += ", ";
    out += ring.name(i);
    if (ring.is_laurent(i)) out += "^" + std::string(kPlusMinus);
  }
  return out + "]";
}

std::string print_problem(const Endomorphism& map, const Options& options, const std::vector<std::string>& comments) {
  std::ostringstream os;
  for (const auto& c : comments) os << "# " << c << "\n";
  os << ring_header(*map.ring()) << "\n";
  for (std::size_t i = 0; i < map.images().size(); ++i) {
    os << map.ring()->name(i) << " -> " << map.image(i).to_string() << "\n";
  }
  for (const auto& [k, v] : options) os << "option " << k << " = " << v << "\n";
  return os.str();
}

}  // namespace retract
