#include "rbmod/ncpoly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "rbmod/errors.hpp"
#include "rbmod/module.hpp"

namespace rbmod {

NCWord::NCWord(std::string letters) : letters_(std::move(letters)) {
  for (char c : letters_)
    if (c != 'x' && c != 'y') throw std::invalid_argument("NCWord: letter outside {x, y}");
}

std::string NCWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < letters_.size()) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    if (!out.empty()) out += '*';
    out += letters_[i];
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

NCPoly NCPoly::constant(const Rational& c) { return term(c, NCWord{}); }

NCPoly NCPoly::term(const Rational& c, const NCWord& w) {
  NCPoly p;
  p.add_term(w, c);
  return p;
}

std::size_t NCPoly::degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }

Rational NCPoly::coefficient(const NCWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational{} : it->second;
}

void NCPoly::add_term(const NCWord& w, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

std::string NCPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (w.empty()) {
      os << mag;
    } else {
      if (!mag.is_one()) os << mag << '*';
      os << w.to_string();
    }
  }
  return os.str();
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPoly operator-(const NCPoly& a) {
  NCPoly r = a;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  NCPoly r;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) r.add_term(wa + wb, ca * cb);
  return r;
}

NCPoly operator*(const Rational& s, const NCPoly& a) {
  NCPoly r;
  for (const auto& [w, c] : a.terms_) r.add_term(w, s * c);
  return r;
}

NCPoly nc_mul(const NCPoly& f, const NCPoly& g) { return f * g; }

NCPoly normal_form(const NCPoly& f) {
  if (f.degree() > kMaxRewriteDegree)
    throw ResourceError("normal_form: word degree " + std::to_string(f.degree()) + " exceeds cap " +
                        std::to_string(kMaxRewriteDegree));
  // Build each word's normal form one letter at a time. A normal term is
  // x^a y^b; appending y gives x^a y^{b+1}, and appending x uses
  // y^b x = x y^b - b y^{b+1}, so only two terms arise per step.
  using Exponents = std::pair<std::size_t, std::size_t>;
  std::map<Exponents, Rational> acc;
  for (const auto& [w, c] : f.terms()) {
    std::map<Exponents, Rational> cur{{{0, 0}, c}};
    for (char letter : w.letters()) {
      std::map<Exponents, Rational> next;
      for (const auto& [e, k] : cur) {
        const auto [a, b] = e;
        if (letter == 'y') {
          next[{a, b + 1}] += k;
        } else {
          next[{a + 1, b}] += k;
          if (b > 0) next[{a, b + 1}] -= k * Rational(static_cast<long>(b));
        }
      }
      cur = std::move(next);
    }
    for (const auto& [e, k] : cur) acc[e] += k;
  }
  NCPoly out;
  for (const auto& [e, k] : acc) out.add_term(NCWord(std::string(e.first, 'x') + std::string(e.second, 'y')), k);
  return out;
}

bool reduces_to_zero(const NCPoly& f) { return normal_form(f).is_zero(); }

bool is_normal(const NCPoly& f) {
  for (const auto& [w, c] : f.terms())
    if (w.letters().find("yx") != std::string::npos) return false;
  return true;
}

QMatrix evaluate(const NCPoly& f, const QMatrix& a, const QMatrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    throw ShapeError("evaluate: matrices must be square of equal size");
  const std::size_t n = a.rows();
  QMatrix sum(n, n);
  for (const auto& [w, c] : f.terms()) {
    QMatrix prod = QMatrix::identity(n);
    for (char letter : w.letters()) prod = prod * (letter == 'x' ? a : b);
    sum += c * prod;
  }
  return sum;
}

QMatrix evaluate_on_module(const NCPoly& f, const RBModule& m) {
  return evaluate(f, m.x_action(), m.operator_matrix());
}

namespace {

class NCParser {
 public:
  explicit NCParser(std::string_view text) : s_(text) {}

  NCPoly parse() {
    skip_ws();
    if (at_end()) fail("empty expression");
    NCPoly result;
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++i_;
    }
    result += signed_term(negate);
    skip_ws();
    while (!at_end()) {
      const char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-' between terms");
      ++i_;
      result += signed_term(op == '-');
      skip_ws();
    }
    return result;
  }

 private:
  NCPoly signed_term(bool negate) {
    NCPoly t = term();
    return negate ? -t : t;
  }

  NCPoly term() {
    Rational coeff = 1;
    std::string word;
    factor(coeff, word);
    skip_ws();
    while (!at_end() && peek() == '*') {
      ++i_;
      factor(coeff, word);
      skip_ws();
    }
    return NCPoly::term(coeff, NCWord(std::move(word)));
  }

  void factor(Rational& coeff, std::string& word) {
    skip_ws();
    if (at_end()) fail("expected a factor");
    const char c = peek();
    if (c == 'x' || c == 'y') {
      ++i_;
      std::size_t k = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++i_;
        skip_ws();
        const std::size_t start = i_;
        const std::string digits = read_digits();
        if (digits.empty()) fail("expected exponent after '^'");
        if (digits.size() > 4 || std::stoul(digits) == 0) fail_at(start, "exponent must be between 1 and 9999");
        k = std::stoul(digits);
      }
      word.append(k, c);
      if (word.size() > kMaxRewriteDegree) fail("word degree exceeds " + std::to_string(kMaxRewriteDegree));
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = i_;
      std::string text = read_digits();
      skip_ws();
      if (!at_end() && peek() == '/') {
        ++i_;
        skip_ws();
        const std::string den = read_digits();
        if (den.empty()) fail("expected denominator after '/'");
        text += '/' + den;
      }
      auto r = Rational::try_parse(text);
      if (!r) fail_at(start, "invalid rational '" + text + "'");
      coeff *= *r;
      return;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string read_digits() {
    std::string d;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) d.push_back(s_[i_++]);
    return d;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++i_;
  }
  bool at_end() const { return i_ >= s_.size(); }
  char peek() const { return s_[i_]; }
  [[noreturn]] void fail(const std::string& msg) const { fail_at(i_, msg); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) const { throw ParseError(pos, msg); }

  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

NCPoly parse_nc_poly(std::string_view text) { return NCParser(text).parse(); }

}  // namespace rbmod
