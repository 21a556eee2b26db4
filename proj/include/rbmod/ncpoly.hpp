#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "rbmod/qmatrix.hpp"
#include "rbmod/rational.hpp"

namespace rbmod {

class RBModule;

/// A word in the free monoid on {x, y}.
class NCWord {
 public:
  NCWord() = default;
  /// Throws std::invalid_argument on letters other than 'x' and 'y'.
  explicit NCWord(std::string letters);

  const std::string& letters() const noexcept { return letters_; }
  std::size_t degree() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  /// "x^2*y", "1" for the empty word.
  std::string to_string() const;

  friend NCWord operator+(const NCWord& a, const NCWord& b) { return NCWord(a.letters_ + b.letters_, Unchecked{}); }
  friend bool operator==(const NCWord&, const NCWord&) = default;

 private:
  struct Unchecked {};
  NCWord(std::string letters, Unchecked) : letters_(std::move(letters)) {}
  friend class NCPoly;
  std::string letters_;
};

/// Higher degree first; equal degrees compare lexicographically with x < y.
struct DegLexOrder {
  bool operator()(const NCWord& a, const NCWord& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return a.letters() < b.letters();
  }
};

/// Element of the free algebra Q<x, y>. No stored coefficient is zero.
class NCPoly {
 public:
  using TermMap = std::map<NCWord, Rational, DegLexOrder>;

  NCPoly() = default;
  static NCPoly constant(const Rational& c);
  static NCPoly term(const Rational& c, const NCWord& w);
  static NCPoly x() { return term(1, NCWord("x")); }
  static NCPoly y() { return term(1, NCWord("y")); }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t degree() const;
  Rational coefficient(const NCWord& w) const;

  void add_term(const NCWord& w, const Rational& c);

  /// Canonical text in the order of DegLexOrder, e.g. "x*y - y^2".
  std::string to_string() const;

  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator-(const NCPoly& a);
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator*(const Rational& s, const NCPoly& a);
  friend bool operator==(const NCPoly&, const NCPoly&) = default;

 private:
  TermMap terms_;
};

/// Free-algebra product, no rewriting.
NCPoly nc_mul(const NCPoly& f, const NCPoly& g);

/// Largest word degree the rewriting engine accepts.
inline constexpr std::size_t kMaxRewriteDegree = 64;

/// The unique combination of words x^a y^b congruent to f modulo
/// xy - yx - y^2, i.e. the result of rewriting yx -> xy - y^2 to the end.
/// Throws ResourceError if a word is longer than kMaxRewriteDegree.
NCPoly normal_form(const NCPoly& f);

/// True iff f lies in the two-sided ideal generated by xy - yx - y^2.
bool reduces_to_zero(const NCPoly& f);

/// Every word has the shape x^a y^b.
bool is_normal(const NCPoly& f);

/// Substitute a for x and b for y, multiplying left to right.
QMatrix evaluate(const NCPoly& f, const QMatrix& a, const QMatrix& b);
QMatrix evaluate_on_module(const NCPoly& f, const RBModule& m);

/// Parses e.g. "x^2*y - y*x^2 - 2*y*x*y". Throws ParseError.
NCPoly parse_nc_poly(std::string_view text);

}  // namespace rbmod
