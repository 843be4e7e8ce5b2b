#pragma once

#include "gpi/group.hpp"
#include "gpi/integer.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace gpi {

/// Variable id k of x_k. Ids are positive.
using VarId = std::uint32_t;

/// A monomial of the free associative algebra: a finite sequence of variable
/// ids. The empty word is the unity. Words are ordered length-lexicographically.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<VarId> letters) : letters_(letters) {}
  explicit Word(std::vector<VarId> letters) : letters_(std::move(letters)) {}

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  VarId operator[](std::size_t i) const { return letters_[i]; }
  std::span<const VarId> letters() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  /// Factors [begin, end) as a new word.
  Word subword(std::size_t begin, std::size_t end) const;
  Word reversed() const;
  bool contains(VarId v) const;
  /// Copy with the factor at position i removed.
  Word without(std::size_t i) const;

  Word& operator*=(const Word& rhs);
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::vector<VarId> letters_;
};

std::string to_string(const Word& w);

/// Variable declarations over a graded matrix algebra: the grading tuple and the
/// G-degree of every declared variable.
class Context {
 public:
  /// Empty context over the trivial group.
  Context() : grading_(cyclic_group(1)) {}
  explicit Context(GradingTuple grading) : grading_(std::move(grading)) {}
  Context(GradingTuple grading, std::map<VarId, Element> degrees);

  const GradingTuple& grading() const noexcept { return grading_; }
  const FiniteGroup& group() const noexcept { return grading_.group(); }
  const std::map<VarId, Element>& degrees() const noexcept { return degrees_; }

  /// Declares x_v of the given degree. Redeclaring with the same degree is a
  /// no-op; a different degree throws a Context error.
  void declare(VarId v, Element degree);
  bool declares(VarId v) const { return degrees_.contains(v); }
  Element degree(VarId v) const;
  /// Largest declared id, 0 when nothing is declared.
  VarId max_var() const noexcept;

  Element word_degree(const Word& w) const;

  /// Union of two declaration sets over the same grading.
  Context merged(const Context& other) const;

  friend bool operator==(const Context&, const Context&) = default;

 private:
  GradingTuple grading_;
  std::map<VarId, Element> degrees_;
};

/// Element of Z<X>: a finite map Word -> nonzero integer.
class FreePoly {
 public:
  using Terms = std::map<Word, Integer>;

  FreePoly() = default;
  static FreePoly monomial(Word w, Integer coeff = 1);
  static FreePoly variable(VarId v) { return monomial(Word{v}); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Integer coefficient(const Word& w) const;
  /// Least word of the support. Precondition: nonzero.
  const Word& leading_word() const;

  void add_term(const Word& w, const Integer& coeff);

  FreePoly& operator+=(const FreePoly& rhs);
  FreePoly& operator-=(const FreePoly& rhs);
  FreePoly& operator*=(const Integer& c);
  friend FreePoly operator+(FreePoly a, const FreePoly& b) { return a += b; }
  friend FreePoly operator-(FreePoly a, const FreePoly& b) { return a -= b; }
  friend FreePoly operator*(FreePoly a, const Integer& c) { return a *= c; }
  friend FreePoly operator*(const Integer& c, FreePoly a) { return a *= c; }
  friend FreePoly operator-(FreePoly a) { return a *= -1; }
  friend FreePoly operator*(const FreePoly& a, const FreePoly& b);

  /// left * this * right for words.
  FreePoly sandwiched(const Word& left, const Word& right) const;

  friend bool operator==(const FreePoly&, const FreePoly&) = default;

 private:
  Terms terms_;
};

std::string to_string(const FreePoly& p);

FreePoly multiply(const FreePoly& p, const FreePoly& q);
FreePoly add(const FreePoly& p, const FreePoly& q);
/// [p, q] = pq - qp
FreePoly bracket(const FreePoly& p, const FreePoly& q);
FreePoly bracket(const Word& a, const Word& b);

/// Product of factor degrees in word order; unity has degree 1_G.
Element word_degree(const Context& ctx, const Word& w);

/// Per-variable degree vector of a word, sorted by id.
std::map<VarId, std::size_t> multidegree(const Word& w);

/// Splits p by multidegree. Components appear in the order of their least word.
std::vector<FreePoly> multihomogeneous_components(const FreePoly& p);

bool is_multilinear(const Word& w);
/// True iff every word of p is multilinear. The zero polynomial counts as multilinear.
bool is_multilinear(const FreePoly& p);

/// Element of the Lie subalgebra generated by X: a variable or a bracket of
/// two Lie words.
class LieWord {
 public:
  static LieWord leaf(VarId v);
  static LieWord bracket(LieWord a, LieWord b);

  bool is_leaf() const noexcept { return std::holds_alternative<VarId>(node_); }
  VarId var() const;
  const LieWord& left() const;
  const LieWord& right() const;
  std::size_t depth() const;
  std::vector<VarId> leaves() const;

  FreePoly expand() const;

  friend bool operator==(const LieWord& a, const LieWord& b);

 private:
  struct Pair;
  explicit LieWord(VarId v) : node_(v) {}
  explicit LieWord(std::shared_ptr<const Pair> p) : node_(std::move(p)) {}

  std::variant<VarId, std::shared_ptr<const Pair>> node_;
};

struct LieWord::Pair {
  LieWord left;
  LieWord right;
};

std::string to_string(const LieWord& w);

/// G-degree of a Lie word. A bracket [a,b] is homogeneous only when the
/// degrees of a and b commute; otherwise this throws Substitution.
Element lie_degree(const Context& ctx, const LieWord& w);

/// Graded endomorphism x -> L-element of the same degree; unmapped variables
/// are fixed.
class WeakSubstitution {
 public:
  WeakSubstitution() = default;
  /// Validates degree preservation. Throws Substitution on mismatch.
  WeakSubstitution(const Context& ctx, std::map<VarId, LieWord> images);

  const std::map<VarId, LieWord>& images() const noexcept { return images_; }
  bool empty() const noexcept { return images_.empty(); }

  /// Degree preservation against ctx; returns a diagnostic on failure.
  std::string check(const Context& ctx) const;

  friend bool operator==(const WeakSubstitution&, const WeakSubstitution&) = default;

 private:
  std::map<VarId, LieWord> images_;
};

FreePoly apply_substitution(const FreePoly& p, const WeakSubstitution& s);

}  // namespace gpi
