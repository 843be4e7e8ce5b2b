#pragma once

#include "gpi/freealg.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gpi {

/// Commuting indeterminate y^k_{row,col}. Positions are 0-based.
struct ScalarVar {
  VarId k = 0;
  std::uint32_t row = 0;
  std::uint32_t col = 0;

  friend auto operator<=>(const ScalarVar&, const ScalarVar&) = default;
};

/// Monomial of Z[Omega] as a sorted exponent vector.
class ScalarMonomial {
 public:
  using Factor = std::pair<ScalarVar, std::uint32_t>;

  ScalarMonomial() = default;
  static ScalarMonomial of(ScalarVar v);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  bool is_one() const noexcept { return factors_.empty(); }
  std::size_t degree() const noexcept;

  ScalarMonomial& operator*=(const ScalarMonomial& rhs);
  ScalarMonomial& operator*=(ScalarVar v);
  friend ScalarMonomial operator*(ScalarMonomial a, const ScalarMonomial& b) { return a *= b; }

  friend bool operator==(const ScalarMonomial&, const ScalarMonomial&) = default;
  friend auto operator<=>(const ScalarMonomial&, const ScalarMonomial&) = default;

 private:
  std::vector<Factor> factors_;
};

class ScalarPoly {
 public:
  using Terms = std::map<ScalarMonomial, Integer>;

  ScalarPoly() = default;
  static ScalarPoly of(ScalarMonomial m, Integer coeff = 1);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  /// The single monomial with coefficient 1, if the polynomial is exactly that.
  std::optional<ScalarMonomial> as_unit_monomial() const;

  void add_term(const ScalarMonomial& m, const Integer& coeff);

  ScalarPoly& operator+=(const ScalarPoly& rhs);
  ScalarPoly& operator-=(const ScalarPoly& rhs);
  friend ScalarPoly operator+(ScalarPoly a, const ScalarPoly& b) { return a += b; }
  friend ScalarPoly operator-(ScalarPoly a, const ScalarPoly& b) { return a -= b; }
  friend ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b);

  friend bool operator==(const ScalarPoly&, const ScalarPoly&) = default;

 private:
  Terms terms_;
};

std::string to_string(const ScalarMonomial& m);
std::string to_string(const ScalarPoly& p);

/// n x n matrix over Z[Omega], row-major.
class GenericMatrix {
 public:
  explicit GenericMatrix(std::size_t n) : n_(n), entries_(n * n) {}
  static GenericMatrix identity(std::size_t n);

  std::size_t dim() const noexcept { return n_; }
  const ScalarPoly& at(std::size_t row, std::size_t col) const { return entries_.at(row * n_ + col); }
  ScalarPoly& at(std::size_t row, std::size_t col) { return entries_.at(row * n_ + col); }
  bool is_zero() const noexcept;
  std::size_t nonzero_count() const noexcept;
  /// First nonzero entry in row-major order.
  std::optional<std::pair<std::size_t, std::size_t>> first_nonzero() const;

  friend GenericMatrix operator*(const GenericMatrix& a, const GenericMatrix& b);
  GenericMatrix& operator+=(const GenericMatrix& rhs);
  friend bool operator==(const GenericMatrix&, const GenericMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<ScalarPoly> entries_;
};

/// A_{k,g} = sum_i y^k_{i,phi_g(i)} e_{i,phi_g(i)}.
GenericMatrix generic(const GradingTuple& grading, VarId k, Element g);

/// The walk of a word from a start row: the scalar variable of each factor and
/// the final column. This is the closed form of a monomial evaluation at one row.
struct UnitPath {
  std::vector<ScalarVar> steps;
  std::size_t end_col = 0;

  ScalarMonomial monomial() const;
};

UnitPath unit_path(const Context& ctx, const Word& w, std::size_t start_row);

/// Evaluation by iterated matrix products. The empty word gives the identity.
GenericMatrix eval_word_direct(const Context& ctx, const Word& w);
/// Evaluation by walking the degree prefixes from every row; no matrix products.
GenericMatrix eval_word_closed(const Context& ctx, const Word& w);
GenericMatrix eval_poly(const Context& ctx, const FreePoly& p);

}  // namespace gpi
