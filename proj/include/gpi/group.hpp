#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace gpi {

/// Index of an element inside a FiniteGroup's multiplication table.
struct Element {
  std::uint32_t index = 0;

  friend auto operator<=>(const Element&, const Element&) = default;
};

/// A finite group given by an explicit multiplication table.
///
/// table()[a][b] is the index of a*b. The constructor checks closure,
/// associativity, a two-sided identity and two-sided inverses.
class FiniteGroup {
 public:
  explicit FiniteGroup(std::vector<std::vector<std::uint32_t>> table,
                       std::vector<std::string> names = {});

  std::size_t order() const noexcept { return table_.size(); }
  Element identity() const noexcept { return Element{identity_}; }
  Element multiply(Element a, Element b) const;
  Element inverse(Element a) const;
  /// Left-to-right product of a sequence; the empty product is the identity.
  Element product(std::span<const Element> factors) const;
  bool contains(Element a) const noexcept { return a.index < order(); }
  bool is_abelian() const noexcept;

  const std::vector<std::vector<std::uint32_t>>& table() const noexcept { return table_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(Element a) const;

  std::vector<Element> elements() const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.table_ == b.table_;
  }

 private:
  std::vector<std::vector<std::uint32_t>> table_;
  std::vector<std::string> names_;
  std::uint32_t identity_ = 0;
  std::vector<std::uint32_t> inverse_;
};

/// Z_n with elements 0..n-1 in natural order. Throws InvalidOrder for n = 0.
FiniteGroup cyclic_group(std::size_t n);

/// The tuple (h_1, ..., h_n) inducing an elementary grading on M_n, where the
/// matrix unit e_ij has degree h_i^{-1} h_j. The tuple must enumerate every
/// group element exactly once, so n equals the group order.
///
/// Positions are 0-based here; the DSL and JSON formats use 1-based positions.
class GradingTuple {
 public:
  /// Enumeration order (g_1, ..., g_n).
  explicit GradingTuple(FiniteGroup group);
  GradingTuple(FiniteGroup group, std::vector<Element> tuple);

  const FiniteGroup& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return tuple_.size(); }
  Element at(std::size_t position) const { return tuple_.at(position); }
  const std::vector<Element>& tuple() const noexcept { return tuple_; }

  /// The unique j with h_j = h_i * g.
  std::size_t phi(Element g, std::size_t i) const;

  /// Position reached from i after walking the first t+1 degrees of hbar,
  /// i.e. phi of the prefix product h_1 * ... * h_{1+t}.
  std::size_t beta(std::span<const Element> hbar, std::size_t t, std::size_t i) const;

  /// Degree of the matrix unit e_ij, h_i^{-1} h_j.
  Element unit_degree(std::size_t i, std::size_t j) const;

  friend bool operator==(const GradingTuple& a, const GradingTuple& b) {
    return a.group_ == b.group_ && a.tuple_ == b.tuple_;
  }

 private:
  FiniteGroup group_;
  std::vector<Element> tuple_;
  std::vector<std::size_t> position_of_;
  std::vector<std::vector<std::size_t>> phi_;
};

}  // namespace gpi
