#include "gpi/group.hpp"

#include "gpi/error.hpp"

#include <algorithm>
#include <optional>

namespace gpi {

FiniteGroup::FiniteGroup(std::vector<std::vector<std::uint32_t>> table,
                         std::vector<std::string> names)
    : table_(std::move(table)), names_(std::move(names)) {
  const std::size_t n = table_.size();
  if (n == 0) throw Error(ErrorKind::InvalidOrder, "group table must be non-empty");
  for (const auto& row : table_) {
    if (row.size() != n) throw Error(ErrorKind::InvalidGroup, "group table must be square");
    for (auto v : row) {
      if (v >= n) throw Error(ErrorKind::InvalidGroup, "group table entry out of range");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
          throw Error(ErrorKind::InvalidGroup, "group table is not associative");
        }
      }
    }
  }
  std::optional<std::uint32_t> id;
  for (std::uint32_t e = 0; e < n && !id; ++e) {
    bool ok = true;
    for (std::uint32_t a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
    if (ok) id = e;
  }
  if (!id) throw Error(ErrorKind::InvalidGroup, "group table has no two-sided identity");
  identity_ = *id;

  inverse_.assign(n, 0);
  for (std::uint32_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::uint32_t b = 0; b < n && !found; ++b) {
      if (table_[a][b] == identity_ && table_[b][a] == identity_) {
        inverse_[a] = b;
        found = true;
      }
    }
    if (!found) throw Error(ErrorKind::InvalidGroup, "group element without two-sided inverse");
  }

  if (names_.empty()) {
    for (std::size_t a = 0; a < n; ++a) names_.push_back(std::to_string(a));
  } else if (names_.size() != n) {
    throw Error(ErrorKind::InvalidGroup, "number of element names does not match group order");
  }
}

Element FiniteGroup::multiply(Element a, Element b) const {
  if (!contains(a) || !contains(b)) throw Error(ErrorKind::Index, "group element out of range");
  return Element{table_[a.index][b.index]};
}

Element FiniteGroup::inverse(Element a) const {
  if (!contains(a)) throw Error(ErrorKind::Index, "group element out of range");
  return Element{inverse_[a.index]};
}

Element FiniteGroup::product(std::span<const Element> factors) const {
  Element acc = identity();
  for (auto f : factors) acc = multiply(acc, f);
  return acc;
}

bool FiniteGroup::is_abelian() const noexcept {
  for (std::size_t a = 0; a < order(); ++a) {
    for (std::size_t b = a + 1; b < order(); ++b) {
      if (table_[a][b] != table_[b][a]) return false;
    }
  }
  return true;
}

const std::string& FiniteGroup::name(Element a) const {
  if (!contains(a)) throw Error(ErrorKind::Index, "group element out of range");
  return names_[a.index];
}

std::vector<Element> FiniteGroup::elements() const {
  std::vector<Element> out;
  out.reserve(order());
  for (std::uint32_t a = 0; a < order(); ++a) out.push_back(Element{a});
  return out;
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidOrder, "cyclic group order must be positive");
  std::vector<std::vector<std::uint32_t>> table(n, std::vector<std::uint32_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a][b] = static_cast<std::uint32_t>((a + b) % n);
  }
  return FiniteGroup(std::move(table));
}

GradingTuple::GradingTuple(FiniteGroup group) : GradingTuple(group, group.elements()) {}

GradingTuple::GradingTuple(FiniteGroup group, std::vector<Element> tuple)
    : group_(std::move(group)), tuple_(std::move(tuple)) {
  const std::size_t n = group_.order();
  if (tuple_.size() != n) {
    throw Error(ErrorKind::InvalidGroup, "grading tuple length must equal the group order");
  }
  position_of_.assign(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!group_.contains(tuple_[i])) throw Error(ErrorKind::Index, "grading tuple element out of range");
    if (position_of_[tuple_[i].index] != n) {
      throw Error(ErrorKind::InvalidGroup, "grading tuple must list every element exactly once");
    }
    position_of_[tuple_[i].index] = i;
  }
  phi_.assign(n, std::vector<std::size_t>(n));
  for (std::uint32_t g = 0; g < n; ++g) {
    for (std::size_t i = 0; i < n; ++i) {
      phi_[g][i] = position_of_[group_.multiply(tuple_[i], Element{g}).index];
    }
  }
}

std::size_t GradingTuple::phi(Element g, std::size_t i) const {
  if (!group_.contains(g)) throw Error(ErrorKind::Index, "group element out of range");
  if (i >= size()) throw Error(ErrorKind::Index, "position out of range");
  return phi_[g.index][i];
}

std::size_t GradingTuple::beta(std::span<const Element> hbar, std::size_t t, std::size_t i) const {
  if (t >= hbar.size()) throw Error(ErrorKind::Index, "beta index t out of range");
  return phi(group_.product(hbar.first(t + 1)), i);
}

Element GradingTuple::unit_degree(std::size_t i, std::size_t j) const {
  return group_.multiply(group_.inverse(at(i)), at(j));
}

}  // namespace gpi
