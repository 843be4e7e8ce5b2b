#include "gpi/genmat.hpp"

#include "gpi/error.hpp"

#include <algorithm>
#include <sstream>

namespace gpi {

ScalarMonomial ScalarMonomial::of(ScalarVar v) {
  ScalarMonomial m;
  m.factors_.emplace_back(v, 1);
  return m;
}

std::size_t ScalarMonomial::degree() const noexcept {
  std::size_t d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

ScalarMonomial& ScalarMonomial::operator*=(ScalarVar v) {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, const ScalarVar& key) { return f.first < key; });
  if (it != factors_.end() && it->first == v) {
    ++it->second;
  } else {
    factors_.insert(it, {v, 1});
  }
  return *this;
}

ScalarMonomial& ScalarMonomial::operator*=(const ScalarMonomial& rhs) {
  std::vector<Factor> merged;
  merged.reserve(factors_.size() + rhs.factors_.size());
  auto a = factors_.begin();
  auto b = rhs.factors_.begin();
  while (a != factors_.end() || b != rhs.factors_.end()) {
    if (b == rhs.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      merged.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  factors_ = std::move(merged);
  return *this;
}

ScalarPoly ScalarPoly::of(ScalarMonomial m, Integer coeff) {
  ScalarPoly p;
  p.add_term(m, coeff);
  return p;
}

std::optional<ScalarMonomial> ScalarPoly::as_unit_monomial() const {
  if (terms_.size() != 1 || terms_.begin()->second != 1) return std::nullopt;
  return terms_.begin()->first;
}

void ScalarPoly::add_term(const ScalarMonomial& m, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

ScalarPoly& ScalarPoly::operator+=(const ScalarPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

ScalarPoly& ScalarPoly::operator-=(const ScalarPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b) {
  ScalarPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

std::string to_string(const ScalarMonomial& m) {
  if (m.is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, e] : m.factors()) {
    if (!first) os << '*';
    first = false;
    os << "y" << v.k << "_" << (v.row + 1) << (v.col + 1);
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

std::string to_string(const ScalarPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    Integer mag = c < 0 ? Integer(-c) : c;
    if (mag != 1 || m.is_one()) os << mag << (m.is_one() ? "" : "*");
    if (!m.is_one()) os << to_string(m);
  }
  return os.str();
}

GenericMatrix GenericMatrix::identity(std::size_t n) {
  GenericMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) out.at(i, i) = ScalarPoly::of(ScalarMonomial{});
  return out;
}

bool GenericMatrix::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](const ScalarPoly& p) { return p.is_zero(); });
}

std::size_t GenericMatrix::nonzero_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(entries_.begin(), entries_.end(),
                                                [](const ScalarPoly& p) { return !p.is_zero(); }));
}

std::optional<std::pair<std::size_t, std::size_t>> GenericMatrix::first_nonzero() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (!at(i, j).is_zero()) return std::pair{i, j};
    }
  }
  return std::nullopt;
}

GenericMatrix operator*(const GenericMatrix& a, const GenericMatrix& b) {
  if (a.n_ != b.n_) throw Error(ErrorKind::Contract, "matrix dimensions differ");
  const std::size_t n = a.n_;
  GenericMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < n; ++l) {
      const ScalarPoly& x = a.at(i, l);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const ScalarPoly& y = b.at(l, j);
        if (!y.is_zero()) out.at(i, j) += x * y;
      }
    }
  }
  return out;
}

GenericMatrix& GenericMatrix::operator+=(const GenericMatrix& rhs) {
  if (n_ != rhs.n_) throw Error(ErrorKind::Contract, "matrix dimensions differ");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

GenericMatrix generic(const GradingTuple& grading, VarId k, Element g) {
  if (k == 0) throw Error(ErrorKind::Declaration, "variable ids must be positive");
  const std::size_t n = grading.size();
  GenericMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = grading.phi(g, i);
    out.at(i, j) = ScalarPoly::of(ScalarMonomial::of(
        ScalarVar{k, static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)}));
  }
  return out;
}

ScalarMonomial UnitPath::monomial() const {
  ScalarMonomial m;
  for (const auto& v : steps) m *= v;
  return m;
}

UnitPath unit_path(const Context& ctx, const Word& w, std::size_t start_row) {
  const GradingTuple& grading = ctx.grading();
  if (start_row >= grading.size()) throw Error(ErrorKind::Index, "start row out of range");
  // beta_t(i) is phi of the prefix product h_1...h_{1+t}; accumulate it.
  const FiniteGroup& group = grading.group();
  UnitPath path;
  path.steps.reserve(w.size());
  Element prefix = group.identity();
  std::size_t row = start_row;
  for (VarId v : w) {
    prefix = group.multiply(prefix, ctx.degree(v));
    const std::size_t col = grading.phi(prefix, start_row);
    path.steps.push_back(
        ScalarVar{v, static_cast<std::uint32_t>(row), static_cast<std::uint32_t>(col)});
    row = col;
  }
  path.end_col = row;
  return path;
}

GenericMatrix eval_word_direct(const Context& ctx, const Word& w) {
  const std::size_t n = ctx.grading().size();
  GenericMatrix acc = GenericMatrix::identity(n);
  std::map<VarId, GenericMatrix> cache;
  for (VarId v : w) {
    auto it = cache.find(v);
    if (it == cache.end()) it = cache.emplace(v, generic(ctx.grading(), v, ctx.degree(v))).first;
    acc = acc * it->second;
  }
  return acc;
}

GenericMatrix eval_word_closed(const Context& ctx, const Word& w) {
  const std::size_t n = ctx.grading().size();
  GenericMatrix out(n);
  for (std::size_t j = 0; j < n; ++j) {
    UnitPath path = unit_path(ctx, w, j);
    out.at(j, path.end_col) = ScalarPoly::of(path.monomial());
  }
  return out;
}

GenericMatrix eval_poly(const Context& ctx, const FreePoly& p) {
  const std::size_t n = ctx.grading().size();
  GenericMatrix out(n);
  for (const auto& [w, c] : p.terms()) {
    for (std::size_t j = 0; j < n; ++j) {
      UnitPath path = unit_path(ctx, w, j);
      out.at(j, path.end_col).add_term(path.monomial(), c);
    }
  }
  return out;
}

}  // namespace gpi
