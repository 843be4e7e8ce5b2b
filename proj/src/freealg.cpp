#include "gpi/freealg.hpp"

#include "gpi/error.hpp"

#include <algorithm>
#include <sstream>

namespace gpi {

// Word

Word Word::subword(std::size_t begin, std::size_t end) const {
  if (begin > end || end > size()) throw Error(ErrorKind::Index, "subword range out of bounds");
  return Word(std::vector<VarId>(letters_.begin() + static_cast<std::ptrdiff_t>(begin),
                                 letters_.begin() + static_cast<std::ptrdiff_t>(end)));
}

Word Word::reversed() const { return Word(std::vector<VarId>(letters_.rbegin(), letters_.rend())); }

bool Word::contains(VarId v) const {
  return std::find(letters_.begin(), letters_.end(), v) != letters_.end();
}

Word Word::without(std::size_t i) const {
  if (i >= size()) throw Error(ErrorKind::Index, "letter index out of bounds");
  std::vector<VarId> out = letters_;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
  return Word(std::move(out));
}

Word& Word::operator*=(const Word& rhs) {
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                b.letters_.begin(), b.letters_.end());
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '*';
    out += 'x';
    out += std::to_string(w[i]);
  }
  return out;
}

// Context

Context::Context(GradingTuple grading, std::map<VarId, Element> degrees)
    : grading_(std::move(grading)) {
  for (const auto& [v, g] : degrees) declare(v, g);
}

void Context::declare(VarId v, Element degree) {
  if (v == 0) throw Error(ErrorKind::Declaration, "variable ids must be positive");
  if (!group().contains(degree)) {
    throw Error(ErrorKind::Declaration,
                "degree of x" + std::to_string(v) + " is not an element of the group");
  }
  auto [it, inserted] = degrees_.emplace(v, degree);
  if (!inserted && it->second != degree) {
    throw Error(ErrorKind::Context, "conflicting degrees declared for x" + std::to_string(v));
  }
}

Element Context::degree(VarId v) const {
  auto it = degrees_.find(v);
  if (it == degrees_.end()) {
    throw Error(ErrorKind::Declaration, "undeclared variable x" + std::to_string(v));
  }
  return it->second;
}

VarId Context::max_var() const noexcept { return degrees_.empty() ? 0 : degrees_.rbegin()->first; }

Element Context::word_degree(const Word& w) const {
  Element acc = group().identity();
  for (VarId v : w) acc = group().multiply(acc, degree(v));
  return acc;
}

Context Context::merged(const Context& other) const {
  if (!(grading_ == other.grading_)) {
    throw Error(ErrorKind::Context, "cannot merge declarations over different gradings");
  }
  Context out = *this;
  for (const auto& [v, g] : other.degrees_) out.declare(v, g);
  return out;
}

Element word_degree(const Context& ctx, const Word& w) { return ctx.word_degree(w); }

// FreePoly

FreePoly FreePoly::monomial(Word w, Integer coeff) {
  FreePoly p;
  p.add_term(w, coeff);
  return p;
}

Integer FreePoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Integer(0) : it->second;
}

const Word& FreePoly::leading_word() const {
  if (terms_.empty()) throw Error(ErrorKind::Contract, "zero polynomial has no leading word");
  return terms_.begin()->first;
}

void FreePoly::add_term(const Word& w, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

FreePoly& FreePoly::operator+=(const FreePoly& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

FreePoly& FreePoly::operator-=(const FreePoly& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
  return *this;
}

FreePoly& FreePoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

FreePoly operator*(const FreePoly& a, const FreePoly& b) {
  FreePoly out;
  for (const auto& [u, cu] : a.terms_) {
    for (const auto& [v, cv] : b.terms_) out.add_term(u * v, cu * cv);
  }
  return out;
}

FreePoly FreePoly::sandwiched(const Word& left, const Word& right) const {
  if (left.empty() && right.empty()) return *this;
  FreePoly out;
  for (const auto& [w, c] : terms_) out.terms_.emplace(left * w * right, c);
  return out;
}

std::string to_string(const FreePoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (w.empty()) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << to_string(w);
    }
  }
  return os.str();
}

FreePoly multiply(const FreePoly& p, const FreePoly& q) { return p * q; }
FreePoly add(const FreePoly& p, const FreePoly& q) { return p + q; }
FreePoly bracket(const FreePoly& p, const FreePoly& q) { return p * q - q * p; }

FreePoly bracket(const Word& a, const Word& b) {
  FreePoly out = FreePoly::monomial(a * b);
  out.add_term(b * a, -1);
  return out;
}

std::map<VarId, std::size_t> multidegree(const Word& w) {
  std::map<VarId, std::size_t> out;
  for (VarId v : w) ++out[v];
  return out;
}

std::vector<FreePoly> multihomogeneous_components(const FreePoly& p) {
  std::vector<FreePoly> out;
  std::map<std::map<VarId, std::size_t>, std::size_t> index;
  for (const auto& [w, c] : p.terms()) {
    auto [it, inserted] = index.try_emplace(multidegree(w), out.size());
    if (inserted) out.emplace_back();
    out[it->second].add_term(w, c);
  }
  return out;
}

bool is_multilinear(const Word& w) {
  std::vector<VarId> sorted(w.begin(), w.end());
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool is_multilinear(const FreePoly& p) {
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [](const auto& t) { return is_multilinear(t.first); });
}

// LieWord

LieWord LieWord::leaf(VarId v) { return LieWord(v); }

LieWord LieWord::bracket(LieWord a, LieWord b) {
  return LieWord(std::make_shared<const Pair>(Pair{std::move(a), std::move(b)}));
}

VarId LieWord::var() const {
  if (!is_leaf()) throw Error(ErrorKind::Contract, "Lie word is a bracket, not a variable");
  return std::get<VarId>(node_);
}

const LieWord& LieWord::left() const {
  if (is_leaf()) throw Error(ErrorKind::Contract, "Lie word is a variable, not a bracket");
  return std::get<std::shared_ptr<const Pair>>(node_)->left;
}

const LieWord& LieWord::right() const {
  if (is_leaf()) throw Error(ErrorKind::Contract, "Lie word is a variable, not a bracket");
  return std::get<std::shared_ptr<const Pair>>(node_)->right;
}

std::size_t LieWord::depth() const {
  if (is_leaf()) return 0;
  return 1 + std::max(left().depth(), right().depth());
}

std::vector<VarId> LieWord::leaves() const {
  if (is_leaf()) return {var()};
  auto out = left().leaves();
  auto rhs = right().leaves();
  out.insert(out.end(), rhs.begin(), rhs.end());
  return out;
}

FreePoly LieWord::expand() const {
  if (is_leaf()) return FreePoly::variable(var());
  return gpi::bracket(left().expand(), right().expand());
}

bool operator==(const LieWord& a, const LieWord& b) {
  if (a.is_leaf() != b.is_leaf()) return false;
  if (a.is_leaf()) return a.var() == b.var();
  return a.left() == b.left() && a.right() == b.right();
}

std::string to_string(const LieWord& w) {
  if (w.is_leaf()) return "x" + std::to_string(w.var());
  return "[" + to_string(w.left()) + "," + to_string(w.right()) + "]";
}

Element lie_degree(const Context& ctx, const LieWord& w) {
  if (w.is_leaf()) return ctx.degree(w.var());
  const Element a = lie_degree(ctx, w.left());
  const Element b = lie_degree(ctx, w.right());
  const Element ab = ctx.group().multiply(a, b);
  if (ab != ctx.group().multiply(b, a)) {
    throw Error(ErrorKind::Substitution, "bracket " + to_string(w) + " is not homogeneous");
  }
  return ab;
}

// WeakSubstitution

WeakSubstitution::WeakSubstitution(const Context& ctx, std::map<VarId, LieWord> images)
    : images_(std::move(images)) {
  if (auto msg = check(ctx); !msg.empty()) throw Error(ErrorKind::Substitution, msg);
}

std::string WeakSubstitution::check(const Context& ctx) const {
  for (const auto& [v, image] : images_) {
    try {
      if (ctx.degree(v) != lie_degree(ctx, image)) {
        return "image " + to_string(image) + " of x" + std::to_string(v) +
               " does not have the degree of x" + std::to_string(v);
      }
    } catch (const Error& e) {
      return e.what();
    }
  }
  return {};
}

FreePoly apply_substitution(const FreePoly& p, const WeakSubstitution& s) {
  if (s.empty()) return p;
  std::map<VarId, FreePoly> expanded;
  for (const auto& [v, image] : s.images()) expanded.emplace(v, image.expand());
  FreePoly out;
  for (const auto& [w, c] : p.terms()) {
    FreePoly acc = FreePoly::monomial(Word{}, c);
    Word pending;
    for (VarId v : w) {
      auto it = expanded.find(v);
      if (it == expanded.end()) {
        pending *= Word{v};
        continue;
      }
      if (!pending.empty()) {
        acc = acc.sandwiched(Word{}, pending);
        pending = Word{};
      }
      acc = acc * it->second;
    }
    out += acc.sandwiched(Word{}, pending);
  }
  return out;
}

}  // namespace gpi
