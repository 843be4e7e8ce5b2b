#include "gpi/rewrite.hpp"

#include "gpi/error.hpp"

#include <algorithm>

namespace gpi {

const char* to_string(MoveKind kind) noexcept {
  return kind == MoveKind::Swap0 ? "swap0" : "reverse3";
}

Word Move::before() const {
  Word out = left;
  for (const auto& b : blocks) out *= b;
  return out *= right;
}

Word Move::after() const {
  Word out = left;
  if (kind == MoveKind::Swap0 && blocks.size() == 2) {
    out *= blocks[1];
    out *= blocks[0];
  } else {
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) out *= *it;
  }
  return out *= right;
}

Move Move::inverse() const {
  Move inv = *this;
  std::reverse(inv.blocks.begin(), inv.blocks.end());
  return inv;
}

GeneratorInstance Move::generator() const {
  return GeneratorInstance(kind == MoveKind::Swap0 ? GeneratorKind::Type1 : GeneratorKind::Type2,
                           blocks);
}

std::string move_violation(const Context& ctx, const Move& mv) {
  const std::size_t expected = mv.kind == MoveKind::Swap0 ? 2 : 3;
  if (mv.blocks.size() != expected) return std::string(to_string(mv.kind)) + " move has wrong block count";
  for (const auto& b : mv.blocks) {
    if (b.empty()) return "move blocks must be nonempty";
  }
  try {
    const FiniteGroup& G = ctx.group();
    if (mv.kind == MoveKind::Swap0) {
      if (ctx.word_degree(mv.blocks[0]) != G.identity() || ctx.word_degree(mv.blocks[1]) != G.identity()) {
        return "swap0 blocks must have trivial degree";
      }
    } else {
      const Element a1 = ctx.word_degree(mv.blocks[0]);
      const Element a2 = ctx.word_degree(mv.blocks[1]);
      const Element a3 = ctx.word_degree(mv.blocks[2]);
      if (a1 != a3 || a1 != G.inverse(a2)) {
        return "reverse3 blocks must satisfy alpha(b1) = alpha(b3) = alpha(b2)^-1";
      }
    }
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

Word apply_move(const Word& w, const Move& mv) {
  if (w != mv.before()) {
    throw Error(ErrorKind::Move, "move context " + to_string(mv.before()) + " does not match " + to_string(w));
  }
  return mv.after();
}

CheckResult check_chain(const Context& ctx, const RewriteChain& chain) {
  const Word& from = chain.forward ? chain.start : chain.end;
  const Word& to = chain.forward ? chain.end : chain.start;
  Word current = from;
  for (std::size_t i = 0; i < chain.moves.size(); ++i) {
    const Move& mv = chain.moves[i];
    if (auto msg = move_violation(ctx, mv); !msg.empty()) {
      return {false, "move " + std::to_string(i) + ": " + msg};
    }
    if (current != mv.before()) {
      return {false, "move " + std::to_string(i) + ": context does not match " + to_string(current)};
    }
    current = mv.after();
  }
  if (current != to) return {false, "replay ends at " + to_string(current) + ", expected " + to_string(to)};
  try {
    if (!(eval_word_closed(ctx, chain.start) == eval_word_closed(ctx, chain.end))) {
      return {false, "chain endpoints evaluate differently"};
    }
  } catch (const Error& e) {
    return {false, e.what()};
  }
  return {};
}

bool verify_chain(const Context& ctx, const RewriteChain& chain) { return check_chain(ctx, chain).ok; }

namespace {

void require_comparable(const Context& ctx, const Word& m, const Word& n) {
  if (ctx.word_degree(m) != ctx.word_degree(n)) {
    throw Error(ErrorKind::Contract, "words " + to_string(m) + " and " + to_string(n) + " differ in G-degree");
  }
  if (multidegree(m) != multidegree(n)) {
    throw Error(ErrorKind::Contract, "words " + to_string(m) + " and " + to_string(n) + " differ in multidegree");
  }
}

std::vector<Position> positions_of(const UnitPath& path) {
  std::vector<Position> out;
  out.reserve(path.steps.size());
  for (const auto& v : path.steps) out.push_back(Position{v.row, v.col});
  return out;
}

// sigma[h] = least unused index k of m_steps with m_steps[k] == n_steps[h].
std::vector<std::size_t> match_steps(const std::vector<ScalarVar>& m_steps,
                                     const std::vector<ScalarVar>& n_steps) {
  std::vector<std::size_t> sigma(n_steps.size());
  std::vector<bool> used(m_steps.size(), false);
  for (std::size_t h = 0; h < n_steps.size(); ++h) {
    bool found = false;
    for (std::size_t k = 0; k < m_steps.size() && !found; ++k) {
      if (!used[k] && m_steps[k] == n_steps[h]) {
        used[k] = true;
        sigma[h] = k;
        found = true;
      }
    }
    if (!found) throw Error(ErrorKind::Contract, "unit paths do not carry the same scalar variables");
  }
  return sigma;
}

}  // namespace

std::optional<Position> shared_entry(const Context& ctx, const Word& m, const Word& n) {
  require_comparable(ctx, m, n);
  const std::size_t dim = ctx.grading().size();
  for (std::size_t row = 0; row < dim; ++row) {
    UnitPath pm = unit_path(ctx, m, row);
    UnitPath pn = unit_path(ctx, n, row);
    if (pm.end_col == pn.end_col && pm.monomial() == pn.monomial()) return Position{row, pm.end_col};
  }
  return std::nullopt;
}

SigmaWitness extract_sigma(const Context& ctx, const Word& m, const Word& n, Position pos) {
  require_comparable(ctx, m, n);
  UnitPath pm = unit_path(ctx, m, pos.row);
  UnitPath pn = unit_path(ctx, n, pos.row);
  if (pm.end_col != pos.col || pn.end_col != pos.col || pm.monomial() != pn.monomial()) {
    throw Error(ErrorKind::Contract, "words do not share the entry at the given position");
  }
  SigmaWitness out;
  out.sigma = match_steps(pm.steps, pn.steps);
  out.position = pos;
  out.unit_path_m = positions_of(pm);
  out.unit_path_n = positions_of(pn);
  return out;
}

RewriteChain congruence_chain(const Context& ctx, const Word& m, const Word& n, Position pos) {
  extract_sigma(ctx, m, n, pos);  // validates the anchor entry
  const GradingTuple& grading = ctx.grading();
  const std::size_t len = m.size();

  RewriteChain chain;
  chain.start = n;
  chain.end = m;
  Word current = n;
  std::size_t prefix = 0;
  std::size_t row = pos.row;
  while (prefix < len) {
    if (current[prefix] == m[prefix]) {
      // Common first variable: strip it and continue from the next row.
      row = grading.phi(ctx.degree(m[prefix]), row);
      ++prefix;
      continue;
    }
    const Word ms = m.subword(prefix, len);
    const Word ns = current.subword(prefix, len);
    UnitPath pm = unit_path(ctx, ms, row);
    UnitPath pn = unit_path(ctx, ns, row);
    if (pm.end_col != pn.end_col || pm.monomial() != pn.monomial()) {
      throw Error(ErrorKind::Contract, "suffixes lost their shared entry");
    }
    const std::vector<std::size_t> sigma = match_steps(pm.steps, pn.steps);
    std::vector<std::size_t> inv(sigma.size());
    for (std::size_t h = 0; h < sigma.size(); ++h) inv[sigma[h]] = h;

    // r: position in n of m's first factor. t: least index whose factor sits
    // before r in n; p and s as in the block split n1 n2 n3 n4.
    const std::size_t r = inv[0];
    std::size_t t = 1;
    while (t < inv.size() && inv[t] >= r) ++t;
    if (t == inv.size()) throw Error(ErrorKind::Contract, "no factor of m precedes its first factor in n");
    const std::size_t p = inv[t];
    const std::size_t s = inv[t - 1];
    if (!(p < r && r <= s)) throw Error(ErrorKind::Contract, "block split violates p < r <= s");

    const Word n1 = ns.subword(0, p);
    const Word n2 = ns.subword(p, r);
    const Word n3 = ns.subword(r, s + 1);
    const Word n4 = ns.subword(s + 1, ns.size());

    Move mv;
    mv.left = current.subword(0, prefix);
    mv.right = n4;
    if (n1.empty() || ctx.word_degree(n1) == ctx.group().identity()) {
      mv.kind = MoveKind::Swap0;
      mv.blocks = {n1 * n2, n3};
    } else {
      mv.kind = MoveKind::Reverse3;
      mv.blocks = {n1, n2, n3};
    }
    current = apply_move(current, mv);
    chain.moves.push_back(std::move(mv));
    if (current[prefix] != m[prefix]) throw Error(ErrorKind::Contract, "block move did not align first factors");
  }
  return chain;
}

RewriteChain congruence_chain(const Context& ctx, const Word& m, const Word& n) {
  if (m.size() != n.size() || multidegree(m) != multidegree(n)) {
    throw Error(ErrorKind::Contract, "congruence requires words of the same multidegree");
  }
  auto pos = shared_entry(ctx, m, n);
  if (!pos) {
    throw Error(ErrorKind::NotCongruent, to_string(m) + " and " + to_string(n) + " share no entry");
  }
  return congruence_chain(ctx, m, n, *pos);
}

FreePoly JCombination::expansion() const {
  FreePoly out;
  for (const auto& t : terms) {
    out.add_term(t.source, t.coeff);
    out.add_term(t.target, -t.coeff);
  }
  return out;
}

NoExpressionError::NoExpressionError(Witness witness)
    : Error(ErrorKind::NoExpression,
            "polynomial is not a graded identity: entry (" + std::to_string(witness.row + 1) + "," +
                std::to_string(witness.col + 1) + ") = " + to_string(witness.entry)),
      witness_(std::move(witness)) {}

JCombination express_in_J(const Context& ctx, const FreePoly& f) {
  if (auto verdict = is_graded_identity(ctx, f); !verdict) throw NoExpressionError(*verdict.witness);

  JCombination out;
  out.polynomial = f;
  for (FreePoly work : multihomogeneous_components(f)) {
    while (!work.is_zero()) {
      const Word least = work.leading_word();
      const Integer coeff = work.coefficient(least);
      // The entry of `least` in row 0 must cancel against another word.
      const UnitPath lp = unit_path(ctx, least, 0);
      const ScalarMonomial target_mono = lp.monomial();
      std::optional<Word> partner;
      for (const auto& [w, c] : work.terms()) {
        if (w == least) continue;
        UnitPath wp = unit_path(ctx, w, 0);
        if (wp.end_col == lp.end_col && wp.monomial() == target_mono) {
          partner = w;
          break;
        }
      }
      if (!partner) {
        auto verdict = is_graded_identity(ctx, work);
        if (verdict.witness) throw NoExpressionError(*verdict.witness);
        throw Error(ErrorKind::Contract, "no partner word although the component vanishes");
      }
      JTerm term{coeff, least, *partner,
                 congruence_chain(ctx, least, *partner, Position{0, lp.end_col})};
      const std::size_t before = work.size();
      work.add_term(least, -coeff);
      work.add_term(*partner, coeff);
      if (work.size() >= before) throw Error(ErrorKind::Contract, "support did not shrink");
      out.terms.push_back(std::move(term));
    }
  }
  return out;
}

CheckResult check_jcombination(const Context& ctx, const JCombination& jc) {
  for (std::size_t i = 0; i < jc.terms.size(); ++i) {
    const JTerm& t = jc.terms[i];
    const bool endpoints = (t.chain.start == t.source && t.chain.end == t.target) ||
                           (t.chain.start == t.target && t.chain.end == t.source);
    if (!endpoints) return {false, "term " + std::to_string(i) + ": chain endpoints do not match"};
    if (auto r = check_chain(ctx, t.chain); !r) return {false, "term " + std::to_string(i) + ": " + r.diagnostic};
  }
  if (jc.expansion() != jc.polynomial) return {false, "combination does not expand to the polynomial"};
  return {};
}

}  // namespace gpi
