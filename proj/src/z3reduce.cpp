#include "gpi/z3reduce.hpp"

#include "gpi/error.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace gpi::z3 {

void require_z3(const Context& ctx) {
  if (ctx.group().order() != 3) {
    throw Error(ErrorKind::NotApplicable, "operation requires a Z_3-grading");
  }
}

const char* to_string(SubstitutionKind kind) noexcept {
  switch (kind) {
    case SubstitutionKind::Mu: return "mu";
    case SubstitutionKind::Psi: return "psi";
    case SubstitutionKind::Rho: return "rho";
    case SubstitutionKind::Explicit: return "explicit";
  }
  return "explicit";
}

const char* to_string(Family f) noexcept {
  switch (f) {
    case Family::Y: return "Y";
    case Family::V: return "V";
    case Family::W: return "W";
  }
  return "Y";
}

const char* to_string(NodeOp op) noexcept {
  switch (op) {
    case NodeOp::Leaf: return "leaf";
    case NodeOp::Ref: return "ref";
    case NodeOp::Mul: return "mul";
    case NodeOp::Subst: return "subst";
    case NodeOp::Sum: return "sum";
    case NodeOp::Move: return "move";
  }
  return "leaf";
}

namespace {

bool is_zero_degree(const Context& ctx, const Word& w) {
  return ctx.word_degree(w) == ctx.group().identity();
}

Element degree_of(const Context& ctx, VarId v) {
  if (!ctx.declares(v)) {
    throw Error(ErrorKind::Declaration, "variable x" + std::to_string(v) + " is not declared");
  }
  return ctx.degree(v);
}

LieWord commutator(VarId a, VarId b) { return LieWord::bracket(LieWord::leaf(a), LieWord::leaf(b)); }

Word prefix_word(VarId r) {
  std::vector<VarId> letters;
  for (VarId v = 1; v <= r; ++v) letters.push_back(v);
  return Word(std::move(letters));
}

}  // namespace

WeakSubstitution substitution(const Context& ctx, SubstitutionKind kind, VarId r) {
  require_z3(ctx);
  const Element zero = ctx.group().identity();
  VarId target = 0;
  VarId a = 0;
  VarId b = 0;
  VarId zero_var = 0;
  switch (kind) {
    case SubstitutionKind::Mu:
      if (r < 2) throw Error(ErrorKind::Index, "mu needs r >= 2");
      target = r - 1, a = r - 1, b = r, zero_var = r;
      break;
    case SubstitutionKind::Psi:
      if (r < 2) throw Error(ErrorKind::Index, "psi needs r >= 2");
      target = r + 3, a = r, b = r + 1, zero_var = r + 3;
      break;
    case SubstitutionKind::Rho:
      if (r < 4) throw Error(ErrorKind::Index, "rho needs r >= 4");
      target = r + 1, a = 2, b = 3, zero_var = r + 1;
      break;
    case SubstitutionKind::Explicit:
      throw Error(ErrorKind::NotApplicable, "explicit substitutions have no index form");
  }
  for (VarId v : {target, a, b}) degree_of(ctx, v);
  if (ctx.degree(zero_var) != zero) {
    throw Error(ErrorKind::Substitution, std::string(to_string(kind)) + " requires x" +
                                             std::to_string(zero_var) + " of degree 0");
  }
  return WeakSubstitution(ctx, {{target, commutator(a, b)}});
}

BracketExpansion bracket_expand(const Word& h1, const Word& h2, const Word& h3, const Word& h4) {
  BracketExpansion out;
  out.lhs = bracket(h1 * h2, h3 * h4);
  out.rhs = bracket(h2, h4).sandwiched(h1 * h3, Word{}) + bracket(h2, h3).sandwiched(h1, h4) +
            bracket(h1, h4).sandwiched(h3, h2) + bracket(h1, h3).sandwiched(Word{}, h4 * h2);
  return out;
}

FreePoly ConsequenceTerm::value() const { return expand(generator).sandwiched(left, right) * coeff; }

FreePoly Decomposition::sum() const {
  FreePoly out;
  for (const auto& t : terms) out += t.value();
  for (const auto& [c, mv] : moves) {
    out.add_term(mv.before(), c);
    out.add_term(mv.after(), -c);
  }
  return out;
}

Decomposition split_commutator(const Context& ctx, const Word& h1, const Word& h2, const Word& h3) {
  require_z3(ctx);
  Decomposition out;
  out.target = bracket(h1 * h2, h3);
  out.terms.push_back({1, h1, make_generator(ctx, GeneratorKind::Type1, {h2, h3}), Word{}});
  out.terms.push_back({1, Word{}, make_generator(ctx, GeneratorKind::Type1, {h1, h3}), h2});
  return out;
}

namespace {

Move swap0(Word a, Word b, Word right) {
  Move mv;
  mv.kind = MoveKind::Swap0;
  mv.blocks = {std::move(a), std::move(b)};
  mv.right = std::move(right);
  return mv;
}

void require_move(const Context& ctx, const Move& mv) {
  if (auto msg = move_violation(ctx, mv); !msg.empty()) throw Error(ErrorKind::Move, msg);
}

}  // namespace

Decomposition pull_zero_factor(const Context& ctx, const Word& h1, const Word& h2, const Word& h3,
                               const Word& h4, Side side) {
  require_z3(ctx);
  if (!is_multilinear(h1 * h2 * h3 * h4)) {
    throw Error(ErrorKind::Generator, "pull_zero_factor needs a multilinear word");
  }
  if (!is_zero_degree(ctx, h3)) throw Error(ErrorKind::Generator, "pulled factor must have degree 0");

  Decomposition out;
  if (side == Side::Left) {
    out.target = FreePoly::monomial(h3 * h4 * h2 * h1) - FreePoly::monomial(h1 * h2 * h3 * h4);
    out.terms.push_back({1, h3, make_generator(ctx, GeneratorKind::Type2, {h4, h2, h1}), Word{}});
    if (!h3.empty()) {
      Move mv = swap0(h1 * h2, h3, h4);
      require_move(ctx, mv);
      out.moves.emplace_back(-1, std::move(mv));
    }
  } else {
    out.target = FreePoly::monomial(h1 * h2 * h3 * h4) - FreePoly::monomial(h4 * h2 * h3 * h1);
    out.terms.push_back({1, h3, make_generator(ctx, GeneratorKind::Type2, {h1, h2, h4}), Word{}});
    if (!h3.empty()) {
      Move a = swap0(h1 * h2, h3, h4);
      Move b = swap0(h4 * h2, h3, h1);
      require_move(ctx, a);
      require_move(ctx, b);
      out.moves.emplace_back(1, std::move(a));
      out.moves.emplace_back(-1, std::move(b));
    }
  }
  return out;
}

FreePoly family_polynomial(Family kind, const Word& prefix, const std::vector<Word>& parts) {
  const std::size_t expected = kind == Family::Y ? 2 : 3;
  if (parts.size() != expected) throw Error(ErrorKind::Index, "wrong number of family parts");
  if (kind == Family::Y) return bracket(prefix * parts[0], parts[1]);
  if (kind == Family::V) {
    const Word head = prefix * parts[0];
    return FreePoly::monomial(head * parts[1] * parts[2]) - FreePoly::monomial(parts[2] * parts[1] * head);
  }
  const Word mid = parts[0] * prefix.reversed();
  return FreePoly::monomial(parts[1] * mid * parts[2]) - FreePoly::monomial(parts[2] * mid * parts[1]);
}

namespace {

void check_family(const Context& ctx, Family kind, VarId r, const std::vector<Word>& parts) {
  require_z3(ctx);
  const std::size_t expected = kind == Family::Y ? 2 : 3;
  if (r < 1) throw Error(ErrorKind::Index, "family prefix needs r >= 1");
  if (parts.size() != expected) throw Error(ErrorKind::Index, "wrong number of family parts");
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i].empty()) throw Error(ErrorKind::Index, "family parts after the first must be nonempty");
  }
  for (const auto& p : parts) {
    for (VarId v : p) {
      if (v >= 1 && v <= r) throw Error(ErrorKind::Index, "family parts overlap the prefix x1..x" + std::to_string(r));
    }
  }
  for (VarId v = 1; v <= r; ++v) degree_of(ctx, v);
  if (ctx.degree(r) != ctx.group().identity()) {
    throw Error(ErrorKind::Substitution, "family needs x" + std::to_string(r) + " of degree 0");
  }
}

}  // namespace

FreePoly build_family(const Context& ctx, Family kind, VarId r, const std::vector<Word>& parts) {
  check_family(ctx, kind, r, parts);
  return family_polynomial(kind, prefix_word(r), parts);
}

FreePoly TelescopeSummand::value() const {
  FreePoly v = mu ? apply_substitution(member, *mu) : member;
  return sign < 0 ? -v : v;
}

FreePoly Telescope::sum() const {
  FreePoly out;
  for (const auto& s : summands) out += s.value();
  return out;
}

LetterSlide slide_letter(const Word& w, std::size_t pos, bool toward_front) {
  if (pos >= w.size()) throw Error(ErrorKind::Index, "slide position out of range");
  LetterSlide out;
  out.zero = w[pos];
  out.hat = w.without(pos);
  out.sign = toward_front ? 1 : -1;
  if (toward_front) {
    for (std::size_t j = pos; j-- > 0;) out.passed.push_back(w[j]);
    out.final_word = Word{out.zero} * out.hat;
  } else {
    for (std::size_t j = pos + 1; j < w.size(); ++j) out.passed.push_back(w[j]);
    out.final_word = out.hat * Word{out.zero};
  }
  return out;
}

WeakSubstitution mu_substitution(const Context& ctx, VarId p, VarId zero) {
  return WeakSubstitution(ctx, {{p, commutator(p, zero)}});
}

Telescope telescope(const Context& ctx, Family kind, VarId r, const std::vector<Word>& parts) {
  check_family(ctx, kind, r, parts);
  if (r < 2) throw Error(ErrorKind::NotApplicable, "telescope needs r >= 2");
  Telescope out;
  const Word prefix = prefix_word(r);
  out.family = family_polynomial(kind, prefix, parts);
  const Word hat = prefix_word(r - 1);
  // Y and V: x_r travels left through x_{r-1}..x_1 inside P.
  // W: rev(P) = x_r x_{r-1}..x_1, so x_r travels right through x_{r-1}..x_1.
  const int sign = kind == Family::W ? -1 : 1;
  const FreePoly member = family_polynomial(kind, hat, parts);
  for (VarId j = r - 1; j >= 1; --j) {
    out.summands.push_back({sign, mu_substitution(ctx, j, r), member});
  }
  // Final member: x_r in front of P (Y, V), at the far end of h1 rev(P) (W).
  const FreePoly final_member = family_polynomial(kind, Word{r} * hat, parts);
  out.summands.push_back({1, std::nullopt, final_member});
  return out;
}

bool LetterSplit::holds(const Word& original) const {
  return apply_substitution(FreePoly::monomial(preimage), substitution) + FreePoly::monomial(swapped) ==
         FreePoly::monomial(original);
}

LetterSplit decompose(const Context& ctx, SplitKind kind, const Word& h, VarId fresh) {
  require_z3(ctx);
  const Element zero = ctx.group().identity();
  const FiniteGroup& G = ctx.group();
  if (h.size() < 3) throw Error(ErrorKind::NotApplicable, "letter split needs at least three letters");
  if (fresh == 0 || h.contains(fresh)) {
    throw Error(ErrorKind::Declaration, "fresh variable clashes with the word");
  }
  if (ctx.declares(fresh) && ctx.degree(fresh) != zero) {
    throw Error(ErrorKind::Declaration, "fresh variable is declared with a nonzero degree");
  }
  const std::size_t n = h.size();
  // Outer letters in reading order away from the split end.
  const VarId o1 = kind == SplitKind::R5 ? h[0] : h[n - 1];
  const VarId o2 = kind == SplitKind::R5 ? h[1] : h[n - 2];
  const VarId o3 = kind == SplitKind::R5 ? h[2] : h[n - 3];
  const Element a1 = degree_of(ctx, o1);
  const Element a2 = degree_of(ctx, o2);
  const Element a3 = degree_of(ctx, o3);
  const Element s12 = G.multiply(a1, a2);
  const Element s123 = G.multiply(s12, a3);
  if (a1 == zero || a2 == zero || a3 == zero || s12 == zero || s123 == zero) {
    throw Error(ErrorKind::NotApplicable, "letter split needs nonzero outer degrees and partial sums");
  }

  LetterSplit out;
  out.kind = kind;
  out.context = ctx;
  out.context.declare(fresh, zero);
  out.fresh = fresh;
  if (kind == SplitKind::R5) {
    // h = x1 x2 x3 rest
    const Word rest = h.subword(3, n);
    out.substitution = WeakSubstitution(out.context, {{fresh, commutator(h[1], h[2])}});
    out.preimage = Word{h[0], fresh} * rest;
    out.swapped = Word{h[0], h[2], h[1]} * rest;
    out.forced = {std::pair{h[1], h[2]}, std::pair{h[0], h[2]}};
  } else {
    // h = rest xa xb xc
    const Word rest = h.subword(0, n - 3);
    out.substitution = WeakSubstitution(out.context, {{fresh, commutator(h[n - 3], h[n - 2])}});
    out.preimage = rest * Word{fresh, h[n - 1]};
    out.swapped = rest * Word{h[n - 2], h[n - 3], h[n - 1]};
    out.forced = {std::pair{h[n - 3], h[n - 2]}, std::pair{h[n - 3], h[n - 1]}};
  }
  out.substituted = apply_substitution(FreePoly::monomial(out.preimage), out.substitution);
  for (const auto& [a, b] : out.forced) {
    if (G.multiply(ctx.degree(a), ctx.degree(b)) != zero) {
      throw Error(ErrorKind::Contract, "forced degree relation failed");
    }
  }
  return out;
}

bool auxiliary_lemma_holds(std::array<Element, 3> a, bool mirrored) {
  if (mirrored) std::swap(a[0], a[2]);
  const FiniteGroup G = cyclic_group(3);
  const Element zero = G.identity();
  for (const auto& e : a) {
    if (!G.contains(e) || e == zero) return true;
  }
  const Element s12 = G.multiply(a[0], a[1]);
  const Element s123 = G.multiply(s12, a[2]);
  if (s12 == zero || s123 == zero) return true;
  return G.multiply(a[0], a[2]) == zero && G.multiply(a[1], a[2]) == zero;
}

// Certificates

CertNode CertNode::leaf(GeneratorInstance g) {
  CertNode n;
  n.op = NodeOp::Leaf;
  n.generator = std::move(g);
  return n;
}

CertNode CertNode::ref(std::size_t index) {
  CertNode n;
  n.op = NodeOp::Ref;
  n.lemma = index;
  return n;
}

CertNode CertNode::mul(Word left, CertNode child, Word right) {
  CertNode n;
  n.op = NodeOp::Mul;
  n.left = std::move(left);
  n.right = std::move(right);
  n.children.push_back(std::move(child));
  return n;
}

CertNode CertNode::subst(SubstitutionKind kind, WeakSubstitution s, CertNode child) {
  CertNode n;
  n.op = NodeOp::Subst;
  n.subst_kind = kind;
  n.substitution = std::move(s);
  n.children.push_back(std::move(child));
  return n;
}

CertNode CertNode::sum(std::vector<std::pair<Integer, CertNode>> terms) {
  CertNode n;
  n.op = NodeOp::Sum;
  for (auto& [c, child] : terms) {
    n.coeffs.push_back(c);
    n.children.push_back(std::move(child));
  }
  return n;
}

CertNode CertNode::move_of(Move mv, CertNode proof) {
  CertNode n;
  n.op = NodeOp::Move;
  n.move = std::move(mv);
  n.children.push_back(std::move(proof));
  return n;
}

namespace {

void collect_leaves(const CertNode& node, std::vector<GeneratorInstance>& out) {
  if (node.op == NodeOp::Leaf && node.generator) out.push_back(*node.generator);
  for (const auto& c : node.children) collect_leaves(c, out);
}

class Reducer {
 public:
  Reducer(Context ctx, VarId fresh_start) : ctx_(std::move(ctx)), next_(fresh_start) {}

  std::size_t prove(const GeneratorInstance& g) {
    if (auto it = index_.find(g); it != index_.end()) return it->second;
    if (!active_.insert(g).second) {
      throw Error(ErrorKind::Contract, "reduction revisited " + to_string(g));
    }
    CertNode proof = g.is_reduced() ? CertNode::leaf(g)
                                    : (g.kind() == GeneratorKind::Type1 ? prove_type1(g) : prove_type2(g));
    active_.erase(g);
    lemmas_.push_back({g, std::move(proof)});
    index_.emplace(g, lemmas_.size() - 1);
    return lemmas_.size() - 1;
  }

  ReductionCertificate finish(const GeneratorInstance& target, VarId fresh_start) {
    ReductionCertificate cert;
    cert.fresh_start = fresh_start;
    cert.target = target;
    cert.lemmas = std::move(lemmas_);
    cert.context = std::move(ctx_);
    return cert;
  }

 private:
  CertNode cite(const GeneratorInstance& g) {
    if (g.is_reduced()) return CertNode::leaf(g);
    return CertNode::ref(prove(g));
  }

  GeneratorInstance gen(GeneratorKind kind, std::vector<Word> parts) {
    return make_generator(ctx_, kind, std::move(parts));
  }

  VarId fresh_zero() {
    while (ctx_.declares(next_)) ++next_;
    const VarId v = next_++;
    ctx_.declare(v, ctx_.group().identity());
    return v;
  }

  bool zero(const Word& w) const { return is_zero_degree(ctx_, w); }

  std::optional<std::size_t> zero_prefix(const Word& w) const {
    for (std::size_t k = 1; k < w.size(); ++k) {
      if (zero(w.subword(0, k))) return k;
    }
    return std::nullopt;
  }

  std::optional<std::size_t> zero_suffix(const Word& w) const {
    for (std::size_t k = 1; k < w.size(); ++k) {
      if (zero(w.subword(w.size() - k, w.size()))) return w.size() - k;
    }
    return std::nullopt;
  }

  std::optional<std::size_t> zero_letter(const Word& w, std::size_t from, std::size_t to) const {
    for (std::size_t i = from; i < to; ++i) {
      if (ctx_.degree(w[i]) == ctx_.group().identity()) return i;
    }
    return std::nullopt;
  }

  CertNode from_decomposition(const Decomposition& d) {
    std::vector<std::pair<Integer, CertNode>> terms;
    for (const auto& t : d.terms) terms.emplace_back(t.coeff, CertNode::mul(t.left, cite(t.generator), t.right));
    for (const auto& [c, mv] : d.moves) terms.emplace_back(c, CertNode::move_of(mv, cite(mv.generator())));
    return CertNode::sum(std::move(terms));
  }

  // sum_j sign * mu_{p_j}(F(hat)) as Subst nodes on a common proof of F(hat).
  void slide_terms(const LetterSlide& slide, const GeneratorInstance& hat_gen,
                   std::vector<std::pair<Integer, CertNode>>& terms) {
    for (VarId p : slide.passed) {
      terms.emplace_back(slide.sign,
                         CertNode::subst(SubstitutionKind::Mu, mu_substitution(ctx_, p, slide.zero), cite(hat_gen)));
    }
  }

  CertNode prove_type1(const GeneratorInstance& g) {
    const Word& h1 = g.part(0);
    const Word& h2 = g.part(1);
    if (h1.size() <= 3) return CertNode::sum({{-1, cite(gen(GeneratorKind::Type1, {h2, h1}))}});

    if (auto k = zero_prefix(h1)) {
      return from_decomposition(split_commutator(ctx_, h1.subword(0, *k), h1.subword(*k, h1.size()), h2));
    }
    if (auto pos = zero_letter(h1, 1, h1.size())) {
      const LetterSlide slide = slide_letter(h1, *pos, true);
      std::vector<std::pair<Integer, CertNode>> terms;
      slide_terms(slide, gen(GeneratorKind::Type1, {slide.hat, h2}), terms);
      terms.emplace_back(1, from_decomposition(split_commutator(ctx_, Word{slide.zero}, slide.hat, h2)));
      return CertNode::sum(std::move(terms));
    }
    const LetterSplit split = decompose(ctx_, SplitKind::R5, h1, fresh_zero());
    ctx_ = split.context;
    return CertNode::sum(
        {{1, cite(gen(GeneratorKind::Type1, {split.swapped, h2}))},
         {1, CertNode::subst(SubstitutionKind::Rho, split.substitution,
                             cite(gen(GeneratorKind::Type1, {split.preimage, h2})))}});
  }

  CertNode prove_type2(const GeneratorInstance& g) {
    const Word& h1 = g.part(0);
    const Word& h2 = g.part(1);
    const Word& h3 = g.part(2);
    if (h1.size() > 3) return type2_head(h1, h2, h3);
    if (h2.size() > 3) return type2_middle(h1, h2, h3);
    return CertNode::sum({{-1, cite(gen(GeneratorKind::Type2, {h3, h2, h1}))}});
  }

  // h1 h2 h3 - h3 h2 h1 with |h1| > 3
  CertNode type2_head(const Word& h1, const Word& h2, const Word& h3) {
    if (auto k = zero_prefix(h1)) {
      return from_decomposition(pull_zero_factor(ctx_, h3, h2, h1.subword(0, *k), h1.subword(*k, h1.size()),
                                                 Side::Left));
    }
    if (auto pos = zero_letter(h1, 1, h1.size())) {
      const LetterSlide slide = slide_letter(h1, *pos, true);
      std::vector<std::pair<Integer, CertNode>> terms;
      slide_terms(slide, gen(GeneratorKind::Type2, {slide.hat, h2, h3}), terms);
      terms.emplace_back(1, from_decomposition(pull_zero_factor(ctx_, h3, h2, Word{slide.zero}, slide.hat, Side::Left)));
      return CertNode::sum(std::move(terms));
    }
    const LetterSplit split = decompose(ctx_, SplitKind::R5, h1, fresh_zero());
    ctx_ = split.context;
    return CertNode::sum(
        {{1, cite(gen(GeneratorKind::Type2, {split.swapped, h2, h3}))},
         {1, CertNode::subst(SubstitutionKind::Rho, split.substitution,
                             cite(gen(GeneratorKind::Type2, {split.preimage, h2, h3})))}});
  }

  // h1 h2 h3 - h3 h2 h1 with |h1| <= 3 < |h2|
  CertNode type2_middle(const Word& h1, const Word& h2, const Word& h3) {
    if (auto k = zero_suffix(h2)) {
      return from_decomposition(pull_zero_factor(ctx_, h1, h2.subword(0, *k), h2.subword(*k, h2.size()), h3,
                                                 Side::Right));
    }
    if (auto pos = zero_letter(h2, 0, h2.size() - 1)) {
      const LetterSlide slide = slide_letter(h2, *pos, false);
      std::vector<std::pair<Integer, CertNode>> terms;
      slide_terms(slide, gen(GeneratorKind::Type2, {h1, slide.hat, h3}), terms);
      terms.emplace_back(1, from_decomposition(pull_zero_factor(ctx_, h1, slide.hat, Word{slide.zero}, h3, Side::Right)));
      return CertNode::sum(std::move(terms));
    }
    const LetterSplit split = decompose(ctx_, SplitKind::R3, h2, fresh_zero());
    ctx_ = split.context;
    return CertNode::sum(
        {{1, cite(gen(GeneratorKind::Type2, {h1, split.swapped, h3}))},
         {1, CertNode::subst(SubstitutionKind::Psi, split.substitution,
                             cite(gen(GeneratorKind::Type2, {h1, split.preimage, h3})))}});
  }

  Context ctx_;
  VarId next_;
  std::vector<Lemma> lemmas_;
  std::map<GeneratorInstance, std::size_t> index_;
  std::set<GeneratorInstance> active_;
};

VarId default_fresh(const Context& ctx, const GeneratorInstance& h) {
  VarId top = ctx.max_var();
  for (VarId v : h.joined()) top = std::max(top, v);
  return top + 1;
}

ReductionCertificate run_reduction(const Context& ctx, const GeneratorInstance& h,
                                   std::optional<VarId> fresh_start) {
  require_z3(ctx);
  if (auto msg = generator_violation(ctx, h.kind(), h.parts()); !msg.empty()) {
    throw Error(ErrorKind::Generator, msg);
  }
  const VarId start = fresh_start.value_or(default_fresh(ctx, h));
  if (start == 0 || start <= ctx.max_var()) {
    throw Error(ErrorKind::Declaration, "fresh variables must start above every declared variable");
  }
  for (VarId v : h.joined()) {
    if (v >= start) throw Error(ErrorKind::Declaration, "fresh variables collide with the generator");
  }
  Reducer reducer(ctx, start);
  reducer.prove(h);
  return reducer.finish(h, start);
}

}  // namespace

std::size_t ReductionCertificate::leaf_count() const { return leaves().size(); }

std::vector<GeneratorInstance> ReductionCertificate::leaves() const {
  std::vector<GeneratorInstance> out;
  for (const auto& l : lemmas) collect_leaves(l.proof, out);
  return out;
}

ReductionCertificate reduce_type1(const Context& ctx, const GeneratorInstance& h, std::optional<VarId> fresh_start) {
  if (h.kind() != GeneratorKind::Type1) throw Error(ErrorKind::Generator, "reduce_type1 needs a type-1 generator");
  return run_reduction(ctx, h, fresh_start);
}

ReductionCertificate reduce_type2(const Context& ctx, const GeneratorInstance& h, std::optional<VarId> fresh_start) {
  if (h.kind() != GeneratorKind::Type2) throw Error(ErrorKind::Generator, "reduce_type2 needs a type-2 generator");
  return run_reduction(ctx, h, fresh_start);
}

ReductionCertificate reduce(const Context& ctx, const GeneratorInstance& h, std::optional<VarId> fresh_start) {
  return run_reduction(ctx, h, fresh_start);
}

namespace {

struct Replay {
  const ReductionCertificate& cert;
  std::size_t max_len;
  std::size_t lemma = 0;
  std::size_t step = 0;
  std::vector<FreePoly> proven;

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::Certificate,
                "lemma " + std::to_string(lemma) + ", step " + std::to_string(step) + ": " + msg);
  }

  FreePoly eval(const CertNode& node) {
    ++step;
    const auto arity = [&](std::size_t n) {
      if (node.children.size() != n) fail(std::string(to_string(node.op)) + " node has wrong arity");
    };
    switch (node.op) {
      case NodeOp::Leaf: {
        arity(0);
        if (!node.generator) fail("leaf without generator");
        const GeneratorInstance& g = *node.generator;
        if (!g.is_reduced(max_len)) fail("leaf " + to_string(g) + " is not reduced");
        if (auto msg = generator_violation(cert.context, g.kind(), g.parts()); !msg.empty()) {
          fail("leaf " + to_string(g) + ": " + msg);
        }
        return expand(g);
      }
      case NodeOp::Ref:
        arity(0);
        if (node.lemma >= lemma) fail("reference to lemma " + std::to_string(node.lemma) + " is not earlier");
        return proven[node.lemma];
      case NodeOp::Mul:
        arity(1);
        return eval(node.children[0]).sandwiched(node.left, node.right);
      case NodeOp::Subst: {
        arity(1);
        if (auto msg = node.substitution.check(cert.context); !msg.empty()) fail("substitution: " + msg);
        FreePoly inner = eval(node.children[0]);
        return apply_substitution(inner, node.substitution);
      }
      case NodeOp::Sum: {
        if (node.coeffs.size() != node.children.size()) fail("sum coefficients do not match its terms");
        FreePoly out;
        for (std::size_t i = 0; i < node.children.size(); ++i) out += eval(node.children[i]) * node.coeffs[i];
        return out;
      }
      case NodeOp::Move: {
        arity(1);
        if (!node.move) fail("move node without move");
        if (auto msg = move_violation(cert.context, *node.move); !msg.empty()) fail("move: " + msg);
        const GeneratorInstance g = node.move->generator();
        const CertNode& proof = node.children[0];
        const bool cites = (proof.op == NodeOp::Leaf && proof.generator == g) ||
                           (proof.op == NodeOp::Ref && proof.lemma < proven.size() &&
                            proof.lemma < cert.lemmas.size() && cert.lemmas[proof.lemma].target == g);
        if (!cites) fail("move is not backed by its generator " + to_string(g));
        eval(proof);
        FreePoly out = FreePoly::monomial(node.move->before());
        out.add_term(node.move->after(), -1);
        return out;
      }
    }
    fail("unknown node");
  }
};

}  // namespace

CheckResult check_certificate(const ReductionCertificate& cert, std::size_t max_part_len) {
  try {
    require_z3(cert.context);
    if (cert.lemmas.empty()) return {false, "certificate has no lemmas"};
    if (cert.lemmas.back().target != cert.target) return {false, "last lemma does not prove the target"};
    Replay replay{cert, max_part_len, 0, 0, {}};
    for (std::size_t i = 0; i < cert.lemmas.size(); ++i) {
      replay.lemma = i;
      replay.step = 0;
      const Lemma& l = cert.lemmas[i];
      if (auto msg = generator_violation(cert.context, l.target.kind(), l.target.parts()); !msg.empty()) {
        return {false, "lemma " + std::to_string(i) + ": target " + msg};
      }
      FreePoly value = replay.eval(l.proof);
      FreePoly expected = expand(l.target);
      if (value != expected) {
        return {false, "lemma " + std::to_string(i) + ": proof expands to " + to_string(value - expected) +
                           " more than " + to_string(l.target)};
      }
      replay.proven.push_back(std::move(expected));
    }
  } catch (const Error& e) {
    return {false, e.what()};
  }
  return {};
}

bool verify_certificate(const ReductionCertificate& cert) { return check_certificate(cert).ok; }

std::vector<ReducedShape> enumerate_reduced(const GradingTuple& grading, std::size_t max_part_len,
                                            std::size_t max_vars) {
  const FiniteGroup& G = grading.group();
  const std::vector<Element> elements = G.elements();

  // Degree sequences of each length, grouped by total degree.
  std::vector<std::vector<Element>> sequences;
  for (std::size_t len = 1; len <= max_part_len; ++len) {
    std::vector<std::size_t> idx(len, 0);
    while (true) {
      std::vector<Element> seq;
      for (auto i : idx) seq.push_back(elements[i]);
      sequences.push_back(std::move(seq));
      std::size_t k = len;
      while (k > 0 && ++idx[k - 1] == elements.size()) idx[--k] = 0;
      if (k == 0) break;
    }
  }
  const auto total = [&](const std::vector<Element>& s) { return G.product(s); };

  std::vector<ReducedShape> out;
  const auto emit = [&](GeneratorKind kind, std::vector<std::vector<Element>> parts) {
    std::size_t letters = 0;
    for (const auto& p : parts) letters += p.size();
    if (max_vars != 0 && letters > max_vars) return;
    ReducedShape shape;
    shape.kind = kind;
    shape.context = Context(grading);
    std::vector<Word> words;
    VarId next = 1;
    for (const auto& p : parts) {
      std::vector<VarId> letters_of;
      for (const auto& e : p) {
        shape.context.declare(next, e);
        letters_of.push_back(next++);
      }
      words.emplace_back(std::move(letters_of));
    }
    shape.part_degrees = std::move(parts);
    shape.generator = GeneratorInstance(kind, std::move(words));
    out.push_back(std::move(shape));
  };

  for (const auto& a : sequences) {
    if (total(a) != G.identity()) continue;
    for (const auto& b : sequences) {
      if (total(b) == G.identity()) emit(GeneratorKind::Type1, {a, b});
    }
  }
  for (const auto& a : sequences) {
    const Element d = total(a);
    for (const auto& b : sequences) {
      if (total(b) != G.inverse(d)) continue;
      for (const auto& c : sequences) {
        if (total(c) == d) emit(GeneratorKind::Type2, {a, b, c});
      }
    }
  }
  return out;
}

}  // namespace gpi::z3
