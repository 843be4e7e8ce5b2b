#pragma once

#include "gpi/freealg.hpp"
#include "gpi/identity.hpp"
#include "gpi/rewrite.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

// Reduction of Z_3-graded generators of J to generators whose parts have
// length at most 3. Every function here requires the context's group to be Z_3.

namespace gpi::z3 {

/// Throws NotApplicable unless ctx is graded by Z_3.
void require_z3(const Context& ctx);

enum class SubstitutionKind { Mu, Psi, Rho, Explicit };

const char* to_string(SubstitutionKind kind) noexcept;

/// The index-normalized endomorphisms:
///   Mu,  r >= 2: x_{r-1} -> [x_{r-1}, x_r]  (alpha(x_r) = 0)
///   Psi, r >= 2: x_{r+3} -> [x_r, x_{r+1}]  (alpha(x_{r+3}) = 0)
///   Rho, r >= 4: x_{r+1} -> [x_2, x_3]      (alpha(x_{r+1}) = 0)
/// Every variable involved must be declared in ctx.
WeakSubstitution substitution(const Context& ctx, SubstitutionKind kind, VarId r);

/// Both sides of [h1h2, h3h4] = h1h3[h2,h4] + h1[h2,h3]h4 + h3[h1,h4]h2 + [h1,h3]h4h2.
struct BracketExpansion {
  FreePoly lhs;
  FreePoly rhs;

  bool holds() const { return lhs == rhs; }
};

BracketExpansion bracket_expand(const Word& h1, const Word& h2, const Word& h3, const Word& h4);

/// coeff * left * expand(generator) * right
struct ConsequenceTerm {
  Integer coeff;
  Word left;
  GeneratorInstance generator;
  Word right;

  FreePoly value() const;
};

/// target = sum(terms) + sum(coeff * (before - after)) over the J_1 moves.
struct Decomposition {
  FreePoly target;
  std::vector<ConsequenceTerm> terms;
  std::vector<std::pair<Integer, Move>> moves;

  FreePoly sum() const;
  bool holds() const { return sum() == target; }
};

/// [h1h2, h3] = h1[h2,h3] + [h1,h3]h2 for parts of degree 0.
Decomposition split_commutator(const Context& ctx, const Word& h1, const Word& h2, const Word& h3);

enum class Side { Left, Right };

/// For alpha(h1) = alpha(h4) = alpha(h2)^-1 and alpha(h3) = 0:
///   Left:  h3h4h2h1 - h1h2h3h4 = h3 (h4h2h1 - h1h2h4) - [h1h2,h3] h4
///   Right: h1h2h3h4 - h4h2h3h1 = h3 (h1h2h4 - h4h2h1) + [h1h2,h3] h4 - [h4h2,h3] h1
/// The bracket terms are emitted as Swap0 moves. An empty h3 passes the type-2
/// generator through unchanged.
Decomposition pull_zero_factor(const Context& ctx, const Word& h1, const Word& h2, const Word& h3,
                               const Word& h4, Side side);

enum class Family { Y, V, W };

const char* to_string(Family f) noexcept;

/// The family polynomial on an explicit prefix word P:
///   Y: [P h1, h2]
///   V: (P h1) h2 h3 - h3 h2 (P h1)
///   W: h2 (h1 rev(P)) h3 - h3 (h1 rev(P)) h2
FreePoly family_polynomial(Family kind, const Word& prefix, const std::vector<Word>& parts);

/// The family with prefix x_1 ... x_r. Requires r >= 1, alpha(x_r) = 0, parts
/// disjoint from x_1..x_r, and nonempty h2 (and h3 for V and W); h1 may be empty.
FreePoly build_family(const Context& ctx, Family kind, VarId r, const std::vector<Word>& parts);

struct TelescopeSummand {
  int sign = 1;
  std::optional<WeakSubstitution> mu;
  FreePoly member;

  FreePoly value() const;
};

struct Telescope {
  FreePoly family;
  std::vector<TelescopeSummand> summands;

  FreePoly sum() const;
  bool holds() const { return sum() == family; }
};

/// Moves the degree-0 variable x_r through x_{r-1}, ..., x_1 one letter at a
/// time. Each step contributes +-mu_j(hat family) (minus for W). Requires r >= 2.
Telescope telescope(const Context& ctx, Family kind, VarId r, const std::vector<Word>& parts);

/// Sliding a degree-0 letter through its neighbours inside a word w:
///   w = final_word + sum_j sign * mu_{p_j}(hat)   with mu_p: p -> [p, zero].
struct LetterSlide {
  VarId zero = 0;
  Word hat;
  Word final_word;
  int sign = 1;
  std::vector<VarId> passed;
};

/// Slides the letter at pos to the front (toward_front) or to the back.
LetterSlide slide_letter(const Word& w, std::size_t pos, bool toward_front);

/// mu_p: p -> [p, zero]
WeakSubstitution mu_substitution(const Context& ctx, VarId p, VarId zero);

enum class SplitKind { R3, R5 };

/// Head (R5) or tail (R3) split of a word whose three outer letters have
/// nonzero degrees with nonzero partial sums:
///   R5: x1 x2 x3 rest  = rho(x1 z rest)      + x1 x3 x2 rest,   rho: z -> [x2, x3]
///   R3: rest xa xb xc  = psi(rest z xc)      + rest xb xa xc,   psi: z -> [xa, xb]
struct LetterSplit {
  SplitKind kind = SplitKind::R5;
  Context context;  // ctx with the fresh variable declared at degree 0
  VarId fresh = 0;
  WeakSubstitution substitution;
  Word preimage;
  FreePoly substituted;
  Word swapped;
  /// Pairs (a, b) with alpha(a) + alpha(b) = 0 forced by the degree conditions.
  std::array<std::pair<VarId, VarId>, 2> forced{};

  bool holds(const Word& original) const;
};

/// Throws NotApplicable when the degree conditions fail or the word is shorter
/// than three letters; throws Declaration if fresh clashes with the word or ctx.
LetterSplit decompose(const Context& ctx, SplitKind kind, const Word& h, VarId fresh);

/// True iff a1+a2 != 0 and a1+a2+a3 != 0 force a1+a3 = a2+a3 = 0 for this triple
/// (vacuously true when the hypothesis fails). The mirrored form swaps a1, a3.
bool auxiliary_lemma_holds(std::array<Element, 3> a, bool mirrored);

// Certificates

enum class NodeOp { Leaf, Ref, Mul, Subst, Sum, Move };

const char* to_string(NodeOp op) noexcept;

/// One algebraic step of a reduction proof. The value of a node:
///   Leaf   expand(generator), a reduced generator
///   Ref    expand(target of lemma[lemma])
///   Mul    left * value(child) * right
///   Subst  substitution(value(child))
///   Sum    sum_i coeffs[i] * value(children[i])
///   Move   move.before() - move.after(); the child proves move.generator()
struct CertNode {
  NodeOp op = NodeOp::Leaf;
  std::optional<GeneratorInstance> generator;
  std::size_t lemma = 0;
  Word left;
  Word right;
  SubstitutionKind subst_kind = SubstitutionKind::Explicit;
  WeakSubstitution substitution;
  std::optional<Move> move;
  std::vector<Integer> coeffs;
  std::vector<CertNode> children;

  static CertNode leaf(GeneratorInstance g);
  static CertNode ref(std::size_t index);
  static CertNode mul(Word left, CertNode child, Word right);
  static CertNode subst(SubstitutionKind kind, WeakSubstitution s, CertNode child);
  static CertNode sum(std::vector<std::pair<Integer, CertNode>> terms);
  static CertNode move_of(Move mv, CertNode proof);

  friend bool operator==(const CertNode&, const CertNode&) = default;
};

struct Lemma {
  GeneratorInstance target;
  CertNode proof;

  friend bool operator==(const Lemma&, const Lemma&) = default;
};

/// Lemma i's proof may cite lemmas j < i. The last lemma proves the target.
struct ReductionCertificate {
  Context context;
  VarId fresh_start = 0;
  GeneratorInstance target;
  std::vector<Lemma> lemmas;

  std::size_t leaf_count() const;
  std::vector<GeneratorInstance> leaves() const;

  friend bool operator==(const ReductionCertificate&, const ReductionCertificate&) = default;
};

/// fresh_start defaults to one past the largest declared variable.
ReductionCertificate reduce_type1(const Context& ctx, const GeneratorInstance& h,
                                  std::optional<VarId> fresh_start = std::nullopt);
ReductionCertificate reduce_type2(const Context& ctx, const GeneratorInstance& h,
                                  std::optional<VarId> fresh_start = std::nullopt);
ReductionCertificate reduce(const Context& ctx, const GeneratorInstance& h,
                            std::optional<VarId> fresh_start = std::nullopt);

/// Symbolic replay; the diagnostic names the failing lemma and step.
CheckResult check_certificate(const ReductionCertificate& cert, std::size_t max_part_len = 3);
bool verify_certificate(const ReductionCertificate& cert);

struct ReducedShape {
  GeneratorKind kind = GeneratorKind::Type1;
  std::vector<std::vector<Element>> part_degrees;
  Context context;
  GeneratorInstance generator;
};

/// Every (kind, per-letter degree pattern) with part lengths in 1..max_part_len
/// satisfying the generator degree conditions, instantiated on x_1, x_2, ...
/// in order. max_vars bounds the total number of letters (0: no bound).
std::vector<ReducedShape> enumerate_reduced(const GradingTuple& grading, std::size_t max_part_len = 3,
                                            std::size_t max_vars = 0);

}  // namespace gpi::z3
