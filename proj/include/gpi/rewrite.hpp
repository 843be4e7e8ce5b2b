#pragma once

#include "gpi/error.hpp"
#include "gpi/freealg.hpp"
#include "gpi/genmat.hpp"
#include "gpi/identity.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace gpi {

struct Position {
  std::size_t row = 0;
  std::size_t col = 0;

  friend auto operator<=>(const Position&, const Position&) = default;
};

/// Matching between the unit paths of two words sharing an entry.
///
/// sigma[h] is the position in m whose scalar variable equals the one at
/// position h of n (0-based). Equal variables are matched least-unused first.
struct SigmaWitness {
  std::vector<std::size_t> sigma;
  Position position;
  std::vector<Position> unit_path_m;
  std::vector<Position> unit_path_n;
};

enum class MoveKind { Swap0, Reverse3 };

const char* to_string(MoveKind kind) noexcept;

/// A context congruence modulo J:
///   Swap0:    left b1 b2 right    -> left b2 b1 right,    alpha(b1) = alpha(b2) = 1_G
///   Reverse3: left b1 b2 b3 right -> left b3 b2 b1 right, alpha(b1) = alpha(b3) = alpha(b2)^-1
struct Move {
  MoveKind kind = MoveKind::Swap0;
  Word left;
  std::vector<Word> blocks;
  Word right;

  Word before() const;
  Word after() const;
  /// The move that undoes this one.
  Move inverse() const;
  /// The generator whose context-multiple is before() - after().
  GeneratorInstance generator() const;

  friend bool operator==(const Move&, const Move&) = default;
};

/// Empty when the move's block count, nonemptiness and degree side-conditions hold.
std::string move_violation(const Context& ctx, const Move& mv);

/// Throws Move if w is not exactly mv.before().
Word apply_move(const Word& w, const Move& mv);

/// Moves transform start into end (forward) or end into start (backward).
struct RewriteChain {
  Word start;
  Word end;
  std::vector<Move> moves;
  bool forward = true;

  friend bool operator==(const RewriteChain&, const RewriteChain&) = default;
};

struct CheckResult {
  bool ok = true;
  std::string diagnostic;

  explicit operator bool() const noexcept { return ok; }
};

/// Replays the chain, checks every move's side-conditions, and checks that
/// both endpoints evaluate to the same generic matrix.
CheckResult check_chain(const Context& ctx, const RewriteChain& chain);
bool verify_chain(const Context& ctx, const RewriteChain& chain);

/// First position (row-major) where m and n evaluate to the same nonzero
/// monomial. Throws Contract if the words differ in G-degree or multidegree.
std::optional<Position> shared_entry(const Context& ctx, const Word& m, const Word& n);

/// Throws Contract if the two words do not share the entry at pos.
SigmaWitness extract_sigma(const Context& ctx, const Word& m, const Word& n, Position pos);

/// Chain of Swap0/Reverse3 moves from n to m. Throws NotCongruent if the words
/// share no entry and Contract if they differ in multidegree.
RewriteChain congruence_chain(const Context& ctx, const Word& m, const Word& n);
/// As above, anchored at a known shared entry.
RewriteChain congruence_chain(const Context& ctx, const Word& m, const Word& n, Position pos);

/// coeff * (source - target), with a chain certifying source = target mod J.
struct JTerm {
  Integer coeff;
  Word source;
  Word target;
  RewriteChain chain;

  friend bool operator==(const JTerm&, const JTerm&) = default;
};

struct JCombination {
  FreePoly polynomial;
  std::vector<JTerm> terms;

  FreePoly expansion() const;

  friend bool operator==(const JCombination&, const JCombination&) = default;
};

class NoExpressionError : public Error {
 public:
  explicit NoExpressionError(Witness witness);
  const Witness& witness() const noexcept { return witness_; }

 private:
  Witness witness_;
};

/// Expresses an identity as a sum of coeff * (m' - m) with m' = m mod J,
/// eliminating the least word of each multihomogeneous component against a
/// partner that shares one of its entries. Throws NoExpressionError with the
/// evaluation witness when f is not an identity.
JCombination express_in_J(const Context& ctx, const FreePoly& f);

CheckResult check_jcombination(const Context& ctx, const JCombination& jc);

}  // namespace gpi
