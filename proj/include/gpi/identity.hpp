#pragma once

#include "gpi/freealg.hpp"
#include "gpi/genmat.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gpi {

/// A nonzero entry of eval_poly(p), proving p is not an identity.
struct Witness {
  std::size_t row = 0;
  std::size_t col = 0;
  ScalarPoly entry;
};

struct IdentityVerdict {
  bool identity = false;
  std::optional<Witness> witness;

  explicit operator bool() const noexcept { return identity; }
};

/// Decides p in T_G(M_n(K), gl_n(K)) by evaluating at generic matrices. On a
/// negative answer the witness is the first nonzero entry in row-major order.
IdentityVerdict is_graded_identity(const Context& ctx, const FreePoly& p);

/// Every multihomogeneous component of an identity is an identity.
/// Throws Contract if p itself is not an identity.
bool components_are_identities(const Context& ctx, const FreePoly& p);

enum class GeneratorKind { Type1, Type2 };

const char* to_string(GeneratorKind kind) noexcept;

/// Generator of J: [h1,h2] with alpha(h1) = alpha(h2) = 1_G (type 1), or
/// h1h2h3 - h3h2h1 with alpha(h1) = alpha(h3) = alpha(h2)^{-1} (type 2). The
/// concatenated parts must be multilinear.
class GeneratorInstance {
 public:
  GeneratorInstance() : GeneratorInstance(GeneratorKind::Type1, {Word{}, Word{}}) {}
  GeneratorInstance(GeneratorKind kind, std::vector<Word> parts);

  GeneratorKind kind() const noexcept { return kind_; }
  const std::vector<Word>& parts() const noexcept { return parts_; }
  const Word& part(std::size_t i) const { return parts_.at(i); }
  std::size_t max_part_length() const noexcept;
  bool is_reduced(std::size_t max_len = 3) const noexcept { return max_part_length() <= max_len; }
  /// Concatenation of the parts in order.
  Word joined() const;

  friend bool operator==(const GeneratorInstance&, const GeneratorInstance&) = default;
  friend auto operator<=>(const GeneratorInstance&, const GeneratorInstance&) = default;

 private:
  GeneratorKind kind_;
  std::vector<Word> parts_;
};

std::string to_string(const GeneratorInstance& g);

/// Empty string when (kind, parts) satisfies the generator conditions under ctx.
std::string generator_violation(const Context& ctx, GeneratorKind kind, const std::vector<Word>& parts);

/// Validating constructor; throws Generator on any violated condition.
GeneratorInstance make_generator(const Context& ctx, GeneratorKind kind, std::vector<Word> parts);

FreePoly expand(const GeneratorInstance& g);

}  // namespace gpi
