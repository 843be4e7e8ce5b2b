#include "gpi/identity.hpp"

#include "gpi/error.hpp"

#include <algorithm>

namespace gpi {

IdentityVerdict is_graded_identity(const Context& ctx, const FreePoly& p) {
  GenericMatrix value = eval_poly(ctx, p);
  IdentityVerdict verdict;
  if (auto pos = value.first_nonzero()) {
    verdict.witness = Witness{pos->first, pos->second, value.at(pos->first, pos->second)};
  } else {
    verdict.identity = true;
  }
  return verdict;
}

bool components_are_identities(const Context& ctx, const FreePoly& p) {
  if (!is_graded_identity(ctx, p)) {
    throw Error(ErrorKind::Contract, "components_are_identities requires an identity");
  }
  for (const auto& component : multihomogeneous_components(p)) {
    if (!is_graded_identity(ctx, component)) return false;
  }
  return true;
}

const char* to_string(GeneratorKind kind) noexcept {
  return kind == GeneratorKind::Type1 ? "type1" : "type2";
}

GeneratorInstance::GeneratorInstance(GeneratorKind kind, std::vector<Word> parts)
    : kind_(kind), parts_(std::move(parts)) {
  const std::size_t expected = kind_ == GeneratorKind::Type1 ? 2 : 3;
  if (parts_.size() != expected) {
    throw Error(ErrorKind::Generator, std::string(gpi::to_string(kind_)) + " generator needs " +
                                          std::to_string(expected) + " parts");
  }
}

std::size_t GeneratorInstance::max_part_length() const noexcept {
  std::size_t m = 0;
  for (const auto& p : parts_) m = std::max(m, p.size());
  return m;
}

Word GeneratorInstance::joined() const {
  Word out;
  for (const auto& p : parts_) out *= p;
  return out;
}

std::string to_string(const GeneratorInstance& g) {
  std::string out = std::string(to_string(g.kind())) + "(";
  for (std::size_t i = 0; i < g.parts().size(); ++i) {
    if (i) out += " | ";
    out += to_string(g.parts()[i]);
  }
  return out + ")";
}

std::string generator_violation(const Context& ctx, GeneratorKind kind, const std::vector<Word>& parts) {
  const std::size_t expected = kind == GeneratorKind::Type1 ? 2 : 3;
  if (parts.size() != expected) return "wrong number of parts";
  Word joined;
  for (const auto& p : parts) {
    if (p.empty()) return "generator parts must be nonempty words";
    joined *= p;
  }
  if (!is_multilinear(joined)) return "generator parts must form a multilinear word";
  try {
    const FiniteGroup& G = ctx.group();
    if (kind == GeneratorKind::Type1) {
      if (ctx.word_degree(parts[0]) != G.identity() || ctx.word_degree(parts[1]) != G.identity()) {
        return "type1 parts must have trivial degree";
      }
    } else {
      const Element a1 = ctx.word_degree(parts[0]);
      const Element a2 = ctx.word_degree(parts[1]);
      const Element a3 = ctx.word_degree(parts[2]);
      if (a1 != a3 || a1 != G.inverse(a2)) {
        return "type2 parts must satisfy alpha(h1) = alpha(h3) = alpha(h2)^-1";
      }
    }
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

GeneratorInstance make_generator(const Context& ctx, GeneratorKind kind, std::vector<Word> parts) {
  if (auto msg = generator_violation(ctx, kind, parts); !msg.empty()) {
    throw Error(ErrorKind::Generator, msg);
  }
  return GeneratorInstance(kind, std::move(parts));
}

FreePoly expand(const GeneratorInstance& g) {
  const auto& h = g.parts();
  if (g.kind() == GeneratorKind::Type1) return bracket(h[0], h[1]);
  FreePoly out = FreePoly::monomial(h[0] * h[1] * h[2]);
  out.add_term(h[2] * h[1] * h[0], -1);
  return out;
}

}  // namespace gpi
