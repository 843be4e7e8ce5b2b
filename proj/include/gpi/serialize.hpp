#pragma once

#include "gpi/genmat.hpp"
#include "gpi/identity.hpp"
#include "gpi/rewrite.hpp"
#include "gpi/z3reduce.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>
#include <variant>

// JSON encodings. Words are lists of variable ids; matrix positions are
// 1-based; integers are JSON numbers when they fit in 64 bits and decimal
// strings otherwise. Every decoder throws Error(Certificate) on malformed input.

namespace gpi::json {

using nlohmann::json;

inline constexpr int kCertificateVersion = 1;

json to_json(const Integer& c);
Integer integer_from_json(const json& j);

json to_json(const Word& w);
Word word_from_json(const json& j);

/// [{"coeff": c, "word": [...]}, ...] in length-lex order.
json to_json(const FreePoly& p);
FreePoly poly_from_json(const json& j);

/// Leaf: variable id; bracket: [left, right].
json to_json(const LieWord& w);
LieWord lie_from_json(const json& j);

json to_json(const GeneratorInstance& g);
GeneratorInstance generator_from_json(const json& j);

/// {"group": {"order", "table"}, "grading": [...], "vars": [{"id", "degree"}]}
json context_json(const Context& ctx);
Context context_from_json(const json& j);

/// [{coeff, vars: [[k, i, j, exp], ...]}, ...]
json to_json(const ScalarPoly& p);
/// {"dim": n, "entries": [[entry, ...], ...]}
json to_json(const GenericMatrix& m);
json to_json(const Witness& w);

json to_json(const Move& mv);
Move move_from_json(const json& j);
json to_json(const RewriteChain& chain);
RewriteChain chain_from_json(const json& j);
json to_json(const SigmaWitness& s);
json to_json(const JCombination& jc);
JCombination jcombination_from_json(const json& j);

json to_json(const z3::CertNode& node);
z3::CertNode node_from_json(const json& j, const Context& ctx);
json to_json(const z3::ReductionCertificate& cert);
z3::ReductionCertificate reduction_from_json(const json& j);
json to_json(const z3::ReducedShape& shape);

/// Self-contained certificate: {version, group, grading, vars, kind, payload}.
struct Certificate {
  Context context;
  std::variant<RewriteChain, JCombination, z3::ReductionCertificate> payload;
};

const char* kind_name(const Certificate& cert) noexcept;

Certificate make_certificate(const Context& ctx, RewriteChain chain);
Certificate make_certificate(const Context& ctx, JCombination jc);
Certificate make_certificate(z3::ReductionCertificate cert);

json to_json(const Certificate& cert);
Certificate certificate_from_json(const json& j);

/// Canonical text form: two-space indentation and a trailing newline.
std::string dump(const json& j);

Certificate read_certificate(const std::filesystem::path& path);
void write_certificate(const std::filesystem::path& path, const Certificate& cert);

/// Replays whichever payload the certificate carries.
CheckResult verify(const Certificate& cert);

}  // namespace gpi::json
