#include "gpi/corpus.hpp"
#include "gpi/dsl.hpp"
#include "gpi/error.hpp"
#include "gpi/serialize.hpp"
#include "gpi/z3reduce.hpp"

#ifdef GPI_SYSTEM_CLI11
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif

#include <cstdlib>
#include <iostream>

using namespace gpi;
using Json = nlohmann::json;
namespace gj = gpi::json;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

void emit(const Json& j) { std::cout << gj::dump(j); }

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const FreePoly& require_poly(const dsl::Document& doc) {
  if (!doc.poly) throw InputError("input has no 'poly:' line");
  return *doc.poly;
}

Word word_option(const std::string& expr, const std::optional<Word>& fallback, const char* key,
                 const Context& ctx) {
  if (!expr.empty()) return dsl::parse_word(expr, ctx);
  if (!fallback) throw InputError(std::string("no word given: pass --") + key + " or add a '" + key + ":' line");
  return *fallback;
}

int cmd_check(const std::string& file) {
  const dsl::Document doc = dsl::parse_file(file);
  const IdentityVerdict v = is_graded_identity(doc.context, require_poly(doc));
  Json out = {{"identity", v.identity}};
  if (v.witness) out["witness"] = gj::to_json(*v.witness);
  emit(out);
  return v.identity ? kOk : kNegative;
}

int cmd_eval(const std::string& file, const std::string& word) {
  const dsl::Document doc = dsl::parse_file(file);
  if (word.empty()) {
    emit(gj::to_json(eval_poly(doc.context, require_poly(doc))));
    return kOk;
  }
  Word w;
  if (word.find_first_not_of("0123456789") == std::string::npos) {
    const FreePoly& p = require_poly(doc);
    const std::size_t index = std::stoul(word);
    if (index == 0 || index > p.size()) throw InputError("word index out of range 1.." + std::to_string(p.size()));
    w = std::next(p.terms().begin(), static_cast<std::ptrdiff_t>(index - 1))->first;
  } else {
    w = dsl::parse_word(word, doc.context);
  }
  Json out = gj::to_json(eval_word_closed(doc.context, w));
  out["word"] = gj::to_json(w);
  emit(out);
  return kOk;
}

int cmd_congruent(const std::string& file, const std::string& m_expr, const std::string& n_expr) {
  const dsl::Document doc = dsl::parse_file(file);
  const Word m = word_option(m_expr, doc.m, "m", doc.context);
  const Word n = word_option(n_expr, doc.n, "n", doc.context);
  if (multidegree(m) != multidegree(n)) {
    emit(Json{{"congruent", false}, {"reason", "different multidegree"}});
    return kNegative;
  }
  const auto pos = shared_entry(doc.context, m, n);
  if (!pos) {
    emit(Json{{"congruent", false}, {"reason", "no shared entry"}});
    return kNegative;
  }
  Json out = gj::to_json(gj::make_certificate(doc.context, congruence_chain(doc.context, m, n, *pos)));
  out["sigma"] = gj::to_json(extract_sigma(doc.context, m, n, *pos));
  emit(out);
  return kOk;
}

int cmd_express(const std::string& file) {
  const dsl::Document doc = dsl::parse_file(file);
  try {
    emit(gj::to_json(gj::make_certificate(doc.context, express_in_J(doc.context, require_poly(doc)))));
    return kOk;
  } catch (const NoExpressionError& e) {
    emit(Json{{"identity", false}, {"witness", gj::to_json(e.witness())}});
    return kNegative;
  }
}

int cmd_z3reduce(const std::string& file, int type, std::optional<VarId> fresh) {
  const dsl::Document doc = dsl::parse_file(file);
  if (!doc.generator) throw InputError("input has no 'generator:' line");
  const GeneratorKind want = type == 2 ? GeneratorKind::Type2 : GeneratorKind::Type1;
  if (type != 0 && doc.generator->kind() != want) {
    throw InputError(std::string("generator is ") + to_string(doc.generator->kind()) + ", not type" +
                     std::to_string(type));
  }
  emit(gj::to_json(gj::make_certificate(z3::reduce(doc.context, *doc.generator, fresh))));
  return kOk;
}

int cmd_enum(std::size_t max_len, std::size_t max_vars, bool full) {
  const auto shapes = z3::enumerate_reduced(GradingTuple(cyclic_group(3)), max_len, max_vars);
  std::size_t type1 = 0;
  for (const auto& s : shapes) type1 += s.kind == GeneratorKind::Type1 ? 1 : 0;
  Json out = {{"max_len", max_len}, {"count", shapes.size()}, {"type1", type1}, {"type2", shapes.size() - type1}};
  if (full) {
    Json list = Json::array();
    for (const auto& s : shapes) list.push_back(gj::to_json(s));
    out["shapes"] = std::move(list);
  }
  emit(out);
  return kOk;
}

int cmd_verify(const std::string& file) {
  const gj::Certificate cert = gj::read_certificate(file);
  const CheckResult r = gj::verify(cert);
  Json out = {{"ok", r.ok}, {"kind", gj::kind_name(cert)}};
  if (!r.ok) out["diagnostic"] = r.diagnostic;
  emit(out);
  if (!r.ok) std::cerr << "verification failed: " << r.diagnostic << '\n';
  return r.ok ? kOk : kNegative;
}

int cmd_corpus(const std::string& manifest, const std::string& out_dir) {
  const auto entries = corpus::read_manifest(manifest);
  std::optional<std::filesystem::path> dir;
  if (!out_dir.empty()) {
    dir = out_dir;
  } else {
    dir = std::filesystem::path(manifest).parent_path() / "certificates";
  }
  const corpus::Report report = corpus::run_corpus(entries, dir);
  emit(report.to_json());
  for (const auto& o : report.outcomes) {
    if (!o.passed) std::cerr << "FAIL " << o.file.string() << ": " << o.detail << '\n';
  }
  return report.failures() == 0 ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded polynomial identities of (M_n(K), gl_n(K))"};
  app.require_subcommand(1);

  std::string file;
  std::string word;
  std::string m_expr;
  std::string n_expr;
  int type = 0;
  VarId fresh = 0;
  std::size_t max_len = 3;
  std::size_t max_vars = 0;
  bool full = false;
  std::string out_dir;

  auto* check = app.add_subcommand("check", "Decide whether the polynomial is a graded identity");
  check->add_option("FILE", file, "input file")->required();

  auto* eval = app.add_subcommand("eval", "Evaluate at generic matrices");
  eval->add_option("FILE", file, "input file")->required();
  eval->add_option("--word", word, "1-based term index of the polynomial, or a word expression");

  auto* congruent = app.add_subcommand("congruent", "Rewrite chain between two words modulo J");
  congruent->add_option("FILE", file, "input file")->required();
  congruent->add_option("--m", m_expr, "target word");
  congruent->add_option("--n", n_expr, "source word");

  auto* express = app.add_subcommand("express", "Express an identity as a combination of J-congruences");
  express->add_option("FILE", file, "input file")->required();

  auto* reduce = app.add_subcommand("z3reduce", "Reduce a Z_3 generator to generators with parts of length <= 3");
  reduce->add_option("FILE", file, "input file")->required();
  reduce->add_option("--type", type, "expected generator type")->check(CLI::IsMember({1, 2}));
  reduce->add_option("--fresh-start", fresh, "first id for fresh variables");

  auto* enumerate = app.add_subcommand("enum-reduced", "Enumerate reduced Z_3 generator shapes");
  enumerate->add_option("--max-len", max_len, "largest part length")->check(CLI::Range(1, 4));
  enumerate->add_option("--max-vars", max_vars, "largest number of letters (0: no bound)");
  enumerate->add_flag("--json", full, "list every shape");

  auto* verify = app.add_subcommand("verify", "Replay a certificate");
  verify->add_option("CERT", file, "certificate file")->required();

  auto* corpus = app.add_subcommand("corpus", "Run a corpus manifest");
  corpus->add_option("MANIFEST", file, "manifest file")->required();
  corpus->add_option("--out", out_dir, "directory for certificates");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*check) return cmd_check(file);
    if (*eval) return cmd_eval(file, word);
    if (*congruent) return cmd_congruent(file, m_expr, n_expr);
    if (*express) return cmd_express(file);
    if (*reduce) return cmd_z3reduce(file, type, fresh ? std::optional<VarId>(fresh) : std::nullopt);
    if (*enumerate) return cmd_enum(max_len, max_vars, full);
    if (*verify) return cmd_verify(file);
    if (*corpus) return cmd_corpus(file, out_dir);
  } catch (const ParseError& e) {
    std::cerr << file << ':' << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
