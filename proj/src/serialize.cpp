#include "gpi/serialize.hpp"

#include "gpi/error.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace gpi::json {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorKind::Certificate, "malformed certificate: " + what);
}

const json& field(const json& j, const char* key) {
  if (!j.is_object()) malformed(std::string("expected an object with '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) malformed(std::string("missing '") + key + "'");
  return *it;
}

template <typename T>
T get(const json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    malformed(std::string("bad ") + what);
  }
}

std::vector<Word> words_from_json(const json& j) {
  if (!j.is_array()) malformed("expected a list of words");
  std::vector<Word> out;
  for (const auto& w : j) out.push_back(word_from_json(w));
  return out;
}

json words_json(const std::vector<Word>& ws) {
  json out = json::array();
  for (const auto& w : ws) out.push_back(to_json(w));
  return out;
}

}  // namespace

json to_json(const Integer& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(c);
  }
  return c.str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos) {
      malformed("bad integer '" + s + "'");
    }
    return Integer(s);
  }
  malformed("expected an integer");
}

json to_json(const Word& w) { return json(std::vector<VarId>(w.begin(), w.end())); }

Word word_from_json(const json& j) {
  auto letters = get<std::vector<VarId>>(j, "word");
  for (VarId v : letters) {
    if (v == 0) malformed("variable ids must be positive");
  }
  return Word(std::move(letters));
}

json to_json(const FreePoly& p) {
  json out = json::array();
  for (const auto& [w, c] : p.terms()) out.push_back({{"coeff", to_json(c)}, {"word", to_json(w)}});
  return out;
}

FreePoly poly_from_json(const json& j) {
  if (!j.is_array()) malformed("expected a polynomial term list");
  FreePoly out;
  for (const auto& t : j) out.add_term(word_from_json(field(t, "word")), integer_from_json(field(t, "coeff")));
  return out;
}

json to_json(const LieWord& w) {
  if (w.is_leaf()) return w.var();
  return json::array({to_json(w.left()), to_json(w.right())});
}

LieWord lie_from_json(const json& j) {
  if (j.is_number_unsigned() || j.is_number_integer()) {
    const auto v = get<std::int64_t>(j, "variable");
    if (v <= 0 || v > std::numeric_limits<VarId>::max()) malformed("variable ids must be positive");
    return LieWord::leaf(static_cast<VarId>(v));
  }
  if (j.is_array() && j.size() == 2) return LieWord::bracket(lie_from_json(j[0]), lie_from_json(j[1]));
  malformed("bad Lie word");
}

json to_json(const GeneratorInstance& g) {
  return {{"kind", to_string(g.kind())}, {"parts", words_json(g.parts())}};
}

GeneratorInstance generator_from_json(const json& j) {
  const auto kind = get<std::string>(field(j, "kind"), "generator kind");
  GeneratorKind k;
  if (kind == "type1") {
    k = GeneratorKind::Type1;
  } else if (kind == "type2") {
    k = GeneratorKind::Type2;
  } else {
    malformed("unknown generator kind '" + kind + "'");
  }
  try {
    return GeneratorInstance(k, words_from_json(field(j, "parts")));
  } catch (const Error& e) {
    malformed(e.what());
  }
}

json context_json(const Context& ctx) {
  const GradingTuple& grading = ctx.grading();
  json tuple = json::array();
  for (const auto& e : grading.tuple()) tuple.push_back(e.index);
  json vars = json::array();
  for (const auto& [v, d] : ctx.degrees()) vars.push_back({{"id", v}, {"degree", d.index}});
  return {{"group", {{"order", grading.group().order()}, {"table", grading.group().table()}}},
          {"grading", tuple},
          {"vars", vars}};
}

Context context_from_json(const json& j) {
  try {
    const json& g = field(j, "group");
    auto table = get<std::vector<std::vector<std::uint32_t>>>(field(g, "table"), "group table");
    if (table.size() != get<std::size_t>(field(g, "order"), "group order")) malformed("group order does not match table");
    FiniteGroup group(std::move(table));
    std::vector<Element> tuple;
    for (auto idx : get<std::vector<std::uint32_t>>(field(j, "grading"), "grading")) tuple.push_back(Element{idx});
    Context ctx(GradingTuple(std::move(group), std::move(tuple)));
    const json& vars = field(j, "vars");
    if (!vars.is_array()) malformed("vars must be a list");
    for (const auto& v : vars) {
      ctx.declare(get<VarId>(field(v, "id"), "variable id"), Element{get<std::uint32_t>(field(v, "degree"), "degree")});
    }
    return ctx;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Certificate) throw;
    malformed(e.what());
  }
}

json to_json(const ScalarPoly& p) {
  json out = json::array();
  for (const auto& [m, c] : p.terms()) {
    json vars = json::array();
    for (const auto& [v, e] : m.factors()) vars.push_back({v.k, v.row + 1, v.col + 1, e});
    out.push_back({{"coeff", to_json(c)}, {"vars", vars}});
  }
  return out;
}

json to_json(const GenericMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"dim", m.dim()}, {"entries", rows}};
}

json to_json(const Witness& w) {
  return {{"row", w.row + 1}, {"col", w.col + 1}, {"entry", to_json(w.entry)}};
}

json to_json(const Move& mv) {
  return {{"kind", to_string(mv.kind)},
          {"left", to_json(mv.left)},
          {"blocks", words_json(mv.blocks)},
          {"right", to_json(mv.right)}};
}

Move move_from_json(const json& j) {
  Move mv;
  const auto kind = get<std::string>(field(j, "kind"), "move kind");
  if (kind == "swap0") {
    mv.kind = MoveKind::Swap0;
  } else if (kind == "reverse3") {
    mv.kind = MoveKind::Reverse3;
  } else {
    malformed("unknown move kind '" + kind + "'");
  }
  mv.left = word_from_json(field(j, "left"));
  mv.blocks = words_from_json(field(j, "blocks"));
  mv.right = word_from_json(field(j, "right"));
  return mv;
}

json to_json(const RewriteChain& chain) {
  json moves = json::array();
  for (const auto& mv : chain.moves) moves.push_back(to_json(mv));
  return {{"start", to_json(chain.start)},
          {"end", to_json(chain.end)},
          {"forward", chain.forward},
          {"moves", moves}};
}

RewriteChain chain_from_json(const json& j) {
  RewriteChain chain;
  chain.start = word_from_json(field(j, "start"));
  chain.end = word_from_json(field(j, "end"));
  chain.forward = get<bool>(field(j, "forward"), "direction");
  const json& moves = field(j, "moves");
  if (!moves.is_array()) malformed("moves must be a list");
  for (const auto& mv : moves) chain.moves.push_back(move_from_json(mv));
  return chain;
}

json to_json(const SigmaWitness& s) {
  json sigma = json::array();
  for (auto k : s.sigma) sigma.push_back(k + 1);
  const auto path = [](const std::vector<Position>& ps) {
    json out = json::array();
    for (const auto& p : ps) out.push_back({p.row + 1, p.col + 1});
    return out;
  };
  return {{"sigma", sigma},
          {"position", {s.position.row + 1, s.position.col + 1}},
          {"unit_path_m", path(s.unit_path_m)},
          {"unit_path_n", path(s.unit_path_n)}};
}

json to_json(const JCombination& jc) {
  json terms = json::array();
  for (const auto& t : jc.terms) {
    terms.push_back({{"coeff", to_json(t.coeff)},
                     {"source", to_json(t.source)},
                     {"target", to_json(t.target)},
                     {"chain", to_json(t.chain)}});
  }
  return {{"polynomial", to_json(jc.polynomial)}, {"terms", terms}};
}

JCombination jcombination_from_json(const json& j) {
  JCombination jc;
  jc.polynomial = poly_from_json(field(j, "polynomial"));
  const json& terms = field(j, "terms");
  if (!terms.is_array()) malformed("terms must be a list");
  for (const auto& t : terms) {
    jc.terms.push_back({integer_from_json(field(t, "coeff")), word_from_json(field(t, "source")),
                        word_from_json(field(t, "target")), chain_from_json(field(t, "chain"))});
  }
  return jc;
}

json to_json(const z3::CertNode& node) {
  json out = {{"op", z3::to_string(node.op)}};
  switch (node.op) {
    case z3::NodeOp::Leaf:
      if (node.generator) out["generator"] = to_json(*node.generator);
      break;
    case z3::NodeOp::Ref:
      out["lemma"] = node.lemma;
      break;
    case z3::NodeOp::Mul:
      out["left"] = to_json(node.left);
      out["right"] = to_json(node.right);
      break;
    case z3::NodeOp::Subst: {
      out["subst"] = z3::to_string(node.subst_kind);
      json map = json::array();
      for (const auto& [v, image] : node.substitution.images()) map.push_back({{"var", v}, {"image", to_json(image)}});
      out["map"] = map;
      break;
    }
    case z3::NodeOp::Sum: {
      json coeffs = json::array();
      for (const auto& c : node.coeffs) coeffs.push_back(to_json(c));
      out["coeffs"] = coeffs;
      break;
    }
    case z3::NodeOp::Move:
      if (node.move) out["move"] = to_json(*node.move);
      break;
  }
  json args = json::array();
  for (const auto& c : node.children) args.push_back(to_json(c));
  out["args"] = args;
  return out;
}

z3::CertNode node_from_json(const json& j, const Context& ctx) {
  z3::CertNode node;
  const auto op = get<std::string>(field(j, "op"), "node op");
  const json& args = field(j, "args");
  if (!args.is_array()) malformed("args must be a list");
  for (const auto& a : args) node.children.push_back(node_from_json(a, ctx));
  if (op == "leaf") {
    node.op = z3::NodeOp::Leaf;
    node.generator = generator_from_json(field(j, "generator"));
  } else if (op == "ref") {
    node.op = z3::NodeOp::Ref;
    node.lemma = get<std::size_t>(field(j, "lemma"), "lemma index");
  } else if (op == "mul") {
    node.op = z3::NodeOp::Mul;
    node.left = word_from_json(field(j, "left"));
    node.right = word_from_json(field(j, "right"));
  } else if (op == "subst") {
    node.op = z3::NodeOp::Subst;
    const auto kind = get<std::string>(field(j, "subst"), "substitution kind");
    if (kind == "mu") {
      node.subst_kind = z3::SubstitutionKind::Mu;
    } else if (kind == "psi") {
      node.subst_kind = z3::SubstitutionKind::Psi;
    } else if (kind == "rho") {
      node.subst_kind = z3::SubstitutionKind::Rho;
    } else if (kind == "explicit") {
      node.subst_kind = z3::SubstitutionKind::Explicit;
    } else {
      malformed("unknown substitution kind '" + kind + "'");
    }
    std::map<VarId, LieWord> images;
    const json& map = field(j, "map");
    if (!map.is_array()) malformed("substitution map must be a list");
    for (const auto& e : map) images.emplace(get<VarId>(field(e, "var"), "variable"), lie_from_json(field(e, "image")));
    try {
      node.substitution = WeakSubstitution(ctx, std::move(images));
    } catch (const Error& e) {
      malformed(e.what());
    }
  } else if (op == "sum") {
    node.op = z3::NodeOp::Sum;
    const json& coeffs = field(j, "coeffs");
    if (!coeffs.is_array()) malformed("coeffs must be a list");
    for (const auto& c : coeffs) node.coeffs.push_back(integer_from_json(c));
  } else if (op == "move") {
    node.op = z3::NodeOp::Move;
    node.move = move_from_json(field(j, "move"));
  } else {
    malformed("unknown node op '" + op + "'");
  }
  return node;
}

json to_json(const z3::ReductionCertificate& cert) {
  json lemmas = json::array();
  for (const auto& l : cert.lemmas) lemmas.push_back({{"target", to_json(l.target)}, {"proof", to_json(l.proof)}});
  return {{"fresh_start", cert.fresh_start}, {"target", to_json(cert.target)}, {"lemmas", lemmas}};
}

namespace {

z3::ReductionCertificate reduction_payload(const json& j, Context ctx) {
  z3::ReductionCertificate cert;
  cert.fresh_start = get<VarId>(field(j, "fresh_start"), "fresh_start");
  cert.target = generator_from_json(field(j, "target"));
  const json& lemmas = field(j, "lemmas");
  if (!lemmas.is_array()) malformed("lemmas must be a list");
  for (const auto& l : lemmas) {
    cert.lemmas.push_back({generator_from_json(field(l, "target")), node_from_json(field(l, "proof"), ctx)});
  }
  cert.context = std::move(ctx);
  return cert;
}

}  // namespace

z3::ReductionCertificate reduction_from_json(const json& j) {
  return reduction_payload(field(j, "payload"), context_from_json(j));
}

json to_json(const z3::ReducedShape& shape) {
  json degrees = json::array();
  for (const auto& part : shape.part_degrees) {
    json d = json::array();
    for (const auto& e : part) d.push_back(e.index);
    degrees.push_back(std::move(d));
  }
  return {{"kind", to_string(shape.kind)}, {"degrees", degrees}, {"generator", to_json(shape.generator)}};
}

const char* kind_name(const Certificate& cert) noexcept {
  switch (cert.payload.index()) {
    case 0: return "chain";
    case 1: return "jcomb";
    default: return "reduction";
  }
}

Certificate make_certificate(const Context& ctx, RewriteChain chain) { return {ctx, std::move(chain)}; }

Certificate make_certificate(const Context& ctx, JCombination jc) { return {ctx, std::move(jc)}; }

Certificate make_certificate(z3::ReductionCertificate cert) {
  Context ctx = cert.context;
  return {std::move(ctx), std::move(cert)};
}

json to_json(const Certificate& cert) {
  json out = {{"version", kCertificateVersion}};
  out.update(context_json(cert.context));
  out["kind"] = kind_name(cert);
  out["payload"] = std::visit([](const auto& p) { return to_json(p); }, cert.payload);
  return out;
}

Certificate certificate_from_json(const json& j) {
  if (get<int>(field(j, "version"), "version") != kCertificateVersion) malformed("unsupported version");
  Context ctx = context_from_json(j);
  const auto kind = get<std::string>(field(j, "kind"), "kind");
  const json& payload = field(j, "payload");
  if (kind == "chain") return {ctx, chain_from_json(payload)};
  if (kind == "jcomb") return {ctx, jcombination_from_json(payload)};
  if (kind == "reduction") return {ctx, reduction_payload(payload, ctx)};
  malformed("unknown kind '" + kind + "'");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

Certificate read_certificate(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot read " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, path.string() + ": " + e.what());
  }
  return certificate_from_json(j);
}

void write_certificate(const std::filesystem::path& path, const Certificate& cert) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Parse, "cannot write " + path.string());
  out << dump(to_json(cert));
}

CheckResult verify(const Certificate& cert) {
  struct Visitor {
    const Context& ctx;
    CheckResult operator()(const RewriteChain& c) const { return check_chain(ctx, c); }
    CheckResult operator()(const JCombination& jc) const { return check_jcombination(ctx, jc); }
    CheckResult operator()(const z3::ReductionCertificate& r) const { return z3::check_certificate(r); }
  };
  try {
    return std::visit(Visitor{cert.context}, cert.payload);
  } catch (const Error& e) {
    return {false, e.what()};
  }
}

}  // namespace gpi::json
