#include "gpi/genmat.hpp"
#include "gpi/identity.hpp"
#include "gpi/rewrite.hpp"
#include "gpi/serialize.hpp"
#include "gpi/z3reduce.hpp"
#include "random_words.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails. Usage: gpi_acceptance [WORKDIR]

using namespace gpi;
namespace fs = std::filesystem;
namespace gj = gpi::json;
using testutil::random_word;

namespace {

using Clock = std::chrono::steady_clock;

struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first;

  void expect(bool ok, const std::function<std::string()>& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first = what();
  }
};

struct Outcome {
  int id;
  const char* title;
  Tally tally;
  double seconds;
  double budget;
};

std::vector<Outcome> g_results;

double run(int id, const char* title, double budget, const std::function<void(Tally&)>& body) {
  Tally t;
  const auto start = Clock::now();
  try {
    body(t);
  } catch (const std::exception& e) {
    ++t.failures;
    if (t.first.empty()) t.first = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  g_results.push_back({id, title, std::move(t), secs, budget});
  return secs;
}

void report(const Outcome& o) {
  const bool pass = o.tally.failures == 0 && o.tally.checks > 0 && o.seconds <= o.budget;
  std::printf("criterion %d: %s  %-44s %6zu checks  %7.2f s / %.0f s", o.id, pass ? "PASS" : "FAIL", o.title,
              o.tally.checks, o.seconds, o.budget);
  if (o.tally.failures) std::printf("  (%zu failed; first: %s)", o.tally.failures, o.tally.first.c_str());
  if (o.seconds > o.budget) std::printf("  (over budget)");
  std::printf("\n");
}

Context with_degree(const Context& ctx, VarId v, Element d) {
  Context out(ctx.grading());
  for (auto [k, e] : ctx.degrees()) out.declare(k, k == v ? d : e);
  return out;
}

std::vector<VarId> iota_ids(VarId first, std::size_t count) {
  std::vector<VarId> ids(count);
  std::iota(ids.begin(), ids.end(), first);
  return ids;
}

Element random_element(const FiniteGroup& G, std::mt19937_64& rng) {
  return Element{static_cast<std::uint32_t>(rng() % G.order())};
}

// Criterion 1 helpers: wrap an identity in context words and a weak substitution.

LieWord random_lie(Context& ctx, Element degree, int depth, VarId& next, std::mt19937_64& rng) {
  const FiniteGroup& G = ctx.group();
  if (depth == 0 || rng() % 3 == 0) {
    ctx.declare(next, degree);
    return LieWord::leaf(next++);
  }
  const Element a = random_element(G, rng);
  const Element b = G.multiply(G.inverse(a), degree);
  LieWord left = random_lie(ctx, a, depth - 1, next, rng);
  LieWord right = random_lie(ctx, b, depth - 1, next, rng);
  return LieWord::bracket(std::move(left), std::move(right));
}

struct Wrapped {
  Context context;
  FreePoly poly;
};

Wrapped wrap(Context ctx, const FreePoly& f, std::mt19937_64& rng) {
  VarId next = ctx.max_var() + 1;
  const auto fresh_word = [&](std::size_t len) {
    std::vector<VarId> w;
    for (std::size_t i = 0; i < len; ++i) {
      ctx.declare(next, random_element(ctx.group(), rng));
      w.push_back(next++);
    }
    return Word(std::move(w));
  };
  const Word left = fresh_word(rng() % 3);
  const Word right = fresh_word(rng() % 3);
  const VarId original = next - 1 - static_cast<VarId>(left.size() + right.size());
  std::map<VarId, LieWord> images;
  for (int k = 0, count = static_cast<int>(rng() % 3); k < count; ++k) {
    const VarId v = 1 + static_cast<VarId>(rng() % original);
    if (images.contains(v)) continue;
    images.emplace(v, random_lie(ctx, ctx.degree(v), 2, next, rng));
  }
  const WeakSubstitution s(ctx, std::move(images));
  return {ctx, FreePoly::monomial(left) * apply_substitution(f, s) * FreePoly::monomial(right)};
}

// Criterion 4 helpers.

struct Sample {
  Context context;
  FreePoly poly;
};

/// Integer combination of congruent pairs over one multilinear variable set.
Sample random_identity(const GradingTuple& grading, std::mt19937_64& rng) {
  const std::size_t len = 2 + rng() % 6;
  for (;;) {
    Context ctx = testutil::random_context(grading, static_cast<VarId>(len), rng);
    FreePoly f;
    for (int k = 0, pairs = 1 + static_cast<int>(rng() % 3); k < pairs; ++k) {
      const Word m = testutil::shuffled(iota_ids(1, len), rng);
      const Word n = testutil::random_walk(ctx, m, 1 + static_cast<int>(rng() % 4), rng);
      const Integer c = static_cast<long>(rng() % 9) - 4;
      f += (FreePoly::monomial(m) - FreePoly::monomial(n)) * c;
    }
    if (!f.is_zero()) return {ctx, f};
  }
}

/// identity + c * monomial with c != 0; no monomial is an identity.
Sample random_non_identity(const GradingTuple& grading, std::mt19937_64& rng) {
  Sample s = random_identity(grading, rng);
  const Word m = testutil::shuffled(iota_ids(1, s.context.max_var()), rng);
  const long c = 1 + static_cast<long>(rng() % 5);
  s.poly.add_term(m, rng() % 2 ? c : -c);
  if (s.poly.is_zero()) s.poly.add_term(m, 1);
  return s;
}

/// Random multilinear combination of permutations of one variable set.
Sample random_mixed(const GradingTuple& grading, std::mt19937_64& rng) {
  if (rng() % 2) return random_identity(grading, rng);
  const std::size_t len = 2 + rng() % 4;
  Context ctx = testutil::random_context(grading, static_cast<VarId>(len), rng);
  FreePoly f;
  for (int k = 0, count = 2 + static_cast<int>(rng() % 2); k < count; ++k) {
    f.add_term(testutil::shuffled(iota_ids(1, len), rng), rng() % 2 ? 1 : -1);
  }
  if (f.is_zero()) f.add_term(Word(iota_ids(1, len)), 1);
  return {ctx, f};
}

std::vector<GradingTuple> cyclic_configs() {
  return {GradingTuple(cyclic_group(2)), GradingTuple(cyclic_group(3)), GradingTuple(cyclic_group(4))};
}

std::string text(const Word& w) { return to_string(w); }

void write_text(const fs::path& path, const std::string& s) {
  std::ofstream out(path, std::ios::binary);
  out << s;
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Criteria 4 and 7 write certificates; criterion 9 reruns them.

struct Criterion4 {
  Tally a, b, c, chains;
  std::vector<Sample> identities;
};

Criterion4 run_criterion4(std::uint64_t seed, const fs::path& cert_dir) {
  Criterion4 r;
  std::mt19937_64 rng(seed);
  const auto configs = cyclic_configs();
  fs::create_directories(cert_dir);
  for (int i = 0; i < 200; ++i) {
    Sample s = random_identity(configs[i % configs.size()], rng);
    JCombination jc = express_in_J(s.context, s.poly);
    r.a.expect(jc.expansion() == s.poly, [&] { return "expansion mismatch for " + to_string(s.poly); });
    for (const JTerm& t : jc.terms) {
      const CheckResult cr = check_chain(s.context, t.chain);
      r.chains.expect(cr.ok, [&] { return cr.diagnostic; });
      for (const Move& mv : t.chain.moves) {
        const std::string v = move_violation(s.context, mv);
        r.chains.expect(v.empty(), [&] { return v; });
      }
      if (t.source != t.target && t.source[0] != t.target[0]) {
        const auto pos = shared_entry(s.context, t.target, t.source);
        r.chains.expect(pos.has_value(), [&] { return "no shared entry for " + text(t.target); });
        if (pos) {
          const SigmaWitness w = extract_sigma(s.context, t.target, t.source, *pos);
          r.chains.expect(w.sigma.front() > 0, [&] { return "sigma(1) = 1 for " + text(t.target); });
        }
      }
    }
    const std::string name = "c4_" + std::to_string(i) + ".cert.json";
    write_text(cert_dir / name, gj::dump(gj::to_json(gj::make_certificate(s.context, std::move(jc)))));
    r.identities.push_back(std::move(s));
  }
  for (int i = 0; i < 200; ++i) {
    const Sample s = random_non_identity(configs[i % configs.size()], rng);
    try {
      express_in_J(s.context, s.poly);
      r.b.expect(false, [&] { return "expressed a non-identity " + to_string(s.poly); });
    } catch (const NoExpressionError& e) {
      const Witness& w = e.witness();
      const GenericMatrix m = eval_poly(s.context, s.poly);
      r.b.expect(!w.entry.is_zero() && m.at(w.row, w.col) == w.entry,
                 [&] { return "bad witness for " + to_string(s.poly); });
    }
  }
  for (int i = 0; i < 200; ++i) {
    const Sample s = random_mixed(configs[i % configs.size()], rng);
    const bool identity = is_graded_identity(s.context, s.poly).identity;
    bool expressed = true;
    try {
      const JCombination jc = express_in_J(s.context, s.poly);
      expressed = jc.expansion() == s.poly;
    } catch (const NoExpressionError&) {
      expressed = false;
    }
    r.c.expect(identity == expressed, [&] { return "disagreement on " + to_string(s.poly); });
    if (identity) r.identities.push_back(s);
  }
  return r;
}

Tally run_criterion7(std::uint64_t seed, const fs::path& cert_dir) {
  Tally t;
  std::mt19937_64 rng(seed);
  const GradingTuple z3(cyclic_group(3));
  fs::create_directories(cert_dir);
  for (int i = 0; i < 400; ++i) {
    const GeneratorKind kind = i < 200 ? GeneratorKind::Type1 : GeneratorKind::Type2;
    const std::size_t max_len = kind == GeneratorKind::Type1 ? 5 : 4;
    std::vector<std::size_t> lengths(kind == GeneratorKind::Type1 ? 2 : 3);
    for (auto& l : lengths) l = 1 + rng() % max_len;
    auto [ctx, g] = testutil::random_generator(z3, kind, lengths, rng);
    const z3::ReductionCertificate cert = z3::reduce(ctx, g);
    bool short_leaves = true;
    for (const auto& leaf : cert.leaves()) short_leaves = short_leaves && leaf.max_part_length() <= 3;
    t.expect(short_leaves, [&] { return "long leaf in reduction of " + to_string(g); });
    const CheckResult cr = z3::check_certificate(cert);
    t.expect(cr.ok, [&] { return to_string(g) + ": " + cr.diagnostic; });
    const std::string name = "c7_" + std::to_string(i) + ".cert.json";
    write_text(cert_dir / name, gj::dump(gj::to_json(gj::make_certificate(cert))));
  }
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t seed = testutil::seed_from_env();
  const fs::path work = argc > 1 ? fs::path(argv[1]) : fs::temp_directory_path() / "gpi_acceptance";
  fs::remove_all(work);
  std::printf("seed %llu, workdir %s\n", static_cast<unsigned long long>(seed), work.string().c_str());

  std::vector<Sample> crit1_identities;

  run(1, "generators of J are graded identities", 60, [&](Tally& t) {
    std::mt19937_64 rng(seed + 1);
    for (const auto& G : {cyclic_group(2), cyclic_group(3)}) {
      const GradingTuple grading(G);
      for (GeneratorKind kind : {GeneratorKind::Type1, GeneratorKind::Type2}) {
        for (int i = 0; i < 300; ++i) {
          std::vector<std::size_t> lengths(kind == GeneratorKind::Type1 ? 2 : 3);
          for (auto& l : lengths) l = 1 + rng() % 4;
          auto [ctx, g] = testutil::random_generator(grading, kind, lengths, rng);
          Wrapped w = i % 3 == 0 ? Wrapped{ctx, expand(g)} : wrap(ctx, expand(g), rng);
          t.expect(eval_poly(w.context, w.poly).is_zero(), [&] { return "nonzero value of " + to_string(g); });
          crit1_identities.push_back({std::move(w.context), std::move(w.poly)});
        }
      }
    }
  });

  run(2, "no monomial is a graded identity", 30, [&](Tally& t) {
    std::mt19937_64 rng(seed + 2);
    for (const auto& G : {cyclic_group(2), cyclic_group(3), cyclic_group(4), testutil::symmetric3()}) {
      const GradingTuple grading(G);
      for (int i = 0; i < 1000; ++i) {
        const Context ctx = testutil::random_context(grading, 4, rng);
        const Word w = random_word(4, 1 + rng() % 6, rng);
        t.expect(!eval_word_closed(ctx, w).is_zero(), [&] { return "zero monomial " + text(w); });
      }
    }
  });

  run(3, "closed form equals the matrix product", 30, [&](Tally& t) {
    std::mt19937_64 rng(seed + 3);
    for (const auto& G : {cyclic_group(2), cyclic_group(3), cyclic_group(4), testutil::symmetric3()}) {
      const GradingTuple grading(G);
      for (int i = 0; i < 500; ++i) {
        const Context ctx = testutil::random_context(grading, 5, rng);
        const Word w = random_word(5, 1 + rng() % 8, rng);
        t.expect(eval_word_closed(ctx, w) == eval_word_direct(ctx, w), [&] { return "mismatch on " + text(w); });
      }
    }
  });

  Criterion4 c4;
  const double secs4 = run(4, "identities are expressible in J", 120, [&](Tally& t) {
    c4 = run_criterion4(seed + 4, work / "run1");
    for (Tally* part : {&c4.a, &c4.b, &c4.c}) {
      t.checks += part->checks;
      t.failures += part->failures;
      if (t.first.empty()) t.first = part->first;
    }
  });

  g_results.push_back({5, "congruence chains and sigma witnesses", c4.chains, secs4, 120});

  run(6, "structural lemmas", 30, [&](Tally& t) {
    std::mt19937_64 rng(seed + 6);
    const GradingTuple z3(cyclic_group(3));
    for (int i = 0; i < 300; ++i) {
      const Word ids = testutil::shuffled(iota_ids(1, 9), rng);
      std::vector<Word> h;
      for (std::size_t at = 0; h.size() < 4;) {
        const std::size_t len = 1 + rng() % 2;
        h.push_back(ids.subword(at, at + len));
        at += len;
      }
      const auto m = [](const Word& w) { return FreePoly::monomial(w); };
      const FreePoly rhs = m(h[0] * h[2]) * bracket(h[1], h[3]) + m(h[0]) * bracket(h[1], h[2]) * m(h[3]) +
                           m(h[2]) * bracket(h[0], h[3]) * m(h[1]) + bracket(h[0], h[2]) * m(h[3] * h[1]);
      const z3::BracketExpansion be = z3::bracket_expand(h[0], h[1], h[2], h[3]);
      t.expect(be.lhs == bracket(h[0] * h[1], h[2] * h[3]) && be.rhs == rhs,
               [&] { return "bracket expansion on " + text(h[0]); });
    }
    for (int i = 0; i < 300; ++i) {
      const z3::Family kind = std::array{z3::Family::Y, z3::Family::V, z3::Family::W}[i % 3];
      const VarId r = 2 + static_cast<VarId>(rng() % 4);
      const Context ctx = with_degree(testutil::random_context(z3, r + 6, rng), r, Element{0});
      const Word pool = testutil::shuffled(iota_ids(r + 1, 6), rng);
      std::vector<Word> parts;
      std::size_t at = 0;
      for (std::size_t k = 0; k < (kind == z3::Family::Y ? 2u : 3u); ++k) {
        const std::size_t len = (k == 0 ? 0 : 1) + rng() % 2;
        parts.push_back(pool.subword(at, at + len));
        at += len;
      }
      const z3::Telescope tel = z3::telescope(ctx, kind, r, parts);
      FreePoly sum;
      for (const auto& s : tel.summands) sum += (s.mu ? apply_substitution(s.member, *s.mu) : s.member) * s.sign;
      const FreePoly family = z3::family_polynomial(kind, Word(iota_ids(1, r)), parts);
      t.expect(tel.family == family && sum == family,
               [&] { return std::string("telescope ") + z3::to_string(kind) + " r=" + std::to_string(r); });
    }
    int splits = 0;
    while (splits < 300) {
      const Context ctx = testutil::random_context(z3, 7, rng);
      const Word w = testutil::shuffled(iota_ids(1, 3 + rng() % 5), rng);
      const z3::SplitKind kind = splits % 2 ? z3::SplitKind::R3 : z3::SplitKind::R5;
      z3::LetterSplit s;
      try {
        s = z3::decompose(ctx, kind, w, 8);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::NotApplicable) continue;
        throw;
      }
      ++splits;
      const FreePoly lhs = apply_substitution(FreePoly::monomial(s.preimage), s.substitution) + FreePoly::monomial(s.swapped);
      t.expect(lhs == FreePoly::monomial(w), [&] { return "decomposition of " + text(w); });
      for (auto [a, b] : s.forced) {
        t.expect(ctx.group().multiply(ctx.degree(a), ctx.degree(b)) == Element{0},
                 [&] { return "forced pair in " + text(w); });
      }
    }
    for (std::uint32_t a = 1; a < 3; ++a)
      for (std::uint32_t b = 1; b < 3; ++b)
        for (std::uint32_t c = 1; c < 3; ++c)
          for (bool mirrored : {false, true}) {
            const std::uint32_t x = mirrored ? c : a, z = mirrored ? a : c;
            const bool hyp = (x + b) % 3 != 0 && (x + b + z) % 3 != 0;
            const bool oracle = !hyp || ((x + z) % 3 == 0 && (b + z) % 3 == 0);
            t.expect(z3::auxiliary_lemma_holds({Element{a}, Element{b}, Element{c}}, mirrored) == oracle && oracle,
                     [&] { return "auxiliary lemma on " + std::to_string(a) + std::to_string(b) + std::to_string(c); });
          }
  });

  run(7, "Z3 reduction to short generators", 180,
      [&](Tally& t) { t = run_criterion7(seed + 7, work / "run1"); });

  run(8, "components of identities are identities", 30, [&](Tally& t) {
    const auto check = [&](const Sample& s) {
      for (const FreePoly& c : multihomogeneous_components(s.poly)) {
        t.expect(is_graded_identity(s.context, c).identity, [&] { return "component " + to_string(c); });
      }
    };
    for (const auto& s : crit1_identities) check(s);
    for (const auto& s : c4.identities) check(s);
  });

  run(9, "certificates are reproducible", 300, [&](Tally& t) {
    run_criterion4(seed + 4, work / "run2");
    run_criterion7(seed + 7, work / "run2");
    std::size_t files = 0;
    for (const auto& entry : fs::directory_iterator(work / "run1")) {
      const fs::path twin = work / "run2" / entry.path().filename();
      ++files;
      t.expect(fs::exists(twin) && read_text(entry.path()) == read_text(twin),
               [&] { return "differs: " + entry.path().filename().string(); });
    }
    t.expect(files == 600, [&] { return "expected 600 certificates, found " + std::to_string(files); });
  });

  std::size_t failed = 0;
  for (const auto& o : g_results) {
    report(o);
    failed += (o.tally.failures == 0 && o.tally.checks > 0 && o.seconds <= o.budget) ? 0 : 1;
  }
  std::printf("%zu of %zu criteria passed\n", g_results.size() - failed, g_results.size());
  return failed ? 1 : 0;
}
