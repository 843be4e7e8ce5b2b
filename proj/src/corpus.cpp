#include "gpi/corpus.hpp"

#include "gpi/dsl.hpp"
#include "gpi/error.hpp"

#include <fstream>
#include <future>

namespace gpi::corpus {

const char* to_string(Expectation e) noexcept {
  switch (e) {
    case Expectation::Identity: return "identity";
    case Expectation::NonIdentity: return "non-identity";
    case Expectation::Congruent: return "congruent";
    case Expectation::Reducible: return "reducible";
  }
  return "identity";
}

namespace {

Expectation expectation_from(const std::string& s) {
  if (s == "identity") return Expectation::Identity;
  if (s == "non-identity") return Expectation::NonIdentity;
  if (s == "congruent") return Expectation::Congruent;
  if (s == "reducible") return Expectation::Reducible;
  throw Error(ErrorKind::Parse, "unknown expectation '" + s + "'");
}

std::filesystem::path certificate_path(const std::filesystem::path& dir, const Entry& entry, std::size_t index) {
  return dir / (std::to_string(index) + "_" + entry.file.stem().string() + ".cert.json");
}

}  // namespace

std::vector<Entry> parse_manifest(const nlohmann::json& j, const std::filesystem::path& base_dir) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, "manifest must be a JSON list");
  std::vector<Entry> out;
  for (const auto& e : j) {
    if (!e.is_object() || !e.contains("file") || !e.contains("expected") || !e["file"].is_string() ||
        !e["expected"].is_string()) {
      throw Error(ErrorKind::Parse, "manifest entries need string 'file' and 'expected'");
    }
    Entry entry;
    std::filesystem::path file = e["file"].get<std::string>();
    entry.file = file.is_absolute() ? file : base_dir / file;
    entry.expected = expectation_from(e["expected"].get<std::string>());
    if (e.contains("params")) entry.params = e["params"];
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<Entry> read_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot read " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, path.string() + ": " + e.what());
  }
  return parse_manifest(j, path.parent_path());
}

Outcome run_entry(const Entry& entry, std::size_t index, const std::optional<std::filesystem::path>& cert_dir) {
  Outcome out;
  out.index = index;
  out.file = entry.file;
  out.expected = entry.expected;
  const auto save = [&](const json::Certificate& cert) {
    if (!cert_dir) return;
    const auto path = certificate_path(*cert_dir, entry, index);
    json::write_certificate(path, cert);
    out.certificate = path;
  };
  try {
    const dsl::Document doc = dsl::parse_file(entry.file);
    const Context& ctx = doc.context;
    switch (entry.expected) {
      case Expectation::Identity:
      case Expectation::NonIdentity: {
        if (!doc.poly) throw Error(ErrorKind::Parse, "entry needs a 'poly:' line");
        const IdentityVerdict verdict = is_graded_identity(ctx, *doc.poly);
        if (entry.expected == Expectation::NonIdentity) {
          out.passed = !verdict.identity;
          if (verdict.witness) out.data = json::to_json(*verdict.witness);
          out.detail = out.passed ? "witness found" : "polynomial is an identity";
          break;
        }
        if (!verdict.identity) {
          out.detail = "not an identity";
          out.data = json::to_json(*verdict.witness);
          break;
        }
        JCombination jc = express_in_J(ctx, *doc.poly);
        json::Certificate cert = json::make_certificate(ctx, std::move(jc));
        const CheckResult check = json::verify(cert);
        out.passed = check.ok;
        out.detail = check.ok ? "expressed in J" : check.diagnostic;
        save(cert);
        break;
      }
      case Expectation::Congruent: {
        if (!doc.m || !doc.n) throw Error(ErrorKind::Parse, "entry needs 'm:' and 'n:' lines");
        RewriteChain chain = congruence_chain(ctx, *doc.m, *doc.n);
        json::Certificate cert = json::make_certificate(ctx, std::move(chain));
        const CheckResult check = json::verify(cert);
        out.passed = check.ok;
        out.detail = check.ok ? "congruent" : check.diagnostic;
        save(cert);
        break;
      }
      case Expectation::Reducible: {
        if (!doc.generator) throw Error(ErrorKind::Parse, "entry needs a 'generator:' line");
        json::Certificate cert = json::make_certificate(z3::reduce(ctx, *doc.generator));
        const CheckResult check = json::verify(cert);
        out.passed = check.ok;
        out.detail = check.ok ? "reduced" : check.diagnostic;
        save(cert);
        break;
      }
    }
  } catch (const std::exception& e) {
    out.passed = false;
    out.detail = e.what();
  }
  return out;
}

std::size_t Report::failures() const {
  std::size_t n = 0;
  for (const auto& o : outcomes) n += o.passed ? 0 : 1;
  return n;
}

nlohmann::json Report::to_json() const {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& o : outcomes) {
    nlohmann::json e = {{"index", o.index},
                        {"file", o.file.string()},
                        {"expected", corpus::to_string(o.expected)},
                        {"status", o.passed ? "pass" : "fail"},
                        {"detail", o.detail}};
    if (o.certificate) e["certificate"] = o.certificate->string();
    if (!o.data.is_null()) e["data"] = o.data;
    entries.push_back(std::move(e));
  }
  return {{"entries", entries}, {"total", outcomes.size()}, {"failures", failures()}};
}

Report run_corpus(const std::vector<Entry>& entries, const std::optional<std::filesystem::path>& cert_dir) {
  if (cert_dir) std::filesystem::create_directories(*cert_dir);
  std::vector<std::future<Outcome>> pending;
  pending.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    pending.push_back(std::async(std::launch::async, run_entry, std::cref(entries[i]), i, std::cref(cert_dir)));
  }
  Report report;
  for (auto& f : pending) report.outcomes.push_back(f.get());
  return report;
}

}  // namespace gpi::corpus
