#pragma once

#include "gpi/serialize.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace gpi::corpus {

enum class Expectation { Identity, NonIdentity, Congruent, Reducible };

const char* to_string(Expectation e) noexcept;

struct Entry {
  std::filesystem::path file;
  Expectation expected = Expectation::Identity;
  nlohmann::json params = nlohmann::json::object();
};

/// Manifest: a JSON list of {"file", "expected", "params"}. Relative paths are
/// resolved against base_dir.
std::vector<Entry> parse_manifest(const nlohmann::json& j, const std::filesystem::path& base_dir);
std::vector<Entry> read_manifest(const std::filesystem::path& path);

struct Outcome {
  std::size_t index = 0;
  std::filesystem::path file;
  Expectation expected = Expectation::Identity;
  bool passed = false;
  std::string detail;
  std::optional<std::filesystem::path> certificate;
  nlohmann::json data;
};

struct Report {
  std::vector<Outcome> outcomes;

  std::size_t failures() const;
  nlohmann::json to_json() const;
};

Outcome run_entry(const Entry& entry, std::size_t index, const std::optional<std::filesystem::path>& cert_dir);

/// Entries run concurrently; outcomes are ordered by manifest index. Certificates
/// are written to cert_dir when given.
Report run_corpus(const std::vector<Entry>& entries, const std::optional<std::filesystem::path>& cert_dir);

}  // namespace gpi::corpus
