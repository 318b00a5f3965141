#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace speccc::corpus {

enum class ErrorKind { Io, DuplicateId, MalformedLine, EmptyCorpus, SelfAntonym, InvalidValue };

class CorpusError : public std::runtime_error {
public:
  CorpusError(ErrorKind kind, std::string message, int line = 0)
      : std::runtime_error(std::move(message)), kind_(kind), line_(line) {}
  ErrorKind kind() const { return kind_; }
  int line() const { return line_; }

private:
  ErrorKind kind_;
  int line_;
};

struct Requirement {
  std::string id;
  std::string text;
  int line = 0;
  friend bool operator==(const Requirement&, const Requirement&) = default;
};

/// "ID: sentence." per line; blank lines and '#' lines are skipped. Ids are
/// trimmed and an "R-"/"req-" prefix is normalized to "Req-".
std::vector<Requirement> parse_requirements(std::string_view content);
std::vector<Requirement> load_requirements(const std::filesystem::path& path);
std::string format_requirements(const std::vector<Requirement>& requirements);
std::string normalize_id(std::string_view id);

struct AntonymDictionary {
  std::map<std::string, std::set<std::string>> entries;
  std::vector<std::string> prefix_rules{"un", "in", "dis", "non"};

  bool contains(const std::string& word) const { return entries.contains(word); }
  const std::set<std::string>& antonyms(const std::string& word) const;
  /// Symmetric closure; idempotent.
  void close();
};

/// Lines "word : antonym1, antonym2"; words are lowercased and the relation
/// is closed symmetrically.
AntonymDictionary parse_antonym_dictionary(std::string_view content);
AntonymDictionary load_antonym_dictionary(const std::filesystem::path& path);

enum class SignPolicy { NonNegative, NonPositive, PerRequirement };

struct RunConfig {
  int unit_time = 1;     // seconds per Next
  int delta_bound = 0;   // B
  SignPolicy sign_policy = SignPolicy::NonNegative;
  /// Used with PerRequirement: +1 nonneg, -1 nonpos; missing ids are nonneg.
  std::map<std::string, int> requirement_signs;
  int k_max = 6;
  bool gcd_only = false;
};

/// key=value lines: unit_time, delta_bound (or B), sign_policy
/// (nonneg|nonpos|per-requirement), sign.<Req-ID>=nonneg|nonpos, k_max,
/// gcd_only. Missing keys keep their defaults.
RunConfig parse_config(std::string_view content);
RunConfig load_config(const std::filesystem::path& path);
/// Applies one key=value setting; throws InvalidValue.
void apply_setting(RunConfig& config, const std::string& key, const std::string& value);
void validate(const RunConfig& config);

std::string read_file(const std::filesystem::path& path);

}  // namespace speccc::corpus
