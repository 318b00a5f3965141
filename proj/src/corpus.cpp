#include "speccc/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace speccc::corpus {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::vector<std::string> lines_of(std::string_view content) {
  std::vector<std::string> out;
  std::istringstream in{std::string(content)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out.push_back(line);
  }
  return out;
}

int parse_int(const std::string& key, const std::string& value) {
  int v = 0;
  const auto* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, v);
  if (ec != std::errc() || ptr != end)
    throw CorpusError(ErrorKind::InvalidValue, "invalid value for " + key + ": " + value);
  return v;
}

int parse_sign(const std::string& key, const std::string& value) {
  if (value == "nonneg") return 1;
  if (value == "nonpos") return -1;
  throw CorpusError(ErrorKind::InvalidValue, "invalid value for " + key + ": " + value);
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError(ErrorKind::Io, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string normalize_id(std::string_view raw) {
  std::string id = trim(raw);
  const std::string low = lower(id);
  if (low.starts_with("req-")) return "Req-" + id.substr(4);
  if (low.starts_with("r-")) return "Req-" + id.substr(2);
  return id;
}

std::vector<Requirement> parse_requirements(std::string_view content) {
  std::vector<Requirement> out;
  std::map<std::string, int> seen;
  int line_no = 0;
  for (const auto& raw : lines_of(content)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos)
      throw CorpusError(ErrorKind::MalformedLine, "line " + std::to_string(line_no) +
                                                      ": expected \"ID: sentence.\"",
                        line_no);
    Requirement r{normalize_id(line.substr(0, colon)), trim(line.substr(colon + 1)), line_no};
    if (r.id.empty() || r.text.empty() || r.text.back() != '.')
      throw CorpusError(ErrorKind::MalformedLine,
                        "line " + std::to_string(line_no) + ": requirement must end with a period",
                        line_no);
    if (auto it = seen.find(r.id); it != seen.end())
      throw CorpusError(ErrorKind::DuplicateId,
                        "duplicate id " + r.id + " on line " + std::to_string(line_no) +
                            " (first on line " + std::to_string(it->second) + ")",
                        line_no);
    seen.emplace(r.id, line_no);
    out.push_back(std::move(r));
  }
  if (out.empty()) throw CorpusError(ErrorKind::EmptyCorpus, "no requirements found");
  return out;
}

std::vector<Requirement> load_requirements(const std::filesystem::path& path) {
  return parse_requirements(read_file(path));
}

std::string format_requirements(const std::vector<Requirement>& requirements) {
  std::string out;
  for (const auto& r : requirements) out += r.id + ": " + r.text + "\n";
  return out;
}

const std::set<std::string>& AntonymDictionary::antonyms(const std::string& word) const {
  static const std::set<std::string> kNone;
  auto it = entries.find(word);
  return it == entries.end() ? kNone : it->second;
}

void AntonymDictionary::close() {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& [w, as] : entries)
    for (const auto& a : as) pairs.emplace_back(a, w);
  for (auto& [a, w] : pairs) entries[a].insert(w);
}

AntonymDictionary parse_antonym_dictionary(std::string_view content) {
  AntonymDictionary dict;
  int line_no = 0;
  for (const auto& raw : lines_of(content)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos)
      throw CorpusError(ErrorKind::MalformedLine,
                        "line " + std::to_string(line_no) + ": expected \"word : antonyms\"",
                        line_no);
    const std::string word = lower(trim(line.substr(0, colon)));
    if (word.empty())
      throw CorpusError(ErrorKind::MalformedLine, "line " + std::to_string(line_no) + ": empty word",
                        line_no);
    auto& set = dict.entries[word];
    std::stringstream rest(line.substr(colon + 1));
    std::string item;
    while (std::getline(rest, item, ',')) {
      const std::string a = lower(trim(item));
      if (a.empty()) continue;
      if (a == word)
        throw CorpusError(ErrorKind::SelfAntonym, "word is its own antonym: " + word, line_no);
      set.insert(a);
    }
  }
  dict.close();
  return dict;
}

AntonymDictionary load_antonym_dictionary(const std::filesystem::path& path) {
  return parse_antonym_dictionary(read_file(path));
}

void apply_setting(RunConfig& c, const std::string& key, const std::string& value) {
  if (key == "unit_time") {
    c.unit_time = parse_int(key, value);
  } else if (key == "delta_bound" || key == "B") {
    c.delta_bound = parse_int(key, value);
  } else if (key == "k_max") {
    c.k_max = parse_int(key, value);
  } else if (key == "gcd_only") {
    if (value == "true" || value == "1") c.gcd_only = true;
    else if (value == "false" || value == "0") c.gcd_only = false;
    else throw CorpusError(ErrorKind::InvalidValue, "invalid value for gcd_only: " + value);
  } else if (key == "sign_policy") {
    if (value == "nonneg") c.sign_policy = SignPolicy::NonNegative;
    else if (value == "nonpos") c.sign_policy = SignPolicy::NonPositive;
    else if (value == "per-requirement") c.sign_policy = SignPolicy::PerRequirement;
    else throw CorpusError(ErrorKind::InvalidValue, "invalid value for sign_policy: " + value);
  } else if (key.starts_with("sign.")) {
    c.requirement_signs[normalize_id(key.substr(5))] = parse_sign(key, value);
  } else {
    throw CorpusError(ErrorKind::InvalidValue, "unknown configuration key: " + key);
  }
}

void validate(const RunConfig& c) {
  if (c.unit_time < 1) throw CorpusError(ErrorKind::InvalidValue, "unit_time must be >= 1");
  if (c.delta_bound < 0) throw CorpusError(ErrorKind::InvalidValue, "delta_bound must be >= 0");
  if (c.k_max < 1) throw CorpusError(ErrorKind::InvalidValue, "k_max must be >= 1");
}

RunConfig parse_config(std::string_view content) {
  RunConfig c;
  int line_no = 0;
  for (const auto& raw : lines_of(content)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw CorpusError(ErrorKind::MalformedLine,
                        "line " + std::to_string(line_no) + ": expected key=value", line_no);
    apply_setting(c, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  validate(c);
  return c;
}

RunConfig load_config(const std::filesystem::path& path) { return parse_config(read_file(path)); }

}  // namespace speccc::corpus
