#include "sydra/subsystem_mapper.h"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <set>

#include "sydra/error.h"
#include "sydra/path_util.h"

namespace sydra {
namespace {

// Keep in sync with rules/default_keywords.txt (checked by a unit test).
constexpr std::string_view kDefaultKeywords = R"(# Default keyword table for `sydra map --suggest`.
# Format: keyword SUBSYSTEM_ID. Matching is a case-insensitive substring test
# on a directory's own name; the longest hit wins.
audio AUD
sound AUD
render LLR
shader LLR
camera LLR
physics PHY
collision PHY
editor EDI
net OMP
multiplayer OMP
anim SKA
skeleton SKA
particle VFX
input HID
joystick HID
platform PLA
os PLA
resource RES
asset RES
loader RES
thirdparty SDK
extern SDK
gui FES
menu FES
hud FES
scene SGC
cull SGC
octree SGC
script GMP
gameobject GMP
profil DEB
debug DEB
log DEB
)";

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

// Calls fn(line_no, first_token, rest) for every record line.
template <typename Fn>
void ForEachRecord(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    const std::string_view line = Trim(text.substr(start, end - start));
    if (!line.empty() && line.front() != '#') {
      auto split = line.find_first_of(" \t");
      const std::string_view first = line.substr(0, split);
      const std::string_view rest =
          split == std::string_view::npos ? std::string_view{}
                                          : Trim(line.substr(split));
      fn(line_no, first, rest);
    }
    if (end == text.size()) break;
    start = end + 1;
  }
}

std::string LineRef(std::size_t line_no) {
  return "line " + std::to_string(line_no);
}

}  // namespace

void RuleSet::Append(SubsystemId subsystem, std::string pattern) {
  if (pattern.empty()) {
    throw Error(Stage::kRules, "rule", "empty glob pattern");
  }
  if (subsystem == SubsystemId::kUNK) {
    throw Error(Stage::kRules, pattern, "UNK cannot be a rule target");
  }
  Glob glob(pattern);
  rules_.push_back(MappingRule{subsystem, std::move(pattern), rules_.size(),
                               glob.literal_prefix_len()});
  globs_.push_back(std::move(glob));
}

SubsystemId RuleSet::Map(std::string_view path) const {
  const MappingRule* best = nullptr;
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const MappingRule& rule = rules_[i];
    // Ties go to the later rule.
    if (best != nullptr && rule.literal_prefix_len < best->literal_prefix_len) {
      continue;
    }
    if (globs_[i].Matches(path)) best = &rule;
  }
  return best == nullptr ? SubsystemId::kUNK : best->subsystem;
}

RuleSet ParseRules(std::string_view text) {
  struct Record {
    std::size_t line;
    SubsystemId id;
    std::string pattern;
  };
  std::vector<Record> records;
  std::vector<RuleWarning> warnings;

  ForEachRecord(text, [&](std::size_t line_no, std::string_view id_text,
                          std::string_view pattern) {
    const auto id = ParseSubsystemId(id_text);
    if (!id) {
      throw Error(Stage::kRules, LineRef(line_no),
                  "unknown subsystem id '" + std::string(id_text) + "'");
    }
    if (*id == SubsystemId::kUNK) {
      throw Error(Stage::kRules, LineRef(line_no),
                  "UNK cannot be a rule target");
    }
    if (pattern.empty()) {
      throw Error(Stage::kRules, LineRef(line_no), "missing glob pattern");
    }
    auto dup = std::find_if(records.begin(), records.end(), [&](const Record& r) {
      return r.id == *id && r.pattern == pattern;
    });
    if (dup != records.end()) {
      warnings.push_back(RuleWarning{
          line_no, "duplicate rule '" + std::string(id_text) + " " +
                       std::string(pattern) + "' (first seen on line " +
                       std::to_string(dup->line) + "); keeping this one"});
      records.erase(dup);
    }
    records.push_back(Record{line_no, *id, std::string(pattern)});
  });

  RuleSet set;
  for (auto& r : records) set.Append(r.id, std::move(r.pattern));
  set.source_digest_ = ContentDigest(text);
  set.warnings_ = std::move(warnings);
  return set;
}

SubsystemId MapPath(std::string_view path, const RuleSet& rules) {
  return rules.Map(path);
}

std::vector<SubsystemId> MapFiles(std::span<const SourceFile> files,
                                  const RuleSet& rules) {
  std::vector<SubsystemId> tags(files.size(), SubsystemId::kUNK);
  for (const SourceFile& f : files) {
    if (f.id >= tags.size()) {
      throw Error(Stage::kMap, f.path, "file id out of range");
    }
    tags[f.id] = rules.Map(f.path);
  }
  return tags;
}

std::string FormatRules(std::span<const MappingRule> rules) {
  std::string out;
  for (const MappingRule& r : rules) {
    out += Code(r.subsystem);
    out += ' ';
    out += r.pattern;
    out += '\n';
  }
  return out;
}

std::string ContentDigest(std::string_view text) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(text.data(), text.size(), digest.data(), &length,
                 EVP_sha256(), nullptr) != 1) {
    throw Error(Stage::kRules, "digest", "SHA-256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out = "sha256:";
  for (unsigned int i = 0; i < length; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xF];
  }
  return out;
}

KeywordTable ParseKeywordTable(std::string_view text) {
  KeywordTable table;
  ForEachRecord(text, [&](std::size_t line_no, std::string_view keyword,
                          std::string_view id_text) {
    const auto id = ParseSubsystemId(id_text);
    if (!id || *id == SubsystemId::kUNK) {
      throw Error(Stage::kRules, "keyword table " + LineRef(line_no),
                  "invalid subsystem id '" + std::string(id_text) + "'");
    }
    table.push_back(KeywordEntry{AsciiLower(keyword), *id});
  });
  return table;
}

std::string_view DefaultKeywordTableText() { return kDefaultKeywords; }

const KeywordTable& DefaultKeywordTable() {
  static const KeywordTable table = ParseKeywordTable(kDefaultKeywords);
  return table;
}

std::vector<MappingRule> SuggestRules(std::span<const SourceFile> files,
                                      const KeywordTable& keywords) {
  std::set<std::string_view> dirs;
  for (const SourceFile& f : files) {
    for (std::string_view d = DirName(f.path); !d.empty(); d = DirName(d)) {
      if (!dirs.insert(d).second) break;
    }
  }
  std::vector<MappingRule> out;
  for (std::string_view dir : dirs) {
    const std::string name = AsciiLower(BaseName(dir));
    const KeywordEntry* best = nullptr;
    for (const KeywordEntry& k : keywords) {
      if (k.keyword.empty() || k.subsystem == SubsystemId::kUNK) continue;
      if (name.find(k.keyword) == std::string::npos) continue;
      if (best == nullptr || k.keyword.size() > best->keyword.size()) best = &k;
    }
    if (best == nullptr) continue;
    std::string pattern = std::string(dir) + "/**";
    const std::size_t prefix = pattern.size() - 2;
    out.push_back(
        MappingRule{best->subsystem, std::move(pattern), out.size(), prefix});
  }
  return out;
}

MappingCoverage ComputeCoverage(std::span<const SourceFile> files,
                                std::span<const SubsystemId> tags) {
  if (tags.size() != files.size()) {
    throw Error(Stage::kMap, "coverage", "tag count does not match file count");
  }
  MappingCoverage c;
  c.total = files.size();
  for (const SourceFile& f : files) {
    const SubsystemId tag = tags[f.id];
    if (tag == SubsystemId::kUNK) {
      c.unmapped_paths.push_back(f.path);
    } else {
      ++c.mapped;
      ++c.per_subsystem[tag];
    }
  }
  std::sort(c.unmapped_paths.begin(), c.unmapped_paths.end());
  return c;
}

MappingCoverage ComputeCoverage(std::span<const SourceFile> files,
                                const RuleSet& rules) {
  const std::vector<SubsystemId> tags = MapFiles(files, rules);
  return ComputeCoverage(files, tags);
}

}  // namespace sydra
