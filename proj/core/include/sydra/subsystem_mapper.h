#ifndef SYDRA_SUBSYSTEM_MAPPER_H_
#define SYDRA_SUBSYSTEM_MAPPER_H_

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sydra/glob.h"
#include "sydra/include_extractor.h"
#include "sydra/taxonomy.h"

namespace sydra {

struct MappingRule {
  SubsystemId subsystem = SubsystemId::kUNK;
  std::string pattern;
  std::size_t ordinal = 0;
  std::size_t literal_prefix_len = 0;

  friend bool operator==(const MappingRule&, const MappingRule&) = default;
};

struct RuleWarning {
  std::size_t line = 0;
  std::string message;
};

// Ordered path-to-subsystem rules. Among all rules whose glob matches a path
// the one with the longest literal prefix wins; equal prefixes go to the
// later rule. No match means UNK.
class RuleSet {
 public:
  RuleSet() = default;

  // Throws Error(kRules) for an empty pattern or an UNK target.
  void Append(SubsystemId subsystem, std::string pattern);

  SubsystemId Map(std::string_view path) const;

  std::span<const MappingRule> rules() const { return rules_; }
  const std::string& source_digest() const { return source_digest_; }
  std::span<const RuleWarning> warnings() const { return warnings_; }
  bool empty() const { return rules_.empty(); }

 private:
  friend RuleSet ParseRules(std::string_view text);

  std::vector<MappingRule> rules_;
  std::vector<Glob> globs_;
  std::string source_digest_;
  std::vector<RuleWarning> warnings_;
};

// Line format: `SUBSYSTEM_ID <whitespace> GLOB`; blank lines and lines
// starting with '#' are skipped. Unknown ids are fatal (Error(kRules) naming
// the line). A repeated identical (id, pattern) record keeps only the later
// occurrence and adds a warning.
RuleSet ParseRules(std::string_view text);

SubsystemId MapPath(std::string_view path, const RuleSet& rules);

// Tag per file, indexed by FileId.
std::vector<SubsystemId> MapFiles(std::span<const SourceFile> files,
                                  const RuleSet& rules);

// Renders rules back into the rules-file format.
std::string FormatRules(std::span<const MappingRule> rules);

// SHA-256 of `text`, as "sha256:<hex>".
std::string ContentDigest(std::string_view text);

// ---------------------------------------------------------------------------
// Rule suggestions

struct KeywordEntry {
  std::string keyword;  // lower case
  SubsystemId subsystem = SubsystemId::kUNK;
};

using KeywordTable = std::vector<KeywordEntry>;

// Line format: `keyword ID`, '#' comments. UNK targets are rejected.
KeywordTable ParseKeywordTable(std::string_view text);

std::string_view DefaultKeywordTableText();
const KeywordTable& DefaultKeywordTable();

// One suggestion per directory whose own name contains a keyword
// (case-insensitive). When several keywords hit, the longest one wins and
// equal lengths go to the earlier table entry. Suggestions are advisory and
// ordered by directory path.
std::vector<MappingRule> SuggestRules(std::span<const SourceFile> files,
                                      const KeywordTable& keywords);

// ---------------------------------------------------------------------------
// Coverage

struct MappingCoverage {
  std::size_t total = 0;
  std::size_t mapped = 0;
  std::map<SubsystemId, std::size_t> per_subsystem;  // non-zero, non-UNK
  std::vector<std::string> unmapped_paths;

  // Number of reference subsystems with at least one file.
  std::size_t detected() const { return per_subsystem.size(); }
};

MappingCoverage ComputeCoverage(std::span<const SourceFile> files,
                                std::span<const SubsystemId> tags);
MappingCoverage ComputeCoverage(std::span<const SourceFile> files,
                                const RuleSet& rules);

}  // namespace sydra

#endif  // SYDRA_SUBSYSTEM_MAPPER_H_
