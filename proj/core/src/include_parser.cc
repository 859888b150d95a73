#include <cctype>
#include <string>
#include <string_view>

#include "sydra/include_extractor.h"
#include "sydra/path_util.h"

namespace sydra {
namespace {

bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool IsBlank(char c) { return c == ' ' || c == '\t' || c == '\f' || c == '\v'; }

// Line-oriented lexer that only understands enough C/C++ to know where
// comments and string literals are. Everything else is skipped.
class IncludeLexer {
 public:
  ParseResult Run(std::string_view content) {
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= content.size()) {
      auto end = content.find('\n', start);
      if (end == std::string_view::npos) end = content.size();
      std::string_view line = content.substr(start, end - start);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      ++line_no;
      ScanLine(line, line_no);
      if (end == content.size()) break;
      start = end + 1;
    }
    return std::move(result_);
  }

 private:
  enum class State { kCode, kBlockComment, kLineComment, kRawString };

  void ScanLine(std::string_view line, std::size_t line_no) {
    std::size_t pos = 0;
    switch (state_) {
      case State::kLineComment:
        // A backslash-continued // comment swallows this line too.
        if (!line.ends_with('\\')) state_ = State::kCode;
        return;
      case State::kBlockComment: {
        const auto close = line.find("*/");
        if (close == std::string_view::npos) return;
        pos = close + 2;
        state_ = State::kCode;
        break;
      }
      case State::kRawString: {
        const std::string terminator = ")" + raw_delimiter_ + "\"";
        const auto close = line.find(terminator);
        if (close == std::string_view::npos) return;
        pos = close + terminator.size();
        state_ = State::kCode;
        // A directive cannot follow the tail of a raw string.
        ScanCode(line, pos);
        return;
      }
      case State::kCode:
        break;
    }

    // Only comments and whitespace may precede the '#'.
    while (pos < line.size()) {
      if (IsBlank(line[pos])) {
        ++pos;
      } else if (line.substr(pos, 2) == "/*") {
        const auto close = line.find("*/", pos + 2);
        if (close == std::string_view::npos) {
          state_ = State::kBlockComment;
          return;
        }
        pos = close + 2;
      } else {
        break;
      }
    }
    if (pos < line.size() && line[pos] == '#') {
      pos = ParseDirective(line, pos + 1, line_no);
    }
    ScanCode(line, pos);
  }

  // Returns the position just after the directive (or after '#' when the
  // directive is not an include).
  std::size_t ParseDirective(std::string_view line, std::size_t pos,
                             std::size_t line_no) {
    while (pos < line.size() && IsBlank(line[pos])) ++pos;
    const std::size_t word_start = pos;
    while (pos < line.size() && IsIdentChar(line[pos])) ++pos;
    if (line.substr(word_start, pos - word_start) != "include") {
      return word_start;
    }
    while (pos < line.size() && IsBlank(line[pos])) ++pos;
    if (pos >= line.size() || line.substr(pos, 2) == "//" ||
        line.substr(pos, 2) == "/*") {
      AddIssue(line_no, "missing-include-path", "#include without a path");
      return pos;
    }
    const char open = line[pos];
    if (open != '"' && open != '<') {
      const std::size_t macro_start = pos;
      while (pos < line.size() && !IsBlank(line[pos]) &&
             line.substr(pos, 2) != "//" && line.substr(pos, 2) != "/*") {
        ++pos;
      }
      AddIssue(line_no, "computed-include",
               "#include " + SanitizeUtf8(line.substr(macro_start,
                                                      pos - macro_start)) +
                   " is not resolvable without preprocessing");
      return pos;
    }
    const char close = open == '"' ? '"' : '>';
    const auto end = line.find(close, pos + 1);
    if (end == std::string_view::npos) {
      AddIssue(line_no, "unterminated-include",
               std::string("missing closing ") + close);
      return line.size();
    }
    std::string_view spelled = line.substr(pos + 1, end - pos - 1);
    if (spelled.empty()) {
      AddIssue(line_no, "empty-include", "empty include path");
      return end + 1;
    }
    result_.directives.push_back(IncludeDirective{
        SanitizeUtf8(spelled),
        open == '"' ? IncludeStyle::kQuoted : IncludeStyle::kAngled, line_no});
    return end + 1;
  }

  // Skips ordinary code, tracking comment and literal state.
  void ScanCode(std::string_view line, std::size_t pos) {
    while (pos < line.size()) {
      const char c = line[pos];
      if (c == '/' && pos + 1 < line.size()) {
        if (line[pos + 1] == '/') {
          if (line.ends_with('\\')) state_ = State::kLineComment;
          return;
        }
        if (line[pos + 1] == '*') {
          const auto close = line.find("*/", pos + 2);
          if (close == std::string_view::npos) {
            state_ = State::kBlockComment;
            return;
          }
          pos = close + 2;
          continue;
        }
      }
      if (c == '"') {
        if (IsRawStringPrefix(line, pos)) {
          const auto paren = line.find('(', pos + 1);
          if (paren == std::string_view::npos) return;
          raw_delimiter_ = std::string(line.substr(pos + 1, paren - pos - 1));
          const std::string terminator = ")" + raw_delimiter_ + "\"";
          const auto close = line.find(terminator, paren + 1);
          if (close == std::string_view::npos) {
            state_ = State::kRawString;
            return;
          }
          pos = close + terminator.size();
          continue;
        }
        pos = SkipQuoted(line, pos, '"');
        continue;
      }
      if (c == '\'') {
        // Digit separators (1'000) are not character literals.
        if (pos > 0 && std::isalnum(static_cast<unsigned char>(line[pos - 1]))) {
          ++pos;
          continue;
        }
        pos = SkipQuoted(line, pos, '\'');
        continue;
      }
      ++pos;
    }
  }

  static bool IsRawStringPrefix(std::string_view line, std::size_t quote) {
    if (quote == 0 || line[quote - 1] != 'R') return false;
    std::size_t p = quote - 1;
    // Optional encoding prefix: L, u, U, u8.
    if (p >= 2 && line.substr(p - 2, 2) == "u8") {
      p -= 2;
    } else if (p >= 1 &&
               (line[p - 1] == 'L' || line[p - 1] == 'u' || line[p - 1] == 'U')) {
      p -= 1;
    }
    return p == 0 || !IsIdentChar(line[p - 1]);
  }

  static std::size_t SkipQuoted(std::string_view line, std::size_t pos,
                                char quote) {
    ++pos;
    while (pos < line.size()) {
      if (line[pos] == '\\') {
        pos += 2;
        continue;
      }
      if (line[pos] == quote) return pos + 1;
      ++pos;
    }
    return line.size();
  }

  void AddIssue(std::size_t line, std::string code, std::string message) {
    result_.issues.push_back(
        ParseIssue{line, std::move(code), std::move(message)});
  }

  State state_ = State::kCode;
  std::string raw_delimiter_;
  ParseResult result_;
};

}  // namespace

ParseResult ParseIncludes(std::string_view content) {
  return IncludeLexer().Run(content);
}

}  // namespace sydra
