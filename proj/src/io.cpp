#include "countcheck/io.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace countcheck {

const char* to_string(ParseErrorCode code) {
  switch (code) {
    case ParseErrorCode::rank: return "E_RANK";
    case ParseErrorCode::letter: return "E_LETTER";
    case ParseErrorCode::coef: return "E_COEF";
    case ParseErrorCode::section: return "E_SECTION";
    case ParseErrorCode::syntax: return "E_SYNTAX";
  }
  return "E_SYNTAX";
}

ParseError::ParseError(ParseErrorCode code, int line, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": line " +
                         std::to_string(line) + ": " + detail),
      code_(code),
      line_(line) {}

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

bool is_signed_digits(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  return is_digits(s);
}

// Digits-only parse into uint64; false on overflow.
bool parse_u64(std::string_view s, std::uint64_t& out) {
  if (!is_digits(s)) return false;
  std::uint64_t v = 0;
  for (char c : s) {
    const std::uint64_t d = static_cast<std::uint64_t>(c - '0');
    if (v > (UINT64_MAX - d) / 10) return false;
    v = v * 10 + d;
  }
  out = v;
  return true;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

Term parse_term_line(const std::vector<std::string_view>& tokens, int line_no,
                     std::int32_t rank) {
  if (!is_signed_digits(tokens[0])) {
    throw ParseError(ParseErrorCode::coef, line_no,
                     "malformed coefficient '" + std::string(tokens[0]) + "'");
  }
  Term t;
  // cpp_int's string constructor takes '-' but not a leading '+'.
  std::string coef_text(tokens[0]);
  if (coef_text.front() == '+') coef_text.erase(0, 1);
  t.coef = BigInt(coef_text);
  if (tokens.size() < 2) {
    throw ParseError(ParseErrorCode::syntax, line_no, "missing word after coefficient");
  }
  if (tokens.size() == 2 && tokens[1] == "e") {
    return t;  // empty word
  }
  t.word.reserve(tokens.size() - 1);
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    if (!is_digits(tokens[i])) {
      throw ParseError(ParseErrorCode::syntax, line_no,
                       "bad word token '" + std::string(tokens[i]) + "'");
    }
    std::uint64_t v = 0;
    if (!parse_u64(tokens[i], v) || v < 1 || v > static_cast<std::uint64_t>(rank)) {
      throw ParseError(ParseErrorCode::letter, line_no,
                       "generator index '" + std::string(tokens[i]) +
                           "' outside [1, " + std::to_string(rank) + "]");
    }
    t.word.push_back(static_cast<Letter>(v));
  }
  return t;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  enum class State { need_rank, need_f, in_f, in_g };
  State state = State::need_rank;
  Instance inst;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = (nl == std::string_view::npos)
                                ? text.substr(pos)
                                : text.substr(pos, nl - pos);
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++line_no;

    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tokens = split_tokens(line);
    if (tokens.empty()) continue;

    switch (state) {
      case State::need_rank: {
        if (tokens[0] != "rank") {
          throw ParseError(ParseErrorCode::rank, line_no, "expected 'rank <r>' header");
        }
        if (tokens.size() != 2) {
          throw ParseError(ParseErrorCode::rank, line_no, "expected exactly one rank value");
        }
        std::uint64_t r = 0;
        if (!parse_u64(tokens[1], r) || r < 2 || r > INT32_MAX) {
          throw ParseError(ParseErrorCode::rank, line_no,
                           "rank must be an integer >= 2, got '" + std::string(tokens[1]) + "'");
        }
        inst.spec.rank = static_cast<std::int32_t>(r);
        inst.f.spec = inst.spec;
        inst.g.spec = inst.spec;
        state = State::need_f;
        break;
      }
      case State::need_f: {
        if (tokens.size() != 1 || tokens[0] != "[f]") {
          throw ParseError(ParseErrorCode::section, line_no, "expected [f] section header");
        }
        state = State::in_f;
        break;
      }
      case State::in_f: {
        if (tokens.size() == 1 && tokens[0] == "[g]") {
          state = State::in_g;
          break;
        }
        if (tokens[0] == "[f]") {
          throw ParseError(ParseErrorCode::syntax, line_no, "duplicate [f] section");
        }
        inst.f.terms.push_back(parse_term_line(tokens, line_no, inst.spec.rank));
        break;
      }
      case State::in_g: {
        if (tokens[0] == "[f]" || tokens[0] == "[g]") {
          throw ParseError(ParseErrorCode::syntax, line_no,
                           "unexpected section header after [g]");
        }
        inst.g.terms.push_back(parse_term_line(tokens, line_no, inst.spec.rank));
        break;
      }
    }
  }

  if (state == State::need_rank) {
    throw ParseError(ParseErrorCode::rank, line_no, "missing rank header");
  }
  if (state != State::in_g) {
    throw ParseError(ParseErrorCode::section, line_no,
                     state == State::need_f ? "missing [f] section" : "missing [g] section");
  }
  return inst;
}

namespace {

void write_function(std::ostream& os, const CountingFunction& fn) {
  for (const Term& t : fn.terms) {
    os << t.coef.str();
    if (t.word.empty()) {
      os << " e";
    } else {
      for (Letter s : t.word) os << ' ' << s;
    }
    os << '\n';
  }
}

}  // namespace

std::string serialize_instance(const Instance& inst) {
  std::ostringstream os;
  os << "rank " << inst.spec.rank << '\n';
  os << "[f]\n";
  write_function(os, inst.f);
  os << "[g]\n";
  write_function(os, inst.g);
  return os.str();
}

}  // namespace countcheck
