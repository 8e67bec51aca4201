#include <cctype>
#include <optional>

#include "umlogic/formula.hpp"

namespace umlogic {

ParseError::ParseError(std::string message, std::size_t line, std::size_t column, std::vector<std::string> expected)
    : std::runtime_error([&] {
        std::string text = std::to_string(line) + ":" + std::to_string(column) + ": " + message;
        if (!expected.empty()) {
          text += " (expected ";
          for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i) text += ", ";
            text += expected[i];
          }
          text += ")";
        }
        return text;
      }()),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

namespace {

enum class Tok { End, Ident, Not, And, Or, Implies, Iff, LBracket, RBracket, LAngle, RAngle, LParen, RParen, Grade };

const char* describe(Tok t) {
  switch (t) {
    case Tok::End: return "end of input";
    case Tok::Ident: return "identifier";
    case Tok::Not: return "'~'";
    case Tok::And: return "'&'";
    case Tok::Or: return "'|'";
    case Tok::Implies: return "'->'";
    case Tok::Iff: return "'<->'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::LAngle: return "'<'";
    case Tok::RAngle: return "'>'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Grade: return "grade";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : src_(text) { advance(); }

  Formula parse_all() {
    Formula f = parse_iff();
    if (cur_.kind != Tok::End) {
      std::vector<std::string> expected{"'&'", "'|'", "'->'", "'<->'", describe(Tok::End)};
      if (depth_ > 0) expected.push_back("')'");
      fail("unexpected " + std::string(describe(cur_.kind)), expected);
    }
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, std::vector<std::string> expected) const {
    throw ParseError(msg, cur_.line, cur_.column, std::move(expected));
  }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      if (src_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
  }

  void bump(std::size_t n) {
    pos_ += n;
    col_ += n;
  }

  // Grades are lexed only directly after '[' or '<'.
  void advance(bool grade_context = false) {
    skip_space();
    cur_ = Token{Tok::End, {}, line_, col_};
    if (pos_ >= src_.size()) return;
    char c = src_[pos_];
    auto rest = src_.substr(pos_);

    if (grade_context && (std::isdigit(static_cast<unsigned char>(c)) || c == '.')) {
      std::size_t n = 0;
      while (n < rest.size() && (std::isdigit(static_cast<unsigned char>(rest[n])) || rest[n] == '.' ||
                                 rest[n] == '/')) {
        ++n;
      }
      cur_.kind = Tok::Grade;
      cur_.text = std::string(rest.substr(0, n));
      bump(n);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t n = 0;
      while (n < rest.size() && (std::isalnum(static_cast<unsigned char>(rest[n])) || rest[n] == '_')) ++n;
      cur_.kind = Tok::Ident;
      cur_.text = std::string(rest.substr(0, n));
      bump(n);
      return;
    }
    if (rest.starts_with("<->")) {
      cur_.kind = Tok::Iff;
      bump(3);
      return;
    }
    if (rest.starts_with("->")) {
      cur_.kind = Tok::Implies;
      bump(2);
      return;
    }
    switch (c) {
      case '~': cur_.kind = Tok::Not; break;
      case '&': cur_.kind = Tok::And; break;
      case '|': cur_.kind = Tok::Or; break;
      case '[': cur_.kind = Tok::LBracket; break;
      case ']': cur_.kind = Tok::RBracket; break;
      case '<': cur_.kind = Tok::LAngle; break;
      case '>': cur_.kind = Tok::RAngle; break;
      case '(': cur_.kind = Tok::LParen; break;
      case ')': cur_.kind = Tok::RParen; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line_, col_, {});
    }
    bump(1);
  }

  void expect(Tok kind) {
    if (cur_.kind != kind) fail("unexpected " + std::string(describe(cur_.kind)), {describe(kind)});
    advance();
  }

  Formula parse_iff() {
    Formula lhs = parse_implies();
    if (cur_.kind == Tok::Iff) {
      advance();
      Formula rhs = parse_implies();
      if (cur_.kind == Tok::Iff) fail("'<->' is not associative; add parentheses", {});
      return Formula::biconditional(std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  Formula parse_implies() {
    Formula lhs = parse_or();
    if (cur_.kind == Tok::Implies) {
      advance();
      return Formula::implication(std::move(lhs), parse_implies());
    }
    return lhs;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (cur_.kind == Tok::Or) {
      advance();
      f = Formula::disjunction(std::move(f), parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (cur_.kind == Tok::And) {
      advance();
      f = Formula::conjunction(std::move(f), parse_unary());
    }
    return f;
  }

  Grade parse_grade(Tok close) {
    if (cur_.kind != Tok::Grade) fail("unexpected " + std::string(describe(cur_.kind)), {describe(Tok::Grade)});
    Grade g;
    try {
      g = Grade::parse(cur_.text);
    } catch (const GradeError& e) {
      fail(e.what(), {describe(Tok::Grade)});
    }
    if (!g.in_unit_interval()) fail("grade " + g.str() + " out of range [0,1]", {});
    advance();
    expect(close);
    return g;
  }

  Formula parse_unary() {
    switch (cur_.kind) {
      case Tok::Not:
        advance();
        return Formula::negation(parse_unary());
      case Tok::LBracket: {
        advance(true);
        Grade g = parse_grade(Tok::RBracket);
        return Formula::box(std::move(g), parse_unary());
      }
      case Tok::LAngle: {
        advance(true);
        Grade g = parse_grade(Tok::RAngle);
        return Formula::diamond(std::move(g), parse_unary());
      }
      case Tok::Ident: {
        Formula a = Formula::atom(cur_.text);
        advance();
        return a;
      }
      case Tok::LParen: {
        advance();
        ++depth_;
        Formula f = parse_iff();
        expect(Tok::RParen);
        --depth_;
        return f;
      }
      default:
        fail("unexpected " + std::string(describe(cur_.kind)),
             {describe(Tok::Ident), describe(Tok::Not), describe(Tok::LBracket), describe(Tok::LAngle),
              describe(Tok::LParen)});
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
  int depth_ = 0;
  Token cur_{};
};

}  // namespace

Formula parse(std::string_view text) { return Parser{text}.parse_all(); }

}  // namespace umlogic
