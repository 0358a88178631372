#include "sysnet/dsl.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace sysnet {

std::string to_string(const ParseError& error) {
  std::ostringstream os;
  os << error.line << ":" << error.column << ": " << error.message;
  if (!error.expected.empty()) os << " (expected " << error.expected << ")";
  return os.str();
}

namespace {

struct Token {
  enum class Kind { Ident, String, Punct, End };

  Kind kind = Kind::End;
  std::string text;  // identifier text, string contents, or the punct char
  int line = 1;
  int column = 1;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '-';
}

std::vector<Token> lex(const std::string& src, std::vector<ParseError>& errs) {
  std::vector<Token> tokens;
  int line = 1, col = 1;
  size_t i = 0;
  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n; ++k) {
      if (src[i + k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    i += n;
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token tok;
    tok.line = line;
    tok.column = col;
    if (ident_start(c)) {
      size_t n = 1;
      while (i + n < src.size() && ident_char(src[i + n])) ++n;
      tok.kind = Token::Kind::Ident;
      tok.text = src.substr(i, n);
      advance(n);
    } else if (c == '"') {
      size_t n = 1;
      while (i + n < src.size() && src[i + n] != '"' && src[i + n] != '\n')
        ++n;
      if (i + n >= src.size() || src[i + n] != '"') {
        errs.push_back({line, col, "unterminated string literal", ""});
        advance(n);
        continue;
      }
      tok.kind = Token::Kind::String;
      tok.text = src.substr(i + 1, n - 1);
      advance(n + 1);
    } else if (std::string("{}:&|!()*").find(c) != std::string::npos) {
      tok.kind = Token::Kind::Punct;
      tok.text = std::string(1, c);
      advance(1);
    } else {
      errs.push_back(
          {line, col, std::string("unexpected character '") + c + "'", ""});
      advance(1);
      continue;
    }
    tokens.push_back(tok);
  }
  Token end;
  end.kind = Token::Kind::End;
  end.line = line;
  end.column = std::max(1, col - 1);  // keep positions inside the source
  tokens.push_back(end);
  return tokens;
}

// Thrown to unwind to the top-level recovery loop after an error is logged.
struct Recover {};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens, std::vector<ParseError>& errors)
      : tokens_(std::move(tokens)), errors_(errors) {}

  SystemNetwork parse() {
    SystemNetwork net;
    bool saw_header = false;
    while (peek().kind != Token::Kind::End) {
      try {
        const Token& tok = peek();
        if (tok.kind != Token::Kind::Ident)
          fail(tok, "expected a top-level block", "'network', 'system' or "
                    "'gate'");
        if (tok.text == "network") {
          if (saw_header) {
            next();  // consume so recovery continues past this token
            fail(tok, "duplicate network header", "");
          }
          saw_header = true;
          parse_header(net);
        } else if (tok.text == "system") {
          net.units.push_back(parse_unit(UnitKind::System));
        } else if (tok.text == "gate") {
          net.units.push_back(parse_unit(UnitKind::Gate));
        } else {
          fail(tok, "unknown block keyword '" + tok.text + "'",
               "'network', 'system' or 'gate'");
        }
      } catch (const Recover&) {
        skip_to_top_level();
      }
    }
    explicit_header_ = saw_header;
    return net;
  }

  bool explicit_header() const { return explicit_header_; }
  int line_of_unit(const std::string& name) const {
    auto it = unit_lines_.find(name);
    return it == unit_lines_.end() ? 1 : it->second;
  }

 private:
  const Token& peek(size_t ahead = 0) const {
    size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[i];
  }

  const Token& next() {
    const Token& tok = tokens_[pos_];
    if (tokens_[pos_].kind != Token::Kind::End) ++pos_;
    if (tok.kind == Token::Kind::Punct) {
      if (tok.text == "{") ++depth_;
      if (tok.text == "}" && depth_ > 0) --depth_;
    }
    return tok;
  }

  [[noreturn]] void fail(const Token& at, std::string message,
                         std::string expected) {
    errors_.push_back({at.line, at.column, std::move(message),
                       std::move(expected)});
    throw Recover{};
  }

  void skip_to_top_level() {
    while (peek().kind != Token::Kind::End) {
      const Token& tok = peek();
      if (depth_ == 0 && tok.kind == Token::Kind::Ident &&
          (tok.text == "network" || tok.text == "system" ||
           tok.text == "gate"))
        return;
      next();
    }
  }

  std::string expect_ident(const char* what) {
    const Token& tok = peek();
    if (tok.kind != Token::Kind::Ident)
      fail(tok, std::string("expected ") + what, "identifier");
    return next().text;
  }

  void expect_punct(char c) {
    const Token& tok = peek();
    if (tok.kind != Token::Kind::Punct || tok.text[0] != c)
      fail(tok, "unexpected token", std::string("'") + c + "'");
    next();
  }

  bool at_punct(char c) const {
    return peek().kind == Token::Kind::Punct && peek().text[0] == c;
  }

  bool at_ident(const char* text) const {
    return peek().kind == Token::Kind::Ident && peek().text == text;
  }

  void parse_header(SystemNetwork& net) {
    next();  // 'network'
    if (peek().kind == Token::Kind::Ident) net.name = next().text;
    expect_punct('{');
    while (!at_punct('}')) {
      if (at_ident("inputs")) {
        next();
        expect_punct(':');
        while (peek().kind == Token::Kind::Ident && !at_ident("inputs"))
          net.inputs.push_back(next().text);
      } else {
        fail(peek(), "unexpected token in network header", "'inputs:' or '}'");
      }
    }
    expect_punct('}');
  }

  ChoicePoint parse_unit(UnitKind kind) {
    const Token& kw = next();  // 'system' or 'gate'
    ChoicePoint unit;
    unit.kind = kind;
    unit.name = expect_ident(kind == UnitKind::Gate ? "gate name"
                                                    : "system name");
    unit_lines_[unit.name] = kw.line;
    expect_punct('{');
    bool saw_entry = false;
    const char* member = kind == UnitKind::Gate ? "feature" : "choice";
    while (!at_punct('}')) {
      if (at_ident("entry")) {
        const Token& tok = peek();
        if (saw_entry) fail(tok, "duplicate entry condition", "");
        saw_entry = true;
        next();
        expect_punct(':');
        unit.entry = parse_expr();
      } else if (at_ident(member)) {
        next();
        Choice choice;
        choice.feature = expect_ident("feature name");
        expect_punct('{');
        while (!at_punct('}')) choice.statements.push_back(parse_statement());
        expect_punct('}');
        unit.choices.push_back(std::move(choice));
      } else {
        fail(peek(), "unexpected token in " +
                         std::string(kind == UnitKind::Gate ? "gate" : "system")
                         + " body",
             std::string("'entry:', '") + member + "' or '}'");
      }
    }
    expect_punct('}');
    return unit;
  }

  EntryCondition parse_expr() { return parse_or(); }

  EntryCondition parse_or() {
    std::vector<EntryCondition> args{parse_and()};
    while (at_punct('|')) {
      next();
      args.push_back(parse_and());
    }
    return EntryCondition::disjunction(std::move(args));
  }

  EntryCondition parse_and() {
    std::vector<EntryCondition> args{parse_unary()};
    while (at_punct('&')) {
      next();
      args.push_back(parse_unary());
    }
    return EntryCondition::conjunction(std::move(args));
  }

  EntryCondition parse_unary() {
    if (at_punct('!')) {
      next();
      return EntryCondition::negation(parse_unary());
    }
    if (at_punct('(')) {
      next();
      EntryCondition inner = parse_expr();
      expect_punct(')');
      return inner;
    }
    if (at_punct('*')) {
      next();
      return EntryCondition::truth();
    }
    if (peek().kind == Token::Kind::Ident)
      return EntryCondition::ref(next().text);
    fail(peek(), "malformed entry condition",
         "feature name, '!', '(' or '*'");
  }

  RealizationStatement parse_statement() {
    const Token& tok = peek();
    if (tok.kind != Token::Kind::Ident)
      fail(tok, "expected a realization statement",
           "'insert', 'order', 'mark', 'combine' or 'demote'");
    std::string kw = next().text;
    if (kw == "insert") return insert_stmt(Role{expect_ident("role")});
    if (kw == "order") {
      Role first{expect_ident("role")};
      if (!at_ident("before"))
        fail(peek(), "malformed order statement", "'before'");
      next();
      return order_stmt(std::move(first), Role{expect_ident("role")});
    }
    if (kw == "mark") {
      std::string attr = expect_ident("'linker' or 'form'");
      if (attr == "linker") {
        Role role{expect_ident("role")};
        const Token& val = peek();
        if (val.kind != Token::Kind::String)
          fail(val, "linker value must be a quoted token", "string");
        std::string token = next().text;
        if (!linker_from_token(token))
          fail(val, "'" + token + "' is not in the linker vocabulary", "");
        return mark_linker_stmt(std::move(role), std::move(token));
      }
      if (attr == "form") {
        Role role{expect_ident("role")};
        const Token& val = peek();
        std::string token = expect_ident("form name");
        if (!form_from_token(token))
          fail(val, "'" + token + "' is not in the form vocabulary", "");
        return mark_form_stmt(std::move(role), std::move(token));
      }
      fail(peek(), "unknown mark attribute '" + attr + "'",
           "'linker' or 'form'");
    }
    if (kw == "combine") {
      Role a{expect_ident("role")};
      Role b{expect_ident("role")};
      const Token& val = peek();
      std::string token = expect_ident("boundary");
      auto boundary = boundary_from_token(token);
      if (!boundary)
        fail(val, "'" + token + "' is not a boundary",
             "'same-sentence' or 'separate-sentence'");
      return combine_stmt(std::move(a), std::move(b), *boundary);
    }
    if (kw == "demote") return demote_stmt(Role{expect_ident("role")});
    fail(tok, "unknown statement keyword '" + kw + "'",
         "'insert', 'order', 'mark', 'combine' or 'demote'");
  }

  std::vector<Token> tokens_;
  std::vector<ParseError>& errors_;
  size_t pos_ = 0;
  int depth_ = 0;
  bool explicit_header_ = false;
  std::map<std::string, int> unit_lines_;
};

}  // namespace

ParseResult parse_network(const std::string& source) {
  ParseResult result;
  std::vector<Token> tokens = lex(source, result.errors);
  if (!result.errors.empty()) return result;

  Parser parser(std::move(tokens), result.errors);
  SystemNetwork net = parser.parse();
  if (!result.errors.empty()) return result;

  if (!parser.explicit_header()) {
    // Fragment mode: free entry references become implicit inputs.
    std::set<std::string> known(net.inputs.begin(), net.inputs.end());
    for (const auto& unit : net.units)
      for (const auto& choice : unit.choices) known.insert(choice.feature);
    for (const auto& unit : net.units) {
      std::vector<std::string> refs;
      collect_refs(unit.entry, refs);
      for (const auto& ref : refs)
        if (known.insert(ref).second) net.inputs.push_back(ref);
    }
  }

  ValidationReport report = validate_network(net);
  for (const auto& issue : report.errors())
    result.errors.push_back({parser.line_of_unit(issue.unit), 1,
                             issue.code + ": " + issue.message, ""});
  if (!result.errors.empty()) return result;

  result.network = std::move(net);
  return result;
}

namespace {

void serialize_unit(const ChoicePoint& unit, std::ostringstream& os) {
  const char* block = unit.kind == UnitKind::Gate ? "gate" : "system";
  const char* member = unit.kind == UnitKind::Gate ? "feature" : "choice";
  os << block << " " << unit.name << " {\n";
  os << "  entry: " << to_string(unit.entry) << "\n";
  for (const auto& choice : unit.choices) {
    os << "  " << member << " " << choice.feature << " {\n";
    for (const auto& stmt : choice.statements)
      os << "    " << to_string(stmt) << "\n";
    os << "  }\n";
  }
  os << "}\n";
}

}  // namespace

std::string serialize_network(const SystemNetwork& net) {
  std::ostringstream os;
  bool wrote = false;
  if (!net.name.empty() || !net.inputs.empty()) {
    os << "network";
    if (!net.name.empty()) os << " " << net.name;
    os << " {\n";
    if (!net.inputs.empty()) {
      os << "  inputs:";
      for (const auto& input : net.inputs) os << " " << input;
      os << "\n";
    }
    os << "}\n";
    wrote = true;
  }
  for (const auto& unit : net.units) {
    if (wrote) os << "\n";
    serialize_unit(unit, os);
    wrote = true;
  }
  return os.str();
}

}  // namespace sysnet
