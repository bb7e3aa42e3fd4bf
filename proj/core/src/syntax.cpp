#include "ndlogic/syntax.hpp"

#include <cctype>

#include "ndlogic/error.hpp"

namespace ndlogic {

namespace {

bool ident_start(char c) {
  auto u = static_cast<unsigned char>(c);
  return std::isalpha(u) || u == '_';
}
bool ident_char(char c) {
  auto u = static_cast<unsigned char>(c);
  return std::isalnum(u) || u == '_';
}
bool operator_char(char c) {
  auto u = static_cast<unsigned char>(c);
  return std::isgraph(u) && !ident_char(c) && c != '(' && c != ')' && c != ',';
}

class Parser {
 public:
  Parser(std::string_view text, const Signature& sig) : text_(text), sig_(sig) {}

  Formula parse() {
    Formula f = formula();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return f;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  std::string identifier() {
    skip_ws();
    if (pos_ >= text_.size() || !ident_start(text_[pos_])) throw ParseError("expected identifier", pos_);
    std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Formula formula() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    if (text_[pos_] == '(') return infix();
    std::size_t at = pos_;
    std::string name = identifier();
    if (!peek('(')) {
      if (sig_.contains(name) && sig_.arity(name) != 0) {
        throw ArityError("connective '" + name + "' expects " + std::to_string(sig_.arity(name)) +
                         " argument(s), got 0 at position " + std::to_string(at));
      }
      return sig_.contains(name) ? Formula::apply(name, {}) : Formula::var(name);
    }
    if (!sig_.contains(name)) throw ParseError("unknown connective '" + name + "'", at);
    ++pos_;  // '('
    std::vector<Formula> args;
    if (!peek(')')) {
      args.push_back(formula());
      while (peek(',')) {
        ++pos_;
        args.push_back(formula());
      }
    }
    expect(')');
    if (static_cast<int>(args.size()) != sig_.arity(name)) {
      throw ArityError("connective '" + name + "' expects " + std::to_string(sig_.arity(name)) +
                       " argument(s), got " + std::to_string(args.size()) + " at position " +
                       std::to_string(at));
    }
    return Formula::apply(name, std::move(args));
  }

  Formula infix() {
    ++pos_;  // '('
    Formula lhs = formula();
    skip_ws();
    std::size_t at = pos_;
    while (pos_ < text_.size() && operator_char(text_[pos_])) ++pos_;
    std::string_view token = text_.substr(at, pos_ - at);
    if (token.empty()) throw ParseError("expected infix operator", at);
    std::string name = sig_.connective_for_infix(token);
    if (name.empty()) throw ParseError("unknown token '" + std::string(token) + "'", at);
    Formula rhs = formula();
    expect(')');
    return Formula::apply(name, {lhs, rhs});
  }

  std::string_view text_;
  const Signature& sig_;
  std::size_t pos_ = 0;
};

void render(const Formula& f, const Signature* sig, std::string& out) {
  if (f.is_var()) {
    out += f.symbol();
    return;
  }
  if (sig != nullptr && f.args().size() == 2) {
    auto it = sig->notation().find(f.symbol());
    if (it != sig->notation().end()) {
      out += '(';
      render(f.args()[0], sig, out);
      out += ' ';
      out += it->second;
      out += ' ';
      render(f.args()[1], sig, out);
      out += ')';
      return;
    }
  }
  out += f.symbol();
  if (f.args().empty()) return;
  out += '(';
  for (std::size_t i = 0; i < f.args().size(); ++i) {
    if (i > 0) out += ',';
    render(f.args()[i], sig, out);
  }
  out += ')';
}

}  // namespace

Formula parse_formula(std::string_view text, const Signature& sig) { return Parser(text, sig).parse(); }

std::string to_string(const Formula& f) {
  std::string out;
  render(f, nullptr, out);
  return out;
}

std::string to_string(const Formula& f, const Signature& sig) {
  std::string out;
  render(f, &sig, out);
  return out;
}

std::string to_string(const FormulaSet& fs) {
  std::string out = "{";
  bool first = true;
  for (const auto& f : fs) {
    if (!first) out += ", ";
    first = false;
    out += to_string(f);
  }
  out += '}';
  return out;
}

}  // namespace ndlogic
