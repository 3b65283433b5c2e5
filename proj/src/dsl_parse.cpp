#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

#include "skeinlab/dsl.hpp"

namespace skeinlab {

std::string_view to_string(DiagnosticClass c) {
  switch (c) {
    case DiagnosticClass::SyntaxError: return "syntax-error";
    case DiagnosticClass::UnknownKind: return "unknown-kind";
    case DiagnosticClass::UnknownBox: return "unknown-box";
    case DiagnosticClass::DuplicateBox: return "duplicate-box";
    case DiagnosticClass::ArityMismatch: return "arity-mismatch";
    case DiagnosticClass::DanglingPort: return "dangling-port";
    case DiagnosticClass::DuplicateWire: return "duplicate-wire";
  }
  return "?";
}

ParseError::ParseError(DiagnosticClass kind, std::size_t line, std::size_t column, const std::string& message)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      line_(line),
      column_(column),
      detail_(message) {}

namespace {

struct Token {
  enum class Type { Ident, Int, Punct, End };
  Type type = Type::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> tokens;
  std::size_t line = 1, column = 1, i = 0;
  auto advance = [&] {
    if (src[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
    ++i;
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance();
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
      continue;
    }
    Token tok;
    tok.line = line;
    tok.column = column;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      tok.type = Token::Type::Ident;
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
        tok.text += src[i];
        advance();
      }
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      tok.type = Token::Type::Int;
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
        tok.text += src[i];
        advance();
      }
    } else if (c == '=' || c == ';' || c == '.' || c == ':' || c == '*') {
      tok.type = Token::Type::Punct;
      tok.text = std::string(1, c);
      advance();
    } else {
      throw ParseError(DiagnosticClass::SyntaxError, line, column, std::string("unexpected character '") + c + "'");
    }
    tokens.push_back(std::move(tok));
  }
  Token end;
  end.line = line;
  end.column = column;
  tokens.push_back(end);
  return tokens;
}

struct PortRef {
  std::size_t box = 0;
  std::optional<std::size_t> leg;  // nullopt for `.*`
  std::size_t line = 0;
  std::size_t column = 0;
};

class Parser {
 public:
  Parser(std::string_view src, const ParseOptions& options) : tokens_(tokenize(src)), options_(options) {}

  DiagramIR parse() {
    while (peek().type != Token::Type::End) statement();
    finish();
    return std::move(ir_);
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  [[noreturn]] void fail(DiagnosticClass c, const Token& at, const std::string& msg) const {
    throw ParseError(c, at.line, at.column, msg);
  }

  static std::string describe(const Token& t) {
    return t.type == Token::Type::End ? std::string("end of input") : "'" + t.text + "'";
  }

  const Token& expect_punct(char c) {
    const Token& t = peek();
    if (t.type != Token::Type::Punct || t.text[0] != c) {
      fail(DiagnosticClass::SyntaxError, t, std::string("expected '") + c + "' but found " + describe(t));
    }
    return next();
  }

  const Token& expect_ident(const char* what) {
    const Token& t = peek();
    if (t.type != Token::Type::Ident) fail(DiagnosticClass::SyntaxError, t, std::string("expected ") + what + " but found " + describe(t));
    return next();
  }

  std::size_t expect_int(const char* what) {
    const Token& t = peek();
    if (t.type != Token::Type::Int) fail(DiagnosticClass::SyntaxError, t, std::string("expected ") + what + " but found " + describe(t));
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || value > 1'000'000) fail(DiagnosticClass::SyntaxError, t, "integer out of range");
    next();
    return value;
  }

  void statement() {
    const Token& kw = peek();
    if (kw.type != Token::Type::Ident) fail(DiagnosticClass::SyntaxError, kw, "expected a statement but found " + describe(kw));
    next();
    if (kw.text == "box") {
      box_statement();
    } else if (kw.text == "wire") {
      PortRef a = port(), b = port();
      wire_statement(a, b);
    } else if (kw.text == "open") {
      PortRef p = port();
      for (std::size_t leg : expand(p)) {
        use(p, leg);
        ir_.open(Port{p.box, leg});
      }
    } else if (kw.text == "cap" || kw.text == "unit") {
      PortRef p = port();
      for (std::size_t leg : expand(p)) {
        use(p, leg);
        std::size_t cap = ir_.boxes.size();
        ir_.boxes.push_back(Box{"cap#" + std::to_string(++caps_), BoxKind::Ghz, 1, {}, true});
        used_.emplace_back(1, true);
        declared_at_.push_back({p.line, p.column});
        ir_.connect(Port{p.box, leg}, Port{cap, 0});
      }
    } else {
      fail(DiagnosticClass::SyntaxError, kw, "unknown statement '" + kw.text + "'");
    }
    expect_punct(';');
  }

  void box_statement() {
    const Token& id = expect_ident("a box id");
    expect_punct('=');
    const Token& kind = peek();
    if (kind.type != Token::Type::Ident) fail(DiagnosticClass::SyntaxError, kind, "expected a box kind but found " + describe(kind));
    next();
    Box box;
    box.id = id.text;
    bool inferred = false;
    if (kind.text == "ghz") {
      expect_punct(':');
      const Token& at = peek();
      box.kind = BoxKind::Ghz;
      box.arity = expect_int("a ghz arity");
      if (box.arity == 0) fail(DiagnosticClass::ArityMismatch, at, "ghz arity must be at least 1");
    } else if (kind.text == "R") {
      box.kind = BoxKind::Transposition;
      box.arity = 4;
    } else if (kind.text == "S") {
      if (options_.molecule_arity == 0) fail(DiagnosticClass::UnknownKind, kind, "S boxes need a group context");
      box.kind = BoxKind::Molecule;
      box.arity = options_.molecule_arity;
    } else if (kind.text == "tensor") {
      box.kind = BoxKind::Custom;
      box.tensor_name = expect_ident("a tensor name").text;
      if (peek().type == Token::Type::Punct && peek().text == ":") {
        next();
        box.arity = expect_int("a tensor arity");
      } else {
        inferred = true;
      }
    } else {
      fail(DiagnosticClass::UnknownKind, kind, "unknown box kind '" + kind.text + "'");
    }
    if (ir_.find_box(box.id)) fail(DiagnosticClass::DuplicateBox, id, "box '" + box.id + "' is already declared");
    used_.emplace_back(box.arity, false);
    inferred_.resize(ir_.boxes.size() + 1, false);
    inferred_.back() = inferred;
    declared_at_.push_back({id.line, id.column});
    ir_.boxes.push_back(std::move(box));
  }

  PortRef port() {
    const Token& id = expect_ident("a port");
    PortRef ref;
    ref.line = id.line;
    ref.column = id.column;
    expect_punct('.');
    if (peek().type == Token::Type::Punct && peek().text == "*") {
      next();
    } else {
      const Token& at = peek();
      std::size_t leg = expect_int("a leg number or '*'");
      if (leg == 0) fail(DiagnosticClass::ArityMismatch, at, "legs are numbered from 1");
      ref.leg = leg - 1;
    }
    auto box = ir_.find_box(id.text);
    if (!box || ir_.boxes[*box].synthetic_cap) fail(DiagnosticClass::UnknownBox, id, "box '" + id.text + "' is not declared");
    ref.box = *box;
    if (ref.leg) {
      Box& b = ir_.boxes[ref.box];
      if (*ref.leg >= b.arity) {
        if (!is_inferred(ref.box)) {
          fail(DiagnosticClass::ArityMismatch, id,
               "box '" + b.id + "' has " + std::to_string(b.arity) + " legs, no leg " + std::to_string(*ref.leg + 1));
        }
        b.arity = *ref.leg + 1;
        used_[ref.box].resize(b.arity, false);
      }
    } else if (is_inferred(ref.box)) {
      fail(DiagnosticClass::ArityMismatch, id, "'" + id.text + ".*' needs a declared arity");
    }
    return ref;
  }

  bool is_inferred(std::size_t box) const { return box < inferred_.size() && inferred_[box]; }

  std::vector<std::size_t> expand(const PortRef& p) const {
    if (p.leg) return {*p.leg};
    std::vector<std::size_t> legs(ir_.boxes[p.box].arity);
    for (std::size_t k = 0; k < legs.size(); ++k) legs[k] = k;
    return legs;
  }

  void use(const PortRef& p, std::size_t leg) {
    if (used_[p.box][leg]) {
      throw ParseError(DiagnosticClass::DuplicateWire, p.line, p.column,
                       "port " + port_name(ir_, Port{p.box, leg}) + " is already connected");
    }
    used_[p.box][leg] = true;
  }

  void wire_statement(const PortRef& a, const PortRef& b) {
    if (a.leg.has_value() != b.leg.has_value()) {
      throw ParseError(DiagnosticClass::ArityMismatch, b.line, b.column, "a '.*' port must be wired to another '.*' port");
    }
    auto la = expand(a), lb = expand(b);
    if (la.size() != lb.size()) {
      throw ParseError(DiagnosticClass::ArityMismatch, b.line, b.column,
                       "cannot wire " + std::to_string(la.size()) + " legs to " + std::to_string(lb.size()));
    }
    for (std::size_t k = 0; k < la.size(); ++k) {
      if (a.box == b.box && la[k] == lb[k]) {
        throw ParseError(DiagnosticClass::DuplicateWire, b.line, b.column,
                         "port " + port_name(ir_, Port{a.box, la[k]}) + " is wired to itself");
      }
      use(a, la[k]);
      use(b, lb[k]);
      ir_.connect(Port{a.box, la[k]}, Port{b.box, lb[k]});
    }
  }

  void finish() {
    for (std::size_t i = 0; i < ir_.boxes.size(); ++i) {
      for (std::size_t leg = 0; leg < ir_.boxes[i].arity; ++leg) {
        if (!used_[i][leg]) {
          throw ParseError(DiagnosticClass::DanglingPort, declared_at_[i].first, declared_at_[i].second,
                           "port " + port_name(ir_, Port{i, leg}) + " is neither wired nor open");
        }
      }
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  ParseOptions options_;
  DiagramIR ir_;
  std::vector<std::vector<bool>> used_;
  std::vector<bool> inferred_;
  std::vector<std::pair<std::size_t, std::size_t>> declared_at_;
  std::size_t caps_ = 0;
};

std::string text_port(const DiagramIR& ir, Port p) { return port_name(ir, p); }

}  // namespace

DiagramIR parse_diagram(std::string_view text, const ParseOptions& options) { return Parser(text, options).parse(); }

std::string print_diagram(const DiagramIR& ir) {
  ir.validate();
  std::vector<std::optional<Port>> cap_partner(ir.boxes.size());
  for (const auto& w : ir.wires) {
    if (ir.boxes[w.b.box].synthetic_cap) cap_partner[w.b.box] = w.a;
    if (ir.boxes[w.a.box].synthetic_cap) cap_partner[w.a.box] = w.b;
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < ir.boxes.size(); ++i) {
    const Box& b = ir.boxes[i];
    if (b.synthetic_cap) {
      const auto& partner = cap_partner[i];
      if (b.kind != BoxKind::Ghz || b.arity != 1 || !partner || partner->box >= i || ir.boxes[partner->box].synthetic_cap) {
        throw InvalidArgument("synthetic cap '" + b.id + "' cannot be printed");
      }
      out << "cap " << text_port(ir, *partner) << ";\n";
      continue;
    }
    out << "box " << b.id << " = ";
    switch (b.kind) {
      case BoxKind::Ghz: out << "ghz:" << b.arity; break;
      case BoxKind::Transposition: out << "R"; break;
      case BoxKind::Molecule: out << "S"; break;
      case BoxKind::Custom: out << "tensor " << b.tensor_name << ":" << b.arity; break;
    }
    out << ";\n";
  }
  for (const auto& w : ir.wires) {
    if (ir.boxes[w.a.box].synthetic_cap || ir.boxes[w.b.box].synthetic_cap) continue;
    out << "wire " << text_port(ir, w.a) << " " << text_port(ir, w.b) << ";\n";
  }
  for (const auto& p : ir.boundary) out << "open " << text_port(ir, p) << ";\n";
  return out.str();
}

}  // namespace skeinlab
