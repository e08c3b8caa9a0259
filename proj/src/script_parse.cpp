#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "sphereforge/polynomial.hpp"
#include "sphereforge/script.hpp"

namespace sphereforge {

namespace {

const std::set<std::string> kReservedWords = {
    "ring",      "ideal",     "scheme",    "center",   "matrix",
    "map",       "certificate", "groebner", "member",  "radical-member",
    "certify-member", "dim",  "equal",     "smooth",   "singular",
    "support",   "build",     "ga-check",  "reschange", "pair-iso",
    "brieskorn", "gm-check",  "diag-family", "trivialize", "fiber",
    "in",        "on",        "at",        "with",     "via",
    "bundle",    "Q"};

struct Token {
  enum class Kind { ident, integer, symbol, end };
  Kind kind = Kind::end;
  std::string text;
  SourceLoc loc;
  std::size_t offset = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { scan(); }
  const std::vector<Token>& tokens() const { return tokens_; }

 private:
  void scan() {
    std::size_t line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
      for (std::size_t k = 0; k < n; ++k) {
        if (text_[i + k] == '\n') {
          ++line;
          col = 1;
        } else {
          ++col;
        }
      }
      i += n;
    };
    while (i < text_.size()) {
      char c = text_[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance(1);
        continue;
      }
      if (c == '#') {  // comment to end of line
        while (i < text_.size() && text_[i] != '\n') advance(1);
        continue;
      }
      SourceLoc loc{line, col};
      std::size_t start = i;
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        while (i < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[i])) ||
                text_[i] == '_'))
          advance(1);
        tokens_.push_back({Token::Kind::ident, text_.substr(start, i - start),
                           loc, start});
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        while (i < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[i])))
          advance(1);
        tokens_.push_back({Token::Kind::integer, text_.substr(start, i - start),
                           loc, start});
        continue;
      }
      if (c == '-' && i + 1 < text_.size() && text_[i + 1] == '>') {
        advance(2);
        tokens_.push_back({Token::Kind::symbol, "->", loc, start});
        continue;
      }
      static const std::string singles = ";,=()[]:+-*^/";
      if (singles.find(c) != std::string::npos) {
        advance(1);
        tokens_.push_back({Token::Kind::symbol, std::string(1, c), loc, start});
        continue;
      }
      throw ScriptError(std::string("unexpected character '") + c + "'", loc);
    }
    tokens_.push_back({Token::Kind::end, "", {line, col}, text_.size()});
  }

  const std::string& text_;
  std::vector<Token> tokens_;
};

enum class SymKind { ring, ideal, scheme, center, matrix, map, certificate,
                     space, family };

struct Sym {
  SymKind kind;
  std::vector<std::string> vars;        // ring/ideal/scheme/space/family
  std::string scheme_ref;               // center: its ambient scheme
  std::string map_source, map_target;   // map endpoints
};

const char* kind_name(SymKind k) {
  switch (k) {
    case SymKind::ring: return "ring";
    case SymKind::ideal: return "ideal";
    case SymKind::scheme: return "scheme";
    case SymKind::center: return "center";
    case SymKind::matrix: return "matrix";
    case SymKind::map: return "map";
    case SymKind::certificate: return "certificate";
    case SymKind::space: return "space";
    case SymKind::family: return "family";
  }
  return "?";
}

class Parser {
 public:
  explicit Parser(const std::string& text) : lexer_(text) {}

  Script parse() {
    Script script;
    while (!at_end()) {
      script.statements.push_back(statement());
    }
    return script;
  }

 private:
  ast::Statement statement() {
    Token head = peek();
    std::string kw = statement_keyword();
    ast::Node node = [&]() -> ast::Node {
      if (kw == "ring") return ring_decl();
      if (kw == "ideal") return ideal_decl();
      if (kw == "scheme") return scheme_decl();
      if (kw == "center") return center_decl();
      if (kw == "matrix") return matrix_decl();
      if (kw == "map") return map_decl();
      if (kw == "certificate") return cert_decl();
      if (kw == "groebner") return ast::GroebnerCmd{ref(SymKind::ideal)};
      if (kw == "member") return member_cmd(false);
      if (kw == "radical-member") return member_cmd(true);
      if (kw == "certify-member") return certify_member_cmd();
      if (kw == "dim") return ast::DimCmd{ref({SymKind::ideal, SymKind::scheme,
                                               SymKind::space, SymKind::family})};
      if (kw == "equal")
        return ast::EqualCmd{ref(SymKind::ideal), ref(SymKind::ideal)};
      if (kw == "smooth")
        return ast::SmoothCmd{ref({SymKind::ideal, SymKind::scheme,
                                   SymKind::space, SymKind::family}), false};
      if (kw == "singular")
        return ast::SmoothCmd{ref({SymKind::ideal, SymKind::scheme,
                                   SymKind::space, SymKind::family}), true};
      if (kw == "support") return ast::SupportCmd{ref(SymKind::center)};
      if (kw == "build") return build_cmd();
      if (kw == "ga-check") return ast::GaCheckCmd{ref(SymKind::space)};
      if (kw == "reschange") return reschange_cmd();
      if (kw == "pair-iso")
        return ast::PairIsoCmd{ref(SymKind::center), ref(SymKind::center),
                               after("via", SymKind::certificate)};
      if (kw == "brieskorn") return brieskorn_cmd();
      if (kw == "gm-check") return gm_check_cmd();
      if (kw == "diag-family") return diag_family_cmd();
      if (kw == "trivialize") return ast::TrivializeCmd{ref(SymKind::family)};
      if (kw == "fiber") return fiber_cmd();
      throw ScriptError("unknown statement '" + kw + "'", head.loc);
    }();
    expect_symbol(";");
    return {std::move(node), head.loc};
  }

  // --- declarations ---

  ast::RingDecl ring_decl() {
    std::string name = fresh_name();
    expect_symbol("=");
    Token q = expect(Token::Kind::ident);
    if (q.text != "Q")
      throw ScriptError("only coefficient field Q is supported", q.loc);
    expect_symbol("[");
    std::vector<std::string> vars;
    for (;;) {
      Token v = expect(Token::Kind::ident);
      check_not_reserved(v);
      for (const auto& existing : vars)
        if (existing == v.text)
          throw ScriptError("duplicate ring variable '" + v.text + "'", v.loc);
      vars.push_back(v.text);
      if (!accept_symbol(",")) break;
    }
    expect_symbol("]");
    symbols_[name] = {SymKind::ring, vars, "", "", ""};
    active_ring_vars_ = vars;
    has_active_ring_ = true;
    return {name, std::move(vars)};
  }

  ast::IdealDecl ideal_decl() {
    std::string name = fresh_name();
    expect_symbol("=");
    require_active_ring(peek().loc);
    std::vector<std::string> gens = expression_list();
    symbols_[name] = {SymKind::ideal, active_ring_vars_, "", "", ""};
    return {name, std::move(gens)};
  }

  ast::SchemeDecl scheme_decl() {
    std::string name = fresh_name();
    expect_symbol("=");
    require_active_ring(peek().loc);
    std::vector<std::string> gens = expression_list();
    symbols_[name] = {SymKind::scheme, active_ring_vars_, "", "", ""};
    return {name, std::move(gens)};
  }

  ast::CenterDecl center_decl() {
    std::string name = fresh_name();
    expect_symbol("=");
    expect_symbol("(");
    // Scheme is named after the pair, so validate the expressions after
    // the whole statement is read.
    Token ft = peek();
    std::string f = expression({",", ")"}, false);
    expect_symbol(",");
    Token gt = peek();
    std::string g = expression({",", ")"}, false);
    expect_symbol(")");
    expect_keyword("on");
    std::string scheme = ref(SymKind::scheme);
    expect_keyword("at");
    std::vector<Rational> point = rational_tuple();
    const auto& vars = symbols_[scheme].vars;
    validate_expression(f, vars, ft.loc);
    validate_expression(g, vars, gt.loc);
    if (point.size() != vars.size())
      throw ScriptError("support point needs one coordinate per variable",
                        ft.loc);
    symbols_[name] = {SymKind::center, vars, scheme, "", ""};
    return {name, f, g, scheme, std::move(point)};
  }

  ast::MatrixDecl matrix_decl() {
    std::string name = fresh_name();
    expect_symbol("=");
    require_active_ring(peek().loc);
    expect_symbol("[");
    expect_symbol("[");
    std::string a = expression({","}, true);
    expect_symbol(",");
    std::string b = expression({"]"}, true);
    expect_symbol("]");
    expect_symbol(",");
    expect_symbol("[");
    std::string c = expression({","}, true);
    expect_symbol(",");
    std::string d = expression({"]"}, true);
    expect_symbol("]");
    expect_symbol("]");
    symbols_[name] = {SymKind::matrix, active_ring_vars_, "", "", ""};
    return {name, a, b, c, d};
  }

  ast::MapDecl map_decl() {
    std::string name = fresh_name();
    expect_symbol(":");
    std::string source = ref({SymKind::scheme, SymKind::space, SymKind::family});
    expect_symbol("->");
    std::string target = ref({SymKind::scheme, SymKind::space, SymKind::family});
    expect_symbol("=");
    expect_symbol("(");
    std::vector<std::string> comps;
    for (;;) {
      Token t = peek();
      comps.push_back(expression({",", ")"}, false));
      validate_expression(comps.back(), symbols_[source].vars, t.loc);
      if (!accept_symbol(",")) break;
    }
    expect_symbol(")");
    if (comps.size() != symbols_[target].vars.size())
      throw ScriptError("map needs one component per target variable",
                        peek().loc);
    symbols_[name] = {SymKind::map, {}, "", source, target};
    return {name, source, target, std::move(comps)};
  }

  ast::CertDecl cert_decl() {
    std::string name = fresh_name();
    expect_symbol("=");
    expect_symbol("(");
    Token floc = peek();
    std::string fwd = ref(SymKind::map);
    expect_symbol(",");
    std::string inv = ref(SymKind::map);
    expect_symbol(")");
    const Sym &fs = symbols_[fwd], &is = symbols_[inv];
    if (fs.map_target != is.map_source || fs.map_source != is.map_target)
      throw ScriptError("certificate maps do not compose", floc.loc);
    symbols_[name] = {SymKind::certificate, {}, "", fwd, inv};
    return {name, fwd, inv};
  }

  // --- commands ---

  ast::Node member_cmd(bool radical) {
    Token t = peek();
    std::string poly = expression({}, false);
    expect_keyword("in");
    std::string ideal = ref(SymKind::ideal);
    validate_expression(poly, symbols_[ideal].vars, t.loc);
    if (radical) return ast::RadicalMemberCmd{poly, ideal};
    return ast::MemberCmd{poly, ideal};
  }

  ast::CertifyMemberCmd certify_member_cmd() {
    Token t = peek();
    std::string poly = expression({}, false);
    expect_keyword("in");
    std::string ideal = ref(SymKind::ideal);
    expect_keyword("with");
    expect_symbol("(");
    std::vector<std::string> cofactors;
    for (;;) {
      Token ct = peek();
      cofactors.push_back(expression({",", ")"}, false));
      validate_expression(cofactors.back(), symbols_[ideal].vars, ct.loc);
      if (!accept_symbol(",")) break;
    }
    expect_symbol(")");
    validate_expression(poly, symbols_[ideal].vars, t.loc);
    return {poly, ideal, std::move(cofactors)};
  }

  ast::BuildCmd build_cmd() {
    std::string name = fresh_name();
    expect_symbol("=");
    expect_keyword("bundle");
    expect_symbol("(");
    std::string center = ref(SymKind::center);
    expect_symbol(")");
    std::vector<std::string> vars = symbols_[center].vars;
    vars.push_back("U");
    vars.push_back("V");
    symbols_[name] = {SymKind::space, std::move(vars), "", "", ""};
    return {name, center};
  }

  ast::ResChangeCmd reschange_cmd() {
    // `reschange NEW = C with M;` or `reschange C with M;`
    Token first = expect(Token::Kind::ident);
    std::optional<std::string> result;
    std::string center;
    if (peek().text == "=") {
      check_not_reserved(first);
      if (symbols_.count(first.text))
        throw ScriptError("identifier '" + first.text + "' already declared",
                          first.loc);
      result = first.text;
      expect_symbol("=");
      center = ref(SymKind::center);
    } else {
      center = check_ref(first, {SymKind::center});
    }
    expect_keyword("with");
    std::string matrix = ref(SymKind::matrix);
    if (result)
      symbols_[*result] = {SymKind::center, symbols_[center].vars,
                           symbols_[center].scheme_ref, "", ""};
    return {result, center, matrix};
  }

  ast::BrieskornCmd brieskorn_cmd() {
    std::string name = fresh_name();
    expect_symbol("=");
    expect_symbol("(");
    std::uint32_t p = small_integer();
    expect_symbol(",");
    std::uint32_t q = small_integer();
    expect_symbol(",");
    std::uint32_t r = small_integer();
    expect_symbol(")");
    symbols_[name] = {SymKind::scheme, {"x", "y", "z"}, "", "", ""};
    active_ring_vars_ = {"x", "y", "z"};
    has_active_ring_ = true;
    return {name, p, q, r};
  }

  ast::GmCheckCmd gm_check_cmd() {
    expect_symbol("(");
    ast::GmCheckCmd cmd{};
    cmd.p = small_integer();
    expect_symbol(",");
    cmd.q = small_integer();
    expect_symbol(",");
    cmd.r = small_integer();
    expect_symbol(")");
    if (peek().kind == Token::Kind::ident && peek().text == "center") {
      next();
      expect_symbol("(");
      cmd.m = small_integer();
      expect_symbol(",");
      cmd.n = small_integer();
      expect_symbol(")");
      cmd.has_center = true;
    }
    return cmd;
  }

  ast::DiagFamilyCmd diag_family_cmd() {
    std::string name = fresh_name();
    symbols_[name] = {SymKind::family,
                      {"x1", "y1", "x2", "y2", "U", "V"}, "", "", ""};
    return {name};
  }

  ast::FiberCmd fiber_cmd() {
    std::string family = ref(SymKind::family);
    expect_keyword("at");
    expect_symbol("(");
    Rational p1 = rational();
    expect_symbol(",");
    Rational p2 = rational();
    expect_symbol(")");
    return {family, p1, p2};
  }

  // --- helpers ---

  std::string statement_keyword() {
    Token t = expect(Token::Kind::ident);
    std::string kw = t.text;
    // Hyphenated command names: join ident '-' ident written without spaces.
    while (peek().text == "-" && peek().offset == t.offset + kw.size() &&
           tokens()[pos_ + 1].kind == Token::Kind::ident &&
           tokens()[pos_ + 1].offset == peek().offset + 1 &&
           kReservedWords.count(kw + "-" + tokens()[pos_ + 1].text)) {
      next();  // '-'
      kw += "-" + next().text;
    }
    return kw;
  }

  std::string fresh_name() {
    Token t = expect(Token::Kind::ident);
    check_not_reserved(t);
    if (symbols_.count(t.text))
      throw ScriptError("identifier '" + t.text + "' already declared", t.loc);
    return t.text;
  }

  std::string ref(SymKind kind) { return ref(std::vector<SymKind>{kind}); }

  std::string ref(const std::vector<SymKind>& kinds) {
    Token t = expect(Token::Kind::ident);
    return check_ref(t, kinds);
  }

  std::string check_ref(const Token& t, const std::vector<SymKind>& kinds) {
    auto it = symbols_.find(t.text);
    if (it == symbols_.end())
      throw ScriptError("use of undeclared identifier '" + t.text + "'", t.loc);
    for (SymKind k : kinds)
      if (it->second.kind == k) return t.text;
    throw ScriptError("identifier '" + t.text + "' is a " +
                          kind_name(it->second.kind) +
                          ", which this statement cannot use",
                      t.loc);
  }

  std::string after(const std::string& keyword, SymKind kind) {
    expect_keyword(keyword);
    return ref(kind);
  }

  // Captures a polynomial expression as canonically spaced token text, up to
  // ';', a closing delimiter at depth zero, or the keyword 'in'.
  std::string expression(const std::vector<std::string>& stoppers,
                         bool validate_in_active_ring) {
    Token start = peek();
    std::ostringstream out;
    int depth = 0;
    bool any = false;
    for (;;) {
      const Token& t = peek();
      if (t.kind == Token::Kind::end) break;
      if (depth == 0) {
        if (t.text == ";" || t.text == ",") break;
        if (t.text == ")" || t.text == "]") break;
        if (t.kind == Token::Kind::ident && t.text == "in") break;
      }
      if (t.text == "(") ++depth;
      if (t.text == ")") --depth;
      if (any) out << " ";
      out << t.text;
      any = true;
      next();
    }
    (void)stoppers;
    if (!any) throw ScriptError("expected a polynomial expression", start.loc);
    std::string text = out.str();
    if (validate_in_active_ring) {
      require_active_ring(start.loc);
      validate_expression(text, active_ring_vars_, start.loc);
    }
    return text;
  }

  std::vector<std::string> expression_list() {
    std::vector<std::string> out;
    for (;;) {
      out.push_back(expression({}, true));
      if (!accept_symbol(",")) break;
    }
    // `ideal I = 0;` is the zero ideal.
    return out;
  }

  void validate_expression(const std::string& text,
                           const std::vector<std::string>& vars, SourceLoc loc) {
    try {
      parse_polynomial(text, make_ring(vars));
    } catch (const SyntaxError& e) {
      throw ScriptError(std::string("invalid polynomial: ") + e.what(), loc);
    }
  }

  std::vector<Rational> rational_tuple() {
    expect_symbol("(");
    std::vector<Rational> out;
    for (;;) {
      out.push_back(rational());
      if (!accept_symbol(",")) break;
    }
    expect_symbol(")");
    return out;
  }

  Rational rational() {
    bool negate = accept_symbol("-");
    Token n = expect(Token::Kind::integer);
    Integer num(n.text);
    Integer den = 1;
    if (accept_symbol("/")) {
      Token d = expect(Token::Kind::integer);
      den = Integer(d.text);
      if (den == 0) throw ScriptError("zero denominator", d.loc);
    }
    Rational r(num, den);
    return negate ? Rational(-r) : r;
  }

  std::uint32_t small_integer() {
    Token t = expect(Token::Kind::integer);
    if (t.text.size() > 6)
      throw ScriptError("integer argument out of range", t.loc);
    return static_cast<std::uint32_t>(std::stoul(t.text));
  }

  void require_active_ring(SourceLoc loc) {
    if (!has_active_ring_)
      throw ScriptError("no ring declared before use", loc);
  }

  void check_not_reserved(const Token& t) {
    if (kReservedWords.count(t.text))
      throw ScriptError("'" + t.text + "' is a reserved word", t.loc);
  }

  void expect_keyword(const std::string& kw) {
    Token t = expect(Token::Kind::ident);
    if (t.text != kw)
      throw ScriptError("expected '" + kw + "', found '" + t.text + "'", t.loc);
  }

  const std::vector<Token>& tokens() const { return lexer_.tokens(); }
  const Token& peek() const { return tokens()[pos_]; }
  bool at_end() const { return peek().kind == Token::Kind::end; }

  Token next() { return tokens()[pos_++]; }

  Token expect(Token::Kind kind) {
    Token t = next();
    if (t.kind != kind) {
      const char* what = kind == Token::Kind::ident ? "identifier" : "integer";
      throw ScriptError(std::string("expected ") + what + ", found '" + t.text +
                            "'",
                        t.loc);
    }
    return t;
  }

  void expect_symbol(const std::string& s) {
    Token t = next();
    if (t.kind != Token::Kind::symbol || t.text != s)
      throw ScriptError("expected '" + s + "', found '" +
                            (t.kind == Token::Kind::end ? "<end>" : t.text) + "'",
                        t.loc);
  }

  bool accept_symbol(const std::string& s) {
    if (peek().kind == Token::Kind::symbol && peek().text == s) {
      next();
      return true;
    }
    return false;
  }

  Lexer lexer_;
  std::size_t pos_ = 0;
  std::map<std::string, Sym> symbols_;
  std::vector<std::string> active_ring_vars_;
  bool has_active_ring_ = false;
};

struct Printer {
  std::ostringstream out;

  static std::string join(const std::vector<std::string>& v,
                          const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += sep;
      s += v[i];
    }
    return s;
  }

  void operator()(const ast::RingDecl& d) {
    out << "ring " << d.name << " = Q[" << join(d.variables, ", ") << "]";
  }
  void operator()(const ast::IdealDecl& d) {
    out << "ideal " << d.name << " = " << join(d.generators, ", ");
  }
  void operator()(const ast::SchemeDecl& d) {
    out << "scheme " << d.name << " = " << join(d.generators, ", ");
  }
  void operator()(const ast::CenterDecl& d) {
    out << "center " << d.name << " = (" << d.f << ", " << d.g << ") on "
        << d.scheme << " at (";
    for (std::size_t i = 0; i < d.point.size(); ++i)
      out << (i ? ", " : "") << to_string(d.point[i]);
    out << ")";
  }
  void operator()(const ast::MatrixDecl& d) {
    out << "matrix " << d.name << " = [[" << d.a << ", " << d.b << "], [" << d.c
        << ", " << d.d << "]]";
  }
  void operator()(const ast::MapDecl& d) {
    out << "map " << d.name << " : " << d.source << " -> " << d.target << " = ("
        << join(d.components, ", ") << ")";
  }
  void operator()(const ast::CertDecl& d) {
    out << "certificate " << d.name << " = (" << d.forward << ", " << d.inverse
        << ")";
  }
  void operator()(const ast::GroebnerCmd& c) { out << "groebner " << c.ideal; }
  void operator()(const ast::MemberCmd& c) {
    out << "member " << c.poly << " in " << c.ideal;
  }
  void operator()(const ast::RadicalMemberCmd& c) {
    out << "radical-member " << c.poly << " in " << c.ideal;
  }
  void operator()(const ast::CertifyMemberCmd& c) {
    out << "certify-member " << c.poly << " in " << c.ideal << " with ("
        << join(c.cofactors, ", ") << ")";
  }
  void operator()(const ast::DimCmd& c) { out << "dim " << c.target; }
  void operator()(const ast::EqualCmd& c) {
    out << "equal " << c.lhs << " " << c.rhs;
  }
  void operator()(const ast::SmoothCmd& c) {
    out << (c.expect_singular ? "singular " : "smooth ") << c.target;
  }
  void operator()(const ast::SupportCmd& c) { out << "support " << c.center; }
  void operator()(const ast::BuildCmd& c) {
    out << "build " << c.name << " = bundle(" << c.center << ")";
  }
  void operator()(const ast::GaCheckCmd& c) { out << "ga-check " << c.space; }
  void operator()(const ast::ResChangeCmd& c) {
    out << "reschange ";
    if (c.result_name) out << *c.result_name << " = ";
    out << c.center << " with " << c.matrix;
  }
  void operator()(const ast::PairIsoCmd& c) {
    out << "pair-iso " << c.left << " " << c.right << " via " << c.certificate;
  }
  void operator()(const ast::BrieskornCmd& c) {
    out << "brieskorn " << c.name << " = (" << c.p << ", " << c.q << ", " << c.r
        << ")";
  }
  void operator()(const ast::GmCheckCmd& c) {
    out << "gm-check (" << c.p << ", " << c.q << ", " << c.r << ")";
    if (c.has_center) out << " center (" << c.m << ", " << c.n << ")";
  }
  void operator()(const ast::DiagFamilyCmd& c) { out << "diag-family " << c.name; }
  void operator()(const ast::TrivializeCmd& c) {
    out << "trivialize " << c.family;
  }
  void operator()(const ast::FiberCmd& c) {
    out << "fiber " << c.family << " at (" << to_string(c.p1) << ", "
        << to_string(c.p2) << ")";
  }
};

}  // namespace

Script parse_script(const std::string& text) { return Parser(text).parse(); }

std::string pretty_print(const Script& script) {
  Printer printer;
  for (const auto& st : script.statements) {
    std::visit(printer, st.node);
    printer.out << ";\n";
  }
  return printer.out.str();
}

bool ast_equal(const Script& a, const Script& b) {
  // Printing is injective on statement content, so printed equality is
  // structural equality.
  return pretty_print(a) == pretty_print(b);
}

}  // namespace sphereforge
