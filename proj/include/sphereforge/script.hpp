#ifndef SPHEREFORGE_SCRIPT_HPP
#define SPHEREFORGE_SCRIPT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sphereforge/rational.hpp"

namespace sphereforge {

// Script grammar (statements end with ';'):
//
//   ring R = Q[x, y];
//   ideal I = <poly>, <poly>, ...;            (in the active ring; 0 allowed)
//   scheme S = <poly>, ...;                   (ditto; 0 declares affine space)
//   center C = (<poly>, <poly>) on S at (<rat>, ...);
//   matrix M = [[<poly>, <poly>], [<poly>, <poly>]];
//   map F : S -> S2 = (<poly>, ...);          (components in S's coordinates)
//   certificate K = (F, G);                   (forward, inverse maps)
//
//   groebner I;                   member <poly> in I;
//   radical-member <poly> in I;   dim I;              equal I J;
//   smooth S;                     singular S;         support C;
//   build X = bundle(C);          ga-check X;
//   reschange [C2 =] C with M;    pair-iso C1 C2 via K;
//   brieskorn S = (p, q, r);      gm-check (p, q, r) [center (m, n)];
//   diag-family W;                trivialize W;       fiber W at (<rat>, <rat>);
//   certify-member <poly> in I with (<poly>, ...);
//
// Polynomial expressions: integers, variables, + - * ^, parentheses;
// no implicit multiplication. Rationals (only in point positions): n or n/d.

struct SourceLoc {
  std::size_t line = 0;
  std::size_t column = 0;
};

struct ScriptError : std::runtime_error {
  SourceLoc loc;
  ScriptError(std::string message, SourceLoc where)
      : std::runtime_error(std::move(message)), loc(where) {}
};

namespace ast {

struct RingDecl {
  std::string name;
  std::vector<std::string> variables;
};
struct IdealDecl {
  std::string name;
  std::vector<std::string> generators;  // polynomial expression texts
};
struct SchemeDecl {
  std::string name;
  std::vector<std::string> generators;
};
struct CenterDecl {
  std::string name;
  std::string f, g;
  std::string scheme;
  std::vector<Rational> point;
};
struct MatrixDecl {
  std::string name;
  std::string a, b, c, d;
};
struct MapDecl {
  std::string name;
  std::string source, target;
  std::vector<std::string> components;
};
struct CertDecl {
  std::string name;
  std::string forward, inverse;
};

struct GroebnerCmd {
  std::string ideal;
};
struct MemberCmd {
  std::string poly;
  std::string ideal;
};
struct RadicalMemberCmd {
  std::string poly;
  std::string ideal;
};
struct CertifyMemberCmd {
  std::string poly;
  std::string ideal;
  std::vector<std::string> cofactors;
};
struct DimCmd {
  std::string target;  // ideal or scheme
};
struct EqualCmd {
  std::string lhs, rhs;
};
struct SmoothCmd {
  std::string target;
  bool expect_singular = false;  // `singular S;`
};
struct SupportCmd {
  std::string center;
};
struct BuildCmd {
  std::string name;
  std::string center;
};
struct GaCheckCmd {
  std::string space;
};
struct ResChangeCmd {
  std::optional<std::string> result_name;
  std::string center;
  std::string matrix;
};
struct PairIsoCmd {
  std::string left, right;
  std::string certificate;
};
struct BrieskornCmd {
  std::string name;
  std::uint32_t p, q, r;
};
struct GmCheckCmd {
  std::uint32_t p, q, r;
  std::uint32_t m = 1, n = 1;
  bool has_center = false;
};
struct DiagFamilyCmd {
  std::string name;
};
struct TrivializeCmd {
  std::string family;
};
struct FiberCmd {
  std::string family;
  Rational p1, p2;
};

using Node =
    std::variant<RingDecl, IdealDecl, SchemeDecl, CenterDecl, MatrixDecl,
                 MapDecl, CertDecl, GroebnerCmd, MemberCmd, RadicalMemberCmd,
                 CertifyMemberCmd, DimCmd, EqualCmd, SmoothCmd, SupportCmd,
                 BuildCmd, GaCheckCmd, ResChangeCmd, PairIsoCmd, BrieskornCmd,
                 GmCheckCmd, DiagFamilyCmd, TrivializeCmd, FiberCmd>;

struct Statement {
  Node node;
  SourceLoc loc;
};

}  // namespace ast

struct Script {
  std::vector<ast::Statement> statements;
};

// Full syntax and reference checking: identifier declared before use, kinds
// match, polynomial expressions valid in the active ring. Throws
// ScriptError; nothing executes on failure.
Script parse_script(const std::string& text);

// Canonical source form; parse_script(pretty_print(s)) is structurally
// identical to s.
std::string pretty_print(const Script& script);

bool ast_equal(const Script& a, const Script& b);

}  // namespace sphereforge

#endif
