#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "anncat/base.hpp"

namespace anncat {

// Registered constraint-family names.  The first twelve are families of a
// single category; the rest only make sense when checking a functor
// (F, F-breve, F-tilde) or a morphism of functors (alpha).
enum class Fam {
  aplus,
  c,
  g,
  d,
  a,
  l,
  r,
  L,
  R,
  v,
  Lhat,
  Rhat,
  Fbreve,
  Ftilde,
  Fhat,
  F1,
  Gbreve,
  Gtilde,
  alpha,
};

int fam_arity(Fam f);
const char* fam_name(Fam f);
std::optional<Fam> fam_from_name(std::string_view s);
// True for families indexed by objects of the *source* category in a
// functor-check context (Fbreve, Ftilde, Gbreve, Gtilde, alpha).
bool fam_source_indexed(Fam f);

struct ObjTerm;
using ObjPtr = std::shared_ptr<const ObjTerm>;

// Object-level term: VAR | 0 | 1 | oplus(o,o) | otimes(o,o) | F(o) | G(o)
struct ObjTerm {
  enum class Kind { var, zero, one, oplus, otimes, fapp, gapp };
  Kind kind;
  int var = -1;   // index into the equation's variable list
  ObjPtr a, b;    // oplus/otimes operands; fapp/gapp use a
};

struct MorTerm;
using MorPtr = std::shared_ptr<const MorTerm>;

// Morphism-level term: id(o) | NAME[o,...] | inv(t) | comp(t,t) |
// oplus(t,t) | otimes(t,t) | F(t) | G(t).  comp(g,f) means g after f.
struct MorTerm {
  enum class Kind { id, fam, inv, comp, oplus, otimes, fapp, gapp };
  Kind kind;
  ObjPtr obj;                // id
  Fam fam = Fam::aplus;      // fam
  std::vector<ObjPtr> args;  // fam
  MorPtr a, b;               // inv/fapp/gapp use a; comp/oplus/otimes use a,b
};

struct Equation {
  std::string id;    // catalog key, e.g. "2.10"
  std::string cite;  // citation string printed in reports
  std::vector<std::string> vars;
  MorPtr lhs, rhs;
  bool functor_ctx = false;  // mentions F()/G()/functor families
};

// Grammar (ASCII):
//   objexpr  := VAR | "0" | "1" | "oplus(" objexpr "," objexpr ")"
//             | "otimes(" objexpr "," objexpr ")" | "F(" objexpr ")"
//             | "G(" objexpr ")"
//   term     := "id(" objexpr ")" | NAME "[" objexpr ("," objexpr)* "]"
//             | NAME "[]" | "inv(" term ")" | "comp(" term "," term ")"
//             | "oplus(" term "," term ")" | "otimes(" term "," term ")"
//             | "F(" term ")" | "G(" term ")"
//   equation := "forall" VAR+ ":" term "=" term
MorPtr parse_term(std::string_view src, const std::vector<std::string>& vars);
Equation parse_equation(std::string_view id, std::string_view cite,
                        std::string_view src);

std::string print_term(const MorTerm& t, const std::vector<std::string>& vars);
std::string print_obj(const ObjTerm& o, const std::vector<std::string>& vars);
std::string print_equation(const Equation& eq);

bool term_equal(const MorTerm& x, const MorTerm& y);
bool obj_equal(const ObjTerm& x, const ObjTerm& y);

}  // namespace anncat
