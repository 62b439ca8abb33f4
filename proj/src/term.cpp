#include "anncat/term.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

namespace anncat {

namespace {

struct FamInfo {
  Fam fam;
  const char* name;
  int arity;
  bool source_indexed;
};

constexpr std::array<FamInfo, 19> kFams{{
    {Fam::aplus, "aplus", 3, false},
    {Fam::c, "c", 2, false},
    {Fam::g, "g", 1, false},
    {Fam::d, "d", 1, false},
    {Fam::a, "a", 3, false},
    {Fam::l, "l", 1, false},
    {Fam::r, "r", 1, false},
    {Fam::L, "L", 3, false},
    {Fam::R, "R", 3, false},
    {Fam::v, "v", 4, false},
    {Fam::Lhat, "Lhat", 1, false},
    {Fam::Rhat, "Rhat", 1, false},
    {Fam::Fbreve, "Fbreve", 2, true},
    {Fam::Ftilde, "Ftilde", 2, true},
    {Fam::Fhat, "Fhat", 0, true},
    {Fam::F1, "F1", 0, true},
    {Fam::Gbreve, "Gbreve", 2, true},
    {Fam::Gtilde, "Gtilde", 2, true},
    {Fam::alpha, "alpha", 1, true},
}};

const FamInfo& info(Fam f) {
  for (const auto& fi : kFams)
    if (fi.fam == f) return fi;
  throw Error("unregistered family");
}

}  // namespace

int fam_arity(Fam f) { return info(f).arity; }
const char* fam_name(Fam f) { return info(f).name; }
bool fam_source_indexed(Fam f) { return info(f).source_indexed; }

std::optional<Fam> fam_from_name(std::string_view s) {
  for (const auto& fi : kFams)
    if (s == fi.name) return fi.fam;
  return std::nullopt;
}

// ---------------------------------------------------------------------
// Parser: plain recursive descent over a flat token-free scan.

namespace {

class Parser {
 public:
  Parser(std::string_view src, const std::vector<std::string>& vars)
      : src_(src), vars_(vars) {}

  MorPtr parse_full_term() {
    MorPtr t = mor();
    skip_ws();
    if (pos_ != src_.size()) throw SyntaxError("trailing input", pos_);
    return t;
  }

  // lhs "=" rhs
  std::pair<MorPtr, MorPtr> parse_sides() {
    MorPtr lhs = mor();
    expect('=');
    MorPtr rhs = mor();
    skip_ws();
    if (pos_ != src_.size()) throw SyntaxError("trailing input", pos_);
    return {lhs, rhs};
  }

  bool saw_functor = false;

 private:
  std::string_view src_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  void expect(char ch) {
    skip_ws();
    if (pos_ >= src_.size() || src_[pos_] != ch)
      throw SyntaxError(std::string("expected '") + ch + "'", pos_);
    ++pos_;
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_' ||
            src_[pos_] == '\'' || src_[pos_] == '+'))
      ++pos_;
    if (pos_ == start) throw SyntaxError("expected identifier", start);
    return std::string(src_.substr(start, pos_ - start));
  }

  int var_index(const std::string& name, std::size_t at) {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end())
      throw SyntaxError("unbound variable '" + name + "'", at);
    return static_cast<int>(it - vars_.begin());
  }

  ObjPtr obj() {
    skip_ws();
    std::size_t at = pos_;
    std::string w = ident();
    auto node = [&](ObjTerm::Kind k) {
      auto n = std::make_shared<ObjTerm>();
      n->kind = k;
      return n;
    };
    if (w == "0") return node(ObjTerm::Kind::zero);
    if (w == "1") return node(ObjTerm::Kind::one);
    if (w == "oplus" || w == "otimes") {
      expect('(');
      ObjPtr a = obj();
      expect(',');
      ObjPtr b = obj();
      expect(')');
      auto n = node(w == "oplus" ? ObjTerm::Kind::oplus : ObjTerm::Kind::otimes);
      n->a = a;
      n->b = b;
      return n;
    }
    if ((w == "F" || w == "G") && peek() == '(') {
      saw_functor = true;
      expect('(');
      ObjPtr a = obj();
      expect(')');
      auto n = node(w == "F" ? ObjTerm::Kind::fapp : ObjTerm::Kind::gapp);
      n->a = a;
      return n;
    }
    auto n = node(ObjTerm::Kind::var);
    n->var = var_index(w, at);
    return n;
  }

  MorPtr mor() {
    skip_ws();
    std::size_t at = pos_;
    std::string w = ident();
    auto node = [&](MorTerm::Kind k) {
      auto n = std::make_shared<MorTerm>();
      n->kind = k;
      return n;
    };
    if (w == "id") {
      expect('(');
      ObjPtr o = obj();
      expect(')');
      auto n = node(MorTerm::Kind::id);
      n->obj = o;
      return n;
    }
    if (w == "inv") {
      expect('(');
      MorPtr a = mor();
      expect(')');
      auto n = node(MorTerm::Kind::inv);
      n->a = a;
      return n;
    }
    if (w == "comp" || w == "oplus" || w == "otimes") {
      expect('(');
      MorPtr a = mor();
      expect(',');
      MorPtr b = mor();
      expect(')');
      auto n = node(w == "comp"    ? MorTerm::Kind::comp
                    : w == "oplus" ? MorTerm::Kind::oplus
                                   : MorTerm::Kind::otimes);
      n->a = a;
      n->b = b;
      return n;
    }
    if ((w == "F" || w == "G") && peek() == '(') {
      saw_functor = true;
      expect('(');
      MorPtr a = mor();
      expect(')');
      auto n = node(w == "F" ? MorTerm::Kind::fapp : MorTerm::Kind::gapp);
      n->a = a;
      return n;
    }
    // Constraint-family reference NAME[args].
    auto f = fam_from_name(w);
    if (!f) throw UnknownName("unknown name '" + w + "'", at);
    if (fam_source_indexed(*f)) saw_functor = true;
    auto n = node(MorTerm::Kind::fam);
    n->fam = *f;
    expect('[');
    if (peek() != ']') {
      n->args.push_back(obj());
      while (peek() == ',') {
        expect(',');
        n->args.push_back(obj());
      }
    }
    expect(']');
    if (static_cast<int>(n->args.size()) != fam_arity(*f))
      throw UnknownName("'" + w + "' takes " + std::to_string(fam_arity(*f)) +
                            " arguments, got " + std::to_string(n->args.size()),
                        at);
    return n;
  }
};

}  // namespace

MorPtr parse_term(std::string_view src, const std::vector<std::string>& vars) {
  for (const auto& v : vars)
    if (fam_from_name(v) || v == "id" || v == "inv" || v == "comp" ||
        v == "oplus" || v == "otimes" || v == "F" || v == "G" || v == "0" ||
        v == "1" || v == "forall")
      throw SyntaxError("variable '" + v + "' shadows a reserved name", 0);
  Parser p(src, vars);
  return p.parse_full_term();
}

Equation parse_equation(std::string_view id, std::string_view cite,
                        std::string_view src) {
  // Strip "forall VAR+ :" prefix by hand, then hand both sides to the parser.
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  };
  skip_ws();
  static constexpr std::string_view kw = "forall";
  if (src.substr(pos, kw.size()) != kw)
    throw SyntaxError("expected 'forall'", pos);
  pos += kw.size();
  std::vector<std::string> vars;
  for (;;) {
    skip_ws();
    if (pos < src.size() && src[pos] == ':') {
      ++pos;
      break;
    }
    std::size_t start = pos;
    while (pos < src.size() &&
           (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
      ++pos;
    if (pos == start) throw SyntaxError("expected variable or ':'", pos);
    vars.emplace_back(src.substr(start, pos - start));
  }
  if (vars.empty()) throw SyntaxError("forall needs at least one variable", pos);
  for (const auto& v : vars)
    if (fam_from_name(v) || v == "id" || v == "inv" || v == "comp" ||
        v == "oplus" || v == "otimes" || v == "F" || v == "G" || v == "0" ||
        v == "1")
      throw SyntaxError("variable '" + v + "' shadows a reserved name", 0);

  Parser p(src.substr(pos), vars);
  auto [lhs, rhs] = p.parse_sides();
  Equation eq;
  eq.id = std::string(id);
  eq.cite = std::string(cite);
  eq.vars = std::move(vars);
  eq.lhs = std::move(lhs);
  eq.rhs = std::move(rhs);
  eq.functor_ctx = p.saw_functor;
  return eq;
}

// ---------------------------------------------------------------------
// Printer (round-trips through the parser).

std::string print_obj(const ObjTerm& o, const std::vector<std::string>& vars) {
  switch (o.kind) {
    case ObjTerm::Kind::var:
      return vars.at(static_cast<std::size_t>(o.var));
    case ObjTerm::Kind::zero:
      return "0";
    case ObjTerm::Kind::one:
      return "1";
    case ObjTerm::Kind::oplus:
      return "oplus(" + print_obj(*o.a, vars) + "," + print_obj(*o.b, vars) + ")";
    case ObjTerm::Kind::otimes:
      return "otimes(" + print_obj(*o.a, vars) + "," + print_obj(*o.b, vars) + ")";
    case ObjTerm::Kind::fapp:
      return "F(" + print_obj(*o.a, vars) + ")";
    case ObjTerm::Kind::gapp:
      return "G(" + print_obj(*o.a, vars) + ")";
  }
  return "?";
}

std::string print_term(const MorTerm& t, const std::vector<std::string>& vars) {
  switch (t.kind) {
    case MorTerm::Kind::id:
      return "id(" + print_obj(*t.obj, vars) + ")";
    case MorTerm::Kind::fam: {
      std::string s = fam_name(t.fam);
      s += '[';
      for (std::size_t i = 0; i < t.args.size(); ++i) {
        if (i) s += ',';
        s += print_obj(*t.args[i], vars);
      }
      s += ']';
      return s;
    }
    case MorTerm::Kind::inv:
      return "inv(" + print_term(*t.a, vars) + ")";
    case MorTerm::Kind::comp:
      return "comp(" + print_term(*t.a, vars) + "," + print_term(*t.b, vars) + ")";
    case MorTerm::Kind::oplus:
      return "oplus(" + print_term(*t.a, vars) + "," + print_term(*t.b, vars) + ")";
    case MorTerm::Kind::otimes:
      return "otimes(" + print_term(*t.a, vars) + "," + print_term(*t.b, vars) + ")";
    case MorTerm::Kind::fapp:
      return "F(" + print_term(*t.a, vars) + ")";
    case MorTerm::Kind::gapp:
      return "G(" + print_term(*t.a, vars) + ")";
  }
  return "?";
}

std::string print_equation(const Equation& eq) {
  std::string s = "forall";
  for (const auto& v : eq.vars) s += " " + v;
  s += " : " + print_term(*eq.lhs, eq.vars) + " = " + print_term(*eq.rhs, eq.vars);
  return s;
}

bool obj_equal(const ObjTerm& x, const ObjTerm& y) {
  if (x.kind != y.kind) return false;
  switch (x.kind) {
    case ObjTerm::Kind::var:
      return x.var == y.var;
    case ObjTerm::Kind::zero:
    case ObjTerm::Kind::one:
      return true;
    case ObjTerm::Kind::oplus:
    case ObjTerm::Kind::otimes:
      return obj_equal(*x.a, *y.a) && obj_equal(*x.b, *y.b);
    case ObjTerm::Kind::fapp:
    case ObjTerm::Kind::gapp:
      return obj_equal(*x.a, *y.a);
  }
  return false;
}

bool term_equal(const MorTerm& x, const MorTerm& y) {
  if (x.kind != y.kind) return false;
  switch (x.kind) {
    case MorTerm::Kind::id:
      return obj_equal(*x.obj, *y.obj);
    case MorTerm::Kind::fam: {
      if (x.fam != y.fam || x.args.size() != y.args.size()) return false;
      for (std::size_t i = 0; i < x.args.size(); ++i)
        if (!obj_equal(*x.args[i], *y.args[i])) return false;
      return true;
    }
    case MorTerm::Kind::inv:
    case MorTerm::Kind::fapp:
    case MorTerm::Kind::gapp:
      return term_equal(*x.a, *y.a);
    case MorTerm::Kind::comp:
    case MorTerm::Kind::oplus:
    case MorTerm::Kind::otimes:
      return term_equal(*x.a, *y.a) && term_equal(*x.b, *y.b);
  }
  return false;
}

}  // namespace anncat
