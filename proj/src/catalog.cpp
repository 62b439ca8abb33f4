#include "anncat/catalog.hpp"

#include <map>

#include "anncat/base.hpp"

namespace anncat {

namespace {

std::vector<Equation> build_catalog() {
  std::vector<Equation> cat;
  auto add = [&](const char* id, const char* cite, const char* src) {
    cat.push_back(parse_equation(id, cite, src));
  };

  // --- additive (Pic) structure -------------------------------------
  add("2.1+", "pentagon for a+",
      "forall X Y Z T : "
      "comp(aplus[oplus(X,Y),Z,T], aplus[X,Y,oplus(Z,T)]) = "
      "comp(oplus(aplus[X,Y,Z], id(T)), comp(aplus[X,oplus(Y,Z),T], "
      "oplus(id(X), aplus[Y,Z,T])))");
  add("2.2+", "unit triangle for (0,g,d)",
      "forall X Y : "
      "comp(oplus(d[X], id(Y)), aplus[X,0,Y]) = oplus(id(X), g[Y])");
  add("c.inv", "involution c_{X,Y}.c_{Y,X} = id",
      "forall X Y : comp(c[Y,X], c[X,Y]) = id(oplus(X,Y))");
  add("2.5+", "hexagon linking a+ and c",
      "forall X Y Z : "
      "comp(aplus[Z,X,Y], comp(c[oplus(X,Y),Z], aplus[X,Y,Z])) = "
      "comp(oplus(c[X,Z], id(Y)), comp(aplus[X,Z,Y], oplus(id(X), c[Y,Z])))");

  // --- multiplicative (AU) structure --------------------------------
  add("2.1", "pentagon for a",
      "forall X Y Z T : "
      "comp(a[otimes(X,Y),Z,T], a[X,Y,otimes(Z,T)]) = "
      "comp(otimes(a[X,Y,Z], id(T)), comp(a[X,otimes(Y,Z),T], "
      "otimes(id(X), a[Y,Z,T])))");
  add("2.2", "unit triangle for (1,l,r)",
      "forall X Y : "
      "comp(otimes(r[X], id(Y)), a[X,1,Y]) = otimes(id(X), l[Y])");

  // --- Ann-2 ----------------------------------------------------------
  add("2.10", "L against nested products (left)",
      "forall A B X Y : "
      "comp(oplus(a[A,B,X], a[A,B,Y]), comp(L[A,otimes(B,X),otimes(B,Y)], "
      "otimes(id(A), L[B,X,Y]))) = "
      "comp(L[otimes(A,B),X,Y], a[A,B,oplus(X,Y)])");
  add("2.10'", "R against nested products (right)",
      "forall X Y B A : "
      "comp(R[otimes(X,B),otimes(Y,B),A], comp(otimes(R[X,Y,B], id(A)), "
      "a[oplus(X,Y),B,A])) = "
      "comp(oplus(a[X,B,A], a[Y,B,A]), R[X,Y,otimes(B,A)])");
  add("2.11", "mixed L/R associativity square",
      "forall A X Y B : "
      "comp(oplus(a[A,X,B], a[A,Y,B]), comp(L[A,otimes(X,B),otimes(Y,B)], "
      "otimes(id(A), R[X,Y,B]))) = "
      "comp(R[otimes(A,X),otimes(A,Y),B], comp(otimes(L[A,X,Y], id(B)), "
      "a[A,oplus(X,Y),B]))");
  add("2.12", "L/R interchange through v",
      "forall A B X Y : "
      "comp(v[otimes(A,X),otimes(B,X),otimes(A,Y),otimes(B,Y)], "
      "comp(oplus(R[A,B,X], R[A,B,Y]), L[oplus(A,B),X,Y])) = "
      "comp(oplus(L[A,X,Y], L[B,X,Y]), R[A,B,oplus(X,Y)])");

  // --- Ann-3 ----------------------------------------------------------
  add("2.13", "unit 1 distributes through L",
      "forall X Y : comp(oplus(l[X], l[Y]), L[1,X,Y]) = l[oplus(X,Y)]");
  add("2.13'", "unit 1 distributes through R",
      "forall X Y : comp(oplus(r[X], r[Y]), R[X,Y,1]) = r[oplus(X,Y)]");

  // --- zero isomorphisms ----------------------------------------------
  add("3.1.Lg", "defining square of Lhat against g",
      "forall A X : "
      "comp(g[otimes(A,X)], comp(oplus(Lhat[A], id(otimes(A,X))), L[A,0,X])) = "
      "otimes(id(A), g[X])");
  add("3.1.Ld", "defining square of Lhat against d",
      "forall A X : "
      "comp(d[otimes(A,X)], comp(oplus(id(otimes(A,X)), Lhat[A]), L[A,X,0])) = "
      "otimes(id(A), d[X])");
  add("3.1.Rg", "defining square of Rhat against g",
      "forall A X : "
      "comp(g[otimes(X,A)], comp(oplus(Rhat[A], id(otimes(X,A))), R[0,X,A])) = "
      "otimes(g[X], id(A))");
  add("3.1.Rd", "defining square of Rhat against d",
      "forall A X : "
      "comp(d[otimes(X,A)], comp(oplus(id(otimes(X,A)), Rhat[A]), R[X,0,A])) = "
      "otimes(d[X], id(A))");
  add("3.2.i.L", "Lhat of a sum",
      "forall X Y : "
      "comp(g[0], comp(oplus(Lhat[X], Lhat[Y]), R[X,Y,0])) = Lhat[oplus(X,Y)]");
  add("3.2.i.R", "Rhat of a sum",
      "forall X Y : "
      "comp(g[0], comp(oplus(Rhat[X], Rhat[Y]), L[0,X,Y])) = Rhat[oplus(X,Y)]");
  add("3.2.i.unit", "g and d agree at 0", "forall X : g[0] = d[0]");
  add("3.2.ii.a", "Lhat against a (products on the left)",
      "forall X Y : "
      "comp(Lhat[otimes(X,Y)], a[X,Y,0]) = comp(Lhat[X], otimes(id(X), Lhat[Y]))");
  add("3.2.ii.b", "Rhat against a (products on the right)",
      "forall X Y : "
      "comp(Rhat[Y], comp(otimes(Rhat[X], id(Y)), a[0,X,Y])) = Rhat[otimes(X,Y)]");
  add("3.2.ii.c", "mixed Lhat/Rhat square",
      "forall X Y : "
      "comp(Rhat[Y], comp(otimes(Lhat[X], id(Y)), a[X,0,Y])) = "
      "comp(Lhat[X], otimes(id(X), Rhat[Y]))");
  add("3.2.iii.L", "Lhat at the unit equals l_0", "forall X : Lhat[1] = l[0]");
  add("3.2.iii.R", "Rhat at the unit equals r_0", "forall X : Rhat[1] = r[0]");

  // --- functor compatibility (additive operation) ---------------------
  add("2.3+", "breve data against a+",
      "forall X Y Z : "
      "comp(aplus[F(X),F(Y),F(Z)], comp(oplus(id(F(X)), Fbreve[Y,Z]), "
      "Fbreve[X,oplus(Y,Z)])) = "
      "comp(oplus(Fbreve[X,Y], id(F(Z))), comp(Fbreve[oplus(X,Y),Z], "
      "F(aplus[X,Y,Z])))");
  add("2.6+", "breve data against c",
      "forall X Y : "
      "comp(c[F(X),F(Y)], Fbreve[X,Y]) = comp(Fbreve[Y,X], F(c[X,Y]))");
  add("2.4+g", "breve data against g",
      "forall X : "
      "comp(g[F(X)], comp(oplus(Fhat[], id(F(X))), Fbreve[0,X])) = F(g[X])");
  add("2.4+d", "breve data against d",
      "forall X : "
      "comp(d[F(X)], comp(oplus(id(F(X)), Fhat[]), Fbreve[X,0])) = F(d[X])");

  // --- functor compatibility (multiplicative operation) --------------
  add("2.3x", "tilde data against a",
      "forall X Y Z : "
      "comp(a[F(X),F(Y),F(Z)], comp(otimes(id(F(X)), Ftilde[Y,Z]), "
      "Ftilde[X,otimes(Y,Z)])) = "
      "comp(otimes(Ftilde[X,Y], id(F(Z))), comp(Ftilde[otimes(X,Y),Z], "
      "F(a[X,Y,Z])))");
  add("2.4x", "tilde data against l",
      "forall X : "
      "comp(l[F(X)], comp(otimes(F1[], id(F(X))), Ftilde[1,X])) = F(l[X])");
  add("2.4'x", "tilde data against r",
      "forall X : "
      "comp(r[F(X)], comp(otimes(id(F(X)), F1[]), Ftilde[X,1])) = F(r[X])");

  // --- morphisms of functors ------------------------------------------
  add("2.9+", "functor morphism against breve data",
      "forall X Y : "
      "comp(Gbreve[X,Y], alpha[oplus(X,Y)]) = "
      "comp(oplus(alpha[X], alpha[Y]), Fbreve[X,Y])");
  add("2.9x", "functor morphism against tilde data",
      "forall X Y : "
      "comp(Gtilde[X,Y], alpha[otimes(X,Y)]) = "
      "comp(otimes(alpha[X], alpha[Y]), Ftilde[X,Y])");

  // --- distributivity compatibility of a functor ----------------------
  add("2.15", "functor against L",
      "forall X Y Z : "
      "comp(L[F(X),F(Y),F(Z)], comp(otimes(id(F(X)), Fbreve[Y,Z]), "
      "Ftilde[X,oplus(Y,Z)])) = "
      "comp(oplus(Ftilde[X,Y], Ftilde[X,Z]), comp(Fbreve[otimes(X,Y),otimes(X,Z)], "
      "F(L[X,Y,Z])))");
  add("2.15'", "functor against R",
      "forall X Y Z : "
      "comp(R[F(X),F(Y),F(Z)], comp(otimes(Fbreve[X,Y], id(F(Z))), "
      "Ftilde[oplus(X,Y),Z])) = "
      "comp(oplus(Ftilde[X,Z], Ftilde[Y,Z]), comp(Fbreve[otimes(X,Z),otimes(Y,Z)], "
      "F(R[X,Y,Z])))");

  return cat;
}

const std::vector<Equation>& catalog_storage() {
  static const std::vector<Equation> cat = build_catalog();
  return cat;
}

}  // namespace

const std::vector<Equation>& full_catalog() { return catalog_storage(); }

const Equation& catalog(const std::string& id) {
  for (const auto& eq : catalog_storage())
    if (eq.id == id) return eq;
  throw Error("no catalog entry '" + id + "'");
}

std::vector<std::string> catalog_pic_ids() {
  return {"2.1+", "2.2+", "c.inv", "2.5+"};
}
std::vector<std::string> catalog_au_ids() { return {"2.1", "2.2"}; }
std::vector<std::string> catalog_ann2_ids() {
  return {"2.10", "2.10'", "2.11", "2.12"};
}
std::vector<std::string> catalog_ann3_ids() { return {"2.13", "2.13'"}; }
std::vector<std::string> catalog_zero_ids() {
  return {"3.1.Lg", "3.1.Ld",   "3.1.Rg",   "3.1.Rd",   "3.2.i.L",
          "3.2.i.R", "3.2.i.unit", "3.2.ii.a", "3.2.ii.b", "3.2.ii.c",
          "3.2.iii.L", "3.2.iii.R"};
}
std::vector<std::string> catalog_ac_functor_ids() { return {"2.3+", "2.6+"}; }
std::vector<std::string> catalog_au_functor_ids() {
  return {"2.3x", "2.4x", "2.4'x"};
}
std::vector<std::string> catalog_ann_functor_ids() {
  return {"2.3+", "2.6+", "2.3x", "2.15", "2.15'"};
}

}  // namespace anncat
