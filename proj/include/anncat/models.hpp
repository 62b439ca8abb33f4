#pragma once

#include <map>
#include <string>
#include <vector>

#include "anncat/ops.hpp"

namespace anncat {

// A finite ring presented by tables.
struct RingTable {
  std::string name;
  std::vector<std::string> elems;
  std::vector<int> add, mul;  // row-major n x n
  std::vector<int> neg;
  int zero = 0, one = 0;

  int n() const { return static_cast<int>(elems.size()); }
  int plus(int x, int y) const { return add[static_cast<std::size_t>(x * n() + y)]; }
  int times(int x, int y) const { return mul[static_cast<std::size_t>(x * n() + y)]; }

  static RingTable zmod(int n);          // Z/n
  static RingTable f2_t_mod_t2();        // F2[t]/(t^2)
};

// A finite abelian group presented by a table.
struct GroupTable {
  std::string name;
  std::vector<std::string> elems;
  std::vector<int> add;
  int zero = 0;

  int n() const { return static_cast<int>(elems.size()); }
  int plus(int x, int y) const { return add[static_cast<std::size_t>(x * n() + y)]; }
  int neg(int x) const;

  static GroupTable zmod(int n);
};

// An (R,R)-bimodule M: parameter space for the skeletal one-object-per-
// ring-element models whose endomorphisms form M.
struct BimoduleData {
  RingTable R;
  GroupTable M;
  std::vector<int> left, right;  // R x M -> M  and  M x R -> M

  int act_l(int r, int m) const {
    return left[static_cast<std::size_t>(r * M.n() + m)];
  }
  int act_r(int m, int r) const {
    return right[static_cast<std::size_t>(m * M.n() + r)];
  }

  static BimoduleData regular(const RingTable& R);  // M = (R,+) with ring actions
};

// Twisting data: per constraint family, a table of M-values indexed by
// object tuples (dense, size n^arity); absent family = zero cochain.
// Validity is decided by the verifier on the generated category.
struct CochainSet {
  std::map<std::string, std::vector<int>> values;

  int at(const std::string& fam, const std::vector<int>& tuple, int n) const;
  bool trivial() const;
};

// Discrete Ann-category D(R): objects = elements, identity morphisms
// only, both operations from the ring, every constraint the identity.
AnnCat from_ring(const RingTable& R);  // throws InvalidRing

// Skeletal candidate B(R,M) twisted by T: objects = R, Hom(x,x) = M,
// (x,m)+(y,n) = (x+y, m+n), (x,m)(y,n) = (xy, x.n + m.y), constraint
// components carry the cochain values.
AnnCat from_bimodule(const BimoduleData& B, const CochainSet& T = {});

// Skeletal Pic candidate: objects = M, Hom(x,x) = N, a+ twisted by h,
// c twisted by cc, g = d = id.
struct PicModel {
  std::string name;
  FinCategory cat;
  PicData plus;
};
PicModel pic_from_cocycle(const GroupTable& M, const GroupTable& N,
                          const std::vector<int>& h, const std::vector<int>& cc);

// Exhaustive search for all cochain sets over the named families whose
// generated category passes the requested verifier.  Results come in
// canonical (odometer) order and always include the zero set when it
// passes.
std::vector<CochainSet> search_constraint_families(
    const BimoduleData& B, const std::vector<std::string>& names,
    unsigned long long bound);
std::vector<std::pair<std::vector<int>, std::vector<int>>> search_pic_cocycles(
    const GroupTable& M, const GroupTable& N, unsigned long long bound);

}  // namespace anncat
