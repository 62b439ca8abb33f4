#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "anncat/base.hpp"
#include "anncat/report.hpp"
#include "anncat/term.hpp"

namespace anncat {

// A finite category as explicit tables.  Hom-sets may be empty; the
// composition table is partial exactly where composability forbids an
// entry.  Morphism equality is identifier equality.
struct FinCategory {
  struct MorData {
    std::string name;
    ObjId dom = kNoObj;
    ObjId cod = kNoObj;
  };

  std::vector<std::string> obj_names;
  std::vector<MorData> mors;
  std::vector<MorId> identity;                     // per object
  std::unordered_map<std::uint64_t, MorId> comp;   // key(g,f) -> g.f

  static std::uint64_t key(MorId g, MorId f) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(g)) << 32) |
           static_cast<std::uint32_t>(f);
  }

  int num_objects() const { return static_cast<int>(obj_names.size()); }
  int num_mors() const { return static_cast<int>(mors.size()); }

  ObjId add_object(std::string name);
  MorId add_mor(std::string name, ObjId dom, ObjId cod);
  void set_comp(MorId g, MorId f, MorId gf);

  MorId compose(MorId g, MorId f) const;  // throws NotComposable
  ObjId dom(MorId m) const { return mors[static_cast<std::size_t>(m)].dom; }
  ObjId cod(MorId m) const { return mors[static_cast<std::size_t>(m)].cod; }

  std::vector<MorId> hom(ObjId x, ObjId y) const;
};

// A bifunctor as an object table plus a morphism table.
struct Bifunctor {
  int n_obj = 0;
  std::vector<ObjId> obj;  // row-major n_obj x n_obj
  std::unordered_map<std::uint64_t, MorId> mor;

  ObjId on_obj(ObjId x, ObjId y) const {
    return obj[static_cast<std::size_t>(x) * static_cast<std::size_t>(n_obj) +
               static_cast<std::size_t>(y)];
  }
  void set_obj(ObjId x, ObjId y, ObjId z) {
    obj[static_cast<std::size_t>(x) * static_cast<std::size_t>(n_obj) +
        static_cast<std::size_t>(y)] = z;
  }
  MorId on_mor(MorId u, MorId v) const;
  void set_mor(MorId u, MorId v, MorId w) { mor[FinCategory::key(u, v)] = w; }
};

// An indexed family of morphisms with declared source/target shapes
// (object terms in `arity` variables).  Components are stored densely:
// index = mixed-radix over the object tuple.
struct NatFamily {
  std::string name;
  int arity = 0;
  ObjPtr source_shape, target_shape;
  std::vector<MorId> components;  // size n^arity
  bool iso = true;

  MorId at(const std::vector<ObjId>& tuple, int n_obj) const {
    std::size_t idx = 0;
    for (ObjId t : tuple) idx = idx * static_cast<std::size_t>(n_obj) + static_cast<std::size_t>(t);
    return components[idx];
  }
  void set(const std::vector<ObjId>& tuple, int n_obj, MorId m) {
    std::size_t idx = 0;
    for (ObjId t : tuple) idx = idx * static_cast<std::size_t>(n_obj) + static_cast<std::size_t>(t);
    components[idx] = m;
  }
  static NatFamily identity_family(std::string name, int arity,
                                   ObjPtr shape);  // src = tgt = shape
};

MorId compose(const FinCategory& C, MorId g, MorId f);

Report validate_category(const FinCategory& C);
Report validate_bifunctor(const FinCategory& C, const Bifunctor& T,
                          const std::string& label);

class CatOps;  // ops.hpp
// Checks endpoints against the declared shapes, naturality by
// enumeration over all morphism tuples, and two-sided invertibility
// when the family is flagged iso.
Report validate_nat_family(const FinCategory& C, CatOps& ops,
                           const NatFamily& fam);

// Empty family with the conventional arity and shapes of one of the
// nine constraint names (aplus, c, g, d, a, l, r, L, R).
NatFamily standard_family(const std::string& name);

}  // namespace anncat
