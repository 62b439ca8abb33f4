#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "anncat/core.hpp"

namespace anncat {

// The uniform surface every coherence check runs on.  Table-backed
// categories, the lazy word category of the strictification, and the
// End-category all implement it; ids are stable for the lifetime of the
// instance.  Implementations that intern lazily are internally locked,
// so checks may be partitioned across threads.
class CatOps {
 public:
  virtual ~CatOps() = default;

  // Object universe used for equation enumeration.  For lazy categories
  // this is a declared probe set, and checks against it are "bounded".
  virtual const std::vector<ObjId>& objects() const = 0;
  virtual bool bounded() const { return false; }

  virtual std::string obj_name(ObjId x) = 0;
  virtual std::string mor_name(MorId m) = 0;

  virtual ObjId zero() = 0;  // throws MissingStructure when absent
  virtual ObjId one() = 0;
  virtual ObjId obj_plus(ObjId x, ObjId y) = 0;
  virtual ObjId obj_times(ObjId x, ObjId y) = 0;

  virtual ObjId dom(MorId m) = 0;
  virtual ObjId cod(MorId m) = 0;
  virtual MorId identity(ObjId x) = 0;
  virtual MorId compose(MorId g, MorId f) = 0;
  virtual MorId mor_plus(MorId u, MorId v) = 0;
  virtual MorId mor_times(MorId u, MorId v) = 0;
  virtual MorId invert(MorId m) = 0;

  virtual MorId constraint(Fam fam, std::span<const ObjId> args) = 0;

  // Hom-set enumeration; nullopt when the implementation cannot
  // enumerate (e.g. functor categories over an infinite base).
  virtual std::optional<std::vector<MorId>> homset(ObjId x, ObjId y) = 0;
};

// Monoidal halves of an Ann bundle.  The additive half is a Pic
// candidate (zero object, a+, c, g, d); the multiplicative half is an
// AU candidate (unit object, a, l, r).
struct PicData {
  Bifunctor plus;
  ObjId zero = kNoObj;
  NatFamily aplus, c, g, d;
};

struct MonoidalData {
  Bifunctor times;
  ObjId one = kNoObj;
  NatFamily a, l, r;
};

struct AnnCat {
  std::string name;
  FinCategory cat;
  PicData plus;
  MonoidalData times;
  NatFamily L, R;  // distributivity: L_{A,X,Y}, R_{X,Y,A}

  std::vector<const NatFamily*> families() const {
    return {&plus.aplus, &plus.c, &plus.g, &plus.d, &times.a,
            &times.l,    &times.r, &L,      &R};
  }
  NatFamily* family(const std::string& fam_name);
};

// Table-backed ops over a finite category plus whatever structure is
// present.  Inverses are precomputed; v components are derived from
// a+ and c on demand and cached.
class TableOps : public CatOps {
 public:
  TableOps(const FinCategory& cat, const PicData* plus,
           const MonoidalData* times, const NatFamily* L, const NatFamily* R);
  explicit TableOps(const AnnCat& A)
      : TableOps(A.cat, &A.plus, &A.times, &A.L, &A.R) {}
  TableOps(const FinCategory& cat, const PicData& plus)
      : TableOps(cat, &plus, nullptr, nullptr, nullptr) {}

  const std::vector<ObjId>& objects() const override { return objs_; }
  std::string obj_name(ObjId x) override;
  std::string mor_name(MorId m) override;
  ObjId zero() override;
  ObjId one() override;
  ObjId obj_plus(ObjId x, ObjId y) override;
  ObjId obj_times(ObjId x, ObjId y) override;
  ObjId dom(MorId m) override { return cat_.dom(m); }
  ObjId cod(MorId m) override { return cat_.cod(m); }
  MorId identity(ObjId x) override { return cat_.identity[static_cast<std::size_t>(x)]; }
  MorId compose(MorId g, MorId f) override { return cat_.compose(g, f); }
  MorId mor_plus(MorId u, MorId v) override;
  MorId mor_times(MorId u, MorId v) override;
  MorId invert(MorId m) override;
  MorId constraint(Fam fam, std::span<const ObjId> args) override;
  std::optional<std::vector<MorId>> homset(ObjId x, ObjId y) override;

  const FinCategory& cat() const { return cat_; }
  const PicData* pic() const { return plus_; }
  const MonoidalData* mono() const { return times_; }

  bool has_zero_isos() const { return !lhat_.empty(); }
  void set_zero_isos(std::vector<MorId> lhat, std::vector<MorId> rhat);
  MorId lhat(ObjId x) const { return lhat_.at(static_cast<std::size_t>(x)); }
  MorId rhat(ObjId x) const { return rhat_.at(static_cast<std::size_t>(x)); }

 private:
  const FinCategory& cat_;
  const PicData* plus_;
  const MonoidalData* times_;
  const NatFamily* L_;
  const NatFamily* R_;
  std::vector<ObjId> objs_;
  std::vector<MorId> inverse_;          // kNoMor when not iso
  std::vector<MorId> v_cache_;          // n^4, kNoMor = not yet computed
  std::vector<MorId> lhat_, rhat_;      // set by derive_zero_isos
  std::mutex v_mu_;
};

// A functor between two ops contexts, with optional monoidal
// compatibility data.  Maps are closures so the same type covers table
// functors, L^A, eval/inclusion of the strictification, and Lambda.
struct FunctorData {
  std::string name;
  CatOps* src = nullptr;
  CatOps* dst = nullptr;
  std::function<ObjId(ObjId)> obj;
  std::function<MorId(MorId)> mor;
  // breve_{X,Y}: F(X (+) Y) -> FX (+)' FY ; tilde for (x).
  std::function<MorId(ObjId, ObjId)> breve;
  std::function<MorId(ObjId, ObjId)> tilde;
  MorId hat = kNoMor;  // F0 -> 0'
  MorId one = kNoMor;  // F1 -> 1'
};

Report validate_functor(const FunctorData& F);

// One component of the canonical interchange v_{A,B,C,D} built from
// a+, c and identities.
MorId build_v_component(CatOps& ops, ObjId A, ObjId B, ObjId C, ObjId D);

}  // namespace anncat
