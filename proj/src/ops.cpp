#include "anncat/ops.hpp"

#include <array>

namespace anncat {

NatFamily* AnnCat::family(const std::string& fam_name) {
  if (fam_name == "aplus") return &plus.aplus;
  if (fam_name == "c") return &plus.c;
  if (fam_name == "g") return &plus.g;
  if (fam_name == "d") return &plus.d;
  if (fam_name == "a") return &times.a;
  if (fam_name == "l") return &times.l;
  if (fam_name == "r") return &times.r;
  if (fam_name == "L") return &L;
  if (fam_name == "R") return &R;
  return nullptr;
}

TableOps::TableOps(const FinCategory& cat, const PicData* plus,
                   const MonoidalData* times, const NatFamily* L,
                   const NatFamily* R)
    : cat_(cat), plus_(plus), times_(times), L_(L), R_(R) {
  const int n = cat_.num_objects();
  objs_.resize(static_cast<std::size_t>(n));
  for (ObjId x = 0; x < n; ++x) objs_[static_cast<std::size_t>(x)] = x;

  // Two-sided inverses; in a category an inverse is unique if it exists.
  const int m = cat_.num_mors();
  inverse_.assign(static_cast<std::size_t>(m), kNoMor);
  for (MorId f = 0; f < m; ++f) {
    for (MorId g : cat_.hom(cat_.cod(f), cat_.dom(f))) {
      if (cat_.compose(g, f) == cat_.identity[static_cast<std::size_t>(cat_.dom(f))] &&
          cat_.compose(f, g) == cat_.identity[static_cast<std::size_t>(cat_.cod(f))]) {
        inverse_[static_cast<std::size_t>(f)] = g;
        break;
      }
    }
  }
  if (plus_) {
    std::size_t n4 = 1;
    for (int i = 0; i < 4; ++i) n4 *= static_cast<std::size_t>(n);
    v_cache_.assign(n4, kNoMor);
  }
}

std::string TableOps::obj_name(ObjId x) {
  return cat_.obj_names[static_cast<std::size_t>(x)];
}
std::string TableOps::mor_name(MorId m) {
  return cat_.mors[static_cast<std::size_t>(m)].name;
}

ObjId TableOps::zero() {
  if (!plus_) throw MissingStructure("no additive structure");
  return plus_->zero;
}
ObjId TableOps::one() {
  if (!times_) throw MissingStructure("no multiplicative structure");
  return times_->one;
}
ObjId TableOps::obj_plus(ObjId x, ObjId y) {
  if (!plus_) throw MissingStructure("no additive structure");
  return plus_->plus.on_obj(x, y);
}
ObjId TableOps::obj_times(ObjId x, ObjId y) {
  if (!times_) throw MissingStructure("no multiplicative structure");
  return times_->times.on_obj(x, y);
}
MorId TableOps::mor_plus(MorId u, MorId v) {
  if (!plus_) throw MissingStructure("no additive structure");
  return plus_->plus.on_mor(u, v);
}
MorId TableOps::mor_times(MorId u, MorId v) {
  if (!times_) throw MissingStructure("no multiplicative structure");
  return times_->times.on_mor(u, v);
}

MorId TableOps::invert(MorId m) {
  MorId inv = inverse_[static_cast<std::size_t>(m)];
  if (inv == kNoMor) throw NoInverse("no inverse for " + mor_name(m));
  return inv;
}

std::optional<std::vector<MorId>> TableOps::homset(ObjId x, ObjId y) {
  return cat_.hom(x, y);
}

void TableOps::set_zero_isos(std::vector<MorId> lhat, std::vector<MorId> rhat) {
  lhat_ = std::move(lhat);
  rhat_ = std::move(rhat);
}

MorId TableOps::constraint(Fam fam, std::span<const ObjId> args) {
  const int n = cat_.num_objects();
  auto pic_at = [&](const NatFamily& f) {
    std::vector<ObjId> t(args.begin(), args.end());
    return f.at(t, n);
  };
  switch (fam) {
    case Fam::aplus:
      if (!plus_) throw MissingStructure("aplus: no additive structure");
      return pic_at(plus_->aplus);
    case Fam::c:
      if (!plus_) throw MissingStructure("c: no additive structure");
      return pic_at(plus_->c);
    case Fam::g:
      if (!plus_) throw MissingStructure("g: no additive structure");
      return pic_at(plus_->g);
    case Fam::d:
      if (!plus_) throw MissingStructure("d: no additive structure");
      return pic_at(plus_->d);
    case Fam::a:
      if (!times_) throw MissingStructure("a: no multiplicative structure");
      return pic_at(times_->a);
    case Fam::l:
      if (!times_) throw MissingStructure("l: no multiplicative structure");
      return pic_at(times_->l);
    case Fam::r:
      if (!times_) throw MissingStructure("r: no multiplicative structure");
      return pic_at(times_->r);
    case Fam::L:
      if (!L_) throw MissingStructure("L: no distributivity data");
      return pic_at(*L_);
    case Fam::R:
      if (!R_) throw MissingStructure("R: no distributivity data");
      return pic_at(*R_);
    case Fam::Lhat:
      if (lhat_.empty()) throw MissingStructure("Lhat not derived yet");
      return lhat_[static_cast<std::size_t>(args[0])];
    case Fam::Rhat:
      if (rhat_.empty()) throw MissingStructure("Rhat not derived yet");
      return rhat_[static_cast<std::size_t>(args[0])];
    case Fam::v: {
      if (!plus_) throw MissingStructure("v: no additive structure");
      std::size_t idx = 0;
      for (ObjId t : args) idx = idx * static_cast<std::size_t>(n) + static_cast<std::size_t>(t);
      {
        std::lock_guard<std::mutex> lock(v_mu_);
        if (v_cache_[idx] != kNoMor) return v_cache_[idx];
      }
      MorId m = build_v_component(*this, args[0], args[1], args[2], args[3]);
      std::lock_guard<std::mutex> lock(v_mu_);
      v_cache_[idx] = m;
      return m;
    }
    default:
      throw MissingStructure(std::string("family '") + fam_name(fam) +
                             "' is only available in functor contexts");
  }
}

// v_{A,B,C,D} : (A+B)+(C+D) -> (A+C)+(B+D), the fixed composite over
// a+, c and identities:
//   inv(a+_{A,B,C+D}) ; (id_A + a+_{B,C,D}) ; (id_A + (c_{B,C} + id_D)) ;
//   (id_A + inv(a+_{C,B,D})) ; a+_{A,C,B+D}
MorId build_v_component(CatOps& ops, ObjId A, ObjId B, ObjId C, ObjId D) {
  const std::array<ObjId, 3> t1{A, B, ops.obj_plus(C, D)};
  MorId s1 = ops.invert(ops.constraint(Fam::aplus, t1));
  const std::array<ObjId, 3> t2{B, C, D};
  MorId s2 = ops.mor_plus(ops.identity(A), ops.constraint(Fam::aplus, t2));
  const std::array<ObjId, 2> tc{B, C};
  MorId s3 = ops.mor_plus(
      ops.identity(A),
      ops.mor_plus(ops.constraint(Fam::c, tc), ops.identity(D)));
  const std::array<ObjId, 3> t4{C, B, D};
  MorId s4 = ops.mor_plus(ops.identity(A),
                          ops.invert(ops.constraint(Fam::aplus, t4)));
  const std::array<ObjId, 3> t5{A, C, ops.obj_plus(B, D)};
  MorId s5 = ops.constraint(Fam::aplus, t5);
  return ops.compose(s5, ops.compose(s4, ops.compose(s3, ops.compose(s2, s1))));
}

}  // namespace anncat
