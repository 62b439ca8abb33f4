#include "anncat/structures.hpp"

#include <array>

#include "anncat/catalog.hpp"

namespace anncat {

namespace {

void run_ids(AxiomReport* out, CatOps& ops, const std::vector<std::string>& ids,
             const CheckOptions& opts) {
  for (const auto& id : ids)
    out->diagrams.emplace_back(id, check_equation(ops, catalog(id), opts));
}

void run_functor_ids(AxiomReport* out, const EvalCtx& ctx,
                     const std::vector<std::string>& ids,
                     const CheckOptions& opts) {
  CheckOptions o = opts;
  o.bounded = opts.bounded || ctx.src->bounded() || ctx.cat->bounded();
  for (const auto& id : ids)
    out->diagrams.emplace_back(
        id, check_equation(ctx, catalog(id), ctx.src->objects(), o));
}

}  // namespace

AxiomReport check_au(const FinCategory& C, const MonoidalData& M, CatOps& ops,
                     const CheckOptions& opts) {
  AxiomReport rep;
  rep.aux.emplace_back("validate/bifunctor(x)",
                       validate_bifunctor(C, M.times, "bifunctor (x)"));
  for (const NatFamily* f : {&M.a, &M.l, &M.r})
    rep.aux.emplace_back("validate/" + f->name, validate_nat_family(C, ops, *f));
  run_ids(&rep, ops, catalog_au_ids(), opts);
  return rep;
}

AxiomReport check_acu(const FinCategory& C, const PicData& P, CatOps& ops,
                      const CheckOptions& opts) {
  AxiomReport rep;
  rep.aux.emplace_back("validate/bifunctor(+)",
                       validate_bifunctor(C, P.plus, "bifunctor (+)"));
  for (const NatFamily* f : {&P.aplus, &P.c, &P.g, &P.d})
    rep.aux.emplace_back("validate/" + f->name, validate_nat_family(C, ops, *f));
  run_ids(&rep, ops, catalog_pic_ids(), opts);
  return rep;
}

AxiomReport check_pic(const FinCategory& C, const PicData& P, CatOps& ops,
                      const CheckOptions& opts) {
  AxiomReport rep = check_acu(C, P, ops, opts);

  Report inv_obj;
  inv_obj.subject = "(+)-invertibility of objects";
  for (ObjId x : ops.objects()) {
    ++inv_obj.checks;
    bool found = false;
    std::string witness;
    for (ObjId y : ops.objects()) {
      ObjId s = P.plus.on_obj(x, y);
      // X (+) Y isomorphic to 0: look for any iso in Hom(s, 0).
      for (MorId m : C.hom(s, P.zero)) {
        try {
          ops.invert(m);
          found = true;
          witness = C.obj_names[static_cast<std::size_t>(y)];
          break;
        } catch (const NoInverse&) {
        }
      }
      if (found) break;
    }
    if (!found)
      inv_obj.violations.push_back(
          {"no-plus-inverse", C.obj_names[static_cast<std::size_t>(x)]});
  }
  rep.aux.emplace_back("pic/object-inverses", std::move(inv_obj));

  Report inv_mor;
  inv_mor.subject = "invertibility of morphisms";
  for (MorId m = 0; m < C.num_mors(); ++m) {
    ++inv_mor.checks;
    try {
      ops.invert(m);
    } catch (const NoInverse&) {
      inv_mor.violations.push_back(
          {"non-iso-morphism", C.mors[static_cast<std::size_t>(m)].name});
    }
  }
  rep.aux.emplace_back("pic/morphism-inverses", std::move(inv_mor));
  return rep;
}

AxiomReport check_ac_functor(const FunctorData& F, const CheckOptions& opts) {
  AxiomReport rep;
  EvalCtx ctx = EvalCtx::functor(F);
  run_functor_ids(&rep, ctx, catalog_ac_functor_ids(), opts);
  if (F.hat != kNoMor)
    run_functor_ids(&rep, ctx, {"2.4+g", "2.4+d"}, opts);
  return rep;
}

AxiomReport check_au_functor(const FunctorData& F, const CheckOptions& opts) {
  AxiomReport rep;
  EvalCtx ctx = EvalCtx::functor(F);
  run_functor_ids(&rep, ctx, {"2.3x"}, opts);
  if (F.one != kNoMor) run_functor_ids(&rep, ctx, {"2.4x", "2.4'x"}, opts);
  return rep;
}

AxiomReport check_monoidal_morphism(const FunctorData& F, const FunctorData& G,
                                    const std::function<MorId(ObjId)>& alpha,
                                    bool additive, const CheckOptions& opts) {
  AxiomReport rep;
  EvalCtx ctx = EvalCtx::functor(F);
  ctx.G = &G;
  ctx.alpha = &alpha;
  run_functor_ids(&rep, ctx, {additive ? "2.9+" : "2.9x"}, opts);
  return rep;
}

FunctorData compose_monoidal_functors(const FunctorData& G, const FunctorData& F) {
  if (F.dst != G.src)
    throw PreconditionFailed("compose_monoidal_functors: middle categories differ");
  FunctorData GF;
  GF.name = G.name + "." + F.name;
  GF.src = F.src;
  GF.dst = G.dst;
  auto fobj = F.obj, gobj = G.obj;
  auto fmor = F.mor, gmor = G.mor;
  GF.obj = [fobj, gobj](ObjId x) { return gobj(fobj(x)); };
  GF.mor = [fmor, gmor](MorId m) { return gmor(fmor(m)); };
  // (2.7): widetilde(GF)_{X,Y} = Gtilde_{FX,FY} . G(Ftilde_{X,Y})
  if (F.breve && G.breve) {
    auto fb = F.breve;
    auto gb = G.breve;
    CatOps* dst = G.dst;
    GF.breve = [fobj, gmor, fb, gb, dst](ObjId x, ObjId y) {
      return dst->compose(gb(fobj(x), fobj(y)), gmor(fb(x, y)));
    };
  }
  if (F.tilde && G.tilde) {
    auto ft = F.tilde;
    auto gt = G.tilde;
    CatOps* dst = G.dst;
    GF.tilde = [fobj, gmor, ft, gt, dst](ObjId x, ObjId y) {
      return dst->compose(gt(fobj(x), fobj(y)), gmor(ft(x, y)));
    };
  }
  // (2.8): (GF)_1 = G_1 . G(F_1), and the same pattern at 0.
  if (F.one != kNoMor && G.one != kNoMor)
    GF.one = G.dst->compose(G.one, G.mor(F.one));
  if (F.hat != kNoMor && G.hat != kNoMor)
    GF.hat = G.dst->compose(G.hat, G.mor(F.hat));
  return GF;
}

FunctorData sum_functors(const FunctorData& F, const FunctorData& G) {
  if (F.src != G.src || F.dst != G.dst)
    throw PreconditionFailed("sum_functors: mismatched categories");
  if (!F.breve || !G.breve)
    throw PreconditionFailed("sum_functors: both summands need breve data");
  FunctorData S;
  S.name = "(" + F.name + "+" + G.name + ")";
  S.src = F.src;
  S.dst = F.dst;
  CatOps* dst = F.dst;
  auto fobj = F.obj, gobj = G.obj;
  auto fmor = F.mor, gmor = G.mor;
  S.obj = [fobj, gobj, dst](ObjId x) { return dst->obj_plus(fobj(x), gobj(x)); };
  S.mor = [fmor, gmor, dst](MorId m) { return dst->mor_plus(fmor(m), gmor(m)); };
  auto fb = F.breve, gb = G.breve;
  S.breve = [fobj, gobj, fb, gb, dst](ObjId x, ObjId y) {
    MorId vv = build_v_component(*dst, fobj(x), fobj(y), gobj(x), gobj(y));
    return dst->compose(vv, dst->mor_plus(fb(x, y), gb(x, y)));
  };
  return S;
}

NatFamily build_v(CatOps& ops) {
  const int n = static_cast<int>(ops.objects().size());
  NatFamily f;
  f.name = "v";
  f.arity = 4;
  f.iso = true;
  {
    auto mk = [](int i) {
      auto o = std::make_shared<ObjTerm>();
      o->kind = ObjTerm::Kind::var;
      o->var = i;
      return ObjPtr(o);
    };
    auto bin = [](ObjPtr a, ObjPtr b) {
      auto o = std::make_shared<ObjTerm>();
      o->kind = ObjTerm::Kind::oplus;
      o->a = std::move(a);
      o->b = std::move(b);
      return ObjPtr(o);
    };
    f.source_shape = bin(bin(mk(0), mk(1)), bin(mk(2), mk(3)));
    f.target_shape = bin(bin(mk(0), mk(2)), bin(mk(1), mk(3)));
  }
  std::size_t total = 1;
  for (int i = 0; i < 4; ++i) total *= static_cast<std::size_t>(n);
  f.components.resize(total);
  std::vector<ObjId> t(4);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    for (int i = 3; i >= 0; --i) {
      t[static_cast<std::size_t>(i)] =
          ops.objects()[rest % static_cast<std::size_t>(n)];
      rest /= static_cast<std::size_t>(n);
    }
    f.components[idx] = build_v_component(ops, t[0], t[1], t[2], t[3]);
  }
  return f;
}

FunctorData make_LA(CatOps& ops, ObjId A) {
  FunctorData F;
  F.name = "L^" + ops.obj_name(A);
  F.src = &ops;
  F.dst = &ops;
  CatOps* o = &ops;
  F.obj = [o, A](ObjId x) { return o->obj_times(A, x); };
  F.mor = [o, A](MorId u) { return o->mor_times(o->identity(A), u); };
  F.breve = [o, A](ObjId x, ObjId y) {
    const std::array<ObjId, 3> args{A, x, y};
    return o->constraint(Fam::L, args);
  };
  return F;
}

FunctorData make_RA(CatOps& ops, ObjId A) {
  FunctorData F;
  F.name = "R^" + ops.obj_name(A);
  F.src = &ops;
  F.dst = &ops;
  CatOps* o = &ops;
  F.obj = [o, A](ObjId x) { return o->obj_times(x, A); };
  F.mor = [o, A](MorId u) { return o->mor_times(u, o->identity(A)); };
  F.breve = [o, A](ObjId x, ObjId y) {
    const std::array<ObjId, 3> args{x, y, A};
    return o->constraint(Fam::R, args);
  };
  return F;
}

}  // namespace anncat
