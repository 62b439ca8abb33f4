#include "anncat/eval.hpp"
#include "anncat/ops.hpp"

namespace anncat {

namespace {

// Functorial action of an object shape on a tuple of morphisms.
MorId shape_on_mors(CatOps& ops, const ObjTerm& shape,
                    const std::vector<MorId>& mors) {
  switch (shape.kind) {
    case ObjTerm::Kind::var:
      return mors[static_cast<std::size_t>(shape.var)];
    case ObjTerm::Kind::zero:
      return ops.identity(ops.zero());
    case ObjTerm::Kind::one:
      return ops.identity(ops.one());
    case ObjTerm::Kind::oplus:
      return ops.mor_plus(shape_on_mors(ops, *shape.a, mors),
                          shape_on_mors(ops, *shape.b, mors));
    case ObjTerm::Kind::otimes:
      return ops.mor_times(shape_on_mors(ops, *shape.a, mors),
                           shape_on_mors(ops, *shape.b, mors));
    default:
      throw ShapeMismatch("functor node in a family shape");
  }
}

ObjId shape_on_objs(CatOps& ops, const ObjTerm& shape,
                    const std::vector<ObjId>& objs) {
  EvalCtx ctx = EvalCtx::plain(ops);
  return eval_obj(ctx, shape, objs);
}

std::string tuple_name(CatOps& ops, const std::vector<ObjId>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += ops.obj_name(t[i]);
  }
  return s + ")";
}

}  // namespace

Report validate_nat_family(const FinCategory& C, CatOps& ops,
                           const NatFamily& fam) {
  Report rep;
  rep.subject = "family " + fam.name;
  const int n = C.num_objects();
  const int k = fam.arity;
  std::size_t total = 1;
  for (int i = 0; i < k; ++i) total *= static_cast<std::size_t>(n);
  if (fam.components.size() != total) {
    rep.violations.push_back({"component-table-size", fam.name});
    return rep;
  }

  // Endpoints against the declared shapes, plus invertibility.
  std::vector<ObjId> tuple(static_cast<std::size_t>(k));
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    for (int i = k - 1; i >= 0; --i) {
      tuple[static_cast<std::size_t>(i)] = static_cast<ObjId>(rest % static_cast<std::size_t>(n));
      rest /= static_cast<std::size_t>(n);
    }
    ++rep.checks;
    MorId m = fam.components[idx];
    ObjId want_dom = shape_on_objs(ops, *fam.source_shape, tuple);
    ObjId want_cod = shape_on_objs(ops, *fam.target_shape, tuple);
    if (C.dom(m) != want_dom || C.cod(m) != want_cod) {
      throw ShapeMismatch(fam.name + " component at " + tuple_name(ops, tuple) +
                          " has endpoints " +
                          C.obj_names[static_cast<std::size_t>(C.dom(m))] + " -> " +
                          C.obj_names[static_cast<std::size_t>(C.cod(m))] +
                          ", declared shapes give " +
                          C.obj_names[static_cast<std::size_t>(want_dom)] + " -> " +
                          C.obj_names[static_cast<std::size_t>(want_cod)]);
    }
    if (fam.iso) {
      try {
        ops.invert(m);
      } catch (const NoInverse&) {
        rep.violations.push_back({"not-iso", fam.name + tuple_name(ops, tuple)});
      }
    }
  }

  // Naturality over every k-tuple of morphisms.
  const int nm = C.num_mors();
  std::size_t mor_total = 1;
  for (int i = 0; i < k; ++i) mor_total *= static_cast<std::size_t>(nm);
  std::vector<MorId> mors(static_cast<std::size_t>(k));
  std::vector<ObjId> doms(static_cast<std::size_t>(k)), cods(static_cast<std::size_t>(k));
  for (std::size_t idx = 0; idx < mor_total; ++idx) {
    std::size_t rest = idx;
    for (int i = k - 1; i >= 0; --i) {
      mors[static_cast<std::size_t>(i)] = static_cast<MorId>(rest % static_cast<std::size_t>(nm));
      rest /= static_cast<std::size_t>(nm);
    }
    ++rep.checks;
    for (int i = 0; i < k; ++i) {
      doms[static_cast<std::size_t>(i)] = C.dom(mors[static_cast<std::size_t>(i)]);
      cods[static_cast<std::size_t>(i)] = C.cod(mors[static_cast<std::size_t>(i)]);
    }
    MorId top = fam.at(cods, n);
    MorId bot = fam.at(doms, n);
    MorId src_act = shape_on_mors(ops, *fam.source_shape, mors);
    MorId tgt_act = shape_on_mors(ops, *fam.target_shape, mors);
    if (C.compose(top, src_act) != C.compose(tgt_act, bot)) {
      std::string w = fam.name + " at (";
      for (int i = 0; i < k; ++i) {
        if (i) w += ",";
        w += C.mors[static_cast<std::size_t>(mors[static_cast<std::size_t>(i)])].name;
      }
      rep.violations.push_back({"naturality", w + ")"});
      if (rep.violations.size() > 8) return rep;
    }
  }
  return rep;
}

Report validate_functor(const FunctorData& F) {
  Report rep;
  rep.subject = "functor " + F.name;
  CatOps& S = *F.src;
  CatOps& D = *F.dst;
  for (ObjId x : S.objects()) {
    ++rep.checks;
    if (D.dom(F.mor(S.identity(x))) != F.obj(x) ||
        F.mor(S.identity(x)) != D.identity(F.obj(x)))
      rep.violations.push_back({"identity-preservation", S.obj_name(x)});
  }
  // Composition preservation over homs among the listed objects.
  for (ObjId x : S.objects())
    for (ObjId y : S.objects()) {
      auto hxy = S.homset(x, y);
      if (!hxy) continue;
      for (ObjId z : S.objects()) {
        auto hyz = S.homset(y, z);
        if (!hyz) continue;
        for (MorId f : *hxy)
          for (MorId g : *hyz) {
            ++rep.checks;
            if (F.mor(S.compose(g, f)) != D.compose(F.mor(g), F.mor(f))) {
              rep.violations.push_back(
                  {"composition-preservation",
                   "(" + S.mor_name(g) + ", " + S.mor_name(f) + ")"});
              if (rep.violations.size() > 8) return rep;
            }
          }
      }
    }
  return rep;
}

}  // namespace anncat
