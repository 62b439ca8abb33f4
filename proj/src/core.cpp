#include "anncat/core.hpp"

namespace anncat {

ObjId FinCategory::add_object(std::string name) {
  obj_names.push_back(std::move(name));
  identity.push_back(kNoMor);
  return static_cast<ObjId>(obj_names.size() - 1);
}

MorId FinCategory::add_mor(std::string name, ObjId d, ObjId c) {
  mors.push_back(MorData{std::move(name), d, c});
  return static_cast<MorId>(mors.size() - 1);
}

void FinCategory::set_comp(MorId g, MorId f, MorId gf) {
  comp[key(g, f)] = gf;
}

MorId FinCategory::compose(MorId g, MorId f) const {
  if (cod(f) != dom(g))
    throw NotComposable("compose(" + mors[static_cast<std::size_t>(g)].name + ", " +
                        mors[static_cast<std::size_t>(f)].name + "): cod(f) != dom(g)");
  auto it = comp.find(key(g, f));
  if (it == comp.end())
    throw NotComposable("composition table has no entry for (" +
                        mors[static_cast<std::size_t>(g)].name + ", " +
                        mors[static_cast<std::size_t>(f)].name + ")");
  return it->second;
}

std::vector<MorId> FinCategory::hom(ObjId x, ObjId y) const {
  std::vector<MorId> out;
  for (MorId m = 0; m < num_mors(); ++m)
    if (dom(m) == x && cod(m) == y) out.push_back(m);
  return out;
}

MorId compose(const FinCategory& C, MorId g, MorId f) { return C.compose(g, f); }

MorId Bifunctor::on_mor(MorId u, MorId v) const {
  auto it = mor.find(FinCategory::key(u, v));
  if (it == mor.end()) throw NotComposable("bifunctor has no entry for morphism pair");
  return it->second;
}

NatFamily NatFamily::identity_family(std::string name, int arity, ObjPtr shape) {
  NatFamily f;
  f.name = std::move(name);
  f.arity = arity;
  f.source_shape = shape;
  f.target_shape = shape;
  f.iso = true;
  return f;
}

// ---------------------------------------------------------------------

Report validate_category(const FinCategory& C) {
  Report rep;
  rep.subject = "category";
  const int n = C.num_objects();
  const int m = C.num_mors();

  for (ObjId x = 0; x < n; ++x) {
    ++rep.checks;
    MorId ix = C.identity[static_cast<std::size_t>(x)];
    if (ix == kNoMor) {
      rep.violations.push_back({"identity-missing", C.obj_names[static_cast<std::size_t>(x)]});
      continue;
    }
    if (C.dom(ix) != x || C.cod(ix) != x)
      rep.violations.push_back({"identity-endpoints", C.obj_names[static_cast<std::size_t>(x)]});
  }

  // Totality + endpoint agreement of composition on composable pairs,
  // and both unit laws.
  for (MorId g = 0; g < m; ++g) {
    for (MorId f = 0; f < m; ++f) {
      if (C.cod(f) != C.dom(g)) continue;
      ++rep.checks;
      auto it = C.comp.find(FinCategory::key(g, f));
      if (it == C.comp.end()) {
        rep.violations.push_back({"composition-missing",
                                  "(" + C.mors[static_cast<std::size_t>(g)].name + ", " +
                                      C.mors[static_cast<std::size_t>(f)].name + ")"});
        continue;
      }
      MorId gf = it->second;
      if (C.dom(gf) != C.dom(f) || C.cod(gf) != C.cod(g))
        rep.violations.push_back({"composition-endpoints",
                                  "(" + C.mors[static_cast<std::size_t>(g)].name + ", " +
                                      C.mors[static_cast<std::size_t>(f)].name + ")"});
    }
  }
  if (!rep.violations.empty()) return rep;

  for (MorId f = 0; f < m; ++f) {
    ++rep.checks;
    if (C.compose(C.identity[static_cast<std::size_t>(C.cod(f))], f) != f)
      rep.violations.push_back({"left-unit", C.mors[static_cast<std::size_t>(f)].name});
    if (C.compose(f, C.identity[static_cast<std::size_t>(C.dom(f))]) != f)
      rep.violations.push_back({"right-unit", C.mors[static_cast<std::size_t>(f)].name});
  }

  // Associativity over all composable triples.
  for (MorId h = 0; h < m; ++h)
    for (MorId g = 0; g < m; ++g) {
      if (C.cod(g) != C.dom(h)) continue;
      for (MorId f = 0; f < m; ++f) {
        if (C.cod(f) != C.dom(g)) continue;
        ++rep.checks;
        if (C.compose(h, C.compose(g, f)) != C.compose(C.compose(h, g), f))
          rep.violations.push_back(
              {"associativity", "(" + C.mors[static_cast<std::size_t>(h)].name + ", " +
                                    C.mors[static_cast<std::size_t>(g)].name + ", " +
                                    C.mors[static_cast<std::size_t>(f)].name + ")"});
      }
    }
  return rep;
}

Report validate_bifunctor(const FinCategory& C, const Bifunctor& T,
                          const std::string& label) {
  Report rep;
  rep.subject = label;
  const int n = C.num_objects();
  const int m = C.num_mors();
  if (T.n_obj != n || static_cast<int>(T.obj.size()) != n * n) {
    rep.violations.push_back({"object-table-shape", label});
    return rep;
  }

  // Endpoints and identity preservation.
  for (MorId u = 0; u < m; ++u)
    for (MorId v = 0; v < m; ++v) {
      ++rep.checks;
      auto it = T.mor.find(FinCategory::key(u, v));
      if (it == T.mor.end()) {
        rep.violations.push_back({"mor-table-missing",
                                  "(" + C.mors[static_cast<std::size_t>(u)].name + ", " +
                                      C.mors[static_cast<std::size_t>(v)].name + ")"});
        continue;
      }
      MorId w = it->second;
      if (C.dom(w) != T.on_obj(C.dom(u), C.dom(v)) ||
          C.cod(w) != T.on_obj(C.cod(u), C.cod(v)))
        rep.violations.push_back({"mor-endpoints",
                                  "(" + C.mors[static_cast<std::size_t>(u)].name + ", " +
                                      C.mors[static_cast<std::size_t>(v)].name + ")"});
    }
  if (!rep.violations.empty()) return rep;

  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y) {
      ++rep.checks;
      if (T.on_mor(C.identity[static_cast<std::size_t>(x)], C.identity[static_cast<std::size_t>(y)]) !=
          C.identity[static_cast<std::size_t>(T.on_obj(x, y))])
        rep.violations.push_back({"identity-preservation",
                                  "(" + C.obj_names[static_cast<std::size_t>(x)] + ", " +
                                      C.obj_names[static_cast<std::size_t>(y)] + ")"});
    }

  // Interchange: T(u'u, v'v) = T(u',v') . T(u,v) over composable pairs.
  for (MorId u2 = 0; u2 < m; ++u2)
    for (MorId u1 = 0; u1 < m; ++u1) {
      if (C.cod(u1) != C.dom(u2)) continue;
      for (MorId v2 = 0; v2 < m; ++v2)
        for (MorId v1 = 0; v1 < m; ++v1) {
          if (C.cod(v1) != C.dom(v2)) continue;
          ++rep.checks;
          MorId lhs = T.on_mor(C.compose(u2, u1), C.compose(v2, v1));
          MorId rhs = C.compose(T.on_mor(u2, v2), T.on_mor(u1, v1));
          if (lhs != rhs) {
            rep.violations.push_back(
                {"interchange", "(" + C.mors[static_cast<std::size_t>(u2)].name + "." +
                                    C.mors[static_cast<std::size_t>(u1)].name + ", " +
                                    C.mors[static_cast<std::size_t>(v2)].name + "." +
                                    C.mors[static_cast<std::size_t>(v1)].name + ")"});
            if (rep.violations.size() > 16) return rep;
          }
        }
    }
  return rep;
}

}  // namespace anncat
