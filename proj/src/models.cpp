#include "anncat/models.hpp"

#include <functional>
#include <numeric>

#include "anncat/ann.hpp"
#include "anncat/structures.hpp"

namespace anncat {

namespace {

ObjPtr mkvar(int i) {
  auto n = std::make_shared<ObjTerm>();
  n->kind = ObjTerm::Kind::var;
  n->var = i;
  return n;
}
ObjPtr mkconst(ObjTerm::Kind k) {
  auto n = std::make_shared<ObjTerm>();
  n->kind = k;
  return n;
}
ObjPtr mkop(ObjTerm::Kind k, ObjPtr a, ObjPtr b) {
  auto n = std::make_shared<ObjTerm>();
  n->kind = k;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

constexpr auto kOplus = ObjTerm::Kind::oplus;
constexpr auto kOtimes = ObjTerm::Kind::otimes;

}  // namespace

NatFamily standard_family(const std::string& name) {
  NatFamily f;
  f.name = name;
  f.iso = true;
  ObjPtr X = mkvar(0), Y = mkvar(1), Z = mkvar(2);
  ObjPtr zero = mkconst(ObjTerm::Kind::zero);
  ObjPtr one = mkconst(ObjTerm::Kind::one);
  if (name == "aplus") {
    f.arity = 3;
    f.source_shape = mkop(kOplus, X, mkop(kOplus, Y, Z));
    f.target_shape = mkop(kOplus, mkop(kOplus, X, Y), Z);
  } else if (name == "c") {
    f.arity = 2;
    f.source_shape = mkop(kOplus, X, Y);
    f.target_shape = mkop(kOplus, Y, X);
  } else if (name == "g") {
    f.arity = 1;
    f.source_shape = mkop(kOplus, zero, X);
    f.target_shape = X;
  } else if (name == "d") {
    f.arity = 1;
    f.source_shape = mkop(kOplus, X, zero);
    f.target_shape = X;
  } else if (name == "a") {
    f.arity = 3;
    f.source_shape = mkop(kOtimes, X, mkop(kOtimes, Y, Z));
    f.target_shape = mkop(kOtimes, mkop(kOtimes, X, Y), Z);
  } else if (name == "l") {
    f.arity = 1;
    f.source_shape = mkop(kOtimes, one, X);
    f.target_shape = X;
  } else if (name == "r") {
    f.arity = 1;
    f.source_shape = mkop(kOtimes, X, one);
    f.target_shape = X;
  } else if (name == "L") {
    f.arity = 3;
    f.source_shape = mkop(kOtimes, X, mkop(kOplus, Y, Z));
    f.target_shape = mkop(kOplus, mkop(kOtimes, X, Y), mkop(kOtimes, X, Z));
  } else if (name == "R") {
    f.arity = 3;
    f.source_shape = mkop(kOtimes, mkop(kOplus, X, Y), Z);
    f.target_shape = mkop(kOplus, mkop(kOtimes, X, Z), mkop(kOtimes, Y, Z));
  } else {
    throw Error("standard_family: unknown family '" + name + "'");
  }
  return f;
}

// ---------------------------------------------------------------------
// Ring / group / bimodule tables.

RingTable RingTable::zmod(int n) {
  RingTable R;
  R.name = "Z/" + std::to_string(n);
  for (int i = 0; i < n; ++i) R.elems.push_back(std::to_string(i));
  R.add.resize(static_cast<std::size_t>(n * n));
  R.mul.resize(static_cast<std::size_t>(n * n));
  R.neg.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    R.neg[static_cast<std::size_t>(i)] = (n - i) % n;
    for (int j = 0; j < n; ++j) {
      R.add[static_cast<std::size_t>(i * n + j)] = (i + j) % n;
      R.mul[static_cast<std::size_t>(i * n + j)] = (i * j) % n;
    }
  }
  R.zero = 0;
  R.one = 1 % n;
  return R;
}

RingTable RingTable::f2_t_mod_t2() {
  // Elements 0, 1, t, t+1 with t^2 = 0, characteristic 2.
  RingTable R;
  R.name = "F2[t]/(t^2)";
  R.elems = {"0", "1", "t", "t+1"};
  auto bits = [](int x) { return std::pair<int, int>{x & 1, (x >> 1) & 1}; };
  auto pack = [](int c, int t) { return c | (t << 1); };
  R.add.resize(16);
  R.mul.resize(16);
  R.neg = {0, 1, 2, 3};
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      auto [xc, xt] = bits(x);
      auto [yc, yt] = bits(y);
      R.add[static_cast<std::size_t>(x * 4 + y)] = pack(xc ^ yc, xt ^ yt);
      // (xc + xt t)(yc + yt t) = xc yc + (xc yt + xt yc) t
      R.mul[static_cast<std::size_t>(x * 4 + y)] =
          pack(xc & yc, (xc & yt) ^ (xt & yc));
    }
  R.zero = 0;
  R.one = 1;
  return R;
}

GroupTable GroupTable::zmod(int n) {
  GroupTable G;
  G.name = "Z/" + std::to_string(n);
  for (int i = 0; i < n; ++i) G.elems.push_back(std::to_string(i));
  G.add.resize(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      G.add[static_cast<std::size_t>(i * n + j)] = (i + j) % n;
  G.zero = 0;
  return G;
}

int GroupTable::neg(int x) const {
  for (int y = 0; y < n(); ++y)
    if (plus(x, y) == zero) return y;
  throw Error("group element has no inverse: " + elems[static_cast<std::size_t>(x)]);
}

BimoduleData BimoduleData::regular(const RingTable& R) {
  BimoduleData B;
  B.R = R;
  B.M.name = R.name + "(+)";
  B.M.elems = R.elems;
  B.M.add = R.add;
  B.M.zero = R.zero;
  const int n = R.n();
  B.left.resize(static_cast<std::size_t>(n * n));
  B.right.resize(static_cast<std::size_t>(n * n));
  for (int r = 0; r < n; ++r)
    for (int m = 0; m < n; ++m) {
      B.left[static_cast<std::size_t>(r * n + m)] = R.times(r, m);
      B.right[static_cast<std::size_t>(m * n + r)] = R.times(m, r);
    }
  return B;
}

namespace {

void check_ring(const RingTable& R) {
  const int n = R.n();
  if (n == 0 || static_cast<int>(R.add.size()) != n * n ||
      static_cast<int>(R.mul.size()) != n * n)
    throw InvalidRing("ring table shape");
  for (int x = 0; x < n; ++x) {
    if (R.plus(R.zero, x) != x) throw InvalidRing("additive unit");
    if (R.plus(x, R.neg[static_cast<std::size_t>(x)]) != R.zero)
      throw InvalidRing("additive inverse");
    if (R.times(R.one, x) != x || R.times(x, R.one) != x)
      throw InvalidRing("multiplicative unit");
    for (int y = 0; y < n; ++y) {
      if (R.plus(x, y) != R.plus(y, x)) throw InvalidRing("additive commutativity");
      for (int z = 0; z < n; ++z) {
        if (R.plus(R.plus(x, y), z) != R.plus(x, R.plus(y, z)))
          throw InvalidRing("additive associativity");
        if (R.times(R.times(x, y), z) != R.times(x, R.times(y, z)))
          throw InvalidRing("multiplicative associativity");
        if (R.times(x, R.plus(y, z)) != R.plus(R.times(x, y), R.times(x, z)))
          throw InvalidRing("left distributivity");
        if (R.times(R.plus(x, y), z) != R.plus(R.times(x, z), R.times(y, z)))
          throw InvalidRing("right distributivity");
      }
    }
  }
}

void check_group(const GroupTable& G, const char* what) {
  const int n = G.n();
  if (n == 0 || static_cast<int>(G.add.size()) != n * n)
    throw InvalidBimodule(std::string(what) + ": table shape");
  for (int x = 0; x < n; ++x) {
    if (G.plus(G.zero, x) != x)
      throw InvalidBimodule(std::string(what) + ": unit");
    bool has_inv = false;
    for (int y = 0; y < n; ++y) has_inv = has_inv || G.plus(x, y) == G.zero;
    if (!has_inv) throw InvalidBimodule(std::string(what) + ": inverses");
    for (int y = 0; y < n; ++y) {
      if (G.plus(x, y) != G.plus(y, x))
        throw InvalidBimodule(std::string(what) + ": commutativity");
      for (int z = 0; z < n; ++z)
        if (G.plus(G.plus(x, y), z) != G.plus(x, G.plus(y, z)))
          throw InvalidBimodule(std::string(what) + ": associativity");
    }
  }
}

void check_bimodule(const BimoduleData& B) {
  check_ring(B.R);
  check_group(B.M, "module group");
  const int nr = B.R.n(), nm = B.M.n();
  if (static_cast<int>(B.left.size()) != nr * nm ||
      static_cast<int>(B.right.size()) != nm * nr)
    throw InvalidBimodule("action table shape");
  for (int m = 0; m < nm; ++m) {
    if (B.act_l(B.R.one, m) != m || B.act_r(m, B.R.one) != m)
      throw InvalidBimodule("actions not unital");
    for (int r = 0; r < nr; ++r)
      for (int s = 0; s < nr; ++s) {
        if (B.act_l(r, B.act_l(s, m)) != B.act_l(B.R.times(r, s), m))
          throw InvalidBimodule("left action associativity");
        if (B.act_r(B.act_r(m, r), s) != B.act_r(m, B.R.times(r, s)))
          throw InvalidBimodule("right action associativity");
        if (B.act_r(B.act_l(r, m), s) != B.act_l(r, B.act_r(m, s)))
          throw InvalidBimodule("action interchange");
        if (B.act_l(B.R.plus(r, s), m) != B.M.plus(B.act_l(r, m), B.act_l(s, m)))
          throw InvalidBimodule("left action additivity in R");
        if (B.act_r(m, B.R.plus(r, s)) != B.M.plus(B.act_r(m, r), B.act_r(m, s)))
          throw InvalidBimodule("right action additivity in R");
      }
    for (int k = 0; k < nm; ++k)
      for (int r = 0; r < nr; ++r) {
        if (B.act_l(r, B.M.plus(m, k)) != B.M.plus(B.act_l(r, m), B.act_l(r, k)))
          throw InvalidBimodule("left action additivity in M");
        if (B.act_r(B.M.plus(m, k), r) != B.M.plus(B.act_r(m, r), B.act_r(k, r)))
          throw InvalidBimodule("right action additivity in M");
      }
  }
}

// Evaluate an object shape over integer object indices using the two
// ring-level tables.
int eval_shape_int(const ObjTerm& o, const std::vector<int>& tuple,
                   const std::function<int(int, int)>& plus,
                   const std::function<int(int, int)>& times, int zero,
                   int one) {
  switch (o.kind) {
    case ObjTerm::Kind::var:
      return tuple[static_cast<std::size_t>(o.var)];
    case ObjTerm::Kind::zero:
      return zero;
    case ObjTerm::Kind::one:
      return one;
    case ObjTerm::Kind::oplus:
      return plus(eval_shape_int(*o.a, tuple, plus, times, zero, one),
                  eval_shape_int(*o.b, tuple, plus, times, zero, one));
    case ObjTerm::Kind::otimes:
      return times(eval_shape_int(*o.a, tuple, plus, times, zero, one),
                   eval_shape_int(*o.b, tuple, plus, times, zero, one));
    default:
      throw Error("functor node in a family shape");
  }
}

void fill_family(NatFamily* f, int n_obj,
                 const std::function<MorId(const std::vector<int>&)>& comp) {
  std::size_t total = 1;
  for (int i = 0; i < f->arity; ++i) total *= static_cast<std::size_t>(n_obj);
  f->components.resize(total);
  std::vector<int> tuple(static_cast<std::size_t>(f->arity), 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    for (int i = f->arity - 1; i >= 0; --i) {
      tuple[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::size_t>(n_obj));
      rest /= static_cast<std::size_t>(n_obj);
    }
    f->components[idx] = comp(tuple);
  }
}

const char* kFamilyNames[9] = {"aplus", "c", "g", "d", "a", "l", "r", "L", "R"};

}  // namespace

int CochainSet::at(const std::string& fam, const std::vector<int>& tuple,
                   int n) const {
  auto it = values.find(fam);
  if (it == values.end()) return 0;
  std::size_t idx = 0;
  for (int t : tuple) idx = idx * static_cast<std::size_t>(n) + static_cast<std::size_t>(t);
  return it->second.at(idx);
}

bool CochainSet::trivial() const {
  for (const auto& [k, vals] : values)
    for (int v : vals)
      if (v != 0) return false;
  return true;
}

AnnCat from_ring(const RingTable& R) {
  check_ring(R);
  const int n = R.n();
  AnnCat A;
  A.name = "D(" + R.name + ")";
  for (int i = 0; i < n; ++i) {
    ObjId x = A.cat.add_object(R.elems[static_cast<std::size_t>(i)]);
    MorId ix = A.cat.add_mor("id(" + R.elems[static_cast<std::size_t>(i)] + ")", x, x);
    A.cat.identity[static_cast<std::size_t>(x)] = ix;
    A.cat.set_comp(ix, ix, ix);
  }

  auto make_bif = [&](const std::vector<int>& table) {
    Bifunctor T;
    T.n_obj = n;
    T.obj.resize(static_cast<std::size_t>(n * n));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        int z = table[static_cast<std::size_t>(x * n + y)];
        T.set_obj(x, y, z);
        T.set_mor(A.cat.identity[static_cast<std::size_t>(x)],
                  A.cat.identity[static_cast<std::size_t>(y)],
                  A.cat.identity[static_cast<std::size_t>(z)]);
      }
    return T;
  };
  A.plus.plus = make_bif(R.add);
  A.plus.zero = R.zero;
  A.times.times = make_bif(R.mul);
  A.times.one = R.one;

  auto rplus = [&](int x, int y) { return R.plus(x, y); };
  auto rtimes = [&](int x, int y) { return R.times(x, y); };
  for (const char* fname : kFamilyNames) {
    NatFamily f = standard_family(fname);
    fill_family(&f, n, [&](const std::vector<int>& t) {
      int obj = eval_shape_int(*f.source_shape, t, rplus, rtimes, R.zero, R.one);
      return A.cat.identity[static_cast<std::size_t>(obj)];
    });
    *A.family(fname) = std::move(f);
  }
  return A;
}

AnnCat from_bimodule(const BimoduleData& B, const CochainSet& T) {
  check_bimodule(B);
  const int nr = B.R.n(), nm = B.M.n();
  AnnCat A;
  A.name = "B(" + B.R.name + "," + B.M.name + ")";

  // Morphism (x, m) has id x * nm + m.
  auto mid = [&](int x, int m) { return static_cast<MorId>(x * nm + m); };
  for (int x = 0; x < nr; ++x) {
    ObjId ox = A.cat.add_object(B.R.elems[static_cast<std::size_t>(x)]);
    (void)ox;
  }
  for (int x = 0; x < nr; ++x)
    for (int m = 0; m < nm; ++m)
      A.cat.add_mor("(" + B.R.elems[static_cast<std::size_t>(x)] + ";" +
                        B.M.elems[static_cast<std::size_t>(m)] + ")",
                    x, x);
  for (int x = 0; x < nr; ++x) {
    A.cat.identity[static_cast<std::size_t>(x)] = mid(x, B.M.zero);
    for (int m = 0; m < nm; ++m)
      for (int m2 = 0; m2 < nm; ++m2)
        A.cat.set_comp(mid(x, m), mid(x, m2), mid(x, B.M.plus(m, m2)));
  }

  Bifunctor plus;
  plus.n_obj = nr;
  plus.obj.resize(static_cast<std::size_t>(nr * nr));
  Bifunctor times = plus;
  for (int x = 0; x < nr; ++x)
    for (int y = 0; y < nr; ++y) {
      plus.set_obj(x, y, B.R.plus(x, y));
      times.set_obj(x, y, B.R.times(x, y));
      for (int m = 0; m < nm; ++m)
        for (int k = 0; k < nm; ++k) {
          plus.set_mor(mid(x, m), mid(y, k), mid(B.R.plus(x, y), B.M.plus(m, k)));
          // (x,m) (x) (y,k) = (xy, x.k + m.y)
          times.set_mor(mid(x, m), mid(y, k),
                        mid(B.R.times(x, y),
                            B.M.plus(B.act_l(x, k), B.act_r(m, y))));
        }
    }
  A.plus.plus = std::move(plus);
  A.plus.zero = B.R.zero;
  A.times.times = std::move(times);
  A.times.one = B.R.one;

  auto rplus = [&](int x, int y) { return B.R.plus(x, y); };
  auto rtimes = [&](int x, int y) { return B.R.times(x, y); };
  for (const char* fname : kFamilyNames) {
    NatFamily f = standard_family(fname);
    fill_family(&f, nr, [&](const std::vector<int>& t) {
      int obj = eval_shape_int(*f.source_shape, t, rplus, rtimes, B.R.zero, B.R.one);
      return mid(obj, T.at(fname, t, nr));
    });
    *A.family(fname) = std::move(f);
  }
  return A;
}

PicModel pic_from_cocycle(const GroupTable& M, const GroupTable& N,
                          const std::vector<int>& h, const std::vector<int>& cc) {
  check_group(M, "object group");
  check_group(N, "coefficient group");
  const int nm = M.n(), nn = N.n();
  if (static_cast<int>(h.size()) != nm * nm * nm)
    throw Error("pic_from_cocycle: h table must have |M|^3 entries");
  if (static_cast<int>(cc.size()) != nm * nm)
    throw Error("pic_from_cocycle: cc table must have |M|^2 entries");

  PicModel P;
  P.name = "Pic(" + M.name + "," + N.name + ")";
  auto mid = [&](int x, int m) { return static_cast<MorId>(x * nn + m); };
  for (int x = 0; x < nm; ++x) P.cat.add_object(M.elems[static_cast<std::size_t>(x)]);
  for (int x = 0; x < nm; ++x)
    for (int m = 0; m < nn; ++m)
      P.cat.add_mor("(" + M.elems[static_cast<std::size_t>(x)] + ";" +
                        N.elems[static_cast<std::size_t>(m)] + ")",
                    x, x);
  for (int x = 0; x < nm; ++x) {
    P.cat.identity[static_cast<std::size_t>(x)] = mid(x, N.zero);
    for (int m = 0; m < nn; ++m)
      for (int m2 = 0; m2 < nn; ++m2)
        P.cat.set_comp(mid(x, m), mid(x, m2), mid(x, N.plus(m, m2)));
  }
  P.plus.plus.n_obj = nm;
  P.plus.plus.obj.resize(static_cast<std::size_t>(nm * nm));
  for (int x = 0; x < nm; ++x)
    for (int y = 0; y < nm; ++y) {
      P.plus.plus.set_obj(x, y, M.plus(x, y));
      for (int m = 0; m < nn; ++m)
        for (int k = 0; k < nn; ++k)
          P.plus.plus.set_mor(mid(x, m), mid(y, k), mid(M.plus(x, y), N.plus(m, k)));
    }
  P.plus.zero = M.zero;

  auto mplus = [&](int x, int y) { return M.plus(x, y); };
  auto mtimes = [&](int, int) -> int { throw Error("no product on a Pic model"); };
  for (const char* fname : {"aplus", "c", "g", "d"}) {
    NatFamily f = standard_family(fname);
    fill_family(&f, nm, [&](const std::vector<int>& t) {
      int obj = eval_shape_int(*f.source_shape, t, mplus, mtimes, M.zero, 0);
      int val = 0;
      if (f.name == "aplus")
        val = h[static_cast<std::size_t>((t[0] * nm + t[1]) * nm + t[2])];
      else if (f.name == "c")
        val = cc[static_cast<std::size_t>(t[0] * nm + t[1])];
      return mid(obj, val);
    });
    if (f.name == "aplus")
      P.plus.aplus = std::move(f);
    else if (f.name == "c")
      P.plus.c = std::move(f);
    else if (f.name == "g")
      P.plus.g = std::move(f);
    else
      P.plus.d = std::move(f);
  }
  return P;
}

// ---------------------------------------------------------------------
// Brute-force cochain search with the verifier as acceptance oracle.

std::vector<CochainSet> search_constraint_families(
    const BimoduleData& B, const std::vector<std::string>& names,
    unsigned long long bound) {
  check_bimodule(B);
  const int nr = B.R.n();
  const int nm = B.M.n();

  std::vector<std::pair<std::string, std::size_t>> sites;  // family, #tuples
  unsigned long long space = 1;
  bool overflow = false;
  for (const auto& nm_ : names) {
    NatFamily f = standard_family(nm_);
    std::size_t tuples = 1;
    for (int i = 0; i < f.arity; ++i) tuples *= static_cast<std::size_t>(nr);
    sites.emplace_back(nm_, tuples);
    for (std::size_t i = 0; i < tuples; ++i) {
      space *= static_cast<unsigned long long>(nm);
      if (space > bound) {
        overflow = true;
        break;
      }
    }
    if (overflow) break;
  }
  if (overflow) {
    // Recompute a (saturating) estimate for the message.
    long double est = 1;
    for (const auto& nm_ : names) {
      NatFamily f = standard_family(nm_);
      std::size_t tuples = 1;
      for (int i = 0; i < f.arity; ++i) tuples *= static_cast<std::size_t>(nr);
      for (std::size_t i = 0; i < tuples; ++i) est *= nm;
    }
    throw BoundExceeded("cochain search space exceeds bound",
                        est > 1e18L ? ~0ULL : static_cast<unsigned long long>(est));
  }

  std::size_t total_sites = 0;
  for (const auto& [n, t] : sites) total_sites += t;

  std::vector<CochainSet> found;
  std::vector<int> odo(total_sites, 0);
  for (;;) {
    CochainSet T;
    std::size_t off = 0;
    for (const auto& [fam, tuples] : sites) {
      std::vector<int> vals(odo.begin() + static_cast<long>(off),
                            odo.begin() + static_cast<long>(off + tuples));
      T.values[fam] = std::move(vals);
      off += tuples;
    }
    AnnCat A = from_bimodule(B, T);
    if (verify_ann(A).pass()) found.push_back(std::move(T));

    // odometer
    std::size_t i = total_sites;
    while (i > 0) {
      --i;
      if (++odo[i] < nm) break;
      odo[i] = 0;
      if (i == 0) return found;
    }
    if (total_sites == 0) return found;
  }
}

std::vector<std::pair<std::vector<int>, std::vector<int>>> search_pic_cocycles(
    const GroupTable& M, const GroupTable& N, unsigned long long bound) {
  const int nm = M.n(), nn = N.n();
  const std::size_t h_sites = static_cast<std::size_t>(nm) * static_cast<std::size_t>(nm) *
                              static_cast<std::size_t>(nm);
  const std::size_t c_sites = static_cast<std::size_t>(nm) * static_cast<std::size_t>(nm);
  unsigned long long space = 1;
  for (std::size_t i = 0; i < h_sites + c_sites; ++i) {
    space *= static_cast<unsigned long long>(nn);
    if (space > bound)
      throw BoundExceeded("cocycle search space exceeds bound", space);
  }

  std::vector<std::pair<std::vector<int>, std::vector<int>>> found;
  std::vector<int> odo(h_sites + c_sites, 0);
  for (;;) {
    std::vector<int> h(odo.begin(), odo.begin() + static_cast<long>(h_sites));
    std::vector<int> cc(odo.begin() + static_cast<long>(h_sites), odo.end());
    PicModel P = pic_from_cocycle(M, N, h, cc);
    TableOps ops(P.cat, P.plus);
    if (check_pic(P.cat, P.plus, ops).pass()) found.emplace_back(std::move(h), std::move(cc));

    std::size_t i = h_sites + c_sites;
    while (i > 0) {
      --i;
      if (++odo[i] < nn) break;
      odo[i] = 0;
      if (i == 0) return found;
    }
  }
}

}  // namespace anncat
