#include "anncat/eval.hpp"

#include <atomic>
#include <thread>

namespace anncat {

namespace {

// Source-side sub-context: inside F(...) / G(...) everything refers to
// the source category and further functor nodes are not allowed.
EvalCtx source_ctx(const EvalCtx& ctx) {
  if (!ctx.src) throw MissingStructure("term uses F(...) outside a functor context");
  EvalCtx inner;
  inner.cat = ctx.src;
  return inner;
}

}  // namespace

ObjId eval_obj(const EvalCtx& ctx, const ObjTerm& o,
               std::span<const ObjId> binding) {
  switch (o.kind) {
    case ObjTerm::Kind::var:
      if (ctx.src && ctx.cat != ctx.src)
        throw MissingStructure(
            "bare variable on the target side of a functor equation");
      return binding[static_cast<std::size_t>(o.var)];
    case ObjTerm::Kind::zero:
      return ctx.cat->zero();
    case ObjTerm::Kind::one:
      return ctx.cat->one();
    case ObjTerm::Kind::oplus:
      return ctx.cat->obj_plus(eval_obj(ctx, *o.a, binding),
                               eval_obj(ctx, *o.b, binding));
    case ObjTerm::Kind::otimes:
      return ctx.cat->obj_times(eval_obj(ctx, *o.a, binding),
                                eval_obj(ctx, *o.b, binding));
    case ObjTerm::Kind::fapp: {
      if (!ctx.F) throw MissingStructure("F(...) without a functor in context");
      EvalCtx inner = source_ctx(ctx);
      return ctx.F->obj(eval_obj(inner, *o.a, binding));
    }
    case ObjTerm::Kind::gapp: {
      if (!ctx.G) throw MissingStructure("G(...) without a second functor in context");
      EvalCtx inner = source_ctx(ctx);
      return ctx.G->obj(eval_obj(inner, *o.a, binding));
    }
  }
  throw Error("unreachable object term kind");
}

namespace {

// Variables of a functor equation bind source objects, so an objexpr in
// *source* position must be evaluated against the source category even
// when the surrounding term lives in the target.
ObjId eval_src_obj(const EvalCtx& ctx, const ObjTerm& o,
                   std::span<const ObjId> binding) {
  if (!ctx.src) return eval_obj(ctx, o, binding);
  EvalCtx inner;
  inner.cat = ctx.src;
  return eval_obj(inner, o, binding);
}

}  // namespace

MorId eval_term(const EvalCtx& ctx, const MorTerm& t,
                std::span<const ObjId> binding) {
  switch (t.kind) {
    case MorTerm::Kind::id:
      return ctx.cat->identity(eval_obj(ctx, *t.obj, binding));
    case MorTerm::Kind::fam: {
      if (fam_source_indexed(t.fam)) {
        switch (t.fam) {
          case Fam::Fbreve:
            if (!ctx.F || !ctx.F->breve)
              throw MissingStructure("Fbreve: functor carries no breve data");
            return ctx.F->breve(eval_src_obj(ctx, *t.args[0], binding),
                                eval_src_obj(ctx, *t.args[1], binding));
          case Fam::Ftilde:
            if (!ctx.F || !ctx.F->tilde)
              throw MissingStructure("Ftilde: functor carries no tilde data");
            return ctx.F->tilde(eval_src_obj(ctx, *t.args[0], binding),
                                eval_src_obj(ctx, *t.args[1], binding));
          case Fam::Fhat:
            if (!ctx.F || ctx.F->hat == kNoMor)
              throw MissingStructure("Fhat: functor carries no zero unit iso");
            return ctx.F->hat;
          case Fam::F1:
            if (!ctx.F || ctx.F->one == kNoMor)
              throw MissingStructure("F1: functor carries no unit iso");
            return ctx.F->one;
          case Fam::Gbreve:
            if (!ctx.G || !ctx.G->breve)
              throw MissingStructure("Gbreve: second functor carries no breve data");
            return ctx.G->breve(eval_src_obj(ctx, *t.args[0], binding),
                                eval_src_obj(ctx, *t.args[1], binding));
          case Fam::Gtilde:
            if (!ctx.G || !ctx.G->tilde)
              throw MissingStructure("Gtilde: second functor carries no tilde data");
            return ctx.G->tilde(eval_src_obj(ctx, *t.args[0], binding),
                                eval_src_obj(ctx, *t.args[1], binding));
          case Fam::alpha:
            if (!ctx.alpha) throw MissingStructure("alpha: no functor morphism in context");
            return (*ctx.alpha)(eval_src_obj(ctx, *t.args[0], binding));
          default:
            break;
        }
      }
      std::vector<ObjId> args;
      args.reserve(t.args.size());
      for (const auto& o : t.args) args.push_back(eval_obj(ctx, *o, binding));
      return ctx.cat->constraint(t.fam, args);
    }
    case MorTerm::Kind::inv:
      return ctx.cat->invert(eval_term(ctx, *t.a, binding));
    case MorTerm::Kind::comp: {
      MorId gm = eval_term(ctx, *t.a, binding);
      MorId fm = eval_term(ctx, *t.b, binding);
      return ctx.cat->compose(gm, fm);
    }
    case MorTerm::Kind::oplus:
      return ctx.cat->mor_plus(eval_term(ctx, *t.a, binding),
                               eval_term(ctx, *t.b, binding));
    case MorTerm::Kind::otimes:
      return ctx.cat->mor_times(eval_term(ctx, *t.a, binding),
                                eval_term(ctx, *t.b, binding));
    case MorTerm::Kind::fapp: {
      if (!ctx.F) throw MissingStructure("F(...) without a functor in context");
      EvalCtx inner = source_ctx(ctx);
      return ctx.F->mor(eval_term(inner, *t.a, binding));
    }
    case MorTerm::Kind::gapp: {
      if (!ctx.G) throw MissingStructure("G(...) without a second functor in context");
      EvalCtx inner = source_ctx(ctx);
      return ctx.G->mor(eval_term(inner, *t.a, binding));
    }
  }
  throw Error("unreachable morphism term kind");
}

namespace {

void decode_binding(long long index, int k, int n, std::vector<ObjId>* out,
                    std::span<const ObjId> universe) {
  for (int i = k - 1; i >= 0; --i) {
    (*out)[static_cast<std::size_t>(i)] =
        universe[static_cast<std::size_t>(index % n)];
    index /= n;
  }
}

std::string binding_string(const Equation& eq, const std::vector<ObjId>& b,
                           CatOps& name_side) {
  std::string s;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) s += ',';
    s += eq.vars[i] + "=" + name_side.obj_name(b[i]);
  }
  return s;
}

}  // namespace

EquationCheckResult check_equation(const EvalCtx& ctx, const Equation& eq,
                                   std::span<const ObjId> universe,
                                   const CheckOptions& opts) {
  EquationCheckResult res;
  res.id = eq.id;
  res.cite = eq.cite;
  res.num_vars = static_cast<int>(eq.vars.size());
  res.bounded = opts.bounded;

  CatOps& binding_side = ctx.src ? *ctx.src : *ctx.cat;
  const int k = res.num_vars;
  const int n = static_cast<int>(universe.size());
  long long total = 1;
  for (int i = 0; i < k; ++i) total *= n;
  res.instances = total;
  if (n == 0) return res;

  const int jobs = std::max(1, opts.jobs);
  std::vector<std::vector<EquationCheckResult::Failure>> fails(
      static_cast<std::size_t>(jobs));
  std::vector<long long> counts(static_cast<std::size_t>(jobs), 0);

  auto worker = [&](int w) {
    std::vector<ObjId> binding(static_cast<std::size_t>(k));
    for (long long idx = w; idx < total; idx += jobs) {
      decode_binding(idx, k, n, &binding, universe);
      std::string kind;
      MorId lhs = kNoMor, rhs = kNoMor;
      std::string lhs_name = "-", rhs_name = "-";
      try {
        lhs = eval_term(ctx, *eq.lhs, binding);
        rhs = eval_term(ctx, *eq.rhs, binding);
        if (ctx.cat->dom(lhs) != ctx.cat->dom(rhs) ||
            ctx.cat->cod(lhs) != ctx.cat->cod(rhs))
          kind = "endpoint";
        else if (lhs != rhs)
          kind = "mismatch";
        if (!kind.empty()) {
          lhs_name = ctx.cat->mor_name(lhs);
          rhs_name = ctx.cat->mor_name(rhs);
        }
      } catch (const Error& e) {
        kind = "ill-typed";
        lhs_name = e.what();
      }
      if (!kind.empty()) {
        ++counts[static_cast<std::size_t>(w)];
        auto& bucket = fails[static_cast<std::size_t>(w)];
        if (static_cast<int>(bucket.size()) < opts.max_witnesses)
          bucket.push_back({idx, binding_string(eq, binding, binding_side),
                            lhs_name, rhs_name, kind});
      }
    }
  };

  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(jobs));
    for (int w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
    for (auto& t : threads) t.join();
  }

  // Merge in canonical order regardless of worker count.
  std::vector<EquationCheckResult::Failure> merged;
  for (auto& bucket : fails)
    for (auto& f : bucket) merged.push_back(std::move(f));
  std::sort(merged.begin(), merged.end(),
            [](const auto& a, const auto& b) { return a.binding_index < b.binding_index; });
  if (static_cast<int>(merged.size()) > opts.max_witnesses)
    merged.resize(static_cast<std::size_t>(opts.max_witnesses));
  res.failures = std::move(merged);
  for (long long c : counts) res.failure_count += c;
  return res;
}

EquationCheckResult check_equation(CatOps& ops, const Equation& eq,
                                   const CheckOptions& opts) {
  EvalCtx ctx = EvalCtx::plain(ops);
  CheckOptions o = opts;
  o.bounded = opts.bounded || ops.bounded();
  return check_equation(ctx, eq, ops.objects(), o);
}

}  // namespace anncat
