#pragma once

#include <functional>
#include <span>

#include "anncat/ops.hpp"
#include "anncat/report.hpp"
#include "anncat/term.hpp"

namespace anncat {

// Evaluation context.  Single-category equations set only `cat`.
// Functor-check equations additionally set src/F (and G/alpha for
// morphism-of-functors checks); variables then bind objects of the
// source category, F(...) switches evaluation to the source side, and
// the family names Fbreve/Ftilde/Gbreve/Gtilde/alpha are indexed by
// source objects while all other names resolve in the target.
struct EvalCtx {
  CatOps* cat = nullptr;  // target (or only) category
  CatOps* src = nullptr;
  const FunctorData* F = nullptr;
  const FunctorData* G = nullptr;
  const std::function<MorId(ObjId)>* alpha = nullptr;

  static EvalCtx plain(CatOps& ops) {
    EvalCtx ctx;
    ctx.cat = &ops;
    return ctx;
  }
  static EvalCtx functor(const FunctorData& F) {
    EvalCtx ctx;
    ctx.cat = F.dst;
    ctx.src = F.src;
    ctx.F = &F;
    return ctx;
  }
};

ObjId eval_obj(const EvalCtx& ctx, const ObjTerm& o,
               std::span<const ObjId> binding);
MorId eval_term(const EvalCtx& ctx, const MorTerm& t,
                std::span<const ObjId> binding);

struct CheckOptions {
  int jobs = 1;
  int max_witnesses = 4;
  bool bounded = false;  // mark result as probe-restricted
};

// Evaluates lhs and rhs at every binding of the equation's variables to
// objects of `universe` (full Cartesian enumeration, canonical
// mixed-radix order) and records mismatches.  Endpoint disagreements
// and evaluation errors are reported as distinct failure kinds.
EquationCheckResult check_equation(const EvalCtx& ctx, const Equation& eq,
                                   std::span<const ObjId> universe,
                                   const CheckOptions& opts = {});

// Convenience: universe = all objects of the binding-side category.
EquationCheckResult check_equation(CatOps& ops, const Equation& eq,
                                   const CheckOptions& opts = {});

}  // namespace anncat
