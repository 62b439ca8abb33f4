#pragma once

#include "anncat/eval.hpp"
#include "anncat/ops.hpp"
#include "anncat/report.hpp"

namespace anncat {

// Structure-level checkers.  Each one assumes the table-level
// validations have been run (the full pipelines in ann.hpp re-run them)
// and reports per-diagram results keyed by catalog entry.

// AU data for (x): pentagon 2.1 and triangle 2.2.
AxiomReport check_au(const FinCategory& C, const MonoidalData& M, CatOps& ops,
                     const CheckOptions& opts = {});

// ACU data for (+): pentagon/triangle plus involution and hexagon.
AxiomReport check_acu(const FinCategory& C, const PicData& P, CatOps& ops,
                      const CheckOptions& opts = {});

// Pic: ACU plus invertibility of every object under (+) and of every
// morphism.  The found (+)-inverse of each object is recorded in the
// aux report.
AxiomReport check_pic(const FinCategory& C, const PicData& P, CatOps& ops,
                      const CheckOptions& opts = {});

// Functor checks.  The additive variants take breve data, the
// multiplicative ones tilde data; units are checked when present.
AxiomReport check_ac_functor(const FunctorData& F, const CheckOptions& opts = {});
AxiomReport check_au_functor(const FunctorData& F, const CheckOptions& opts = {});

// Morphism of functors alpha : F -> G compatible with the breve/tilde
// data, diagram 2.9 at the stated operation.
AxiomReport check_monoidal_morphism(const FunctorData& F, const FunctorData& G,
                                    const std::function<MorId(ObjId)>& alpha,
                                    bool additive,
                                    const CheckOptions& opts = {});

// G o F with composite compatibility data (2.7) and units (2.8).
FunctorData compose_monoidal_functors(const FunctorData& G, const FunctorData& F);

// Sum of two (+)-functors via v: (F (+) G)X = FX (+) GX with
// breve = v . (Fbreve (+) Gbreve).
FunctorData sum_functors(const FunctorData& F, const FunctorData& G);

// The interchange family v as a NatFamily over a finite category.
NatFamily build_v(CatOps& ops);

// L^A = A (x) - and R^A = - (x) A with their distributivity breves.
FunctorData make_LA(CatOps& ops, ObjId A);
FunctorData make_RA(CatOps& ops, ObjId A);

}  // namespace anncat
