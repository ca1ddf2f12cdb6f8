// The guarded-recursion instantiation: the topos-of-trees base category,
// the later/constantly/forever adjoints, guarded streams, Löb induction
// and the stream example corpus.
#pragma once

#include "mstt/app.hpp"

namespace mstt {
namespace guarded {

/// Stages as objects; a unique morphism m -> n whenever m <= n.
BaseCategoryPtr omega_category();

ModeExpr star_mode();
ModeExpr omega_mode();
ModalityExpr later_m();
ModalityExpr constantly_m();
ModalityExpr forever_m();

/// The earlier functor: shifts a time-indexed context one stage left.
SemCtx earlier(const SemCtx& ctx);

Dra later_dra();
Dra constantly_dra();
Dra forever_dra();

/// Guarded streams: the stage-n cell is a vector of n+1 embedded elements;
/// restriction drops the freshest elements.
ClosedSemTy gstream_sem_ty(const ClosedSemTy& a);

// Syntax-level helpers.
TyExpr gstream(const TyExpr& a);      // GStream A : TyExpr at the time mode
TmExpr g_head(const TyExpr& a);
TmExpr g_tail(const TyExpr& a);
TmExpr g_cons(const TyExpr& a);
TmExpr lob(const std::string& name, const TyExpr& ty, const TmExpr& body);

/// Tm-Löb: elaborates the body under a later-binder, checks the annotation
/// against the inferred type, and ties the stage-indexed fixpoint.
Tcm<InferInterpretResult> loeb_elaborate(const Elaborator& elab, const std::string& name,
                                         const TyExpr& ty, const TmExpr& body, const CtxExpr& ctx);

// The stream corpus.
TmExpr g_map(const TyExpr& a, const TyExpr& b);
TmExpr g_nats();
TyExpr stream_prime(const TyExpr& a);
TmExpr cons_prime(const TyExpr& a);
TmExpr nats();

ModeTheoryPtr mode_theory();
const AppConfig& app();

}  // namespace guarded
}  // namespace mstt
