// The sound-by-testing elaborator: infers a term's type and simultaneously
// builds its presheaf denotation, in the type-checking monad. Extension
// type/term formers dispatch through per-application registries.
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mstt/syntax.hpp"

namespace mstt {

class Elaborator;

struct InferInterpretResult {
  TyExpr type;
  SemTm denotation;
};

/// Registered type former. `interpret` receives the already-interpreted
/// argument types; `lift_iso` lifts argument isomorphisms through the
/// former (the congruence case of type equivalence).
struct TyExtDescriptor {
  std::string name;
  ModeExpr mode;
  std::vector<ModeExpr> arg_modes;
  std::function<ClosedSemTy(const std::vector<ClosedSemTy>&)> interpret;
  std::function<ClosedTyIso(const std::vector<ClosedTyIso>&)> lift_iso;
};

/// Registered term former: full control over inference of the node.
struct TmExtDescriptor {
  std::string name;
  std::function<Tcm<InferInterpretResult>(const Elaborator&, const TmExpr&, const CtxExpr&)> infer;
};

using TyExtRegistry = std::map<std::string, TyExtDescriptor>;
using TmExtRegistry = std::map<std::string, TmExtDescriptor>;

class Elaborator {
 public:
  Elaborator(ModeTheoryPtr mt, TyExtRegistry ty_exts, TmExtRegistry tm_exts);

  const ModeTheory& mode_theory() const { return *mt_; }
  ModeTheoryPtr mode_theory_ptr() const { return mt_; }
  const TyExtRegistry& ty_exts() const { return ty_exts_; }

  BaseCategoryPtr interpret_mode(const ModeExpr& m) const;
  Dra interpret_modality(const ModalityExpr& mu) const;
  Tcm<ClosedSemTy> interpret_ty(const TyExpr& t) const;
  Tcm<SemCtx> interpret_ctx(const CtxExpr& g) const;

  /// Smallest congruence making the modal former respect modality
  /// equivalence; ok yields the composite isomorphism family.
  Tcm<ClosedTyIso> ty_equiv(const TyExpr& t, const TyExpr& s) const;

  /// Resolves a variable against the context: scans right to left,
  /// accumulating the composite of lock modalities, and checks the
  /// two-cell against the matched binder's modality.
  Tcm<InferInterpretResult> lookup_var(const std::string& name, const TwoCellExpr& cell,
                                       const CtxExpr& ctx) const;

  Tcm<InferInterpretResult> infer_interpret(const TmExpr& t, const CtxExpr& ctx) const;

  /// Denotation of a well-typed term, or the unit-like marker (nullopt).
  std::optional<SemTm> tm_in(const TmExpr& t, const CtxExpr& ctx) const;

 private:
  ModeTheoryPtr mt_;
  TyExtRegistry ty_exts_;
  TmExtRegistry tm_exts_;
};

}  // namespace mstt
