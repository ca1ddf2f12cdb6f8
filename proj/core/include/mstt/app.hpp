// Everything one mode-theory instantiation contributes, bundled: the
// theory itself, extension registries, extraction hooks, library terms
// exposed to the surface syntax, and the surface keyword tables.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "mstt/extraction.hpp"
#include "mstt/typechecker.hpp"

namespace mstt {

/// Argument kinds for surface-level extension/macro forms.
enum class ExtArgKind {
  modality,  // a modality expression
  type,      // a type atom, parsed at the mode given in type_arg_modes
  type_dom,  // a type atom at the domain mode of the preceding modality arg
  nat,       // a numeral
  word       // a bare word
};

using SurfaceArg = std::variant<ModalityExpr, TyExpr, std::uint64_t, std::string>;

/// A prefix form in the term grammar: `name arg1 .. argN`.
struct SurfaceForm {
  std::vector<ExtArgKind> args;
  std::vector<ModeExpr> type_arg_modes;  // parallel to the `type` entries
  std::function<Tcm<TmExpr>(const std::vector<SurfaceArg>&)> build;
};

struct SurfaceConfig {
  std::map<std::string, ModeExpr> mode_names;
  ModeExpr default_mode;
  std::vector<std::string> cell_names;              // two-cell tags beyond id-cell
  std::map<std::string, SurfaceForm> forms;         // extension/macro prefix forms
  std::map<std::string, std::string> ty_ext_names;  // surface name -> ty ext code
};

struct AppConfig {
  std::string name;
  ModeTheoryPtr mode_theory;
  TyExtRegistry ty_exts;
  TmExtRegistry tm_exts;
  std::vector<ExtractHook> extract_hooks;
  std::map<std::string, TmExpr> builtin_defs;  // library corpus terms by surface name
  SurfaceConfig surface;

  Elaborator elaborator() const { return Elaborator(mode_theory, ty_exts, tm_exts); }
};

}  // namespace mstt
