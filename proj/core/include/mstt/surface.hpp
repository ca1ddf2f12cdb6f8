// Text surface syntax: parser and pretty-printer for program files of the
// form `def <name> [@ <mode>] [: <type>] = <term>`. Later defs may
// reference earlier ones; references are inlined at parse time.
#pragma once

#include <string>
#include <vector>

#include "mstt/app.hpp"

namespace mstt {
namespace surface {

struct SourceDef {
  std::string name;
  ModeExpr mode;
  TmExpr term;  // includes the annotation wrapper when one was written
};

struct SourceProgram {
  std::vector<SourceDef> defs;

  const SourceDef* find(const std::string& name) const;
};

/// Parses a program; errors carry line:column positions.
Tcm<SourceProgram> parse(const AppConfig& app, const std::string& text);

/// Parses a single term at the given mode (no defs in scope).
Tcm<TmExpr> parse_term(const AppConfig& app, const std::string& text, const ModeExpr& mode);

/// Reparseable rendering. parse(pretty(t)) yields the same tree for every
/// term the surface grammar can express.
std::string pretty(const AppConfig& app, const TmExpr& term);
std::string pretty(const TyExpr& type);

/// Rendering with modal components brought to normal form first (used for
/// type comparisons against pinned strings).
std::string pretty_normalized(const AppConfig& app, const TyExpr& type);

}  // namespace surface
}  // namespace mstt
