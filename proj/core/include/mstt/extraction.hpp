// Bridges trivial-mode denotations in the empty context to host values.
// Structural instances cover naturals, booleans, products and functions;
// applications register hooks for their modal types (streams, relation
// legs). extract/embed are mutually inverse on probes, which is tested but
// not formally required.
#pragma once

#include <functional>
#include <vector>

#include "mstt/typechecker.hpp"

namespace mstt {

struct Extractable {
  TyExpr type;  // at the trivial mode
  std::function<HostValue(const SemTm&)> extract;  // term in the empty context
  std::function<SemTm(const HostValue&)> embed;
};

struct ExtractHook;

/// Application-supplied rule; returns nullopt when it does not apply. The
/// hook list is threaded through so rules can recurse on component types.
struct ExtractHook {
  std::function<std::optional<Extractable>(const Elaborator&, const std::vector<ExtractHook>&,
                                           const TyExpr&)> match;
};

/// Structural registry lookup for a type at the trivial mode.
Tcm<Extractable> extractable_for(const Elaborator& elab, const std::vector<ExtractHook>& hooks,
                                 const TyExpr& ty);

HostValue extract(const Extractable& ex, const SemTm& t);
SemTm embed(const Extractable& ex, const HostValue& v);

/// Wraps a single star-cell value as a constant term in the empty context.
SemTm const_star_tm(const SemValue& v);

}  // namespace mstt
