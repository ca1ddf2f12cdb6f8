// Pluggable mode theories: modes, modality expressions closed under unit
// and composition, two-cells, their deciders and semantic interpretations.
// Modality equivalence is decided by confluent rewriting to a normal form
// (a list of atoms); each instantiation supplies its rewrite rules together
// with semantic isomorphism witnesses for them.
#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mstt/presheaf.hpp"
#include "mstt/tcm.hpp"

namespace mstt {

/// Opaque mode identifier; equality is syntactic.
struct ModeExpr {
  std::string tag;

  friend bool operator==(const ModeExpr& a, const ModeExpr& b) { return a.tag == b.tag; }
  friend bool operator!=(const ModeExpr& a, const ModeExpr& b) { return a.tag != b.tag; }
  friend bool operator<(const ModeExpr& a, const ModeExpr& b) { return a.tag < b.tag; }
};

/// Tree of atomic modality tags closed under unit and composition.
/// `compose(mu, rho)` is only well-formed when dom(mu) = cod(rho).
class ModalityExpr {
 public:
  enum class Kind { unit, atom, compose };

  static ModalityExpr unit(ModeExpr m);
  static ModalityExpr atom(std::string name, ModeExpr dom, ModeExpr cod);

  Kind kind() const { return node_->kind; }
  const ModeExpr& dom() const { return node_->dom; }
  const ModeExpr& cod() const { return node_->cod; }
  const std::string& atom_name() const;
  ModalityExpr left() const;   // mu of mu (after) rho
  ModalityExpr right() const;  // rho

  friend bool operator==(const ModalityExpr& a, const ModalityExpr& b);
  friend bool operator!=(const ModalityExpr& a, const ModalityExpr& b) { return !(a == b); }

  std::string show() const;

 private:
  struct Node {
    Kind kind;
    ModeExpr dom, cod;
    std::string name;                      // atom
    std::shared_ptr<const Node> lhs, rhs;  // compose
  };
  explicit ModalityExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;

  friend Tcm<ModalityExpr> compose_modalities(const ModalityExpr&, const ModalityExpr&);
};

/// Composition mu (after) rho; rejects a mode mismatch.
Tcm<ModalityExpr> compose_modalities(const ModalityExpr& mu, const ModalityExpr& rho);

/// Two-cell expression: instantiation-defined tag; the trivial cell is
/// always present.
struct TwoCellExpr {
  std::string tag;

  static TwoCellExpr id_cell() { return TwoCellExpr{"id-cell"}; }
  bool is_id() const { return tag == "id-cell"; }

  friend bool operator==(const TwoCellExpr& a, const TwoCellExpr& b) { return a.tag == b.tag; }
};

/// One rewrite step on normal forms, with its semantic witness: for every
/// closed A over the rule's domain category, ⟨lhs|A⟩ ≅ ⟨rhs|A⟩.
struct ModalityRewrite {
  std::vector<std::string> lhs, rhs;
  // iso(A) between the cells of ⟨lhs-composite|A⟩ and ⟨rhs-composite|A⟩.
  std::function<ClosedTyIso(const ClosedSemTy&)> iso;
};

/// Admissible endpoints for a named two-cell, keyed by normal forms, with
/// the transport between the lock cells (from the codomain's lock to the
/// domain's lock).
struct TwoCellRule {
  std::string cell;
  std::vector<std::string> nf_mu, nf_rho;
  std::function<Env(const SemCtx&, const Obj&, const Env&)> transport;
};

struct AtomInfo {
  std::string name;
  ModeExpr dom, cod;
};

/// A complete mode theory: the data of Fig-style mode/modality/two-cell
/// tables plus interpretation hooks into the presheaf layer.
class ModeTheory {
 public:
  std::string name;
  std::vector<ModeExpr> modes;
  std::vector<AtomInfo> atoms;
  std::vector<ModalityRewrite> rewrites;
  std::vector<TwoCellRule> two_cells;

  std::function<BaseCategoryPtr(const ModeExpr&)> interpret_mode;
  std::function<Dra(const std::string&)> interpret_atom;

  const AtomInfo* find_atom(const std::string& name) const;
  ModalityExpr atom_expr(const std::string& name) const;

  Dra interpret_modality(const ModalityExpr& mu) const;
  /// Interpretation of a normal form (unit of the given mode when empty).
  Dra interpret_atom_list(const std::vector<std::string>& atoms_nf, const ModeExpr& dom_mode) const;
};

using ModeTheoryPtr = std::shared_ptr<const ModeTheory>;

/// Flattened composition with units removed and the instantiation's
/// rewrite rules applied to a fixed point.
std::vector<std::string> normalize_modality(const ModeTheory& mt, const ModalityExpr& mu);

/// Right-nested modality expression denoting a list of atoms (the unit of
/// `mode` when the list is empty). Inverse of normalize up to rewriting.
ModalityExpr denormalize_modality(const ModeTheory& mt, const std::vector<std::string>& atoms,
                                  const ModeExpr& mode);

/// Syntactic mode equality in the type-checking monad.
Tcm<bool> modes_equal(const ModeExpr& m, const ModeExpr& n);

/// Sound decider for modality equivalence: ok with a semantic witness iff
/// the normal forms coincide. The witness supports transport on every
/// closed type. Completeness beyond the rewrite closure is not claimed.
Tcm<SemModalityIso> modalities_equivalent(const ModeTheory& mt, const ModalityExpr& mu,
                                          const ModalityExpr& rho);

/// Checks that `alpha` admits (mu, rho) as endpoints and returns the
/// natural transformation between the lock functors. The trivial cell
/// requires mu and rho to be equivalent.
Tcm<SemTwoCell> check_two_cell(const ModeTheory& mt, const TwoCellExpr& alpha,
                               const ModalityExpr& mu, const ModalityExpr& rho);

std::string show_atom_list(const std::vector<std::string>& atoms);

}  // namespace mstt
