// The parametricity instantiation: the walking-cospan base category, the
// forget modalities, relation-carrying types built from host values, and
// the integer representation-independence example.
#pragma once

#include "mstt/app.hpp"

namespace mstt {
namespace param {

/// Three objects (left, right, relation) and, besides identities, one
/// morphism from each leg into the relation.
BaseCategoryPtr wedge_category();

ModeExpr star_mode();
ModeExpr wedge_mode();
ModalityExpr forget_left_m();
ModalityExpr forget_right_m();

/// Misuse of a relation-preserving operation: a produced pair failed the
/// relation predicate. Carries the rendered witness pair.
struct RelationViolation : std::runtime_error {
  explicit RelationViolation(const std::string& what) : std::runtime_error(what) {}
};

/// A relation-carrying built-in type: host representations for the two
/// legs plus the relation predicate (pure and total).
struct RelCode {
  std::string name;
  std::string left_tag, right_tag;
  std::function<bool(const HostValue&, const HostValue&)> rel;
};

using RelCodePtr = std::shared_ptr<const RelCode>;

/// Related pair; throws RelationViolation when the predicate fails.
SemValue rel_value(const RelCode& code, const HostValue& left, const HostValue& right);

ClosedSemTy from_rel_sem_ty(const RelCodePtr& code);

/// forget-right keeps the left leg; forget-left keeps the right leg.
Dra forget_left_dra();
Dra forget_right_dra();

// Syntax-level pieces. FromRel types are registered type extensions; the
// shipped code is the integer type below, but the registration mechanism
// works for any RelCode.
TyExpr from_rel(const std::string& surface_name);

/// Constant of a FromRel type from a related pair of host values.
TmExpr from_rel0(const std::string& ty_code, const HostValue& left, const HostValue& right);
/// Unary operation acting leg-wise; the relation is re-checked whenever a
/// related pair is produced.
TmExpr from_rel1(const std::string& a, const std::string& b,
                 std::function<HostValue(const HostValue&)> f_left,
                 std::function<HostValue(const HostValue&)> f_right);
TmExpr from_rel2(const std::string& a, const std::string& b, const std::string& c,
                 std::function<HostValue(const HostValue&, const HostValue&)> f_left,
                 std::function<HostValue(const HostValue&, const HostValue&)> f_right);

/// Applicative lift of a modal k-ary function:
/// <mu | A1 -> .. -> Ak -> B> => <mu|A1> -> .. -> <mu|Ak> -> <mu|B>.
TmExpr lift_a1(const ModalityExpr& mu, const TyExpr& a, const TyExpr& b);
TmExpr lift_a2(const ModalityExpr& mu, const TyExpr& a, const TyExpr& b, const TyExpr& c);
TmExpr lift_a3(const ModalityExpr& mu, const TyExpr& a, const TyExpr& b, const TyExpr& c,
               const TyExpr& d);

/// Integer interface: terms for addition and negation whose inferred types
/// must match A -> A -> A and A -> A.
struct IntStructure {
  TmExpr add, negate;
};

Tcm<IntStructure> make_int_structure(const Elaborator& elab, const TyExpr& a, const TmExpr& add,
                                     const TmExpr& negate);

// --- the integer example -------------------------------------------------

HostValue diff_nat(std::uint64_t a, std::uint64_t b);       // pair of naturals
HostValue sign_nat(bool positive, std::uint64_t n);         // signed natural
bool int_related(const HostValue& diff, const HostValue& sign);

RelCodePtr z_code();
TyExpr z_ty();
IntStructure z_int();

/// subtract s = lam a. lam b. add s a (negate s b).
TmExpr subtract(const IntStructure& s, const TyExpr& a);
TmExpr subtract_star_left();
TmExpr subtract_star_right();

/// Literal of <forget-right|Z> holding the difference representation.
TmExpr z_diff_lit(std::uint64_t a, std::uint64_t b);
/// Literal of <forget-left|Z> holding the signed representation.
TmExpr z_sign_lit(bool positive, std::uint64_t n);
/// Related literal of Z at the wedge mode (canonical pair for an integer).
TmExpr z_int_lit(std::int64_t k);

ModeTheoryPtr mode_theory();
const AppConfig& app();

}  // namespace param
}  // namespace mstt
