// Extrinsically-typed syntax of MSTT types, contexts and terms, indexed by
// mode, with extension nodes for application-specific formers and the modal
// function sugar. Names are raw strings; shadowing resolves to the rightmost
// binder during checking. Syntax trees are immutable values.
#pragma once

#include <cassert>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "mstt/mode_theory.hpp"

namespace mstt {

class TyExpr {
 public:
  enum class Kind { nat, boolean, arrow, prod, modal, ext };

  static TyExpr nat(ModeExpr m);
  static TyExpr boolean(ModeExpr m);
  static TyExpr arrow(TyExpr t, TyExpr s);
  static TyExpr prod(TyExpr t, TyExpr s);
  static TyExpr modal(ModalityExpr mu, TyExpr t);
  static TyExpr ext(std::string code, std::vector<TyExpr> args, ModeExpr m);

  Kind kind() const { return node_->kind; }
  const ModeExpr& mode() const { return node_->mode; }

  TyExpr left() const;                 // arrow domain / prod left
  TyExpr right() const;                // arrow codomain / prod right
  const ModalityExpr& modality() const;
  TyExpr body() const;                 // modal component
  const std::string& ext_code() const;
  const std::vector<TyExpr>& ext_args() const;

  bool is_arrow() const { return kind() == Kind::arrow; }
  bool is_modal() const { return kind() == Kind::modal; }
  bool is_prod() const { return kind() == Kind::prod; }

  friend bool operator==(const TyExpr& a, const TyExpr& b);
  friend bool operator!=(const TyExpr& a, const TyExpr& b) { return !(a == b); }

  std::string show() const;

 private:
  struct Node {
    Kind kind;
    ModeExpr mode;
    std::shared_ptr<const Node> lhs, rhs;  // arrow/prod
    std::shared_ptr<const ModalityExpr> mu;
    std::shared_ptr<const Node> inner;     // modal
    std::string code;
    std::vector<TyExpr> args;
  };
  explicit TyExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

class CtxExpr {
 public:
  enum class Kind { empty, bind, lock };

  static CtxExpr empty(ModeExpr m);
  CtxExpr bind(const ModalityExpr& mu, const std::string& name, const TyExpr& ty) const;
  CtxExpr lock(const ModalityExpr& mu) const;

  Kind kind() const { return node_->kind; }
  const ModeExpr& mode() const { return node_->mode; }
  CtxExpr parent() const;
  const ModalityExpr& modality() const;
  const std::string& binder_name() const;
  const TyExpr& binder_type() const;

  std::string show() const;

 private:
  struct Node {
    Kind kind;
    ModeExpr mode;
    std::shared_ptr<const Node> parent;
    std::shared_ptr<const ModalityExpr> mu;
    std::string name;
    std::shared_ptr<const TyExpr> ty;
  };
  explicit CtxExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

class TmExpr;

/// Argument of a term extension node: a type, a sub-term, a raw name, a
/// numeral, or an opaque payload owned by the registering application.
using TmExtArg = std::variant<TyExpr, TmExpr, std::string, std::uint64_t,
                              std::shared_ptr<const void>>;

class TmExpr {
 public:
  enum class Kind {
    ann, var, lam, app, lit, suc, plus, nat_elim, true_, false_, if_, pair, fst, snd,
    mod_intro, mod_elim, ext
  };

  static TmExpr ann(TmExpr t, TyExpr ty);
  static TmExpr var(std::string name, TwoCellExpr cell, ModeExpr m);
  static TmExpr lam(std::string name, TyExpr ty, TmExpr body);
  static TmExpr app(TmExpr f, TmExpr t);
  static TmExpr lit(std::uint64_t n, ModeExpr m);
  static TmExpr suc(ModeExpr m);
  static TmExpr plus(ModeExpr m);
  static TmExpr nat_elim(TmExpr z, TmExpr s);
  static TmExpr true_tm(ModeExpr m);
  static TmExpr false_tm(ModeExpr m);
  static TmExpr if_tm(TmExpr c, TmExpr t, TmExpr e);
  static TmExpr pair(TmExpr t, TmExpr s);
  static TmExpr fst(TmExpr t);
  static TmExpr snd(TmExpr t);
  static TmExpr mod_intro(ModalityExpr mu, TmExpr t);
  /// let' mod<mu> x <- t in' s  (the single-modality eliminator).
  static TmExpr mod_elim(ModalityExpr mu, std::string name, TmExpr t, TmExpr s);
  /// Generalized eliminator let<rho> mod<mu> x <- t in' s. Accepted
  /// syntactically; the checker only admits rho equivalent to the unit.
  static TmExpr mod_elim_prefixed(ModalityExpr rho, ModalityExpr mu, std::string name, TmExpr t,
                                  TmExpr s);
  static TmExpr ext(std::string code, std::vector<TmExtArg> args, ModeExpr m);

  Kind kind() const { return node_->kind; }
  const ModeExpr& mode() const { return node_->mode; }

  TmExpr child(std::size_t i) const;
  std::size_t child_count() const;
  const TyExpr& type_ann() const;      // ann / lam binder type
  const std::string& name() const;     // var / lam / mod_elim binder
  const TwoCellExpr& cell() const;     // var
  std::uint64_t literal() const;       // lit
  const ModalityExpr& modality() const;           // mod_intro / mod_elim mu
  const ModalityExpr& elim_prefix() const;        // mod_elim rho
  const std::string& ext_code() const;
  const std::vector<TmExtArg>& ext_args() const;

  friend bool operator==(const TmExpr& a, const TmExpr& b);
  friend bool operator!=(const TmExpr& a, const TmExpr& b) { return !(a == b); }

  std::string show() const;

 private:
  struct Node {
    Kind kind;
    ModeExpr mode;
    std::vector<TmExpr> children;
    std::shared_ptr<const TyExpr> ty;
    std::string name;
    TwoCellExpr cell{"id-cell"};
    std::uint64_t lit = 0;
    std::shared_ptr<const ModalityExpr> mu, rho;
    std::string code;
    std::vector<TmExtArg> args;
  };
  explicit TmExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// var x id-cell.
TmExpr svar(std::string name, ModeExpr m);

/// lam[ mu | x : T ] b, desugared per its definition:
/// lam[ x : <mu|T> ] (let' mod<mu> x <- var x id-cell in' b).
TmExpr sugar_modal_lam(const ModalityExpr& mu, const std::string& name, const TyExpr& ty,
                       const TmExpr& body);

/// f .<mu> t = f . (mod<mu> t).
TmExpr sugar_modal_app(const TmExpr& f, const ModalityExpr& mu, const TmExpr& t);

}  // namespace mstt
