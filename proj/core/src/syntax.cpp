#include "mstt/syntax.hpp"

#include <sstream>

namespace mstt {

// --- types -----------------------------------------------------------------

TyExpr TyExpr::nat(ModeExpr m) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::nat;
  n->mode = std::move(m);
  return TyExpr(std::move(n));
}

TyExpr TyExpr::boolean(ModeExpr m) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::boolean;
  n->mode = std::move(m);
  return TyExpr(std::move(n));
}

TyExpr TyExpr::arrow(TyExpr t, TyExpr s) {
  assert(t.mode() == s.mode());
  auto n = std::make_shared<Node>();
  n->kind = Kind::arrow;
  n->mode = t.mode();
  n->lhs = t.node_;
  n->rhs = s.node_;
  return TyExpr(std::move(n));
}

TyExpr TyExpr::prod(TyExpr t, TyExpr s) {
  assert(t.mode() == s.mode());
  auto n = std::make_shared<Node>();
  n->kind = Kind::prod;
  n->mode = t.mode();
  n->lhs = t.node_;
  n->rhs = s.node_;
  return TyExpr(std::move(n));
}

TyExpr TyExpr::modal(ModalityExpr mu, TyExpr t) {
  assert(t.mode() == mu.dom());
  auto n = std::make_shared<Node>();
  n->kind = Kind::modal;
  n->mode = mu.cod();
  n->mu = std::make_shared<const ModalityExpr>(std::move(mu));
  n->inner = t.node_;
  return TyExpr(std::move(n));
}

TyExpr TyExpr::ext(std::string code, std::vector<TyExpr> args, ModeExpr m) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::ext;
  n->mode = std::move(m);
  n->code = std::move(code);
  n->args = std::move(args);
  return TyExpr(std::move(n));
}

TyExpr TyExpr::left() const {
  assert(kind() == Kind::arrow || kind() == Kind::prod);
  return TyExpr(node_->lhs);
}

TyExpr TyExpr::right() const {
  assert(kind() == Kind::arrow || kind() == Kind::prod);
  return TyExpr(node_->rhs);
}

const ModalityExpr& TyExpr::modality() const {
  assert(kind() == Kind::modal);
  return *node_->mu;
}

TyExpr TyExpr::body() const {
  assert(kind() == Kind::modal);
  return TyExpr(node_->inner);
}

const std::string& TyExpr::ext_code() const {
  assert(kind() == Kind::ext);
  return node_->code;
}

const std::vector<TyExpr>& TyExpr::ext_args() const {
  assert(kind() == Kind::ext);
  return node_->args;
}

bool operator==(const TyExpr& a, const TyExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.mode() != b.mode()) return false;
  switch (a.kind()) {
    case TyExpr::Kind::nat:
    case TyExpr::Kind::boolean: return true;
    case TyExpr::Kind::arrow:
    case TyExpr::Kind::prod: return a.left() == b.left() && a.right() == b.right();
    case TyExpr::Kind::modal: return a.modality() == b.modality() && a.body() == b.body();
    case TyExpr::Kind::ext: {
      if (a.ext_code() != b.ext_code() || a.ext_args().size() != b.ext_args().size()) return false;
      for (std::size_t i = 0; i < a.ext_args().size(); ++i)
        if (!(a.ext_args()[i] == b.ext_args()[i])) return false;
      return true;
    }
  }
  return false;
}

namespace {

std::string show_ty(const TyExpr& t, int prec);

// prec: 0 = arrow position, 1 = product operand, 2 = atom.
std::string show_ty(const TyExpr& t, int prec) {
  switch (t.kind()) {
    case TyExpr::Kind::nat: return "Nat";
    case TyExpr::Kind::boolean: return "Bool";
    case TyExpr::Kind::arrow: {
      std::string s = show_ty(t.left(), 1) + " -> " + show_ty(t.right(), 0);
      return prec > 0 ? "(" + s + ")" : s;
    }
    case TyExpr::Kind::prod: {
      std::string s = show_ty(t.left(), 1) + " * " + show_ty(t.right(), 2);
      return prec > 1 ? "(" + s + ")" : s;
    }
    case TyExpr::Kind::modal:
      return "<" + t.modality().show() + "|" + show_ty(t.body(), 0) + ">";
    case TyExpr::Kind::ext: {
      std::string s = t.ext_code();
      for (const TyExpr& a : t.ext_args()) s += " " + show_ty(a, 2);
      return (prec > 1 && !t.ext_args().empty()) ? "(" + s + ")" : s;
    }
  }
  return "?";
}

}  // namespace

std::string TyExpr::show() const { return show_ty(*this, 0); }

// --- contexts ---------------------------------------------------------------

CtxExpr CtxExpr::empty(ModeExpr m) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::empty;
  n->mode = std::move(m);
  return CtxExpr(std::move(n));
}

CtxExpr CtxExpr::bind(const ModalityExpr& mu, const std::string& name, const TyExpr& ty) const {
  assert(mode() == mu.cod());
  assert(ty.mode() == mu.dom());
  auto n = std::make_shared<Node>();
  n->kind = Kind::bind;
  n->mode = mode();
  n->parent = node_;
  n->mu = std::make_shared<const ModalityExpr>(mu);
  n->name = name;
  n->ty = std::make_shared<const TyExpr>(ty);
  return CtxExpr(std::move(n));
}

CtxExpr CtxExpr::lock(const ModalityExpr& mu) const {
  assert(mode() == mu.cod());
  auto n = std::make_shared<Node>();
  n->kind = Kind::lock;
  n->mode = mu.dom();
  n->parent = node_;
  n->mu = std::make_shared<const ModalityExpr>(mu);
  return CtxExpr(std::move(n));
}

CtxExpr CtxExpr::parent() const {
  assert(kind() != Kind::empty);
  return CtxExpr(node_->parent);
}

const ModalityExpr& CtxExpr::modality() const {
  assert(kind() != Kind::empty);
  return *node_->mu;
}

const std::string& CtxExpr::binder_name() const {
  assert(kind() == Kind::bind);
  return node_->name;
}

const TyExpr& CtxExpr::binder_type() const {
  assert(kind() == Kind::bind);
  return *node_->ty;
}

std::string CtxExpr::show() const {
  switch (kind()) {
    case Kind::empty: return "<>";
    case Kind::bind:
      return parent().show() + ", " + modality().show() + "|" + binder_name() + " : " +
             binder_type().show();
    case Kind::lock: return parent().show() + ", lock<" + modality().show() + ">";
  }
  return "?";
}

// --- terms ---------------------------------------------------------------------

TmExpr TmExpr::ann(TmExpr t, TyExpr ty) {
  assert(t.mode() == ty.mode());
  auto n = std::make_shared<Node>();
  n->kind = Kind::ann;
  n->mode = t.mode();
  n->children = {std::move(t)};
  n->ty = std::make_shared<const TyExpr>(std::move(ty));
  return TmExpr(std::move(n));
}

TmExpr TmExpr::var(std::string name, TwoCellExpr cell, ModeExpr m) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::var;
  n->mode = std::move(m);
  n->name = std::move(name);
  n->cell = std::move(cell);
  return TmExpr(std::move(n));
}

TmExpr TmExpr::lam(std::string name, TyExpr ty, TmExpr body) {
  assert(ty.mode() == body.mode());
  auto n = std::make_shared<Node>();
  n->kind = Kind::lam;
  n->mode = body.mode();
  n->name = std::move(name);
  n->ty = std::make_shared<const TyExpr>(std::move(ty));
  n->children = {std::move(body)};
  return TmExpr(std::move(n));
}

TmExpr TmExpr::app(TmExpr f, TmExpr t) {
  assert(f.mode() == t.mode());
  auto n = std::make_shared<Node>();
  n->kind = Kind::app;
  n->mode = f.mode();
  n->children = {std::move(f), std::move(t)};
  return TmExpr(std::move(n));
}

TmExpr TmExpr::lit(std::uint64_t v, ModeExpr m) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::lit;
  n->mode = std::move(m);
  n->lit = v;
  return TmExpr(std::move(n));
}

TmExpr TmExpr::suc(ModeExpr m) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::suc;
  n->mode = std::move(m);
  return TmExpr(std::move(n));
}

TmExpr TmExpr::plus(ModeExpr m) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::plus;
  n->mode = std::move(m);
  return TmExpr(std::move(n));
}

TmExpr TmExpr::nat_elim(TmExpr z, TmExpr s) {
  assert(z.mode() == s.mode());
  auto n = std::make_shared<Node>();
  n->kind = Kind::nat_elim;
  n->mode = z.mode();
  n->children = {std::move(z), std::move(s)};
  return TmExpr(std::move(n));
}

TmExpr TmExpr::true_tm(ModeExpr m) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::true_;
  n->mode = std::move(m);
  return TmExpr(std::move(n));
}

TmExpr TmExpr::false_tm(ModeExpr m) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::false_;
  n->mode = std::move(m);
  return TmExpr(std::move(n));
}

TmExpr TmExpr::if_tm(TmExpr c, TmExpr t, TmExpr e) {
  assert(c.mode() == t.mode() && t.mode() == e.mode());
  auto n = std::make_shared<Node>();
  n->kind = Kind::if_;
  n->mode = c.mode();
  n->children = {std::move(c), std::move(t), std::move(e)};
  return TmExpr(std::move(n));
}

TmExpr TmExpr::pair(TmExpr t, TmExpr s) {
  assert(t.mode() == s.mode());
  auto n = std::make_shared<Node>();
  n->kind = Kind::pair;
  n->mode = t.mode();
  n->children = {std::move(t), std::move(s)};
  return TmExpr(std::move(n));
}

TmExpr TmExpr::fst(TmExpr t) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::fst;
  n->mode = t.mode();
  n->children = {std::move(t)};
  return TmExpr(std::move(n));
}

TmExpr TmExpr::snd(TmExpr t) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::snd;
  n->mode = t.mode();
  n->children = {std::move(t)};
  return TmExpr(std::move(n));
}

TmExpr TmExpr::mod_intro(ModalityExpr mu, TmExpr t) {
  assert(t.mode() == mu.dom());
  auto n = std::make_shared<Node>();
  n->kind = Kind::mod_intro;
  n->mode = mu.cod();
  n->mu = std::make_shared<const ModalityExpr>(std::move(mu));
  n->children = {std::move(t)};
  return TmExpr(std::move(n));
}

TmExpr TmExpr::mod_elim(ModalityExpr mu, std::string name, TmExpr t, TmExpr s) {
  ModalityExpr trivial = ModalityExpr::unit(mu.cod());
  return mod_elim_prefixed(std::move(trivial), std::move(mu), std::move(name), std::move(t),
                           std::move(s));
}

TmExpr TmExpr::mod_elim_prefixed(ModalityExpr rho, ModalityExpr mu, std::string name, TmExpr t,
                                 TmExpr s) {
  assert(rho.dom() == mu.cod());
  assert(t.mode() == rho.dom() || t.mode() == rho.cod());
  auto n = std::make_shared<Node>();
  n->kind = Kind::mod_elim;
  n->mode = s.mode();
  n->mu = std::make_shared<const ModalityExpr>(std::move(mu));
  n->rho = std::make_shared<const ModalityExpr>(std::move(rho));
  n->name = std::move(name);
  n->children = {std::move(t), std::move(s)};
  return TmExpr(std::move(n));
}

TmExpr TmExpr::ext(std::string code, std::vector<TmExtArg> args, ModeExpr m) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::ext;
  n->mode = std::move(m);
  n->code = std::move(code);
  n->args = std::move(args);
  return TmExpr(std::move(n));
}

TmExpr TmExpr::child(std::size_t i) const {
  assert(i < node_->children.size());
  return node_->children[i];
}

std::size_t TmExpr::child_count() const { return node_->children.size(); }

const TyExpr& TmExpr::type_ann() const {
  assert(node_->ty != nullptr);
  return *node_->ty;
}

const std::string& TmExpr::name() const { return node_->name; }
const TwoCellExpr& TmExpr::cell() const { return node_->cell; }
std::uint64_t TmExpr::literal() const { return node_->lit; }

const ModalityExpr& TmExpr::modality() const {
  assert(node_->mu != nullptr);
  return *node_->mu;
}

const ModalityExpr& TmExpr::elim_prefix() const {
  assert(kind() == Kind::mod_elim);
  return *node_->rho;
}

const std::string& TmExpr::ext_code() const {
  assert(kind() == Kind::ext);
  return node_->code;
}

const std::vector<TmExtArg>& TmExpr::ext_args() const {
  assert(kind() == Kind::ext);
  return node_->args;
}

namespace {

bool ext_arg_equal(const TmExtArg& a, const TmExtArg& b) {
  if (a.index() != b.index()) return false;
  if (std::holds_alternative<TyExpr>(a)) return std::get<TyExpr>(a) == std::get<TyExpr>(b);
  if (std::holds_alternative<TmExpr>(a)) return std::get<TmExpr>(a) == std::get<TmExpr>(b);
  if (std::holds_alternative<std::string>(a))
    return std::get<std::string>(a) == std::get<std::string>(b);
  if (std::holds_alternative<std::uint64_t>(a))
    return std::get<std::uint64_t>(a) == std::get<std::uint64_t>(b);
  return std::get<std::shared_ptr<const void>>(a) == std::get<std::shared_ptr<const void>>(b);
}

}  // namespace

bool operator==(const TmExpr& a, const TmExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.mode() != b.mode()) return false;
  if (a.child_count() != b.child_count()) return false;
  for (std::size_t i = 0; i < a.child_count(); ++i)
    if (!(a.child(i) == b.child(i))) return false;
  switch (a.kind()) {
    case TmExpr::Kind::ann: return a.type_ann() == b.type_ann();
    case TmExpr::Kind::var: return a.name() == b.name() && a.cell() == b.cell();
    case TmExpr::Kind::lam: return a.name() == b.name() && a.type_ann() == b.type_ann();
    case TmExpr::Kind::lit: return a.literal() == b.literal();
    case TmExpr::Kind::mod_intro: return a.modality() == b.modality();
    case TmExpr::Kind::mod_elim:
      return a.name() == b.name() && a.modality() == b.modality() &&
             a.elim_prefix() == b.elim_prefix();
    case TmExpr::Kind::ext: {
      if (a.ext_code() != b.ext_code() || a.ext_args().size() != b.ext_args().size()) return false;
      for (std::size_t i = 0; i < a.ext_args().size(); ++i)
        if (!ext_arg_equal(a.ext_args()[i], b.ext_args()[i])) return false;
      return true;
    }
    default: return true;
  }
}

std::string TmExpr::show() const {
  switch (kind()) {
    case Kind::ann: return "(" + child(0).show() + " : " + type_ann().show() + ")";
    case Kind::var:
      return cell().is_id() ? name() : "var " + name() + " " + cell().tag;
    case Kind::lam:
      return "lam[" + name() + " : " + type_ann().show() + "] " + child(0).show();
    case Kind::app: return "(" + child(0).show() + " . " + child(1).show() + ")";
    case Kind::lit: return std::to_string(literal());
    case Kind::suc: return "suc";
    case Kind::plus: return "plus";
    case Kind::nat_elim: return "nat-elim (" + child(0).show() + ") (" + child(1).show() + ")";
    case Kind::true_: return "true";
    case Kind::false_: return "false";
    case Kind::if_:
      return "if (" + child(0).show() + ") (" + child(1).show() + ") (" + child(2).show() + ")";
    case Kind::pair: return "pair (" + child(0).show() + ") (" + child(1).show() + ")";
    case Kind::fst: return "fst (" + child(0).show() + ")";
    case Kind::snd: return "snd (" + child(0).show() + ")";
    case Kind::mod_intro: return "mod<" + modality().show() + "> (" + child(0).show() + ")";
    case Kind::mod_elim: {
      std::string prefix =
          elim_prefix().kind() == ModalityExpr::Kind::unit ? "" : "<" + elim_prefix().show() + ">";
      return "let" + prefix + " mod<" + modality().show() + "> " + name() + " <- " +
             child(0).show() + " in " + child(1).show();
    }
    case Kind::ext: {
      std::string s = ext_code();
      for (const TmExtArg& a : ext_args()) {
        if (std::holds_alternative<TyExpr>(a)) s += " " + std::get<TyExpr>(a).show();
        else if (std::holds_alternative<TmExpr>(a)) s += " (" + std::get<TmExpr>(a).show() + ")";
        else if (std::holds_alternative<std::string>(a)) s += " " + std::get<std::string>(a);
        else if (std::holds_alternative<std::uint64_t>(a))
          s += " " + std::to_string(std::get<std::uint64_t>(a));
        else s += " <payload>";
      }
      return s;
    }
  }
  return "?";
}

TmExpr svar(std::string name, ModeExpr m) {
  return TmExpr::var(std::move(name), TwoCellExpr::id_cell(), std::move(m));
}

TmExpr sugar_modal_lam(const ModalityExpr& mu, const std::string& name, const TyExpr& ty,
                       const TmExpr& body) {
  TmExpr scrutinee = svar(name, mu.cod());
  TmExpr elim = TmExpr::mod_elim(mu, name, scrutinee, body);
  return TmExpr::lam(name, TyExpr::modal(mu, ty), elim);
}

TmExpr sugar_modal_app(const TmExpr& f, const ModalityExpr& mu, const TmExpr& t) {
  return TmExpr::app(f, TmExpr::mod_intro(mu, t));
}

}  // namespace mstt
