// Executable presheaf-model layer: base categories, semantic contexts,
// types and terms, function/discrete/product types, dependent right
// adjoints and two-cells.
//
// Everything here is immutable after construction; closures capture only
// immutable data, so semantic objects can be shared and evaluated from
// several threads at once.
#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "mstt/host.hpp"

namespace mstt {

/// Raised when a semantic value is destructed at the wrong tag. Accepted
/// programs never trigger this; a panic during evaluation of an accepted
/// program is a soundness bug.
struct TagPanic : std::logic_error {
  explicit TagPanic(const std::string& what) : std::logic_error(what) {}
};

enum class WedgePoint { left, right, relation };

/// Dynamic object of one of the shipped base categories: the one-object
/// category, stages of the topos of trees, or the walking cospan.
class Obj {
 public:
  enum class Kind { star, stage, wedge };

  static Obj star() { return Obj(Kind::star, 0, WedgePoint::left); }
  static Obj stage(std::uint64_t n) { return Obj(Kind::stage, n, WedgePoint::left); }
  static Obj wedge(WedgePoint p) { return Obj(Kind::wedge, 0, p); }

  Kind kind() const { return kind_; }
  std::uint64_t stage_index() const;
  WedgePoint wedge_point() const;

  friend bool operator==(const Obj& a, const Obj& b) {
    return a.kind_ == b.kind_ && a.n_ == b.n_ && a.p_ == b.p_;
  }
  friend bool operator!=(const Obj& a, const Obj& b) { return !(a == b); }

  std::string show() const;

 private:
  Obj(Kind k, std::uint64_t n, WedgePoint p) : kind_(k), n_(n), p_(p) {}
  Kind kind_;
  std::uint64_t n_;
  WedgePoint p_;
};

/// Morphisms are (source, target) pairs; each category supplies the
/// validity check. All shipped categories are thin, so the pair is the
/// whole morphism.
struct Hom {
  Obj src, dst;
};

class BaseCategory {
 public:
  BaseCategory(std::string name,
               std::function<bool(const Hom&)> valid,
               std::function<std::vector<Obj>(std::uint64_t)> objects_up_to);

  const std::string& name() const { return name_; }

  Hom id(const Obj& x) const { return Hom{x, x}; }
  /// g after f: compose(g : Hom y z, f : Hom x y) -> Hom x z.
  Hom compose(const Hom& g, const Hom& f) const;
  bool valid(const Hom& f) const { return valid_(f); }
  void require_valid(const Hom& f) const;

  /// Objects for exhaustive probing; `bound` caps the stage for the
  /// infinite category, the finite ones ignore it.
  std::vector<Obj> objects_up_to(std::uint64_t bound) const { return objects_(bound); }
  /// All morphisms between probe objects (thin categories: 0 or 1 each).
  std::vector<Hom> homs_up_to(std::uint64_t bound) const;

 private:
  std::string name_;
  std::function<bool(const Hom&)> valid_;
  std::function<std::vector<Obj>(std::uint64_t)> objects_;
};

using BaseCategoryPtr = std::shared_ptr<const BaseCategory>;

/// The trivial one-object category.
BaseCategoryPtr star_category();

class SemValue;
using Env = std::vector<SemValue>;

/// Dynamic tagged semantic value: the executable stand-in for dependent
/// indexing. Destructors panic on tag mismatch rather than coerce.
class SemValue {
 public:
  struct Fun {
    // apply(y, rho : Hom y x, input at y) -> output at y. The closure has
    // captured the environment at x and restricts it along rho itself.
    std::function<SemValue(const Obj&, const Hom&, const SemValue&)> apply;
  };
  struct Fam {
    // Stage-indexed compatible family (cells of a forever-type).
    std::function<SemValue(std::uint64_t)> at;
  };

  static SemValue nat(std::uint64_t n);
  static SemValue boolean(bool b);
  static SemValue unit();
  static SemValue pair(SemValue a, SemValue b);
  static SemValue fun(std::function<SemValue(const Obj&, const Hom&, const SemValue&)> f);
  static SemValue vec(std::vector<SemValue> items);
  static SemValue fam(std::function<SemValue(std::uint64_t)> f);
  static SemValue rel(SemValue left, SemValue right);
  static SemValue host(HostValue payload, std::string tag);

  bool is_nat() const;
  bool is_bool() const;
  bool is_unit() const;
  bool is_pair() const;
  bool is_fun() const;
  bool is_vec() const;
  bool is_fam() const;
  bool is_rel() const;
  bool is_host() const;

  std::uint64_t nat_value() const;
  bool bool_value() const;
  const SemValue& first() const;
  const SemValue& second() const;
  SemValue apply(const Obj& y, const Hom& rho, const SemValue& v) const;
  const std::vector<SemValue>& vec_items() const;
  SemValue fam_at(std::uint64_t n) const;
  const SemValue& rel_left() const;
  const SemValue& rel_right() const;
  const HostValue& host_payload() const;
  const std::string& host_tag() const;

  std::string show() const;

 private:
  struct NatV { std::uint64_t n; };
  struct BoolV { bool b; };
  struct UnitV {};
  struct PairV;
  struct VecV { std::vector<SemValue> items; };
  struct RelV;
  struct HostV { HostValue payload; std::string tag; };
  using Node = std::variant<NatV, BoolV, UnitV, PairV, Fun, VecV, Fam, RelV, HostV>;

  explicit SemValue(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct SemValue::PairV { SemValue first, second; };
struct SemValue::RelV { SemValue left, right; };

/// Descriptor of the environment domain at one object of a context.
struct CellDesc {
  bool empty = false;      // no environments inhabit this cell
  std::size_t arity = 0;   // number of binder slots
};

/// A semantic context: a presheaf of environments over a base category.
/// Environments are flat sequences of values, rightmost = most recent
/// binder; locks reshape objects but never the sequence.
class SemCtx {
 public:
  SemCtx(BaseCategoryPtr base,
         std::function<CellDesc(const Obj&)> cell,
         std::function<Env(const Hom&, const Env&)> restrict_env);

  const BaseCategory& base() const { return *base_; }
  BaseCategoryPtr base_ptr() const { return base_; }
  CellDesc cell(const Obj& x) const { return cell_(x); }
  /// Restriction along f : Hom x y, mapping environments at y to x.
  Env restrict(const Hom& f, const Env& gamma) const { return restrict_(f, gamma); }

 private:
  BaseCategoryPtr base_;
  std::function<CellDesc(const Obj&)> cell_;
  std::function<Env(const Hom&, const Env&)> restrict_;
};

/// A semantic type over an (implicitly captured) context. The membership
/// predicate is a testing oracle; cells are checked, not enumerated.
/// Restriction receives the environment at the morphism's target and
/// computes the restricted environment internally where it needs one.
class SemTy {
 public:
  SemTy(std::function<bool(const Obj&, const Env&, const SemValue&)> member,
        std::function<SemValue(const Hom&, const Env&, const SemValue&)> restrict_value);

  bool member(const Obj& x, const Env& gamma, const SemValue& v) const { return member_(x, gamma, v); }
  SemValue restrict(const Hom& f, const Env& gamma_y, const SemValue& v) const {
    return restrict_(f, gamma_y, v);
  }

 private:
  std::function<bool(const Obj&, const Env&, const SemValue&)> member_;
  std::function<SemValue(const Hom&, const Env&, const SemValue&)> restrict_;
};

/// MSTT types never depend on context variables, so their denotations are
/// context-generic factories.
class ClosedSemTy {
 public:
  explicit ClosedSemTy(std::function<SemTy(const SemCtx&)> make) : make_(std::move(make)) {}
  SemTy at(const SemCtx& ctx) const { return make_(ctx); }

 private:
  std::function<SemTy(const SemCtx&)> make_;
};

/// A semantic term: a value in the type's cell for every object and
/// environment, natural in the object (tested, not enforced).
class SemTm {
 public:
  explicit SemTm(std::function<SemValue(const Obj&, const Env&)> at) : at_(std::move(at)) {}
  SemValue at(const Obj& x, const Env& gamma) const { return at_(x, gamma); }

 private:
  std::function<SemValue(const Obj&, const Env&)> at_;
};

/// Natural isomorphism between two semantic types over one context:
/// mutually inverse value maps, compatible with restriction.
struct SemTyIso {
  std::function<SemValue(const Obj&, const Env&, const SemValue&)> forward;   // T-cell -> S-cell
  std::function<SemValue(const Obj&, const Env&, const SemValue&)> backward;  // S-cell -> T-cell
};

/// Context-generic family of type isomorphisms (closed types are
/// determined by their manifestation in the empty context, so one family
/// covers every context).
struct ClosedTyIso {
  std::function<SemTyIso(const SemCtx&)> at;
};

ClosedTyIso identity_iso();
ClosedTyIso compose_iso(const ClosedTyIso& second, const ClosedTyIso& first);
ClosedTyIso invert_iso(const ClosedTyIso& iso);

/// Transport a term of the iso's S-side to its T-side (pointwise
/// application of the backward map).
SemTm iso_transport(const SemTyIso& iso, const SemTm& t);

/// Maps a value sitting under a modal wrapper by a transformer of the
/// wrapped cells. Arguments: object of the locked context, environment of
/// the locked context, wrapped value.
using CellMap = std::function<SemValue(const Obj&, const Env&, const SemValue&)>;

/// A dependent right adjoint interpreting one modality mu : m -> n.
/// `lock` maps contexts of the codomain mode to the domain mode, `mod`
/// maps closed types the other way; intro/elim are mutually inverse.
struct Dra {
  BaseCategoryPtr dom_cat;  // category of m
  BaseCategoryPtr cod_cat;  // category of n

  std::function<SemCtx(const SemCtx&)> lock;
  std::function<ClosedSemTy(const ClosedSemTy&)> mod;
  // intro(Gamma at n, T at m, t over lock(Gamma)) -> term over Gamma of mod(T)
  std::function<SemTm(const SemCtx&, const ClosedSemTy&, const SemTm&)> intro;
  std::function<SemTm(const SemCtx&, const ClosedSemTy&, const SemTm&)> elim;
  // map_cell(Gamma, x, gamma, v in mod(T) cell, h) applies h under the wrapper.
  std::function<SemValue(const SemCtx&, const Obj&, const Env&, const SemValue&, const CellMap&)> map_cell;
  // Object map of the lock functor where defined: lock(G)<x> = G<obj(x)>.
  // Partial for locks with empty cells (the forget modalities).
  std::function<std::optional<Obj>(const Obj&)> lock_obj;
};

Dra dra_unit(const BaseCategoryPtr& cat);
/// Composite mu (after) rho: lock composes contravariantly, mod covariantly.
Dra dra_compose(const Dra& mu, const Dra& rho);

/// Semantic two-cell alpha : mu => rho between two DRAs: a natural family
/// of environment maps from lock_rho(Gamma) cells to lock_mu(Gamma) cells.
struct SemTwoCell {
  std::function<Env(const SemCtx&, const Obj&, const Env&)> transport;
};

SemTwoCell two_cell_identity();
/// Vertical composite of a : mu => rho with b : kappa => mu, yielding kappa => rho.
SemTwoCell two_cell_vert(const SemTwoCell& a, const SemTwoCell& b);
/// Horizontal composite of a1 : mu1 => rho1 and a2 : mu2 => rho2, yielding
/// mu1 o mu2 => rho1 o rho2. Needs the lock object map of mu2 and the lock
/// of rho1 to whisker; unused by the type checker.
SemTwoCell two_cell_horiz(const SemTwoCell& a1, const Dra& rho1, const SemTwoCell& a2, const Dra& mu2);

/// Witness that two modalities denote equivalent DRAs: a type isomorphism
/// ⟨mu|A⟩ ≅ ⟨rho|A⟩ for every closed A, plus the environment transport
/// between the lock cells (identity for both shipped mode theories, where
/// equivalent modalities have cell-wise equal locks).
struct SemModalityIso {
  std::function<ClosedTyIso(const ClosedSemTy&)> eq_mod_closed;
  std::function<Env(const SemCtx&, const Obj&, const Env&)> lock_transport;
};

// --- context and type formers -------------------------------------------

/// Empty context: every cell is the singleton empty environment.
SemCtx ctx_empty(const BaseCategoryPtr& cat);

/// Context extension: cells are environments of the parent extended by a
/// value of A (already modal-wrapped by the caller when needed).
SemCtx ctx_extend(const SemCtx& parent, const ClosedSemTy& a);

/// Function type: cells are FunV closures that accept any morphism into
/// the current object, per PshFun. Restriction precomposes the morphism.
ClosedSemTy fun_ty(const ClosedSemTy& t, const ClosedSemTy& s);
/// Lambda: body lives over ctx_extend(gamma, t).
SemTm fun_lam(const SemCtx& gamma, const SemTm& body);
/// Application at the identity morphism.
SemTm fun_app(const SemCtx& gamma, const SemTm& f, const SemTm& t);

ClosedSemTy nat_ty();
ClosedSemTy bool_ty();

ClosedSemTy prod_ty(const ClosedSemTy& t, const ClosedSemTy& s);
SemTm pair_tm(const SemTm& t, const SemTm& s);
SemTm fst_tm(const SemTm& t);
SemTm snd_tm(const SemTm& t);

// Built-in term denotations over any context.
SemTm lit_tm(std::uint64_t n);
SemTm true_tm();
SemTm false_tm();
SemTm suc_tm();
SemTm plus_tm();
SemTm nat_elim_tm(const SemCtx& gamma, const SemTm& z, const SemTm& s);
SemTm if_tm(const SemTm& c, const SemTm& t, const SemTm& e);

/// Substitute a term for the top variable: at(x, g) = s.at(x, g ++ [t.at(x, g)]).
SemTm subst_top(const SemTm& s, const SemTm& t);

}  // namespace mstt
