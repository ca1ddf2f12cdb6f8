#include "mstt/presheaf.hpp"

#include <sstream>

namespace mstt {

// --- host values ----------------------------------------------------------

std::vector<HostValue> HostStream::take(std::uint64_t k) const {
  std::vector<HostValue> out;
  out.reserve(k);
  for (std::uint64_t i = 0; i < k; ++i) out.push_back(at(i));
  return out;
}

HostValue HostValue::nat(std::uint64_t n) { return HostValue(std::make_shared<Node>(n)); }
HostValue HostValue::boolean(bool b) { return HostValue(std::make_shared<Node>(b)); }
HostValue HostValue::sym(std::string s) { return HostValue(std::make_shared<Node>(std::move(s))); }
HostValue HostValue::pair(HostValue a, HostValue b) {
  return HostValue(std::make_shared<Node>(Pair{std::move(a), std::move(b)}));
}
HostValue HostValue::fn(std::function<HostValue(const HostValue&)> f) {
  return HostValue(std::make_shared<Node>(Fn{std::move(f)}));
}
HostValue HostValue::stream(HostStream s) { return HostValue(std::make_shared<Node>(std::move(s))); }

bool HostValue::is_nat() const { return std::holds_alternative<std::uint64_t>(*node_); }
bool HostValue::is_bool() const { return std::holds_alternative<bool>(*node_); }
bool HostValue::is_sym() const { return std::holds_alternative<std::string>(*node_); }
bool HostValue::is_pair() const { return std::holds_alternative<Pair>(*node_); }
bool HostValue::is_fn() const { return std::holds_alternative<Fn>(*node_); }
bool HostValue::is_stream() const { return std::holds_alternative<HostStream>(*node_); }

std::uint64_t HostValue::as_nat() const { return std::get<std::uint64_t>(*node_); }
bool HostValue::as_bool() const { return std::get<bool>(*node_); }
const std::string& HostValue::as_sym() const { return std::get<std::string>(*node_); }
const HostValue& HostValue::first() const { return std::get<Pair>(*node_).first; }
const HostValue& HostValue::second() const { return std::get<Pair>(*node_).second; }
HostValue HostValue::apply(const HostValue& arg) const { return std::get<Fn>(*node_).call(arg); }
const HostStream& HostValue::as_stream() const { return std::get<HostStream>(*node_); }

bool operator==(const HostValue& a, const HostValue& b) {
  if (a.is_nat() && b.is_nat()) return a.as_nat() == b.as_nat();
  if (a.is_bool() && b.is_bool()) return a.as_bool() == b.as_bool();
  if (a.is_sym() && b.is_sym()) return a.as_sym() == b.as_sym();
  if (a.is_pair() && b.is_pair()) return a.first() == b.first() && a.second() == b.second();
  return false;
}

std::string HostValue::show() const {
  if (is_nat()) return std::to_string(as_nat());
  if (is_bool()) return as_bool() ? "true" : "false";
  if (is_sym()) return as_sym();
  if (is_pair()) return "(" + first().show() + "," + second().show() + ")";
  if (is_fn()) return "<fun>";
  return "<stream>";
}

// --- objects and categories ------------------------------------------------

std::uint64_t Obj::stage_index() const {
  if (kind_ != Kind::stage) throw TagPanic("stage_index on non-stage object " + show());
  return n_;
}

WedgePoint Obj::wedge_point() const {
  if (kind_ != Kind::wedge) throw TagPanic("wedge_point on non-wedge object " + show());
  return p_;
}

std::string Obj::show() const {
  switch (kind_) {
    case Kind::star: return "*";
    case Kind::stage: return std::to_string(n_);
    case Kind::wedge:
      switch (p_) {
        case WedgePoint::left: return "left";
        case WedgePoint::right: return "right";
        default: return "relation";
      }
  }
  return "?";
}

BaseCategory::BaseCategory(std::string name,
                           std::function<bool(const Hom&)> valid,
                           std::function<std::vector<Obj>(std::uint64_t)> objects_up_to)
    : name_(std::move(name)), valid_(std::move(valid)), objects_(std::move(objects_up_to)) {}

Hom BaseCategory::compose(const Hom& g, const Hom& f) const {
  if (!(f.dst == g.src)) throw TagPanic("non-composable morphisms in " + name_);
  Hom h{f.src, g.dst};
  require_valid(h);
  return h;
}

void BaseCategory::require_valid(const Hom& f) const {
  if (!valid_(f)) throw TagPanic("invalid morphism " + f.src.show() + " -> " + f.dst.show() + " in " + name_);
}

std::vector<Hom> BaseCategory::homs_up_to(std::uint64_t bound) const {
  std::vector<Hom> out;
  for (const Obj& x : objects_(bound))
    for (const Obj& y : objects_(bound)) {
      Hom f{x, y};
      if (valid_(f)) out.push_back(f);
    }
  return out;
}

BaseCategoryPtr star_category() {
  static const BaseCategoryPtr cat = std::make_shared<BaseCategory>(
      "star",
      [](const Hom& f) { return f.src.kind() == Obj::Kind::star && f.dst.kind() == Obj::Kind::star; },
      [](std::uint64_t) { return std::vector<Obj>{Obj::star()}; });
  return cat;
}

// --- semantic values --------------------------------------------------------

SemValue SemValue::nat(std::uint64_t n) { return SemValue(std::make_shared<Node>(NatV{n})); }
SemValue SemValue::boolean(bool b) { return SemValue(std::make_shared<Node>(BoolV{b})); }
SemValue SemValue::unit() { return SemValue(std::make_shared<Node>(UnitV{})); }
SemValue SemValue::pair(SemValue a, SemValue b) {
  return SemValue(std::make_shared<Node>(PairV{std::move(a), std::move(b)}));
}
SemValue SemValue::fun(std::function<SemValue(const Obj&, const Hom&, const SemValue&)> f) {
  return SemValue(std::make_shared<Node>(Fun{std::move(f)}));
}
SemValue SemValue::vec(std::vector<SemValue> items) {
  return SemValue(std::make_shared<Node>(VecV{std::move(items)}));
}
SemValue SemValue::fam(std::function<SemValue(std::uint64_t)> f) {
  return SemValue(std::make_shared<Node>(Fam{std::move(f)}));
}
SemValue SemValue::rel(SemValue left, SemValue right) {
  return SemValue(std::make_shared<Node>(RelV{std::move(left), std::move(right)}));
}
SemValue SemValue::host(HostValue payload, std::string tag) {
  return SemValue(std::make_shared<Node>(HostV{std::move(payload), std::move(tag)}));
}

bool SemValue::is_nat() const { return std::holds_alternative<NatV>(*node_); }
bool SemValue::is_bool() const { return std::holds_alternative<BoolV>(*node_); }
bool SemValue::is_unit() const { return std::holds_alternative<UnitV>(*node_); }
bool SemValue::is_pair() const { return std::holds_alternative<PairV>(*node_); }
bool SemValue::is_fun() const { return std::holds_alternative<Fun>(*node_); }
bool SemValue::is_vec() const { return std::holds_alternative<VecV>(*node_); }
bool SemValue::is_fam() const { return std::holds_alternative<Fam>(*node_); }
bool SemValue::is_rel() const { return std::holds_alternative<RelV>(*node_); }
bool SemValue::is_host() const { return std::holds_alternative<HostV>(*node_); }

std::uint64_t SemValue::nat_value() const {
  if (!is_nat()) throw TagPanic("expected NatV, got " + show());
  return std::get<NatV>(*node_).n;
}
bool SemValue::bool_value() const {
  if (!is_bool()) throw TagPanic("expected BoolV, got " + show());
  return std::get<BoolV>(*node_).b;
}
const SemValue& SemValue::first() const {
  if (!is_pair()) throw TagPanic("expected PairV, got " + show());
  return std::get<PairV>(*node_).first;
}
const SemValue& SemValue::second() const {
  if (!is_pair()) throw TagPanic("expected PairV, got " + show());
  return std::get<PairV>(*node_).second;
}
SemValue SemValue::apply(const Obj& y, const Hom& rho, const SemValue& v) const {
  if (!is_fun()) throw TagPanic("expected FunV, got " + show());
  return std::get<Fun>(*node_).apply(y, rho, v);
}
const std::vector<SemValue>& SemValue::vec_items() const {
  if (!is_vec()) throw TagPanic("expected VecV, got " + show());
  return std::get<VecV>(*node_).items;
}
SemValue SemValue::fam_at(std::uint64_t n) const {
  if (!is_fam()) throw TagPanic("expected FamV, got " + show());
  return std::get<Fam>(*node_).at(n);
}
const SemValue& SemValue::rel_left() const {
  if (!is_rel()) throw TagPanic("expected RelV, got " + show());
  return std::get<RelV>(*node_).left;
}
const SemValue& SemValue::rel_right() const {
  if (!is_rel()) throw TagPanic("expected RelV, got " + show());
  return std::get<RelV>(*node_).right;
}
const HostValue& SemValue::host_payload() const {
  if (!is_host()) throw TagPanic("expected HostV, got " + show());
  return std::get<HostV>(*node_).payload;
}
const std::string& SemValue::host_tag() const {
  if (!is_host()) throw TagPanic("expected HostV, got " + show());
  return std::get<HostV>(*node_).tag;
}

std::string SemValue::show() const {
  if (is_nat()) return std::to_string(nat_value());
  if (is_bool()) return bool_value() ? "true" : "false";
  if (is_unit()) return "unit";
  if (is_pair()) return "(" + first().show() + ", " + second().show() + ")";
  if (is_fun()) return "<fun>";
  if (is_vec()) {
    std::ostringstream out;
    out << "[";
    bool sep = false;
    for (const SemValue& v : vec_items()) {
      if (sep) out << ",";
      out << v.show();
      sep = true;
    }
    out << "]";
    return out.str();
  }
  if (is_fam()) return "<family>";
  if (is_rel()) return "(" + rel_left().show() + " ~ " + rel_right().show() + ")";
  return host_payload().show();
}

// --- contexts ----------------------------------------------------------------

SemCtx::SemCtx(BaseCategoryPtr base,
               std::function<CellDesc(const Obj&)> cell,
               std::function<Env(const Hom&, const Env&)> restrict_env)
    : base_(std::move(base)), cell_(std::move(cell)), restrict_(std::move(restrict_env)) {}

SemTy::SemTy(std::function<bool(const Obj&, const Env&, const SemValue&)> member,
             std::function<SemValue(const Hom&, const Env&, const SemValue&)> restrict_value)
    : member_(std::move(member)), restrict_(std::move(restrict_value)) {}

SemCtx ctx_empty(const BaseCategoryPtr& cat) {
  return SemCtx(
      cat,
      [](const Obj&) { return CellDesc{false, 0}; },
      [](const Hom&, const Env& g) { return g; });
}

SemCtx ctx_extend(const SemCtx& parent, const ClosedSemTy& a) {
  SemTy slot = a.at(parent);
  auto parent_ptr = std::make_shared<const SemCtx>(parent);
  auto slot_ptr = std::make_shared<const SemTy>(std::move(slot));
  return SemCtx(
      parent.base_ptr(),
      [parent_ptr](const Obj& x) {
        CellDesc d = parent_ptr->cell(x);
        return CellDesc{d.empty, d.arity + 1};
      },
      [parent_ptr, slot_ptr](const Hom& f, const Env& g) {
        if (g.empty()) throw TagPanic("environment too short for extended context");
        Env init(g.begin(), g.end() - 1);
        Env out = parent_ptr->restrict(f, init);
        out.push_back(slot_ptr->restrict(f, init, g.back()));
        return out;
      });
}

// --- isos ---------------------------------------------------------------------

ClosedTyIso identity_iso() {
  return ClosedTyIso{[](const SemCtx&) {
    auto id = [](const Obj&, const Env&, const SemValue& v) { return v; };
    return SemTyIso{id, id};
  }};
}

ClosedTyIso compose_iso(const ClosedTyIso& second, const ClosedTyIso& first) {
  auto f = first.at;
  auto s = second.at;
  return ClosedTyIso{[f, s](const SemCtx& ctx) {
    SemTyIso a = f(ctx);
    SemTyIso b = s(ctx);
    return SemTyIso{
        [a, b](const Obj& x, const Env& g, const SemValue& v) { return b.forward(x, g, a.forward(x, g, v)); },
        [a, b](const Obj& x, const Env& g, const SemValue& v) { return a.backward(x, g, b.backward(x, g, v)); }};
  }};
}

ClosedTyIso invert_iso(const ClosedTyIso& iso) {
  auto at = iso.at;
  return ClosedTyIso{[at](const SemCtx& ctx) {
    SemTyIso e = at(ctx);
    return SemTyIso{e.backward, e.forward};
  }};
}

SemTm iso_transport(const SemTyIso& iso, const SemTm& t) {
  auto back = iso.backward;
  return SemTm([back, t](const Obj& x, const Env& g) { return back(x, g, t.at(x, g)); });
}

// --- function types --------------------------------------------------------------

ClosedSemTy fun_ty(const ClosedSemTy& t, const ClosedSemTy& s) {
  return ClosedSemTy([](const SemCtx& ctx) {
    auto ctx_ptr = std::make_shared<const SemCtx>(ctx);
    return SemTy(
        [](const Obj&, const Env&, const SemValue& v) { return v.is_fun(); },
        [ctx_ptr](const Hom& f, const Env&, const SemValue& v) {
          if (!v.is_fun()) throw TagPanic("restriction of non-FunV at function type");
          auto cat = ctx_ptr->base_ptr();
          return SemValue::fun([cat, f, v](const Obj& z, const Hom& rho, const SemValue& arg) {
            return v.apply(z, cat->compose(f, rho), arg);
          });
        });
  });
}

SemTm fun_lam(const SemCtx& gamma, const SemTm& body) {
  auto ctx_ptr = std::make_shared<const SemCtx>(gamma);
  return SemTm([ctx_ptr, body](const Obj& x, const Env& g) {
    return SemValue::fun([ctx_ptr, body, x, g](const Obj& y, const Hom& rho, const SemValue& v) {
      Env inner = ctx_ptr->restrict(rho, g);
      inner.push_back(v);
      return body.at(y, inner);
    });
  });
}

SemTm fun_app(const SemCtx& gamma, const SemTm& f, const SemTm& t) {
  auto cat = gamma.base_ptr();
  return SemTm([cat, f, t](const Obj& x, const Env& g) {
    return f.at(x, g).apply(x, cat->id(x), t.at(x, g));
  });
}

// --- discrete and product types ----------------------------------------------------

ClosedSemTy nat_ty() {
  return ClosedSemTy([](const SemCtx&) {
    return SemTy([](const Obj&, const Env&, const SemValue& v) { return v.is_nat(); },
                 [](const Hom&, const Env&, const SemValue& v) { return v; });
  });
}

ClosedSemTy bool_ty() {
  return ClosedSemTy([](const SemCtx&) {
    return SemTy([](const Obj&, const Env&, const SemValue& v) { return v.is_bool(); },
                 [](const Hom&, const Env&, const SemValue& v) { return v; });
  });
}

ClosedSemTy prod_ty(const ClosedSemTy& t, const ClosedSemTy& s) {
  auto tf = t;
  auto sf = s;
  return ClosedSemTy([tf, sf](const SemCtx& ctx) {
    auto t_ty = std::make_shared<const SemTy>(tf.at(ctx));
    auto s_ty = std::make_shared<const SemTy>(sf.at(ctx));
    return SemTy(
        [t_ty, s_ty](const Obj& x, const Env& g, const SemValue& v) {
          return v.is_pair() && t_ty->member(x, g, v.first()) && s_ty->member(x, g, v.second());
        },
        [t_ty, s_ty](const Hom& f, const Env& g, const SemValue& v) {
          return SemValue::pair(t_ty->restrict(f, g, v.first()), s_ty->restrict(f, g, v.second()));
        });
  });
}

SemTm pair_tm(const SemTm& t, const SemTm& s) {
  return SemTm([t, s](const Obj& x, const Env& g) { return SemValue::pair(t.at(x, g), s.at(x, g)); });
}

SemTm fst_tm(const SemTm& t) {
  return SemTm([t](const Obj& x, const Env& g) { return t.at(x, g).first(); });
}

SemTm snd_tm(const SemTm& t) {
  return SemTm([t](const Obj& x, const Env& g) { return t.at(x, g).second(); });
}

SemTm lit_tm(std::uint64_t n) {
  return SemTm([n](const Obj&, const Env&) { return SemValue::nat(n); });
}

SemTm true_tm() {
  return SemTm([](const Obj&, const Env&) { return SemValue::boolean(true); });
}

SemTm false_tm() {
  return SemTm([](const Obj&, const Env&) { return SemValue::boolean(false); });
}

SemTm suc_tm() {
  return SemTm([](const Obj&, const Env&) {
    return SemValue::fun([](const Obj&, const Hom&, const SemValue& v) {
      return SemValue::nat(v.nat_value() + 1);
    });
  });
}

SemTm plus_tm() {
  return SemTm([](const Obj&, const Env&) {
    return SemValue::fun([](const Obj&, const Hom&, const SemValue& a) {
      std::uint64_t n = a.nat_value();
      return SemValue::fun([n](const Obj&, const Hom&, const SemValue& b) {
        return SemValue::nat(n + b.nat_value());
      });
    });
  });
}

SemTm nat_elim_tm(const SemCtx& gamma, const SemTm& z, const SemTm& s) {
  auto ctx_ptr = std::make_shared<const SemCtx>(gamma);
  auto cat = gamma.base_ptr();
  return SemTm([ctx_ptr, cat, z, s](const Obj& x, const Env& g) {
    return SemValue::fun([ctx_ptr, cat, z, s, g](const Obj& y, const Hom& rho, const SemValue& n) {
      Env gy = ctx_ptr->restrict(rho, g);
      SemValue acc = z.at(y, gy);
      SemValue step = s.at(y, gy);
      for (std::uint64_t i = 0; i < n.nat_value(); ++i) acc = step.apply(y, cat->id(y), acc);
      return acc;
    });
  });
}

SemTm if_tm(const SemTm& c, const SemTm& t, const SemTm& e) {
  return SemTm([c, t, e](const Obj& x, const Env& g) {
    return c.at(x, g).bool_value() ? t.at(x, g) : e.at(x, g);
  });
}

SemTm subst_top(const SemTm& s, const SemTm& t) {
  return SemTm([s, t](const Obj& x, const Env& g) {
    Env ext = g;
    ext.push_back(t.at(x, g));
    return s.at(x, ext);
  });
}

// --- DRAs ------------------------------------------------------------------------

Dra dra_unit(const BaseCategoryPtr& cat) {
  Dra d;
  d.dom_cat = cat;
  d.cod_cat = cat;
  d.lock = [](const SemCtx& g) { return g; };
  d.mod = [](const ClosedSemTy& t) { return t; };
  d.intro = [](const SemCtx&, const ClosedSemTy&, const SemTm& t) { return t; };
  d.elim = [](const SemCtx&, const ClosedSemTy&, const SemTm& t) { return t; };
  d.map_cell = [](const SemCtx&, const Obj& x, const Env& g, const SemValue& v, const CellMap& h) {
    return h(x, g, v);
  };
  d.lock_obj = [](const Obj& x) { return std::optional<Obj>(x); };
  return d;
}

Dra dra_compose(const Dra& mu, const Dra& rho) {
  if (mu.dom_cat->name() != rho.cod_cat->name())
    throw TagPanic("dra_compose: base categories do not match");
  Dra d;
  d.dom_cat = rho.dom_cat;
  d.cod_cat = mu.cod_cat;
  d.lock = [mu, rho](const SemCtx& g) { return rho.lock(mu.lock(g)); };
  d.mod = [mu, rho](const ClosedSemTy& t) { return mu.mod(rho.mod(t)); };
  d.intro = [mu, rho](const SemCtx& g, const ClosedSemTy& t, const SemTm& tm) {
    return mu.intro(g, rho.mod(t), rho.intro(mu.lock(g), t, tm));
  };
  d.elim = [mu, rho](const SemCtx& g, const ClosedSemTy& t, const SemTm& tm) {
    return rho.elim(mu.lock(g), t, mu.elim(g, rho.mod(t), tm));
  };
  d.map_cell = [mu, rho](const SemCtx& g, const Obj& x, const Env& env, const SemValue& v, const CellMap& h) {
    SemCtx locked = mu.lock(g);
    return mu.map_cell(g, x, env, v, [&](const Obj& x2, const Env& env2, const SemValue& v2) {
      return rho.map_cell(locked, x2, env2, v2, h);
    });
  };
  d.lock_obj = [mu, rho](const Obj& x) -> std::optional<Obj> {
    auto mid = mu.lock_obj ? mu.lock_obj(x) : std::nullopt;
    if (!mid) return std::nullopt;
    return rho.lock_obj ? rho.lock_obj(*mid) : std::nullopt;
  };
  return d;
}

SemTwoCell two_cell_identity() {
  return SemTwoCell{[](const SemCtx&, const Obj&, const Env& g) { return g; }};
}

SemTwoCell two_cell_vert(const SemTwoCell& a, const SemTwoCell& b) {
  return SemTwoCell{[a, b](const SemCtx& ctx, const Obj& x, const Env& g) {
    return b.transport(ctx, x, a.transport(ctx, x, g));
  }};
}

SemTwoCell two_cell_horiz(const SemTwoCell& a1, const Dra& rho1, const SemTwoCell& a2, const Dra& mu2) {
  return SemTwoCell{[a1, rho1, a2, mu2](const SemCtx& ctx, const Obj& x, const Env& g) {
    SemCtx locked_rho1 = rho1.lock(ctx);
    Env mid = a2.transport(locked_rho1, x, g);
    auto xo = mu2.lock_obj(x);
    if (!xo) throw TagPanic("two_cell_horiz: lock object undefined at " + x.show());
    return a1.transport(ctx, *xo, mid);
  }};
}

}  // namespace mstt
