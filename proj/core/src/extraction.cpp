#include "mstt/extraction.hpp"

namespace mstt {

SemTm const_star_tm(const SemValue& v) {
  return SemTm([v](const Obj&, const Env&) { return v; });
}

namespace {

SemValue star_value(const SemTm& t) { return t.at(Obj::star(), Env{}); }

Extractable nat_extractable(const ModeExpr& m) {
  return Extractable{
      TyExpr::nat(m),
      [](const SemTm& t) { return HostValue::nat(star_value(t).nat_value()); },
      [](const HostValue& v) { return const_star_tm(SemValue::nat(v.as_nat())); }};
}

Extractable bool_extractable(const ModeExpr& m) {
  return Extractable{
      TyExpr::boolean(m),
      [](const SemTm& t) { return HostValue::boolean(star_value(t).bool_value()); },
      [](const HostValue& v) { return const_star_tm(SemValue::boolean(v.as_bool())); }};
}

Extractable prod_extractable(const TyExpr& ty, const Extractable& l, const Extractable& r) {
  return Extractable{
      ty,
      [l, r](const SemTm& t) {
        SemValue v = star_value(t);
        return HostValue::pair(l.extract(const_star_tm(v.first())),
                               r.extract(const_star_tm(v.second())));
      },
      [l, r](const HostValue& v) {
        return const_star_tm(SemValue::pair(star_value(l.embed(v.first())),
                                            star_value(r.embed(v.second()))));
      }};
}

// embed-term on the argument side is what makes function types work.
Extractable arrow_extractable(const TyExpr& ty, const Extractable& dom, const Extractable& cod) {
  return Extractable{
      ty,
      [dom, cod](const SemTm& t) {
        return HostValue::fn([dom, cod, t](const HostValue& input) {
          SemValue f = star_value(t);
          SemValue arg = star_value(dom.embed(input));
          SemValue out = f.apply(Obj::star(), Hom{Obj::star(), Obj::star()}, arg);
          return cod.extract(const_star_tm(out));
        });
      },
      [dom, cod](const HostValue& f) {
        return const_star_tm(
            SemValue::fun([dom, cod, f](const Obj&, const Hom&, const SemValue& arg) {
              HostValue in = dom.extract(const_star_tm(arg));
              return star_value(cod.embed(f.apply(in)));
            }));
      }};
}

}  // namespace

Tcm<Extractable> extractable_for(const Elaborator& elab, const std::vector<ExtractHook>& hooks,
                                 const TyExpr& ty) {
  using R = Tcm<Extractable>;
  if (elab.interpret_mode(ty.mode())->name() != "star")
    return R::error("type `" + ty.show() + "` is not at the trivial mode");
  for (const ExtractHook& hook : hooks) {
    std::optional<Extractable> ex = hook.match(elab, hooks, ty);
    if (ex) return R::ok(*ex);
  }
  switch (ty.kind()) {
    case TyExpr::Kind::nat: return R::ok(nat_extractable(ty.mode()));
    case TyExpr::Kind::boolean: return R::ok(bool_extractable(ty.mode()));
    case TyExpr::Kind::prod: {
      Tcm<Extractable> l = extractable_for(elab, hooks, ty.left());
      if (l.is_error()) return l;
      Tcm<Extractable> r = extractable_for(elab, hooks, ty.right());
      if (r.is_error()) return r;
      return R::ok(prod_extractable(ty, l.value(), r.value()));
    }
    case TyExpr::Kind::arrow: {
      Tcm<Extractable> dom = extractable_for(elab, hooks, ty.left());
      if (dom.is_error()) return dom;
      Tcm<Extractable> cod = extractable_for(elab, hooks, ty.right());
      if (cod.is_error()) return cod;
      return R::ok(arrow_extractable(ty, dom.value(), cod.value()));
    }
    default:
      return R::error("no extraction instance for type `" + ty.show() + "`");
  }
}

HostValue extract(const Extractable& ex, const SemTm& t) { return ex.extract(t); }

SemTm embed(const Extractable& ex, const HostValue& v) { return ex.embed(v); }

}  // namespace mstt
