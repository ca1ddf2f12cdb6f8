#include "mstt/typechecker.hpp"

#include <cassert>

namespace mstt {

Elaborator::Elaborator(ModeTheoryPtr mt, TyExtRegistry ty_exts, TmExtRegistry tm_exts)
    : mt_(std::move(mt)), ty_exts_(std::move(ty_exts)), tm_exts_(std::move(tm_exts)) {}

BaseCategoryPtr Elaborator::interpret_mode(const ModeExpr& m) const { return mt_->interpret_mode(m); }

Dra Elaborator::interpret_modality(const ModalityExpr& mu) const { return mt_->interpret_modality(mu); }

Tcm<ClosedSemTy> Elaborator::interpret_ty(const TyExpr& t) const {
  using R = Tcm<ClosedSemTy>;
  switch (t.kind()) {
    case TyExpr::Kind::nat: return R::ok(nat_ty());
    case TyExpr::Kind::boolean: return R::ok(bool_ty());
    case TyExpr::Kind::arrow:
      return interpret_ty(t.left()).and_then([&](const ClosedSemTy& l) {
        return interpret_ty(t.right()).map([&](const ClosedSemTy& r) { return fun_ty(l, r); });
      });
    case TyExpr::Kind::prod:
      return interpret_ty(t.left()).and_then([&](const ClosedSemTy& l) {
        return interpret_ty(t.right()).map([&](const ClosedSemTy& r) { return prod_ty(l, r); });
      });
    case TyExpr::Kind::modal:
      return interpret_ty(t.body()).map([&](const ClosedSemTy& inner) {
        return interpret_modality(t.modality()).mod(inner);
      });
    case TyExpr::Kind::ext: {
      auto it = ty_exts_.find(t.ext_code());
      if (it == ty_exts_.end())
        return R::error("unknown type extension `" + t.ext_code() + "`");
      const TyExtDescriptor& d = it->second;
      if (t.ext_args().size() != d.arg_modes.size())
        return R::error("type extension `" + d.name + "` expects " +
                        std::to_string(d.arg_modes.size()) + " arguments");
      std::vector<ClosedSemTy> args;
      for (std::size_t i = 0; i < t.ext_args().size(); ++i) {
        if (t.ext_args()[i].mode() != d.arg_modes[i])
          return R::error("type extension `" + d.name + "`: argument " + std::to_string(i) +
                          " is at the wrong mode");
        Tcm<ClosedSemTy> a = interpret_ty(t.ext_args()[i]);
        if (a.is_error()) return R::error(a.error_message());
        args.push_back(a.value());
      }
      return R::ok(d.interpret(args));
    }
  }
  return R::error("interpret_ty: unreachable");
}

Tcm<SemCtx> Elaborator::interpret_ctx(const CtxExpr& g) const {
  using R = Tcm<SemCtx>;
  switch (g.kind()) {
    case CtxExpr::Kind::empty: return R::ok(ctx_empty(interpret_mode(g.mode())));
    case CtxExpr::Kind::bind:
      return interpret_ctx(g.parent()).and_then([&](const SemCtx& parent) {
        return interpret_ty(g.binder_type()).map([&](const ClosedSemTy& ty) {
          return ctx_extend(parent, interpret_modality(g.modality()).mod(ty));
        });
      });
    case CtxExpr::Kind::lock:
      return interpret_ctx(g.parent()).map(
          [&](const SemCtx& parent) { return interpret_modality(g.modality()).lock(parent); });
  }
  return R::error("interpret_ctx: unreachable");
}

Tcm<ClosedTyIso> Elaborator::ty_equiv(const TyExpr& t, const TyExpr& s) const {
  using R = Tcm<ClosedTyIso>;
  if (t.mode() != s.mode())
    return R::error("types `" + t.show() + "` and `" + s.show() + "` live at different modes");
  auto mismatch = [&]() {
    return R::error("types not equivalent: `" + t.show() + "` vs `" + s.show() + "`");
  };
  switch (t.kind()) {
    case TyExpr::Kind::nat:
    case TyExpr::Kind::boolean:
      if (s.kind() != t.kind()) return mismatch();
      return R::ok(identity_iso());
    case TyExpr::Kind::arrow: {
      if (!s.is_arrow()) return mismatch();
      Tcm<ClosedTyIso> et = ty_equiv(t.left(), s.left());
      if (et.is_error()) return et;
      Tcm<ClosedTyIso> es = ty_equiv(t.right(), s.right());
      if (es.is_error()) return es;
      ClosedTyIso arg = et.value(), res = es.value();
      return R::ok(ClosedTyIso{[arg, res](const SemCtx& ctx) {
        auto ctx_ptr = std::make_shared<const SemCtx>(ctx);
        SemTyIso ea = arg.at(ctx);
        SemTyIso er = res.at(ctx);
        auto wrap = [ctx_ptr](const SemTyIso& a, const SemTyIso& r, bool fwd) {
          return [ctx_ptr, a, r, fwd](const Obj& x, const Env& g, const SemValue& v) {
            return SemValue::fun([ctx_ptr, a, r, fwd, g, v](const Obj& y, const Hom& rho,
                                                            const SemValue& input) {
              Env gy = ctx_ptr->restrict(rho, g);
              SemValue arg_in = fwd ? a.backward(y, gy, input) : a.forward(y, gy, input);
              SemValue out = v.apply(y, rho, arg_in);
              return fwd ? r.forward(y, gy, out) : r.backward(y, gy, out);
            });
          };
        };
        return SemTyIso{wrap(ea, er, true), wrap(ea, er, false)};
      }});
    }
    case TyExpr::Kind::prod: {
      if (!s.is_prod()) return mismatch();
      Tcm<ClosedTyIso> el = ty_equiv(t.left(), s.left());
      if (el.is_error()) return el;
      Tcm<ClosedTyIso> er = ty_equiv(t.right(), s.right());
      if (er.is_error()) return er;
      ClosedTyIso l = el.value(), r = er.value();
      return R::ok(ClosedTyIso{[l, r](const SemCtx& ctx) {
        SemTyIso li = l.at(ctx), ri = r.at(ctx);
        return SemTyIso{
            [li, ri](const Obj& x, const Env& g, const SemValue& v) {
              return SemValue::pair(li.forward(x, g, v.first()), ri.forward(x, g, v.second()));
            },
            [li, ri](const Obj& x, const Env& g, const SemValue& v) {
              return SemValue::pair(li.backward(x, g, v.first()), ri.backward(x, g, v.second()));
            }};
      }});
    }
    case TyExpr::Kind::modal: {
      if (!s.is_modal()) return mismatch();
      const ModalityExpr& mu = t.modality();
      const ModalityExpr& rho = s.modality();
      if (mu.dom() != rho.dom()) return mismatch();
      Tcm<ClosedTyIso> einner = ty_equiv(t.body(), s.body());
      if (einner.is_error()) return einner;
      Tcm<SemModalityIso> em = modalities_equivalent(*mt_, mu, rho);
      if (em.is_error()) return R::error(em.error_message());
      Tcm<ClosedSemTy> s_body = interpret_ty(s.body());
      if (s_body.is_error()) return R::error(s_body.error_message());
      Dra mu_dra = interpret_modality(mu);
      ClosedTyIso inner = einner.value();
      ClosedTyIso modal_step = em.value().eq_mod_closed(s_body.value());
      // congruence under the modal wrapper, then the modality equivalence
      ClosedTyIso cong{[mu_dra, inner](const SemCtx& ctx) {
        auto ctx_ptr = std::make_shared<const SemCtx>(ctx);
        SemTyIso in = inner.at(mu_dra.lock(ctx));
        return SemTyIso{
            [mu_dra, ctx_ptr, in](const Obj& x, const Env& g, const SemValue& v) {
              return mu_dra.map_cell(*ctx_ptr, x, g, v, in.forward);
            },
            [mu_dra, ctx_ptr, in](const Obj& x, const Env& g, const SemValue& v) {
              return mu_dra.map_cell(*ctx_ptr, x, g, v, in.backward);
            }};
      }};
      return R::ok(compose_iso(modal_step, cong));
    }
    case TyExpr::Kind::ext: {
      if (s.kind() != TyExpr::Kind::ext || s.ext_code() != t.ext_code()) return mismatch();
      auto it = ty_exts_.find(t.ext_code());
      if (it == ty_exts_.end()) return R::error("unknown type extension `" + t.ext_code() + "`");
      if (t.ext_args().size() != s.ext_args().size()) return mismatch();
      std::vector<ClosedTyIso> args;
      for (std::size_t i = 0; i < t.ext_args().size(); ++i) {
        Tcm<ClosedTyIso> e = ty_equiv(t.ext_args()[i], s.ext_args()[i]);
        if (e.is_error()) return e;
        args.push_back(e.value());
      }
      return R::ok(it->second.lift_iso(args));
    }
  }
  return R::error("ty_equiv: unreachable");
}

namespace {

std::size_t binder_count(const CtxExpr& ctx) {
  std::size_t n = 0;
  CtxExpr g = ctx;
  while (g.kind() != CtxExpr::Kind::empty) {
    if (g.kind() == CtxExpr::Kind::bind) ++n;
    g = g.parent();
  }
  return n;
}

}  // namespace

Tcm<InferInterpretResult> Elaborator::lookup_var(const std::string& name, const TwoCellExpr& cell,
                                                 const CtxExpr& ctx) const {
  using R = Tcm<InferInterpretResult>;
  ModalityExpr locks = ModalityExpr::unit(ctx.mode());
  CtxExpr g = ctx;
  while (g.kind() != CtxExpr::Kind::empty) {
    if (g.kind() == CtxExpr::Kind::lock) {
      Tcm<ModalityExpr> composed = compose_modalities(g.modality(), locks);
      assert(composed.is_ok());
      locks = composed.value();
      g = g.parent();
      continue;
    }
    if (g.binder_name() != name) {
      g = g.parent();
      continue;
    }
    // First name match wins; failures below are reported, not skipped.
    const ModalityExpr& binder_mu = g.modality();
    if (binder_mu.dom() != ctx.mode())
      return R::error("Tm-Var: variable `" + name + "` lives at mode `" + binder_mu.dom().tag +
                      "` but is used at mode `" + ctx.mode().tag + "`");
    Tcm<SemTwoCell> w = check_two_cell(*mt_, cell, binder_mu, locks);
    if (w.is_error())
      return R::error("Tm-Var: variable `" + name + "` behind locks `" + locks.show() +
                      "`: " + w.error_message());
    TyExpr ty = g.binder_type();
    Tcm<ClosedSemTy> ty_sem = interpret_ty(ty);
    if (ty_sem.is_error()) return R::error(ty_sem.error_message());
    Tcm<SemCtx> theta = interpret_ctx(g);
    if (theta.is_error()) return R::error(theta.error_message());

    Dra binder_dra = interpret_modality(binder_mu);
    SemTm projection([](const Obj&, const Env& env) {
      if (env.empty()) throw TagPanic("variable projection on empty environment");
      return env.back();
    });
    SemTm unlocked = binder_dra.elim(theta.value(), ty_sem.value(), projection);

    SemTwoCell transport = w.value();
    auto theta_ptr = std::make_shared<const SemCtx>(theta.value());
    std::size_t keep = binder_count(g);
    SemTm denotation([unlocked, transport, theta_ptr, keep](const Obj& x, const Env& env) {
      if (env.size() < keep) throw TagPanic("environment shorter than binder telescope");
      Env trimmed(env.begin(), env.begin() + keep);
      return unlocked.at(x, transport.transport(*theta_ptr, x, trimmed));
    });
    return R::ok(InferInterpretResult{ty, denotation});
  }
  return R::error("Tm-Var: unbound variable `" + name + "`");
}

Tcm<InferInterpretResult> Elaborator::infer_interpret(const TmExpr& t, const CtxExpr& ctx) const {
  using R = Tcm<InferInterpretResult>;
  assert(t.mode() == ctx.mode());
  const ModeExpr& m = t.mode();

  switch (t.kind()) {
    case TmExpr::Kind::ann: {
      const TyExpr& target = t.type_ann();
      Tcm<InferInterpretResult> inner = infer_interpret(t.child(0), ctx);
      if (inner.is_error()) return inner;
      Tcm<ClosedTyIso> e = ty_equiv(target, inner.value().type);
      if (e.is_error())
        return R::error("Tm-Ann: in `" + t.show() + "`: " + e.error_message());
      Tcm<SemCtx> gamma = interpret_ctx(ctx);
      if (gamma.is_error()) return R::error(gamma.error_message());
      return R::ok(InferInterpretResult{
          target, iso_transport(e.value().at(gamma.value()), inner.value().denotation)});
    }

    case TmExpr::Kind::var: return lookup_var(t.name(), t.cell(), ctx);

    case TmExpr::Kind::lam: {
      const TyExpr& dom_ty = t.type_ann();
      CtxExpr extended = ctx.bind(ModalityExpr::unit(m), t.name(), dom_ty);
      Tcm<InferInterpretResult> body = infer_interpret(t.child(0), extended);
      if (body.is_error()) return body;
      Tcm<SemCtx> gamma = interpret_ctx(ctx);
      if (gamma.is_error()) return R::error(gamma.error_message());
      return R::ok(InferInterpretResult{TyExpr::arrow(dom_ty, body.value().type),
                                        fun_lam(gamma.value(), body.value().denotation)});
    }

    case TmExpr::Kind::app: {
      Tcm<InferInterpretResult> fun = infer_interpret(t.child(0), ctx);
      if (fun.is_error()) return fun;
      if (!fun.value().type.is_arrow())
        return R::error("Tm-App: `" + t.child(0).show() + "` has non-function type `" +
                        fun.value().type.show() + "`");
      Tcm<InferInterpretResult> arg = infer_interpret(t.child(1), ctx);
      if (arg.is_error()) return arg;
      Tcm<ClosedTyIso> e = ty_equiv(fun.value().type.left(), arg.value().type);
      if (e.is_error())
        return R::error("Tm-App: argument `" + t.child(1).show() + "`: " + e.error_message());
      Tcm<SemCtx> gamma = interpret_ctx(ctx);
      if (gamma.is_error()) return R::error(gamma.error_message());
      SemTm cast = iso_transport(e.value().at(gamma.value()), arg.value().denotation);
      return R::ok(InferInterpretResult{fun.value().type.right(),
                                        fun_app(gamma.value(), fun.value().denotation, cast)});
    }

    case TmExpr::Kind::lit:
      return R::ok(InferInterpretResult{TyExpr::nat(m), lit_tm(t.literal())});
    case TmExpr::Kind::suc:
      return R::ok(InferInterpretResult{TyExpr::arrow(TyExpr::nat(m), TyExpr::nat(m)), suc_tm()});
    case TmExpr::Kind::plus:
      return R::ok(InferInterpretResult{
          TyExpr::arrow(TyExpr::nat(m), TyExpr::arrow(TyExpr::nat(m), TyExpr::nat(m))), plus_tm()});

    case TmExpr::Kind::nat_elim: {
      Tcm<InferInterpretResult> z = infer_interpret(t.child(0), ctx);
      if (z.is_error()) return z;
      Tcm<InferInterpretResult> s = infer_interpret(t.child(1), ctx);
      if (s.is_error()) return s;
      TyExpr motive = z.value().type;
      Tcm<ClosedTyIso> e = ty_equiv(TyExpr::arrow(motive, motive), s.value().type);
      if (e.is_error())
        return R::error("nat-elim: step `" + t.child(1).show() + "`: " + e.error_message());
      Tcm<SemCtx> gamma = interpret_ctx(ctx);
      if (gamma.is_error()) return R::error(gamma.error_message());
      SemTm step = iso_transport(e.value().at(gamma.value()), s.value().denotation);
      return R::ok(InferInterpretResult{
          TyExpr::arrow(TyExpr::nat(m), motive),
          nat_elim_tm(gamma.value(), z.value().denotation, step)});
    }

    case TmExpr::Kind::true_:
      return R::ok(InferInterpretResult{TyExpr::boolean(m), true_tm()});
    case TmExpr::Kind::false_:
      return R::ok(InferInterpretResult{TyExpr::boolean(m), false_tm()});

    case TmExpr::Kind::if_: {
      Tcm<InferInterpretResult> c = infer_interpret(t.child(0), ctx);
      if (c.is_error()) return c;
      Tcm<ClosedTyIso> ec = ty_equiv(TyExpr::boolean(m), c.value().type);
      if (ec.is_error())
        return R::error("if: scrutinee `" + t.child(0).show() + "`: " + ec.error_message());
      Tcm<InferInterpretResult> tb = infer_interpret(t.child(1), ctx);
      if (tb.is_error()) return tb;
      Tcm<InferInterpretResult> eb = infer_interpret(t.child(2), ctx);
      if (eb.is_error()) return eb;
      Tcm<ClosedTyIso> e = ty_equiv(tb.value().type, eb.value().type);
      if (e.is_error()) return R::error("if: branches disagree: " + e.error_message());
      Tcm<SemCtx> gamma = interpret_ctx(ctx);
      if (gamma.is_error()) return R::error(gamma.error_message());
      SemTm cond = iso_transport(ec.value().at(gamma.value()), c.value().denotation);
      SemTm else_cast = iso_transport(e.value().at(gamma.value()), eb.value().denotation);
      return R::ok(InferInterpretResult{tb.value().type,
                                        if_tm(cond, tb.value().denotation, else_cast)});
    }

    case TmExpr::Kind::pair: {
      Tcm<InferInterpretResult> a = infer_interpret(t.child(0), ctx);
      if (a.is_error()) return a;
      Tcm<InferInterpretResult> b = infer_interpret(t.child(1), ctx);
      if (b.is_error()) return b;
      return R::ok(InferInterpretResult{TyExpr::prod(a.value().type, b.value().type),
                                        pair_tm(a.value().denotation, b.value().denotation)});
    }

    case TmExpr::Kind::fst:
    case TmExpr::Kind::snd: {
      Tcm<InferInterpretResult> p = infer_interpret(t.child(0), ctx);
      if (p.is_error()) return p;
      if (!p.value().type.is_prod())
        return R::error("projection: `" + t.child(0).show() + "` has non-product type `" +
                        p.value().type.show() + "`");
      bool first = t.kind() == TmExpr::Kind::fst;
      return R::ok(InferInterpretResult{
          first ? p.value().type.left() : p.value().type.right(),
          first ? fst_tm(p.value().denotation) : snd_tm(p.value().denotation)});
    }

    case TmExpr::Kind::mod_intro: {
      const ModalityExpr& mu = t.modality();
      Tcm<InferInterpretResult> inner = infer_interpret(t.child(0), ctx.lock(mu));
      if (inner.is_error()) return inner;
      Tcm<ClosedSemTy> inner_ty = interpret_ty(inner.value().type);
      if (inner_ty.is_error()) return R::error(inner_ty.error_message());
      Tcm<SemCtx> gamma = interpret_ctx(ctx);
      if (gamma.is_error()) return R::error(gamma.error_message());
      Dra dra = interpret_modality(mu);
      return R::ok(InferInterpretResult{
          TyExpr::modal(mu, inner.value().type),
          dra.intro(gamma.value(), inner_ty.value(), inner.value().denotation)});
    }

    case TmExpr::Kind::mod_elim: {
      if (!normalize_modality(*mt_, t.elim_prefix()).empty())
        return R::error("Tm-ModElim: the generalized eliminator prefix `" +
                        t.elim_prefix().show() + "` is not supported; only the trivial prefix");
      const ModalityExpr& mu = t.modality();
      Tcm<InferInterpretResult> scrut = infer_interpret(t.child(0), ctx);
      if (scrut.is_error()) return scrut;
      if (!scrut.value().type.is_modal())
        return R::error("Tm-ModElim: scrutinee `" + t.child(0).show() + "` has non-modal type `" +
                        scrut.value().type.show() + "`");
      const ModalityExpr& rho = scrut.value().type.modality();
      TyExpr inner_ty = scrut.value().type.body();
      if (rho.dom() != mu.dom())
        return R::error("Tm-ModElim: scrutinee modality `" + rho.show() +
                        "` and binder modality `" + mu.show() + "` have different domains");
      Tcm<SemModalityIso> em = modalities_equivalent(*mt_, mu, rho);
      if (em.is_error()) return R::error("Tm-ModElim: " + em.error_message());
      Tcm<ClosedSemTy> inner_sem = interpret_ty(inner_ty);
      if (inner_sem.is_error()) return R::error(inner_sem.error_message());
      Tcm<SemCtx> gamma = interpret_ctx(ctx);
      if (gamma.is_error()) return R::error(gamma.error_message());
      SemTm as_mu = iso_transport(em.value().eq_mod_closed(inner_sem.value()).at(gamma.value()),
                                  scrut.value().denotation);
      CtxExpr extended = ctx.bind(mu, t.name(), inner_ty);
      Tcm<InferInterpretResult> body = infer_interpret(t.child(1), extended);
      if (body.is_error()) return body;
      return R::ok(InferInterpretResult{body.value().type,
                                        subst_top(body.value().denotation, as_mu)});
    }

    case TmExpr::Kind::ext: {
      auto it = tm_exts_.find(t.ext_code());
      if (it == tm_exts_.end())
        return R::error("unknown term extension `" + t.ext_code() + "`");
      return it->second.infer(*this, t, ctx);
    }
  }
  return R::error("infer_interpret: unreachable");
}

std::optional<SemTm> Elaborator::tm_in(const TmExpr& t, const CtxExpr& ctx) const {
  Tcm<InferInterpretResult> r = infer_interpret(t, ctx);
  if (r.is_error()) return std::nullopt;
  return r.value().denotation;
}

}  // namespace mstt
