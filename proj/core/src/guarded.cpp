#include "mstt/guarded.hpp"

namespace mstt {
namespace guarded {

ModeExpr star_mode() { return ModeExpr{"star"}; }
ModeExpr omega_mode() { return ModeExpr{"omega"}; }
ModalityExpr later_m() { return ModalityExpr::atom("later", omega_mode(), omega_mode()); }
ModalityExpr constantly_m() { return ModalityExpr::atom("constantly", star_mode(), omega_mode()); }
ModalityExpr forever_m() { return ModalityExpr::atom("forever", omega_mode(), star_mode()); }

BaseCategoryPtr omega_category() {
  static const BaseCategoryPtr cat = std::make_shared<BaseCategory>(
      "omega",
      [](const Hom& f) {
        return f.src.kind() == Obj::Kind::stage && f.dst.kind() == Obj::Kind::stage &&
               f.src.stage_index() <= f.dst.stage_index();
      },
      [](std::uint64_t bound) {
        std::vector<Obj> out;
        for (std::uint64_t n = 0; n <= bound; ++n) out.push_back(Obj::stage(n));
        return out;
      });
  return cat;
}

SemCtx earlier(const SemCtx& ctx) {
  auto parent = std::make_shared<const SemCtx>(ctx);
  return SemCtx(
      omega_category(),
      [parent](const Obj& x) { return parent->cell(Obj::stage(x.stage_index() + 1)); },
      [parent](const Hom& f, const Env& g) {
        Hom shifted{Obj::stage(f.src.stage_index() + 1), Obj::stage(f.dst.stage_index() + 1)};
        return parent->restrict(shifted, g);
      });
}

Dra later_dra() {
  Dra d;
  d.dom_cat = omega_category();
  d.cod_cat = omega_category();
  d.lock = [](const SemCtx& g) { return earlier(g); };
  d.mod = [](const ClosedSemTy& t) {
    return ClosedSemTy([t](const SemCtx& ctx) {
      auto inner = std::make_shared<const SemTy>(t.at(earlier(ctx)));
      return SemTy(
          [inner](const Obj& x, const Env& g, const SemValue& v) {
            std::uint64_t n = x.stage_index();
            if (n == 0) return v.is_unit();
            return inner->member(Obj::stage(n - 1), g, v);
          },
          [inner](const Hom& f, const Env& gy, const SemValue& v) -> SemValue {
            std::uint64_t m = f.src.stage_index(), n = f.dst.stage_index();
            if (m == 0) return SemValue::unit();
            return inner->restrict(Hom{Obj::stage(m - 1), Obj::stage(n - 1)}, gy, v);
          });
    });
  };
  d.intro = [](const SemCtx&, const ClosedSemTy&, const SemTm& t) {
    return SemTm([t](const Obj& x, const Env& g) -> SemValue {
      std::uint64_t n = x.stage_index();
      if (n == 0) return SemValue::unit();
      return t.at(Obj::stage(n - 1), g);
    });
  };
  d.elim = [](const SemCtx&, const ClosedSemTy&, const SemTm& s) {
    return SemTm([s](const Obj& x, const Env& g) {
      return s.at(Obj::stage(x.stage_index() + 1), g);
    });
  };
  d.map_cell = [](const SemCtx&, const Obj& x, const Env& g, const SemValue& v, const CellMap& h) {
    std::uint64_t n = x.stage_index();
    if (n == 0) return v;
    return h(Obj::stage(n - 1), g, v);
  };
  d.lock_obj = [](const Obj& x) {
    return std::optional<Obj>(Obj::stage(x.stage_index() + 1));
  };
  return d;
}

Dra constantly_dra() {
  Dra d;
  d.dom_cat = star_category();
  d.cod_cat = omega_category();
  d.lock = [](const SemCtx& g) {
    auto parent = std::make_shared<const SemCtx>(g);
    return SemCtx(
        star_category(),
        [parent](const Obj&) { return parent->cell(Obj::stage(0)); },
        [](const Hom&, const Env& env) { return env; });
  };
  d.mod = [](const ClosedSemTy& t) {
    return ClosedSemTy([t](const SemCtx& ctx) {
      auto parent = std::make_shared<const SemCtx>(ctx);
      auto inner = std::make_shared<const SemTy>(t.at(constantly_dra().lock(ctx)));
      auto to_base = [parent](const Obj& x, const Env& g) {
        return parent->restrict(Hom{Obj::stage(0), x}, g);
      };
      return SemTy(
          [inner, to_base](const Obj& x, const Env& g, const SemValue& v) {
            return inner->member(Obj::star(), to_base(x, g), v);
          },
          [inner, to_base](const Hom& f, const Env& gy, const SemValue& v) {
            return inner->restrict(Hom{Obj::star(), Obj::star()}, to_base(f.dst, gy), v);
          });
    });
  };
  d.intro = [](const SemCtx& gamma, const ClosedSemTy&, const SemTm& t) {
    auto parent = std::make_shared<const SemCtx>(gamma);
    return SemTm([parent, t](const Obj& x, const Env& g) {
      return t.at(Obj::star(), parent->restrict(Hom{Obj::stage(0), x}, g));
    });
  };
  d.elim = [](const SemCtx&, const ClosedSemTy&, const SemTm& s) {
    return SemTm([s](const Obj&, const Env& g) { return s.at(Obj::stage(0), g); });
  };
  d.map_cell = [](const SemCtx& gamma, const Obj& x, const Env& g, const SemValue& v,
                  const CellMap& h) {
    return h(Obj::star(), gamma.restrict(Hom{Obj::stage(0), x}, g), v);
  };
  d.lock_obj = [](const Obj&) { return std::optional<Obj>(Obj::stage(0)); };
  return d;
}

Dra forever_dra() {
  Dra d;
  d.dom_cat = omega_category();
  d.cod_cat = star_category();
  d.lock = [](const SemCtx& g) {
    auto parent = std::make_shared<const SemCtx>(g);
    return SemCtx(
        omega_category(),
        [parent](const Obj&) { return parent->cell(Obj::star()); },
        [](const Hom&, const Env& env) { return env; });
  };
  d.mod = [](const ClosedSemTy&) {
    // Cells are compatible stage-indexed families; the only morphism of the
    // trivial category restricts by identity. Family compatibility is a
    // tested invariant, not re-checked per membership query.
    return ClosedSemTy([](const SemCtx&) {
      return SemTy(
          [](const Obj&, const Env&, const SemValue& v) { return v.is_fam(); },
          [](const Hom&, const Env&, const SemValue& v) { return v; });
    });
  };
  d.intro = [](const SemCtx&, const ClosedSemTy&, const SemTm& t) {
    return SemTm([t](const Obj&, const Env& g) {
      return SemValue::fam([t, g](std::uint64_t n) { return t.at(Obj::stage(n), g); });
    });
  };
  d.elim = [](const SemCtx&, const ClosedSemTy&, const SemTm& s) {
    return SemTm([s](const Obj& x, const Env& g) {
      return s.at(Obj::star(), g).fam_at(x.stage_index());
    });
  };
  d.map_cell = [](const SemCtx&, const Obj&, const Env& g, const SemValue& v, const CellMap& h) {
    return SemValue::fam([g, v, h](std::uint64_t n) {
      return h(Obj::stage(n), g, v.fam_at(n));
    });
  };
  d.lock_obj = [](const Obj&) { return std::optional<Obj>(Obj::star()); };
  return d;
}

ClosedSemTy gstream_sem_ty(const ClosedSemTy& a) {
  ClosedSemTy element = constantly_dra().mod(a);
  return ClosedSemTy([element](const SemCtx& ctx) {
    auto elem_ty = std::make_shared<const SemTy>(element.at(ctx));
    return SemTy(
        [elem_ty](const Obj& x, const Env& g, const SemValue& v) {
          if (!v.is_vec()) return false;
          if (v.vec_items().size() != x.stage_index() + 1) return false;
          for (const SemValue& e : v.vec_items())
            if (!elem_ty->member(x, g, e)) return false;
          return true;
        },
        [elem_ty](const Hom& f, const Env& gy, const SemValue& v) {
          std::uint64_t m = f.src.stage_index();
          const std::vector<SemValue>& items = v.vec_items();
          std::vector<SemValue> out;
          out.reserve(m + 1);
          for (std::uint64_t i = 0; i <= m; ++i) out.push_back(elem_ty->restrict(f, gy, items[i]));
          return SemValue::vec(std::move(out));
        });
  });
}

TyExpr gstream(const TyExpr& a) { return TyExpr::ext("GStream", {a}, omega_mode()); }

TmExpr g_head(const TyExpr& a) { return TmExpr::ext("g-head", {TmExtArg(a)}, omega_mode()); }
TmExpr g_tail(const TyExpr& a) { return TmExpr::ext("g-tail", {TmExtArg(a)}, omega_mode()); }
TmExpr g_cons(const TyExpr& a) { return TmExpr::ext("g-cons", {TmExtArg(a)}, omega_mode()); }

TmExpr lob(const std::string& name, const TyExpr& ty, const TmExpr& body) {
  return TmExpr::ext("lob", {TmExtArg(name), TmExtArg(ty), TmExtArg(body)}, omega_mode());
}

Tcm<InferInterpretResult> loeb_elaborate(const Elaborator& elab, const std::string& name,
                                         const TyExpr& ty, const TmExpr& body, const CtxExpr& ctx) {
  using R = Tcm<InferInterpretResult>;
  if (!(ctx.mode() == omega_mode()))
    return R::error("Tm-Löb: löb lives at the time mode, not `" + ctx.mode().tag + "`");
  CtxExpr extended = ctx.bind(later_m(), name, ty);
  Tcm<InferInterpretResult> inner = elab.infer_interpret(body, extended);
  if (inner.is_error()) return inner;
  Tcm<ClosedTyIso> e = elab.ty_equiv(ty, inner.value().type);
  if (e.is_error()) return R::error("Tm-Löb: body type: " + e.error_message());
  Tcm<SemCtx> gamma_ext = elab.interpret_ctx(extended);
  if (gamma_ext.is_error()) return R::error(gamma_ext.error_message());
  Tcm<SemCtx> gamma = elab.interpret_ctx(ctx);
  if (gamma.is_error()) return R::error(gamma.error_message());
  SemTm step = iso_transport(e.value().at(gamma_ext.value()), inner.value().denotation);

  // Stage-indexed fixpoint: stage 0 fills the later-slot with the unit,
  // stage n+1 feeds the stage-n value of the restricted environment.
  auto gamma_ptr = std::make_shared<const SemCtx>(gamma.value());
  SemTm fix([gamma_ptr, step](const Obj& x, const Env& g) {
    std::uint64_t n = x.stage_index();
    std::vector<Env> envs(n + 1);
    envs[n] = g;
    for (std::uint64_t k = n; k > 0; --k)
      envs[k - 1] = gamma_ptr->restrict(Hom{Obj::stage(k - 1), Obj::stage(k)}, envs[k]);
    Env start = envs[0];
    start.push_back(SemValue::unit());
    SemValue value = step.at(Obj::stage(0), start);
    for (std::uint64_t k = 1; k <= n; ++k) {
      Env next = envs[k];
      next.push_back(value);
      value = step.at(Obj::stage(k), next);
    }
    return value;
  });
  return R::ok(InferInterpretResult{ty, fix});
}

// --- corpus -----------------------------------------------------------------

TmExpr g_map(const TyExpr& a, const TyExpr& b) {
  ModeExpr w = omega_mode();
  TyExpr fn_ab = TyExpr::arrow(a, b);
  TyExpr gsa = gstream(a), gsb = gstream(b);
  TmExpr body = sugar_modal_app(
      sugar_modal_app(g_cons(b), constantly_m(),
                      TmExpr::app(svar("f", star_mode()), svar("head-s", star_mode()))),
      later_m(), TmExpr::app(svar("m", w), svar("tail-s", w)));
  TmExpr with_tail = TmExpr::mod_elim(later_m(), "tail-s",
                                      TmExpr::app(g_tail(a), svar("s", w)), body);
  TmExpr with_head = TmExpr::mod_elim(constantly_m(), "head-s",
                                      TmExpr::app(g_head(a), svar("s", w)), with_tail);
  TmExpr inner = lob("m", TyExpr::arrow(gsa, gsb), TmExpr::lam("s", gsa, with_head));
  TmExpr lam_f = sugar_modal_lam(constantly_m(), "f", fn_ab, inner);
  return TmExpr::ann(lam_f, TyExpr::arrow(TyExpr::modal(constantly_m(), fn_ab),
                                          TyExpr::arrow(gsa, gsb)));
}

TmExpr g_nats() {
  ModeExpr w = omega_mode();
  TyExpr nat_star = TyExpr::nat(star_mode());
  TmExpr mapped = TmExpr::app(
      sugar_modal_app(g_map(nat_star, nat_star), constantly_m(), TmExpr::suc(star_mode())),
      svar("s", w));
  TmExpr body = sugar_modal_app(
      sugar_modal_app(g_cons(nat_star), constantly_m(), TmExpr::lit(0, star_mode())),
      later_m(), mapped);
  return lob("s", gstream(nat_star), body);
}

TyExpr stream_prime(const TyExpr& a) { return TyExpr::modal(forever_m(), gstream(a)); }

TmExpr cons_prime(const TyExpr& a) {
  ModeExpr s = star_mode();
  TmExpr inner = mstt::sugar_modal_app(
      sugar_modal_app(g_cons(a), constantly_m(), svar("a", s)), later_m(),
      svar("g-as", omega_mode()));
  TmExpr elim = TmExpr::mod_elim(forever_m(), "g-as", svar("as", s),
                                 TmExpr::mod_intro(forever_m(), inner));
  return TmExpr::lam("a", a, TmExpr::lam("as", stream_prime(a), elim));
}

TmExpr nats() { return TmExpr::mod_intro(forever_m(), g_nats()); }

// --- mode theory and app bundle ---------------------------------------------------

ModeTheoryPtr mode_theory() {
  static const ModeTheoryPtr mt = [] {
    auto t = std::make_shared<ModeTheory>();
    t->name = "guarded";
    t->modes = {star_mode(), omega_mode()};
    t->atoms = {{"later", omega_mode(), omega_mode()},
                {"constantly", star_mode(), omega_mode()},
                {"forever", omega_mode(), star_mode()}};

    // forever o later ~ forever: drop the leading unit of each family.
    ModalityRewrite fl;
    fl.lhs = {"forever", "later"};
    fl.rhs = {"forever"};
    fl.iso = [](const ClosedSemTy&) {
      return ClosedTyIso{[](const SemCtx&) {
        return SemTyIso{
            [](const Obj&, const Env&, const SemValue& v) {
              return SemValue::fam([v](std::uint64_t n) { return v.fam_at(n + 1); });
            },
            [](const Obj&, const Env&, const SemValue& v) {
              return SemValue::fam([v](std::uint64_t n) -> SemValue {
                if (n == 0) return SemValue::unit();
                return v.fam_at(n - 1);
              });
            }};
      }};
    };

    // forever o constantly ~ 1: a constant family collapses to its value.
    ModalityRewrite fc;
    fc.lhs = {"forever", "constantly"};
    fc.rhs = {};
    fc.iso = [](const ClosedSemTy&) {
      return ClosedTyIso{[](const SemCtx&) {
        return SemTyIso{
            [](const Obj&, const Env&, const SemValue& v) { return v.fam_at(0); },
            [](const Obj&, const Env&, const SemValue& v) {
              return SemValue::fam([v](std::uint64_t) { return v; });
            }};
      }};
    };
    t->rewrites = {fl, fc};

    TwoCellRule to_later;
    to_later.cell = "1-to-later";
    to_later.nf_mu = {};
    to_later.nf_rho = {"later"};
    to_later.transport = [](const SemCtx& ctx, const Obj& x, const Env& g) {
      std::uint64_t n = x.stage_index();
      return ctx.restrict(Hom{Obj::stage(n), Obj::stage(n + 1)}, g);
    };

    TwoCellRule cf_to_unit;
    cf_to_unit.cell = "constoforev-to-1";
    cf_to_unit.nf_mu = {"constantly", "forever"};
    cf_to_unit.nf_rho = {};
    cf_to_unit.transport = [](const SemCtx& ctx, const Obj& x, const Env& g) {
      return ctx.restrict(Hom{Obj::stage(0), x}, g);
    };
    t->two_cells = {to_later, cf_to_unit};

    t->interpret_mode = [](const ModeExpr& m) {
      return m == omega_mode() ? omega_category() : star_category();
    };
    t->interpret_atom = [](const std::string& name) {
      if (name == "later") return later_dra();
      if (name == "constantly") return constantly_dra();
      return forever_dra();
    };
    return t;
  }();
  return mt;
}

namespace {

Tcm<TyExpr> ext_ty_arg(const TmExpr& node, std::size_t i) {
  if (i >= node.ext_args().size() || !std::holds_alternative<TyExpr>(node.ext_args()[i]))
    return Tcm<TyExpr>::error("term extension `" + node.ext_code() + "`: bad arguments");
  return Tcm<TyExpr>::ok(std::get<TyExpr>(node.ext_args()[i]));
}

Tcm<InferInterpretResult> stream_op_result(const Elaborator& elab, const CtxExpr& ctx,
                                           const TyExpr& ty, const SemTm& tm) {
  // Stream primitives are closed constants; no context inspection needed.
  (void)elab;
  (void)ctx;
  return Tcm<InferInterpretResult>::ok(InferInterpretResult{ty, tm});
}

TmExtRegistry make_tm_exts() {
  TmExtRegistry reg;

  reg["g-head"] = TmExtDescriptor{
      "g-head", [](const Elaborator& elab, const TmExpr& node, const CtxExpr& ctx) {
        using R = Tcm<InferInterpretResult>;
        Tcm<TyExpr> a = ext_ty_arg(node, 0);
        if (a.is_error()) return R::error(a.error_message());
        TyExpr ty = TyExpr::arrow(gstream(a.value()), TyExpr::modal(constantly_m(), a.value()));
        SemTm tm([](const Obj&, const Env&) {
          return SemValue::fun([](const Obj&, const Hom&, const SemValue& v) {
            return v.vec_items().front();
          });
        });
        return stream_op_result(elab, ctx, ty, tm);
      }};

  reg["g-tail"] = TmExtDescriptor{
      "g-tail", [](const Elaborator& elab, const TmExpr& node, const CtxExpr& ctx) {
        using R = Tcm<InferInterpretResult>;
        Tcm<TyExpr> a = ext_ty_arg(node, 0);
        if (a.is_error()) return R::error(a.error_message());
        TyExpr ty = TyExpr::arrow(gstream(a.value()),
                                  TyExpr::modal(later_m(), gstream(a.value())));
        SemTm tm([](const Obj&, const Env&) {
          return SemValue::fun([](const Obj& y, const Hom&, const SemValue& v) -> SemValue {
            if (y.stage_index() == 0) return SemValue::unit();
            const std::vector<SemValue>& items = v.vec_items();
            return SemValue::vec(std::vector<SemValue>(items.begin() + 1, items.end()));
          });
        });
        return stream_op_result(elab, ctx, ty, tm);
      }};

  reg["g-cons"] = TmExtDescriptor{
      "g-cons", [](const Elaborator& elab, const TmExpr& node, const CtxExpr& ctx) {
        using R = Tcm<InferInterpretResult>;
        Tcm<TyExpr> a = ext_ty_arg(node, 0);
        if (a.is_error()) return R::error(a.error_message());
        TyExpr gsa = gstream(a.value());
        TyExpr ty = TyExpr::arrow(
            TyExpr::modal(constantly_m(), a.value()),
            TyExpr::arrow(TyExpr::modal(later_m(), gsa), gsa));
        Tcm<ClosedSemTy> elem_sem = elab.interpret_ty(TyExpr::modal(constantly_m(), a.value()));
        if (elem_sem.is_error()) return R::error(elem_sem.error_message());
        Tcm<SemCtx> gamma = elab.interpret_ctx(ctx);
        if (gamma.is_error()) return R::error(gamma.error_message());
        auto gamma_ptr = std::make_shared<const SemCtx>(gamma.value());
        auto head_ty = std::make_shared<const SemTy>(elem_sem.value().at(gamma.value()));
        SemTm tm([gamma_ptr, head_ty](const Obj&, const Env& g0) {
          return SemValue::fun([gamma_ptr, head_ty, g0](const Obj& y1, const Hom& rho1,
                                                        const SemValue& head) {
            Env g1 = gamma_ptr->restrict(rho1, g0);
            return SemValue::fun([gamma_ptr, head_ty, g1, head](const Obj& y2, const Hom& rho2,
                                                                const SemValue& tail) {
              SemValue h = head_ty->restrict(rho2, g1, head);
              std::vector<SemValue> items{h};
              if (y2.stage_index() > 0) {
                const std::vector<SemValue>& rest = tail.vec_items();
                items.insert(items.end(), rest.begin(), rest.end());
              }
              return SemValue::vec(std::move(items));
            });
          });
        });
        return stream_op_result(elab, ctx, ty, tm);
      }};

  reg["lob"] = TmExtDescriptor{
      "lob", [](const Elaborator& elab, const TmExpr& node, const CtxExpr& ctx) {
        using R = Tcm<InferInterpretResult>;
        const auto& args = node.ext_args();
        if (args.size() != 3 || !std::holds_alternative<std::string>(args[0]) ||
            !std::holds_alternative<TyExpr>(args[1]) || !std::holds_alternative<TmExpr>(args[2]))
          return R::error("löb: bad arguments");
        return loeb_elaborate(elab, std::get<std::string>(args[0]), std::get<TyExpr>(args[1]),
                              std::get<TmExpr>(args[2]), ctx);
      }};

  return reg;
}

TyExtRegistry make_ty_exts() {
  TyExtRegistry reg;
  TyExtDescriptor gs;
  gs.name = "GStream";
  gs.mode = omega_mode();
  gs.arg_modes = {star_mode()};
  gs.interpret = [](const std::vector<ClosedSemTy>& args) { return gstream_sem_ty(args[0]); };
  gs.lift_iso = [](const std::vector<ClosedTyIso>& args) {
    ClosedTyIso inner = args[0];
    return ClosedTyIso{[inner](const SemCtx& ctx) {
      Dra c = constantly_dra();
      auto ctx_ptr = std::make_shared<const SemCtx>(ctx);
      SemTyIso e = inner.at(c.lock(ctx));
      auto map_vec = [c, ctx_ptr](const CellMap& h, const Obj& x, const Env& g, const SemValue& v) {
        std::vector<SemValue> out;
        out.reserve(v.vec_items().size());
        for (const SemValue& item : v.vec_items()) out.push_back(c.map_cell(*ctx_ptr, x, g, item, h));
        return SemValue::vec(std::move(out));
      };
      return SemTyIso{
          [map_vec, e](const Obj& x, const Env& g, const SemValue& v) {
            return map_vec(e.forward, x, g, v);
          },
          [map_vec, e](const Obj& x, const Env& g, const SemValue& v) {
            return map_vec(e.backward, x, g, v);
          }};
    }};
  };
  reg["GStream"] = gs;
  return reg;
}

// Extraction target <forever | GStream A>: element k of the stream is the
// last entry of the stage-k vector (restriction drops the last element, so
// that entry is the one new at stage k).
ExtractHook forever_stream_hook() {
  ExtractHook hook;
  hook.match = [](const Elaborator& elab, const std::vector<ExtractHook>& hooks,
                  const TyExpr& ty) -> std::optional<Extractable> {
    if (!ty.is_modal()) return std::nullopt;
    const ModalityExpr& mu = ty.modality();
    if (mu.kind() != ModalityExpr::Kind::atom || mu.atom_name() != "forever") return std::nullopt;
    TyExpr body = ty.body();
    if (body.kind() != TyExpr::Kind::ext || body.ext_code() != "GStream") return std::nullopt;
    TyExpr a = body.ext_args()[0];
    Tcm<Extractable> ex_a = extractable_for(elab, hooks, a);
    if (ex_a.is_error()) return std::nullopt;
    Extractable elem = ex_a.value();
    auto extract_fn = [elem](const SemTm& t) {
      SemValue fam = t.at(Obj::star(), Env{});
      return HostValue::stream(HostStream{[elem, fam](std::uint64_t k) {
        SemValue stage = fam.fam_at(k);
        return elem.extract(const_star_tm(stage.vec_items().back()));
      }});
    };
    auto embed_fn = [elem](const HostValue& v) {
      HostStream s = v.as_stream();
      return const_star_tm(SemValue::fam([elem, s](std::uint64_t n) {
        std::vector<SemValue> items;
        items.reserve(n + 1);
        for (std::uint64_t i = 0; i <= n; ++i)
          items.push_back(elem.embed(s.at(i)).at(Obj::star(), Env{}));
        return SemValue::vec(std::move(items));
      }));
    };
    return Extractable{ty, extract_fn, embed_fn};
  };
  return hook;
}

}  // namespace

const AppConfig& app() {
  static const AppConfig config = [] {
    AppConfig c;
    c.name = "guarded";
    c.mode_theory = mode_theory();
    c.ty_exts = make_ty_exts();
    c.tm_exts = make_tm_exts();
    c.extract_hooks = {forever_stream_hook()};

    c.surface.mode_names = {{"star", star_mode()}, {"omega", omega_mode()}};
    c.surface.default_mode = star_mode();
    c.surface.cell_names = {"1-to-later", "constoforev-to-1"};
    c.surface.ty_ext_names = {{"GStream", "GStream"}};

    auto stream_form = [](const char* code) {
      SurfaceForm f;
      f.args = {ExtArgKind::type};
      f.type_arg_modes = {star_mode()};
      std::string c_code = code;
      f.build = [c_code](const std::vector<SurfaceArg>& args) {
        return Tcm<TmExpr>::ok(
            TmExpr::ext(c_code, {TmExtArg(std::get<TyExpr>(args[0]))}, omega_mode()));
      };
      return f;
    };
    c.surface.forms["g-head"] = stream_form("g-head");
    c.surface.forms["g-tail"] = stream_form("g-tail");
    c.surface.forms["g-cons"] = stream_form("g-cons");
    return c;
  }();
  return config;
}

}  // namespace guarded
}  // namespace mstt
