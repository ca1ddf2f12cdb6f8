#include "mstt/parametricity.hpp"

namespace mstt {
namespace param {

ModeExpr star_mode() { return ModeExpr{"star"}; }
ModeExpr wedge_mode() { return ModeExpr{"wedge"}; }
ModalityExpr forget_left_m() {
  return ModalityExpr::atom("forget-left", wedge_mode(), star_mode());
}
ModalityExpr forget_right_m() {
  return ModalityExpr::atom("forget-right", wedge_mode(), star_mode());
}

BaseCategoryPtr wedge_category() {
  static const BaseCategoryPtr cat = std::make_shared<BaseCategory>(
      "wedge",
      [](const Hom& f) {
        if (f.src.kind() != Obj::Kind::wedge || f.dst.kind() != Obj::Kind::wedge) return false;
        if (f.src.wedge_point() == f.dst.wedge_point()) return true;
        return f.dst.wedge_point() == WedgePoint::relation;
      },
      [](std::uint64_t) {
        return std::vector<Obj>{Obj::wedge(WedgePoint::left), Obj::wedge(WedgePoint::right),
                                Obj::wedge(WedgePoint::relation)};
      });
  return cat;
}

SemValue rel_value(const RelCode& code, const HostValue& left, const HostValue& right) {
  if (!code.rel(left, right))
    throw RelationViolation("relation `" + code.name + "` violated by (" + left.show() + ", " +
                            right.show() + ")");
  return SemValue::rel(SemValue::host(left, code.left_tag), SemValue::host(right, code.right_tag));
}

ClosedSemTy from_rel_sem_ty(const RelCodePtr& code) {
  return ClosedSemTy([code](const SemCtx&) {
    return SemTy(
        [code](const Obj& x, const Env&, const SemValue& v) {
          switch (x.wedge_point()) {
            case WedgePoint::left: return v.is_host() && v.host_tag() == code->left_tag;
            case WedgePoint::right: return v.is_host() && v.host_tag() == code->right_tag;
            case WedgePoint::relation:
              return v.is_rel() && v.rel_left().is_host() && v.rel_right().is_host() &&
                     v.rel_left().host_tag() == code->left_tag &&
                     v.rel_right().host_tag() == code->right_tag &&
                     code->rel(v.rel_left().host_payload(), v.rel_right().host_payload());
          }
          return false;
        },
        [](const Hom& f, const Env&, const SemValue& v) -> SemValue {
          if (f.src.wedge_point() == f.dst.wedge_point()) return v;
          // relation -> leg projections
          if (f.src.wedge_point() == WedgePoint::left) return v.rel_left();
          return v.rel_right();
        });
  });
}

namespace {

SemCtx forget_lock(const SemCtx& parent_ctx, WedgePoint kept) {
  auto parent = std::make_shared<const SemCtx>(parent_ctx);
  return SemCtx(
      wedge_category(),
      [parent, kept](const Obj& x) {
        if (x.wedge_point() == kept) return parent->cell(Obj::star());
        CellDesc d = parent->cell(Obj::star());
        return CellDesc{true, d.arity};
      },
      [](const Hom&, const Env& g) { return g; });
}

Dra forget_dra(WedgePoint kept, const char* name) {
  Dra d;
  d.dom_cat = wedge_category();
  d.cod_cat = star_category();
  d.lock = [kept](const SemCtx& g) { return forget_lock(g, kept); };
  d.mod = [kept](const ClosedSemTy& t) {
    return ClosedSemTy([t, kept](const SemCtx& ctx) {
      auto inner = std::make_shared<const SemTy>(t.at(forget_lock(ctx, kept)));
      return SemTy(
          [inner, kept](const Obj&, const Env& g, const SemValue& v) {
            return inner->member(Obj::wedge(kept), g, v);
          },
          [inner, kept](const Hom&, const Env& gy, const SemValue& v) {
            return inner->restrict(Hom{Obj::wedge(kept), Obj::wedge(kept)}, gy, v);
          });
    });
  };
  d.intro = [kept](const SemCtx&, const ClosedSemTy&, const SemTm& t) {
    return SemTm([t, kept](const Obj&, const Env& g) { return t.at(Obj::wedge(kept), g); });
  };
  std::string panic = std::string(name) + ": evaluated at a forgotten leg";
  d.elim = [kept, panic](const SemCtx&, const ClosedSemTy&, const SemTm& s) {
    return SemTm([s, kept, panic](const Obj& x, const Env& g) {
      if (x.wedge_point() != kept) throw TagPanic(panic);
      return s.at(Obj::star(), g);
    });
  };
  d.map_cell = [kept](const SemCtx&, const Obj&, const Env& g, const SemValue& v, const CellMap& h) {
    return h(Obj::wedge(kept), g, v);
  };
  d.lock_obj = [kept](const Obj& x) -> std::optional<Obj> {
    if (x.wedge_point() == kept) return Obj::star();
    return std::nullopt;
  };
  return d;
}

}  // namespace

Dra forget_right_dra() { return forget_dra(WedgePoint::left, "forget-right"); }
Dra forget_left_dra() { return forget_dra(WedgePoint::right, "forget-left"); }

TyExpr from_rel(const std::string& surface_name) {
  return TyExpr::ext(surface_name, {}, wedge_mode());
}

namespace {

struct FromRel0Payload {
  std::string ty_code;
  HostValue left, right;
};

struct FromRel1Payload {
  std::string a, b;
  std::function<HostValue(const HostValue&)> f_left, f_right;
};

struct FromRel2Payload {
  std::string a, b, c;
  std::function<HostValue(const HostValue&, const HostValue&)> f_left, f_right;
};

}  // namespace

TmExpr from_rel0(const std::string& ty_code, const HostValue& left, const HostValue& right) {
  auto payload = std::make_shared<const FromRel0Payload>(FromRel0Payload{ty_code, left, right});
  return TmExpr::ext("from-rel0", {TmExtArg(std::shared_ptr<const void>(payload))}, wedge_mode());
}

TmExpr from_rel1(const std::string& a, const std::string& b,
                 std::function<HostValue(const HostValue&)> f_left,
                 std::function<HostValue(const HostValue&)> f_right) {
  auto payload = std::make_shared<const FromRel1Payload>(
      FromRel1Payload{a, b, std::move(f_left), std::move(f_right)});
  return TmExpr::ext("from-rel1", {TmExtArg(std::shared_ptr<const void>(payload))}, wedge_mode());
}

TmExpr from_rel2(const std::string& a, const std::string& b, const std::string& c,
                 std::function<HostValue(const HostValue&, const HostValue&)> f_left,
                 std::function<HostValue(const HostValue&, const HostValue&)> f_right) {
  auto payload = std::make_shared<const FromRel2Payload>(
      FromRel2Payload{a, b, c, std::move(f_left), std::move(f_right)});
  return TmExpr::ext("from-rel2", {TmExtArg(std::shared_ptr<const void>(payload))}, wedge_mode());
}

// --- applicative lifts ----------------------------------------------------

namespace {

TmExpr lift_body(const ModalityExpr& mu, const std::vector<TyExpr>& args, const TyExpr& result) {
  ModeExpr m = mu.cod();
  const ModeExpr inner_mode = mu.dom();
  TyExpr fn = result;
  for (auto it = args.rbegin(); it != args.rend(); ++it) fn = TyExpr::arrow(*it, fn);

  std::vector<std::string> names;
  for (std::size_t i = 0; i < args.size(); ++i) names.push_back("a" + std::to_string(i));

  TmExpr applied = svar("f0", inner_mode);
  for (const std::string& n : names) applied = TmExpr::app(applied, svar(n, inner_mode));
  TmExpr core = TmExpr::mod_elim(mu, "f0", svar("h", m), TmExpr::mod_intro(mu, applied));
  for (auto i = names.size(); i > 0; --i)
    core = sugar_modal_lam(mu, names[i - 1], args[i - 1], core);
  return TmExpr::lam("h", TyExpr::modal(mu, fn), core);
}

}  // namespace

TmExpr lift_a1(const ModalityExpr& mu, const TyExpr& a, const TyExpr& b) {
  return lift_body(mu, {a}, b);
}
TmExpr lift_a2(const ModalityExpr& mu, const TyExpr& a, const TyExpr& b, const TyExpr& c) {
  return lift_body(mu, {a, b}, c);
}
TmExpr lift_a3(const ModalityExpr& mu, const TyExpr& a, const TyExpr& b, const TyExpr& c,
               const TyExpr& d) {
  return lift_body(mu, {a, b, c}, d);
}

Tcm<IntStructure> make_int_structure(const Elaborator& elab, const TyExpr& a, const TmExpr& add,
                                     const TmExpr& negate) {
  using R = Tcm<IntStructure>;
  CtxExpr empty = CtxExpr::empty(a.mode());
  Tcm<InferInterpretResult> add_r = elab.infer_interpret(add, empty);
  if (add_r.is_error()) return R::error("IntStructure add: " + add_r.error_message());
  Tcm<ClosedTyIso> add_ok =
      elab.ty_equiv(TyExpr::arrow(a, TyExpr::arrow(a, a)), add_r.value().type);
  if (add_ok.is_error()) return R::error("IntStructure add: " + add_ok.error_message());
  Tcm<InferInterpretResult> neg_r = elab.infer_interpret(negate, empty);
  if (neg_r.is_error()) return R::error("IntStructure negate: " + neg_r.error_message());
  Tcm<ClosedTyIso> neg_ok = elab.ty_equiv(TyExpr::arrow(a, a), neg_r.value().type);
  if (neg_ok.is_error()) return R::error("IntStructure negate: " + neg_ok.error_message());
  return R::ok(IntStructure{add, negate});
}

// --- the integer example ------------------------------------------------------

HostValue diff_nat(std::uint64_t a, std::uint64_t b) {
  return HostValue::pair(HostValue::nat(a), HostValue::nat(b));
}

HostValue sign_nat(bool positive, std::uint64_t n) {
  return HostValue::pair(HostValue::sym(positive ? "pos" : "neg"), HostValue::nat(n));
}

bool int_related(const HostValue& diff, const HostValue& sign) {
  std::uint64_t a = diff.first().as_nat(), b = diff.second().as_nat();
  std::uint64_t n = sign.second().as_nat();
  if (sign.first().as_sym() == "pos") return a == b + n;
  return a + n == b;
}

RelCodePtr z_code() {
  static const RelCodePtr code = std::make_shared<RelCode>(
      RelCode{"Z", "DiffNat", "SignNat",
              [](const HostValue& l, const HostValue& r) { return int_related(l, r); }});
  return code;
}

TyExpr z_ty() { return from_rel("Z"); }

namespace {

HostValue add_diff(const HostValue& x, const HostValue& y) {
  return diff_nat(x.first().as_nat() + y.first().as_nat(),
                  x.second().as_nat() + y.second().as_nat());
}

HostValue negate_diff(const HostValue& x) {
  return diff_nat(x.second().as_nat(), x.first().as_nat());
}

HostValue add_sign(const HostValue& x, const HostValue& y) {
  bool xp = x.first().as_sym() == "pos", yp = y.first().as_sym() == "pos";
  std::uint64_t xn = x.second().as_nat(), yn = y.second().as_nat();
  if (xp == yp) return sign_nat(xp, xn + yn);
  if (xn >= yn) return sign_nat(xp, xn - yn);
  return sign_nat(yp, yn - xn);
}

HostValue negate_sign(const HostValue& x) {
  return sign_nat(x.first().as_sym() != "pos", x.second().as_nat());
}

}  // namespace

IntStructure z_int() {
  return IntStructure{from_rel2("Z", "Z", "Z", add_diff, add_sign),
                      from_rel1("Z", "Z", negate_diff, negate_sign)};
}

TmExpr subtract(const IntStructure& s, const TyExpr& a) {
  ModeExpr m = a.mode();
  TmExpr body = TmExpr::app(TmExpr::app(s.add, svar("a", m)),
                            TmExpr::app(s.negate, svar("b", m)));
  return TmExpr::lam("a", a, TmExpr::lam("b", a, body));
}

TmExpr subtract_star_left() {
  TmExpr sub = subtract(z_int(), z_ty());
  TmExpr body = TmExpr::mod_intro(
      forget_right_m(),
      TmExpr::app(TmExpr::app(sub, svar("x", wedge_mode())), svar("y", wedge_mode())));
  return sugar_modal_lam(forget_right_m(), "x", z_ty(),
                         sugar_modal_lam(forget_right_m(), "y", z_ty(), body));
}

TmExpr subtract_star_right() {
  TmExpr sub = subtract(z_int(), z_ty());
  return TmExpr::app(lift_a2(forget_left_m(), z_ty(), z_ty(), z_ty()),
                     TmExpr::mod_intro(forget_left_m(), sub));
}

TmExpr z_diff_lit(std::uint64_t a, std::uint64_t b) {
  return TmExpr::ext("zdiff", {TmExtArg(a), TmExtArg(b)}, star_mode());
}

TmExpr z_sign_lit(bool positive, std::uint64_t n) {
  return TmExpr::ext("zsign", {TmExtArg(std::string(positive ? "pos" : "neg")), TmExtArg(n)},
                     star_mode());
}

TmExpr z_int_lit(std::int64_t k) {
  std::uint64_t mag = static_cast<std::uint64_t>(k < 0 ? -k : k);
  HostValue left = k < 0 ? diff_nat(0, mag) : diff_nat(mag, 0);
  HostValue right = sign_nat(k >= 0, mag);
  return from_rel0("Z", left, right);
}

// --- mode theory and app bundle -----------------------------------------------

ModeTheoryPtr mode_theory() {
  static const ModeTheoryPtr mt = [] {
    auto t = std::make_shared<ModeTheory>();
    t->name = "param";
    t->modes = {star_mode(), wedge_mode()};
    t->atoms = {{"forget-left", wedge_mode(), star_mode()},
                {"forget-right", wedge_mode(), star_mode()}};
    t->interpret_mode = [](const ModeExpr& m) {
      return m == wedge_mode() ? wedge_category() : star_category();
    };
    t->interpret_atom = [](const std::string& name) {
      return name == "forget-left" ? forget_left_dra() : forget_right_dra();
    };
    return t;
  }();
  return mt;
}

namespace {

RelCodePtr code_by_tag(const std::string& ty_code) {
  // One shipped FromRel code; the registry pattern extends to more.
  if (ty_code == "Z") return z_code();
  return nullptr;
}

Tcm<RelCodePtr> need_code(const std::string& ty_code) {
  RelCodePtr c = code_by_tag(ty_code);
  if (!c) return Tcm<RelCodePtr>::error("unknown FromRel code `" + ty_code + "`");
  return Tcm<RelCodePtr>::ok(c);
}

TmExtRegistry make_tm_exts() {
  TmExtRegistry reg;

  reg["from-rel0"] = TmExtDescriptor{
      "from-rel0", [](const Elaborator&, const TmExpr& node, const CtxExpr&) {
        using R = Tcm<InferInterpretResult>;
        auto payload = std::static_pointer_cast<const FromRel0Payload>(
            std::get<std::shared_ptr<const void>>(node.ext_args()[0]));
        Tcm<RelCodePtr> code = need_code(payload->ty_code);
        if (code.is_error()) return R::error(code.error_message());
        RelCodePtr c = code.value();
        HostValue l = payload->left, r = payload->right;
        if (!c->rel(l, r))
          return R::error("from-rel0: values (" + l.show() + ", " + r.show() +
                          ") are not related by `" + c->name + "`");
        SemTm tm([c, l, r](const Obj& x, const Env&) -> SemValue {
          switch (x.wedge_point()) {
            case WedgePoint::left: return SemValue::host(l, c->left_tag);
            case WedgePoint::right: return SemValue::host(r, c->right_tag);
            default: return rel_value(*c, l, r);
          }
        });
        return R::ok(InferInterpretResult{from_rel(payload->ty_code), tm});
      }};

  reg["from-rel1"] = TmExtDescriptor{
      "from-rel1", [](const Elaborator&, const TmExpr& node, const CtxExpr&) {
        using R = Tcm<InferInterpretResult>;
        auto payload = std::static_pointer_cast<const FromRel1Payload>(
            std::get<std::shared_ptr<const void>>(node.ext_args()[0]));
        Tcm<RelCodePtr> ca = need_code(payload->a);
        if (ca.is_error()) return R::error(ca.error_message());
        Tcm<RelCodePtr> cb = need_code(payload->b);
        if (cb.is_error()) return R::error(cb.error_message());
        RelCodePtr b = cb.value();
        auto fl = payload->f_left;
        auto fr = payload->f_right;
        SemTm tm([b, fl, fr](const Obj&, const Env&) {
          return SemValue::fun([b, fl, fr](const Obj& y, const Hom&, const SemValue& v) -> SemValue {
            switch (y.wedge_point()) {
              case WedgePoint::left: return SemValue::host(fl(v.host_payload()), b->left_tag);
              case WedgePoint::right: return SemValue::host(fr(v.host_payload()), b->right_tag);
              default:
                return rel_value(*b, fl(v.rel_left().host_payload()),
                                 fr(v.rel_right().host_payload()));
            }
          });
        });
        return R::ok(InferInterpretResult{
            TyExpr::arrow(from_rel(payload->a), from_rel(payload->b)), tm});
      }};

  reg["from-rel2"] = TmExtDescriptor{
      "from-rel2", [](const Elaborator&, const TmExpr& node, const CtxExpr&) {
        using R = Tcm<InferInterpretResult>;
        auto payload = std::static_pointer_cast<const FromRel2Payload>(
            std::get<std::shared_ptr<const void>>(node.ext_args()[0]));
        for (const std::string& tag : {payload->a, payload->b, payload->c}) {
          Tcm<RelCodePtr> c = need_code(tag);
          if (c.is_error()) return R::error(c.error_message());
        }
        RelCodePtr c = code_by_tag(payload->c);
        auto fl = payload->f_left;
        auto fr = payload->f_right;
        // The first argument arrives at the outer application object and may
        // need projecting when the second application happens at a leg.
        auto lower = [](const SemValue& v, const Obj& from, const Obj& to) {
          if (from.wedge_point() == to.wedge_point()) return v;
          if (to.wedge_point() == WedgePoint::left) return v.rel_left();
          return v.rel_right();
        };
        SemTm tm([c, fl, fr, lower](const Obj&, const Env&) {
          return SemValue::fun([c, fl, fr, lower](const Obj& y1, const Hom&, const SemValue& v) {
            return SemValue::fun(
                [c, fl, fr, lower, v, y1](const Obj& y2, const Hom&, const SemValue& v2) -> SemValue {
                  SemValue v1 = lower(v, y1, y2);
                  switch (y2.wedge_point()) {
                    case WedgePoint::left:
                      return SemValue::host(fl(v1.host_payload(), v2.host_payload()), c->left_tag);
                    case WedgePoint::right:
                      return SemValue::host(fr(v1.host_payload(), v2.host_payload()), c->right_tag);
                    default:
                      return rel_value(
                          *c, fl(v1.rel_left().host_payload(), v2.rel_left().host_payload()),
                          fr(v1.rel_right().host_payload(), v2.rel_right().host_payload()));
                  }
                });
          });
        });
        return R::ok(InferInterpretResult{
            TyExpr::arrow(from_rel(payload->a),
                          TyExpr::arrow(from_rel(payload->b), from_rel(payload->c))),
            tm});
      }};

  reg["zdiff"] = TmExtDescriptor{
      "zdiff", [](const Elaborator&, const TmExpr& node, const CtxExpr&) {
        std::uint64_t a = std::get<std::uint64_t>(node.ext_args()[0]);
        std::uint64_t b = std::get<std::uint64_t>(node.ext_args()[1]);
        SemValue v = SemValue::host(diff_nat(a, b), z_code()->left_tag);
        return Tcm<InferInterpretResult>::ok(InferInterpretResult{
            TyExpr::modal(forget_right_m(), z_ty()),
            SemTm([v](const Obj&, const Env&) { return v; })});
      }};

  reg["zsign"] = TmExtDescriptor{
      "zsign", [](const Elaborator&, const TmExpr& node, const CtxExpr&) {
        using R = Tcm<InferInterpretResult>;
        const std::string& s = std::get<std::string>(node.ext_args()[0]);
        if (s != "pos" && s != "neg") return R::error("zsign: sign must be `pos` or `neg`");
        std::uint64_t n = std::get<std::uint64_t>(node.ext_args()[1]);
        SemValue v = SemValue::host(sign_nat(s == "pos", n), z_code()->right_tag);
        return R::ok(InferInterpretResult{
            TyExpr::modal(forget_left_m(), z_ty()),
            SemTm([v](const Obj&, const Env&) { return v; })});
      }};

  return reg;
}

TyExtRegistry make_ty_exts() {
  TyExtRegistry reg;
  TyExtDescriptor z;
  z.name = "Z";
  z.mode = wedge_mode();
  z.arg_modes = {};
  z.interpret = [](const std::vector<ClosedSemTy>&) { return from_rel_sem_ty(z_code()); };
  z.lift_iso = [](const std::vector<ClosedTyIso>&) { return identity_iso(); };
  reg["Z"] = z;
  return reg;
}

ExtractHook forget_hook() {
  ExtractHook hook;
  hook.match = [](const Elaborator&, const std::vector<ExtractHook>&,
                  const TyExpr& ty) -> std::optional<Extractable> {
    if (!ty.is_modal()) return std::nullopt;
    const ModalityExpr& mu = ty.modality();
    if (mu.kind() != ModalityExpr::Kind::atom) return std::nullopt;
    bool keep_left = mu.atom_name() == "forget-right";
    bool keep_right = mu.atom_name() == "forget-left";
    if (!keep_left && !keep_right) return std::nullopt;
    TyExpr body = ty.body();
    if (body.kind() != TyExpr::Kind::ext) return std::nullopt;
    RelCodePtr code = code_by_tag(body.ext_code());
    if (!code) return std::nullopt;
    std::string tag = keep_left ? code->left_tag : code->right_tag;
    return Extractable{
        ty, [](const SemTm& t) { return t.at(Obj::star(), Env{}).host_payload(); },
        [tag](const HostValue& v) { return const_star_tm(SemValue::host(v, tag)); }};
  };
  return hook;
}

}  // namespace

const AppConfig& app() {
  static const AppConfig config = [] {
    AppConfig c;
    c.name = "param";
    c.mode_theory = mode_theory();
    c.ty_exts = make_ty_exts();
    c.tm_exts = make_tm_exts();
    c.extract_hooks = {forget_hook()};

    IntStructure zs = z_int();
    c.builtin_defs = {{"z-add", zs.add}, {"z-negate", zs.negate}};

    c.surface.mode_names = {{"star", star_mode()}, {"wedge", wedge_mode()}};
    c.surface.default_mode = star_mode();
    c.surface.cell_names = {};
    c.surface.ty_ext_names = {{"Z", "Z"}};

    SurfaceForm zdiff;
    zdiff.args = {ExtArgKind::nat, ExtArgKind::nat};
    zdiff.build = [](const std::vector<SurfaceArg>& args) {
      return Tcm<TmExpr>::ok(
          z_diff_lit(std::get<std::uint64_t>(args[0]), std::get<std::uint64_t>(args[1])));
    };
    c.surface.forms["zdiff"] = zdiff;

    SurfaceForm zsign;
    zsign.args = {ExtArgKind::word, ExtArgKind::nat};
    zsign.build = [](const std::vector<SurfaceArg>& args) -> Tcm<TmExpr> {
      const std::string& s = std::get<std::string>(args[0]);
      if (s != "pos" && s != "neg")
        return Tcm<TmExpr>::error("zsign: sign must be `pos` or `neg`");
      return Tcm<TmExpr>::ok(z_sign_lit(s == "pos", std::get<std::uint64_t>(args[1])));
    };
    c.surface.forms["zsign"] = zsign;

    SurfaceForm zint;
    zint.args = {ExtArgKind::word, ExtArgKind::nat};
    zint.build = [](const std::vector<SurfaceArg>& args) -> Tcm<TmExpr> {
      const std::string& s = std::get<std::string>(args[0]);
      if (s != "pos" && s != "neg")
        return Tcm<TmExpr>::error("zint: sign must be `pos` or `neg`");
      std::int64_t mag = static_cast<std::int64_t>(std::get<std::uint64_t>(args[1]));
      return Tcm<TmExpr>::ok(z_int_lit(s == "pos" ? mag : -mag));
    };
    c.surface.forms["zint"] = zint;

    auto lift_form = [](std::size_t arity) {
      SurfaceForm f;
      f.args = {ExtArgKind::modality};
      for (std::size_t i = 0; i <= arity; ++i) f.args.push_back(ExtArgKind::type_dom);
      f.build = [arity](const std::vector<SurfaceArg>& args) -> Tcm<TmExpr> {
        ModalityExpr mu = std::get<ModalityExpr>(args[0]);
        std::vector<TyExpr> tys;
        for (std::size_t i = 1; i < args.size(); ++i) tys.push_back(std::get<TyExpr>(args[i]));
        switch (arity) {
          case 1: return Tcm<TmExpr>::ok(lift_a1(mu, tys[0], tys[1]));
          case 2: return Tcm<TmExpr>::ok(lift_a2(mu, tys[0], tys[1], tys[2]));
          default: return Tcm<TmExpr>::ok(lift_a3(mu, tys[0], tys[1], tys[2], tys[3]));
        }
      };
      return f;
    };
    c.surface.forms["lift-a1"] = lift_form(1);
    c.surface.forms["lift-a2"] = lift_form(2);
    c.surface.forms["lift-a3"] = lift_form(3);
    return c;
  }();
  return config;
}

}  // namespace param
}  // namespace mstt
