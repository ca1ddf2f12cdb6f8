#include "mstt/mode_theory.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace mstt {

ModalityExpr ModalityExpr::unit(ModeExpr m) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::unit;
  n->dom = m;
  n->cod = m;
  return ModalityExpr(std::move(n));
}

ModalityExpr ModalityExpr::atom(std::string name, ModeExpr dom, ModeExpr cod) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::atom;
  n->name = std::move(name);
  n->dom = std::move(dom);
  n->cod = std::move(cod);
  return ModalityExpr(std::move(n));
}

const std::string& ModalityExpr::atom_name() const {
  assert(kind() == Kind::atom);
  return node_->name;
}

ModalityExpr ModalityExpr::left() const {
  assert(kind() == Kind::compose);
  return ModalityExpr(node_->lhs);
}

ModalityExpr ModalityExpr::right() const {
  assert(kind() == Kind::compose);
  return ModalityExpr(node_->rhs);
}

bool operator==(const ModalityExpr& a, const ModalityExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.dom() != b.dom() || a.cod() != b.cod()) return false;
  switch (a.kind()) {
    case ModalityExpr::Kind::unit: return true;
    case ModalityExpr::Kind::atom: return a.node_->name == b.node_->name;
    case ModalityExpr::Kind::compose:
      return ModalityExpr(a.node_->lhs) == ModalityExpr(b.node_->lhs) &&
             ModalityExpr(a.node_->rhs) == ModalityExpr(b.node_->rhs);
  }
  return false;
}

std::string ModalityExpr::show() const {
  switch (kind()) {
    case Kind::unit: return "1";
    case Kind::atom: return node_->name;
    case Kind::compose: {
      auto part = [](const std::shared_ptr<const Node>& n) {
        ModalityExpr e{n};
        std::string s = e.show();
        if (e.kind() == Kind::compose) return "(" + s + ")";
        return s;
      };
      return part(node_->lhs) + " o " + part(node_->rhs);
    }
  }
  return "?";
}

Tcm<ModalityExpr> compose_modalities(const ModalityExpr& mu, const ModalityExpr& rho) {
  if (mu.dom() != rho.cod())
    return Tcm<ModalityExpr>::error("modality composition mode mismatch: dom(" + mu.show() + ") = " +
                                    mu.dom().tag + " but cod(" + rho.show() + ") = " + rho.cod().tag);
  auto n = std::make_shared<ModalityExpr::Node>();
  n->kind = ModalityExpr::Kind::compose;
  n->dom = rho.dom();
  n->cod = mu.cod();
  n->lhs = mu.node_;
  n->rhs = rho.node_;
  return Tcm<ModalityExpr>::ok(ModalityExpr(std::move(n)));
}

const AtomInfo* ModeTheory::find_atom(const std::string& name) const {
  for (const AtomInfo& a : atoms)
    if (a.name == name) return &a;
  return nullptr;
}

ModalityExpr ModeTheory::atom_expr(const std::string& name) const {
  const AtomInfo* a = find_atom(name);
  assert(a != nullptr);
  return ModalityExpr::atom(a->name, a->dom, a->cod);
}

Dra ModeTheory::interpret_modality(const ModalityExpr& mu) const {
  switch (mu.kind()) {
    case ModalityExpr::Kind::unit: return dra_unit(interpret_mode(mu.dom()));
    case ModalityExpr::Kind::atom: return interpret_atom(mu.atom_name());
    case ModalityExpr::Kind::compose:
      return dra_compose(interpret_modality(mu.left()), interpret_modality(mu.right()));
  }
  throw TagPanic("interpret_modality: unreachable");
}

Dra ModeTheory::interpret_atom_list(const std::vector<std::string>& atoms_nf,
                                    const ModeExpr& dom_mode) const {
  if (atoms_nf.empty()) return dra_unit(interpret_mode(dom_mode));
  Dra acc = interpret_atom(atoms_nf.back());
  for (auto it = atoms_nf.rbegin() + 1; it != atoms_nf.rend(); ++it)
    acc = dra_compose(interpret_atom(*it), acc);
  return acc;
}

namespace {

void flatten_into(const ModalityExpr& mu, std::vector<std::string>& out) {
  switch (mu.kind()) {
    case ModalityExpr::Kind::unit: return;
    case ModalityExpr::Kind::atom: out.push_back(mu.atom_name()); return;
    case ModalityExpr::Kind::compose:
      flatten_into(mu.left(), out);
      flatten_into(mu.right(), out);
      return;
  }
}

// First applicable rewrite: (rule index, position) or nullopt.
std::optional<std::pair<std::size_t, std::size_t>> find_redex(const ModeTheory& mt,
                                                              const std::vector<std::string>& l) {
  for (std::size_t pos = 0; pos < l.size(); ++pos) {
    for (std::size_t r = 0; r < mt.rewrites.size(); ++r) {
      const auto& lhs = mt.rewrites[r].lhs;
      if (pos + lhs.size() > l.size()) continue;
      if (std::equal(lhs.begin(), lhs.end(), l.begin() + pos)) return std::make_pair(r, pos);
    }
  }
  return std::nullopt;
}

std::vector<std::string> apply_rewrite(const std::vector<std::string>& l, const ModalityRewrite& rule,
                                       std::size_t pos) {
  std::vector<std::string> out(l.begin(), l.begin() + pos);
  out.insert(out.end(), rule.rhs.begin(), rule.rhs.end());
  out.insert(out.end(), l.begin() + pos + rule.lhs.size(), l.end());
  return out;
}

// Isomorphism between the cells of <composite(l)|A> and <composite(nf(l))|A>,
// built by composing per-rule witnesses along the rewrite chain. Rewrites
// inside a list act under the prefix wrapper (via map_cell) and on the type
// still wrapped by the suffix composite.
ClosedTyIso chain_iso(const ModeTheory& mt, std::vector<std::string> l, const ModeExpr& whole_dom,
                      const ClosedSemTy& a) {
  ClosedTyIso total = identity_iso();
  for (;;) {
    auto redex = find_redex(mt, l);
    if (!redex) return total;
    const ModalityRewrite& rule = mt.rewrites[redex->first];
    std::size_t pos = redex->second;

    std::vector<std::string> prefix(l.begin(), l.begin() + pos);
    std::vector<std::string> suffix(l.begin() + pos + rule.lhs.size(), l.end());

    // The suffix is rightmost, so its domain mode is the whole list's.
    Dra suffix_dra = mt.interpret_atom_list(suffix, whole_dom);
    Dra prefix_dra = mt.interpret_atom_list(prefix, mt.find_atom(rule.lhs.front())->cod);

    ClosedSemTy wrapped = suffix_dra.mod(a);
    ClosedTyIso rule_iso = rule.iso(wrapped);

    ClosedTyIso step{[prefix_dra, rule_iso](const SemCtx& ctx) {
      SemCtx locked = prefix_dra.lock(ctx);
      SemTyIso inner = rule_iso.at(locked);
      auto lift = [prefix_dra, ctx_ptr = std::make_shared<const SemCtx>(ctx)](
                      const CellMap& h, const Obj& x, const Env& g, const SemValue& v) {
        return prefix_dra.map_cell(*ctx_ptr, x, g, v, h);
      };
      return SemTyIso{
          [lift, inner](const Obj& x, const Env& g, const SemValue& v) {
            return lift(inner.forward, x, g, v);
          },
          [lift, inner](const Obj& x, const Env& g, const SemValue& v) {
            return lift(inner.backward, x, g, v);
          }};
    }};

    total = compose_iso(step, total);
    l = apply_rewrite(l, rule, pos);
  }
}

}  // namespace

std::vector<std::string> normalize_modality(const ModeTheory& mt, const ModalityExpr& mu) {
  std::vector<std::string> l;
  flatten_into(mu, l);
  for (;;) {
    auto redex = find_redex(mt, l);
    if (!redex) return l;
    l = apply_rewrite(l, mt.rewrites[redex->first], redex->second);
  }
}

ModalityExpr denormalize_modality(const ModeTheory& mt, const std::vector<std::string>& atoms,
                                  const ModeExpr& mode) {
  if (atoms.empty()) return ModalityExpr::unit(mode);
  ModalityExpr acc = mt.atom_expr(atoms.back());
  for (auto it = atoms.rbegin() + 1; it != atoms.rend(); ++it) {
    Tcm<ModalityExpr> c = compose_modalities(mt.atom_expr(*it), acc);
    assert(c.is_ok());
    acc = c.value();
  }
  return acc;
}

Tcm<bool> modes_equal(const ModeExpr& m, const ModeExpr& n) {
  if (m == n) return Tcm<bool>::ok(true);
  return Tcm<bool>::error("mode mismatch: `" + m.tag + "` vs `" + n.tag + "`");
}

std::string show_atom_list(const std::vector<std::string>& atoms) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i) out << ", ";
    out << atoms[i];
  }
  out << "]";
  return out.str();
}

Tcm<SemModalityIso> modalities_equivalent(const ModeTheory& mt, const ModalityExpr& mu,
                                          const ModalityExpr& rho) {
  if (mu.dom() != rho.dom() || mu.cod() != rho.cod())
    return Tcm<SemModalityIso>::error("modalities `" + mu.show() + "` and `" + rho.show() +
                                      "` have different endpoints");
  std::vector<std::string> nf_mu = normalize_modality(mt, mu);
  std::vector<std::string> nf_rho = normalize_modality(mt, rho);
  if (nf_mu != nf_rho)
    return Tcm<SemModalityIso>::error("modalities not equivalent: `" + mu.show() + "` vs `" +
                                      rho.show() + "` (normal forms " + show_atom_list(nf_mu) +
                                      " vs " + show_atom_list(nf_rho) + ")");

  auto mt_ptr = std::make_shared<const ModeTheory>(mt);
  std::vector<std::string> flat_mu, flat_rho;
  flatten_into(mu, flat_mu);
  flatten_into(rho, flat_rho);
  ModeExpr dom = mu.dom();

  SemModalityIso iso;
  iso.eq_mod_closed = [mt_ptr, flat_mu, flat_rho, dom](const ClosedSemTy& a) {
    ClosedTyIso to_nf_mu = chain_iso(*mt_ptr, flat_mu, dom, a);
    ClosedTyIso to_nf_rho = chain_iso(*mt_ptr, flat_rho, dom, a);
    return compose_iso(invert_iso(to_nf_rho), to_nf_mu);
  };
  // Equivalent modalities have cell-wise identical lock cells in both
  // shipped theories (a tested invariant), so the lock transport is the
  // identity on environments.
  iso.lock_transport = [](const SemCtx&, const Obj&, const Env& g) { return g; };
  return Tcm<SemModalityIso>::ok(iso);
}

Tcm<SemTwoCell> check_two_cell(const ModeTheory& mt, const TwoCellExpr& alpha,
                               const ModalityExpr& mu, const ModalityExpr& rho) {
  if (mu.dom() != rho.dom() || mu.cod() != rho.cod())
    return Tcm<SemTwoCell>::error("two-cell `" + alpha.tag + "`: endpoints `" + mu.show() +
                                  "` and `" + rho.show() + "` live at different modes");
  if (alpha.is_id()) {
    Tcm<SemModalityIso> eq = modalities_equivalent(mt, mu, rho);
    if (eq.is_error())
      return Tcm<SemTwoCell>::error("two-cell `id-cell` needs equivalent endpoints: " +
                                    eq.error_message());
    return Tcm<SemTwoCell>::ok(SemTwoCell{eq.value().lock_transport});
  }
  std::vector<std::string> nf_mu = normalize_modality(mt, mu);
  std::vector<std::string> nf_rho = normalize_modality(mt, rho);
  for (const TwoCellRule& rule : mt.two_cells) {
    if (rule.cell == alpha.tag && rule.nf_mu == nf_mu && rule.nf_rho == nf_rho)
      return Tcm<SemTwoCell>::ok(SemTwoCell{rule.transport});
  }
  return Tcm<SemTwoCell>::error("two-cell `" + alpha.tag + "` does not admit endpoints `" +
                                mu.show() + "` => `" + rho.show() + "` (normal forms " +
                                show_atom_list(nf_mu) + " => " + show_atom_list(nf_rho) + ")");
}

}  // namespace mstt
