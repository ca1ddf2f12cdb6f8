#include "mstt/surface.hpp"

#include <cctype>
#include <sstream>

namespace mstt {
namespace surface {

const SourceDef* SourceProgram::find(const std::string& name) const {
  for (const SourceDef& d : defs)
    if (d.name == name) return &d;
  return nullptr;
}

namespace {

struct ParseError {
  std::string message;
  std::size_t line, col;
};

enum class Tok {
  word, number, lparen, rparen, lbracket, rbracket, langle, rangle, pipe, colon,
  equals, dot, dotlangle, arrow, star, leftarrow, at, eof
};

struct Token {
  Tok kind;
  std::string text;
  std::uint64_t value = 0;
  std::size_t line = 1, col = 1;
};

bool word_start(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto bump = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (text[i + j] == '\n') { ++line; col = 1; } else ++col;
    }
    i += k;
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') { bump(1); continue; }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '-') {
      while (i < text.size() && text[i] != '\n') bump(1);
      continue;
    }
    Token t;
    t.line = line;
    t.col = col;
    if (word_start(c)) {
      std::size_t j = i;
      while (j < text.size() &&
             (word_char(text[j]) ||
              (text[j] == '-' && j + 1 < text.size() && word_char(text[j + 1]) &&
               text[j + 1] != '-')))
        ++j;
      t.text = text.substr(i, j - i);
      bool digits = !t.text.empty();
      for (char d : t.text) digits = digits && std::isdigit(static_cast<unsigned char>(d));
      if (digits) {
        t.kind = Tok::number;
        t.value = std::stoull(t.text);
      } else {
        t.kind = Tok::word;
      }
      bump(j - i);
      out.push_back(t);
      continue;
    }
    switch (c) {
      case '(': t.kind = Tok::lparen; bump(1); break;
      case ')': t.kind = Tok::rparen; bump(1); break;
      case '[': t.kind = Tok::lbracket; bump(1); break;
      case ']': t.kind = Tok::rbracket; bump(1); break;
      case '>': t.kind = Tok::rangle; bump(1); break;
      case '|': t.kind = Tok::pipe; bump(1); break;
      case ':': t.kind = Tok::colon; bump(1); break;
      case '=': t.kind = Tok::equals; bump(1); break;
      case '@': t.kind = Tok::at; bump(1); break;
      case '*': t.kind = Tok::star; bump(1); break;
      case '<':
        if (i + 1 < text.size() && text[i + 1] == '-') { t.kind = Tok::leftarrow; bump(2); }
        else { t.kind = Tok::langle; bump(1); }
        break;
      case '.':
        if (i + 1 < text.size() && text[i + 1] == '<') { t.kind = Tok::dotlangle; bump(2); }
        else { t.kind = Tok::dot; bump(1); }
        break;
      case '-':
        if (i + 1 < text.size() && text[i + 1] == '>') { t.kind = Tok::arrow; bump(2); }
        else throw ParseError{"stray `-`", line, col};
        break;
      default:
        throw ParseError{std::string("unexpected character `") + c + "`", line, col};
    }
    out.push_back(t);
  }
  Token eof;
  eof.kind = Tok::eof;
  eof.line = line;
  eof.col = col;
  out.push_back(eof);
  return out;
}

const char* tok_name(Tok k) {
  switch (k) {
    case Tok::word: return "name";
    case Tok::number: return "number";
    case Tok::lparen: return "`(`";
    case Tok::rparen: return "`)`";
    case Tok::lbracket: return "`[`";
    case Tok::rbracket: return "`]`";
    case Tok::langle: return "`<`";
    case Tok::rangle: return "`>`";
    case Tok::pipe: return "`|`";
    case Tok::colon: return "`:`";
    case Tok::equals: return "`=`";
    case Tok::dot: return "`.`";
    case Tok::dotlangle: return "`.<`";
    case Tok::arrow: return "`->`";
    case Tok::star: return "`*`";
    case Tok::leftarrow: return "`<-`";
    case Tok::at: return "`@`";
    case Tok::eof: return "end of input";
  }
  return "?";
}

bool reserved_word(const std::string& w) {
  static const char* words[] = {"def", "lam", "lob", "mod", "let", "in", "var", "if",
                                "pair", "fst", "snd", "nat-elim", "true", "false", "suc",
                                "plus", "Nat", "Bool", "o"};
  for (const char* r : words)
    if (w == r) return true;
  return false;
}

class Parser {
 public:
  Parser(const AppConfig& app, std::vector<Token> toks)
      : app_(app), toks_(std::move(toks)) {}

  SourceProgram parse_program() {
    SourceProgram prog;
    while (peek().kind != Tok::eof) {
      expect_word("def");
      Token name_tok = expect(Tok::word, "definition name");
      if (prog.find(name_tok.text))
        throw err("duplicate definition `" + name_tok.text + "`", name_tok);
      ModeExpr mode = app_.surface.default_mode;
      if (peek().kind == Tok::at) {
        next();
        Token m = expect(Tok::word, "mode name");
        auto it = app_.surface.mode_names.find(m.text);
        if (it == app_.surface.mode_names.end()) throw err("unknown mode `" + m.text + "`", m);
        mode = it->second;
      }
      std::optional<TyExpr> ann;
      if (peek().kind == Tok::colon) {
        next();
        ann = parse_type(mode);
      }
      expect(Tok::equals, "`=`");
      defs_ = &prog;
      TmExpr body = parse_term(mode);
      TmExpr term = ann ? TmExpr::ann(body, *ann) : body;
      prog.defs.push_back(SourceDef{name_tok.text, mode, term});
    }
    return prog;
  }

  TmExpr parse_single_term(const ModeExpr& mode) {
    TmExpr t = parse_term(mode);
    expect(Tok::eof, "end of input");
    return t;
  }

 private:
  const AppConfig& app_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  SourceProgram* defs_ = nullptr;

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  ParseError err(const std::string& msg, const Token& t) const {
    return ParseError{msg, t.line, t.col};
  }

  Token expect(Tok kind, const std::string& what) {
    if (peek().kind != kind)
      throw err("expected " + what + ", found " + tok_name(peek().kind) +
                    (peek().kind == Tok::word ? " `" + peek().text + "`" : ""),
                peek());
    return next();
  }

  void expect_word(const std::string& w) {
    Token t = expect(Tok::word, "`" + w + "`");
    if (t.text != w) throw err("expected `" + w + "`, found `" + t.text + "`", t);
  }

  bool at_word(const std::string& w, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::word && peek(ahead).text == w;
  }

  // modality := "1" | atom | atom "o" modality   (expected codomain given)
  ModalityExpr parse_modality(const ModeExpr& cod) {
    Token t = peek();
    ModalityExpr head = ModalityExpr::unit(cod);
    if (t.kind == Tok::number && t.value == 1) {
      next();
    } else {
      Token w = expect(Tok::word, "modality");
      const AtomInfo* atom = app_.mode_theory->find_atom(w.text);
      if (!atom) throw err("unknown modality `" + w.text + "`", w);
      if (!(atom->cod == cod))
        throw err("modality `" + w.text + "` has codomain mode `" + atom->cod.tag +
                      "`, expected `" + cod.tag + "`",
                  w);
      head = ModalityExpr::atom(atom->name, atom->dom, atom->cod);
    }
    if (at_word("o")) {
      next();
      ModalityExpr rest = parse_modality(head.dom());
      Tcm<ModalityExpr> c = compose_modalities(head, rest);
      if (c.is_error()) throw err(c.error_message(), t);
      return c.value();
    }
    return head;
  }

  // type := prod ["->" type]; prod := atom {"*" atom}
  TyExpr parse_type(const ModeExpr& mode) {
    TyExpr t = parse_type_prod(mode);
    if (peek().kind == Tok::arrow) {
      next();
      return TyExpr::arrow(t, parse_type(mode));
    }
    return t;
  }

  TyExpr parse_type_prod(const ModeExpr& mode) {
    TyExpr t = parse_type_atom(mode);
    while (peek().kind == Tok::star) {
      next();
      t = TyExpr::prod(t, parse_type_atom(mode));
    }
    return t;
  }

  TyExpr parse_type_atom(const ModeExpr& mode) {
    Token t = peek();
    if (t.kind == Tok::lparen) {
      next();
      TyExpr inner = parse_type(mode);
      expect(Tok::rparen, "`)`");
      return inner;
    }
    if (t.kind == Tok::langle) {
      next();
      ModalityExpr mu = parse_modality(mode);
      expect(Tok::pipe, "`|`");
      TyExpr body = parse_type(mu.dom());
      expect(Tok::rangle, "`>`");
      return TyExpr::modal(mu, body);
    }
    Token w = expect(Tok::word, "type");
    if (w.text == "Nat") return TyExpr::nat(mode);
    if (w.text == "Bool") return TyExpr::boolean(mode);
    auto named = app_.surface.ty_ext_names.find(w.text);
    if (named != app_.surface.ty_ext_names.end()) {
      const TyExtDescriptor& d = app_.ty_exts.at(named->second);
      if (!(d.mode == mode))
        throw err("type `" + w.text + "` lives at mode `" + d.mode.tag + "`, expected `" +
                      mode.tag + "`",
                  w);
      std::vector<TyExpr> args;
      for (const ModeExpr& am : d.arg_modes) args.push_back(parse_type_atom(am));
      return TyExpr::ext(named->second, std::move(args), mode);
    }
    throw err("unknown type `" + w.text + "`", w);
  }

  // term := weak prefix form | application chain
  TmExpr parse_term(const ModeExpr& mode) {
    if (at_word("lam")) return parse_lam(mode);
    if (at_word("lob")) return parse_lob(mode);
    if (at_word("let")) return parse_let(mode);
    if (at_word("mod") && peek(1).kind == Tok::langle) return parse_mod(mode);
    TmExpr t = parse_atom(mode);
    for (;;) {
      if (peek().kind == Tok::dot) {
        next();
        t = TmExpr::app(t, parse_atom(mode));
      } else if (peek().kind == Tok::dotlangle) {
        next();
        ModalityExpr mu = parse_modality(mode);
        expect(Tok::rangle, "`>`");
        TmExpr arg = parse_operand(mu.dom());
        t = sugar_modal_app(t, mu, arg);
      } else {
        return t;
      }
    }
  }

  // An application operand at a possibly different mode: weak forms need
  // parentheses there only when followed by further applications.
  TmExpr parse_operand(const ModeExpr& mode) {
    if (at_word("lam") || at_word("lob") || at_word("let") ||
        (at_word("mod") && peek(1).kind == Tok::langle))
      return parse_term(mode);
    return parse_atom(mode);
  }

  TmExpr parse_lam(const ModeExpr& mode) {
    next();  // lam
    expect(Tok::lbracket, "`[`");
    // lam[ x : T ] b   or   lam[ mu | x : T ] b
    bool modal = false;
    std::size_t look = 0;
    for (;;) {
      Tok k = peek(look).kind;
      if (k == Tok::pipe) { modal = true; break; }
      if (k == Tok::colon || k == Tok::rbracket || k == Tok::eof) break;
      ++look;
    }
    if (modal) {
      ModalityExpr mu = parse_modality(mode);
      expect(Tok::pipe, "`|`");
      Token x = expect(Tok::word, "binder name");
      expect(Tok::colon, "`:`");
      TyExpr ty = parse_type(mu.dom());
      expect(Tok::rbracket, "`]`");
      return sugar_modal_lam(mu, x.text, ty, parse_term(mode));
    }
    Token x = expect(Tok::word, "binder name");
    expect(Tok::colon, "`:`");
    TyExpr ty = parse_type(mode);
    expect(Tok::rbracket, "`]`");
    return TmExpr::lam(x.text, ty, parse_term(mode));
  }

  TmExpr parse_lob(const ModeExpr& mode) {
    Token kw = next();  // lob
    if (app_.tm_exts.find("lob") == app_.tm_exts.end())
      throw err("löb induction is not available in this mode theory", kw);
    expect(Tok::lbracket, "`[`");
    Token x = expect(Tok::word, "binder name");
    expect(Tok::colon, "`:`");
    TyExpr ty = parse_type(mode);
    expect(Tok::rbracket, "`]`");
    TmExpr body = parse_term(mode);
    return TmExpr::ext("lob", {TmExtArg(x.text), TmExtArg(ty), TmExtArg(body)}, mode);
  }

  TmExpr parse_let(const ModeExpr& mode) {
    next();  // let
    expect_word("mod");
    expect(Tok::langle, "`<`");
    ModalityExpr mu = parse_modality(mode);
    expect(Tok::rangle, "`>`");
    Token x = expect(Tok::word, "binder name");
    expect(Tok::leftarrow, "`<-`");
    TmExpr scrutinee = parse_term(mode);
    expect_word("in");
    TmExpr body = parse_term(mode);
    return TmExpr::mod_elim(mu, x.text, scrutinee, body);
  }

  TmExpr parse_mod(const ModeExpr& mode) {
    next();  // mod
    expect(Tok::langle, "`<`");
    ModalityExpr mu = parse_modality(mode);
    expect(Tok::rangle, "`>`");
    TmExpr body = parse_term(mu.dom());
    return TmExpr::mod_intro(mu, body);
  }

  TmExpr parse_atom(const ModeExpr& mode) {
    Token t = peek();
    switch (t.kind) {
      case Tok::number:
        next();
        return TmExpr::lit(t.value, mode);
      case Tok::lparen: {
        next();
        TmExpr inner = parse_term(mode);
        if (peek().kind == Tok::colon) {
          next();
          TyExpr ty = parse_type(mode);
          inner = TmExpr::ann(inner, ty);
        }
        expect(Tok::rparen, "`)`");
        return inner;
      }
      case Tok::word: break;
      default: throw err(std::string("expected a term, found ") + tok_name(t.kind), t);
    }
    next();
    const std::string& w = t.text;
    if (w == "true") return TmExpr::true_tm(mode);
    if (w == "false") return TmExpr::false_tm(mode);
    if (w == "suc") return TmExpr::suc(mode);
    if (w == "plus") return TmExpr::plus(mode);
    if (w == "if") {
      TmExpr c = parse_atom(mode);
      TmExpr tb = parse_atom(mode);
      TmExpr eb = parse_atom(mode);
      return TmExpr::if_tm(c, tb, eb);
    }
    if (w == "pair") {
      TmExpr a = parse_atom(mode);
      TmExpr b = parse_atom(mode);
      return TmExpr::pair(a, b);
    }
    if (w == "fst") return TmExpr::fst(parse_atom(mode));
    if (w == "snd") return TmExpr::snd(parse_atom(mode));
    if (w == "nat-elim") {
      TmExpr z = parse_atom(mode);
      TmExpr s = parse_atom(mode);
      return TmExpr::nat_elim(z, s);
    }
    if (w == "var") {
      Token x = expect(Tok::word, "variable name");
      Token cell = expect(Tok::word, "two-cell name");
      bool known = cell.text == "id-cell";
      for (const std::string& c : app_.surface.cell_names) known = known || c == cell.text;
      if (!known) throw err("unknown two-cell `" + cell.text + "`", cell);
      return TmExpr::var(x.text, TwoCellExpr{cell.text}, mode);
    }

    if (defs_ != nullptr) {
      const SourceDef* d = defs_->find(w);
      if (d != nullptr) {
        if (!(d->mode == mode))
          throw err("definition `" + w + "` lives at mode `" + d->mode.tag + "`, used at `" +
                        mode.tag + "`",
                    t);
        return d->term;
      }
    }
    auto builtin = app_.builtin_defs.find(w);
    if (builtin != app_.builtin_defs.end()) {
      if (!(builtin->second.mode() == mode))
        throw err("`" + w + "` lives at mode `" + builtin->second.mode().tag + "`, used at `" +
                      mode.tag + "`",
                  t);
      return builtin->second;
    }
    auto form = app_.surface.forms.find(w);
    if (form != app_.surface.forms.end()) return parse_form(t, form->second, mode);

    if (reserved_word(w)) throw err("`" + w + "` cannot be used here", t);
    return svar(w, mode);
  }

  TmExpr parse_form(const Token& name, const SurfaceForm& form, const ModeExpr& mode) {
    std::vector<SurfaceArg> args;
    std::optional<ModalityExpr> last_modality;
    std::size_t ty_index = 0;
    for (ExtArgKind kind : form.args) {
      switch (kind) {
        case ExtArgKind::modality: {
          // Stand-alone modality argument, codomain fixed by the use site.
          last_modality = parse_modality(mode);
          args.emplace_back(*last_modality);
          break;
        }
        case ExtArgKind::type:
          args.emplace_back(parse_type_atom(form.type_arg_modes[ty_index++]));
          break;
        case ExtArgKind::type_dom:
          if (!last_modality) throw err("form argument order bug", name);
          args.emplace_back(parse_type_atom(last_modality->dom()));
          break;
        case ExtArgKind::nat: {
          Token n = expect(Tok::number, "number");
          args.emplace_back(n.value);
          break;
        }
        case ExtArgKind::word: {
          Token wtok = expect(Tok::word, "word");
          args.emplace_back(wtok.text);
          break;
        }
      }
    }
    Tcm<TmExpr> built = form.build(args);
    if (built.is_error()) throw err(built.error_message(), name);
    if (!(built.value().mode() == mode))
      throw err("`" + name.text + "` produces a term at mode `" + built.value().mode().tag +
                    "`, used at `" + mode.tag + "`",
                name);
    return built.value();
  }
};

}  // namespace

Tcm<SourceProgram> parse(const AppConfig& app, const std::string& text) {
  try {
    Parser p(app, lex(text));
    return Tcm<SourceProgram>::ok(p.parse_program());
  } catch (const ParseError& e) {
    return Tcm<SourceProgram>::error("parse error at " + std::to_string(e.line) + ":" +
                                     std::to_string(e.col) + ": " + e.message);
  }
}

Tcm<TmExpr> parse_term(const AppConfig& app, const std::string& text, const ModeExpr& mode) {
  try {
    Parser p(app, lex(text));
    return Tcm<TmExpr>::ok(p.parse_single_term(mode));
  } catch (const ParseError& e) {
    return Tcm<TmExpr>::error("parse error at " + std::to_string(e.line) + ":" +
                              std::to_string(e.col) + ": " + e.message);
  }
}

// --- pretty printing -----------------------------------------------------------

namespace {

// Detects the modal-lambda sugar pattern produced by sugar_modal_lam.
bool is_modal_lam(const TmExpr& t) {
  if (t.kind() != TmExpr::Kind::lam) return false;
  if (!t.type_ann().is_modal()) return false;
  TmExpr body = t.child(0);
  if (body.kind() != TmExpr::Kind::mod_elim) return false;
  if (body.name() != t.name()) return false;
  if (!(body.modality() == t.type_ann().modality())) return false;
  if (body.elim_prefix().kind() != ModalityExpr::Kind::unit) return false;
  TmExpr scrutinee = body.child(0);
  return scrutinee.kind() == TmExpr::Kind::var && scrutinee.name() == t.name() &&
         scrutinee.cell().is_id();
}

class Printer {
 public:
  explicit Printer(const AppConfig& app) : app_(app) {}

  std::string term(const TmExpr& t) {
    // Library terms exposed to the surface print by their registered name.
    for (const auto& [name, def] : app_.builtin_defs)
      if (def == t) return name;
    switch (t.kind()) {
      case TmExpr::Kind::ann:
        return "(" + term(t.child(0)) + " : " + pretty(t.type_ann()) + ")";
      case TmExpr::Kind::var:
        return t.cell().is_id() ? t.name() : "var " + t.name() + " " + t.cell().tag;
      case TmExpr::Kind::lam: {
        if (is_modal_lam(t)) {
          const TyExpr& modal_ty = t.type_ann();
          return "lam[" + modal_ty.modality().show() + " | " + t.name() + " : " +
                 pretty(modal_ty.body()) + "] " + term(t.child(0).child(1));
        }
        return "lam[" + t.name() + " : " + pretty(t.type_ann()) + "] " + term(t.child(0));
      }
      case TmExpr::Kind::app: {
        TmExpr f = t.child(0), a = t.child(1);
        if (a.kind() == TmExpr::Kind::mod_intro)
          return atom(f) + " .<" + a.modality().show() + "> " + atom(a.child(0));
        return atom(f) + " . " + atom(a);
      }
      case TmExpr::Kind::lit: return std::to_string(t.literal());
      case TmExpr::Kind::suc: return "suc";
      case TmExpr::Kind::plus: return "plus";
      case TmExpr::Kind::nat_elim:
        return "nat-elim " + atom(t.child(0)) + " " + atom(t.child(1));
      case TmExpr::Kind::true_: return "true";
      case TmExpr::Kind::false_: return "false";
      case TmExpr::Kind::if_:
        return "if " + atom(t.child(0)) + " " + atom(t.child(1)) + " " + atom(t.child(2));
      case TmExpr::Kind::pair: return "pair " + atom(t.child(0)) + " " + atom(t.child(1));
      case TmExpr::Kind::fst: return "fst " + atom(t.child(0));
      case TmExpr::Kind::snd: return "snd " + atom(t.child(0));
      case TmExpr::Kind::mod_intro:
        return "mod<" + t.modality().show() + "> " + term(t.child(0));
      case TmExpr::Kind::mod_elim:
        if (t.elim_prefix().kind() != ModalityExpr::Kind::unit) return t.show();
        return "let mod<" + t.modality().show() + "> " + t.name() + " <- " + term(t.child(0)) +
               " in " + term(t.child(1));
      case TmExpr::Kind::ext: return ext(t);
      default: return t.show();
    }
  }

  std::string atom(const TmExpr& t) {
    // Forms that re-parse as a single application operand stay bare.
    switch (t.kind()) {
      case TmExpr::Kind::var:
      case TmExpr::Kind::lit:
      case TmExpr::Kind::suc:
      case TmExpr::Kind::plus:
      case TmExpr::Kind::true_:
      case TmExpr::Kind::false_:
      case TmExpr::Kind::ann:
        return term(t);
      case TmExpr::Kind::ext: {
        if (t.ext_code() == "lob") break;
        for (const auto& [name, def] : app_.builtin_defs)
          if (def == t) return name;
        bool simple = true;
        for (const TmExtArg& a : t.ext_args())
          simple = simple && !std::holds_alternative<TmExpr>(a);
        if (simple) return term(t);
        break;
      }
      default: break;
    }
    return "(" + term(t) + ")";
  }

 private:
  std::string ext(const TmExpr& t) {
    if (t.ext_code() == "lob") {
      const auto& args = t.ext_args();
      return "lob[" + std::get<std::string>(args[0]) + " : " +
             pretty(std::get<TyExpr>(args[1])) + "] " + term(std::get<TmExpr>(args[2]));
    }
    std::string s = t.ext_code();
    for (const TmExtArg& a : t.ext_args()) {
      if (std::holds_alternative<TyExpr>(a)) {
        TyExpr ty = std::get<TyExpr>(a);
        std::string rendered = pretty(ty);
        bool atomic = ty.kind() == TyExpr::Kind::nat || ty.kind() == TyExpr::Kind::boolean ||
                      ty.kind() == TyExpr::Kind::modal ||
                      (ty.kind() == TyExpr::Kind::ext && ty.ext_args().empty());
        s += " " + (atomic ? rendered : "(" + rendered + ")");
      } else if (std::holds_alternative<std::uint64_t>(a)) {
        s += " " + std::to_string(std::get<std::uint64_t>(a));
      } else if (std::holds_alternative<std::string>(a)) {
        s += " " + std::get<std::string>(a);
      } else if (std::holds_alternative<TmExpr>(a)) {
        s += " " + atom(std::get<TmExpr>(a));
      } else {
        s += " <payload>";
      }
    }
    return s;
  }

  const AppConfig& app_;
};

TyExpr normalize_ty(const ModeTheory& mt, const TyExpr& t) {
  switch (t.kind()) {
    case TyExpr::Kind::nat:
    case TyExpr::Kind::boolean: return t;
    case TyExpr::Kind::arrow:
      return TyExpr::arrow(normalize_ty(mt, t.left()), normalize_ty(mt, t.right()));
    case TyExpr::Kind::prod:
      return TyExpr::prod(normalize_ty(mt, t.left()), normalize_ty(mt, t.right()));
    case TyExpr::Kind::modal: {
      std::vector<std::string> nf = normalize_modality(mt, t.modality());
      ModalityExpr mu = denormalize_modality(mt, nf, t.modality().dom());
      return TyExpr::modal(mu, normalize_ty(mt, t.body()));
    }
    case TyExpr::Kind::ext: {
      std::vector<TyExpr> args;
      for (const TyExpr& a : t.ext_args()) args.push_back(normalize_ty(mt, a));
      return TyExpr::ext(t.ext_code(), std::move(args), t.mode());
    }
  }
  return t;
}

}  // namespace

std::string pretty(const AppConfig& app, const TmExpr& term) { return Printer(app).term(term); }

std::string pretty(const TyExpr& type) { return type.show(); }

std::string pretty_normalized(const AppConfig& app, const TyExpr& type) {
  return normalize_ty(*app.mode_theory, type).show();
}

}  // namespace surface
}  // namespace mstt
