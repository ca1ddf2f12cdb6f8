#include "mstt/driver.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "mstt/guarded.hpp"
#include "mstt/parametricity.hpp"

namespace mstt {
namespace driver {

const AppConfig* app_by_name(const std::string& name) {
  if (name == "guarded" || name == "g") return &guarded::app();
  if (name == "param" || name == "p" || name == "parametricity") return &param::app();
  return nullptr;
}

namespace {

Tcm<surface::SourceProgram> load(const AppConfig& app, const std::string& path) {
  std::ifstream in(path);
  if (!in) return Tcm<surface::SourceProgram>::error("cannot open `" + path + "`");
  std::ostringstream text;
  text << in.rdbuf();
  return surface::parse(app, text.str());
}

Tcm<surface::SourceDef> pick_def(const surface::SourceProgram& prog,
                                 const std::optional<std::string>& name) {
  using R = Tcm<surface::SourceDef>;
  if (prog.defs.empty()) return R::error("file has no definitions");
  if (!name) return R::ok(prog.defs.back());
  const surface::SourceDef* d = prog.find(*name);
  if (!d) return R::error("no definition named `" + *name + "`");
  return R::ok(*d);
}

}  // namespace

int cmd_check(const AppConfig& app, const std::string& path, std::ostream& out,
              std::ostream& err) {
  Tcm<surface::SourceProgram> prog = load(app, path);
  if (prog.is_error()) {
    err << prog.error_message() << "\n";
    return 1;
  }
  Elaborator elab = app.elaborator();
  for (const surface::SourceDef& def : prog.value().defs) {
    Tcm<InferInterpretResult> r = elab.infer_interpret(def.term, CtxExpr::empty(def.mode));
    if (r.is_error()) {
      err << def.name << ": " << r.error_message() << "\n";
      return 1;
    }
    out << def.name << " : " << surface::pretty(r.value().type) << "\n";
  }
  return 0;
}

int cmd_eval(const AppConfig& app, const std::string& path, const std::optional<std::string>& name,
             std::optional<std::uint64_t> stage, std::ostream& out, std::ostream& err) {
  Tcm<surface::SourceProgram> prog = load(app, path);
  if (prog.is_error()) {
    err << prog.error_message() << "\n";
    return 1;
  }
  Tcm<surface::SourceDef> def = pick_def(prog.value(), name);
  if (def.is_error()) {
    err << def.error_message() << "\n";
    return 1;
  }
  Elaborator elab = app.elaborator();
  Tcm<InferInterpretResult> r = elab.infer_interpret(def.value().term,
                                                     CtxExpr::empty(def.value().mode));
  if (r.is_error()) {
    err << def.value().name << ": " << r.error_message() << "\n";
    return 1;
  }
  BaseCategoryPtr cat = elab.interpret_mode(def.value().mode);
  Obj at = Obj::star();
  if (cat->name() == "omega") {
    if (!stage) {
      err << "definition `" << def.value().name << "` is time-dependent; pass --stage\n";
      return 1;
    }
    at = Obj::stage(*stage);
  } else if (cat->name() == "wedge") {
    err << "definition `" << def.value().name
        << "` lives at the relational mode; eval supports the trivial and time modes\n";
    return 1;
  }
  out << r.value().denotation.at(at, Env{}).show() << "\n";
  return 0;
}

int cmd_extract(const AppConfig& app, const std::string& path,
                const std::optional<std::string>& name, std::uint64_t take, std::ostream& out,
                std::ostream& err) {
  Tcm<surface::SourceProgram> prog = load(app, path);
  if (prog.is_error()) {
    err << prog.error_message() << "\n";
    return 1;
  }
  Tcm<surface::SourceDef> def = pick_def(prog.value(), name);
  if (def.is_error()) {
    err << def.error_message() << "\n";
    return 1;
  }
  Elaborator elab = app.elaborator();
  Tcm<InferInterpretResult> r = elab.infer_interpret(def.value().term,
                                                     CtxExpr::empty(def.value().mode));
  if (r.is_error()) {
    err << def.value().name << ": " << r.error_message() << "\n";
    return 1;
  }
  Tcm<Extractable> ex = extractable_for(elab, app.extract_hooks, r.value().type);
  if (ex.is_error()) {
    err << def.value().name << ": " << ex.error_message() << "\n";
    return 1;
  }
  HostValue v = ex.value().extract(r.value().denotation);
  if (v.is_stream()) {
    bool sep = false;
    for (const HostValue& e : v.as_stream().take(take)) {
      if (sep) out << " ";
      out << e.show();
      sep = true;
    }
    out << "\n";
    return 0;
  }
  out << v.show() << "\n";
  return 0;
}

}  // namespace driver
}  // namespace mstt
