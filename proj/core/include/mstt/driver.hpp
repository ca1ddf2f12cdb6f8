// Command implementations behind the CLI: check, eval, extract. The binary
// in tools/ is a thin argument-parsing wrapper over these.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "mstt/surface.hpp"

namespace mstt {
namespace driver {

/// Looks up a mode-theory instantiation by name ("guarded"/"g",
/// "param"/"p"); null when unknown.
const AppConfig* app_by_name(const std::string& name);

/// Type-checks every definition of the file, printing `<name> : <type>`
/// per def. Returns the process exit code.
int cmd_check(const AppConfig& app, const std::string& path, std::ostream& out, std::ostream& err);

/// Evaluates a definition's denotation at one cell and prints the value.
/// Time-dependent definitions need a stage.
int cmd_eval(const AppConfig& app, const std::string& path, const std::optional<std::string>& name,
             std::optional<std::uint64_t> stage, std::ostream& out, std::ostream& err);

/// Extracts a trivial-mode definition to a host value. Streams print their
/// first `take` elements.
int cmd_extract(const AppConfig& app, const std::string& path,
                const std::optional<std::string>& name, std::uint64_t take, std::ostream& out,
                std::ostream& err);

}  // namespace driver
}  // namespace mstt
