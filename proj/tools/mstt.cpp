// mstt: check, evaluate and extract multimode programs.
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "mstt/driver.hpp"

int main(int argc, char** argv) {
  CLI::App cli{"multimode simple type theory"};
  cli.require_subcommand(1);

  std::string file;
  std::string theory = "guarded";
  std::optional<std::string> name;
  std::optional<std::uint64_t> stage;
  std::uint64_t take = 10;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "program file")->required();
    cmd->add_option("-m,--mode-theory", theory, "mode theory: guarded|g or param|p");
  };

  CLI::App* check = cli.add_subcommand("check", "type-check every definition");
  add_common(check);

  CLI::App* eval = cli.add_subcommand("eval", "print a definition's cell value");
  add_common(eval);
  eval->add_option("-n,--name", name, "definition to evaluate (default: last)");
  eval->add_option("-s,--stage", stage, "stage for time-dependent definitions");

  CLI::App* extract = cli.add_subcommand("extract", "extract a definition to a host value");
  add_common(extract);
  extract->add_option("-n,--name", name, "definition to extract (default: last)");
  extract->add_option("-k,--take", take, "stream elements to print (default 10)");

  CLI11_PARSE(cli, argc, argv);

  const mstt::AppConfig* app = mstt::driver::app_by_name(theory);
  if (!app) {
    std::cerr << "unknown mode theory `" << theory << "` (use guarded|g or param|p)\n";
    return 1;
  }

  if (check->parsed()) return mstt::driver::cmd_check(*app, file, std::cout, std::cerr);
  if (eval->parsed()) return mstt::driver::cmd_eval(*app, file, name, stage, std::cout, std::cerr);
  return mstt::driver::cmd_extract(*app, file, name, take, std::cout, std::cerr);
}
