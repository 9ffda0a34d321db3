#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "npbrace/report.hpp"

using namespace npbrace;

namespace {

std::vector<std::uint64_t> parse_p_set(const std::string& s) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const auto v = std::stoull(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad prime '" + item + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Left braces of size np and Hopf Galois structures"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "md";
  std::string p_set = "7,11,13,17";

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json, csv or md")->check(CLI::IsMember({"json", "csv", "md"}));
    sub->add_option("--bound", config.bound, "largest holomorph order to build");
    sub->add_option("--threads", config.threads, "worker threads")->check(CLI::PositiveNumber);
  };

  auto* info = app.add_subcommand("group-info", "invariants of a group");
  info->add_option("--group", config.group_spec, "e.g. C6xC2, A4, D12, Dic12")->required();
  common(info);

  auto* reg = app.add_subcommand("regular", "regular subgroups of Hol(E)");
  reg->add_option("--group", config.group_spec, "abelian group")->required();
  common(reg);

  auto* br = app.add_subcommand("braces", "brace census of size n, or np with --p");
  br->add_option("--n", config.n, "order of E")->required()->check(CLI::PositiveNumber);
  br->add_option("--p", config.p, "prime p");
  common(br);

  auto* hg = app.add_subcommand("hgs", "Hopf Galois structures of type Z_p x E");
  hg->add_option("--p", config.p, "prime p")->required();
  hg->add_option("--n", config.n, "order of E (default 12)");
  hg->add_option("--group", config.group_spec, "a single abelian E");
  common(hg);

  auto* vp = app.add_subcommand("verify-paper", "recompute the published tables");
  vp->add_option("--p-set", p_set, "comma separated primes");
  common(vp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  config.format = *parse_format(format);
  for (auto [sub, cmd] : {std::pair{info, Command::group_info}, std::pair{reg, Command::regular},
                          std::pair{br, Command::braces}, std::pair{hg, Command::hgs},
                          std::pair{vp, Command::verify_paper}})
    if (sub->parsed()) config.command = cmd;

  if (config.command == Command::verify_paper) {
    try {
      config.p_set = parse_p_set(p_set);
    } catch (const std::exception& e) {
      std::cerr << "error: --p-set: " << e.what() << '\n';
      return kExitUsage;
    }
  }

  const auto report = run(config);
  std::cout << render(report);
  if (report.exit_code != kExitOk) std::cerr << "error: " << report.error << '\n';
  return report.exit_code;
}
