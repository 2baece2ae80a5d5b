#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "modbetti/cli/app.hpp"

namespace {

using modbetti::cli::Command;
using modbetti::cli::Job;

struct Options {
  Job job;
  std::string format = "plain";
  std::string out;
  bool no_cache = false;
};

CLI::App* add_command(CLI::App& app, const std::string& name, const std::string& help, Command command, Options& opt,
                      Command& selected) {
  auto* sub = app.add_subcommand(name, help);
  sub->add_option("-n,--rank", opt.job.rank, "rank n >= 1")->required();
  sub->add_option("-d,--degree", opt.job.degree, "degree d")->required();
  const bool counting = command == Command::count || command == Command::s_count;
  if (counting) {
    sub->add_option("--zeta", opt.job.zeta_path, "zeta JSON file of the curve")->required();
    sub->add_option("-T,--ext", opt.job.ext, "largest extension degree j (count)");
    sub->add_option("-g,--genus", opt.job.genus, "genus; must match the zeta file if given");
  } else {
    sub->add_option("-g,--genus", opt.job.genus, "genus g >= 0")->required();
  }
  if (command == Command::count) sub->add_option("-K,--order", opt.job.order, "series order K along the slope ray");
  if (command == Command::s_count)
    sub->add_option("-r,--endomorphism-degree", opt.job.endomorphism_degree, "degree r of the endomorphism field");
  sub->add_option("--format", opt.format, "plain, json, latex or csv")
      ->check(CLI::IsMember({"plain", "json", "latex", "csv"}));
  sub->add_option("--out", opt.out, "write output to this file");
  sub->add_flag("--no-cache", opt.no_cache, "bypass MODBETTI_CACHE_DIR");
  sub->add_flag("--reduce-degree", opt.job.reduce_degree, "replace d by d mod n");
  sub->add_option("--threads", opt.job.threads, "worker threads for composition sums");
  sub->callback([&selected, command] { selected = command; });
  return sub;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Virtual Poincare/Hodge polynomials of moduli of stable bundles on curves, and exact counts over finite fields"};
  app.require_subcommand(1);
  app.set_version_flag("--version", modbetti::kVersion);
  Options opt;
  Command selected = Command::poincare;
  add_command(app, "poincare", "virtual Poincare polynomial of stable bundles", Command::poincare, opt, selected);
  add_command(app, "hodge", "virtual Hodge polynomial of stable bundles (conjectural)", Command::hodge, opt, selected);
  add_command(app, "semistable", "Poincare series of semistable bundles", Command::semistable, opt, selected);
  add_command(app, "zagier-r", "slope-ray coefficient r_alpha(v)", Command::zagier_r, opt, selected);
  add_command(app, "count", "absolutely stable counts over F_{q^j}", Command::count, opt, selected);
  add_command(app, "s-count", "stable counts with a given endomorphism field", Command::s_count, opt, selected);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : modbetti::cli::kInvalidArgument;
  }

  opt.job.command = selected;
  opt.job.format = modbetti::cli::parse_format(opt.format);
  if (opt.job.command == Command::count || opt.job.command == Command::s_count) {
    // The genus comes from the zeta file; an explicit --genus must agree.
    if (opt.job.genus) {
      try {
        const auto z = modbetti::read_zeta_file(opt.job.zeta_path);
        if (z.genus() != *opt.job.genus) {
          std::cerr << "error: --genus " << *opt.job.genus << " does not match the zeta file genus " << z.genus() << "\n";
          return modbetti::cli::kInvalidArgument;
        }
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return modbetti::cli::kInvalidArgument;
      }
      opt.job.genus.reset();
    }
  }
  return modbetti::cli::run(opt.job, {std::cout, std::cerr}, !opt.no_cache, opt.out);
}
