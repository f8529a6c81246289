#include "shgtool/cli.hpp"

#include <CLI11.hpp>

#include "shgtool/commands.hpp"

namespace shgtool {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on finite semihypergroups", "shgtool"};
  app.require_subcommand(1);

  CommonOptions common;
  std::string format = "text";
  bool no_timing = false;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--no-timing", no_timing, "Omit the timing field from the report");
  };

  std::string structure, action;

  auto* check = app.add_subcommand("check", "Check the semihypergroup axioms of a structure file");
  check->add_option("structure", structure, "Structure file")->required();
  add_common(check);

  LimOptions lim;
  std::string method = "direct";
  std::string base;
  auto* lim_cmd = app.add_subcommand("lim", "Search for a left-invariant mean");
  lim_cmd->add_option("structure", structure, "Structure file")->required();
  lim_cmd->add_option("--method", method, "direct, dual or both")
      ->check(CLI::IsMember({"direct", "dual", "both"}));
  lim_cmd->add_option("--base", base, "Base point of the dual action (default: first point)");
  add_common(lim_cmd);

  FixpointOptions fp;
  std::vector<std::string> iterate;
  auto* fix = app.add_subcommand("fixpoint", "Search for a common fixed point of an affine action");
  fix->add_option("structure", structure, "Structure file")->required();
  fix->add_option("action", action, "Action file")->required();
  auto* exact = fix->add_flag("--exact", "Exact search (default)");
  auto* iter = fix->add_option("--iterate", iterate, "Heuristic iteration: TOL MAXITER")
                   ->expected(2);
  exact->excludes(iter);
  add_common(fix);

  ConstructInputs in;
  std::string table, group, acting, act, subgroup, name, out_path;
  auto* construct = app.add_subcommand("construct", "Build a structure file");
  construct->add_option("kind", in.kind, "semigroup, triple, coset, doublecoset or orbit")
      ->required()
      ->check(CLI::IsMember({"semigroup", "triple", "coset", "doublecoset", "orbit"}));
  construct->add_option("parameters", in.parameters, "triple: x1 x2 x3 y1 y2 y3 z1 z2");
  construct->add_option("--table", table, "semigroup: Cayley table file");
  construct->add_option("--group", group, "Group file (coset, doublecoset, orbit)");
  construct->add_option("--subgroup", subgroup, "Comma-separated subgroup labels");
  construct->add_option("--acting", acting, "orbit: acting group file");
  construct->add_option("--act", act, "orbit: action table file");
  construct->add_option("--name", name, "Name of the constructed structure");
  construct->add_option("--out", out_path, "Output structure file")->required();
  add_common(construct);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return Exit::input_error;
  }

  common.format = format == "json" ? Format::json : Format::text;
  common.timing = !no_timing;

  if (check->parsed()) return cmd_check(structure, common, out, err);

  if (lim_cmd->parsed()) {
    lim.method = method == "dual" ? LimMethod::dual : method == "both" ? LimMethod::both : LimMethod::direct;
    if (!base.empty()) lim.base = base;
    return cmd_lim(structure, lim, common, out, err);
  }

  if (fix->parsed()) {
    if (!iterate.empty()) {
      fp.iterate = true;
      try {
        fp.tol = std::stod(iterate[0]);
        fp.max_iter = std::stoul(iterate[1]);
      } catch (const std::exception&) {
        err << "error: --iterate expects TOL MAXITER\n";
        return Exit::input_error;
      }
    }
    return cmd_fixpoint(structure, action, fp, common, out, err);
  }

  if (!table.empty()) in.table = table;
  if (!group.empty()) in.group = group;
  if (!acting.empty()) in.acting = acting;
  if (!act.empty()) in.act = act;
  if (!name.empty()) in.name = name;
  if (!subgroup.empty()) in.subgroup = split_labels(subgroup);
  in.out = out_path;
  return cmd_construct(in, common, out, err);
}

}  // namespace shgtool
