#include "f2c/cli.hpp"

#include <algorithm>

#include "CLI11.hpp"
#include "f2c/io.hpp"

namespace f2c {

std::string CommandResult::rendered() const {
  if (exit_code != 0) return "";
  if (!message.empty() && payload.is_null()) return message;
  if (want_markdown && markdown) return *markdown;
  return payload.dump(2, ' ', false) + "\n";
}

namespace {

struct Options {
  int max_order = 200;
  int max_degree = 5;
  double time_limit = 600.0;
  bool md = false;
  bool json_out = false;
  std::uint64_t dense_cells = 0;  // 0 keeps the default
  bool generators = false;
  std::string file, file2, other, spec, group;
  int degree = -1;
};

Budget make_budget(const Options& o) {
  Budget b;
  b.max_subgroup_order = std::max(b.max_subgroup_order, o.max_order);
  b.time_limit_seconds = o.time_limit;
  if (o.dense_cells) b.max_dense_cells = o.dense_cells;
  b.start_clock();
  return b;
}

Presentation load_presentation(const std::string& path, const Options& o) {
  return presentation_from_json(read_json_file(path), o.max_order);
}

void finish(CommandResult& r, json payload) {
  r.markdown = render_markdown(r.command, payload);
  r.payload = std::move(payload);
}

void dispatch(CommandResult& r, const Options& o) {
  const Budget budget = make_budget(o);
  const std::string& c = r.command;
  if (c == "validate") {
    const auto p = load_presentation(o.file, o);
    finish(r, validate_report(p, validate(p)));
  } else if (c == "components") {
    const auto p = load_presentation(o.file, o);
    if (!o.other.empty()) {
      const auto side = side_from_json(read_json_file(o.other), p.g);
      finish(r, components_report(p, components(p, side, budget), &side));
    } else {
      finish(r, components_report(p, components(p, std::nullopt, budget)));
    }
  } else if (c == "fusion") {
    const auto p = load_presentation(o.file, o);
    finish(r, fusion_report(p, fusion_table(p)));
  } else if (c == "grading") {
    const auto p = load_presentation(o.file, o);
    finish(r, grading_report(p, universal_grading(p)));
  } else if (c == "fiber") {
    const auto p = load_presentation(o.file, o);
    finish(r, fiber_report(p, fiber_functors(p, budget)));
  } else if (c == "equiv") {
    const auto a = load_presentation(o.file, o);
    const auto b = load_presentation(o.file2, o);
    auto w = equivalent(a, b, budget);
    if (w && !check_witness(a, b, *w, budget)) fail_invariant("equiv: witness failed re-verification");
    finish(r, equivalence_report(a, b, w));
  } else if (c == "cohom") {
    if (o.degree < 0) fail_input("cohom: --degree must be non-negative");
    if (o.degree > o.max_degree)
      fail_budget("cohom: degree " + std::to_string(o.degree) + " exceeds --max-degree " +
                  std::to_string(o.max_degree));
    const json spec = read_json_file(o.group);
    GroupRef g = build_group(spec);
    if (g->order() > o.max_order)
      fail_budget("cohom: group order " + std::to_string(g->order()) + " exceeds --max-order " +
                  std::to_string(o.max_order));
    finish(r, cohomology_report(g, o.degree, cohomology(g, o.degree, budget), o.generators));
  } else if (c == "ty build") {
    const auto in = ty_from_json(read_json_file(o.file), o.max_order);
    const auto p = build_2ty(in.a, in.pi, budget);
    finish(r, ty_build_report(p, ty_defect(p, budget), components(p, std::nullopt, budget), fusion_table(p)));
  } else if (c == "ty classify") {
    const auto a = abelian_from_json(read_json_file(o.spec), o.max_order);
    finish(r, ty_classify_report(a, classify_2ty(a, budget)));
  } else if (c == "twogroup pi") {
    const auto t = two_group_from_json(read_json_file(o.file), o.max_order);
    finish(r, two_group_pi_report(t, two_group_pi(t)));
  } else if (c == "twogroup tworep") {
    const auto t = two_group_from_json(read_json_file(o.file), o.max_order);
    finish(r, two_rep_report(t, two_rep_decomposition(t, budget)));
  } else {
    fail_input("unknown command");
  }
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  CommandResult r;
  Options o;
  CLI::App app{"Group-theoretical fusion 2-category engine", "f2c"};
  app.require_subcommand(1);
  app.fallthrough();
  app.option_defaults()->always_capture_default();
  app.add_option("--max-order", o.max_order, "Largest group order accepted")->check(CLI::PositiveNumber);
  app.add_option("--max-degree", o.max_degree, "Largest cohomology degree accepted")->check(CLI::NonNegativeNumber);
  app.add_option("--time-limit", o.time_limit, "Wall-clock limit in seconds, 0 for none")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--md", o.md, "Print the markdown rendering");
  app.add_flag("--json", o.json_out, "Print the JSON payload (default)");

  auto presentation_cmd = [&](const std::string& name, const std::string& help) {
    auto* s = app.add_subcommand(name, help);
    s->add_option("file", o.file, "Presentation JSON")->required();
    return s;
  };
  auto* validate_cmd = presentation_cmd("validate", "Check that pi is closed and d psi = pi on H");
  auto* components_cmd = presentation_cmd("components", "Connected components and simple objects");
  components_cmd->add_option("--other", o.other, "Second algebra {subgroup, omega} for bimodules");
  auto* fusion_cmd = presentation_cmd("fusion", "Fusion rules of the distinguished objects");
  auto* grading_cmd = presentation_cmd("grading", "Universal grading");
  auto* fiber_cmd = presentation_cmd("fiber", "Fiber 2-functors");
  auto* equiv_cmd = app.add_subcommand("equiv", "Search for an equivalence of two presentations");
  equiv_cmd->add_option("first", o.file, "Presentation JSON")->required();
  equiv_cmd->add_option("second", o.file2, "Presentation JSON")->required();
  auto* cohom_cmd = app.add_subcommand("cohom", "Group cohomology with Q/Z coefficients");
  cohom_cmd->add_option("--group", o.group, "GroupSpec JSON")->required();
  cohom_cmd->add_option("--degree", o.degree, "Cohomological degree")->required();
  cohom_cmd->add_option("--budget", o.dense_cells, "Dense elimination budget in matrix cells");
  cohom_cmd->add_flag("--generators", o.generators, "Include cocycle generators");

  auto* ty_cmd = app.add_subcommand("ty", "Tambara-Yamagami constructions");
  ty_cmd->require_subcommand(1);
  auto* ty_build = ty_cmd->add_subcommand("build", "Build 2TY(A, pi) and report its structure");
  ty_build->add_option("file", o.file, "TY input JSON")->required();
  auto* ty_classify = ty_cmd->add_subcommand("classify", "Classify 2TY(A, pi) up to equivalence");
  ty_classify->add_option("--spec", o.spec, "Abelian GroupSpec JSON")->required();
  ty_classify->add_option("--budget", o.dense_cells, "Dense elimination budget in matrix cells");

  auto* tg_cmd = app.add_subcommand("twogroup", "Finite 2-group gauging");
  tg_cmd->require_subcommand(1);
  auto* tg_pi = tg_cmd->add_subcommand("pi", "The gauged 4-cocycle on H ⋉ Â");
  tg_pi->add_option("file", o.file, "TwoGroupData JSON")->required();
  auto* tg_rep = tg_cmd->add_subcommand("tworep", "Simple 2-representations");
  tg_rep->add_option("file", o.file, "TwoGroupData JSON")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    r.message = app.help();
    return r;
  } catch (const CLI::CallForAllHelp&) {
    r.message = app.help("", CLI::AppFormatMode::All);
    return r;
  } catch (const CLI::ParseError& e) {
    r.exit_code = 1;
    r.message = e.what();
    return r;
  }
  if (o.md && o.json_out) {
    r.exit_code = 1;
    r.message = "--md and --json are mutually exclusive";
    return r;
  }
  r.want_markdown = o.md;

  const std::vector<std::pair<CLI::App*, std::string>> names = {
      {validate_cmd, "validate"}, {components_cmd, "components"}, {fusion_cmd, "fusion"},
      {grading_cmd, "grading"},   {fiber_cmd, "fiber"},           {equiv_cmd, "equiv"},
      {cohom_cmd, "cohom"},       {ty_build, "ty build"},         {ty_classify, "ty classify"},
      {tg_pi, "twogroup pi"},     {tg_rep, "twogroup tworep"}};
  for (const auto& [sub, name] : names)
    if (sub->parsed()) r.command = name;

  try {
    dispatch(r, o);
  } catch (const InvalidInput& e) {
    r.exit_code = 1;
    r.message = e.what();
  } catch (const BudgetExceeded& e) {
    r.exit_code = 2;
    r.message = e.what();
  } catch (const InvariantViolation& e) {
    r.exit_code = 3;
    r.message = e.what();
  }
  if (r.exit_code != 0) {
    r.payload = nullptr;
    r.markdown.reset();
  }
  return r;
}

}  // namespace f2c
