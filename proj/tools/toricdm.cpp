// Command-line front end: toricdm <analyze|sectors|lc|grd> PROBLEM [options]
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "toricdm/report.hpp"

using namespace toricdm;

int main(int argc, char** argv) {
  CLI::App app{"Local cohomology of toric rings as graded D-modules"};
  app.require_subcommand(1, 1);

  std::string problem_path, output, format = "human";
  std::vector<std::string> ideal_args, socle_args;
  bool maximal = false, timing = false;
  std::int64_t bound = 0, box = -1, samples = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("problem", problem_path, "problem file")->required();
    sub->add_option("--output", output, "write the report to this path");
    sub->add_option("--format", format, "human or machine")->check(CLI::IsMember({"human", "machine"}));
    sub->add_option("--bound", bound, "membership search bound")->check(CLI::PositiveNumber);
    sub->add_option("--box", box, "initial box radius of the class scan (0 = automatic)")->check(CLI::NonNegativeNumber);
    sub->add_option("--samples", samples, "samples per class")->check(CLI::PositiveNumber);
    sub->add_flag("--timing", timing, "include wall time in the report");
  };
  auto* analyze = app.add_subcommand("analyze", "facets, faces and semigroup flags");
  auto* sectors = app.add_subcommand("sectors", "equivalence classes, sectors and their order");
  auto* lc = app.add_subcommand("lc", "local cohomology modules and composition series");
  auto* grd = app.add_subcommand("grd", "gr D_A exponents and fiber certificates");
  for (auto* s : {analyze, sectors, lc, grd}) add_common(s);
  lc->add_option("--ideal", ideal_args, "ideal generator degree, comma separated (repeatable)");
  lc->add_flag("--maximal", maximal, "use the maximal graded ideal");
  lc->add_option("--socle", socle_args, "socle probe radii, comma separated")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 4;
  }

  RunOptions opt;
  opt.command = app.get_subcommands().front()->get_name();
  opt.source = std::filesystem::path(problem_path).filename().string();
  opt.timing = timing;
  if (bound > 0) opt.search_bound = bound;
  if (box >= 0) opt.box_radius = box;
  if (samples > 0) opt.samples_per_class = samples;

  auto emit = [&](const Json& report) {
    const std::string text = format == "machine" ? render_machine(report) : render_human(report);
    if (output.empty()) {
      std::cout << text;
      return true;
    }
    std::ofstream f(output, std::ios::binary);
    f << text;
    if (!f) {
      std::cerr << "toricdm: cannot write " << output << "\n";
      return false;
    }
    return true;
  };

  try {
    if (maximal && !ideal_args.empty()) fail(ErrorCode::Parse, "--maximal and --ideal are exclusive");
    if (maximal) opt.ideal = IdealSpec{true, {}};
    if (!ideal_args.empty()) {
      IdealSpec I;
      for (const auto& s : ideal_args) I.generators.push_back(parse_int_list(s));
      opt.ideal = I;
    }
    for (const auto& s : socle_args) {
      const auto r = parse_int_list(s);
      opt.socle_radii.insert(opt.socle_radii.end(), r.begin(), r.end());
    }
    const ProblemFile pf = load_problem(problem_path);
    if (opt.ideal)
      for (const auto& g : opt.ideal->generators)
        if (g.size() != pf.matrix.rows()) fail(ErrorCode::Parse, "--ideal degree " + format_degree(g) + " has wrong length");
    const RunResult res = run_command(pf, opt);
    if (!emit(res.report)) return 1;
    return res.exit_code;
  } catch (const Error& e) {
    std::cerr << "toricdm: " << e.what() << "\n";
    emit(error_report(opt, e));
    return exit_code_for(e.code());
  }
}
