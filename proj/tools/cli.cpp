#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "miquel/fuzz.hpp"
#include "miquel/instance.hpp"
#include "miquel/prover.hpp"
#include "miquel/svg.hpp"

namespace miquel::cli {

namespace {

int exit_code(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::InvalidInput: return kInvalidInput;
    case ErrorCategory::Degeneracy: return kDegeneracy;
    case ErrorCategory::Budget: return kBudget;
    case ErrorCategory::CheckFailure:
    case ErrorCategory::Internal: return kCheckFailure;
  }
  return kCheckFailure;
}

int report(const miquel::Error& e, std::ostream& err) {
  switch (category(e.kind())) {
    case ErrorCategory::InvalidInput: err << "invalid input: "; break;
    case ErrorCategory::Degeneracy: err << "degenerate configuration: "; break;
    default: err << "error: "; break;
  }
  err << e.what() << "\n";
  return exit_code(category(e.kind()));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw miquel::Error(ErrorKind::ParseError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw miquel::Error(ErrorKind::ParseError, "cannot write " + path);
}

int cmd_construct(const std::string& file, std::ostream& out, std::ostream& err) {
  const PartialFigure partial = build_figure_partial(parse_instance(read_file(file)));
  const MiquelFigure& fig = partial.figure;
  out << figure_json(fig, partial.degeneracy ? partial.degeneracy->what() : "");
  if (partial.degeneracy) return report(*partial.degeneracy, err);
  if (!fig.all_checks_passed()) {
    for (const auto& c : fig.checks) {
      if (!c.passed) err << "check failed: " << c.name << " " << c.witness << "\n";
    }
    return kCheckFailure;
  }
  for (const auto& a : fig.audits) {
    if (!a.passed) err << "audit: " << a.name << " does not hold (" << a.witness << ")\n";
  }
  if (fig.r_tangent) err << "note: circles AQL, BQM, CQN touch at Q (R = Q)\n";
  return kOk;
}

int cmd_verify(const FuzzOptions& opts, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  const FuzzSummary s = run_fuzz(opts);
  out << s.text();
  err << "elapsed " << std::fixed << std::setprecision(2)
      << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << " s\n";
  return s.failed == 0 && s.float_failures == 0 ? kOk : kCheckFailure;
}

int cmd_prove(std::size_t budget, bool audit_nonfatal, const std::string& report_path, std::ostream& out,
              std::ostream& err) {
  const auto outcomes = prove_all({budget, Mutation::None});
  out << proof_report_text(outcomes);
  if (!report_path.empty()) write_file(report_path, proof_report_json(outcomes));
  bool refuted = false;
  bool over_budget = false;
  for (const auto& o : outcomes) {
    if (o.kind == ProofKind::Info) continue;
    const bool gating = o.kind == ProofKind::Core || !audit_nonfatal;
    if (o.status == ProofStatus::BudgetExceeded && gating) over_budget = true;
    if (o.status == ProofStatus::Refuted) {
      if (gating) {
        refuted = true;
      } else {
        err << "warning: audit " << o.name << " refuted (" << o.failed_claim << ")\n";
      }
    }
  }
  if (refuted) return kCheckFailure;
  if (over_budget) return kBudget;
  return kOk;
}

int cmd_render(const std::string& file, int figure, const std::string& path) {
  const MiquelFigure fig = build_figure(parse_instance(read_file(file)));
  write_file(path, render_svg(fig, figure));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact areal-coordinate constructions around the Miquel point of Cevian feet"};
  app.require_subcommand(1);

  std::string construct_file;
  auto* construct = app.add_subcommand("construct", "build every object of an instance and print it as JSON");
  construct->add_option("file", construct_file, "instance document")->required();

  FuzzOptions fuzz;
  fuzz.seed = 42;
  auto* verify = app.add_subcommand("verify", "exact checks on seeded random instances");
  verify->add_option("--trials", fuzz.trials, "number of instances")->check(CLI::PositiveNumber);
  verify->add_option("--seed", fuzz.seed, "random seed");
  verify->add_option("--max-coeff", fuzz.max_coeff, "numerator and denominator bound K")->check(CLI::PositiveNumber);
  verify->add_flag("--non-cevian", fuzz.non_cevian, "use side points that are not Cevian feet");
  verify->add_option("--float-checks", fuzz.float_checks,
                     "re-verify this many instances in floating Cartesian coordinates");

  std::size_t budget = kDefaultBudget;
  bool audit_nonfatal = false;
  std::string report_path;
  auto* prove = app.add_subcommand("prove", "prove the polynomial identities symbolically");
  prove->add_option("--budget", budget, "maximum terms per intermediate polynomial")->check(CLI::PositiveNumber);
  prove->add_flag("--audit-nonfatal", audit_nonfatal, "report refuted audits as warnings");
  prove->add_option("--report", report_path, "write the JSON report here");

  std::string render_file, render_out;
  int figure = 1;
  auto* render = app.add_subcommand("render", "draw figure 1 or 2 as SVG");
  render->add_option("file", render_file, "instance document")->required();
  render->add_option("--figure", figure, "1 or 2")->check(CLI::IsMember({1, 2}));
  render->add_option("-o,--output", render_out, "output path")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (*construct) return cmd_construct(construct_file, out, err);
    if (*verify) return cmd_verify(fuzz, out, err);
    if (*prove) return cmd_prove(budget, audit_nonfatal, report_path, out, err);
    if (*render) return cmd_render(render_file, figure, render_out);
  } catch (const miquel::Error& e) {
    return report(e, err);
  }
  return kInvalidInput;
}

}  // namespace miquel::cli
