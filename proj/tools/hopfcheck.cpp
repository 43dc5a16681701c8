#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hopfcheck/checks.hpp"
#include "hopfcheck/serialize.hpp"

using namespace hopfcheck;

namespace {

constexpr int kOk = 0;
constexpr int kUnexpected = 1;
constexpr int kUsage = 2;

void print_human(const Report& r) {
  std::string tag = r.verdict == Verdict::Pass ? "PASS" : r.verdict == Verdict::Fail ? "FAIL" : "ERROR";
  std::printf("%-5s %-22s %9.1f ms  %s%s\n", tag.c_str(), r.id.c_str(), r.elapsed_ms,
              r.expected == Verdict::Fail ? "[fail-by-design] " : "", r.as_expected() ? "" : "UNEXPECTED");
  if (!r.as_expected() || r.verdict == Verdict::Error)
    std::printf("      anchor: %s\n      witness: %s\n", r.anchor.c_str(), r.witness.dump().c_str());
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for finite quantum groups and the Kac-Paljutkin category"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run registered checks");
  std::string check_id;
  bool all = false, as_json = false;
  std::string model_path, tau_text;
  auto* check_opt = verify->add_option("--check", check_id, "check id");
  auto* all_opt = verify->add_flag("--all", all, "run every registered check");
  check_opt->excludes(all_opt);
  verify->add_flag("--json", as_json, "emit JSON reports");
  verify->add_option("--model", model_path, "model file for model.axioms");
  verify->add_option("--tau", tau_text, "tau as p/q for pentagon checks");

  auto* list = app.add_subcommand("list", "list registered checks");
  std::string filter;
  list->add_option("filter", filter, "substring of the check id");

  auto* exp = app.add_subcommand("export", "write a built-in model as JSON");
  std::string model_id, out_path;
  exp->add_option("model", model_id, "kp | vtilde | vtilde-twist | smash")->required();
  exp->add_option("path", out_path, "output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*list) {
      for (const auto* d : list_checks(filter))
        std::printf("%-22s %-60s %s\n", d->id.c_str(), d->title.c_str(), d->anchor.c_str());
      return kOk;
    }

    if (*exp) {
      save_hopf(*exportable_model(model_id), out_path);
      std::printf("wrote %s to %s\n", model_id.c_str(), out_path.c_str());
      return kOk;
    }

    if (!all && check_id.empty()) {
      std::cerr << "verify: give --check <id> or --all\n";
      return kUsage;
    }
    CheckOptions opts;
    if (!model_path.empty())
      opts.model_path = model_path;
    if (!tau_text.empty())
      opts.tau = CycQ8(Rational::parse(tau_text));

    std::vector<Report> reports = all ? run_all(opts) : std::vector<Report>{run_check(check_id, opts)};
    bool ok = true;
    json out = json::array();
    for (const auto& r : reports) {
      ok = ok && r.as_expected();
      if (as_json)
        out.push_back(r.to_json());
      else
        print_human(r);
    }
    if (as_json)
      std::cout << (all ? out.dump(2) : out[0].dump(2)) << "\n";
    else if (all)
      std::printf("%zu checks, %s\n", reports.size(), ok ? "all as expected" : "UNEXPECTED VERDICTS");
    return ok ? kOk : kUnexpected;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }
}
