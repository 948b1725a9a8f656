// jcverify: run verification suites, print a summary, optionally write a JSON report.
#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "jc/errors.hpp"
#include "jc/suites.hpp"

namespace {

enum Exit { ok = 0, check_failed = 1, config_error = 2, resource_limit = 3 };

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : " ") + x;
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  jc::SuiteConfig cfg;
  std::string report;
  std::vector<std::string> suites = jc::suite_names();
  suites.push_back("all");

  CLI::App app{"Verify Jordan-algebra covariant operator identities"};
  app.add_option("--suite", cfg.suite, "suite to run")
      ->envname("JCVERIFY_SUITE")
      ->check(CLI::IsMember(suites));
  app.add_option("--algebra", cfg.algebras, "algebra spec, e.g. sym:3, mat:2, herm:2, rpq:2,1 (repeatable)")
      ->envname("JCVERIFY_ALGEBRA")
      ->delimiter(';');
  app.add_option("--max-degree", cfg.max_degree, "maximum degree of random polynomials")
      ->envname("JCVERIFY_MAX_DEGREE");
  app.add_option("--seed", cfg.seed, "RNG seed")->envname("JCVERIFY_SEED");
  app.add_option("--tolerance", cfg.tolerance, "relative tolerance for numeric checks")->envname("JCVERIFY_TOLERANCE");
  app.add_option("--report", report, "write the JSON report here")->envname("JCVERIFY_REPORT");
  app.add_option("--jobs", cfg.jobs, "worker threads")->envname("JCVERIFY_JOBS");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? ok : config_error;
  }

  jc::SuiteReport rep;
  try {
    rep = jc::run_suite(cfg);
  } catch (const jc::ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return resource_limit;
  } catch (const std::exception& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return config_error;
  }

  for (const auto& c : rep.checks) {
    if (c.status == jc::CheckStatus::pass) continue;
    std::printf("%-5s %s  residual %.3g  %s\n", jc::status_name(c.status).c_str(), c.id.c_str(), c.residual,
                c.detail.c_str());
  }
  std::printf("suite %s [%s] seed %llu: %d pass, %d fail, %d noted\n", rep.suite.c_str(),
              cfg.algebras.empty() ? "defaults" : join(cfg.algebras).c_str(), (unsigned long long)cfg.seed,
              rep.count(jc::CheckStatus::pass), rep.count(jc::CheckStatus::fail), rep.count(jc::CheckStatus::noted));

  if (!report.empty()) {
    std::ofstream out(report);
    if (!out) {
      std::cerr << "cannot write " << report << "\n";
      return config_error;
    }
    out << jc::report_json(rep) << "\n";
  }
  return rep.passed() ? ok : check_failed;
}
