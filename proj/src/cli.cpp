#include "retract/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "retract/batch.hpp"
#include "retract/errors.hpp"
#include "retract/generator.hpp"
#include "retract/problem.hpp"
#include "retract/report_io.hpp"
#include "retract/selftest.hpp"

namespace retract {

namespace {

struct LoadResult {
  std::optional<ProblemFile> problem;
  int code = kExitOk;
};

LoadResult load(const std::string& path, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << path << ": cannot open file\n";
    return {std::nullopt, kExitParseError};
  }
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return {parse_problem(buf.str()), kExitOk};
  } catch (const ParseError& e) {
    err << path << ":" << e.what() << "\n";
  } catch (const std::exception& e) {
    err << path << ": " << e.what() << "\n";
  }
  return {std::nullopt, kExitParseError};
}

int do_check(const std::string& path, std::ostream& out, std::ostream& err) {
  LoadResult loaded = load(path, err);
  if (!loaded.problem) return loaded.code;
  const Endomorphism& phi = loaded.problem->map;
  const Ring& ring = *phi.ring();
  for (std::size_t i = 0; i < ring.d(); ++i) {
    if (!phi.image(i).is_unit()) {
      err << "invalid: Laurent variable " << ring.name(i) << " maps to the non-unit " << phi.image(i).to_string()
          << "\n";
      return kExitNotIdempotent;
    }
  }
  auto defects = phi.idempotency_defects();
  if (!defects.empty()) {
    err << "not idempotent:\n";
    for (const auto& def : defects) {
      const std::string& name = ring.name(def.index);
      err << "  phi^2(" << name << ") = " << def.twice.to_string() << " != " << def.once.to_string() << " = phi("
          << name << ")\n";
    }
    return kExitNotIdempotent;
  }
  out << "ok: valid idempotent endomorphism of " << ring_header(ring) << "\n";
  return kExitOk;
}

int do_analyze(const std::string& path, bool json, const std::string& out_path, std::ostream& out,
               std::ostream& err) {
  LoadResult loaded = load(path, err);
  if (!loaded.problem) return loaded.code;
  AnalysisOutcome outcome = analyze_captured(loaded.problem->map);
  switch (outcome.kind) {
    case OutcomeKind::Ok:
      break;
    case OutcomeKind::Invalid:
    case OutcomeKind::NotIdempotent:
      err << outcome.error << "\n";
      return kExitNotIdempotent;
    case OutcomeKind::CertificateFailure:
    case OutcomeKind::Other:
      err << "internal failure: " << outcome.error << "\n";
      return kExitCertificateFailure;
  }
  const RetractReport& rep = *outcome.report;
  std::string text = render_report(rep, json ? ReportFormat::Json : ReportFormat::Text);
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      err << out_path << ": cannot write\n";
      return kExitCertificateFailure;
    }
    file << text;
  }
  if (!rep.certified()) {
    for (const auto& c : rep.certificates) {
      if (!c.passed) err << "certificate failed: " << c.name << "\n";
    }
    return kExitCertificateFailure;
  }
  return kExitOk;
}

int do_gen(GeneratorSpec spec, std::size_t count, const std::string& domain_name, const std::string& out_dir,
           int threads, std::ostream& out, std::ostream& err) {
  try {
    spec.domain = parse_ring("ring " + domain_name + "[]")->domain();
  } catch (const std::exception& e) {
    err << "bad --domain: " << e.what() << "\n";
    return kExitParseError;
  }
  if (spec.r > spec.d || spec.d > spec.n) {
    err << "gen needs r <= d <= n\n";
    return kExitParseError;
  }
  std::vector<std::string> texts(count);
  const long total = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic, 1) num_threads(effective_threads(threads))
  for (long k = 0; k < total; ++k) {
    GeneratorSpec s = spec;
    s.seed = spec.seed + static_cast<std::uint64_t>(k);
    texts[k] = generated_problem_text(s, gen_random_idempotent(s));
  }
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    for (std::size_t k = 0; k < count; ++k) {
      auto path = std::filesystem::path(out_dir) / ("instance_" + std::to_string(k) + ".ring");
      std::ofstream(path, std::ios::binary) << texts[k];
      out << path.string() << "\n";
    }
    return kExitOk;
  }
  for (std::size_t k = 0; k < count; ++k) {
    if (k) out << "---\n";
    out << texts[k];
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Analyze idempotent endomorphisms of localized polynomial rings and classify their retracts",
               "retract"};
  app.require_subcommand(1);
  app.fallthrough();
  int threads = 0;
  app.add_option("--threads", threads, "Cap on parallel workers (0 = OpenMP default)");

  std::string file;
  auto* check = app.add_subcommand("check", "Exit 0 iff the map is a valid idempotent endomorphism");
  check->add_option("file", file, "Problem file")->required();

  bool json = false;
  std::string out_path;
  auto* analyze_cmd = app.add_subcommand("analyze", "Construct and classify the retract");
  analyze_cmd->add_option("file", file, "Problem file")->required();
  analyze_cmd->add_flag("--json", json, "Emit JSON");
  analyze_cmd->add_option("--out", out_path, "Write the report here instead of stdout");

  GeneratorSpec spec;
  std::size_t count = 1;
  std::string domain_name = "QQ";
  std::string out_dir;
  auto* gen = app.add_subcommand("gen", "Emit random idempotent problem files");
  gen->add_option("--n", spec.n, "Number of variables")->required();
  gen->add_option("--d", spec.d, "Number of Laurent variables")->required();
  gen->add_option("--r", spec.r, "Target unit rank")->required();
  gen->add_option("--seed", spec.seed, "PRNG seed")->required();
  gen->add_option("--complexity", spec.complexity, "Conjugation depth")->required();
  gen->add_option("--count", count, "Number of instances (seeds seed, seed+1, ...)");
  gen->add_option("--domain", domain_name, "QQ, ZZ or GF(p)");
  gen->add_option("--out-dir", out_dir, "Write instance_<k>.ring files into this directory");

  auto* selftest = app.add_subcommand("selftest", "Run the embedded acceptance suite");

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("retract");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kExitParseError;
  }

  try {
    if (*check) return do_check(file, out, err);
    if (*analyze_cmd) return do_analyze(file, json, out_path, out, err);
    if (*gen) return do_gen(spec, count, domain_name, out_dir, threads, out, err);
    if (*selftest) {
      SelftestOptions opts;
      opts.threads = threads;
      opts.on_result = [&](const CriterionResult& r) { out << format_result(r) << std::endl; };
      auto results = run_acceptance(opts);
      bool all = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
      out << (all ? "all criteria passed" : "some criteria FAILED") << "\n";
      return all ? kExitOk : kExitCertificateFailure;
    }
  } catch (const std::exception& e) {
    err << "internal failure: " << e.what() << "\n";
    return kExitCertificateFailure;
  }
  return kExitParseError;
}

}  // namespace retract
