#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "isoacm/enumerator.hpp"
#include "isoacm/serialize.hpp"

namespace {

using namespace isoacm;

struct Options {
  std::string type = "B";
  int rank = 0;
  int k = 0;
  std::string weight;
  Int t = 0;
  std::string format = "plain";
  std::string out;
  Int sum_bound = 4;
  int jobs = 1;
};

WeightFW parse_weight(const std::string& text, int rank) {
  std::vector<Int> coeffs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    Int value = 0;
    try {
      value = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw validation_error("malformed weight component '" + item + "'");
    }
    if (used != item.size()) throw validation_error("malformed weight component '" + item + "'");
    coeffs.push_back(value);
  }
  if (static_cast<int>(coeffs.size()) != rank)
    throw validation_error("weight vector has " + std::to_string(coeffs.size()) +
                           " components, expected " + std::to_string(rank));
  WeightFW w(rank);
  for (int i = 0; i < rank; ++i) w[i] = coeffs[i];
  return w;
}

// stdout unless --out was given
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw validation_error("cannot open output file '" + path + "'");
    path_ = path;
  }
  std::ostream& stream() { return path_.empty() ? std::cout : file_; }
  void finish() {
    stream().flush();
    if (!stream()) throw error("write failed" + (path_.empty() ? "" : " for '" + path_ + "'"));
  }

 private:
  std::ofstream file_;
  std::string path_;
};

FlagSpace space_of(const Options& opt) {
  return FlagSpace(parse_lie_type(opt.type), opt.rank, opt.k);
}

void note_remap(const FlagSpace& space, std::ostream& os) {
  if (space.spin_nodes_swapped())
    os << "note: " << letter(space.type()) << "_" << space.rank() << " k=" << space.requested_k()
       << " handled as k=" << space.k() << " with the last two coefficients exchanged\n";
}

int run_step_matrix(const Options& opt, bool verbose) {
  (void)verbose;
  const FlagSpace space = space_of(opt);
  const WeightFW input = space.internal_weight(parse_weight(opt.weight, opt.rank));
  const auto [lambda, twist] = normalize_initialized(space, input);
  const StepMatrix sm = build_step_matrix(space, lambda);
  Sink sink(opt.out);
  const RenderFormat format = parse_render_format(opt.format);
  if (format == RenderFormat::Plain) {
    note_remap(space, sink.stream());
    if (twist != 0) sink.stream() << "twist applied: " << twist << "\n";
  }
  sink.stream() << render(sm, format);
  sink.finish();
  return 0;
}

int run_check(const Options& opt, bool verbose) {
  const FlagSpace space = space_of(opt);
  const WeightFW input = space.internal_weight(parse_weight(opt.weight, opt.rank));
  const AcmVerdict verdict = is_acm(space, input);
  Sink sink(opt.out);
  std::ostream& os = sink.stream();
  if (opt.format == "json") {
    os << to_json(space, input, verdict).dump() << "\n";
  } else {
    note_remap(space, os);
    if (verdict.twist_applied != 0) os << "twist applied: " << verdict.twist_applied << "\n";
    if (verdict.is_acm) {
      os << "ACM: yes (M=" << verdict.M.str() << ")\n";
      if (verbose)
        for (const auto& [l, ref] : verdict.witnesses)
          os << "  l=" << l << " at " << static_cast<char>(ref.block) << "[" << ref.i << ","
             << ref.j << "]\n";
    } else {
      os << "ACM: no (missing l=" << *verdict.missing() << " in [1," << verdict.M.str() << "])\n";
      if (verbose) {
        os << "  gaps:";
        for (Int g : verdict.gaps) os << " " << g;
        os << "\n";
      }
    }
  }
  sink.finish();
  return 0;
}

int run_cohomology(const Options& opt) {
  const FlagSpace space = space_of(opt);
  const WeightFW input = space.internal_weight(parse_weight(opt.weight, opt.rank));
  const CohomologyResult result = cohomology(space, input, opt.t);
  Sink sink(opt.out);
  std::ostream& os = sink.stream();
  if (opt.format == "json") {
    os << to_json(space, input, opt.t, result).dump() << "\n";
  } else {
    note_remap(space, os);
    if (result.zero)
      os << "H^i = 0 for all i\n";
    else
      os << "H^" << result.degree << " nonzero: weight " << to_string(result.rep_weight)
         << ", dim " << result.dimension << "\n";
  }
  sink.finish();
  return 0;
}

int run_enumerate(const Options& opt) {
  const FlagSpace space = space_of(opt);
  Sink sink(opt.out);
  std::ostream& os = sink.stream();
  if (opt.format == "csv") {
    emit_atlas({space}, os, AtlasFormat::Csv, opt.jobs);
  } else if (opt.format == "json") {
    emit_atlas({space}, os, AtlasFormat::JsonLines, opt.jobs);
  } else {
    const EnumerationResult result = enumerate_acm(space, opt.jobs);
    note_remap(space, os);
    os << "space: " << space.name() << "\n";
    os << "candidates scanned: " << result.candidates_scanned
       << " (bound: " << result.bound_used << ")\n";
    os << "ACM weights (" << result.acm_weights.size() << "):\n";
    for (const WeightFW& w : result.acm_weights) os << "  " << to_string(w) << "\n";
  }
  sink.finish();
  return 0;
}

int run_verify(const Options& opt) {
  const FlagSpace space = space_of(opt);
  const EquivalenceReport report = verify_equivalence(space, opt.sum_bound, opt.jobs);
  Sink sink(opt.out);
  write_jsonl(report, sink.stream());
  sink.finish();
  std::cerr << "verified " << report.records.size() << " weights on " << space.name() << ": "
            << report.mismatches.size() << " mismatches\n";
  if (!report.ok()) {
    for (const WeightFW& w : report.mismatches)
      std::cerr << "mismatch at lambda=" << to_string(w) << "\n";
    return 1;
  }
  return 0;
}

int run_corollaries(const Options& opt) {
  const FlagSpace space = space_of(opt);
  const CorollaryReport report = validate_corollaries(space);
  Sink sink(opt.out);
  std::ostream& os = sink.stream();
  note_remap(space, os);
  os << "space: " << space.name() << "\n";
  for (const FamilyCheck& f : report.families) {
    os << (f.violations.empty() ? "pass" : "FAIL") << " [" << (f.iff ? "iff" : "sufficiency")
       << "] " << f.name << " (" << f.cases << " cases";
    if (!f.violations.empty()) os << ", " << f.violations.size() << " violations";
    os << ")\n";
    for (const WeightFW& w : f.violations) os << "  violation at lambda=" << to_string(w) << "\n";
  }
  sink.finish();
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ACM classification of irreducible homogeneous bundles on isotropic Grassmannians"};
  app.require_subcommand(1);

  Options opt;
  bool verbose = false;

  auto add_space_flags = [&](CLI::App* cmd) {
    cmd->add_option("--type", opt.type, "Lie type: B, C or D")->required();
    cmd->add_option("--rank", opt.rank, "rank n")->required();
    cmd->add_option("--k", opt.k, "marked node k")->required();
  };

  CLI::App* step = app.add_subcommand("step-matrix", "print the step matrix of a weight");
  add_space_flags(step);
  step->add_option("--weight", opt.weight, "comma-separated coefficients a1,...,aN")->required();
  step->add_option("--format", opt.format, "plain|json|latex");
  step->add_option("--out", opt.out, "write output to file");

  CLI::App* check = app.add_subcommand("check", "decide whether the bundle is ACM");
  add_space_flags(check);
  check->add_option("--weight", opt.weight)->required();
  check->add_option("--format", opt.format, "plain|json");
  check->add_option("--out", opt.out);
  check->add_flag("--verbose", verbose, "print witnesses / all gaps");

  CLI::App* coh = app.add_subcommand("cohomology", "sheaf cohomology of the twisted bundle");
  add_space_flags(coh);
  coh->add_option("--weight", opt.weight)->required();
  coh->add_option("--t", opt.t, "twist");
  coh->add_option("--format", opt.format, "plain|json");
  coh->add_option("--out", opt.out);

  CLI::App* enumerate = app.add_subcommand("enumerate", "list all initialized ACM weights");
  add_space_flags(enumerate);
  enumerate->add_option("--format", opt.format, "plain|csv|json");
  enumerate->add_option("--out", opt.out);
  enumerate->add_option("--jobs", opt.jobs, "worker threads");

  CLI::App* verify = app.add_subcommand("verify", "criterion vs cohomology scan, JSON lines");
  add_space_flags(verify);
  verify->add_option("--sum-bound", opt.sum_bound, "max coefficient sum (default 4)");
  verify->add_option("--jobs", opt.jobs);
  verify->add_option("--out", opt.out);

  CLI::App* cor = app.add_subcommand("corollaries", "validate the coefficient-range criteria");
  add_space_flags(cor);
  cor->add_option("--out", opt.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (step->parsed()) return run_step_matrix(opt, verbose);
    if (check->parsed()) return run_check(opt, verbose);
    if (coh->parsed()) return run_cohomology(opt);
    if (enumerate->parsed()) return run_enumerate(opt);
    if (verify->parsed()) return run_verify(opt);
    if (cor->parsed()) return run_corollaries(opt);
  } catch (const validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
