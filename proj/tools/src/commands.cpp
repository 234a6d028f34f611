#include "veronese_cli/commands.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "veronese/errors.hpp"
#include "veronese/reduction.hpp"
#include "veronese/rnc.hpp"
#include "veronese_cli/germ_file.hpp"
#include "veronese_cli/poly_parser.hpp"
#include "veronese_cli/trace_file.hpp"

namespace veronese::cli {

namespace {

constexpr int kMaxFamilyWeight = 8;

/// Thrown for invalid parameter combinations; reported with exit code 2.
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::uint64_t seed = 1;
  std::optional<int> trunc;
  int samples = 10;
};

struct GenerateOptions {
  std::string kind;
  int n = 2;
  int q = 2;
  int magnitude = 2;
  std::string base;
  std::string drop;
  std::vector<std::string> add;
  std::map<int, std::string> r;
  std::string out;
};

struct CheckOptions {
  std::string file;
  std::string what;
  std::string trace;
  std::string report;
};

struct ReduceOptions {
  std::string file;
  std::string trace_out;
};

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

std::string vector_string(const std::vector<Rational>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v[i]);
  return out + ")";
}

MultiIndex parse_multi_index(const std::string& text, int n) {
  std::vector<int> entries;
  std::stringstream in(text);
  for (std::string part; std::getline(in, part, ',');) {
    try {
      std::size_t used = 0;
      entries.push_back(std::stoi(part, &used));
      if (used != part.size() || entries.back() < 0) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw usage_error("bad multi-index '" + text + "'");
    }
  }
  if (static_cast<int>(entries.size()) != n) {
    throw usage_error("multi-index '" + text + "' needs " + std::to_string(n) + " entries");
  }
  return MultiIndex(std::move(entries));
}

/// Re-truncates a loaded file when --trunc asks for less.
GermFile apply_trunc(GermFile f, const Globals& g) {
  if (!g.trunc || *g.trunc == f.trunc) return f;
  if (*g.trunc > f.trunc) {
    throw usage_error("--trunc " + std::to_string(*g.trunc) + " exceeds the file truncation " + std::to_string(f.trunc));
  }
  for (auto& c : f.components) c = c.truncate(*g.trunc);
  f.trunc = *g.trunc;
  return f;
}

void emit(const GermFile& f, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << print_germ_file(f);
  } else {
    write_germ_file(path, f);
  }
}

int cmd_generate(const GenerateOptions& o, const Globals& g, std::ostream& out) {
  std::optional<GermFile> base;
  if (!o.base.empty()) base = apply_trunc(read_germ_file(o.base), g);
  const int n = base ? base->n : o.n;
  const int q = base ? base->q : o.q;
  const int trunc = base ? base->trunc : g.trunc.value_or(default_trunc(q));
  if (n < 1 || q < 1) throw usage_error("need n >= 1 and q >= 1");
  if (trunc < q + 3) throw usage_error("need trunc >= q + 3");
  if (o.magnitude < 0) throw usage_error("need magnitude >= 0");
  auto base_germ = [&] { return base ? base->germ() : veronese::veronese(n, q, trunc); };

  if (o.kind != "family" && !o.r.empty()) throw usage_error("--R<k> only applies to 'family'");
  if (o.kind != "project" && !o.drop.empty()) throw usage_error("--drop only applies to 'project'");
  if (o.kind != "perturb" && !o.add.empty()) throw usage_error("--add only applies to 'perturb'");

  if (o.kind == "veronese") {
    if (base) throw usage_error("'veronese' takes no --base");
    emit(GermFile::from(veronese::veronese(n, q, trunc)), o.out, out);
  } else if (o.kind == "disguise") {
    emit(GermFile::from(disguise(base_germ(), g.seed, o.magnitude).germ), o.out, out);
  } else if (o.kind == "family") {
    if (base) throw usage_error("'family' takes no --base");
    std::map<int, MJet> r;
    for (const auto& [k, text] : o.r) {
      if (k > q) throw usage_error("--R" + std::to_string(k) + " exceeds q = " + std::to_string(q));
      r.emplace(k, parse_polynomial(text, n, trunc));
    }
    try {
      emit(GermFile::from(make_family_germ(n, q, trunc, r)), o.out, out);
    } catch (const domain_error& e) {
      throw usage_error(e.what());
    }
  } else if (o.kind == "project") {
    if (o.drop.empty()) throw usage_error("'project' needs --drop");
    const auto alpha = parse_multi_index(o.drop, n);
    try {
      emit(GermFile::from(project_drop(base_germ(), alpha), q), o.out, out);
    } catch (const domain_error& e) {
      throw usage_error(e.what());
    }
  } else if (o.kind == "perturb") {
    if (o.add.empty()) throw usage_error("'perturb' needs at least one --add alpha:polynomial");
    GermFile f = base ? *base : GermFile::from(veronese::veronese(n, q, trunc));
    for (const auto& spec : o.add) {
      const auto colon = spec.find(':');
      if (colon == std::string::npos) throw usage_error("--add expects alpha:polynomial, got '" + spec + "'");
      const auto poly = parse_polynomial(spec.substr(colon + 1), n, trunc);
      if (sgn(poly.constant_term()) != 0) throw usage_error("--add polynomial must vanish at the origin");
      const auto head = spec.substr(0, colon);
      int slot = 0;
      if (f.raw) {
        try {
          slot = std::stoi(head);
        } catch (const std::exception&) {
          throw usage_error("raw germs are perturbed by component position, got '" + head + "'");
        }
        if (slot < 0 || slot >= static_cast<int>(f.components.size())) throw usage_error("no component " + head);
      } else {
        const auto alpha = parse_multi_index(head, n);
        if (alpha.weight() < 1 || alpha.weight() > q) throw usage_error("no coordinate (" + head + ")");
        slot = canonical_index(alpha, n, q);
      }
      f.components[static_cast<std::size_t>(slot)] += poly;
    }
    emit(f, o.out, out);
  } else {
    throw usage_error("unknown kind '" + o.kind + "'");
  }
  return kSuccess;
}

int cmd_check(const CheckOptions& o, const Globals& g, std::ostream& out, std::ostream& err) {
  const GermFile f = apply_trunc(read_germ_file(o.file), g);
  const RawGerm raw = f.raw_germ();
  json report;
  report["what"] = o.what;
  report["file"] = o.file;
  bool holds = false;
  std::string line;

  if (o.what == "regularity" || o.what == "osculating") {
    std::vector<int> dims;
    std::vector<int> expected;
    for (int k = 1; k <= f.q; ++k) {
      dims.push_back(osculating_dimension(raw, k));
      expected.push_back(ambient_dimension(f.n, k));
    }
    report["osculating_dims"] = dims;
    report["maximal_dims"] = expected;
    if (o.what == "regularity") {
      holds = dims.back() == expected.back();
      line = std::string(holds ? "REGULAR" : "NOT_REGULAR") + " osculating dims " + join(dims);
    } else {
      holds = dims == expected;
      line = std::string(holds ? "MAXIMAL" : "NOT_MAXIMAL") + " osculating dims " + join(dims);
    }
    err << "osculating dimensions k=1.." << f.q << ": " << join(dims) << " (maximal " << join(expected) << ")\n";
  } else if (o.what == "pattern") {
    const Germ germ = f.germ();
    const auto family = check_family_pattern(germ);
    holds = family.has_value();
    json rs = json::object();
    if (family) {
      for (const auto& [k, r] : *family) {
        rs[std::to_string(k)] = to_json(r);
        err << "R" << k << " = " << r.to_string() << "\n";
      }
    } else {
      err << "residuals are not of the form s^alpha R_|alpha|(s)\n";
    }
    report["family"] = family ? rs : json(nullptr);
    line = holds ? "PATTERN" : "NO_PATTERN";
  } else if (o.what == "rnc-lines") {
    const Germ germ = f.germ();
    if (f.trunc < 2 * f.q + 2) {
      throw usage_error("rnc-lines needs trunc >= 2q + 2 = " + std::to_string(2 * f.q + 2));
    }
    const auto directions = sample_directions(f.n, g.samples, g.seed);
    json failing = json::array();
    std::string first_fail;
    for (const auto& sigma : directions) {
      const auto fit = fit_rnc(line_curve(germ, sigma), f.q);
      err << "sigma=" << vector_string(sigma) << (fit ? " fits" : " has no degree-" + std::to_string(f.q) + " fit")
          << "\n";
      if (!fit) {
        json v = json::array();
        for (const auto& x : sigma) v.push_back(to_json(x));
        failing.push_back(std::move(v));
        if (first_fail.empty()) first_fail = vector_string(sigma);
      }
    }
    report["samples"] = directions.size();
    report["failing_directions"] = failing;
    holds = failing.empty();
    line = holds ? "RNC_LINES all " + std::to_string(directions.size()) + " sampled lines fit"
                 : "NOT_RNC_LINES " + std::to_string(failing.size()) + " failing, first sigma=" + first_fail;
  } else if (o.what == "replay") {
    if (o.trace.empty()) throw usage_error("replay needs --trace");
    const auto w = witness_from_json(read_json_file(o.trace));
    holds = verify_replay(f, w);
    line = holds ? "REPLAY_OK" : "REPLAY_MISMATCH";
    err << "witness from " << o.trace << (holds ? " reproduces" : " does not reproduce") << " the recorded germ\n";
  } else {
    throw usage_error("unknown check '" + o.what + "'");
  }

  report["holds"] = holds;
  if (!o.report.empty()) write_json_file(o.report, report);
  out << line << "\n";
  return holds ? kSuccess : kNegative;
}

void report_certificate(const std::optional<Certificate>& cert, std::ostream& err) {
  if (!cert) return;
  err << "certificate: " << cert->describe() << "\n";
  err << "re-verified violated: " << (certificate_is_violated(*cert) ? "yes" : "no") << "\n";
}

int cmd_reduce(const ReduceOptions& o, const Globals& g, std::ostream& out, std::ostream& err) {
  const GermFile f = apply_trunc(read_germ_file(o.file), g);
  const auto trace = run_pipeline(f.raw_germ(), f.q);
  write_json_file(o.trace_out, trace_to_json(trace));
  for (const auto& s : trace.stages) {
    err << "stage r=" << s.r << ": " << (s.verdict == StageResult::Verdict::advance ? "advance" : "fail") << "\n";
  }
  report_certificate(trace.certificate, err);
  std::string line = to_string(trace.verdict);
  if (trace.verdict == ReductionTrace::Verdict::not_property_p) line += " stage r=" + std::to_string(trace.failed_stage);
  if (trace.verdict == ReductionTrace::Verdict::reduced) {
    int nonzero = 0;
    for (const auto& alpha : trace.final_germ->indices()) nonzero += trace.final_germ->residual(alpha).is_zero() ? 0 : 1;
    line += " nonzero residuals " + std::to_string(nonzero);
  }
  out << line << " trace=" << o.trace_out << "\n";
  return trace.verdict == ReductionTrace::Verdict::reduced ? kSuccess : kNegative;
}

int cmd_decide(const ReduceOptions& o, const Globals& g, std::ostream& out, std::ostream& err) {
  if (g.samples < 1) throw usage_error("--samples must be at least 1");
  const GermFile f = apply_trunc(read_germ_file(o.file), g);
  const auto d = decide_veronese(f.raw_germ(), f.q, g.samples, g.seed);
  if (!o.trace_out.empty()) write_json_file(o.trace_out, trace_to_json(d.trace, &d));
  report_certificate(d.certificate, err);
  for (const auto& sigma : d.failing_directions) err << "line sigma=" << vector_string(sigma) << " fails fit_rnc\n";
  if (d.verdict == Decision::Verdict::property_p_not_veronese && !d.lines_checked) {
    err << "line fits skipped: trunc below 2q + 2\n";
  }
  std::string line = to_string(d.verdict);
  if (!o.trace_out.empty()) {
    if (d.verdict == Decision::Verdict::veronese) line += " witness=" + o.trace_out;
    if (d.certificate) line += " certificate=" + o.trace_out;
  }
  out << line << "\n";
  return d.verdict == Decision::Verdict::veronese ? kSuccess : kNegative;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact germs of Veronese varieties: generate, check, reduce, decide", "veronese"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_option("--seed", globals.seed, "Seed for generators and direction sampling");
  app.add_option("--trunc", globals.trunc, "Truncation order T")->check(CLI::PositiveNumber);
  app.add_option("--samples", globals.samples, "Number of sampled line directions");

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Write a germ file");
  generate->add_option("kind", gen.kind, "veronese | disguise | family | project | perturb")
      ->required()
      ->check(CLI::IsMember({"veronese", "disguise", "family", "project", "perturb"}));
  generate->add_option("--n", gen.n, "Parameter count");
  generate->add_option("--q", gen.q, "Order");
  generate->add_option("--magnitude", gen.magnitude, "Size bound of disguise coefficients");
  generate->add_option("--base", gen.base, "Start from this germ file instead of the standard Veronese");
  generate->add_option("--drop", gen.drop, "Coordinate removed by 'project', e.g. 1,1");
  generate->add_option("--add", gen.add, "Perturbation alpha:polynomial, e.g. 2,0:s2^3");
  for (int k = 2; k <= kMaxFamilyWeight; ++k) {
    generate->add_option_function<std::string>(
        "--R" + std::to_string(k), [&gen, k](const std::string& v) { gen.r[k] = v; },
        "Factor R_" + std::to_string(k) + " of the weight-" + std::to_string(k) + " coordinates");
  }
  generate->add_option("-o,--out", gen.out, "Output path (standard output by default)");

  CheckOptions chk;
  auto* check = app.add_subcommand("check", "Test a property of a germ file");
  check->add_option("file", chk.file, "Germ file")->required();
  check->add_option("--what", chk.what, "regularity | osculating | pattern | rnc-lines | replay")
      ->required()
      ->check(CLI::IsMember({"regularity", "osculating", "pattern", "rnc-lines", "replay"}));
  check->add_option("--trace", chk.trace, "Trace file for replay");
  check->add_option("--report", chk.report, "Write a JSON report here");

  ReduceOptions red;
  auto* reduce = app.add_subcommand("reduce", "Run the reduction and write its trace");
  reduce->add_option("file", red.file, "Germ file")->required();
  reduce->add_option("-t,--trace-out", red.trace_out, "Trace output path")->required();

  ReduceOptions dec;
  auto* decide = app.add_subcommand("decide", "Decide whether the germ is a Veronese germ");
  decide->add_option("file", dec.file, "Germ file")->required();
  decide->add_option("-t,--trace-out", dec.trace_out, "Trace output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*generate) return cmd_generate(gen, globals, out);
    if (*check) return cmd_check(chk, globals, out, err);
    if (*reduce) return cmd_reduce(red, globals, out, err);
    if (*decide) return cmd_decide(dec, globals, out, err);
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const usage_error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const domain_error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kUsage;
}

}  // namespace veronese::cli
