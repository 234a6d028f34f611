#include "veronese_cli/trace_file.hpp"

#include <fstream>

#include "veronese/errors.hpp"

namespace veronese::cli {

namespace {

json index_json(const MultiIndex& alpha) { return alpha.entries(); }

json jets_json(const std::vector<MJet>& jets) {
  json out = json::array();
  for (const auto& f : jets) out.push_back(to_json(f));
  return out;
}

json polys_json(const std::vector<HomogeneousPoly>& polys) {
  json out = json::array();
  for (const auto& p : polys) out.push_back(to_json(p));
  return out;
}

json terms_json(const HomogeneousPoly::TermMap& terms) {
  json out = json::array();
  for (const auto& [exp, c] : terms) out.push_back({{"exp", index_json(exp)}, {"coeff", to_json(c)}});
  return out;
}

json stage_json(const StageRecord& s) {
  json out;
  out["r"] = s.r;
  out["extracted"] = to_json(s.extracted);
  const auto& nd = s.normalization;
  json norm;
  norm["G"] = to_json(nd.g);
  norm["H"] = polys_json(nd.h);
  norm["A"] = to_json(nd.a_part);
  norm["B"] = nd.b_part ? to_json(*nd.b_part) : json(nullptr);
  norm["anodine"] = to_json(nd.anodine);
  norm["g_unknowns"] = nd.g_unknowns;
  norm["g_rank"] = nd.g_rank;
  out["normalization"] = std::move(norm);
  out["homography"] = to_json(s.homography);
  out["reparametrization"] = jets_json(s.reparametrization);
  out["normalized"] = to_json(s.normalized);

  json solve;
  solve["solvable"] = s.solve.solved();
  if (s.solve.solution) {
    json c = json::object();
    for (const auto& [kappa, poly] : s.solve.solution->c) c[std::to_string(kappa)] = to_json(poly);
    solve["a"] = polys_json(s.solve.solution->a);
    solve["c"] = std::move(c);
  }
  solve["certificate"] = s.solve.certificate ? to_json(*s.solve.certificate) : json(nullptr);
  json checks = json::array();
  for (const auto& d : s.solve.divisibility) {
    checks.push_back({{"identity", identity_name(d.identity)},
                      {"kappa", d.kappa},
                      {"j", d.j + 1},
                      {"polynomial", to_json(d.polynomial)},
                      {"divisible", d.divisible}});
  }
  solve["divisibility"] = std::move(checks);
  out["solve"] = std::move(solve);
  out["verdict"] = s.verdict == StageResult::Verdict::advance ? "advance" : "fail";
  return out;
}

[[noreturn]] void schema_error(const std::string& message) { throw parse_error("trace: " + message); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_number_integer()) schema_error(std::string("field '") + key + "' is not an integer");
  return v.get<int>();
}

}  // namespace

json to_json(const Rational& x) { return to_string(x); }

json to_json(const MJet& f) {
  json out = json::array();
  for (const auto& [exp, c] : f.terms()) out.push_back({{"exp", index_json(exp)}, {"coeff", to_json(c)}});
  return out;
}

json to_json(const HomogeneousPoly& p) { return {{"degree", p.degree()}, {"terms", terms_json(p.terms())}}; }

json to_json(const RationalMatrix& m) {
  json out = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    out.push_back(std::move(row));
  }
  return out;
}

json to_json(const Homography& h) {
  json b = json::array();
  for (const auto& x : h.b()) b.push_back(to_json(x));
  return {{"A", to_json(h.a())}, {"b", std::move(b)}};
}

json to_json(const PGroups& p) {
  json out;
  out["kappa1"] = p.kappa1();
  out["kappa2"] = p.kappa2();
  for (const auto& [name, group] : {std::pair{"q1", &p.q1}, std::pair{"q2", &p.q2}}) {
    json list = json::array();
    for (const auto& [alpha, poly] : *group) list.push_back({{"alpha", index_json(alpha)}, {"P", to_json(poly)}});
    out[name] = std::move(list);
  }
  return out;
}

json to_json(const Certificate& c) {
  json out;
  out["identity"] = identity_name(c.identity);
  out["r"] = c.r;
  out["kappa"] = c.kappa;
  out["j"] = c.j + 1;
  out["alpha"] = c.alpha ? index_json(*c.alpha) : json(nullptr);
  out["layer"] = c.layer;
  out["witness"] = to_json(c.witness);
  out["divisor_power"] = c.divisor_power;
  out["violated"] = certificate_is_violated(c);
  out["description"] = c.describe();
  return out;
}

json trace_to_json(const ReductionTrace& trace, const Decision* decision) {
  json doc;
  doc["format"] = "veronese-trace";
  doc["format_version"] = kTraceFormatVersion;
  doc["n"] = trace.n;
  doc["q"] = trace.q;
  doc["trunc"] = trace.trunc;
  doc["verdict"] = to_string(trace.verdict);
  doc["order1"] = trace.order1 ? to_json(*trace.order1) : json(nullptr);
  json stages = json::array();
  for (const auto& s : trace.stages) stages.push_back(stage_json(s));
  doc["stages"] = std::move(stages);
  doc["failed_stage"] = trace.failed_stage;
  doc["certificate"] = trace.certificate ? to_json(*trace.certificate) : json(nullptr);
  doc["final_reparametrization"] = jets_json(trace.final_reparametrization);
  doc["final_germ"] = trace.final_germ ? jets_json(trace.final_germ->components()) : json(nullptr);
  if (trace.witness_homography) {
    doc["witness"] = {{"homography", to_json(*trace.witness_homography)},
                      {"reparametrization", jets_json(trace.witness_reparametrization)}};
  } else {
    doc["witness"] = nullptr;
  }
  if (decision != nullptr) {
    json d;
    d["verdict"] = to_string(decision->verdict);
    d["certificate"] = decision->certificate ? to_json(*decision->certificate) : json(nullptr);
    if (decision->family) {
      json fam = json::object();
      for (const auto& [k, r] : *decision->family) fam[std::to_string(k)] = to_json(r);
      d["family"] = std::move(fam);
    } else {
      d["family"] = nullptr;
    }
    auto directions = [](const std::vector<std::vector<Rational>>& list) {
      json out = json::array();
      for (const auto& sigma : list) {
        json v = json::array();
        for (const auto& x : sigma) v.push_back(to_json(x));
        out.push_back(std::move(v));
      }
      return out;
    };
    d["lines_checked"] = decision->lines_checked;
    d["directions"] = directions(decision->directions);
    d["failing_directions"] = directions(decision->failing_directions);
    doc["decision"] = std::move(d);
  }
  return doc;
}

Rational rational_from_json(const json& j) {
  if (!j.is_string()) schema_error("rational is not a \"p/q\" string");
  return parse_rational(j.get<std::string>());
}

MJet jet_from_json(const json& j, int n, int trunc) {
  if (!j.is_array()) schema_error("jet is not a term list");
  std::vector<MJet::Term> terms;
  for (const auto& t : j) {
    const auto& exp = field(t, "exp");
    if (!exp.is_array() || static_cast<int>(exp.size()) != n) schema_error("exponent has the wrong length");
    std::vector<int> entries;
    for (const auto& e : exp) {
      if (!e.is_number_integer() || e.get<int>() < 0) schema_error("bad exponent entry");
      entries.push_back(e.get<int>());
    }
    MultiIndex alpha(std::move(entries));
    if (alpha.weight() > trunc) schema_error("term above the truncation");
    terms.emplace_back(std::move(alpha), rational_from_json(field(t, "coeff")));
  }
  return MJet(n, trunc, terms);
}

Homography homography_from_json(const json& j) {
  const auto& a = field(j, "A");
  const auto& b = field(j, "b");
  if (!a.is_array() || !b.is_array() || a.size() != b.size()) schema_error("homography has inconsistent shape");
  const int dim = static_cast<int>(a.size());
  RationalMatrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const auto& row = a[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != dim) schema_error("matrix row has the wrong length");
    for (int k = 0; k < dim; ++k) m(i, k) = rational_from_json(row[static_cast<std::size_t>(k)]);
  }
  std::vector<Rational> bv;
  for (const auto& x : b) bv.push_back(rational_from_json(x));
  try {
    return Homography(std::move(m), std::move(bv));
  } catch (const domain_error& e) {
    schema_error(e.what());
  }
}

TraceWitness witness_from_json(const json& doc) {
  if (!doc.is_object() || doc.value("format", "") != "veronese-trace") schema_error("not a veronese trace");
  if (int_field(doc, "format_version") != kTraceFormatVersion) schema_error("unsupported format_version");
  TraceWitness w;
  w.n = int_field(doc, "n");
  w.q = int_field(doc, "q");
  w.trunc = int_field(doc, "trunc");
  if (w.n < 1 || w.q < 1 || w.trunc < 1) schema_error("bad header values");
  w.verdict = field(doc, "verdict").is_string() ? field(doc, "verdict").get<std::string>() : "";
  const auto& witness = field(doc, "witness");
  if (witness.is_null()) schema_error("trace has no witness (the germ was not q-regular)");
  w.homography = homography_from_json(field(witness, "homography"));
  for (const auto& f : field(witness, "reparametrization")) w.reparametrization.push_back(jet_from_json(f, w.n, w.trunc));
  if (static_cast<int>(w.reparametrization.size()) != w.n) schema_error("reparametrization needs n components");
  const auto& final_germ = field(doc, "final_germ");
  if (!final_germ.is_array()) schema_error("trace has no final germ");
  for (const auto& f : final_germ) w.final_components.push_back(jet_from_json(f, w.n, w.trunc));
  return w;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw parse_error(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << doc.dump(1) << "\n";
}

bool verify_replay(const GermFile& input, const TraceWitness& w) {
  if (input.n != w.n || input.q != w.q || input.trunc != w.trunc) return false;
  if (w.homography.dim() != static_cast<int>(input.components.size())) return false;
  const RawGerm raw = input.raw_germ();
  const RawGerm replayed = apply_homography(w.homography, reparametrize(raw, w.reparametrization));
  return replayed.components() == w.final_components;
}

}  // namespace veronese::cli
