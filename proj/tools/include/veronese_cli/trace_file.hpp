#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "veronese/reduction.hpp"
#include "veronese_cli/germ_file.hpp"

namespace veronese::cli {

using nlohmann::json;

/// Current TraceFile schema version.
inline constexpr int kTraceFormatVersion = 1;

json to_json(const Rational& x);
json to_json(const MJet& f);
json to_json(const HomogeneousPoly& p);
json to_json(const RationalMatrix& m);
json to_json(const Homography& h);
json to_json(const PGroups& p);
json to_json(const Certificate& c);

/// Machine-readable rendering of a pipeline run. Rationals are "p/q" strings;
/// polynomials are lists of {"exp": [...], "coeff": "p/q"}. The decision, when
/// given, adds its verdict, family data and sampled directions.
json trace_to_json(const ReductionTrace& trace, const Decision* decision = nullptr);

Rational rational_from_json(const json& j);
MJet jet_from_json(const json& j, int n, int trunc);
Homography homography_from_json(const json& j);

/// What replay needs from a TraceFile: the accumulated witness and the germ it reaches.
struct TraceWitness {
  int n = 0;
  int q = 0;
  int trunc = 0;
  std::string verdict;
  Homography homography;
  std::vector<MJet> reparametrization;
  std::vector<MJet> final_components;
};

/// parse_error when the document does not follow the schema or has no witness.
TraceWitness witness_from_json(const json& doc);
json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& doc);

/// Applies the witness to the input germ and compares with the recorded final germ.
bool verify_replay(const GermFile& input, const TraceWitness& w);

}  // namespace veronese::cli
