#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "veronese/germ.hpp"

namespace veronese::cli {

/// Versioned line-based text form of a Germ or RawGerm:
///
///   format_version 1
///   kind germ            (or raw)
///   n 2
///   q 2
///   trunc 7
///   components 5
///   component 1,0        (a raw file uses the position 0, 1, ...)
///   term 1,0 1/1
///   end
///   ...
///
/// Blank lines and lines starting with '#' are ignored. Coefficients are exact
/// rationals in lowest terms; zero coefficients and duplicate exponents are rejected.
struct GermFile {
  static constexpr int kFormatVersion = 1;

  bool raw = false;
  int n = 0;
  int q = 0;
  int trunc = 0;
  std::vector<MJet> components;

  static GermFile from(const Germ& g);
  static GermFile from(const RawGerm& g, int q);

  /// domain_error when the file is raw or the components do not form a Germ.
  Germ germ() const;
  RawGerm raw_germ() const { return RawGerm(n, trunc, components); }
};

/// parse_error citing the 1-based line of the first problem.
GermFile parse_germ_file(std::istream& in);
GermFile read_germ_file(const std::string& path);

std::string print_germ_file(const GermFile& f);
void write_germ_file(const std::string& path, const GermFile& f);

}  // namespace veronese::cli
