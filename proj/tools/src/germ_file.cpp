#include "veronese_cli/germ_file.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <set>
#include <sstream>

#include "veronese/errors.hpp"

namespace veronese::cli {

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  /// Next meaningful line split into words; nullopt at end of input.
  std::optional<std::vector<std::string>> next() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      std::istringstream words(line);
      std::vector<std::string> out;
      for (std::string w; words >> w;) out.push_back(w);
      if (out.empty() || out.front().front() == '#') continue;
      return out;
    }
    return std::nullopt;
  }

  std::vector<std::string> expect(const std::string& keyword, std::size_t args) {
    auto words = next();
    if (!words) fail("unexpected end of file, expected '" + keyword + "'");
    if (words->front() != keyword) fail("expected '" + keyword + "', found '" + words->front() + "'");
    if (words->size() != args + 1) {
      fail("'" + keyword + "' takes " + std::to_string(args) + " argument" + (args == 1 ? "" : "s"));
    }
    return *words;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw parse_error("line " + std::to_string(line_no_) + ": " + message, line_no_);
  }

  int line() const noexcept { return line_no_; }

 private:
  std::istream& in_;
  int line_no_ = 0;
};

int parse_int(const LineReader& reader, const std::string& text, const char* what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) reader.fail(std::string("bad ") + what + " '" + text + "'");
  return value;
}

MultiIndex parse_index(const LineReader& reader, const std::string& text, int n) {
  std::vector<int> entries;
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    const auto part = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const int e = parse_int(reader, part, "exponent");
    if (e < 0) reader.fail("negative exponent in '" + text + "'");
    entries.push_back(e);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (static_cast<int>(entries.size()) != n) {
    reader.fail("multi-index '" + text + "' has " + std::to_string(entries.size()) + " entries, expected " +
                std::to_string(n));
  }
  return MultiIndex(std::move(entries));
}

}  // namespace

GermFile GermFile::from(const Germ& g) {
  GermFile f;
  f.n = g.nvars();
  f.q = g.order();
  f.trunc = g.trunc();
  f.components = g.components();
  return f;
}

GermFile GermFile::from(const RawGerm& g, int q) {
  GermFile f;
  f.raw = true;
  f.n = g.nvars();
  f.q = q;
  f.trunc = g.trunc();
  f.components = g.components();
  return f;
}

Germ GermFile::germ() const {
  if (raw) throw domain_error("raw germ file used where a germ is required");
  return Germ(n, q, trunc, components);
}

GermFile parse_germ_file(std::istream& in) {
  LineReader reader(in);
  GermFile f;
  const auto version = reader.expect("format_version", 1);
  if (parse_int(reader, version[1], "version") != GermFile::kFormatVersion) {
    reader.fail("unsupported format_version " + version[1]);
  }
  const auto kind = reader.expect("kind", 1);
  if (kind[1] == "raw") {
    f.raw = true;
  } else if (kind[1] != "germ") {
    reader.fail("kind must be 'germ' or 'raw', found '" + kind[1] + "'");
  }
  f.n = parse_int(reader, reader.expect("n", 1)[1], "n");
  if (f.n < 1) reader.fail("n must be at least 1");
  f.q = parse_int(reader, reader.expect("q", 1)[1], "q");
  if (f.q < 1) reader.fail("q must be at least 1");
  f.trunc = parse_int(reader, reader.expect("trunc", 1)[1], "trunc");
  if (f.trunc < 1) reader.fail("trunc must be at least 1");
  if (!f.raw && f.trunc < f.q + 3) reader.fail("trunc must be at least q + 3 for a germ file");
  const int count = parse_int(reader, reader.expect("components", 1)[1], "component count");
  if (count < 1) reader.fail("component count must be positive");

  const std::vector<MultiIndex> expected = f.raw ? std::vector<MultiIndex>{} : coordinate_indices(f.n, f.q);
  if (!f.raw && count != static_cast<int>(expected.size())) {
    reader.fail("germ with n = " + std::to_string(f.n) + ", q = " + std::to_string(f.q) + " has " +
                std::to_string(expected.size()) + " components, found " + std::to_string(count));
  }

  for (int i = 0; i < count; ++i) {
    const auto head = reader.expect("component", 1);
    if (f.raw) {
      if (parse_int(reader, head[1], "component position") != i) {
        reader.fail("expected component " + std::to_string(i) + ", found " + head[1]);
      }
    } else if (parse_index(reader, head[1], f.n) != expected[static_cast<std::size_t>(i)]) {
      reader.fail("expected component " + expected[static_cast<std::size_t>(i)].to_string() + ", found " + head[1]);
    }
    std::vector<MJet::Term> terms;
    std::set<std::vector<int>> seen;
    for (;;) {
      auto words = reader.next();
      if (!words) reader.fail("unexpected end of file inside a component");
      if (words->front() == "end") {
        if (words->size() != 1) reader.fail("'end' takes no arguments");
        break;
      }
      if (words->front() != "term" || words->size() != 3) reader.fail("expected 'term <exponent> <coefficient>' or 'end'");
      auto exp = parse_index(reader, (*words)[1], f.n);
      if (exp.weight() == 0) reader.fail("components must vanish at the origin");
      if (exp.weight() > f.trunc) reader.fail("term of degree " + std::to_string(exp.weight()) + " exceeds trunc");
      if (!seen.insert(exp.entries()).second) reader.fail("duplicate term " + (*words)[1]);
      Rational c;
      try {
        c = parse_rational((*words)[2]);
      } catch (const parse_error& e) {
        reader.fail(std::string("coefficient ") + e.what());
      }
      if (sgn(c) == 0) reader.fail("zero coefficients are not stored");
      terms.emplace_back(std::move(exp), std::move(c));
    }
    f.components.emplace_back(f.n, f.trunc, terms);
  }
  if (auto extra = reader.next()) reader.fail("unexpected '" + extra->front() + "' after the last component");
  return f;
}

GermFile read_germ_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return parse_germ_file(in);
  } catch (const parse_error& e) {
    throw parse_error(path + ": " + e.what(), e.line());
  }
}

std::string print_germ_file(const GermFile& f) {
  std::ostringstream out;
  out << "format_version " << GermFile::kFormatVersion << "\n";
  out << "kind " << (f.raw ? "raw" : "germ") << "\n";
  out << "n " << f.n << "\nq " << f.q << "\ntrunc " << f.trunc << "\n";
  out << "components " << f.components.size() << "\n";
  const auto indices = f.raw ? std::vector<MultiIndex>{} : coordinate_indices(f.n, f.q);
  for (std::size_t i = 0; i < f.components.size(); ++i) {
    out << "component " << (f.raw ? std::to_string(i) : indices[i].to_string()) << "\n";
    for (const auto& [exp, c] : f.components[i].terms()) out << "term " << exp.to_string() << " " << to_string(c) << "\n";
    out << "end\n";
  }
  return out.str();
}

void write_germ_file(const std::string& path, const GermFile& f) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << print_germ_file(f);
}

}  // namespace veronese::cli
