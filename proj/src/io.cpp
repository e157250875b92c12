#include "nilp2/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace nilp2 {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> meaningful_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    Line line{number, {}};
    for (std::string w; words >> w;) line.tokens.push_back(w);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void parse_fail(int line, const std::string& why) {
  throw Error(ErrorCode::ParseError, why, line);
}

std::int64_t to_int(const std::string& s, int line) {
  std::int64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end) parse_fail(line, "expected an integer, got '" + s + "'");
  return v;
}

Residue to_residue(const std::string& s, Residue p, int line) {
  const auto v = to_int(s, line);
  if (v < 0 || v >= p) {
    throw Error(ErrorCode::EntryOutOfRange, "entry " + s + " is not in [0, " + std::to_string(p) + ")", line);
  }
  return v;
}

Index header_value(const std::vector<Line>& lines, std::size_t at, const char* key) {
  if (at >= lines.size()) parse_fail(lines.empty() ? 1 : lines.back().number, std::string("missing '") + key + "' line");
  const auto& l = lines[at];
  if (l.tokens.size() != 2 || l.tokens[0] != key) {
    parse_fail(l.number, std::string("expected '") + key + " <int>'");
  }
  return static_cast<Index>(to_int(l.tokens[1], l.number));
}

// Reads `count` residues starting at tokens[pos].
Vector read_vector(const Line& l, std::size_t& pos, Index count, Residue p) {
  Vector v(count);
  for (Index k = 0; k < count; ++k) {
    if (pos >= l.tokens.size()) parse_fail(l.number, "too few entries");
    v(k) = to_residue(l.tokens[pos++], p, l.number);
  }
  return v;
}

void expect_token(const Line& l, std::size_t& pos, const char* token) {
  if (pos >= l.tokens.size() || l.tokens[pos] != token) {
    parse_fail(l.number, std::string("expected '") + token + "'");
  }
  ++pos;
}

}  // namespace

Presentation parse_group(const std::string& text) {
  const auto lines = meaningful_lines(text);
  if (lines.empty() || lines[0].tokens != std::vector<std::string>{"nilp2", "v1"}) {
    throw Error(ErrorCode::BadMagic, "first line must be 'nilp2 v1'", lines.empty() ? 1 : lines[0].number);
  }
  RawPresentation raw;
  raw.p = header_value(lines, 1, "p");
  try {
    PrimeField check(raw.p);
  } catch (const Error& e) {
    throw e.at_line(lines[1].number);
  }
  raw.n = header_value(lines, 2, "n");
  raw.m = header_value(lines, 3, "m");
  if (raw.n < 0) parse_fail(lines[2].number, "n must be nonnegative");
  if (raw.m < 0) parse_fail(lines[3].number, "m must be nonnegative");

  std::set<std::pair<Index, Index>> seen;
  for (std::size_t at = 4; at < lines.size(); ++at) {
    const auto& l = lines[at];
    if (l.tokens[0] != "c") parse_fail(l.number, "expected a 'c' line");
    if (static_cast<Index>(l.tokens.size()) != 3 + raw.m) {
      parse_fail(l.number, "a 'c' line needs j, i and m = " + std::to_string(raw.m) + " entries");
    }
    const auto j = to_int(l.tokens[1], l.number);
    const auto i = to_int(l.tokens[2], l.number);
    if (!(j > i && i >= 1 && j <= raw.n)) {
      throw Error(ErrorCode::BadIndex, "pair (" + l.tokens[1] + "," + l.tokens[2] + ") needs n >= j > i >= 1",
                  l.number);
    }
    if (!seen.emplace(j, i).second) {
      parse_fail(l.number, "duplicate structure constant for (" + l.tokens[1] + "," + l.tokens[2] + ")");
    }
    std::size_t pos = 3;
    const Vector v = read_vector(l, pos, raw.m, raw.p);
    raw.entries.push_back({static_cast<Index>(j - 1), static_cast<Index>(i - 1),
                           std::vector<Residue>(v.data(), v.data() + v.size())});
  }
  return Presentation::validate(raw);
}

std::string write_group(const Presentation& g) {
  std::ostringstream os;
  os << "nilp2 v1\n"
     << "p " << g.p() << "\n"
     << "n " << g.n() << "\n"
     << "m " << g.m() << "\n";
  for (auto [j, i] : g.nonzero_pairs()) {
    os << "c " << j + 1 << ' ' << i + 1 << ' ' << format_vector(g.constant(j, i)) << "\n";
  }
  return os.str();
}

Identification parse_identification(const std::string& text, const Presentation& a,
                                    const Presentation& b) {
  std::vector<Vector> h, k;
  for (const auto& l : meaningful_lines(text)) {
    std::size_t pos = 0;
    expect_token(l, pos, "id");
    h.push_back(read_vector(l, pos, a.m(), a.p()));
    expect_token(l, pos, "->");
    k.push_back(read_vector(l, pos, b.m(), b.p()));
    if (pos != l.tokens.size()) parse_fail(l.number, "trailing tokens");
  }
  Identification ident(a.p(), a.m(), b.m(), std::move(h), std::move(k));
  ident.check_against(a, b);
  return ident;
}

std::string write_identification(const Identification& ident) {
  std::ostringstream os;
  for (std::size_t r = 0; r < ident.size(); ++r) {
    os << "id";
    if (ident.source_dim() > 0) os << ' ' << format_vector(ident.h_basis()[r]);
    os << " ->";
    if (ident.target_dim() > 0) os << ' ' << format_vector(ident.k_basis()[r]);
    os << "\n";
  }
  return os.str();
}

GeneratorMap parse_map(const std::string& text, const Presentation& domain,
                       const Presentation& codomain) {
  std::vector<std::optional<Element>> images(static_cast<std::size_t>(domain.n()));
  int last_line = 1;
  for (const auto& l : meaningful_lines(text)) {
    last_line = l.number;
    std::size_t pos = 0;
    expect_token(l, pos, "gen");
    if (pos >= l.tokens.size()) parse_fail(l.number, "missing generator index");
    const auto k = to_int(l.tokens[pos++], l.number);
    if (k < 1 || k > domain.n()) {
      throw Error(ErrorCode::BadIndex, "generator index " + std::to_string(k) + " out of range", l.number);
    }
    auto& slot = images[static_cast<std::size_t>(k - 1)];
    if (slot) parse_fail(l.number, "generator " + std::to_string(k) + " mapped twice");
    expect_token(l, pos, "->");
    const Vector v = read_vector(l, pos, codomain.n(), codomain.p());
    expect_token(l, pos, "|");
    const Vector w = read_vector(l, pos, codomain.m(), codomain.p());
    if (pos != l.tokens.size()) parse_fail(l.number, "trailing tokens");
    slot = codomain.element(v, w);
  }
  std::vector<Element> out;
  for (std::size_t k = 0; k < images.size(); ++k) {
    if (!images[k]) parse_fail(last_line, "no image given for generator " + std::to_string(k + 1));
    out.push_back(*images[k]);
  }
  return hom_from_images(domain, codomain, std::move(out));
}

std::string write_map(const GeneratorMap& f) {
  std::ostringstream os;
  for (std::size_t k = 0; k < f.images().size(); ++k) {
    const auto& img = f.images()[k];
    os << "gen " << k + 1 << " ->";
    if (img.v().size() > 0) os << ' ' << format_vector(img.v());
    os << " |";
    if (img.w().size() > 0) os << ' ' << format_vector(img.w());
    os << "\n";
  }
  return os.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(ErrorCode::Io, "write to '" + path + "' failed");
}

Presentation load_group(const std::string& path) { return parse_group(read_text_file(path)); }

}  // namespace nilp2
