#include "softint/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "softint/error.hpp"

namespace softint {

namespace {

/// Cursor over one input line; columns are 1-based.
struct Cursor {
  std::string_view text;
  std::size_t line;
  std::size_t pos = 0;

  std::size_t column() const { return pos + 1; }
  bool done() const { return pos >= text.size(); }
  char peek() const { return done() ? '\0' : text[pos]; }

  void skip_space() {
    while (!done() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(line, column(), what);
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }

  std::string_view word() {
    skip_space();
    const std::size_t start = pos;
    while (!done()) {
      const char c = text[pos];
      if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '{' || c == '}' ||
          c == ':')
        break;
      ++pos;
    }
    return text.substr(start, pos - start);
  }

  std::size_t number() {
    skip_space();
    const std::size_t start = pos;
    std::size_t value = 0;
    auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc() || end == text.data() + start) fail("expected a non-negative integer");
    pos = static_cast<std::size_t>(end - text.data());
    return value;
  }

  void expect_end() {
    skip_space();
    if (!done()) fail("unexpected trailing input");
  }
};

bool is_skippable(std::string_view line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

struct Line {
  std::string text;
  std::size_t number;
};

std::vector<Line> content_lines(std::istream& in) {
  std::vector<Line> out;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (!is_skippable(text)) out.push_back({text, number});
  }
  return out;
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, 0, "cannot open '" + path + "'");
  return in;
}

}  // namespace

GroupPtr parse_cayley_table(std::istream& in) {
  const auto lines = content_lines(in);
  if (lines.empty()) throw ParseError(1, 1, "missing 'order n' line");
  Cursor head{lines[0].text, lines[0].number};
  if (head.word() != "order") head.fail("expected 'order'");
  const std::size_t n = head.number();
  head.expect_end();
  if (n == 0) throw ParseError(lines[0].number, 1, "order must be positive");
  if (lines.size() < n + 1)
    throw ParseError(lines.back().number + 1, 1, "expected " + std::to_string(n) + " table rows");

  std::vector<std::vector<Element>> table(n);
  for (std::size_t i = 0; i < n; ++i) {
    Cursor row{lines[i + 1].text, lines[i + 1].number};
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t col = (row.skip_space(), row.column());
      const std::size_t v = row.number();
      if (v >= n) throw ParseError(row.line, col, "index " + std::to_string(v) + " out of range");
      table[i].push_back(static_cast<Element>(v));
    }
    row.expect_end();
  }

  std::vector<std::string> names;
  if (lines.size() > n + 1) {
    Cursor tail{lines[n + 1].text, lines[n + 1].number};
    if (tail.word() != "names") tail.fail("expected 'names' or end of file");
    for (std::size_t i = 0; i < n; ++i) {
      auto w = tail.word();
      if (w.empty()) tail.fail("expected " + std::to_string(n) + " names");
      names.emplace_back(w);
    }
    tail.expect_end();
    if (lines.size() > n + 2) throw ParseError(lines[n + 2].number, 1, "unexpected trailing line");
  }
  return FiniteGroup::from_table(table, std::move(names));
}

GroupPtr read_cayley_table(const std::string& path) {
  auto in = open(path);
  return parse_cayley_table(in);
}

std::string format_cayley_table(const FiniteGroup& g) {
  std::ostringstream out;
  out << "order " << g.order() << "\n";
  for (Element i = 0; i < g.order(); ++i) {
    for (Element j = 0; j < g.order(); ++j) out << (j ? " " : "") << g.mul(i, j);
    out << "\n";
  }
  out << "names";
  for (const auto& n : g.names()) out << " " << n;
  out << "\n";
  return out.str();
}

SoftSet parse_soft_set(std::istream& in, const GroupPtr& g) {
  const auto lines = content_lines(in);
  if (lines.empty()) throw ParseError(1, 1, "missing 'universe m ...' line");
  Cursor head{lines[0].text, lines[0].number};
  if (head.word() != "universe") head.fail("expected 'universe'");
  const std::size_t m = head.number();
  if (m == 0 || m > kMaxUniverse)
    head.fail("universe size must be between 1 and " + std::to_string(kMaxUniverse));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) {
    auto w = head.word();
    if (w.empty()) head.fail("expected " + std::to_string(m) + " labels");
    labels.emplace_back(w);
  }
  head.expect_end();
  UniversePtr universe;
  try {
    universe = Universe::make(std::move(labels));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(head.line, 1, e.what());
  }

  std::vector<Mask> values(g->order(), 0);
  std::vector<char> seen(g->order(), 0);
  for (std::size_t li = 1; li < lines.size(); ++li) {
    Cursor c{lines[li].text, lines[li].number};
    c.skip_space();
    const std::size_t index_col = c.column();
    const std::size_t x = c.number();
    if (x >= g->order())
      throw ParseError(c.line, index_col, "element " + std::to_string(x) + " out of range");
    if (seen[x]) throw ParseError(c.line, index_col, "element " + std::to_string(x) + " repeated");
    seen[x] = 1;
    c.expect(':');
    c.expect('{');
    Mask bits = 0;
    c.skip_space();
    if (c.peek() != '}') {
      for (;;) {
        c.skip_space();
        const std::size_t label_col = c.column();
        const std::string label(c.word());
        if (label.empty()) c.fail("expected a label");
        const std::size_t i = universe->find(label);
        if (i == universe->size())
          throw ParseError(c.line, label_col, "unknown label '" + label + "'");
        bits |= Mask{1} << i;
        c.skip_space();
        if (c.peek() == ',') {
          ++c.pos;
          continue;
        }
        break;
      }
    }
    c.expect('}');
    c.expect_end();
    values[x] = bits;
  }
  return SoftSet(g, universe, std::move(values));
}

SoftSet parse_soft_set(std::string_view text, const GroupPtr& g) {
  std::istringstream in{std::string(text)};
  return parse_soft_set(in, g);
}

SoftSet read_soft_set(const std::string& path, const GroupPtr& g) {
  auto in = open(path);
  return parse_soft_set(in, g);
}

std::string format_soft_set(const SoftSet& f, std::string_view comment) {
  std::ostringstream out;
  std::istringstream comments{std::string(comment)};
  for (std::string line; std::getline(comments, line);) out << "# " << line << "\n";
  const Universe& u = *f.universe();
  out << "universe " << u.size();
  for (const auto& l : u.labels()) out << " " << l;
  out << "\n";
  for (Element x = 0; x < f.order(); ++x) out << x << " : " << format_mask(u, f[x]) << "\n";
  return out.str();
}

namespace {

std::size_t spec_number(std::string_view text, std::size_t column) {
  std::size_t value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || value == 0)
    throw ParseError(1, column, "expected a positive integer, got '" + std::string(text) + "'");
  return value;
}

ElementSet element_list(std::string_view text, std::size_t column) {
  ElementSet out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const auto piece = text.substr(start, comma - start);
    std::size_t value = 0;
    auto [end, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (ec != std::errc() || end != piece.data() + piece.size())
      throw ParseError(1, column + start, "expected an element index");
    out.push_back(static_cast<Element>(value));
    start = comma + 1;
  }
  return out;
}

}  // namespace

GroupPtr parse_group_spec(std::string_view spec) {
  const std::size_t colon = spec.find(':');
  const auto family = spec.substr(0, colon);
  const auto arg = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  const std::size_t arg_col = colon + 2;

  if (colon == std::string_view::npos) {
    if (spec == "klein" || spec == "V4" || spec == "K4") return klein();
    if (spec == "quaternion" || spec == "Q8") return quaternion();
    if (spec.size() >= 2 && (spec[0] == 'Z' || spec[0] == 'D' || spec[0] == 'S')) {
      const std::size_t n = spec_number(spec.substr(1), 2);
      return spec[0] == 'Z' ? cyclic(n) : spec[0] == 'D' ? dihedral(n) : symmetric(n);
    }
    throw ParseError(1, 1, "unknown group '" + std::string(spec) + "'");
  }
  if (family == "cyclic") return cyclic(spec_number(arg, arg_col));
  if (family == "dihedral") return dihedral(spec_number(arg, arg_col));
  if (family == "symmetric") return symmetric(spec_number(arg, arg_col));
  if (family == "table") return read_cayley_table(std::string(arg));
  throw ParseError(1, 1, "unknown group family '" + std::string(family) + "'");
}

Homomorphism parse_hom_spec(std::string_view spec, const GroupPtr& g) {
  const std::size_t colon = spec.find(':');
  const auto kind = spec.substr(0, colon);
  const auto arg = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  const std::size_t arg_col = colon + 2;

  if (kind == "identity" && arg.empty()) return Homomorphism::identity(g);
  if (kind == "mod") {
    const std::size_t sep = arg.find(':');
    if (sep == std::string_view::npos) throw ParseError(1, arg_col, "expected mod:n:k");
    const std::size_t n = spec_number(arg.substr(0, sep), arg_col);
    const std::size_t k = spec_number(arg.substr(sep + 1), arg_col + sep + 1);
    if (n % k != 0) throw ParseError(1, arg_col, "mod:n:k needs k to divide n");
    std::vector<Element> map(n);
    for (std::size_t x = 0; x < n; ++x) map[x] = static_cast<Element>(x % k);
    return Homomorphism::make(cyclic(n), cyclic(k), std::move(map));
  }
  if (kind == "sign") {
    const std::size_t n = spec_number(arg, arg_col);
    std::vector<Element> map(2 * n);
    for (std::size_t x = 0; x < 2 * n; ++x) map[x] = x < n ? 0 : 1;
    return Homomorphism::make(dihedral(n), cyclic(2), std::move(map));
  }
  if (kind == "quotient" && !arg.empty())
    return quotient_by(g, Subgroup::make(g, element_list(arg, arg_col))).projection();
  if (kind == "inclusion" && !arg.empty())
    return Homomorphism::inclusion(Subgroup::make(g, element_list(arg, arg_col)));
  throw ParseError(1, 1, "unknown homomorphism '" + std::string(spec) + "'");
}

}  // namespace softint
