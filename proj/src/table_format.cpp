#include "qvira/table_format.hpp"

#include <cctype>
#include <optional>
#include <sstream>

#include "qvira/errors.hpp"

namespace qvira {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;  // 1-based
  std::string text;    // comment stripped
  std::vector<Token> tokens;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) break;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    out.push_back({text.substr(start, i - start), start + 1});
  }
  return out;
}

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string raw(text.substr(start, end - start));
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto tokens = tokenize(raw);
    if (!tokens.empty()) lines.push_back({number, raw, std::move(tokens)});
    start = end + 1;
  }
  return lines;
}

[[noreturn]] void semantic(const std::string& message) { throw Error(ErrorCode::SemanticError, message); }

std::optional<long> to_int(const std::string& s) {
  std::size_t i = 0;
  if (s.empty()) return std::nullopt;
  if (s[0] == '-' || s[0] == '+') i = 1;
  if (i == s.size() || s.size() - i > 9) return std::nullopt;
  for (std::size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return std::nullopt;
  return std::stol(s);
}

int int_token(const Line& line, std::size_t index) {
  if (index >= line.tokens.size()) throw SyntaxError(line.number, line.text.size() + 1, "integer");
  auto v = to_int(line.tokens[index].text);
  if (!v) throw SyntaxError(line.number, line.tokens[index].column, "integer");
  return static_cast<int>(*v);
}

void expect_count(const Line& line, std::size_t count) {
  if (line.tokens.size() > count) throw SyntaxError(line.number, line.tokens[count].column, "end of line");
}

void expect_keyword(const Line& line, const std::string& keyword) {
  if (line.tokens[0].text != keyword) throw SyntaxError(line.number, line.tokens[0].column, "'" + keyword + "'");
}

std::optional<Rational> parse_rational(const std::string& s) {
  auto slash = s.find('/');
  auto num = to_int(s.substr(0, slash));
  if (!num) return std::nullopt;
  long den = 1;
  if (slash != std::string::npos) {
    auto d = to_int(s.substr(slash + 1));
    if (!d || *d <= 0 || s[slash + 1] == '-' || s[slash + 1] == '+') return std::nullopt;
    den = *d;
  }
  Rational r(*num, den);
  r.canonicalize();
  return r;
}

Range range_line(const Line& line, const std::string& keyword) {
  expect_keyword(line, keyword);
  Range r{int_token(line, 1), int_token(line, 2)};
  expect_count(line, 3);
  if (r.lo > r.hi) semantic(keyword + " has min greater than max");
  return r;
}

FieldContext mode_line(const Line& line) {
  expect_keyword(line, "mode");
  if (line.tokens.size() < 2) throw SyntaxError(line.number, line.text.size() + 1, "'symbolic' or 'numeric'");
  const auto& kind = line.tokens[1];
  if (kind.text == "symbolic") {
    expect_count(line, 2);
    return FieldContext::symbolic();
  }
  if (kind.text != "numeric") throw SyntaxError(line.number, kind.column, "'symbolic' or 'numeric'");
  auto value = [&line](std::size_t index, const std::string& prefix) {
    if (index >= line.tokens.size()) throw SyntaxError(line.number, line.text.size() + 1, "'" + prefix + "<rational>'");
    const auto& t = line.tokens[index];
    if (t.text.rfind(prefix, 0) != 0) throw SyntaxError(line.number, t.column, "'" + prefix + "<rational>'");
    auto r = parse_rational(t.text.substr(prefix.size()));
    if (!r) throw SyntaxError(line.number, t.column + prefix.size(), "rational literal");
    return *r;
  };
  Rational q0 = value(2, "q=");
  Rational a0 = value(3, "a=");
  expect_count(line, 4);
  try {
    return FieldContext::numeric(q0, a0);
  } catch (const Error& e) {
    semantic(std::string("bad mode: ") + e.what());
  }
}

std::string key_text(const EntryKey& key) {
  auto [h, j, k] = key;
  return "(" + std::to_string(h) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

}  // namespace

void check_document(const TableDocument& doc) {
  if (doc.version != 1) semantic("unsupported format version " + std::to_string(doc.version));
  if (doc.k_range.lo > doc.k_range.hi || doc.h_range.lo > doc.h_range.hi || doc.j_range.lo > doc.j_range.hi)
    semantic("empty range");
  if (static_cast<int>(doc.dims.size()) != doc.k_range.size())
    semantic("dims has " + std::to_string(doc.dims.size()) + " bits but k-range spans " +
             std::to_string(doc.k_range.size()) + " degrees");
  for (const auto& [key, expr] : doc.entries) {
    auto [h, j, k] = key;
    if (h == 0 && j == 0) semantic("index (0,0) is excluded: " + key_text(key));
    if (!doc.h_range.contains(h) || !doc.j_range.contains(j)) semantic("index outside h/j range: " + key_text(key));
    if (!doc.k_range.contains(k) || !doc.k_range.contains(k + h))
      semantic("degree outside k-range: " + key_text(key));
    if (!doc.dim(k) || !doc.dim(k + h)) semantic("entry on a zero-dimensional degree: " + key_text(key));
    if (!expr) semantic("missing expression at " + key_text(key));
  }
}

TableDocument parse_table(std::string_view text) {
  const auto lines = content_lines(text);
  static const char* const kHeader[] = {"vlq-table", "mode", "k-range", "dims", "h-range", "j-range"};
  // Header lines are checked in order, so a malformed line is reported before a missing one.
  auto header = [&](std::size_t n) -> const Line& {
    if (n < lines.size()) return lines[n];
    throw SyntaxError(lines.empty() ? 1 : lines.back().number + 1, 1, std::string("'") + kHeader[n] + "' header line");
  };
  TableDocument doc;
  {
    const Line& line = header(0);
    expect_keyword(line, "vlq-table");
    doc.version = int_token(line, 1);
    expect_count(line, 2);
    if (doc.version != 1) semantic("unsupported format version " + std::to_string(doc.version));
  }
  doc.mode = mode_line(header(1));
  doc.k_range = range_line(header(2), "k-range");
  {
    const Line& line = header(3);
    expect_keyword(line, "dims");
    if (line.tokens.size() < 2) throw SyntaxError(line.number, line.text.size() + 1, "bit string");
    const Token& bits = line.tokens[1];
    for (std::size_t i = 0; i < bits.text.size(); ++i) {
      char c = bits.text[i];
      if (c != '0' && c != '1') throw SyntaxError(line.number, bits.column + i, "'0' or '1'");
      doc.dims.push_back(c == '1');
    }
    expect_count(line, 2);
    if (static_cast<int>(doc.dims.size()) != doc.k_range.size())
      semantic("dims has " + std::to_string(doc.dims.size()) + " bits but k-range spans " +
               std::to_string(doc.k_range.size()) + " degrees");
  }
  doc.h_range = range_line(header(4), "h-range");
  doc.j_range = range_line(header(5), "j-range");

  for (std::size_t i = 6; i < lines.size(); ++i) {
    const Line& line = lines[i];
    expect_keyword(line, "f");
    EntryKey key{int_token(line, 1), int_token(line, 2), int_token(line, 3)};
    if (line.tokens.size() < 5) throw SyntaxError(line.number, line.text.size() + 1, "expression");
    const std::size_t expr_start = line.tokens[4].column - 1;
    ExprAst expr;
    try {
      expr = parse_expr(std::string_view(line.text).substr(expr_start));
    } catch (const SyntaxError& e) {
      throw SyntaxError(line.number, expr_start + e.column(), e.expected());
    }
    if (doc.entries.count(key) != 0) semantic("duplicate entry " + key_text(key) + " on line " + std::to_string(line.number));
    doc.entries.emplace(key, std::move(expr));
  }
  check_document(doc);
  return doc;
}

std::string write_table(const TableDocument& doc) {
  std::ostringstream out;
  out << "vlq-table " << doc.version << '\n';
  if (doc.mode.is_numeric()) {
    out << "mode numeric q=" << doc.mode.q0().get_str() << " a=" << doc.mode.a0().get_str() << '\n';
  } else {
    out << "mode symbolic\n";
  }
  out << "k-range " << doc.k_range.lo << ' ' << doc.k_range.hi << '\n';
  out << "dims ";
  for (bool d : doc.dims) out << (d ? '1' : '0');
  out << '\n';
  out << "h-range " << doc.h_range.lo << ' ' << doc.h_range.hi << '\n';
  out << "j-range " << doc.j_range.lo << ' ' << doc.j_range.hi << '\n';
  for (const auto& [key, expr] : doc.entries) {
    auto [h, j, k] = key;
    out << "f " << h << ' ' << j << ' ' << k << ' ' << print_canonical(evaluate(expr)) << '\n';
  }
  return out.str();
}

}  // namespace qvira
