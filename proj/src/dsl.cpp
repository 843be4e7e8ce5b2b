#include "gpi/dsl.hpp"

#include "gpi/error.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <fstream>
#include <sstream>

namespace gpi::dsl {

namespace {

/// Recursive-descent parser over one line fragment. Columns are reported
/// relative to the start of the line (base + offset).
class ExprParser {
 public:
  ExprParser(std::string_view text, const Context& ctx, std::size_t line, std::size_t base)
      : text_(text), ctx_(ctx), line_(line), base_(base) {}

  FreePoly poly() {
    FreePoly p = expr();
    skip();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

  Word word() {
    skip();
    if (pos_ == text_.size()) fail("expected a word");
    std::vector<VarId> letters{var()};
    while (true) {
      skip();
      if (pos_ == text_.size()) break;
      if (text_[pos_] == '*') {
        ++pos_;
        skip();
      }
      letters.push_back(var());
    }
    return Word(std::move(letters));
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, base_ + pos_ + 1, msg); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  FreePoly expr() {
    FreePoly out = term();
    while (true) {
      if (accept('+')) {
        out += term();
      } else if (accept('-')) {
        out -= term();
      } else {
        return out;
      }
    }
  }

  FreePoly term() {
    skip();
    if (accept('-')) return -term();
    if (accept('+')) return term();
    FreePoly out = factor();
    while (accept('*')) out = out * factor();
    return out;
  }

  FreePoly factor() {
    skip();
    if (pos_ == text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      FreePoly inner = expr();
      expect(')');
      return inner;
    }
    if (c == '[') {
      ++pos_;
      FreePoly a = expr();
      expect(',');
      FreePoly b = expr();
      expect(']');
      return bracket(a, b);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return FreePoly::monomial(Word{}, Integer(std::string(text_.substr(start, pos_ - start))));
    }
    if (c == 'x') return FreePoly::variable(var());
    fail("unexpected '" + std::string(1, c) + "'");
  }

  VarId var() {
    skip();
    const std::size_t start = pos_;
    if (pos_ >= text_.size() || text_[pos_] != 'x') fail("expected a variable");
    ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) fail("variable needs a positive index");
    unsigned long id = 0;
    try {
      id = std::stoul(std::string(text_.substr(digits, pos_ - digits)));
    } catch (const std::exception&) {
      id = 0;
    }
    if (id == 0 || id > 0xffffffffUL) {
      pos_ = start;
      fail("variable index out of range");
    }
    const auto v = static_cast<VarId>(id);
    if (!ctx_.declares(v)) {
      pos_ = start;
      fail("undeclared variable x" + std::to_string(v));
    }
    return v;
  }

  std::string_view text_;
  const Context& ctx_;
  std::size_t line_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

struct Line {
  std::size_t number = 0;
  std::string key;
  std::string value;
  std::size_t value_column = 0;  // 0-based column where value starts
};

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const std::string content = trim(raw);
    if (!content.empty()) {
      const std::size_t colon = raw.find(':');
      if (colon == std::string_view::npos) {
        const std::size_t col = raw.find_first_not_of(" \t");
        throw ParseError(number, col + 1, "expected 'key: value'");
      }
      Line line;
      line.number = number;
      line.key = trim(raw.substr(0, colon));
      std::size_t vstart = colon + 1;
      while (vstart < raw.size() && std::isspace(static_cast<unsigned char>(raw[vstart]))) ++vstart;
      line.value_column = vstart;
      line.value = std::string(raw.substr(vstart));
      while (!line.value.empty() && std::isspace(static_cast<unsigned char>(line.value.back()))) line.value.pop_back();
      out.push_back(std::move(line));
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

FiniteGroup parse_group(const Line& line) {
  const std::string& v = line.value;
  const auto fail = [&](std::size_t offset, const std::string& msg) -> FiniteGroup {
    throw ParseError(line.number, line.value_column + offset + 1, msg);
  };
  if (v.rfind("table", 0) == 0) {
    nlohmann::json table;
    try {
      table = nlohmann::json::parse(v.substr(5));
    } catch (const nlohmann::json::parse_error& e) {
      return fail(5, std::string("malformed group table: ") + e.what());
    }
    std::vector<std::vector<std::uint32_t>> rows;
    try {
      rows = table.get<std::vector<std::vector<std::uint32_t>>>();
    } catch (const nlohmann::json::exception&) {
      return fail(5, "group table must be a list of lists of element indices");
    }
    try {
      return FiniteGroup(std::move(rows));
    } catch (const Error& e) {
      return fail(5, e.what());
    }
  }
  std::string digits;
  if (v.size() >= 2 && v[0] == 'Z') {
    std::string rest = v.substr(1);
    if (rest.size() >= 2 && rest.front() == '<' && rest.back() == '>') rest = rest.substr(1, rest.size() - 2);
    if (!rest.empty() && rest.front() == '_') rest = rest.substr(1);
    if (!rest.empty() && rest.find_first_not_of("0123456789") == std::string::npos) digits = rest;
  }
  if (digits.empty() || digits.size() > 6) return fail(0, "unknown group '" + v + "'");
  const std::size_t n = std::stoul(digits);
  if (n == 0) return fail(1, "group order must be positive");
  return cyclic_group(n);
}

std::vector<std::pair<std::size_t, std::string>> tokens(const std::string& s) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const std::size_t b = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > b) out.emplace_back(b, s.substr(b, i - b));
  }
  return out;
}

std::uint32_t parse_index(const Line& line, std::size_t offset, const std::string& tok, const FiniteGroup& group) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 9) {
    throw ParseError(line.number, line.value_column + offset + 1, "expected an element index, got '" + tok + "'");
  }
  const auto idx = static_cast<std::uint32_t>(std::stoul(tok));
  if (idx >= group.order()) {
    throw ParseError(line.number, line.value_column + offset + 1,
                     "element index " + tok + " is outside a group of order " + std::to_string(group.order()));
  }
  return idx;
}

GradingTuple parse_grading(const Line& line, const FiniteGroup& group) {
  std::vector<Element> tuple;
  for (const auto& [off, tok] : tokens(line.value)) tuple.push_back(Element{parse_index(line, off, tok, group)});
  try {
    return GradingTuple(group, std::move(tuple));
  } catch (const Error& e) {
    throw ParseError(line.number, line.value_column + 1, e.what());
  }
}

void parse_vars(const Line& line, Context& ctx) {
  for (const auto& [off, tok] : tokens(line.value)) {
    const std::size_t colon = tok.find(':');
    if (colon == std::string::npos || tok.size() < 2 || tok[0] != 'x') {
      throw ParseError(line.number, line.value_column + off + 1, "expected 'x<k>:<degree>', got '" + tok + "'");
    }
    const std::string id = tok.substr(1, colon - 1);
    if (id.empty() || id.find_first_not_of("0123456789") != std::string::npos || id.size() > 9 || std::stoul(id) == 0) {
      throw ParseError(line.number, line.value_column + off + 2, "variable needs a positive index");
    }
    const auto v = static_cast<VarId>(std::stoul(id));
    const Element d{parse_index(line, off + colon + 1, tok.substr(colon + 1), ctx.group())};
    if (ctx.declares(v)) {
      throw ParseError(line.number, line.value_column + off + 1, "x" + id + " is declared twice");
    }
    ctx.declare(v, d);
  }
}

GeneratorInstance parse_generator(const Line& line, const Context& ctx) {
  const std::string& v = line.value;
  GeneratorKind kind;
  if (v.rfind("type1", 0) == 0) {
    kind = GeneratorKind::Type1;
  } else if (v.rfind("type2", 0) == 0) {
    kind = GeneratorKind::Type2;
  } else {
    throw ParseError(line.number, line.value_column + 1, "generator must start with type1 or type2");
  }
  std::vector<Word> parts;
  std::size_t start = 5;
  while (true) {
    std::size_t bar = v.find('|', start);
    const std::size_t end = bar == std::string::npos ? v.size() : bar;
    const std::string_view piece = std::string_view(v).substr(start, end - start);
    if (trim(piece).empty() || trim(piece) == "1") {
      throw ParseError(line.number, line.value_column + start + 1, "generator parts must be nonempty words");
    }
    parts.push_back(ExprParser(piece, ctx, line.number, line.value_column + start).word());
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  if (auto msg = generator_violation(ctx, kind, parts); !msg.empty()) {
    throw ParseError(line.number, line.value_column + 1, msg);
  }
  return GeneratorInstance(kind, std::move(parts));
}

}  // namespace

Document parse_document(std::string_view text) {
  const std::vector<Line> lines = split_lines(text);
  const Line* group_line = nullptr;
  const Line* grading_line = nullptr;
  const Line* vars_line = nullptr;
  std::map<std::string, const Line*> body;
  for (const auto& line : lines) {
    const Line** slot = nullptr;
    if (line.key == "group") {
      slot = &group_line;
    } else if (line.key == "grading") {
      slot = &grading_line;
    } else if (line.key == "vars") {
      slot = &vars_line;
    } else if (line.key == "poly" || line.key == "m" || line.key == "n" || line.key == "generator") {
      if (body.contains(line.key)) throw ParseError(line.number, 1, "duplicate '" + line.key + ":' line");
      body[line.key] = &line;
      continue;
    } else {
      throw ParseError(line.number, 1, "unknown key '" + line.key + "'");
    }
    if (*slot) throw ParseError(line.number, 1, "duplicate '" + line.key + ":' line");
    *slot = &line;
  }
  const std::size_t last = lines.empty() ? 1 : lines.back().number;
  if (!group_line) throw ParseError(last, 1, "missing 'group:' line");
  if (!vars_line) throw ParseError(last, 1, "missing 'vars:' line");

  FiniteGroup group = parse_group(*group_line);
  GradingTuple grading = grading_line ? parse_grading(*grading_line, group) : GradingTuple(group);
  Document doc;
  doc.context = Context(std::move(grading));
  parse_vars(*vars_line, doc.context);

  if (auto it = body.find("poly"); it != body.end()) {
    const Line& l = *it->second;
    doc.poly = ExprParser(l.value, doc.context, l.number, l.value_column).poly();
  }
  for (const char* key : {"m", "n"}) {
    if (auto it = body.find(key); it != body.end()) {
      const Line& l = *it->second;
      Word w = ExprParser(l.value, doc.context, l.number, l.value_column).word();
      (std::string(key) == "m" ? doc.m : doc.n) = std::move(w);
    }
  }
  if (auto it = body.find("generator"); it != body.end()) doc.generator = parse_generator(*it->second, doc.context);
  return doc;
}

Document parse_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

FreePoly parse_poly(std::string_view expr, const Context& ctx) { return ExprParser(expr, ctx, 1, 0).poly(); }

Word parse_word(std::string_view expr, const Context& ctx) { return ExprParser(expr, ctx, 1, 0).word(); }

std::string format_group(const FiniteGroup& group) {
  if (group == cyclic_group(group.order())) return "Z" + std::to_string(group.order());
  return "table " + nlohmann::json(group.table()).dump();
}

std::string format_document(const Document& doc) {
  std::ostringstream os;
  const GradingTuple& grading = doc.context.grading();
  os << "group: " << format_group(grading.group()) << '\n';
  os << "grading:";
  for (const auto& e : grading.tuple()) os << ' ' << e.index;
  os << '\n';
  os << "vars:";
  for (const auto& [v, d] : doc.context.degrees()) os << " x" << v << ':' << d.index;
  os << '\n';
  if (doc.poly) os << "poly: " << to_string(*doc.poly) << '\n';
  if (doc.m) os << "m: " << to_string(*doc.m) << '\n';
  if (doc.n) os << "n: " << to_string(*doc.n) << '\n';
  if (doc.generator) {
    os << "generator: " << to_string(doc.generator->kind());
    for (std::size_t i = 0; i < doc.generator->parts().size(); ++i) {
      os << (i ? " | " : " ") << to_string(doc.generator->parts()[i]);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace gpi::dsl
