#include "polysurj/parser.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

namespace polysurj {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      message_(message),
      line_(line),
      column_(column) {}

std::string variable_name(std::size_t index, std::size_t nvars) {
  static constexpr const char* kShort[] = {"x", "y", "z", "w"};
  if (nvars <= 4) return kShort[index];
  return "x" + std::to_string(index + 1);
}

namespace {

constexpr unsigned kMaxExponent = 100000;

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End: return "end of input";
    case Tok::Number:
    case Tok::Ident: return "'" + t.text + "'";
    default: return "'" + t.text + "'";
  }
}

std::vector<Token> tokenize(std::string_view text, std::size_t line0, std::size_t col0) {
  std::vector<Token> out;
  std::size_t line = line0, col = col0;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++col;
      ++i;
      continue;
    }
    Token t{Tok::End, std::string(1, c), line, col};
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      t.kind = Tok::Number;
      t.text = std::string(text.substr(i, j - i));
      col += j - i;
      i = j;
      out.push_back(std::move(t));
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      t.kind = Tok::Ident;
      t.text = std::string(text.substr(i, j - i));
      col += j - i;
      i = j;
      out.push_back(std::move(t));
      continue;
    }
    switch (c) {
      case '+': t.kind = Tok::Plus; break;
      case '-': t.kind = Tok::Minus; break;
      case '*': t.kind = Tok::Star; break;
      case '/': t.kind = Tok::Slash; break;
      case '^': t.kind = Tok::Caret; break;
      case '(': t.kind = Tok::LParen; break;
      case ')': t.kind = Tok::RParen; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    out.push_back(std::move(t));
    ++col;
    ++i;
  }
  out.push_back(Token{Tok::End, "", line, col});
  return out;
}

class ExprParser {
 public:
  ExprParser(std::vector<Token> tokens, std::size_t nvars, const VariableAliases& aliases)
      : tokens_(std::move(tokens)), nvars_(nvars), aliases_(aliases) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    if (peek().kind != Tok::End) fail("unexpected " + describe(peek()) + ", expected an operator");
    return p;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const { fail_at(peek(), msg); }
  [[noreturn]] static void fail_at(const Token& t, const std::string& msg) {
    throw ParseError(msg, t.line, t.column);
  }

  MultiPoly expr() {
    MultiPoly acc = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool minus = next().kind == Tok::Minus;
      MultiPoly rhs = term();
      if (minus)
        acc -= rhs;
      else
        acc += rhs;
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    while (peek().kind == Tok::Star) {
      next();
      acc *= factor();
    }
    return acc;
  }

  MultiPoly factor() {
    if (peek().kind == Tok::Minus) {
      next();
      return -factor();
    }
    if (peek().kind == Tok::Plus) {
      next();
      return factor();
    }
    MultiPoly b = base();
    if (peek().kind == Tok::Caret) {
      next();
      const Token& e = peek();
      if (e.kind != Tok::Number) fail("exponent must be a non-negative integer literal");
      next();
      Integer value(e.text);
      if (value > kMaxExponent) fail_at(e, "exponent " + e.text + " is too large");
      b = power(b, static_cast<unsigned>(value.get_ui()));
      if (peek().kind == Tok::Caret) fail("chained exponents need parentheses");
    }
    return b;
  }

  MultiPoly base() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        next();
        Rational value{Integer(t.text)};
        if (peek().kind == Tok::Slash) {
          next();
          const Token& d = peek();
          if (d.kind != Tok::Number) fail("expected an unsigned integer denominator");
          next();
          Integer den(d.text);
          if (den == 0) fail_at(d, "zero denominator");
          value = Rational(Integer(t.text), den);
          value.canonicalize();
        }
        return MultiPoly::constant(nvars_, value);
      }
      case Tok::Ident: {
        next();
        return MultiPoly::variable(nvars_, resolve(t));
      }
      case Tok::LParen: {
        next();
        MultiPoly inner = expr();
        if (peek().kind != Tok::RParen) fail("expected ')' but found " + describe(peek()));
        next();
        return inner;
      }
      default:
        fail("unexpected " + describe(t) + ", expected a number, variable or '('");
    }
  }

  std::size_t resolve(const Token& t) const {
    if (auto it = aliases_.find(t.text); it != aliases_.end()) {
      if (it->second >= nvars_) fail_at(t, "alias '" + t.text + "' refers to a missing variable");
      return it->second;
    }
    static constexpr std::string_view kShort = "xyzw";
    if (t.text.size() == 1) {
      auto k = kShort.find(t.text[0]);
      if (k != std::string_view::npos && k < nvars_) return k;
    } else if (t.text[0] == 'x' &&
               std::all_of(t.text.begin() + 1, t.text.end(),
                           [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) &&
               t.text[1] != '0') {
      if (t.text.size() <= 6) {
        std::size_t k = std::stoul(t.text.substr(1));
        if (k >= 1 && k <= nvars_) return k - 1;
      }
    }
    fail_at(t, "unknown variable '" + t.text + "' (ring has " + std::to_string(nvars_) +
                   " variables)");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t nvars_;
  const VariableAliases& aliases_;
};

MultiPoly parse_at(std::string_view text, std::size_t nvars, const VariableAliases& aliases,
                   std::size_t line, std::size_t col) {
  ExprParser parser(tokenize(text, line, col), nvars, aliases);
  return parser.parse();
}

}  // namespace

MultiPoly parse_poly(std::string_view text, std::size_t nvars, const VariableAliases& aliases) {
  if (nvars == 0) throw std::invalid_argument("parse_poly: nvars must be positive");
  return parse_at(text, nvars, aliases, 1, 1);
}

std::string render(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    bool negative = c < 0;
    Rational mag = abs(c);
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      std::string f = variable_name(v, p.nvars());
      if (m[v] > 1) f += "^" + std::to_string(m[v]);
      factors.push_back(std::move(f));
    }
    if (factors.empty()) {
      out << to_string(mag);
      continue;
    }
    if (mag != 1) out << to_string(mag) << "*";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) out << "*";
      out << factors[i];
    }
  }
  return out.str();
}

ProblemSpec make_problem(PolyMap map) {
  const std::size_t n = map.nvars();
  ProblemSpec spec{std::move(map), identity_matrix(n), std::vector<unsigned>(n, 1),
                   std::vector<Rational>(n, Rational(0))};
  return spec;
}

void validate(const ProblemSpec& spec) {
  const std::size_t n = spec.nvars();
  if (spec.gmatrix.size() != n) throw std::invalid_argument("gmatrix must have n rows");
  for (const auto& row : spec.gmatrix) {
    if (row.size() != n) throw std::invalid_argument("gmatrix must be square");
    for (const auto& g : row)
      if (g.nvars() != n) throw std::invalid_argument("gmatrix entry has the wrong variable count");
  }
  if (spec.alpha.size() != n) throw std::invalid_argument("alpha must have n entries");
  for (auto a : spec.alpha)
    if (a < 1) throw std::invalid_argument("alpha entries must be >= 1");
  if (spec.target.size() != n) throw std::invalid_argument("target must have n entries");
}

namespace {

struct Line {
  std::size_t number;
  std::string key;
  std::string value;
  std::size_t value_column;  // 1-based column where value starts
};

std::string trim(std::string_view s, std::size_t* lead = nullptr) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  if (lead) *lead = b;
  return std::string(s.substr(b, e - b));
}

std::optional<std::size_t> parse_index(std::string_view digits) {
  if (digits.empty() || digits.size() > 6) return std::nullopt;
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
  if (digits[0] == '0') return std::nullopt;
  return std::stoul(std::string(digits));
}

std::vector<std::pair<std::string, std::size_t>> split_list(const std::string& value,
                                                            std::size_t column) {
  std::vector<std::pair<std::string, std::size_t>> items;
  std::size_t start = 0;
  while (true) {
    auto comma = value.find(',', start);
    std::string_view piece = std::string_view(value).substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    std::size_t lead = 0;
    items.emplace_back(trim(piece, &lead), column + start + lead);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return items;
}

}  // namespace

ProblemSpec parse_problem_file(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++number;
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (trim(raw).empty()) continue;
    auto eq = raw.find('=');
    if (eq == std::string_view::npos) {
      std::size_t lead = 0;
      trim(raw, &lead);
      throw ParseError("expected 'key = value'", number, lead + 1);
    }
    std::size_t key_lead = 0, value_lead = 0;
    std::string key = trim(raw.substr(0, eq), &key_lead);
    std::string value = trim(raw.substr(eq + 1), &value_lead);
    if (key.empty()) throw ParseError("missing key before '='", number, eq + 1);
    if (value.empty()) throw ParseError("missing value for '" + key + "'", number, eq + 2);
    lines.push_back(Line{number, key, value, eq + 2 + value_lead});
  }

  // Pass 1: n.
  std::optional<std::size_t> n;
  for (const auto& l : lines) {
    if (l.key != "n") continue;
    if (n) throw ParseError("duplicate key 'n'", l.number, 1);
    auto v = parse_index(l.value);
    if (!v) throw ParseError("n must be a positive integer", l.number, l.value_column);
    n = *v;
  }
  if (!n) throw ParseError("missing 'n = <int>'", lines.empty() ? 1 : lines.front().number, 1);
  const std::size_t nv = *n;

  std::vector<std::optional<MultiPoly>> comps(nv);
  std::vector<std::vector<std::optional<MultiPoly>>> g(nv, std::vector<std::optional<MultiPoly>>(nv));
  bool any_g = false;
  std::optional<std::vector<unsigned>> alpha;
  std::optional<std::vector<Rational>> target;
  std::optional<bool> assume;
  const Line* first_g = nullptr;

  auto expr_at = [&](const Line& l) {
    return parse_at(l.value, nv, {}, l.number, l.value_column);
  };

  for (const auto& l : lines) {
    const std::string& k = l.key;
    if (k == "n") continue;
    if (k.size() >= 2 && k[0] == 'p') {
      auto idx = parse_index(std::string_view(k).substr(1));
      if (!idx) throw ParseError("malformed component key '" + k + "'", l.number, 1);
      if (*idx > nv)
        throw ParseError("component p" + std::to_string(*idx) + " exceeds n = " + std::to_string(nv),
                         l.number, 1);
      if (comps[*idx - 1]) throw ParseError("duplicate key '" + k + "'", l.number, 1);
      comps[*idx - 1] = expr_at(l);
    } else if (k.size() >= 3 && k[0] == 'g') {
      std::string_view rest = std::string_view(k).substr(1);
      std::optional<std::size_t> i, j;
      if (auto us = rest.find('_'); us != std::string_view::npos) {
        i = parse_index(rest.substr(0, us));
        j = parse_index(rest.substr(us + 1));
      } else if (rest.size() == 2 && nv <= 9) {
        i = parse_index(rest.substr(0, 1));
        j = parse_index(rest.substr(1, 1));
      }
      if (!i || !j) throw ParseError("malformed matrix key '" + k + "' (use g<i><j> or g<i>_<j>)", l.number, 1);
      if (*i > nv || *j > nv)
        throw ParseError("matrix entry '" + k + "' is outside the " + std::to_string(nv) + "x" +
                             std::to_string(nv) + " block",
                         l.number, 1);
      if (g[*i - 1][*j - 1]) throw ParseError("duplicate key '" + k + "'", l.number, 1);
      g[*i - 1][*j - 1] = expr_at(l);
      if (!any_g) first_g = &l;
      any_g = true;
    } else if (k == "alpha") {
      if (alpha) throw ParseError("duplicate key 'alpha'", l.number, 1);
      auto items = split_list(l.value, l.value_column);
      if (items.size() != nv)
        throw ParseError("alpha has " + std::to_string(items.size()) + " entries, expected " +
                             std::to_string(nv),
                         l.number, l.value_column);
      std::vector<unsigned> a;
      for (const auto& [s, col] : items) {
        auto v = parse_index(s);
        if (!v) throw ParseError("alpha entries must be positive integers", l.number, col);
        a.push_back(static_cast<unsigned>(*v));
      }
      alpha = std::move(a);
    } else if (k == "target") {
      if (target) throw ParseError("duplicate key 'target'", l.number, 1);
      auto items = split_list(l.value, l.value_column);
      if (items.size() != nv)
        throw ParseError("target has " + std::to_string(items.size()) + " entries, expected " +
                             std::to_string(nv),
                         l.number, l.value_column);
      std::vector<Rational> t;
      for (const auto& [s, col] : items) {
        try {
          t.push_back(parse_rational(s));
        } catch (const std::invalid_argument&) {
          throw ParseError("malformed rational '" + s + "'", l.number, col);
        }
      }
      target = std::move(t);
    } else if (k == "assume_det_nonvanishing") {
      if (assume) throw ParseError("duplicate key 'assume_det_nonvanishing'", l.number, 1);
      if (l.value == "true")
        assume = true;
      else if (l.value == "false")
        assume = false;
      else
        throw ParseError("expected true or false", l.number, l.value_column);
    } else {
      throw ParseError("unknown key '" + k + "'", l.number, 1);
    }
  }

  std::vector<MultiPoly> components;
  for (std::size_t j = 0; j < nv; ++j) {
    if (!comps[j])
      throw ParseError("missing component p" + std::to_string(j + 1) + " (n = " + std::to_string(nv) + ")",
                       lines.back().number, 1);
    components.push_back(*comps[j]);
  }

  ProblemSpec spec = make_problem(PolyMap(std::move(components)));
  if (any_g) {
    for (std::size_t i = 0; i < nv; ++i)
      for (std::size_t j = 0; j < nv; ++j) {
        if (!g[i][j])
          throw ParseError("malformed matrix block: entry g" + std::to_string(i + 1) +
                               std::to_string(j + 1) + " is missing (all n*n entries are required)",
                           first_g->number, 1);
        spec.gmatrix[i][j] = *g[i][j];
      }
    spec.gmatrix_defaulted = false;
  }
  if (alpha) {
    spec.alpha = *alpha;
    spec.alpha_defaulted = false;
  }
  if (target) {
    spec.target = *target;
    spec.target_defaulted = false;
  }
  if (assume) spec.assume_det_nonvanishing = *assume;
  return spec;
}

std::string write_problem_file(const ProblemSpec& spec, std::string_view comment) {
  std::ostringstream out;
  if (!comment.empty()) {
    std::istringstream lines{std::string(comment)};
    for (std::string line; std::getline(lines, line);) out << "# " << line << "\n";
  }
  const std::size_t n = spec.nvars();
  out << "n = " << n << "\n";
  for (std::size_t j = 0; j < n; ++j) out << "p" << j + 1 << " = " << render(spec.map[j]) << "\n";
  if (!spec.gmatrix_defaulted) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        out << "g" << i + 1 << (n > 9 ? "_" : "") << j + 1 << " = " << render(spec.gmatrix[i][j])
            << "\n";
      }
  }
  auto join = [&](const auto& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      if constexpr (std::is_same_v<std::decay_t<decltype(v[i])>, Rational>)
        s += to_string(v[i]);
      else
        s += std::to_string(v[i]);
    }
    return s;
  };
  if (!spec.alpha_defaulted) out << "alpha = " << join(spec.alpha) << "\n";
  if (!spec.target_defaulted) out << "target = " << join(spec.target) << "\n";
  if (spec.assume_det_nonvanishing) out << "assume_det_nonvanishing = true\n";
  return out.str();
}

}  // namespace polysurj
