#include "perfcode/parser.hpp"

#include <cctype>
#include <limits>
#include <sstream>

#include "perfcode/error.hpp"

namespace perfcode {

namespace {

constexpr long long kMaxNumber = 1'000'000'000;

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GroupSpec parse() {
    auto spec = expression();
    skip_ws();
    if (pos_ != text_.size()) fail({"'x'", "end of input"});
    return spec;
  }

 private:
  GroupSpec expression() {
    auto left = term();
    while (true) {
      skip_ws();
      if (peek() != 'x') break;
      ++pos_;
      auto right = term();
      left = product(std::move(left), std::move(right));
    }
    return left;
  }

  GroupSpec term() {
    skip_ws();
    if (consume_word("perm")) return permutation();
    if (consume_word("table")) return table();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      auto inner = expression();
      expect(')');
      return inner;
    }
    if (c == 'Z' || c == 'D' || c == 'Q' || c == 'A') {
      ++pos_;
      expect('(');
      std::vector<std::pair<long long, std::size_t>> args;
      args.push_back(number());
      if (c == 'A') {
        while (skip_ws(), peek() == ',') {
          ++pos_;
          args.push_back(number());
        }
      }
      expect(')');
      return atom(c, args);
    }
    fail({"'Z('", "'D('", "'Q('", "'A('", "'perm{'", "'table@'", "'('"});
  }

  GroupSpec atom(char kind, const std::vector<std::pair<long long, std::size_t>>& args) {
    const auto [v, at] = args.front();
    switch (kind) {
      case 'Z':
        if (v < 1) semantic(at, "Z(n) needs n >= 1");
        return GroupSpec{CyclicSpec{static_cast<int>(v)}};
      case 'D':
        if (v < 2 || v % 2 != 0) semantic(at, "D(n) needs an even order n >= 2");
        return GroupSpec{DihedralSpec{static_cast<int>(v)}};
      case 'Q':
        if (v % 4 != 0) semantic(at, "Q(n) needs an order divisible by 4");
        if (v < 8) semantic(at, "Q(4m) needs m >= 2");
        return GroupSpec{QuaternionSpec{static_cast<int>(v)}};
      default: {
        AbelianSpec a;
        for (auto [f, f_at] : args) {
          if (f < 2) semantic(f_at, "A(...) factors must be >= 2");
          a.factors.push_back(static_cast<int>(f));
        }
        return GroupSpec{std::move(a)};
      }
    }
  }

  GroupSpec permutation() {
    expect('{');
    PermutationSpec spec;
    std::vector<std::vector<std::pair<int, std::size_t>>> points_per_gen;
    skip_ws();
    if (peek() != '}') {
      while (true) {
        CycleList gen;
        std::vector<std::pair<int, std::size_t>> points;
        skip_ws();
        if (peek() != '(') fail({"'('"});
        while (skip_ws(), peek() == '(') {
          ++pos_;
          Cycle cycle;
          while (skip_ws(), peek() != ')') {
            if (peek() == ',') {
              ++pos_;
              continue;
            }
            auto [p, at] = number();
            points.emplace_back(static_cast<int>(p), at);
            cycle.push_back(static_cast<int>(p));
          }
          ++pos_;
          if (!cycle.empty()) gen.push_back(std::move(cycle));
        }
        spec.generators.push_back(std::move(gen));
        points_per_gen.push_back(std::move(points));
        skip_ws();
        if (peek() == ';') {
          ++pos_;
          continue;
        }
        break;
      }
    }
    expect('}');
    expect('@');
    auto [degree, degree_at] = number();
    if (degree < 1) semantic(degree_at, "permutation degree must be >= 1");
    spec.degree = static_cast<int>(degree);
    for (const auto& points : points_per_gen) {
      std::vector<bool> used(static_cast<std::size_t>(degree), false);
      for (auto [p, at] : points) {
        if (p >= degree) semantic(at, "point " + std::to_string(p) + " outside degree");
        if (used[p]) semantic(at, "point " + std::to_string(p) + " repeated in a generator");
        used[p] = true;
      }
    }
    return GroupSpec{std::move(spec)};
  }

  GroupSpec table() {
    expect('@');
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != ')')
      ++pos_;
    if (pos_ == start) fail({"path"});
    return GroupSpec{TableSpec{std::string(text_.substr(start, pos_ - start))}};
  }

  std::pair<long long, std::size_t> number() {
    skip_ws();
    const std::size_t start = pos_;
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > kMaxNumber) semantic(start, "number too large");
      ++pos_;
    }
    if (pos_ == start) fail({"integer"});
    return {v, start};
  }

  bool consume_word(std::string_view w) {
    if (text_.substr(pos_, w.size()) != w) return false;
    pos_ += w.size();
    return true;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail({std::string("'") + c + "'"});
    ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    std::ostringstream msg;
    msg << "syntax error at offset " << pos_ << ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) msg << (i ? ", " : "") << expected[i];
    if (pos_ < text_.size())
      msg << ", found '" << text_[pos_] << "'";
    else
      msg << ", found end of input";
    throw SyntaxError(pos_, std::move(expected), msg.str());
  }

  [[noreturn]] void semantic(std::size_t at, const std::string& what) const {
    throw Error(ErrorKind::SemanticError, what + " (offset " + std::to_string(at) + ")");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void print(std::ostream& out, const GroupSpec& spec) {
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, CyclicSpec>) {
          out << "Z(" << node.order << ")";
        } else if constexpr (std::is_same_v<T, DihedralSpec>) {
          out << "D(" << node.order << ")";
        } else if constexpr (std::is_same_v<T, QuaternionSpec>) {
          out << "Q(" << node.order << ")";
        } else if constexpr (std::is_same_v<T, AbelianSpec>) {
          out << "A(";
          for (std::size_t i = 0; i < node.factors.size(); ++i)
            out << (i ? "," : "") << node.factors[i];
          out << ")";
        } else if constexpr (std::is_same_v<T, ProductSpec>) {
          print(out, *node.left);
          out << " x ";
          const bool nested = std::holds_alternative<ProductSpec>(node.right->node);
          if (nested) out << "(";
          print(out, *node.right);
          if (nested) out << ")";
        } else if constexpr (std::is_same_v<T, PermutationSpec>) {
          out << "perm{";
          for (std::size_t g = 0; g < node.generators.size(); ++g) {
            if (g) out << ";";
            bool any = false;
            for (const auto& cycle : node.generators[g]) {
              if (cycle.empty()) continue;
              any = true;
              out << "(";
              for (std::size_t k = 0; k < cycle.size(); ++k) out << (k ? " " : "") << cycle[k];
              out << ")";
            }
            if (!any) out << "()";
          }
          out << "}@" << node.degree;
        } else {
          out << "table@" << node.path;
        }
      },
      spec.node);
}

// Element expressions: factor ('*'? factor)*, factor := atom ('^' int)?.
class ElementParser {
 public:
  ElementParser(const FiniteGroup& g, std::string_view text, std::size_t base_offset)
      : g_(g), text_(text), base_(base_offset) {}

  ElementId parse() {
    skip_ws();
    if (pos_ == text_.size()) fail({"element"});
    ElementId acc = factor();
    while (true) {
      skip_ws();
      if (pos_ == text_.size()) break;
      if (text_[pos_] == '*') ++pos_;
      acc = g_.mul(acc, factor());
    }
    return acc;
  }

 private:
  ElementId factor() {
    ElementId a = atom();
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_ws();
      bool neg = false;
      if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
        neg = text_[pos_] == '-';
        ++pos_;
      }
      const std::size_t start = pos_;
      long long k = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        k = std::min(k * 10 + (text_[pos_] - '0'), kMaxNumber);
        ++pos_;
      }
      if (pos_ == start) fail({"integer exponent"});
      a = g_.pow(a, neg ? -k : k);
    }
    return a;
  }

  ElementId atom() {
    skip_ws();
    const std::size_t start = pos_;
    const char c = pos_ < text_.size() ? text_[pos_] : '\0';
    if (c == '(') {
      int depth = 0;
      do {
        if (text_[pos_] == '(') ++depth;
        if (text_[pos_] == ')') --depth;
        ++pos_;
      } while (pos_ < text_.size() && depth > 0);
      if (depth != 0) fail({"')'"});
      return resolve(text_.substr(start, pos_ - start), start, true);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      return resolve(text_.substr(start, pos_ - start), start, false);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const auto token = text_.substr(start, pos_ - start);
      if (auto id = g_.find_label(token)) return *id;
      if (token.size() > 9) fail_at(start, {"element index"});
      const auto idx = std::stoull(std::string(token));
      if (idx >= g_.order())
        throw Error(ErrorKind::InvalidElement, "element index " + std::string(token) +
                                                   " out of range for group of order " +
                                                   std::to_string(g_.order()));
      return static_cast<ElementId>(idx);
    }
    fail({"generator name", "label", "'('", "integer"});
  }

  ElementId resolve(std::string_view token, std::size_t at, bool parenthesized) {
    if (!parenthesized) {
      if (auto it = g_.generators().find(token); it != g_.generators().end()) return it->second;
      if (token == "e") return kIdentity;
    }
    if (auto id = g_.find_label(token)) return *id;
    if (parenthesized) {
      const auto squeezed = squeeze(token);
      for (ElementId a = 0; a < g_.order(); ++a)
        if (squeeze(g_.label(a)) == squeezed) return a;
    }
    throw Error(ErrorKind::InvalidElement, "unknown element '" + std::string(token) +
                                               "' at offset " + std::to_string(base_ + at));
  }

  static std::string squeeze(std::string_view s) {
    std::string out;
    for (char ch : s)
      if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
    return out;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const { fail_at(pos_, std::move(expected)); }
  [[noreturn]] void fail_at(std::size_t at, std::vector<std::string> expected) const {
    std::string msg = "bad element expression at offset " + std::to_string(base_ + at);
    throw SyntaxError(base_ + at, std::move(expected), msg);
  }

  const FiniteGroup& g_;
  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

// Arbitrary table labels resolve verbatim before expression parsing.
ElementId resolve_item(const FiniteGroup& g, std::string_view text, std::size_t offset) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  if (auto id = g.find_label(text.substr(b, e - b))) return *id;
  return ElementParser(g, text, offset).parse();
}

bool blank(std::string_view s) {
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

GroupSpec parse_spec(std::string_view text) { return SpecParser(text).parse(); }

std::string to_dsl(const GroupSpec& spec) {
  std::ostringstream out;
  print(out, spec);
  return out.str();
}

ElementId parse_element(const FiniteGroup& g, std::string_view text) {
  return resolve_item(g, text, 0);
}

ElementSet parse_element_list(const FiniteGroup& g, std::string_view text) {
  std::vector<ElementId> ids;
  if (blank(text)) return ElementSet{};
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size()) {
      if (text[i] == '(') ++depth;
      if (text[i] == ')') --depth;
    }
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      const auto item = text.substr(start, i - start);
      if (blank(item))
        throw SyntaxError(start, {"element"}, "empty element at offset " + std::to_string(start));
      ids.push_back(resolve_item(g, item, start));
      start = i + 1;
    }
  }
  return ElementSet(std::move(ids));
}

}  // namespace perfcode
