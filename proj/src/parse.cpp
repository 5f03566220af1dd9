#include "behrend/parse.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

namespace behrend {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring, std::size_t offset)
      : text_(text), ring_(ring), offset_(offset) {}

  Polynomial parse() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("empty polynomial", offset_ + pos_);
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError(std::string("unexpected '") + text_[pos_] + "'", offset_ + pos_);
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool starts_primary() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
  }

  Polynomial expr() {
    bool negate = false;
    if (peek('+')) {
      ++pos_;
    } else if (peek('-')) {
      ++pos_;
      negate = true;
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc *= factor();
      } else if (peek('/')) {
        std::size_t at = pos_;
        ++pos_;
        Polynomial d = factor();
        if (!d.is_constant() || d.is_zero())
          throw ParseError("division only by nonzero constants", offset_ + at);
        acc *= mpq_class(1) / d.leading_coeff();
      } else if (starts_primary()) {
        acc *= factor();
      } else {
        return acc;
      }
    }
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (peek('^')) {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) throw ParseError("expected exponent", offset_ + start);
      unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", offset_ + pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!peek(')')) throw ParseError("expected ')'", offset_ + pos_);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      mpz_class n(std::string(text_.substr(start, pos_ - start)));
      return Polynomial::constant(ring_, mpq_class(n));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      return identifier(text_.substr(start, pos_ - start), start);
    }
    throw ParseError(std::string("unexpected '") + c + "'", offset_ + pos_);
  }

  // Splits an identifier into variable names, longest match first.
  Polynomial identifier(std::string_view id, std::size_t at) {
    if (auto v = ring_->index_of(id)) return Polynomial::variable(ring_, *v);
    std::vector<std::optional<std::vector<std::size_t>>> memo(id.size() + 1);
    std::vector<bool> done(id.size() + 1, false);
    std::function<std::optional<std::vector<std::size_t>>(std::size_t)> split =
        [&](std::size_t i) -> std::optional<std::vector<std::size_t>> {
      if (i == id.size()) return std::vector<std::size_t>{};
      if (done[i]) return memo[i];
      done[i] = true;
      for (std::size_t len = id.size() - i; len >= 1; --len) {
        if (auto v = ring_->index_of(id.substr(i, len))) {
          if (auto rest = split(i + len)) {
            rest->insert(rest->begin(), *v);
            memo[i] = rest;
            return memo[i];
          }
        }
      }
      return memo[i] = std::nullopt;
    };
    auto parts = split(0);
    if (!parts) throw ParseError("unknown variable '" + std::string(id) + "'", offset_ + at);
    Polynomial p = Polynomial::constant(ring_, 1);
    for (auto v : *parts) p *= Polynomial::variable(ring_, v);
    return p;
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

std::string strip_comments(std::string_view text) {
  std::string out;
  bool in_comment = false;
  for (char c : text) {
    if (c == '#') in_comment = true;
    if (c == '\n') in_comment = false;
    out.push_back(in_comment ? ' ' : c);
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return Parser(text, ring, 0).parse();
}

std::vector<Polynomial> parse_generators(std::string_view text, const RingPtr& ring) {
  std::vector<Polynomial> out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    char c = i < text.size() ? text[i] : '\n';
    if (c == '(') ++depth;
    if (c == ')') --depth;
    bool sep = (c == '\n' || c == ';' || (c == ',' && depth == 0));
    if (!sep) continue;
    std::string_view item = text.substr(start, i - start);
    std::size_t lead = 0;
    while (lead < item.size() && std::isspace(static_cast<unsigned char>(item[lead]))) ++lead;
    std::string_view body = trim(item);
    if (!body.empty()) out.push_back(Parser(body, ring, start + lead).parse());
    start = i + 1;
  }
  return out;
}

IdealText parse_ideal_text(std::string_view raw, std::uint64_t characteristic, RingPtr fallback) {
  std::string text = strip_comments(raw);
  std::string_view body = text;
  std::size_t offset = 0;
  RingPtr ring = std::move(fallback);
  std::string_view head = trim(body);
  if (head.starts_with("ring") && head.size() > 4 && std::isspace(static_cast<unsigned char>(head[4]))) {
    std::size_t ring_at = body.find("ring");
    std::size_t semi = body.find(';', ring_at);
    if (semi == std::string_view::npos) throw ParseError("ring header must end with ';'", ring_at);
    std::string_view list = body.substr(ring_at + 4, semi - ring_at - 4);
    std::vector<std::string> vars;
    std::stringstream ss{std::string(list)};
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto name = trim(item);
      if (name.empty()) throw ParseError("empty variable name in ring header", ring_at);
      for (char c : name)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
          throw ParseError("invalid variable name '" + std::string(name) + "'", ring_at);
      vars.emplace_back(name);
    }
    ring = make_ring(std::move(vars), characteristic);
    offset = semi + 1;
  }
  if (!ring) throw ParseError("missing 'ring ...;' header", 0);
  IdealText out{ring, {}};
  auto gens = parse_generators(body.substr(offset), ring);
  for (auto& g : gens)
    if (!g.is_zero()) out.generators.push_back(std::move(g));
  return out;
}

IdealText read_ideal_file(const std::string& path, std::uint64_t characteristic) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_ideal_text(ss.str(), characteristic);
}

Point parse_point(std::string_view text) {
  Point p;
  std::stringstream ss{std::string(text)};
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto s = trim(item);
    if (s.empty()) throw ParseError("empty coordinate", 0);
    try {
      mpq_class q{std::string(s)};
      q.canonicalize();
      p.push_back(q);
    } catch (const std::invalid_argument&) {
      throw ParseError("invalid coordinate '" + std::string(s) + "'", 0);
    }
  }
  return p;
}

}  // namespace behrend
