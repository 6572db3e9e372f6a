#include "krull/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "krull/errors.hpp"

namespace krull {

DomainTag DomainTag::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s == "Q") return {DomainKind::kRational, 0};
  if (s == "Q(x)") return {DomainKind::kRationalFunction, 0};
  if (s == "F(x,y):Q") return {DomainKind::kBivariateRational, 0};
  constexpr std::string_view kPrimePrefix = "F(x,y):p=";
  if (s.rfind(kPrimePrefix, 0) == 0) {
    const std::string digits = s.substr(kPrimePrefix.size());
    if (digits.empty() || digits.size() > 10 ||
        digits.find_first_not_of("0123456789") != std::string::npos) {
      throw ConfigError("domain tag '" + std::string(text) + "': expected a prime after 'p='");
    }
    const std::uint64_t p = std::stoull(digits);
    if (!is_prime(p) || p >= (1ULL << 31)) {
      throw ConfigError("domain tag '" + std::string(text) + "': " + digits +
                        " is not a prime below 2^31");
    }
    return {DomainKind::kBivariatePrime, p};
  }
  throw ConfigError("unknown domain tag '" + std::string(text) +
                    "' (expected Q, Q(x), F(x,y):Q or F(x,y):p=<prime>)");
}

std::string DomainTag::to_string() const {
  switch (kind) {
    case DomainKind::kRational:
      return "Q";
    case DomainKind::kRationalFunction:
      return "Q(x)";
    case DomainKind::kBivariateRational:
      return "F(x,y):Q";
    case DomainKind::kBivariatePrime:
      return "F(x,y):p=" + std::to_string(prime);
  }
  return "?";
}

namespace {

// How to turn literals and the letters x, y into coefficients of C.
template <class C>
struct Coefficients;

template <>
struct Coefficients<Rational> {
  explicit Coefficients(const DomainTag&) {}
  Rational integer(const Integer& z) const { return Rational(z); }
  std::optional<Rational> variable(char) const { return std::nullopt; }
};

template <>
struct Coefficients<UniRatFunc> {
  explicit Coefficients(const DomainTag&) {}
  UniRatFunc integer(const Integer& z) const { return UniRatFunc(Rational(z)); }
  std::optional<UniRatFunc> variable(char v) const {
    if (v == 'x') return UniRatFunc::x();
    return std::nullopt;
  }
};

template <>
struct Coefficients<BiFracQ> {
  explicit Coefficients(const DomainTag&) {}
  BiFracQ integer(const Integer& z) const { return BiFracQ::scalar(Rational(z)); }
  std::optional<BiFracQ> variable(char v) const {
    if (v == 'x') return BiFracQ::monomial(Rational(1), 1, 0);
    if (v == 'y') return BiFracQ::monomial(Rational(1), 0, 1);
    return std::nullopt;
  }
};

template <>
struct Coefficients<BiFracFp> {
  explicit Coefficients(const DomainTag& tag) : p(tag.prime) {
    if (tag.kind != DomainKind::kBivariatePrime) throw ConfigError("F_p coefficients need a prime");
  }
  BiFracFp integer(const Integer& z) const {
    const Integer r = z % Integer(static_cast<unsigned long>(p));
    return BiFracFp::scalar(Fp(r.get_si(), p));
  }
  std::optional<BiFracFp> variable(char v) const {
    if (v == 'x') return BiFracFp::monomial(Fp(1, p), 1, 0);
    if (v == 'y') return BiFracFp::monomial(Fp(1, p), 0, 1);
    return std::nullopt;
  }
  std::uint64_t p;
};

enum class Tok { kInt, kVar, kPlus, kMinus, kStar, kSlash, kCaret, kLParen, kRParen, kEnd };

struct Token {
  Tok kind;
  std::size_t column;  // 1-based
  std::string text;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const auto ch = static_cast<unsigned char>(s[i]);
    const std::size_t col = i + 1;
    if (std::isspace(ch)) {
      ++i;
      continue;
    }
    if (std::isdigit(ch)) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::kInt, col, std::string(s.substr(i, j - i))});
      i = j;
      continue;
    }
    if (std::isalpha(ch)) {
      std::size_t j = i;
      while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
      if (j - i != 1) {
        throw ParseError(col, "unknown identifier '" + std::string(s.substr(i, j - i)) +
                                  "' (variables are x, y, z; write products with '*')");
      }
      out.push_back({Tok::kVar, col, std::string(1, s[i])});
      i = j;
      continue;
    }
    // U+2212 MINUS SIGN, as produced by some typesetting tools.
    if (s.substr(i, 3) == "\xE2\x88\x92") {
      out.push_back({Tok::kMinus, col, "-"});
      i += 3;
      continue;
    }
    Tok k;
    switch (ch) {
      case '+': k = Tok::kPlus; break;
      case '-': k = Tok::kMinus; break;
      case '*': k = Tok::kStar; break;
      case '/': k = Tok::kSlash; break;
      case '^': k = Tok::kCaret; break;
      case '(': k = Tok::kLParen; break;
      case ')': k = Tok::kRParen; break;
      default:
        throw ParseError(col, std::string("unexpected character '") + s[i] + "'");
    }
    out.push_back({k, col, std::string(1, s[i])});
    ++i;
  }
  out.push_back({Tok::kEnd, s.size() + 1, ""});
  return out;
}

template <class C>
class Parser {
 public:
  Parser(std::string_view text, const DomainTag& tag)
      : tokens_(tokenize(text)), tag_(tag), coeffs_(tag) {}

  Poly<C> parse() {
    if (peek().kind == Tok::kEnd) throw ParseError(peek().column, "empty expression");
    Poly<C> result = expr();
    if (peek().kind != Tok::kEnd) {
      if (starts_atom(peek().kind)) {
        throw ParseError(peek().column, "implicit multiplication is not allowed; insert '*'");
      }
      throw ParseError(peek().column, "unexpected '" + peek().text + "'");
    }
    return result;
  }

 private:
  static constexpr unsigned kMaxExponent = 10000;

  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }
  static bool starts_atom(Tok k) { return k == Tok::kInt || k == Tok::kVar || k == Tok::kLParen; }

  Poly<C> expr() {
    Poly<C> acc = term();
    while (peek().kind == Tok::kPlus || peek().kind == Tok::kMinus) {
      const bool minus = take().kind == Tok::kMinus;
      Poly<C> rhs = term();
      acc = minus ? acc - rhs : acc + rhs;
    }
    return acc;
  }

  Poly<C> term() {
    Poly<C> acc = unary();
    while (peek().kind == Tok::kStar || peek().kind == Tok::kSlash) {
      const Token op = take();
      Poly<C> rhs = unary();
      if (op.kind == Tok::kStar) {
        acc = acc * rhs;
        continue;
      }
      if (rhs.is_zero()) throw ParseError(op.column, "division by zero");
      if (rhs.deg() != 0) throw ParseError(op.column, "divisor must not involve z");
      const C inv = C(1) / rhs[0];
      acc = inv * acc;
    }
    if (starts_atom(peek().kind)) {
      throw ParseError(peek().column, "implicit multiplication is not allowed; insert '*'");
    }
    return acc;
  }

  Poly<C> unary() {
    if (peek().kind == Tok::kMinus) {
      take();
      return -unary();
    }
    if (peek().kind == Tok::kPlus) {
      take();
      return unary();
    }
    return power();
  }

  Poly<C> power() {
    Poly<C> base = atom();
    if (peek().kind != Tok::kCaret) return base;
    take();
    const Token& e = peek();
    if (e.kind != Tok::kInt) throw ParseError(e.column, "exponent must be a non-negative integer literal");
    take();
    if (e.text.size() > 5 || std::stoul(e.text) > kMaxExponent) {
      throw ParseError(e.column, "exponent exceeds " + std::to_string(kMaxExponent));
    }
    if (peek().kind == Tok::kCaret) {
      throw ParseError(peek().column, "chained '^' is ambiguous; use parentheses");
    }
    return pow(base, static_cast<unsigned>(std::stoul(e.text)));
  }

  Poly<C> atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::kInt: {
        take();
        return Poly<C>::constant(coeffs_.integer(Integer(t.text)));
      }
      case Tok::kVar: {
        take();
        const char v = t.text[0];
        if (v == 'z') return Poly<C>::monomial(coeffs_.integer(Integer(1)), 1);
        if (auto c = coeffs_.variable(v)) return Poly<C>::constant(*c);
        throw ParseError(t.column, std::string("variable '") + v + "' is not allowed in domain " +
                                       tag_.to_string());
      }
      case Tok::kLParen: {
        take();
        Poly<C> inner = expr();
        if (peek().kind != Tok::kRParen) throw ParseError(peek().column, "expected ')'");
        take();
        return inner;
      }
      case Tok::kEnd:
        throw ParseError(t.column, "unexpected end of input");
      default:
        throw ParseError(t.column, "unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  DomainTag tag_;
  Coefficients<C> coeffs_;
};

template <class C>
void require_tag(const DomainTag& tag, std::initializer_list<DomainKind> kinds) {
  for (auto k : kinds) {
    if (tag.kind == k) return;
  }
  throw ConfigError("domain tag " + tag.to_string() + " does not match the requested coefficient type");
}

}  // namespace

template <class C>
Poly<C> parse_poly(std::string_view text, const DomainTag& tag) {
  if constexpr (std::is_same_v<C, Rational>) {
    require_tag<C>(tag, {DomainKind::kRational});
  } else if constexpr (std::is_same_v<C, UniRatFunc>) {
    require_tag<C>(tag, {DomainKind::kRationalFunction});
  } else if constexpr (std::is_same_v<C, BiFracQ>) {
    require_tag<C>(tag, {DomainKind::kBivariateRational});
  } else {
    require_tag<C>(tag, {DomainKind::kBivariatePrime});
  }
  return Parser<C>(text, tag).parse();
}

template Poly<Rational> parse_poly<Rational>(std::string_view, const DomainTag&);
template Poly<UniRatFunc> parse_poly<UniRatFunc>(std::string_view, const DomainTag&);
template Poly<BiFracQ> parse_poly<BiFracQ>(std::string_view, const DomainTag&);
template Poly<BiFracFp> parse_poly<BiFracFp>(std::string_view, const DomainTag&);

}  // namespace krull
