#include "quadcf/cli/input.hpp"

#include <cctype>
#include <vector>

#include "quadcf/error.hpp"

namespace quadcf::cli {

namespace {

// Cursor over the input with whitespace removed; positions refer to the original text.
class Scanner {
 public:
  explicit Scanner(std::string_view text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      unsigned char c = static_cast<unsigned char>(text[i]);
      if (std::isspace(c)) continue;
      // U+2212 minus sign.
      if (c == 0xE2 && i + 2 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x88 &&
          static_cast<unsigned char>(text[i + 2]) == 0x92) {
        chars_.push_back('-');
        pos_.push_back(i);
        i += 2;
        continue;
      }
      chars_.push_back(text[i]);
      pos_.push_back(i);
    }
    end_pos_ = text.size();
  }

  bool done() const { return i_ == chars_.size(); }
  char peek() const { return done() ? '\0' : chars_[i_]; }
  std::size_t position() const { return done() ? end_pos_ : pos_[i_]; }

  bool accept(std::string_view lit) {
    if (chars_.size() - i_ < lit.size()) return false;
    for (std::size_t j = 0; j < lit.size(); ++j) {
      if (chars_[i_ + j] != lit[j]) return false;
    }
    i_ += lit.size();
    return true;
  }

  void expect(std::string_view lit) {
    if (!accept(lit)) throw ParseError("expected '" + std::string(lit) + "'", position());
  }

  BigInt integer() {
    std::size_t start = i_;
    std::string digits;
    if (peek() == '-' || peek() == '+') digits += chars_[i_++];
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) digits += chars_[i_++];
    if (digits.empty() || digits == "-" || digits == "+") {
      i_ = start;
      throw ParseError("expected integer", position());
    }
    return parse_bigint(digits);
  }

  void finish() {
    if (!done()) throw ParseError("unexpected trailing input", position());
  }

 private:
  std::vector<char> chars_;
  std::vector<std::size_t> pos_;
  std::size_t end_pos_ = 0;
  std::size_t i_ = 0;
};

BigInt radicand(Scanner& sc) {
  sc.expect("sqrt(");
  std::size_t at = sc.position();
  BigInt D = sc.integer();
  if (D <= 0) throw ParseError("radicand must be positive", at);
  if (is_perfect_square(D)) throw ParseError("rational value", at);
  sc.expect(")");
  return D;
}

std::vector<BigInt> list(Scanner& sc, char open, char close) {
  std::vector<BigInt> out;
  sc.expect(std::string(1, open));
  if (sc.accept(std::string(1, close))) return out;
  do {
    std::size_t at = sc.position();
    out.push_back(sc.integer());
    if (out.back() < 1) throw ParseError("partial quotient below 1", at);
  } while (sc.accept(","));
  sc.expect(std::string(1, close));
  return out;
}

}  // namespace

InputSpec parse_input(std::string_view text) {
  Scanner sc(text);
  if (sc.accept("cf:")) {
    ContinuedFraction cf;
    cf.a0 = sc.integer();
    sc.expect(";");
    cf.pre = list(sc, '[', ']');
    sc.expect(";");
    std::size_t at = sc.position();
    cf.period = list(sc, '(', ')');
    if (cf.period.empty()) throw ParseError("empty period", at);
    sc.finish();
    return cf;
  }
  if (sc.peek() == 's') {
    BigInt D = radicand(sc);
    sc.finish();
    return SurdInput{0, 1, D};
  }
  sc.expect("(");
  BigInt P = sc.integer();
  sc.expect("+");
  BigInt D = radicand(sc);
  sc.expect(")");
  sc.expect("/");
  std::size_t at = sc.position();
  BigInt Q = sc.integer();
  if (Q == 0) throw ParseError("zero denominator", at);
  sc.finish();
  return SurdInput{P, Q, D};
}

static std::string join(const std::vector<BigInt>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].get_str();
  return out;
}

std::string render(const InputSpec& spec) {
  if (const auto* s = std::get_if<SurdInput>(&spec)) {
    if (s->P == 0 && s->Q == 1) return "sqrt(" + s->D.get_str() + ")";
    return "(" + s->P.get_str() + "+sqrt(" + s->D.get_str() + "))/" + s->Q.get_str();
  }
  const auto& cf = std::get<ContinuedFraction>(spec);
  return "cf:" + cf.a0.get_str() + ";[" + join(cf.pre) + "];(" + join(cf.period) + ")";
}

ContinuedFraction to_continued_fraction(const InputSpec& spec, std::size_t max_steps) {
  if (const auto* s = std::get_if<SurdInput>(&spec)) {
    return expand_surd(normalize_surd(s->P, s->Q, s->D), max_steps);
  }
  const auto& cf = std::get<ContinuedFraction>(spec);
  validate(cf);
  return minimize(cf);
}

QuadraticSurd to_surd(const InputSpec& spec) {
  if (const auto* s = std::get_if<SurdInput>(&spec)) return normalize_surd(s->P, s->Q, s->D);
  return cf_value(std::get<ContinuedFraction>(spec));
}

}  // namespace quadcf::cli
