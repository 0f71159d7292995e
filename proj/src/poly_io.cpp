#include <cctype>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "schubop/error.hpp"
#include "schubop/polynomial.hpp"

namespace schubop {
namespace {

std::string variable_name(int index, int n, Alphabet a) {
  if (a == Alphabet::Doubled) {
    const int half = n / 2;
    return index < half ? "x" + std::to_string(index + 1) : "y" + std::to_string(index - half + 1);
  }
  return "x" + std::to_string(index + 1);
}

std::string monomial_text(const Monomial& m, int n, Alphabet a) {
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (m[i] == 0) {
      continue;
    }
    if (!out.empty()) {
      out += '*';
    }
    out += variable_name(i, n, a);
    if (m[i] > 1) {
      out += '^' + std::to_string(m[i]);
    }
  }
  return out;
}

class TextParser {
 public:
  TextParser(std::string_view text, int n, Alphabet a) : s_(text), n_(n), a_(a) {}

  Polynomial parse() {
    PolynomialBuilder b(n_);
    skip();
    if (at_end()) {
      throw ParseError("empty polynomial", pos_);
    }
    bool first = true;
    while (!at_end()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip();
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      first = false;
      auto [m, c] = term();
      b.add(m, negative ? -c : c);
      skip();
    }
    return b.build();
  }

 private:
  std::pair<Monomial, Dyadic> term() {
    Monomial m;
    Dyadic c(1);
    while (true) {
      skip();
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        c *= coefficient();
      } else if (peek() == 'x' || peek() == 'y') {
        const char letter = peek();
        const std::size_t start = pos_++;
        const int idx = integer();
        int var = idx - 1;
        if (a_ == Alphabet::Doubled) {
          if (idx < 1 || idx > n_ / 2) {
            throw ParseError("variable out of range", start);
          }
          var = letter == 'y' ? n_ / 2 + idx - 1 : idx - 1;
        } else if (letter == 'y' || idx < 1 || idx > n_) {
          throw ParseError("variable out of range", start);
        }
        int e = 1;
        skip();
        if (peek() == '^') {
          ++pos_;
          skip();
          e = integer();
        }
        m.add(var, e);
      } else {
        throw ParseError("expected coefficient or variable", pos_);
      }
      skip();
      if (peek() != '*') {
        return {m, c};
      }
      ++pos_;
    }
  }

  Dyadic coefficient() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
    if (peek() == '/') {
      ++pos_;
      if (s_.substr(pos_, 2) == "2^") {
        pos_ += 2;
      }
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        ++pos_;
      }
    }
    try {
      return Dyadic::parse(s_.substr(start, pos_ - start));
    } catch (const NonDyadic& e) {
      throw ParseError(e.what(), start);
    }
  }

  int integer() {
    const std::size_t start = pos_;
    int v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 1000000) {
        throw ParseError("integer too large", start);
      }
      ++pos_;
    }
    if (pos_ == start) {
      throw ParseError("expected integer", pos_);
    }
    return v;
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  bool at_end() const { return pos_ >= s_.size(); }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  int n_;
  Alphabet a_;
};

}  // namespace

std::string to_text(const Polynomial& f, Alphabet a) {
  if (f.is_zero()) {
    return "0";
  }
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    const bool negative = t.coeff.sign() < 0;
    const Dyadic mag = negative ? -t.coeff : t.coeff;
    if (first) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const std::string mono = monomial_text(t.monomial, f.alphabet_size(), a);
    if (mono.empty()) {
      out += mag.to_string();
    } else if (mag == Dyadic(1)) {
      out += mono;
    } else {
      out += mag.to_string() + "*" + mono;
    }
  }
  return out;
}

Polynomial parse_polynomial(std::string_view text, int n, Alphabet a) {
  if (a == Alphabet::Doubled && n % 2 != 0) {
    throw RangeError("doubled alphabet needs an even size");
  }
  return TextParser(text, n, a).parse();
}

std::string to_latex(const Polynomial& f, Alphabet a) {
  if (f.is_zero()) {
    return "0";
  }
  std::ostringstream out;
  bool first = true;
  const int n = f.alphabet_size();
  for (const auto& t : f.terms()) {
    const bool negative = t.coeff.sign() < 0;
    const Dyadic mag = negative ? -t.coeff : t.coeff;
    out << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    first = false;
    const bool has_vars = t.monomial.degree() > 0;
    if (!mag.is_integer()) {
      out << "\\frac{" << mag.mantissa().get_str() << "}{2^{" << -mag.exponent() << "}}";
    } else if (!(has_vars && mag == Dyadic(1))) {
      out << mag.to_string();
    }
    for (int i = 0; i < n; ++i) {
      const int e = t.monomial[i];
      if (e == 0) {
        continue;
      }
      const std::string name = variable_name(i, n, a);
      out << name[0] << "_{" << name.substr(1) << "}";
      if (e > 1) {
        out << "^{" << e << "}";
      }
    }
  }
  return out.str();
}

std::string to_json(const Polynomial& f) {
  nlohmann::ordered_json doc;
  doc["n"] = f.alphabet_size();
  doc["terms"] = nlohmann::ordered_json::array();
  for (const auto& t : f.terms()) {
    nlohmann::ordered_json term;
    term["coeff"] = {{"m", t.coeff.mantissa().get_str()}, {"e", t.coeff.exponent()}};
    term["exp"] = t.monomial.exponents(f.alphabet_size());
    doc["terms"].push_back(std::move(term));
  }
  return doc.dump();
}

Polynomial from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
    const int n = doc.at("n").get<int>();
    PolynomialBuilder b(n);
    for (const auto& term : doc.at("terms")) {
      const auto exps = term.at("exp").get<std::vector<int>>();
      if (static_cast<int>(exps.size()) != n) {
        throw AlphabetMismatch("exponent vector length differs from n");
      }
      const mpz_class m(term.at("coeff").at("m").get<std::string>(), 10);
      b.add(Monomial(exps), Dyadic(m, term.at("coeff").at("e").get<std::int32_t>()));
    }
    return b.build();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed polynomial JSON: ") + e.what(), 0);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("malformed coefficient: ") + e.what(), 0);
  }
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << to_text(f); }
std::ostream& operator<<(std::ostream& os, const Dyadic& c) { return os << c.to_string(); }
std::ostream& operator<<(std::ostream& os, const SignedPermutation& w) { return os << w.to_string(); }

}  // namespace schubop
