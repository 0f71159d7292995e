#include "schubop/divdiff.hpp"

#include <sstream>

#include "schubop/error.hpp"

namespace schubop {
namespace {

void check_reach(const Polynomial& f, Letter g) {
  if (g.reach() > f.alphabet_size() || (g.kind == Letter::Kind::Simple && g.index < 1)) {
    throw RangeError("letter " + g.to_string() + " does not fit alphabet of size " +
                     std::to_string(f.alphabet_size()));
  }
}

// (u^a v^b - u^b v^a) / (u - v) as a list of (p, q, sign) terms.
template <typename Emit>
void newton_quotient(int a, int b, Emit emit) {
  if (a > b) {
    for (int t = 0; t < a - b; ++t) {
      emit(a - 1 - t, b + t, 1);
    }
  } else if (a < b) {
    for (int t = 0; t < b - a; ++t) {
      emit(b - 1 - t, a + t, -1);
    }
  }
}

struct SignedGroup {
  std::vector<SignedPermutation> elements;
  std::vector<int> signs;
};

SignedGroup signed_group(GroupType t, int n) {
  SignedGroup g;
  g.elements = enumerate_group(t, n);
  for (const auto& w : g.elements) {
    g.signs.push_back(length(w, t) % 2 == 0 ? 1 : -1);
  }
  return g;
}

Polynomial antisymmetrize_with(const Polynomial& f, const SignedGroup& g) {
  PolynomialBuilder b(f.alphabet_size());
  for (std::size_t i = 0; i < g.elements.size(); ++i) {
    const Polynomial image = act(f, g.elements[i]);
    if (g.signs[i] > 0) {
      b.add(image);
    } else {
      b.add_scaled(image, Dyadic(-1));
    }
  }
  return b.build();
}

// Module generators x^alpha for the antisymmetrizer check.
std::vector<std::vector<int>> module_generators(GroupType t, int n) {
  std::vector<int> bound(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int k = n - 1 - i;
    bound[static_cast<std::size_t>(i)] = t == GroupType::A ? k : (t == GroupType::B ? 2 * k + 1 : 2 * k);
  }
  std::vector<std::vector<int>> out;
  std::vector<int> alpha(static_cast<std::size_t>(n), 0);
  while (true) {
    out.push_back(alpha);
    int i = n - 1;
    while (i >= 0 && alpha[static_cast<std::size_t>(i)] == bound[static_cast<std::size_t>(i)]) {
      alpha[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) {
      break;
    }
    ++alpha[static_cast<std::size_t>(i)];
  }
  return out;
}

int expected_lemma1_sign(GroupType t, int n) {
  if (t == GroupType::B) {
    return n % 2 == 0 ? 1 : -1;
  }
  return 1;
}

}  // namespace

Polynomial apply_simple(const Polynomial& f, Letter g) {
  check_reach(f, g);
  PolynomialBuilder b(f.alphabet_size(), f.size());
  switch (g.kind) {
    case Letter::Kind::Simple: {
      const int i = g.index - 1;
      for (const auto& t : f.terms()) {
        Monomial m = t.monomial;
        const int a = m[i];
        const int c = m[i + 1];
        newton_quotient(a, c, [&](int p, int q, int sign) {
          m.set(i, p);
          m.set(i + 1, q);
          b.add(m, sign > 0 ? t.coeff : -t.coeff);
        });
      }
      break;
    }
    case Letter::Kind::Zero:
    case Letter::Kind::ZeroC: {
      const bool c_variant = g.kind == Letter::Kind::ZeroC;
      for (const auto& t : f.terms()) {
        const int a = t.monomial[0];
        if (a % 2 == 0) {
          continue;
        }
        Monomial m = t.monomial;
        m.set(0, a - 1);
        b.add(m, c_variant ? t.coeff : t.coeff * Dyadic(-2));
      }
      break;
    }
    case Letter::Kind::Heart: {
      // With u = x_1, v = -x_2 the generator swaps u and v and the denominator is -(u - v).
      for (const auto& t : f.terms()) {
        Monomial m = t.monomial;
        const int a = m[0];
        const int c = m[1];
        const int outer = (c + 1) % 2 == 0 ? 1 : -1;
        newton_quotient(a, c, [&](int p, int q, int sign) {
          m.set(0, p);
          m.set(1, q);
          const int s = outer * sign * (q % 2 == 0 ? 1 : -1);
          b.add(m, s > 0 ? t.coeff : -t.coeff);
        });
      }
      break;
    }
  }
  return b.build();
}

Polynomial apply_simple_by_division(const Polynomial& f, Letter g) {
  check_reach(f, g);
  const int n = f.alphabet_size();
  const Letter group_letter = g.kind == Letter::Kind::ZeroC ? Letter::zero() : g;
  const SignedPermutation s = generator(group_letter, g.reach());
  const Polynomial image = act_block(f, s, 0);
  Polynomial denom(n);
  switch (g.kind) {
    case Letter::Kind::Simple:
      denom = Polynomial::variable(g.index, n) - Polynomial::variable(g.index + 1, n);
      break;
    case Letter::Kind::Zero:
      denom = -Polynomial::variable(1, n);
      break;
    case Letter::Kind::ZeroC:
      denom = Polynomial::variable(1, n) * Dyadic(2);
      break;
    case Letter::Kind::Heart:
      denom = -(Polynomial::variable(1, n) + Polynomial::variable(2, n));
      break;
  }
  return exact_divide(f - image, denom);
}

Polynomial apply_word(const Polynomial& f, const GeneratorWord& w) {
  Polynomial cur = f;
  for (const auto& l : w.letters()) {
    if (cur.is_zero()) {
      break;
    }
    cur = apply_simple(cur, l);
  }
  return cur;
}

Polynomial apply_element(const Polynomial& f, const SignedPermutation& w, GroupType t) {
  if (w.size() > f.alphabet_size()) {
    throw AlphabetMismatch("group element larger than the alphabet");
  }
  return apply_word(f, reduced_word(w, t));
}

GeneratorWord nabla_B_word(int k, int n) {
  if (k < 0 || k > n) {
    throw RangeError("nablaB(k) needs 0 <= k <= n");
  }
  std::vector<Letter> letters;
  for (int r = 0; r < k; ++r) {
    letters.push_back(Letter::zero());
    for (int i = 1; i <= n - 1 - r; ++i) {
      letters.push_back(Letter::simple(i));
    }
  }
  return GeneratorWord(std::move(letters), n);
}

GeneratorWord nabla_D_word(int k, int n) {
  if (k < 0 || 2 * k > n) {
    throw RangeError("nablaD(k) needs 0 <= 2k <= n");
  }
  std::vector<Letter> letters;
  for (int r = 0; r < k; ++r) {
    letters.push_back(Letter::heart());
    for (int i = 2; i <= n - 1 - 2 * r; ++i) {
      letters.push_back(Letter::simple(i));
    }
    for (int i = 1; i <= n - 2 - 2 * r; ++i) {
      letters.push_back(Letter::simple(i));
    }
  }
  return GeneratorWord(std::move(letters), n);
}

GeneratorWord partial_v_word(int n) { return nabla_D_word(n / 2, n); }

Polynomial nabla_B(const Polynomial& f, int k, int n) { return apply_word(f, nabla_B_word(k, n)); }
Polynomial nabla_D(const Polynomial& f, int k, int n) { return apply_word(f, nabla_D_word(k, n)); }
Polynomial partial_v(const Polynomial& f, int n) { return apply_word(f, partial_v_word(n)); }

Polynomial antisymmetrize(const Polynomial& f, GroupType t, int n) {
  if (f.alphabet_size() != n) {
    throw AlphabetMismatch("antisymmetrizer rank differs from the alphabet");
  }
  return antisymmetrize_with(f, signed_group(t, n));
}

Polynomial delta(GroupType t, int n) {
  Polynomial p = Polynomial::constant(1, n);
  auto x = [n](int i) { return Polynomial::variable(i, n); };
  if (t == GroupType::A) {
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        p *= x(i) - x(j);
      }
    }
    return p;
  }
  if (t == GroupType::B) {
    for (int i = 1; i <= n; ++i) {
      p *= x(i);
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j < i; ++j) {
      p *= x(i) * x(i) - x(j) * x(j);
    }
  }
  return p;
}

int lemma1_sign(GroupType t, int n) {
  const SignedGroup g = signed_group(t, n);
  const Polynomial d = delta(t, n);
  const SignedPermutation top = longest(t, n);
  int sign = 0;
  for (const auto& alpha : module_generators(t, n)) {
    const Polynomial m = Polynomial::monomial(alpha);
    const Polynomial lhs = exact_divide(antisymmetrize_with(m, g), d);
    const Polynomial rhs = apply_element(m, top, t);
    if (lhs.is_zero() && rhs.is_zero()) {
      continue;
    }
    int here = 0;
    if (lhs == rhs) {
      here = 1;
    } else if (lhs == -rhs) {
      here = -1;
    }
    if (here == 0 || (sign != 0 && here != sign)) {
      return 0;
    }
    sign = here;
  }
  return sign;
}

bool lemma1_check(GroupType t, int n) { return lemma1_sign(t, n) == expected_lemma1_sign(t, n); }

// ---------------------------------------------------------------------------

std::string PlanarDisplay::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r > 0) {
      out += '/';
    }
    std::string row;
    for (int i = 0; i < rows[r].offset; ++i) {
      row += row.empty() ? "." : " .";
    }
    for (const auto& l : rows[r].letters) {
      row += row.empty() ? l.to_string() : " " + l.to_string();
    }
    out += row;
  }
  return out;
}

PlanarDisplay parse_display(std::string_view text, int n) {
  PlanarDisplay d;
  d.n = n;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t slash = text.find('/', start);
    const std::string_view row_text = text.substr(start, slash == std::string_view::npos ? text.npos : slash - start);
    DisplayRow row;
    std::istringstream in{std::string(row_text)};
    std::string token;
    bool seen_letter = false;
    while (in >> token) {
      if (token == "." || token == "·") {
        if (seen_letter) {
          throw ParseError("offset dot after a letter in display row", start);
        }
        ++row.offset;
        continue;
      }
      seen_letter = true;
      const Letter l = Letter::parse(token);
      if (l.reach() > n) {
        throw ParseError("letter " + token + " invalid for n=" + std::to_string(n), start);
      }
      row.letters.push_back(l);
    }
    if (row.letters.empty()) {
      throw ParseError("empty display row", start);
    }
    d.rows.push_back(std::move(row));
    if (slash == std::string_view::npos) {
      break;
    }
    start = slash + 1;
  }
  return d;
}

GeneratorWord row_reading(const PlanarDisplay& d) {
  std::vector<Letter> letters;
  for (const auto& row : d.rows) {
    letters.insert(letters.end(), row.letters.begin(), row.letters.end());
  }
  return GeneratorWord(std::move(letters), d.n);
}

GeneratorWord column_reading(const PlanarDisplay& d) {
  int width = 0;
  for (const auto& row : d.rows) {
    width = std::max(width, row.offset + static_cast<int>(row.letters.size()));
  }
  std::vector<Letter> letters;
  for (int c = 0; c < width; ++c) {
    for (const auto& row : d.rows) {
      const int k = c - row.offset;
      if (k >= 0 && k < static_cast<int>(row.letters.size())) {
        letters.push_back(row.letters[static_cast<std::size_t>(k)]);
      }
    }
  }
  return GeneratorWord(std::move(letters), d.n);
}

bool same_element(const GeneratorWord& a, const GeneratorWord& b) {
  return a.alphabet_size() == b.alphabet_size() && evaluate(a) == evaluate(b);
}

bool congruent(const GeneratorWord& a, const GeneratorWord& b, GroupType t) {
  return same_element(a, b) && is_reduced(a, t) && is_reduced(b, t);
}

}  // namespace schubop
