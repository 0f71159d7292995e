#include "schubop/weyl.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <set>
#include <sstream>

#include "schubop/error.hpp"

namespace schubop {
namespace {

void same_size(const SignedPermutation& u, const SignedPermutation& v) {
  if (u.size() != v.size()) {
    throw RangeError("signed permutations of sizes " + std::to_string(u.size()) + " and " + std::to_string(v.size()));
  }
}

int parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("expected integer, got '" + std::string(s) + "'", 0);
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

bool letter_in_group(Letter l, GroupType t) {
  switch (l.kind) {
    case Letter::Kind::Simple:
      return true;
    case Letter::Kind::Zero:
      return t == GroupType::B;
    case Letter::Kind::Heart:
      return t == GroupType::D;
    case Letter::Kind::ZeroC:
      return false;
  }
  return false;
}

}  // namespace

char to_char(GroupType t) {
  switch (t) {
    case GroupType::A:
      return 'A';
    case GroupType::B:
      return 'B';
    case GroupType::D:
      return 'D';
  }
  return '?';
}

GroupType parse_group_type(std::string_view text) {
  if (text == "A" || text == "a") return GroupType::A;
  if (text == "B" || text == "b") return GroupType::B;
  if (text == "D" || text == "d") return GroupType::D;
  throw ParseError("unknown group type '" + std::string(text) + "'", 0);
}

// ---------------------------------------------------------------------------

SignedPermutation::SignedPermutation(std::vector<int> image) : image_(std::move(image)) {
  const int n = size();
  if (n < 1) {
    throw MembershipError("empty signed permutation");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : image_) {
    const int a = std::abs(v);
    if (a < 1 || a > n || seen[static_cast<std::size_t>(a)]) {
      throw MembershipError("not a signed permutation: " + to_string());
    }
    seen[static_cast<std::size_t>(a)] = true;
  }
}

SignedPermutation SignedPermutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    v[static_cast<std::size_t>(i)] = i + 1;
  }
  return SignedPermutation(std::move(v));
}

int SignedPermutation::negatives() const noexcept {
  return static_cast<int>(std::count_if(image_.begin(), image_.end(), [](int v) { return v < 0; }));
}

bool SignedPermutation::in_group(GroupType t) const noexcept {
  switch (t) {
    case GroupType::A:
      return negatives() == 0;
    case GroupType::B:
      return true;
    case GroupType::D:
      return negatives() % 2 == 0;
  }
  return false;
}

void SignedPermutation::require(GroupType t) const {
  if (!in_group(t)) {
    throw MembershipError(to_string() + " is not in the group of type " + std::string(1, to_char(t)));
  }
}

bool SignedPermutation::is_identity() const noexcept {
  for (int i = 0; i < size(); ++i) {
    if (image_[static_cast<std::size_t>(i)] != i + 1) {
      return false;
    }
  }
  return true;
}

SignedPermutation SignedPermutation::embedded(int m) const {
  if (m < size()) {
    throw RangeError("cannot embed into a smaller rank");
  }
  std::vector<int> v = image_;
  for (int i = size() + 1; i <= m; ++i) {
    v.push_back(i);
  }
  return SignedPermutation(std::move(v));
}

std::string SignedPermutation::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += std::to_string(image_[i]);
  }
  return out + "]";
}

SignedPermutation SignedPermutation::parse(std::string_view text) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw ParseError("signed permutation must be written [a,b,...]", 0);
  }
  text = text.substr(1, text.size() - 2);
  std::vector<int> v;
  while (!text.empty()) {
    const auto comma = text.find(',');
    v.push_back(parse_int(trim(text.substr(0, comma))));
    if (comma == std::string_view::npos) {
      break;
    }
    text.remove_prefix(comma + 1);
  }
  return SignedPermutation(std::move(v));
}

SignedPermutation compose(const SignedPermutation& u, const SignedPermutation& v) {
  same_size(u, v);
  std::vector<int> out(static_cast<std::size_t>(u.size()));
  for (int j = 1; j <= v.size(); ++j) {
    const int t = v(j);
    out[static_cast<std::size_t>(j - 1)] = t < 0 ? -u(-t) : u(t);
  }
  return SignedPermutation(std::move(out));
}

SignedPermutation inverse(const SignedPermutation& u) {
  std::vector<int> out(static_cast<std::size_t>(u.size()));
  for (int j = 1; j <= u.size(); ++j) {
    const int t = u(j);
    out[static_cast<std::size_t>(std::abs(t) - 1)] = t < 0 ? -j : j;
  }
  return SignedPermutation(std::move(out));
}

// ---------------------------------------------------------------------------

std::string Letter::to_string() const {
  switch (kind) {
    case Kind::Heart:
      return "h";
    case Kind::Zero:
      return "0";
    case Kind::ZeroC:
      return "0c";
    case Kind::Simple:
      return std::to_string(index);
  }
  return "?";
}

Letter Letter::parse(std::string_view token) {
  if (token == "h" || token == "♡") return heart();
  if (token == "0") return zero();
  if (token == "0c" || token == "0C") return zero_c();
  const int i = parse_int(token);
  if (i < 1) {
    throw ParseError("invalid generator letter '" + std::string(token) + "'", 0);
  }
  return simple(i);
}

GeneratorWord::GeneratorWord(std::vector<Letter> letters, int n) : letters_(std::move(letters)), n_(n) {
  if (n < 1) {
    throw RangeError("alphabet size must be positive");
  }
  for (const auto& l : letters_) {
    if (l.reach() > n || (l.kind == Letter::Kind::Heart && n < 2)) {
      throw RangeError("letter " + l.to_string() + " invalid for n=" + std::to_string(n));
    }
  }
}

GeneratorWord& GeneratorWord::append(const GeneratorWord& other) {
  if (other.n_ != n_) {
    throw RangeError("words over different alphabets");
  }
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  return *this;
}

GeneratorWord& GeneratorWord::push_back(Letter l) {
  if (l.reach() > n_) {
    throw RangeError("letter " + l.to_string() + " invalid for n=" + std::to_string(n_));
  }
  letters_.push_back(l);
  return *this;
}

std::string GeneratorWord::to_string() const {
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) {
      out += ' ';
    }
    out += l.to_string();
  }
  return out;
}

GeneratorWord GeneratorWord::parse(std::string_view text, int n) {
  std::vector<Letter> letters;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    letters.push_back(Letter::parse(token));
  }
  return GeneratorWord(std::move(letters), n);
}

SignedPermutation generator(Letter l, int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    v[static_cast<std::size_t>(i)] = i + 1;
  }
  switch (l.kind) {
    case Letter::Kind::Simple:
      if (l.index < 1 || l.index >= n) {
        throw RangeError("s_" + std::to_string(l.index) + " invalid for n=" + std::to_string(n));
      }
      std::swap(v[static_cast<std::size_t>(l.index - 1)], v[static_cast<std::size_t>(l.index)]);
      break;
    case Letter::Kind::Zero:
      v[0] = -1;
      break;
    case Letter::Kind::Heart:
      if (n < 2) {
        throw RangeError("s_h needs n >= 2");
      }
      v[0] = -2;
      v[1] = -1;
      break;
    case Letter::Kind::ZeroC:
      throw RangeError("0c is an operator letter without a group element");
  }
  return SignedPermutation(std::move(v));
}

SignedPermutation evaluate(const GeneratorWord& w) {
  SignedPermutation cur = SignedPermutation::identity(w.alphabet_size());
  for (const auto& l : w.letters()) {
    cur = compose(cur, generator(l, w.alphabet_size()));
  }
  return cur;
}

std::vector<Letter> generators(GroupType t, int n) {
  std::vector<Letter> out;
  if (t == GroupType::B) {
    out.push_back(Letter::zero());
  } else if (t == GroupType::D && n >= 2) {
    out.push_back(Letter::heart());
  }
  for (int i = 1; i < n; ++i) {
    out.push_back(Letter::simple(i));
  }
  return out;
}

int length(const SignedPermutation& w, GroupType t) {
  w.require(t);
  const int n = w.size();
  int inv = 0;
  int nsp = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      inv += w(i) > w(j);
      nsp += w(i) + w(j) < 0;
    }
  }
  switch (t) {
    case GroupType::A:
      return inv;
    case GroupType::B:
      return inv + nsp + w.negatives();
    case GroupType::D:
      return inv + nsp;
  }
  return 0;
}

bool is_right_descent(const SignedPermutation& w, Letter s) {
  switch (s.kind) {
    case Letter::Kind::Simple:
      return w(s.index) > w(s.index + 1);
    case Letter::Kind::Zero:
      return w(1) < 0;
    case Letter::Kind::Heart:
      return w(1) + w(2) < 0;
    case Letter::Kind::ZeroC:
      break;
  }
  throw RangeError("0c is not a group generator");
}

GeneratorWord reduced_word(const SignedPermutation& w, GroupType t) {
  w.require(t);
  const int n = w.size();
  const auto gens = generators(t, n);
  std::vector<Letter> rev;
  SignedPermutation cur = w;
  while (!cur.is_identity()) {
    bool found = false;
    for (const auto& s : gens) {
      if (is_right_descent(cur, s)) {
        rev.push_back(s);
        cur = compose(cur, generator(s, n));
        found = true;
        break;
      }
    }
    if (!found) {
      throw MembershipError("no right descent found for " + cur.to_string());
    }
  }
  std::reverse(rev.begin(), rev.end());
  return GeneratorWord(std::move(rev), n);
}

namespace {

void collect_reduced(const SignedPermutation& w, const std::vector<Letter>& gens, std::vector<Letter>& suffix,
                     std::vector<GeneratorWord>& out, std::size_t limit) {
  if (out.size() >= limit) {
    return;
  }
  if (w.is_identity()) {
    out.emplace_back(std::vector<Letter>(suffix.rbegin(), suffix.rend()), w.size());
    return;
  }
  for (const auto& s : gens) {
    if (is_right_descent(w, s)) {
      suffix.push_back(s);
      collect_reduced(compose(w, generator(s, w.size())), gens, suffix, out, limit);
      suffix.pop_back();
    }
  }
}

}  // namespace

std::vector<GeneratorWord> reduced_words(const SignedPermutation& w, GroupType t, std::size_t limit) {
  w.require(t);
  std::vector<GeneratorWord> out;
  std::vector<Letter> suffix;
  collect_reduced(w, generators(t, w.size()), suffix, out, limit);
  return out;
}

bool is_reduced(const GeneratorWord& word, GroupType t) {
  for (const auto& l : word.letters()) {
    if (!letter_in_group(l, t)) {
      return false;
    }
  }
  return static_cast<std::size_t>(length(evaluate(word), t)) == word.length();
}

// ---------------------------------------------------------------------------

std::vector<int> code(const SignedPermutation& w) {
  w.require(GroupType::A);
  const int n = w.size();
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      c[static_cast<std::size_t>(i - 1)] += w(j) < w(i);
    }
  }
  return c;
}

SignedPermutation code_inverse(std::span<const int> alpha, int n) {
  if (static_cast<int>(alpha.size()) > n) {
    throw RangeError("code longer than n");
  }
  std::vector<int> remaining(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    remaining[static_cast<std::size_t>(i)] = i + 1;
  }
  std::vector<int> image;
  for (int i = 0; i < n; ++i) {
    const int a = i < static_cast<int>(alpha.size()) ? alpha[static_cast<std::size_t>(i)] : 0;
    if (a < 0 || a > n - 1 - i) {
      throw RangeError("not a code: entry " + std::to_string(i + 1) + " exceeds n-" + std::to_string(i + 1));
    }
    image.push_back(remaining[static_cast<std::size_t>(a)]);
    remaining.erase(remaining.begin() + a);
  }
  return SignedPermutation(std::move(image));
}

std::vector<int> involution_prime(std::span<const int> alpha, int n) {
  return code(compose(code_inverse(alpha, n), longest(GroupType::A, n)));
}

std::vector<SignedPermutation> enumerate_group(GroupType t, int n, int bound) {
  if (n < 1 || n > bound) {
    throw RangeError("group enumeration for n=" + std::to_string(n) + " exceeds bound " + std::to_string(bound));
  }
  const auto gens = generators(t, n);
  std::vector<SignedPermutation> gen_elems;
  for (const auto& s : gens) {
    gen_elems.push_back(generator(s, n));
  }
  std::vector<SignedPermutation> out{SignedPermutation::identity(n)};
  std::set<SignedPermutation> seen(out.begin(), out.end());
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& s : gen_elems) {
      SignedPermutation next = compose(out[head], s);
      if (seen.insert(next).second) {
        out.push_back(std::move(next));
      }
    }
  }
  return out;
}

SignedPermutation distinguished(GroupType t, int n, Distinguished which) {
  std::vector<int> v(static_cast<std::size_t>(n));
  if (which == Distinguished::Upsilon) {
    if (t != GroupType::D) {
      throw RangeError("upsilon is defined for type D only");
    }
    return compose(longest(GroupType::A, n), longest(GroupType::D, n));
  }
  for (int i = 0; i < n; ++i) {
    switch (t) {
      case GroupType::A:
        v[static_cast<std::size_t>(i)] = n - i;
        break;
      case GroupType::B:
        v[static_cast<std::size_t>(i)] = -(i + 1);
        break;
      case GroupType::D:
        v[static_cast<std::size_t>(i)] = (n % 2 == 1 && i == 0) ? 1 : -(i + 1);
        break;
    }
  }
  return SignedPermutation(std::move(v));
}

}  // namespace schubop
