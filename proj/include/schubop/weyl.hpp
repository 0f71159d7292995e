#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace schubop {

enum class GroupType { A, B, D };

char to_char(GroupType t);
GroupType parse_group_type(std::string_view text);

/// Element of S_n, B_n or D_n coded by the vector [1,...,n]w; negative
/// entries stand for barred letters.
class SignedPermutation {
 public:
  SignedPermutation() = default;
  /// Validates that |image| is a permutation of {1..n}.
  explicit SignedPermutation(std::vector<int> image);

  static SignedPermutation identity(int n);

  int size() const noexcept { return static_cast<int>(image_.size()); }
  /// 1-based access to the one-line image.
  int operator()(int position) const { return image_[static_cast<std::size_t>(position - 1)]; }
  std::span<const int> image() const noexcept { return image_; }

  int negatives() const noexcept;
  bool in_group(GroupType t) const noexcept;
  /// Throws MembershipError when not in the group of type t.
  void require(GroupType t) const;

  bool is_identity() const noexcept;

  /// Embeds into rank m >= size() by fixing the extra letters.
  SignedPermutation embedded(int m) const;

  std::string to_string() const;  // "[2,-1,3]"
  static SignedPermutation parse(std::string_view text);

  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  std::vector<int> image_;
};

/// [1..n](uv) = ([1..n]u)v.
SignedPermutation compose(const SignedPermutation& u, const SignedPermutation& v);
SignedPermutation inverse(const SignedPermutation& u);

/// Generator letters: s_heart, s_0, the operator-only 0^C, and s_1 .. s_{n-1}.
struct Letter {
  enum class Kind : std::uint8_t { Heart, Zero, ZeroC, Simple };

  Kind kind = Kind::Simple;
  int index = 1;  // meaningful for Simple only

  static Letter heart() { return {Kind::Heart, 0}; }
  static Letter zero() { return {Kind::Zero, 0}; }
  static Letter zero_c() { return {Kind::ZeroC, 0}; }
  static Letter simple(int i) { return {Kind::Simple, i}; }

  std::string to_string() const;  // "h", "0", "0c", "3"
  static Letter parse(std::string_view token);

  /// Largest variable index touched by the letter.
  int reach() const noexcept { return kind == Kind::Simple ? index + 1 : (kind == Kind::Heart ? 2 : 1); }

  friend bool operator==(const Letter&, const Letter&) = default;
};

class GeneratorWord {
 public:
  GeneratorWord() = default;
  GeneratorWord(std::vector<Letter> letters, int n);

  int alphabet_size() const noexcept { return n_; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  GeneratorWord& append(const GeneratorWord& other);
  GeneratorWord& push_back(Letter l);

  /// Space-separated letters, e.g. "h 2 1".
  std::string to_string() const;
  static GeneratorWord parse(std::string_view text, int n);

  friend bool operator==(const GeneratorWord&, const GeneratorWord&) = default;

 private:
  std::vector<Letter> letters_;
  int n_ = 1;
};

/// The group element s for a generator letter (0^C has none).
SignedPermutation generator(Letter l, int n);
/// Product of the generators of a word, left to right.
SignedPermutation evaluate(const GeneratorWord& w);
/// Generators of the group of type t and rank n, lowest index first.
std::vector<Letter> generators(GroupType t, int n);

int length(const SignedPermutation& w, GroupType t);
bool is_right_descent(const SignedPermutation& w, Letter s);
/// Greedy lowest-index right descent; length equals length(w, t).
GeneratorWord reduced_word(const SignedPermutation& w, GroupType t);
/// Up to limit distinct reduced words of w, in a deterministic order.
std::vector<GeneratorWord> reduced_words(const SignedPermutation& w, GroupType t, std::size_t limit);
/// True when the word has no shorter expression in the group of type t.
bool is_reduced(const GeneratorWord& word, GroupType t);

/// Lehmer code c_i = #{j > i : w(j) < w(i)}.
std::vector<int> code(const SignedPermutation& w);
/// Permutation with the given Lehmer code; alpha_i <= n - i is required.
SignedPermutation code_inverse(std::span<const int> alpha, int n);
/// alpha -> code(code_inverse(alpha) * omega).
std::vector<int> involution_prime(std::span<const int> alpha, int n);

inline constexpr int kDefaultEnumerationBound = 6;

/// All elements, in BFS order from the identity.
std::vector<SignedPermutation> enumerate_group(GroupType t, int n, int bound = kDefaultEnumerationBound);

enum class Distinguished { Longest, Upsilon };
SignedPermutation distinguished(GroupType t, int n, Distinguished which);

inline SignedPermutation longest(GroupType t, int n) { return distinguished(t, n, Distinguished::Longest); }

}  // namespace schubop
