#include "schubop/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>

#include "schubop/error.hpp"

namespace schubop {

Partition::Partition(std::vector<int> parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) {
      throw RangeError("negative part in partition");
    }
    if (i > 0 && parts[i] > parts[i - 1]) {
      throw RangeError("partition parts must be weakly decreasing");
    }
  }
  while (!parts.empty() && parts.back() == 0) {
    parts.pop_back();
  }
  parts_ = std::move(parts);
}

int Partition::size() const noexcept {
  int s = 0;
  for (int p : parts_) {
    s += p;
  }
  return s;
}

bool Partition::is_strict() const noexcept {
  return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
}

bool Partition::contains_part(int p) const noexcept { return position_of(p) != 0; }

int Partition::position_of(int p) const noexcept {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == p) {
      return static_cast<int>(i) + 1;
    }
  }
  return 0;
}

bool Partition::contained_in(const Partition& other) const noexcept {
  if (length() > other.length()) {
    return false;
  }
  for (int i = 0; i < length(); ++i) {
    if (parts_[static_cast<std::size_t>(i)] > other[i]) {
      return false;
    }
  }
  return true;
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
  };
  skip();
  char close = '\0';
  if (i < text.size() && (text[i] == '(' || text[i] == '[')) {
    close = text[i] == '(' ? ')' : ']';
    ++i;
  }
  skip();
  while (i < text.size() && text[i] != close) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc{}) {
      throw ParseError("expected a part", i);
    }
    parts.push_back(v);
    i = static_cast<std::size_t>(ptr - text.data());
    skip();
    if (i < text.size() && text[i] == ',') {
      ++i;
      skip();
    } else {
      break;
    }
  }
  if (close != '\0') {
    if (i >= text.size() || text[i] != close) {
      throw ParseError(std::string("expected '") + close + "'", i);
    }
    ++i;
  }
  skip();
  if (i != text.size()) {
    throw ParseError("trailing characters after partition", i);
  }
  try {
    return Partition(std::move(parts));
  } catch (const RangeError& e) {
    throw ParseError(e.what(), 0);
  }
}

StrictPartition::StrictPartition(std::vector<int> parts) : Partition(std::move(parts)) {
  if (!is_strict()) {
    throw RangeError("partition " + to_string() + " is not strict");
  }
}

StrictPartition::StrictPartition(const Partition& p) : StrictPartition(p.parts()) {}

StrictPartition StrictPartition::without(const std::vector<int>& erased) const {
  std::vector<int> out;
  for (int p : parts()) {
    if (std::find(erased.begin(), erased.end(), p) == erased.end()) {
      out.push_back(p);
    }
  }
  for (int e : erased) {
    if (!contains_part(e)) {
      throw RangeError("part " + std::to_string(e) + " not in " + to_string());
    }
  }
  return StrictPartition(std::move(out));
}

StrictPartition staircase(int k) {
  std::vector<int> parts;
  for (int i = k; i >= 1; --i) {
    parts.push_back(i);
  }
  return StrictPartition(std::move(parts));
}

StrictPartition complement_in_staircase(const StrictPartition& I, int k) {
  if (I.largest() > k) {
    throw RangeError(I.to_string() + " is not contained in rho(" + std::to_string(k) + ")");
  }
  std::vector<int> parts;
  for (int i = k; i >= 1; --i) {
    if (!I.contains_part(i)) {
      parts.push_back(i);
    }
  }
  return StrictPartition(std::move(parts));
}

std::vector<StrictPartition> strict_partitions_in_staircase(int k) {
  std::vector<StrictPartition> out;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    std::vector<int> parts;
    for (int i = k; i >= 1; --i) {
      if (mask & (1u << (i - 1))) {
        parts.push_back(i);
      }
    }
    out.emplace_back(std::move(parts));
  }
  std::sort(out.begin(), out.end(), [](const StrictPartition& a, const StrictPartition& b) {
    if (a.size() != b.size()) {
      return a.size() < b.size();
    }
    return a.parts() < b.parts();
  });
  return out;
}

std::vector<Partition> partitions_in_box(int m, int parts, int max_part) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == parts) {
      return;
    }
    for (int p = std::min(cap, remaining); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  if (m >= 0) {
    rec(m, max_part);
  }
  return out;
}

long long binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) {
    return 0;
  }
  long long r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

}  // namespace schubop
