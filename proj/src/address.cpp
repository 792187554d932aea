#include "pn/address.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "pn/errors.hpp"

namespace pn {

void check_symbol(int s, int n) {
  if (s < 0 || s >= n)
    throw std::invalid_argument("symbol " + std::to_string(s) +
                                " out of range for alphabet size " + std::to_string(n));
}

void check_word(const Word& w, int n) {
  for (int s : w) check_symbol(s, n);
}

namespace {

// Index of the last prefix symbol differing from the tail, or -1 if none.
int last_non_tail(const Word& prefix, int tail) {
  for (int i = static_cast<int>(prefix.size()) - 1; i >= 0; --i)
    if (prefix[i] != tail) return i;
  return -1;
}

}  // namespace

bool is_canonical(const Word& prefix, int tail) {
  int j = last_non_tail(prefix, tail);
  return j < 0 || prefix[j] < tail;
}

VertexAddress canonicalize(Word prefix, int tail, int n) {
  check_word(prefix, n);
  check_symbol(tail, n);
  int j = last_non_tail(prefix, tail);
  if (j >= 0 && prefix[j] > tail) {
    // w q p p ... (tail p)  ->  w p q q ... (tail q), q > p
    int q = prefix[j];
    int p = tail;
    prefix[j] = p;
    std::fill(prefix.begin() + j + 1, prefix.end(), q);
    tail = q;
  }
  return VertexAddress{std::move(prefix), tail};
}

std::vector<std::pair<Word, int>> representations(const VertexAddress& v) {
  std::vector<std::pair<Word, int>> out;
  out.emplace_back(v.prefix, v.tail);
  int j = last_non_tail(v.prefix, v.tail);
  if (j >= 0) {
    Word other = v.prefix;
    int q = other[j];
    other[j] = v.tail;
    std::fill(other.begin() + j + 1, other.end(), q);
    out.emplace_back(std::move(other), q);
  }
  return out;
}

bool is_boundary(const VertexAddress& v) {
  return last_non_tail(v.prefix, v.tail) < 0;
}

VertexAddress lift(const VertexAddress& v) {
  VertexAddress out = v;
  out.prefix.push_back(v.tail);
  return out;
}

std::vector<VertexAddress> cell_corners(const CellId& c, int n) {
  std::vector<VertexAddress> out;
  out.reserve(n);
  for (int k = 0; k < n; ++k) out.push_back(canonicalize(c.word, k, n));
  return out;
}

std::size_t vertex_count(int n, int m) {
  if (n < 2 || m < 0) throw std::invalid_argument("vertex_count: need n >= 2, m >= 0");
  // n + n(n^m - 1)/2 with overflow checks
  unsigned long long pw = 1;
  for (int i = 0; i < m; ++i) {
    if (pw > std::numeric_limits<unsigned long long>::max() / static_cast<unsigned>(n))
      throw CapExceeded("vertex_count: n^m overflows");
    pw *= static_cast<unsigned>(n);
  }
  unsigned long long half = static_cast<unsigned>(n) * (pw - 1) / 2;
  return static_cast<std::size_t>(n + half);
}

std::vector<VertexAddress> enumerate_vertices(int n, int m, std::size_t cap) {
  std::size_t expected = vertex_count(n, m);
  if (expected > cap)
    throw CapExceeded("enumerate_vertices: |V_m| = " + std::to_string(expected) +
                      " exceeds cap " + std::to_string(cap));
  std::vector<VertexAddress> out;
  out.reserve(expected);
  // Odometer over prefixes in lexicographic order; for each prefix the
  // canonical tails come out in ascending order, so the result is sorted.
  Word prefix(m, 0);
  while (true) {
    for (int k = 0; k < n; ++k)
      if (is_canonical(prefix, k)) out.push_back(VertexAddress{prefix, k});
    int i = m - 1;
    while (i >= 0 && prefix[i] == n - 1) prefix[i--] = 0;
    if (i < 0) break;
    ++prefix[i];
  }
  return out;
}

std::vector<Word> enumerate_cells(int n, int m) {
  std::vector<Word> out;
  Word w(m, 0);
  while (true) {
    out.push_back(w);
    int i = m - 1;
    while (i >= 0 && w[i] == n - 1) w[i--] = 0;
    if (i < 0) break;
    ++w[i];
  }
  return out;
}

std::string format_address(const VertexAddress& v, int n) {
  std::ostringstream os;
  const char* sep = n > 10 ? "," : "";
  for (std::size_t i = 0; i < v.prefix.size(); ++i) {
    if (i) os << sep;
    os << v.prefix[i];
  }
  os << '|' << v.tail;
  return os.str();
}

VertexAddress parse_address(const std::string& s, int n) {
  auto bar = s.find('|');
  if (bar == std::string::npos)
    throw std::invalid_argument("address '" + s + "': missing '|'");
  std::string head = s.substr(0, bar);
  std::string tail_str = s.substr(bar + 1);
  auto parse_int = [&](const std::string& t) {
    int value = 0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc{} || p != t.data() + t.size())
      throw std::invalid_argument("address '" + s + "': bad symbol '" + t + "'");
    return value;
  };
  Word prefix;
  if (n > 10) {
    std::size_t pos = 0;
    while (pos < head.size()) {
      auto comma = head.find(',', pos);
      if (comma == std::string::npos) comma = head.size();
      prefix.push_back(parse_int(head.substr(pos, comma - pos)));
      pos = comma + 1;
    }
  } else {
    for (char c : head) {
      if (c < '0' || c > '9')
        throw std::invalid_argument("address '" + s + "': bad symbol");
      prefix.push_back(c - '0');
    }
  }
  int tail = parse_int(tail_str);
  check_word(prefix, n);
  check_symbol(tail, n);
  if (!is_canonical(prefix, tail))
    return canonicalize(std::move(prefix), tail, n);
  return VertexAddress{std::move(prefix), tail};
}

}  // namespace pn
