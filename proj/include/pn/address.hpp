#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace pn {

/// A finite word over the alphabet {0, ..., n-1}.
using Word = std::vector<int>;

/// Symbolic address of a vertex of V_m: the point whose symbol sequence is
/// the prefix followed by the tail symbol repeated forever. The level m is
/// the prefix length, stored explicitly; the same point at a different level
/// is a different value.
struct VertexAddress {
  Word prefix;
  int tail = 0;

  int level() const { return static_cast<int>(prefix.size()); }
  auto operator<=>(const VertexAddress&) const = default;
};

/// Identifies the m-cell obtained by applying the contractions named by the
/// word, in order, to the whole fractal.
struct CellId {
  Word word;
  int level() const { return static_cast<int>(word.size()); }
  auto operator<=>(const CellId&) const = default;
};

inline constexpr std::size_t kDefaultVertexCap = 5'000'000;

void check_symbol(int s, int n);
void check_word(const Word& w, int n);

/// True when (prefix, tail) is already the canonical representative:
/// either all prefix symbols equal the tail, or the last prefix symbol
/// differing from the tail is smaller than it.
bool is_canonical(const Word& prefix, int tail);

/// Canonical representative of the point prefix.(tail repeated). A point
/// w q p p ... with tail p and q != p has exactly two representations at this
/// level; the canonical one is the lexicographically smaller infinite symbol
/// sequence, i.e. the one carrying min(p, q) at the first differing position.
VertexAddress canonicalize(Word prefix, int tail, int n);

/// The one or two raw (prefix, tail) representations of a canonical address.
/// Boundary points have exactly one; every other point has two.
std::vector<std::pair<Word, int>> representations(const VertexAddress& v);

/// True iff the point is one of the n fixed points (all symbols equal).
bool is_boundary(const VertexAddress& v);

/// The same point re-expressed one level deeper (prefix extended by the tail
/// symbol). Preserves canonicity.
VertexAddress lift(const VertexAddress& v);

/// Canonical addresses of the n corners of the cell, i.e. the images of the
/// boundary points under the cell's contraction.
std::vector<VertexAddress> cell_corners(const CellId& c, int n);

/// Exact vertex count of V_m: n + n(n^m - 1)/2. Throws CapExceeded when the
/// count (or an intermediate power) leaves the representable range.
std::size_t vertex_count(int n, int m);

/// All canonical addresses of V_m in lexicographic (prefix, tail) order.
std::vector<VertexAddress> enumerate_vertices(int n, int m,
                                              std::size_t cap = kDefaultVertexCap);

/// All words of length m in lexicographic order (the n^m cells of level m).
std::vector<Word> enumerate_cells(int n, int m);

/// Textual syntax "a0a1...|k"; symbols comma-separated when n > 10.
/// A level-0 boundary point reads "|k".
std::string format_address(const VertexAddress& v, int n);
VertexAddress parse_address(const std::string& s, int n);

}  // namespace pn
