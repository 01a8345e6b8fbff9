#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace altgraph {

enum class Parity { even, odd };

inline Parity operator^(Parity a, Parity b) {
  return a == b ? Parity::even : Parity::odd;
}

// A permutation of the points 1..degree acting on the right: i^(pq) = (i^p)^q.
//
// Points are 1-based at the public boundary and 0-based in the stored image
// table. Degree is limited to 255.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree);  // identity

  // images[i-1] = i^p, 1-based. Throws std::invalid_argument unless a bijection.
  static Permutation from_images(std::span<const int> images);
  static Permutation from_images(std::initializer_list<int> images);
  // Product of the given cycles (1-based points), applied left to right.
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);
  // Parses cycle notation such as "(1 2 3)(4 5)" or "()"; commas are accepted.
  static Permutation parse(int degree, std::string_view text);
  // 0-based image table; no validation beyond size.
  static Permutation from_zero_based(std::vector<std::uint8_t> table);

  int degree() const { return static_cast<int>(images_.size()); }
  int image(int point) const { return images_[point - 1] + 1; }
  // 0-based view of the image table.
  std::span<const std::uint8_t> table() const { return images_; }

  bool is_identity() const;
  bool is_derangement() const;
  Parity parity() const;

  std::vector<int> image_table() const;  // 1-based
  std::vector<std::vector<int>> cycles() const;  // nontrivial cycles, 1-based
  std::string to_string() const;                 // cycle notation, "()" for identity

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint8_t> images_;
};

// i^(compose(p, q)) = (i^p)^q.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }
Permutation inverse(const Permutation& p);
Permutation power(const Permutation& p, int exponent);
// t^-1 p t.
Permutation conjugate(const Permutation& p, const Permutation& t);
inline Parity parity(const Permutation& p) { return p.parity(); }
inline bool is_derangement(const Permutation& p) { return p.is_derangement(); }

// The n-cycle (1 2 ... n).
Permutation long_cycle(int n);
Permutation transposition(int degree, int a, int b);

inline constexpr int kMaxEnumerationDegree = 8;

// All of S_n in lexicographic order of image tables. 1 <= n <= 8.
std::vector<Permutation> enumerate_symmetric(int n);
// Even permutations in lexicographic order of image tables. 1 <= n <= 8.
std::vector<Permutation> enumerate_alternating(int n);
// E_n: even fixed-point-free permutations, lexicographic. 2 <= n <= 8.
std::vector<Permutation> enumerate_even_derangements(int n);

// Position of an element in the lexicographic enumeration of A_n.
struct ElementIndex {
  std::uint32_t value = 0;
  friend auto operator<=>(const ElementIndex&, const ElementIndex&) = default;
};

// A_n with a fixed lexicographic indexing and table-driven arithmetic.
class AlternatingGroup {
 public:
  explicit AlternatingGroup(int n);

  int degree() const { return n_; }
  std::size_t order() const { return elements_.size(); }
  std::span<const Permutation> elements() const { return elements_; }
  const Permutation& element(ElementIndex i) const { return elements_[i.value]; }
  ElementIndex index_of(const Permutation& p) const;  // throws on odd or wrong degree
  ElementIndex identity() const { return ElementIndex{0}; }

  // a then b (right action product).
  ElementIndex multiply(ElementIndex a, ElementIndex b) const;
  ElementIndex inverse(ElementIndex a) const { return ElementIndex{inverse_[a.value]}; }
  bool is_even_derangement(ElementIndex a) const { return derangement_[a.value] != 0; }
  // Image of a 1-based point under element a.
  int image(ElementIndex a, int point) const { return elements_[a.value].image(point); }

 private:
  std::size_t lex_rank(std::span<const std::uint8_t> table) const;

  int n_;
  std::vector<Permutation> elements_;
  std::vector<std::uint32_t> rank_to_index_;  // S_n lex rank -> A_n index, or UINT32_MAX
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint8_t> derangement_;
  std::vector<std::uint16_t> mul_;  // row-major |A_n|^2, present for n <= 7
};

}  // namespace altgraph
