#include "altgraph/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "altgraph/errors.hpp"

namespace altgraph {

namespace {

void require_same_degree(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("permutation degree mismatch: " + std::to_string(p.degree()) +
                                " vs " + std::to_string(q.degree()));
}

void require_enumeration_degree(int n, int lo) {
  if (n < lo || n > kMaxEnumerationDegree)
    throw ResourceLimit("enumeration degree " + std::to_string(n) + " outside [" +
                        std::to_string(lo) + ", " + std::to_string(kMaxEnumerationDegree) + "]");
}

}  // namespace

Permutation::Permutation(int degree) {
  if (degree < 0 || degree > 255) throw std::invalid_argument("permutation degree out of range");
  images_.resize(static_cast<std::size_t>(degree));
  std::iota(images_.begin(), images_.end(), std::uint8_t{0});
}

Permutation Permutation::from_images(std::span<const int> images) {
  if (images.size() > 255) throw std::invalid_argument("permutation degree out of range");
  std::vector<std::uint8_t> table(images.size());
  std::vector<bool> seen(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    int v = images[i];
    if (v < 1 || v > static_cast<int>(images.size()) || seen[v - 1])
      throw std::invalid_argument("image table is not a bijection of 1..n");
    seen[v - 1] = true;
    table[i] = static_cast<std::uint8_t>(v - 1);
  }
  return from_zero_based(std::move(table));
}

Permutation Permutation::from_images(std::initializer_list<int> images) {
  return from_images(std::span<const int>(images.begin(), images.size()));
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Permutation result(degree);
  for (const auto& cycle : cycles) {
    if (cycle.empty()) continue;
    std::vector<bool> seen(static_cast<std::size_t>(degree), false);
    Permutation c(degree);
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      int a = cycle[k];
      if (a < 1 || a > degree) throw std::invalid_argument("cycle point out of range");
      if (seen[a - 1]) throw std::invalid_argument("repeated point in cycle");
      seen[a - 1] = true;
      int b = cycle[(k + 1) % cycle.size()];
      c.images_[a - 1] = static_cast<std::uint8_t>(b - 1);
    }
    result = compose(result, c);
  }
  return result;
}

Permutation Permutation::parse(int degree, std::string_view text) {
  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') throw std::invalid_argument("cycle notation: expected '('");
    ++pos;
    std::vector<int> cycle;
    while (true) {
      skip_space();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos >= text.size()) throw std::invalid_argument("cycle notation: unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw std::invalid_argument("cycle notation: expected a point");
      int v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        v = v * 10 + (text[pos++] - '0');
      cycle.push_back(v);
    }
    cycles.push_back(std::move(cycle));
    skip_space();
  }
  return from_cycles(degree, cycles);
}

Permutation Permutation::from_zero_based(std::vector<std::uint8_t> table) {
  Permutation p;
  p.images_ = std::move(table);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

bool Permutation::is_derangement() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] == i) return false;
  return true;
}

Parity Permutation::parity() const {
  // sign = (-1)^(n - #cycles)
  std::vector<bool> seen(images_.size(), false);
  std::size_t cycle_count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    ++cycle_count;
    for (std::size_t j = i; !seen[j]; j = images_[j]) seen[j] = true;
  }
  return (images_.size() - cycle_count) % 2 == 0 ? Parity::even : Parity::odd;
}

std::vector<int> Permutation::image_table() const {
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = images_[i] + 1;
  return out;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    std::vector<int> cycle;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      cycle.push_back(static_cast<int>(j) + 1);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t k = 0; k < c.size(); ++k) os << (k ? " " : "") << c[k];
    os << ')';
  }
  return os.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  require_same_degree(p, q);
  std::vector<std::uint8_t> table(p.table().size());
  auto pt = p.table();
  auto qt = q.table();
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = qt[pt[i]];
  return Permutation::from_zero_based(std::move(table));
}

Permutation inverse(const Permutation& p) {
  std::vector<std::uint8_t> table(p.table().size());
  auto pt = p.table();
  for (std::size_t i = 0; i < table.size(); ++i) table[pt[i]] = static_cast<std::uint8_t>(i);
  return Permutation::from_zero_based(std::move(table));
}

Permutation power(const Permutation& p, int exponent) {
  Permutation base = exponent < 0 ? inverse(p) : p;
  Permutation result(p.degree());
  for (int e = exponent < 0 ? -exponent : exponent; e > 0; --e) result = compose(result, base);
  return result;
}

Permutation conjugate(const Permutation& p, const Permutation& t) {
  require_same_degree(p, t);
  return compose(compose(inverse(t), p), t);
}

Permutation long_cycle(int n) {
  std::vector<int> cycle(static_cast<std::size_t>(n));
  std::iota(cycle.begin(), cycle.end(), 1);
  return Permutation::from_cycles(n, {cycle});
}

Permutation transposition(int degree, int a, int b) {
  return Permutation::from_cycles(degree, {{a, b}});
}

std::vector<Permutation> enumerate_symmetric(int n) {
  require_enumeration_degree(n, 1);
  std::vector<std::uint8_t> table(static_cast<std::size_t>(n));
  std::iota(table.begin(), table.end(), std::uint8_t{0});
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_zero_based(table));
  } while (std::next_permutation(table.begin(), table.end()));
  return out;
}

std::vector<Permutation> enumerate_alternating(int n) {
  auto all = enumerate_symmetric(n);
  std::vector<Permutation> out;
  out.reserve(all.size() / 2 + 1);
  for (auto& p : all)
    if (p.parity() == Parity::even) out.push_back(std::move(p));
  return out;
}

std::vector<Permutation> enumerate_even_derangements(int n) {
  require_enumeration_degree(n, 2);
  auto even = enumerate_alternating(n);
  std::vector<Permutation> out;
  for (auto& p : even)
    if (p.is_derangement()) out.push_back(std::move(p));
  return out;
}

AlternatingGroup::AlternatingGroup(int n) : n_(n) {
  require_enumeration_degree(n, 1);
  elements_ = enumerate_alternating(n);
  std::size_t factorial = 1;
  for (int k = 2; k <= n; ++k) factorial *= static_cast<std::size_t>(k);
  rank_to_index_.assign(factorial, std::numeric_limits<std::uint32_t>::max());
  for (std::size_t i = 0; i < elements_.size(); ++i)
    rank_to_index_[lex_rank(elements_[i].table())] = static_cast<std::uint32_t>(i);

  inverse_.resize(elements_.size());
  derangement_.resize(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    inverse_[i] = index_of(altgraph::inverse(elements_[i])).value;
    derangement_[i] = elements_[i].is_derangement() ? 1 : 0;
  }

  if (n <= 7) {
    const std::size_t m = elements_.size();
    mul_.resize(m * m);
    std::vector<std::uint8_t> prod(static_cast<std::size_t>(n));
    for (std::size_t a = 0; a < m; ++a) {
      auto at = elements_[a].table();
      for (std::size_t b = 0; b < m; ++b) {
        auto bt = elements_[b].table();
        for (int i = 0; i < n; ++i) prod[i] = bt[at[i]];
        mul_[a * m + b] = static_cast<std::uint16_t>(rank_to_index_[lex_rank(prod)]);
      }
    }
  }
}

std::size_t AlternatingGroup::lex_rank(std::span<const std::uint8_t> table) const {
  // Lehmer code; n <= 8 so a quadratic scan is fine.
  std::size_t rank = 0;
  const std::size_t n = table.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j)
      if (table[j] < table[i]) ++smaller;
    rank = rank * (n - i) + smaller;
  }
  return rank;
}

ElementIndex AlternatingGroup::index_of(const Permutation& p) const {
  if (p.degree() != n_) throw std::invalid_argument("element of wrong degree");
  std::uint32_t idx = rank_to_index_[lex_rank(p.table())];
  if (idx == std::numeric_limits<std::uint32_t>::max())
    throw std::invalid_argument("odd permutation is not in A_n: " + p.to_string());
  return ElementIndex{idx};
}

ElementIndex AlternatingGroup::multiply(ElementIndex a, ElementIndex b) const {
  if (!mul_.empty()) return ElementIndex{mul_[a.value * elements_.size() + b.value]};
  return index_of(compose(elements_[a.value], elements_[b.value]));
}

}  // namespace altgraph
