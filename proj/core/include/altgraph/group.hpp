#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

namespace altgraph {

using BigInt = boost::multiprecision::cpp_int;
using Point = std::uint32_t;

// Permutation of {0..N-1} for arbitrary finite N. Right action: apply p, then q.
class PointPermutation {
 public:
  PointPermutation() = default;
  static PointPermutation identity(std::size_t domain_size);
  // Throws std::invalid_argument unless `images` is a bijection of {0..N-1}.
  static PointPermutation from_images(std::vector<Point> images);
  static PointPermutation from_images_unchecked(std::vector<Point> images);

  std::size_t domain_size() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  bool moves(Point x) const { return images_[x] != x; }

  friend bool operator==(const PointPermutation&, const PointPermutation&) = default;

 private:
  std::vector<Point> images_;
};

// x^(compose(p, q)) = q(p(x)).
PointPermutation compose(const PointPermutation& p, const PointPermutation& q);
PointPermutation inverse(const PointPermutation& p);

// One level of a stabilizer chain: the basic orbit of `base_point` under the
// generators that fix all earlier base points, with explicit coset
// representatives. transversal[k] maps base_point to orbit[k].
struct StabilizerLevel {
  Point base_point = 0;
  std::vector<std::size_t> generators;  // indices into Bsgs::strong_generators()
  std::vector<Point> orbit;
  std::vector<std::int32_t> orbit_position;  // point -> index in orbit, or -1
  std::vector<PointPermutation> transversal;
  std::vector<PointPermutation> inverse_transversal;
};

// Base and strong generating set. Immutable once returned by schreier_sims.
class Bsgs {
 public:
  std::size_t domain_size() const { return domain_size_; }
  std::vector<Point> base() const;
  const std::vector<PointPermutation>& strong_generators() const { return strong_; }
  const std::vector<StabilizerLevel>& levels() const { return levels_; }

  BigInt order() const;
  bool contains(const PointPermutation& p) const;

  // Residue of p after sifting through levels [from, end) and the level at
  // which sifting stopped (levels().size() if it went all the way).
  std::pair<PointPermutation, std::size_t> strip(const PointPermutation& p, std::size_t from = 0) const;

 private:
  friend class SchreierSimsBuilder;
  std::size_t domain_size_ = 0;
  std::vector<PointPermutation> strong_;
  std::vector<StabilizerLevel> levels_;
};

// Stabilizer chain for <generators>. A seeded random-Schreier phase proposes
// strong generators; a deterministic pass then sifts every Schreier generator
// at every level, so the result is exact regardless of the seed.
// Throws std::invalid_argument on an empty list or mismatched domains.
Bsgs schreier_sims(std::span<const PointPermutation> generators, std::uint64_t seed = 42);

inline BigInt group_order(const Bsgs& b) { return b.order(); }
bool membership(const Bsgs& b, const PointPermutation& p);

// Orbit of `point` under <generators>, sorted ascending.
std::vector<Point> orbit(std::span<const PointPermutation> generators, Point point);
// Orbit partition of the whole domain; orbits sorted by smallest element.
std::vector<std::vector<Point>> orbit_decomposition(std::span<const PointPermutation> generators,
                                                    std::size_t domain_size);

// Generators as JSON lists of 0-based image tables.
nlohmann::json generators_to_json(std::span<const PointPermutation> generators);
std::vector<PointPermutation> generators_from_json(const nlohmann::json& j);

std::string to_string(const BigInt& v);

}  // namespace altgraph
