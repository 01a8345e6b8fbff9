#include "altgraph/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace altgraph {

PointPermutation PointPermutation::identity(std::size_t domain_size) {
  std::vector<Point> images(domain_size);
  std::iota(images.begin(), images.end(), Point{0});
  return from_images_unchecked(std::move(images));
}

PointPermutation PointPermutation::from_images(std::vector<Point> images) {
  std::vector<bool> seen(images.size(), false);
  for (Point v : images) {
    if (v >= images.size() || seen[v])
      throw std::invalid_argument("point permutation is not a bijection");
    seen[v] = true;
  }
  return from_images_unchecked(std::move(images));
}

PointPermutation PointPermutation::from_images_unchecked(std::vector<Point> images) {
  PointPermutation p;
  p.images_ = std::move(images);
  return p;
}

bool PointPermutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

PointPermutation compose(const PointPermutation& p, const PointPermutation& q) {
  if (p.domain_size() != q.domain_size())
    throw std::invalid_argument("point permutation domain mismatch");
  std::vector<Point> out(p.domain_size());
  auto pi = p.images();
  auto qi = q.images();
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = qi[pi[x]];
  return PointPermutation::from_images_unchecked(std::move(out));
}

PointPermutation inverse(const PointPermutation& p) {
  std::vector<Point> out(p.domain_size());
  auto pi = p.images();
  for (std::size_t x = 0; x < out.size(); ++x) out[pi[x]] = static_cast<Point>(x);
  return PointPermutation::from_images_unchecked(std::move(out));
}

std::vector<Point> Bsgs::base() const {
  std::vector<Point> b;
  for (const auto& level : levels_) b.push_back(level.base_point);
  return b;
}

BigInt Bsgs::order() const {
  BigInt result = 1;
  for (const auto& level : levels_) result *= level.orbit.size();
  return result;
}

std::pair<PointPermutation, std::size_t> Bsgs::strip(const PointPermutation& p,
                                                     std::size_t from) const {
  PointPermutation g = p;
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const auto& level = levels_[l];
    Point beta = g(level.base_point);
    std::int32_t pos = level.orbit_position[beta];
    if (pos < 0) return {std::move(g), l};
    if (pos != 0) g = compose(g, level.inverse_transversal[static_cast<std::size_t>(pos)]);
  }
  return {std::move(g), levels_.size()};
}

bool Bsgs::contains(const PointPermutation& p) const {
  if (p.domain_size() != domain_size_) throw std::invalid_argument("membership: domain mismatch");
  auto [residue, level] = strip(p);
  return level == levels_.size() && residue.is_identity();
}

bool membership(const Bsgs& b, const PointPermutation& p) { return b.contains(p); }

class SchreierSimsBuilder {
 public:
  SchreierSimsBuilder(std::size_t domain_size, std::uint64_t seed) : rng_(seed) {
    bsgs_.domain_size_ = domain_size;
  }

  void add_generators(std::span<const PointPermutation> gens) {
    for (const auto& g : gens) {
      if (g.domain_size() != bsgs_.domain_size_)
        throw std::invalid_argument("schreier_sims: generator domain mismatch");
      if (g.is_identity()) continue;
      if (std::find(bsgs_.strong_.begin(), bsgs_.strong_.end(), g) != bsgs_.strong_.end()) continue;
      inputs_.push_back(g);
      bsgs_.strong_.push_back(g);
    }
    // Open base levels until no input fixes the whole base.
    while (true) {
      bool uncovered = false;
      for (const auto& s : bsgs_.strong_) {
        bool fixes_base = true;
        for (const auto& prev : bsgs_.levels_)
          if (s.moves(prev.base_point)) {
            fixes_base = false;
            break;
          }
        if (fixes_base) {
          uncovered = true;
          break;
        }
      }
      if (!uncovered) break;
      open_level();
    }
  }

  void random_phase() {
    if (inputs_.empty()) return;
    std::vector<PointPermutation> slots = inputs_;
    while (slots.size() < 10) slots.push_back(slots[slots.size() % inputs_.size()]);
    PointPermutation acc = PointPermutation::identity(bsgs_.domain_size_);
    std::uniform_int_distribution<std::size_t> pick(0, slots.size() - 1);
    auto step = [&] {
      std::size_t a = pick(rng_);
      std::size_t b = pick(rng_);
      while (b == a) b = pick(rng_);
      slots[a] = (rng_() & 1U) ? compose(slots[a], slots[b]) : compose(slots[a], inverse(slots[b]));
      acc = compose(acc, slots[a]);
    };
    for (int k = 0; k < 50; ++k) step();
    int quiet = 0;
    while (quiet < 24) {
      step();
      refresh_all();
      auto [residue, level] = bsgs_.strip(acc);
      if (level == bsgs_.levels_.size() && residue.is_identity()) {
        ++quiet;
      } else {
        add_strong(residue);
        quiet = 0;
      }
    }
  }

  void deterministic_phase() {
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(bsgs_.levels_.size()) - 1;
    while (i >= 0) {
      refresh_all();
      auto& level = bsgs_.levels_[static_cast<std::size_t>(i)];
      bool extended = false;
      for (std::size_t k = 0; !extended && k < level.orbit.size(); ++k) {
        for (std::size_t gi : level.generators) {
          const auto& s = bsgs_.strong_[gi];
          Point image = s(level.orbit[k]);
          auto pos = static_cast<std::size_t>(level.orbit_position[image]);
          PointPermutation g =
              compose(compose(level.transversal[k], s), level.inverse_transversal[pos]);
          if (g.is_identity()) continue;
          auto [residue, stop] = bsgs_.strip(g, static_cast<std::size_t>(i) + 1);
          if (stop == bsgs_.levels_.size() && residue.is_identity()) continue;
          add_strong(residue);
          i = static_cast<std::ptrdiff_t>(stop);
          extended = true;
          break;
        }
      }
      if (!extended) --i;
    }
    refresh_all();
  }

  Bsgs take() { return std::move(bsgs_); }

 private:
  // Registers a nonidentity element as a strong generator and appends a base
  // point if it fixes every current base point.
  void add_strong(const PointPermutation& h) {
    std::size_t index = bsgs_.strong_.size();
    bsgs_.strong_.push_back(h);
    std::size_t l = 0;
    for (; l < bsgs_.levels_.size(); ++l) {
      bsgs_.levels_[l].generators.push_back(index);
      dirty_[l] = true;
      if (h.moves(bsgs_.levels_[l].base_point)) return;
    }
    open_level();
  }

  // New level whose generators are the strong generators fixing the base.
  void open_level() {
    StabilizerLevel level;
    level.base_point = choose_base_point();
    for (std::size_t gi = 0; gi < bsgs_.strong_.size(); ++gi) {
      const auto& s = bsgs_.strong_[gi];
      bool fixes_base = true;
      for (const auto& prev : bsgs_.levels_)
        if (s.moves(prev.base_point)) {
          fixes_base = false;
          break;
        }
      if (fixes_base) level.generators.push_back(gi);
    }
    bsgs_.levels_.push_back(std::move(level));
    dirty_.push_back(true);
  }

  // Largest orbit of the pointwise stabilizer generators; smallest point in it.
  Point choose_base_point() const {
    std::vector<PointPermutation> gens;
    for (const auto& s : bsgs_.strong_) {
      bool fixes_base = true;
      for (const auto& prev : bsgs_.levels_)
        if (s.moves(prev.base_point)) {
          fixes_base = false;
          break;
        }
      if (fixes_base) gens.push_back(s);
    }
    auto orbits = orbit_decomposition(gens, bsgs_.domain_size_);
    const std::vector<Point>* best = nullptr;
    for (const auto& orb : orbits)
      if (orb.size() > 1 && (!best || orb.size() > best->size())) best = &orb;
    if (!best) throw std::logic_error("schreier_sims: no moved point for new base level");
    return best->front();
  }

  void refresh_all() {
    for (std::size_t l = 0; l < bsgs_.levels_.size(); ++l)
      if (dirty_[l]) rebuild(l);
  }

  void rebuild(std::size_t l) {
    auto& level = bsgs_.levels_[l];
    const std::size_t n = bsgs_.domain_size_;
    level.orbit.clear();
    level.transversal.clear();
    level.inverse_transversal.clear();
    level.orbit_position.assign(n, -1);
    level.orbit.push_back(level.base_point);
    level.orbit_position[level.base_point] = 0;
    level.transversal.push_back(PointPermutation::identity(n));
    for (std::size_t head = 0; head < level.orbit.size(); ++head) {
      Point beta = level.orbit[head];
      for (std::size_t gi : level.generators) {
        const auto& s = bsgs_.strong_[gi];
        Point gamma = s(beta);
        if (level.orbit_position[gamma] >= 0) continue;
        level.orbit_position[gamma] = static_cast<std::int32_t>(level.orbit.size());
        level.orbit.push_back(gamma);
        level.transversal.push_back(compose(level.transversal[head], s));
      }
    }
    level.inverse_transversal.reserve(level.transversal.size());
    for (const auto& u : level.transversal) level.inverse_transversal.push_back(inverse(u));
    dirty_[l] = false;
  }

  Bsgs bsgs_;
  std::vector<bool> dirty_;
  std::vector<PointPermutation> inputs_;
  std::mt19937_64 rng_;
};

Bsgs schreier_sims(std::span<const PointPermutation> generators, std::uint64_t seed) {
  if (generators.empty()) throw std::invalid_argument("schreier_sims: empty generator list");
  SchreierSimsBuilder builder(generators.front().domain_size(), seed);
  builder.add_generators(generators);
  builder.random_phase();
  builder.deterministic_phase();
  return builder.take();
}

std::vector<Point> orbit(std::span<const PointPermutation> generators, Point point) {
  std::size_t n = generators.empty() ? point + 1 : generators.front().domain_size();
  if (point >= n) throw std::out_of_range("orbit: point outside domain");
  std::vector<bool> seen(n, false);
  std::vector<Point> out{point};
  seen[point] = true;
  for (std::size_t head = 0; head < out.size(); ++head)
    for (const auto& g : generators) {
      if (g.domain_size() != n) throw std::invalid_argument("orbit: generator domain mismatch");
      Point y = g(out[head]);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Point>> orbit_decomposition(std::span<const PointPermutation> generators,
                                                    std::size_t domain_size) {
  std::vector<Point> parent(domain_size);
  std::iota(parent.begin(), parent.end(), Point{0});
  auto find = [&](Point x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : generators) {
    if (g.domain_size() != domain_size)
      throw std::invalid_argument("orbit_decomposition: domain mismatch");
    for (Point x = 0; x < domain_size; ++x) {
      Point a = find(x);
      Point b = find(g(x));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<Point>> orbits;
  std::vector<std::int64_t> slot(domain_size, -1);
  for (Point x = 0; x < domain_size; ++x) {
    Point r = find(x);
    if (slot[r] < 0) {
      slot[r] = static_cast<std::int64_t>(orbits.size());
      orbits.emplace_back();
    }
    orbits[static_cast<std::size_t>(slot[r])].push_back(x);
  }
  return orbits;
}

nlohmann::json generators_to_json(std::span<const PointPermutation> generators) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& g : generators)
    out.push_back(std::vector<Point>(g.images().begin(), g.images().end()));
  return out;
}

std::vector<PointPermutation> generators_from_json(const nlohmann::json& j) {
  std::vector<PointPermutation> out;
  for (const auto& row : j) out.push_back(PointPermutation::from_images(row.get<std::vector<Point>>()));
  return out;
}

std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace altgraph
