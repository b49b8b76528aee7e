#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace esakia {

/// Square boolean matrix over indices 0..n-1, used for orders and
/// accessibility relations.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n) : n_(n), bits_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }

  bool operator()(std::size_t i, std::size_t j) const { return bits_[i * n_ + j] != 0; }
  void set(std::size_t i, std::size_t j, bool value = true) { bits_[i * n_ + j] = value ? 1 : 0; }

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> bits_;
};

Relation identity_relation(std::size_t n);
Relation reflexive_transitive_closure(Relation r);

/// First pair (i, j), i != j, with i R j and j R i.
std::optional<std::pair<std::size_t, std::size_t>> antisymmetry_violation(const Relation& r);

bool is_partial_order(const Relation& r);

/// Cover (Hasse) relation of a partial order: i < j with nothing strictly between.
Relation cover_relation(const Relation& leq);

}  // namespace esakia
