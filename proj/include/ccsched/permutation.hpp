#pragma once

#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

namespace ccs {

/// Job order; `order[k]` is the job placed in position k.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::size_t> order) : order_(std::move(order)) {}
  Permutation(std::initializer_list<std::size_t> order) : order_(order) {}

  static Permutation identity(std::size_t n) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    return Permutation(std::move(order));
  }

  std::size_t size() const { return order_.size(); }
  std::size_t operator[](std::size_t position) const { return order_[position]; }
  const std::vector<std::size_t>& order() const { return order_; }
  auto begin() const { return order_.begin(); }
  auto end() const { return order_.end(); }

  /// True iff the order is a bijection on {0, ..., n-1}.
  bool is_bijection(std::size_t n) const {
    if (order_.size() != n) return false;
    std::vector<bool> hit(n, false);
    for (std::size_t j : order_) {
      if (j >= n || hit[j]) return false;
      hit[j] = true;
    }
    return true;
  }

  /// position[j] = index of job j in the order.
  std::vector<std::size_t> positions() const {
    std::vector<std::size_t> pos(order_.size());
    for (std::size_t k = 0; k < order_.size(); ++k) pos[order_[k]] = k;
    return pos;
  }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t k = 0; k < order_.size(); ++k) {
      if (k) out += ",";
      out += std::to_string(order_[k]);
    }
    return out + ")";
  }

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<std::size_t> order_;
};

}  // namespace ccs
