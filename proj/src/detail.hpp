#pragma once

// Small helpers shared by the implementation files.

#include <cstddef>
#include <numeric>
#include <vector>

namespace semigalois::detail {

  struct vector_hash {
    std::size_t operator()(std::vector<std::size_t> const& v) const noexcept {
      std::size_t h = 0xcbf29ce484222325ULL;
      for (auto x : v) {
        h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      }
      return h;
    }
  };

  class union_find {
   public:
    explicit union_find(std::size_t n) : parent_(n) {
      std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
      while (parent_[x] != x) {
        parent_[x] = parent_[parent_[x]];
        x          = parent_[x];
      }
      return x;
    }
    // Keeps the smaller root so class labels are stable.
    bool unite(std::size_t x, std::size_t y) {
      x = find(x);
      y = find(y);
      if (x == y) {
        return false;
      }
      if (y < x) {
        std::swap(x, y);
      }
      parent_[y] = x;
      return true;
    }
    std::vector<std::size_t> labels() {
      std::vector<std::size_t> out(parent_.size());
      for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = find(i);
      }
      return out;
    }

   private:
    std::vector<std::size_t> parent_;
  };

}  // namespace semigalois::detail
