#include "treedeck/enumerate.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace treedeck {

namespace {

class LevelCache {
 public:
  std::shared_ptr<const std::vector<TreeShape>> get(std::size_t n) {
    std::lock_guard lock(mutex_);
    return build(n);
  }

 private:
  std::shared_ptr<const std::vector<TreeShape>> build(std::size_t n) {
    if (levels_.size() <= n) levels_.resize(n + 1);
    if (levels_[n]) return levels_[n];

    std::vector<TreeShape> out;
    if (n == 1) {
      out.emplace_back();
    } else {
      for (std::size_t a = 1; a <= n - a; ++a) {
        const auto small = build(a);
        const auto large = build(n - a);
        for (std::size_t i = 0; i < small->size(); ++i) {
          // Equal halves: unordered pairs with repetition.
          const std::size_t j0 = (a == n - a) ? i : 0;
          for (std::size_t j = j0; j < large->size(); ++j)
            out.push_back(TreeShape::join((*small)[i], (*large)[j]));
        }
      }
      std::sort(out.begin(), out.end());
    }
    levels_[n] = std::make_shared<const std::vector<TreeShape>>(std::move(out));
    return levels_[n];
  }

  std::mutex mutex_;
  std::vector<std::shared_ptr<const std::vector<TreeShape>>> levels_;
};

LevelCache& level_cache() {
  static LevelCache cache;
  return cache;
}

}  // namespace

const std::vector<TreeShape>& ShapeStream::level() const {
  if (!cached_) {
    if (n_ == 0) throw std::invalid_argument("shapes need at least one leaf");
    cached_ = level_cache().get(n_);
  }
  return *cached_;
}

ShapeStream all_shapes(std::size_t n, const Limits& limits) {
  if (n == 0) throw std::invalid_argument("shapes need at least one leaf");
  if (n > limits.max_enumeration_size) {
    const double estimate = wedderburn(n).convert_to<double>();
    std::ostringstream msg;
    msg << "enumerating size " << n << " means " << estimate << " shapes; ceiling is size "
        << limits.max_enumeration_size;
    throw InfeasibleError(msg.str(), estimate);
  }
  return ShapeStream(n);
}

Count wedderburn(std::size_t n) {
  if (n == 0) throw std::invalid_argument("W_n needs n >= 1");
  std::vector<Count> w(n + 1, 0);
  w[1] = 1;
  for (std::size_t m = 2; m <= n; ++m) {
    Count sum = 0;
    for (std::size_t i = 1; 2 * i < m; ++i) sum += w[i] * w[m - i];
    if (m % 2 == 0) sum += w[m / 2] * (w[m / 2] + 1) / 2;
    w[m] = sum;
  }
  return w[n];
}

}  // namespace treedeck
