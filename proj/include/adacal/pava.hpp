#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace adacal {

/// Weighted least-squares isotonic fit (pool-adjacent-violators).
/// Returns the non-decreasing vector closest to `values` under the given
/// positive weights; pooled blocks take their weighted mean.
inline std::vector<double> pava_nondecreasing(const std::vector<double>& values,
                                              const std::vector<double>& weights) {
  if (values.empty()) {
    throw std::invalid_argument("pava_nondecreasing: empty input");
  }
  if (weights.size() != values.size()) {
    throw std::invalid_argument("pava_nondecreasing: weights/values size mismatch");
  }

  struct Block {
    double wsum;
    double wvalue;  // weighted sum of values
    std::size_t len;
    double mean() const { return wvalue / wsum; }
  };

  std::vector<Block> blocks;
  blocks.reserve(values.size());

  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(weights[i] > 0.0)) {
      throw std::invalid_argument("pava_nondecreasing: weights must be positive");
    }
    blocks.push_back(Block{weights[i], weights[i] * values[i], 1});
    while (blocks.size() >= 2 &&
           blocks[blocks.size() - 2].mean() > blocks.back().mean()) {
      Block top = blocks.back();
      blocks.pop_back();
      blocks.back().wsum += top.wsum;
      blocks.back().wvalue += top.wvalue;
      blocks.back().len += top.len;
    }
  }

  std::vector<double> fitted;
  fitted.reserve(values.size());
  for (const Block& b : blocks) {
    fitted.insert(fitted.end(), b.len, b.mean());
  }
  return fitted;
}

}  // namespace adacal
