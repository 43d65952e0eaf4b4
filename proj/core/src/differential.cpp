#include "cosmoface/differential.hpp"

#include <algorithm>
#include <random>
#include <thread>

#include "cosmoface/errors.hpp"
#include "cosmoface/oracle.hpp"

namespace cosmoface {

namespace {

FaceSet set_of_mask(std::uint64_t mask) {
  FaceSet x;
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1) x.push_back(i);
  return x;
}

bool disagree(const FaceEngine& engine, const FaceSet& x, bool* criterion_out) {
  bool criterion = engine.is_face(x);
  bool oracle = lp_is_face(engine.polytope(), x).is_face;
  if (criterion_out) *criterion_out = criterion;
  return criterion != oracle;
}

// Greedy shrink: drop vertices while the disagreement persists.
FaceSet minimize_counterexample(const FaceEngine& engine, FaceSet x) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < x.size(); ++i) {
      FaceSet smaller = x;
      smaller.erase(smaller.begin() + i);
      if (disagree(engine, smaller, nullptr)) {
        x = std::move(smaller);
        changed = true;
        break;
      }
    }
  }
  return x;
}

DifferentialResult run_masks(const FaceEngine& engine, const std::vector<std::uint64_t>& masks,
                             int threads) {
  threads = std::max(1, threads);
  std::vector<char> mismatch(masks.size(), 0);
  auto worker = [&](size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i)
      if (disagree(engine, set_of_mask(masks[i]), nullptr)) mismatch[i] = 1;
  };
  if (threads == 1 || masks.size() < 64) {
    worker(0, masks.size());
  } else {
    std::vector<std::thread> pool;
    size_t chunk = (masks.size() + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      size_t begin = t * chunk;
      size_t end = std::min(masks.size(), begin + chunk);
      if (begin < end) pool.emplace_back(worker, begin, end);
    }
    for (std::thread& th : pool) th.join();
  }

  DifferentialResult result;
  result.subsets_checked = static_cast<std::int64_t>(masks.size());
  for (size_t i = 0; i < masks.size(); ++i) {
    if (!mismatch[i]) continue;
    ++result.mismatches;
    if (!result.counterexample) {
      FaceSet minimal = minimize_counterexample(engine, set_of_mask(masks[i]));
      bool criterion = false;
      disagree(engine, minimal, &criterion);
      result.counterexample = std::move(minimal);
      result.criterion_said_face = criterion;
    }
  }
  return result;
}

}  // namespace

DifferentialResult verify_exhaustive(const FaceEngine& engine, int threads) {
  const int n = engine.polytope().vertex_count();
  if (n > 63)
    throw CapError("exhaustive verification supports at most 63 polytope vertices");
  std::vector<std::uint64_t> masks;
  masks.reserve(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) masks.push_back(m);
  return run_masks(engine, masks, threads);
}

DifferentialResult verify_sampled(const FaceEngine& engine, std::int64_t samples,
                                  std::uint64_t seed, int threads) {
  const int n = engine.polytope().vertex_count();
  if (n > 63)
    throw CapError("sampled verification supports at most 63 polytope vertices");
  if (samples < 0) throw InputError("sample count must be nonnegative");
  std::mt19937_64 rng(seed);
  const std::uint64_t mask_all = (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> masks(samples);
  for (std::int64_t i = 0; i < samples; ++i) masks[i] = rng() & mask_all;
  return run_masks(engine, masks, threads);
}

}  // namespace cosmoface
