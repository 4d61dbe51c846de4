#pragma once

#include <cstdint>
#include <vector>

#include <omp.h>

namespace kolab {

// Deterministic parallel accumulation. Work items [0,n) are cut into
// fixed-size blocks; each block fills its own accumulator (possibly on
// different threads) and the blocks are merged serially in index order.
// Block boundaries depend only on (n, block), never on the worker count,
// so floating-point totals are bit-identical for any number of threads.
//
// Fill: void(int64_t begin, int64_t end, Acc& local)
// Merge: void(Acc& total, const Acc& local)
template <class Acc, class Fill, class Merge>
void blockwise_reduce(int64_t n, int64_t block, Acc& total, Fill fill, Merge merge) {
  if (n <= 0) return;
  int64_t nblocks = (n + block - 1) / block;
  std::vector<Acc> parts(size_t(nblocks), total);
#pragma omp parallel for schedule(static)
  for (int64_t b = 0; b < nblocks; ++b) {
    int64_t lo = b * block;
    int64_t hi = lo + block < n ? lo + block : n;
    fill(lo, hi, parts[size_t(b)]);
  }
  for (int64_t b = 0; b < nblocks; ++b) merge(total, parts[size_t(b)]);
}

}  // namespace kolab
