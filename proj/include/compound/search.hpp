#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "compound/core.hpp"

namespace compound {

// Two distinct compound sets whose Sylvester sums agree through
// S_{match_through} but differ at S_{differ_at}.  Sets are canonical sorted
// generator lists; each carries its lexicographically least witness pair and
// the number of distinct witnesses that map to it.
struct CollisionRecord {
  std::vector<Int> set1, set2;
  SuitablePair witness1, witness2;
  std::uint64_t witness_count1 = 0, witness_count2 = 0;
  std::vector<Int> shared;  // S_0 .. S_{match_through}
  Int differ1, differ2;     // S_{differ_at} of set1 / set2
};

struct SearchParams {
  std::size_t k = 2;
  Int lo = 2;
  Int hi = 49;
  unsigned match_through = 2;
  unsigned differ_at = 3;
  unsigned threads = 1;
  Budget budget;
};

struct SearchResult {
  // Ascending by (S_0..S_{match_through}), then by sets.
  std::vector<CollisionRecord> records;
  std::uint64_t set_pair_count = 0;      // unordered pairs of distinct sets
  std::uint64_t witness_pair_count = 0;  // sum over records of count1*count2
};

// All suitable pairs with entries in [lo, hi], in lexicographic order over
// (a_1..a_k, b_1..b_k).  k = 0 yields the single empty pair.
void enumerate_pairs(std::size_t k, const Int& lo, const Int& hi,
                     const std::function<void(const SuitablePair&)>& yield);

// Buckets canonical generator sets by (S_0..S_{match_through}) and emits the
// unordered pairs of distinct sets in a bucket whose S_{differ_at} differ.
// Every emitted record is re-verified against the enumerated gap set before
// output.  Output is identical at any thread count.
SearchResult find_collisions(const SearchParams& params);

std::string to_json_line(const CollisionRecord& record);
std::string csv_header(unsigned match_through);
std::string to_csv_line(const CollisionRecord& record);
void write_jsonl(const SearchResult& result, std::ostream& out);
void write_csv(const SearchResult& result, std::ostream& out);

}  // namespace compound
