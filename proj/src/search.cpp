#include "compound/search.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "compound/semigroup.hpp"
#include "compound/sylvester.hpp"

namespace compound {

namespace {

using ULVec = std::vector<unsigned long>;

bool suitable_ul(const ULVec& a, const ULVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      if (std::gcd(a[i], b[j]) != 1) return false;
    }
  }
  return true;
}

// Lexicographic scan of (a_1..a_k, b_1..b_k) over [lo, hi]^{2k}, restricted
// to a_1 in {first, first + stride, ...}; yields suitable pairs only.
// Requires k >= 1.
template <typename Fn>
void scan_pairs(std::size_t k, unsigned long lo, unsigned long hi,
                unsigned long first, unsigned long stride, Fn&& fn) {
  ULVec a(k), b(k);
  auto digit = [&](std::size_t pos) -> unsigned long& {
    return pos < k ? a[pos] : b[pos - k];
  };
  for (unsigned long a1 = first; a1 <= hi;) {
    a[0] = a1;
    for (std::size_t pos = 1; pos < 2 * k; ++pos) digit(pos) = lo;
    for (;;) {
      if (suitable_ul(a, b)) fn(a, b);
      std::size_t pos = 2 * k;
      while (pos > 1) {
        --pos;
        unsigned long& v = digit(pos);
        if (v < hi) {
          ++v;
          break;
        }
        v = lo;
      }
      if (pos == 1 && digit(1) == lo) break;  // wrapped all free digits
    }
    if (hi - a1 < stride) break;
    a1 += stride;
  }
}

SuitablePair make_pair_ul(const ULVec& a, const ULVec& b) {
  std::vector<Int> av(a.begin(), a.end()), bv(b.begin(), b.end());
  return SuitablePair(Tuple(std::move(av)), Tuple(std::move(bv)));
}

void check_bounds(const Int& lo, const Int& hi) {
  if (lo < 2 || hi < lo) {
    throw ValidationError("search bounds must satisfy 2 <= lo <= hi");
  }
  if (!hi.fits_ulong_p()) {
    throw ValidationError("search bound too large");
  }
}

}  // namespace

void enumerate_pairs(std::size_t k, const Int& lo, const Int& hi,
                     const std::function<void(const SuitablePair&)>& yield) {
  check_bounds(lo, hi);
  if (k == 0) {
    yield(SuitablePair(Tuple{}, Tuple{}));
    return;
  }
  scan_pairs(k, lo.get_ui(), hi.get_ui(), lo.get_ui(), 1,
             [&](const ULVec& a, const ULVec& b) { yield(make_pair_ul(a, b)); });
}

namespace {

// Witness statistics for one canonical generator set.
struct SetNode {
  ULVec min_witness;  // (a_1..a_k, b_1..b_k), lexicographically least
  std::uint64_t witnesses = 0;
};

using SetMap = std::map<std::vector<Int>, SetNode>;

void absorb(SetMap& into, SetMap&& from) {
  for (auto& [key, node] : from) {
    auto [it, inserted] = into.try_emplace(key, std::move(node));
    if (!inserted) {
      it->second.witnesses += node.witnesses;
      if (node.min_witness < it->second.min_witness) {
        it->second.min_witness = std::move(node.min_witness);
      }
    }
  }
}

// Sylvester sums of one set, computed from its witness pair: closed forms
// for m <= 3 (reusing the genus values of (A,B), (A^2,B^2), (A^4,B^4)),
// the Bernoulli expansion beyond.
struct SetSums {
  SuitablePair pair;
  Int s0_1, s0_2;  // genus of (A,B) and (A^2,B^2)
  Int s0_4;        // genus of (A^4,B^4), filled on demand
  bool have_s0_4 = false;

  explicit SetSums(SuitablePair p)
      : pair(std::move(p)),
        s0_1(s0_closed(pair)),
        s0_2(s0_closed(SuitablePair(power(pair.a(), 2), power(pair.b(), 2)))),
        s0_4(0) {}

  Int value(unsigned m, const Budget& budget) {
    if (m <= 3) {
      if (m == 3 && !have_s0_4) {
        s0_4 = s0_closed(SuitablePair(power(pair.a(), 4), power(pair.b(), 4)));
        have_s0_4 = true;
      }
      return s_closed_from_genus(s0_1, s0_2, s0_4, m);
    }
    return s_bernoulli(pair, m, BernoulliCache::shared(), budget);
  }
};

}  // namespace

SearchResult find_collisions(const SearchParams& params) {
  check_bounds(params.lo, params.hi);
  if (params.match_through >= params.differ_at) {
    throw ValidationError("match_through must be smaller than differ_at");
  }
  SearchResult result;
  if (params.k == 0) return result;  // a single set, nothing to pair

  const unsigned long lo = params.lo.get_ui();
  const unsigned long hi = params.hi.get_ui();
  params.budget.require(pow_ui(Int(hi - lo + 1), 2 * params.k),
                        "pair enumeration");
  const unsigned threads =
      std::max(1u, std::min(params.threads,
                            static_cast<unsigned>(hi - lo + 1)));

  // Phase 1: canonicalize every suitable pair to its sorted generator set,
  // deduplicating witnesses.  The space is partitioned by a_1; merging is
  // commutative, so the map is identical at any thread count.
  SetMap sets;
  {
    std::vector<SetMap> local(threads);
    auto work = [&](unsigned w) {
      scan_pairs(params.k, lo, hi, lo + w, threads,
                 [&](const ULVec& a, const ULVec& b) {
                   std::vector<Int> gens(params.k + 1, Int(1));
                   for (unsigned long v : a) gens[0] *= v;
                   for (std::size_t i = 1; i <= params.k; ++i) {
                     gens[i] =
                         exact_div(gens[i - 1] * b[i - 1], Int(a[i - 1]));
                   }
                   std::sort(gens.begin(), gens.end());
                   ULVec witness(a);
                   witness.insert(witness.end(), b.begin(), b.end());
                   auto [it, inserted] =
                       local[w].try_emplace(std::move(gens), SetNode{});
                   SetNode& node = it->second;
                   node.witnesses += 1;
                   if (node.min_witness.empty() ||
                       witness < node.min_witness) {
                     node.min_witness = std::move(witness);
                   }
                 });
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
      for (auto& t : pool) t.join();
    }
    for (auto& m : local) absorb(sets, std::move(m));
  }

  // Phase 2: Sylvester keys S_0..S_{match_through} per distinct set.
  std::vector<const SetMap::value_type*> entry;
  entry.reserve(sets.size());
  for (const auto& kv : sets) entry.push_back(&kv);

  std::vector<std::vector<Int>> keys(entry.size());
  {
    auto work = [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        ULVec w = entry[i]->second.min_witness;
        SetSums sums(make_pair_ul(ULVec(w.begin(), w.begin() + params.k),
                                  ULVec(w.begin() + params.k, w.end())));
        std::vector<Int>& key = keys[i];
        key.reserve(params.match_through + 1);
        for (unsigned m = 0; m <= params.match_through; ++m) {
          key.push_back(sums.value(m, params.budget));
        }
      }
    };
    if (threads == 1) {
      work(0, entry.size());
    } else {
      std::vector<std::thread> pool;
      std::size_t chunk = (entry.size() + threads - 1) / threads;
      for (unsigned w = 0; w < threads; ++w) {
        std::size_t begin = std::min(entry.size(), w * chunk);
        std::size_t end = std::min(entry.size(), begin + chunk);
        pool.emplace_back(work, begin, end);
      }
      for (auto& t : pool) t.join();
    }
  }

  std::vector<std::size_t> order(entry.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (keys[x] != keys[y]) return keys[x] < keys[y];
    return entry[x]->first < entry[y]->first;
  });

  // Verified power sums per set actually involved in a record.
  std::map<std::size_t, std::vector<Int>> verified;
  auto verify = [&](std::size_t i) -> const std::vector<Int>& {
    auto it = verified.find(i);
    if (it != verified.end()) return it->second;
    ULVec w = entry[i]->second.min_witness;
    SuitablePair p = make_pair_ul(ULVec(w.begin(), w.begin() + params.k),
                                  ULVec(w.begin() + params.k, w.end()));
    std::vector<Int> sums(params.differ_at + 1, Int(0));
    for (const Int& n : gaps(p, params.budget)) {
      Int pw = 1;
      for (unsigned m = 0; m <= params.differ_at; ++m) {
        sums[m] += pw;
        pw *= n;
      }
    }
    return verified.emplace(i, std::move(sums)).first->second;
  };

  for (std::size_t run = 0; run < order.size();) {
    std::size_t end = run + 1;
    while (end < order.size() && keys[order[end]] == keys[order[run]]) ++end;
    if (end - run >= 2) {
      // Candidate bucket: all S_{differ_at} values.
      std::vector<Int> differ(end - run);
      for (std::size_t t = run; t < end; ++t) {
        ULVec w = entry[order[t]]->second.min_witness;
        SetSums sums(make_pair_ul(ULVec(w.begin(), w.begin() + params.k),
                                  ULVec(w.begin() + params.k, w.end())));
        differ[t - run] = sums.value(params.differ_at, params.budget);
      }
      for (std::size_t x = run; x < end; ++x) {
        for (std::size_t y = x + 1; y < end; ++y) {
          if (differ[x - run] == differ[y - run]) continue;
          const std::size_t i = order[x], j = order[y];
          const std::vector<Int>& vi = verify(i);
          const std::vector<Int>& vj = verify(j);
          for (unsigned m = 0; m <= params.match_through; ++m) {
            if (vi[m] != keys[i][m] || vj[m] != keys[j][m]) {
              throw InternalError("closed forms disagree with enumeration");
            }
          }
          if (vi[params.differ_at] != differ[x - run] ||
              vj[params.differ_at] != differ[y - run]) {
            throw InternalError("closed forms disagree with enumeration");
          }
          const ULVec& wi = entry[i]->second.min_witness;
          const ULVec& wj = entry[j]->second.min_witness;
          CollisionRecord rec{
              entry[i]->first,
              entry[j]->first,
              make_pair_ul(ULVec(wi.begin(), wi.begin() + params.k),
                           ULVec(wi.begin() + params.k, wi.end())),
              make_pair_ul(ULVec(wj.begin(), wj.begin() + params.k),
                           ULVec(wj.begin() + params.k, wj.end())),
              entry[i]->second.witnesses,
              entry[j]->second.witnesses,
              keys[i],
              differ[x - run],
              differ[y - run]};
          result.witness_pair_count +=
              rec.witness_count1 * rec.witness_count2;
          result.records.push_back(std::move(rec));
        }
      }
    }
    run = end;
  }
  result.set_pair_count = result.records.size();
  return result;
}

namespace {

nlohmann::json json_int(const Int& v) {
  // Stay within the 53-bit range JSON consumers can hold exactly.
  static const Int kSafe = (Int(1) << 53) - 1;
  if (v <= kSafe && v >= -kSafe) {
    return nlohmann::json(v.get_si());
  }
  return nlohmann::json(v.get_str());
}

nlohmann::json json_ints(const std::vector<Int>& vs) {
  nlohmann::json a = nlohmann::json::array();
  for (const Int& v : vs) a.push_back(json_int(v));
  return a;
}

nlohmann::json json_pair(const SuitablePair& p) {
  return {{"a", json_ints(p.a().entries())}, {"b", json_ints(p.b().entries())}};
}

std::string join_ints(const std::vector<Int>& vs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += sep;
    out += vs[i].get_str();
  }
  return out;
}

}  // namespace

std::string to_json_line(const CollisionRecord& record) {
  nlohmann::json j{{"set1", json_ints(record.set1)},
                   {"set2", json_ints(record.set2)},
                   {"witness1", json_pair(record.witness1)},
                   {"witness2", json_pair(record.witness2)},
                   {"witness_count1", record.witness_count1},
                   {"witness_count2", record.witness_count2},
                   {"shared", json_ints(record.shared)},
                   {"differ1", json_int(record.differ1)},
                   {"differ2", json_int(record.differ2)}};
  return j.dump();
}

std::string csv_header(unsigned match_through) {
  std::string h = "set1;set2;witness1_a;witness1_b;witness2_a;witness2_b;"
                  "witness_count1;witness_count2";
  for (unsigned m = 0; m <= match_through; ++m) {
    h += ";s" + std::to_string(m);
  }
  return h + ";differ1;differ2";
}

std::string to_csv_line(const CollisionRecord& record) {
  std::ostringstream out;
  out << join_ints(record.set1, ",") << ';' << join_ints(record.set2, ",")
      << ';' << join_ints(record.witness1.a().entries(), ",") << ';'
      << join_ints(record.witness1.b().entries(), ",") << ';'
      << join_ints(record.witness2.a().entries(), ",") << ';'
      << join_ints(record.witness2.b().entries(), ",") << ';'
      << record.witness_count1 << ';' << record.witness_count2;
  for (const Int& s : record.shared) out << ';' << s.get_str();
  out << ';' << record.differ1.get_str() << ';' << record.differ2.get_str();
  return out.str();
}

void write_jsonl(const SearchResult& result, std::ostream& out) {
  for (const CollisionRecord& r : result.records) {
    out << to_json_line(r) << '\n';
  }
}

void write_csv(const SearchResult& result, std::ostream& out) {
  unsigned match = result.records.empty()
                       ? 0
                       : static_cast<unsigned>(result.records[0].shared.size() - 1);
  out << csv_header(match) << '\n';
  for (const CollisionRecord& r : result.records) {
    out << to_csv_line(r) << '\n';
  }
}

}  // namespace compound
