#include "fcakit/verify.hpp"

#include <algorithm>
#include <mutex>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "fcakit/cxt_io.hpp"
#include "fcakit/parallel.hpp"

namespace fca {

std::uint64_t oracle_concept_count(const FormalContext& k) {
  const int n = k.object_count();
  if (n > 20) throw GuardError("oracle enumeration is limited to 20 objects");
  const int m = k.attribute_count();
  std::vector<const Bitset*> rows;
  rows.reserve(static_cast<size_t>(n));
  for (int g = 0; g < n; ++g) rows.push_back(&k.row(g));

  std::unordered_set<std::uint64_t> closures;
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<char> intent(static_cast<size_t>(m));
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    // Common attributes of the chosen objects, one entry at a time.
    std::fill(intent.begin(), intent.end(), 1);
    for (int g = 0; g < n; ++g) {
      if (!((mask >> g) & 1u)) continue;
      for (int j = 0; j < m; ++j)
        if (intent[static_cast<size_t>(j)] && !rows[static_cast<size_t>(g)]->test(j))
          intent[static_cast<size_t>(j)] = 0;
    }
    // Objects carrying that whole intent.
    std::uint64_t extent = 0;
    for (int g = 0; g < n; ++g) {
      bool all = true;
      for (int j = 0; j < m && all; ++j)
        if (intent[static_cast<size_t>(j)] && !rows[static_cast<size_t>(g)]->test(j)) all = false;
      if (all) extent |= std::uint64_t{1} << g;
    }
    closures.insert(extent);
  }
  return closures.size();
}

std::uint64_t context_code_count(int objects, int attributes) {
  if (objects < 0 || attributes < 0) throw UsageError("negative dimension");
  const long long cells = static_cast<long long>(objects) * attributes;
  if (cells > 16) throw GuardError("exhaustive enumeration is limited to 16 cells");
  return std::uint64_t{1} << cells;
}

FormalContext context_from_code(int objects, int attributes, std::uint64_t code) {
  if (objects < 0 || attributes < 0) throw UsageError("negative dimension");
  std::vector<std::string> onames, anames;
  onames.reserve(static_cast<size_t>(objects));
  anames.reserve(static_cast<size_t>(attributes));
  for (int g = 0; g < objects; ++g) onames.push_back("g" + std::to_string(g));
  for (int m = 0; m < attributes; ++m) anames.push_back("m" + std::to_string(m));
  std::vector<Bitset> rows;
  rows.reserve(static_cast<size_t>(objects));
  for (int g = 0; g < objects; ++g) {
    Bitset r(attributes);
    for (int m = 0; m < attributes; ++m)
      if ((code >> (g * attributes + m)) & 1u) r.set(m);
    rows.push_back(std::move(r));
  }
  return FormalContext(std::move(onames), std::move(anames), std::move(rows));
}

FormalContext random_context(int objects, int attributes, double density, std::uint64_t seed) {
  if (objects < 0 || attributes < 0) throw UsageError("negative dimension");
  if (!(density >= 0.0 && density <= 1.0)) throw UsageError("density must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  // Explicit uniform draw keeps the sequence identical across platforms.
  auto uniform = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  std::vector<std::string> onames, anames;
  for (int g = 0; g < objects; ++g) onames.push_back("g" + std::to_string(g));
  for (int m = 0; m < attributes; ++m) anames.push_back("m" + std::to_string(m));
  std::vector<Bitset> rows;
  rows.reserve(static_cast<size_t>(objects));
  for (int g = 0; g < objects; ++g) {
    Bitset r(attributes);
    for (int m = 0; m < attributes; ++m)
      if (uniform() < density) r.set(m);
    rows.push_back(std::move(r));
  }
  return FormalContext(std::move(onames), std::move(anames), std::move(rows));
}

std::uint64_t binomial_sum(int n, int upto_exclusive) {
  std::uint64_t sum = 0;
  std::uint64_t coeff = 1;  // C(n, 0)
  for (int i = 0; i < upto_exclusive; ++i) {
    sum += coeff;
    coeff = coeff * static_cast<std::uint64_t>(n - i) / static_cast<std::uint64_t>(i + 1);
  }
  return sum;
}

FormalContext shrink_counterexample(
    FormalContext failing,
    const std::function<std::optional<std::string>(const FormalContext&)>& check) {
  while (failing.object_count() > 0 && failing.attribute_count() > 0) {
    bool descended = false;
    for (int g = 0; g < failing.object_count() && !descended; ++g) {
      for (int m = 0; m < failing.attribute_count() && !descended; ++m) {
        FormalContext child = failing.delete_pair(g, m);
        if (check(child).has_value()) {
          failing = std::move(child);
          descended = true;
        }
      }
    }
    if (!descended) break;
  }
  return failing;
}

// ---------------------------------------------------------------------------
// Property framework
// ---------------------------------------------------------------------------

namespace {

using Checker = std::function<std::optional<std::string>(const FormalContext&)>;

constexpr double kSampleDensities[] = {0.2, 0.35, 0.5, 0.65, 0.8};

struct FailureSlot {
  std::mutex mu;
  bool failed = false;
  std::uint64_t rank = ~std::uint64_t{0};
  std::string detail;
  FormalContext ctx;

  void offer(std::uint64_t r, const FormalContext& k, std::string d) {
    std::lock_guard<std::mutex> lock(mu);
    if (!failed || r < rank) {
      failed = true;
      rank = r;
      detail = std::move(d);
      ctx = k;
    }
  }
};

Checker wrap(const Checker& check) {
  return [check](const FormalContext& k) -> std::optional<std::string> {
    try {
      return check(k);
    } catch (const std::exception& e) {
      return std::string("exception: ") + e.what();
    }
  };
}

struct UniverseSpec {
  int exh_a = 4;  // -1 disables the exhaustive phase
  int exh_b = 4;
  int samples = 0;  // 0 disables the sampling phase
  int sample_a = 5;
  int sample_b = 5;

  std::string describe() const {
    std::string out;
    if (exh_a >= 0)
      out += "exhaustive over all shapes up to " + std::to_string(exh_a) + "x" +
             std::to_string(exh_b);
    if (samples > 0) {
      if (!out.empty()) out += " plus ";
      out += std::to_string(samples) + " seeded " + std::to_string(sample_a) + "x" +
             std::to_string(sample_b) + " samples";
    }
    return out;
  }
};

VerificationReport run_universe(const std::string& name, const Scope& scope,
                                const UniverseSpec& u, const Checker& raw_check) {
  Checker check = wrap(raw_check);
  FailureSlot slot;
  std::uint64_t rank_base = 0;
  if (u.exh_a >= 0) {
    for (int a = 0; a <= u.exh_a; ++a) {
      for (int b = 0; b <= u.exh_b; ++b) {
        const std::uint64_t total = context_code_count(a, b);
        parallel_for(total, scope.jobs, [&](std::uint64_t code) {
          FormalContext k = context_from_code(a, b, code);
          if (auto bad = check(k)) slot.offer(rank_base + code, k, *bad);
        });
        rank_base += total;
      }
    }
  }
  if (u.samples > 0) {
    parallel_for(static_cast<std::uint64_t>(u.samples), scope.jobs, [&](std::uint64_t i) {
      FormalContext k = random_context(u.sample_a, u.sample_b, kSampleDensities[i % 5],
                                       scope.seed + i);
      if (auto bad = check(k)) slot.offer(rank_base + i, k, *bad);
    });
  }

  VerificationReport report;
  report.property = name;
  report.universe = u.describe();
  report.seed = scope.seed;
  if (slot.failed) {
    report.pass = false;
    FormalContext minimal = shrink_counterexample(slot.ctx, check);
    report.details = check(minimal).value_or(slot.detail);
    report.counterexample_cxt = write_cxt(minimal);
  }
  return report;
}

VerificationReport direct_report(const std::string& name, std::string universe,
                                 const Scope& scope, std::optional<std::string> failure,
                                 std::string counterexample = {}) {
  VerificationReport report;
  report.property = name;
  report.universe = std::move(universe);
  report.seed = scope.seed;
  if (failure) {
    report.pass = false;
    report.details = *failure;
    report.counterexample_cxt = std::move(counterexample);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Shared helpers for checkers
// ---------------------------------------------------------------------------

template <typename Fn>
void for_each_mask(int n, Fn&& fn) {
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) fn(Bitset::from_u64(n, mask));
}

// Visits (S, T) with S a subset of T.
template <typename Fn>
void for_each_nested_pair(int n, Fn&& fn) {
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t t = 0; t < total; ++t) {
    std::uint64_t s = t;
    for (;;) {
      fn(Bitset::from_u64(n, s), Bitset::from_u64(n, t));
      if (s == 0) break;
      s = (s - 1) & t;
    }
  }
}

template <typename Fn>
void for_each_non_incidence(const FormalContext& k, Fn&& fn) {
  for (int g = 0; g < k.object_count(); ++g)
    for (int m = 0; m < k.attribute_count(); ++m)
      if (!k.incident(g, m)) fn(g, m);
}

std::string pair_label(const FormalContext& k, int g, int m) {
  return "(" + k.object_name(g) + ", " + k.attribute_name(m) + ")";
}

bool splitting_free(const FormalContext& k) {
  return contranominal_summand_size(k) == 0;
}

// All co-extents, plus every subset of G on small contexts; the R-universe
// for properties quantified over arbitrary R.
std::vector<Bitset> r_candidates(const FormalContext& k) {
  std::vector<Bitset> out;
  const int n = k.object_count();
  if (n <= 3) {
    for_each_mask(n, [&](const Bitset& r) { out.push_back(r); });
    return out;
  }
  std::unordered_set<Bitset, BitsetHash> seen;
  for (int m = 0; m < k.attribute_count(); ++m) seen.insert(k.co_extent_bits(m));
  seen.insert(Bitset(n));
  seen.insert(Bitset::ones(n));
  out.assign(seen.begin(), seen.end());
  return out;
}

std::vector<Bitset> mixgens_for(const FormalContext& k, const Bitset& r) {
  std::vector<Bitset> out;
  for_each_mask(k.object_count(), [&](const Bitset& s) {
    if (is_mixed_generator_bits(k, r, s)) out.push_back(s);
  });
  return out;
}

// ---------------------------------------------------------------------------
// Checkers
// ---------------------------------------------------------------------------

std::optional<std::string> check_derivation_antitone(const FormalContext& k) {
  std::optional<std::string> bad;
  for_each_nested_pair(k.object_count(), [&](const Bitset& s, const Bitset& t) {
    if (bad) return;
    if (!k.common_attributes(t).is_subset_of(k.common_attributes(s)))
      bad = "object derivation not antitone at " + s.to_string() + " within " + t.to_string();
  });
  if (bad) return bad;
  for_each_nested_pair(k.attribute_count(), [&](const Bitset& s, const Bitset& t) {
    if (bad) return;
    if (!k.common_objects(t).is_subset_of(k.common_objects(s)))
      bad = "attribute derivation not antitone at " + s.to_string() + " within " + t.to_string();
  });
  return bad;
}

std::optional<std::string> check_closure_laws(const FormalContext& k) {
  std::optional<std::string> bad;
  for_each_mask(k.object_count(), [&](const Bitset& s) {
    if (bad) return;
    Bitset c = k.extent_closure(s);
    if (!s.is_subset_of(c)) bad = "closure not extensive at " + s.to_string();
    else if (!(k.extent_closure(c) == c)) bad = "closure not idempotent at " + s.to_string();
  });
  if (bad) return bad;
  for_each_nested_pair(k.object_count(), [&](const Bitset& s, const Bitset& t) {
    if (bad) return;
    if (!k.extent_closure(s).is_subset_of(k.extent_closure(t)))
      bad = "closure not monotone at " + s.to_string() + " within " + t.to_string();
  });
  return bad;
}

std::optional<std::string> check_doubling(const FormalContext& k) {
  std::optional<std::string> bad;
  for_each_non_incidence(k, [&](int g, int m) {
    if (bad) return;
    std::uint64_t doubled = 2 * count_concepts(k.delete_pair(g, m));
    std::uint64_t opped = count_concepts(k.apply_op(g, m));
    if (doubled != opped)
      bad = "fill edit at " + pair_label(k, g, m) + " gives " + std::to_string(opped) +
            " concepts, expected " + std::to_string(doubled);
  });
  return bad;
}

std::optional<std::string> check_op_locality(const FormalContext& k) {
  std::optional<std::string> bad;
  for_each_non_incidence(k, [&](int g, int m) {
    if (bad) return;
    FormalContext l = k.apply_op(g, m);
    Bitset expect_row = Bitset::ones(k.attribute_count());
    expect_row.reset(m);
    if (!(l.row(g) == expect_row)) {
      bad = "filled row wrong at " + pair_label(k, g, m);
      return;
    }
    Bitset expect_col = Bitset::ones(k.object_count());
    expect_col.reset(g);
    if (!(l.column(m) == expect_col)) {
      bad = "filled column wrong at " + pair_label(k, g, m);
      return;
    }
    for (int h = 0; h < k.object_count() && !bad; ++h) {
      if (h == g) continue;
      Bitset diff = l.row(h);
      diff.subtract(k.row(h));
      // Other rows may change at m only.
      if (diff.any() && !(diff.count() == 1 && diff.test(m)))
        bad = "entry outside the filled line changed at object " + k.object_name(h);
      Bitset lost = k.row(h);
      lost.subtract(l.row(h));
      if (lost.any()) bad = "edit removed an incidence at object " + k.object_name(h);
    }
  });
  return bad;
}

std::optional<std::string> check_mixgen_extent_test(const FormalContext& k) {
  std::optional<std::string> bad;
  for (const Bitset& r : r_candidates(k)) {
    if (bad) break;
    for_each_mask(k.object_count(), [&](const Bitset& s) {
      if (bad) return;
      if (!is_mixed_generator_bits(k, r, s)) return;
      Bitset gap = k.extent_closure(s);
      gap.subtract(s);
      bool characterized = !gap.intersects(r);
      if (is_extent(k, s) != characterized)
        bad = "extent test fails for S=" + s.to_string() + ", R=" + r.to_string();
    });
  }
  return bad;
}

std::optional<std::string> check_disjoint_mixgen_extent(const FormalContext& k) {
  std::optional<std::string> bad;
  for (int m = 0; m < k.attribute_count() && !bad; ++m) {
    Bitset r = k.co_extent_bits(m);
    for_each_mask(k.object_count(), [&](const Bitset& s) {
      if (bad) return;
      if (s.intersects(r)) return;
      if (is_mixed_generator_bits(k, r, s) != is_extent(k, s))
        bad = "disjoint-from-R equivalence fails for S=" + s.to_string() +
              " at attribute " + k.attribute_name(m);
    });
  }
  return bad;
}

std::optional<std::string> check_unique_self_generator(const FormalContext& k) {
  std::optional<std::string> bad;
  for (const Bitset& r : r_candidates(k)) {
    if (bad) break;
    std::unordered_map<Bitset, std::pair<int, bool>, BitsetHash> groups;
    for_each_mask(k.object_count(), [&](const Bitset& s) {
      if (!is_mixed_generator_bits(k, r, s)) return;
      Bitset c = k.extent_closure(s);
      auto& entry = groups[c];
      entry.first += 1;
      if (c == s) entry.second = true;
    });
    for (const auto& [closure, entry] : groups) {
      if (entry.second && entry.first != 1) {
        bad = "extent " + closure.to_string() + " is its own generator but not the only one (R=" +
              r.to_string() + ")";
        break;
      }
    }
  }
  return bad;
}

std::optional<std::string> check_restriction_closure(const FormalContext& k) {
  std::optional<std::string> bad;
  // Removing any part of S ∩ R keeps the generator property, for any R.
  for (const Bitset& r : r_candidates(k)) {
    if (bad) break;
    for (const Bitset& s : mixgens_for(k, r)) {
      if (bad) break;
      std::vector<int> inner = (s & r).members();
      const std::uint64_t total = std::uint64_t{1} << inner.size();
      for (std::uint64_t v = 1; v < total && !bad; ++v) {
        Bitset t = s;
        for (size_t i = 0; i < inner.size(); ++i)
          if ((v >> i) & 1u) t.reset(inner[i]);
        if (!is_mixed_generator_bits(k, r, t))
          bad = "restriction of " + s.to_string() + " by R=" + r.to_string() +
                " is not a generator";
      }
    }
  }
  if (bad) return bad;
  // With R the co-extent of m, S \ R is an extent and survives every fill edit.
  for (int m = 0; m < k.attribute_count() && !bad; ++m) {
    Bitset r = k.co_extent_bits(m);
    std::vector<Bitset> gens = mixgens_for(k, r);
    for (const Bitset& s : gens) {
      Bitset res = difference(s, r);
      if (!is_extent(k, res)) {
        bad = "restricted set " + res.to_string() + " is not an extent (attribute " +
              k.attribute_name(m) + ")";
        break;
      }
    }
    if (bad) break;
    std::vector<int> choices = r.members();
    for (int g : choices) {
      if (bad) break;
      FormalContext l = k.apply_op(g, m);
      for (const Bitset& s : gens) {
        Bitset res = difference(s, r);
        if (!is_mixed_generator_bits(l, r, res)) {
          bad = "restricted set " + res.to_string() + " stops generating after the fill edit " +
                pair_label(k, g, m);
          break;
        }
      }
    }
  }
  return bad;
}

std::optional<std::string> check_mixgen_survival(const FormalContext& k) {
  std::optional<std::string> bad;
  for (int m = 0; m < k.attribute_count() && !bad; ++m) {
    Bitset r = k.co_extent_bits(m);
    std::vector<Bitset> gens = mixgens_for(k, r);
    for (int g : r.members()) {
      if (bad) break;
      FormalContext l = k.apply_op(g, m);
      for (const Bitset& s : gens) {
        if (bad) break;
        Bitset closure_l = l.extent_closure(s);
        Bitset outside = Bitset::ones(k.object_count());
        outside.subtract(s);
        outside.subtract(r);
        outside.for_each([&](int h) {
          if (bad) return;
          if (l.extent_closure(s.with(h)) == closure_l)
            bad = "outside-addition criticality lost for S=" + s.to_string() + " at " +
                  pair_label(k, g, m);
        });
        if (!bad && !s.intersects(r) && !is_mixed_generator_bits(l, r, s))
          bad = "R-disjoint generator " + s.to_string() + " does not survive " +
                pair_label(k, g, m);
      }
    }
  }
  return bad;
}

std::optional<std::string> check_non_survivor_characterization(const FormalContext& k) {
  std::optional<std::string> bad;
  for (int m = 0; m < k.attribute_count() && !bad; ++m) {
    Bitset r = k.co_extent_bits(m);
    std::vector<Bitset> gens = mixgens_for(k, r);
    for (int g : r.members()) {
      if (bad) break;
      FormalContext l = k.apply_op(g, m);
      for (const Bitset& s : gens) {
        if (bad) break;
        bool survives = is_mixed_generator_bits(l, r, s);
        Bitset sr = s & r;
        bool characterized = false;
        if (sr.count() == 1) {
          int h = sr.first_set();
          if (h != g) {
            Bitset expected = k.common_attributes(s).with(m);
            characterized = l.common_attributes(s.without(h)) == expected;
          }
        }
        if (survives == characterized)
          bad = "drop characterization disagrees for S=" + s.to_string() + " at " +
                pair_label(k, g, m);
      }
    }
  }
  return bad;
}

std::optional<std::string> check_chi_antitone(const FormalContext& k) {
  std::optional<std::string> bad;
  for (int m = 0; m < k.attribute_count() && !bad; ++m) {
    for_each_nested_pair(k.object_count(), [&](const Bitset& s, const Bitset& t) {
      if (bad) return;
      if (!chi_bits(k, m, t).is_subset_of(chi_bits(k, m, s)))
        bad = "chi not antitone at attribute " + k.attribute_name(m) + " for " + s.to_string() +
              " within " + t.to_string();
    });
  }
  return bad;
}

std::optional<std::string> check_built_system(const FormalContext& k) {
  for (int m = 0; m < k.attribute_count(); ++m) {
    MixgenSystem sys = build_complete_system(k, m);
    if (!sys.complete || !sys.semi_downset)
      return std::string("built system lost its flags at attribute ") + k.attribute_name(m);
    const Bitset& r = sys.r.bits;
    for (const ObjectSet& s : sys.generators) {
      if (!is_mixed_generator_bits(k, r, s.bits))
        return "built member " + s.bits.to_string() + " is not a generator";
    }
    if (k.object_count() <= 3) {
      // Lex-minimality against the full subset space.
      for (const ObjectSet& s : sys.generators) {
        Bitset closure = k.extent_closure(s.bits);
        std::optional<std::string> bad;
        for_each_mask(k.object_count(), [&](const Bitset& t) {
          if (bad) return;
          if (t.lectic_less(s.bits) && k.extent_closure(t) == closure &&
              is_mixed_generator_bits(k, r, t))
            bad = "member " + s.bits.to_string() + " is not lectically minimal; " +
                  t.to_string() + " precedes it";
        });
        if (bad) return bad;
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_restriction_injective(const FormalContext& k) {
  for (int m = 0; m < k.attribute_count(); ++m) {
    Bitset r = k.co_extent_bits(m);
    if (r.none()) continue;
    MixgenSystem sys = build_complete_system(k, m);
    for (int g : r.members()) {
      Decomposition d = decompose(sys, g);
      std::unordered_set<Bitset, BitsetHash> images;
      for (int idx : d.members(GenClass::N)) {
        Bitset res = difference(sys.generators[static_cast<size_t>(idx)].bits, r);
        if (!images.insert(res).second)
          return "restriction collides on the dropped class at " + pair_label(k, g, m);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_chi_separates(const FormalContext& k) {
  for (int m = 0; m < k.attribute_count(); ++m) {
    Bitset r = k.co_extent_bits(m);
    if (r.none()) continue;
    MixgenSystem sys = build_complete_system(k, m);
    for (int g : r.members()) {
      Decomposition d = decompose(sys, g);
      for (int idx : d.members(GenClass::CR)) {
        Bitset res = difference(sys.generators[static_cast<size_t>(idx)].bits, r);
        if (!(chi_bits(k, m, res) == r))
          return "chi of the restriction is not all of R for a member containing R at " +
                 pair_label(k, g, m);
      }
      for (int idx : d.members(GenClass::N)) {
        Bitset res = difference(sys.generators[static_cast<size_t>(idx)].bits, r);
        if (chi_bits(k, m, res) == r)
          return "chi of the restriction reaches all of R for a dropped member at " +
                 pair_label(k, g, m);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_closure_growth(const FormalContext& k) {
  for (int m = 0; m < k.attribute_count(); ++m) {
    Bitset r = k.co_extent_bits(m);
    if (r.none()) continue;
    MixgenSystem sys = build_complete_system(k, m);
    for (int g : r.members()) {
      Decomposition d = decompose(sys, g);
      for (size_t i = 0; i < sys.generators.size(); ++i) {
        if (d.labels[i] == GenClass::CnotR) continue;
        const Bitset& s = sys.generators[i].bits;
        Bitset ii = k.extent_closure(s);
        Bitset jj = d.opped.extent_closure(s);
        Bitset chibar = difference(r, chi_bits(k, m, s));
        Bitset grow = ii;
        grow.subtract(s);
        if (!grow.is_subset_of(chibar))
          return "closure growth escapes chi-bar for S=" + s.to_string() + " at " +
                 pair_label(k, g, m);
        Bitset grow_l = jj;
        grow_l.subtract(ii);
        if (!grow_l.is_subset_of(chibar))
          return "edited-closure growth escapes chi-bar for S=" + s.to_string() + " at " +
                 pair_label(k, g, m);
        if (d.labels[i] == GenClass::CR && !(s == ii && s == jj))
          return "member containing R is not closed in both contexts at " + pair_label(k, g, m);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_class_stability(const FormalContext& k) {
  for (int m = 0; m < k.attribute_count(); ++m) {
    if (k.co_extent_bits(m).none()) continue;
    MixgenSystem sys = build_complete_system(k, m);
    if (!check_stability(sys))
      return std::string("class stability fails at attribute ") + k.attribute_name(m);
  }
  return std::nullopt;
}

std::optional<std::string> check_object_selection(const FormalContext& k) {
  for (int m = 0; m < k.attribute_count(); ++m) {
    Bitset r = k.co_extent_bits(m);
    if (r.none()) continue;
    MixgenSystem sys = build_complete_system(k, m);
    ObjectSelection sel = select_op_object(k, m, sys);
    std::uint64_t stable_size = 0;
    if (!sel.counts.empty())
      stable_size = sel.counts.front().containing + sel.counts.front().omitting;
    for (const SelectionCount& c : sel.counts) {
      if (c.containing + c.omitting != stable_size)
        return std::string("selection counts disagree on the stable class size at attribute ") +
               k.attribute_name(m);
      // Literal cross-check: decompose with this object and compare classes.
      Decomposition d = decompose(sys, c.object);
      if (d.members(GenClass::B).size() != c.omitting ||
          d.members(GenClass::CnotR).size() != c.containing)
        return "selection counts disagree with the literal classes at " +
               pair_label(k, c.object, m);
    }
    Decomposition d = decompose(sys, sel.selected);
    if (d.members(GenClass::B).size() < d.members(GenClass::CnotR).size())
      return "selected object does not satisfy |B| >= |CnotR| at " +
             pair_label(k, sel.selected, m);
    if (count_concepts(k.apply_op(sel.selected, m)) < count_concepts(k))
      return "fill edit with the selected object loses concepts at " +
             pair_label(k, sel.selected, m);
  }
  return std::nullopt;
}

std::optional<std::string> check_decomposition_audit(const FormalContext& k) {
  for (int m = 0; m < k.attribute_count(); ++m) {
    Bitset r = k.co_extent_bits(m);
    if (r.none()) continue;
    MixgenSystem sys = build_complete_system(k, m);
    for (int g : r.members()) {
      DecompositionAudit audit = audit_decomposition(decompose(sys, g));
      if (!audit.pass)
        return "audit fails at " + pair_label(k, g, m) + ": " + audit.first_violation;
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_rich_pair_existence(const FormalContext& k) {
  auto pair = find_rich_pair(k);
  if (!k.has_non_incidence() || k.object_count() == 0 || k.attribute_count() == 0) {
    if (pair) return std::string("found a pair although none exists");
    return std::nullopt;
  }
  if (!pair) return std::string("no rich pair found");
  auto [g, m] = *pair;
  if (k.incident(g, m)) return "returned pair " + pair_label(k, g, m) + " is incident";
  if (!is_rich_pair(k, g, m)) return "returned pair " + pair_label(k, g, m) + " is not rich";
  if (k.object_count() * k.attribute_count() <= 9) {
    // Independent recount through the all-subsets oracle.
    if (2 * oracle_concept_count(k.delete_pair(g, m)) < oracle_concept_count(k))
      return "oracle recount rejects the pair " + pair_label(k, g, m);
  }
  return std::nullopt;
}

std::optional<std::string> check_rich_iff_gain(const FormalContext& k) {
  std::optional<std::string> bad;
  const std::uint64_t base = count_concepts(k);
  for_each_non_incidence(k, [&](int g, int m) {
    if (bad) return;
    bool rich = is_rich_pair(k, g, m);
    bool gains = count_concepts(k.apply_op(g, m)) >= base;
    if (rich != gains)
      bad = "richness and fill-edit gain disagree at " + pair_label(k, g, m);
  });
  return bad;
}

std::optional<std::string> check_nop_monotonic(const FormalContext& k) {
  ContranominalDecomposition dec = noncontranominal_kernel(k);
  NopStep step = nop_step(k);
  const bool degenerate =
      dec.kernel.object_count() == 0 || dec.kernel.attribute_count() == 0;
  if (degenerate != (step.kind == NopCase::FixedPoint))
    return std::string("fixed point does not match the degenerate-kernel condition");
  if (step.kind == NopCase::FixedPoint) {
    if (!same_incidence(step.result, k)) return std::string("fixed point changed the context");
    return std::nullopt;
  }
  if (step.kind == NopCase::RemoveIncidence && !dec.kernel.is_full())
    return std::string("incidence-removal case fired on a kernel with a non-incidence");
  if (step.kind == NopCase::Op && dec.kernel.is_full())
    return std::string("fill-edit case fired on a full kernel");
  if (count_concepts(step.result) < count_concepts(k))
    return std::string("step lost concepts");
  int before = contrast(k);
  int after = contrast(step.result);
  if (after < before || after > before + 1)
    return "contrast moved from " + std::to_string(before) + " to " + std::to_string(after);
  if (contranominal_summand_size(step.result) <= contranominal_summand_size(k))
    return std::string("summand size did not grow");
  return std::nullopt;
}

std::optional<std::string> check_summand_kernel(const FormalContext& k) {
  ContranominalDecomposition dec = noncontranominal_kernel(k);
  if (dec.summand_size != static_cast<int>(dec.peeled_pairs.size()))
    return std::string("summand size does not match the peeled pairs");
  if (dec.summand_size > contrast(k))
    return std::string("summand size exceeds the contrast");
  for (const auto& [g, m] : dec.peeled_pairs) {
    Bitset row_misses = k.co_intent_bits(g);
    Bitset col_misses = k.co_extent_bits(m);
    if (!(row_misses.count() == 1 && row_misses.test(m) && col_misses.count() == 1 &&
          col_misses.test(g)))
      return "peeled pair " + pair_label(k, g, m) + " is not splitting";
  }
  if (!splitting_free(dec.kernel))
    return std::string("kernel still has a splitting pair");
  // Reassemble kernel + scale and compare entry by entry under the known
  // index mapping.
  FormalContext assembled = direct_sum(dec.kernel, FormalContext::contranominal(dec.summand_size));
  std::vector<int> obj_pos(static_cast<size_t>(k.object_count()), -1);
  std::vector<int> attr_pos(static_cast<size_t>(k.attribute_count()), -1);
  for (size_t i = 0; i < dec.kernel_objects.size(); ++i)
    obj_pos[static_cast<size_t>(dec.kernel_objects[i])] = static_cast<int>(i);
  for (size_t i = 0; i < dec.kernel_attributes.size(); ++i)
    attr_pos[static_cast<size_t>(dec.kernel_attributes[i])] = static_cast<int>(i);
  for (size_t p = 0; p < dec.peeled_pairs.size(); ++p) {
    obj_pos[static_cast<size_t>(dec.peeled_pairs[p].first)] =
        dec.kernel.object_count() + static_cast<int>(p);
    attr_pos[static_cast<size_t>(dec.peeled_pairs[p].second)] =
        dec.kernel.attribute_count() + static_cast<int>(p);
  }
  for (int g = 0; g < k.object_count(); ++g)
    for (int m = 0; m < k.attribute_count(); ++m)
      if (assembled.incident(obj_pos[static_cast<size_t>(g)], attr_pos[static_cast<size_t>(m)]) !=
          k.incident(g, m))
        return "reassembly differs at " + pair_label(k, g, m);
  return std::nullopt;
}

int contrast_oracle(const FormalContext& k) {
  const int n = k.object_count();
  const int mm = k.attribute_count();
  int best = 0;
  // Literal definition: equal-size object and attribute subsets admitting a
  // pairing that misses exactly on matched pairs.
  std::function<bool(const std::vector<int>&, const std::vector<int>&, std::uint64_t, size_t)>
      match = [&](const std::vector<int>& objs, const std::vector<int>& attrs,
                  std::uint64_t used, size_t idx) -> bool {
    if (idx == objs.size()) return true;
    int g = objs[idx];
    for (size_t j = 0; j < attrs.size(); ++j) {
      if ((used >> j) & 1u) continue;
      bool feasible = !k.incident(g, attrs[j]);
      for (size_t t = 0; t < attrs.size() && feasible; ++t)
        if (t != j && !k.incident(g, attrs[t])) feasible = false;
      if (feasible && match(objs, attrs, used | (std::uint64_t{1} << j), idx + 1)) return true;
    }
    return false;
  };
  for (std::uint64_t om = 0; om < (std::uint64_t{1} << n); ++om) {
    std::vector<int> objs = Bitset::from_u64(n, om).members();
    if (static_cast<int>(objs.size()) <= best) continue;
    for (std::uint64_t am = 0; am < (std::uint64_t{1} << mm); ++am) {
      std::vector<int> attrs = Bitset::from_u64(mm, am).members();
      if (attrs.size() != objs.size()) continue;
      if (match(objs, attrs, 0, 0)) {
        best = static_cast<int>(objs.size());
        break;
      }
    }
  }
  return best;
}

std::optional<std::string> check_contrast_search(const FormalContext& k) {
  int fast = contrast(k);
  int slow = contrast_oracle(k);
  if (fast != slow)
    return "contrast " + std::to_string(fast) + " disagrees with the oracle " +
           std::to_string(slow);
  return std::nullopt;
}

std::optional<std::string> check_oracle_agreement(const FormalContext& k) {
  std::uint64_t fast = count_concepts(k);
  std::uint64_t slow = oracle_concept_count(k);
  if (fast != slow)
    return "count " + std::to_string(fast) + " disagrees with the oracle " +
           std::to_string(slow);
  return std::nullopt;
}

// The known 5x6 plateau context: every fill edit keeps exactly 22 concepts.
FormalContext plateau_context() {
  return FormalContext::from_pattern(
      {"1", "2", "3", "4", "5"}, {"a", "b", "c", "d", "e", "f"},
      {"..XXXX", "XX..XX", "XXXX..", ".X.X.X", "X.X.X."});
}

// ---------------------------------------------------------------------------
// Bespoke property runners
// ---------------------------------------------------------------------------

VerificationReport run_direct_sum_product(const Scope& scope) {
  const std::string universe =
      "all pairs of 2x2 contexts plus 200 seeded pairs of 3x3 contexts";
  std::optional<std::string> failure;
  std::string counterexample;
  auto verify_pair = [&](const FormalContext& a, const FormalContext& b) {
    if (failure) return;
    std::uint64_t expected = count_concepts(a) * count_concepts(b);
    FormalContext sum = direct_sum(a, b);
    if (count_concepts(sum) != expected) {
      failure = "sum concept count is not the product";
      counterexample = write_cxt(sum);
    }
  };
  enumerate_contexts(2, 2, [&](const FormalContext& a) {
    enumerate_contexts(2, 2, [&](const FormalContext& b) { verify_pair(a, b); });
  });
  for (int i = 0; i < 200 && !failure; ++i) {
    FormalContext a = random_context(3, 3, kSampleDensities[i % 5], scope.seed + 2 * i);
    FormalContext b = random_context(3, 3, kSampleDensities[(i + 2) % 5], scope.seed + 2 * i + 1);
    verify_pair(a, b);
  }
  return direct_report("direct-sum-product", universe, scope, failure, counterexample);
}

VerificationReport run_contranominal_counts(const Scope& scope) {
  std::optional<std::string> failure;
  std::string counterexample;
  for (int j = 0; j <= 10 && !failure; ++j) {
    FormalContext cn = FormalContext::contranominal(j);
    std::uint64_t expected = std::uint64_t{1} << j;
    if (count_concepts(cn) != expected || oracle_concept_count(cn) != expected) {
      failure = "scale of size " + std::to_string(j) + " does not have 2^" + std::to_string(j) +
                " concepts";
      counterexample = write_cxt(cn);
    }
  }
  if (!failure) {
    // Appending a full column never changes the concept count.
    for (int a = 0; a <= std::min(3, scope.max_a) && !failure; ++a) {
      for (int b = 0; b <= std::min(3, scope.max_b) && !failure; ++b) {
        enumerate_contexts(a, b, [&](const FormalContext& k) {
          if (failure) return;
          std::vector<Bitset> rows;
          for (int g = 0; g < a; ++g) {
            Bitset r(b + 1);
            k.row(g).for_each([&](int m) { r.set(m); });
            r.set(b);
            rows.push_back(std::move(r));
          }
          std::vector<std::string> anames = k.attribute_names();
          anames.push_back("full");
          FormalContext widened(k.object_names(), anames, std::move(rows));
          if (count_concepts(widened) != count_concepts(k)) {
            failure = "appending a full column changed the concept count";
            counterexample = write_cxt(k);
          }
        });
      }
    }
  }
  return direct_report("contranominal-counts",
                       "scales up to size 10 plus full-column apposition on shapes up to 3x3",
                       scope, failure, counterexample);
}

VerificationReport run_op_resistance(const Scope& scope) {
  FormalContext k = plateau_context();
  std::optional<std::string> failure;
  if (count_concepts(k) != 22) {
    failure = "plateau context does not have 22 concepts";
  } else {
    for_each_non_incidence(k, [&](int g, int m) {
      if (failure) return;
      std::uint64_t c = count_concepts(k.apply_op(g, m));
      if (c != 22)
        failure = "fill edit at " + pair_label(k, g, m) + " gives " + std::to_string(c) +
                  " concepts instead of exactly 22";
    });
  }
  return direct_report("op-resistance", "the fixed 5x6 plateau context, every non-incident pair",
                       scope, failure, failure ? write_cxt(k) : std::string{});
}

VerificationReport run_summand_sum_phase(const Scope& scope) {
  std::optional<std::string> failure;
  std::string counterexample;
  for (int i = 0; i < 200 && !failure; ++i) {
    FormalContext base = random_context(3, 3, kSampleDensities[i % 5], scope.seed + 7000 + i);
    int j = i % 4;
    FormalContext sum = direct_sum(FormalContext::contranominal(j), base);
    if (contranominal_summand_size(sum) !=
        j + contranominal_summand_size(base)) {
      failure = "summand size is not additive over a scale summand";
      counterexample = write_cxt(sum);
      break;
    }
    ContranominalDecomposition ds = noncontranominal_kernel(sum);
    ContranominalDecomposition db = noncontranominal_kernel(base);
    if (!same_incidence(ds.kernel, db.kernel)) {
      failure = "kernel changed under a scale summand";
      counterexample = write_cxt(sum);
    }
  }
  return direct_report("summand-additivity",
                       "200 seeded 3x3 contexts summed with scales of size 0..3", scope, failure,
                       counterexample);
}

VerificationReport run_extremal_witness(const Scope& scope) {
  std::optional<std::string> failure;
  struct Case {
    int a, b, c;
  };
  for (const Case& cs : {Case{3, 3, 2}, Case{4, 4, 3}}) {
    ExtremalReport rep = extremal_search(cs.a, cs.b, cs.c, scope.jobs);
    if (rep.extremal_count == 0) {
      failure = "no extremal context found";
      break;
    }
    if (!rep.witness_has_smaller_scale) {
      failure = "no extremal context contains a scale of size " + std::to_string(cs.c - 1) +
                " for shape " + std::to_string(cs.a) + "x" + std::to_string(cs.b);
      break;
    }
    if (!rep.bound_holds) {
      failure = "extremal count exceeds the binomial bound";
      break;
    }
    if (contrast(rep.witness) != cs.c - 1 || count_concepts(rep.witness) != rep.max_concepts) {
      failure = "witness does not match the report";
      break;
    }
  }
  return direct_report("extremal-witness", "exhaustive shapes 3x3 (scale 2) and 4x4 (scale 3)",
                       scope, failure);
}

VerificationReport run_binomial_bound(const Scope& scope) {
  std::optional<std::string> failure;
  std::string counterexample;
  for (int a = 1; a <= std::min(4, scope.max_a) && !failure; ++a) {
    for (int c = 1; c <= 3 && !failure; ++c) {
      VerificationReport rep = check_binomial_bound(a, c, std::min(4, scope.max_b), scope.jobs);
      if (!rep.pass) {
        failure = rep.details;
        counterexample = rep.counterexample_cxt;
      }
    }
  }
  return direct_report("binomial-bound", "objects up to 4, scales up to 3, attributes up to 4",
                       scope, failure, counterexample);
}

VerificationReport run_oracle_agreement(const Scope& scope) {
  Checker check = wrap(check_oracle_agreement);
  FailureSlot slot;
  std::uint64_t rank_base = 0;
  for (int a = 0; a <= 12; ++a) {
    for (int b = 0; b <= 12; ++b) {
      if (a * b > 12) continue;
      const std::uint64_t total = context_code_count(a, b);
      parallel_for(total, scope.jobs, [&](std::uint64_t code) {
        FormalContext k = context_from_code(a, b, code);
        if (auto bad = check(k)) slot.offer(rank_base + code, k, *bad);
      });
      rank_base += total;
    }
  }
  parallel_for(static_cast<std::uint64_t>(scope.samples), scope.jobs, [&](std::uint64_t i) {
    FormalContext k = random_context(5, 5, kSampleDensities[i % 5], scope.seed + i);
    if (auto bad = check(k)) slot.offer(rank_base + i, k, *bad);
  });
  VerificationReport report;
  report.property = "oracle-agreement";
  report.universe = "every shape with at most 12 cells plus " + std::to_string(scope.samples) +
                    " seeded 5x5 samples";
  report.seed = scope.seed;
  if (slot.failed) {
    report.pass = false;
    FormalContext minimal = shrink_counterexample(slot.ctx, check);
    report.details = check(minimal).value_or(slot.detail);
    report.counterexample_cxt = write_cxt(minimal);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

struct PropertyDef {
  const char* name;
  const char* group;
  std::function<VerificationReport(const Scope&)> run;
};

UniverseSpec exhaustive_only(const Scope& s, int cap_a = 4, int cap_b = 4) {
  UniverseSpec u;
  u.exh_a = std::min(s.max_a, cap_a);
  u.exh_b = std::min(s.max_b, cap_b);
  return u;
}

UniverseSpec with_samples(const Scope& s, int cap_a = 4, int cap_b = 4) {
  UniverseSpec u = exhaustive_only(s, cap_a, cap_b);
  u.samples = s.samples;
  return u;
}

const std::vector<PropertyDef>& registry() {
  static const std::vector<PropertyDef> defs = {
      {"derivation-antitone", "core",
       [](const Scope& s) {
         return run_universe("derivation-antitone", s, with_samples(s), check_derivation_antitone);
       }},
      {"closure-operator-laws", "core",
       [](const Scope& s) {
         return run_universe("closure-operator-laws", s, with_samples(s), check_closure_laws);
       }},
      {"pair-deletion-doubling", "core",
       [](const Scope& s) {
         return run_universe("pair-deletion-doubling", s, with_samples(s, 3, 3), check_doubling);
       }},
      {"op-edit-locality", "core",
       [](const Scope& s) {
         return run_universe("op-edit-locality", s, with_samples(s, 3, 3), check_op_locality);
       }},
      {"direct-sum-product", "core", run_direct_sum_product},
      {"contranominal-counts", "core", run_contranominal_counts},
      {"oracle-agreement", "core", run_oracle_agreement},
      {"mixgen-extent-test", "mixgen",
       [](const Scope& s) {
         return run_universe("mixgen-extent-test", s, exhaustive_only(s), check_mixgen_extent_test);
       }},
      {"disjoint-mixgen-extent", "mixgen",
       [](const Scope& s) {
         return run_universe("disjoint-mixgen-extent", s, exhaustive_only(s),
                             check_disjoint_mixgen_extent);
       }},
      {"unique-self-generator", "mixgen",
       [](const Scope& s) {
         return run_universe("unique-self-generator", s, exhaustive_only(s),
                             check_unique_self_generator);
       }},
      {"restriction-closure", "mixgen",
       [](const Scope& s) {
         return run_universe("restriction-closure", s, exhaustive_only(s),
                             check_restriction_closure);
       }},
      {"mixgen-survival", "mixgen",
       [](const Scope& s) {
         return run_universe("mixgen-survival", s, exhaustive_only(s), check_mixgen_survival);
       }},
      {"non-survivor-characterization", "mixgen",
       [](const Scope& s) {
         return run_universe("non-survivor-characterization", s, exhaustive_only(s),
                             check_non_survivor_characterization);
       }},
      {"chi-antitone", "mixgen",
       [](const Scope& s) {
         return run_universe("chi-antitone", s, with_samples(s), check_chi_antitone);
       }},
      {"built-system-valid", "mixgen",
       [](const Scope& s) {
         return run_universe("built-system-valid", s, exhaustive_only(s), check_built_system);
       }},
      {"restriction-injective", "decomposition",
       [](const Scope& s) {
         return run_universe("restriction-injective", s, exhaustive_only(s),
                             check_restriction_injective);
       }},
      {"chi-separates-classes", "decomposition",
       [](const Scope& s) {
         return run_universe("chi-separates-classes", s, exhaustive_only(s), check_chi_separates);
       }},
      {"closure-growth-bounds", "decomposition",
       [](const Scope& s) {
         return run_universe("closure-growth-bounds", s, exhaustive_only(s), check_closure_growth);
       }},
      {"class-stability", "decomposition",
       [](const Scope& s) {
         return run_universe("class-stability", s, exhaustive_only(s), check_class_stability);
       }},
      {"object-selection", "decomposition",
       [](const Scope& s) {
         return run_universe("object-selection", s, exhaustive_only(s), check_object_selection);
       }},
      {"decomposition-audit", "decomposition",
       [](const Scope& s) {
         return run_universe("decomposition-audit", s, with_samples(s, 3, 3),
                             check_decomposition_audit);
       }},
      {"rich-pair-existence", "editops",
       [](const Scope& s) {
         return run_universe("rich-pair-existence", s, exhaustive_only(s),
                             check_rich_pair_existence);
       }},
      {"rich-iff-op-gain", "editops",
       [](const Scope& s) {
         return run_universe("rich-iff-op-gain", s, with_samples(s, 3, 3), check_rich_iff_gain);
       }},
      {"op-resistance", "editops", run_op_resistance},
      {"nop-monotonic", "editops",
       [](const Scope& s) {
         return run_universe("nop-monotonic", s, exhaustive_only(s), check_nop_monotonic);
       }},
      {"summand-kernel", "editops",
       [](const Scope& s) {
         return run_universe("summand-kernel", s, exhaustive_only(s), check_summand_kernel);
       }},
      {"summand-additivity", "editops", run_summand_sum_phase},
      {"contrast-search", "editops",
       [](const Scope& s) {
         return run_universe("contrast-search", s, with_samples(s, 3, 3), check_contrast_search);
       }},
      {"extremal-witness", "extremal", run_extremal_witness},
      {"binomial-bound", "extremal", run_binomial_bound},
  };
  return defs;
}

}  // namespace

std::vector<std::string> property_names() {
  std::vector<std::string> out;
  for (const PropertyDef& d : registry()) out.push_back(d.name);
  return out;
}

std::vector<std::string> property_groups() {
  std::vector<std::string> out;
  for (const PropertyDef& d : registry())
    if (std::find(out.begin(), out.end(), d.group) == out.end()) out.push_back(d.group);
  return out;
}

std::vector<VerificationReport> run_property_suite(const Scope& scope,
                                                   const std::string& selection) {
  if (scope.max_a < 0 || scope.max_b < 0 || scope.samples < 0)
    throw UsageError("scope bounds must be non-negative");
  if (static_cast<long long>(scope.max_a) * scope.max_b > 16)
    throw GuardError("exhaustive scope is limited to 16 cells per context");
  std::vector<VerificationReport> out;
  bool matched = false;
  for (const PropertyDef& d : registry()) {
    if (selection != "all" && selection != d.group && selection != d.name) continue;
    matched = true;
    out.push_back(d.run(scope));
  }
  if (!matched) throw UsageError("unknown property or group: \"" + selection + "\"");
  return out;
}

ExtremalReport extremal_search(int objects, int attributes, int scale, int jobs) {
  if (scale < 1 || scale > std::min(objects, attributes) + 1)
    throw UsageError("scale must be between 1 and min(objects, attributes) + 1");
  const std::uint64_t total = context_code_count(objects, attributes);
  std::vector<std::uint32_t> counts(total, 0);  // 0 marks excluded contexts
  std::vector<std::int8_t> contrasts(total, 0);
  parallel_for(total, jobs, [&](std::uint64_t code) {
    FormalContext k = context_from_code(objects, attributes, code);
    int ct = contrast(k);
    contrasts[code] = static_cast<std::int8_t>(ct);
    if (ct < scale) counts[code] = static_cast<std::uint32_t>(count_concepts(k));
  });

  ExtremalReport rep;
  rep.objects = objects;
  rep.attributes = attributes;
  rep.scale = scale;
  std::uint64_t witness_code = 0;
  bool witness_found = false;
  for (std::uint64_t code = 0; code < total; ++code) {
    if (counts[code] == 0) continue;
    if (counts[code] > rep.max_concepts) {
      rep.max_concepts = counts[code];
      rep.extremal_count = 1;
      rep.witness_has_smaller_scale = contrasts[code] == scale - 1;
      witness_code = code;
      witness_found = contrasts[code] == scale - 1;
    } else if (counts[code] == rep.max_concepts) {
      rep.extremal_count += 1;
      if (!witness_found && contrasts[code] == scale - 1) {
        rep.witness_has_smaller_scale = true;
        witness_code = code;
        witness_found = true;
      }
    }
  }
  rep.witness = context_from_code(objects, attributes, witness_code);
  rep.binomial_bound = binomial_sum(objects, scale);
  rep.bound_holds = rep.max_concepts <= rep.binomial_bound;
  return rep;
}

VerificationReport check_binomial_bound(int objects, int scale, int max_attributes, int jobs) {
  if (objects < 0 || scale < 1) throw UsageError("objects must be >= 0 and scale >= 1");
  const std::uint64_t bound = binomial_sum(objects, scale);
  FailureSlot slot;
  std::uint64_t rank_base = 0;
  for (int b = 0; b <= max_attributes; ++b) {
    const std::uint64_t total = context_code_count(objects, b);
    parallel_for(total, jobs, [&](std::uint64_t code) {
      FormalContext k = context_from_code(objects, b, code);
      if (contrast(k) >= scale) return;
      std::uint64_t c = count_concepts(k);
      if (c > bound)
        slot.offer(rank_base + code, k,
                   "context has " + std::to_string(c) + " concepts, bound is " +
                       std::to_string(bound));
    });
    rank_base += total;
  }
  VerificationReport report;
  report.property = "binomial-bound";
  report.universe = std::to_string(objects) + " objects, scale " + std::to_string(scale) +
                    ", attributes up to " + std::to_string(max_attributes);
  if (slot.failed) {
    report.pass = false;
    report.details = slot.detail;
    report.counterexample_cxt = write_cxt(slot.ctx);
  }
  return report;
}

}  // namespace fca
