#include "fcakit/analysis.hpp"

#include <algorithm>
#include <stdexcept>

namespace fca {

std::vector<int> ObjectSelection::valid_objects() const {
  std::vector<int> out;
  for (const SelectionCount& c : counts)
    if (c.omitting >= c.containing) out.push_back(c.object);
  return out;
}

ObjectSelection select_op_object(const FormalContext& k, int attribute,
                                 const MixgenSystem& sys) {
  k.require_attribute(attribute);
  if (sys.context.id() != k.id())
    throw UsageError("system belongs to a different context");
  if (sys.attribute != attribute)
    throw UsageError("system was built for a different attribute");
  if (!sys.semi_downset)
    throw UsageError("selection needs a system with the semi-downset property");
  const Bitset& r = sys.r.bits;
  if (r.none()) throw DomainError("cannot select an object for a full column");

  // The class B ∪ CnotR does not depend on the object choice: it consists of
  // the members whose chi grows properly under S -> S \ R, minus those
  // containing all of R.
  std::vector<const Bitset*> stable;
  for (const ObjectSet& gen : sys.generators) {
    const Bitset& s = gen.bits;
    if (r.is_subset_of(s)) continue;
    Bitset chi_s = chi_bits(k, attribute, s);
    Bitset chi_res = chi_bits(k, attribute, difference(s, r));
    if (chi_s.is_proper_subset_of(chi_res)) stable.push_back(&s);
  }

  ObjectSelection sel;
  sel.attribute = attribute;
  r.for_each([&](int g) {
    SelectionCount c;
    c.object = g;
    for (const Bitset* s : stable)
      ++(s->test(g) ? c.containing : c.omitting);
    sel.counts.push_back(c);
  });
  for (const SelectionCount& c : sel.counts) {
    if (c.omitting >= c.containing) {
      sel.selected = c.object;
      break;
    }
  }
  if (sel.selected < 0)
    throw std::logic_error("internal: no valid object although one must exist");
  return sel;
}

bool is_rich_pair(const FormalContext& k, int g, int m) {
  k.require_object(g);
  k.require_attribute(m);
  if (k.incident(g, m)) throw DomainError("richness is defined for non-incident pairs");
  return 2 * count_concepts(k.delete_pair(g, m)) >= count_concepts(k);
}

std::optional<std::pair<int, int>> find_rich_pair(const FormalContext& k) {
  if (k.object_count() == 0 || k.attribute_count() == 0) return std::nullopt;
  // Attributes ordered by ascending co-extent size: fewer changed rows means
  // less decomposition work. Any non-full column would do.
  int best_m = -1;
  int best_size = k.object_count() + 1;
  for (int m = 0; m < k.attribute_count(); ++m) {
    int size = k.co_extent_bits(m).count();
    if (size > 0 && size < best_size) {
      best_size = size;
      best_m = m;
    }
  }
  if (best_m < 0) return std::nullopt;  // full context
  MixgenSystem sys = build_complete_system(k, best_m);
  ObjectSelection sel = select_op_object(k, best_m, sys);
  if (!is_rich_pair(k, sel.selected, best_m))
    throw std::logic_error("internal: selected pair is not rich");
  return std::make_pair(sel.selected, best_m);
}

namespace {

// DFS over object subsets in ascending index order. cands[t] holds the
// attributes that only members[t] misses within the current subset; these
// masks are pairwise disjoint and can only shrink, so empty means prune.
void contrast_dfs(const FormalContext& k, int next_obj, std::vector<int>& members,
                  std::vector<Bitset>& cands, const Bitset& common, int& best) {
  best = std::max(best, static_cast<int>(members.size()));
  const int n = k.object_count();
  for (int u = next_obj; u < n; ++u) {
    if (static_cast<int>(members.size()) + (n - u) <= best) break;
    Bitset mine = k.row(u).complemented();
    mine &= common;
    if (mine.none()) continue;
    std::vector<Bitset> next_cands;
    next_cands.reserve(members.size() + 1);
    bool ok = true;
    for (const Bitset& c : cands) {
      Bitset cut = c & k.row(u);
      if (cut.none()) {
        ok = false;
        break;
      }
      next_cands.push_back(std::move(cut));
    }
    if (!ok) continue;
    next_cands.push_back(std::move(mine));
    Bitset next_common = common & k.row(u);
    members.push_back(u);
    contrast_dfs(k, u + 1, members, next_cands, next_common, best);
    members.pop_back();
  }
}

}  // namespace

int contrast(const FormalContext& k) {
  if (k.object_count() == 0 || k.attribute_count() == 0) return 0;
  int best = 0;
  std::vector<int> members;
  std::vector<Bitset> cands;
  contrast_dfs(k, 0, members, cands, Bitset::ones(k.attribute_count()), best);
  return best;
}

namespace {

std::vector<std::pair<int, int>> splitting_pairs(const FormalContext& k) {
  std::vector<std::pair<int, int>> out;
  for (int g = 0; g < k.object_count(); ++g) {
    Bitset misses = k.co_intent_bits(g);
    if (misses.count() != 1) continue;
    int m = misses.first_set();
    Bitset col_misses = k.co_extent_bits(m);
    if (col_misses.count() == 1 && col_misses.test(g)) out.emplace_back(g, m);
  }
  return out;
}

}  // namespace

int contranominal_summand_size(const FormalContext& k) {
  return static_cast<int>(splitting_pairs(k).size());
}

ContranominalDecomposition noncontranominal_kernel(const FormalContext& k) {
  ContranominalDecomposition dec;
  dec.peeled_pairs = splitting_pairs(k);
  dec.summand_size = static_cast<int>(dec.peeled_pairs.size());
  Bitset keep_objects = Bitset::ones(k.object_count());
  Bitset keep_attributes = Bitset::ones(k.attribute_count());
  for (const auto& [g, m] : dec.peeled_pairs) {
    keep_objects.reset(g);
    keep_attributes.reset(m);
  }
  dec.kernel = k.subcontext(keep_objects, keep_attributes);
  dec.kernel_objects = keep_objects.members();
  dec.kernel_attributes = keep_attributes.members();
  return dec;
}

NopStep nop_step(const FormalContext& k) {
  ContranominalDecomposition dec = noncontranominal_kernel(k);
  const FormalContext& kern = dec.kernel;
  if (kern.object_count() == 0 || kern.attribute_count() == 0)
    return {NopCase::FixedPoint, std::nullopt, k};
  if (kern.is_full()) {
    int g = dec.kernel_objects.front();
    int m = dec.kernel_attributes.front();
    return {NopCase::RemoveIncidence, std::make_pair(g, m), k.remove_incidence(g, m)};
  }
  // Row/column fill case: among all kernel pairs (g, m) with g valid for m,
  // take the least by original (object, attribute) index.
  std::optional<std::pair<int, int>> best;
  for (int mk = 0; mk < kern.attribute_count(); ++mk) {
    if (kern.co_extent_bits(mk).none()) continue;
    MixgenSystem sys = build_complete_system(kern, mk);
    ObjectSelection sel = select_op_object(kern, mk, sys);
    const int orig_m = dec.kernel_attributes[static_cast<size_t>(mk)];
    for (int gk : sel.valid_objects()) {
      std::pair<int, int> cand{dec.kernel_objects[static_cast<size_t>(gk)], orig_m};
      if (!best || cand < *best) best = cand;
    }
  }
  if (!best) throw std::logic_error("internal: no valid pair in a non-full kernel");
  return {NopCase::Op, best, k.apply_op(best->first, best->second)};
}

NopTrace nop_sequence(const FormalContext& k, int forbidden_scale, std::size_t max_steps) {
  const int cap = std::min(k.object_count(), k.attribute_count()) + 1;
  if (forbidden_scale < 1 || forbidden_scale > cap)
    throw UsageError("forbidden scale must be between 1 and min(|G|,|M|)+1");

  NopTrace trace;
  trace.initial = k;
  trace.initial_concepts = count_concepts(k);
  trace.initial_contrast = contrast(k);
  trace.initial_summand = contranominal_summand_size(k);
  if (trace.initial_contrast >= forbidden_scale) {
    trace.stop = NopTrace::Stop::ClassBoundary;
    return trace;
  }
  FormalContext cur = k;
  while (true) {
    if (trace.steps.size() >= max_steps) {
      trace.stop = NopTrace::Stop::StepLimit;
      return trace;
    }
    NopStep step = nop_step(cur);
    if (step.kind == NopCase::FixedPoint) {
      trace.stop = NopTrace::Stop::FixedPoint;
      return trace;
    }
    int result_contrast = contrast(step.result);
    if (result_contrast >= forbidden_scale) {
      trace.stop = NopTrace::Stop::ClassBoundary;
      return trace;
    }
    NopTraceEntry entry;
    entry.kind = step.kind;
    entry.pair = step.pair;
    entry.concepts = count_concepts(step.result);
    entry.contrast_value = result_contrast;
    entry.summand = contranominal_summand_size(step.result);
    entry.context = step.result;
    trace.steps.push_back(std::move(entry));
    cur = std::move(step.result);
  }
}

}  // namespace fca
