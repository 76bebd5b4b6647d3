#include "fcakit/mixgen.hpp"

#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace fca {
namespace {

std::string set_label(const FormalContext& k, const Bitset& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](int g) {
    if (!first) out += ',';
    out += k.object_name(g);
    first = false;
  });
  return out + "}";
}

constexpr int kSubsetSearchLimit = 24;

}  // namespace

bool is_mixed_generator_bits(const FormalContext& k, const Bitset& r, const Bitset& s) {
  Bitset intent = k.common_attributes(s);
  Bitset closure = k.common_objects(intent);
  // ii) closure may not reach outside S ∪ R: an object of the closure can
  // be added without changing it.
  closure.subtract(s);
  closure.subtract(r);
  if (closure.any()) return false;
  // i) every element of S ∩ R must be needed.
  Bitset inside = s & r;
  bool ok = true;
  inside.for_each([&](int g) {
    if (!ok) return;
    if (k.common_attributes(s.without(g)) == intent) ok = false;
  });
  return ok;
}

bool is_mixed_generator(const FormalContext& k, const ObjectSet& r, const ObjectSet& s) {
  k.require_owned(r);
  k.require_owned(s);
  return is_mixed_generator_bits(k, r.bits, s.bits);
}

bool strongly_avoids(const FormalContext& k, int m, const ObjectSet& s, int h) {
  k.require_owned(s);
  k.require_attribute(m);
  k.require_object(h);
  Bitset witnesses = k.co_intent_bits(h);
  witnesses.reset(m);
  return k.common_attributes(s.bits).intersects(witnesses);
}

Bitset chi_bits(const FormalContext& k, int m, const Bitset& s) {
  Bitset r = k.co_extent_bits(m);
  Bitset intent = k.common_attributes(s);
  Bitset out(k.object_count());
  r.for_each([&](int h) {
    Bitset witnesses = k.co_intent_bits(h);
    witnesses.reset(m);
    if (intent.intersects(witnesses)) out.set(h);
  });
  return out;
}

ObjectSet chi(const FormalContext& k, int m, const ObjectSet& s) {
  k.require_owned(s);
  k.require_attribute(m);
  return {k.id(), chi_bits(k, m, s.bits)};
}

ObjectSet chi_bar(const FormalContext& k, int m, const ObjectSet& s) {
  k.require_owned(s);
  k.require_attribute(m);
  return {k.id(), difference(k.co_extent_bits(m), chi_bits(k, m, s.bits))};
}

Bitset lex_min_mixgen_bits(const FormalContext& k, const Bitset& r, const Bitset& extent) {
  if (!is_extent(k, extent))
    throw DomainError("lex_min_mixgen requires an extent");
  std::vector<int> elems = extent.members();
  const int n = static_cast<int>(elems.size());
  if (n > kSubsetSearchLimit)
    throw GuardError("generator search is infeasible for extents this large");
  const int width = extent.size();
  // Subsets of the extent in lectic order: counting with the lowest element
  // mapped to the most significant bit reproduces the order.
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t v = 0; v < total; ++v) {
    Bitset s(width);
    for (int t = 0; t < n; ++t)
      if ((v >> (n - 1 - t)) & 1u) s.set(elems[static_cast<size_t>(t)]);
    if (!(k.extent_closure(s) == extent)) continue;
    if (is_mixed_generator_bits(k, r, s)) return s;
  }
  throw std::logic_error("internal: extent without a generating subset");
}

ObjectSet lex_min_mixgen(const FormalContext& k, const ObjectSet& r, const ObjectSet& extent) {
  k.require_owned(r);
  k.require_owned(extent);
  return {k.id(), lex_min_mixgen_bits(k, r.bits, extent.bits)};
}

namespace {

// Submask walk over s ∩ r, including the empty and the full mask.
template <typename Fn>
void for_each_inner_subset(const FormalContext& k, const Bitset& s, const Bitset& r, Fn&& fn) {
  std::vector<int> elems = (s & r).members();
  if (elems.size() > static_cast<size_t>(kSubsetSearchLimit))
    throw GuardError("semi-downset check is infeasible for sets this large");
  const std::uint64_t total = std::uint64_t{1} << elems.size();
  for (std::uint64_t v = 0; v < total; ++v) {
    Bitset t(k.object_count());
    for (size_t i = 0; i < elems.size(); ++i)
      if ((v >> i) & 1u) t.set(elems[i]);
    fn(t);
  }
}

bool closures_distinct(const FormalContext& k, const std::vector<ObjectSet>& gens,
                       std::unordered_set<Bitset, BitsetHash>* out_closures) {
  std::unordered_set<Bitset, BitsetHash> closures;
  for (const ObjectSet& s : gens) {
    if (!closures.insert(k.extent_closure(s.bits)).second) return false;
  }
  if (out_closures) *out_closures = std::move(closures);
  return true;
}

bool family_semi_downset(const FormalContext& k, const Bitset& r,
                         const std::vector<ObjectSet>& gens) {
  std::unordered_set<Bitset, BitsetHash> present;
  for (const ObjectSet& s : gens) present.insert(s.bits);
  for (const ObjectSet& s : gens) {
    bool ok = true;
    for_each_inner_subset(k, s.bits, r, [&](const Bitset& t) {
      if (!ok) return;
      if (!present.count(difference(s.bits, t))) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

bool family_complete(const FormalContext& k,
                     const std::unordered_set<Bitset, BitsetHash>& closures) {
  std::uint64_t extents = 0;
  bool all_found = true;
  for_each_concept(k, [&](const Bitset& extent, const Bitset&) {
    ++extents;
    if (!closures.count(extent)) all_found = false;
  });
  return all_found && extents == closures.size();
}

}  // namespace

MixgenSystem build_complete_system(const FormalContext& k, int attribute) {
  k.require_attribute(attribute);
  Bitset r = k.co_extent_bits(attribute);
  MixgenSystem sys;
  sys.context = k;
  sys.attribute = attribute;
  sys.r = {k.id(), r};
  for_each_concept(k, [&](const Bitset& extent, const Bitset&) {
    sys.generators.push_back({k.id(), lex_min_mixgen_bits(k, r, extent)});
  });
  sys.complete = true;
  sys.semi_downset = true;
  std::unordered_set<Bitset, BitsetHash> closures;
  if (!closures_distinct(k, sys.generators, &closures) || !family_complete(k, closures) ||
      !family_semi_downset(k, r, sys.generators))
    throw std::logic_error("internal: built system failed its own validation");
  return sys;
}

MixgenSystem system_from_generators(const FormalContext& k, int attribute,
                                    std::vector<ObjectSet> generators) {
  k.require_attribute(attribute);
  Bitset r = k.co_extent_bits(attribute);
  for (const ObjectSet& s : generators) {
    k.require_owned(s);
    if (!is_mixed_generator_bits(k, r, s.bits))
      throw UsageError("family member " + set_label(k, s.bits) + " is not a mixed generator");
  }
  std::unordered_set<Bitset, BitsetHash> closures;
  if (!closures_distinct(k, generators, &closures))
    throw UsageError("family members do not have pairwise distinct closures");
  MixgenSystem sys;
  sys.context = k;
  sys.attribute = attribute;
  sys.r = {k.id(), r};
  sys.generators = std::move(generators);
  sys.complete = family_complete(k, closures);
  sys.semi_downset = family_semi_downset(k, r, sys.generators);
  return sys;
}

namespace {

void push_class(Decomposition& d, GenClass c, int index) {
  d.classes[static_cast<size_t>(c)].push_back(index);
  d.labels[static_cast<size_t>(index)] = c;
}

}  // namespace

Decomposition decompose(const MixgenSystem& sys, int object) {
  const FormalContext& k = sys.context;
  const int m = sys.attribute;
  if (!sys.complete)
    throw UsageError("decompose requires a complete system");
  k.require_object(object);
  if (!sys.r.bits.test(object))
    throw DomainError("the chosen object must lack the system's attribute");

  Decomposition d;
  d.system = sys;
  d.object = object;
  d.opped = k.apply_op(object, m);
  const FormalContext& l = d.opped;
  const Bitset& r = sys.r.bits;
  d.labels.assign(sys.generators.size(), GenClass::N);

  std::unordered_map<Bitset, int, BitsetHash> index_of;
  for (size_t i = 0; i < sys.generators.size(); ++i)
    index_of.emplace(sys.generators[i].bits, static_cast<int>(i));

  std::vector<int> survivors_a;
  std::vector<int> dropped;
  for (size_t i = 0; i < sys.generators.size(); ++i) {
    const Bitset& s = sys.generators[i].bits;
    const int idx = static_cast<int>(i);
    const bool mix_l = is_mixed_generator_bits(l, r, s);

    // Cross-check: a member drops out exactly when S ∩ R is one object
    // h != g whose removal leaves the edited intent at S^I plus m.
    Bitset si = k.common_attributes(s);
    {
      Bitset sr = s & r;
      bool characterized = false;
      if (sr.count() == 1) {
        int h = sr.first_set();
        if (h != object) {
          Bitset expected = si.with(m);
          characterized = l.common_attributes(s.without(h)) == expected;
        }
      }
      if (characterized == mix_l)
        throw std::logic_error("internal: dropped-generator characterization disagrees");
    }

    if (!mix_l) {
      dropped.push_back(idx);
      push_class(d, GenClass::N, idx);
      continue;
    }
    Bitset sj = l.common_attributes(s);
    if (sj == si) {
      survivors_a.push_back(idx);  // split below
      continue;
    }
    if (l.common_attributes(s.with(object)) == si) {
      if (s.test(object))
        throw std::logic_error("internal: restored-intent class member contains the object");
      push_class(d, GenClass::B, idx);
    } else if (r.is_subset_of(s)) {
      push_class(d, GenClass::CR, idx);
    } else {
      if (!s.test(object))
        throw std::logic_error("internal: unrestored-intent class member omits the object");
      push_class(d, GenClass::CnotR, idx);
    }
  }

  // A2 is the image of the dropped members under S -> S \ R; completeness
  // guarantees the image lies in the family.
  std::unordered_set<int> a2;
  for (int idx : dropped) {
    Bitset res = difference(sys.generators[static_cast<size_t>(idx)].bits, r);
    auto it = index_of.find(res);
    if (it == index_of.end())
      throw std::logic_error("internal: restriction image missing from a complete system");
    a2.insert(it->second);
  }
  for (int idx : survivors_a) {
    const Bitset& s = sys.generators[static_cast<size_t>(idx)].bits;
    if (a2.count(idx)) {
      push_class(d, GenClass::A2, idx);
    } else if (chi_bits(k, m, s) == r) {
      push_class(d, GenClass::AchiEqR, idx);
    } else {
      push_class(d, GenClass::A1, idx);
    }
  }
  if (a2.size() != dropped.size())
    throw std::logic_error("internal: restriction is not injective on the dropped class");

  size_t classified = 0;
  for (const auto& c : d.classes) classified += c.size();
  if (classified != sys.generators.size())
    throw std::logic_error("internal: classes do not partition the system");
  return d;
}

namespace {

struct Violation {
  std::string text;
  void note(const std::string& t) {
    if (text.empty()) text = t;
  }
  bool any() const { return !text.empty(); }
};

}  // namespace

DecompositionAudit audit_decomposition(const Decomposition& d) {
  const FormalContext& k = d.system.context;
  const FormalContext& l = d.opped;
  const int m = d.system.attribute;
  const int g = d.object;
  const Bitset& r = d.system.r.bits;

  DecompositionAudit audit;
  audit.base_concepts = count_concepts(k);
  audit.op_concepts = count_concepts(l);
  audit.b_size = d.members(GenClass::B).size();
  audit.cnr_size = d.members(GenClass::CnotR).size();
  audit.bound = static_cast<std::int64_t>(audit.base_concepts) +
                static_cast<std::int64_t>(audit.b_size) -
                static_cast<std::int64_t>(audit.cnr_size);
  Violation violation;

  std::unordered_set<Bitset, BitsetHash> image_intents;
  std::size_t image_count = 0;

  auto audit_map = [&](int idx, bool adds_g) -> MapAudit {
    const Bitset& s = d.system.generators[static_cast<size_t>(idx)].bits;
    GenClass cls = d.labels[static_cast<size_t>(idx)];
    MapAudit a;
    a.applied = true;
    a.image = adds_g ? s.with(g) : s;
    a.image_is_mixgen = is_mixed_generator_bits(l, r, a.image);

    Bitset si = k.common_attributes(s);
    bool in_a = cls == GenClass::A1 || cls == GenClass::A2 || cls == GenClass::AchiEqR;
    if (!adds_g) {
      a.predicted_intent = in_a ? si : si.with(m);  // A keeps its intent, B gains m
      a.original_intent_expected = in_a;
    } else {
      a.predicted_intent = in_a ? si.without(m) : si;  // beta drops m on A, restores on B
      a.original_intent_expected = cls != GenClass::AchiEqR;
    }
    a.computed_intent = l.common_attributes(a.image);

    Bitset chibar = difference(r, chi_bits(k, m, s));
    if (!adds_g) {
      a.predicted_extent = s | chibar;
      a.predicted_extent.reset(g);
      if (s.test(g)) a.predicted_extent.set(g);  // only chibar's g is dropped
    } else {
      a.predicted_extent = s | chibar;
      a.predicted_extent.set(g);
    }
    a.computed_extent = l.common_objects(a.computed_intent);
    a.original_intent_actual = is_intent(k, a.computed_intent);

    a.ok = a.image_is_mixgen && a.predicted_intent == a.computed_intent &&
           a.predicted_extent == a.computed_extent &&
           a.original_intent_expected == a.original_intent_actual;

    if (!image_intents.insert(a.computed_intent).second)
      violation.note("duplicate image intent at generator " + set_label(k, s));
    ++image_count;
    return a;
  };

  for (size_t i = 0; i < d.system.generators.size(); ++i) {
    GeneratorAudit rec;
    rec.gen_index = static_cast<int>(i);
    rec.cls = d.labels[i];
    const bool in_a =
        rec.cls == GenClass::A1 || rec.cls == GenClass::A2 || rec.cls == GenClass::AchiEqR;
    const bool in_b = rec.cls == GenClass::B;
    if (in_a || in_b) rec.alpha = audit_map(static_cast<int>(i), false);
    if (rec.cls == GenClass::A2 || rec.cls == GenClass::AchiEqR || in_b)
      rec.beta = audit_map(static_cast<int>(i), true);
    if ((rec.alpha.applied && !rec.alpha.ok) || (rec.beta.applied && !rec.beta.ok))
      violation.note("map formulas fail at generator " +
                     set_label(k, d.system.generators[i].bits));
    audit.records.push_back(std::move(rec));
  }

  audit.intents_distinct = image_intents.size() == image_count;
  audit.bound_holds = static_cast<std::int64_t>(audit.op_concepts) >= audit.bound;
  if (!audit.bound_holds) violation.note("concept-count bound fails");
  audit.pass = !violation.any() && audit.intents_distinct && audit.bound_holds;
  audit.first_violation = violation.text;
  return audit;
}

bool check_stability(const MixgenSystem& sys) {
  const FormalContext& k = sys.context;
  const int m = sys.attribute;
  const Bitset& r = sys.r.bits;
  std::vector<int> choices = r.members();
  if (choices.empty())
    throw UsageError("stability is about attributes with a non-empty co-extent");

  std::vector<Decomposition> decs;
  decs.reserve(choices.size());
  for (int g : choices) decs.push_back(decompose(sys, g));

  // chi criteria within every decomposition.
  for (const Decomposition& d : decs) {
    for (size_t i = 0; i < sys.generators.size(); ++i) {
      const Bitset& s = sys.generators[i].bits;
      Bitset chi_s = chi_bits(k, m, s);
      Bitset chi_res = chi_bits(k, m, difference(s, r));
      GenClass c = d.labels[i];
      bool in_na = c == GenClass::N || c == GenClass::A1 || c == GenClass::A2 ||
                   c == GenClass::AchiEqR;
      if (in_na != (chi_s == chi_res)) return false;
      if (!in_na && !chi_s.is_proper_subset_of(chi_res)) return false;
    }
  }

  // g-independence of AchiEqR, CR and B ∪ CnotR.
  auto key_sets = [&](const Decomposition& d) {
    std::array<std::vector<bool>, 3> out;
    for (auto& v : out) v.assign(sys.generators.size(), false);
    for (int i : d.members(GenClass::AchiEqR)) out[0][static_cast<size_t>(i)] = true;
    for (int i : d.members(GenClass::CR)) out[1][static_cast<size_t>(i)] = true;
    for (int i : d.members(GenClass::B)) out[2][static_cast<size_t>(i)] = true;
    for (int i : d.members(GenClass::CnotR)) out[2][static_cast<size_t>(i)] = true;
    return out;
  };
  auto reference = key_sets(decs.front());
  for (size_t j = 1; j < decs.size(); ++j)
    if (key_sets(decs[j]) != reference) return false;
  return true;
}

}  // namespace fca
