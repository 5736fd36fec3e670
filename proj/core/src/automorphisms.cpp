#include "holo/automorphisms.hpp"

#include <algorithm>
#include <stdexcept>

namespace holo {

bool AutGroupRecord::is_inner(std::size_t i) const {
  return std::binary_search(inner.begin(), inner.end(), i);
}

Elem AutGroupRecord::index_by_gen_images(
    const std::vector<Elem>& gen_images) const {
  auto it = gen_key_index.find(gen_images);
  return it == gen_key_index.end() ? kNoElem : it->second;
}

AutGroupRecord automorphism_group(const GroupRef& g, const Budget& budget) {
  std::size_t n = g->order();
  if (n > budget.aut_order_cap)
    throw BudgetError("automorphism_group: order " + std::to_string(n) +
                      " exceeds cap of " + std::to_string(budget.aut_order_cap));

  AutGroupRecord rec;
  rec.base = g;
  rec.automorphisms =
      enumerate_homomorphisms(g, g, budget, {.injective_only = true});
  std::size_t na = rec.automorphisms.size();
  budget.charge(na * na, "automorphism group table cells");

  // An automorphism is determined by its generator images, so composition
  // reduces to evaluating those and looking the key up.
  const auto& gens = g->generators();
  for (std::size_t i = 0; i < na; ++i) {
    std::vector<Elem> key;
    key.reserve(gens.size());
    for (Elem ge : gens) key.push_back(rec.automorphisms[i].images[ge]);
    rec.gen_key_index.emplace(std::move(key), static_cast<Elem>(i));
  }

  std::vector<Elem> table(na * na);
  std::vector<Elem> key(gens.size());
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < na; ++j) {
      for (std::size_t k = 0; k < gens.size(); ++k)
        key[k] =
            rec.automorphisms[i].images[rec.automorphisms[j].images[gens[k]]];
      auto it = rec.gen_key_index.find(key);
      if (it == rec.gen_key_index.end())
        throw ConsistencyError("automorphism_group: composite not in list");
      table[i * na + j] = it->second;
    }
  }
  rec.as_group = make_ref(FiniteGroup::from_table(std::move(table)));

  rec.conj_of.assign(n, 0);
  rec.conj_inv.assign(na, kNoElem);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t k = 0; k < gens.size(); ++k)
      key[k] = g->mul(g->mul(static_cast<Elem>(s), gens[k]),
                      g->inv(static_cast<Elem>(s)));
    Elem idx = rec.index_by_gen_images(key);
    if (idx == kNoElem)
      throw ConsistencyError("automorphism_group: conjugation map missing");
    rec.conj_of[s] = idx;
    if (rec.conj_inv[idx] == kNoElem) rec.conj_inv[idx] = static_cast<Elem>(s);
  }
  rec.inner.assign(rec.conj_of.begin(), rec.conj_of.end());
  std::sort(rec.inner.begin(), rec.inner.end());
  rec.inner.erase(std::unique(rec.inner.begin(), rec.inner.end()),
                  rec.inner.end());
  if (rec.inner.size() * g->center().size() != n)
    throw ConsistencyError("automorphism_group: |Inn| * |Z| != |G|");

  rec.out_class.assign(na, 0);
  for (std::size_t i = 0; i < na; ++i) {
    Elem best = static_cast<Elem>(i);
    for (std::size_t k : rec.inner)
      best = std::min(best, rec.as_group->mul(static_cast<Elem>(i),
                                              static_cast<Elem>(k)));
    rec.out_class[i] = best;
  }
  return rec;
}

}  // namespace holo
