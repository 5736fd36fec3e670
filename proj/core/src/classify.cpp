#include "holo/classify.hpp"

#include <algorithm>
#include <stdexcept>

#include "holo/homomorphism.hpp"

namespace holo {

namespace {

bool contains_all(const std::vector<Elem>& haystack,
                  const std::vector<Elem>& needles) {
  return std::includes(haystack.begin(), haystack.end(), needles.begin(),
                       needles.end());
}

}  // namespace

AlmostSimpleRecord classify_almost_simple(const FiniteGroup& g,
                                          const Budget& budget) {
  AlmostSimpleRecord rec;
  auto normals = normal_subgroup_sets(g, budget);

  std::vector<std::vector<Elem>> minimal;
  for (const auto& n : normals) {
    if (n.size() == 1) continue;
    bool is_minimal = true;
    for (const auto& m : normals) {
      if (m.size() == 1 || m.size() >= n.size()) continue;
      if (contains_all(n, m)) {
        is_minimal = false;
        break;
      }
    }
    if (is_minimal) minimal.push_back(n);
  }

  std::vector<Elem> seed;
  for (const auto& n : minimal) seed.insert(seed.end(), n.begin(), n.end());
  rec.socle = g.closure(seed);
  rec.socle_index = g.order() / rec.socle.size();
  rec.simple = g.order() > 1 && normals.size() == 2;

  auto socle_view = subgroup_group(g, rec.socle);
  rec.socle_nonabelian_simple =
      socle_view.group.order() > 1 && !socle_view.group.is_abelian() &&
      normal_subgroup_sets(socle_view.group, budget).size() == 2;

  std::vector<Elem> centralizer;
  for (std::size_t x = 0; x < g.order(); ++x) {
    bool commutes = true;
    for (Elem s : socle_view.group.generators()) {
      Elem sp = socle_view.to_parent[s];
      if (g.mul(static_cast<Elem>(x), sp) != g.mul(sp, static_cast<Elem>(x))) {
        commutes = false;
        break;
      }
    }
    if (commutes) centralizer.push_back(static_cast<Elem>(x));
  }
  rec.socle_self_centralizing = centralizer.size() == 1;

  rec.every_normal_contains_socle = true;
  for (const auto& n : normals)
    if (n.size() > 1 && !contains_all(n, rec.socle))
      rec.every_normal_contains_socle = false;

  rec.almost_simple =
      rec.socle_nonabelian_simple && rec.socle_self_centralizing;
  return rec;
}

bool socle_embedding_check(const GroupRef& g, const Budget& budget) {
  auto rec = classify_almost_simple(*g, budget);
  if (!rec.almost_simple)
    throw std::invalid_argument("socle_embedding_check: group is not almost simple");

  auto socle_view = subgroup_group(*g, rec.socle);
  GroupRef socle_ref = make_ref(std::move(socle_view.group));
  const auto& to_parent = socle_view.to_parent;
  std::vector<std::size_t> to_socle(g->order(), g->order());
  for (std::size_t i = 0; i < to_parent.size(); ++i)
    to_socle[to_parent[i]] = i;

  auto aut_g = automorphism_group(g, budget);
  auto aut_t = automorphism_group(socle_ref, budget);

  // theta -> theta restricted to the socle, as an index into Aut(T).
  const auto& tgens = socle_ref->generators();
  auto restrict_index = [&](const std::vector<Elem>& theta_images) {
    std::vector<Elem> key(tgens.size());
    for (std::size_t k = 0; k < tgens.size(); ++k) {
      std::size_t img = to_socle[theta_images[to_parent[tgens[k]]]];
      if (img == g->order())
        throw ConsistencyError(
            "socle_embedding_check: socle not characteristic");
      key[k] = static_cast<Elem>(img);
    }
    Elem idx = aut_t.index_by_gen_images(key);
    if (idx == kNoElem)
      throw ConsistencyError(
          "socle_embedding_check: restriction is not an automorphism of T");
    return idx;
  };

  std::vector<Elem> restricted;
  restricted.reserve(aut_g.size());
  for (const auto& theta : aut_g.automorphisms)
    restricted.push_back(restrict_index(theta.images));
  std::vector<Elem> dedup(restricted);
  std::sort(dedup.begin(), dedup.end());
  dedup.erase(std::unique(dedup.begin(), dedup.end()), dedup.end());
  if (dedup.size() != aut_g.size()) return false;

  // g -> Inn(g) -> Aut(T) must be injective and match restriction of conj.
  std::vector<Elem> embedded;
  embedded.reserve(g->order());
  for (std::size_t s = 0; s < g->order(); ++s) {
    Elem via_conj = restricted[aut_g.conj_of[s]];
    embedded.push_back(via_conj);
  }
  std::sort(embedded.begin(), embedded.end());
  embedded.erase(std::unique(embedded.begin(), embedded.end()), embedded.end());
  return embedded.size() == g->order();
}

}  // namespace holo
