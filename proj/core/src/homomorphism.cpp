#include "holo/homomorphism.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "hom_plan.hpp"

namespace holo {

bool Homomorphism::is_injective() const {
  std::vector<char> hit(codomain->order(), 0);
  for (Elem v : images) {
    if (hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

bool Homomorphism::is_bijective() const {
  return domain->order() == codomain->order() && is_injective();
}

std::vector<Elem> Homomorphism::kernel() const {
  std::vector<Elem> out;
  for (std::size_t x = 0; x < images.size(); ++x)
    if (images[x] == 0) out.push_back(static_cast<Elem>(x));
  return out;
}

std::vector<Elem> Homomorphism::image_set() const {
  std::vector<Elem> out(images);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_homomorphism(const FiniteGroup& dom, const FiniteGroup& cod,
                     const std::vector<Elem>& images) {
  if (images.size() != dom.order()) return false;
  for (Elem v : images)
    if (v >= cod.order()) return false;
  for (std::size_t x = 0; x < dom.order(); ++x)
    for (std::size_t y = 0; y < dom.order(); ++y)
      if (images[dom.mul(static_cast<Elem>(x), static_cast<Elem>(y))] !=
          cod.mul(images[x], images[y]))
        return false;
  return true;
}

Homomorphism identity_automorphism(const GroupRef& g) {
  std::vector<Elem> images(g->order());
  for (std::size_t x = 0; x < g->order(); ++x) images[x] = static_cast<Elem>(x);
  return {g, g, std::move(images)};
}

namespace {

using detail::Plan;
using detail::build_plan;

struct Search {
  const FiniteGroup& dom;
  const FiniteGroup& cod;
  const Plan& plan;
  const std::vector<std::vector<Elem>>& pools;  // candidate gen images
  const Budget& budget;
  bool injective;
  bool first_only;

  std::vector<Elem> img;      // image table being built
  std::vector<Elem> gen_img;  // image of gens[j]
  std::vector<char> used;     // codomain elements taken (injective mode)
  std::size_t nodes = 0;
  bool done = false;
  std::vector<std::vector<Elem>> results;

  void run() {
    img.assign(dom.order(), 0);
    gen_img.assign(pools.size(), 0);
    if (injective) used.assign(cod.order(), 0);
    if (injective) used[0] = 1;
    descend(0);
  }

  void descend(std::size_t j) {
    if (j == plan.levels.size()) {
      results.push_back(img);
      budget.charge(results.size(), "homomorphisms found");
      if (first_only) done = true;
      return;
    }
    const auto& lv = plan.levels[j];
    for (Elem t : pools[j]) {
      budget.charge(++nodes, "homomorphism search nodes");
      gen_img[j] = t;
      std::size_t placed = 0;
      bool ok = true;
      for (const auto& st : lv.steps) {
        Elem v = cod.mul(img[st.prev], gen_img[st.gen]);
        if (dom.element_order(st.elem) % cod.element_order(v) != 0 ||
            (injective && used[v])) {
          ok = false;
          break;
        }
        img[st.elem] = v;
        if (injective) used[v] = 1;
        ++placed;
      }
      if (ok) {
        for (const auto& ck : lv.checks) {
          if (img[ck.xg] != cod.mul(img[ck.x], gen_img[ck.gen])) {
            ok = false;
            break;
          }
        }
      }
      if (ok) descend(j + 1);
      if (injective)
        for (std::size_t k = 0; k < placed; ++k) used[img[lv.steps[k].elem]] = 0;
      if (done) return;
    }
  }
};

}  // namespace

std::vector<Homomorphism> enumerate_homomorphisms(const GroupRef& dom,
                                                  const GroupRef& cod,
                                                  const Budget& budget,
                                                  const HomSearchOptions& opts) {
  const auto& gens = dom->generators();
  bool same_order = dom->order() == cod->order();

  std::vector<std::vector<Elem>> pools(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    std::size_t go = dom->element_order(gens[j]);
    std::size_t gclass = dom->conjugacy_classes()[dom->class_index_of(gens[j])].size();
    for (std::size_t t = 0; t < cod->order(); ++t) {
      std::size_t to = cod->element_order(static_cast<Elem>(t));
      if (opts.injective_only) {
        if (to != go) continue;
        // Isomorphisms preserve class sizes; only valid when orders match.
        if (same_order &&
            cod->conjugacy_classes()[cod->class_index_of(static_cast<Elem>(t))]
                    .size() != gclass)
          continue;
      } else if (go % to != 0) {
        continue;
      }
      pools[j].push_back(static_cast<Elem>(t));
    }
  }

  Plan plan = build_plan(*dom);
  Search search{*dom,  *cod, plan,
                pools, budget, opts.injective_only,
                opts.first_only};
  search.run();

  std::sort(search.results.begin(), search.results.end());
  std::vector<Homomorphism> out;
  out.reserve(search.results.size());
  for (auto& images : search.results) {
    if (!is_homomorphism(*dom, *cod, images))
      throw ConsistencyError("enumerate_homomorphisms: propagation bug");
    out.push_back({dom, cod, std::move(images)});
  }
  return out;
}

std::optional<Homomorphism> find_isomorphism(const GroupRef& a,
                                             const GroupRef& b,
                                             const Budget& budget) {
  if (a->order() != b->order()) return std::nullopt;
  // Cheap invariants first: element-order histogram and class-size multiset.
  auto histogram = [](const FiniteGroup& g) {
    std::vector<std::size_t> orders, classes;
    for (std::size_t x = 0; x < g.order(); ++x)
      orders.push_back(g.element_order(static_cast<Elem>(x)));
    for (const auto& c : g.conjugacy_classes()) classes.push_back(c.size());
    std::sort(orders.begin(), orders.end());
    std::sort(classes.begin(), classes.end());
    return std::make_pair(orders, classes);
  };
  if (histogram(*a) != histogram(*b)) return std::nullopt;

  auto found = enumerate_homomorphisms(a, b, budget,
                                       {.injective_only = true, .first_only = true});
  if (found.empty()) return std::nullopt;
  return std::move(found.front());
}

}  // namespace holo
