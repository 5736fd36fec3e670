#ifndef HOLO_SRC_HOM_PLAN_HPP
#define HOLO_SRC_HOM_PLAN_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "holo/finite_group.hpp"

namespace holo::detail {

// Per-generator propagation schedule for maps defined by generator images.
// Once generators 0..j have images, the steps of level j force images on all
// new elements of <gens[0..j]>, and the checks cover every remaining Cayley
// edge (x, gens[i<=j]) inside it. A map passing all edge checks respects
// every product (induction on word length), both for homomorphisms and for
// cocycles twisted by an action.
struct Plan {
  struct Step {
    Elem elem, prev;
    std::size_t gen;
  };
  struct Check {
    Elem x;
    std::size_t gen;
    Elem xg;
  };
  struct Level {
    std::vector<Step> steps;
    std::vector<Check> checks;
  };
  std::vector<Level> levels;
};

inline Plan build_plan(const FiniteGroup& dom) {
  const auto& gens = dom.generators();
  Plan plan;
  plan.levels.resize(gens.size());

  std::vector<std::size_t> entry(dom.order(), gens.size());
  entry[0] = 0;
  std::vector<Elem> known{0};
  // def_edge[y] = the (x, gen) pair that first produced y; .second is the
  // gens.size() sentinel while y is undiscovered.
  std::vector<std::pair<Elem, std::size_t>> def_edge(dom.order(),
                                                     {0, gens.size()});

  for (std::size_t j = 0; j < gens.size(); ++j) {
    auto& lv = plan.levels[j];
    for (std::size_t at = 0; at < known.size(); ++at) {
      Elem x = known[at];
      for (std::size_t gi = 0; gi <= j; ++gi) {
        Elem y = dom.mul(x, gens[gi]);
        if (entry[y] == gens.size()) {
          entry[y] = j;
          def_edge[y] = {x, gi};
          lv.steps.push_back({y, x, gi});
          known.push_back(y);
        }
      }
    }
    for (Elem x : known) {
      for (std::size_t gi = 0; gi <= j; ++gi) {
        if (std::max(entry[x], gi) != j) continue;
        Elem y = dom.mul(x, gens[gi]);
        if (def_edge[y] == std::make_pair(x, gi)) continue;
        lv.checks.push_back({x, gi, y});
      }
    }
  }
  return plan;
}

}  // namespace holo::detail

#endif
