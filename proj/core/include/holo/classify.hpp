#ifndef HOLO_CLASSIFY_HPP
#define HOLO_CLASSIFY_HPP

#include <vector>

#include "holo/automorphisms.hpp"
#include "holo/errors.hpp"
#include "holo/finite_group.hpp"

namespace holo {

struct AlmostSimpleRecord {
  bool simple = false;
  bool almost_simple = false;
  std::vector<Elem> socle;  // sorted element set, join of minimal normals
  std::size_t socle_index = 0;
  bool socle_nonabelian_simple = false;
  bool socle_self_centralizing = false;  // centralizer of the socle is trivial
  // Every non-trivial normal subgroup contains the socle (checked on the
  // full normal subgroup list, not assumed).
  bool every_normal_contains_socle = false;
};

AlmostSimpleRecord classify_almost_simple(const FiniteGroup& g,
                                          const Budget& budget = {});

// For almost simple g with socle T: restricting automorphisms of g to T is
// injective into Aut(T), and composing with conj: g -> Aut(g) embeds g
// itself. Returns true when both hold; throws std::invalid_argument when g
// is not almost simple.
bool socle_embedding_check(const GroupRef& g, const Budget& budget = {});

}  // namespace holo

#endif
