#ifndef HOLO_AUTOMORPHISMS_HPP
#define HOLO_AUTOMORPHISMS_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "holo/errors.hpp"
#include "holo/finite_group.hpp"
#include "holo/homomorphism.hpp"

namespace holo {

constexpr Elem kNoElem = 0xFFFF;

// Aut(G) with its own group structure. Element i of as_group is
// automorphisms[i]; multiplication composes maps, right factor first, so
// as_group.mul(i, j) applies j and then i. Index 0 is the identity map.
struct AutGroupRecord {
  GroupRef base;
  std::vector<Homomorphism> automorphisms;
  GroupRef as_group;
  std::vector<Elem> inner;  // sorted as_group indices forming Inn(G)
  std::vector<Elem> conj_of;   // base element s -> index of x ↦ s*x*s^-1
  std::vector<Elem> conj_inv;  // aut index -> a preimage under conj_of, or kNoElem
  std::vector<Elem> out_class;  // aut index -> smallest index in its Inn-coset

  std::size_t size() const { return automorphisms.size(); }
  bool is_inner(std::size_t i) const;
  // Index of the automorphism with the given images of base's generators;
  // kNoElem if absent.
  Elem index_by_gen_images(const std::vector<Elem>& gen_images) const;

  std::map<std::vector<Elem>, Elem> gen_key_index;
};

// Exhaustive Aut(G) by generator-image backtracking. Refuses groups larger
// than budget.aut_order_cap.
AutGroupRecord automorphism_group(const GroupRef& g, const Budget& budget = {});

}  // namespace holo

#endif
