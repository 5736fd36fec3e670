#ifndef HOLO_HOMOMORPHISM_HPP
#define HOLO_HOMOMORPHISM_HPP

#include <optional>
#include <vector>

#include "holo/errors.hpp"
#include "holo/finite_group.hpp"

namespace holo {

// A total map between groups respecting multiplication.
struct Homomorphism {
  GroupRef domain;
  GroupRef codomain;
  std::vector<Elem> images;  // images[x] = image of domain element x

  Elem operator()(Elem x) const { return images[x]; }
  bool is_injective() const;
  bool is_bijective() const;
  std::vector<Elem> kernel() const;     // sorted
  std::vector<Elem> image_set() const;  // sorted, duplicate-free
};

// Exhaustive f(x*y) = f(x)*f(y) check over all pairs.
bool is_homomorphism(const FiniteGroup& dom, const FiniteGroup& cod,
                     const std::vector<Elem>& images);

Homomorphism identity_automorphism(const GroupRef& g);

struct HomSearchOptions {
  bool injective_only = false;
  bool first_only = false;
};

// Backtracking over generator images, pruned by element-order divisibility
// (plus conjugacy-class sizes in the equal-order injective case), with
// breadth-first propagation to the rest of the group. Output sorted by
// image table; deterministic.
std::vector<Homomorphism> enumerate_homomorphisms(const GroupRef& dom,
                                                  const GroupRef& cod,
                                                  const Budget& budget = {},
                                                  const HomSearchOptions& opts = {});

std::optional<Homomorphism> find_isomorphism(const GroupRef& a,
                                             const GroupRef& b,
                                             const Budget& budget = {});

}  // namespace holo

#endif
