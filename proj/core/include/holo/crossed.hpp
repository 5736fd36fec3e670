#ifndef HOLO_CROSSED_HPP
#define HOLO_CROSSED_HPP

#include <vector>

#include "holo/automorphisms.hpp"
#include "holo/errors.hpp"
#include "holo/finite_group.hpp"
#include "holo/homomorphism.hpp"
#include "holo/perm.hpp"

namespace holo {

// A map g: Gamma -> G satisfying g(a*b) = g(a) * f(a)(g(b)) for the action
// f: Gamma -> Aut(G). action's codomain is aut.as_group; values holds
// elements of aut.base.
struct CrossedHom {
  Homomorphism action;
  std::vector<Elem> values;
  bool injective = false;
  bool bijective = false;
};

// Exhaustive cocycle-law check over all pairs.
bool is_crossed_hom(const AutGroupRecord& aut, const Homomorphism& f,
                    const std::vector<Elem>& values);

// All crossed homomorphisms for the action f, by backtracking over values on
// generators with cocycle propagation along the breadth-first word
// decomposition, then a full-pair verification of every survivor.
// bijective_only keeps only bijective values maps.
std::vector<CrossedHom> enumerate_crossed_homs(const AutGroupRecord& aut,
                                               const Homomorphism& f,
                                               bool bijective_only = false,
                                               const Budget& budget = {});

// gamma ↦ rho(g(gamma)) * f(gamma) as permutations of G's element indices
// (the action applied first). A homomorphism into Hol(G); its image is a
// regular subgroup exactly when g is bijective.
std::vector<Perm> beta_map(const AutGroupRecord& aut, const CrossedHom& g);

// gamma ↦ conj(g(gamma)) * f(gamma); always a homomorphism into Aut(G)
// agreeing with the action after the quotient by inner automorphisms.
Homomorphism h_from_fg(const AutGroupRecord& aut, const CrossedHom& g);

// Inverse of h_from_fg for centerless G: g(gamma) = conj^-1(h(gamma) *
// f(gamma)^-1). Requires trivial center and h in Hom_f.
CrossedHom g_from_fh(const AutGroupRecord& aut, const Homomorphism& f,
                     const Homomorphism& h);

// Membership in Hom_f: same image as f in Out(G) pointwise.
bool in_hom_f(const AutGroupRecord& aut, const Homomorphism& f,
              const Homomorphism& h);

// f(gamma) = h(gamma) only at the identity.
bool is_fixed_point_free_pair(const Homomorphism& f, const Homomorphism& h);

// The h in hom_pool with in_hom_f(aut, f, h) and (f, h) fixed point free.
// hom_pool should be the full Hom(Gamma, Aut(G)) list.
std::vector<Homomorphism> enumerate_hom_f_fpf(
    const AutGroupRecord& aut, const Homomorphism& f,
    const std::vector<Homomorphism>& hom_pool);

// Both image subgroups f(Gamma) and h(Gamma) are normal in Aut(G).
bool images_normal_in_aut(const AutGroupRecord& aut, const Homomorphism& f,
                          const Homomorphism& h);

}  // namespace holo

#endif
