#ifndef HOLO_HOLOMORPH_HPP
#define HOLO_HOLOMORPH_HPP

#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "holo/automorphisms.hpp"
#include "holo/crossed.hpp"
#include "holo/errors.hpp"
#include "holo/finite_group.hpp"
#include "holo/perm.hpp"
#include "holo/perm_group.hpp"

namespace holo {

// lambda(a): x -> a*x and rho(a): x -> x*a^-1, both acting on element
// indices of g. Regular, and they commute with each other.
std::pair<PermGroup, PermGroup> left_right_regular(const FiniteGroup& g);

// G together with Aut(G) and Hol(G) = rho(G) Aut(G) realized inside the
// symmetric group on G's element indices.
struct HolomorphContext {
  GroupRef g;
  AutGroupRecord aut;
  PermGroup hol;
  PermGroup lambda_sub;
  PermGroup rho_sub;
  // Automorphisms as permutations, for factoring hol elements as rho(a)*phi.
  std::unordered_map<Perm, Elem, PermHash> aut_perm_index;
};

// Builds Hol(G) by closing rho(G) together with Aut(G) and verifies
// |Hol| = |G|*|Aut(G)| and that Hol normalizes both lambda(G) and rho(G).
HolomorphContext build_holomorph(const GroupRef& g, const Budget& budget = {});

// |n| = |G| and the evaluation map eta -> eta(identity) is injective.
bool is_regular_subgroup(const PermGroup& n, const HolomorphContext& ctx);

struct RegularSubgroupRecord {
  PermGroup subgroup;
  bool regular = false;
  bool normal_in_hol = false;
  enum class Tag { lambda, rho, other } tag = Tag::other;
  bool iso_to_g = false;
  // Witness isomorphism G -> subgroup when iso_to_g: witness[a] is the index
  // into subgroup.elements() of the image of a.
  std::optional<std::vector<Elem>> iso_witness;
  // The subgroup read as a map from itself into Hol(G), split through the
  // semidirect factorization eta = rho(a)*phi: per element index i of the
  // subgroup, f_images[i] = phi as an index of aut.as_group, g_values[i] =
  // a as an element of G, h_images[i] = conj(a)*phi.
  std::vector<Elem> f_images;
  std::vector<Elem> g_values;
  std::vector<Elem> h_images;
};

// Flags, factorization and isomorphism type for a subgroup of Hol(G).
RegularSubgroupRecord describe_regular_subgroup(
    const HolomorphContext& ctx, PermGroup sub, const Budget& budget = {},
    std::optional<std::vector<Elem>> iso_witness = std::nullopt);

// Both image subgroups f(N) and h(N) of a record are normal in Aut(G).
// Necessary whenever the record is normal in Hol(G).
bool normal_prop_check(const HolomorphContext& ctx,
                       const RegularSubgroupRecord& record);

// The regular subgroups of Hol(G) isomorphic to G. For centerless G this
// walks fixed-point-free pairs (f, h) in Hom(G, Aut(G)); otherwise it
// enumerates bijective crossed homomorphisms per action. Deduplicated by
// canonical element set, sorted.
std::vector<RegularSubgroupRecord> enumerate_H2(const HolomorphContext& ctx,
                                                const Budget& budget = {});

// The normal regular subgroups of Hol(G), via the normal subgroup walk.
std::vector<RegularSubgroupRecord> enumerate_H1(const HolomorphContext& ctx,
                                                const Budget& budget = {});

struct TGroupData {
  std::vector<RegularSubgroupRecord> h0;  // lambda's member first
  std::vector<Perm> conjugators;          // conjugators[i]*lambda*inv = h0[i]
  FiniteGroup t_group;                    // element i is the coset of conjugators[i]
  std::size_t hol_order = 0;
  std::size_t nhol_order = 0;
  bool action_regular = false;      // T acts regularly on H0
  bool coset_independent = false;   // product cosets stable under iso resampling
};

// H0 = H1 ∩ H2 with a conjugator normalizing Hol(G) for every member, and
// T = NHol(G)/Hol(G) assembled from the conjugator cosets.
TGroupData enumerate_H0_and_T(const HolomorphContext& ctx,
                              const std::vector<RegularSubgroupRecord>& h1,
                              const std::vector<RegularSubgroupRecord>& h2,
                              const Budget& budget = {});

}  // namespace holo

#endif
