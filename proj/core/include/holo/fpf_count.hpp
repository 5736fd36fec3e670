#ifndef HOLO_FPF_COUNT_HPP
#define HOLO_FPF_COUNT_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "holo/errors.hpp"
#include "holo/finite_group.hpp"
#include "holo/holomorph.hpp"

namespace holo {

// Counting endomorphisms f with f(x) = x only at the identity. The brute
// route enumerates Hom(G, G) outright; the formula route evaluates the
// closed expression that holds for almost simple G whose socle has prime
// index, and refuses to answer when those hypotheses are not verified.

enum class FpfMethod { brute, formula };

struct FpfHypothesisChecks {
  bool evaluated = false;  // the formula/theorem paths fill the rest in
  bool almost_simple = false;
  std::size_t socle_index = 0;
  bool socle_index_prime = false;
  bool unique_subgroup_checked = false;
  bool unique_subgroup_holds = false;  // Inn(G) is the only copy of G in Aut(G)
};

struct FpfCountReport {
  FpfMethod method = FpfMethod::brute;
  std::size_t total = 0;
  // Kernel (as a sorted element list) to the number of fixed-point-free
  // endomorphisms with that kernel. Populated by the brute route only.
  std::map<std::vector<Elem>, std::size_t> by_kernel;
  FpfHypothesisChecks hypothesis;
};

FpfCountReport end_fpf_bruteforce(const GroupRef& g, const Budget& budget = {});

// Number of fixed-point-free endomorphisms with kernel exactly h_members
// (normal, prime index p) and image generated by sigma (order p), found by
// building the p-1 candidate maps explicitly and testing each. Cross-checks
// the constructive count against the predicted branch: p-1 when sigma lies
// in the kernel, p-2 when it does not.
std::size_t kernel_image_count(const FiniteGroup& g,
                               const std::vector<Elem>& h_members, Elem sigma);

struct FpfFormulaBreakdown {
  std::size_t p = 0;              // index of the socle
  std::size_t socle_in_count = 0;   // order-p elements inside the socle
  std::size_t outside_count = 0;    // order-p elements outside it
  std::size_t value = 0;  // 1 + socle_in + (p-2)/(p-1) * outside
};

FpfFormulaBreakdown end_fpf_formula(const GroupRef& g,
                                    const Budget& budget = {});

// Involutions of the even subgroup of Sym(n): an exhaustive walk over all n!
// permutations, and the cycle-type sum over products of evenly many disjoint
// transpositions. The two must agree wherever the walk is feasible.
std::size_t alternating_involutions_scan(std::size_t n);
std::size_t alternating_involutions_formula(std::size_t n);

// 2 * (1 + involutions in the even subgroup), the count of regular subgroups
// of the holomorph of Sym(n) isomorphic to Sym(n), stated for n >= 5.
std::size_t h2_sn_formula(std::size_t n);

struct Theorem2Report {
  bool almost_simple = false;
  bool hypothesis_unique_subgroup = false;
  // Elements (in Aut(G)) of a copy of G other than Inn(G), when one exists.
  std::optional<std::vector<Elem>> rival_subgroup;
  std::size_t h2_count = 0;
  std::size_t brute_count = 0;
  std::optional<FpfFormulaBreakdown> formula;  // empty when inapplicable
  std::string formula_note;                    // why, when empty
  bool applicable = false;  // almost simple and the hypothesis verified
  bool pass = false;        // applicable, h2 == 2 * brute, formula agrees
};

// Reconciles the three routes to the count: regular-subgroup enumeration,
// endomorphism brute force, and the closed formula (when its hypotheses
// hold). The unique-subgroup hypothesis is checked by exhausting injective
// homomorphisms G -> Aut(G) and comparing every image against Inn(G).
Theorem2Report verify_theorem2_count(const HolomorphContext& ctx,
                                     const Budget& budget = {});

}  // namespace holo

#endif
