#include "holo/fpf_count.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "holo/classify.hpp"
#include "holo/homomorphism.hpp"

namespace holo {

namespace {

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool fixed_point_free(const std::vector<Elem>& images) {
  for (std::size_t x = 1; x < images.size(); ++x)
    if (images[x] == static_cast<Elem>(x)) return false;
  return true;
}

}  // namespace

FpfCountReport end_fpf_bruteforce(const GroupRef& g, const Budget& budget) {
  FpfCountReport rep;
  rep.method = FpfMethod::brute;
  for (const auto& f : enumerate_homomorphisms(g, g, budget)) {
    if (!fixed_point_free(f.images)) continue;
    std::vector<Elem> ker = f.kernel();
    if (!is_normal_subset(*g, ker))
      throw ConsistencyError("end_fpf_bruteforce: kernel is not normal");
    ++rep.by_kernel[std::move(ker)];
    ++rep.total;
  }
  std::size_t check = 0;
  for (const auto& [ker, cnt] : rep.by_kernel) check += cnt;
  if (check != rep.total)
    throw ConsistencyError("end_fpf_bruteforce: bucket totals disagree");
  return rep;
}

std::size_t kernel_image_count(const FiniteGroup& g,
                               const std::vector<Elem>& h_members,
                               Elem sigma) {
  if (h_members.empty() || !std::is_sorted(h_members.begin(), h_members.end()))
    throw std::invalid_argument("kernel_image_count: subgroup list unsorted");
  if (!is_normal_subset(g, h_members))
    throw std::invalid_argument("kernel_image_count: subgroup not normal");
  if (g.order() % h_members.size() != 0)
    throw std::invalid_argument("kernel_image_count: size does not divide |G|");
  std::size_t p = g.order() / h_members.size();
  if (!is_prime(p))
    throw std::invalid_argument("kernel_image_count: index is not prime");
  if (g.element_order(sigma) != p)
    throw std::invalid_argument("kernel_image_count: sigma order is not p");

  std::vector<char> in_h(g.order(), 0);
  for (Elem x : h_members) in_h[x] = 1;

  Elem tau = 0;
  while (in_h[tau]) ++tau;  // exists: p > 1
  std::vector<Elem> tau_pow_inv(p);
  for (std::size_t j = 0; j < p; ++j)
    tau_pow_inv[j] = g.inv(g.power(tau, static_cast<long long>(j)));

  // Coset exponent: x lies in H*tau^j for exactly one j (the quotient is
  // cyclic of prime order, so any non-member generates it).
  std::vector<std::size_t> coset(g.order(), p);
  for (std::size_t x = 0; x < g.order(); ++x) {
    for (std::size_t j = 0; j < p; ++j) {
      if (in_h[g.mul(static_cast<Elem>(x), tau_pow_inv[j])]) {
        if (coset[x] != p)
          throw ConsistencyError("kernel_image_count: cosets overlap");
        coset[x] = j;
      }
    }
    if (coset[x] == p)
      throw ConsistencyError("kernel_image_count: element in no coset");
  }

  std::size_t count = 0;
  for (std::size_t k = 1; k < p; ++k) {
    std::vector<Elem> images(g.order());
    for (std::size_t x = 0; x < g.order(); ++x)
      images[x] = g.power(sigma, static_cast<long long>(k * coset[x]));
    if (!is_homomorphism(g, g, images))
      throw ConsistencyError("kernel_image_count: candidate is not a hom");
    for (Elem x : h_members)
      if (images[x] != 0)
        throw ConsistencyError("kernel_image_count: kernel is not H");
    if (fixed_point_free(images)) ++count;
  }

  std::size_t predicted = in_h[sigma] ? p - 1 : p - 2;
  if (count != predicted)
    throw ConsistencyError(
        "kernel_image_count: constructive count disagrees with the "
        "membership branch");
  return count;
}

FpfFormulaBreakdown end_fpf_formula(const GroupRef& g, const Budget& budget) {
  AlmostSimpleRecord cls = classify_almost_simple(*g, budget);
  if (!cls.almost_simple)
    throw FormulaInapplicableError(
        "fixed-point-free formula: group is not almost simple");
  std::size_t p = cls.socle_index;
  if (!is_prime(p))
    throw FormulaInapplicableError(
        "fixed-point-free formula: socle index is not prime");

  FpfFormulaBreakdown out;
  out.p = p;
  out.socle_in_count = count_elements_of_order(*g, p, cls.socle);
  out.outside_count = count_elements_of_order(*g, p) - out.socle_in_count;
  std::size_t third = (p - 2) * out.outside_count;
  if (third % (p - 1) != 0)
    throw ConsistencyError(
        "fixed-point-free formula: third term is not integral");
  out.value = 1 + out.socle_in_count + third / (p - 1);
  return out;
}

std::size_t alternating_involutions_scan(std::size_t n) {
  if (n > 10)
    throw UsageError("involution scan infeasible beyond degree 10");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t count = 0;
  do {
    std::size_t moved = 0;
    bool involution = true;
    for (std::size_t i = 0; i < n && involution; ++i) {
      if (perm[perm[i]] != i) involution = false;
      if (perm[i] != i) ++moved;
    }
    // A product of k disjoint transpositions is even exactly when k is.
    if (involution && moved > 0 && (moved / 2) % 2 == 0) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

std::size_t alternating_involutions_formula(std::size_t n) {
  const auto limit =
      static_cast<unsigned __int128>(std::numeric_limits<std::uint64_t>::max());
  unsigned __int128 term = 1;  // n! / (k! 2^k (n-2k)!) built up incrementally
  unsigned __int128 sum = 0;
  for (std::size_t k = 1; 2 * k <= n; ++k) {
    term = term * (n - 2 * k + 2) * (n - 2 * k + 1) / (2 * k);
    if (term > limit) throw UsageError("involution count exceeds 64 bits");
    if (k % 2 == 0) {
      sum += term;
      if (sum > limit) throw UsageError("involution count exceeds 64 bits");
    }
  }
  return static_cast<std::size_t>(sum);
}

std::size_t h2_sn_formula(std::size_t n) {
  if (n < 5)
    throw FormulaInapplicableError(
        "symmetric-group count formula outside stated range (needs n >= 5)");
  std::size_t inv = n <= 8 ? alternating_involutions_scan(n)
                           : alternating_involutions_formula(n);
  return 2 * (1 + inv);
}

Theorem2Report verify_theorem2_count(const HolomorphContext& ctx,
                                     const Budget& budget) {
  Theorem2Report rep;
  AlmostSimpleRecord cls = classify_almost_simple(*ctx.g, budget);
  rep.almost_simple = cls.almost_simple;

  // Every subgroup of Aut(G) isomorphic to G is the image of an injective
  // homomorphism G -> Aut(G), so exhausting those exhausts the subgroups.
  rep.hypothesis_unique_subgroup = true;
  HomSearchOptions inj;
  inj.injective_only = true;
  for (const auto& f :
       enumerate_homomorphisms(ctx.g, ctx.aut.as_group, budget, inj)) {
    std::vector<Elem> image = f.image_set();
    if (image != ctx.aut.inner) {
      rep.hypothesis_unique_subgroup = false;
      rep.rival_subgroup = std::move(image);
      break;
    }
  }

  rep.h2_count = enumerate_H2(ctx, budget).size();
  rep.brute_count = end_fpf_bruteforce(ctx.g, budget).total;
  try {
    rep.formula = end_fpf_formula(ctx.g, budget);
  } catch (const FormulaInapplicableError& e) {
    rep.formula_note = e.what();
  }

  rep.applicable = rep.almost_simple && rep.hypothesis_unique_subgroup;
  rep.pass = rep.applicable && rep.h2_count == 2 * rep.brute_count &&
             (!rep.formula || rep.formula->value == rep.brute_count);
  return rep;
}

}  // namespace holo
