#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "holo/fpf_count.hpp"
#include "holo/holomorph.hpp"
#include "holo/named_groups.hpp"

using namespace holo;

namespace {

constexpr Elem kUnset = 0xFFFF;

// Odometer over generator images with fixed-point extension, validated
// against the full table; structurally independent of the library search.
std::vector<std::vector<Elem>> naive_endomorphisms(const FiniteGroup& g) {
  const auto& gens = g.generators();
  std::size_t k = gens.size();
  std::vector<Elem> pick(k, 0);
  std::vector<std::vector<Elem>> found;
  while (true) {
    std::vector<Elem> img(g.order(), kUnset);
    img[0] = 0;
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      if (img[gens[i]] != kUnset && img[gens[i]] != pick[i]) ok = false;
      img[gens[i]] = pick[i];
    }
    bool changed = true;
    while (ok && changed) {
      changed = false;
      for (std::size_t x = 0; x < g.order() && ok; ++x) {
        if (img[x] == kUnset) continue;
        for (std::size_t i = 0; i < k; ++i) {
          Elem y = g.mul(static_cast<Elem>(x), gens[i]);
          Elem v = g.mul(img[x], pick[i]);
          if (img[y] == kUnset) {
            img[y] = v;
            changed = true;
          } else if (img[y] != v) {
            ok = false;
            break;
          }
        }
      }
    }
    for (std::size_t x = 0; ok && x < g.order(); ++x)
      if (img[x] == kUnset) ok = false;
    for (std::size_t a = 0; ok && a < g.order(); ++a)
      for (std::size_t b = 0; b < g.order(); ++b)
        if (img[g.mul((Elem)a, (Elem)b)] != g.mul(img[a], img[b])) {
          ok = false;
          break;
        }
    if (ok) found.push_back(img);

    std::size_t i = 0;
    while (i < k && ++pick[i] == g.order()) {
      pick[i] = 0;
      ++i;
    }
    if (i == k) break;
  }
  return found;
}

bool moves_everything_but_identity(const std::vector<Elem>& img) {
  for (std::size_t x = 1; x < img.size(); ++x)
    if (img[x] == x) return false;
  return true;
}

std::map<std::vector<Elem>, std::size_t> naive_fpf_by_kernel(
    const FiniteGroup& g) {
  std::map<std::vector<Elem>, std::size_t> buckets;
  for (const auto& img : naive_endomorphisms(g)) {
    if (!moves_everything_but_identity(img)) continue;
    std::vector<Elem> kernel;
    for (std::size_t x = 0; x < img.size(); ++x)
      if (img[x] == 0) kernel.push_back(static_cast<Elem>(x));
    ++buckets[kernel];
  }
  return buckets;
}

std::vector<Elem> even_part(const FiniteGroup& g) {
  // Index-two subgroups are kernels of onto maps to C2; for the groups used
  // here we just take the unique normal subgroup of half the order.
  auto sets = normal_subgroup_sets(g);
  for (const auto& s : sets)
    if (s.size() * 2 == g.order()) return s;
  return {};
}

}  // namespace

TEST_CASE("brute force counts match the odometer oracle") {
  struct Case {
    const char* spec;
    std::size_t expected;
  };
  // Worked out by kernels: C4 adds the squaring map over its halving
  // subgroup, C6 the twisted map over its order-two kernel, A4 one map per
  // order-three subgroup over the Klein four kernel, S4 one per
  // double-transposition image over the even kernel, S5 fifteen over the
  // even kernel.
  for (auto [spec, expected] :
       {Case{"C1", 1}, Case{"C4", 2}, Case{"C6", 2}, Case{"S3", 1},
        Case{"A4", 5}, Case{"S4", 4}, Case{"A5", 1}, Case{"S5", 16}}) {
    CAPTURE(spec);
    GroupRef g = make_ref(make_named_group(spec));
    FpfCountReport report = end_fpf_bruteforce(g);
    auto oracle = naive_fpf_by_kernel(*g);
    std::size_t oracle_total = 0;
    for (const auto& [k, c] : oracle) oracle_total += c;
    CHECK(report.total == oracle_total);
    CHECK(report.total == expected);
    CHECK(report.by_kernel == oracle);
    CHECK(report.method == FpfMethod::brute);
  }
}

TEST_CASE("kernel buckets for the symmetric group on five letters") {
  GroupRef s5 = make_ref(make_named_group("S5"));
  FpfCountReport report = end_fpf_bruteforce(s5);
  REQUIRE(report.by_kernel.size() == 2);
  // One endomorphism kills everything; fifteen factor through the sign map.
  for (const auto& [kernel, count] : report.by_kernel) {
    if (kernel.size() == 120) CHECK(count == 1);
    if (kernel.size() == 60) CHECK(count == 15);
  }
  // No fixed point free automorphism: no trivial-kernel bucket.
  CHECK(report.by_kernel.count(std::vector<Elem>{0}) == 0);
}

TEST_CASE("simple groups here admit no fixed point free automorphism") {
  for (const char* spec : {"A5", "PSL(2,7)"}) {
    CAPTURE(spec);
    GroupRef g = make_ref(make_named_group(spec));
    FpfCountReport report = end_fpf_bruteforce(g);
    CHECK(report.total == 1);  // only the map killing everything
    CHECK(report.by_kernel.count(std::vector<Elem>{0}) == 0);
  }
}

TEST_CASE("constructive kernel-image counts split on membership") {
  GroupRef s5 = make_ref(make_named_group("S5"));
  std::vector<Elem> a5 = even_part(*s5);
  REQUIRE(a5.size() == 60);
  std::set<Elem> inside(a5.begin(), a5.end());
  std::size_t summed = 0, in_checked = 0, out_checked = 0;
  for (Elem s = 0; s < s5->order(); ++s) {
    if (s5->element_order(s) != 2) continue;
    std::size_t n = kernel_image_count(*s5, a5, s);
    if (inside.count(s)) {
      CHECK(n == 1);  // p - 1 with p = 2
      ++in_checked;
    } else {
      CHECK(n == 0);  // p - 2
      ++out_checked;
    }
    summed += n;
  }
  CHECK(in_checked == 15);
  CHECK(out_checked == 10);
  // Each image subgroup has p - 1 = 1 generators, so the sum over sigma
  // recovers the kernel bucket from the brute force count.
  CHECK(summed == 15);

  // The same split on a small abelian example: C4 over its halving subgroup.
  GroupRef c4 = make_ref(make_named_group("C4"));
  std::vector<Elem> half = even_part(*c4);
  REQUIRE(half.size() == 2);
  Elem sq = half[1];
  CHECK(kernel_image_count(*c4, half, sq) == 1);

  // And S3 over its rotation subgroup with an outside involution.
  GroupRef s3 = make_ref(make_named_group("S3"));
  std::vector<Elem> a3 = even_part(*s3);
  REQUIRE(a3.size() == 3);
  for (Elem s = 0; s < s3->order(); ++s)
    if (s3->element_order(s) == 2)
      CHECK(kernel_image_count(*s3, a3, s) == 0);
}

TEST_CASE("kernel-image counting rejects malformed inputs") {
  GroupRef s3 = make_ref(make_named_group("S3"));
  std::vector<Elem> a3 = even_part(*s3);
  Elem flip = 0, rot = 0;
  for (Elem s = 0; s < s3->order(); ++s) {
    if (s3->element_order(s) == 2) flip = s;
    if (s3->element_order(s) == 3) rot = s;
  }

  // Unsorted kernel list.
  std::vector<Elem> shuffled = {a3[2], a3[0], a3[1]};
  CHECK_THROWS_AS(kernel_image_count(*s3, shuffled, flip),
                  std::invalid_argument);
  // Not a normal subgroup.
  std::vector<Elem> pair = {0, flip};
  std::sort(pair.begin(), pair.end());
  CHECK_THROWS_AS(kernel_image_count(*s3, pair, rot), std::invalid_argument);
  // Wrong image order: sigma must have order exactly p.
  CHECK_THROWS_AS(kernel_image_count(*s3, a3, rot), std::invalid_argument);

  // Non-prime index.
  GroupRef c12 = make_ref(make_named_group("C12"));
  std::vector<Elem> third;
  for (Elem x = 0; x < c12->order(); ++x)
    if (c12->element_order(x) == 1 || c12->element_order(x) == 3)
      third.push_back(x);
  std::sort(third.begin(), third.end());
  REQUIRE(third.size() == 3);
  Elem quad = 0;
  for (Elem x = 0; x < c12->order(); ++x)
    if (c12->element_order(x) == 4) quad = x;
  CHECK_THROWS_AS(kernel_image_count(*c12, third, quad),
                  std::invalid_argument);
}

TEST_CASE("closed formula on prime-index almost simple groups") {
  for (const char* spec : {"S5", "PGL(2,5)"}) {
    CAPTURE(spec);
    GroupRef g = make_ref(make_named_group(spec));
    FpfFormulaBreakdown f = end_fpf_formula(g);
    CHECK(f.p == 2);
    CHECK(f.socle_in_count == 15);
    CHECK(f.outside_count == 10);
    CHECK(f.value == 16);
    CHECK(f.value == end_fpf_bruteforce(g).total);
  }
}

TEST_CASE("formula refuses groups outside its hypotheses") {
  // Simple: the socle is everything, index one is not prime.
  CHECK_THROWS_AS(end_fpf_formula(make_ref(make_named_group("A5"))),
                  FormulaInapplicableError);
  CHECK_THROWS_AS(end_fpf_formula(make_ref(make_named_group("PSL(2,7)"))),
                  FormulaInapplicableError);
  // Not almost simple at all.
  CHECK_THROWS_AS(end_fpf_formula(make_ref(make_named_group("C6"))),
                  FormulaInapplicableError);
  CHECK_THROWS_AS(end_fpf_formula(make_ref(make_named_group("S4"))),
                  FormulaInapplicableError);
}

TEST_CASE("involution counts in even permutation groups") {
  // Scan and cycle-type sum agree wherever the scan is feasible.
  for (std::size_t n = 1; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(alternating_involutions_scan(n) ==
          alternating_involutions_formula(n));
  }
  // Values checked by hand from the cycle-type sums.
  CHECK(alternating_involutions_formula(5) == 15);
  CHECK(alternating_involutions_formula(6) == 45);
  CHECK(alternating_involutions_formula(7) == 105);
  CHECK(alternating_involutions_formula(8) == 315);   // 210 + 105
  CHECK(alternating_involutions_formula(9) == 1323);  // 378 + 945
  // Guard rails: the scan refuses huge n, the sum refuses overflow.
  CHECK_THROWS_AS(alternating_involutions_scan(11), UsageError);
  CHECK_THROWS_AS(alternating_involutions_formula(64), UsageError);
}

TEST_CASE("symmetric group family counts") {
  CHECK_THROWS_AS(h2_sn_formula(4), FormulaInapplicableError);
  CHECK(h2_sn_formula(5) == 32);
  CHECK(h2_sn_formula(6) == 92);
  CHECK(h2_sn_formula(7) == 212);
  CHECK(h2_sn_formula(8) == 632);
  CHECK(h2_sn_formula(9) == 2648);
}

TEST_CASE("three routes to the count reconcile") {
  for (const char* spec : {"S5", "PGL(2,5)"}) {
    CAPTURE(spec);
    HolomorphContext ctx = build_holomorph(make_ref(make_named_group(spec)));
    Theorem2Report rep = verify_theorem2_count(ctx);
    CHECK(rep.almost_simple);
    CHECK(rep.hypothesis_unique_subgroup);
    CHECK(!rep.rival_subgroup.has_value());
    CHECK(rep.h2_count == 32);
    CHECK(rep.brute_count == 16);
    REQUIRE(rep.formula.has_value());
    CHECK(rep.formula->value == 16);
    CHECK(rep.applicable);
    CHECK(rep.pass);
  }
}

TEST_CASE("count verification without the formula branch") {
  // A5 is simple: the doubling still holds (2 = 2 * 1) but the prime-index
  // formula does not apply, which is reported rather than failed.
  HolomorphContext ctx = build_holomorph(make_ref(make_named_group("A5")));
  Theorem2Report rep = verify_theorem2_count(ctx);
  CHECK(rep.almost_simple);
  CHECK(rep.hypothesis_unique_subgroup);
  CHECK(rep.h2_count == 2);
  CHECK(rep.brute_count == 1);
  CHECK(!rep.formula.has_value());
  CHECK(!rep.formula_note.empty());
  CHECK(rep.applicable);
  CHECK(rep.pass);
}

TEST_CASE("count verification rejects non almost simple groups") {
  HolomorphContext ctx = build_holomorph(make_ref(make_named_group("S4")));
  Theorem2Report rep = verify_theorem2_count(ctx);
  CHECK(!rep.almost_simple);
  CHECK(!rep.applicable);
  CHECK(!rep.pass);
}
