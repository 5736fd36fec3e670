// Acceptance checks for the holomorph engine. Each criterion prints exactly
// one line, pass or FAIL, with the numbers it rests on; the process exits
// zero only when every criterion passes.

#include <algorithm>
#include <cstdio>
#include <exception>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "holo/crossed.hpp"
#include "holo/fpf_count.hpp"
#include "holo/holomorph.hpp"
#include "holo/homomorphism.hpp"
#include "holo/named_groups.hpp"
#include "holo/report.hpp"

using namespace holo;

namespace {

struct Pipeline {
  GroupRef g;
  HolomorphContext ctx;
  std::vector<RegularSubgroupRecord> h1;
  std::vector<RegularSubgroupRecord> h2;
  TGroupData t;
};

std::map<std::string, std::unique_ptr<Pipeline>> cache;

const Pipeline& pipeline(const std::string& spec) {
  auto it = cache.find(spec);
  if (it != cache.end()) return *it->second;
  GroupRef g = make_ref(make_named_group(spec));
  HolomorphContext ctx = build_holomorph(g);
  auto h1 = enumerate_H1(ctx);
  auto h2 = enumerate_H2(ctx);
  TGroupData t = enumerate_H0_and_T(ctx, h1, h2);
  auto owned = std::unique_ptr<Pipeline>(new Pipeline{
      std::move(g), std::move(ctx), std::move(h1), std::move(h2),
      std::move(t)});
  return *cache.emplace(spec, std::move(owned)).first->second;
}

std::set<std::vector<Perm>> element_sets(
    const std::vector<RegularSubgroupRecord>& records) {
  std::set<std::vector<Perm>> out;
  for (const auto& r : records) out.insert(r.subgroup.elements());
  return out;
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }
Outcome pass(std::string what) { return {true, std::move(what)}; }

// 1. The symmetric group on five letters has exactly 32 regular copies of
// itself inside its holomorph.
Outcome criterion_h2_s5() {
  std::size_t n = pipeline("S5").h2.size();
  if (n != 32) return fail("expected 32 subgroups, got " + std::to_string(n));
  return pass("H2(S5) has 32 members");
}

// 2. The normal regular family is exactly {lambda, rho} for A5 and S5,
// matched element by element.
Outcome criterion_h1_members() {
  for (const char* spec : {"A5", "S5"}) {
    const Pipeline& p = pipeline(spec);
    if (p.h1.size() != 2)
      return fail(std::string(spec) + ": expected 2 members, got " +
                  std::to_string(p.h1.size()));
    std::set<std::vector<Perm>> got = element_sets(p.h1);
    std::set<std::vector<Perm>> want = {p.ctx.lambda_sub.elements(),
                                        p.ctx.rho_sub.elements()};
    if (got != want)
      return fail(std::string(spec) +
                  ": members differ from the regular representations");
    for (const auto& r : p.h1)
      if (r.tag == RegularSubgroupRecord::Tag::other)
        return fail(std::string(spec) + ": a member is neither lambda nor rho");
  }
  return pass("H1(A5) = H1(S5) = {lambda, rho} elementwise");
}

// 3. H0 has two members for A5 and S5, T is the group of order two, and the
// multiple holomorph of A5 has order 14400 = 2 * 7200.
Outcome criterion_t_group() {
  for (const char* spec : {"A5", "S5"}) {
    const Pipeline& p = pipeline(spec);
    if (p.t.h0.size() != 2)
      return fail(std::string(spec) + ": |H0| = " +
                  std::to_string(p.t.h0.size()) + ", expected 2");
    if (p.t.t_group.order() != 2 || p.t.t_group.element_order(1) != 2)
      return fail(std::string(spec) + ": T is not the group of order two");
  }
  const Pipeline& a5 = pipeline("A5");
  if (a5.t.hol_order != 7200)
    return fail("|Hol(A5)| = " + std::to_string(a5.t.hol_order) +
                ", expected 7200");
  if (a5.t.nhol_order != 14400 ||
      a5.t.nhol_order != a5.t.t_group.order() * a5.t.hol_order)
    return fail("|NHol(A5)| = " + std::to_string(a5.t.nhol_order) +
                ", expected 2 * 7200");
  return pass("|H0| = 2 and T = Z/2Z for A5 and S5; |NHol(A5)| = 2 * 7200");
}

// 4. Three independent routes to the same count for S5 and PGL(2,5):
// subgroup enumeration 32, endomorphism brute force 16, closed formula 16.
Outcome criterion_three_routes() {
  for (const char* spec : {"S5", "PGL(2,5)"}) {
    const Pipeline& p = pipeline(spec);
    std::size_t h2 = p.h2.size();
    std::size_t brute = end_fpf_bruteforce(p.g).total;
    std::size_t formula = end_fpf_formula(p.g).value;
    if (h2 != 32 || brute != 16 || formula != 16 || h2 != 2 * brute ||
        h2 != 2 * formula)
      return fail(std::string(spec) + ": h2 " + std::to_string(h2) +
                  ", brute " + std::to_string(brute) + ", formula " +
                  std::to_string(formula));
  }
  return pass("S5 and PGL(2,5): 32 = 2 * 16 by enumeration, brute force, "
              "and formula");
}

// 5. The twelve published sporadic rows reproduce from the shipped
// involution census.
Outcome criterion_sporadic_table() {
  auto records =
      ingest_order_counts(std::string(HOLO_TEST_DATA_DIR) +
                          "/sporadic_involutions.csv");
  SporadicTableComparison cmp = reproduce_sporadic_table(records);
  if (!cmp.all_match || cmp.matched != 12)
    return fail(std::to_string(cmp.matched) + "/12 rows matched");
  return pass("12/12 sporadic rows reproduce");
}

// 6. For centerless G and every equal-order Gamma in the catalog, g -> h
// bijects crossed homomorphisms with Hom_f, and injective ones with the
// fixed point free subset, for every action f.
Outcome criterion_bijections() {
  std::size_t actions = 0;
  for (const char* spec : {"S3", "S4"}) {
    const Pipeline& p = pipeline(spec);
    const AutGroupRecord& aut = p.ctx.aut;
    for (const std::string& gname : catalog_of_order(p.g->order())) {
      GroupRef gamma = make_ref(make_named_group(gname));
      auto pool = enumerate_homomorphisms(gamma, aut.as_group);
      for (const auto& f : pool) {
        auto z1 = enumerate_crossed_homs(aut, f);
        std::set<std::vector<Elem>> images, injective_images;
        for (const auto& g : z1) {
          Homomorphism h = h_from_fg(aut, g);
          if (!in_hom_f(aut, f, h))
            return fail(spec + std::string("/") + gname +
                        ": image left Hom_f");
          if (g.injective != is_fixed_point_free_pair(f, h))
            return fail(spec + std::string("/") + gname +
                        ": injectivity does not match fixed point freeness");
          images.insert(h.images);
          if (g.injective) injective_images.insert(h.images);
        }
        if (images.size() != z1.size())
          return fail(spec + std::string("/") + gname + ": map not injective");
        std::set<std::vector<Elem>> hom_f, hom_f_fpf;
        for (const auto& h : pool) {
          if (!in_hom_f(aut, f, h)) continue;
          hom_f.insert(h.images);
          if (is_fixed_point_free_pair(f, h)) hom_f_fpf.insert(h.images);
        }
        if (images != hom_f)
          return fail(spec + std::string("/") + gname + ": not onto Hom_f");
        if (injective_images != hom_f_fpf)
          return fail(spec + std::string("/") + gname +
                      ": injective side misses the fixed point free subset");
        ++actions;
      }
    }
  }
  return pass("crossed-hom bijections hold for every action (" +
              std::to_string(actions) + " actions over S3 and S4 catalogs)");
}

// 7. Constructive kernel-image counts hit the predicted branch for every
// prime-index normal subgroup and every element of order p.
Outcome criterion_kernel_image_branches() {
  std::size_t triples = 0;
  for (const char* spec : {"C4", "S3", "S5", "PGL(2,5)"}) {
    GroupRef g = make_ref(make_named_group(spec));
    auto is_prime = [](std::size_t m) {
      if (m < 2) return false;
      for (std::size_t d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
      return true;
    };
    for (const auto& members : normal_subgroup_sets(*g)) {
      if (members.size() == g->order()) continue;
      std::size_t p = g->order() / members.size();
      if (!is_prime(p)) continue;
      std::set<Elem> inside(members.begin(), members.end());
      for (Elem s = 0; s < g->order(); ++s) {
        if (g->element_order(s) != p) continue;
        std::size_t expected = inside.count(s) ? p - 1 : p - 2;
        std::size_t got = kernel_image_count(*g, members, s);
        if (got != expected)
          return fail(std::string(spec) + ": got " + std::to_string(got) +
                      ", branch predicts " + std::to_string(expected));
        ++triples;
      }
    }
  }
  return pass("all " + std::to_string(triples) +
              " kernel-image triples match the p-1 / p-2 branch");
}

// 8. Structural invariants across the whole battery: H0 is the intersection,
// every H1 member has normal f and h images, lambda and rho lie in H0, and T
// acts regularly with stable cosets.
Outcome criterion_structural_invariants() {
  const char* battery[] = {"C1", "C4", "C6",    "S3", "D4",       "A4",
                           "S4", "C3xC3", "A5", "S5", "PGL(2,5)"};
  for (const char* spec : battery) {
    const Pipeline& p = pipeline(spec);
    std::set<std::vector<Perm>> h1 = element_sets(p.h1);
    std::set<std::vector<Perm>> h2 = element_sets(p.h2);
    std::set<std::vector<Perm>> h0 = element_sets(p.t.h0);
    std::set<std::vector<Perm>> meet;
    for (const auto& s : h1)
      if (h2.count(s)) meet.insert(s);
    if (h0 != meet)
      return fail(std::string(spec) + ": H0 is not H1 intersect H2");
    for (const auto& r : p.h1)
      if (!normal_prop_check(p.ctx, r))
        return fail(std::string(spec) +
                    ": an H1 member has a non-normal image in Aut");
    if (!h0.count(p.ctx.lambda_sub.elements()) ||
        !h0.count(p.ctx.rho_sub.elements()))
      return fail(std::string(spec) + ": lambda or rho missing from H0");
    if (!p.t.action_regular)
      return fail(std::string(spec) + ": T does not act regularly on H0");
    if (!p.t.coset_independent)
      return fail(std::string(spec) + ": conjugator cosets are unstable");
    if (p.t.nhol_order != p.t.t_group.order() * p.t.hol_order)
      return fail(std::string(spec) + ": |NHol| != |T| * |Hol|");
  }
  return pass("H0 = H1 n H2, normal images, lambda and rho present, regular "
              "T action on 11 groups");
}

// 9. Negative controls: the simple group A5 has one fixed point free
// endomorphism and two regular copies, and neither A5 nor PSL(2,7) has a
// fixed point free automorphism.
Outcome criterion_negative_controls() {
  const Pipeline& a5 = pipeline("A5");
  FpfCountReport brute = end_fpf_bruteforce(a5.g);
  if (brute.total != 1)
    return fail("end_fpf(A5) = " + std::to_string(brute.total) +
                ", expected 1");
  if (a5.h2.size() != 2)
    return fail("|H2(A5)| = " + std::to_string(a5.h2.size()) +
                ", expected 2");
  for (const char* spec : {"A5", "PSL(2,7)"}) {
    GroupRef g = make_ref(make_named_group(spec));
    AutGroupRecord aut = automorphism_group(g);
    for (const auto& phi : aut.automorphisms) {
      bool fixes_something = false;
      for (std::size_t x = 1; x < g->order(); ++x)
        if (phi.images[x] == x) {
          fixes_something = true;
          break;
        }
      if (!fixes_something)
        return fail(std::string(spec) +
                    " admits a fixed point free automorphism");
    }
  }
  return pass("end_fpf(A5) = 1, |H2(A5)| = 2, no fixed point free "
              "automorphisms of A5 or PSL(2,7)");
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    Outcome (*run)();
  };
  const Entry entries[] = {
      {"h2-s5-count", criterion_h2_s5},
      {"h1-lambda-rho", criterion_h1_members},
      {"t-group-order-two", criterion_t_group},
      {"three-route-reconciliation", criterion_three_routes},
      {"sporadic-table", criterion_sporadic_table},
      {"crossed-hom-bijections", criterion_bijections},
      {"kernel-image-branches", criterion_kernel_image_branches},
      {"structural-invariants", criterion_structural_invariants},
      {"negative-controls", criterion_negative_controls},
  };
  int failures = 0;
  int index = 0;
  for (const auto& e : entries) {
    ++index;
    Outcome out;
    try {
      out = e.run();
    } catch (const std::exception& ex) {
      out = fail(std::string("exception: ") + ex.what());
    }
    std::printf("%s %d %s: %s\n", out.pass ? "pass" : "FAIL", index, e.name,
                out.detail.c_str());
    std::fflush(stdout);
    if (!out.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
