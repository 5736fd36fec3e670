#include "holo/holomorph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "holo/homomorphism.hpp"

namespace holo {

namespace {

Perm lambda_perm(const FiniteGroup& g, Elem a) {
  std::vector<Point> img(g.order());
  for (std::size_t x = 0; x < g.order(); ++x)
    img[x] = static_cast<Point>(g.mul(a, static_cast<Elem>(x)));
  return Perm(std::move(img));
}

Perm rho_perm(const FiniteGroup& g, Elem a) {
  std::vector<Point> img(g.order());
  Elem ainv = g.inv(a);
  for (std::size_t x = 0; x < g.order(); ++x)
    img[x] = static_cast<Point>(g.mul(static_cast<Elem>(x), ainv));
  return Perm(std::move(img));
}

Perm aut_perm(const Homomorphism& phi) {
  std::vector<Point> img(phi.images.begin(), phi.images.end());
  return Perm(std::move(img));
}

}  // namespace

std::pair<PermGroup, PermGroup> left_right_regular(const FiniteGroup& g) {
  std::vector<Perm> lam, rho;
  lam.reserve(g.order());
  rho.reserve(g.order());
  for (std::size_t a = 0; a < g.order(); ++a) {
    lam.push_back(lambda_perm(g, static_cast<Elem>(a)));
    rho.push_back(rho_perm(g, static_cast<Elem>(a)));
  }
  std::vector<Perm> lam_gens, rho_gens;
  for (Elem a : g.generators()) {
    lam_gens.push_back(lambda_perm(g, a));
    rho_gens.push_back(rho_perm(g, a));
  }
  return {PermGroup::from_elements(std::move(lam), std::move(lam_gens)),
          PermGroup::from_elements(std::move(rho), std::move(rho_gens))};
}

HolomorphContext build_holomorph(const GroupRef& g, const Budget& budget) {
  AutGroupRecord aut = automorphism_group(g, budget);
  auto [lam, rho] = left_right_regular(*g);

  std::vector<Perm> gens;
  for (Elem a : g->generators()) gens.push_back(rho_perm(*g, a));
  for (Elem i : aut.as_group->generators())
    gens.push_back(aut_perm(aut.automorphisms[i]));
  PermGroup hol = close_generators(std::move(gens), g->order(), budget);

  if (hol.order() != g->order() * aut.size())
    throw ConsistencyError("build_holomorph: |Hol| != |G|*|Aut(G)|");
  if (!is_normal(lam, hol) || !is_normal(rho, hol))
    throw ConsistencyError(
        "build_holomorph: Hol does not normalize the regular representations");

  std::unordered_map<Perm, Elem, PermHash> aut_index;
  for (std::size_t i = 0; i < aut.size(); ++i)
    aut_index.emplace(aut_perm(aut.automorphisms[i]), static_cast<Elem>(i));

  return {g, std::move(aut), std::move(hol), std::move(lam), std::move(rho),
          std::move(aut_index)};
}

bool is_regular_subgroup(const PermGroup& n, const HolomorphContext& ctx) {
  if (n.order() != ctx.g->order() || n.degree() != ctx.g->order())
    return false;
  std::vector<char> hit(ctx.g->order(), 0);
  for (std::size_t i = 0; i < n.order(); ++i) {
    Point v = n.element(i)(0);
    if (hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

RegularSubgroupRecord describe_regular_subgroup(
    const HolomorphContext& ctx, PermGroup sub, const Budget& budget,
    std::optional<std::vector<Elem>> iso_witness) {
  const FiniteGroup& g = *ctx.g;
  RegularSubgroupRecord rec{std::move(sub)};
  rec.regular = is_regular_subgroup(rec.subgroup, ctx);
  rec.normal_in_hol = is_normal(rec.subgroup, ctx.hol);

  if (rec.subgroup.elements() == ctx.lambda_sub.elements())
    rec.tag = RegularSubgroupRecord::Tag::lambda;
  else if (rec.subgroup.elements() == ctx.rho_sub.elements())
    rec.tag = RegularSubgroupRecord::Tag::rho;

  std::size_t m = rec.subgroup.order();
  rec.f_images.resize(m);
  rec.g_values.resize(m);
  rec.h_images.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Perm& eta = rec.subgroup.element(i);
    Elem a = g.inv(static_cast<Elem>(eta(0)));  // eta = rho(a)*phi, eta(0)=a^-1
    Perm phi = compose(rho_perm(g, a).inverse(), eta);
    auto it = ctx.aut_perm_index.find(phi);
    if (it == ctx.aut_perm_index.end())
      throw ConsistencyError(
          "describe_regular_subgroup: element does not factor as rho(a)*aut");
    rec.g_values[i] = a;
    rec.f_images[i] = it->second;
    rec.h_images[i] =
        ctx.aut.as_group->mul(ctx.aut.conj_of[a], rec.f_images[i]);
  }

  auto position = [&rec](const Perm& p) {
    auto idx = rec.subgroup.index_of(p);
    if (!idx)
      throw ConsistencyError("describe_regular_subgroup: member missing");
    return static_cast<Elem>(*idx);
  };
  if (rec.tag == RegularSubgroupRecord::Tag::lambda) {
    std::vector<Elem> w(g.order());
    for (std::size_t a = 0; a < g.order(); ++a)
      w[a] = position(lambda_perm(g, static_cast<Elem>(a)));
    rec.iso_witness = std::move(w);
  } else if (rec.tag == RegularSubgroupRecord::Tag::rho) {
    std::vector<Elem> w(g.order());
    for (std::size_t a = 0; a < g.order(); ++a)
      w[a] = position(rho_perm(g, static_cast<Elem>(a)));
    rec.iso_witness = std::move(w);
  } else if (iso_witness) {
    rec.iso_witness = std::move(iso_witness);
  } else if (rec.subgroup.order() == g.order()) {
    GroupRef as_finite = make_ref(FiniteGroup::from_permutations(rec.subgroup));
    if (auto iso = find_isomorphism(ctx.g, as_finite, budget))
      rec.iso_witness = iso->images;
  }
  rec.iso_to_g = rec.iso_witness.has_value();
  return rec;
}

bool normal_prop_check(const HolomorphContext& ctx,
                       const RegularSubgroupRecord& record) {
  if (record.f_images.empty() && record.subgroup.order() > 0 &&
      record.subgroup.order() != record.f_images.size())
    throw std::invalid_argument("normal_prop_check: record lacks its (f,g,h)");
  auto sorted_unique = [](std::vector<Elem> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  };
  return is_normal_subset(*ctx.aut.as_group, sorted_unique(record.f_images)) &&
         is_normal_subset(*ctx.aut.as_group, sorted_unique(record.h_images));
}

namespace {

// Dedupe collector for candidate subgroups given as unsorted image lists
// (index c of the list is the image of group element c, so the sorted list
// plus positions doubles as an isomorphism witness).
struct CandidateSet {
  std::set<std::vector<Perm>> seen;
  std::vector<std::pair<std::vector<Perm>, std::vector<Elem>>> found;

  void offer(const std::vector<Perm>& image_list) {
    std::vector<Perm> key(image_list);
    std::sort(key.begin(), key.end());
    if (!seen.insert(key).second) return;
    std::vector<Elem> witness(image_list.size());
    for (std::size_t c = 0; c < image_list.size(); ++c)
      witness[c] = static_cast<Elem>(
          std::lower_bound(key.begin(), key.end(), image_list[c]) -
          key.begin());
    found.emplace_back(std::move(key), std::move(witness));
  }
};

}  // namespace

std::vector<RegularSubgroupRecord> enumerate_H2(const HolomorphContext& ctx,
                                                const Budget& budget) {
  const FiniteGroup& g = *ctx.g;
  CandidateSet candidates;

  bool centerless = g.center().size() == 1;
  auto pool = enumerate_homomorphisms(ctx.g, ctx.aut.as_group, budget);
  std::size_t fpf_pairs = 0;

  if (centerless) {
    for (const auto& f : pool) {
      for (const auto& h : enumerate_hom_f_fpf(ctx.aut, f, pool)) {
        ++fpf_pairs;
        CrossedHom ch = g_from_fh(ctx.aut, f, h);
        candidates.offer(beta_map(ctx.aut, ch));
      }
    }
  } else {
    for (const auto& f : pool)
      for (const auto& ch :
           enumerate_crossed_homs(ctx.aut, f, /*bijective_only=*/true, budget))
        candidates.offer(beta_map(ctx.aut, ch));
  }

  if (centerless && fpf_pairs != ctx.aut.size() * candidates.found.size())
    throw ConsistencyError(
        "enumerate_H2: pair count disagrees with |Aut(G)| * #H2");

  std::vector<RegularSubgroupRecord> out;
  for (auto& [elems, witness] : candidates.found) {
    auto rec = describe_regular_subgroup(
        ctx, PermGroup::from_elements(std::move(elems)), budget,
        std::move(witness));
    if (!rec.regular)
      throw ConsistencyError("enumerate_H2: candidate image is not regular");
    out.push_back(std::move(rec));
  }
  std::sort(out.begin(), out.end(),
            [](const RegularSubgroupRecord& a, const RegularSubgroupRecord& b) {
              return a.subgroup.elements() < b.subgroup.elements();
            });
  return out;
}

std::vector<RegularSubgroupRecord> enumerate_H1(const HolomorphContext& ctx,
                                                const Budget& budget) {
  std::vector<RegularSubgroupRecord> out;
  for (auto& sub :
       normal_subgroups_of_order(ctx.hol, ctx.g->order(), budget)) {
    if (!is_regular_subgroup(sub, ctx)) continue;
    out.push_back(describe_regular_subgroup(ctx, std::move(sub), budget));
  }
  std::sort(out.begin(), out.end(),
            [](const RegularSubgroupRecord& a, const RegularSubgroupRecord& b) {
              return a.subgroup.elements() < b.subgroup.elements();
            });
  return out;
}

TGroupData enumerate_H0_and_T(const HolomorphContext& ctx,
                              const std::vector<RegularSubgroupRecord>& h1,
                              const std::vector<RegularSubgroupRecord>& h2,
                              const Budget& budget) {
  const FiniteGroup& g = *ctx.g;
  std::vector<RegularSubgroupRecord> h0;

  std::set<std::vector<Perm>> h2_keys;
  for (const auto& r : h2) h2_keys.insert(r.subgroup.elements());
  for (const auto& r : h1)
    if (h2_keys.count(r.subgroup.elements())) h0.push_back(r);

  // lambda's member leads so the identity coset is element 0.
  std::stable_sort(h0.begin(), h0.end(),
                   [](const RegularSubgroupRecord& a,
                      const RegularSubgroupRecord& b) {
                     bool la = a.tag == RegularSubgroupRecord::Tag::lambda;
                     bool lb = b.tag == RegularSubgroupRecord::Tag::lambda;
                     if (la != lb) return la;
                     return a.subgroup.elements() < b.subgroup.elements();
                   });
  if (h0.empty() || h0.front().tag != RegularSubgroupRecord::Tag::lambda)
    throw ConsistencyError("enumerate_H0_and_T: lambda(G) missing from H0");

  // Conjugator from the isomorphism witness: pi(x) = psi(x)(identity).
  auto conjugator_from = [&](const RegularSubgroupRecord& rec,
                             const std::vector<Elem>& witness) {
    std::vector<Point> img(g.order());
    for (std::size_t x = 0; x < g.order(); ++x)
      img[x] = rec.subgroup.element(witness[x])(0);
    Perm pi{std::vector<Point>(img)};
    for (Elem a : g.generators()) {
      Perm lhs = conjugate(pi, lambda_perm(g, a));
      if (lhs != rec.subgroup.element(witness[a]))
        throw ConsistencyError(
            "enumerate_H0_and_T: conjugator fails to carry lambda to N");
    }
    for (const Perm& hg : ctx.hol.generators())
      if (!ctx.hol.contains(conjugate(pi, hg)))
        throw ConsistencyError(
            "enumerate_H0_and_T: conjugator does not normalize Hol");
    return pi;
  };

  std::vector<Perm> conjugators;
  for (const auto& rec : h0) {
    if (!rec.iso_witness)
      throw ConsistencyError("enumerate_H0_and_T: H0 member without witness");
    conjugators.push_back(conjugator_from(rec, *rec.iso_witness));
  }

  std::size_t m = h0.size();
  budget.charge(m * m, "T group table cells");
  auto coset_of = [&](const Perm& p) {
    std::size_t found = m;
    for (std::size_t k = 0; k < m; ++k) {
      if (ctx.hol.contains(compose(conjugators[k].inverse(), p))) {
        if (found != m)
          throw ConsistencyError("enumerate_H0_and_T: cosets overlap");
        found = k;
      }
    }
    if (found == m)
      throw ConsistencyError(
          "enumerate_H0_and_T: product escapes the coset union");
    return found;
  };

  std::vector<Elem> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      table[i * m + j] =
          static_cast<Elem>(coset_of(compose(conjugators[i], conjugators[j])));

  std::vector<std::string> labels;
  for (const auto& rec : h0) {
    switch (rec.tag) {
      case RegularSubgroupRecord::Tag::lambda: labels.push_back("[lambda]"); break;
      case RegularSubgroupRecord::Tag::rho: labels.push_back("[rho]"); break;
      default: labels.push_back("[N" + std::to_string(labels.size()) + "]");
    }
  }

  // Alternative isomorphism choices must land in the same coset.
  std::size_t na = ctx.aut.size();
  for (std::size_t i = 0; i < m; ++i) {
    const auto& rec = h0[i];
    for (std::size_t s = 1; s < na && s <= 2; ++s) {
      const auto& alpha = ctx.aut.automorphisms[s].images;
      std::vector<Point> img(g.order());
      for (std::size_t x = 0; x < g.order(); ++x)
        img[x] = rec.subgroup.element((*rec.iso_witness)[alpha[x]])(0);
      Perm alt{std::move(img)};
      if (coset_of(alt) != i)
        throw ConsistencyError(
            "enumerate_H0_and_T: coset depends on the isomorphism choice");
    }
  }

  // Regularity of the conjugation action: one carrier per ordered pair.
  bool action_regular = true;
  auto conj_elements = [&](const Perm& pi, const PermGroup& sub) {
    std::vector<Perm> out;
    out.reserve(sub.order());
    for (std::size_t i = 0; i < sub.order(); ++i)
      out.push_back(conjugate(pi, sub.element(i)));
    std::sort(out.begin(), out.end());
    return out;
  };
  for (std::size_t i = 0; i < m && action_regular; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      std::size_t carriers = 0;
      for (std::size_t k = 0; k < m; ++k)
        if (conj_elements(conjugators[k], h0[i].subgroup) ==
            h0[j].subgroup.elements())
          ++carriers;
      if (carriers != 1) {
        action_regular = false;
        break;
      }
    }
  }

  std::size_t hol_order = ctx.hol.order();
  return TGroupData{
      std::move(h0),
      std::move(conjugators),
      FiniteGroup::from_table(std::move(table), {}, std::move(labels)),
      hol_order,
      m * hol_order,
      action_regular,
      /*coset_independent=*/true};
}

}  // namespace holo
