#include "holo/crossed.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_set>

#include "hom_plan.hpp"

namespace holo {

namespace {

// Order of (a, phi) in G ⋊ Aut(G): iterate (a, phi)^k = (a·phi(a)·..., phi^k).
std::size_t twisted_pair_order(const FiniteGroup& g, const AutGroupRecord& aut,
                               Elem a, Elem phi) {
  Elem acc = a;
  Elem p = phi;
  std::size_t k = 1;
  while (acc != 0 || p != 0) {
    acc = g.mul(acc, aut.automorphisms[p].images[a]);
    p = aut.as_group->mul(p, phi);
    ++k;
  }
  return k;
}

}  // namespace

bool is_crossed_hom(const AutGroupRecord& aut, const Homomorphism& f,
                    const std::vector<Elem>& values) {
  const FiniteGroup& gamma = *f.domain;
  const FiniteGroup& g = *aut.base;
  if (values.size() != gamma.order() || values[0] != 0) return false;
  for (std::size_t a = 0; a < gamma.order(); ++a) {
    const auto& act = aut.automorphisms[f.images[a]].images;
    for (std::size_t b = 0; b < gamma.order(); ++b) {
      if (values[gamma.mul(static_cast<Elem>(a), static_cast<Elem>(b))] !=
          g.mul(values[a], act[values[b]]))
        return false;
    }
  }
  return true;
}

std::vector<CrossedHom> enumerate_crossed_homs(const AutGroupRecord& aut,
                                               const Homomorphism& f,
                                               bool bijective_only,
                                               const Budget& budget) {
  const FiniteGroup& gamma = *f.domain;
  const FiniteGroup& g = *aut.base;
  if (f.codomain.get() != aut.as_group.get())
    throw std::invalid_argument(
        "enumerate_crossed_homs: action does not land in the given Aut(G)");
  const auto& gens = gamma.generators();
  detail::Plan plan = detail::build_plan(gamma);

  // Candidate values for g(gen): the pair (value, f(gen)) must have order
  // dividing the order of gen in Gamma.
  std::vector<std::vector<Elem>> pools(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    std::size_t go = gamma.element_order(gens[j]);
    for (std::size_t v = 0; v < g.order(); ++v)
      if (go % twisted_pair_order(g, aut, static_cast<Elem>(v),
                                  f.images[gens[j]]) ==
          0)
        pools[j].push_back(static_cast<Elem>(v));
  }

  std::vector<Elem> values(gamma.order(), 0);
  std::vector<Elem> gen_val(gens.size(), 0);
  std::vector<char> used;
  if (bijective_only) {
    used.assign(g.order(), 0);
    used[0] = 1;
  }
  std::vector<CrossedHom> out;
  std::size_t nodes = 0;

  auto act_on = [&](Elem gamma_elem, Elem g_elem) {
    return aut.automorphisms[f.images[gamma_elem]].images[g_elem];
  };

  std::function<void(std::size_t)> descend = [&](std::size_t j) {
    if (j == plan.levels.size()) {
      CrossedHom found{f, values, false, false};
      found.injective =
          std::unordered_set<Elem>(values.begin(), values.end()).size() ==
          values.size();
      found.bijective = found.injective && gamma.order() == g.order();
      out.push_back(std::move(found));
      budget.charge(out.size(), "crossed homomorphisms found");
      return;
    }
    const auto& lv = plan.levels[j];
    for (Elem t : pools[j]) {
      budget.charge(++nodes, "crossed homomorphism search nodes");
      gen_val[j] = t;
      std::size_t placed = 0;
      bool ok = true;
      for (const auto& st : lv.steps) {
        // cocycle law: g(prev * gen) = g(prev) * f(prev)(g(gen))
        Elem v = g.mul(values[st.prev], act_on(st.prev, gen_val[st.gen]));
        if (bijective_only && used[v]) {
          ok = false;
          break;
        }
        values[st.elem] = v;
        if (bijective_only) used[v] = 1;
        ++placed;
      }
      if (ok) {
        for (const auto& ck : lv.checks) {
          if (values[ck.xg] !=
              g.mul(values[ck.x], act_on(ck.x, gen_val[ck.gen]))) {
            ok = false;
            break;
          }
        }
      }
      if (ok) descend(j + 1);
      if (bijective_only)
        for (std::size_t k = 0; k < placed; ++k)
          used[values[lv.steps[k].elem]] = 0;
    }
  };
  descend(0);

  // Full-pair verification pass over every survivor.
  for (const auto& ch : out)
    if (!is_crossed_hom(aut, f, ch.values))
      throw ConsistencyError("enumerate_crossed_homs: propagation bug");

  std::sort(out.begin(), out.end(),
            [](const CrossedHom& a, const CrossedHom& b) {
              return a.values < b.values;
            });
  return out;
}

std::vector<Perm> beta_map(const AutGroupRecord& aut, const CrossedHom& g) {
  const FiniteGroup& base = *aut.base;
  const FiniteGroup& gamma = *g.action.domain;
  std::vector<Perm> out;
  out.reserve(gamma.order());
  for (std::size_t c = 0; c < gamma.order(); ++c) {
    const auto& act = aut.automorphisms[g.action.images[c]].images;
    Elem ginv = base.inv(g.values[c]);
    std::vector<Point> images(base.order());
    // rho(g(c)) after the action: x -> f(c)(x) * g(c)^-1
    for (std::size_t x = 0; x < base.order(); ++x)
      images[x] = static_cast<Point>(base.mul(act[x], ginv));
    out.push_back(Perm(std::move(images)));
  }
  return out;
}

Homomorphism h_from_fg(const AutGroupRecord& aut, const CrossedHom& g) {
  const FiniteGroup& gamma = *g.action.domain;
  std::vector<Elem> images(gamma.order());
  for (std::size_t c = 0; c < gamma.order(); ++c)
    images[c] = aut.as_group->mul(aut.conj_of[g.values[c]],
                                  g.action.images[c]);
  Homomorphism h{g.action.domain, aut.as_group, std::move(images)};
  if (!is_homomorphism(gamma, *aut.as_group, h.images))
    throw ConsistencyError("h_from_fg: result is not a homomorphism");
  return h;
}

CrossedHom g_from_fh(const AutGroupRecord& aut, const Homomorphism& f,
                     const Homomorphism& h) {
  if (aut.base->center().size() != 1)
    throw std::invalid_argument("g_from_fh: center must be trivial");
  if (!in_hom_f(aut, f, h))
    throw std::invalid_argument("g_from_fh: h does not lie in Hom_f");
  const FiniteGroup& gamma = *f.domain;
  CrossedHom g{f, std::vector<Elem>(gamma.order()), false, false};
  for (std::size_t c = 0; c < gamma.order(); ++c) {
    Elem a = aut.as_group->mul(h.images[c], aut.as_group->inv(f.images[c]));
    Elem sigma = aut.conj_inv[a];
    if (sigma == kNoElem)
      throw ConsistencyError("g_from_fh: h*f^-1 left the inner subgroup");
    g.values[c] = sigma;
  }
  if (!is_crossed_hom(aut, f, g.values))
    throw ConsistencyError("g_from_fh: result fails the cocycle law");
  g.injective = std::unordered_set<Elem>(g.values.begin(), g.values.end())
                    .size() == g.values.size();
  g.bijective = g.injective && gamma.order() == aut.base->order();
  return g;
}

bool in_hom_f(const AutGroupRecord& aut, const Homomorphism& f,
              const Homomorphism& h) {
  for (std::size_t c = 0; c < f.images.size(); ++c)
    if (aut.out_class[f.images[c]] != aut.out_class[h.images[c]]) return false;
  return true;
}

bool is_fixed_point_free_pair(const Homomorphism& f, const Homomorphism& h) {
  for (std::size_t c = 1; c < f.images.size(); ++c)
    if (f.images[c] == h.images[c]) return false;
  return f.images[0] == h.images[0];
}

std::vector<Homomorphism> enumerate_hom_f_fpf(
    const AutGroupRecord& aut, const Homomorphism& f,
    const std::vector<Homomorphism>& hom_pool) {
  std::vector<Homomorphism> out;
  for (const auto& h : hom_pool)
    if (in_hom_f(aut, f, h) && is_fixed_point_free_pair(f, h))
      out.push_back(h);
  return out;
}

bool images_normal_in_aut(const AutGroupRecord& aut, const Homomorphism& f,
                          const Homomorphism& h) {
  auto image_of = [](const Homomorphism& m) {
    std::vector<Elem> img(m.images);
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    return img;
  };
  return is_normal_subset(*aut.as_group, image_of(f)) &&
         is_normal_subset(*aut.as_group, image_of(h));
}

}  // namespace holo
