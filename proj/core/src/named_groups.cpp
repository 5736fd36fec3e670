#include "holo/named_groups.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <set>
#include <stdexcept>

#include "holo/perm.hpp"
#include "holo/perm_group.hpp"

namespace holo {

namespace {

bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) {
    if (f > std::numeric_limits<std::size_t>::max() / k)
      throw UsageError("group order overflows");
    f *= k;
  }
  return f;
}

// Fractional linear maps z -> (az+b)/(cz+d) on the projective line over F_p,
// point p standing for infinity. special restricts to square determinants.
FiniteGroup projective_linear(std::size_t p, bool special, const char* name) {
  if (!is_prime(p))
    throw UsageError(std::string(name) +
                     ": only prime fields are supported, got q=" +
                     std::to_string(p));
  std::vector<std::size_t> inverse(p, 0);
  for (std::size_t x = 1; x < p; ++x)
    for (std::size_t y = 1; y < p; ++y)
      if (x * y % p == 1) inverse[x] = y;
  std::vector<char> is_square(p, 0);
  for (std::size_t x = 1; x < p; ++x) is_square[x * x % p] = 1;

  std::set<Perm> maps;
  std::vector<Point> images(p + 1);
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = 0; b < p; ++b)
      for (std::size_t c = 0; c < p; ++c)
        for (std::size_t d = 0; d < p; ++d) {
          std::size_t det = (a * d % p + p - b * c % p) % p;
          if (det == 0 || (special && !is_square[det])) continue;
          for (std::size_t z = 0; z < p; ++z) {
            std::size_t num = (a * z + b) % p, den = (c * z + d) % p;
            images[z] = static_cast<Point>(den ? num * inverse[den] % p : p);
          }
          images[p] = static_cast<Point>(c ? a * inverse[c] % p : p);
          maps.insert(Perm(std::vector<Point>(images)));
        }
  return FiniteGroup::from_permutations(
      PermGroup::from_elements({maps.begin(), maps.end()}));
}

struct Atom {
  enum Kind { S, A, C, D, PSL, PGL } kind;
  std::size_t n;
};

Atom parse_atom(const std::string& s) {
  auto numeric_suffix = [&](std::size_t from) {
    if (from >= s.size())
      throw UsageError("bad group descriptor: " + s);
    std::size_t n = 0;
    for (std::size_t i = from; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9')
        throw UsageError("bad group descriptor: " + s);
      n = n * 10 + static_cast<std::size_t>(s[i] - '0');
      if (n > 1'000'000) throw UsageError("bad group descriptor: " + s);
    }
    return n;
  };
  auto projective_arg = [&](std::size_t prefix_len) {
    // expects "(2,<p>)" after the prefix
    if (s.size() < prefix_len + 5 || s[prefix_len] != '(' ||
        s[prefix_len + 1] != '2' || s[prefix_len + 2] != ',' ||
        s.back() != ')')
      throw UsageError("bad group descriptor: " + s +
                       " (expected PSL(2,<p>) or PGL(2,<p>))");
    std::size_t n = 0;
    for (std::size_t i = prefix_len + 3; i + 1 < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9')
        throw UsageError("bad group descriptor: " + s);
      n = n * 10 + static_cast<std::size_t>(s[i] - '0');
      if (n > 1'000'000) throw UsageError("bad group descriptor: " + s);
    }
    return n;
  };
  if (s.rfind("PSL", 0) == 0) return {Atom::PSL, projective_arg(3)};
  if (s.rfind("PGL", 0) == 0) return {Atom::PGL, projective_arg(3)};
  if (s.empty()) throw UsageError("empty group descriptor");
  switch (s[0]) {
    case 'S': return {Atom::S, numeric_suffix(1)};
    case 'A': return {Atom::A, numeric_suffix(1)};
    case 'C': return {Atom::C, numeric_suffix(1)};
    case 'D': return {Atom::D, numeric_suffix(1)};
    default: throw UsageError("bad group descriptor: " + s);
  }
}

std::size_t atom_order(const Atom& a) {
  switch (a.kind) {
    case Atom::S:
      if (a.n < 1) throw UsageError("S<n> requires n >= 1");
      return factorial(a.n);
    case Atom::A:
      if (a.n < 1) throw UsageError("A<n> requires n >= 1");
      return a.n <= 2 ? 1 : factorial(a.n) / 2;
    case Atom::C:
      if (a.n < 1) throw UsageError("C<n> requires n >= 1");
      return a.n;
    case Atom::D:
      if (a.n < 1) throw UsageError("D<n> requires n >= 1");
      return 2 * a.n;
    case Atom::PSL: {
      if (!is_prime(a.n))
        throw UsageError("PSL(2,q): only prime q is supported");
      std::size_t full = a.n * a.n * a.n - a.n;
      return a.n == 2 ? full : full / 2;
    }
    case Atom::PGL:
      if (!is_prime(a.n))
        throw UsageError("PGL(2,q): only prime q is supported");
      return a.n * a.n * a.n - a.n;
  }
  throw UsageError("bad group descriptor");
}

std::vector<std::string> split_atoms(const std::string& spec) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char ch : spec) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == 'x' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

FiniteGroup build_atom(const Atom& a) {
  atom_order(a);  // validates parameters
  switch (a.kind) {
    case Atom::S: return symmetric_group(a.n);
    case Atom::A: return alternating_group(a.n);
    case Atom::C: return cyclic_group(a.n);
    case Atom::D: return dihedral_group(a.n);
    case Atom::PSL: return psl2(a.n);
    case Atom::PGL: return pgl2(a.n);
  }
  throw UsageError("bad group descriptor");
}

}  // namespace

FiniteGroup symmetric_group(std::size_t n) {
  if (n <= 1) return cyclic_group(1);
  if (n == 2) return FiniteGroup::from_permutations(
      close_generators({Perm::transposition(2, 0, 1)}, 2));
  std::vector<Point> cyc(n);
  for (std::size_t i = 0; i < n; ++i) cyc[i] = static_cast<Point>((i + 1) % n);
  return FiniteGroup::from_permutations(close_generators(
      {Perm::transposition(n, 0, 1), Perm(std::move(cyc))}, n));
}

FiniteGroup alternating_group(std::size_t n) {
  if (n <= 2) return cyclic_group(1);
  Perm three = Perm::from_cycles(n, {{0, 1, 2}});
  if (n == 3)
    return FiniteGroup::from_permutations(close_generators({three}, n));
  std::vector<Point> img(n);
  if (n % 2 == 1) {  // (0 1 ... n-1)
    for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>((i + 1) % n);
  } else {  // (1 2 ... n-1), fixing 0
    img[0] = 0;
    for (std::size_t i = 1; i < n; ++i)
      img[i] = static_cast<Point>(i + 1 == n ? 1 : i + 1);
  }
  return FiniteGroup::from_permutations(
      close_generators({three, Perm(std::move(img))}, n));
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n < 1) throw UsageError("C<n> requires n >= 1");
  std::vector<Elem> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      table[i * n + j] = static_cast<Elem>((i + j) % n);
  std::vector<std::string> labels{"e"};
  if (n > 1) labels.push_back("r");
  for (std::size_t i = 2; i < n; ++i) labels.push_back("r^" + std::to_string(i));
  std::vector<Elem> gens;
  if (n > 1) gens.push_back(1);
  return FiniteGroup::from_table(std::move(table), std::move(gens),
                                 std::move(labels));
}

FiniteGroup dihedral_group(std::size_t n) {
  if (n < 1) throw UsageError("D<n> requires n >= 1");
  // indices 0..n-1: rotations r^i; n..2n-1: reflections s*r^i
  std::size_t m = 2 * n;
  auto rot = [n](std::size_t i) { return i % n; };
  std::vector<Elem> table(m * m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      table[i * m + j] = static_cast<Elem>(rot(i + j));            // r^i r^j
      table[i * m + (n + j)] = static_cast<Elem>(n + rot(n + j - i));  // r^i s r^j = s r^{j-i}
      table[(n + i) * m + j] = static_cast<Elem>(n + rot(i + j));  // s r^i r^j
      table[(n + i) * m + (n + j)] = static_cast<Elem>(rot(n + j - i));  // s r^i s r^j
    }
  }
  std::vector<std::string> labels(m);
  for (std::size_t i = 0; i < n; ++i) {
    std::string ri = i == 0 ? "" : i == 1 ? "r" : "r^" + std::to_string(i);
    labels[i] = i == 0 ? "e" : ri;
    labels[n + i] = "s" + ri;
  }
  std::vector<Elem> gens;
  if (n > 1) gens.push_back(1);
  gens.push_back(static_cast<Elem>(n));
  return FiniteGroup::from_table(std::move(table), std::move(gens),
                                 std::move(labels));
}

FiniteGroup psl2(std::size_t p) { return projective_linear(p, true, "PSL"); }

FiniteGroup pgl2(std::size_t p) { return projective_linear(p, false, "PGL"); }

std::size_t named_group_order(const std::string& spec) {
  std::size_t order = 1;
  for (const std::string& part : split_atoms(spec)) {
    std::size_t o = atom_order(parse_atom(part));
    if (order > std::numeric_limits<std::size_t>::max() / o)
      throw UsageError("group order overflows");
    order *= o;
  }
  return order;
}

FiniteGroup make_named_group(const std::string& spec, const Budget& budget) {
  std::size_t order = named_group_order(spec);
  budget.charge(order, "group elements");
  budget.charge(order * order, "Cayley table cells");

  auto parts = split_atoms(spec);
  FiniteGroup g = build_atom(parse_atom(parts[0]));
  for (std::size_t i = 1; i < parts.size(); ++i)
    g = direct_product(g, build_atom(parse_atom(parts[i])));
  return g;
}

std::vector<std::string> catalog_of_order(std::size_t m) {
  auto atoms_of = [](std::size_t d) {
    std::vector<std::string> out;
    out.push_back("C" + std::to_string(d));
    // Small aliases (S1, S2, A3, D2, PSL(2,2), ...) repeat the groups above;
    // list each isomorphism shape under its simplest name only.
    if (d % 2 == 0 && d >= 6) out.push_back("D" + std::to_string(d / 2));
    for (std::size_t n = 3; factorial(n) <= d; ++n)
      if (factorial(n) == d) out.push_back("S" + std::to_string(n));
    for (std::size_t n = 4; factorial(n) / 2 <= d; ++n)
      if (factorial(n) / 2 == d) out.push_back("A" + std::to_string(n));
    for (std::size_t p = 5; p * p * p - p <= 2 * d; ++p) {
      if (!is_prime(p)) continue;
      if ((p * p * p - p) / 2 == d)
        out.push_back("PSL(2," + std::to_string(p) + ")");
      if (p * p * p - p == d) out.push_back("PGL(2," + std::to_string(p) + ")");
    }
    return out;
  };

  std::vector<std::string> catalog = atoms_of(m);
  if (m == 1) return catalog;

  // Products: multisets of atoms with orders >= 2 multiplying to m, written
  // with non-increasing (order, name) so each multiset appears once.
  std::vector<std::string> products;
  std::vector<std::string> parts;
  std::function<void(std::size_t, std::size_t, const std::string&)> rec =
      [&](std::size_t remaining, std::size_t max_order,
          const std::string& max_name) {
        if (remaining == 1) {
          if (parts.size() >= 2) {
            std::string joined = parts[0];
            for (std::size_t i = 1; i < parts.size(); ++i)
              joined += "x" + parts[i];
            products.push_back(joined);
          }
          return;
        }
        for (std::size_t d = std::min(remaining, max_order); d >= 2; --d) {
          if (remaining % d != 0) continue;
          for (const std::string& name : atoms_of(d)) {
            if (d == max_order && name > max_name) continue;
            parts.push_back(name);
            rec(remaining / d, d, name);
            parts.pop_back();
          }
        }
      };
  rec(m, m, "~");  // "~" sorts after every descriptor
  std::sort(products.begin(), products.end());
  catalog.insert(catalog.end(), products.begin(), products.end());
  return catalog;
}

}  // namespace holo
