#include "holo/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace holo {

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point v : images_) {
    if (v >= images_.size() || seen[v])
      throw std::invalid_argument("Perm: image table is not a bijection");
    seen[v] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  Perm p;
  p.images_ = std::move(img);
  return p;
}

Perm Perm::transposition(std::size_t degree, Point a, Point b) {
  if (a >= degree || b >= degree)
    throw std::invalid_argument("Perm::transposition: point out of range");
  Perm p = identity(degree);
  std::swap(p.images_[a], p.images_[b]);
  return p;
}

Perm Perm::from_cycles(std::size_t degree,
                       const std::vector<std::vector<Point>>& cycles) {
  Perm p = identity(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      Point from = cyc[i];
      Point to = cyc[(i + 1) % cyc.size()];
      if (from >= degree || used[from])
        throw std::invalid_argument("Perm::from_cycles: bad cycle");
      used[from] = true;
      p.images_[from] = to;
    }
  }
  return p;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  Perm inv;
  inv.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv.images_[images_[i]] = static_cast<Point>(i);
  return inv;
}

std::uint64_t Perm::order() const {
  std::uint64_t ord = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    Point j = static_cast<Point>(i);
    do {
      seen[j] = true;
      j = images_[j];
      ++len;
    } while (j != i);
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::vector<std::vector<Point>> Perm::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    std::vector<Point> cyc;
    Point j = static_cast<Point>(i);
    do {
      seen[j] = true;
      cyc.push_back(j);
      j = images_[j];
    } while (j != i);
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Perm::cycle_string() const {
  auto cycs = cycles();
  if (cycs.empty()) return "()";
  std::string s;
  for (const auto& cyc : cycs) {
    s += '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(cyc[i]);
    }
    s += ')';
  }
  return s;
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<Point> img(p.degree());
  const auto& pi = p.images();
  const auto& qi = q.images();
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = pi[qi[i]];
  return Perm(Perm::Unchecked{}, std::move(img));
}

Perm Perm::operator*(const Perm& rhs) const { return compose(*this, rhs); }

Perm conjugate(const Perm& g, const Perm& s) {
  return compose(compose(g, s), g.inverse());
}

std::size_t PermHash::operator()(const Perm& p) const {
  // FNV-1a over the image bytes.
  std::size_t h = 1469598103934665603ull;
  for (Point v : p.images()) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace holo
