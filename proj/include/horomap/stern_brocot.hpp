// Stern-Brocot sets and trees, Farey pairs, the energy pq of a reduced
// fraction, energy-pruned enumeration of the permuted tree, and the
// geodesic word/circle attached to a Farey pair.
#pragma once

#include "horomap/lr_word.hpp"
#include "horomap/mat2z.hpp"
#include "horomap/rational.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace horomap {

struct InvalidPair : std::domain_error {
  using std::domain_error::domain_error;
};

// F_{-1} = {0/1, 1/0}; F_k inserts the mediant between consecutive entries.
inline std::vector<ExtRational> stern_brocot_set(int k) {
  if (k < -1) throw DomainError("stern_brocot_set needs k >= -1");
  std::vector<ExtRational> f{ExtRational(Rational(0)), ExtRational::infinity()};
  for (int level = 0; level <= k; ++level) {
    std::vector<ExtRational> next;
    next.reserve(2 * f.size() - 1);
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
      next.push_back(f[i]);
      next.push_back(farey_sum(f[i], f[i + 1]));
    }
    next.push_back(f.back());
    f = std::move(next);
  }
  return f;
}

// Consecutive fractions lo < hi of a Stern-Brocot set: hi.num*lo.den -
// hi.den*lo.num = 1.
struct FareyPair {
  Rational lo, hi;

  FareyPair(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (!(lo < hi) || num(hi) * den(lo) - den(hi) * num(lo) != 1)
      throw InvalidPair("not a Farey pair");
  }

  Rational mediant() const { return farey_sum(lo, hi); }
};

// Daughters of p/q in the permuted tree: p/(p+q) and (p+q)/q, the two
// preimages of p/q under the extended Farey map.
inline std::pair<Rational, Rational> daughters_permuted(const Rational& x) {
  if (x <= 0) throw DomainError("daughters are defined for positive rationals");
  const Int p = num(x), q = den(x);
  return {Rational(p, p + q), Rational(p + q, q)};
}

inline Int energy(const Rational& x) {
  if (x <= 0) throw DomainError("energy is defined for positive rationals");
  return num(x) * den(x);
}

enum class TreeKind { Plain, Permuted };

struct TreeNode {
  Rational value;
  int level = 0;
  LRWord path;  // path in the tree the node lives in
  TreeKind tree_kind = TreeKind::Plain;
};

// Level k of either tree, left to right. Level k has 2^k nodes, so keep k
// modest; deep structure is reached through the coding instead.
inline std::vector<TreeNode> tree_level(TreeKind kind, int k) {
  if (k < 0) throw DomainError("tree levels start at 0");
  std::vector<TreeNode> nodes;
  nodes.reserve(std::size_t(1) << k);
  for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << k); ++bits) {
    LRWord path;
    path.letters.reserve(k);
    for (int i = k - 1; i >= 0; --i)
      path.letters.push_back((bits >> i) & 1 ? Letter::R : Letter::L);
    const LRWord coding = kind == TreeKind::Plain ? path : reverse_word(path);
    nodes.push_back(TreeNode{word_to_rational(coding), k, path, kind});
  }
  return nodes;
}

// Depth-first over the permuted tree from 1/1, pruning once pq exceeds the
// bound; valid because both daughters strictly increase the energy. The
// callback receives reduced coprime (p, q). Entries stay within 64 bits for
// any bound this library sweeps.
template <typename Fn>
inline void for_each_energy_bounded(const Rational& bound, Fn&& fn) {
  if (bound < 1) return;
  struct Item {
    std::int64_t p, q;
  };
  std::vector<Item> stack{{1, 1}};
  while (!stack.empty()) {
    const Item it = stack.back();
    stack.pop_back();
    if (Rational(Int(it.p) * Int(it.q)) > bound) continue;
    fn(it.p, it.q);
    stack.push_back({it.p + it.q, it.q});  // right daughter (p+q)/q
    stack.push_back({it.p, it.p + it.q});  // left daughter p/(p+q)
  }
}

// All reduced p/q with pq <= bound, ascending by (energy, value).
inline std::vector<Rational> enumerate_energy_bounded(const Rational& bound) {
  std::vector<Rational> out;
  for_each_energy_bounded(bound, [&](std::int64_t p, std::int64_t q) {
    out.emplace_back(Int(p), Int(q));
  });
  std::sort(out.begin(), out.end(), [](const Rational& x, const Rational& y) {
    const Int ex = energy(x), ey = energy(y);
    if (ex != ey) return ex < ey;
    return x < y;
  });
  return out;
}

// The reversed coding matrix of the mediant: for lo = p/q, hi = p'/q' this
// is (q p; q' p'), which maps {-p/q, -p'/q'} onto {0, 1/0}.
inline Mat2Z geodesic_word(const FareyPair& pair) {
  return Mat2Z(den(pair.lo), num(pair.lo), den(pair.hi), num(pair.hi));
}

// Half-circle with endpoints -lo and -hi: center -(lo+hi)/2, radius
// 1/(2 q q').
inline std::pair<Rational, Rational> geodesic_circle(const FareyPair& pair) {
  Rational center = -(pair.lo + pair.hi) / 2;
  Rational radius = Rational(Int(1), 2 * den(pair.lo) * den(pair.hi));
  return {std::move(center), std::move(radius)};
}

}  // namespace horomap
