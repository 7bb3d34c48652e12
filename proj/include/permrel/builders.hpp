#pragma once

// Named groups and composite constructions: direct, subdirect and parallel
// sums, parallel multiples, fixed-point extensions, restrictions and coset
// actions.

#include <numeric>
#include <unordered_map>

#include "stabilizers.hpp"

namespace permrel {

namespace detail {

inline Permutation from_images(std::size_t n, const std::function<void(std::vector<Point>&)>& fill) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  fill(img);
  return Permutation(std::move(img));
}

inline BigInt factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

inline Permutation cycle_on(std::size_t n, const std::vector<Point>& pts) {
  return from_images(n, [&](auto& img) {
    for (std::size_t i = 0; i < pts.size(); ++i) img[pts[i]] = pts[(i + 1) % pts.size()];
  });
}

}  // namespace detail

/// The full symmetric group on n points.
inline PermGroup symmetric_group(std::size_t n) {
  if (n <= 1) return PermGroup::trivial(n).named("S" + std::to_string(n));
  std::vector<Point> cyc(n);
  for (std::size_t i = 0; i < n; ++i) cyc[i] = static_cast<Point>((i + 1) % n);
  std::vector<Point> tr(n);
  std::iota(tr.begin(), tr.end(), Point{0});
  std::swap(tr[0], tr[1]);
  BigInt order = 1;
  for (std::size_t i = 2; i <= n; ++i) order *= i;
  return PermGroup(n, {Permutation(cyc), Permutation(tr)}, "S" + std::to_string(n)).with_order_hint(order);
}

/// 𝒢(B) for a partition B of the domain into blocks of equal size: the
/// wreath product of Sym(block) by Sym(blocks).
inline PermGroup partition_group(const std::vector<PointSet>& blocks) {
  if (blocks.empty()) throw PreconditionError("empty block family");
  const std::size_t n = blocks.front().degree();
  const std::size_t b = blocks.front().size();
  const std::size_t m = blocks.size();
  PointSet seen(n);
  for (const auto& blk : blocks) {
    if (blk.size() != b || !(blk & seen).empty()) throw PreconditionError("blocks must be disjoint and of equal size");
    seen = seen | blk;
  }
  if (seen.size() != n) throw PreconditionError("blocks must cover the domain");
  std::vector<std::vector<Point>> pts;
  for (const auto& blk : blocks) pts.push_back(blk.points());
  std::vector<Permutation> gens;
  auto from_images = [&](auto&& fill) {
    std::vector<Point> img(n);
    std::iota(img.begin(), img.end(), Point{0});
    fill(img);
    return Permutation(img);
  };
  if (b >= 2) {
    gens.push_back(from_images([&](auto& img) { std::swap(img[pts[0][0]], img[pts[0][1]]); }));
    if (b >= 3)
      gens.push_back(from_images([&](auto& img) {
        for (std::size_t i = 0; i < b; ++i) img[pts[0][i]] = pts[0][(i + 1) % b];
      }));
  }
  if (m >= 2) {
    gens.push_back(from_images([&](auto& img) {
      for (std::size_t i = 0; i < b; ++i) std::swap(img[pts[0][i]], img[pts[1][i]]);
    }));
    if (m >= 3)
      gens.push_back(from_images([&](auto& img) {
        for (std::size_t j = 0; j < m; ++j)
          for (std::size_t i = 0; i < b; ++i) img[pts[j][i]] = pts[(j + 1) % m][i];
      }));
  }
  BigInt fb = 1, order = 1;
  for (std::size_t i = 2; i <= b; ++i) fb *= i;
  for (std::size_t j = 0; j < m; ++j) order *= fb;
  for (std::size_t j = 2; j <= m; ++j) order *= j;
  return PermGroup(n, gens).with_order_hint(order);
}

inline PermGroup alternating_group(std::size_t n) {
  std::string name = "A" + std::to_string(n);
  if (n <= 2) return PermGroup::trivial(n).named(name);
  std::vector<Permutation> gens{detail::cycle_on(n, {0, 1, 2})};
  if (n >= 4) {
    // (1,...,n) for odd n, (2,...,n) for even n, together with (1,2,3).
    std::vector<Point> pts;
    for (std::size_t i = (n % 2 == 1 ? 0 : 1); i < n; ++i) pts.push_back(static_cast<Point>(i));
    gens.push_back(detail::cycle_on(n, pts));
  }
  return PermGroup(n, gens, name).with_order_hint(detail::factorial(n) / 2);
}

inline PermGroup cyclic_group(std::size_t n) {
  std::vector<Point> pts(n);
  std::iota(pts.begin(), pts.end(), Point{0});
  return PermGroup(n, {detail::cycle_on(n, pts)}, "C" + std::to_string(n));
}

inline PermGroup dihedral_group(std::size_t n) {
  std::vector<Point> pts(n);
  std::iota(pts.begin(), pts.end(), Point{0});
  Permutation flip = detail::from_images(n, [&](auto& img) {
    for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>((n - i) % n);
  });
  return PermGroup(n, {detail::cycle_on(n, pts), flip}, "D" + std::to_string(n));
}

/// Klein four-group {1, (1,2)(3,4), (1,3)(2,4), (1,4)(2,3)}.
inline PermGroup klein_four() { return PermGroup::from_cycles(4, {"(1,2)(3,4)", "(1,3)(2,4)"}, "K4"); }

/// G and H acting independently on the disjoint union (G's points first).
inline PermGroup direct_sum(const PermGroup& g, const PermGroup& h) {
  const std::size_t n = g.degree() + h.degree();
  std::vector<Permutation> gens;
  for (const auto& x : g.generators()) gens.push_back(x.shifted(n, 0));
  for (const auto& x : h.generators()) gens.push_back(x.shifted(n, g.degree()));
  return PermGroup(n, gens).with_order_hint(g.order() * h.order());
}

/// Each generator acts identically on r consecutive copies of the domain.
inline PermGroup parallel_multiple(const PermGroup& g, std::size_t r) {
  if (r == 0) throw PreconditionError("parallel multiple needs r >= 1");
  if (r == 1) return g;
  const std::size_t d = g.degree(), n = d * r;
  std::vector<Permutation> gens;
  for (const auto& x : g.generators())
    gens.push_back(detail::from_images(n, [&](auto& img) {
      for (std::size_t c = 0; c < r; ++c)
        for (std::size_t a = 0; a < d; ++a) img[c * d + a] = static_cast<Point>(c * d + x[static_cast<Point>(a)]);
    }));
  return PermGroup(n, gens).with_order_hint(g.order());
}

inline PermGroup add_fixed_points(const PermGroup& g, std::size_t m) {
  if (m == 0) return g;
  const std::size_t n = g.degree() + m;
  std::vector<Permutation> gens;
  for (const auto& x : g.generators()) gens.push_back(x.shifted(n, 0));
  return PermGroup(n, gens).with_order_hint(g.order());
}

/// Restriction of a permutation to an invariant set, relabelled 0..|s|-1 in
/// ascending order of the points of s.
inline Permutation restrict_to(const Permutation& x, const PointSet& s) {
  auto pts = s.points();
  std::vector<int> local(x.degree(), -1);
  for (std::size_t i = 0; i < pts.size(); ++i) local[pts[i]] = static_cast<int>(i);
  std::vector<Point> img(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    int j = local[x[pts[i]]];
    if (j < 0) throw PreconditionError("set is not invariant under the permutation");
    img[i] = static_cast<Point>(j);
  }
  return Permutation(std::move(img));
}

/// Constituent of G on an invariant set; generator i of the result is the
/// restriction of generator i of G (identities kept out by PermGroup).
inline PermGroup restriction(const PermGroup& g, const PointSet& s) {
  std::vector<Permutation> gens;
  for (const auto& x : g.generators()) gens.push_back(restrict_to(x, s));
  return PermGroup(s.size(), gens);
}

/// Points moved by some generator.
inline PointSet moved_points(const PermGroup& g) {
  PointSet s(g.degree());
  for (const auto& x : g.generators())
    for (Point p : x.support()) s.insert(p);
  return s;
}

// ---------------------------------------------------------------------------
// Isomorphisms given by generator images.

/// A homomorphism source -> target fixed by the images of the source
/// generators, in order.
class IsoMap {
 public:
  IsoMap(PermGroup source, PermGroup target, std::vector<Permutation> images)
      : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_.generators().size())
      throw PreconditionError("one image per source generator is required");
    for (const auto& y : images_)
      if (y.degree() != target_.degree()) throw DegreeMismatch(target_.degree(), y.degree());
    const std::size_t n1 = source_.degree(), n = n1 + target_.degree();
    std::vector<Permutation> gens;
    for (std::size_t i = 0; i < images_.size(); ++i)
      gens.push_back(source_.generators()[i].shifted(n, 0) * images_[i].shifted(n, n1));
    graph_ = PermGroup(n, gens);
  }

  const PermGroup& source() const noexcept { return source_; }
  const PermGroup& target() const noexcept { return target_; }
  const std::vector<Permutation>& images() const noexcept { return images_; }

  /// The graph {(g, phi(g))} inside source + target.
  const PermGroup& graph() const noexcept { return graph_; }

  /// The images generate the target, and the graph projects one-to-one on both sides.
  bool is_isomorphism() const {
    for (const auto& y : images_)
      if (!target_.contains(y)) return false;
    BigInt g = graph_.order();
    return g == source_.order() && g == target_.order() && PermGroup(target_.degree(), images_).order() == g;
  }

  /// phi(g) for g in the source. Requires is_isomorphism().
  Permutation operator()(const Permutation& g) const {
    const std::size_t n1 = source_.degree(), n = graph_.degree();
    std::call_once(chain_once_->flag, [&] {
      std::vector<Point> prefix(n1);
      std::iota(prefix.begin(), prefix.end(), Point{0});
      chain_once_->chain = graph_.chain_with_base(prefix);
    });
    const auto& ch = chain_once_->chain;
    auto [res, level] = ch.sift(g.shifted(n, 0));
    for (std::size_t a = 0; a < n1; ++a)
      if (res[static_cast<Point>(a)] != a) throw PreconditionError("element is not in the source group");
    // res = (1, c) with (g, 1) = res * w and w = (g, phi(g)); so phi(g) = c^-1.
    std::vector<Point> img(n - n1);
    for (std::size_t a = n1; a < n; ++a) img[a - n1] = static_cast<Point>(res[static_cast<Point>(a)] - n1);
    return Permutation(std::move(img)).inverse();
  }

 private:
  struct Once {
    std::once_flag flag;
    StabilizerChain chain;
  };
  PermGroup source_, target_;
  std::vector<Permutation> images_;
  PermGroup graph_;
  std::shared_ptr<Once> chain_once_ = std::make_shared<Once>();
};

// ---------------------------------------------------------------------------
// Subdirect sums.

/// G1[H1] (+)_phi G2[H2]: pairs (g, h) with phi(H1 g) = H2 h. The factor
/// isomorphism is given by pairs (g1_reps[i], g2_images[i]) whose projections
/// generate G1 and G2.
struct SubdirectSumSpec {
  PermGroup g1, h1, g2, h2;
  std::vector<Permutation> g1_reps;
  std::vector<Permutation> g2_images;
  /// Optional relabelling: point i of the concatenated domain becomes domain[i].
  std::vector<Point> domain;
};

inline bool is_normal_subgroup(const PermGroup& n, const PermGroup& g) {
  if (!n.is_subgroup_of(g)) return false;
  for (const auto& x : g.generators())
    for (const auto& y : n.generators())
      if (!n.contains(y.conjugate_by(x))) return false;
  return true;
}

/// Builds the subdirect sum and checks its defining properties: kernels
/// normal, equal indices, the pairs generating G1 and G2, and order |G1||H2|.
inline PermGroup subdirect_sum(const SubdirectSumSpec& spec) {
  const auto& [g1, h1, g2, h2, reps, imgs, domain] = spec;
  if (!is_normal_subgroup(h1, g1) || !is_normal_subgroup(h2, g2))
    throw PreconditionError("kernels must be normal subgroups");
  if (g1.order() * h2.order() != g2.order() * h1.order()) throw PreconditionError("factor groups differ in order");
  if (reps.size() != imgs.size()) throw PreconditionError("factor map needs one image per representative");
  const std::size_t n1 = g1.degree(), n = n1 + g2.degree();
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < reps.size(); ++i) gens.push_back(reps[i].shifted(n, 0) * imgs[i].shifted(n, n1));
  for (const auto& x : h1.generators()) gens.push_back(x.shifted(n, 0));
  for (const auto& x : h2.generators()) gens.push_back(x.shifted(n, n1));
  if (!domain.empty()) {
    if (domain.size() != n) throw PreconditionError("domain map has the wrong length");
    for (auto& x : gens) x = x.relabeled(domain);
  }
  PermGroup out(n, gens);
  BigInt expected = g1.order() * h2.order();
  if (out.order() != expected) throw PreconditionError("factor map is not an isomorphism of the factor groups");
  std::vector<Permutation> p1 = reps, p2 = imgs;
  for (const auto& x : h1.generators()) p1.push_back(x);
  for (const auto& x : h2.generators()) p2.push_back(x);
  if (!(PermGroup(n1, p1) == g1) || !(PermGroup(g2.degree(), p2) == g2))
    throw PreconditionError("pairs do not project onto both constituents");
  return out;
}

/// H ||_phi K: the subdirect sum with trivial kernels.
inline PermGroup parallel_sum(const IsoMap& phi) {
  if (!phi.is_isomorphism()) throw PreconditionError("parallel sum needs an isomorphism");
  return PermGroup(phi.graph().degree(), phi.graph().generators()).with_order_hint(phi.source().order());
}

/// Splits an intransitive group along an orbit-closed block.
inline SubdirectSumSpec decompose_intransitive(const PermGroup& g, const PointSet& block) {
  if (block.degree() != g.degree()) throw DegreeMismatch(g.degree(), block.degree());
  if (block.empty() || block.size() == g.degree()) throw PreconditionError("block must be a proper nonempty set");
  for (const auto& x : g.generators())
    if (act_set(x, block) != block) throw PreconditionError("block is not a union of orbits");
  PointSet rest = block.complement();
  SubdirectSumSpec spec;
  spec.g1 = restriction(g, block);
  spec.g2 = restriction(g, rest);
  spec.h1 = restriction(pointwise_stabilizer(g, rest), block);
  spec.h2 = restriction(pointwise_stabilizer(g, block), rest);
  for (const auto& x : g.generators()) {
    spec.g1_reps.push_back(restrict_to(x, block));
    spec.g2_images.push_back(restrict_to(x, rest));
  }
  for (Point p : block.points()) spec.domain.push_back(p);
  for (Point p : rest.points()) spec.domain.push_back(p);
  return spec;
}

// ---------------------------------------------------------------------------
// Coset actions.

/// Right cosets of H in G, numbered breadth first from H itself.
class CosetActionSpec {
 public:
  CosetActionSpec(PermGroup g, PermGroup h) : g_(std::move(g)), h_(std::move(h)) {
    if (!h_.is_subgroup_of(g_)) throw PreconditionError("H is not a subgroup of G");
    std::vector<Point> prefix(g_.degree());
    std::iota(prefix.begin(), prefix.end(), Point{0});
    h_chain_ = h_.is_trivial() ? StabilizerChain(g_.degree(), {}, prefix) : h_.chain_with_base(prefix);
    BigInt index = g_.order() / h_.order();
    if (index > 200000) throw BudgetExceeded("coset action of degree above 200000");
    Permutation id(g_.degree());
    reps_.push_back(id);
    canon_index_.emplace(canonical(id), 0);
    for (std::size_t k = 0; k < reps_.size(); ++k)
      for (const auto& s : g_.generators()) {
        Permutation c = canonical(reps_[k] * s);
        if (canon_index_.emplace(c, reps_.size()).second) reps_.push_back(c);
      }
    if (BigInt(reps_.size()) != index) throw PreconditionError("coset enumeration did not close");
  }

  const PermGroup& group() const noexcept { return g_; }
  const PermGroup& subgroup() const noexcept { return h_; }
  const std::vector<Permutation>& reps() const noexcept { return reps_; }
  std::size_t index() const noexcept { return reps_.size(); }

  /// Number of the coset H x.
  std::size_t coset_of(const Permutation& x) const { return canon_index_.at(canonical(x)); }

  /// The permutation of cosets induced by right multiplication with x.
  Permutation action_of(const Permutation& x) const {
    std::vector<Point> img(reps_.size());
    for (std::size_t i = 0; i < reps_.size(); ++i) img[i] = static_cast<Point>(coset_of(reps_[i] * x));
    return Permutation(std::move(img));
  }

  /// (G, G/H), generator i being the action of generator i of G.
  PermGroup action() const {
    std::vector<Permutation> gens;
    for (const auto& s : g_.generators()) gens.push_back(action_of(s));
    return PermGroup(reps_.size(), gens);
  }

 private:
  /// Lexicographically least element of H x (by image sequence).
  Permutation canonical(Permutation x) const {
    for (const auto& lv : h_chain_.levels()) {
      if (lv.orbit.size() == 1) continue;
      Point best = lv.orbit.front();
      for (Point a : lv.orbit)
        if (x[a] < x[best]) best = a;
      x = lv.rep(best) * x;
    }
    return x;
  }

  PermGroup g_, h_;
  StabilizerChain h_chain_;
  std::vector<Permutation> reps_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> canon_index_;
};

inline std::pair<PermGroup, CosetActionSpec> coset_action(const PermGroup& g, const PermGroup& h) {
  CosetActionSpec spec(g, h);
  return {spec.action(), std::move(spec)};
}

// ---------------------------------------------------------------------------

/// Action on k-subsets, numbered in colex order.
inline PermGroup subset_action(const PermGroup& g, std::size_t k) {
  const std::size_t n = g.degree();
  std::vector<PointSet> subsets;
  std::vector<Point> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      subsets.push_back(PointSet::of(n, cur));
      return;
    }
    for (std::size_t a = start; a < n; ++a) {
      cur.push_back(static_cast<Point>(a));
      rec(a + 1);
      cur.pop_back();
    }
  };
  rec(0);
  std::sort(subsets.begin(), subsets.end(), [](const PointSet& a, const PointSet& b) {
    auto pa = a.points(), pb = b.points();
    return std::lexicographical_compare(pa.rbegin(), pa.rend(), pb.rbegin(), pb.rend());
  });
  std::unordered_map<PointSet, std::size_t, PointSetHash> index;
  for (std::size_t i = 0; i < subsets.size(); ++i) index[subsets[i]] = i;
  std::vector<Permutation> gens;
  for (const auto& x : g.generators()) {
    std::vector<Point> img(subsets.size());
    for (std::size_t i = 0; i < subsets.size(); ++i) img[i] = static_cast<Point>(index.at(act_set(x, subsets[i])));
    gens.push_back(Permutation(std::move(img)));
  }
  return PermGroup(subsets.size(), gens);
}

/// A permutation p with p^-1 G p = H, if one exists. Small groups only:
/// candidate generator images are searched among elements of H.
inline std::optional<Permutation> permutation_isomorphism(const PermGroup& g, const PermGroup& h,
                                                          std::size_t element_limit = 200000) {
  if (g.degree() != h.degree() || g.order() != h.order()) return std::nullopt;
  const std::size_t n = g.degree();
  const auto& gens = g.generators();
  if (gens.empty()) return Permutation(n);
  auto elts = h.elements(element_limit);
  std::vector<std::vector<const Permutation*>> cands(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (const auto& e : elts)
      if (e.cycle_type() == gens[i].cycle_type()) cands[i].push_back(&e);
  auto orbits = g.orbits();
  std::vector<const Permutation*> choice(gens.size());

  // Given generator images, extend p orbit by orbit: p(a^x) = p(a)^y.
  std::function<std::optional<Permutation>(std::size_t, std::vector<int>&, std::vector<bool>&)> place =
      [&](std::size_t oi, std::vector<int>& p, std::vector<bool>& used) -> std::optional<Permutation> {
    if (oi == orbits.size()) {
      std::vector<Point> img(n);
      for (std::size_t a = 0; a < n; ++a) img[a] = static_cast<Point>(p[a]);
      Permutation perm(img);
      for (std::size_t i = 0; i < gens.size(); ++i)
        if (!h.contains(gens[i].conjugate_by(perm))) return std::nullopt;
      return perm;
    }
    Point a0 = orbits[oi].front();
    for (std::size_t b0 = 0; b0 < n; ++b0) {
      if (used[b0]) continue;
      std::vector<int> p2 = p;
      std::vector<bool> used2 = used;
      p2[a0] = static_cast<int>(b0);
      used2[b0] = true;
      std::vector<Point> queue{a0};
      bool ok = true;
      for (std::size_t q = 0; q < queue.size() && ok; ++q)
        for (std::size_t i = 0; i < gens.size() && ok; ++i) {
          Point a = queue[q], a2 = gens[i][a];
          Point b2 = (*choice[i])[static_cast<Point>(p2[a])];
          if (p2[a2] < 0) {
            if (used2[b2]) ok = false;
            else {
              p2[a2] = b2;
              used2[b2] = true;
              queue.push_back(a2);
            }
          } else if (p2[a2] != b2) {
            ok = false;
          }
        }
      if (!ok) continue;
      if (auto r = place(oi + 1, p2, used2)) return r;
    }
    return std::nullopt;
  };

  std::function<std::optional<Permutation>(std::size_t)> choose = [&](std::size_t i) -> std::optional<Permutation> {
    if (i == gens.size()) {
      std::vector<int> p(n, -1);
      std::vector<bool> used(n, false);
      return place(0, p, used);
    }
    for (const Permutation* c : cands[i]) {
      choice[i] = c;
      if (auto r = choose(i + 1)) return r;
    }
    return std::nullopt;
  };
  return choose(0);
}

// ---------------------------------------------------------------------------
// Normal subgroups.

/// Smallest normal subgroup of g containing the given elements.
inline PermGroup normal_closure(const PermGroup& g, const std::vector<Permutation>& elts) {
  std::vector<Permutation> gens;
  for (const auto& x : elts)
    if (!x.is_identity()) gens.push_back(x);
  PermGroup n(g.degree(), gens);
  // Add conjugates of generators until closed.
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (const auto& s : g.generators()) {
        Permutation c = s.inverse() * gens[i] * s;
        if (!n.contains(c)) {
          gens.push_back(c);
          n = PermGroup(g.degree(), gens);
          grew = true;
        }
      }
  }
  return n;
}

/// Commutator subgroup.
inline PermGroup derived_subgroup(const PermGroup& g) {
  std::vector<Permutation> comms;
  const auto& gs = g.generators();
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j) comms.push_back(gs[i].inverse() * gs[j].inverse() * gs[i] * gs[j]);
  return normal_closure(g, comms);
}

}  // namespace permrel
