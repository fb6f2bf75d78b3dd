#include "modpar/groebner.hpp"

#include <list>
#include <set>

#include "modpar/engine.hpp"

namespace modpar {

Ideal::Ideal(Ring r, std::vector<QPoly> gens) : ring(std::move(r)), generators(std::move(gens)) {
  for (const auto& g : generators) {
    if (g.is_zero()) throw std::invalid_argument("ideal generator is zero");
  }
}

namespace {

template <class D>
using PolyOf = Polynomial<typename D::Element>;

template <class D>
void strip_content(const PolyRing<D>& R, std::vector<typename PolyRing<D>::TermT>& terms) {
  if constexpr (!D::is_field) {
    Integer g = 0;
    for (const auto& t : terms) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
      if (g == 1) return;
    }
    if (g == 0 || g == 1) return;
    for (auto& t : terms) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), g.get_mpz_t());
  } else {
    (void)R;
    (void)terms;
  }
}

// Multipliers (a, b) with a*lc(f) + b*lc(g) = 0; over a field a = 1.
template <class D>
std::pair<typename D::Element, typename D::Element> cancel_pair(const D& K, const typename D::Element& cf,
                                                                const typename D::Element& cg) {
  if constexpr (D::is_field) {
    return {K.one(), K.neg(K.div(cf, cg))};
  } else {
    Integer g = K.gcd(cf, cg);
    Integer a = K.exact_div(cg, g);
    Integer b = -K.exact_div(cf, g);
    if (sgn(a) < 0) {
      a = -a;
      b = -b;
    }
    return {a, b};
  }
}

template <class D>
const PolyOf<D>* find_reducer(std::span<const PolyOf<D>> G, const Monomial& m) {
  for (const auto& g : G) {
    if (!g.is_zero() && g.leading_monomial().divides(m)) return &g;
  }
  return nullptr;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

// Normal strategy: smallest lcm in the ring ordering, then indices. Under dp
// this is smallest degree first.
class PairQueue {
 public:
  explicit PairQueue(const Ring& ring)
      : pairs_([&ring](const Pair& a, const Pair& b) {
          if (int c = ring.compare(a.lcm, b.lcm); c != 0) return c < 0;
          if (a.i != b.i) return a.i < b.i;
          return a.j < b.j;
        }) {}

  bool empty() const { return pairs_.empty(); }
  std::size_t size() const { return pairs_.size(); }
  Pair pop() {
    Pair p = *pairs_.begin();
    pairs_.erase(pairs_.begin());
    return p;
  }
  void insert(const Pair& p) { pairs_.insert(p); }
  template <class Pred>
  void erase_if(Pred pred) {
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      it = pred(*it) ? pairs_.erase(it) : std::next(it);
    }
  }
  std::vector<Pair> drain() {
    std::vector<Pair> out(pairs_.begin(), pairs_.end());
    pairs_.clear();
    return out;
  }

 private:
  std::set<Pair, std::function<bool(const Pair&, const Pair&)>> pairs_;
};

// Gebauer-Moeller installation of polys[h] into the active set.
void gm_update(const std::vector<Monomial>& lms, std::vector<std::size_t>& active, PairQueue& queue, std::size_t h) {
  const Monomial& hm = lms[h];
  struct Candidate {
    std::size_t g;
    Monomial lcm;
    bool coprime;
  };
  std::vector<Candidate> cands;
  cands.reserve(active.size());
  for (std::size_t g : active) cands.push_back({g, lcm(hm, lms[g]), hm.coprime(lms[g])});

  // Chain criterion among the new pairs.
  std::vector<bool> keep(cands.size(), false);
  std::vector<bool> removed(cands.size(), false);
  for (std::size_t a = 0; a < cands.size(); ++a) {
    removed[a] = true;  // {h, g_a} leaves C
    bool dominated = false;
    if (!cands[a].coprime) {
      for (std::size_t b = 0; b < cands.size() && !dominated; ++b) {
        if (b == a) continue;
        // b is still in C (not yet processed) or already accepted into D
        if ((!removed[b] || keep[b]) && cands[b].lcm.divides(cands[a].lcm)) dominated = true;
      }
    }
    keep[a] = !dominated;
  }

  // Old pairs made redundant by h.
  queue.erase_if([&](const Pair& p) {
    return hm.divides(p.lcm) && lcm(lms[p.i], hm) != p.lcm && lcm(lms[p.j], hm) != p.lcm;
  });

  // Product criterion, then insert.
  for (std::size_t a = 0; a < cands.size(); ++a) {
    if (keep[a] && !cands[a].coprime) {
      queue.insert({std::min(cands[a].g, h), std::max(cands[a].g, h), cands[a].lcm});
    }
  }

  std::erase_if(active, [&](std::size_t g) { return hm.divides(lms[g]); });
  active.push_back(h);
}

}  // namespace

template <class D>
GroebnerBasis<typename D::Element> make_basis(const PolyRing<D>& R, std::vector<PolyOf<D>> elements) {
  GroebnerBasis<typename D::Element> out;
  out.ring = R.ring();
  for (auto& e : elements) {
    if (!e.is_zero()) out.elements.push_back(R.normalize(e));
  }
  std::sort(out.elements.begin(), out.elements.end(), [&R](const PolyOf<D>& a, const PolyOf<D>& b) {
    return R.compare(a.leading_monomial(), b.leading_monomial()) > 0;
  });
  for (const auto& e : out.elements) out.lm_set.push_back(e.leading_monomial());
  return out;
}

template <class D>
PolyOf<D> s_poly(const PolyRing<D>& R, const PolyOf<D>& f, const PolyOf<D>& g) {
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  const auto& K = R.domain();
  if constexpr (D::is_field) {
    const auto a = K.inv(f.leading_coeff());
    const auto b = K.neg(K.inv(g.leading_coeff()));
    auto left = R.mul_term(f, a, l / f.leading_monomial());
    return R.combine(K.one(), left, b, l / g.leading_monomial(), g);
  } else {
    auto [a, b] = cancel_pair(K, f.leading_coeff(), g.leading_coeff());
    auto left = R.mul_term(f, a, l / f.leading_monomial());
    return R.primitive(R.combine(K.one(), left, b, l / g.leading_monomial(), g));
  }
}

template <class D>
PolyOf<D> normal_form(const PolyRing<D>& R, const PolyOf<D>& f, std::span<const PolyOf<D>> G) {
  using TermT = typename PolyRing<D>::TermT;
  const auto& K = R.domain();
  std::vector<TermT> cur = f.terms();
  std::vector<TermT> next;
  std::size_t pos = 0;
  unsigned steps = 0;
  while (pos < cur.size()) {
    const PolyOf<D>* g = find_reducer<D>(G, cur[pos].mono);
    if (g == nullptr) {
      ++pos;
      continue;
    }
    const Monomial m = cur[pos].mono / g->leading_monomial();
    auto [a, b] = cancel_pair(K, cur[pos].coeff, g->leading_coeff());
    next.clear();
    next.reserve(cur.size() + g->size());
    if (K.is_one(a)) {
      next.insert(next.end(), cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(pos));
    } else {
      for (std::size_t i = 0; i < pos; ++i) next.push_back(TermT{cur[i].mono, K.mul(a, cur[i].coeff)});
    }
    R.combine_into(next, a, cur, pos + 1, b, m, g->terms(), 1);
    std::swap(cur, next);
    if (++steps % 8 == 0) strip_content(R, cur);
  }
  strip_content(R, cur);
  return PolyOf<D>(std::move(cur));
}

template <class D>
GroebnerBasis<typename D::Element> buchberger(const PolyRing<D>& R, std::vector<PolyOf<D>> generators) {
  std::vector<PolyOf<D>> polys;
  std::vector<Monomial> lms;
  std::vector<std::size_t> active;
  PairQueue queue(R.ring());

  auto active_polys = [&] {
    std::vector<PolyOf<D>> out;
    out.reserve(active.size());
    for (std::size_t i : active) out.push_back(polys[i]);
    return out;
  };
  auto install = [&](PolyOf<D> h) {
    polys.push_back(R.normalize(h));
    lms.push_back(polys.back().leading_monomial());
    gm_update(lms, active, queue, polys.size() - 1);
  };

  for (auto& f : generators) {
    if (f.is_zero()) continue;
    const auto reducers = active_polys();
    auto h = normal_form<D>(R, f, reducers);
    if (h.is_zero()) continue;
    if (h.leading_monomial().is_one()) return make_basis(R, std::vector<PolyOf<D>>{R.one()});
    install(std::move(h));
  }

  std::vector<PolyOf<D>> reducers = active_polys();
  while (!queue.empty()) {
    const Pair p = queue.pop();
    auto s = s_poly(R, polys[p.i], polys[p.j]);
    auto h = normal_form<D>(R, s, reducers);
    if (h.is_zero()) continue;
    if (h.leading_monomial().is_one()) return make_basis(R, std::vector<PolyOf<D>>{R.one()});
    install(std::move(h));
    reducers = active_polys();
  }

  // Interreduce the minimal basis.
  std::vector<PolyOf<D>> minimal = active_polys();
  std::vector<PolyOf<D>> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<PolyOf<D>> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t l = 0; l < minimal.size(); ++l) {
      if (l != k) others.push_back(minimal[l]);
    }
    reduced.push_back(normal_form<D>(R, minimal[k], others));
  }
  return make_basis(R, std::move(reduced));
}

template <class D>
bool ideal_contains(const PolyRing<D>& R, const GroebnerBasis<typename D::Element>& G, const PolyOf<D>& f) {
  if (f.is_zero()) return true;
  return normal_form<D>(R, f, G.elements).is_zero();
}

template <class D>
std::vector<std::pair<std::size_t, std::size_t>> critical_pairs(const PolyRing<D>& R, std::span<const PolyOf<D>> G) {
  std::vector<Monomial> lms;
  for (const auto& g : G) lms.push_back(g.leading_monomial());
  std::vector<std::size_t> active;
  PairQueue queue(R.ring());
  for (std::size_t h = 0; h < G.size(); ++h) gm_update(lms, active, queue, h);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& p : queue.drain()) out.emplace_back(p.i, p.j);
  return out;
}

template <class D>
bool is_self_gb(const PolyRing<D>& R, std::span<const PolyOf<D>> G, unsigned cores) {
  for (const auto& g : G) {
    if (g.is_zero()) return false;
  }
  // A redundant leading monomial makes the pair set above incomplete; fall
  // back to all pairs in that case.
  bool minimal = true;
  for (std::size_t i = 0; i < G.size() && minimal; ++i) {
    for (std::size_t j = 0; j < G.size(); ++j) {
      if (i != j && G[j].leading_monomial().divides(G[i].leading_monomial())) {
        minimal = false;
        break;
      }
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (minimal) {
    pairs = critical_pairs(R, G);
  } else {
    for (std::size_t i = 0; i < G.size(); ++i) {
      for (std::size_t j = i + 1; j < G.size(); ++j) pairs.emplace_back(i, j);
    }
  }
  return parallel_all_of(pairs.size(), cores, [&](std::size_t k) {
    const auto [i, j] = pairs[k];
    return normal_form<D>(R, s_poly(R, G[i], G[j]), G).is_zero();
  });
}

QBasis groebner_over_q(const Ring& ring, std::span<const QPoly> generators) {
  const ZRing Z(ring);
  std::vector<ZPoly> gens;
  gens.reserve(generators.size());
  for (const auto& g : generators) {
    if (!g.is_zero()) gens.push_back(to_primitive(g));
  }
  const ZBasis G = buchberger(Z, std::move(gens));
  const QRing Q(ring);
  std::vector<QPoly> out;
  for (const auto& g : G.elements) out.push_back(to_monic(Q, g));
  return make_basis(Q, std::move(out));
}

ZBasis to_primitive(const QBasis& G) {
  ZBasis out;
  out.ring = G.ring;
  out.lm_set = G.lm_set;
  for (const auto& g : G.elements) out.elements.push_back(to_primitive(g));
  return out;
}

std::vector<PPoly> reduce_mod_p(std::span<const QPoly> polys, std::uint32_t p) {
  std::vector<PPoly> out;
  out.reserve(polys.size());
  for (const auto& f : polys) out.push_back(reduce_mod_p(f, p));
  return out;
}

QBasis change_order_direct(const QBasis& G, const MonomialOrder& order) {
  const Ring target = G.ring.with_order(order);
  const QRing Q(target);
  std::vector<QPoly> gens;
  for (const auto& g : G.elements) gens.push_back(reorder(Q, g));
  return groebner_over_q(target, gens);
}

#define MODPAR_INSTANTIATE(D)                                                                                     \
  template GroebnerBasis<D::Element> make_basis(const PolyRing<D>&, std::vector<PolyOf<D>>);                    \
  template PolyOf<D> s_poly(const PolyRing<D>&, const PolyOf<D>&, const PolyOf<D>&);                            \
  template PolyOf<D> normal_form(const PolyRing<D>&, const PolyOf<D>&, std::span<const PolyOf<D>>);             \
  template GroebnerBasis<D::Element> buchberger(const PolyRing<D>&, std::vector<PolyOf<D>>);                    \
  template bool ideal_contains(const PolyRing<D>&, const GroebnerBasis<D::Element>&, const PolyOf<D>&);         \
  template std::vector<std::pair<std::size_t, std::size_t>> critical_pairs(const PolyRing<D>&,                  \
                                                                           std::span<const PolyOf<D>>);         \
  template bool is_self_gb(const PolyRing<D>&, std::span<const PolyOf<D>>, unsigned);

MODPAR_INSTANTIATE(PrimeField)
MODPAR_INSTANTIATE(RationalField)
MODPAR_INSTANTIATE(IntegerRing)

#undef MODPAR_INSTANTIATE

}  // namespace modpar
