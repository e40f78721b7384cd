#include "euler/buchberger.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <set>
#include <utility>

namespace euler {

namespace {

struct Entry {
  Polynomial poly;
  std::vector<Polynomial> cof;
  std::uint32_t sugar = 0;
};

struct Pair {
  std::size_t i, j;  // i < j
  Monomial lcm;
  std::uint32_t sugar;
};

class Engine {
 public:
  Engine(const PolyRing& ring, std::span<const Polynomial> gens, bool track)
      : ring_(ring), ngens_(gens.size()), track_(track), queue_(PairLess{&ring.order()}) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (gens[j].is_zero()) continue;
      Entry e;
      e.sugar = gens[j].total_degree();
      if (track_) {
        e.cof.assign(ngens_, ring_.zero());
        e.cof[j] = ring_.constant(ring_.field().inv(gens[j].lead().coeff));
      }
      e.poly = ring_.monic(gens[j]);
      if (insert(std::move(e))) return;
    }
  }

  GroebnerResult run() {
    while (!unit_found_ && !queue_.empty()) {
      Pair p = queue_.top();
      queue_.pop();
      pending_.erase({p.i, p.j});
      if (chain_criterion(p)) continue;
      Entry s = spoly(p);
      Entry h = reduce(std::move(s));
      if (!h.poly.is_zero()) insert(std::move(h));
    }
    return finish();
  }

 private:
  struct PairLess {
    const MonomialOrder* order;
    // priority_queue pops the largest element; "largest" = smallest sugar,
    // then smallest lcm, then oldest indices.
    bool operator()(const Pair& a, const Pair& b) const {
      if (a.sugar != b.sugar) return a.sugar > b.sugar;
      int c = order->compare(a.lcm, b.lcm);
      if (c != 0) return c > 0;
      if (a.j != b.j) return a.j > b.j;
      return a.i > b.i;
    }
  };

  // Returns true once the unit ideal is detected.
  bool insert(Entry e) {
    std::size_t k = entries_.size();
    if (e.poly.lead_monomial().is_one()) {
      entries_.push_back(std::move(e));
      unit_found_ = true;
      unit_index_ = k;
      return true;
    }
    const Monomial& lm = e.poly.lead_monomial();
    for (std::size_t i = 0; i < k; ++i) {
      const Monomial& li = entries_[i].poly.lead_monomial();
      if (li.coprime(lm)) continue;  // product criterion
      Monomial l = li.lcm(lm);
      std::uint32_t sug = std::max(entries_[i].sugar + (l.degree() - li.degree()),
                                   e.sugar + (l.degree() - lm.degree()));
      queue_.push(Pair{i, k, l, sug});
      pending_.insert({i, k});
    }
    entries_.push_back(std::move(e));
    return false;
  }

  bool chain_criterion(const Pair& p) const {
    for (std::size_t k = 0; k < entries_.size(); ++k) {
      if (k == p.i || k == p.j) continue;
      if (!entries_[k].poly.lead_monomial().divides(p.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (pending_.count(key(p.i, k)) == 0 && pending_.count(key(p.j, k)) == 0) return true;
    }
    return false;
  }

  Entry spoly(const Pair& p) const {
    const Entry& a = entries_[p.i];
    const Entry& b = entries_[p.j];
    Monomial ma = p.lcm / a.poly.lead_monomial();
    Monomial mb = p.lcm / b.poly.lead_monomial();
    Entry s;
    s.sugar = p.sugar;
    s.poly = ring_.sub(ring_.mul_term(a.poly, Coeff(1), ma), ring_.mul_term(b.poly, Coeff(1), mb));
    if (track_) {
      s.cof.resize(ngens_);
      for (std::size_t j = 0; j < ngens_; ++j)
        s.cof[j] = ring_.sub(ring_.mul_term(a.cof[j], Coeff(1), ma),
                             ring_.mul_term(b.cof[j], Coeff(1), mb));
    }
    return s;
  }

  std::vector<Polynomial> current_basis() const {
    std::vector<Polynomial> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.poly);
    return out;
  }

  void apply_quotients(Entry& e, const std::vector<Polynomial>& q,
                       const std::vector<std::size_t>& index) const {
    if (!track_) return;
    for (std::size_t k = 0; k < q.size(); ++k) {
      if (q[k].is_zero()) continue;
      const Entry& src = entries_[index[k]];
      for (std::size_t j = 0; j < ngens_; ++j)
        if (!src.cof[j].is_zero()) e.cof[j] = ring_.sub(e.cof[j], ring_.mul(q[k], src.cof[j]));
    }
  }

  Entry reduce(Entry s) const {
    std::vector<Polynomial> basis = current_basis();
    std::vector<std::size_t> index(basis.size());
    for (std::size_t k = 0; k < index.size(); ++k) index[k] = k;
    std::vector<Polynomial> q;
    s.poly = ring_.reduce(s.poly, basis, track_ ? &q : nullptr);
    apply_quotients(s, q, index);
    if (!s.poly.is_zero()) {
      const Coeff lc = s.poly.lead().coeff;
      if (!CoefficientField::is_one(lc)) {
        Coeff inv = ring_.field().inv(lc);
        s.poly = ring_.scale(s.poly, inv);
        for (auto& c : s.cof) c = ring_.scale(c, inv);
      }
    }
    return s;
  }

  GroebnerResult finish() {
    GroebnerResult out;
    if (unit_found_) {
      out.basis.push_back(ring_.one());
      if (track_) out.cofactors.push_back(entries_[unit_index_].cof);
      return out;
    }
    // Minimal basis: drop entries whose leading monomial is divisible by
    // another entry's (earliest index wins on ties).
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      const Monomial& li = entries_[i].poly.lead_monomial();
      bool redundant = false;
      for (std::size_t k = 0; k < entries_.size() && !redundant; ++k) {
        if (k == i) continue;
        const Monomial& lk = entries_[k].poly.lead_monomial();
        if (lk.divides(li) && (!(lk == li) || k < i)) redundant = true;
      }
      if (!redundant) keep.push_back(i);
    }
    std::sort(keep.begin(), keep.end(), [&](std::size_t a, std::size_t b) {
      return ring_.order().greater(entries_[a].poly.lead_monomial(), entries_[b].poly.lead_monomial());
    });
    // Tail-reduce each element by the others.
    std::vector<Entry> reduced;
    for (std::size_t a : keep) {
      Entry e = entries_[a];
      std::vector<Polynomial> others;
      std::vector<std::size_t> index;
      for (std::size_t b : keep) {
        if (b == a) continue;
        others.push_back(entries_[b].poly);
        index.push_back(b);
      }
      Term lead = e.poly.lead();
      Polynomial tail = ring_.sub(e.poly, ring_.term(lead.coeff, lead.mono));
      std::vector<Polynomial> q;
      Polynomial rem = ring_.reduce(tail, others, track_ ? &q : nullptr);
      e.poly = ring_.add(ring_.term(lead.coeff, lead.mono), rem);
      apply_quotients(e, q, index);
      reduced.push_back(std::move(e));
    }
    for (auto& e : reduced) {
      out.basis.push_back(std::move(e.poly));
      if (track_) out.cofactors.push_back(std::move(e.cof));
    }
    return out;
  }

  const PolyRing& ring_;
  std::size_t ngens_;
  bool track_;
  std::vector<Entry> entries_;
  std::priority_queue<Pair, std::vector<Pair>, PairLess> queue_;
  std::set<std::pair<std::size_t, std::size_t>> pending_;
  bool unit_found_ = false;
  std::size_t unit_index_ = 0;
};

}  // namespace

GroebnerResult buchberger(const PolyRing& ring, std::span<const Polynomial> generators,
                          bool track_cofactors) {
  Engine engine(ring, generators, track_cofactors);
  return engine.run();
}

Polynomial express_with(const PolyRing& ring, const GroebnerResult& gb, std::size_t ngens,
                        const Polynomial& f, std::vector<Polynomial>& coefficients) {
  std::vector<Polynomial> q;
  Polynomial rem = ring.reduce(f, gb.basis, &q);
  coefficients.assign(ngens, ring.zero());
  for (std::size_t k = 0; k < q.size(); ++k) {
    if (q[k].is_zero()) continue;
    for (std::size_t j = 0; j < ngens; ++j)
      if (!gb.cofactors[k][j].is_zero())
        coefficients[j] = ring.add(coefficients[j], ring.mul(q[k], gb.cofactors[k][j]));
  }
  return rem;
}

namespace {

std::uint32_t support_mask(const Monomial& m, std::size_t nvars) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < nvars; ++i)
    if (m[i] != 0) mask |= (1u << i);
  return mask;
}

void independent_search(const std::vector<std::uint32_t>& supports, std::size_t nvars,
                        std::size_t next, std::uint32_t chosen, int size, int& best) {
  if (size + static_cast<int>(nvars - next) <= best) return;
  if (next == nvars) {
    best = std::max(best, size);
    return;
  }
  std::uint32_t with = chosen | (1u << next);
  bool ok = true;
  for (auto s : supports)
    if ((s & ~with) == 0) {
      ok = false;
      break;
    }
  if (ok) independent_search(supports, nvars, next + 1, with, size + 1, best);
  independent_search(supports, nvars, next + 1, chosen, size, best);
}

}  // namespace

int staircase_dimension(std::span<const Polynomial> basis, std::size_t nvars) {
  std::vector<std::uint32_t> supports;
  for (const auto& g : basis) {
    if (g.is_zero()) continue;
    if (g.lead_monomial().is_one()) return -1;
    supports.push_back(support_mask(g.lead_monomial(), nvars));
  }
  int best = 0;
  independent_search(supports, nvars, 0, 0, 0, best);
  return best;
}

long staircase_count(std::span<const Polynomial> basis, std::size_t nvars) {
  std::vector<Monomial> leads;
  for (const auto& g : basis)
    if (!g.is_zero()) leads.push_back(g.lead_monomial());
  for (const auto& m : leads)
    if (m.is_one()) return 0;
  std::vector<unsigned> bound(nvars, 0);
  for (std::size_t i = 0; i < nvars; ++i) {
    for (const auto& m : leads)
      if (m.degree() == m[i]) bound[i] = bound[i] == 0 ? m[i] : std::min<unsigned>(bound[i], m[i]);
    if (bound[i] == 0) return -1;
  }
  long count = 0;
  Monomial cur;
  auto divisible = [&](const Monomial& m) {
    for (const auto& l : leads)
      if (l.divides(m)) return true;
    return false;
  };
  // Depth-first over exponent vectors bounded by the pure powers.
  auto walk = [&](auto&& self, std::size_t var) -> void {
    if (var == nvars) {
      ++count;
      return;
    }
    for (unsigned e = 0; e < bound[var]; ++e) {
      cur.set(var, e);
      if (divisible(cur)) break;
      self(self, var + 1);
    }
    cur.set(var, 0);
  };
  walk(walk, 0);
  return count;
}

}  // namespace euler
