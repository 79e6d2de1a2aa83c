#include "dfilab/groebner.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <tuple>

#include "dfilab/dfi.hpp"
#include "dfilab/error.hpp"
#include "dfilab/parallel.hpp"

namespace dfilab {

std::vector<Monomial> GroebnerBasis::lead_monomials() const {
  std::vector<Monomial> out;
  for (const auto& p : elements) out.push_back(p.lead_monomial());
  return out;
}

namespace {

const Polynomial* find_reducer(const Monomial& mono, const std::vector<Polynomial>& divisors) {
  for (const auto& g : divisors)
    if (!g.is_zero() && g.lead_monomial().divides(mono)) return &g;
  return nullptr;
}

class StepCounter {
 public:
  explicit StepCounter(std::size_t budget) : left_(budget) {}
  void tick() {
    if (left_ == 0) throw Error(ErrorCode::BudgetExceeded, "Buchberger step budget exhausted");
    --left_;
  }

 private:
  std::size_t left_;
};

Polynomial reduce_full(Polynomial p, const std::vector<Polynomial>& divisors, StepCounter* steps) {
  std::vector<Polynomial::Term> remainder;
  const auto ring = p.ring();
  while (!p.is_zero()) {
    const Monomial& lt = p.lead_monomial();
    if (const Polynomial* g = find_reducer(lt, divisors)) {
      if (steps) steps->tick();
      p = p.minus_term_times(p.lead_coeff() / g->lead_coeff(), lt / g->lead_monomial(), *g);
    } else {
      remainder.push_back(p.terms().front());
      p = p.tail();
    }
  }
  return Polynomial(ring, std::move(remainder));
}

Polynomial reduce_top(Polynomial p, const std::vector<Polynomial>& divisors, StepCounter& steps) {
  while (!p.is_zero()) {
    const Polynomial* g = find_reducer(p.lead_monomial(), divisors);
    if (!g) break;
    steps.tick();
    p = p.minus_term_times(p.lead_coeff() / g->lead_coeff(), p.lead_monomial() / g->lead_monomial(), *g);
  }
  return p;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors) {
  return reduce_full(f, divisors, nullptr);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial l = f.lead_monomial().lcm(g.lead_monomial());
  const Polynomial a = f.times_term(l / f.lead_monomial(), f.lead_coeff().inverse());
  return a.minus_term_times(g.lead_coeff().inverse(), l / g.lead_monomial(), g);
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, std::size_t budget) {
  StepCounter steps(budget);
  std::vector<Polynomial> basis;
  RingPtr ring;
  for (const auto& g : gens)
    if (!g.is_zero()) {
      ring = g.ring();
      basis.push_back(g.monic());
    }
  if (!ring) throw Error(ErrorCode::InvalidInput, "Groebner basis of the zero ideal requested");

  // Pending pairs keyed by (lcm degree, j, i): normal selection with a
  // deterministic tiebreak.
  using Key = std::tuple<unsigned, std::size_t, std::size_t>;
  std::set<Key> pending;
  auto pair_degree = [&](std::size_t i, std::size_t j) {
    return basis[i].lead_monomial().lcm(basis[j].lead_monomial()).degree();
  };
  auto is_pending = [&](std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    return pending.count({pair_degree(i, j), j, i}) != 0;
  };
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pending.insert({pair_degree(i, j), j, i});

  while (!pending.empty()) {
    const auto [deg, j, i] = *pending.begin();
    pending.erase(pending.begin());
    const Monomial& li = basis[i].lead_monomial();
    const Monomial& lj = basis[j].lead_monomial();
    if (li.coprime(lj)) continue;
    const Monomial l = li.lcm(lj);
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      chain = basis[k].lead_monomial().divides(l) && !is_pending(i, k) && !is_pending(j, k);
    }
    if (chain) continue;
    steps.tick();
    Polynomial s = reduce_top(s_polynomial(basis[i], basis[j]), basis, steps);
    if (s.is_zero()) continue;
    basis.push_back(s.monic());
    const std::size_t fresh = basis.size() - 1;
    for (std::size_t k = 0; k < fresh; ++k) pending.insert({pair_degree(k, fresh), fresh, k});
  }

  // Minimalize: drop elements whose lead is divisible by another's (first
  // occurrence wins on equal leads), then reduce tails.
  std::vector<Polynomial> minimal;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < basis.size() && !redundant; ++b) {
      if (a == b) continue;
      const Monomial& la = basis[a].lead_monomial();
      const Monomial& lb = basis[b].lead_monomial();
      redundant = lb.divides(la) && (!(la == lb) || b < a);
    }
    if (!redundant) minimal.push_back(basis[a]);
  }
  GroebnerBasis out{ring, {}};
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<Polynomial> others;
    for (std::size_t b = 0; b < minimal.size(); ++b)
      if (b != a) others.push_back(minimal[b]);
    Polynomial tail = reduce_full(minimal[a].tail(), others, &steps);
    out.elements.push_back(Polynomial::term(ring, minimal[a].lead_monomial(), FieldElement::one(ring->field())) + tail);
  }
  const auto& order = ring->order();
  std::sort(out.elements.begin(), out.elements.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.greater(a.lead_monomial(), b.lead_monomial());
  });
  return out;
}

GroebnerCheck is_groebner(const std::vector<Polynomial>& gens) {
  GroebnerCheck check;
  std::vector<Polynomial> divisors;
  std::vector<std::size_t> source;
  for (std::size_t k = 0; k < gens.size(); ++k)
    if (!gens[k].is_zero()) {
      divisors.push_back(gens[k]);
      source.push_back(k);
    }
  for (std::size_t i = 0; i < divisors.size(); ++i)
    for (std::size_t j = i + 1; j < divisors.size(); ++j) {
      if (divisors[i].lead_monomial().coprime(divisors[j].lead_monomial())) continue;
      Polynomial rem = normal_form(s_polynomial(divisors[i], divisors[j]), divisors);
      if (!rem.is_zero()) {
        check.is_groebner = false;
        check.failing_pair = std::make_pair(source[i], source[j]);
        check.remainder = std::move(rem);
        return check;
      }
    }
  return check;
}

std::vector<Polynomial> intersect(const std::vector<Polynomial>& i_gens, const std::vector<Polynomial>& j_gens,
                                  std::size_t budget) {
  RingPtr ring;
  for (const auto* list : {&i_gens, &j_gens})
    for (const auto& g : *list)
      if (!g.is_zero()) ring = g.ring();
  if (!ring) return {};
  auto nonzero = [](const std::vector<Polynomial>& v) {
    return std::any_of(v.begin(), v.end(), [](const Polynomial& p) { return !p.is_zero(); });
  };
  if (!nonzero(i_gens) || !nonzero(j_gens)) return {};

  const std::size_t t_index = ring->nvars();
  auto big = PolyRing::make(ring->n(), ring->m(), ring->field(), ring->order().with_leading_variable(t_index),
                            ring->extra() + 1);
  const FieldElement one = FieldElement::one(ring->field());
  const Monomial t = big->var_index(t_index);
  std::vector<Polynomial> lifted;
  for (const auto& f : i_gens)
    if (!f.is_zero()) lifted.push_back(f.moved_to(big).times_term(t, one));
  for (const auto& g : j_gens)
    if (!g.is_zero()) {
      Polynomial lg = g.moved_to(big);
      lifted.push_back(lg - lg.times_term(t, one));
    }
  std::vector<Polynomial> out;
  for (const auto& p : buchberger(lifted, budget).elements)
    if (p.lead_monomial()[t_index] == 0) out.push_back(p.moved_to(ring));
  return out;
}

ConcaReport conca_pair_check(const std::vector<Polynomial>& f_gens, const std::vector<Polynomial>& g_gens,
                             std::size_t budget) {
  ConcaReport report;
  const auto inter = intersect(f_gens, g_gens, budget);
  std::vector<Polynomial> basis;
  if (!inter.empty()) basis = buchberger(inter, budget).elements;
  for (std::size_t a = 0; a < f_gens.size(); ++a)
    for (std::size_t b = 0; b < g_gens.size(); ++b) {
      if (f_gens[a].is_zero() || g_gens[b].is_zero()) continue;
      ConcaWitness w{a, b, f_gens[a].lead_monomial().lcm(g_gens[b].lead_monomial()), std::nullopt};
      for (const auto& h : basis)
        if (h.lead_monomial().divides(w.lcm)) {
          w.h = h.times_term(w.lcm / h.lead_monomial(), FieldElement::one(h.ring()->field()));
          break;
        }
      if (!w.h) report.holds = false;
      report.pairs.push_back(std::move(w));
    }
  return report;
}

namespace {

SearchRow examine(int n, int m, const std::vector<Face>& facets, const SearchOptions& options) {
  std::vector<std::vector<int>> raw;
  for (const auto& f : facets) raw.push_back(f.vertices());
  SimplicialComplex complex(m, options.r, raw);
  auto ring = PolyRing::make(n, m, options.field, options.order(n, m));
  const RDfi dfi = build_rdfi(complex, n, ring);
  SearchRow row{m, facets, is_unit_interval(dfi), is_lcm_closed(dfi).verdict,
                is_groebner(dfi.polynomials()).is_groebner, false, false};
  row.counterexample = row.groebner && !row.lcm_closed;
  row.theorem_violation = row.lcm_closed && !row.groebner;
  return row;
}

}  // namespace

SearchResult necessity_search(const SearchOptions& options, Exec exec) {
  if (options.r != options.n) throw Error(ErrorCode::InvalidInput, "the search covers r = n only");
  if (options.r < 1 || options.m_max > kMaxVertices) throw Error(ErrorCode::InvalidInput, "search bounds out of range");

  struct Job {
    int m;
    std::vector<Face> facets;
  };
  SearchResult result;
  std::vector<Job> jobs;
  for (int m = std::max(options.n, options.r); m <= options.m_max && !result.truncated; ++m) {
    std::vector<int> all(static_cast<std::size_t>(m));
    for (int v = 1; v <= m; ++v) all[v - 1] = v;
    const auto candidates = subsets_of_size(Face(all), static_cast<std::size_t>(options.r));
    if (candidates.size() >= 63) {
      result.truncated = true;
      break;
    }
    for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << candidates.size()); ++pick) {
      std::vector<Face> facets;
      std::uint64_t support = 0;
      for (std::uint64_t bits = pick; bits; bits &= bits - 1) {
        facets.push_back(candidates[std::countr_zero(bits)]);
        support |= facets.back().mask();
      }
      if (!(support >> m & 1u)) continue;  // counted at a smaller m
      if (options.intervals_only) {
        std::vector<std::vector<int>> raw;
        for (const auto& f : facets) raw.push_back(f.vertices());
        const auto cliques = clique_complex(SimplicialComplex(m, options.r, raw));
        bool intervals = true;
        for (const auto& c : cliques.cliques())
          intervals = intervals && c.vertices().back() - c.vertices().front() + 1 == static_cast<int>(c.size());
        if (!intervals) continue;
      }
      if (jobs.size() == options.max_complexes) {
        result.truncated = true;
        break;
      }
      jobs.push_back({m, std::move(facets)});
    }
  }

  std::vector<std::optional<SearchRow>> rows(jobs.size());
  for_each_index(jobs.size(), exec, [&](std::size_t k) { rows[k] = examine(options.n, jobs[k].m, jobs[k].facets, options); });
  for (auto& row : rows) result.rows.push_back(std::move(*row));
  return result;
}

}  // namespace dfilab
