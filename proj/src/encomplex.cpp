#include "dfilab/encomplex.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

#include "dfilab/error.hpp"
#include "dfilab/lcmlattice.hpp"
#include "dfilab/linalg.hpp"
#include "dfilab/parallel.hpp"

namespace dfilab {

std::vector<std::vector<int>> compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  if (parts <= 0) {
    if (total == 0) out.emplace_back();
    return out;
  }
  std::vector<int> current(static_cast<std::size_t>(parts), 0);
  std::function<void(int, int)> fill = [&](int slot, int left) {
    if (slot == parts - 1) {
      current[static_cast<std::size_t>(slot)] = left;
      out.push_back(current);
      return;
    }
    for (int v = left; v >= 0; --v) {
      current[static_cast<std::size_t>(slot)] = v;
      fill(slot + 1, left - v);
    }
  };
  fill(0, total);
  return out;
}

std::vector<std::pair<int, std::size_t>> index_positions(const std::vector<int>& alpha, const Face& I) {
  int weight = 0;
  for (int a : alpha) {
    if (a < 0) throw Error(ErrorCode::InvalidInput, "composition parts must be nonnegative");
    weight += a;
  }
  const int n = static_cast<int>(alpha.size());
  if (static_cast<int>(I.size()) != n + weight)
    throw Error(ErrorCode::ShapeMismatch, "|I| = " + std::to_string(I.size()) + " but n + |alpha| = " +
                                              std::to_string(n + weight));
  std::vector<std::pair<int, std::size_t>> out;
  int before = 0;
  for (int i = 1; i <= n; ++i) {
    const int upto = before + alpha[static_cast<std::size_t>(i - 1)];
    if (alpha[static_cast<std::size_t>(i - 1)] > 0)
      for (int j = before; j <= upto; ++j) out.emplace_back(i, static_cast<std::size_t>(i + j));
    before = upto;
  }
  return out;
}

std::vector<std::pair<int, int>> index_set(const std::vector<int>& alpha, const Face& I) {
  std::vector<std::pair<int, int>> out;
  for (auto [row, pos] : index_positions(alpha, I)) out.emplace_back(row, I.at(pos));
  return out;
}

ENComplex::ENComplex(RingPtr ring, std::vector<std::vector<ENBasisElement>> basis,
                     std::vector<std::vector<std::vector<ENEntry>>> differential)
    : ring_(std::move(ring)), basis_(std::move(basis)), differential_(std::move(differential)) {}

std::size_t ENComplex::rank(int k) const {
  if (k < 0 || k > length()) return 0;
  return basis_[static_cast<std::size_t>(k)].size();
}

const std::vector<ENEntry>& ENComplex::image(int k, std::size_t e) const {
  if (k < 1 || k > length()) throw Error(ErrorCode::InvalidInput, "no differential out of degree " + std::to_string(k));
  return differential_.at(static_cast<std::size_t>(k)).at(e);
}

Multidegree ENComplex::multidegree(int k, std::size_t e) const {
  Multidegree d{std::vector<int>(static_cast<std::size_t>(n()), 0), std::vector<int>(static_cast<std::size_t>(m()), 0)};
  if (k == 0) return d;
  const auto& b = basis(k).at(e);
  for (std::size_t i = 0; i < d.rows.size(); ++i) d.rows[i] = 1 + b.alpha[i];
  for (int v : b.sigma) d.cols[static_cast<std::size_t>(v - 1)] = 1;
  return d;
}

std::optional<std::size_t> ENComplex::find(int k, const std::vector<int>& alpha, const Face& sigma) const {
  if (k < 0 || k > length()) return std::nullopt;
  const auto& list = basis(k);
  for (std::size_t e = 0; e < list.size(); ++e)
    if (list[e].alpha == alpha && list[e].sigma == sigma) return e;
  return std::nullopt;
}

namespace {

std::vector<std::vector<Face>> faces_by_size(const CliqueDecomposition& cliques) {
  std::unordered_set<std::uint64_t> masks;
  for (const auto& c : cliques.cliques())
    for (std::uint64_t s = c.mask(); s; s = (s - 1) & c.mask()) masks.insert(s);
  std::vector<std::vector<Face>> out;
  for (auto mask : masks) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (out.size() <= size) out.resize(size + 1);
    out[size].push_back(Face::from_mask(mask));
  }
  for (auto& group : out) std::sort(group.begin(), group.end());
  return out;
}

Multidegree monomial_multidegree(const PolyRing& ring, const Monomial& mono) {
  Multidegree d{std::vector<int>(static_cast<std::size_t>(ring.n()), 0),
                std::vector<int>(static_cast<std::size_t>(ring.m()), 0)};
  for (std::size_t v = 0; v < static_cast<std::size_t>(ring.n() * ring.m()); ++v) {
    if (!mono[v]) continue;
    const Variable x = ring.variable(v);
    d.rows[static_cast<std::size_t>(x.row - 1)] += mono[v];
    d.cols[static_cast<std::size_t>(x.col - 1)] += mono[v];
  }
  return d;
}

Multidegree plus(Multidegree a, const Multidegree& b) {
  for (std::size_t i = 0; i < a.rows.size(); ++i) a.rows[i] += b.rows[i];
  for (std::size_t j = 0; j < a.cols.size(); ++j) a.cols[j] += b.cols[j];
  return a;
}

// Nonnegative integer n x m tables with the given margins, as monomials.
void contingency_tables(const PolyRing& ring, std::vector<int> rows, std::vector<int> cols, std::vector<Monomial>& out) {
  const int n = ring.n(), m = ring.m();
  Monomial current = ring.one();
  std::function<void(int)> fill = [&](int cell) {
    if (cell == n * m) {
      out.push_back(current);
      return;
    }
    const int i = cell / m, j = cell % m;
    int& r = rows[static_cast<std::size_t>(i)];
    int& c = cols[static_cast<std::size_t>(j)];
    // The last column must absorb the rest of the row; the last row the rest of the column.
    const int lo = (j == m - 1 ? r : 0);
    const int hi = std::min(r, c);
    if (i == n - 1 && c != r && j == m - 1) return;
    for (int v = (i == n - 1 ? c : lo); v <= hi; ++v) {
      if (i == n - 1 && v != c) break;
      if (j == m - 1 && v != r) continue;
      r -= v;
      c -= v;
      current.set(static_cast<std::size_t>(cell), static_cast<Monomial::Exponent>(v));
      fill(cell + 1);
      current.set(static_cast<std::size_t>(cell), 0);
      r += v;
      c += v;
    }
  };
  fill(0);
}

// Basis of one graded piece (C_k)_D as (basis index, cofactor monomial).
struct Piece {
  std::vector<std::pair<std::size_t, Monomial>> elements;
  std::map<std::pair<std::size_t, std::vector<Monomial::Exponent>>, std::uint32_t> index;
};

Piece graded_piece(const ENComplex& c, int k, const Multidegree& d) {
  Piece piece;
  if (k < 0 || k > c.length()) return piece;
  for (std::size_t e = 0; e < c.rank(k); ++e) {
    const Multidegree base = c.multidegree(k, e);
    std::vector<int> rows(base.rows.size()), cols(base.cols.size());
    bool fits = true;
    for (std::size_t i = 0; i < rows.size() && fits; ++i) fits = (rows[i] = d.rows[i] - base.rows[i]) >= 0;
    for (std::size_t j = 0; j < cols.size() && fits; ++j) fits = (cols[j] = d.cols[j] - base.cols[j]) >= 0;
    if (!fits) continue;
    std::vector<Monomial> tables;
    contingency_tables(*c.ring(), rows, cols, tables);
    for (auto& mono : tables) {
      piece.index.emplace(std::make_pair(e, mono.exponents()), static_cast<std::uint32_t>(piece.elements.size()));
      piece.elements.emplace_back(e, std::move(mono));
    }
  }
  return piece;
}

// Matrix of d_k : (C_k)_D -> (C_{k-1})_D, one row per source element.
SparseMatrix graded_differential(const ENComplex& c, int k, const Piece& source, const Piece& target) {
  SparseMatrix d(0, target.elements.size());
  for (const auto& [e, mono] : source.elements) {
    std::map<std::uint32_t, std::int64_t> row;
    for (const auto& entry : c.image(k, e)) {
      const Monomial shifted = entry.mono * mono;
      row[target.index.at({entry.target, shifted.exponents()})] += entry.coeff;
    }
    std::vector<SparseMatrix::Entry> entries;
    for (auto [col, v] : row)
      if (v) entries.emplace_back(col, v);
    d.append_row(std::move(entries));
  }
  return d;
}

std::size_t homology_at(const ENComplex& c, int i, const Multidegree& d, const Field& field) {
  const Piece here = graded_piece(c, i, d);
  if (here.elements.empty()) return 0;
  const Piece below = graded_piece(c, i - 1, d);
  const Piece above = graded_piece(c, i + 1, d);
  const std::size_t out_rank = i >= 1 ? rank(graded_differential(c, i, here, below), field) : 0;
  const std::size_t in_rank = above.elements.empty() ? 0 : rank(graded_differential(c, i + 1, above, here), field);
  return here.elements.size() - out_rank - in_rank;
}

}  // namespace

ENComplex build_en_complex(const CliqueDecomposition& cliques, const RingPtr& ring) {
  const int n = ring->n();
  const int m = ring->m();
  if (cliques.facet_size() != n) throw Error(ErrorCode::InvalidInput, "the sparse complex needs r = n");
  if (cliques.vertex_count() != m) throw Error(ErrorCode::InvalidInput, "ring column count differs from vertex count");
  if (!is_diagonal(ring->order(), n, m)) throw Error(ErrorCode::InvalidInput, "the sparse complex needs a diagonal order");

  const auto faces = faces_by_size(cliques);
  std::vector<std::vector<ENBasisElement>> basis{{ENBasisElement{{}, Face{}}}};
  std::vector<std::map<std::pair<std::vector<int>, std::uint64_t>, std::size_t>> lookup(1);
  for (int k = 1;; ++k) {
    const auto size = static_cast<std::size_t>(n + k - 1);
    if (size >= faces.size() || faces[size].empty()) break;
    const auto alphas = compositions(k - 1, n);
    std::vector<ENBasisElement> level;
    std::map<std::pair<std::vector<int>, std::uint64_t>, std::size_t> index;
    for (const auto& sigma : faces[size])
      for (const auto& alpha : alphas) {
        index.emplace(std::make_pair(alpha, sigma.mask()), level.size());
        level.push_back({alpha, sigma});
      }
    basis.push_back(std::move(level));
    lookup.push_back(std::move(index));
  }

  std::vector<std::vector<std::vector<ENEntry>>> differential(basis.size());
  std::vector<int> all_rows(static_cast<std::size_t>(n));
  std::iota(all_rows.begin(), all_rows.end(), 1);
  for (std::size_t k = 1; k < basis.size(); ++k) {
    for (const auto& b : basis[k]) {
      std::vector<ENEntry> image;
      if (k == 1) {
        image.push_back({1, diagonal_monomial(*ring, all_rows, b.sigma.vertices()), 0});
      } else {
        for (auto [row, pos] : index_positions(b.alpha, b.sigma)) {
          std::vector<int> lowered = b.alpha;
          --lowered[static_cast<std::size_t>(row - 1)];
          const Face rest = b.sigma.without_position(pos);
          auto it = lookup[k - 1].find({lowered, rest.mask()});
          if (it == lookup[k - 1].end()) continue;  // face outside the complex: entry is zero
          image.push_back({pos % 2 == 1 ? 1 : -1, ring->var({row, b.sigma.at(pos)}), it->second});
        }
      }
      differential[k].push_back(std::move(image));
    }
  }

  ENComplex complex(ring, std::move(basis), std::move(differential));
  for (int k = 2; k <= complex.length(); ++k)
    for (std::size_t e = 0; e < complex.rank(k); ++e) {
      std::map<std::pair<std::size_t, std::vector<Monomial::Exponent>>, std::int64_t> acc;
      for (const auto& first : complex.image(k, e))
        for (const auto& second : complex.image(k - 1, first.target))
          acc[{second.target, (first.mono * second.mono).exponents()}] += first.coeff * second.coeff;
      for (const auto& [key, v] : acc)
        if (v != 0)
          throw Error(ErrorCode::DifferentialBroken, "d^2 != 0 at degree " + std::to_string(k) + ", element " +
                                                         std::to_string(e));
    }
  return complex;
}

StrandHomology strand_homology(const ENComplex& c, int i, int degree, const Field& field, Exec exec) {
  std::set<Multidegree> mdegs;
  const int t = degree - c.internal_degree(i);
  if (i >= 0 && i <= c.length() && t >= 0) {
    const auto row_adds = compositions(t, c.n());
    const auto col_adds = compositions(t, c.m());
    for (std::size_t e = 0; e < c.rank(i); ++e) {
      const Multidegree base = c.multidegree(i, e);
      for (const auto& r : row_adds)
        for (const auto& s : col_adds) mdegs.insert(plus(base, Multidegree{r, s}));
    }
  }
  const std::vector<Multidegree> list(mdegs.begin(), mdegs.end());
  std::vector<std::size_t> ranks(list.size(), 0);
  for_each_index(list.size(), exec, [&](std::size_t k) { ranks[k] = homology_at(c, i, list[k], field); });
  StrandHomology out;
  out.multidegrees = list.size();
  for (std::size_t k = 0; k < list.size(); ++k)
    if (ranks[k]) {
      out.rank += ranks[k];
      out.nonzero.emplace_back(list[k], ranks[k]);
    }
  return out;
}

CycleCertificate certify_cycle(const ENComplex& c, int k, const std::vector<ChainTerm>& terms, const Field& field) {
  if (terms.empty()) throw Error(ErrorCode::InvalidInput, "empty chain");
  if (k < 1 || k > c.length()) throw Error(ErrorCode::InvalidInput, "no such homological degree");
  std::optional<Multidegree> mdeg;
  for (const auto& term : terms) {
    if (term.basis >= c.rank(k)) throw Error(ErrorCode::InvalidInput, "chain references a missing basis element");
    const Multidegree d = plus(c.multidegree(k, term.basis), monomial_multidegree(*c.ring(), term.mono));
    if (mdeg && !(*mdeg == d)) throw Error(ErrorCode::InvalidInput, "chain is not multihomogeneous");
    mdeg = d;
  }
  const Piece here = graded_piece(c, k, *mdeg);
  const Piece below = graded_piece(c, k - 1, *mdeg);
  const Piece above = graded_piece(c, k + 1, *mdeg);

  std::map<std::uint32_t, std::int64_t> vec;
  for (const auto& term : terms) vec[here.index.at({term.basis, term.mono.exponents()})] += term.coeff;
  std::vector<SparseMatrix::Entry> z;
  for (auto [col, v] : vec)
    if (v) z.emplace_back(col, v);

  // d(z) = z * D where D has one row per element of the piece.
  const SparseMatrix d_out = graded_differential(c, k, here, below);
  std::map<std::uint32_t, std::int64_t> image;
  for (auto [row, coeff] : z)
    for (auto [col, v] : d_out.row(row)) image[col] += coeff * v;
  bool is_cycle = true;
  if (field.is_rational()) {
    for (const auto& [col, v] : image) is_cycle = is_cycle && v == 0;
  } else {
    const auto p = static_cast<std::int64_t>(field.characteristic());
    for (const auto& [col, v] : image) is_cycle = is_cycle && v % p == 0;
  }
  const SparseMatrix d_in = above.elements.empty() ? SparseMatrix(0, here.elements.size())
                                                   : graded_differential(c, k + 1, above, here);
  const bool is_boundary = in_row_space(d_in, z, field);
  return {is_cycle, is_boundary, *mdeg};
}

NonfaceHomologyReport one_nonface_homology_equiv(const CliqueDecomposition& cliques, const RingPtr& ring, Exec exec) {
  const int n = ring->n();
  const ENComplex c = build_en_complex(cliques, ring);
  NonfaceHomologyReport report;
  report.h1_vanishes = strand_homology(c, 1, n + 1, ring->field(), exec).rank == 0;
  report.nonfaces = i_nonfaces(cliques, 1, n + 1);
  report.agree = report.h1_vanishes == report.nonfaces.empty();
  return report;
}

namespace {

std::size_t binomial(std::size_t a, std::size_t b) {
  if (b > a) return 0;
  std::size_t out = 1;
  for (std::size_t k = 1; k <= b; ++k) out = out * (a - b + k) / k;
  return out;
}

}  // namespace

LinearStrandReport linear_strand_rank_check(const CliqueDecomposition& cliques, const RingPtr& ring, Exec exec,
                                            const Caps& caps) {
  const int n = ring->n();
  const auto nonfaces = i_nonfaces(cliques, 1, n + 1);
  if (!nonfaces.empty())
    throw Error(ErrorCode::HypothesisFailed, "clique complex has a 1-nonface of cardinality n+1: " + nonfaces.front().to_string());
  const ENComplex c = build_en_complex(cliques, ring);

  std::vector<int> all_rows(static_cast<std::size_t>(n));
  std::iota(all_rows.begin(), all_rows.end(), 1);
  std::vector<Monomial> leads;
  for (std::size_t e = 0; e < c.rank(1); ++e)
    leads.push_back(minor(ring, all_rows, c.basis(1)[e].sigma.vertices()).lead_monomial());
  const BettiTable table = gpw_betti(MonomialIdeal(ring, std::move(leads)), ring->field(), exec, caps);
  const auto f = f_vector(cliques);

  LinearStrandReport report{{}, table.projective_dimension(), true};
  const int top = std::max(report.projective_dimension, c.length());
  for (int i = 1; i <= top; ++i) {
    const auto face_index = static_cast<std::size_t>(n + i - 1);  // f_{n+i-2} sits at index n+i-1
    const std::size_t faces = face_index < f.size() ? f[face_index] : 0;
    LinearStrandRow row{i, c.rank(i), faces * binomial(static_cast<std::size_t>(n + i - 2), static_cast<std::size_t>(n - 1)),
                        table.coarse(i, n + i - 1), false};
    row.equal = row.basis_rank == row.formula_rank && row.formula_rank == row.betti;
    report.all_equal = report.all_equal && row.equal;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace dfilab
