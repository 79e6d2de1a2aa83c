#include <cstdio>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "dfilab/cm.hpp"
#include "dfilab/dfi.hpp"
#include "dfilab/encomplex.hpp"
#include "dfilab/error.hpp"
#include "dfilab/groebner.hpp"
#include "dfilab/io.hpp"
#include "dfilab/lcmlattice.hpp"
#include "selftest.hpp"

using namespace dfilab;

namespace {

struct Globals {
  bool quiet = false;
  std::string exec = "serial";
  Exec mode() const { return exec == "parallel" ? Exec::Parallel : Exec::Serial; }
};

void emit(const Json& doc) { std::cout << doc.dump(2) << '\n'; }

void table_out(const Globals& g, const std::string& text) {
  if (!g.quiet) std::cerr << text;
}

RingPtr with_field(const RingPtr& ring, const Field& field) {
  return PolyRing::make(ring->n(), ring->m(), field, ring->order(), ring->extra());
}

int cmd_decompose(const Globals&, const std::string& input) {
  const Problem p = load_problem(input);
  const auto cliques = clique_complex(p.complex);
  Json out = to_json(cliques);
  out["facets"] = p.complex.facets().size();
  emit(out);
  return 0;
}

int cmd_check(const Globals& g, const std::string& input, bool unit, bool sweep) {
  const Problem p = load_problem(input);
  if (sweep) {
    Json out = Json::array();
    for (const auto& e : lcm_closed_row_permutation_sweep(p.complex, p.n, p.ring->field(), g.mode()))
      out.push_back({{"row_sequence", e.row_sequence}, {"diagonal", e.diagonal}, {"report", to_json(e.report, *p.ring)}});
    emit(out);
    return 0;
  }
  const RDfi dfi = build_rdfi(p.complex, p.n, p.ring);
  if (unit) {
    emit({{"unit_interval", is_unit_interval(dfi)}, {"cliques", to_json(dfi.cliques)["cliques"]}});
    return 0;
  }
  emit(to_json(is_lcm_closed(dfi, g.mode()), *p.ring));
  return 0;
}

int cmd_gb(const Globals& g, const std::string& input, bool verify_only) {
  const Problem p = load_problem(input);
  const RDfi dfi = build_rdfi(p.complex, p.n, p.ring);
  const GroebnerCheck check = is_groebner(dfi.polynomials());
  Json out = to_json(check, dfi.generators);
  if (!verify_only) out["reduced_basis"] = to_json(buchberger(dfi.polynomials(), Caps::from_env().buchberger_steps));
  emit(out);
  if (!check.is_groebner && check.failing_pair)
    table_out(g, "failing S-pair: " + dfi.generators[check.failing_pair->first].index.to_string() + ", " +
                     dfi.generators[check.failing_pair->second].index.to_string() + "\n");
  return verify_only && !check.is_groebner ? 1 : 0;
}

int cmd_betti(const Globals& g, const std::string& input, const std::string& side, const std::string& field_text,
              bool multigraded) {
  Problem p = load_problem(input);
  if (!field_text.empty()) p.ring = with_field(p.ring, parse_field(field_text));
  const Caps caps = Caps::from_env();
  const RDfi dfi = build_rdfi(p.complex, p.n, p.ring);
  std::vector<Monomial> leads;
  if (side == "lt") {
    for (const auto& gen : dfi.generators) leads.push_back(gen.lead);
  } else {
    leads = buchberger(dfi.polynomials(), caps.buchberger_steps).lead_monomials();
  }
  const MonomialIdeal ideal(p.ring, std::move(leads));
  const BettiTable table = gpw_betti(ideal, p.ring->field(), g.mode(), caps);
  table_out(g, table.render());
  Json out = to_json(table, multigraded);
  out["side"] = side;
  out["field"] = p.ring->field().name();
  out["generators"] = ideal.size();
  emit(out);
  return 0;
}

int cmd_nonfaces(const Globals&, const std::string& input, int i, int card) {
  const Problem p = load_problem(input);
  Json out = Json::array();
  for (const auto& f : i_nonfaces(clique_complex(p.complex), i, card)) out.push_back(to_json(f));
  emit({{"i", i}, {"card", card}, {"nonfaces", out}});
  return 0;
}

int cmd_en(const Globals& g, const std::string& input, const std::string& homology, bool linear_strand) {
  const Problem p = load_problem(input);
  const auto cliques = clique_complex(p.complex);
  const ENComplex c = build_en_complex(cliques, p.ring);
  Json out;
  Json ranks = Json::array();
  for (int k = 0; k <= c.length(); ++k) ranks.push_back(c.rank(k));
  out["ranks"] = std::move(ranks);
  if (!homology.empty()) {
    int i = 0, deg = 0;
    char comma = 0;
    std::istringstream in(homology);
    if (!(in >> i >> comma >> deg) || comma != ',' || !in.eof())
      throw Error(ErrorCode::InvalidInput, "--homology expects i,deg");
    Json h = to_json(strand_homology(c, i, deg, p.ring->field(), g.mode()));
    h["i"] = i;
    h["degree"] = deg;
    out["homology"] = std::move(h);
  }
  if (linear_strand) out["linear_strand"] = to_json(linear_strand_rank_check(cliques, p.ring, g.mode(), Caps::from_env()));
  emit(out);
  return 0;
}

int cmd_cm(const Globals& g, const std::string& input) {
  const Problem p = load_problem(input);
  const RDfi dfi = build_rdfi(p.complex, p.n, p.ring);
  const Caps caps = Caps::from_env();
  try {
    emit(to_json(cor_cmness_check(dfi, g.mode(), caps)));
    return 0;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::HypothesisFailed) throw;
    const PdCm pc = pd_and_cm(lead_term_ideal(dfi.polynomials()), p.ring->field(), g.mode(), caps);
    emit({{"error", std::string(to_string(e.code()))},
          {"detail", e.what()},
                    {"ht", pc.ht},
          {"pd", pc.pd},
          {"cm_initial", pc.is_cm}});
    return 1;
  }
}

int cmd_search(const Globals& g, int r, int n, int m_max, bool intervals_only) {
  SearchOptions options;
  options.r = r;
  options.n = n;
  options.m_max = m_max;
  options.intervals_only = intervals_only;
  options.max_complexes = Caps::from_env().search_complexes;
  const SearchResult result = necessity_search(options, g.mode());
  std::cout << "m,facets,unit_interval,lcm_closed,groebner,counterexample,theorem_violation\n";
  for (const auto& row : result.rows) {
    std::string facets;
    for (const auto& f : row.facets) facets += (facets.empty() ? "" : " ") + f.to_string();
    std::cout << row.m << ",\"" << facets << "\"," << row.unit_interval << ',' << row.lcm_closed << ','
              << row.groebner << ',' << row.counterexample << ',' << row.theorem_violation << '\n';
  }
  if (result.truncated) table_out(g, "search truncated at the complex cap\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Determinantal facet ideal toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--quiet", g.quiet, "Suppress human-readable tables on stderr");
  app.add_option("--exec", g.exec, "Kernel execution path")->check(CLI::IsMember({"serial", "parallel"}));

  std::string input;
  auto* decompose = app.add_subcommand("decompose", "Clique decomposition and f-vector");
  decompose->add_option("input", input)->required();

  bool lcm_flag = false, unit_flag = false, sweep_flag = false;
  auto* check = app.add_subcommand("check", "Structural conditions");
  check->add_option("input", input)->required();
  auto* lcm_opt = check->add_flag("--lcm-closed", lcm_flag);
  auto* unit_opt = check->add_flag("--unit-interval", unit_flag);
  auto* sweep_opt = check->add_flag("--all-diagonal-lex", sweep_flag, "lcm-closed under every row-permuted lex order");
  lcm_opt->excludes(unit_opt)->excludes(sweep_opt);
  unit_opt->excludes(sweep_opt);

  bool verify_only = false;
  auto* gb = app.add_subcommand("gb", "Groebner basis of the facet ideal");
  gb->add_option("input", input)->required();
  gb->add_flag("--verify-only", verify_only, "Only test whether the generators already form a Groebner basis");

  std::string side = "lt", field_text;
  bool multigraded = false;
  auto* betti = app.add_subcommand("betti", "Betti table of an initial monomial ideal");
  betti->add_option("input", input)->required();
  betti->add_option("--side", side, "lt: lead terms of the generators; initial: the full initial ideal")
      ->check(CLI::IsMember({"lt", "initial"}));
  betti->add_option("--field", field_text, "q or fp:P");
  betti->add_flag("--multigraded", multigraded);

  int nf_i = 1, nf_card = 0;
  auto* nonfaces = app.add_subcommand("nonfaces", "i-nonfaces of the clique complex");
  nonfaces->add_option("input", input)->required();
  nonfaces->add_option("--i", nf_i)->required();
  nonfaces->add_option("--card", nf_card)->required();

  std::string homology;
  bool linear_strand = false;
  auto* en = app.add_subcommand("en", "Sparse Eagon-Northcott complex");
  en->add_option("input", input)->required();
  en->add_option("--homology", homology, "i,deg");
  en->add_flag("--linear-strand", linear_strand, "Compare module ranks with linear Betti numbers");

  auto* cm = app.add_subcommand("cm", "Cohen-Macaulay verdict");
  cm->add_option("input", input)->required();

  int s_r = 2, s_n = 2, s_mmax = 3;
  bool intervals_only = false;
  auto* search = app.add_subcommand("search", "Tabulate lcm-closed against Groebner on small complexes");
  search->add_option("--r", s_r);
  search->add_option("--n", s_n);
  search->add_option("--mmax", s_mmax);
  search->add_flag("--intervals-only", intervals_only);

  auto* selftest = app.add_subcommand("selftest", "Run the built-in worked examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*decompose) return cmd_decompose(g, input);
    if (*check) return cmd_check(g, input, unit_flag, sweep_flag);
    if (*gb) return cmd_gb(g, input, verify_only);
    if (*betti) return cmd_betti(g, input, side, field_text, multigraded);
    if (*nonfaces) return cmd_nonfaces(g, input, nf_i, nf_card);
    if (*en) return cmd_en(g, input, homology, linear_strand);
    if (*cm) return cmd_cm(g, input);
    if (*search) return cmd_search(g, s_r, s_n, s_mmax, intervals_only);
    if (*selftest) return cli::run_selftest(std::cout) == 0 ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.is_resource_limit() ? 3 : 2;
  }
  return 2;
}
