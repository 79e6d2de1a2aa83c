#pragma once

#include <string>

#include "json.hpp"

#include "dfilab/algebra.hpp"
#include "dfilab/cm.hpp"
#include "dfilab/dfi.hpp"
#include "dfilab/encomplex.hpp"
#include "dfilab/groebner.hpp"
#include "dfilab/lcmlattice.hpp"
#include "dfilab/simplicial.hpp"

namespace dfilab {

using Json = nlohmann::json;

/// A parsed input file: matrix shape, complex, and the ring it lives in.
struct Problem {
  int n;
  int m;
  int r;
  SimplicialComplex complex;
  RingPtr ring;
};

/// Parses the input schema
///   {"n", "m", "r", "complex": {"facets": [...]} | {"intervals": [[a,b],...]},
///    "order": {"type": "lex"|"grlex"|"grevlex"|"weight",
///              "variable_order": "row_major" | [[i,j],...], "weights": [...],
///              "tiebreak": "lex"|"grlex"|"grevlex"},
///    "field": {"type": "rationals"} | {"type": "prime", "p": P}}
/// "order" and "field" are optional (row-major lex over Q). Any schema
/// violation raises InvalidInput.
Problem parse_problem(const Json& doc);
Problem load_problem(const std::string& path);

/// "q" or "fp:P".
Field parse_field(const std::string& text);

Json to_json(const Face& face);
Json to_json(const CliqueDecomposition& cliques);
Json to_json(const ConditionReport& report, const PolyRing& ring);
Json to_json(const GroebnerCheck& check, const std::vector<Generator>& gens);
Json to_json(const GroebnerBasis& basis);
Json to_json(const BettiTable& table, bool multigraded);
Json to_json(const PdCm& pc);
Json to_json(const CmVerdict& verdict);
Json to_json(const StrandHomology& h);
Json to_json(const LinearStrandReport& report);
Json to_json(const NonfaceHomologyReport& report);

}  // namespace dfilab
