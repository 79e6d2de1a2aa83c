#include "dfilab/io.hpp"

#include <fstream>
#include <numeric>

#include "dfilab/error.hpp"

namespace dfilab {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

int get_int(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc.at(key).is_number_integer()) bad(std::string("missing integer field \"") + key + "\"");
  return doc.at(key).get<int>();
}

TermOrder::Tiebreak parse_tiebreak(const std::string& name) {
  if (name == "lex") return TermOrder::Tiebreak::Lex;
  if (name == "grlex") return TermOrder::Tiebreak::GrLex;
  if (name == "grevlex") return TermOrder::Tiebreak::GrevLex;
  bad("unknown order type \"" + name + "\"");
}

TermOrder parse_order(const Json& doc, int n, int m) {
  if (!doc.is_object()) bad("\"order\" must be an object");
  const std::string type = doc.value("type", "lex");
  std::vector<std::size_t> ranking(static_cast<std::size_t>(n * m));
  std::iota(ranking.begin(), ranking.end(), std::size_t{0});
  if (doc.contains("variable_order")) {
    const Json& vo = doc.at("variable_order");
    if (vo.is_string()) {
      if (vo.get<std::string>() != "row_major") bad("variable_order must be \"row_major\" or a list of [i,j]");
    } else if (vo.is_array()) {
      ranking.clear();
      for (const auto& pair : vo) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer())
          bad("variable_order entries must be [i,j]");
        const int i = pair[0].get<int>(), j = pair[1].get<int>();
        if (i < 1 || i > n || j < 1 || j > m) bad("variable_order entry out of range");
        ranking.push_back(static_cast<std::size_t>((i - 1) * m + (j - 1)));
      }
    } else {
      bad("variable_order must be \"row_major\" or a list of [i,j]");
    }
  }
  std::vector<std::vector<std::int64_t>> weights;
  auto tiebreak = TermOrder::Tiebreak::Lex;
  if (type == "weight") {
    if (!doc.contains("weights") || !doc.at("weights").is_array() || doc.at("weights").empty())
      bad("weight order needs a nonempty \"weights\" array");
    const Json& w = doc.at("weights");
    try {
      if (w[0].is_array())
        weights = w.get<std::vector<std::vector<std::int64_t>>>();
      else
        weights.push_back(w.get<std::vector<std::int64_t>>());
    } catch (const nlohmann::json::exception&) {
      bad("weights must be integers");
    }
    for (const auto& row : weights)
      if (row.size() != static_cast<std::size_t>(n * m)) bad("each weight vector needs n*m entries");
    tiebreak = parse_tiebreak(doc.value("tiebreak", "lex"));
  } else {
    tiebreak = parse_tiebreak(type);
  }
  return TermOrder(tiebreak, std::move(ranking), std::move(weights));
}

Field parse_field_json(const Json& doc) {
  if (!doc.is_object()) bad("\"field\" must be an object");
  const std::string type = doc.value("type", "rationals");
  if (type == "rationals") return Field::rationals();
  if (type == "prime") {
    const int p = get_int(doc, "p");
    if (p < 2) bad("prime field needs p >= 2");
    return Field::prime(static_cast<std::uint32_t>(p));
  }
  bad("unknown field type \"" + type + "\"");
}

}  // namespace

Problem parse_problem(const Json& doc) {
  if (!doc.is_object()) bad("input must be a JSON object");
  const int n = get_int(doc, "n"), m = get_int(doc, "m"), r = get_int(doc, "r");
  if (n < 1 || m < 1 || r < 1) bad("n, m, r must be positive");
  if (m > kMaxVertices) bad("m exceeds " + std::to_string(kMaxVertices));
  if (!doc.contains("complex") || !doc.at("complex").is_object()) bad("missing \"complex\" object");
  const Json& cx = doc.at("complex");
  std::optional<SimplicialComplex> complex;
  try {
    if (cx.contains("facets")) {
      complex.emplace(m, r, cx.at("facets").get<std::vector<std::vector<int>>>());
    } else if (cx.contains("intervals")) {
      std::vector<std::pair<int, int>> intervals;
      for (const auto& iv : cx.at("intervals")) {
        const auto ab = iv.get<std::vector<int>>();
        if (ab.size() != 2) bad("intervals are [a,b] pairs");
        intervals.emplace_back(ab[0], ab[1]);
      }
      complex = SimplicialComplex::from_intervals(m, r, intervals);
    } else {
      bad("\"complex\" needs \"facets\" or \"intervals\"");
    }
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("malformed complex: ") + e.what());
  }
  const TermOrder order = doc.contains("order") ? parse_order(doc.at("order"), n, m) : TermOrder::row_major_lex(n, m);
  const Field field = doc.contains("field") ? parse_field_json(doc.at("field")) : Field::rationals();
  return Problem{n, m, r, std::move(*complex), PolyRing::make(n, m, field, order)};
}

Problem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    bad(path + ": " + e.what());
  }
  return parse_problem(doc);
}

Field parse_field(const std::string& text) {
  if (text == "q" || text == "Q") return Field::rationals();
  if (text.rfind("fp:", 0) == 0) {
    try {
      std::size_t used = 0;
      const long p = std::stol(text.substr(3), &used);
      if (used == text.size() - 3 && p >= 2) return Field::prime(static_cast<std::uint32_t>(p));
    } catch (const std::exception&) {
    }
  }
  bad("field must be q or fp:P, got \"" + text + "\"");
}

Json to_json(const Face& face) { return face.vertices(); }

Json to_json(const CliqueDecomposition& cliques) {
  Json out;
  out["cliques"] = Json::array();
  for (const auto& c : cliques.cliques()) out["cliques"].push_back(to_json(c));
  out["f_vector"] = f_vector(cliques);
  return out;
}

Json to_json(const ConditionReport& report, const PolyRing& ring) {
  Json out;
  out["verdict"] = report.verdict;
  out["order"] = report.order;
  out["witnesses"] = Json::array();
  for (const auto& w : report.witnesses) {
    Json j;
    j["cliques"] = {w.clique_a, w.clique_b};
    j["pair"] = {w.first.to_string(), w.second.to_string()};
    j["lcm"] = ring.render(w.lcm);
    j["resolver"] = w.resolver ? Json(w.resolver->to_string()) : Json(nullptr);
    out["witnesses"].push_back(std::move(j));
  }
  return out;
}

Json to_json(const GroebnerCheck& check, const std::vector<Generator>& gens) {
  Json out;
  out["is_groebner"] = check.is_groebner;
  if (check.failing_pair) {
    out["failing_pair"] = {gens.at(check.failing_pair->first).index.to_string(),
                           gens.at(check.failing_pair->second).index.to_string()};
    out["remainder"] = check.remainder ? check.remainder->to_string() : "";
  }
  return out;
}

Json to_json(const GroebnerBasis& basis) {
  Json out = Json::array();
  for (const auto& p : basis.elements) out.push_back(p.to_string());
  return out;
}

Json to_json(const BettiTable& table, bool multigraded) {
  Json out;
  Json coarse = Json::array();
  for (auto [i, j, b] : table.coarse_entries()) coarse.push_back({{"i", i}, {"j", j}, {"beta", b}});
  out["coarse"] = std::move(coarse);
  Json totals = Json::array();
  for (int i = 0; i <= table.projective_dimension(); ++i) totals.push_back(table.total(i));
  out["totals"] = std::move(totals);
  out["projective_dimension"] = table.projective_dimension();
  if (multigraded) {
    Json mg = Json::array();
    for (const auto& [i, mdeg, b] : table.multigraded())
      mg.push_back({{"i", i}, {"mdeg", table.ring()->render(mdeg)}, {"beta", b}});
    out["multigraded"] = std::move(mg);
  }
  return out;
}

Json to_json(const PdCm& pc) { return {{"pd", pc.pd}, {"ht", pc.ht}, {"cm", pc.is_cm}}; }

Json to_json(const CmVerdict& verdict) {
  return {{"hypothesis", verdict.hypothesis},
          {"max_intersection", verdict.max_intersection},
          {"coprime_cross_leads", verdict.coprime_cross_leads},
          {"ht", verdict.ht},
          {"pd", verdict.pd},
          {"cm_initial", verdict.cm_initial},
          {"tensor_matches", verdict.tensor_matches},
          {"cm_transfer_note", verdict.cm_transfer_note}};
}

Json to_json(const StrandHomology& h) {
  Json out;
  out["rank"] = h.rank;
  out["multidegrees_examined"] = h.multidegrees;
  out["nonzero"] = Json::array();
  for (const auto& [d, rank] : h.nonzero) out["nonzero"].push_back({{"rows", d.rows}, {"cols", d.cols}, {"rank", rank}});
  return out;
}

Json to_json(const LinearStrandReport& report) {
  Json out;
  out["projective_dimension"] = report.projective_dimension;
  out["all_equal"] = report.all_equal;
  out["rows"] = Json::array();
  for (const auto& row : report.rows)
    out["rows"].push_back({{"i", row.i},
                           {"basis_rank", row.basis_rank},
                           {"formula_rank", row.formula_rank},
                           {"betti", row.betti},
                           {"equal", row.equal}});
  return out;
}

Json to_json(const NonfaceHomologyReport& report) {
  Json out;
  out["h1_vanishes"] = report.h1_vanishes;
  out["agree"] = report.agree;
  out["nonfaces"] = Json::array();
  for (const auto& f : report.nonfaces) out["nonfaces"].push_back(to_json(f));
  return out;
}

}  // namespace dfilab
