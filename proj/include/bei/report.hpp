#ifndef BEI_REPORT_HPP
#define BEI_REPORT_HPP

#include <limits>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "bei/betti.hpp"
#include "bei/classify.hpp"
#include "bei/cliques.hpp"
#include "bei/closed_cm.hpp"
#include "bei/cutsets.hpp"
#include "bei/engine.hpp"
#include "bei/graph.hpp"
#include "bei/groebner.hpp"
#include "bei/hilbert.hpp"
#include "bei/identities.hpp"

namespace bei {

// All reports use ordered JSON so output is byte-stable across runs.
using Json = nlohmann::ordered_json;

inline Json to_json(const BigInt& v) {
  static const BigInt lo = std::numeric_limits<long long>::min();
  static const BigInt hi = std::numeric_limits<long long>::max();
  if (v >= lo && v <= hi) return v.convert_to<long long>();
  return v.str();
}

inline Json mask_to_json(VertexMask mask) {
  Json out = Json::array();
  for (VertexMask m = mask; m; m &= m - 1) out.push_back(lowest_bit(m) + 1);
  return out;
}

inline Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [a, b] : g.edges()) edges.push_back(Json::array({a, b}));
  return Json{{"n", g.n()}, {"edges", std::move(edges)}};
}

inline Json to_json(const CliqueComplex& cc) {
  Json facets = Json::array();
  for (VertexMask f : cc.facets) facets.push_back(mask_to_json(f));
  return Json{{"n", cc.n}, {"facets", std::move(facets)}};
}

inline Json to_json(const CutSetRecord& rec) {
  return Json{{"s", rec.s},
              {"components", rec.c},
              {"height", rec.height},
              {"multiplicity", rec.multiplicity}};
}

inline Json to_json(const PrimeDecomposition& pd) {
  Json primes = Json::array();
  for (const auto& rec : pd.minimal_primes) primes.push_back(to_json(rec));
  return Json{{"minimal_primes", std::move(primes)},
              {"krull_dim", pd.krull_dim},
              {"unmixed", pd.unmixed}};
}

inline Json to_json(const ClosedCMStructure& st) {
  return Json{{"n", st.n},
              {"breakpoints", st.breakpoints},
              {"clique_sizes", st.clique_sizes()}};
}

inline Json to_json(const StructuralPrime& sp) {
  return Json{{"s", sp.s}, {"multiplicity", sp.multiplicity}};
}

inline Json to_json(const ClassificationReport& r) {
  Json j;
  j["class"] = to_string(r.class_tag);
  j["n"] = r.n;
  j["components"] = r.components;
  auto put = [&](const char* key, const auto& opt) {
    if (opt) j[key] = *opt;
  };
  put("depth", r.depth);
  put("dim", r.dim);
  put("unmixed", r.unmixed);
  put("cm", r.cm);
  put("complete_intersection", r.complete_intersection);
  put("gorenstein", r.gorenstein);
  if (!r.hilbert_numerator.empty()) j["hilbert_numerator"] = r.hilbert_numerator;
  put("multiplicity", r.multiplicity);
  put("a_invariant", r.a_invariant);
  put("cm_type", r.cm_type);
  if (!r.initial_ideal.empty()) j["initial_ideal"] = r.initial_ideal;
  if (!r.explain.empty()) j["notes"] = r.explain;
  return j;
}

inline Json to_json(const HilbertSeries& hs) {
  return Json{{"numerator", hs.numerator},
              {"denominator_exponent", hs.denominator_exponent},
              {"reduced_numerator", hs.reduced_numerator},
              {"dimension", hs.dimension},
              {"multiplicity", hs.multiplicity},
              {"a_invariant", hs.a_invariant}};
}

inline Json to_json(const BettiTable& t) {
  Json entries = Json::array();
  for (const auto& [key, v] : t.entries)
    entries.push_back(Json::array({key.first, key.second, v}));
  Json j;
  j["prime"] = t.prime;
  j["verified"] = t.verified;
  if (!t.diagnostic.empty()) j["diagnostic"] = t.diagnostic;
  j["projective_dimension"] = t.pd_quotient;
  j["depth"] = t.depth;
  j["cap"] = t.cap;
  j["entries"] = std::move(entries);
  j["table"] = format_betti(t);
  return j;
}

inline Json to_json(const GroebnerBasis& gb, const PolyRing& ring, bool show_initial) {
  Json basis = Json::array();
  for (const Polynomial& f : gb.basis) basis.push_back(to_string(f, ring));
  Json j;
  j["size"] = (long long)gb.basis.size();
  j["max_degree"] = gb.max_degree;
  j["spairs_processed"] = gb.spairs_processed;
  j["basis"] = std::move(basis);
  if (show_initial) {
    Json ini = Json::array();
    for (const Monomial& m : initial_ideal(gb)) ini.push_back(to_string(m, ring.n));
    j["initial_ideal"] = std::move(ini);
  }
  return j;
}

inline Json to_json(const ProbeReport& r) {
  auto corners = [](const BettiTable& t) {
    Json out = Json::array();
    for (const auto& [key, v] : extremal_entries(t))
      out.push_back(Json::array({key.first, key.second, v}));
    return out;
  };
  Json j;
  j["n"] = r.n;
  j["chain_of_cliques"] = r.chain_of_cliques;
  j["closed"] = r.closed;
  j["conclusive"] = r.conclusive;
  j["tables_equal"] = r.tables_equal;
  j["extremal_equal"] = r.extremal_equal;
  j["extremal_ideal"] = corners(r.betti_ideal);
  j["extremal_initial"] = corners(r.betti_initial);
  j["betti_ideal"] = to_json(r.betti_ideal);
  j["betti_initial"] = to_json(r.betti_initial);
  return j;
}

inline Json to_json(const IdentityCheck& c) {
  return Json{{"lhs", to_json(c.lhs)}, {"rhs", to_json(c.rhs)}, {"equal", c.equal}};
}

inline Json to_json(const PowerIdentityCheck& c) {
  return Json{{"lhs", to_json(c.lhs)},
              {"rhs_compositions", to_json(c.rhs_compositions)},
              {"rhs_partitions", to_json(c.rhs_partitions)},
              {"equal_compositions", c.equal_compositions},
              {"equal_partitions", c.equal_partitions}};
}

}  // namespace bei

#endif
