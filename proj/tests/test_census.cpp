#include "catch_amalgamated.hpp"

#include <numeric>
#include <sstream>
#include <vector>

#include "bei/bei.hpp"
#include "oracles.hpp"

using bei::Graph;

TEST_CASE("isomorphic graphs share a signature") {
  Graph g = bei::parse_graph("5; 1-2, 1-3, 2-3, 2-4, 3-4, 2-5, 3-5");
  std::string sig = bei::graph_signature(g);
  std::vector<int> perm(5);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    CHECK(bei::graph_signature(bei::Labeling(perm).apply(g)) == sig);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("signatures separate the classic regular pairs") {
  Graph c6 = bei::parse_graph("6; 1-2, 2-3, 3-4, 4-5, 5-6, 1-6");
  Graph two_triangles = bei::parse_graph("6; 1-2, 1-3, 2-3, 4-5, 4-6, 5-6");
  CHECK(bei::graph_signature(c6) != bei::graph_signature(two_triangles));

  Graph k33 = bei::parse_graph("6; 1-4, 1-5, 1-6, 2-4, 2-5, 2-6, 3-4, 3-5, 3-6");
  Graph prism = bei::parse_graph("6; 1-2, 2-3, 1-3, 4-5, 5-6, 4-6, 1-4, 2-5, 3-6");
  CHECK(bei::graph_signature(k33) != bei::graph_signature(prism));
  CHECK(k33.edge_count() == prism.edge_count());
}

TEST_CASE("enumeration finds the known number of isomorphism classes") {
  const std::vector<size_t> all_counts{1, 2, 4, 11, 34, 156};
  const std::vector<size_t> connected_counts{1, 1, 2, 6, 21, 112};
  const std::vector<size_t> forest_counts{1, 2, 3, 6, 10, 20};
  for (int n = 1; n <= 6; ++n) {
    CHECK(bei::enumerate_graphs(n, bei::GraphFilter::all).size() == all_counts[n - 1]);
    CHECK(bei::enumerate_connected_graphs(n).size() == connected_counts[n - 1]);
    CHECK(bei::enumerate_forests(n).size() == forest_counts[n - 1]);
  }
  CHECK_THROWS(bei::enumerate_graphs(8, bei::GraphFilter::all));
  CHECK_THROWS(bei::enumerate_graphs(0, bei::GraphFilter::all));
}

TEST_CASE("enumeration at seven vertices matches the published class counts") {
  CHECK(bei::enumerate_connected_graphs(7).size() == 853);
  CHECK(bei::enumerate_forests(7).size() == 37);
}

TEST_CASE("census output is byte-stable across runs") {
  std::ostringstream a, b;
  bei::run_census(4, 32003, bei::EngineMode::on, 0, a);
  bei::run_census(4, 32003, bei::EngineMode::on, 0, b);
  CHECK(a.str() == b.str());
  CHECK(!a.str().empty());
}

TEST_CASE("census with the engine agrees with itself on small graphs") {
  std::ostringstream out;
  bei::CensusSummary sum = bei::run_census(4, 32003, bei::EngineMode::on, 0, out);
  CHECK(sum.graphs == 10);  // 1 + 1 + 2 + 6 connected classes
  CHECK(sum.engine_runs == 10);
  CHECK(sum.disagreements == 0);
  CHECK(!sum.truncated);
}

TEST_CASE("census respects the record limit and marks truncation") {
  std::ostringstream out;
  bei::CensusSummary sum = bei::run_census(5, 32003, bei::EngineMode::off, 3, out);
  CHECK(sum.truncated);
  CHECK(sum.graphs == 3);
  CHECK(out.str().find("\"truncated\":true") != std::string::npos);
}

TEST_CASE("census rejects out-of-range sizes") {
  std::ostringstream out;
  CHECK_THROWS(bei::run_census(8, 32003, bei::EngineMode::off, 0, out));
  CHECK_THROWS(bei::run_census(7, 32003, bei::EngineMode::on, 0, out));
  // automatic mode turns the engine off beyond six vertices instead of failing
}

TEST_CASE("a single census record carries the expected fields") {
  Graph claw = bei::parse_graph("4; 1-2, 1-3, 1-4");
  bei::CensusRecord rec = bei::census_evaluate(claw, 7, 32003, true);
  CHECK(rec.n == 4);
  CHECK(rec.index == 7);
  CHECK(rec.cls == "forest");
  CHECK(rec.chordal);
  CHECK(rec.forest);
  CHECK(!rec.closed);
  CHECK(rec.special_chordal);
  CHECK(!rec.chain);
  CHECK(rec.dim == 6);
  CHECK(!rec.unmixed);
  CHECK(rec.theorem_depth == 5);
  CHECK(rec.theorem_cm == false);
  CHECK(rec.engine_ran);
  CHECK(rec.engine_depth == 5);
  CHECK(rec.engine_cm == false);
  CHECK(rec.engine_multiplicity == 1);
  CHECK(rec.prime_multiplicity_sum == 1);
  CHECK(rec.checks_failed.empty());

  bei::Json j = bei::to_json(rec);
  CHECK(j["class"] == "forest");
  CHECK(j["agree"] == true);
  CHECK(j["engine_depth"] == 5);
}

TEST_CASE("report serialization exposes the documented keys") {
  Graph p4 = bei::parse_graph("4; 1-2, 2-3, 3-4");

  bei::Json cls = bei::to_json(bei::classify_forest(p4));
  CHECK(cls["class"] == "forest");
  CHECK(cls["depth"] == 5);
  CHECK(cls["cm"] == true);
  CHECK(cls["hilbert_numerator"].size() == 4);

  bei::PolyRing ring(4, 32003);
  bei::GroebnerBasis gb = bei::buchberger(ring, bei::binomial_edge_ideal(ring, p4));
  bei::Json gbj = bei::to_json(gb, ring, true);
  CHECK(gbj["size"] == 3);
  CHECK(gbj["max_degree"] == 2);
  CHECK(gbj["basis"].size() == 3);
  CHECK(gbj["initial_ideal"].size() == 3);

  bei::HilbertSeries hs = bei::hilbert_series_monomial(ring, bei::initial_ideal(gb));
  bei::Json hj = bei::to_json(hs);
  CHECK(hj["dimension"] == 5);
  CHECK(hj["multiplicity"] == 8);

  bei::BettiTable t = bei::betti_table(ring, bei::binomial_edge_ideal(ring, p4));
  bei::Json tj = bei::to_json(t);
  CHECK(tj["prime"] == 32003);
  CHECK(tj["verified"] == true);
  CHECK(tj["projective_dimension"] == 3);
  CHECK(tj["depth"] == 5);
  CHECK(tj["entries"].is_array());
  CHECK(tj["table"].is_string());

  bei::Json pj = bei::to_json(bei::conjecture_probe(p4, 32003));
  CHECK(pj["tables_equal"] == true);
  CHECK(pj["conclusive"] == true);

  bei::Json idj = bei::to_json(bei::verify_multiplicity_identity({2, 3}));
  CHECK(idj["equal"] == true);
  bei::Json pwj = bei::to_json(bei::verify_power_identity(3));
  CHECK(pwj["equal_compositions"] == true);
  CHECK(pwj["equal_partitions"] == false);
}

TEST_CASE("identity checks over a range of inputs") {
  // Multiplicity identity for every block-size vector with entries 1..4 and
  // up to four blocks (entries are clique sizes minus one, hence positive).
  for (int r = 1; r <= 4; ++r) {
    std::vector<long long> b(r, 1);
    while (true) {
      bei::IdentityCheck check = bei::verify_multiplicity_identity(b);
      CHECK(check.equal);
      CHECK(check.lhs == check.rhs);
      int k = r - 1;
      while (k >= 0 && b[k] == 4) b[k--] = 1;
      if (k < 0) break;
      ++b[k];
    }
  }
  CHECK_THROWS(bei::verify_multiplicity_identity({}));
  CHECK_THROWS(bei::verify_multiplicity_identity({2, 0}));
  CHECK_THROWS(bei::verify_multiplicity_identity({1, -2}));

  // The power identity holds for the composition reading at every r, and the
  // partition reading first fails at r = 3.
  for (int r = 1; r <= 10; ++r) {
    bei::PowerIdentityCheck check = bei::verify_power_identity(r);
    CHECK(check.lhs == (bei::BigInt(1) << r));
    CHECK(check.equal_compositions);
    if (r < 3) CHECK(check.equal_partitions);
  }
  CHECK(!bei::verify_power_identity(3).equal_partitions);
  CHECK(bei::verify_power_identity(3).rhs_partitions == 6);
}
