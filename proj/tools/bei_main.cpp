#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bei/bei.hpp"

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bei::Graph load_graph(const std::string& path) { return bei::parse_graph(slurp(path)); }

void emit(const bei::Json& j, bool pretty) {
  std::cout << (pretty ? j.dump(2) : j.dump()) << "\n";
}

std::vector<long long> parse_int_list(const std::string& text) {
  std::vector<long long> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    if (token.find_first_not_of(" \t") == std::string::npos)
      throw std::runtime_error("empty entry in integer list");
    out.push_back(std::stoll(token));
  }
  if (out.empty()) throw std::runtime_error("empty integer list");
  return out;
}

// Classification reports in a fixed order, plus the most specific class tag.
bei::Json classification_block(const bei::Graph& g, std::string& cls_out) {
  bei::Json reports = bei::Json::array();
  auto special = bei::classify_special_chordal(g);
  if (special) reports.push_back(bei::to_json(*special));
  bool forest = bei::is_forest(g);
  if (forest) reports.push_back(bei::to_json(bei::classify_forest(g)));
  auto closed = bei::classify_closed(g);
  if (closed) reports.push_back(bei::to_json(*closed));
  cls_out = forest          ? "forest"
            : closed        ? "closed"
            : special       ? "special-chordal"
                            : "outside";
  return reports;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"binomial edge ideal toolkit"};
  app.require_subcommand(1);

  std::string input;
  std::uint32_t prime = 32003;
  std::uint32_t cross_prime = 0;
  bool pretty = false;
  int cap = 0;
  bool show_initial = false;
  std::string b_list;
  bool power = false;
  int power_r = 0;
  int max_n = 5;
  std::string engine_mode = "auto";
  long long limit = 0;

  auto add_graph_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "graph file, or - for stdin")->required();
    sub->add_flag("--pretty", pretty, "indent the JSON output");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "full report: class, primes, engine");
  add_graph_input(analyze);
  analyze->add_option("--prime", prime, "field characteristic");
  analyze->add_option("--engine", engine_mode, "on|off|auto (auto: n <= 6)")
      ->check(CLI::IsMember({"on", "off", "auto"}));

  CLI::App* classify = app.add_subcommand("classify", "which structure classes the graph is in");
  add_graph_input(classify);

  CLI::App* primes_cmd = app.add_subcommand("primes", "minimal primes from cut sets");
  add_graph_input(primes_cmd);

  CLI::App* hilbert = app.add_subcommand("hilbert", "Hilbert series of the quotient");
  add_graph_input(hilbert);
  hilbert->add_option("--prime", prime, "field characteristic");

  CLI::App* groebner = app.add_subcommand("groebner", "reduced lexicographic Groebner basis");
  add_graph_input(groebner);
  groebner->add_option("--prime", prime, "field characteristic");
  groebner->add_flag("--show-initial", show_initial, "list the initial ideal generators");

  CLI::App* betti = app.add_subcommand("betti", "graded Betti numbers of the edge ideal");
  add_graph_input(betti);
  betti->add_option("--prime", prime, "field characteristic");
  betti->add_option("--cap", cap, "truncate the table above this degree");
  betti->add_option("--cross-prime", cross_prime, "recompute at a second prime (0 = off)");

  CLI::App* verify = app.add_subcommand("verify-identity", "numeric identity checks");
  verify->add_option("--b", b_list, "comma-separated sizes for the multiplicity identity");
  verify->add_flag("--power", power, "check the 2^r subset-power identity");
  verify->add_option("--r", power_r, "number of blocks for --power");
  verify->add_flag("--pretty", pretty, "indent the JSON output");

  CLI::App* census = app.add_subcommand("census", "cross-check all connected graphs up to a size");
  census->add_option("--max-n", max_n, "largest vertex count (<= 7)");
  census->add_option("--prime", prime, "field characteristic");
  census->add_option("--engine", engine_mode, "on|off|auto (auto: n <= 6)")
      ->check(CLI::IsMember({"on", "off", "auto"}));
  census->add_option("--limit", limit, "stop after this many records (0 = all)");

  CLI::App* probe = app.add_subcommand("probe-conjecture",
                                       "compare Betti tables of the ideal and its initial ideal");
  add_graph_input(probe);
  probe->add_option("--prime", prime, "field characteristic");
  probe->add_option("--cap", cap, "truncate both tables above this degree");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) {
      bei::Graph g = load_graph(input);
      bei::Json j;
      j["graph"] = bei::to_json(g);
      std::string cls;
      bei::Json reports = classification_block(g, cls);
      j["class"] = cls;
      j["classifications"] = reports;
      j["primes"] = bei::to_json(bei::cut_sets(g));
      bool run_engine = engine_mode == "on" || (engine_mode == "auto" && g.n() <= 6);
      bei::Json eng;
      eng["ran"] = run_engine;
      if (run_engine) {
        bei::DepthResult d = bei::depth_and_cm(g, prime);
        eng["prime"] = prime;
        eng["depth"] = d.depth;
        eng["dim"] = d.dim;
        eng["cm"] = d.cm;
        eng["verified"] = d.verified;
      }
      j["engine"] = eng;
      emit(j, pretty);
    } else if (classify->parsed()) {
      bei::Graph g = load_graph(input);
      bei::Json j;
      j["graph"] = bei::to_json(g);
      std::string cls;
      bei::Json reports = classification_block(g, cls);
      j["class"] = cls;
      j["classifications"] = reports;
      emit(j, pretty);
    } else if (primes_cmd->parsed()) {
      bei::Graph g = load_graph(input);
      bei::Json j;
      j["graph"] = bei::to_json(g);
      j["primes"] = bei::to_json(bei::cut_sets(g));
      emit(j, pretty);
    } else if (hilbert->parsed()) {
      bei::Graph g = load_graph(input);
      bei::PolyRing ring(g.n(), prime);
      bei::GroebnerBasis gb = bei::buchberger(ring, bei::binomial_edge_ideal(ring, g));
      bei::HilbertSeries hs = bei::hilbert_series_monomial(ring, bei::initial_ideal(gb));
      bei::Json j;
      j["graph"] = bei::to_json(g);
      j["prime"] = prime;
      j["hilbert"] = bei::to_json(hs);
      emit(j, pretty);
    } else if (groebner->parsed()) {
      bei::Graph g = load_graph(input);
      bei::PolyRing ring(g.n(), prime);
      bei::GroebnerBasis gb = bei::buchberger(ring, bei::binomial_edge_ideal(ring, g));
      bei::Json j;
      j["graph"] = bei::to_json(g);
      j["prime"] = prime;
      j["groebner"] = bei::to_json(gb, ring, show_initial);
      emit(j, pretty);
    } else if (betti->parsed()) {
      bei::Graph g = load_graph(input);
      bei::PolyRing ring(g.n(), prime);
      bei::BettiTable table = bei::betti_table(ring, bei::binomial_edge_ideal(ring, g), cap);
      bei::Json j;
      j["graph"] = bei::to_json(g);
      j["betti"] = bei::to_json(table);
      if (cross_prime != 0) {
        bei::PolyRing ring2(g.n(), cross_prime);
        bei::BettiTable other =
            bei::betti_table(ring2, bei::binomial_edge_ideal(ring2, g), cap);
        bei::Json cross;
        cross["prime"] = cross_prime;
        cross["agrees"] = (other.entries == table.entries);
        j["cross_check"] = cross;
      }
      emit(j, pretty);
    } else if (verify->parsed()) {
      if (power != b_list.empty())
        throw std::runtime_error("pass exactly one of --b or --power");
      bei::Json j;
      if (power) {
        if (power_r < 1) throw std::runtime_error("--power needs --r at least 1");
        j["power"] = bei::to_json(bei::verify_power_identity(power_r));
      } else {
        j["multiplicity"] = bei::to_json(bei::verify_multiplicity_identity(parse_int_list(b_list)));
      }
      emit(j, pretty);
    } else if (census->parsed()) {
      bei::EngineMode mode = engine_mode == "on"    ? bei::EngineMode::on
                             : engine_mode == "off" ? bei::EngineMode::off
                                                    : bei::EngineMode::automatic;
      bei::CensusSummary sum = bei::run_census(max_n, prime, mode, limit, std::cout);
      return sum.disagreements > 0 ? 2 : 0;
    } else if (probe->parsed()) {
      bei::Graph g = load_graph(input);
      bei::ProbeReport rep = bei::conjecture_probe(g, prime, cap);
      emit(bei::to_json(rep), pretty);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
