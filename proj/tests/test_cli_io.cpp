#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pfcirc/circuit_gen.hpp"
#include "pfcirc/json_io.hpp"
#include "pfcirc/random.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace pfcirc;

TEST_CASE("scalar json round trip") {
  Rng rng(91);
  for (int trial = 0; trial < 100; trial++) {
    Scalar s = random_scalar(rng, true, 30, 11);
    CHECK(scalar_from_json(scalar_to_json(s)) == s);
  }
  CHECK(scalar_from_json(nlohmann::json(5)) == Scalar(5));
  CHECK_THROWS(scalar_from_json(nlohmann::json::object()));
}

TEST_CASE("skew matrix json round trip") {
  Rng rng(92);
  for (int trial = 0; trial < 30; trial++) {
    SkewMatrix m = random_skew(rng, random_labels(rng, 1 + trial % 6, 9), trial % 3 == 0);
    CHECK(skew_from_json(skew_to_json(m)) == m);
  }
  CHECK_THROWS(skew_from_json(nlohmann::json{{"labels", {1, 2}}, {"upper", {{2, 1, "1"}}}}));
}

TEST_CASE("tensor json round trip") {
  Rng rng(93);
  for (int trial = 0; trial < 30; trial++) {
    QubitTensor t = random_tensor(rng, 1 + trial % 5, trial % 2 ? Leg::Ket : Leg::Bra,
                                  trial % 4 == 0);
    CHECK(tensor_from_json(tensor_to_json(t)) == t);
  }
  QubitTensor sparse = QubitTensor::zero(3, Leg::Bra);
  nlohmann::json j = tensor_to_json(sparse);
  CHECK(j["coeffs"].empty());
  CHECK(tensor_from_json(j) == sparse);
  CHECK_THROWS(tensor_from_json(nlohmann::json{{"arity", 2}, {"variance", "kqb"}, {"coeffs", {}}}));
}

TEST_CASE("circuit json round trip preserves evaluation") {
  Rng rng(94);
  for (int trial = 0; trial < 25; trial++) {
    Circuit c = make_random_circuit(rng, trial, 8, trial % 6 == 0);
    Circuit back = circuit_from_json(circuit_to_json(c));
    CHECK(back.vertex_count() == c.vertex_count());
    CHECK(back.edge_count() == c.edge_count());
    CHECK(evaluate(back) == evaluate(c));
    CHECK(evaluate_bruteforce(back) == evaluate_bruteforce(c));
  }
}

TEST_CASE("circuit json accepts general tensors") {
  Rng rng(95);
  Circuit c = make_theta(4);
  canonicalize_legs(c);
  c.assign(0, random_skew(rng, SkewMatrix::zero(4).labels()));
  c.assign(1, random_tensor(rng, 4, Leg::Bra));
  Circuit back = circuit_from_json(circuit_to_json(c));
  CHECK(evaluate_bruteforce(back) == evaluate_bruteforce(c));
}

TEST_CASE("edge order json") {
  EdgeOrder o{{2, 1, 3}};
  CHECK(edge_order_from_json(edge_order_to_json(o)).label_of_edge == o.label_of_edge);
}

#ifndef _WIN32
namespace {

std::string slurp(const char* path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

bool have_cli() {
  std::ifstream f("./pfcirc");
  return f.good();
}

}  // namespace

TEST_CASE("cli json reports are byte-identical for a fixed seed") {
  if (!have_cli()) return;  // running outside the build tree
  REQUIRE(std::system("./pfcirc --json --seed 7 swap-demo --trials 2 > cli_a.json") == 0);
  REQUIRE(std::system("./pfcirc --json --seed 7 swap-demo --trials 2 > cli_b.json") == 0);
  CHECK(slurp("cli_a.json") == slurp("cli_b.json"));
  CHECK_FALSE(slurp("cli_a.json").empty());
  std::remove("cli_a.json");
  std::remove("cli_b.json");
}

TEST_CASE("cli exit codes") {
  if (!have_cli()) return;
  int missing_rc = std::system("./pfcirc eval /nonexistent.json 2>/dev/null");
  CHECK(WEXITSTATUS(missing_rc) == 2);  // malformed input
  {
    std::ofstream out("cli_swap.json");
    out << R"({"arity":4,"variance":"bbbb","coeffs":{"0":"1","5":"1","10":"1","15":"1"}})";
  }
  int member_rc = std::system("./pfcirc member cli_swap.json --side cogate > /dev/null");
  CHECK(WEXITSTATUS(member_rc) == 1);  // verdict fails: SWAP is not a cogate
  std::remove("cli_swap.json");
}
#endif
