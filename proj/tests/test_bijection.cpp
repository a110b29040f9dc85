#include <map>
#include <set>

#include "bpd/bijection.hpp"
#include "bpd/error.hpp"
#include "doctest.h"
#include "golden.hpp"

using namespace bpd;

namespace {

void check_round_trip(const Permutation& w) {
  const auto tableaux = enumerate_reduced_word_tableaux(w);
  std::set<BumplessPipedream> egs;
  for (const auto& p : enumerate_all(w))
    if (is_eg(p)) egs.insert(p);
  REQUIRE(tableaux.size() == egs.size());

  std::set<BumplessPipedream> images;
  for (const auto& t : tableaux) {
    const auto p = gamma(t, w);
    CHECK(egs.count(p) == 1);
    CHECK(is_eg(p) == t.shape());
    CHECK(gamma_inverse(p) == t);
    images.insert(p);
  }
  CHECK(images == egs);
  for (const auto& p : egs) CHECK(gamma(gamma_inverse(p), w) == p);
}

}  // namespace

TEST_CASE("worked pair for 231654") {
  const auto w = parse_permutation("231654");
  const auto t = parse_tableau("1,4,5/2/5");
  const auto p = parse_pipedream(golden::kWorkedPipedream);

  CHECK(gamma(t, w) == p);
  CHECK(gamma_inverse(p) == t);
  CHECK(pipedream_word(p) == parse_word("(5,4,1,2,5)", 6));
  CHECK(p.boxes(Tile::NWElbow) == std::vector<Box>{{2, 4}, {4, 3}, {4, 5}, {5, 4}});

  const auto trace = gamma_trace(t, w);
  std::vector<std::string> perms, words;
  for (const auto& step : trace.steps) {
    perms.push_back(to_compact_string(step.perm));
    words.push_back(to_string(step.word));
  }
  CHECK(perms == std::vector<std::string>{"231654", "241635", "251436", "253146", "423156"});
  CHECK(words == std::vector<std::string>{"(5,4,1,2,5)", "(5,3,1,2,4)", "(4,3,1,2,4)", "(4,3,1,2,3)", "(3,2,1,2,3)"});

  const auto back = gamma_inverse_trace(p);
  REQUIRE(back.steps.size() == trace.steps.size());
  for (std::size_t k = 0; k < back.steps.size(); ++k) {
    CHECK(back.steps[k].perm == trace.steps[k].perm);
    CHECK(back.steps[k].word == trace.steps[k].word);
    CHECK(back.steps[k].pipedream == trace.steps[k].pipedream);
    CHECK(back.steps[k].move == trace.steps[k].move);
  }
}

TEST_CASE("dominant permutations pair the frozen tableau with the Rothe pipedream") {
  for (const char* s : {"1", "21", "321", "4321", "3412", "4213"}) {
    const auto w = parse_permutation(s);
    REQUIRE(is_dominant(w));
    CHECK(gamma(frozen_tableau(w), w) == rothe(w));
    CHECK(gamma_inverse(rothe(w)) == frozen_tableau(w));
  }
}

TEST_CASE("round trips") {
  check_round_trip(parse_permutation("231654"));
  check_round_trip(parse_permutation("321654"));
  for (const auto& w : all_permutations(4)) check_round_trip(w);
}

TEST_CASE("invalid inputs") {
  const auto w = parse_permutation("231654");
  CHECK_THROWS_AS(gamma(parse_tableau("1,2/3"), w), InvalidInput);
  CHECK_THROWS_AS(gamma_inverse(parse_pipedream(golden::kDroops2761453[0])), InvalidInput);
}
