#include <set>

#include "bpd/error.hpp"
#include "bpd/perm.hpp"
#include "bpd/word.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bpd;

TEST_CASE("length and Lehmer code") {
  CHECK(length(Permutation::identity(4)) == 0);
  CHECK(length(parse_permutation("35412")) == 7);
  CHECK(lehmer_code(parse_permutation("35412")) == std::vector<int>{2, 3, 2, 0, 0});
  CHECK(lehmer_code(parse_permutation("423156")) == std::vector<int>{3, 1, 1, 0, 0, 0});
  CHECK(length(parse_permutation("231654")) == oracle::inversions({2, 3, 1, 6, 5, 4}));
  CHECK(code_shape(parse_permutation("35412")) == Partition({3, 2, 2}));
}

TEST_CASE("code sums to length on S_6") {
  for (const auto& w : all_permutations(6)) {
    const auto code = lehmer_code(w);
    CHECK(std::accumulate(code.begin(), code.end(), 0) == oracle::inversions(w.window()));
  }
}

TEST_CASE("Lehmer code round trip") {
  for (const auto& w : all_permutations(5)) CHECK(Permutation::from_code(lehmer_code(w), 5) == w);
}

TEST_CASE("classification") {
  CHECK(classify(parse_permutation("3421")).dominant);
  CHECK_FALSE(classify(parse_permutation("2431")).dominant);
  const auto id = classify(Permutation::identity(4));
  CHECK((id.dominant && id.vexillary && id.grassmannian));
  CHECK_FALSE(classify(parse_permutation("2143")).vexillary);
  CHECK(classify(parse_permutation("35412")).vexillary);
  CHECK(classify(parse_permutation("2461357")).grassmannian);
  // classify() itself asserts the two dominance tests agree.
  for (const auto& w : all_permutations(5)) {
    const auto flags = classify(w);
    if (flags.dominant) CHECK(flags.vexillary);
  }
}

TEST_CASE("transpositions and embeddings") {
  CHECK(apply_transposition(parse_permutation("645978321"), 4, 6) == parse_permutation("645879321"));
  CHECK(apply_transposition(parse_permutation("231654"), 5, 6) == parse_permutation("231645"));
  CHECK_THROWS_AS(apply_transposition(parse_permutation("231654"), 3, 3), InvalidInput);
  CHECK_THROWS_AS(apply_transposition(parse_permutation("231654"), 0, 2), InvalidInput);
  for (const auto& w : all_permutations(5))
    for (int i = 1; i <= 5; ++i)
      for (int j = i + 1; j <= 5; ++j) CHECK((length(w) - length(apply_transposition(w, i, j))) % 2 != 0);

  CHECK(embed(parse_permutation("231654"), Side::Left) == parse_permutation("1342765"));
  CHECK(embed(parse_permutation("231654"), Side::Right) == parse_permutation("2316547"));
  CHECK(embed_left(Permutation::identity(3)) == Permutation::identity(4));
  CHECK(length(embed_left(parse_permutation("35412"))) == 7);
}

TEST_CASE("inverse and complement") {
  CHECK(inverse(parse_permutation("231654")) == parse_permutation("312654"));
  // Conjugation by the longest element fixes the identity and the longest element.
  CHECK(complement(Permutation::identity(5)) == Permutation::identity(5));
  CHECK(complement(Permutation::longest(5)) == Permutation::longest(5));
  CHECK(complement(parse_permutation("231654")) == parse_permutation("321645"));
  CHECK(complement(parse_permutation("341526")) == parse_permutation("152634"));
  for (const auto& w : all_permutations(5)) {
    CHECK(inverse(inverse(w)) == w);
    CHECK(complement(complement(w)) == w);
    CHECK(length(inverse(w)) == length(w));
    CHECK(length(complement(w)) == length(w));
  }
}

TEST_CASE("reduced words") {
  const auto id_words = reduced_words(Permutation::identity(3));
  REQUIRE(id_words.size() == 1);
  CHECK(id_words.front().empty());

  const auto words321 = reduced_words(parse_permutation("321"));
  REQUIRE(words321.size() == 2);
  CHECK(words321[0] == Word({1, 2, 1}, 3));
  CHECK(words321[1] == Word({2, 1, 2}, 3));

  const auto words = reduced_words(parse_permutation("231654"));
  CHECK(std::find(words.begin(), words.end(), Word({5, 4, 1, 2, 5}, 6)) != words.end());
  CHECK(reduced_words(Permutation::longest(4)).size() == 16);
  CHECK(count_reduced_words(Permutation::longest(4)) == 16);
}

TEST_CASE("reduced words agree with brute force on S_4") {
  for (const auto& w : all_permutations(4)) {
    const auto fast = reduced_words(w);
    auto slow = oracle::reduced_words(w);
    std::sort(slow.begin(), slow.end());
    CHECK(fast == slow);
    CHECK(std::is_sorted(fast.begin(), fast.end()));
    CHECK(std::set<Word>(fast.begin(), fast.end()).size() == fast.size());
    CHECK(count_reduced_words(w) == fast.size());
    std::size_t recursion = w.is_identity() ? 1 : 0;
    for (int d : descents(w)) recursion += count_reduced_words(w.apply_simple(d));
    CHECK(recursion == fast.size());
  }
}

TEST_CASE("parsing and printing") {
  CHECK(parse_permutation("2,3,1,6,5,4") == parse_permutation("231654"));
  CHECK(to_string(parse_permutation("231654")) == "2,3,1,6,5,4");
  CHECK(to_compact_string(parse_permutation("231654")) == "231654");
  CHECK(to_compact_string(Permutation::identity(10)) == "1,2,3,4,5,6,7,8,9,10");
  CHECK_THROWS_AS(parse_permutation("2,2,1"), InvalidInput);
  CHECK_THROWS_AS(parse_permutation("13"), InvalidInput);
  CHECK_THROWS_AS(parse_permutation(""), InvalidInput);
  CHECK_THROWS_AS(parse_permutation("1,x"), InvalidInput);
  CHECK(to_string(Partition({4, 2})) == "(4,2)");
  CHECK(to_string(Partition()) == "()");
  CHECK(parse_partition("(3,2,1)") == Partition({3, 2, 1}));
  CHECK(parse_partition("()") == Partition());
  CHECK_THROWS_AS(Partition({1, 2}), InvalidInput);
  CHECK(Partition({3, 2, 2}).conjugate() == Partition({3, 3, 1}));
}
