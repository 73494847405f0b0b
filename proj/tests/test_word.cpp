#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "snlab/word.hpp"

using namespace snlab;

namespace {

Word random_reduced_word(std::mt19937& rng, int genus, int len) {
  std::uniform_int_distribution<int> d(0, 4 * genus - 1);
  Letters ls;
  while (static_cast<int>(ls.size()) < len) {
    Letter l = static_cast<Letter>(d(rng));
    if (!ls.empty() && l == letter_inverse(ls.back())) continue;
    ls.push_back(l);
  }
  return Word(ls);
}

}  // namespace

TEST_CASE("letters round-trip through characters") {
  for (int v = 0; v < 8; ++v) {
    Letter l = static_cast<Letter>(v);
    REQUIRE(letter_from_char(letter_to_char(l)) == l);
    REQUIRE(letter_inverse(letter_inverse(l)) == l);
  }
  REQUIRE(Word::parse("abAB").str() == "abAB");
}

TEST_CASE("free and cyclic reduction") {
  REQUIRE(Word::reduced(Word::parse("ab").ls).str() == "ab");
  Letters w = {0, 1};  // a A
  REQUIRE(free_reduce(w).empty());
  REQUIRE(cyclic_reduce(Word::parse("Babb").ls) == Word::parse("ab").ls);
}

TEST_CASE("non-reduced construction is rejected") {
  REQUIRE_THROWS_AS(Word(Letters{0, 1}), std::invalid_argument);  // a a^-1
}

TEST_CASE("min_rotation matches the naive rotation scan") {
  std::mt19937 rng(41);
  for (int iter = 0; iter < 200; ++iter) {
    std::uniform_int_distribution<int> len(1, 12);
    Word w = random_reduced_word(rng, 2, len(rng));
    Letters best = w.ls;
    for (std::size_t r = 1; r < w.ls.size(); ++r) {
      Letters rot(w.ls.begin() + r, w.ls.end());
      rot.insert(rot.end(), w.ls.begin(), w.ls.begin() + r);
      best = std::min(best, rot);
    }
    REQUIRE(min_rotation(w.ls) == best);
  }
}

TEST_CASE("relator words collapse to the identity") {
  SurfaceRelator rel(2);
  REQUIRE(rel.canonical(Word::parse("abABcdCD")).empty());
  REQUIRE(rel.canonical(Word::parse("cdCDabAB")).empty());
}

TEST_CASE("half-relator spellings of the separating curve coincide") {
  SurfaceRelator rel(2);
  Word c1 = rel.canonical(Word::parse("abAB"));
  Word c2 = rel.canonical(Word::parse("dcDC"));
  REQUIRE(c1 == c2);
  Word r1 = rel.canonical(Word::parse("cdCD"));
  Word r2 = rel.canonical(Word::parse("baBA"));
  REQUIRE(r1 == r2);
  REQUIRE_FALSE(c1 == r1);  // the two orientations stay distinct
}

TEST_CASE("canonical form is invariant under conjugation and rotation") {
  SurfaceRelator rel(2);
  std::mt19937 rng(43);
  for (int iter = 0; iter < 150; ++iter) {
    std::uniform_int_distribution<int> len(1, 7), clen(1, 4);
    Word w = random_reduced_word(rng, 2, len(rng));
    Word canon = rel.canonical(w);
    // conjugation
    Word u = random_reduced_word(rng, 2, clen(rng));
    Letters conj = u.ls;
    conj.insert(conj.end(), w.ls.begin(), w.ls.end());
    Letters uinv = invert(u.ls);
    conj.insert(conj.end(), uinv.begin(), uinv.end());
    REQUIRE(rel.canonical(Word::reduced(conj)) == canon);
    // rotation of the cyclic reduction
    Letters cyc = cyclic_reduce(w.ls);
    if (cyc.size() >= 2) {
      Letters rot(cyc.begin() + 1, cyc.end());
      rot.push_back(cyc.front());
      REQUIRE(rel.canonical(Word::reduced(rot)) == canon);
    }
  }
}

TEST_CASE("canonical form handles block powers deterministically") {
  SurfaceRelator rel(2);
  Word c = Word::parse("abAB");
  for (int n : {2, 5, 11, 23}) {
    Word cn = c.power(n);
    Word canon = rel.canonical(cn);
    REQUIRE(canon.size() == cn.size());
    // the swapped-block spelling agrees
    Word mixed = Word::reduced([&] {
      Letters ls = Word::parse("dcDC").ls;
      Letters rest = c.power(n - 1).ls;
      ls.insert(ls.end(), rest.begin(), rest.end());
      return ls;
    }());
    REQUIRE(rel.canonical(mixed) == canon);
  }
}

TEST_CASE("inverse words canonicalize consistently") {
  SurfaceRelator rel(2);
  std::mt19937 rng(47);
  for (int iter = 0; iter < 80; ++iter) {
    Word w = random_reduced_word(rng, 2, 6);
    Word ci = rel.canonical(w.inverse());
    Word cw = rel.canonical(w);
    // inverse of the canonical word is conjugate to the canonical inverse
    REQUIRE(rel.canonical(cw.inverse()) == ci);
  }
}

TEST_CASE("down-swap windows are recognized") {
  SurfaceRelator rel(2);
  // dcDC is group-equal to abAB, which is lexicographically smaller
  REQUIRE(rel.window_is_down_swap(Word::parse("dcDC").ls));
  REQUIRE_FALSE(rel.window_is_down_swap(Word::parse("abAB").ls));
}
