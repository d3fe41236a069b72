#include <doctest.h>

#include "ppfast/error.hpp"
#include "ppfast/fixtures.hpp"
#include "support/support.hpp"

using namespace ppfast;

namespace {

Rational q(const char* s) { return parse_rational(s); }

Bump bump_on(long x, long y) {
  Rational a(x), b(y);
  Rational p = a + (b - a) / 4, v = a + (b - a) / 2;
  return Bump(PLMap::from_breakpoints({{a, a}, {p, v}, {b, b}}));
}

// Independent chain check: the point C_min pushed through the chain with
// the naive evaluator.
Rational push(const BumpFamily& a, const std::vector<std::size_t>& c,
              Rational t) {
  for (auto i : c) t = support::naive_eval(a[i].map(), t);
  return t;
}

}  // namespace

TEST_CASE("properness") {
  CHECK(is_geometrically_proper(std::vector<PLMap>{PLMap()}).proper);
  CHECK(is_geometrically_proper(thompson_h_family(2)).proper);
  auto r = is_geometrically_proper(fixture("infinite-bump").families.at("x"));
  CHECK_FALSE(r.proper);
  REQUIRE(r.witness);
  CHECK(r.witness->point == XRational::pos_inf());
  CHECK_FALSE(r.witness->left);
  // Shared left end.
  CHECK_FALSE(is_geometrically_proper(std::vector<PLMap>{
                                          bump_on(0, 2).map(),
                                          bump_on(0, 3).map()})
                  .proper);
  // A left end meeting a right end is fine.
  CHECK(is_geometrically_proper(std::vector<PLMap>{bump_on(0, 2).map(),
                                                   bump_on(2, 3).map()})
            .proper);
}

TEST_CASE("maximal chains") {
  BumpFamily one({bump_on(0, 1)});
  auto p1 = maximal_chains(one);
  CHECK(p1.chains.empty());
  CHECK(p1.isolated == std::vector<std::size_t>{0});

  auto f2 = BumpFamily::of(thompson_h_family(2));
  auto p2 = maximal_chains(f2);
  REQUIRE(p2.chains.size() == 1);
  CHECK(p2.chains[0].members == std::vector<std::size_t>{0, 1});
  CHECK(p2.isolated.empty());

  Family cd = fixture("chain-decomp").families.at("dyadic");
  auto bumps = used_bumps(cd);
  auto pc = maximal_chains(BumpFamily::of(cd));
  std::vector<std::vector<std::string>> names;
  for (const auto& c : pc.chains) {
    std::vector<std::string> n;
    for (auto i : c.members) n.push_back(bumps[i].name);
    std::sort(n.begin(), n.end());
    names.push_back(n);
  }
  std::sort(names.begin(), names.end());
  CHECK(names == std::vector<std::vector<std::string>>{
                     {"a0", "a2"}, {"a1", "a5"}, {"a3"}});
  REQUIRE(pc.isolated.size() == 1);
  CHECK(bumps[pc.isolated[0]].name == "a4");

  auto bad = BumpFamily({bump_on(0, 2), bump_on(0, 3)});
  CHECK_THROWS_AS(maximal_chains(bad), PreconditionError);
}

TEST_CASE("fastness of the F_2 chain and a slowed variant") {
  auto r = is_geometrically_fast(thompson_h_family(2));
  CHECK(r.fast);
  REQUIRE(r.chains.size() == 1);
  CHECK(r.chains[0].chain.c_min == XRational(1));
  CHECK(r.chains[0].chain.c_max == XRational(2));
  CHECK(r.chains[0].image == XRational(2));

  Family slow = fixture("slow-F2").families.at("x");
  auto s = is_geometrically_fast(slow);
  CHECK_FALSE(s.fast);
  REQUIRE(s.chains.size() == 1);
  auto bf = BumpFamily::of(slow);
  // 1 goes to 5/4 under the first bump and 5/4 to 3/2 under the second.
  CHECK(support::naive_eval(bf[0].map(), 1) == q("5/4"));
  CHECK(push(bf, {0, 1}, 1) == q("3/2"));
  CHECK(s.chains[0].image == XRational(q("3/2")));
  CHECK_FALSE(s.chains[0].satisfied);

  auto m = canonical_marking(bf);
  CHECK_FALSE(feet_disjoint(m.feet));
}

TEST_CASE("F_n chains: C_min = 1, C_max = n, markers t_i = i + (n - i)/n") {
  for (long n = 2; n <= 6; ++n) {
    Family h = thompson_h_family(n);
    auto r = is_geometrically_fast(h);
    CHECK(r.fast);
    REQUIRE(r.chains.size() == 1);
    CHECK(r.chains[0].chain.c_min == XRational(1));
    CHECK(r.chains[0].chain.c_max == XRational(n));
    CHECK(r.chains[0].image == XRational(n));
    auto m = canonical_marking(BumpFamily::of(h));
    for (long i = 0; i < n; ++i) {
      CHECK(m.markers[i] == i + make_rational(n - i, n));
    }
  }
}

TEST_CASE("canonical marking") {
  auto bf = BumpFamily::of(thompson_h_family(2));
  auto m = canonical_marking(bf);
  CHECK(m.markers == std::vector<Rational>{1, q("3/2")});
  CHECK(m.feet.src[0] == Interval::open(0, 1));
  CHECK(m.feet.dest[0] == Interval::closed_open(q("3/2"), 2));
  CHECK(m.feet.src[1] == Interval::open(1, q("3/2")));
  CHECK(m.feet.dest[1] == Interval::closed_open(2, XRational::pos_inf()));
  CHECK(feet_disjoint(m.feet));
  CHECK(m.initial == std::vector<bool>{true, false});

  auto single = canonical_marking(BumpFamily({bump_on(0, 1)}));
  CHECK(single.markers == std::vector<Rational>{q("1/2")});
  CHECK(feet_disjoint(single.feet));

  // p < q < r < s < t for the two-bump chain.
  Family geo = fixture("geo-fast").families.at("terminal");
  auto g = canonical_marking(BumpFamily::of(geo));
  const auto& src = g.feet.src;
  const auto& dst = g.feet.dest;
  CHECK(src[0].hi == src[1].lo);
  CHECK(src[1].hi == dst[0].lo);
  CHECK(dst[0].hi == dst[1].lo);
  CHECK(src[0].lo < src[0].hi);
  CHECK(dst[1].lo < dst[1].hi);
  CHECK(feet_disjoint(g.feet));
}

TEST_CASE("markers of fast families sit inside their orbitals") {
  auto r = support::rng(11);
  for (int it = 0; it < 200; ++it) {
    BumpFamily a(support::random_proper_bumps(r));
    if (!is_geometrically_fast(a).fast) continue;
    auto m = canonical_marking(a);
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].support().contains(m.markers[i]));
      CHECK(m.feet.src[i] == Interval::open(a[i].left(), m.markers[i]));
      CHECK(m.feet.dest[i] ==
            Interval::closed_open(a[i].map()(m.markers[i]), a[i].right()));
    }
  }
}

TEST_CASE("property: fastness criterion implies disjoint canonical feet") {
  auto r = support::rng(12);
  int fast = 0, slow = 0;
  for (int it = 0; it < 400; ++it) {
    BumpFamily a(support::random_proper_bumps(r));
    REQUIRE(a.proper());
    auto rep = is_geometrically_fast(a);
    auto m = canonical_marking(a);
    if (rep.fast) {
      ++fast;
      CHECK(feet_disjoint(m.feet));
    } else {
      ++slow;
    }
    // Each chain inequality, recomputed.
    for (const auto& c : rep.chains) {
      CHECK(is_stretched_chain(a, c.chain.members));
      Rational img = push(a, c.chain.members, c.chain.c_min.value());
      CHECK(c.image == XRational(img));
      CHECK(c.satisfied == (c.chain.c_max <= XRational(img)));
    }
  }
  CHECK(fast > 0);
  CHECK(slow > 0);
}

TEST_CASE("property: maximal chains decide all sub-chains") {
  auto r = support::rng(13);
  for (int it = 0; it < 300; ++it) {
    BumpFamily a(support::random_proper_bumps(r));
    auto rep = is_geometrically_fast(a);
    bool all_sub = true;
    for (const auto& c : rep.chains) {
      const auto& mem = c.chain.members;
      for (std::size_t i = 0; i < mem.size(); ++i) {
        for (std::size_t j = i; j < mem.size(); ++j) {
          std::vector<std::size_t> sub(mem.begin() + i, mem.begin() + j + 1);
          REQUIRE(is_stretched_chain(a, sub));
          all_sub = all_sub && evaluate_chain(a, sub).satisfied;
        }
      }
    }
    CHECK(rep.fast == all_sub);
  }
}

TEST_CASE("property: powers eventually become and stay fast") {
  auto r = support::rng(14);
  for (int it = 0; it < 200; ++it) {
    BumpFamily a(support::random_proper_bumps(r));
    long k = 1;
    while (k <= 64 && !is_geometrically_fast(a.powered(k)).fast) ++k;
    CHECK(k <= 64);
    for (long l = k; l <= k + 3 && k <= 64; ++l) {
      CHECK(is_geometrically_fast(a.powered(l)).fast);
    }
  }
}

TEST_CASE("property: initial markers count chains plus isolated bumps") {
  auto r = support::rng(15);
  for (int it = 0; it < 300; ++it) {
    BumpFamily a(support::random_proper_bumps(r));
    auto rep = is_geometrically_fast(a);
    if (!rep.fast) continue;
    auto m = canonical_marking(a);
    std::size_t initial = std::count(m.initial.begin(), m.initial.end(), true);
    CHECK(initial == rep.chains.size() + rep.isolated.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(m.initial[i] == !a.predecessor(i).has_value());
    }
  }
}

TEST_CASE("isolated bump with an infinite end has no marker") {
  Bump b(PLMap::from_breakpoints({{0, 0}, {1, 2}}, 1, 1));
  CHECK_THROWS_AS(canonical_marking(BumpFamily({b})), PreconditionError);
}
