#include <doctest.h>

#include <random>

#include "mumford/canonical.hpp"
#include "mumford/strata.hpp"
#include "mumford/tautclass.hpp"

#include "fuzz_helpers.hpp"

using namespace mumford;

namespace {

// The undecorated boundary divisor of the 1-pointed genus-2 space: two
// genus-1 components joined at a node, marking on the first.
DecoratedStratum iota1_divisor() {
  StratumBuilder b;
  int v0 = b.add_vertex(1), v1 = b.add_vertex(1);
  b.add_marking(v0, 1);
  b.add_edge(v0, v1);
  return b.finish(2, {1});
}

// genus-1 -- genus-0(marked, 3 legs) -- genus-1 chain in the same space.
DecoratedStratum genus2_chain() {
  StratumBuilder b;
  int l = b.add_vertex(1), m = b.add_vertex(0), r = b.add_vertex(1);
  b.add_marking(m, 1);
  b.add_edge(l, m);
  b.add_edge(m, r);
  return b.finish(2, {1});
}

}  // namespace

TEST_CASE("build_stratum accepts the iota_1 divisor") {
  DecoratedStratum s = iota1_divisor();
  CHECK(s.vertices.size() == 2);
  CHECK(s.codimension() == 1);
}

TEST_CASE("build_stratum rejects invalid input") {
  // genus-0 vertex with only 2 legs is unstable: 2*0 - 2 + 2 = 0.
  {
    StratumBuilder b;
    int v0 = b.add_vertex(0), v1 = b.add_vertex(2);
    b.add_marking(v0, 1);
    b.add_edge(v0, v1);
    CHECK_THROWS_WITH_AS(b.finish(2, {1}), "stratum: unstable vertex",
                         std::invalid_argument);
  }
  // Disconnected graph.
  {
    StratumBuilder b;
    int v0 = b.add_vertex(1), v1 = b.add_vertex(1);
    b.add_marking(v0, 1);
    b.add_leg(v1);  // dangling leg, no edge
    CHECK_THROWS(b.finish(2, {1}));
  }
  // Lambda index above the vertex genus.
  {
    StratumBuilder b;
    int v0 = b.add_vertex(1), v1 = b.add_vertex(1);
    b.add_marking(v0, 1);
    b.add_edge(v0, v1);
    b.decorate(v1, LambdaPow{2, 1});
    CHECK_THROWS_WITH_AS(b.finish(2, {1}), "lambda index exceeds vertex genus",
                         std::invalid_argument);
  }
  // Genus mismatch with the ambient.
  {
    StratumBuilder b;
    int v0 = b.add_vertex(1), v1 = b.add_vertex(2);
    b.add_marking(v0, 1);
    b.add_edge(v0, v1);
    CHECK_THROWS(b.finish(2, {1}));
  }
}

TEST_CASE("chain stratum has codimension 2") {
  DecoratedStratum s = genus2_chain();
  CHECK(s.codimension() == 2);
}

TEST_CASE("decorated codimension bookkeeping") {
  StratumBuilder b;
  int v0 = b.add_vertex(1), v1 = b.add_vertex(1);
  b.add_marking(v0, 1);
  auto [a, bb] = b.add_edge(v0, v1);
  (void)bb;
  b.decorate(v0, MumfordFactor{a, 1});
  DecoratedStratum s = b.finish(2, {1});
  // 1 edge + degree-1 factor = 2 = g for the glued c_1 term.
  CHECK(s.codimension() == 2);
}

TEST_CASE("genus-0 Mumford factors normalize to psi powers") {
  StratumBuilder b;
  int l = b.add_vertex(1), m = b.add_vertex(0), r = b.add_vertex(1);
  b.add_marking(m, 1);
  b.add_edge(l, m);
  auto [x, y] = b.add_edge(m, r);
  (void)y;
  b.decorate(m, MumfordFactor{x, 1});
  DecoratedStratum s = b.finish(2, {1});
  bool found_psi = false;
  for (const auto& f : s.decorations[1]) {
    CHECK(!std::holds_alternative<MumfordFactor>(f));
    if (std::holds_alternative<PsiPow>(f)) found_psi = true;
  }
  CHECK(found_psi);
}

TEST_CASE("canonical form: symmetric chain has two automorphisms") {
  CanonicalForm cf = canonical_form(genus2_chain());
  CHECK(cf.automorphisms == 2);
  // The divisor with distinguishable sides has none.
  CHECK(canonical_form(iota1_divisor()).automorphisms == 1);
}

TEST_CASE("canonical form: relabeling invariance") {
  // Same chain built in a different order with different leg ids.
  StratumBuilder b;
  int r = b.add_vertex(1), m = b.add_vertex(0), l = b.add_vertex(1);
  b.add_edge(m, r);
  b.add_marking(m, 1);
  b.add_edge(l, m);
  DecoratedStratum other = b.finish(2, {1});
  CHECK(canonical_form(other).key == canonical_form(genus2_chain()).key);
}

TEST_CASE("canonical form: end genera (1,2) vs (2,1) around a marked center") {
  auto make = [](int gl, int gr) {
    StratumBuilder b;
    int l = b.add_vertex(gl), m = b.add_vertex(0), r = b.add_vertex(gr);
    b.add_marking(m, 1);
    b.add_edge(l, m);
    b.add_edge(m, r);
    return b.finish(3, {1});
  };
  CHECK(canonical_form(make(1, 2)).key == canonical_form(make(2, 1)).key);
}



TEST_CASE("canonical-form fuzz: 1000 random relabelings") {
  std::mt19937 rng(424242);
  for (int iter = 0; iter < 1000; ++iter) {
    DecoratedStratum s = fuzz::random_stratum(rng);
    CanonicalForm a = canonical_form(s);
    CanonicalForm b = canonical_form(fuzz::shuffled_copy(s, rng));
    CHECK(a.key == b.key);
    CHECK(a.automorphisms == b.automorphisms);
  }
}

TEST_CASE("class_combine collects by canonical key") {
  Ambient amb{2, {1}};
  TautClass x(amb);
  x.add(iota1_divisor(), Rational(1));

  TautClass y(amb);
  y.add(iota1_divisor(), Rational(-1));

  CHECK(class_combine(x, x, Rational(1), Rational(-1)).is_zero());
  CHECK((x + y).is_zero());

  TautClass z(amb);
  z.add(genus2_chain(), Rational(1, 2));
  TautClass w = x + z;
  CHECK(w.size() == 2);
  CHECK_THROWS_AS(class_combine(x, TautClass(Ambient{3, {1}}), Rational(1), Rational(1)),
                  std::invalid_argument);
}

TEST_CASE("class_combine is commutative and associative on random classes") {
  std::mt19937 rng(99);
  Ambient amb{2, {1}};
  auto random_class = [&](int n) {
    TautClass c(amb);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int i = 0; i < n; ++i) {
      c.add(iota1_divisor(), Rational(coeff(rng)));
      c.add(genus2_chain(), Rational(coeff(rng), 2));
    }
    return c;
  };
  for (int iter = 0; iter < 30; ++iter) {
    TautClass a = random_class(2), b = random_class(1), c = random_class(3);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
  }
}

TEST_CASE("dimension vanishing drops overloaded strata") {
  // psi on a genus-0 three-legged vertex exceeds dim M_{0,3} = 0.
  StratumBuilder b;
  int l = b.add_vertex(1), m = b.add_vertex(0), r = b.add_vertex(1);
  int mark = b.add_marking(m, 1);
  b.add_edge(l, m);
  b.add_edge(m, r);
  b.decorate(m, PsiPow{mark, 1});
  DecoratedStratum s = b.finish(2, {1});
  CHECK(s.dimension_vanishes());
  TautClass c(Ambient{2, {1}});
  c.add(s, Rational(1));
  CHECK(c.is_zero());
}

TEST_CASE("expand_mumford_factors matches a hand expansion") {
  // (psi_a - lambda1) on the 2-legged genus-1 vertex of the divisor.
  StratumBuilder b;
  int v0 = b.add_vertex(1), v1 = b.add_vertex(1);
  b.add_marking(v0, 1);
  auto [a, bb] = b.add_edge(v0, v1);
  (void)bb;
  b.decorate(v0, MumfordFactor{a, 1});
  TautClass c(Ambient{2, {1}});
  c.add(b.finish(2, {1}), Rational(1));

  TautClass expanded = c.expand_mumford_factors();
  CHECK(expanded.size() == 2);

  TautClass byhand(Ambient{2, {1}});
  {
    StratumBuilder b1;
    int w0 = b1.add_vertex(1), w1 = b1.add_vertex(1);
    b1.add_marking(w0, 1);
    auto [x, y] = b1.add_edge(w0, w1);
    (void)y;
    b1.decorate(w0, PsiPow{x, 1});
    byhand.add(b1.finish(2, {1}), Rational(1));
  }
  {
    StratumBuilder b2;
    int w0 = b2.add_vertex(1), w1 = b2.add_vertex(1);
    b2.add_marking(w0, 1);
    b2.add_edge(w0, w1);
    b2.decorate(w0, LambdaPow{1, 1});
    byhand.add(b2.finish(2, {1}), Rational(-1));
  }
  CHECK(expanded == byhand);
}

TEST_CASE("homogeneity checking") {
  Ambient amb{2, {1}};
  TautClass c(amb);
  c.add(iota1_divisor(), Rational(1));    // codim 1
  CHECK(c.homogeneous_codimension() == 1);
  c.add(genus2_chain(), Rational(1));     // codim 2
  CHECK_THROWS_AS(c.homogeneous_codimension(), std::logic_error);
}
