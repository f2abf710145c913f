#include <doctest.h>

#include <random>

#include "twotors/error.hpp"
#include "twotors/gw/forms.hpp"

using namespace twotors;
using gw::GWElement;
using gw::GramMatrix;

namespace {

Rational R(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }
SquareClass S(long n) { return SquareClass::of(n); }

GramMatrix gram(std::initializer_list<std::initializer_list<long>> rows) {
  GramMatrix g(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.size()));
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (long v : row) g(i, j++) = R(v);
    ++i;
  }
  return g;
}

GWElement random_form(std::mt19937_64& rng, std::size_t max_rank) {
  static const long pool[] = {1, -1, 2, -2, 3, -3, 5, -5, 6, 7, -10, 15, 30, -21};
  std::uniform_int_distribution<std::size_t> rank(1, max_rank), pick(0, std::size(pool) - 1);
  std::vector<SquareClass> e;
  for (std::size_t n = rank(rng); n > 0; --n) e.push_back(S(pool[pick(rng)]));
  return GWElement(e);
}

}  // namespace

TEST_CASE("diagonalize examples") {
  CHECK(gw::diagonalize(gram({{2, 0}, {0, 3}})) == GWElement({S(2), S(3)}));
  CHECK(gw::is_isometric(gw::diagonalize(gram({{0, 1}, {1, 0}})), GWElement({S(1), S(-1)})));
  CHECK_THROWS_AS(gw::diagonalize(gram({{1, 1}, {1, 1}})), MathError);
  CHECK_THROWS_AS(gw::diagonalize(GramMatrix(2, 3)), MathError);
}

TEST_CASE("invariants examples") {
  const auto a = gw::invariants(GWElement({S(1), S(1), S(-1)}));
  CHECK(a.rank == 3);
  CHECK(a.signature == 1);
  CHECK(a.discriminant.str() == "-1");
  const auto z = gw::invariants(GWElement{});
  CHECK(z.rank == 0);
  CHECK(z.signature == 0);
  CHECK(z.discriminant.is_one());
  const auto b = gw::invariants(GWElement({S(2), S(-2)}));
  CHECK(b.rank == 2);
  CHECK(b.signature == 0);
  CHECK(b.discriminant.str() == "-1");
  CHECK(gw::invariants(GWElement({S(-1), S(-1)})).hasse_at(Place::real()) == -1);
}

TEST_CASE("isometry examples") {
  CHECK(gw::is_isometric(GWElement({S(1), S(1), S(-1)}), GWElement({S(1), S(1), S(-1)})));
  CHECK_FALSE(gw::is_isometric(GWElement({S(1)}), GWElement({S(2)})));
  CHECK(gw::is_isometric(GWElement({S(2), S(2)}), GWElement({S(1), S(1)})));
  // Same rank, signature and discriminant, separated by the Hasse invariant at 3.
  CHECK_FALSE(gw::is_isometric(GWElement({S(3), S(3)}), GWElement({S(1), S(1)})));
  CHECK(gw::is_isometric(GWElement({S(1), S(-1)}), GWElement({S(7), S(-7)})));
}

TEST_CASE("trace forms") {
  const Poly x3mx{R(0), R(-1), R(0), R(1)};
  CHECK(gw::is_isometric(gw::trace_form_weighted(x3mx), GWElement({S(1), S(1), S(-1)})));
  CHECK(gw::is_isometric(gw::trace_form_weighted(Poly{R(-2), R(0), R(1)}), GWElement({S(1), S(-1)})));
  const auto i = gw::invariants(gw::trace_form_weighted(Poly{R(1), R(0), R(1)}));
  CHECK(i.rank == 2);
  CHECK(i.signature == 0);
  CHECK(gw::is_isometric(gw::scaled_trace_transfer(Poly{R(1), R(0), R(1)}, Poly{R(1)}), GWElement({S(2), S(-2)})));
  CHECK(gw::scaled_trace_transfer(Poly::linear(R(4)), Poly{R(-3, 5)}) == GWElement({S(-15)}));
  CHECK(gw::trace_gram(Poly{R(-2), R(0), R(1)}, Poly{R(0), R(1, 4)}) == gram({{0, 1}, {1, 0}}));
  CHECK(gw::is_isometric(gw::scaled_trace_transfer(Poly{R(-2), R(0), R(1)}, Poly{R(0), R(1, 4)}),
                         gw::trace_form_weighted(Poly{R(-2), R(0), R(1)})));
  CHECK(gw::power_sums(x3mx, 4) == std::vector<Rational>{R(3), R(0), R(2), R(0)});
  CHECK_THROWS_AS(gw::trace_form_weighted(x3mx * Poly::linear(R(1))), MathError);
  CHECK_THROWS_AS(gw::scaled_trace_transfer(x3mx, Poly::linear(R(0))), MathError);
}

TEST_CASE("conjecture rhs and sums") {
  CHECK(gw::conjecture_rhs(1).str() == "3*<1> + <-1>");
  CHECK(gw::conjecture_rhs(2).str() == "10*<1> + 6*<-1>");
  for (unsigned g = 1; g <= 8; ++g) {
    const auto inv = gw::invariants(gw::conjecture_rhs(g));
    CHECK(inv.rank == (std::size_t{1} << (2 * g)));
    CHECK(inv.signature == (1L << g));
  }
  CHECK(gw_sum(GWElement({S(1)}), GWElement({S(-1)})) == GWElement({S(1), S(-1)}));
  const auto e = GWElement({S(3), S(-5)});
  CHECK(e + GWElement{} == e);
  const Poly x3mx{R(0), R(-1), R(0), R(1)};
  CHECK((GWElement({S(1)}) + gw::trace_form_weighted(x3mx)).rank() == 4);
}

TEST_CASE("pivot order does not change invariants (randomized)") {
  std::mt19937_64 rng(404);
  std::uniform_int_distribution<long> entry(-6, 6);
  std::uniform_int_distribution<int> size(1, 6);
  int tested = 0;
  while (tested < 150) {
    const int n = size(rng);
    GramMatrix g(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) g(i, j) = g(j, i) = R(entry(rng), 1 + (i + j) % 2);
    GWElement first, last;
    try {
      first = gw::diagonalize(g, gw::PivotStrategy::FirstNonzero);
    } catch (const MathError& e) {
      CHECK(e.kind() == ErrorKind::SingularGram);
      CHECK_THROWS_AS(gw::diagonalize(g, gw::PivotStrategy::LastNonzero), MathError);
      continue;
    }
    last = gw::diagonalize(g, gw::PivotStrategy::LastNonzero);
    CHECK(gw::is_isometric(first, last));
    // The determinant class is the discriminant.
    const auto diag = gw::congruence_diagonal(g);
    Rational det(1);
    for (const auto& d : diag) det *= d;
    CHECK(gw::invariants(first).discriminant == SquareClass::of(det));
    ++tested;
  }
}

TEST_CASE("isometry is an equivalence relation (randomized)") {
  std::mt19937_64 rng(505);
  std::vector<GWElement> forms;
  for (int i = 0; i < 60; ++i) forms.push_back(random_form(rng, 4));
  for (const auto& a : forms) {
    CHECK(gw::is_isometric(a, a));
    for (const auto& b : forms) {
      const bool ab = gw::is_isometric(a, b);
      CHECK(ab == gw::is_isometric(b, a));
      if (!ab) continue;
      for (const auto& c : forms)
        if (gw::is_isometric(b, c)) CHECK(gw::is_isometric(a, c));
    }
  }
}

TEST_CASE("Hasse product formula and additivity (randomized)") {
  std::mt19937_64 rng(606);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_form(rng, 6), b = random_form(rng, 6);
    const auto ia = gw::invariants(a), ib = gw::invariants(b), is = gw::invariants(a + b);
    int product = 1;
    for (const auto& [v, h] : ia.hasse) product *= h;
    CHECK(product == 1);
    CHECK(is.rank == ia.rank + ib.rank);
    CHECK(is.signature == ia.signature + ib.signature);
    CHECK(is.discriminant == ia.discriminant * ib.discriminant);
  }
}

TEST_CASE("trace form signature counts roots by the sign of p' (randomized)") {
  std::mt19937_64 rng(707);
  std::uniform_int_distribution<long> root(-12, 12), lead(-3, 3), deg(3, 4);
  for (int i = 0; i < 80; ++i) {
    Poly p = Poly::constant(R(0));
    long u = 0;
    while (u == 0) u = lead(rng);
    p = Poly::constant(R(u));
    std::vector<long> used;
    const long n = deg(rng);
    while (static_cast<long>(used.size()) < n) {
      const long z = root(rng);
      if (std::find(used.begin(), used.end(), z) != used.end()) continue;
      used.push_back(z);
      p = p * Poly::linear(R(z));
    }
    long expected = 0;
    for (const auto& z : rational_roots(p)) expected += p.derivative()(z).sign();
    CHECK(gw::invariants(gw::trace_form_weighted(p)).signature == expected);
  }
}
