#include "twotors/verify/acceptance.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "twotors/cli/commands.hpp"
#include "twotors/cli/poly_parser.hpp"
#include "twotors/curves/conjecture.hpp"
#include "twotors/curves/divisor.hpp"
#include "twotors/curves/elliptic.hpp"
#include "twotors/error.hpp"
#include "twotors/theta/f2.hpp"

namespace twotors::verify {

using cli::Check;

bool CriterionResult::passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const Check& c) { return c.status == Check::Status::Fail; });
}

std::string CriterionResult::summary() const {
  std::size_t pass = 0, fail = 0, reported = 0;
  for (const auto& c : checks) {
    if (c.status == Check::Status::Pass) ++pass;
    else if (c.status == Check::Status::Fail) ++fail;
    else ++reported;
  }
  std::string out = std::to_string(pass) + " passed, " + std::to_string(fail) + " failed";
  if (reported) out += ", " + std::to_string(reported) + " reported";
  return out;
}

Q2Fn flipped_q2_sign() {
  return [](const curves::HyperellipticModel& m, const curves::TwoTorsionClass& s) {
    const auto q = curves::q2(m, s);
    return s.mask() == 0b11 ? q * SquareClass::minus_one() : q;
  };
}

namespace {

using Rng = std::mt19937_64;

/// Collects checks for one criterion. A bulk property becomes a single
/// check whose actual value is "passed/total".
class Recorder {
 public:
  explicit Recorder(CriterionResult& r) : r_(r) {}

  void eq(const std::string& name, const std::string& expected, const std::string& actual) {
    r_.checks.push_back(Check::compare(name, expected, actual));
  }
  void truth(const std::string& name, bool ok, const std::string& detail = "") {
    r_.checks.push_back(Check::compare(name, "true", ok ? "true" : "false" + (detail.empty() ? "" : " (" + detail + ")")));
  }
  /// One aggregated check for a bulk property.
  void bulk(const std::string& name, std::size_t total, const std::vector<std::string>& failures) {
    std::string actual = std::to_string(total - failures.size()) + "/" + std::to_string(total);
    if (!failures.empty()) actual += "; first failure: " + failures.front();
    r_.checks.push_back(Check::compare(name, std::to_string(total) + "/" + std::to_string(total), actual));
  }
  void reported(const std::string& name, const std::string& expected, const std::string& actual) {
    r_.checks.push_back(Check::reported(name, expected, actual));
  }

 private:
  CriterionResult& r_;
};

Rational random_rational(Rng& rng, long bound, long max_den) {
  std::uniform_int_distribution<long> den(1, max_den);
  const long d = den(rng);
  std::uniform_int_distribution<long> num(-bound * d, bound * d);
  return Rational(Integer(num(rng)), Integer(d));
}

/// 2g+2 distinct roots in [-20, 20] with denominators 1..3, u in {+-1, +-2}.
curves::HyperellipticModel random_split_model(Rng& rng, unsigned g) {
  std::set<Rational> roots;
  while (roots.size() < 2 * g + 2) roots.insert(random_rational(rng, 20, 3));
  static const long leads[] = {1, -1, 2, -2};
  std::uniform_int_distribution<int> pick(0, 3);
  return {Rational(leads[pick(rng)]), std::vector<Rational>(roots.begin(), roots.end())};
}

curves::TwoTorsionClass random_class(Rng& rng, const curves::HyperellipticModel& m, bool nontrivial) {
  const std::size_t n = m.root_count();
  std::uniform_int_distribution<std::uint64_t> bits(0, (std::uint64_t{1} << (n - 1)) - 1);
  while (true) {
    std::uint64_t mask = bits(rng);
    if (std::popcount(mask) % 2) mask ^= std::uint64_t{1} << (n - 1);
    const auto c = curves::TwoTorsionClass::of(n, mask);
    if (!nontrivial || !c.is_identity()) return c;
  }
}

Rng criterion_rng(std::uint64_t seed, int id) {
  std::seed_seq seq{seed, static_cast<std::uint64_t>(id)};
  return Rng(seq);
}

curves::HyperellipticModel example_curve() {
  return {Rational(1), {0, 1, 2, 3, 4, 5}};
}

// ---- criteria ---------------------------------------------------------------

CriterionResult c1_genus2_values(const AcceptanceOptions& o) {
  CriterionResult r{1, "genus-2 example: q2 values", {}};
  Recorder rec(r);
  const auto m = example_curve();
  const std::vector<long> published{5, -10, 10, -5, 1};
  std::vector<SquareClass> base(6);
  for (std::size_t j = 1; j <= 5; ++j) {
    const auto c = curves::TwoTorsionClass::of(6, std::vector<std::size_t>{0, j});
    base[j] = o.q2(m, c);
    rec.eq("q2(a_{0" + std::to_string(j) + "})", std::to_string(published[j - 1]), base[j].str());
  }
  // a_{ij} = a_{0i} + a_{0j}, and e2(a_{0i}, a_{0j}) = -1.
  for (std::size_t i = 1; i <= 5; ++i)
    for (std::size_t j = i + 1; j <= 5; ++j) {
      const auto c = curves::TwoTorsionClass::of(6, std::vector<std::size_t>{i, j});
      const auto derived = SquareClass::of(-published[i - 1] * published[j - 1]);
      rec.eq("q2(" + c.label() + ") derived vs direct", derived.str(), curves::q2(m, c).str());
      rec.eq("q2(" + c.label() + ") under test", derived.str(), o.q2(m, c).str());
    }
  return r;
}

CriterionResult c2_genus2_signs(const AcceptanceOptions& o) {
  CriterionResult r{2, "genus-2 example: signs and signed count", {}};
  Recorder rec(r);
  const auto m = example_curve();
  long pos = 0, neg = 0;
  for (const auto& c : curves::h_classes(m)) (real_sign(o.q2(m, c)) > 0 ? pos : neg) += 1;
  rec.eq("positive classes", "10", std::to_string(pos));
  rec.eq("negative classes", "6", std::to_string(neg));
  rec.eq("signed count", "4", std::to_string(pos - neg));
  rec.eq("signed_count()", "4", std::to_string(curves::signed_count(m)));
  return r;
}

CriterionResult c3_elliptic(const AcceptanceOptions&) {
  CriterionResult r{3, "elliptic examples", {}};
  Recorder rec(r);
  const curves::EllipticModel e0(cli::parse_poly("x^3 - x"));
  rec.eq("x^3-x q2(-1)", "2", curves::elliptic_q2(e0, -1).str());
  rec.eq("x^3-x q2(0)", "-1", curves::elliptic_q2(e0, 0).str());
  rec.eq("x^3-x q2(1)", "2", curves::elliptic_q2(e0, 1).str());
  rec.eq("x^3-x b2(-1,0)", "-1", curves::elliptic_b2(e0, -1, 0).str());
  rec.eq("x^3-x b2(0,-1)", "1", curves::elliptic_b2(e0, 0, -1).str());
  rec.eq("x^3-x signed count", "2", std::to_string(curves::elliptic_signed_count(e0)));

  const curves::EllipticModel e1(cli::parse_poly("1/3*(x+3)*(x^2+1)"));
  rec.eq("(x+3)(x^2+1)/3 signed count", "2", std::to_string(curves::elliptic_signed_count(e1)));
  rec.eq("(x+3)(x^2+1)/3 q2(-3)", "10", curves::elliptic_q2(e1, -3).str());

  const curves::EllipticModel e2(cli::parse_poly("1/3*x*(x-1)*(x+3)"));
  const std::vector<std::pair<long, int>> signs{{-3, 1}, {0, -1}, {1, 1}};
  for (const auto& [z, s] : signs)
    rec.eq("x(x-1)(x+3)/3 sign q2(" + std::to_string(z) + ")", std::to_string(s),
           std::to_string(real_sign(curves::elliptic_q2(e2, z))));
  rec.eq("x(x-1)(x+3)/3 signed count", "2", std::to_string(curves::elliptic_signed_count(e2)));
  return r;
}

CriterionResult c4_random_split(const AcceptanceOptions& o) {
  CriterionResult r{4, "random split models: signed count and q2 product", {}};
  Recorder rec(r);
  Rng rng = criterion_rng(o.seed, 4);
  std::vector<std::string> count_fail, product_fail;
  constexpr std::size_t kModels = 200;
  for (std::size_t k = 0; k < kModels; ++k) {
    const unsigned g = 1 + static_cast<unsigned>(k % 4);
    const auto m = random_split_model(rng, g);
    long count = 0;
    SquareClass product;
    for (const auto& c : curves::h_classes(m)) {
      const auto q = o.q2(m, c);
      count += real_sign(q);
      product = product * q;
    }
    if (count != (1L << g)) count_fail.push_back("model " + std::to_string(k) + " count " + std::to_string(count));
    const std::string want = g == 1 ? "-1" : "1";
    if (product.str() != want) product_fail.push_back("model " + std::to_string(k) + " product " + product.str());
  }
  rec.bulk("signed_count = 2^g", kModels, count_fail);
  rec.bulk("q2 product", kModels, product_fail);
  return r;
}

CriterionResult c5_f2_suite(const AcceptanceOptions&) {
  CriterionResult r{5, "F2 model, all types with g <= 6", {}};
  Recorder rec(r);
  std::vector<std::string> count_f, odd_f, err_f, theta_f, lagr_f, census_f;
  std::size_t types = 0, nus = 0, ops = 0, lagr = 0;
  for (const auto& t : theta::valid_types(6)) {
    ++types;
    const long two_g = 1L << t.g;
    if (theta::signed_count(t) != two_g) count_f.push_back(t.str());

    const theta::Bits s_mask = (theta::Bits{1} << t.s) - 1;
    for (const auto& nu : theta::all_vectors(t.g)) {
      if (!theta::is_real_theta(t, nu)) continue;
      ++nus;
      const bool complex_orientation = t.a == 0 && (nu.upper & s_mask) == 0;
      try {
        const long sum = theta::odd_theta_signed_sum(t, nu);
        if (complex_orientation) err_f.push_back(t.str() + " nu " + nu.str() + ": no error");
        else if (sum != two_g / 2) odd_f.push_back(t.str() + " nu " + nu.str() + ": " + std::to_string(sum));
      } catch (const MathError& e) {
        if (!complex_orientation || e.kind() != ErrorKind::ComplexSemiOrientation)
          err_f.push_back(t.str() + " nu " + nu.str() + ": " + e.what());
      }
      if (nu.lower != 0) {
        ++lagr;
        if (theta::lagrangian_odd_count(t, nu) != two_g / 2) lagr_f.push_back(t.str() + " c " + nu.str());
      }
    }
    for (theta::Bits u1 = 0; u1 <= s_mask; ++u1)
      for (theta::Bits eps = 0; eps <= s_mask; ++eps) {
        ++ops;
        const theta::OrientationParity op{u1, eps};
        if (!(theta::theta_counts(t, op) == theta::theta_counts_closed_form(t, op)))
          theta_f.push_back(t.str() + " u1 " + std::to_string(u1) + " eps " + std::to_string(eps));
      }
  }
  for (unsigned g = 1; g <= 6; ++g)
    if (theta::arf_odd_census(g) != (1L << (g - 1)) * ((1L << g) - 1)) census_f.push_back("g=" + std::to_string(g));
  rec.bulk("signed_count = 2^g", types, count_f);
  rec.bulk("odd theta signed sum = 2^(g-1)", nus, odd_f);
  rec.bulk("ComplexSemiOrientation exactly when a=0, u1=0", nus, err_f);
  rec.bulk("theta_counts closed form", ops, theta_f);
  rec.bulk("lagrangian odd count = 2^(g-1)", lagr, lagr_f);
  rec.bulk("Arf census", 6, census_f);
  return r;
}

Poly random_squarefree_cubic(Rng& rng, bool split) {
  while (true) {
    Poly p;
    if (split) {
      std::set<Rational> roots;
      while (roots.size() < 3) roots.insert(random_rational(rng, 20, 3));
      p = Poly::constant(random_rational(rng, 5, 3));
      if (p.is_zero()) continue;
      for (const auto& z : roots) p = p * Poly::linear(z);
    } else {
      std::vector<Rational> c(4);
      for (auto& x : c) x = random_rational(rng, 30, 4);
      if (c[3].is_zero()) continue;
      p = Poly(c);
    }
    if (is_squarefree(p)) return p;
  }
}

CriterionResult c6_gw_genus1(const AcceptanceOptions& o) {
  CriterionResult r{6, "GW: trace form and genus-1 conjecture", {}};
  Recorder rec(r);
  const auto tf = gw::trace_form_weighted(cli::parse_poly("x^3 - x"));
  rec.truth("trace_form_weighted(x^3-x) = <1,1,-1>",
            gw::is_isometric(tf, gw::GWElement({SquareClass::of(1L), SquareClass::of(1L), SquareClass::of(-1L)})),
            tf.str());
  Rng rng = criterion_rng(o.seed, 6);
  std::vector<std::string> fails;
  const auto rhs = gw::conjecture_rhs(1);
  constexpr std::size_t kCubics = 100;
  for (std::size_t k = 0; k < kCubics; ++k) {
    const Poly p = random_squarefree_cubic(rng, k % 2 == 0);
    const auto lhs = curves::conjecture_lhs_elliptic(curves::EllipticModel(p));
    if (!gw::is_isometric(lhs, rhs)) fails.push_back(to_string(p) + ": " + lhs.str());
  }
  rec.bulk("conjecture at g=1", kCubics, fails);
  return r;
}

CriterionResult c7_conjecture_g2(const AcceptanceOptions&) {
  CriterionResult r{7, "conjecture at g=2 on the example curve", {}};
  Recorder rec(r);
  const auto lhs = curves::conjecture_lhs_split(example_curve());
  const auto rhs = gw::conjecture_rhs(2);
  const auto li = gw::invariants(lhs), ri = gw::invariants(rhs);
  rec.eq("rank", "16", std::to_string(li.rank));
  rec.eq("rank matches rhs", std::to_string(ri.rank), std::to_string(li.rank));
  rec.eq("signature", "4", std::to_string(li.signature));
  rec.eq("signature matches rhs", std::to_string(ri.signature), std::to_string(li.signature));
  rec.eq("discriminant", "1", li.discriminant.str());
  rec.eq("discriminant matches rhs", ri.discriminant.str(), li.discriminant.str());
  rec.reported("Hasse invariants agree (isometric)", "true", gw::is_isometric(lhs, rhs) ? "true" : "false");
  return r;
}

CriterionResult c8_weil(const AcceptanceOptions& o) {
  CriterionResult r{8, "Weil reciprocity on x-ratios", {}};
  Recorder rec(r);
  Rng rng = criterion_rng(o.seed, 8);
  std::uniform_int_distribution<long> expo(-3, 3);
  std::vector<std::string> fails;
  constexpr std::size_t kPairs = 100;
  for (std::size_t k = 0; k < kPairs; ++k) {
    const auto m = random_split_model(rng, 1 + static_cast<unsigned>(k % 3));
    std::vector<std::size_t> idx(m.root_count());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    const std::size_t half = idx.size() / 2;
    const auto make = [&](std::size_t lo, std::size_t hi) {
      curves::XRatio f;
      long total = 0;
      for (std::size_t i = lo; i + 1 < hi; ++i) {
        long e = 0;
        while (e == 0) e = expo(rng);
        f.exponents[idx[i]] = e;
        total += e;
      }
      if (total != 0) f.exponents[idx[hi - 1]] = -total;
      return f;
    };
    const auto f = make(0, half), g = make(half, idx.size());
    const auto [lhs, rhs] = curves::weil_reciprocity_sides(m, f, g);
    if (lhs != rhs) fails.push_back("pair " + std::to_string(k) + ": " + lhs.str() + " vs " + rhs.str());
  }
  rec.bulk("f(div g) = g(div f)", kPairs, fails);
  return r;
}

CriterionResult c9_oracles(const AcceptanceOptions& o) {
  CriterionResult r{9, "oracle equivalence for q2", {}};
  Recorder rec(r);
  Rng rng = criterion_rng(o.seed, 9);
  std::vector<std::string> div_f, sign_f;
  constexpr std::size_t kInstances = 100;
  for (std::size_t k = 0; k < kInstances; ++k) {
    const auto m = random_split_model(rng, 1 + static_cast<unsigned>(k % 3));
    const auto s = random_class(rng, m, true);
    Rational c;
    do c = random_rational(rng, 25, 5);
    while (std::find(m.roots().begin(), m.roots().end(), c) != m.roots().end());
    const auto closed = o.q2(m, s);
    const auto oracle = SquareClass::of(curves::q2_by_divisor(m, s, c));
    const int real = curves::b2_real_sign(m, s, s);
    const std::string where = "instance " + std::to_string(k) + " " + s.label();
    if (closed != oracle) div_f.push_back(where + ": " + closed.str() + " vs " + oracle.str());
    if (real_sign(closed) != real) sign_f.push_back(where + ": " + closed.str() + " vs sign " + std::to_string(real));
  }
  rec.bulk("closed form = divisor evaluation", kInstances, div_f);
  rec.bulk("sign of closed form = b2_real_sign", kInstances, sign_f);
  return r;
}

Poly random_poly(Rng& rng) {
  std::uniform_int_distribution<int> deg(0, 8);
  std::uniform_int_distribution<long> num(-100, 100), den(1, 100);
  std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = Rational(Integer(num(rng)), Integer(den(rng)));
  return Poly(c);
}

CriterionResult c10_cli(const AcceptanceOptions& o) {
  CriterionResult r{10, "CLI: parse round-trip and stable JSON", {}};
  Recorder rec(r);
  Rng rng = criterion_rng(o.seed, 10);
  std::vector<std::string> fails;
  constexpr std::size_t kPolys = 1000;
  for (std::size_t k = 0; k < kPolys; ++k) {
    const Poly p = random_poly(rng);
    const std::string text = to_string(p);
    try {
      if (!(cli::parse_poly(text) == p)) fails.push_back(text);
    } catch (const cli::ParseError& e) {
      fails.push_back(text + ": " + e.what());
    }
  }
  rec.bulk("parse(render(p)) = p", kPolys, fails);

  const std::vector<std::vector<std::string>> invocations{
      {"hyper-table", "--roots", "0,1,2,3,4,5", "--lead", "1", "--json"},
      {"conjecture", "--genus", "1", "--poly", "x^3 - x", "--json"},
      {"theta-counts", "--g", "3", "--s", "1", "--a", "0", "--orientation", "1", "--parity", "0", "--json"}};
  for (const auto& args : invocations) {
    const auto a = cli::run_cli(args), b = cli::run_cli(args);
    rec.truth(args.front() + " JSON byte-stable", a.out == b.out && !a.out.empty() && a.out.back() == '\n');
  }
  return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  AcceptanceOptions o = options;
  if (!o.q2) o.q2 = [](const curves::HyperellipticModel& m, const curves::TwoTorsionClass& s) { return curves::q2(m, s); };
  using Fn = CriterionResult (*)(const AcceptanceOptions&);
  const Fn criteria[] = {c1_genus2_values, c2_genus2_signs, c3_elliptic, c4_random_split, c5_f2_suite,
                         c6_gw_genus1,     c7_conjecture_g2, c8_weil,    c9_oracles,      c10_cli};
  std::vector<CriterionResult> out;
  for (const auto fn : criteria) {
    try {
      out.push_back(fn(o));
    } catch (const std::exception& e) {
      // An unexpected exception fails the criterion rather than the run.
      CriterionResult r{static_cast<int>(out.size()) + 1, "aborted", {}};
      r.checks.push_back(Check::compare("no exception", "none", e.what()));
      out.push_back(r);
    }
  }
  return out;
}

}  // namespace twotors::verify
