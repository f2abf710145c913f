#include "twotors/cli/commands.hpp"

#include <algorithm>
#include <sstream>

#include <CLI11.hpp>

#include "twotors/cli/poly_parser.hpp"
#include "twotors/cli/render.hpp"
#include "twotors/curves/conjecture.hpp"
#include "twotors/curves/divisor.hpp"
#include "twotors/error.hpp"
#include "twotors/theta/f2.hpp"
#include "twotors/verify/acceptance.hpp"

namespace twotors::cli {
namespace {

const std::vector<std::pair<std::string, std::string>> kCommands = {
    {"elliptic-q2", "q2 at rational 2-torsion points of y^2 = p(x), p cubic"},
    {"elliptic-table", "b2 and e2 matrices and the signed count of an elliptic curve"},
    {"hyper-q2", "q2 of one class on a split hyperelliptic curve, optionally paired with another"},
    {"hyper-table", "all 2^(2g) classes with q2, sign, par and sg"},
    {"signed-count", "sum of real signs of q2 (F2 type, root list or cubic)"},
    {"theta-counts", "real theta characteristics with given orientation/parity offsets"},
    {"odd-signed-sum", "signed count of odd real theta characteristics"},
    {"gw-trace-form", "trace form of Q[x]/(p) weighted by 1/p' or by --alpha"},
    {"conjecture", "compare the q2 form with 2^(g-1)(2^g+1)<1> + 2^(g-1)(2^g-1)<-1>"},
    {"verify", "run the acceptance suite"}};

/// What a command produced before rendering.
struct Report {
  Json input = Json::object();
  Json result = Json::object();
  std::vector<Check> checks;
  std::string human;
  bool hard_failure() const {
    return std::any_of(checks.begin(), checks.end(),
                       [](const Check& c) { return c.status == Check::Status::Fail; });
  }
};

std::string sign_str(int s) { return s > 0 ? "+1" : "-1"; }

// ---- argument helpers -------------------------------------------------------

Rational parse_rational_flag(const std::string& text, const char* flag) {
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw ParseError(0, {"rational"}, std::string(flag) + ": bad rational '" + text + "'");
  }
}

curves::HyperellipticModel hyper_model(const Command& cmd, Json& input) {
  if (cmd.roots) {
    const auto roots = parse_rational_list(*cmd.roots);
    const Rational lead = cmd.lead ? parse_rational_flag(*cmd.lead, "--lead") : Rational(1);
    curves::HyperellipticModel m(lead, roots);
    Json r = Json::array();
    for (const auto& z : m.roots()) r.push_back(z.str());
    input["roots"] = r;
    input["lead"] = m.lead().str();
    return m;
  }
  if (cmd.poly) {
    auto m = curves::HyperellipticModel::from_poly(parse_poly(*cmd.poly));
    input["poly"] = *cmd.poly;
    return m;
  }
  throw UsageError(cmd.name + ": give --roots (with optional --lead) or --poly");
}

curves::EllipticModel elliptic_model(const Command& cmd, Json& input) {
  if (!cmd.poly) throw UsageError(cmd.name + ": --poly is required");
  input["poly"] = *cmd.poly;
  return curves::EllipticModel(parse_poly(*cmd.poly));
}

theta::RealCurveType curve_type(const Command& cmd, Json& input) {
  if (!cmd.g || !cmd.s || !cmd.a) throw UsageError(cmd.name + ": --g, --s and --a are required");
  theta::RealCurveType t{*cmd.g, *cmd.s, *cmd.a};
  input["g"] = t.g;
  input["s"] = t.s;
  input["a"] = t.a;
  t.validate();
  return t;
}

theta::Bits bits_to_mask(const std::vector<int>& bits) {
  theta::Bits m = 0;
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) m |= theta::Bits{1} << i;
  return m;
}

std::vector<std::size_t> index_list(const std::string& text) {
  std::vector<std::size_t> out;
  for (const auto& r : parse_rational_list(text)) {
    if (!r.is_integer() || r.sign() < 0) throw ParseError(0, {"root index"}, "bad root index " + r.str());
    out.push_back(r.num().get_ui());
  }
  return out;
}

// ---- inputs with known reference values ----------------------------------------

bool is_example_genus2(const curves::HyperellipticModel& m) {
  if (m.lead() != Rational(1) || m.root_count() != 6) return false;
  for (std::size_t i = 0; i < 6; ++i)
    if (m.roots()[i] != Rational(static_cast<long>(i))) return false;
  return true;
}

// ---- commands ---------------------------------------------------------------

Report cmd_elliptic_q2(const Command& cmd, bool styled) {
  Report rep;
  const auto m = elliptic_model(cmd, rep.input);
  std::vector<Rational> points = m.rational_roots();
  if (cmd.roots) {
    points = parse_rational_list(*cmd.roots);
    Json r = Json::array();
    for (const auto& z : points) r.push_back(z.str());
    rep.input["roots"] = r;
  }
  Table table({"x", "q2", "sign"});
  Json arr = Json::array();
  for (const auto& z : points) {
    const auto q = curves::elliptic_q2(m, z);
    arr.push_back(Json{{"x", z.str()}, {"q2", q.str()}, {"sign", real_sign(q)}});
    table.add_row({z.str(), q.str(), sign_str(real_sign(q))});
  }
  rep.result["lead"] = m.lead().str();
  rep.result["points"] = arr;
  rep.human = "y^2 = " + to_string(m.poly()) + "\n" + table.render(styled);
  return rep;
}

Report cmd_elliptic_table(const Command& cmd, bool styled) {
  Report rep;
  const auto m = elliptic_model(cmd, rep.input);
  const auto& roots = m.rational_roots();
  Json b2 = Json::array(), e2 = Json::array(), rs = Json::array();
  std::vector<std::string> headers{"b2"};
  for (const auto& z : roots) headers.push_back("x=" + z.str());
  Table table(headers);
  for (const auto& zi : roots) {
    rs.push_back(zi.str());
    Json brow = Json::array(), erow = Json::array();
    std::vector<std::string> row{"x=" + zi.str()};
    for (const auto& zj : roots) {
      const auto v = curves::elliptic_b2(m, zi, zj);
      brow.push_back(v.str());
      erow.push_back(zi == zj ? 1 : -1);
      row.push_back(v.str());
    }
    b2.push_back(brow);
    e2.push_back(erow);
    table.add_row(row);
  }
  rep.result["roots"] = rs;
  rep.result["b2"] = b2;
  rep.result["e2"] = e2;
  std::string count_line;
  try {
    const long count = curves::elliptic_signed_count(m);
    rep.result["signed_count"] = count;
    count_line = "signed count: " + std::to_string(count);
    rep.checks.push_back(Check::compare("signed count = 2^g", "2", std::to_string(count)));
  } catch (const MathError& e) {
    if (e.kind() != ErrorKind::IrrationalRealRoot) throw;
    rep.result["signed_count"] = nullptr;
    count_line = "signed count: unavailable (irrational real root)";
  }
  if (m.poly() == parse_poly("x^3 - x")) {
    const Rational p1(-1), p2(0);
    rep.checks.push_back(Check::compare("b2(P1,P1)", "2", curves::elliptic_b2(m, p1, p1).str()));
    rep.checks.push_back(Check::compare("b2(P1,P2)", "-1", curves::elliptic_b2(m, p1, p2).str()));
    rep.checks.push_back(Check::compare("b2(P2,P1)", "1", curves::elliptic_b2(m, p2, p1).str()));
    rep.checks.push_back(Check::compare("b2(P2,P2)", "-1", curves::elliptic_b2(m, p2, p2).str()));
    rep.checks.push_back(Check::compare("q2(P3)", "2", curves::elliptic_q2(m, Rational(1)).str()));
  } else if (m.poly() == parse_poly("1/3*(x+3)*(x^2+1)")) {
    rep.checks.push_back(Check::compare("q2(-3,0)", "10", curves::elliptic_q2(m, Rational(-3)).str()));
  } else if (m.poly() == parse_poly("1/3*x*(x-1)*(x+3)")) {
    const std::vector<std::pair<long, int>> expected{{-3, 1}, {0, -1}, {1, 1}};
    for (const auto& [z, sign] : expected)
      rep.checks.push_back(Check::compare("sign q2(" + std::to_string(z) + ",0)", sign_str(sign),
                                          sign_str(real_sign(curves::elliptic_q2(m, Rational(z))))));
  }
  rep.human = "y^2 = " + to_string(m.poly()) + "\n" + table.render(styled) + count_line + "\n";
  return rep;
}

Report cmd_hyper_q2(const Command& cmd, bool) {
  Report rep;
  const auto m = hyper_model(cmd, rep.input);
  if (!cmd.class_indices) throw UsageError("hyper-q2: --class is required");
  const auto s = curves::TwoTorsionClass::of(m.root_count(), index_list(*cmd.class_indices));
  rep.input["class"] = *cmd.class_indices;
  const auto q = curves::q2(m, s);
  rep.result["class"] = s.label();
  rep.result["q2"] = q.str();
  rep.result["sign"] = real_sign(q);
  rep.result["par"] = bits_to_json(curves::par_vec(m, s));
  rep.result["sg"] = bits_to_json(curves::sg_vec(m, s));
  std::ostringstream os;
  os << "q2(" << s.label() << ") = " << q << "  (sign " << sign_str(real_sign(q)) << ")\n";
  if (cmd.pair_with) {
    const auto t = curves::TwoTorsionClass::of(m.root_count(), index_list(*cmd.pair_with));
    rep.input["pair_with"] = *cmd.pair_with;
    const int e = curves::e2(s, t);
    const int rsign = curves::b2_real_sign(m, s, t);
    rep.result["pair"] = Json{{"class", t.label()}, {"e2", e}, {"real_sign", rsign}};
    const auto b = curves::b2(m, s, t);
    rep.result["pair"]["b2"] = b.str();
    os << "e2(" << s.label() << ", " << t.label() << ") = " << e << "\n";
    os << "b2(" << s.label() << ", " << t.label() << ") = " << b << "  (real sign " << sign_str(rsign) << ")\n";
  }
  rep.human = os.str();
  return rep;
}

Report cmd_hyper_table(const Command& cmd, bool styled) {
  Report rep;
  const auto m = hyper_model(cmd, rep.input);
  const auto classes = curves::h_classes(m);
  Table table({"class", "q2", "sign", "par", "sg"});
  Json rows = Json::array();
  long positive = 0, negative = 0;
  for (const auto& c : classes) {
    const auto q = curves::q2(m, c);
    const auto par = curves::par_vec(m, c);
    const auto sg = curves::sg_vec(m, c);
    (real_sign(q) > 0 ? positive : negative) += 1;
    rows.push_back(Json{{"class", c.label()},
                        {"q2", q.str()},
                        {"sign", real_sign(q)},
                        {"par", bits_to_json(par)},
                        {"sg", bits_to_json(sg)}});
    table.add_row({c.label(), q.str(), sign_str(real_sign(q)), bits_to_string(par), bits_to_string(sg)});
  }
  const long count = curves::signed_count(m);
  const auto product = curves::q2_product(m);
  const unsigned g = m.genus();
  rep.result["genus"] = g;
  rep.result["classes"] = rows;
  rep.result["positive"] = positive;
  rep.result["negative"] = negative;
  rep.result["signed_count"] = count;
  rep.result["q2_product"] = product.str();
  rep.result["components"] = curves::components(m).components.size();
  rep.checks.push_back(Check::compare("signed count = 2^g", std::to_string(1L << g), std::to_string(count)));
  rep.checks.push_back(Check::compare("product of q2", g == 1 ? "-1" : "1", product.str()));
  if (is_example_genus2(m)) {
    const std::vector<std::string> expected{"5", "-10", "10", "-5", "1"};
    for (std::size_t j = 1; j <= 5; ++j) {
      const auto c = curves::TwoTorsionClass::of(6, std::vector<std::size_t>{0, j});
      rep.checks.push_back(Check::compare("q2(" + c.label() + ")", expected[j - 1], curves::q2(m, c).str()));
    }
    rep.checks.push_back(Check::compare("positive classes", "10", std::to_string(positive)));
    rep.checks.push_back(Check::compare("negative classes", "6", std::to_string(negative)));
  }
  std::ostringstream os;
  os << "y^2 = " << to_string(m.polynomial()) << "  (genus " << g << ")\n" << table.render(styled);
  os << "positive " << positive << ", negative " << negative << ", signed count " << count << ", product of q2 "
     << product << "\n";
  rep.human = os.str();
  return rep;
}

Report cmd_signed_count(const Command& cmd, bool) {
  Report rep;
  long count = 0;
  unsigned g = 0;
  if (cmd.g || cmd.s || cmd.a) {
    const auto t = curve_type(cmd, rep.input);
    count = theta::signed_count(t);
    g = t.g;
    rep.result["model"] = "f2";
  } else if (cmd.roots) {
    const auto m = hyper_model(cmd, rep.input);
    count = curves::signed_count(m);
    g = m.genus();
    rep.result["model"] = "hyperelliptic";
  } else if (cmd.poly) {
    const auto m = elliptic_model(cmd, rep.input);
    count = curves::elliptic_signed_count(m);
    g = 1;
    rep.result["model"] = "elliptic";
  } else {
    throw UsageError("signed-count: give --g/--s/--a, --roots, or --poly");
  }
  rep.result["signed_count"] = count;
  rep.result["genus"] = g;
  rep.checks.push_back(Check::compare("signed count = 2^g", std::to_string(1L << g), std::to_string(count)));
  rep.human = "signed count: " + std::to_string(count) + " (2^g = " + std::to_string(1L << g) + ")\n";
  return rep;
}

Report cmd_theta_counts(const Command& cmd, bool) {
  Report rep;
  const auto t = curve_type(cmd, rep.input);
  const auto u1 = parse_bit_list(cmd.orientation.value_or(""));
  const auto eps = parse_bit_list(cmd.parity.value_or(""));
  // A single "0" abbreviates the zero vector.
  const auto fit = [&](std::vector<int> v, const char* what) {
    if (v.size() == 1 && v[0] == 0) v.assign(t.s, 0);
    if (v.empty()) v.assign(t.s, 0);
    if (v.size() != t.s)
      throw UsageError(std::string(what) + " needs " + std::to_string(t.s) + " bits");
    return v;
  };
  const auto u = fit(u1, "--orientation");
  const auto e = fit(eps, "--parity");
  rep.input["orientation"] = bits_to_json(u);
  rep.input["parity"] = bits_to_json(e);
  const theta::OrientationParity op{bits_to_mask(u), bits_to_mask(e)};
  const auto counts = theta::theta_counts(t, op);
  const auto closed = theta::theta_counts_closed_form(t, op);
  rep.result["even"] = counts.even;
  rep.result["odd"] = counts.odd;
  rep.result["closed_form"] = Json{{"even", closed.even}, {"odd", closed.odd}};
  rep.checks.push_back(Check::compare(
      "closed form (even,odd)", std::to_string(closed.even) + "," + std::to_string(closed.odd),
      std::to_string(counts.even) + "," + std::to_string(counts.odd)));
  rep.human = "type " + t.str() + ": even " + std::to_string(counts.even) + ", odd " + std::to_string(counts.odd) + "\n";
  return rep;
}

Report cmd_odd_signed_sum(const Command& cmd, bool) {
  Report rep;
  const auto t = curve_type(cmd, rep.input);
  if (!cmd.nu) throw UsageError("odd-signed-sum: --nu is required (e.g. 10|00)");
  const auto nu = theta::F2Vector::parse(*cmd.nu);
  rep.input["nu"] = nu.str();
  const long sum = theta::odd_theta_signed_sum(t, nu);
  rep.result["sum"] = sum;
  rep.checks.push_back(Check::compare("signed sum = 2^(g-1)", std::to_string(1L << (t.g - 1)), std::to_string(sum)));
  rep.human = "signed sum over real odd theta characteristics: " + std::to_string(sum) + "\n";
  return rep;
}

Report cmd_gw_trace_form(const Command& cmd, bool) {
  Report rep;
  if (!cmd.poly) throw UsageError("gw-trace-form: --poly is required");
  const Poly p = parse_poly(*cmd.poly);
  rep.input["poly"] = *cmd.poly;
  gw::GramMatrix gram;
  gw::GWElement form;
  if (cmd.alpha) {
    const Poly alpha = parse_poly(*cmd.alpha);
    rep.input["alpha"] = *cmd.alpha;
    form = gw::scaled_trace_transfer(p, alpha);
    gram = gw::trace_gram(p, alpha);
  } else {
    form = gw::trace_form_weighted(p);
    gram = gw::trace_gram(p, inverse_mod(p.derivative(), p));
  }
  Json g = Json::array();
  for (Eigen::Index i = 0; i < gram.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < gram.cols(); ++j) row.push_back(gram(i, j).str());
    g.push_back(row);
  }
  const auto inv = gw::invariants(form);
  rep.result["gram"] = g;
  rep.result["form"] = form.str();
  rep.result["invariants"] = to_json(inv);
  std::ostringstream os;
  os << "form: " << form.str() << "\nrank " << inv.rank << ", signature " << inv.signature << ", discriminant "
     << inv.discriminant << "\n";
  rep.human = os.str();
  return rep;
}

Report cmd_conjecture(const Command& cmd, bool) {
  Report rep;
  if (!cmd.genus) throw UsageError("conjecture: --genus is required");
  const unsigned g = *cmd.genus;
  rep.input["genus"] = g;
  gw::GWElement lhs;
  if (g == 1 && cmd.poly && !cmd.roots) {
    lhs = curves::conjecture_lhs_elliptic(elliptic_model(cmd, rep.input));
  } else {
    const auto m = hyper_model(cmd, rep.input);
    if (m.genus() != g)
      throw UsageError("conjecture: model has genus " + std::to_string(m.genus()) + ", --genus says " +
                       std::to_string(g));
    lhs = curves::conjecture_lhs_split(m);
  }
  const auto rhs = gw::conjecture_rhs(g);
  const auto li = gw::invariants(lhs);
  const auto ri = gw::invariants(rhs);
  const bool iso = gw::is_isometric(lhs, rhs);
  rep.result["lhs"] = Json{{"form", lhs.str()}, {"invariants", to_json(li)}};
  rep.result["rhs"] = Json{{"form", rhs.str()}, {"invariants", to_json(ri)}};
  rep.result["isometric"] = iso;
  rep.checks.push_back(Check::compare("rank", std::to_string(ri.rank), std::to_string(li.rank)));
  rep.checks.push_back(Check::compare("signature", std::to_string(ri.signature), std::to_string(li.signature)));
  rep.checks.push_back(Check::compare("discriminant", ri.discriminant.str(), li.discriminant.str()));
  if (g == 1) {
    rep.checks.push_back(Check::compare("isometric", "true", iso ? "true" : "false"));
  } else {
    rep.checks.push_back(Check::reported("isometric (Hasse invariants)", "true", iso ? "true" : "false"));
  }
  std::ostringstream os;
  os << "lhs: " << lhs.str() << "\nrhs: " << rhs.str() << "\nisometric: " << (iso ? "true" : "false") << "\n";
  rep.human = os.str();
  return rep;
}

Report cmd_verify(const Command& cmd, bool styled) {
  Report rep;
  rep.input["seed"] = cmd.seed;
  verify::AcceptanceOptions opts;
  opts.seed = cmd.seed;
  if (cmd.inject_fault) {
    if (*cmd.inject_fault != "q2-sign") throw UsageError("unknown fault '" + *cmd.inject_fault + "'");
    opts.q2 = verify::flipped_q2_sign();
    rep.input["inject_fault"] = *cmd.inject_fault;
  }
  const auto results = verify::run_acceptance(opts);
  Json crit = Json::array();
  std::ostringstream os;
  for (const auto& r : results) {
    crit.push_back(Json{{"id", r.id}, {"title", r.title}, {"passed", r.passed()}});
    for (const auto& c : r.checks)
      if (c.status != Check::Status::Pass) rep.checks.push_back(c);
    std::string tag = r.passed() ? "PASS" : "FAIL";
    if (styled) tag = std::string(r.passed() ? "\x1b[32m" : "\x1b[31m") + tag + "\x1b[0m";
    os << "[" << tag << "] " << r.id << ". " << r.title << " (" << r.summary() << ")\n";
  }
  // Only failing and reported items are listed individually.
  rep.result["criteria"] = crit;
  rep.human = os.str();
  return rep;
}

Report dispatch(const Command& cmd, bool styled) {
  if (cmd.name == "elliptic-q2") return cmd_elliptic_q2(cmd, styled);
  if (cmd.name == "elliptic-table") return cmd_elliptic_table(cmd, styled);
  if (cmd.name == "hyper-q2") return cmd_hyper_q2(cmd, styled);
  if (cmd.name == "hyper-table") return cmd_hyper_table(cmd, styled);
  if (cmd.name == "signed-count") return cmd_signed_count(cmd, styled);
  if (cmd.name == "theta-counts") return cmd_theta_counts(cmd, styled);
  if (cmd.name == "odd-signed-sum") return cmd_odd_signed_sum(cmd, styled);
  if (cmd.name == "gw-trace-form") return cmd_gw_trace_form(cmd, styled);
  if (cmd.name == "conjecture") return cmd_conjecture(cmd, styled);
  if (cmd.name == "verify") return cmd_verify(cmd, styled);
  throw UsageError("unknown command '" + cmd.name + "'");
}

}  // namespace

std::optional<Command> parse_command(const std::vector<std::string>& args, std::string* help) {
  CLI::App app{"Square-class pairings on 2-torsion of real and rational Jacobians"};
  app.name("twotors");
  app.require_subcommand(1, 1);
  Command cmd;
  std::optional<std::string> g, s, a, genus;
  for (const auto& [name, description] : kCommands) {
    CLI::App* sub = app.add_subcommand(name, description);
    sub->add_flag("--json", cmd.json, "emit one JSON object");
    sub->add_option("--roots", cmd.roots, "comma-separated rational Weierstrass roots");
    sub->add_option("--lead", cmd.lead, "leading coefficient u (default 1)");
    sub->add_option("--poly", cmd.poly, "polynomial in x, e.g. \"1/3*x*(x-1)*(x+3)\"");
    sub->add_option("--alpha", cmd.alpha, "weight polynomial for gw-trace-form");
    sub->add_option("--class", cmd.class_indices, "root indices of a 2-torsion class, e.g. 0,1");
    sub->add_option("--pair-with", cmd.pair_with, "second class for b2/e2");
    sub->add_option("--g", cmd.g, "genus of the topological type");
    sub->add_option("--s", cmd.s, "number of real components minus one");
    sub->add_option("--a", cmd.a, "1 if the real locus does not divide, else 0");
    sub->add_option("--orientation", cmd.orientation, "semi-orientation offset bits u1");
    sub->add_option("--parity", cmd.parity, "parity bits eps");
    sub->add_option("--nu", cmd.nu, "F2 vector c_u|c_l, e.g. 10|00");
    sub->add_option("--genus", cmd.genus, "genus for conjecture");
    sub->add_option("--seed", cmd.seed, "seed for randomized verify items");
    if (name == "verify") sub->add_option("--inject-fault", cmd.inject_fault)->group("");
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    if (help) {
      const auto subs = app.get_subcommands();
      *help = subs.empty() ? app.help() : subs.front()->help();
    }
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  for (const auto* sub : app.get_subcommands()) cmd.name = sub->get_name();
  return cmd;
}

Outcome run(const Command& cmd, bool styled) {
  Outcome out;
  Report rep;
  try {
    rep = dispatch(cmd, styled);
  } catch (const UsageError& e) {
    out.err = std::string("usage error: ") + e.what() + "\n";
    out.exit_code = kUsageError;
    return out;
  } catch (const ParseError& e) {
    out.err = std::string("parse error: ") + e.what() + "\n";
    out.exit_code = kUsageError;
    return out;
  } catch (const MathError& e) {
    out.err = std::string("domain error: ") + e.what() + "\n";
    out.exit_code = kDomainError;
    if (cmd.json) {
      Json j{{"command", cmd.name},
             {"input", rep.input},
             {"result", Json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}}},
             {"paper_checks", Json::array()}};
      out.out = j.dump() + "\n";
    }
    return out;
  }
  out.exit_code = rep.hard_failure() ? kVerificationFailure : kSuccess;
  if (cmd.json) {
    Json checks = Json::array();
    for (const auto& c : rep.checks) checks.push_back(to_json(c));
    Json j{{"command", cmd.name}, {"input", rep.input}, {"result", rep.result}, {"paper_checks", checks}};
    out.out = j.dump() + "\n";
  } else {
    out.out = rep.human + render_checks(rep.checks, styled);
  }
  return out;
}

Outcome run_cli(const std::vector<std::string>& args, bool styled) {
  try {
    std::string help;
    const auto cmd = parse_command(args, &help);
    if (!cmd) return Outcome{help, "", kSuccess};
    return run(*cmd, styled);
  } catch (const UsageError& e) {
    return Outcome{"", std::string("usage error: ") + e.what() + "\n", kUsageError};
  }
}

}  // namespace twotors::cli
