#include "vvmf/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "vvmf/errors.hpp"

namespace vvmf::cli {

void RunConfig::validate() const {
  if (order < 8) throw ParseError("--order must be at least 8");
  if (!(tol > 0.0 && tol <= 1e-2)) throw ParseError("--tol must lie in (0, 1e-2]");
  if (samples == 0) throw ParseError("--samples must be positive");
}

namespace {

using nlohmann::json;

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x == 0.0 ? 0.0 : x);
  return buf;
}

std::string format_phase(const Phase& p) {
  const Fraction& r = p.exponent();
  if (r == Fraction(0)) return "1";
  if (r == Fraction(1, 2)) return "-1";
  if (r == Fraction(1, 4)) return "i";
  if (r == Fraction(3, 4)) return "-i";
  return "e(" + r.to_string() + ")";
}

std::string format_entry(const RepMatrix& m, std::size_t i, std::size_t j) {
  if (m.is_exact()) {
    const auto& e = m.at(i, j);
    return e ? format_phase(*e) : "0";
  }
  const Complex v = m.value(i, j);
  if (std::abs(v) < 1e-13) return "0";
  std::string s = num(v.real());
  if (std::abs(v.imag()) >= 1e-13) s += (v.imag() < 0 ? "-" : "+") + num(std::abs(v.imag())) + "i";
  return s;
}

void print_matrix(std::ostream& out, const RepMatrix& m, const std::string& indent = "  ") {
  std::vector<std::size_t> width(m.cols(), 1);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      width[j] = std::max(width[j], format_entry(m, i, j).size());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << indent;
    for (std::size_t j = 0; j < m.cols(); ++j)
      out << (j ? "  " : "") << std::setw(static_cast<int>(width[j])) << format_entry(m, i, j);
    out << "\n";
  }
}

std::string format_exponent(const Exponent& e) {
  return e.exact ? e.exact->to_string() : num(e.value);
}

json exponents_json(const ExponentMatrix& om) {
  json a = json::array();
  for (const auto& e : om.entries) {
    if (e.exact)
      a.push_back(e.exact->to_string());
    else
      a.push_back(e.value);
  }
  return a;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t k = 0; k < parts.size(); ++k) s += (k ? sep : "") + parts[k];
  return s;
}

bool looks_like_cusp(const std::string& text) {
  if (text == "oo" || text == "inf") return true;
  if (text.empty()) return false;
  return std::all_of(text.begin(), text.end(),
                     [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || ch == '-'; });
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& ex) {
    throw ParseError(path + ": " + ex.what());
  }
}

Int parse_int(const std::string& text) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw ParseError("not an integer: " + text);
  }
  if (used != text.size()) throw ParseError("not an integer: " + text);
  return static_cast<Int>(v);
}

// ---- forms -----------------------------------------------------------------

struct FormChoice {
  VVMF form;
  CongruenceSubgroup domain;
};

FormChoice parse_form(const std::string& spec, const RunConfig& cfg, Int file_weight) {
  if (spec == "zK") return {scalar_form(CongruenceSubgroup::gamma(2), 0, zk_function(cfg.order)), CongruenceSubgroup::gamma(2)};
  if (spec == "zH")
    return {scalar_form(CongruenceSubgroup::gamma0(2), 0, zh_function(cfg.order)), CongruenceSubgroup::gamma0(2)};
  if (spec == "delta") return {scalar_form(CongruenceSubgroup::full(), 12, delta_function(cfg.order)), CongruenceSubgroup::full()};
  if (spec == "j") return {scalar_form(CongruenceSubgroup::full(), 0, j_function(cfg.order)), CongruenceSubgroup::full()};
  const json j = read_json_file(spec);
  const QSeries series = qseries_from_json(j.contains("series") ? j.at("series") : j);
  CongruenceSubgroup group = CongruenceSubgroup::full();
  Int weight = file_weight;
  try {
    if (j.contains("group")) group = CongruenceSubgroup::parse(j.at("group").get<std::string>());
    if (j.contains("weight")) weight = j.at("weight").get<Int>();
  } catch (const json::exception& ex) {
    throw ParseError(spec + ": " + ex.what());
  }
  const double tol = std::min(1e-13, cfg.tol);
  ScalarFunction f{spec, [series, tol](Complex tau) { return series.evaluate(tau, tol); }, series};
  return {scalar_form(group, weight, f), group};
}

QSeries named_series(const std::string& name, Int order) {
  if (name == "zK") return hauptmodul_gamma2(order);
  if (name == "zH") return hauptmodul_gamma0_2(order);
  if (name == "delta") return delta_power(12, order);
  if (name == "j") return klein_j_series(order);
  if (name == "eta") return eta_expansion(order);
  throw ParseError("unknown series '" + name + "' (expected zK, zH, delta, j or eta)");
}

// Errors caused by the request rather than by a failed check.
bool is_usage_error(const Error& e) {
  return dynamic_cast<const ParseError*>(&e) || dynamic_cast<const DomainMismatch*>(&e) ||
         dynamic_cast<const LengthMismatch*>(&e) || dynamic_cast<const NotTransversal*>(&e) ||
         dynamic_cast<const LevelTooLarge*>(&e) || dynamic_cast<const UnsupportedAmbientGroup*>(&e) ||
         dynamic_cast<const KernelOutOfScope*>(&e) || dynamic_cast<const NoCharacterLift*>(&e);
}

GroupElement cusp_translation(const CongruenceSubgroup& g) {
  return GroupElement::t().pow(cusp_width(g, Cusp::infinity()));
}

// ---- commands ----------------------------------------------------------------

int cmd_cusps(const std::string& spec, const RunConfig& cfg, std::ostream& out) {
  const CongruenceSubgroup h = CongruenceSubgroup::parse(spec);
  const CuspTableRow row = cusp_row(h);
  Int sum = 0;
  for (Int w : row.widths) sum += w;
  const bool ok = sum == row.index;
  if (cfg.json) {
    out << json{{"schema", "vvmf.cusps/1"},
                {"group", row.group},
                {"index", row.index},
                {"cusps", row.cusps},
                {"widths", row.widths},
                {"width_sum", sum}}
               .dump(2)
        << "\n";
  } else {
    std::vector<std::size_t> w(row.cusps.size());
    for (std::size_t k = 0; k < w.size(); ++k)
      w[k] = std::max(row.cusps[k].size(), std::to_string(row.widths[k]).size());
    out << "group   " << row.group << "\n";
    out << "index   " << row.index << "\n";
    out << "cusps  ";
    for (std::size_t k = 0; k < w.size(); ++k) out << " " << std::setw(static_cast<int>(w[k])) << row.cusps[k];
    out << "\nwidths ";
    for (std::size_t k = 0; k < w.size(); ++k) out << " " << std::setw(static_cast<int>(w[k])) << row.widths[k];
    out << "\nsum     " << sum << (ok ? "" : "  (does not match the index)") << "\n";
  }
  return ok ? kExitPass : kExitVerificationFailure;
}

struct InduceArgs {
  std::string group = "Gamma(1)", subgroup, rep = "trivial", at;
  bool exponents = false;
};

int cmd_induce(const InduceArgs& a, const RunConfig& cfg, std::ostream& out) {
  const CongruenceSubgroup g = CongruenceSubgroup::parse(a.group);
  const CongruenceSubgroup h = CongruenceSubgroup::parse(a.subgroup);
  if (!is_subgroup(h, g)) throw DomainMismatch(h.name() + " is not contained in " + g.name());
  const Representation rho = parse_rep(a.rep, h);

  RepMatrix m;
  std::vector<GroupElement> basis;
  std::optional<ExponentMatrix> omega;
  std::string at_kind;
  if (looks_like_cusp(a.at)) {
    const CuspSystem sys = cusp_system(h, Cusp::parse(a.at), g);
    m = induced_cusp_blocks(rho, sys);
    basis = sys.transversal();
    at_kind = "cusp";
    if (a.exponents) {
      std::vector<ExponentMatrix> parts;
      std::vector<Int> widths;
      for (const auto& cls : sys.classes) {
        parts.push_back(exponent_of(rho, cls.stabilizer_generator));
        widths.push_back(cls.width);
      }
      omega = induced_exponent(parts, widths);
    }
  } else {
    const GroupElement x = parse_element(a.at);
    basis = cusp_system(h, Cusp::infinity(), g).transversal();
    const InducedRep ind(rho, transversal_table(h, g, basis));
    m = ind(x);
    at_kind = "element";
    if (a.exponents) omega = diagonalize(m);
  }

  std::vector<std::string> names;
  for (const auto& b : basis) names.push_back(b.to_string());
  if (cfg.json) {
    json j{{"schema", "vvmf.induce/1"}, {"group", g.name()},      {"subgroup", h.name()},
           {"rep", rho.name()},         {"rank", rho.rank()},      {"at", a.at},
           {"at_kind", at_kind},        {"transversal", names},    {"matrix", to_json(m)}};
    if (omega) j["exponents"] = exponents_json(*omega);
    out << j.dump(2) << "\n";
  } else {
    out << "Ind from " << h.name() << " to " << g.name() << " of " << rho.name() << " (rank "
        << rho.rank() << "), size " << m.rows() << "\n";
    out << "transversal: " << join(names, " ") << "\n";
    out << "value at " << at_kind << " " << a.at << ":\n";
    print_matrix(out, m);
    if (omega) {
      std::vector<std::string> es;
      for (const auto& e : omega->entries) es.push_back(format_exponent(e));
      out << "exponents: " << join(es, " ") << "\n";
    }
  }
  return kExitPass;
}

struct LiftArgs {
  std::string group, subgroup, form = "zK", via;
  Int weight = 0;
  bool verify = false;
};

int cmd_lift(const LiftArgs& a, const RunConfig& cfg, std::ostream& out, bool force_verify) {
  const FormChoice fc = parse_form(a.form, cfg, a.weight);
  if (!a.subgroup.empty() && !(CongruenceSubgroup::parse(a.subgroup) == fc.domain))
    throw DomainMismatch("form " + a.form + " lives on " + fc.domain.name() + ", not " +
                         CongruenceSubgroup::parse(a.subgroup).name());
  const CongruenceSubgroup h = fc.domain;
  const CongruenceSubgroup g =
      a.group.empty() ? (force_verify ? h : CongruenceSubgroup::full()) : CongruenceSubgroup::parse(a.group);
  if (!is_subgroup(h, g)) throw DomainMismatch(h.name() + " is not contained in " + g.name());

  VVMF x = fc.form;
  std::vector<std::string> chain{h.name()};
  if (!a.via.empty()) {
    const CongruenceSubgroup k = CongruenceSubgroup::parse(a.via);
    if (!is_subgroup(h, k) || !is_subgroup(k, g))
      throw DomainMismatch("need " + h.name() + " <= " + k.name() + " <= " + g.name());
    x = lift(x, coset_table(h, k));
    chain.push_back(k.name());
    x = lift(x, coset_table(k, g));
  } else if (!(h == g)) {
    x = lift(x, coset_table(h, g));
  }
  if (!(h == g) || !a.via.empty()) chain.push_back(g.name());

  const auto gens = generators(g);
  const GroupElement tinf = cusp_translation(g);
  const ExponentMatrix omega = exponent_of(x.multiplier(), tinf);
  const bool verify = a.verify || force_verify;
  std::optional<VerifyResult> vr;
  if (verify) vr = verify_functional_equation(x, gens, sample_points(cfg.samples, cfg.seed), cfg.tol);

  if (cfg.json) {
    json mult = json::array();
    for (const auto& gen : gens)
      mult.push_back({{"generator", gen.to_string()}, {"matrix", to_json(x.multiplier()(gen))}});
    json j{{"schema", "vvmf.lift/1"},
           {"form", a.form},
           {"weight", x.weight()},
           {"chain", chain},
           {"components", x.descriptions()},
           {"multiplier", mult},
           {"cusp_generator", tinf.to_string()},
           {"exponents", exponents_json(omega)}};
    if (vr) {
      j["residual"] = vr->residual;
      j["tolerance"] = cfg.tol;
      j["passed"] = vr->passed;
    }
    out << j.dump(2) << "\n";
  } else {
    out << "form " << a.form << " (weight " << x.weight() << ") lifted along " << join(chain, " -> ")
        << ", rank " << x.rank() << "\n";
    out << "components:\n";
    for (std::size_t k = 0; k < x.rank(); ++k) out << "  [" << k << "] " << x.descriptions()[k] << "\n";
    for (const auto& gen : gens) {
      out << "multiplier at " << gen.to_string() << ":\n";
      print_matrix(out, x.multiplier()(gen));
    }
    std::vector<std::string> es;
    for (const auto& e : omega.entries) es.push_back(format_exponent(e));
    out << "exponents at oo (" << tinf.to_string() << "): " << join(es, " ") << "\n";
    if (vr)
      out << "residual " << sci(vr->residual) << " over " << cfg.samples << " points, tolerance "
          << sci(cfg.tol) << ": " << (vr->passed ? "PASS" : "FAIL") << "\n";
  }
  return vr && !vr->passed ? kExitVerificationFailure : kExitPass;
}

struct ExistArgs {
  std::string group = "Gamma(1)", rep = "standard";
};

Representation exist_rep(const std::string& spec, const CongruenceSubgroup& g) {
  const FiniteQuotient q = finite_quotient(CongruenceSubgroup::gamma(2), g);
  if (spec == "regular") return regular_rep(q);
  for (const auto& r : quotient_irreps(q))
    if (r.name() == spec) return r;
  if (spec == "trivial" || spec == "sign" || spec == "standard")
    throw DomainMismatch("no irreducible representation '" + spec + "' of " + g.name() + "/Gamma(2)");
  const Representation rho = rep_from_json(read_json_file(spec));
  if (!(rho.domain() == g)) throw DomainMismatch("representation lives on " + rho.domain().name());
  return rho;
}

int cmd_exist(const ExistArgs& a, const RunConfig& cfg, std::ostream& out) {
  const CongruenceSubgroup g = CongruenceSubgroup::parse(a.group);
  const Representation rho = exist_rep(a.rep, g);
  const Construction c = construct_vvmf(rho, cfg.seed);
  const auto gens = generators(g);
  const VerifyResult vr =
      verify_functional_equation(c.form, gens, sample_points(cfg.samples, cfg.seed), cfg.tol);
  const std::size_t npts = std::max<std::size_t>(cfg.samples, 4 * rho.rank());
  const double indep = component_independence(c.form, sample_points(npts, cfg.seed));
  const bool indep_ok = indep >= 1e-8;
  const bool ok = vr.passed && indep_ok;

  if (cfg.json) {
    json mult = json::object();
    for (std::size_t i = 0; i < c.irrep_labels.size(); ++i) mult[c.irrep_labels[i]] = c.multiplicities[i];
    json j{{"schema", "vvmf.exist/1"},
           {"group", g.name()},
           {"rep", rho.name()},
           {"rank", rho.rank()},
           {"multiplicities", mult},
           {"base_function", c.base_function},
           {"tau0", {c.tau0.real(), c.tau0.imag()}},
           {"separating_independence", c.separating_independence},
           {"block_components", c.block_components},
           {"components", c.form.descriptions()},
           {"residual", vr.residual},
           {"independence", indep},
           {"independence_points", npts},
           {"tolerance", cfg.tol},
           {"passed", ok}};
    out << j.dump(2) << "\n";
  } else {
    out << "weight-0 form for " << rho.name() << " (rank " << rho.rank() << ") on " << g.name() << "\n";
    out << "multiplicities:";
    for (std::size_t i = 0; i < c.irrep_labels.size(); ++i)
      out << " " << c.irrep_labels[i] << "=" << c.multiplicities[i];
    out << "\nseparating function built from " << c.base_function << " at tau0 = " << num(c.tau0.real())
        << (c.tau0.imag() < 0 ? "-" : "+") << num(std::abs(c.tau0.imag())) << "i"
        << " (translate independence " << sci(c.separating_independence) << ")\n";
    out << "projected components:\n";
    for (std::size_t k = 0; k < c.block_components.size(); ++k)
      out << "  y[" << k << "] = " << c.block_components[k] << "\n";
    out << "form = B y, with B an intertwiner into the block decomposition\n";
    out << "residual " << sci(vr.residual) << " over " << cfg.samples << " points, tolerance "
        << sci(cfg.tol) << ": " << (vr.passed ? "PASS" : "FAIL") << "\n";
    out << "independence " << sci(indep) << " over " << npts << " points: "
        << (indep_ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? kExitPass : kExitVerificationFailure;
}

std::string format_power(Int n, Int width, const Fraction& offset) {
  const Fraction e = (Fraction(n) + offset) / Fraction(width);
  if (e == Fraction(0)) return "1";
  if (e == Fraction(1)) return "q";
  return "q^" + (e.den() == 1 ? e.to_string() : "(" + e.to_string() + ")");
}

int cmd_qseries(const std::string& name, Int terms, const RunConfig& cfg, std::ostream& out) {
  if (terms < 1) throw ParseError("--order must be positive");
  QSeries f = named_series(name, cfg.order);
  if (f.valuation() + terms > f.order()) f = named_series(name, f.valuation() + terms + 8);
  const Int first = f.valuation();
  const QSeries shown = f.truncated(first + terms);
  if (cfg.json) {
    out << json{{"schema", "vvmf.qseries/1"}, {"name", name}, {"series", to_json(shown)}}.dump(2) << "\n";
  } else {
    out << name << " (width " << f.width() << ", offset " << f.offset().to_string() << ")\n";
    std::vector<std::pair<std::string, std::string>> rows;
    std::size_t w = 0;
    for (Int n = first; n < first + terms; ++n) {
      rows.emplace_back(format_power(n, f.width(), f.offset()), f.coefficient(n).get_str());
      w = std::max(w, rows.back().first.size());
    }
    for (const auto& [p, c] : rows) out << "  " << std::left << std::setw(static_cast<int>(w)) << p << std::right << "  " << c << "\n";
  }
  return kExitPass;
}

}  // namespace

// ---- public helpers --------------------------------------------------------

CuspTableRow cusp_row(const CongruenceSubgroup& h) {
  const Int m = static_cast<Int>(coset_table(h).size());
  if (m != h.index()) throw ArithmeticOverflow("coset enumeration disagrees with the index formula");
  const std::vector<Cusp> orbits = cusp_orbits(h);
  for (const auto& row : cusp_table_fixture()) {
    if (!(CongruenceSubgroup::parse(row.group) == h)) continue;
    std::vector<Cusp> reps;
    for (const auto& s : row.cusps) reps.push_back(Cusp::parse(s));
    if (reps.size() != orbits.size())
      throw OracleMismatch(h.name() + ": tabulated cusp count differs from the computed one");
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t k = i + 1; k < reps.size(); ++k)
        if (cusps_equivalent(h, reps[i], reps[k]))
          throw OracleMismatch(h.name() + ": tabulated cusps " + row.cusps[i] + " and " + row.cusps[k] +
                               " are equivalent");
    CuspTableRow out{h.name(), m, row.cusps, {}};
    for (const auto& c : reps) out.widths.push_back(cusp_width(h, c));
    return out;
  }
  CuspTableRow out{h.name(), m, {}, {}};
  for (const auto& c : orbits) {
    out.cusps.push_back(c.to_string());
    out.widths.push_back(cusp_width(h, c));
  }
  return out;
}

CuspTableRow table_row_from_json(const json& j) {
  try {
    CuspTableRow row{j.at("group").get<std::string>(), j.at("index").get<Int>(),
                    j.at("cusps").get<std::vector<std::string>>(), j.at("widths").get<std::vector<Int>>()};
    if (row.cusps.size() != row.widths.size()) throw LengthMismatch("cusps and widths differ in length");
    return row;
  } catch (const json::exception& ex) {
    throw ParseError(std::string("cusps JSON: ") + ex.what());
  }
}

Representation rep_from_json(const json& j) {
  try {
    const CongruenceSubgroup domain = CongruenceSubgroup::parse(j.at("domain").get<std::string>());
    const CongruenceSubgroup kernel = CongruenceSubgroup::parse(j.at("kernel").get<std::string>());
    if (!is_subgroup(kernel, domain)) throw DomainMismatch(kernel.name() + " is not inside " + domain.name());
    const CosetTable table = coset_table(kernel, domain);
    std::vector<RepMatrix> mats;
    for (const auto& m : j.at("matrices")) mats.push_back(rep_matrix_from_json(m));
    if (mats.size() != table.size())
      throw LengthMismatch(std::to_string(mats.size()) + " matrices for " + std::to_string(table.size()) +
                           " cosets");
    const std::string name = j.contains("name") ? j.at("name").get<std::string>() : "file";
    return finite_quotient_rep(table, std::move(mats), name);
  } catch (const json::exception& ex) {
    throw ParseError(std::string("representation JSON: ") + ex.what());
  }
}

Representation parse_rep(const std::string& spec, const CongruenceSubgroup& domain) {
  if (spec == "trivial") return trivial_rep(domain);
  if (spec == "nu") return nu_character(domain);
  if (spec.rfind("nu^", 0) == 0)
    return tensor_with_character(trivial_rep(domain), nu_character(domain), parse_int(spec.substr(3)));
  const Representation rho = rep_from_json(read_json_file(spec));
  if (!(rho.domain() == domain))
    throw DomainMismatch("representation in " + spec + " lives on " + rho.domain().name() + ", not " +
                         domain.name());
  return rho;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lift modular forms of finite-index subgroups to vector-valued modular forms.", "vvmf"};
  app.footer(
      "Environment:\n  VVMF_PRECISION  evaluation precision; only \"double\" is available (default).\n"
      "Exit codes: 0 pass, 1 verification failure, 2 usage error.");
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--order", cfg.order, "Truncation order N of q-expansions (at least 8)")
      ->capture_default_str();
  app.add_option("--tol", cfg.tol, "Verification tolerance, in (0, 1e-2]")->capture_default_str();
  app.add_option("--samples", cfg.samples, "Number of sample points")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for sample points and random intertwiners")->capture_default_str();
  app.add_flag("--json", cfg.json, "Emit JSON instead of text");

  std::string cusp_group;
  auto* cusps = app.add_subcommand("cusps", "Index, cusp representatives and widths of a group");
  cusps->add_option("group", cusp_group, "Gamma(N), Gamma0(N) or Gamma1(N)")->required();

  InduceArgs ia;
  auto* induce_cmd = app.add_subcommand("induce", "Value of an induced representation");
  induce_cmd->add_option("--group,--ambient", ia.group, "Ambient group G")->capture_default_str();
  induce_cmd->add_option("--subgroup", ia.subgroup, "Subgroup H")->required();
  induce_cmd->add_option("--rep", ia.rep, "trivial, nu, nu^k or a representation JSON file")
      ->capture_default_str();
  induce_cmd->add_option("--at", ia.at, "Group element (word or [[a,b],[c,d]]) or cusp (p/q, oo)")
      ->required();
  induce_cmd->add_flag("--exponents", ia.exponents, "Also print the exponent matrix");

  LiftArgs la;
  auto add_form_options = [&la](CLI::App* sub) {
    sub->add_option("--group,--ambient", la.group, "Ambient group G");
    sub->add_option("--subgroup", la.subgroup, "Subgroup H (must be the domain of the form)");
    sub->add_option("--form", la.form, "zK, zH, delta, j or a q-series JSON file")->capture_default_str();
    sub->add_option("--via", la.via, "Intermediate group for a lift in two stages");
    sub->add_option("--weight", la.weight, "Weight of a form read from a file")->capture_default_str();
  };
  auto* lift_cmd = app.add_subcommand("lift", "Lift a scalar form to a vector-valued form");
  add_form_options(lift_cmd);
  lift_cmd->add_flag("--verify", la.verify, "Check the transformation law on the generators of G");
  auto* verify_cmd = app.add_subcommand("verify", "Check the transformation law of a (lifted) form");
  add_form_options(verify_cmd);

  ExistArgs ea;
  auto* exist_cmd = app.add_subcommand("exist", "Construct a weight-0 form with a given multiplier");
  exist_cmd->add_option("--rep", ea.rep, "trivial, sign, standard, regular or a representation JSON file")
      ->capture_default_str();
  exist_cmd->add_option("--group,--ambient", ea.group, "Gamma(1) or Gamma0(2)")->capture_default_str();

  std::string series_name;
  Int terms = 8;
  auto* qs = app.add_subcommand("qseries", "Leading coefficients of a named q-expansion");
  qs->add_option("name", series_name, "zK, zH, delta, j or eta")->required();
  qs->add_option("--order", terms, "Number of coefficients to print, from the leading one")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (const char* prec = std::getenv("VVMF_PRECISION"); prec && std::string(prec) != "double")
      throw ParseError(std::string("VVMF_PRECISION=") + prec + " is not available; use double");
    cfg.validate();
    if (cusps->parsed()) return cmd_cusps(cusp_group, cfg, out);
    if (induce_cmd->parsed()) return cmd_induce(ia, cfg, out);
    if (lift_cmd->parsed()) return cmd_lift(la, cfg, out, false);
    if (verify_cmd->parsed()) return cmd_lift(la, cfg, out, true);
    if (exist_cmd->parsed()) return cmd_exist(ea, cfg, out);
    if (qs->parsed()) return cmd_qseries(series_name, terms, cfg, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return is_usage_error(e) ? kExitUsage : kExitVerificationFailure;
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"vvmf"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace vvmf::cli
