// conecalc: command-line front end over the cone/doubling library.
// Exit codes: 0 all checks pass, 1 a physics check failed, 2 input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "conecalc/cone_geometry.hpp"
#include "conecalc/constraint_solver.hpp"
#include "conecalc/domain_partition.hpp"
#include "conecalc/dynamics.hpp"
#include "conecalc/field_io.hpp"
#include "conecalc/spectral_verifier.hpp"

using nlohmann::ordered_json;
using namespace conecalc;

namespace {

struct RunConfig {
  std::array<int, 4> dims{8, 8, 8, 8};
  std::array<double, 4> spacing{0.5, 0.5, 0.5, 0.5};
  double M = 1.0;
  double tol_identity = 1e-10;
  double tol_fft = 1e-8;
  double epsilon = 1e-6;  // i-epsilon width in units of M^2
  std::uint64_t seed = 12345;
  std::string format = "json";
};

void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open config " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput(std::string("config parse: ") + e.what());
  }
  if (j.contains("dims")) j.at("dims").get_to(cfg.dims);
  if (j.contains("spacing")) j.at("spacing").get_to(cfg.spacing);
  if (j.contains("M")) cfg.M = j.at("M").get<double>();
  if (j.contains("tol_identity")) cfg.tol_identity = j.at("tol_identity").get<double>();
  if (j.contains("tol_fft")) cfg.tol_fft = j.at("tol_fft").get<double>();
  if (j.contains("epsilon")) cfg.epsilon = j.at("epsilon").get<double>();
  if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("format")) cfg.format = j.at("format").get<std::string>();
}

std::vector<double> parse_doubles(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stod(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw MalformedInput("bad number '" + tok + "'");
    }
  }
  return out;
}

FourMomentum parse_q(const std::string& s) {
  const std::vector<double> v = parse_doubles(s);
  if (v.size() != 4) throw MalformedInput("expected 4 comma-separated components");
  return {v[0], v[1], v[2], v[3]};
}

ConformalTransform parse_op(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "inversion") {
    if (!rest.empty()) throw MalformedInput("inversion takes no parameters");
    return ConformalTransform::inversion();
  }
  if (kind == "translation") return ConformalTransform::translation(parse_q(rest));
  if (kind == "special") return ConformalTransform::special_conformal(parse_q(rest));
  if (kind == "dilate") {
    const std::vector<double> v = parse_doubles(rest);
    if (v.size() != 1) throw MalformedInput("dilate:lambda");
    return ConformalTransform::dilatation(v[0]);
  }
  if (kind == "lorentz") {
    const auto c2 = rest.find(':');
    if (c2 == std::string::npos) throw MalformedInput("lorentz:boost:... or lorentz:rot:...");
    const std::string sub = rest.substr(0, c2);
    const std::vector<double> v = parse_doubles(rest.substr(c2 + 1));
    if (sub == "boost") {
      if (v.size() != 2) throw MalformedInput("lorentz:boost:axis,rapidity");
      return ConformalTransform::lorentz(
          lorentz_boost(static_cast<int>(v[0]), v[1]));
    }
    if (sub == "rot") {
      if (v.size() != 3) throw MalformedInput("lorentz:rot:i,j,angle");
      return ConformalTransform::lorentz(
          spatial_rotation(static_cast<int>(v[0]), static_cast<int>(v[1]), v[2]));
    }
    throw MalformedInput("unknown lorentz form '" + sub + "'");
  }
  throw MalformedInput("unknown op '" + kind + "'");
}

MomentumLatticeField read_field(const std::string& path) {
  if (path == "-") return load_field_json(std::cin);
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open " + path);
  return load_field_json(in);
}

void write_field(const std::string& path, const MomentumLatticeField& f) {
  if (path.empty() || path == "-") {
    save_field_json(std::cout, f);
    return;
  }
  std::ofstream out(path);
  if (!out) throw MalformedInput("cannot write " + path);
  save_field_json(out, f);
}

std::optional<Corruption> parse_corrupt(const std::string& spec) {
  if (spec.empty()) return std::nullopt;
  Corruption c;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw MalformedInput("corrupt needs key=value pairs");
    const std::string key = tok.substr(0, eq);
    const std::string val = tok.substr(eq + 1);
    if (key == "site") {
      c.site = static_cast<std::size_t>(std::stoull(val));
    } else if (key == "eps") {
      c.eps = std::stod(val);
    } else if (key == "target") {
      if (val == "q5") c.target = Corruption::Target::Q5;
      else if (val == "value") c.target = Corruption::Target::Value;
      else throw MalformedInput("corrupt target must be q5 or value");
    } else {
      throw MalformedInput("unknown corrupt key '" + key + "'");
    }
  }
  return c;
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << '\n'; }

ordered_json report_json(const ResidualReport& r) { return to_json(r); }

void emit_reports(const std::vector<ResidualReport>& reports,
                  const std::string& format) {
  if (format == "csv") {
    std::cout << "name,linf,l2,tolerance,pass\n";
    for (const auto& r : reports)
      std::cout << r.name << ',' << r.linf << ',' << r.l2 << ',' << r.tolerance
                << ',' << (r.pass ? "true" : "false") << '\n';
    return;
  }
  ordered_json arr = ordered_json::array();
  for (const auto& r : reports) arr.push_back(report_json(r));
  emit(arr);
}

// -------------------------------------------------------------------------

int cmd_transform(const RunConfig& cfg, const std::string& q_str,
                  const std::string& op, double kplus, double tol) {
  const FourMomentum q = parse_q(q_str);
  const ConformalTransform t = parse_op(op);
  const FourMomentum qp = apply_4d(t, q, cfg.M);
  const ConePoint kp = apply_cone(t, embed(q, kplus, cfg.M));
  const double residual = isomorphism_residual(t, q, kplus, cfg.M);

  ordered_json out;
  out["q_in"] = {q.q0, q.q1, q.q2, q.q3};
  out["q_out"] = {qp.q0, qp.q1, qp.q2, qp.q3};
  out["kappa_out"] = {kp.k0, kp.k1, kp.k2, kp.k3, kp.k5, kp.k6};
  out["cone_residual"] = cone_residual(kp);
  out["isomorphism_residual"] = residual;
  out["tolerance"] = tol;
  out["pass"] = residual <= tol;
  emit(out);
  return residual <= tol ? 0 : 1;
}

int cmd_classify(const RunConfig& cfg, const std::vector<double>& q2s) {
  if (q2s.empty()) throw MalformedInput("classify needs at least one --q2");
  if (cfg.format == "csv") {
    std::cout << "q2,domain,hyperboloid,q5_squared,lambda1,lambda2\n";
    for (double q2 : q2s) {
      const DomainLabel lab = classify(q2, cfg.M);
      std::cout << q2 << ',' << domain_name(lab.label) << ',' << lab.hyperboloid
                << ',' << q5_squared(lab, q2, cfg.M) << ','
                << lambda_indicator(1, q2, cfg.M) << ','
                << lambda_indicator(2, q2, cfg.M) << '\n';
    }
    return 0;
  }
  ordered_json arr = ordered_json::array();
  for (double q2 : q2s) {
    const DomainLabel lab = classify(q2, cfg.M);
    ordered_json o;
    o["q2"] = q2;
    o["domain"] = domain_name(lab.label);
    o["hyperboloid"] = lab.hyperboloid;
    o["q5_squared"] = q5_squared(lab, q2, cfg.M);
    o["lambda1"] = lambda_indicator(1, q2, cfg.M);
    o["lambda2"] = lambda_indicator(2, q2, cfg.M);
    if (q2 != 0.0) {
      const auto inv = invert_domain(q2, cfg.M);
      o["inverted_q2"] = inv.first;
      o["inverted_domain"] = domain_name(inv.second.label);
    }
    const auto refl = reflect_domain(q2, cfg.M);
    o["reflected_q2"] = refl.first;
    o["reflected_domain"] = domain_name(refl.second.label);
    arr.push_back(o);
  }
  emit(arr);
  return 0;
}

int cmd_decompose(const RunConfig& cfg, const std::string& in,
                  const std::string& save_parts) {
  const MomentumLatticeField f = read_field(in);
  const DecomposedField d = decompose(f);
  static const Domain order[4] = {Domain::I, Domain::II, Domain::III, Domain::IV};

  if (!save_parts.empty()) {
    for (Domain dom : order) {
      std::ofstream out(save_parts + "_" + domain_name(dom) + ".json");
      if (!out) throw MalformedInput("cannot write parts to " + save_parts);
      save_field_json(out, d.part(dom));
    }
  }

  std::array<std::size_t, 4> counts{0, 0, 0, 0};
  for (std::size_t s = 0; s < f.num_sites(); ++s)
    counts[static_cast<int>(classify(f.mode_q2(s), f.geometry().M).label)]++;

  if (cfg.format == "csv") {
    std::cout << "domain,sites,max_abs\n";
    for (Domain dom : order)
      std::cout << domain_name(dom) << ',' << counts[static_cast<int>(dom)] << ','
                << d.part(dom).max_abs() << '\n';
    return 0;
  }
  ordered_json out;
  for (Domain dom : order) {
    ordered_json o;
    o["sites"] = counts[static_cast<int>(dom)];
    o["max_abs"] = d.part(dom).max_abs();
    out[domain_name(dom)] = o;
  }
  emit(out);
  return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& in, bool use_demo,
               const std::string& corrupt_spec, const std::string& sources,
               double m_plus2, double m_minus2, bool have_masses) {
  MomentumLatticeField f = [&] {
    if (use_demo) {
      LatticeGeometry g{cfg.dims, cfg.spacing, cfg.M, 1};
      return random_field(g, cfg.seed);
    }
    return read_field(in);
  }();
  const DecomposedField d = decompose(f);
  const std::optional<Corruption> corrupt = parse_corrupt(corrupt_spec);

  std::vector<double> x5s;
  for (int j = 0; j < 8; ++j) x5s.push_back(0.25 * j);

  std::vector<ResidualReport> reports;
  reports.push_back(check_coupled_condition(d, x5s, cfg.tol_identity, corrupt));
  reports.push_back(check_boundary(d, PMSign::Plus));
  reports.push_back(check_boundary(d, PMSign::Minus));

  // projector algebra on the same field, bit-exact
  {
    const MomentumLatticeField p1 = projector_apply(1, f);
    const MomentumLatticeField p2 = projector_apply(2, f);
    const MomentumLatticeField p11 = projector_apply(1, p1);
    const MomentumLatticeField p12 = projector_apply(2, p1);
    double linf = 0.0;
    for (std::size_t i = 0; i < f.values().size(); ++i) {
      linf = std::max(linf, std::abs(p11.values()[i] - p1.values()[i]));
      linf = std::max(linf, std::abs(p12.values()[i]));
      linf = std::max(linf,
                      std::abs(p1.values()[i] + p2.values()[i] - f.values()[i]));
    }
    ResidualReport r;
    r.name = "projector_algebra";
    r.linf = linf;
    r.l2 = linf;
    r.tolerance = 0.0;
    r.pass = linf == 0.0;
    reports.push_back(r);
  }

  reports.push_back(check_lattice_dispersion(f, cfg.tol_fft));

  if (!sources.empty()) {
    if (!have_masses)
      throw MalformedInput("--sources needs --m-plus2 and --m-minus2");
    const MomentumLatticeField js = read_field(sources);
    reports.push_back(
        check_source_condition(decompose(js), d, m_plus2, m_minus2));
  }

  emit_reports(reports, cfg.format);
  for (const auto& r : reports)
    if (!r.pass) return 1;
  return 0;
}

int cmd_constraints(const RunConfig& cfg, const CLI::App* sub, double alpha_plus,
                    double beta_plus, double m_plus, double m_minus,
                    const std::string& branch, const std::string& demo) {
  if (!demo.empty()) {
    if (demo != "electroweak") throw MalformedInput("unknown demo '" + demo + "'");
    // lepton doubling sample: electron/muon masses in units of M
    const double me = 0.000511, mmu = 0.105658;
    const auto branches = fermion_alpha_branches(mmu, me, cfg.M);
    const ConstraintParams p =
        charged_params_from_masses({mmu * mmu, me * me}, cfg.M, '-');
    const ChargedMasses back = charged_masses(p);
    ordered_json out;
    out["demo"] = "electroweak";
    out["sin2_theta"] = 0.222;
    out["M"] = cfg.M;
    out["m_plus"] = mmu;
    out["m_minus"] = me;
    out["alpha2_branches"] = {branches.first, branches.second};
    out["alpha_plus"] = p.alpha_plus;
    out["beta_plus"] = p.beta_plus;
    out["m_plus2_roundtrip"] = back.masses.m_plus2;
    out["m_minus2_roundtrip"] = back.masses.m_minus2;
    emit(out);
    return 0;
  }

  const bool have_ab =
      sub->count("--alpha-plus") > 0 && sub->count("--beta-plus") > 0;
  const bool have_m = sub->count("--m-plus") > 0 && sub->count("--m-minus") > 0;
  if (have_ab == have_m)
    throw MalformedInput(
        "give either --alpha-plus/--beta-plus or --m-plus/--m-minus");

  ordered_json out;
  if (have_ab) {
    const ConstraintParams p =
        ConstraintParams::from_alpha_beta(alpha_plus, beta_plus, cfg.M);
    const ChargedMasses cm = charged_masses(p);
    out["M"] = cfg.M;
    out["alpha_plus"] = p.alpha_plus;
    out["alpha_minus"] = p.alpha_minus;
    out["beta_plus"] = p.beta_plus;
    out["beta_minus"] = p.beta_minus;
    out["m_plus2"] = cm.masses.m_plus2;
    out["m_minus2"] = cm.masses.m_minus2;
    out["physical"] = cm.physical;
    out["neutral_mass_ratio"] = neutral_mass_ratio(alpha_plus, beta_plus);
  } else {
    if (branch != "+" && branch != "-")
      throw MalformedInput("--branch must be + or -");
    const auto branches = fermion_alpha_branches(m_plus, m_minus, cfg.M);
    const ConstraintParams p = charged_params_from_masses(
        {m_plus * m_plus, m_minus * m_minus}, cfg.M, branch[0]);
    const ChargedMasses back = charged_masses(p);
    out["M"] = cfg.M;
    out["m_plus"] = m_plus;
    out["m_minus"] = m_minus;
    out["alpha2_branches"] = {branches.first, branches.second};
    out["branch"] = branch;
    out["alpha_plus"] = p.alpha_plus;
    out["alpha_minus"] = p.alpha_minus;
    out["beta_plus"] = p.beta_plus;
    out["beta_minus"] = p.beta_minus;
    out["m_plus2_roundtrip"] = back.masses.m_plus2;
    out["m_minus2_roundtrip"] = back.masses.m_minus2;
    out["physical"] = back.physical;
  }
  emit(out);
  return 0;
}

int cmd_solve(const RunConfig& cfg, const std::string& in, double m2,
              double epsilon, double pv_band, const std::string& out_path) {
  const MomentumLatticeField J = read_field(in);
  PoleRegularization reg;
  reg.epsilon = epsilon > 0.0 ? epsilon : cfg.epsilon * cfg.M * cfg.M;
  reg.pv_band = pv_band;
  const MomentumLatticeField phi = kg_solve(J, m2, reg);
  write_field(out_path, phi);
  return 0;
}

int cmd_demo(const RunConfig& cfg, const std::string& out_path) {
  LatticeGeometry g{cfg.dims, cfg.spacing, cfg.M, 1};
  write_field(out_path, random_field(g, cfg.seed));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;

  // the config file must be applied before flag parsing so flags win
  try {
    std::string config_path;
    for (int i = 1; i < argc - 1; ++i)
      if (std::string(argv[i]) == "--config") config_path = argv[i + 1];
    if (config_path.empty()) {
      if (const char* env = std::getenv("CONECALC_CONFIG")) config_path = env;
    }
    if (!config_path.empty()) apply_config_file(cfg, config_path);
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }

  CLI::App app{"conformal cone momentum toolkit"};
  app.require_subcommand(1);
  std::string config_path_flag;
  app.add_option("--config", config_path_flag, "JSON config file");
  app.add_option("--M", cfg.M, "conformal scale M");
  app.add_option("--format", cfg.format, "output format: json or csv");
  app.add_option("--seed", cfg.seed, "seed for generated fields");

  auto* t = app.add_subcommand("transform", "apply a conformal transformation");
  std::string t_q, t_op;
  double t_kplus = 1.0, t_tol = -1.0;
  t->add_option("--q", t_q, "four-momentum a,b,c,d")->required();
  t->add_option("--op", t_op, "translation:h|lorentz:boost:axis,eta|lorentz:rot:i,j,ang|dilate:l|inversion|special:h")->required();
  t->add_option("--kplus", t_kplus, "projective cone scale");
  t->add_option("--tol", t_tol, "residual tolerance");

  auto* c = app.add_subcommand("classify", "classify q^2 into the four domains");
  std::vector<double> c_q2;
  c->add_option("--q2", c_q2, "q^2 values (repeatable)");

  auto* dcmd = app.add_subcommand("decompose", "split a field over the domains");
  std::string d_in = "-", d_save;
  dcmd->add_option("--in", d_in, "field JSON file or - for stdin");
  dcmd->add_option("--save-parts", d_save, "prefix for the four part files");

  auto* v = app.add_subcommand("verify", "run the residual check battery");
  std::string v_in = "-", v_corrupt, v_sources;
  bool v_demo = false;
  double v_mp2 = 0.0, v_mm2 = 0.0;
  v->add_option("--in", v_in, "field JSON file or - for stdin");
  v->add_flag("--demo", v_demo, "verify a generated demo field");
  v->add_option("--corrupt", v_corrupt, "site=K,eps=E,target=q5|value");
  v->add_option("--sources", v_sources, "source field file");
  v->add_option("--m-plus2", v_mp2, "m_+^2 for the source check");
  v->add_option("--m-minus2", v_mm2, "m_-^2 for the source check");

  auto* k = app.add_subcommand("constraints", "constraint algebra solver");
  double k_ap = 0.0, k_bp = 0.0, k_mp = 0.0, k_mm = 0.0;
  std::string k_branch = "-", k_demo;
  k->add_option("--alpha-plus", k_ap, "alpha_+");
  k->add_option("--beta-plus", k_bp, "beta_+");
  k->add_option("--m-plus", k_mp, "m_+ (mass, not squared)");
  k->add_option("--m-minus", k_mm, "m_-");
  k->add_option("--branch", k_branch, "+ or -");
  k->add_option("--demo", k_demo, "named demo (electroweak)");

  auto* s = app.add_subcommand("solve", "sourced Klein-Gordon solve");
  std::string s_in = "-", s_out;
  double s_m2 = 1.0, s_eps = -1.0, s_pv = 0.0;
  s->add_option("--in", s_in, "source field JSON or - for stdin");
  s->add_option("--m2", s_m2, "mass squared");
  s->add_option("--epsilon", s_eps, "i-epsilon width");
  s->add_option("--pv-band", s_pv, "zero out sites with |m^2-q^2| below this");
  s->add_option("--out", s_out, "output field file (default stdout)");

  auto* g = app.add_subcommand("demo", "write a seeded demo field");
  std::string g_out;
  g->add_option("--out", g_out, "output field file (default stdout)");

  // global flags remain valid after the subcommand name
  for (CLI::App* sub : {t, c, dcmd, v, k, s, g}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*t)
      return cmd_transform(cfg, t_q, t_op, t_kplus,
                           t_tol > 0.0 ? t_tol : cfg.tol_identity);
    if (*c) return cmd_classify(cfg, c_q2);
    if (*dcmd) return cmd_decompose(cfg, d_in, d_save);
    if (*v)
      return cmd_verify(cfg, v_in, v_demo, v_corrupt, v_sources, v_mp2, v_mm2,
                        v->count("--m-plus2") > 0 && v->count("--m-minus2") > 0);
    if (*k) return cmd_constraints(cfg, k, k_ap, k_bp, k_mp, k_mm, k_branch, k_demo);
    if (*s) return cmd_solve(cfg, s_in, s_m2, s_eps, s_pv, s_out);
    if (*g) return cmd_demo(cfg, g_out);
  } catch (const MassBoundViolated& e) {
    std::cerr << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
  return 2;
}
