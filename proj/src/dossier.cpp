#include "kodaira/dossier.hpp"

#include <sstream>
#include <stdexcept>

#include "kodaira/error.hpp"

namespace kodaira {

using nlohmann::json;

namespace {

json rat(const Rational& r) { return json{{"num", r.numerator()}, {"den", r.denominator()}}; }

Rational rat_from(const json& j) {
  return Rational(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>());
}

std::string_view status_name(WitnessStatus s) {
  switch (s) {
    case WitnessStatus::certified: return "certified";
    case WitnessStatus::fallback: return "fallback";
    case WitnessStatus::uncertified: return "uncertified";
  }
  return "uncertified";
}

WitnessStatus status_from(const std::string& s) {
  if (s == "certified") return WitnessStatus::certified;
  if (s == "fallback") return WitnessStatus::fallback;
  if (s == "uncertified") return WitnessStatus::uncertified;
  throw std::invalid_argument("unknown witness status " + s);
}

json bundle_json(const CurveBundle& b) {
  return json{{"sym_deg", b.sym_deg}, {"dualized", b.dualized}, {"n_exp", b.n_exp},
              {"rank", b.rank}, {"degree", rat(b.degree)}};
}

CurveBundle bundle_from(const json& j) {
  return {j.at("sym_deg").get<std::int64_t>(), j.at("dualized").get<bool>(),
          j.at("n_exp").get<std::int64_t>(), j.at("rank").get<std::int64_t>(),
          rat_from(j.at("degree"))};
}

json witness_json(const Witness& w) {
  return json{{"index", w.index},
              {"sym_deg", w.bundle.sym_deg},
              {"dualized", w.bundle.dualized},
              {"n_exp", w.bundle.n_exp},
              {"rank", w.bundle.rank},
              {"degree", rat(w.bundle.degree)},
              {"identity_lhs", w.identity_lhs},
              {"identity_rhs", w.identity_rhs},
              {"rule", std::string(rule_name(w.rule))},
              {"h1_lower_bound", w.h_lower_bound},
              {"proven", w.proven}};
}

Witness witness_from(const json& j) {
  Witness w;
  w.index = j.at("index").get<std::int64_t>();
  w.bundle = {j.at("sym_deg").get<std::int64_t>(), j.at("dualized").get<bool>(),
              j.at("n_exp").get<std::int64_t>(), j.at("rank").get<std::int64_t>(),
              rat_from(j.at("degree"))};
  w.identity_lhs = j.at("identity_lhs").get<std::int64_t>();
  w.identity_rhs = j.at("identity_rhs").get<std::int64_t>();
  const auto rule = j.at("rule").get<std::string>();
  if (rule == "exact-match") {
    w.rule = WitnessRule::exact_match;
  } else if (rule == "rr-positivity") {
    w.rule = WitnessRule::rr_positivity;
  } else {
    throw std::invalid_argument("unknown witness rule " + rule);
  }
  w.h_lower_bound = j.at("h1_lower_bound").get<std::int64_t>();
  w.proven = j.at("proven").get<bool>();
  return w;
}

json entry_json(const NonvanishingEntry& e) {
  json j{{"kind", e.kind}, {"status", std::string(status_name(e.status))}};
  if (e.kind == "nonvan1") {
    j["n"] = e.n;
  } else {
    j["a_b"] = json::array({e.a, e.b});
  }
  j["witness"] = e.witness ? witness_json(*e.witness) : json(nullptr);
  return j;
}

NonvanishingEntry entry_from(const json& j) {
  NonvanishingEntry e;
  e.kind = j.at("kind").get<std::string>();
  if (e.kind == "nonvan1") {
    e.n = j.at("n").get<std::int64_t>();
  } else if (e.kind == "nonvan2") {
    e.a = j.at("a_b").at(0).get<std::int64_t>();
    e.b = j.at("a_b").at(1).get<std::int64_t>();
  } else {
    throw std::invalid_argument("unknown nonvanishing kind " + e.kind);
  }
  e.status = status_from(j.at("status").get<std::string>());
  if (!j.at("witness").is_null()) e.witness = witness_from(j.at("witness"));
  return e;
}

json summands_json(const Decomposition& d) {
  json out = json::array();
  for (const auto& s : d.summands) out.push_back(json::array({s.op_deg, s.n_exp}));
  return out;
}

Decomposition summands_from(const json& j, Provenance provenance) {
  Decomposition d;
  d.provenance = provenance;
  for (const auto& s : j) d.summands.push_back({s.at(0).get<std::int64_t>(), s.at(1).get<std::int64_t>()});
  return d;
}

json div_x_json(const DivClassX& c) {
  return json{{"et_coeff", rat(c.et_coeff)}, {"base_deg", rat(c.base_deg)}};
}

DivClassX div_x_from(const json& j) { return {rat_from(j.at("et_coeff")), rat_from(j.at("base_deg"))}; }

NonvanishingEntry scanned_entry(const Witness& w, std::int64_t n, std::int64_t a, std::int64_t b) {
  NonvanishingEntry e;
  e.kind = n > 0 ? "nonvan1" : "nonvan2";
  e.n = n;
  e.a = a;
  e.b = b;
  e.status = w.rule == WitnessRule::exact_match ? WitnessStatus::certified : WitnessStatus::fallback;
  e.witness = w;
  return e;
}

}  // namespace

Dossier build_dossier(const ConstructionParams& params, const DossierOptions& options) {
  const std::int64_t l = params.l;
  Dossier d;
  d.params = params;

  auto& inv = d.invariants;
  inv.deg_L = params.deg_L;
  inv.deg_N = params.deg_N;
  inv.m = params.m;
  inv.fiber_genus = fiber_genus(params);
  inv.omega_x_ample = omega_x_is_ample(params);
  inv.et_self_intersection = intersect_X(classes::section_X(), classes::section_X(), params);
  inv.canonical_class = canonical_X(params);
  inv.canonical_base = canonical_X_base(params);
  inv.kx_dot_fiber = canonical_dot_fiber(params);
  inv.chi_OX = euler_char_structure_X(params);

  for (std::int64_t n = 1; n <= l / 2; ++n) {
    NonvanishingEntry e;
    e.kind = "nonvan1";
    e.n = n;
    try {
      e.witness = theorem_nonvan1(n, params);
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::NoCertificate) throw;
      e.status = WitnessStatus::uncertified;
    }
    d.nonvanishing.push_back(e);
  }
  for (std::int64_t a = 1; a <= l - 1; ++a) {
    for (std::int64_t b = 1; b <= l - a; ++b) {
      NonvanishingEntry e;
      e.kind = "nonvan2";
      e.a = a;
      e.b = b;
      try {
        e.witness = theorem_nonvan2(a, b, params);
      } catch (const Error& err) {
        if (err.kind() != ErrorKind::NoCertificate) throw;
        const auto found = scan_witnesses(r1_phi_lower_z_ab(a, b, params), params, true);
        if (found.empty()) {
          e.status = WitnessStatus::uncertified;
        } else {
          e.status = WitnessStatus::fallback;
          e.witness = found.front();
        }
      }
      d.nonvanishing.push_back(e);
    }
  }

  if (options.beyond_range) {
    d.flags.beyond_range = true;
    for (std::int64_t n = l / 2 + 1; n <= 2 * l; ++n) {
      for (const auto& w : scan_witnesses(leray_h1(n, params), params, false)) {
        d.beyond_range.push_back(scanned_entry(w, n, 0, 0));
      }
    }
    for (std::int64_t a = 1; a <= l; ++a) {
      for (std::int64_t b = 1; b <= l; ++b) {
        if (a <= l - 1 && b <= l - a) continue;
        for (const auto& w : scan_witnesses(r1_phi_lower_z_ab(a, b, params), params, false)) {
          d.beyond_range.push_back(scanned_entry(w, 0, a, b));
        }
      }
    }
  }

  d.nef_failure = nef_failure(params, 1);
  d.kollar = kollar_violation(params);
  d.refutation = refute_erroneous(2, params);
  return d;
}

json to_json(const RefutationReport& r) {
  return json{{"k", r.k},
              {"chi_cover", rat(r.chi_cover)},
              {"chi_base", rat(r.chi_base)},
              {"corrected", summands_json(r.corrected)},
              {"erroneous", summands_json(r.erroneous)},
              {"thickening", summands_json(r.thickening)},
              {"sum_chi_corrected", rat(r.sum_chi_corrected)},
              {"sum_chi_erroneous", rat(r.sum_chi_erroneous)},
              {"chi_rr", rat(r.chi_rr)},
              {"decompositions_differ", r.decompositions_differ},
              {"verdict", r.mismatch ? "mismatch" : "agree"}};
}

json to_json(const Dossier& d) {
  const auto& p = d.params;
  const auto& inv = d.invariants;
  json j;
  j["schema_version"] = "1";
  j["params"] = json{{"p", p.p}, {"g", p.g}, {"l", p.l}, {"deg_L", p.deg_L}, {"deg_N", p.deg_N}, {"m", p.m}};
  j["invariants"] = json{
      {"deg_L", inv.deg_L},
      {"deg_N", inv.deg_N},
      {"m", inv.m},
      {"fiber_genus", inv.fiber_genus},
      {"omega_x_ample", inv.omega_x_ample},
      {"et_self_intersection", rat(inv.et_self_intersection)},
      {"canonical_class", div_x_json(inv.canonical_class)},
      {"canonical_base", json{{"n_exp", rat(inv.canonical_base.n_exp)}, {"k_coeff", inv.canonical_base.k_coeff}}},
      {"kx_dot_fiber", rat(inv.kx_dot_fiber)},
      {"chi_OX", rat(inv.chi_OX)},
  };
  j["nonvanishing"] = json::array();
  for (const auto& e : d.nonvanishing) j["nonvanishing"].push_back(entry_json(e));
  if (d.flags.beyond_range) {
    j["beyond_range"] = json::array();
    for (const auto& e : d.beyond_range) j["beyond_range"].push_back(entry_json(e));
  }

  const auto& nf = d.nef_failure;
  j["nef_failure"] = json{{"k", nf.k},
                          {"summand_index", nf.summand_index},
                          {"quotient_bundle", bundle_json(nf.quotient)},
                          {"test_curve", nf.test_curve},
                          {"w", json{{"e_coeff", nf.w.e_coeff}, {"base_deg", rat(nf.w.base_deg)}}},
                          {"pairing_value", rat(nf.pairing_value)},
                          {"symbolic_pairing", rat(nf.symbolic_pairing)}};
  j["kollar"] = json{{"twist_exponent", d.kollar.twist_exponent},
                     {"h1_lower_bound", d.kollar.h1_lower_bound},
                     {"quotient_chain", d.kollar.quotient_chain}};

  j["refutation"] = to_json(d.refutation);
  j["flags"] = json{{"conditional_on_tango_curve", d.flags.conditional_on_tango_curve},
                    {"beyond_range", d.flags.beyond_range}};
  return j;
}

Dossier dossier_from_json(const json& j) {
  if (j.at("schema_version").get<std::string>() != "1") {
    throw std::invalid_argument("unsupported dossier schema_version");
  }
  Dossier d;
  const auto& jp = j.at("params");
  d.params = {jp.at("p").get<std::int64_t>(), jp.at("g").get<std::int64_t>(),
              jp.at("l").get<std::int64_t>(), jp.at("deg_L").get<std::int64_t>(),
              jp.at("deg_N").get<std::int64_t>(), jp.at("m").get<std::int64_t>()};

  const auto& ji = j.at("invariants");
  auto& inv = d.invariants;
  inv.deg_L = ji.at("deg_L").get<std::int64_t>();
  inv.deg_N = ji.at("deg_N").get<std::int64_t>();
  inv.m = ji.at("m").get<std::int64_t>();
  inv.fiber_genus = ji.at("fiber_genus").get<std::int64_t>();
  inv.omega_x_ample = ji.at("omega_x_ample").get<bool>();
  inv.et_self_intersection = rat_from(ji.at("et_self_intersection"));
  inv.canonical_class = div_x_from(ji.at("canonical_class"));
  inv.canonical_base = {rat_from(ji.at("canonical_base").at("n_exp")),
                        ji.at("canonical_base").at("k_coeff").get<std::int64_t>()};
  inv.kx_dot_fiber = rat_from(ji.at("kx_dot_fiber"));
  inv.chi_OX = rat_from(ji.at("chi_OX"));

  for (const auto& e : j.at("nonvanishing")) d.nonvanishing.push_back(entry_from(e));
  if (j.contains("beyond_range")) {
    for (const auto& e : j.at("beyond_range")) d.beyond_range.push_back(entry_from(e));
  }

  const auto& jn = j.at("nef_failure");
  auto& nf = d.nef_failure;
  nf.k = jn.at("k").get<std::int64_t>();
  nf.summand_index = jn.at("summand_index").get<std::int64_t>();
  nf.quotient = bundle_from(jn.at("quotient_bundle"));
  nf.test_curve = jn.at("test_curve").get<std::string>();
  nf.w = {jn.at("w").at("e_coeff").get<std::int64_t>(), rat_from(jn.at("w").at("base_deg"))};
  nf.pairing_value = rat_from(jn.at("pairing_value"));
  nf.symbolic_pairing = rat_from(jn.at("symbolic_pairing"));

  const auto& jk = j.at("kollar");
  d.kollar.twist_exponent = jk.at("twist_exponent").get<std::int64_t>();
  d.kollar.h1_lower_bound = jk.at("h1_lower_bound").get<std::int64_t>();
  d.kollar.quotient_chain = jk.at("quotient_chain").get<std::vector<std::string>>();

  const auto& jr = j.at("refutation");
  auto& r = d.refutation;
  r.k = jr.at("k").get<std::int64_t>();
  r.chi_cover = rat_from(jr.at("chi_cover"));
  r.chi_base = rat_from(jr.at("chi_base"));
  r.corrected = summands_from(jr.at("corrected"), Provenance::corrected);
  r.erroneous = summands_from(jr.at("erroneous"), Provenance::erroneous);
  r.thickening = summands_from(jr.at("thickening"), Provenance::thickening);
  r.sum_chi_corrected = rat_from(jr.at("sum_chi_corrected"));
  r.sum_chi_erroneous = rat_from(jr.at("sum_chi_erroneous"));
  r.chi_rr = rat_from(jr.at("chi_rr"));
  r.decompositions_differ = jr.at("decompositions_differ").get<bool>();
  r.mismatch = jr.at("verdict").get<std::string>() == "mismatch";

  d.flags.conditional_on_tango_curve = j.at("flags").at("conditional_on_tango_curve").get<bool>();
  d.flags.beyond_range = j.at("flags").at("beyond_range").get<bool>();
  return d;
}

namespace {

std::string bundle_text(const CurveBundle& b) {
  std::ostringstream os;
  os << "Sym^" << b.sym_deg << "(E)" << (b.dualized ? "^dual" : "") << " (x) N^" << b.n_exp
     << "  [rank " << b.rank << ", deg " << to_string(b.degree) << "]";
  return os.str();
}

void entry_text(std::ostringstream& os, const NonvanishingEntry& e) {
  if (e.kind == "nonvan1") {
    os << "  H^1(X, Z^-" << e.n << ") != 0";
  } else {
    os << "  H^1(X, Z_{" << e.a << "," << e.b << "}^-1) != 0";
  }
  os << "  [" << status_name(e.status) << "]\n";
  if (e.witness) {
    const auto& w = *e.witness;
    os << "      summand i=" << w.index << ": " << bundle_text(w.bundle) << "\n"
       << "      " << rule_name(w.rule) << ": l*sym_deg = " << w.identity_lhs
       << ", n_exp = " << w.identity_rhs << ", h^0 >= " << w.h_lower_bound
       << (w.proven ? "" : "  (beyond theorem range)") << "\n";
  } else {
    os << "      summand i=l-b is zero and no other summand has a certified section\n";
  }
}

std::string pairs_text(const Decomposition& d) {
  std::ostringstream os;
  for (std::size_t i = 0; i < d.summands.size(); ++i) {
    if (i) os << ' ';
    os << '(' << d.summands[i].op_deg << ',' << d.summands[i].n_exp << ')';
  }
  return os.str();
}

}  // namespace

std::string render_text(const RefutationReport& r) {
  std::ostringstream os;
  os << "Refuted single-block pushforward formula, k = " << r.k << "\n"
     << "  corrected: " << pairs_text(r.corrected) << "\n"
     << "  refuted:   " << pairs_text(r.erroneous) << "\n"
     << "  chi(O_{" << r.k << "Et}) = " << to_string(r.chi_cover) << ", chi(O_{" << r.k
     << "E}) = " << to_string(r.chi_base) << "  -> " << (r.mismatch ? "MISMATCH" : "agree") << "\n"
     << "  chi(O_X(-" << r.k << "Et)): summands " << to_string(r.sum_chi_corrected) << " (corrected), "
     << to_string(r.sum_chi_erroneous) << " (refuted), Riemann-Roch " << to_string(r.chi_rr) << "\n";
  return os.str();
}

std::string render_text(const Dossier& d) {
  const auto& p = d.params;
  const auto& inv = d.invariants;
  std::ostringstream os;
  os << "Candidate parameters (p, g, l) = (" << p.p << ", " << p.g << ", " << p.l << ")\n"
     << "  conditional on a Tango curve of genus " << p.g << " with H^1(C, L^-1) != 0\n\n"
     << "Invariants\n"
     << "  deg L = " << inv.deg_L << ", deg N = " << inv.deg_N << ", m = " << inv.m << "\n"
     << "  fiber geometric genus = " << inv.fiber_genus << "\n"
     << "  omega_X ample: " << (inv.omega_x_ample ? "yes" : "no") << "\n"
     << "  (Et^2) = " << to_string(inv.et_self_intersection) << "\n"
     << "  K_X = " << to_string(inv.canonical_class.et_coeff) << " Et + phi^*(K_C "
     << (inv.canonical_base.n_exp < 0 ? "- " : "+ ") << to_string(abs(inv.canonical_base.n_exp))
     << " N), base degree "
     << to_string(inv.canonical_class.base_deg) << "\n"
     << "  (K_X . fiber) = " << to_string(inv.kx_dot_fiber) << "\n"
     << "  chi(O_X) = " << to_string(inv.chi_OX) << "\n\n";

  os << "Kodaira nonvanishing (nonvan1: Z^-n, n <= floor(l/2); nonvan2: Z_{a,b}^-1, a <= l-1, b <= l-a)\n";
  for (const auto& e : d.nonvanishing) entry_text(os, e);
  if (d.flags.beyond_range) {
    os << "\nWitnesses beyond the theorem ranges (not theorems)\n";
    for (const auto& e : d.beyond_range) entry_text(os, e);
  }

  const auto& nf = d.nef_failure;
  os << "\nNon-nef direct image (phi_* omega_{X/C} is not nef)\n"
     << "  quotient V (i=" << nf.summand_index << "): " << bundle_text(nf.quotient) << "\n"
     << "  (W . " << nf.test_curve << ") = " << to_string(nf.pairing_value) << " < 0\n";

  os << "\nKollar vanishing fails: H^1(C, phi_*omega_X (x) N) != 0\n"
     << "  l(p-m-1) + p + l - pl = " << d.kollar.twist_exponent << "\n";
  for (const auto& step : d.kollar.quotient_chain) os << "  " << step << "\n";
  os << "  h^1 >= " << d.kollar.h1_lower_bound << "\n";

  os << "\n" << render_text(d.refutation);
  return os.str();
}

}  // namespace kodaira
