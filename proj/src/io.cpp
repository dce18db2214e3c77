#include "trilie/io.hpp"

#include <functional>
#include <sstream>

#include "trilie/coadjoint.hpp"
#include "trilie/enveloping.hpp"
#include "trilie/lie.hpp"
#include "trilie/lifted_frame.hpp"

namespace trilie {

namespace {

Json rational_json(const Rational& r) { return r.str(); }

Rational rational_from(const Json& j) {
  if (!j.is_string()) throw Error(ErrorKind::ParseError, "expected a rational string");
  return Rational::parse(j.get<std::string>());
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::ParseError, std::string("missing field '") + key + "'");
  return j.at(key);
}

Json gamma_json(const std::vector<Rational>& g) {
  Json out = Json::array();
  for (const auto& v : g) out.push_back(rational_json(v));
  return out;
}

std::string gamma_text(const std::vector<Rational>& g) {
  std::string s = "(";
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? ", " : "") + g[i].str();
  return s + ")";
}

Json exponents_json(const std::map<int, Rational>& m) {
  Json out = Json::object();
  for (const auto& [k, v] : m) out[std::to_string(k)] = rational_json(v);
  return out;
}

std::map<int, Rational> exponents_from(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "expected an exponent map");
  std::map<int, Rational> out;
  for (const auto& [k, v] : j.items()) out.emplace(std::stoi(k), rational_from(v));
  return out;
}

Json member_json(const DocumentMember& m) {
  Json out;
  switch (m.type) {
    case DocumentMember::Type::Polynomial:
      out["type"] = "polynomial";
      out["terms"] = to_json(m.poly)["terms"];
      break;
    case DocumentMember::Type::Rational: {
      out["type"] = "rational";
      out["num"] = to_json(m.num);
      out["den"] = to_json(m.den);
      Json parts = Json::array();
      for (const auto& [num, den] : m.summands) parts.push_back(Json{{"num", to_json(num)}, {"den", to_json(den)}});
      out["summands"] = parts;
      break;
    }
    case DocumentMember::Type::PowerProduct:
      out["type"] = "power_product";
      out["factors"] = exponents_json(m.factors);
      break;
  }
  return out;
}

DocumentMember member_from(const Json& j) {
  DocumentMember m;
  const std::string type = field(j, "type").get<std::string>();
  if (type == "polynomial") {
    m.type = DocumentMember::Type::Polynomial;
    m.poly = polynomial_from_json(Json{{"terms", field(j, "terms")}});
  } else if (type == "rational") {
    m.type = DocumentMember::Type::Rational;
    m.num = polynomial_from_json(field(j, "num"));
    m.den = polynomial_from_json(field(j, "den"));
    for (const auto& s : field(j, "summands")) {
      m.summands.emplace_back(polynomial_from_json(field(s, "num")), polynomial_from_json(field(s, "den")));
    }
  } else if (type == "power_product") {
    m.type = DocumentMember::Type::PowerProduct;
    m.factors = exponents_from(field(j, "factors"));
  } else {
    throw Error(ErrorKind::ParseError, "unknown member type '" + type + "'");
  }
  return m;
}

Json document_json(const BasisDocument& doc) {
  Json out;
  out["n"] = doc.n;
  out["gamma"] = gamma_json(doc.gamma);
  out["vars"] = to_string(doc.vars);
  out["case"] = to_string(doc.kase);
  out["k0"] = doc.k0 ? Json(*doc.k0) : Json(nullptr);
  out["alphas"] = exponents_json(doc.alphas);
  out["kind"] = to_string(doc.kind);
  out["cardinality"] = doc.cardinality();
  out["multiplier"] = doc.multiplier ? to_json(*doc.multiplier) : Json(nullptr);
  Json members = Json::array();
  for (const auto& m : doc.members) members.push_back(member_json(m));
  out["members"] = members;
  out["certificates"] = Json(doc.certificates);
  return out;
}

BasisKind parse_kind(const std::string& s) {
  for (BasisKind k : {BasisKind::Casimir, BasisKind::Rational, BasisKind::Polynomial, BasisKind::Formal}) {
    if (to_string(k) == s) return k;
  }
  throw Error(ErrorKind::ParseError, "unknown basis kind '" + s + "'");
}

std::string minor_latex(int n, int k, Vars vars) {
  const std::string kappa = std::to_string(n - k + 1);
  const std::string ks = std::to_string(k);
  const std::string ns = std::to_string(n);
  if (vars == Vars::Dual) return "\\left|X^{" + kappa + "," + ns + "}_{1," + ks + "}\\right|";
  return "\\left|\\mathcal{E}^{1," + ks + "}_{" + kappa + "," + ns + "}\\right|";
}

std::optional<int> minor_order(const Polynomial& p, int n, Vars vars) {
  for (int k = 1; 2 * k <= n; ++k) {
    if (p == minor(n, k, vars)) return k;
  }
  return std::nullopt;
}

std::string exponent_latex(const Rational& r) {
  if (r.is_integer()) return r.str();
  const Rational mag = r.abs();
  const std::string frac = "\\frac{" + mag.numerator().get_str() + "}{" + mag.denominator().get_str() + "}";
  return (r.sign() < 0 ? "-" : "") + frac;
}

bool leading_negative(const Polynomial& p) { return !p.is_zero() && p.leading_term().coeff.sign() < 0; }

std::string member_latex(const DocumentMember& m, int n, Vars vars) {
  switch (m.type) {
    case DocumentMember::Type::Polynomial: {
      if (auto k = minor_order(m.poly, n, vars)) return minor_latex(n, *k, vars);
      return m.poly.latex();
    }
    case DocumentMember::Type::Rational: {
      std::string s;
      for (const auto& [num, den] : m.summands) {
        const bool neg = leading_negative(num);
        const Polynomial mag = neg ? -num : num;
        if (neg) {
          s += "-";
        } else if (!s.empty()) {
          s += "+";
        }
        if (den.is_constant() && den == Polynomial(1)) {
          s += mag.size() > 1 && !s.empty() ? "\\left(" + mag.latex() + "\\right)" : mag.latex();
        } else {
          s += "\\frac{" + mag.latex() + "}{" + den.latex() + "}";
        }
      }
      return s.empty() ? "0" : s;
    }
    case DocumentMember::Type::PowerProduct: {
      std::string s;
      for (const auto& [k, e] : m.factors) {
        s += minor_latex(n, k, vars);
        if (!e.is_one()) s += "^{" + exponent_latex(e) + "}";
      }
      return s;
    }
  }
  return "";
}

std::string member_text(const DocumentMember& m) {
  switch (m.type) {
    case DocumentMember::Type::Polynomial: return m.poly.str();
    case DocumentMember::Type::Rational: return "(" + m.num.str() + ") / (" + m.den.str() + ")";
    case DocumentMember::Type::PowerProduct: {
      std::string s;
      for (const auto& [k, e] : m.factors) {
        s += (s.empty() ? "" : " * ") + std::string("Delta_") + std::to_string(k);
        if (!e.is_one()) s += "^(" + e.str() + ")";
      }
      return s;
    }
  }
  return "";
}


Json nc_json(const NCPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [w, c] : p.terms()) {
    Json word = Json::array();
    for (const auto& b : w) word.push_back(b.name());
    terms.push_back(Json{{"coeff", rational_json(c)}, {"word", word}});
  }
  return Json{{"terms", terms}};
}

Json optional_nc(const std::optional<NCPolynomial>& p) { return p ? nc_json(*p) : Json(nullptr); }

int formula_count(const GammaTuple& g) {
  const int half = g.n() / 2;
  return classify(g).singular ? half + 1 : half - 1;
}

GammaTuple parse_gamma(const JobSpec& job) {
  if (job.gamma.empty()) throw Error(ErrorKind::ParseError, "missing --gamma");
  try {
    GammaTuple g = GammaTuple::parse(job.gamma);
    if (job.n != 0 && job.n != g.n()) {
      throw Error(ErrorKind::DimensionMismatch, "gamma has " + std::to_string(g.n()) + " entries but n = " +
                                                    std::to_string(job.n));
    }
    return g;
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::AllEqualGamma) throw Error(ErrorKind::DomainError, err.what());
    throw;
  }
}

void check_n(const JobSpec& job) {
  if (job.n != 0 && job.n < 2) throw Error(ErrorKind::DomainError, "t_gamma(n) requires n >= 2");
}

InvariantBasis job_basis(const GammaTuple& g, Vars vars, bool clear) {
  InvariantBasis b = build_basis(g, vars);
  if (clear && b.kase == BasisCase::Singular) b = clear_denominators(b);
  return b;
}

std::string op_name(const BasisIndex& b) { return b.name(); }

Json certificate_json(std::size_t member, const InvarianceCertificate& cert) {
  Json out;
  out["member"] = member;
  const bool weight = std::holds_alternative<FormalPowerProduct>(cert.subject);
  out["kind"] = weight ? "weight" : "residue";
  out["coordinates"] = "dual";
  out["operators"] = cert.entries.size();
  Json details = Json::array();
  for (const auto& e : cert.entries) {
    if (weight) {
      bool trivial = true;
      Json ws = Json::array();
      for (const auto& w : e.weights) {
        ws.push_back(w ? rational_json(*w) : Json(nullptr));
        if (!w || !w->is_zero()) trivial = false;
      }
      if (trivial) continue;
      details.push_back(Json{{"operator", op_name(e.op)}, {"weights", ws}, {"balance", rational_json(e.balance)}});
    } else if (!e.residue.is_zero()) {
      details.push_back(Json{{"operator", op_name(e.op)}, {"residue", to_json(e.residue)}});
    }
  }
  out[weight ? "weights" : "nonzero"] = details;
  out["passed"] = cert.passed();
  return out;
}

/// Attaches invariance, count and independence certificates; true when all pass.
bool certify(BasisDocument& doc, const GammaTuple& g, bool clear, std::uint64_t seed) {
  const InvariantBasis dual = job_basis(g, Vars::Dual, clear);
  const auto ops = build_operators(g);
  bool ok = true;
  std::size_t index = 0;
  for (const auto& p : dual.polynomial_members) {
    const auto cert = check_invariant(RationalFunction(p), ops);
    ok = ok && cert.passed();
    doc.certificates.push_back(certificate_json(index++, cert));
  }
  if (dual.rational_member) {
    const auto cert = check_invariant(*dual.rational_member, ops);
    ok = ok && cert.passed();
    doc.certificates.push_back(certificate_json(index++, cert));
  }
  for (const auto& pp : dual.power_members) {
    const auto cert = check_invariant(pp.expand(), ops);
    ok = ok && cert.passed();
    doc.certificates.push_back(certificate_json(index++, cert));
  }

  const int formula = formula_count(g);
  const int oracle = count_invariants_oracle(g, 3, seed);
  const bool count_ok = formula == oracle && static_cast<int>(dual.cardinality()) == formula;
  ok = ok && count_ok;
  doc.certificates.push_back(Json{{"kind", "count"},
                                  {"formula", formula},
                                  {"generated", dual.cardinality()},
                                  {"oracle", oracle},
                                  {"passed", count_ok}});

  Json indep{{"kind", "independence"}, {"seed", seed}};
  try {
    const auto fns = dual.functions();
    const auto prods = dual.products();
    const bool independent = functional_independence(fns, prods, seed);
    indep["passed"] = independent;
    ok = ok && independent;
  } catch (const Error& err) {
    indep["passed"] = false;
    indep["detail"] = err.what();
    ok = false;
  }
  doc.certificates.push_back(indep);
  return ok;
}

std::string render_document(const BasisDocument& doc, Format format) {
  switch (format) {
    case Format::Json: return emit_json(doc);
    case Format::Latex: return emit_latex(doc);
    case Format::Text: {
      std::string s = emit_text(doc);
      for (const auto& c : doc.certificates) {
        s += "certificate " + c.at("kind").get<std::string>();
        if (c.contains("member")) s += " member " + std::to_string(c.at("member").get<int>());
        s += c.at("passed").get<bool>() ? ": passed\n" : ": FAILED\n";
      }
      return s;
    }
  }
  return "";
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

RunResult failure(ErrorKind kind, const std::string& message, const Json& document) {
  Json out{{"error", std::string(to_string(kind))}, {"message", message}, {"document", document}};
  return {exit_code_for(kind), dump(out)};
}

[[noreturn]] void no_latex(Command c) {
  throw Error(ErrorKind::ParseError, "latex output is not available for " + to_string(c));
}

RunResult run_gen(const JobSpec& job, bool verify) {
  const GammaTuple g = parse_gamma(job);
  BasisDocument doc = make_document(job_basis(g, job.vars, job.clear));
  if (verify && !certify(doc, g, job.clear, job.seed)) {
    return failure(ErrorKind::VerificationFailure, "a certificate failed", document_json(doc));
  }
  return {kExitOk, render_document(doc, job.format)};
}

RunResult run_classify(const JobSpec& job) {
  const GammaTuple g = parse_gamma(job);
  const GammaClassification cls = classify(g);
  Json out;
  out["n"] = g.n();
  out["gamma"] = gamma_json(g.values());
  out["case"] = cls.singular ? "singular" : "regular";
  out["k0"] = cls.k0 ? Json(*cls.k0) : Json(nullptr);
  out["alphas"] = exponents_json(cls.alphas);
  out["kind"] = to_string(basis_kind(g));
  out["cardinality"] = formula_count(g);
  switch (job.format) {
    case Format::Json: return {kExitOk, dump(out)};
    case Format::Text: {
      std::string s = out["case"].get<std::string>();
      if (cls.k0) s += " k0=" + std::to_string(*cls.k0);
      for (const auto& [k, a] : cls.alphas) s += " alpha_" + std::to_string(k) + "=" + a.str();
      s += " kind=" + out["kind"].get<std::string>() + " cardinality=" + std::to_string(formula_count(g));
      return {kExitOk, s + "\n"};
    }
    case Format::Latex: no_latex(job.command);
  }
  return {};
}

RunResult run_count(const JobSpec& job) {
  const GammaTuple g = parse_gamma(job);
  const int formula = formula_count(g);
  const int oracle = count_invariants_oracle(g, 3, job.seed);
  Json out;
  out["n"] = g.n();
  out["gamma"] = gamma_json(g.values());
  out["case"] = classify(g).singular ? "singular" : "regular";
  out["count"] = formula;
  out["oracle"] = oracle;
  out["seed"] = job.seed;
  out["passed"] = formula == oracle;
  if (formula != oracle) return failure(ErrorKind::VerificationFailure, "count differs from the rank oracle", out);
  switch (job.format) {
    case Format::Json: return {kExitOk, dump(out)};
    case Format::Text: return {kExitOk, std::to_string(formula) + "\n"};
    case Format::Latex: no_latex(job.command);
  }
  return {};
}

RunResult run_lifted(const JobSpec& job) {
  const GammaTuple g = parse_gamma(job);
  if (g.n() > 6) throw Error(ErrorKind::DomainError, "lifted invariants are limited to n <= 6");
  if (job.format == Format::Latex) no_latex(job.command);
  const auto frame = LiftedFrame::generic(g);
  const auto s = lifted_invariants(frame);
  const auto dual = lifted_invariants_by_duality(frame);
  bool duality_ok = s.I0 == dual.I0;
  for (int i = 0; i < g.n(); ++i) {
    for (int j = 0; j < i; ++j) duality_ok = duality_ok && s.I(i, j) == dual.I(i, j);
  }
  const bool conj_ok = verify_conjugation_identity(frame, s);
  const auto ip = check_inessential_parameter(g);

  Json out;
  out["n"] = g.n();
  out["gamma"] = gamma_json(g.values());
  out["frame"] = "generic";
  out["I0"] = to_json(s.I0);
  Json entries = Json::array();
  std::string text = "I_0 = " + s.I0.str() + "\n";
  for (int i = 2; i <= g.n(); ++i) {
    for (int j = 1; j < i; ++j) {
      entries.push_back(Json{{"i", i}, {"j", j}, {"value", to_json(s.I(i - 1, j - 1))}});
      text += "I_" + std::to_string(i) + "_" + std::to_string(j) + " = " + s.I(i - 1, j - 1).str() + "\n";
    }
  }
  out["invariants"] = entries;
  Json certs = Json::array();
  certs.push_back(Json{{"kind", "conjugation"}, {"passed", conj_ok}});
  certs.push_back(Json{{"kind", "duality"}, {"passed", duality_ok}});
  certs.push_back(Json{{"kind", "inessential_parameter"},
                       {"dI0", to_json(ip.dI0)},
                       {"matches_closed_form", ip.matches_closed_form},
                       {"matrix_independent", ip.matrix_independent},
                       {"central", ip.central},
                       {"passed", ip.passed()}});
  out["certificates"] = certs;
  if (!(conj_ok && duality_ok && ip.passed())) {
    return failure(ErrorKind::VerificationFailure, "a lifted-invariant certificate failed", out);
  }
  for (const auto& c : certs) {
    text += "certificate " + c["kind"].get<std::string>() + (c["passed"].get<bool>() ? ": passed\n" : ": FAILED\n");
  }
  return {kExitOk, job.format == Format::Json ? dump(out) : text};
}

RunResult run_lemma2(const JobSpec& job) {
  int n = job.n;
  if (!job.gamma.empty()) n = parse_gamma(job).n();
  if (n < 2) throw Error(ErrorKind::DomainError, "t_gamma(n) requires n >= 2");
  if (n > 8) throw Error(ErrorKind::DomainError, "submatrix identities are limited to n <= 8");
  if (job.format == Format::Latex) no_latex(job.command);
  Json out;
  out["n"] = n;
  Json checks = Json::array();
  bool ok = true;
  std::string text;
  for (int k = 2; k < n; ++k) {
    const auto c = submatrix_identity_check(n, k);
    ok = ok && c.passed();
    checks.push_back(Json{{"k", k},
                          {"vacuous", c.vacuous},
                          {"first", c.first},
                          {"particular", c.particular},
                          {"second", c.second},
                          {"failures", c.failures},
                          {"passed", c.passed()}});
    text += "k=" + std::to_string(k) + (c.vacuous ? " vacuous" : "") + (c.passed() ? ": passed\n" : ": FAILED\n");
  }
  out["checks"] = checks;
  out["passed"] = ok;
  if (!ok) return failure(ErrorKind::VerificationFailure, "a submatrix identity failed", out);
  return {kExitOk, job.format == Format::Json ? dump(out) : text};
}

RunResult run_normcheck(const JobSpec& job) {
  const GammaTuple g = parse_gamma(job);
  if (job.format == Format::Latex) no_latex(job.command);
  const auto report = verify_normalization_solution(g);
  Json out;
  out["n"] = g.n();
  out["gamma"] = gamma_json(g.values());
  Json checks = Json::array();
  std::string text;
  for (const auto& c : report.checks) {
    checks.push_back(Json{{"subsystem", c.subsystem},
                          {"k", c.k},
                          {"equations", c.equations},
                          {"passed", c.status},
                          {"detail", c.detail}});
    text += c.subsystem + " k=" + std::to_string(c.k) + " equations=" + std::to_string(c.equations) +
            (c.status ? ": passed\n" : ": FAILED " + c.detail + "\n");
  }
  out["checks"] = checks;
  out["passed"] = report.passed();
  if (!report.passed()) return failure(ErrorKind::VerificationFailure, "a normalization subsystem failed", out);
  return {kExitOk, job.format == Format::Json ? dump(out) : text};
}

RunResult run_symcheck(const JobSpec& job) {
  const GammaTuple g = parse_gamma(job);
  const OperatorBasis ob = build_operator_basis(g);
  const int n = g.n();
  bool single = true;
  Json vacuous = Json::array();
  for (int k = 1; 2 * k <= n; ++k) {
    if (k + 1 >= n - k + 1) vacuous.push_back(k);
    for (int i = k + 1; i < n - k + 1; ++i) single = single && bordered_single_pair(g, k, i);
  }
  Json out;
  out["n"] = n;
  out["gamma"] = gamma_json(g.values());
  out["case"] = to_string(ob.kase);
  out["minors_commute"] = minor_variables_commute(g);
  out["single_pair"] = single;
  Json summands = Json::array();
  for (const auto& s : ob.summands) summands.push_back(Json{{"k", s.k}, {"i", s.i}, {"c", rational_json(s.c)}});
  out["summands"] = summands;
  out["vacuous"] = vacuous;
  Json minors = Json::array();
  for (const auto& m : ob.minors) minors.push_back(nc_json(m));
  out["minors"] = minors;
  out["f_member"] = optional_nc(ob.f_member);
  out["symmetrized"] = optional_nc(ob.symmetrized);
  out["correction"] = optional_nc(ob.correction);
  Json powers = Json::array();
  for (const auto& p : ob.power_members) powers.push_back(Json{{"factors", exponents_json(p.exponents)}});
  out["power_members"] = powers;
  if (!single) return failure(ErrorKind::VerificationFailure, "a bordered word has several noncommuting pairs", out);
  switch (job.format) {
    case Format::Json: return {kExitOk, dump(out)};
    case Format::Latex: {
      std::string s;
      for (const auto& m : ob.operators()) s += m.latex() + "\n";
      if (ob.kase == BasisCase::Regular) {
        for (const auto& p : ob.power_members) {
          DocumentMember dm;
          dm.type = DocumentMember::Type::PowerProduct;
          dm.factors = p.exponents;
          s += member_latex(dm, n, Vars::Algebra) + "\n";
        }
      }
      return {kExitOk, s.empty() ? "\\varnothing\n" : s};
    }
    case Format::Text: {
      std::string s = std::string("minors commute: ") + (minor_variables_commute(g) ? "yes" : "no") + "\n";
      for (const auto& c : ob.summands) {
        s += "k=" + std::to_string(c.k) + " i=" + std::to_string(c.i) + " c=" + c.c.str() + "\n";
      }
      if (ob.f_member) s += "f-member: " + ob.f_member->str() + "\n";
      return {kExitOk, s};
    }
  }
  return {};
}

}  // namespace

std::string to_string(Command c) {
  switch (c) {
    case Command::Gen: return "gen";
    case Command::Verify: return "verify";
    case Command::Classify: return "classify";
    case Command::Count: return "count";
    case Command::Lifted: return "lifted";
    case Command::Lemma2: return "lemma2";
    case Command::Normcheck: return "normcheck";
    case Command::Symcheck: return "symcheck";
  }
  return "gen";
}

std::string to_string(Format f) {
  switch (f) {
    case Format::Json: return "json";
    case Format::Latex: return "latex";
    case Format::Text: return "text";
  }
  return "json";
}

Command parse_command(std::string_view text) {
  for (Command c : {Command::Gen, Command::Verify, Command::Classify, Command::Count, Command::Lifted, Command::Lemma2,
                    Command::Normcheck, Command::Symcheck}) {
    if (to_string(c) == text) return c;
  }
  throw Error(ErrorKind::ParseError, "unknown command '" + std::string(text) + "'");
}

Format parse_format(std::string_view text) {
  for (Format f : {Format::Json, Format::Latex, Format::Text}) {
    if (to_string(f) == text) return f;
  }
  throw Error(ErrorKind::ParseError, "unknown format '" + std::string(text) + "'");
}

BasisDocument make_document(const InvariantBasis& basis) {
  BasisDocument doc;
  doc.n = basis.n;
  doc.gamma = basis.gamma.values();
  doc.vars = basis.vars;
  doc.kase = basis.kase;
  doc.k0 = basis.k0;
  doc.alphas = basis.alphas;
  doc.kind = basis.kind;
  doc.multiplier = basis.multiplier;
  for (const auto& p : basis.polynomial_members) {
    DocumentMember m;
    m.type = DocumentMember::Type::Polynomial;
    m.poly = p;
    doc.members.push_back(std::move(m));
  }
  if (basis.rational_member) {
    DocumentMember m;
    m.type = DocumentMember::Type::Rational;
    m.num = basis.rational_member->num();
    m.den = basis.rational_member->den();
    const VarId lead = basis.vars == Vars::Dual ? VarId::x0() : VarId::f();
    m.summands.emplace_back(Polynomial::var(lead), Polynomial(1));
    for (const auto& part : basis.rational_parts) {
      m.summands.emplace_back(part.sum * part.coeff, minor(basis.n, part.k, basis.vars));
    }
    doc.members.push_back(std::move(m));
  }
  for (const auto& pp : basis.power_members) {
    DocumentMember m;
    m.type = DocumentMember::Type::PowerProduct;
    m.factors = pp.exponents;
    doc.members.push_back(std::move(m));
  }
  return doc;
}

Json to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& t : p.terms()) {
    Json mono = Json::object();
    for (const auto& [v, e] : t.monomial.factors()) mono[v.name()] = e;
    terms.push_back(Json{{"coeff", rational_json(t.coeff)}, {"monomial", mono}});
  }
  return Json{{"terms", terms}};
}

Polynomial polynomial_from_json(const Json& j) {
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw Error(ErrorKind::ParseError, "terms must be an array");
  std::vector<Term> out;
  for (const auto& t : terms) {
    Monomial m;
    const Json& mono = field(t, "monomial");
    if (!mono.is_object()) throw Error(ErrorKind::ParseError, "monomial must be an object");
    for (const auto& [name, e] : mono.items()) {
      if (!e.is_number_unsigned()) throw Error(ErrorKind::ParseError, "exponent must be a positive integer");
      m = m * Monomial(VarId::parse(name), e.get<std::uint32_t>());
    }
    out.push_back({m, rational_from(field(t, "coeff"))});
  }
  return Polynomial::from_terms(std::move(out));
}

Json to_json(const ExpScalar& s) {
  Json parts = Json::array();
  for (const auto& [q, p] : s.parts()) parts.push_back(Json{{"grade", rational_json(q)}, {"terms", to_json(p)["terms"]}});
  return Json{{"parts", parts}};
}

ExpScalar exp_scalar_from_json(const Json& j) {
  ExpScalar out;
  for (const auto& part : field(j, "parts")) {
    out += ExpScalar(polynomial_from_json(Json{{"terms", field(part, "terms")}}), rational_from(field(part, "grade")));
  }
  return out;
}

std::string emit_json(const BasisDocument& doc) { return dump(document_json(doc)); }

BasisDocument parse_document(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& err) {
    throw Error(ErrorKind::ParseError, err.what());
  }
  try {
    BasisDocument doc;
    doc.n = field(j, "n").get<int>();
    for (const auto& v : field(j, "gamma")) doc.gamma.push_back(rational_from(v));
    doc.vars = parse_vars(field(j, "vars").get<std::string>());
    const std::string kase = field(j, "case").get<std::string>();
    if (kase != "singular" && kase != "regular") throw Error(ErrorKind::ParseError, "unknown case '" + kase + "'");
    doc.kase = kase == "singular" ? BasisCase::Singular : BasisCase::Regular;
    if (!field(j, "k0").is_null()) doc.k0 = j.at("k0").get<int>();
    doc.alphas = exponents_from(field(j, "alphas"));
    doc.kind = parse_kind(field(j, "kind").get<std::string>());
    if (!field(j, "multiplier").is_null()) doc.multiplier = polynomial_from_json(j.at("multiplier"));
    for (const auto& m : field(j, "members")) doc.members.push_back(member_from(m));
    for (const auto& c : field(j, "certificates")) doc.certificates.push_back(c);
    if (field(j, "cardinality").get<std::size_t>() != doc.members.size()) {
      throw Error(ErrorKind::ParseError, "cardinality does not match the member list");
    }
    return doc;
  } catch (const nlohmann::json::exception& err) {
    throw Error(ErrorKind::ParseError, err.what());
  }
}

std::string emit_latex(const BasisDocument& doc) {
  if (doc.members.empty()) return "\\varnothing\n";
  std::string s;
  for (const auto& m : doc.members) s += member_latex(m, doc.n, doc.vars) + "\n";
  return s;
}

std::string emit_text(const BasisDocument& doc) {
  std::ostringstream os;
  os << "t_gamma(" << doc.n << "), gamma = " << gamma_text(doc.gamma) << ": " << to_string(doc.kase);
  if (doc.k0) os << ", k0 = " << *doc.k0;
  for (const auto& [k, a] : doc.alphas) os << ", alpha_" << k << " = " << a.str();
  os << ", kind " << to_string(doc.kind) << ", " << doc.cardinality() << " invariants\n";
  for (std::size_t i = 0; i < doc.members.size(); ++i) os << "[" << i + 1 << "] " << member_text(doc.members[i]) << "\n";
  return os.str();
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::DimensionMismatch: return kExitUsage;
    case ErrorKind::VerificationFailure:
    case ErrorKind::IdentityFailure: return kExitVerification;
    default: return kExitDomain;
  }
}

std::string error_json(ErrorKind kind, const std::string& message) {
  return dump(Json{{"error", std::string(to_string(kind))}, {"message", message}});
}

RunResult run(const JobSpec& job) {
  try {
    check_n(job);
    switch (job.command) {
      case Command::Gen: return run_gen(job, false);
      case Command::Verify: return run_gen(job, true);
      case Command::Classify: return run_classify(job);
      case Command::Count: return run_count(job);
      case Command::Lifted: return run_lifted(job);
      case Command::Lemma2: return run_lemma2(job);
      case Command::Normcheck: return run_normcheck(job);
      case Command::Symcheck: return run_symcheck(job);
    }
    return {kExitUsage, error_json(ErrorKind::ParseError, "unknown command")};
  } catch (const Error& err) {
    return {exit_code_for(err.kind()), error_json(err.kind(), err.what())};
  } catch (const std::exception& err) {
    return {1, dump(Json{{"error", "InternalError"}, {"message", err.what()}})};
  }
}

}  // namespace trilie
