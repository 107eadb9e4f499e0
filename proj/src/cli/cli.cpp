#include "cmperiods/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cmperiods/csperiods.hpp"
#include "cmperiods/epstein.hpp"
#include "cmperiods/errors.hpp"
#include "cmperiods/fermat.hpp"
#include "cmperiods/heckechar.hpp"
#include "cmperiods/modarith.hpp"
#include "cmperiods/relint.hpp"
#include "cmperiods/report.hpp"

namespace cmperiods {

namespace {

struct Options {
  int prec = 120;
  bool json = false;
  unsigned threads = 1;
  std::string out_file;

  long d = 0;
  long p = 0;
  long class_index = -1;
  std::vector<long> rst;
  std::vector<long> form;
  std::string value;
  long sqrtp = 0;
  std::string max_den = "1000000000000";
  long max_d = 50;
};

using Records = std::vector<CheckRecord>;

std::string join(const std::vector<long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

std::string forms_list(const ClassGroup& group) {
  std::string s;
  for (const QuadForm& f : group.forms) s += (s.empty() ? "" : " ") + f.to_string();
  return s;
}

CheckRecord class_record(const Discriminant& disc) {
  const ClassGroup group = reduced_forms(disc);
  CheckRecord r;
  r.check = "class_number";
  r.inputs = {{"d", std::to_string(disc.d())}};
  r.details.emplace_back("forms", forms_list(group));
  r.details.emplace_back("h_forms", std::to_string(group.h()));
  if (disc.d() > 4) {
    const mpq_class h = class_number_dirichlet(disc);
    r.details.emplace_back("h_dirichlet", h.get_str());
    r.pass = h == static_cast<long>(group.h());
  } else {
    r.pass = group.h() == 1;
  }
  return r;
}

Records kronecker_records(const Discriminant& disc, long class_index,
                          const PrecisionContext& ctx, int digits) {
  const ClassGroup group = reduced_forms(disc);
  Records out;
  for (std::size_t i = 0; i < group.h(); ++i) {
    if (class_index >= 0 && static_cast<std::size_t>(class_index) != i) continue;
    CheckRecord r = to_record(kronecker_verify(disc, group.forms[i], ctx), digits);
    r.inputs.emplace_back("class", std::to_string(i));
    out.push_back(std::move(r));
  }
  if (class_index >= static_cast<long>(group.h())) {
    throw DomainError("class index out of range, h = " + std::to_string(group.h()));
  }
  return out;
}

CheckRecord m_record(const Discriminant& p) {
  CheckRecord r;
  r.check = "m_invariant";
  r.inputs = {{"p", std::to_string(p.d())}};
  const mpq_class m = m_invariant(p);
  r.details.emplace_back("m", m.get_str());
  r.details.emplace_back("h", std::to_string(reduced_forms(p).h()));
  r.pass = true;
  return r;
}

Records fermat_records(long p, const std::vector<long>& rst,
                       const PrecisionContext& ctx, int digits) {
  if (rst.size() != 3) throw DomainError("--rst needs three values R,S,T");
  const long r = rst[0], s = rst[1], t = rst[2];
  const CMTypeRecord rec = cm_type(p, r, s, t);
  const int e = epsilon_rst(p, r, s, t);
  const long h = static_cast<long>(reduced_forms(Discriminant::make(p)).h());
  std::vector<std::pair<std::string, std::string>> inputs{{"p", std::to_string(p)},
                                                          {"rst", join(rst)}};
  CheckRecord type;
  type.check = "cm_type";
  type.inputs = inputs;
  type.details.emplace_back("phi", join(rec.phi));
  type.details.emplace_back("u", std::to_string(rec.u));
  type.details.emplace_back("v", std::to_string(rec.v));
  type.details.emplace_back("eps", std::to_string(e));
  type.details.emplace_back("h", std::to_string(h));
  type.pass = rec.u + rec.v == (p - 1) / 2 && rec.u - rec.v == h * e;
  Records out{type};
  if (e != 1 && e != -1) {
    throw DomainError("eps(r,s,t) = " + std::to_string(e) +
                      "; period certificates need +1 or -1");
  }
  out.push_back(to_record(beta_gamma_certificate(p, r, s, t, ctx), inputs, digits));
  CheckRecord twist = to_record(tate_twist_certificate(p, r, s, t, ctx), inputs, digits);
  const RatioCertificate literal = twisted_gamma_ratio(p, r, s, t, ctx);
  twist.details.emplace_back(
      "with_2pi_m_recognized",
      literal.recognized ? literal.recognized->get_str() : std::string("none"));
  out.push_back(std::move(twist));
  return out;
}

CheckRecord hecke_record(long p, const std::vector<long>& abc) {
  if (abc.size() != 3) throw DomainError("--form needs three values A,B,C");
  const Discriminant disc = Discriminant::make(p);
  const QuadForm f{abc[0], abc[1], abc[2]};
  const QuadInteger beta = psi_M(f, disc);
  const long h = static_cast<long>(reduced_forms(disc).h());
  mpz_class expected;
  mpz_ui_pow_ui(expected.get_mpz_t(), static_cast<unsigned long>(f.a),
                static_cast<unsigned long>(h));
  const mpz_class n = norm(beta, disc);
  CheckRecord r;
  r.check = "hecke_psi";
  r.inputs = {{"p", std::to_string(p)}, {"form", f.to_string()}};
  r.details.emplace_back("x", std::to_string(beta.x));
  r.details.emplace_back("y", std::to_string(beta.y));
  r.details.emplace_back("norm", n.get_str());
  r.details.emplace_back("N(a)^h", expected.get_str());
  r.pass = n == expected && is_square_mod_root(beta, p);
  return r;
}

CheckRecord recognize_record(const Options& o, const PrecisionContext& ctx) {
  const BigReal x = BigReal::from_string(o.value, ctx.bits());
  mpz_class max_den;
  if (max_den.set_str(o.max_den, 10) != 0) throw DomainError("bad --max-den");
  CheckRecord r;
  r.check = "recognize";
  r.inputs = {{"value", o.value}};
  std::optional<mpq_class> q;
  if (o.sqrtp != 0) {
    r.inputs.emplace_back("sqrtp", std::to_string(o.sqrtp));
    q = recognize_sqrtp(x, o.sqrtp, max_den, ctx);
  } else {
    q = recognize_rational(x, max_den, ctx);
  }
  r.details.emplace_back("recognized", q ? q->get_str() : std::string("none"));
  r.pass = q.has_value();
  return r;
}

Records suite_records(long max_d, const PrecisionContext& ctx, unsigned threads,
                      int digits) {
  Records out;
  for (const Discriminant& disc : fundamental_discriminants(3, max_d)) {
    out.push_back(class_record(disc));
    out.push_back(to_record(cs_verify(disc, ctx, threads), digits));
    for (auto& r : kronecker_records(disc, -1, ctx, digits)) out.push_back(std::move(r));
    if (!disc.is_prime_3mod4()) continue;
    out.push_back(m_record(disc));
    out.push_back(to_record(period_product_verify(disc, ctx, threads), digits));
    out.push_back(to_record(faltings_verify(disc, ctx, threads), digits));
    for (const QuadForm& f : reduced_forms(disc).forms) {
      out.push_back(hecke_record(disc.d(), {f.a, f.b, f.c}));
    }
    if (disc.d() <= 19) {
      for (const auto& rst : all_triples(disc.d())) {
        const int e = epsilon_rst(disc.d(), rst[0], rst[1], rst[2]);
        if (e != 1 && e != -1) continue;
        for (auto& r : fermat_records(disc.d(), rst, ctx, digits)) {
          out.push_back(std::move(r));
        }
      }
    }
  }
  return out;
}

void emit(const Records& records, const Options& o, std::ostream& out) {
  std::ostringstream buf;
  if (o.json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const CheckRecord& r : records) arr.push_back(to_json(r));
    buf << arr.dump(2) << "\n";
  } else {
    for (const CheckRecord& r : records) buf << to_text(r);
  }
  if (o.out_file.empty()) {
    out << buf.str();
    return;
  }
  std::ofstream file(o.out_file);
  if (!file) throw DomainError("cannot open " + o.out_file + " for writing");
  file << buf.str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"High-precision certification of the Chowla-Selberg formula",
               "cmperiods"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--prec", o.prec, "Target decimal digits")
      ->check(CLI::Range(PrecisionContext::kMinTarget, 100000));
  app.add_flag("--json", o.json, "JSON output");
  app.add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1u, 1024u));
  app.add_option("--out", o.out_file, "Write the report to FILE");

  auto* cls = app.add_subcommand("class", "Reduced forms and class number");
  cls->add_option("--d", o.d, "d with -d fundamental")->required();
  auto* cs = app.add_subcommand("verify-cs", "Chowla-Selberg identity");
  cs->add_option("--d", o.d)->required();
  auto* kr = app.add_subcommand("kronecker", "Kronecker limit formula per class");
  kr->add_option("--d", o.d)->required();
  kr->add_option("--class", o.class_index, "Class index (default: all)");
  auto* per = app.add_subcommand("periods", "CM period product and m-invariant");
  per->add_option("--p", o.p)->required();
  auto* fal = app.add_subcommand("faltings", "Faltings height two ways");
  fal->add_option("--p", o.p)->required();
  auto* fer = app.add_subcommand("fermat", "CM type and period certificates");
  fer->add_option("--p", o.p)->required();
  fer->add_option("--rst", o.rst, "R,S,T")->required()->delimiter(',')->expected(3);
  auto* hec = app.add_subcommand("hecke", "Hecke character value psi_M");
  hec->add_option("--p", o.p)->required();
  hec->add_option("--form", o.form, "A,B,C")->required()->delimiter(',')->expected(3);
  auto* rec = app.add_subcommand("recognize", "Recognize a rational or rational*sqrt(p)");
  rec->add_option("--value", o.value)->required();
  rec->add_option("--sqrtp", o.sqrtp, "Recognize value / sqrt(P)");
  rec->add_option("--max-den", o.max_den, "Denominator bound (default 10^12)");
  auto* suite = app.add_subcommand("suite", "Run the invariant battery");
  suite->add_option("--max-d", o.max_d, "Largest d")->check(CLI::Range(3L, 100000L));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    const PrecisionContext ctx(o.prec);
    const int digits = ctx.target_digits();
    Records records;
    if (cls->parsed()) {
      records.push_back(class_record(Discriminant::make(o.d)));
    } else if (cs->parsed()) {
      records.push_back(to_record(cs_verify(Discriminant::make(o.d), ctx, o.threads), digits));
    } else if (kr->parsed()) {
      records = kronecker_records(Discriminant::make(o.d), o.class_index, ctx, digits);
    } else if (per->parsed()) {
      const Discriminant p = Discriminant::make(o.p);
      records.push_back(to_record(period_product_verify(p, ctx, o.threads), digits));
      records.push_back(m_record(p));
    } else if (fal->parsed()) {
      records.push_back(
          to_record(faltings_verify(Discriminant::make(o.p), ctx, o.threads), digits));
    } else if (fer->parsed()) {
      records = fermat_records(o.p, o.rst, ctx, digits);
    } else if (hec->parsed()) {
      records.push_back(hecke_record(o.p, o.form));
    } else if (rec->parsed()) {
      records.push_back(recognize_record(o, ctx));
    } else if (suite->parsed()) {
      records = suite_records(o.max_d, ctx, o.threads, digits);
    }
    emit(records, o, out);
    for (const CheckRecord& r : records) {
      if (!r.pass) return 1;
    }
    return 0;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const PrecisionError& e) {
    err << "precision failure: " << e.what() << " (achieved " << e.achieved_digits()
        << " digits)\n";
    return 3;
  } catch (const ConsistencyError& e) {
    err << "consistency failure: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace cmperiods
