#include "twlat/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "twlat/coweights.hpp"
#include "twlat/demazure.hpp"
#include "twlat/oracles.hpp"
#include "twlat/serialization.hpp"

namespace twlat {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::vector<int> lambda;
  std::vector<int> lhs, rhs;
  int p = 0;
  int e = 1;
  std::vector<int> modulus;
  std::string ideal_path;
  std::uint64_t cap = EnumerationOptions{}.cap;
  bool count_only = false;
  std::string check;
  std::size_t degree = 0;
};

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

FieldParams field_of(const Config& c) {
  if (c.p == 0) throw UsageError("--p is required");
  try {
    if (!c.modulus.empty()) return FieldParams::make(c.p, c.e, c.modulus);
    return FieldParams::make(c.p, c.e);
  } catch (const std::invalid_argument& ex) {
    throw UsageError(std::string("invalid field parameters: ") + ex.what());
  }
}

Coweight lambda_of(const Config& c) {
  if (c.lambda.empty()) throw UsageError("--lambda is required");
  if (!is_dominant(c.lambda)) throw UsageError("--lambda must be dominant (weakly decreasing)");
  if (c.lambda.size() < 2) throw UsageError("--lambda needs at least two entries");
  return c.lambda;
}

TwistedLinearIdeal ideal_of(const Config& c) {
  if (c.ideal_path.empty()) throw UsageError("--ideal is required");
  std::ifstream in(c.ideal_path);
  if (!in) throw UsageError("cannot read " + c.ideal_path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return ideal_from_text(ss.str());
  } catch (const FormatError& ex) {
    throw UsageError(c.ideal_path + ": " + ex.what());
  } catch (const std::invalid_argument& ex) {
    throw UsageError(c.ideal_path + ": " + ex.what());
  }
}

// The coweight attached to an ideal: --lambda if given, else read off its level jumps.
Coweight lambda_for(const Config& c, const TwistedLinearIdeal& I) {
  if (!c.lambda.empty()) return lambda_of(c);
  return infer_coweight(I);
}

Json header_of(const Config& c, const std::string& sub) {
  Json h;
  h["subcommand"] = sub;
  h["lambda"] = c.lambda;
  h["p"] = c.p;
  h["e"] = c.e;
  h["modulus"] = c.modulus;
  h["ideal"] = c.ideal_path;
  h["cap"] = c.cap;
  h["countOnly"] = c.count_only;
  h["check"] = c.check;
  return h;
}

int cmd_decompose(const Config& c, std::ostream& out) {
  const auto lambda = lambda_of(c);
  const auto nz = normalize(lambda);
  const auto ms = standard_decomposition(lambda);
  Json j;
  j["lambdaTilde"] = nz.lambda_tilde;
  j["N"] = nz.N;
  j["mus"] = ms.mus;
  j["dim"] = demazure_dimension(lambda);
  emit(out, j);
  return kExitOk;
}

int cmd_enumerate(const Config& c, std::ostream& out) {
  const auto lambda = lambda_of(c);
  const auto field = field_of(c);
  const auto count = count_points(lambda, field);
  if (c.count_only) {
    emit(out, Json{{"count", count}});
    return kExitOk;
  }
  if (count > c.cap)
    throw UsageError("predicted count " + std::to_string(count) + " exceeds --cap " + std::to_string(c.cap));
  enumerate_points(lambda, field, EnumerationOptions{c.cap}, [&](const DemazurePoint& pt) {
    emit(out, ideal_to_json(pt.ideal));
    return true;
  });
  return kExitOk;
}

int cmd_sigma(const Config& c, std::ostream& out, std::ostream& err) {
  const auto I = ideal_of(c);
  const auto lambda = lambda_for(c, I);
  const auto m = is_member_T(I, lambda);
  if (!m.member) {
    err << "ideal is not a point of T_N(lambda): " << m.diagnostic << '\n';
    return kExitAssertion;
  }
  emit(out, Json{{"lambda", lambda}, {"chain", chain_to_json(sigma(I, lambda))}});
  return kExitOk;
}

std::size_t default_degree(const AmbientParams& a) {
  std::size_t d = a.n;
  for (std::size_t j = 0; j + 1 < a.N; ++j) d *= static_cast<std::size_t>(a.field.p());
  return d;
}

int cmd_hilbert(const Config& c, std::ostream& out) {
  const auto I = ideal_of(c);
  const std::size_t d = c.degree ? c.degree : default_degree(I.ambient());
  emit(out, Json{{"maxDegree", d}, {"hilbert", hilbert_function(I, d)}});
  return kExitOk;
}

int cmd_invariants(const Config& c, std::ostream& out, std::ostream& err) {
  const auto I = ideal_of(c);
  const auto lambda = lambda_for(c, I);
  const auto m = is_member_T(I, lambda);
  if (!m.member) {
    err << "ideal is not a point of T_N(lambda): " << m.diagnostic << '\n';
    return kExitAssertion;
  }
  const auto image = schubert_image(I, lambda);
  const auto lt = normalize(lambda).lambda_tilde;
  emit(out, Json{{"invariants", image}, {"lambdaTilde", lt}, {"belowLambda", bruhat_leq(image, lt)}});
  return kExitOk;
}

int cmd_bruhat(const Config& c, std::ostream& out) {
  if (c.lhs.empty() || c.rhs.empty()) throw UsageError("--lhs and --rhs are required");
  bool leq;
  try {
    leq = bruhat_leq(c.lhs, c.rhs);
  } catch (const std::invalid_argument& ex) {
    throw UsageError(ex.what());
  }
  emit(out, Json{{"lhs", c.lhs}, {"rhs", c.rhs}, {"leq", leq}});
  return kExitOk;
}

int cmd_bigcell(const Config& c, std::ostream& out, std::ostream& err) {
  const auto I = ideal_of(c);
  const auto lambda = lambda_for(c, I);
  const auto m = is_member_T(I, lambda);
  if (!m.member) {
    err << "ideal is not a point of T_N(lambda): " << m.diagnostic << '\n';
    return kExitAssertion;
  }
  const bool big = big_cell_test(I, lambda);
  const bool reduced = is_reduced(I);
  emit(out, Json{{"bigCell", big}, {"reduced", reduced}});
  if (big != reduced) {
    err << "big-cell test and reducedness disagree\n";
    return kExitAssertion;
  }
  return kExitOk;
}

int cmd_verify(const Config& c, std::ostream& out, std::ostream& err) {
  const auto lambda = lambda_of(c);
  const auto field = field_of(c);
  if (count_points(lambda, field) > c.cap) throw UsageError("predicted count exceeds --cap");
  const auto rep = verify_theorems(lambda, field, EnumerationOptions{c.cap});
  for (const auto& chk : rep.checks)
    emit(out, Json{{"check", chk.name}, {"result", chk.passed ? "pass" : "fail"}, {"detail", chk.detail}});
  emit(out, Json{{"lambda", lambda},
                 {"predicted", rep.predicted},
                 {"enumerated", rep.enumerated},
                 {"chains", rep.chains},
                 {"bigCell", rep.big_cell},
                 {"result", rep.passed() ? "pass" : "fail"}});
  if (!rep.passed()) {
    err << "verification failed\n";
    return kExitAssertion;
  }
  return kExitOk;
}

int cmd_oracle(const Config& c, std::ostream& out, std::ostream& err) {
  const auto I = ideal_of(c);
  const auto& a = I.ambient();
  bool agree = true;
  Json j;
  j["check"] = c.check;
  if (c.check == "intersection") {
    Json levels = Json::array();
    for (std::size_t l = 0; l <= I.top_level(); ++l) {
      const auto fast = I.level_space(l);
      const auto slow = naive_intersection(I, l);
      const bool ok = fast == slow;
      agree = agree && ok;
      levels.push_back(Json{{"level", l}, {"fast", fast.dim()}, {"oracle", slow.dim()}, {"agree", ok}});
    }
    j["levels"] = levels;
  } else if (c.check == "hilbert") {
    const std::size_t d = c.degree ? c.degree : default_degree(a);
    const auto fast = hilbert_function(I, d);
    std::vector<std::int64_t> slow;
    for (std::size_t k = 0; k <= d; ++k) slow.push_back(naive_hilbert(I, k));
    agree = fast == slow;
    j["fast"] = fast;
    j["oracle"] = slow;
  } else if (c.check == "stability") {
    const bool fast = is_lattice_scheme(I);
    const bool slow = comult_stability(I);
    agree = fast == slow;
    j["fast"] = fast;
    j["oracle"] = slow;
  } else if (c.check == "radical") {
    const bool fast = is_reduced(I);
    const auto rep = radical_oracle(I);
    agree = rep.stable && fast == rep.reduced;
    j["fast"] = fast;
    j["oracle"] = rep.reduced;
    j["stable"] = rep.stable;
    j["extensionDegree"] = rep.degree;
    j["idealDims"] = rep.ideal_dims;
    j["vanishingDims"] = rep.vanishing_dims;
  } else if (c.check == "tangent") {
    const auto h = deformation_count(I, DeformationModel::hilbert);
    const auto t = deformation_count(I, DeformationModel::T);
    j["hilbert"] = h.dimension;
    j["T"] = t.dimension;
    j["candidates"] = h.candidates;
    emit(out, j);
    return kExitOk;
  } else {
    throw UsageError("unknown --check " + c.check);
  }
  j["agree"] = agree;
  emit(out, j);
  if (!agree) {
    err << "fast path and oracle disagree\n";
    return kExitAssertion;
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Twisted-linear ideals, lattice chains and their brute-force oracles"};
  app.require_subcommand(1);
  Config c;

  auto add_field = [&](CLI::App* s) {
    s->add_option("--p", c.p, "characteristic");
    s->add_option("--e", c.e, "degree over the prime field");
    s->add_option("--modulus", c.modulus, "irreducible modulus c0,c1,...,ce")->delimiter(',');
  };
  auto add_lambda = [&](CLI::App* s) {
    s->add_option("--lambda", c.lambda, "dominant coweight a,b,...")->delimiter(',')->allow_extra_args(false);
  };
  auto add_ideal = [&](CLI::App* s) { s->add_option("--ideal", c.ideal_path, "ideal JSON file"); };

  auto* decompose = app.add_subcommand("decompose", "standard decomposition of lambda");
  add_lambda(decompose);
  auto* enumerate = app.add_subcommand("enumerate", "points of T_N(lambda)");
  add_lambda(enumerate);
  add_field(enumerate);
  enumerate->add_option("--cap", c.cap, "maximum number of points");
  enumerate->add_flag("--count-only", c.count_only, "print the count only");
  auto* sig = app.add_subcommand("sigma", "lattice chain of an ideal");
  add_ideal(sig);
  add_lambda(sig);
  auto* hil = app.add_subcommand("hilbert", "Hilbert function of an ideal");
  add_ideal(hil);
  hil->add_option("--degree", c.degree, "largest degree");
  auto* inv = app.add_subcommand("invariants", "invariants of the last chain member");
  add_ideal(inv);
  add_lambda(inv);
  auto* bru = app.add_subcommand("bruhat", "dominance order of two partitions");
  bru->add_option("--lhs", c.lhs)->delimiter(',');
  bru->add_option("--rhs", c.rhs)->delimiter(',');
  auto* big = app.add_subcommand("bigcell", "big-cell test");
  add_ideal(big);
  add_lambda(big);
  auto* ver = app.add_subcommand("verify", "run all point-level checks for lambda");
  add_lambda(ver);
  add_field(ver);
  ver->add_option("--cap", c.cap, "maximum number of points");
  auto* ora = app.add_subcommand("oracle", "compare a fast path with its oracle");
  add_ideal(ora);
  ora->add_option("--check", c.check, "intersection|hilbert|stability|radical|tangent")->required();
  ora->add_option("--degree", c.degree, "largest degree for --check hilbert");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const auto* sub = app.get_subcommands().front();
  err << header_of(c, sub->get_name()).dump() << '\n';
  try {
    if (sub == decompose) return cmd_decompose(c, out);
    if (sub == enumerate) return cmd_enumerate(c, out);
    if (sub == sig) return cmd_sigma(c, out, err);
    if (sub == hil) return cmd_hilbert(c, out);
    if (sub == inv) return cmd_invariants(c, out, err);
    if (sub == bru) return cmd_bruhat(c, out);
    if (sub == big) return cmd_bigcell(c, out, err);
    if (sub == ver) return cmd_verify(c, out, err);
    if (sub == ora) return cmd_oracle(c, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitAssertion;
  }
  return kExitUsage;
}

}  // namespace twlat
