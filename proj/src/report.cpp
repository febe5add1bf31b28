#include "pcb/cli.hpp"

#include <sstream>

namespace pcb::cli {

using nlohmann::json;

namespace {

std::string monomial_text(const ExponentVector& e) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    os << (first ? "" : " ") << "x_" << i + 1;
    if (e[i] != 1) os << "^" << e[i];
    first = false;
  }
  return first ? "1" : os.str();
}

json binomial_json(const Binomial& b) {
  return {{"plus", b.plus}, {"minus", b.minus}, {"text", monomial_text(b.plus) + " - " + monomial_text(b.minus)}};
}

json counts_json(const ComponentCounts& c) {
  return {{"isolated", integer_json(c.isolated)},
          {"embedded", c.embedded},
          {"exact", c.exact},
          {"assumption", c.assumption}};
}

template <class F>
json basis_json(const Ideal<F>& ideal) {
  json out = json::array();
  for (const auto& g : ideal.groebner()) out.push_back(g.serialize());
  return out;
}

template <class F>
json generators_json(const Ideal<F>& ideal) {
  json out = json::array();
  for (const auto& g : ideal.generators()) out.push_back(g.serialize());
  return out;
}

json check(const std::string& name, bool passed, json detail = nullptr) {
  json c = {{"name", name}, {"status", passed ? "pass" : "fail"}};
  if (!detail.is_null()) c["detail"] = std::move(detail);
  return c;
}

json skipped(const std::string& name, const std::string& reason) {
  return {{"name", name}, {"status", "skipped"}, {"detail", reason}};
}

void identity_checks(const PcbMatrix& p, json& checks) {
  const SnfResult snf = normalized_snf(p);
  const AssociatedVector av = associated_vector(p);
  checks.push_back(check("syzygy_identity", syzygy_identity_holds(p)));
  if (p.size() >= 4)
    checks.push_back(check("witness_identity", witness_identity_holds(p)));
  else
    checks.push_back(skipped("witness_identity", "requires n >= 4"));
  checks.push_back(check("snf_contract", snf_contract_holds(p.signed_matrix(), snf)));
  checks.push_back(check("last_row_of_P_is_nu", snf.P.row(p.size() - 1) == av.nu));
  Integer prod = 1;
  for (const auto& f : snf.invariant_factors) prod *= f;
  checks.push_back(check("d_equals_product_of_invariant_factors", prod == av.d));
  checks.push_back(check("adjugate_rows_equal_positive", adjugate_rows_agree(p)));
  checks.push_back(check("m_kills_L", (av.m * p.signed_matrix()) == IntVector(p.size(), 0)));
  checks.push_back(check("generators_homogeneous", generators_homogeneous(p)));
  if (const auto small = small_dim_decomposition(p))
    checks.push_back(check("small_dim_decomposition_matches", small->D == snf.D &&
                                                                  small->P * p.signed_matrix() * small->Q == small->D));
  try {
    checks.push_back(check("components_kill_columns", components_kill_columns(p, enumerate_components(p))));
  } catch (const std::length_error& e) {
    checks.push_back(skipped("components_kill_columns", e.what()));
  }
}

template <class F>
void oracle_checks(const PcbMatrix& p, const F& field, json& checks) {
  const std::size_t n = p.size();
  const Ideal<F> i = pcb_ideal(p, field);
  const AssociatedVector av = associated_vector(p);

  const HullRoutes<F> routes = hull_routes(p, field);
  checks.push_back(check("hull_routes_agree", routes.agree(),
                         {{"saturation_exponent", routes.saturation_exponent}}));
  const Ideal<F>& s = routes.colon_i;
  checks.push_back(check("hull_in_herzog_prime", vanishes_on_curve(s, av.m)));
  if (av.d == 1) {
    std::vector<Polynomial<F>> images;
    for (const auto& mi : av.m) {
      Monomial tw(1);
      tw.set(0, static_cast<std::int32_t>(mi.get_si()));
      images.push_back(Polynomial<F>::term(field, 1, tw, field.one()));
    }
    checks.push_back(check("hull_is_herzog_prime", s == ring_map_kernel(images)));
  }

  const bool unmixed = unmixedness_test(p, field);
  checks.push_back(check("unmixedness", unmixed == (n <= 3), {{"unmixed", unmixed}}));
  if (n <= 3) {
    checks.push_back(check("hull_equals_ideal", s == i));
    return;
  }

  const Binomial w = mixedness_witness(p);
  const auto g = binomial_poly(field, w);
  ExponentVector e1(n, 0);
  e1[0] = 1;
  const Ideal<F> colon1 = colon(i, monomial_poly(field, e1));
  checks.push_back(check("witness_in_colon_not_in_ideal", colon1.contains(g) && !i.contains(g)));
  try {
    const EmbeddedComponent<F> c = embedded_component(p, field);
    checks.push_back(check("embedded_component", c.irredundant,
                           {{"generator", c.generator},
                            {"stabilization", c.stabilization},
                            {"nilpotency", c.nilpotency}}));
  } catch (const HypothesisFailed& e) {
    checks.push_back(check("embedded_component", false, e.what()));
  }
}

json decomposition_check(const FullDecompositionReport& rep) {
  json detail = {{"prime", rep.prime}, {"isolated", rep.isolated}, {"embedded", rep.has_embedded}};
  if (rep.mode == FullDecompositionReport::Mode::F2SpecialCase) {
    detail["mode"] = "f2_special_case";
    detail["primary_exponent"] = rep.primary_exponent;
    detail["fourth_power_contained"] = rep.fourth_power_contained;
    detail["hull_in_prime"] = rep.hull_in_prime;
    detail["hull_differs"] = rep.hull_differs;
    detail["hull_meets_embedded"] = rep.hull_meets_embedded;
    detail["primary_components"] = rep.ok() ? 2 : 0;
  } else {
    detail["mode"] = "good_characteristic";
    detail["intersection_equals_ideal"] = rep.intersection_equals_ideal;
    detail["distinct_components"] = rep.distinct_components;
    detail["irredundant"] = rep.irredundant;
  }
  detail["failures"] = rep.failures();
  return check("full_decomposition", rep.ok(), std::move(detail));
}

bool good_prime(const PcbMatrix& p, std::uint32_t prime) {
  const Integer r = normalized_snf(p).invariant_factors.back();
  return r.fits_ulong_p() && (prime - 1) % r.get_ui() == 0;
}

}  // namespace

nlohmann::json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return json(static_cast<std::int64_t>(z.get_si()));
  return json(z.get_str());
}

nlohmann::json vector_json(const IntVector& v) {
  json out = json::array();
  for (const auto& z : v) out.push_back(integer_json(z));
  return out;
}

nlohmann::json matrix_json(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_json(m.row(i)));
  return out;
}

FieldChoice FieldChoice::parse(const std::string& text) {
  FieldChoice f;
  if (text == "symbolic") return f;
  if (text == "q" || text == "Q") {
    f.kind = Kind::Rationals;
    return f;
  }
  if (text.rfind("fp:", 0) == 0) {
    const std::string digits = text.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 10)
      throw std::invalid_argument("bad field '" + text + "'");
    const std::uint64_t p = std::stoull(digits);
    if (p >= (1ull << 31) || !is_prime(p)) throw std::invalid_argument("fp:<p> needs a prime p < 2^31, got " + digits);
    f.kind = Kind::Prime;
    f.prime = static_cast<std::uint32_t>(p);
    return f;
  }
  throw std::invalid_argument("bad field '" + text + "' (expected symbolic, q or fp:<p>)");
}

std::string FieldChoice::name() const {
  switch (kind) {
    case Kind::Symbolic: return "symbolic";
    case Kind::Rationals: return "q";
    case Kind::Prime: return "fp:" + std::to_string(prime);
  }
  return "";
}

nlohmann::json analyze_payload(const PcbMatrix& p) {
  const PcbAnalysis a = analyze(p);
  const TorsionProfile t = torsion_profile(p);
  json gens = json::array();
  for (const auto& f : generators(p)) gens.push_back(binomial_json(f));
  json out = {
      {"n", p.size()},
      {"L", matrix_json(p.signed_matrix())},
      {"generators", gens},
      {"m", vector_json(a.assoc.m)},
      {"d", integer_json(a.assoc.d)},
      {"nu", vector_json(a.assoc.nu)},
      {"invariant_factors", vector_json(a.invariant_factors)},
      {"syzygy_exponents", a.syzygy_exponents},
      {"b_n", a.syzygy_exponents.back()},
      {"hull_prime", a.hull_prime},
      {"counts", counts_json(a.counts)},
      {"counts_bound", counts_json(a.counts_bound)},
      {"torsion",
       {{"fit0", integer_json(t.fit0)},
        {"fit1", integer_json(t.fit1)},
        {"order", integer_json(t.torsion_order)},
        {"direct_summand", t.is_direct_summand},
        {"cyclic_factors", vector_json(t.cyclic_factors)}}},
  };
  if (p.size() >= 4) {
    out["witness"] = binomial_json(mixedness_witness(p));
    const auto& bn = a.syzygy_exponents.back();
    out["embedded_generator"] = {{"exponents", bn}, {"text", monomial_text(bn)}};
  } else {
    out["witness"] = nullptr;
    out["embedded_generator"] = nullptr;
  }
  return out;
}

nlohmann::json snf_payload(const PcbMatrix& p) {
  const SnfResult snf = normalized_snf(p);
  json out = {{"P", matrix_json(snf.P)},
              {"Q", matrix_json(snf.Q)},
              {"D", matrix_json(snf.D)},
              {"invariant_factors", vector_json(snf.invariant_factors)},
              {"rank", snf.rank()}};
  if (const auto small = small_dim_decomposition(p))
    out["closed_form"] = {{"P", matrix_json(small->P)}, {"Q", matrix_json(small->Q)}, {"D", matrix_json(small->D)}};
  else
    out["closed_form"] = nullptr;
  return out;
}

nlohmann::json decompose_payload(const PcbMatrix& p, const FieldChoice& field) {
  if (field.kind == FieldChoice::Kind::Rationals)
    throw std::invalid_argument("decompose supports --field symbolic or fp:<p>");
  const auto specs = enumerate_components(p);
  const std::int64_t r = specs.front().root_order;
  const PcbAnalysis a = analyze(p);

  json out = {{"field", field.name()},
              {"root_order", r},
              {"hull_prime", a.hull_prime},
              {"counts", counts_json(a.counts)},
              {"field_note", "k contains the d_{n-1}-th roots of unity, char 0 or p does not divide d_{n-1}"}};

  std::optional<std::vector<Ideal<PrimeField>>> realized;
  if (field.kind == FieldChoice::Kind::Prime) {
    const std::uint32_t zeta = root_of_unity(field.prime, r);
    out["prime"] = field.prime;
    out["zeta"] = zeta;
    realized = realize_over_prime_field(p, field.prime);
  }

  json comps = json::array();
  for (std::size_t k = 0; k < specs.size(); ++k) {
    const auto& s = specs[k];
    json c = {{"index", k + 1},
              {"lambda_index", s.lambda_index},
              {"coeff_exponents", s.coeff_exponents},
              {"weights", vector_json(s.weights)},
              {"parametrization", s.describe()}};
    if (realized) c["generators"] = basis_json((*realized)[k]);
    comps.push_back(std::move(c));
  }
  out["components"] = std::move(comps);

  if (p.size() >= 4) {
    const auto bn = syzygy_vectors(p).back();
    json e = {{"generator", bn}, {"text", monomial_text(bn)}};
    if (field.kind == FieldChoice::Kind::Prime) {
      const PrimeField f(field.prime);
      e["generators"] = generators_json(pcb_ideal(p, f) + Ideal<PrimeField>(f, p.size(), {monomial_poly(f, bn)}));
    } else {
      const Rationals q;
      e["generators"] = generators_json(pcb_ideal(p, q) + Ideal<Rationals>(q, p.size(), {monomial_poly(q, bn)}));
    }
    out["embedded"] = std::move(e);
  } else {
    out["embedded"] = nullptr;
  }
  return out;
}

VerifyOutcome verify_payload(const PcbMatrix& p, const FieldChoice& field, bool full) {
  if (field.kind == FieldChoice::Kind::Symbolic) throw std::invalid_argument("verify supports --field q or fp:<p>");
  const bool prime = field.kind == FieldChoice::Kind::Prime;
  if (prime && !good_prime(p, field.prime) && !(field.prime == 2 && is_simplest_n4(p)))
    throw BadPrime(field.prime, normalized_snf(p).invariant_factors.back());

  json checks = json::array();
  identity_checks(p, checks);
  if (full) {
    if (prime) {
      const PrimeField f(field.prime);
      if (good_prime(p, field.prime)) oracle_checks(p, f, checks);
      checks.push_back(decomposition_check(verify_full_decomposition(p, field.prime)));
    } else {
      oracle_checks(p, Rationals{}, checks);
      checks.push_back(skipped("full_decomposition", "needs --field fp:<p> with p ≡ 1 (mod d_{n-1})"));
    }
  }

  json failures = json::array();
  for (const auto& c : checks)
    if (c["status"] == "fail") failures.push_back(c["name"]);
  VerifyOutcome out;
  out.ok = failures.empty();
  out.payload = {{"field", field.name()},
                 {"level", full ? "full" : "identities"},
                 {"checks", std::move(checks)},
                 {"failures", std::move(failures)},
                 {"ok", out.ok}};
  return out;
}

std::string render_pretty(const nlohmann::json& envelope) {
  std::ostringstream os;
  os << envelope.value("tool", "") << " " << envelope.value("version", "") << "  " << envelope.value("command", "")
     << "\n";
  os << "input sha256 " << envelope.value("input_digest", "") << "\n";
  const json& payload = envelope["payload"];
  for (const auto& [key, value] : payload.items()) {
    if (key == "checks") {
      os << "checks:\n";
      for (const auto& c : value)
        os << "  [" << c["status"].get<std::string>() << "] " << c["name"].get<std::string>() << "\n";
    } else if (key == "components") {
      os << "components (" << value.size() << "):\n";
      for (const auto& c : value) {
        os << "  " << c["index"].dump() << ": " << c["parametrization"].get<std::string>() << "\n";
        if (c.contains("generators")) {
          for (const auto& g : c["generators"]) os << "      " << g.get<std::string>() << "\n";
        }
      }
    } else {
      os << key << ": " << value.dump() << "\n";
    }
  }
  os << "timing_ms: " << envelope.value("timing_ms", 0) << "\n";
  return os.str();
}

}  // namespace pcb::cli
