#include "records.hpp"

#include <cmath>
#include <sstream>

#include "lorentzvol/factor.hpp"

namespace lorentzvol::cli {
namespace {

Json factors_record(const BigInt& value) {
  Json out = Json::array();
  for (const PrimePower& p : factorize(value)) {
    Json f;
    f["base"] = p.base.get_str();
    f["exponent"] = p.exponent;
    f["prime"] = p.prime;
    out.push_back(std::move(f));
  }
  return out;
}

std::string factored_string(const ExactRational& q) {
  const std::string num = format_factorization(factorize(q.numerator()));
  const std::string sign = q.sign() < 0 ? "-" : "";
  if (q.denominator() == 1) return sign + num;
  const auto den_factors = factorize(q.denominator());
  std::string den = format_factorization(den_factors);
  if (den_factors.size() > 1 || (den_factors.size() == 1 && den_factors.front().exponent > 1)) {
    den = "(" + den + ")";
  }
  return sign + num + " / " + den;
}

}  // namespace

Json rational_record(const ExactRational& q) {
  Json out;
  out["numerator"] = q.numerator().get_str();
  out["denominator"] = q.denominator().get_str();
  if (q.is_zero()) {
    out["numerator_factors"] = Json::array();
    out["denominator_factors"] = Json::array();
    out["factored"] = "0";
    return out;
  }
  out["numerator_factors"] = factors_record(q.numerator());
  out["denominator_factors"] = factors_record(q.denominator());
  out["factored"] = factored_string(q);
  return out;
}

Json expression_record(const VolumeExpression& expr) {
  Json out;
  out["coefficient"] = rational_record(expr.coefficient());
  out["sqrt3_exponent"] = expr.sqrt3_exponent();
  out["pi_exponent"] = expr.pi_exponent();
  out["zeta_factors"] = expr.zeta_factors();
  out["l3_factors"] = expr.l3_factors();
  out["expression"] = expr.to_string();
  return out;
}

Json decimal_record(const ApproxReal& x, long precision_bits) {
  Json out;
  const int digits = std::max(1, static_cast<int>(std::floor(static_cast<double>(precision_bits) * 0.30102999566398120)));
  out["value"] = x.value().to_scientific(digits);
  out["abs_error"] = x.abs_error().to_scientific(3, MPFR_RNDU);
  out["precision_bits"] = precision_bits;
  return out;
}

std::string signature_string(const Signature& s) {
  return std::to_string(s.positives) + "," + std::to_string(s.negatives) + "," + std::to_string(s.zeros);
}

Json lattice_record(const GramMatrix& g) {
  Json out;
  out["dimension"] = g.dimension();
  out["determinant"] = determinant(g).to_string();
  out["even"] = is_even(g);
  const Signature sig = signature(g);
  out["signature"] = signature_string(sig);
  out["unimodular"] = determinant(g).abs() == ExactRational(1);
  return out;
}

Json diagram_record(const CoxeterDiagram& d) {
  Json out;
  out["node_count"] = d.node_count();
  out["edge_count"] = d.edges().size();
  out["degree_sequence"] = d.degree_sequence();
  const Signature sig = signature(coxeter_gram(d));
  out["signature"] = signature_string(sig);
  out["rank"] = sig.rank();
  return out;
}

std::string render_text(const Json& record) {
  std::ostringstream os;
  os << record.value("command", std::string("?"));
  if (record.contains("input")) {
    for (const auto& [key, value] : record["input"].items()) {
      os << " " << key << "=" << (value.is_string() ? value.get<std::string>() : value.dump());
    }
  }
  os << "\n";
  if (record.contains("error")) {
    os << "  error:       " << record["error"].get<std::string>() << "\n";
  }
  if (record.contains("exact")) {
    const Json& exact = record["exact"];
    if (exact.contains("expression")) {
      os << "  exact:       " << exact["expression"].get<std::string>() << "\n";
      os << "  coefficient: " << exact["coefficient"]["factored"].get<std::string>() << "\n";
    } else if (exact.contains("value")) {
      os << "  exact:       " << exact["value"]["numerator"].get<std::string>() << "/"
         << exact["value"]["denominator"].get<std::string>() << "\n";
      os << "  factored:    " << exact["value"]["factored"].get<std::string>() << "\n";
    }
  }
  if (record.contains("decimal")) {
    const Json& dec = record["decimal"];
    os << "  value:       " << dec["value"].get<std::string>() << " +/- " << dec["abs_error"].get<std::string>()
       << " (" << dec["precision_bits"].get<long>() << " bits)\n";
  }
  if (record.contains("lattice")) {
    const Json& lat = record["lattice"];
    os << "  dimension:   " << lat["dimension"].get<std::size_t>() << "\n";
    os << "  determinant: " << lat["determinant"].get<std::string>() << "\n";
    os << "  even:        " << (lat["even"].get<bool>() ? "yes" : "no") << "\n";
    os << "  signature:   (" << lat["signature"].get<std::string>() << ")\n";
  }
  if (record.contains("diagram")) {
    const Json& dia = record["diagram"];
    os << "  nodes:       " << dia["node_count"].get<std::size_t>() << "\n";
    os << "  degrees:     " << dia["degree_sequence"].dump() << "\n";
    os << "  signature:   (" << dia["signature"].get<std::string>() << "), rank " << dia["rank"].get<std::size_t>()
       << "\n";
  }
  if (record.contains("checks")) {
    for (const Json& c : record["checks"]) {
      os << "  " << (c["passed"].get<bool>() ? "PASS" : "FAIL") << "  " << c["name"].get<std::string>();
      if (!c["passed"].get<bool>()) os << " (" << c["detail"].get<std::string>() << ")";
      os << "\n";
    }
  }
  os << "  status:      " << record.value("status", std::string("?")) << "\n";
  return os.str();
}

}  // namespace lorentzvol::cli
