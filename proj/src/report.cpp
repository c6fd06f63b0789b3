#include "hm/threshold.hpp"

#include <sstream>

namespace hm {

namespace {

ordered_json integer_json(const Integer& v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) return v.get_si();
  return v.get_str();
}

template <class T>
ordered_json optional_integer(const std::optional<T>& v) {
  return v ? integer_json(*v) : ordered_json(nullptr);
}

}  // namespace

ordered_json to_json(const ThresholdQuery& q) {
  ordered_json j;
  j["n"] = q.n;
  j["k"] = q.k;
  j["d"] = q.d;
  j["s"] = q.s.str();
  j["mode"] = to_string(q.mode);
  return j;
}

ordered_json to_json(const Regime& r) {
  ordered_json j;
  j["theorem"] = r.theorem;
  j["frankl"] = r.frankl;
  j["fk"] = r.fk;
  j["margin_f"] = r.margin_f.str();
  j["margin_g"] = r.margin_g.str();
  j["lower_bound_only"] = r.lower_bound_only;
  j["theorem_s0"] = r.theorem_s0.str();
  j["fk_s0"] = r.fk_s0;
  j["fk_s0_unverified"] = true;
  return j;
}

ordered_json to_json(const ThresholdReport& r) {
  ordered_json j;
  j["query"] = to_json(r.query);
  j["formula"] = optional_integer(r.formula);
  j["oracle"] = optional_integer(r.oracle);
  j["regime"] = r.formula ? to_json(r.regime) : ordered_json(nullptr);
  j["witness"] = r.witness ? to_json(*r.witness) : ordered_json(nullptr);
  if (r.certificate) {
    ordered_json c;
    c["construction"] = "extremal";
    c["edges"] = r.certificate->edges;
    c["min_degree"] = r.certificate->min_degree;
    c["degree_witness"] = r.certificate->degree_witness;
    c["verdict"] = to_json(r.certificate->verdict);
    c["verified"] = r.certificate->verified;
    j["certificate"] = c;
  } else {
    j["certificate"] = nullptr;
  }
  if (r.error) j["error"] = *r.error;
  return j;
}

std::string reports_jsonl(const std::vector<ThresholdReport>& reports) {
  std::string out;
  for (const auto& r : reports) out += to_json(r).dump() + "\n";
  return out;
}

std::string reports_csv(const std::vector<ThresholdReport>& reports) {
  std::ostringstream os;
  os << "n,k,d,s,mode,formula,oracle,theorem,frankl,fk,margin_f,margin_g,certificate_verified,error\n";
  for (const auto& r : reports) {
    const auto& q = r.query;
    os << q.n << ',' << q.k << ',' << q.d << ',' << q.s.str() << ',' << to_string(q.mode) << ','
       << (r.formula ? r.formula->get_str() : "") << ',' << (r.oracle ? r.oracle->get_str() : "")
       << ',';
    if (r.formula) {
      os << r.regime.theorem << ',' << r.regime.frankl << ',' << r.regime.fk << ','
         << r.regime.margin_f.str() << ',' << r.regime.margin_g.str() << ',';
    } else {
      os << ",,,,,";
    }
    os << (r.certificate ? (r.certificate->verified ? "1" : "0") : "") << ',';
    if (r.error) {
      std::string e = *r.error;
      std::string quoted = "\"";
      for (char c : e) quoted += (c == '"') ? std::string("\"\"") : std::string(1, c);
      os << quoted << '"';
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace hm
