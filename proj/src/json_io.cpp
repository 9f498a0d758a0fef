#include "rpgeo/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "rpgeo/error.hpp"

namespace rpgeo::io {

namespace {

// Object view that rejects keys nobody asked about.
class Obj {
 public:
  Obj(const Json& j, std::string where) : j_(j), where_(std::move(where)) {
    if (!j.is_object()) throw ParseError(where_ + ": expected an object");
  }
  ~Obj() = default;

  bool has(const std::string& key) {
    seen_.insert(key);
    return j_.contains(key);
  }
  const Json& at(const std::string& key) {
    if (!has(key)) throw ParseError(where_ + ": missing \"" + key + "\"");
    return j_.at(key);
  }
  std::int64_t integer(const std::string& key) {
    const Json& v = at(key);
    if (!v.is_number_integer()) throw ParseError(where_ + "." + key + ": expected an integer");
    return v.get<std::int64_t>();
  }
  std::int64_t integer_or(const std::string& key, std::int64_t dflt) { return has(key) ? integer(key) : dflt; }
  bool boolean_or(const std::string& key, bool dflt) {
    if (!has(key)) return dflt;
    const Json& v = j_.at(key);
    if (!v.is_boolean()) throw ParseError(where_ + "." + key + ": expected true or false");
    return v.get<bool>();
  }
  std::vector<ExactReal> reals_or_empty(const std::string& key) {
    std::vector<ExactReal> out;
    if (!has(key)) return out;
    const Json& v = j_.at(key);
    if (!v.is_array()) throw ParseError(where_ + "." + key + ": expected an array");
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(exact_from(v[i], path(key, i)));
    return out;
  }
  std::string path(const std::string& key, std::size_t i) const {
    return where_ + "." + key + "[" + std::to_string(i) + "]";
  }
  std::string path(const std::string& key) const { return where_ + "." + key; }
  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (!seen_.count(it.key())) throw ParseError(where_ + ": unknown key \"" + it.key() + "\"");
    }
  }

 private:
  const Json& j_;
  std::string where_;
  std::set<std::string> seen_;
};

template <typename Fn>
auto rethrow_as_parse(const std::string& where, Fn fn) {
  try {
    return fn();
  } catch (const ParseError&) {
    throw;
  } catch (const UnsupportedFieldError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(where + ": " + e.what());
  }
}

std::vector<std::int64_t> int_array(const Json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected an array");
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number_integer()) throw ParseError(where + "[" + std::to_string(i) + "]: expected an integer");
    out.push_back(v[i].get<std::int64_t>());
  }
  return out;
}

std::vector<Rational> rational_array(const Json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected an array");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(rational_from(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

Json strings(const std::vector<ExactReal>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(x.str());
  return a;
}

Json strings(const std::vector<Rational>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(x.str());
  return a;
}

}  // namespace

Json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Rational rational_from(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) throw ParseError(where + ": expected a rational string or integer");
  return rethrow_as_parse(where, [&] { return Rational::parse(j.get<std::string>()); });
}

ExactReal exact_from(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return ExactReal(j.get<std::int64_t>());
  if (!j.is_string()) throw ParseError(where + ": expected a number string such as \"1/3 + 1/2*sqrt(5)\"");
  return rethrow_as_parse(where, [&] { return ExactReal::parse(j.get<std::string>()); });
}

NormalForm normal_form_from(const Json& j) {
  Obj o(j, "nf");
  NormalForm nf;
  nf.p_minus = o.integer_or("p_minus", 0);
  nf.p_zero = o.integer_or("p_zero", 0);
  nf.p_plus = o.integer_or("p_plus", 0);
  nf.q_minus = o.integer_or("q_minus", 0);
  nf.q_zero = o.integer_or("q_zero", 0);
  nf.q_plus = o.integer_or("q_plus", 0);
  nf.h = o.integer_or("h", 0);
  nf.thetas = o.reals_or_empty("thetas");
  nf.alphas = o.reals_or_empty("alphas");
  nf.betas = o.reals_or_empty("betas");
  nf.half_dim = o.integer("half_dim");
  if (o.has("r_prime")) {
    nf.r_prime = o.integer("r_prime");
  } else {
    for (const auto& t : nf.thetas) nf.r_prime += t > ExactReal(Rational(1, 2)) ? 1 : 0;
  }
  o.finish();
  return nf;
}

GeodesicModel geodesic_from(const Json& j) {
  Obj o(j, "model");
  GeodesicModel g;
  g.nf = normal_form_from(o.at("nf"));
  g.ind1 = o.integer_or("ind1", 0);
  g.null1 = o.integer_or("null1", 0);
  g.dim = o.integer("dim");
  g.orientable = o.boolean_or("orientable", true);
  if (o.has("period")) g.period = o.integer("period");
  if (o.has("type_numbers")) {
    const Json& tn = o.at("type_numbers");
    if (!tn.is_array()) throw ParseError("model.type_numbers: expected an array of [m, l, k]");
    for (std::size_t i = 0; i < tn.size(); ++i) {
      auto row = int_array(tn[i], o.path("type_numbers", i));
      if (row.size() != 3) throw ParseError(o.path("type_numbers", i) + ": expected [m, l, k]");
      g.type_numbers[{row[0], row[1]}] += row[2];
    }
  }
  o.finish();
  return g;
}

IrrationalSystem system_from(const Json& j) {
  Obj o(j, "system");
  const Json& P = o.at("P");
  if (!P.is_array()) throw ParseError("system.P: expected an array of rows");
  std::vector<std::vector<std::int64_t>> rows;
  for (std::size_t i = 0; i < P.size(); ++i) rows.push_back(int_array(P[i], o.path("P", i)));
  auto xi = rational_array(o.at("xi"), o.path("xi"));
  o.finish();
  if (rows.size() != xi.size()) throw ParseError("system: P and xi have different lengths");
  if (rows.empty()) throw ParseError("system: no equations");
  return rethrow_as_parse("system", [&] { return make_system(rows, xi); });
}

Rank1Model rank1_from(const Json& j) {
  Obj o(j, "model");
  Rank1Model m;
  m.n = o.integer("n");
  m.theta = exact_from(o.at("theta"), o.path("theta"));
  m.p = int_array(o.at("p"), o.path("p"));
  m.xi = rational_array(o.at("xi"), o.path("xi"));
  m.odd_iterates_only = o.boolean_or("odd_iterates_only", false);
  o.finish();
  if (m.p.size() != m.xi.size()) throw ParseError("model: p and xi have different lengths");
  return m;
}

ModelSet model_set_from(const Json& j) {
  Obj o(j, "models file");
  ModelSet s;
  s.n = o.integer("n");
  const Json& ms = o.at("models");
  if (!ms.is_array()) throw ParseError("models: expected an array");
  for (const auto& m : ms) s.models.push_back(geodesic_from(m));
  o.finish();
  return s;
}

Json to_json(const NormalForm& nf) {
  Json j;
  j["p_minus"] = nf.p_minus;
  j["p_zero"] = nf.p_zero;
  j["p_plus"] = nf.p_plus;
  j["q_minus"] = nf.q_minus;
  j["q_zero"] = nf.q_zero;
  j["q_plus"] = nf.q_plus;
  j["h"] = nf.h;
  j["thetas"] = strings(nf.thetas);
  j["r_prime"] = nf.r_prime;
  j["alphas"] = strings(nf.alphas);
  j["betas"] = strings(nf.betas);
  j["half_dim"] = nf.half_dim;
  return j;
}

Json to_json(const GeodesicModel& g) {
  Json j;
  j["nf"] = to_json(g.nf);
  j["ind1"] = g.ind1;
  j["null1"] = g.null1;
  j["dim"] = g.dim;
  j["orientable"] = g.orientable;
  Json tn = Json::array();
  for (const auto& [key, k] : g.type_numbers) tn.push_back({key.first, key.second, k});
  j["type_numbers"] = tn;
  if (g.period) j["period"] = *g.period;
  return j;
}

Json to_json(const IrrationalSystem& sys) {
  Json j;
  Json P = Json::array();
  std::vector<Rational> xi;
  Json eqs = Json::array();
  for (std::size_t i = 0; i < sys.size(); ++i) {
    P.push_back(sys.equations[i].coeffs);
    xi.push_back(sys.xi(i));
    eqs.push_back(sys.equation_str(i));
  }
  j["P"] = P;
  j["xi"] = strings(xi);
  j["equations"] = eqs;
  return j;
}

Json to_json(const Rank1Model& m) {
  Json j;
  j["n"] = m.n;
  j["theta"] = m.theta.str();
  j["p"] = m.p;
  j["xi"] = strings(m.xi);
  j["odd_iterates_only"] = m.odd_iterates_only;
  return j;
}

Json to_json(const ResonanceReport& r) {
  Json j;
  Json terms = Json::array();
  for (const auto& t : r.terms) {
    Json tj;
    tj["mean_index"] = t.mean_index.str();
    tj["mean_euler"] = t.mean_euler.str();
    tj["period"] = t.period;
    tj["index1"] = t.index1;
    terms.push_back(tj);
  }
  j["terms"] = terms;
  j["lhs"] = r.lhs.str();
  j["rhs"] = r.rhs.str();
  j["residual"] = r.residual.str();
  j["holds"] = r.holds();
  return j;
}

Json to_json(const Rank1Conditions& c) {
  Json j;
  j["nonzero_coefficients"] = c.nonzero_coefficients;
  j["zero_sum"] = c.zero_sum;
  j["offset_sum"] = c.offset_sum.str();
  j["offset_sum_ok"] = c.offset_sum_ok;
  j["ok"] = c.ok();
  if (!c.ok()) j["violations"] = c.summary();
  return j;
}

Json to_json(const ObstructionReport& r) {
  Json j;
  j["witness_eta"] = r.witness_eta.str();
  j["edn"] = r.edn;
  j["shifted_model"] = to_json(r.shifted);
  j["order"] = r.order;
  j["q_bar"] = r.q_bar;
  j["N_bar"] = r.N_bar;
  j["t"] = r.t;
  j["a"] = r.a.str();
  j["b"] = r.b.str();
  j["l1"] = r.l1;
  j["l2"] = r.l2;
  j["m1"] = r.m1;
  j["m2"] = r.m2;
  j["x1"] = r.x1.str();
  j["x2"] = r.x2.str();
  j["clearance1"] = r.clearance1.str();
  j["clearance2"] = r.clearance2.str();
  j["interval1"] = r.i1;
  j["interval2"] = r.i2;
  auto rows = [](const std::vector<IterateRow>& v) {
    Json a = Json::array();
    for (const auto& row : v) a.push_back({{"L", row.L}, {"m", row.m}, {"direct", row.direct}, {"via_interval", row.via_interval}});
    return a;
  };
  j["table1"] = rows(r.rows1);
  j["table2"] = rows(r.rows2);
  j["routes_agree"] = r.routes_agree;
  Json c;
  c["h1"] = r.h1;
  c["h2"] = r.h2;
  c["count1"] = r.count1;
  c["count2"] = r.count2;
  c["betti_h1"] = r.betti_h1;
  c["betti_h2"] = r.betti_h2;
  c["conflict"] = r.conflict();
  j["conflict"] = c;
  j["scanned"] = r.scanned;
  return j;
}

}  // namespace rpgeo::io
