// rpgeo command line: one subcommand per computation, JSON in and out.
//
// Exit codes
//   0  success
//   1  input file unreadable
//   2  malformed JSON, schema violation or bad command line
//   3  precondition violated (invalid model, system conditions, EDN 0)
//   4  search budget exhausted
//   5  numbers from different square-root fields were mixed
//   6  selftest found a failing criterion

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rpgeo/acceptance.hpp"
#include "rpgeo/error.hpp"
#include "rpgeo/index_iteration.hpp"
#include "rpgeo/interval_engine.hpp"
#include "rpgeo/json_io.hpp"
#include "rpgeo/loop_homology.hpp"

using rpgeo::io::Json;

namespace {

enum Exit : int { kOk = 0, kIo = 1, kParse = 2, kPrecondition = 3, kBudget = 4, kField = 5, kSelftest = 6 };

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

void emit_csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  auto line = [](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) std::cout << (i ? "," : "") << cells[i];
    std::cout << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

int fail(int code, const std::string& kind, const std::string& message) {
  Json j;
  j["error"] = kind;
  j["message"] = message;
  j["exit_code"] = code;
  std::cerr << j.dump() << '\n';
  return code;
}

struct Options {
  std::string model, models, system, format = "json";
  std::int64_t max_m = 20, n = 0, max_q = 0, budget = 100000;
  bool trace = false;
  std::vector<std::string> thetas, boxes;
  int criterion = 0;
};

int cmd_index(const Options& o) {
  rpgeo::GeodesicModel g = rpgeo::io::geodesic_from(rpgeo::io::load_file(o.model));
  rpgeo::require_valid(g);
  rpgeo::IndexSequence seq(g);
  if (o.format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (std::int64_t m = 1; m <= o.max_m; ++m) {
      auto v = seq.at(m);
      rows.push_back({std::to_string(m), std::to_string(v.index), std::to_string(v.nullity)});
    }
    emit_csv({"m", "index", "nullity"}, rows);
    return kOk;
  }
  Json rows = Json::array();
  for (std::int64_t m = 1; m <= o.max_m; ++m) {
    auto v = seq.at(m);
    rows.push_back({{"m", m}, {"index", v.index}, {"nullity", v.nullity}});
  }
  Json j;
  j["mean_index"] = rpgeo::mean_index(g).str();
  j["analytical_period"] = rpgeo::analytical_period(g);
  j["rows"] = rows;
  emit(j);
  return kOk;
}

int cmd_betti(const Options& o) {
  if (o.format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (std::int64_t q = 0; q <= o.max_q; ++q) rows.push_back({std::to_string(q), std::to_string(rpgeo::betti(o.n, q))});
    emit_csv({"q", "betti"}, rows);
    return kOk;
  }
  Json rows = Json::array();
  for (std::int64_t q = 0; q <= o.max_q; ++q) rows.push_back({{"q", q}, {"betti", rpgeo::betti(o.n, q)}});
  Json j;
  j["n"] = o.n;
  j["average_betti"] = rpgeo::average_betti(o.n).str();
  j["rows"] = rows;
  emit(j);
  return kOk;
}

int cmd_resonance(const Options& o) {
  rpgeo::io::ModelSet set = rpgeo::io::model_set_from(rpgeo::io::load_file(o.models));
  bool all_bumpy = true;
  std::vector<rpgeo::GeodesicModel> full;
  for (const auto& g : set.models) {
    rpgeo::require_valid(g);
    all_bumpy = all_bumpy && rpgeo::is_bumpy(g);
    full.push_back(rpgeo::with_default_type_numbers(g));
  }
  Json j;
  j["n"] = set.n;
  j["average_betti"] = rpgeo::average_betti(set.n).str();
  j["general"] = rpgeo::io::to_json(rpgeo::resonance_check(full, set.n));
  if (all_bumpy) j["bumpy"] = rpgeo::io::to_json(rpgeo::resonance_check_bumpy(set.models, set.n));
  emit(j);
  return kOk;
}

Json trace_json(const rpgeo::Reduction& red) {
  Json steps = Json::array();
  for (const auto& s : red.trace) {
    Json st;
    st["action"] = s.action;
    st["system"] = rpgeo::io::to_json(s.system);
    steps.push_back(st);
  }
  return steps;
}

int cmd_edn(const Options& o) {
  rpgeo::IrrationalSystem sys = rpgeo::io::system_from(rpgeo::io::load_file(o.system));
  Json j;
  j["system"] = rpgeo::io::to_json(sys);
  j["rank"] = rpgeo::rank(sys);
  if (sys.basis_size != 1) throw rpgeo::PreconditionError("effective difference number needs a rank-1 representation");
  auto cond = rpgeo::check_rank1(sys);
  j["conditions"] = rpgeo::io::to_json(cond);
  auto edn = rpgeo::effective_difference_number(sys);
  j["edn"] = edn.value;
  j["witness_eta"] = edn.witness.str();
  if (cond.ok()) {
    auto red = rpgeo::reduce(sys);
    j["reduced"] = rpgeo::io::to_json(red.result);
    j["total_eta"] = red.total_eta.str();
    j["trace"] = trace_json(red);
  }
  emit(j);
  return kOk;
}

int cmd_reduce(const Options& o) {
  rpgeo::IrrationalSystem sys = rpgeo::io::system_from(rpgeo::io::load_file(o.system));
  if (sys.basis_size != 1) throw rpgeo::PreconditionError("reduction needs a rank-1 representation");
  auto red = rpgeo::reduce(sys);
  Json j;
  j["input"] = rpgeo::io::to_json(sys);
  j["result"] = rpgeo::io::to_json(red.result);
  j["total_eta"] = red.total_eta.str();
  if (o.trace) j["trace"] = trace_json(red);
  emit(j);
  return kOk;
}

int cmd_kronecker(const Options& o) {
  std::vector<rpgeo::ExactReal> thetas;
  std::vector<rpgeo::Rational> lo, hi;
  for (const auto& t : o.thetas) thetas.push_back(rpgeo::ExactReal::parse(t));
  for (const auto& b : o.boxes) {
    auto comma = b.find(',');
    if (comma == std::string::npos) throw rpgeo::ParseError("box \"" + b + "\" is not lo,hi");
    lo.push_back(rpgeo::Rational::parse(b.substr(0, comma)));
    hi.push_back(rpgeo::Rational::parse(b.substr(comma + 1)));
  }
  // one box may be shared by every angle
  if (lo.size() == 1 && thetas.size() > 1) {
    lo.assign(thetas.size(), lo[0]);
    hi.assign(thetas.size(), hi[0]);
  }
  auto res = rpgeo::kronecker_scan(thetas, lo, hi, o.budget);
  Json j;
  j["found"] = res.found;
  if (res.found) j["m"] = res.m;
  j["scanned"] = res.scanned;
  j["budget"] = o.budget;
  emit(j);
  return res.found ? kOk : kBudget;
}

int cmd_obstruction(const Options& o) {
  rpgeo::Rank1Model m = rpgeo::io::rank1_from(rpgeo::io::load_file(o.model));
  emit(rpgeo::io::to_json(rpgeo::obstruction_scenario(m, o.budget)));
  return kOk;
}

int cmd_selftest(const Options& o) {
  std::vector<rpgeo::CriterionResult> results;
  if (o.criterion) {
    results.push_back(rpgeo::run_criterion(o.criterion));
  } else {
    results = rpgeo::run_acceptance();
  }
  bool ok = true;
  Json rows = Json::array();
  for (const auto& r : results) {
    ok = ok && r.passed;
    if (o.format == "text") {
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.id << ' ' << r.name << ": " << r.detail << '\n';
    }
    rows.push_back({{"criterion", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  }
  if (o.format != "text") {
    Json j;
    j["criteria"] = rows;
    j["all_passed"] = ok;
    emit(j);
  }
  return ok ? kOk : kSelftest;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Index iteration, Betti numbers and irrational systems for closed geodesics on RP^n"};
  app.require_subcommand(1);
  Options o;
  auto positive = CLI::PositiveNumber;

  auto* index = app.add_subcommand("index", "index and nullity of the iterates of one geodesic");
  index->add_option("--model", o.model, "geodesic model JSON")->required();
  index->add_option("--max-m", o.max_m, "last iterate")->check(positive);
  index->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));

  auto* betti = app.add_subcommand("betti", "Betti numbers of the non-contractible loop space of RP^n");
  betti->add_option("--n", o.n, "dimension")->required()->check(CLI::Range(2, 1000000));
  betti->add_option("--max-q", o.max_q, "last degree")->required()->check(CLI::NonNegativeNumber);
  betti->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));

  auto* res = app.add_subcommand("resonance", "check the resonance identity for a list of geodesics");
  res->add_option("--models", o.models, "models JSON {\"n\": N, \"models\": [...]}")->required();

  auto* edn = app.add_subcommand("edn", "effective difference number of an irrational system");
  edn->add_option("--system", o.system, "system JSON {\"P\": [[...]], \"xi\": [...]}")->required();

  auto* reduce = app.add_subcommand("reduce", "reduce a rank-1 system to unit coefficients");
  reduce->add_option("--system", o.system)->required();
  reduce->add_flag("--trace", o.trace, "emit every intermediate system");

  auto* kron = app.add_subcommand("kronecker", "first iterate whose fractional parts hit a box");
  kron->add_option("--thetas", o.thetas, "angles such as \"sqrt(2) - 1\"")->required();
  kron->add_option("--box", o.boxes, "lo,hi per angle (or one for all)")->required();
  kron->add_option("--budget", o.budget)->check(positive);

  auto* obs = app.add_subcommand("obstruction", "play out the interval-separation conflict on a rank-1 model");
  obs->add_option("--model", o.model, "rank-1 model JSON")->required();
  obs->add_option("--budget", o.budget)->check(positive);

  auto* self = app.add_subcommand("selftest", "run the acceptance criteria");
  self->add_option("--criterion", o.criterion, "run a single criterion")->check(CLI::Range(1, rpgeo::kCriteria));
  self->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*index) return cmd_index(o);
    if (*betti) return cmd_betti(o);
    if (*res) return cmd_resonance(o);
    if (*edn) return cmd_edn(o);
    if (*reduce) return cmd_reduce(o);
    if (*kron) return cmd_kronecker(o);
    if (*obs) return cmd_obstruction(o);
    if (*self) return cmd_selftest(o);
  } catch (const rpgeo::io::IoError& e) {
    return fail(kIo, "io", e.what());
  } catch (const rpgeo::ParseError& e) {
    return fail(kParse, "parse", e.what());
  } catch (const rpgeo::EdnError& e) {
    return fail(kPrecondition, "edn", e.what());
  } catch (const rpgeo::PreconditionError& e) {
    return fail(kPrecondition, "precondition", e.what());
  } catch (const rpgeo::BudgetExhausted& e) {
    return fail(kBudget, "budget", e.what());
  } catch (const rpgeo::UnsupportedFieldError& e) {
    return fail(kField, "field", e.what());
  } catch (const std::exception& e) {
    return fail(kPrecondition, "error", e.what());
  }
  return kParse;
}
