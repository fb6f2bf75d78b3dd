#include "modpar/report.hpp"

#include <chrono>

#include "modpar/assprimes.hpp"
#include "modpar/io.hpp"

namespace modpar {

namespace {

using Clock = std::chrono::steady_clock;

Json strings(const QBasis& G) { return Json(basis_strings(G)); }

Json ring_json(const Ring& ring) {
  return Json{{"variables", ring.variables()}, {"ordering", order_name(ring.order())}};
}

Json modstd_rounds(const ModStdReport& rep) {
  Json rounds = Json::array();
  for (const auto& r : rep.rounds) {
    Json j{{"primes", r.computed.size()}, {"discarded", r.discarded}, {"records", r.records}, {"kept", r.kept},
           {"lifted", r.lifted}};
    j["test_prime"] = r.test_prime ? Json(*r.test_prime) : Json(nullptr);
    j["p_test"] = r.p_test ? Json(*r.p_test) : Json(nullptr);
    j["verified"] = r.verified ? Json(*r.verified) : Json(nullptr);
    rounds.push_back(std::move(j));
  }
  return rounds;
}

Json modstd_timings(const ModStdReport& rep) {
  return Json{{"modular", rep.seconds_modular},
              {"lift", rep.seconds_lift},
              {"p_test", rep.seconds_p_test},
              {"verify", rep.seconds_verify}};
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i == 0 ? "" : ", ") + parts[i];
  return out;
}

Json factorization_json(const Factorization& f, const std::string& var) {
  Json factors = Json::array();
  for (const auto& [poly, mult] : f.factors) factors.push_back(Json{{"factor", to_string(poly, var)}, {"multiplicity", mult}});
  return Json{{"unit", f.unit.get_str()}, {"factors", std::move(factors)}};
}

std::string factorization_text(const Factorization& f, const std::string& var) {
  std::string out = f.unit.get_str();
  for (const auto& [poly, mult] : f.factors) {
    out += " * (" + to_string(poly, var) + ")";
    if (mult > 1) out += "^" + std::to_string(mult);
  }
  return out;
}

}  // namespace

CommandResult run_command(const std::string& command, const Ideal& I, const ModStdConfig& config) {
  CommandResult out;
  Json& doc = out.document;
  doc["command"] = command;
  doc["ring"] = ring_json(I.ring);
  Json gens = Json::array();
  for (const auto& g : I.generators) gens.push_back(to_string(I.ring, g));
  doc["generators"] = std::move(gens);
  doc["seed"] = config.seed;
  const auto start = Clock::now();
  Json timings;

  if (command == "gb") {
    ModStdReport rep;
    const QBasis G = mod_std(I, config, &rep);
    doc["result"] = strings(G);
    doc["verified"] = config.verify;
    doc["rounds"] = modstd_rounds(rep);
    timings = modstd_timings(rep);
    out.lines = basis_strings(G);
  } else if (command == "radical") {
    ModStdReport gb_rep;
    const QBasis G = mod_std(with_order(I, MonomialOrder::degrevlex()), config, &gb_rep);
    ZeroRadicalReport rep;
    const QBasis R = zero_radical(G, config, &rep);
    doc["result"] = strings(R);
    doc["rounds"] = Json{{"gb", gb_rep.rounds.size()}, {"radical", rep.rounds}, {"primes", rep.primes}};
    doc["eliminant_degrees"] = rep.eliminant_degrees;
    doc["squarefree_degrees"] = rep.squarefree_degrees;
    timings = Json{{"gb", modstd_timings(gb_rep)}};
    out.lines = basis_strings(R);
  } else if (command == "assprimes" || command == "primary") {
    AssPrimesConfig ac;
    ac.modstd = config;
    AssPrimesReport rep;
    if (command == "assprimes") {
      const AssPrimesResult res = ass_primes(I, ac, &rep);
      Json primes = Json::array();
      for (const auto& M : res.primes) {
        primes.push_back(strings(M));
        out.lines.push_back("<" + join(basis_strings(M)) + ">");
      }
      doc["result"] = std::move(primes);
      doc["linear_form"] = to_string(I.ring, res.linear_form);
      doc["F"] = to_string(res.F, "T");
      doc["factorization"] = factorization_json(res.factors, "T");
    } else {
      const auto comps = primary_decomposition(I, ac, &rep);
      Json arr = Json::array();
      for (const auto& c : comps) {
        arr.push_back(Json{{"primary", strings(c.primary)}, {"associated_prime", strings(c.associated_prime)}});
        out.lines.push_back("<" + join(basis_strings(c.primary)) + ">  prime <" +
                            join(basis_strings(c.associated_prime)) + ">");
      }
      doc["result"] = std::move(arr);
    }
    doc["diagnostics"] = Json{{"rounds", rep.rounds},
                              {"radical_computations", rep.radical_computations},
                              {"stagnations", rep.stagnations},
                              {"recursions", rep.recursions},
                              {"p_test_rad", rep.p_test_rad}};
  } else if (command == "factor") {
    if (I.ring.size() != 1) throw std::invalid_argument("factor needs a ring with one variable");
    const std::string& var = I.ring.variables().front();
    Json arr = Json::array();
    for (const auto& g : I.generators) {
      const Factorization f = factor_rational(to_dense(g, 0));
      Json entry = factorization_json(f, var);
      entry["input"] = to_string(I.ring, g);
      arr.push_back(std::move(entry));
      out.lines.push_back(to_string(I.ring, g) + " = " + factorization_text(f, var));
    }
    doc["result"] = std::move(arr);
  } else {
    throw std::invalid_argument("unknown command '" + command + "'");
  }
  timings["total"] = std::chrono::duration<double>(Clock::now() - start).count();
  doc["timings"] = std::move(timings);
  return out;
}

std::string deterministic_dump(const Json& document) {
  Json copy = document;
  copy.erase("timings");
  return copy.dump();
}

}  // namespace modpar
