#include "potts/io.hpp"

#include <set>

#include "potts/classes.hpp"

namespace potts {

namespace {

json signatures_to_json(const std::vector<ClassSignature>& list) {
  json out = json::array();
  for (const auto& s : list) out.push_back(signature_to_json(s));
  return out;
}

json direction_to_json(Direction d) {
  const auto slope = d.slope();
  return {{"direction", {d.dx, d.dy}}, {"slope", slope ? to_string(*slope) : std::string("inf")}};
}

}  // namespace

json ball_to_json(const BallConfig& b) {
  json leaves = json::array();
  for (Spin s : b.leaves) leaves.push_back(s.value());
  return {{"k", b.k()}, {"center", b.center.value()}, {"leaves", leaves}};
}

BallConfig ball_from_json(const json& j) {
  const int k = j.at("k").get<int>();
  if (k < 1) throw std::invalid_argument("ball config needs k >= 1");
  BallConfig b{Spin(j.at("center").get<int>()), {}};
  for (const auto& leaf : j.at("leaves")) b.leaves.emplace_back(leaf.get<int>());
  if (b.k() != k) throw std::invalid_argument("ball config must list exactly k+1 leaves");
  return b;
}

json signature_to_json(const ClassSignature& s) {
  return {{"center", s.center.value()}, {"counts", s.counts}};
}

std::string background_to_string(const Background& bg) {
  if (const auto* s = std::get_if<Spin>(&bg)) return "const:" + std::to_string(s->value());
  return "periodic:" + std::get<PeriodicGroundState>(bg).id();
}

Background background_from_string(std::string_view text, int k) {
  constexpr std::string_view kConst = "const:";
  constexpr std::string_view kPeriodic = "periodic:";
  if (text.starts_with(kConst)) {
    const auto rest = text.substr(kConst.size());
    if (rest.size() != 1 || rest[0] < '1' || rest[0] > '4') {
      throw std::invalid_argument("constant background needs a spin 1..4: '" + std::string(text) + "'");
    }
    return Spin(rest[0] - '0');
  }
  if (text.starts_with(kPeriodic)) {
    const auto id = text.substr(kPeriodic.size());
    if (static_cast<int>(id.size()) != k + 2) {
      throw std::invalid_argument("periodic id must have k+2 = " + std::to_string(k + 2) + " digits");
    }
    BallConfig b{Spin(1), {}};
    for (std::size_t n = 0; n < id.size(); ++n) {
      if (id[n] < '1' || id[n] > '4') throw std::invalid_argument("periodic id digits must be 1..4");
      const Spin s(id[n] - '0');
      if (n == 0) {
        b.center = s;
      } else {
        b.leaves.push_back(s);
      }
    }
    return extend_periodic(b);
  }
  throw std::invalid_argument("unknown background '" + std::string(text) + "'");
}

json configuration_to_json(const FiniteConfiguration& c) {
  json overrides = json::array();
  for (const auto& [word, spin] : c.overrides()) {
    overrides.push_back({{"word", to_string(word)}, {"spin", spin.value()}});
  }
  return {{"background", background_to_string(c.background())}, {"overrides", overrides}};
}

FiniteConfiguration configuration_from_json(const json& j, int k) {
  FiniteConfiguration c(k, background_from_string(j.at("background").get<std::string>(), k));
  if (j.contains("overrides")) {
    for (const auto& o : j.at("overrides")) {
      c.set(parse_word(o.at("word").get<std::string>()), Spin(o.at("spin").get<int>()));
    }
  }
  return c;
}

json periodic_to_json(const PeriodicGroundState& p) {
  json values = json::array();
  for (Spin s : p.coset_values) values.push_back(s.value());
  return {{"id", p.id()},
          {"fsets", p.fsets.cells()},
          {"coset_values", values},
          {"period", p.period()},
          {"source_ball", ball_to_json(p.source_ball)}};
}

json extension_report_to_json(const ExtensionReport& r) {
  return {{"passed", r.passed()},
          {"bijective", r.bijective},
          {"central_ball_matches", r.central_ball_matches},
          {"balls_checked", r.balls_checked},
          {"periodicity_pairs_checked", r.periodicity_pairs_checked},
          {"failures", r.failures},
          {"counterexamples", r.counterexamples}};
}

std::string orbit_label(const std::vector<ClassSignature>& minimizers, int k) {
  if (minimizers.size() == all_signatures(k).size()) return "ALL";
  std::set<int> ids;
  for (const auto& s : minimizers) ids.insert(orbit_id(s));
  std::string out;
  for (int id : ids) out += (out.empty() ? "" : "+") + std::to_string(id);
  return out;
}

json ground_state_set_to_json(const GroundStateSet& g) {
  json out;
  out["u_min"] = to_string(g.minimum.u_min);
  out["minimizers"] = signatures_to_json(g.minimum.minimizers);
  if (g.all) {
    out["gs"] = "ALL";
    out["witnesses"] = json::array();
    return out;
  }
  json orbits = json::array();
  for (std::size_t n = 0; n < g.orbits.size(); ++n) {
    orbits.push_back({{"orbit_id", g.orbit_ids[n]},
                      {"representative", signature_to_json(g.orbits[n].representative)},
                      {"orbit_size", g.orbits[n].members.size()}});
  }
  out["orbits"] = orbits;
  json witnesses = json::array();
  for (const auto& w : g.witnesses) witnesses.push_back(periodic_to_json(w));
  out["witnesses"] = witnesses;
  return out;
}

json region_fan_to_json(const RegionFan& fan) {
  json rays = json::array();
  for (const auto& r : fan.rays) {
    auto entry = direction_to_json(r.direction);
    entry["minimizers"] = signatures_to_json(r.minimizers);
    entry["orbit_label"] = orbit_label(r.minimizers, fan.k);
    rays.push_back(entry);
  }
  json sectors = json::array();
  for (const auto& s : fan.sectors) {
    sectors.push_back({{"from", direction_to_json(s.from)},
                       {"to", direction_to_json(s.to)},
                       {"interior", {s.interior.dx, s.interior.dy}},
                       {"minimizers", signatures_to_json(s.minimizers)},
                       {"orbit_label", orbit_label(s.minimizers, fan.k)}});
  }
  return {{"k", fan.k}, {"rays", rays}, {"sectors", sectors}};
}

json peierls_report_to_json(const PeierlsReport& r) {
  json out = {{"lambda0", to_string(r.lambda0)},
              {"boundary_size", r.boundary_size},
              {"relative_energy", to_string(r.relative_energy)},
              {"slack", to_string(r.slack())},
              {"satisfied", r.satisfied}};
  out["min_ball_excess"] = r.min_ball_excess ? json(to_string(*r.min_ball_excess)) : json(nullptr);
  return out;
}

}  // namespace potts
