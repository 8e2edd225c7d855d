#include "logion/cases.hpp"

#include "logion/parser.hpp"

#include <algorithm>
#include <cctype>

namespace logion {

namespace {

struct Raw {
  const char* id;
  const char* name;
  std::vector<std::pair<const char*, const char*>> domains;
  std::vector<std::pair<const char*, const char*>> goals;
  CaseManifest manifest;
  const char* provenance;
  const char* known_bc;
};

BundledCase build(const Raw& raw) {
  BundledCase c;
  c.id = raw.id;
  c.spec.name = raw.name;
  for (const auto& [n, f] : raw.domains) c.spec.domains.push_back({n, parse(f)});
  for (const auto& [n, f] : raw.goals) c.spec.goals.push_back({n, parse(f)});
  c.manifest = raw.manifest;
  c.provenance = raw.provenance;
  if (raw.known_bc) c.known_bc = raw.known_bc;
  return c;
}

std::vector<BundledCase> make_cases() {
  const std::vector<Raw> raw = {
      {"minepump", "MinePump",
       {{"Dom", "G((p & X p) -> X X !h)"}},
       {{"G1", "G(h -> X p)"}, {"G2", "G(m -> X !p)"}},
       {1, 2, 3, 21},
       "Verbatim from the worked example: h = high water, m = methane, p = pump on.",
       "F(h & m)"},
      {"rp1", "RetractionPattern1",
       {},
       {{"G1", "G(p -> F q)"}, {"G2", "G(q -> !p)"}},
       {0, 2, 2, 9},
       "Reconstruction of the retraction pattern: every p is eventually answered by q, which retracts p.",
       "F G p"},
      {"rp2", "RetractionPattern2",
       {},
       {{"G1", "G((p & r) -> F q)"}, {"G2", "G(q -> (!p & s))"}},
       {0, 2, 4, 10},
       "Reconstruction of the second retraction pattern with a guard r and side effect s.",
       "F G(p & r)"},
      {"elevator", "Elevator",
       {{"Dom", "G(!at_floor -> !open)"}},
       {{"G1", "G(call -> F open)"}},
       {1, 1, 3, 10},
       "Reconstruction: doors only open at a floor; every call is eventually served by opening.",
       "F(call & G !at_floor)"},
      {"tcp", "TCP",
       {},
       {{"G1", "G(send -> F ack)"}, {"G2", "G(timeout -> G !ack)"}},
       {0, 2, 3, 14},
       "Reconstruction: every send is acknowledged, and no acknowledgement arrives after a timeout.",
       "F(send & timeout)"},
      {"aap", "AchieveAvoidPattern",
       {{"Dom", "G(q -> s)"}},
       {{"G1", "G(p -> F q)"}, {"G2", "G(r -> G !s)"}},
       {1, 2, 4, 15},
       "Reconstruction of the achieve/avoid pattern: achieving q forces s, which r forbids forever.",
       "F(p & r)"},
      {"atm", "ATM",
       {{"Dom", "G(b -> X b)"}},
       {{"G1", "G(p -> X m)"}, {"G2", "G(b -> !m)"}},
       {1, 2, 3, 22},
       "Reconstruction: a correct PIN p gives money m next; a blocked card b stays blocked and gets no money.",
       "F(p & b)"},
      {"rrcs", "RRCS",
       {{"Dom1", "G(cc -> go)"}, {"Dom2", "G(ta -> X tc)"}},
       {{"G1", "G(tc -> !go)"}, {"G2", "G(w -> X cc)"}},
       {2, 2, 5, 22},
       "Reconstruction of the rail-road crossing: a train approaching (ta) leads to a train crossing (tc), "
       "which stops cars (go); a waiting car (w) is let through (cc).",
       "F(ta & w)"},
      {"tel", "Telephone",
       {{"Dom1", "G(c -> o)"}, {"Dom2", "G(d -> o)"}, {"Dom3", "G(r -> !c)"}},
       {{"G1", "G(d -> X c)"}, {"G2", "G(r -> X r)"}},
       {3, 2, 4, 31},
       "Reconstruction of the telephone case: dialing d connects c; ringing r persists and excludes a connection.",
       "F(d & r)"},
      {"las", "LAS",
       {},
       {{"G1", "G(inc -> X alloc)"},
        {"G2", "G(alloc -> X mob)"},
        {"G3", "G(mob -> X atinc)"},
        {"G4", "G(atinc -> (int & !avail))"},
        {"G5", "G(broken -> !int)"}},
       {0, 5, 7, 32},
       "Reconstruction of the ambulance dispatch chain: an incident leads to allocation, mobilization and "
       "arrival, which requires intervention; a broken ambulance cannot intervene.",
       nullptr},
  };
  std::vector<BundledCase> out;
  for (const auto& r : raw) out.push_back(build(r));
  return out;
}

}  // namespace

std::size_t BundledCase::computed_size() const {
  std::size_t n = 0;
  for (const auto& d : spec.domains) n += d.formula.size();
  for (const auto& g : spec.goals) n += g.formula.size();
  return n;
}

const std::vector<BundledCase>& bundled_cases() {
  static const auto cases = make_cases();
  return cases;
}

const std::vector<MissingCase>& missing_cases() {
  static const std::vector<MissingCase> missing = {
      {"pa", {6, 1, 6, 57}, "formulae not published; not reconstructed"},
      {"rra", {6, 3, 4, 77}, "formulae not published; not reconstructed"},
      {"sa", {5, 3, 6, 84}, "formulae not published; not reconstructed"},
      {"lb", {3, 7, 5, 85}, "formulae not published; not reconstructed"},
      {"lc", {7, 8, 6, 124}, "formulae not published; not reconstructed"},
      {"amba", {6, 21, 16, 415}, "formulae not published; not reconstructed"},
  };
  return missing;
}

const BundledCase* find_case(const std::string& id) {
  auto lower = [](std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
  };
  auto key = lower(id);
  if (key == "mp") key = "minepump";
  if (key == "ele") key = "elevator";
  for (const auto& c : bundled_cases())
    if (c.id == key || lower(c.spec.name) == key) return &c;
  return nullptr;
}

}  // namespace logion
