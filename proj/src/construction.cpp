#include "ind4/construction.hpp"

#include <json.hpp>

#include <set>
#include <stdexcept>

namespace ind4 {

int ConstructionSpec::part_index(const std::string& pname) const {
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (parts[i].name == pname) return int(i);
  return -1;
}

namespace {

const char* kind_name(PartKind k) {
  switch (k) {
    case PartKind::empty: return "empty";
    case PartKind::transitive: return "transitive";
    case PartKind::random_tournament: return "random_tournament";
    case PartKind::regular_tournament: return "regular_tournament";
    case PartKind::arbitrary_tournament: return "arbitrary_tournament";
    case PartKind::iterate: return "iterate";
    case PartKind::circular: return "circular";
    case PartKind::sub: return "sub";
  }
  return "?";
}

PartKind kind_from_name(const std::string& s) {
  for (PartKind k : {PartKind::empty, PartKind::transitive, PartKind::random_tournament,
                     PartKind::regular_tournament, PartKind::arbitrary_tournament,
                     PartKind::iterate, PartKind::circular, PartKind::sub})
    if (s == kind_name(k)) return k;
  throw std::invalid_argument("unknown part structure: " + s);
}

void validate_into(const ConstructionSpec& spec, const std::string& path,
                   std::vector<std::string>& out) {
  if (spec.parts.empty()) {
    out.push_back(path + ": no parts");
    return;
  }
  Rat total = 0;
  std::set<std::string> names;
  for (const auto& p : spec.parts) {
    std::string pp = path + "/" + p.name;
    if (!names.insert(p.name).second) out.push_back(pp + ": duplicate part name");
    if (p.weight <= 0 || p.weight > 1) out.push_back(pp + ": weight must be in (0,1]");
    total += p.weight;
    if (p.kind == PartKind::circular && (p.alpha < 0 || p.alpha > Rat(1, 2)))
      out.push_back(pp + ": circular alpha must be in [0, 1/2]");
    if (p.kind == PartKind::sub) {
      if (!p.sub)
        out.push_back(pp + ": sub part without a spec");
      else
        validate_into(*p.sub, pp, out);
    }
  }
  if (total != 1) out.push_back(path + ": weights must sum to 1");

  std::set<std::pair<int, int>> rule_pairs;
  for (std::size_t r = 0; r < spec.arcs.size(); ++r) {
    const auto& rule = spec.arcs[r];
    std::string rp = path + "/arc#" + std::to_string(r);
    int a = spec.part_index(rule.from), b = spec.part_index(rule.to);
    if (a < 0) out.push_back(rp + ": unknown part " + rule.from);
    if (b < 0) out.push_back(rp + ": unknown part " + rule.to);
    if (a >= 0 && a == b) out.push_back(rp + ": rule endpoints must differ");
    if (a >= 0 && b >= 0 && a != b) {
      if (!rule_pairs.insert({std::min(a, b), std::max(a, b)}).second)
        out.push_back(rp + ": at most one rule per part pair");
    }
    if (rule.is_poly) {
      if (a >= 0 && b >= 0) {
        bool ta = spec.parts[std::size_t(a)].kind == PartKind::transitive;
        bool tb = spec.parts[std::size_t(b)].kind == PartKind::transitive;
        if (ta == tb)
          out.push_back(rp + ": polynomial prob requires exactly one transitive endpoint");
      }
      if (rule.poly.degree() > 7) out.push_back(rp + ": polynomial degree must be <= 7");
      for (int g = 0; g <= 10000; ++g) {
        double x = g / 10000.0;
        double v = 0, xp = 1;
        for (const auto& c : rule.poly.c) {
          v += to_double(c) * xp;
          xp *= x;
        }
        if (v < -1e-9 || v > 1 + 1e-9) {
          out.push_back(rp + ": polynomial leaves [0,1] on [0,1]");
          break;
        }
      }
    } else {
      if (rule.prob < 0 || rule.prob > 1) out.push_back(rp + ": probability must be in [0,1]");
    }
  }
}

nlohmann::json poly_to_json(const Poly<Rat>& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.c) arr.push_back(format_rat(c));
  return arr;
}

Poly<Rat> poly_from_json(const nlohmann::json& arr) {
  std::vector<Rat> c;
  for (const auto& e : arr) c.push_back(parse_rat(e.get<std::string>()));
  return Poly<Rat>(std::move(c));
}

nlohmann::json spec_to_json_obj(const ConstructionSpec& spec) {
  nlohmann::json j;
  j["name"] = spec.name;
  j["parts"] = nlohmann::json::array();
  for (const auto& p : spec.parts) {
    nlohmann::json jp;
    jp["name"] = p.name;
    jp["weight"] = format_rat(p.weight);
    if (p.kind == PartKind::circular) {
      jp["structure"] = {{"circular", format_rat(p.alpha)}};
    } else if (p.kind == PartKind::sub) {
      jp["structure"] = {{"sub", spec_to_json_obj(*p.sub)}};
    } else {
      jp["structure"] = kind_name(p.kind);
    }
    j["parts"].push_back(jp);
  }
  j["arcs"] = nlohmann::json::array();
  for (const auto& r : spec.arcs) {
    nlohmann::json jr;
    jr["from"] = r.from;
    jr["to"] = r.to;
    if (r.is_poly)
      jr["prob"] = {{"poly", poly_to_json(r.poly)}};
    else
      jr["prob"] = format_rat(r.prob);
    jr["mode"] = r.mode == ArcMode::directed ? "directed" : "choice";
    j["arcs"].push_back(jr);
  }
  if (spec.tournament_invariant) j["tournament_invariant"] = true;
  return j;
}

ConstructionSpec spec_from_json_obj(const nlohmann::json& j) {
  ConstructionSpec spec;
  spec.name = j.value("name", "");
  for (const auto& jp : j.at("parts")) {
    Part p;
    p.name = jp.at("name").get<std::string>();
    p.weight = parse_rat(jp.at("weight").get<std::string>());
    const auto& st = jp.at("structure");
    if (st.is_string()) {
      p.kind = kind_from_name(st.get<std::string>());
      if (p.kind == PartKind::circular || p.kind == PartKind::sub)
        throw std::invalid_argument("structure " + st.get<std::string>() + " needs an object form");
    } else {
      if (st.contains("circular")) {
        p.kind = PartKind::circular;
        p.alpha = parse_rat(st.at("circular").get<std::string>());
      } else if (st.contains("sub")) {
        p.kind = PartKind::sub;
        p.sub = std::make_shared<ConstructionSpec>(spec_from_json_obj(st.at("sub")));
      } else {
        throw std::invalid_argument("unknown structure object");
      }
    }
    spec.parts.push_back(std::move(p));
  }
  if (j.contains("arcs"))
    for (const auto& jr : j.at("arcs")) {
      ArcRule r;
      r.from = jr.at("from").get<std::string>();
      r.to = jr.at("to").get<std::string>();
      const auto& pr = jr.at("prob");
      if (pr.is_string()) {
        r.prob = parse_rat(pr.get<std::string>());
      } else {
        r.is_poly = true;
        r.poly = poly_from_json(pr.at("poly"));
      }
      std::string mode = jr.value("mode", "directed");
      r.mode = mode == "choice" ? ArcMode::choice : ArcMode::directed;
      spec.arcs.push_back(std::move(r));
    }
  spec.tournament_invariant = j.value("tournament_invariant", false);
  return spec;
}

}  // namespace

std::vector<std::string> validate_spec(const ConstructionSpec& spec) {
  std::vector<std::string> out;
  validate_into(spec, spec.name.empty() ? "spec" : spec.name, out);
  return out;
}

void require_valid(const ConstructionSpec& spec) {
  auto diags = validate_spec(spec);
  if (!diags.empty()) {
    std::string msg = "invalid construction spec:";
    for (const auto& d : diags) msg += "\n  " + d;
    throw std::invalid_argument(msg);
  }
}

std::string spec_to_json(const ConstructionSpec& spec) { return spec_to_json_obj(spec).dump(2); }

ConstructionSpec spec_from_json(const std::string& json_text) {
  return spec_from_json_obj(nlohmann::json::parse(json_text));
}

}  // namespace ind4
