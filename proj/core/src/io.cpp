#include "symcrit/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "symcrit/error.hpp"

namespace symcrit {
namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& what) {
  fail(ErrorKind::Parse, what);
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    parse_fail(e.what());
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(bool(in), ErrorKind::Parse, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::int64_t get_int(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    parse_fail(std::string("missing or non-integer field \"") + key + "\"");
  return j[key].get<std::int64_t>();
}

fp_t field_elem(const json& j, const PrimeField& f, const char* what) {
  if (!j.is_number_integer()) parse_fail(std::string(what) + " is not an integer");
  std::int64_t c = j.get<std::int64_t>();
  if (c < 0 || std::uint64_t(c) >= f.p())
    parse_fail(std::string(what) + " is outside [0, p-1]");
  return fp_t(c);
}

MPoly poly_from_json(const json& j, const PolyRingPtr& ring) {
  if (!j.is_array()) parse_fail("a polynomial must be a list of terms");
  std::vector<std::pair<long long, std::vector<int>>> terms;
  for (const json& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[1].is_array())
      parse_fail("each term must be [coefficient, exponents]");
    long long c = field_elem(t[0], ring->field(), "a coefficient");
    std::vector<int> exps;
    for (const json& e : t[1]) {
      if (!e.is_number_integer() || e.get<std::int64_t>() < 0)
        parse_fail("exponents must be nonnegative integers");
      exps.push_back(e.get<int>());
    }
    if (int(exps.size()) != ring->nvars())
      parse_fail("an exponent vector has the wrong length");
    terms.emplace_back(c, std::move(exps));
  }
  return MPoly::from_list(ring, terms);
}

json poly_to_json(const MPoly& f) {
  json out = json::array();
  for (const Term& t : f.terms()) {
    json exps = json::array();
    for (int i = 0; i < f.ring()->nvars(); ++i)
      exps.push_back(int(t.m.e[std::size_t(i)]));
    out.push_back(json::array({t.c, exps}));
  }
  return out;
}

Partition partition_from_json(const json& j) {
  if (!j.is_array() || j.empty()) parse_fail("a partition must be a nonempty list");
  std::vector<int> parts;
  for (const json& b : j) {
    if (!b.is_array() || b.size() != 2) parse_fail("each partition block must be [part, multiplicity]");
    int part = b[0].get<int>(), mult = b[1].get<int>();
    if (part < 1 || mult < 1) parse_fail("partition blocks must be positive");
    for (int i = 0; i < mult; ++i) parts.push_back(part);
  }
  return Partition::from_parts(parts);
}

json partition_to_json(const Partition& lambda) {
  json out = json::array();
  for (const auto& [part, mult] : lambda.blocks())
    out.push_back(json::array({part, mult}));
  return out;
}

UniPoly unipoly_from_json(const json& j, const PrimeField& f, const char* what) {
  if (!j.is_array()) parse_fail(std::string(what) + " must be a coefficient list");
  std::vector<fp_t> coeffs;
  for (const json& c : j) coeffs.push_back(field_elem(c, f, what));
  return UniPoly(f, std::move(coeffs));
}

json unipoly_to_json(const UniPoly& q) {
  json out = json::array();
  for (fp_t c : q.coeffs()) out.push_back(c);
  return out;
}

ZeroDimParam param_from_json(const json& j, const PrimeField& f) {
  if (!j.is_object() || !j.contains("q") || !j.contains("v") ||
      !j.contains("mu"))
    parse_fail("a parametrization needs \"q\", \"v\" and \"mu\"");
  UniPoly q = unipoly_from_json(j["q"], f, "a \"q\" coefficient");
  if (!j["v"].is_array()) parse_fail("\"v\" must be a list of coefficient lists");
  std::vector<UniPoly> v;
  for (const json& vi : j["v"])
    v.push_back(unipoly_from_json(vi, f, "a \"v\" coefficient"));
  if (!j["mu"].is_array()) parse_fail("\"mu\" must be a list");
  std::vector<fp_t> mu;
  for (const json& m : j["mu"]) mu.push_back(field_elem(m, f, "a \"mu\" entry"));
  ZeroDimParam param(std::move(q), std::move(v), std::move(mu));
  if (j.contains("degree") && param.degree() != get_int(j, "degree"))
    parse_fail("stored degree disagrees with deg q");
  return param;
}

json param_to_json(const ZeroDimParam& param) {
  json v = json::array();
  for (const UniPoly& vi : param.v()) v.push_back(unipoly_to_json(vi));
  json mu = json::array();
  for (fp_t m : param.mu()) mu.push_back(m);
  return json{{"q", unipoly_to_json(param.q())},
              {"v", std::move(v)},
              {"mu", std::move(mu)},
              {"degree", param.degree()}};
}

PrimeField field_of(const json& j) {
  std::int64_t p = get_int(j, "prime");
  if (p < 2 || p > std::int64_t(UINT32_MAX)) parse_fail("\"prime\" is out of range");
  return PrimeField(std::uint32_t(p));
}

}  // namespace

namespace {

ProblemInstance parse_problem_impl(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object()) parse_fail("a problem file must be a JSON object");
  PrimeField f = field_of(j);
  std::int64_t n = get_int(j, "n");
  std::int64_t s = get_int(j, "s");
  if (n < 2 || n > kMaxVars) parse_fail("\"n\" must be between 2 and 8");
  if (s < 1 || s >= n) parse_fail("\"s\" must satisfy 1 <= s < n");
  PolyRingPtr ring = make_x_ring(f, int(n));
  if (!j.contains("f") || !j["f"].is_array() || std::int64_t(j["f"].size()) != s)
    parse_fail("\"f\" must be a list of exactly s polynomials");
  std::vector<MPoly> fs;
  for (const json& fi : j["f"]) fs.push_back(poly_from_json(fi, ring));
  if (!j.contains("phi")) parse_fail("missing field \"phi\"");
  return ProblemInstance(std::move(fs), poly_from_json(j["phi"], ring));
}

}  // namespace

ProblemInstance parse_problem(const std::string& text) {
  try {
    return parse_problem_impl(text);
  } catch (const json::exception& e) {
    parse_fail(e.what());
  }
}

ProblemInstance load_problem(const std::string& path) {
  return parse_problem(slurp(path));
}

std::string problem_to_json(const ProblemInstance& prob) {
  json fs = json::array();
  for (const MPoly& fi : prob.f()) fs.push_back(poly_to_json(fi));
  json j{{"n", prob.n()},
         {"s", prob.s()},
         {"prime", prob.field().p()},
         {"f", std::move(fs)},
         {"phi", poly_to_json(prob.phi())}};
  return j.dump(2) + "\n";
}

namespace {

LoadedOutput parse_output_impl(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object() || !j.contains("meta"))
    parse_fail("a result file must be an object with a \"meta\" field");
  const json& meta = j["meta"];
  LoadedOutput out;
  out.prime = std::uint32_t(get_int(meta, "prime"));
  PrimeField f(out.prime);
  if (meta.contains("seed")) out.seed = meta["seed"].get<std::uint64_t>();
  if (meta.contains("pruned"))
    for (const json& row : meta["pruned"]) {
      if (!row.is_object() || !row.contains("partition"))
        parse_fail("each pruned row needs a \"partition\"");
      out.pruned.push_back(
          PrunedNote{partition_from_json(row["partition"]),
                     row.value("reason", std::string())});
    }
  if (j.contains("naive")) {
    out.naive = param_from_json(j["naive"], f);
    return out;
  }
  if (!j.contains("entries") || !j["entries"].is_array())
    parse_fail("a result file needs \"entries\" or \"naive\"");
  for (const json& e : j["entries"]) {
    if (!e.is_object() || !e.contains("partition"))
      parse_fail("each entry needs a \"partition\"");
    Partition type = partition_from_json(e["partition"]);
    ZeroDimParam param = param_from_json(e, f);
    require(param.empty() || param.coords() == type.length(),
            ErrorKind::Parse,
            "an entry has the wrong number of coordinates for its type");
    out.entries.push_back(OrbitEntry{std::move(type), std::move(param)});
  }
  return out;
}

}  // namespace

LoadedOutput parse_output(const std::string& text) {
  try {
    return parse_output_impl(text);
  } catch (const json::exception& e) {
    parse_fail(e.what());
  }
}

LoadedOutput load_output(const std::string& path) {
  return parse_output(slurp(path));
}

namespace {

json meta_to_json(const std::vector<PartitionMeta>& meta, std::uint64_t seed,
                  const PrimeField& field) {
  json pruned = json::array();
  for (const PartitionMeta& m : meta)
    if (m.pruned)
      pruned.push_back(json{{"partition", partition_to_json(m.lambda)},
                            {"reason", m.note}});
  return json{{"seed", seed}, {"prime", field.p()}, {"pruned", std::move(pruned)}};
}

}  // namespace

std::string representation_to_json(const SymmetricRepresentation& rep,
                                   const PrimeField& field) {
  json entries = json::array();
  for (const OrbitEntry& e : rep.entries) {
    json row = param_to_json(e.param);
    row["partition"] = partition_to_json(e.type);
    entries.push_back(std::move(row));
  }
  json j{{"entries", std::move(entries)},
         {"meta", meta_to_json(rep.meta, rep.seed, field)}};
  return j.dump(2) + "\n";
}

std::string naive_to_json(const ZeroDimParam& param, std::uint64_t seed,
                          const PrimeField& field) {
  json j{{"naive", param_to_json(param)},
         {"meta", meta_to_json({}, seed, field)}};
  return j.dump(2) + "\n";
}

Partition partition_from_text(const std::string& text) {
  std::istringstream in(text);
  std::vector<int> parts;
  std::string token;
  while (in >> token) {
    std::size_t caret = token.find('^');
    try {
      int part = std::stoi(token.substr(0, caret));
      int mult = caret == std::string::npos
                     ? 1
                     : std::stoi(token.substr(caret + 1));
      if (part < 1 || mult < 1) parse_fail("partition blocks must be positive");
      for (int i = 0; i < mult; ++i) parts.push_back(part);
    } catch (const std::logic_error&) {
      parse_fail("cannot read partition block \"" + token + "\"");
    }
  }
  if (parts.empty()) parse_fail("empty partition");
  return Partition::from_parts(parts);
}

}  // namespace symcrit
