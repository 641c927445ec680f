#include <klm/errors.hpp>
#include <klm/json_io.hpp>

namespace klm {

namespace {

BigInt int_from_json(const Json& j) {
  if (j.is_string()) return parse_decimal(j.get<std::string>());
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  throw InvalidArgumentError("expected integer or decimal string in JSON");
}

Json qpoly_coeffs_json(const QPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_decimal(c));
  return coeffs;
}

QPoly qpoly_from_coeffs_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgumentError("polynomial coeffs: array expected");
  std::vector<BigInt> coeffs;
  for (const auto& c : j) coeffs.push_back(int_from_json(c));
  return QPoly(std::move(coeffs));
}

}  // namespace

Json to_json(const QPoly& p) {
  return Json{{"ring", "int"}, {"coeffs", qpoly_coeffs_json(p)}};
}

Json to_json(const TPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_decimal(c));
  return Json{{"ring", "int"}, {"coeffs", coeffs}};
}

Json to_json(const QTPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(qpoly_coeffs_json(c));
  return Json{{"ring", "q"}, {"coeffs", coeffs}};
}

namespace {

void expect_ring(const Json& j, const std::string& ring) {
  if (!j.is_object() || !j.contains("ring") || !j.contains("coeffs"))
    throw InvalidArgumentError("polynomial JSON needs ring and coeffs fields");
  if (j.at("ring").get<std::string>() != ring)
    throw InvalidArgumentError("polynomial ring mismatch: expected " + ring);
}

}  // namespace

QPoly qpoly_from_json(const Json& j) {
  expect_ring(j, "int");
  return qpoly_from_coeffs_json(j.at("coeffs"));
}

TPoly tpoly_from_json(const Json& j) {
  expect_ring(j, "int");
  std::vector<BigInt> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(int_from_json(c));
  return TPoly(std::move(coeffs));
}

QTPoly qtpoly_from_json(const Json& j) {
  expect_ring(j, "q");
  std::vector<QPoly> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(qpoly_from_coeffs_json(c));
  return QTPoly(std::move(coeffs));
}

Json to_json(const Partition& p) {
  Json arr = Json::array();
  for (int part : p.parts()) arr.push_back(part);
  return arr;
}

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgumentError("partition JSON: array expected");
  std::vector<int> parts;
  for (const auto& p : j) parts.push_back(p.get<int>());
  return Partition(std::move(parts));
}

Json to_json(const VirtualRep& rep) {
  Json terms = Json::array();
  for (const auto& [lambda, mult] : rep.terms())
    terms.push_back(Json{{"partition", to_json(lambda)},
                         {"mult", to_decimal(mult)}});
  return Json{{"n", rep.weight()}, {"terms", terms}};
}

VirtualRep virtual_rep_from_json(const Json& j) {
  VirtualRep rep(j.at("n").get<int>());
  for (const auto& term : j.at("terms"))
    rep.add_term(partition_from_json(term.at("partition")),
                 int_from_json(term.at("mult")));
  return rep;
}

Json to_json(const MatroidSpec& spec) {
  if (const auto* u = std::get_if<Uniform>(&spec))
    return Json{{"variant", "uniform"}, {"n", u->n}, {"m", u->m}};
  if (const auto* u = std::get_if<QNiform>(&spec))
    return Json{{"variant", "qniform"}, {"n", u->n}, {"m", u->m}};
  const Json j = to_json(std::get<ExplicitLattice>(spec));
  return Json{{"variant", "explicit"},
              {"ground", j.at("ground")},
              {"flats", j.at("flats")}};
}

Json to_json(const ExplicitLattice& lattice) {
  Json flats = Json::array();
  for (int f = 0; f < lattice.flat_count(); ++f) {
    Json flat = Json::array();
    for (int e : lattice.flat_elements(f)) flat.push_back(e);
    flats.push_back(flat);
  }
  return Json{{"ground", lattice.ground_size()}, {"flats", flats}};
}

ExplicitLattice lattice_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("ground") || !j.contains("flats"))
    throw InvalidArgumentError("lattice JSON needs ground and flats fields");
  std::vector<std::vector<int>> flats;
  for (const auto& flat : j.at("flats")) {
    std::vector<int> elements;
    for (const auto& e : flat) elements.push_back(e.get<int>());
    flats.push_back(std::move(elements));
  }
  return ExplicitLattice(j.at("ground").get<int>(), std::move(flats));
}

Json kl_result_json(const MatroidSpec& spec, const KLResult<BigInt>& result) {
  return Json{{"matroid", to_json(spec)},
              {"rank", result.rank},
              {"P", to_json(result.poly)}};
}

Json kl_result_json(const MatroidSpec& spec, const KLResult<QPoly>& result) {
  return Json{{"matroid", to_json(spec)},
              {"rank", result.rank},
              {"P", to_json(result.poly)}};
}

Json to_json(const EKLTable& table) {
  Json coefficients = Json::array();
  for (int i = 0; i < table.degree_count(); ++i) {
    const VirtualRep& rep = table.entries[static_cast<size_t>(i)];
    coefficients.push_back(Json{{"i", i},
                                {"rep", to_json(rep)},
                                {"dim", to_decimal(rep_dim(rep))},
                                {"qdim", to_json(rep_qdim(rep))}});
  }
  return Json{{"n", table.n},
              {"m", table.m},
              {"flavor", to_string(table.flavor)},
              {"coefficients", coefficients}};
}

}  // namespace klm
