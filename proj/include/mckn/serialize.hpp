#ifndef MCKN_SERIALIZE_HPP
#define MCKN_SERIALIZE_HPP

#include <json.hpp>
#include <string>

#include "mckn/chartab.hpp"

namespace mckn {

using Json = nlohmann::ordered_json;

/// {order, terms: [[exponent, numerator, denominator], ...]}, exponents ascending.
inline Json to_json(const Cyclotomic& x) {
  Json terms = Json::array();
  for (const auto& [e, c] : x.terms()) terms.push_back(Json::array({e, c.get_num().get_str(), c.get_den().get_str()}));
  return Json{{"order", x.order()}, {"terms", terms}};
}

inline Cyclotomic cyclotomic_from_json(const Json& j) {
  std::vector<Cyclotomic::Term> terms;
  for (const auto& t : j.at("terms")) {
    Rational q(Integer(t.at(1).get<std::string>()), Integer(t.at(2).get<std::string>()));
    terms.emplace_back(t.at(0).get<long>(), q);
  }
  return Cyclotomic::from_terms(j.at("order").get<long>(), terms);
}

/// Power maps are stored for every exponent below the element order.
inline Json to_json(const CharacterTable& t) {
  Json classes = Json::array();
  for (int c = 0; c < t.num_classes(); ++c) {
    Json pm = Json::object();
    const auto& pw = t.classes.powers[static_cast<std::size_t>(c)];
    for (std::size_t b = 0; b < pw.size(); ++b) pm[std::to_string(b)] = pw[b];
    classes.push_back({{"size", t.classes.sizes[static_cast<std::size_t>(c)]},
                       {"element_order", t.classes.element_orders[static_cast<std::size_t>(c)]},
                       {"power_maps", pm}});
  }
  Json irr = Json::array();
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    Json vals = Json::array();
    for (const auto& v : t.rows[r].values) vals.push_back(to_json(v));
    irr.push_back({{"degree", t.degree(r)}, {"values", vals}});
  }
  return Json{{"name", t.name},        {"order", t.order()},    {"exponent", t.exponent()},
              {"classes", classes},    {"irreducibles", irr}};
}

inline Table table_from_json(const Json& j) {
  auto t = std::make_shared<CharacterTable>();
  t->name = j.value("name", "");
  t->classes.order = j.at("order").get<std::uint64_t>();
  for (const auto& c : j.at("classes")) {
    long o = c.at("element_order").get<long>();
    t->classes.sizes.push_back(c.at("size").get<std::uint64_t>());
    t->classes.element_orders.push_back(o);
    std::vector<int> pw(static_cast<std::size_t>(o));
    for (long b = 0; b < o; ++b) pw[static_cast<std::size_t>(b)] = c.at("power_maps").at(std::to_string(b)).get<int>();
    t->classes.powers.push_back(std::move(pw));
  }
  for (const auto& r : j.at("irreducibles")) {
    ClassFunction f;
    for (const auto& v : r.at("values")) f.values.push_back(cyclotomic_from_json(v));
    if (f.size() != t->classes.sizes.size()) throw TableInconsistency("row length differs from the class count");
    t->rows.push_back(std::move(f));
  }
  return t;
}

}  // namespace mckn

#endif  // MCKN_SERIALIZE_HPP
