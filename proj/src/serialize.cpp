#include "balancing/serialize.hpp"

namespace balancing {

Json to_json(const Rational& x) { return to_string(x); }

Json to_json(const QuadElem& x) {
  Json j;
  j["a"] = to_string(x.a());
  j["b"] = to_string(x.b());
  return j;
}

Json to_json(const LinearForm& form) {
  Json j;
  j["power"] = form.power();
  j["constant"] = to_string(form.constant());
  Json terms = Json::array();
  for (const auto& [key, coeff] : form.terms()) {
    Json t;
    t["multiplier"] = key.multiplier;
    t["shift"] = key.shift;
    t["coeff"] = to_string(coeff);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

Json to_json(const ClosedSumExpr& expr) {
  Json j;
  j["m"] = expr.m;
  j["power"] = expr.power;
  Json bterms = Json::array();
  for (const BTerm& t : expr.bterms) {
    Json b;
    b["coeff"] = to_string(t.coeff);
    b["stride"] = t.stride;
    b["offset"] = t.offset;
    bterms.push_back(std::move(b));
  }
  j["bterms"] = std::move(bterms);
  j["linear_coeff"] = to_string(expr.linear_coeff);
  j["constant"] = to_string(expr.constant);
  return j;
}

Rational rational_from_json(const Json& j) { return Rational::parse(j.get<std::string>()); }

QuadElem quad_from_json(const Json& j) {
  return {rational_from_json(j.at("a")), rational_from_json(j.at("b"))};
}

LinearForm linear_form_from_json(const Json& j) {
  LinearForm form(j.at("power").get<std::int64_t>());
  form.set_constant(rational_from_json(j.at("constant")));
  for (const Json& t : j.at("terms")) {
    form.add_term({t.at("multiplier").get<std::int64_t>(), t.at("shift").get<int>()},
                  rational_from_json(t.at("coeff")));
  }
  return form;
}

ClosedSumExpr closed_sum_from_json(const Json& j) {
  ClosedSumExpr expr;
  expr.m = j.at("m").get<std::int64_t>();
  expr.power = j.at("power").get<std::int64_t>();
  for (const Json& t : j.at("bterms")) {
    expr.bterms.push_back({rational_from_json(t.at("coeff")), t.at("stride").get<std::int64_t>(),
                           t.at("offset").get<std::int64_t>()});
  }
  expr.linear_coeff = rational_from_json(j.at("linear_coeff"));
  expr.constant = rational_from_json(j.at("constant"));
  return expr;
}

}  // namespace balancing
