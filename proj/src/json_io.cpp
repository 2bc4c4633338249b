#include "bezout/json_io.hpp"

#include <algorithm>
#include <utility>

namespace bezout {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) { raise(Errc::json_error, what); }

double number_from(const json& j, const char* what) {
  if (!j.is_number()) bad(std::string(what) + ": expected a number");
  return j.get<double>();
}

std::vector<double> real_array(const json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + ": expected an array");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(number_from(v, what));
  return out;
}

// --- exact parse tree: numbers kept as raw decimal tokens -------------------

struct JNode {
  enum class Kind { null, boolean, number, string, array, object };
  Kind kind = Kind::null;
  bool b = false;
  std::string text;  // raw token for numbers, value for strings
  std::vector<JNode> items;
  std::vector<std::pair<std::string, JNode>> fields;

  const JNode* find(const std::string& key) const {
    for (const auto& [k, v] : fields)
      if (k == key) return &v;
    return nullptr;
  }
};

struct RawSax : nlohmann::json_sax<json> {
  std::vector<JNode*> stack;
  JNode root;
  std::string pending_key;

  JNode& place() {
    if (stack.empty()) return root;
    JNode& top = *stack.back();
    if (top.kind == JNode::Kind::array) {
      top.items.emplace_back();
      return top.items.back();
    }
    top.fields.emplace_back(std::move(pending_key), JNode{});
    return top.fields.back().second;
  }

  bool null() override {
    place();
    return true;
  }
  bool boolean(bool v) override {
    JNode& n = place();
    n.kind = JNode::Kind::boolean;
    n.b = v;
    return true;
  }
  bool number_integer(number_integer_t v) override {
    JNode& n = place();
    n.kind = JNode::Kind::number;
    n.text = std::to_string(v);
    return true;
  }
  bool number_unsigned(number_unsigned_t v) override {
    JNode& n = place();
    n.kind = JNode::Kind::number;
    n.text = std::to_string(v);
    return true;
  }
  bool number_float(number_float_t, const string_t& raw) override {
    JNode& n = place();
    n.kind = JNode::Kind::number;
    n.text = raw;
    return true;
  }
  bool string(string_t& v) override {
    JNode& n = place();
    n.kind = JNode::Kind::string;
    n.text = v;
    return true;
  }
  bool binary(binary_t&) override { return false; }
  bool start_object(std::size_t) override {
    JNode& n = place();
    n.kind = JNode::Kind::object;
    stack.push_back(&n);
    return true;
  }
  bool key(string_t& k) override {
    pending_key = k;
    return true;
  }
  bool end_object() override {
    stack.pop_back();
    return true;
  }
  bool start_array(std::size_t) override {
    JNode& n = place();
    n.kind = JNode::Kind::array;
    stack.push_back(&n);
    return true;
  }
  bool end_array() override {
    stack.pop_back();
    return true;
  }
  bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception& ex) override {
    bad(std::string("json parse error: ") + ex.what());
  }
};

mpq_class exact_number(const JNode& n, const char* what) {
  if (n.kind != JNode::Kind::number) bad(std::string(what) + ": expected a number");
  return rational_from_decimal(n.text);
}

ExactComplex exact_entry(const JNode& n, const char* what) {
  if (n.kind == JNode::Kind::number) return {exact_number(n, what), mpq_class(0)};
  if (n.kind == JNode::Kind::array && n.items.size() == 2)
    return {exact_number(n.items[0], what), exact_number(n.items[1], what)};
  bad(std::string(what) + ": expected a real or an [re, im] pair");
}

std::vector<mpq_class> exact_array(const JNode& n, const char* what) {
  if (n.kind != JNode::Kind::array) bad(std::string(what) + ": expected an array");
  std::vector<mpq_class> out;
  out.reserve(n.items.size());
  for (const JNode& v : n.items) out.push_back(exact_number(v, what));
  return out;
}

nlohmann::ordered_json integer_or_string(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

}  // namespace

Polynomial poly_from_json(const json& j) {
  std::vector<Complex> coeffs;
  if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_number()) {
        coeffs.emplace_back(v.get<double>(), 0.0);
      } else if (v.is_array() && v.size() == 2) {
        coeffs.emplace_back(number_from(v[0], "coefficient"), number_from(v[1], "coefficient"));
      } else {
        bad("polynomial coefficient: expected a real or an [re, im] pair");
      }
    }
  } else if (j.is_object()) {
    if (j.contains("num_re")) return exact_poly_from_json_text(j.dump()).to_polynomial();
    if (!j.contains("re")) bad("polynomial object: missing \"re\"");
    const std::vector<double> re = real_array(j.at("re"), "re");
    std::vector<double> im(re.size(), 0.0);
    if (j.contains("im")) {
      im = real_array(j.at("im"), "im");
      if (im.size() != re.size()) bad("polynomial object: re/im length mismatch");
    }
    for (size_t k = 0; k < re.size(); ++k) coeffs.emplace_back(re[k], im[k]);
  } else {
    bad("polynomial: expected an array or an object");
  }
  return Polynomial(std::move(coeffs));
}

ordered_json poly_to_json(const Polynomial& p) {
  ordered_json out;
  std::vector<double> re, im;
  for (const Complex& c : p.coeffs()) {
    re.push_back(c.real());
    im.push_back(c.imag());
  }
  out["re"] = re;
  out["im"] = im;
  return out;
}

ordered_json exact_poly_to_json(const ExactPolynomial& p) {
  ordered_json out = poly_to_json(p.to_polynomial());
  ordered_json num_re = ordered_json::array(), den_re = ordered_json::array();
  ordered_json num_im = ordered_json::array(), den_im = ordered_json::array();
  for (const ExactComplex& c : p.coeffs()) {
    num_re.push_back(integer_or_string(c.re.get_num()));
    den_re.push_back(integer_or_string(c.re.get_den()));
    num_im.push_back(integer_or_string(c.im.get_num()));
    den_im.push_back(integer_or_string(c.im.get_den()));
  }
  out["num_re"] = std::move(num_re);
  out["den_re"] = std::move(den_re);
  out["num_im"] = std::move(num_im);
  out["den_im"] = std::move(den_im);
  return out;
}

ExactPolynomial exact_poly_from_json_text(std::string_view text) {
  RawSax sax;
  json::sax_parse(text, &sax);
  const JNode& root = sax.root;

  std::vector<ExactComplex> coeffs;
  if (root.kind == JNode::Kind::array) {
    for (const JNode& v : root.items) coeffs.push_back(exact_entry(v, "coefficient"));
  } else if (root.kind == JNode::Kind::object) {
    if (const JNode* num_re = root.find("num_re")) {
      const JNode *den_re = root.find("den_re"), *num_im = root.find("num_im"),
                  *den_im = root.find("den_im");
      if (!den_re) bad("exact polynomial: missing \"den_re\"");
      const auto nr = exact_array(*num_re, "num_re");
      const auto dr = exact_array(*den_re, "den_re");
      if (nr.size() != dr.size()) bad("exact polynomial: num_re/den_re length mismatch");
      std::vector<mpq_class> ni(nr.size(), mpq_class(0)), di(nr.size(), mpq_class(1));
      if (num_im && den_im) {
        ni = exact_array(*num_im, "num_im");
        di = exact_array(*den_im, "den_im");
        if (ni.size() != nr.size() || di.size() != nr.size())
          bad("exact polynomial: imaginary array length mismatch");
      }
      for (size_t k = 0; k < nr.size(); ++k) {
        if (dr[k] == 0 || di[k] == 0) bad("exact polynomial: zero denominator");
        coeffs.emplace_back(nr[k] / dr[k], ni[k] / di[k]);
      }
    } else if (const JNode* re = root.find("re")) {
      const auto rs = exact_array(*re, "re");
      std::vector<mpq_class> is(rs.size(), mpq_class(0));
      if (const JNode* im = root.find("im")) {
        is = exact_array(*im, "im");
        if (is.size() != rs.size()) bad("polynomial object: re/im length mismatch");
      }
      for (size_t k = 0; k < rs.size(); ++k) coeffs.emplace_back(rs[k], is[k]);
    } else {
      bad("polynomial object: missing \"re\"");
    }
  } else {
    bad("polynomial: expected an array or an object");
  }
  return ExactPolynomial(std::move(coeffs));
}

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2)
    return {number_from(j[0], "complex"), number_from(j[1], "complex")};
  bad("complex: expected a real or an [re, im] pair");
}

RationalFunction ratfun_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    bad("rational function: expected {\"num\":..., \"den\":...}");
  RationalFunction f{poly_from_json(j.at("num")), poly_from_json(j.at("den"))};
  if (f.den.is_zero()) bad("rational function: zero denominator");
  return f;
}

ordered_json ratfun_to_json(const RationalFunction& f) {
  ordered_json out;
  out["num"] = poly_to_json(f.num);
  out["den"] = poly_to_json(f.den);
  return out;
}

HermiteData hermite_from_json(const json& j) {
  if (!j.is_object() || !j.contains("nodes") || !j.contains("orders") || !j.contains("targets"))
    bad("hermite data: expected {\"nodes\":[...], \"orders\":[...], \"targets\":[[...]]}");
  HermiteData data;
  for (const auto& v : j.at("nodes")) data.nodes.push_back(complex_from_json(v));
  for (const auto& v : j.at("orders")) {
    if (!v.is_number_integer()) bad("hermite data: orders must be integers");
    data.orders.push_back(v.get<int>());
  }
  if (!j.at("targets").is_array()) bad("hermite data: targets must be an array of arrays");
  for (const auto& row : j.at("targets")) {
    std::vector<Complex> t;
    for (const auto& v : row) t.push_back(complex_from_json(v));
    data.targets.push_back(std::move(t));
  }
  data.validate();
  return data;
}

}  // namespace bezout
