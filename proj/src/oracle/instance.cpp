#include "bihilb/oracle/instance.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "bihilb/errors.hpp"
#include "bihilb/fp/random.hpp"

namespace bihilb::oracle {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

Form Form::make(Bidegree degree, std::vector<Term> terms, const PrimeField& field) {
  for (const auto& t : terms) {
    if (t.mono.bidegree() != degree) {
      throw std::invalid_argument("term of bidegree " + t.mono.bidegree().str() + " in a form of bidegree " +
                                  degree.str());
    }
  }
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& u, const Term& v) { return basis_order_less(u.mono, v.mono); });
  Form f{degree, {}};
  for (auto& t : terms) {
    const u64 c = t.coeff % field.modulus();
    if (!f.terms.empty() && f.terms.back().mono == t.mono) {
      f.terms.back().coeff = field.add(f.terms.back().coeff, c);
    } else {
      f.terms.push_back({std::move(t.mono), c});
    }
  }
  std::erase_if(f.terms, [](const Term& t) { return t.coeff == 0; });
  return f;
}

DegreeList Instance::degrees() const {
  DegreeList out;
  out.reserve(forms.size());
  for (const auto& f : forms) out.push_back(f.degree);
  return out;
}

Instance IntegerInstance::reduce(const PrimeField& field) const {
  Instance inst{shape, field, {}};
  for (std::size_t i = 0; i < forms.size(); ++i) {
    std::vector<Term> terms;
    for (const auto& [mono, c] : forms[i]) terms.push_back({mono, field.from_int(c)});
    inst.forms.push_back(Form::make(degrees[i], std::move(terms), field));
  }
  return inst;
}

namespace {

std::vector<int> exponent_vector(const json& v, std::size_t len, const char* what) {
  if (!v.is_array()) throw ParseError(std::string("\"") + what + "\" must be an array", 0);
  if (v.size() != len) {
    throw ShapeMismatch(std::string("\"") + what + "\" has length " + std::to_string(v.size()) + ", expected " +
                        std::to_string(len));
  }
  std::vector<int> out;
  for (const auto& e : v) {
    if (!e.is_number_integer() || e.get<std::int64_t>() < 0) {
      throw ParseError(std::string("exponents in \"") + what + "\" must be nonnegative integers", 0);
    }
    out.push_back(e.get<int>());
  }
  return out;
}

const json& field_of(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"", 0);
  return obj.at(key);
}

}  // namespace

Instance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
  try {
    const auto& jn = field_of(doc, "n");
    const auto& jm = field_of(doc, "m");
    const auto& jp = field_of(doc, "prime");
    if (!jn.is_number_integer() || !jm.is_number_integer() || !jp.is_number_unsigned()) {
      throw ParseError("\"n\", \"m\" and \"prime\" must be integers", 0);
    }
    Shape shape(jn.get<int>(), jm.get<int>());
    PrimeField field(jp.get<u64>());
    Instance inst{shape, field, {}};
    const auto& jforms = field_of(doc, "forms");
    if (!jforms.is_array() || jforms.empty()) throw ParseError("\"forms\" must be a nonempty array", 0);
    for (const auto& jf : jforms) {
      const auto& jd = field_of(jf, "bidegree");
      if (!jd.is_array() || jd.size() != 2 || !jd[0].is_number_integer() || !jd[1].is_number_integer()) {
        throw ParseError("\"bidegree\" must be a pair of integers", 0);
      }
      const Bidegree deg{jd[0].get<std::int64_t>(), jd[1].get<std::int64_t>()};
      if (!deg.nonnegative()) throw ParseError("negative bidegree " + deg.str(), 0);
      std::vector<Term> terms;
      for (const auto& jt : field_of(jf, "terms")) {
        Monomial mono{exponent_vector(field_of(jt, "x"), shape.n + 1, "x"),
                      exponent_vector(field_of(jt, "y"), shape.m + 1, "y")};
        const auto& jc = field_of(jt, "c");
        u64 c = 0;
        if (jc.is_number_unsigned()) {
          c = jc.get<u64>() % field.modulus();
        } else if (jc.is_number_integer()) {
          c = field.from_int(jc.get<std::int64_t>());
        } else {
          throw ParseError("\"c\" must be an integer", 0);
        }
        terms.push_back({std::move(mono), c});
      }
      Form f;
      try {
        f = Form::make(deg, std::move(terms), field);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 0);
      }
      if (f.is_zero()) throw ParseError("form of bidegree " + deg.str() + " is zero", 0);
      inst.forms.push_back(std::move(f));
    }
    return inst;
  } catch (const json::exception& e) {
    throw ParseError(e.what(), 0);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

std::string serialize_instance(const Instance& inst) {
  ordered_json doc;
  doc["n"] = inst.shape.n;
  doc["m"] = inst.shape.m;
  doc["prime"] = inst.field.modulus();
  auto forms = ordered_json::array();
  for (const auto& f : inst.forms) {
    ordered_json jf;
    jf["bidegree"] = {f.degree.a, f.degree.b};
    auto terms = ordered_json::array();
    for (const auto& t : f.terms) {
      ordered_json jt;
      jt["x"] = t.mono.x;
      jt["y"] = t.mono.y;
      jt["c"] = t.coeff;
      terms.push_back(std::move(jt));
    }
    jf["terms"] = std::move(terms);
    forms.push_back(std::move(jf));
  }
  doc["forms"] = std::move(forms);
  return doc.dump();
}

Instance random_instance(const Shape& shape, const DegreeList& degrees, const PrimeField& field,
                         std::uint64_t seed) {
  validate_degree_list(degrees);
  fp::CounterRng rng(seed);
  Instance inst{shape, field, {}};
  for (const auto& d : degrees) {
    const auto basis = monomial_basis(shape, d);
    Form f;
    // A zero draw is only likely over tiny fields; keep drawing from the stream.
    do {
      std::vector<Term> terms;
      terms.reserve(basis.size());
      for (const auto& mono : basis) terms.push_back({mono, rng.uniform(field.modulus())});
      f = Form::make(d, std::move(terms), field);
    } while (f.is_zero());
    inst.forms.push_back(std::move(f));
  }
  return inst;
}

Instance random_instance(const Shape& shape, Bidegree d, const PrimeField& field, std::uint64_t seed) {
  return random_instance(shape, DegreeList(static_cast<std::size_t>(shape.r()), d), field, seed);
}

IntegerInstance random_integer_instance(const Shape& shape, Bidegree d, std::uint64_t seed, std::int64_t bound) {
  validate_degree_list({d});
  if (bound < 1) throw std::invalid_argument("coefficient bound must be positive");
  fp::CounterRng rng(seed);
  IntegerInstance inst{shape, DegreeList(static_cast<std::size_t>(shape.r()), d), {}};
  const auto basis = monomial_basis(shape, d);
  const auto span = static_cast<std::uint64_t>(2 * bound + 1);
  for (int i = 0; i < shape.r(); ++i) {
    std::vector<std::pair<Monomial, std::int64_t>> terms;
    for (const auto& mono : basis) {
      terms.emplace_back(mono, static_cast<std::int64_t>(rng.uniform(span)) - bound);
    }
    inst.forms.push_back(std::move(terms));
  }
  return inst;
}

IntegerInstance diagonal_example_integers() {
  const Shape shape(2, 2);
  IntegerInstance inst{shape, DegreeList(4, Bidegree{2, 2}), {}};
  for (int i = 0; i < 3; ++i) {
    Monomial mono{{0, 0, 0}, {0, 0, 0}};
    mono.x[i] = 2;
    mono.y[i] = 2;
    inst.forms.push_back({{mono, 1}});
  }
  // (x0+x1+x2)^2 (y0+y1+y2)^2: coefficient of x^a y^b is the product of the
  // two multinomials 2!/(a0! a1! a2!).
  std::vector<std::pair<Monomial, std::int64_t>> last;
  for (const auto& mono : monomial_basis(shape, {2, 2})) {
    auto multinomial = [](const std::vector<int>& e) {
      std::int64_t c = 2;
      for (int v : e) c /= (v == 2 ? 2 : 1);
      return c;
    };
    last.emplace_back(mono, multinomial(mono.x) * multinomial(mono.y));
  }
  inst.forms.push_back(std::move(last));
  return inst;
}

Instance diagonal_example(const PrimeField& field) { return diagonal_example_integers().reduce(field); }

}  // namespace bihilb::oracle
