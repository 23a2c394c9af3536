#include "bihilb/render.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace bihilb {

using ojson = nlohmann::ordered_json;

namespace {

const char* kReset = "\x1b[0m";

const char* ansi(Tint t) {
  switch (t) {
    case Tint::Overlap:
      return "\x1b[38;5;208m";
    case Tint::Positive:
      return "\x1b[32m";
    case Tint::Zero:
      return "\x1b[34m";
    case Tint::MinusOne:
      return "\x1b[31m";
    case Tint::None:
      break;
  }
  return "";
}

// Exact integers that fit stay JSON numbers; anything larger becomes a string.
ojson big_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

ojson point_json(Bidegree mu) { return ojson::array({mu.a, mu.b}); }

ojson window_json(const Window& w) { return ojson::array({w.lo.a, w.lo.b, w.hi.a, w.hi.b}); }

ojson spec_json(const RegionSpec& s) {
  ojson j;
  j["n"] = s.shape.n;
  j["m"] = s.shape.m;
  j["d"] = point_json(s.d);
  return j;
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

// Rows from the top b down, like a matrix of bidegrees drawn in the plane.
template <typename CellText, typename CellTint>
std::string text_matrix(const Window& w, CellText text, CellTint tint, bool color) {
  std::size_t width = 1;
  for (const auto& mu : w.points()) width = std::max(width, text(mu).size());
  std::ostringstream out;
  const std::size_t label = std::max(std::to_string(w.hi.b).size(), std::to_string(w.lo.b).size());
  for (std::int64_t b = w.hi.b; b >= w.lo.b; --b) {
    std::string lb = std::to_string(b);
    out << std::string(label - lb.size(), ' ') << lb << " |";
    for (std::int64_t a = w.lo.a; a <= w.hi.a; ++a) {
      const std::string s = text({a, b});
      out << ' ' << std::string(width - s.size(), ' ');
      const Tint t = tint(Bidegree{a, b});
      if (color && t != Tint::None) {
        out << ansi(t) << s << kReset;
      } else {
        out << s;
      }
    }
    out << '\n';
  }
  out << std::string(label + 1, ' ') << '+' << std::string(w.width() * (width + 1), '-') << '\n';
  out << std::string(label + 2, ' ');
  for (std::int64_t a = w.lo.a; a <= w.hi.a; ++a) {
    const std::string s = std::to_string(a);
    out << ' ' << std::string(width > s.size() ? width - s.size() : 0, ' ') << s;
  }
  out << '\n';
  return out.str();
}

const char* status_name(const HFResult& r) { return r.known() ? "known" : "instance"; }

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw std::invalid_argument("unknown format '" + name + "' (expected text, csv or json)");
}

Tint tint_of(const Classification& c) {
  if (c.in_gamma0 && c.in_gamma_pos) return Tint::Overlap;
  if (c.in_gamma_pos) return Tint::Positive;
  if (c.in_gamma0) return Tint::Zero;
  if (c.in_gamma_neg1) return Tint::MinusOne;
  return Tint::None;
}

std::string render_table(const HFTable& table, Format format, bool color) {
  const Window& w = table.window;
  switch (format) {
    case Format::Csv: {
      std::string out = "a,b,value,status,rule\n";
      for (const auto& mu : w.points()) {
        const HFResult& r = table.cell(mu);
        out += std::to_string(mu.a) + "," + std::to_string(mu.b) + "," + (r.known() ? r.value.str() : "") + "," +
               status_name(r) + "," + (r.known() ? to_string(r.rule) : "-") + "\n";
      }
      return out;
    }
    case Format::Json: {
      ojson j = spec_json(table.spec);
      j["window"] = window_json(w);
      auto cells = ojson::array();
      for (const auto& mu : w.points()) {
        const HFResult& r = table.cell(mu);
        ojson c;
        c["a"] = mu.a;
        c["b"] = mu.b;
        c["value"] = r.known() ? big_json(r.value) : ojson(nullptr);
        c["status"] = status_name(r);
        c["rule"] = r.known() ? to_string(r.rule) : "-";
        cells.push_back(std::move(c));
      }
      j["cells"] = std::move(cells);
      return dump(j);
    }
    case Format::Text:
      break;
  }
  return text_matrix(
      w,
      [&](Bidegree mu) {
        const HFResult& r = table.cell(mu);
        return r.known() ? r.value.str() : std::string("*");
      },
      [&](Bidegree mu) { return tint_of(table.classification(mu)); }, color);
}

std::string render_grid(const IntGrid& grid, Format format, bool color, const RegionSpec* spec) {
  const Window& w = grid.window;
  switch (format) {
    case Format::Csv: {
      std::string out = "a,b,value,status,rule\n";
      for (const auto& mu : w.points()) {
        out += std::to_string(mu.a) + "," + std::to_string(mu.b) + "," + std::to_string(grid[mu]) + ",oracle,-\n";
      }
      return out;
    }
    case Format::Json: {
      ojson j;
      j["window"] = window_json(w);
      auto values = ojson::array();
      for (const auto& mu : w.points()) {
        ojson c;
        c["a"] = mu.a;
        c["b"] = mu.b;
        c["value"] = grid[mu];
        values.push_back(std::move(c));
      }
      j["cells"] = std::move(values);
      return dump(j);
    }
    case Format::Text:
      break;
  }
  return text_matrix(
      w, [&](Bidegree mu) { return std::to_string(grid[mu]); },
      [&](Bidegree mu) { return spec ? tint_of(classify(*spec, mu)) : Tint::None; }, color && spec);
}

std::string render_classification(const Classification& c, Format format) {
  const std::string verdict = to_string(c.verdict);
  if (format == Format::Json) {
    ojson j;
    j["mu"] = point_json(c.mu);
    j["gamma0"] = c.in_gamma0;
    j["gamma_pos"] = c.in_gamma_pos;
    j["gamma_minus1"] = c.in_gamma_neg1;
    j["memberships"] = c.memberships;
    j["verdict"] = verdict;
    return dump(j);
  }
  std::string members;
  for (int i : c.memberships) members += (members.empty() ? "" : ",") + std::to_string(i);
  if (format == Format::Csv) {
    return "a,b,gamma0,gamma_pos,gamma_minus1,memberships,verdict\n" + std::to_string(c.mu.a) + "," +
           std::to_string(c.mu.b) + "," + (c.in_gamma0 ? "1" : "0") + "," + (c.in_gamma_pos ? "1" : "0") + "," +
           (c.in_gamma_neg1 ? "1" : "0") + ",\"" + members + "\"," + verdict + "\n";
  }
  return c.mu.str() + ": in Gamma_i for i in {" + members + "}; verdict " + verdict + "\n";
}

std::string render_staircase(const Staircase& s, Format format) {
  if (format == Format::Json) {
    auto j = ojson::array();
    for (const auto& c : s.corners()) j.push_back(point_json(c));
    return dump(j);
  }
  if (format == Format::Csv) {
    std::string out = "a,b\n";
    for (const auto& c : s.corners()) out += std::to_string(c.a) + "," + std::to_string(c.b) + "\n";
    return out;
  }
  std::string out;
  for (const auto& c : s.corners()) out += (out.empty() ? "" : " ") + c.str();
  return (out.empty() ? "(empty)" : out) + "\n";
}

std::string render_report(const VerifyReport& r, Format format) {
  if (format == Format::Json) {
    ojson j = spec_json(r.spec);
    j["window"] = window_json(r.window);
    j["instance"] = r.instance;
    j["compared"] = r.compared;
    j["matched"] = r.matched;
    auto mism = ojson::array();
    for (const auto& m : r.mismatches) {
      ojson e;
      e["mu"] = point_json(m.mu);
      e["formula"] = big_json(m.formula);
      e["oracle"] = m.oracle;
      mism.push_back(std::move(e));
    }
    j["mismatches"] = std::move(mism);
    auto info = ojson::array();
    for (const auto& c : r.informational) {
      ojson e;
      e["mu"] = point_json(c.mu);
      e["oracle"] = c.oracle;
      info.push_back(std::move(e));
    }
    j["informational"] = std::move(info);
    j["padding"] = r.padding;
    ojson secs;
    for (const auto& [k, v] : r.seconds) secs[k] = v;
    j["seconds"] = std::move(secs);
    return dump(j);
  }
  if (format == Format::Csv) {
    std::string out = "a,b,formula,oracle,status\n";
    for (const auto& m : r.mismatches) {
      out += std::to_string(m.mu.a) + "," + std::to_string(m.mu.b) + "," + m.formula.str() + "," +
             std::to_string(m.oracle) + ",mismatch\n";
    }
    for (const auto& c : r.informational) {
      out += std::to_string(c.mu.a) + "," + std::to_string(c.mu.b) + ",," + std::to_string(c.oracle) + ",instance\n";
    }
    return out;
  }
  std::ostringstream out;
  out << "instance " << r.instance << "\n";
  out << "compared " << r.compared << ", matched " << r.matched << ", mismatches " << r.mismatches.size() << "\n";
  for (const auto& m : r.mismatches) {
    out << "  mismatch at " << m.mu.str() << ": formula " << m.formula.str() << ", oracle " << m.oracle << "\n";
  }
  if (!r.informational.empty()) {
    out << "instance-dependent cells:";
    for (const auto& c : r.informational) out << " " << c.mu.str() << "=" << c.oracle;
    out << "\n";
  }
  out << "padding " << r.padding;
  for (const auto& [k, v] : r.seconds) out << ", " << k << " " << v << "s";
  out << "\n";
  return out.str();
}

std::string render_report(const GenericReport& r, Format format) {
  auto opt = [](const std::optional<std::int64_t>& v) { return v ? ojson(*v) : ojson(nullptr); };
  if (format == Format::Json) {
    ojson j = spec_json(r.spec);
    j["prime"] = r.prime;
    j["seed"] = r.seed ? ojson(*r.seed) : ojson(nullptr);
    j["degree"] = big_json(r.degree);
    j["bound"] = r.bound;
    j["profile_x"] = r.profile_x;
    j["profile_y"] = r.profile_y;
    j["stable_x"] = opt(r.stable_x);
    j["stable_y"] = opt(r.stable_y);
    j["below_degree"] = r.below_degree;
    j["generic"] = r.generic();
    return dump(j);
  }
  if (format == Format::Csv) {
    std::string out = "axis,index,value\n";
    for (std::size_t t = 0; t < r.profile_x.size(); ++t) {
      out += "x," + std::to_string(t) + "," + std::to_string(r.profile_x[t]) + "\n";
    }
    for (std::size_t t = 0; t < r.profile_y.size(); ++t) {
      out += "y," + std::to_string(t) + "," + std::to_string(r.profile_y[t]) + "\n";
    }
    return out;
  }
  auto join = [](const std::vector<std::int64_t>& v) {
    std::string s;
    for (auto x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
  };
  auto idx = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string("never"); };
  std::ostringstream out;
  out << "degree " << r.degree.str() << ", prime " << r.prime;
  if (r.seed) out << ", seed " << *r.seed;
  out << "\n";
  out << "HF(a,0): " << join(r.profile_x) << "  (reaches degree at " << idx(r.stable_x) << ")\n";
  out << "HF(0,b): " << join(r.profile_y) << "  (reaches degree at " << idx(r.stable_y) << ")\n";
  out << "axis cells below degree: " << r.below_degree << "\n";
  out << (r.generic() ? "projections are injective on the points\n" : "non-generic: a projection is not injective\n");
  return out.str();
}

std::string render_report(const DoublePrimeReport& r, Format format) {
  if (format == Format::Json) {
    ojson j;
    j["p1"] = r.p1;
    j["p2"] = r.p2;
    j["identical"] = r.identical();
    auto diff = ojson::array();
    for (const auto& mu : r.differing) diff.push_back(point_json(mu));
    j["differing"] = std::move(diff);
    j["error"] = r.error.empty() ? ojson(nullptr) : ojson(r.error);
    return dump(j);
  }
  std::ostringstream out;
  out << "p1 " << r.p1 << ", p2 " << r.p2 << ": " << (r.identical() ? "identical" : "different") << "\n";
  if (!r.error.empty()) out << "error: " << r.error << "\n";
  for (const auto& mu : r.differing) {
    out << "  " << mu.str() << ": " << r.grid1[mu] << " vs " << r.grid2[mu] << "\n";
  }
  return out.str();
}

}  // namespace bihilb
