#include "ringweight/reports.hpp"

#include <stdexcept>

#include "json.hpp"

#include "ringweight/conv.hpp"
#include "ringweight/mobius.hpp"

namespace ringweight {

namespace {

using ojson = nlohmann::ordered_json;

[[noreturn]] void unsupported(const char* report) {
  throw std::invalid_argument(std::string("unsupported format for the ") + report + " report");
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

ojson scalar_json(const Scalar& v) {
  return ojson{{"re", v.re().str()}, {"im", v.im().str()}};
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  return std::nullopt;
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string out = "\"";
  for (char ch : value) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string render_ring_info(const ProductRing& ring, Format format) {
  const IdealExponent socle = ring.socle_rep();
  if (format == Format::Text) {
    std::string out;
    out += "ring: " + ring.spec_string() + "\n";
    out += "size: " + std::to_string(ring.size()) + "\n";
    out += "unit_count: " + std::to_string(ring.unit_count()) + "\n";
    std::string comps;
    for (const auto& c : ring.components()) {
      if (!comps.empty()) comps += ", ";
      comps += c.str();
    }
    out += "components: " + comps + "\n";
    out += "socle: " + socle.str() + "\n";
    out += "ideals:\n";
    for (const IdealExponent& e : ring.ideal_reps()) {
      out += "  x=" + e.str();
      out += " rep=" + ring.render(ring.rep_element(e));
      out += " ideal_size=" + std::to_string(ring.ideal_size(e));
      out += " orbit_size=" + std::to_string(ring.orbit_size(e));
      out += " orth=" + ring.orth(e).str();
      out += "\n";
    }
    return out;
  }
  if (format == Format::Json) {
    ojson j;
    j["ring"] = ring.spec_string();
    j["size"] = ring.size();
    j["unit_count"] = ring.unit_count();
    ojson comps = ojson::array();
    for (const auto& c : ring.components()) comps.push_back(c.str());
    j["components"] = std::move(comps);
    j["socle"] = socle.str();
    ojson ideals = ojson::array();
    for (const IdealExponent& e : ring.ideal_reps()) {
      ojson entry;
      entry["x"] = e.str();
      entry["rep"] = ring.render(ring.rep_element(e));
      entry["ideal_size"] = ring.ideal_size(e);
      entry["orbit_size"] = ring.orbit_size(e);
      entry["orth"] = ring.orth(e).str();
      ideals.push_back(std::move(entry));
    }
    j["ideals"] = std::move(ideals);
    return dump(j);
  }
  unsupported("ring-info");
}

std::string render_mobius(const ProductRing& ring, Format format) {
  const auto& reps = ring.ideal_reps();
  if (format == Format::Csv) {
    std::string out = "e,mu_zero";
    for (const IdealExponent& f : reps) out += "," + csv_field(f.str());
    out += "\n";
    for (const IdealExponent& e : reps) {
      out += csv_field(e.str());
      out += "," + mobius_zero_closed(ring, e).str();
      for (const IdealExponent& f : reps) out += "," + mobius_pair(ring, e, f).str();
      out += "\n";
    }
    return out;
  }
  if (format == Format::Json) {
    ojson j;
    j["ring"] = ring.spec_string();
    ojson zero = ojson::array();
    for (const IdealExponent& e : reps)
      zero.push_back(ojson{{"e", e.str()}, {"mu", mobius_zero_closed(ring, e).str()}});
    j["mu_zero"] = std::move(zero);
    ojson pairs = ojson::array();
    for (const IdealExponent& e : reps) {
      ojson row = ojson::array();
      for (const IdealExponent& f : reps) row.push_back(mobius_pair(ring, e, f).str());
      pairs.push_back(std::move(row));
    }
    j["mu_pairs"] = std::move(pairs);
    return dump(j);
  }
  unsupported("mobius");
}

std::string render_weight(const Weight& w, const std::string& name, Format format) {
  const ProductRing& ring = w.ring();
  if (format == Format::Text) {
    std::string out;
    out += "ring: " + ring.spec_string() + "\n";
    out += "weight: " + name + "\n";
    for (size_t i = 0; i < ring.ideal_count(); ++i) {
      const IdealExponent& e = ring.ideal_reps()[i];
      out += "x=" + e.str() + " value=" + w.values()[i].str() +
             " orbit_size=" + std::to_string(ring.orbit_size(e)) + "\n";
    }
    return out;
  }
  if (format == Format::Csv) {
    FnR f = w.expand();
    std::string out = "index,element,re,im\n";
    for (size_t x = 0; x < ring.size(); ++x)
      out += std::to_string(x) + "," + csv_field(ring.render_index(x)) + "," + f[x].re().str() +
             "," + f[x].im().str() + "\n";
    return out;
  }
  if (format == Format::Json) {
    ojson j;
    j["ring"] = ring.spec_string();
    j["weight"] = name;
    ojson values = ojson::array();
    for (size_t i = 0; i < ring.ideal_count(); ++i) {
      const IdealExponent& e = ring.ideal_reps()[i];
      values.push_back(ojson{{"x", e.str()},
                             {"value", scalar_json(w.values()[i])},
                             {"orbit_size", ring.orbit_size(e)}});
    }
    j["values"] = std::move(values);
    FnR f = w.expand();
    ojson elements = ojson::array();
    for (size_t x = 0; x < ring.size(); ++x)
      elements.push_back(ojson{{"index", x},
                               {"element", ring.render_index(x)},
                               {"value", scalar_json(f[x])}});
    j["elements"] = std::move(elements);
    return dump(j);
  }
  unsupported("weight");
}

std::string render_eta_matrix(const ProductRing& ring, Format format) {
  if (format != Format::Csv) unsupported("eta-matrix");
  const size_t zero = ring.ideal_index(ring.zero_ideal());
  std::vector<size_t> nonzero;
  for (size_t i = 0; i < ring.ideal_count(); ++i)
    if (i != zero) nonzero.push_back(i);
  ScalarMatrix m = eta_change_of_basis(ring);
  std::string out = "eta";
  for (size_t col : nonzero) out += "," + csv_field("eps:" + ring.ideal_reps()[col].str());
  out += "\n";
  for (size_t row = 0; row < nonzero.size(); ++row) {
    out += csv_field(ring.ideal_reps()[nonzero[row]].str());
    for (size_t col = 0; col < nonzero.size(); ++col) out += "," + m[row][col].str();
    out += "\n";
  }
  return out;
}

std::string render_criterion(const CriterionReport& report, Format format) {
  if (format == Format::Json) {
    ojson j;
    j["ring"] = report.ring;
    ojson entries = ojson::array();
    for (const auto& entry : report.entries)
      entries.push_back(
          ojson{{"x", entry.x.str()}, {"value", scalar_json(entry.value)}, {"pass", entry.pass}});
    j["entries"] = std::move(entries);
    j["pass"] = report.pass;
    return dump(j);
  }
  if (format == Format::Csv) {
    std::string out = "x,re,im,pass\n";
    for (const auto& entry : report.entries)
      out += csv_field(entry.x.str()) + "," + entry.value.re().str() + "," +
             entry.value.im().str() + "," + (entry.pass ? "true" : "false") + "\n";
    return out;
  }
  if (format == Format::Text) {
    std::string out = "ring: " + report.ring + "\n";
    for (const auto& entry : report.entries)
      out += "x=" + entry.x.str() + " value=" + entry.value.str() +
             (entry.pass ? " pass" : " FAIL") + "\n";
    out += std::string("criterion: ") + (report.pass ? "satisfied" : "violated") + "\n";
    return out;
  }
  unsupported("criterion");
}

namespace {

ojson tuple_json(const ProductRing& ring, const Tuple& t) {
  ojson arr = ojson::array();
  for (size_t v : t) arr.push_back(ring.render_index(v));
  return arr;
}

}  // namespace

std::string render_extension(const ExtensionReport& report, Format format) {
  if (format == Format::Json) {
    ojson j;
    j["ring"] = report.ring;
    j["weight"] = report.weight;
    j["n"] = report.n;
    j["codes_examined"] = report.codes_examined;
    j["codes_skipped"] = report.codes_skipped;
    j["isometries_found"] = report.isometries_found;
    j["extendable"] = report.extendable;
    ojson witnesses = ojson::array();
    for (const auto& witness : report.witnesses) {
      const Code& code = witness.map.domain();
      const ProductRing& ring = code.ring();
      ojson w;
      ojson gens = ojson::array();
      for (const Tuple& g : code.generators()) gens.push_back(tuple_json(ring, g));
      w["code_generators"] = std::move(gens);
      w["code_size"] = code.size();
      ojson table = ojson::array();
      for (size_t pos = 0; pos < code.size(); ++pos)
        table.push_back(ojson{{"x", tuple_json(ring, code.element_tuple(pos))},
                              {"y", tuple_json(ring, witness.map.images()[pos])}});
      w["map"] = std::move(table);
      witnesses.push_back(std::move(w));
    }
    j["witnesses"] = std::move(witnesses);
    return dump(j);
  }
  if (format == Format::Text) {
    std::string out;
    out += "ring: " + report.ring + "\n";
    out += "weight: " + report.weight + "\n";
    out += "n: " + std::to_string(report.n) + "\n";
    out += "codes_examined: " + std::to_string(report.codes_examined) + "\n";
    out += "codes_skipped: " + std::to_string(report.codes_skipped) + "\n";
    out += "isometries_found: " + std::to_string(report.isometries_found) + "\n";
    out += "extendable: " + std::to_string(report.extendable) + "\n";
    out += "witnesses: " + std::to_string(report.witnesses.size()) + "\n";
    for (const auto& witness : report.witnesses) {
      const Code& code = witness.map.domain();
      const ProductRing& ring = code.ring();
      std::string gens;
      for (const Tuple& g : code.generators()) {
        if (!gens.empty()) gens += " ";
        gens += "<";
        for (size_t i = 0; i < g.size(); ++i) gens += (i ? "," : "") + ring.render_index(g[i]);
        gens += ">";
      }
      out += "  code gens=" + (gens.empty() ? "<>" : gens) + " map:";
      for (size_t pos = 0; pos < code.size(); ++pos) {
        Tuple x = code.element_tuple(pos);
        const Tuple& y = witness.map.images()[pos];
        std::string xs, ys;
        for (size_t i = 0; i < x.size(); ++i) xs += (i ? "," : "") + ring.render_index(x[i]);
        for (size_t i = 0; i < y.size(); ++i) ys += (i ? "," : "") + ring.render_index(y[i]);
        out += " (" + xs + ")->(" + ys + ")";
      }
      out += "\n";
    }
    return out;
  }
  unsupported("oracle");
}

}  // namespace ringweight
