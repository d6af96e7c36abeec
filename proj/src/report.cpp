#include "quartic/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace quartic::report {

namespace {

void write(Json const& j, std::string& out) {
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += Json(it.key()).dump();
        out += ':';
        write(it.value(), out);
      }
      out += '}';
      return;
    }
    case Json::value_t::array: {
      out += '[';
      bool first = true;
      for (auto const& v : j) {
        if (!first) out += ',';
        first = false;
        write(v, out);
      }
      out += ']';
      return;
    }
    case Json::value_t::number_float: {
      double const v = j.get<double>();
      out += std::isfinite(v) ? format_double(v) : "null";
      return;
    }
    default:
      out += j.dump();
  }
}

Json number_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(); }

}  // namespace

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", v);
  return buffer;
}

std::string serialize(Json const& j) {
  std::string out;
  write(j, out);
  return out;
}

Json classification_json(InputEcho const& input, Classification const& c) {
  Json j;
  j["input"] = {{"form", input.form}, {"coefficients", input.coefficients}};
  j["depressed"] = {{"m", c.quartic.m},
                    {"p", c.quartic.p},
                    {"q", c.quartic.q},
                    {"shift", c.quartic.shift}};
  if (c.trig) {
    j["trig"] = {{"u", c.trig->u}, {"a", c.trig->a}, {"b", c.trig->b}};
    if (c.boundary) {
      j["trig"]["f0"] = c.boundary->at_zero;
      j["trig"]["fpi"] = c.boundary->at_pi;
    }
  } else {
    j["trig"] = nullptr;
  }

  Json flags = Json::array();
  if (c.sufficient_all_complex) flags.push_back("sufficient_all_complex");
  if (c.sufficient_two_real_outside) flags.push_back("sufficient_two_real_outside");
  if (c.degenerate()) flags.push_back("degenerate");
  if (c.n_real_multiplicity != c.n_real_distinct) flags.push_back("multiple_root");

  Json diagnostics = Json::array();
  for (auto const& d : c.diagnostics) {
    diagnostics.push_back({{"quantity", d.quantity},
                           {"value", d.value},
                           {"tolerance", d.tolerance}});
  }

  j["classification"] = {{"n_int", c.n_int},
                         {"n_int_multiplicity", c.n_int_multiplicity},
                         {"n_ext", c.n_ext},
                         {"n_real_distinct", c.n_real_distinct},
                         {"n_real_multiplicity", c.n_real_multiplicity},
                         {"case", to_string(c.case_label)},
                         {"flags", flags},
                         {"diagnostics", diagnostics}};

  Json roots = Json::array();
  for (auto const& r : c.roots) {
    roots.push_back({{"value", r.t},
                     {"z", r.z},
                     {"multiplicity", r.multiplicity},
                     {"origin", to_string(r.origin)}});
  }
  j["roots"] = roots;
  return j;
}

Json oracle_json(oracle::OracleReport const& report, bool agrees) {
  Json roots = Json::array();
  for (auto const& r : report.all_roots) {
    roots.push_back({{"re", r.real()}, {"im", r.imag()}});
  }
  return {{"n_real_distinct", report.n_real_distinct},
          {"n_real_entries", report.n_real_entries},
          {"multiple_roots", report.multiple_roots},
          {"roots", roots},
          {"discriminant", number_or_null(report.discriminant.value)},
          {"discriminant_imag", number_or_null(report.discriminant.imag_residual)},
          {"discriminant_imprecise", report.discriminant.imprecise},
          {"degeneracy_margin", number_or_null(report.degeneracy_margin)},
          {"max_residual", number_or_null(report.max_residual)},
          {"agrees", agrees}};
}

std::string human_summary(InputEcho const& input, Classification const& c) {
  std::ostringstream os;
  os << "input (" << input.form << "):";
  for (double v : input.coefficients) os << ' ' << format_double(v);
  os << '\n';
  os << "depressed: m=" << format_double(c.quartic.m)
     << " p=" << format_double(c.quartic.p)
     << " q=" << format_double(c.quartic.q)
     << " shift=" << format_double(c.quartic.shift) << '\n';
  if (c.trig) {
    os << "trig: u=" << format_double(c.trig->u)
       << " a=" << format_double(c.trig->a)
       << " b=" << format_double(c.trig->b) << '\n';
    os << "boundary: f(0)=" << format_double(c.boundary->at_zero)
       << " f(pi)=" << format_double(c.boundary->at_pi) << '\n';
  } else {
    os << "trig: unavailable (m >= 0, convex path)\n";
  }
  os << "counts: n_int=" << c.n_int << " n_ext=" << c.n_ext
     << " n_real=" << c.n_real_distinct
     << " (with multiplicity " << c.n_real_multiplicity << ")\n";
  os << "case: " << to_string(c.case_label) << '\n';

  switch (c.case_label) {
    case CaseLabel::kAllComplex:
      os << (c.sufficient_all_complex
                 ? "all four roots complex (Theorem: b > |a|+1)\n"
                 : "all four roots complex (f > 0 on [0, pi])\n");
      break;
    case CaseLabel::kTwoRealA:
      os << "two real, two complex: f < 0 on [0, pi], one root either side of "
            "[-u, u]\n";
      break;
    case CaseLabel::kTwoRealB:
      os << "two real, two complex: two interior roots\n";
      break;
    case CaseLabel::kTwoRealC:
      os << "two real, two complex: one interior and one exterior root\n";
      break;
    case CaseLabel::kTwoRealExteriorPair:
      os << "two real, two complex: f > 0 on [0, pi] but both real roots lie "
            "on one side outside [-u, u]\n";
      break;
    case CaseLabel::kFourReal:
      os << "all four roots real\n";
      break;
    case CaseLabel::kMNonNegConvex:
      os << "m >= 0: P is globally convex, " << c.n_real_distinct
         << " real roots\n";
      break;
    case CaseLabel::kDegenerate:
      os << "degenerate configuration; rerun with --verify for the oracle "
            "cross-check\n";
      for (auto const& d : c.diagnostics) {
        os << "  " << d.quantity << " = " << format_double(d.value)
           << " (tolerance " << format_double(d.tolerance) << ")\n";
      }
      break;
  }
  for (auto const& r : c.roots) {
    os << "root t=" << format_double(r.t) << " z=" << format_double(r.z)
       << " multiplicity=" << r.multiplicity << " (" << to_string(r.origin)
       << ")\n";
  }
  return os.str();
}

}  // namespace quartic::report
