#include "chern/report.hpp"

#include <ostream>

namespace chern {

Json json_int(const ExactInt& x) {
  if (x.fits_slong_p()) return Json(static_cast<std::int64_t>(x.get_si()));
  return Json(x.get_str());
}

namespace {

Json json_opt(const std::optional<ExactInt>& x) { return x ? json_int(*x) : Json(nullptr); }

Json json_valuation(const Valuation& v) {
  return v.is_infinite() ? Json("inf") : Json(static_cast<std::uint64_t>(v.value()));
}

Json json_match(const std::optional<ExactInt>& target, const ExactInt& value) {
  return target ? Json(*target == value) : Json(nullptr);
}

Json json_witness(const Witness& w) {
  Json j;
  j["rep"] = w.rep.to_string();
  j["rank"] = json_int(w.data.rank);
  j["c2"] = json_int(w.data.c2);
  j["c3"] = json_int(w.data.c3);
  j["valuation"] = json_valuation(w.valuation);
  return j;
}

Json json_header(const GroupParams& p) {
  Json j;
  j["ell"] = p.ell();
  j["k"] = p.k();
  j["n"] = p.n();
  return j;
}

std::string opt_str(const std::optional<ExactInt>& x) { return x ? x->get_str() : std::string(); }

const char* bool_str(bool b) { return b ? "true" : "false"; }

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_field(fields[i]);
  out << "\r\n";
}

std::string params_text(const GroupParams& p) {
  return "SL_" + std::to_string(p.n()) + "/mu_" + std::to_string(p.ell()) + " (ell=" + std::to_string(p.ell()) +
         ", k=" + std::to_string(p.k()) + ")";
}

std::string witness_text(const Witness& w) {
  return w.rep.to_string() + "  rank=" + w.data.rank.get_str() + " C2=" + w.data.c2.get_str() +
         " C3=" + w.data.c3.get_str() + " v=" + w.valuation.to_string();
}

const char* kind_name(WitnessResult::Kind k) {
  switch (k) {
    case WitnessResult::Kind::designated: return "designated";
    case WitnessResult::Kind::exhaustive: return "exhaustive";
    case WitnessResult::Kind::none_below_cube: return "none_below_cube";
  }
  return "unknown";
}

}  // namespace

SweepRow sweep_cell(const GroupParams& params, long max_size) {
  if (max_size < 2) throw PreconditionError("sweep needs max_size >= 2");
  const BasisEvaluation eval = evaluate_basis(params, max_size);
  const IndexReport two = chow_index(eval, 2);
  SweepRow row{params, max_size, h4_image_index(params), two.image_generator, std::nullopt, false, two.stabilized};
  if (max_size >= 3) {
    const IndexReport three = chow_index(eval, 3);
    row.chow3_generator = three.image_generator;
    row.stabilized = row.stabilized && three.stabilized;
  }
  row.counterexample = row.chow2_generator > row.h4_index;
  return row;
}

Json to_json(const IndexReport& r) {
  Json j = json_header(r.params);
  j["degree"] = r.degree;
  j["bound"] = r.bound_used;
  j["generator"] = json_int(r.image_generator);
  j["stabilized"] = r.stabilized;
  j["witnesses"] = Json::array();
  for (const auto& w : r.witnesses) j["witnesses"].push_back(json_witness(w));
  j["paper_target"] = json_opt(r.paper_target);
  j["match"] = json_match(r.paper_target, r.image_generator);
  j["witness_count"] = r.witness_count;
  if (!r.caveat.empty()) j["caveat"] = r.caveat;
  return j;
}

Json to_json(const AuditReport& r) {
  Json j = json_header(r.params);
  j["degree"] = r.degree;
  j["claim"] = r.claimed_min_valuation;
  j["checked"] = r.checked_count;
  j["passed"] = r.passed();
  j["violations"] = Json::array();
  for (std::size_t i = 0; i < r.violations.size(); ++i) {
    const Witness w{VirtualRep::of(r.violations[i]), r.violation_data[i],
                    padic_valuation(r.params.prime(), r.violation_data[i].degree(r.degree))};
    j["violations"].push_back(json_witness(w));
  }
  return j;
}

Json to_json(const WitnessResult& r) {
  Json j = json_header(r.params);
  j["degree"] = r.degree;
  j["kind"] = kind_name(r.kind);
  j["witness"] = r.witness ? json_witness(*r.witness) : Json(nullptr);
  j["generator"] = json_int(r.index_generator);
  j["verified"] = r.verified;
  return j;
}

Json to_json(const KuReport& r) {
  Json j = json_header(r.params);
  j["bound"] = r.bound_used;
  j["constrained_generator"] = json_int(r.constrained_generator);
  j["generator"] = json_int(r.ku6_generator);
  j["chow3_generator"] = json_opt(r.chow3_generator);
  j["witnesses"] = Json::array();
  for (const auto& w : r.witnesses) j["witnesses"].push_back(json_witness(w));
  j["witnesses_generate"] = r.witnesses_generate;
  j["paper_target"] = json_opt(r.paper_target);
  j["match"] = json_match(r.paper_target, r.ku6_generator);
  j["chain"] = r.chain;
  return j;
}

Json to_json(const SweepRow& r) {
  Json j = json_header(r.params);
  j["bound"] = r.bound;
  j["h4_index"] = json_int(r.h4_index);
  j["chow2_generator"] = json_int(r.chow2_generator);
  j["chow3_generator"] = json_opt(r.chow3_generator);
  j["counterexample"] = r.counterexample;
  j["stabilized"] = r.stabilized;
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

const std::vector<std::string>& sweep_csv_columns() {
  static const std::vector<std::string> columns{"ell",      "k",        "n",           "bound",
                                                "h4_index", "chow2_generator", "chow3_generator",
                                                "counterexample", "stabilized"};
  return columns;
}

void write(std::ostream& out, const IndexReport& r, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::json: out << to_json(r).dump(2) << "\n"; return;
    case OutputFormat::csv:
      write_csv_row(out, {"ell", "k", "n", "degree", "bound", "generator", "stabilized", "paper_target", "match"});
      write_csv_row(out, {std::to_string(r.params.ell()), std::to_string(r.params.k()),
                          std::to_string(r.params.n()), std::to_string(r.degree), std::to_string(r.bound_used),
                          r.image_generator.get_str(), bool_str(r.stabilized), opt_str(r.paper_target),
                          r.paper_target ? bool_str(*r.paper_target == r.image_generator) : ""});
      return;
    case OutputFormat::text:
      out << params_text(r.params) << ", degree " << r.degree << ", basis size <= " << r.bound_used << "\n";
      out << "  image generated by " << r.image_generator << " c" << r.degree
          << (r.stabilized ? " (stable)" : " (NOT stable at bound - 1)") << "\n";
      if (r.paper_target)
        out << "  expected " << *r.paper_target << ": " << (*r.paper_target == r.image_generator ? "match" : "MISMATCH")
            << "\n";
      else
        out << "  no tabulated target\n";
      if (!r.caveat.empty()) out << "  note: " << r.caveat << "\n";
      out << "  witnesses (" << r.witness_count << " total):\n";
      for (const auto& w : r.witnesses) out << "    " << witness_text(w) << "\n";
      return;
  }
}

void write(std::ostream& out, const AuditReport& r, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::json: out << to_json(r).dump(2) << "\n"; return;
    case OutputFormat::csv:
      write_csv_row(out, {"rep", "rank", "c2", "c3", "valuation"});
      for (std::size_t i = 0; i < r.violations.size(); ++i) {
        const auto& d = r.violation_data[i];
        write_csv_row(out, {r.violations[i].to_string(), d.rank.get_str(), d.c2.get_str(), d.c3.get_str(),
                            padic_valuation(r.params.prime(), d.degree(r.degree)).to_string()});
      }
      return;
    case OutputFormat::text:
      out << params_text(r.params) << ", degree " << r.degree << ": claim v_" << r.params.ell() << "(C"
          << r.degree << ") >= " << r.claimed_min_valuation << " over " << r.checked_count << " elements\n";
      if (r.passed()) {
        out << "  holds\n";
        return;
      }
      out << "  " << r.violations.size() << " violations\n";
      for (std::size_t i = 0; i < r.violations.size() && i < 20; ++i) {
        const auto& d = r.violation_data[i];
        out << "    " << r.violations[i].to_string() << "  C" << r.degree << "=" << d.degree(r.degree) << " v="
            << padic_valuation(r.params.prime(), d.degree(r.degree)).to_string() << "\n";
      }
      if (r.violations.size() > 20) out << "    ...\n";
      return;
  }
}

void write(std::ostream& out, const WitnessResult& r, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::json: out << to_json(r).dump(2) << "\n"; return;
    case OutputFormat::csv:
      write_csv_row(out, {"ell", "k", "n", "degree", "kind", "rep", "rank", "c2", "c3", "valuation", "generator",
                          "verified"});
      write_csv_row(out, {std::to_string(r.params.ell()), std::to_string(r.params.k()),
                          std::to_string(r.params.n()), std::to_string(r.degree), kind_name(r.kind),
                          r.witness ? r.witness->rep.to_string() : "", r.witness ? r.witness->data.rank.get_str() : "",
                          r.witness ? r.witness->data.c2.get_str() : "", r.witness ? r.witness->data.c3.get_str() : "",
                          r.witness ? r.witness->valuation.to_string() : "", r.index_generator.get_str(),
                          bool_str(r.verified)});
      return;
    case OutputFormat::text:
      out << params_text(r.params) << ", degree " << r.degree << "\n";
      if (r.witness)
        out << "  " << kind_name(r.kind) << " witness " << witness_text(*r.witness) << "\n";
      else
        out << "  no witness below ell^3 exists; every C3 is divisible by " << r.params.ell() << "^3\n";
      out << "  index generator " << r.index_generator << (r.verified ? " (verified)" : " (NOT verified)") << "\n";
      return;
  }
}

void write(std::ostream& out, const KuReport& r, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::json: out << to_json(r).dump(2) << "\n"; return;
    case OutputFormat::csv:
      write_csv_row(out, {"ell", "k", "n", "bound", "constrained_generator", "ku6_generator", "chow3_generator",
                          "paper_target", "chain"});
      write_csv_row(out, {std::to_string(r.params.ell()), std::to_string(r.params.k()),
                          std::to_string(r.params.n()), std::to_string(r.bound_used),
                          r.constrained_generator.get_str(), r.ku6_generator.get_str(), opt_str(r.chow3_generator),
                          opt_str(r.paper_target), r.chain});
      return;
    case OutputFormat::text:
      out << params_text(r.params) << ", basis size <= " << r.bound_used << "\n";
      out << "  C3 over rank 0, C2 = 0 combinations: d = " << r.constrained_generator << "\n";
      out << "  ku6 image generator d/2 = " << r.ku6_generator << "\n";
      if (r.paper_target)
        out << "  expected " << *r.paper_target << ": "
            << (*r.paper_target == r.ku6_generator ? "match" : "MISMATCH") << "\n";
      else
        out << "  no tabulated target\n";
      out << "  chain: " << r.chain << "\n";
      out << "  witnesses" << (r.witnesses_generate ? " (generate d)" : " (do not generate d)") << ":\n";
      for (const auto& w : r.witnesses) out << "    " << witness_text(w) << "\n";
      return;
  }
}

void write(std::ostream& out, const std::vector<SweepRow>& rows, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::json: {
      Json j = Json::array();
      for (const auto& r : rows) j.push_back(to_json(r));
      out << j.dump(2) << "\n";
      return;
    }
    case OutputFormat::csv:
      write_csv_row(out, sweep_csv_columns());
      for (const auto& r : rows)
        write_csv_row(out, {std::to_string(r.params.ell()), std::to_string(r.params.k()),
                            std::to_string(r.params.n()), std::to_string(r.bound), r.h4_index.get_str(),
                            r.chow2_generator.get_str(), opt_str(r.chow3_generator), bool_str(r.counterexample),
                            bool_str(r.stabilized)});
      return;
    case OutputFormat::text:
      out << " ell   k    n  h4  chow2  chow3  counterexample  stable\n";
      for (const auto& r : rows) {
        char line[160];
        std::snprintf(line, sizeof line, "%4ld %3ld %4ld %3s %6s %6s  %-14s  %s\n", r.params.ell(), r.params.k(),
                      r.params.n(), r.h4_index.get_str().c_str(), r.chow2_generator.get_str().c_str(),
                      opt_str(r.chow3_generator).c_str(), r.counterexample ? "yes" : "no",
                      r.stabilized ? "yes" : "no");
        out << line;
      }
      return;
  }
}

}  // namespace chern
