#include "hypsum/io.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace hypsum::io {

using ordered_json = nlohmann::ordered_json;

namespace {

const char* kind_name(CoeffKind kind) { return kind == CoeffKind::a ? "a" : "c"; }

std::string point_str(const std::vector<unsigned long>& point) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (i) os << ",";
    os << point[i];
  }
  os << ")";
  return os.str();
}

}  // namespace

std::string render_coeff_table(const CoeffTriangle& t, TableFormat f) {
  std::ostringstream os;
  switch (f) {
    case TableFormat::csv:
      for (unsigned m = 2; m <= t.max_m(); ++m)
        for (unsigned k = 2; k <= m; ++k)
          os << m << "," << k << "," << to_string(t.at(m, k)) << "\n";
      return os.str();
    case TableFormat::bfile: {
      if (t.kind() == CoeffKind::a)
        throw std::invalid_argument(
            "b-file output needs an integer-valued table; kind a is rational");
      unsigned long index = 1;
      for (unsigned m = 2; m <= t.max_m(); ++m)
        for (unsigned k = 2; k <= m; ++k)
          os << index++ << " "
             << require_integer(t.at(m, k), "render_coeff_table").get_str() << "\n";
      return os.str();
    }
    case TableFormat::json: {
      ordered_json j;
      j["kind"] = kind_name(t.kind());
      j["max_m"] = t.max_m();
      j["rows"] = ordered_json::array();
      for (unsigned m = 2; m <= t.max_m(); ++m) {
        ordered_json row;
        row["m"] = m;
        row["entries"] = ordered_json::array();
        for (unsigned k = 2; k <= m; ++k) {
          const Rat& q = t.at(m, k);
          row["entries"].push_back({{"k", k},
                                    {"num", q.get_num().get_str()},
                                    {"den", q.get_den().get_str()}});
        }
        j["rows"].push_back(std::move(row));
      }
      return j.dump(2) + "\n";
    }
  }
  throw std::invalid_argument("render_coeff_table: unknown format");
}

std::string render_stirling_table(const StirlingTriangle& t, TableFormat f) {
  std::ostringstream os;
  switch (f) {
    case TableFormat::csv:
      for (unsigned n = 0; n <= t.max_n(); ++n)
        for (unsigned k = 0; k <= n; ++k)
          os << n << "," << k << "," << t.at(n, k).get_str() << "\n";
      return os.str();
    case TableFormat::bfile: {
      unsigned long index = 1;
      for (unsigned n = 0; n <= t.max_n(); ++n)
        for (unsigned k = 0; k <= n; ++k)
          os << index++ << " " << t.at(n, k).get_str() << "\n";
      return os.str();
    }
    case TableFormat::json: {
      ordered_json j;
      j["kind"] = t.kind() == StirlingKind::first_unsigned ? "stirling1" : "stirling2";
      j["max_n"] = t.max_n();
      j["rows"] = ordered_json::array();
      for (unsigned n = 0; n <= t.max_n(); ++n) {
        ordered_json row;
        row["n"] = n;
        row["entries"] = ordered_json::array();
        for (unsigned k = 0; k <= n; ++k)
          row["entries"].push_back({{"k", k}, {"value", t.at(n, k).get_str()}});
        j["rows"].push_back(std::move(row));
      }
      return j.dump(2) + "\n";
    }
  }
  throw std::invalid_argument("render_stirling_table: unknown format");
}

CoeffTriangle coeff_table_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("coeff_table_from_json: ") + e.what());
  }
  const std::string kind_str = j.at("kind").get<std::string>();
  CoeffKind kind;
  if (kind_str == "a")
    kind = CoeffKind::a;
  else if (kind_str == "c")
    kind = CoeffKind::c;
  else
    throw std::invalid_argument("coeff_table_from_json: kind must be \"a\" or \"c\"");
  const unsigned max_m = j.at("max_m").get<unsigned>();
  if (max_m < 2) throw std::invalid_argument("coeff_table_from_json: max_m must be >= 2");

  std::vector<std::vector<Rat>> rows;
  const auto& jrows = j.at("rows");
  if (jrows.size() != max_m - 1)
    throw std::invalid_argument("coeff_table_from_json: row count mismatch");
  for (unsigned m = 2; m <= max_m; ++m) {
    const auto& jr = jrows.at(m - 2);
    if (jr.at("m").get<unsigned>() != m)
      throw std::invalid_argument("coeff_table_from_json: rows out of order");
    const auto& entries = jr.at("entries");
    if (entries.size() != m - 1)
      throw std::invalid_argument("coeff_table_from_json: entry count mismatch");
    std::vector<Rat> row;
    row.reserve(m - 1);
    for (unsigned k = 2; k <= m; ++k) {
      const auto& je = entries.at(k - 2);
      if (je.at("k").get<unsigned>() != k)
        throw std::invalid_argument("coeff_table_from_json: entries out of order");
      Int num(je.at("num").get<std::string>());
      Int den(je.at("den").get<std::string>());
      row.push_back(make_rat(num, den));
    }
    rows.push_back(std::move(row));
  }
  return CoeffTriangle::from_rows(kind, std::move(rows), std::nullopt);
}

std::string render_runs_text(const std::vector<verify::FamilyRun>& runs) {
  std::ostringstream os;
  std::size_t total = 0, passed = 0;
  for (const auto& run : runs) {
    std::size_t fam_pass = 0;
    for (const auto& r : run.reports) {
      if (r.pass) {
        ++fam_pass;
      } else {
        os << "FAIL " << r.identity << " at " << point_str(r.point)
           << ": lhs=" << to_string(r.lhs) << " rhs=" << to_string(r.rhs) << "\n";
      }
    }
    os << run.family << ": " << run.reports.size() << " checks, " << fam_pass
       << " passed";
    if (fam_pass != run.reports.size())
      os << ", " << run.reports.size() - fam_pass << " FAILED";
    if (!run.note.empty()) os << " (" << run.note << ")";
    os << "\n";
    total += run.reports.size();
    passed += fam_pass;
  }
  if (runs.size() > 1)
    os << "all: " << total << " checks, " << passed << " passed"
       << (total == passed ? "" : ", FAILURES") << "\n";
  return os.str();
}

std::string render_runs_json(const std::vector<verify::FamilyRun>& runs) {
  ordered_json out;
  out["families"] = ordered_json::array();
  bool pass = true;
  for (const auto& run : runs) {
    ordered_json jf;
    jf["family"] = run.family;
    if (!run.note.empty()) jf["note"] = run.note;
    std::size_t fam_pass = 0;
    ordered_json jreports = ordered_json::array();
    for (const auto& r : run.reports) {
      fam_pass += r.pass ? 1 : 0;
      jreports.push_back({{"identity", r.identity},
                          {"point", r.point},
                          {"lhs", to_string(r.lhs)},
                          {"rhs", to_string(r.rhs)},
                          {"pass", r.pass}});
    }
    jf["checks"] = run.reports.size();
    jf["passed"] = fam_pass;
    jf["reports"] = std::move(jreports);
    pass = pass && fam_pass == run.reports.size();
    out["families"].push_back(std::move(jf));
  }
  out["pass"] = pass;
  return out.dump(2) + "\n";
}

}  // namespace hypsum::io
