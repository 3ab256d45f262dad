#include "walklab/tables.hpp"

#include "walklab/builder.hpp"
#include "walklab/periodicity.hpp"
#include "walklab/structure.hpp"

#include "json.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

namespace walklab {

const std::vector<ReferenceRow>& reference_rows() {
  static const std::vector<ReferenceRow> rows{
      {ThetaClass::Half, 4, 12, "C6⊗J2", ""},
      {ThetaClass::Half, 4, 16, "H(4,2)", ""},
      {ThetaClass::Half, 4, 24, "L(Q3)⊗K2", ""},
      {ThetaClass::Half, 4, 32, "IG(AG(2,4)\\pc)", "q=0; incidence graph of a known design"},
      {ThetaClass::Half, 4, 48, "-", "excluded by the classification of 4-regular integral graphs"},
      {ThetaClass::Half, 4, 64, "-", "excluded by the classification of 4-regular integral graphs"},
      {ThetaClass::Half, 4, 96, "-", "excluded by the classification of 4-regular integral graphs"},
      {ThetaClass::Half, 6, 18, "C6⊗J3", ""},
      {ThetaClass::Half, 6, 24, "-", "q_x ∉ ℤ"},
      {ThetaClass::Half, 6, 36, "?", ""},
      {ThetaClass::Half, 6, 54, "H(3,3)⊗K2", ""},
      {ThetaClass::Half, 6, 72, "-", "q_x ∉ ℤ"},
      {ThetaClass::Half, 6, 108, "?", ""},
      {ThetaClass::Half, 6, 162, "IG(pg(5,5,2))", "q=0; incidence graph of a known design"},
      {ThetaClass::Half, 6, 216, "-", "q<0"},
      {ThetaClass::Half, 6, 324, "-", "q<0"},
      {ThetaClass::Half, 8, 24, "C6⊗J4", ""},
      {ThetaClass::Half, 8, 32, "H(4,2)⊗J2", ""},
      {ThetaClass::Half, 8, 48, "L(Q3)⊗K2⊗J2", ""},
      {ThetaClass::Half, 8, 64, "K4,4□K4,4", ""},
      {ThetaClass::Half, 8, 96, "?", ""},
      {ThetaClass::Half, 8, 128, "?", ""},
      {ThetaClass::Half, 8, 192, "?", ""},
      {ThetaClass::Half, 8, 256, "?", ""},
      {ThetaClass::Half, 8, 384, "?", ""},
      {ThetaClass::Half, 8, 512, "?", ""},
      {ThetaClass::Half, 8, 768, "?", ""},
      {ThetaClass::Half, 10, 30, "C6⊗J5", ""},
      {ThetaClass::Half, 10, 40, "-", "q_x ∉ ℤ"},
      {ThetaClass::Half, 10, 50, "?", ""},
      {ThetaClass::Half, 10, 60, "?", ""},
      {ThetaClass::Half, 10, 100, "?", ""},
      {ThetaClass::Half, 10, 120, "-", "q_x ∉ ℤ"},
      {ThetaClass::Half, 10, 150, "?", ""},
      {ThetaClass::Half, 10, 200, "-", "q_x ∉ ℤ"},
      {ThetaClass::Half, 10, 250, "?", ""},
      {ThetaClass::Half, 10, 300, "?", ""},
      {ThetaClass::Half, 10, 500, "?", ""},
      {ThetaClass::Half, 10, 600, "-", "q_x ∉ ℤ"},
      {ThetaClass::Half, 10, 750, "?", ""},
      {ThetaClass::Half, 10, 1000, "-", "q_x ∉ ℤ"},
      {ThetaClass::Half, 10, 1250, "?", ""},
      {ThetaClass::Half, 10, 1500, "?", ""},
      {ThetaClass::Sqrt2, 2, 8, "C8", ""},
      {ThetaClass::Sqrt2, 4, 16, "C8⊗J2", ""},
      {ThetaClass::Sqrt2, 4, 32, "TD1(2,4)⊗J2,1", "transversal design construction"},
      {ThetaClass::Sqrt2, 4, 64, "?", ""},
      {ThetaClass::Sqrt2, 6, 18, "-", "q ∉ ℤ"},
      {ThetaClass::Sqrt2, 6, 24, "C8⊗J3", ""},
      {ThetaClass::Sqrt2, 6, 36, "?", ""},
      {ThetaClass::Sqrt2, 6, 48, "-", "q_x ∉ ℤ"},
      {ThetaClass::Sqrt2, 6, 54, "-", "q ∉ ℤ"},
      {ThetaClass::Sqrt2, 6, 72, "?", ""},
      {ThetaClass::Sqrt2, 6, 108, "?", ""},
      {ThetaClass::Sqrt2, 6, 144, "-", "q_x ∉ ℤ"},
      {ThetaClass::Sqrt2, 6, 162, "-", "q ∉ ℤ"},
      {ThetaClass::Sqrt2, 6, 216, "?", ""},
      {ThetaClass::Sqrt2, 8, 32, "C8⊗J4", ""},
      {ThetaClass::Sqrt2, 8, 64, "TD1(2,4)⊗J2,1⊗J2", "transversal design construction"},
      {ThetaClass::Sqrt2, 8, 128, "?", ""},
      {ThetaClass::Sqrt2, 8, 256, "?", ""},
      {ThetaClass::Sqrt2, 8, 512, "?", ""},
      {ThetaClass::Sqrt2, 10, 40, "C8⊗J5", ""},
      {ThetaClass::Sqrt2, 10, 50, "-", "q ∉ ℤ"},
      {ThetaClass::Sqrt2, 10, 80, "-", "q_x ∉ ℤ"},
      {ThetaClass::Sqrt2, 10, 100, "?", ""},
      {ThetaClass::Sqrt2, 10, 200, "?", ""},
      {ThetaClass::Sqrt2, 10, 250, "-", "q ∉ ℤ"},
      {ThetaClass::Sqrt2, 10, 400, "-", "q_x ∉ ℤ"},
      {ThetaClass::Sqrt2, 10, 500, "?", ""},
      {ThetaClass::Sqrt2, 10, 1000, "?", ""},
      {ThetaClass::Sqrt3, 4, 32, "-", "known not to exist"},
      {ThetaClass::Sqrt3, 8, 64, "?", ""},
      {ThetaClass::Sqrt3, 8, 256, "?", ""},
      {ThetaClass::Sqrt3, 10, 50, "-", "q ∉ ℤ"},
      {ThetaClass::Sqrt3, 10, 200, "-", "q ∉ ℤ"},
      {ThetaClass::Sqrt3, 10, 500, "?", ""},
      {ThetaClass::Sqrt3, 12, 96, "?", ""},
      {ThetaClass::Sqrt3, 12, 384, "?", ""},
      {ThetaClass::Sqrt3, 14, 196, "?", ""},
      {ThetaClass::Sqrt3, 14, 1372, "?", ""},
      {ThetaClass::Sqrt3, 16, 128, "?", ""},
      {ThetaClass::Sqrt3, 16, 512, "?", ""},
      {ThetaClass::Sqrt3, 16, 2048, "?", ""},
      {ThetaClass::Sqrt3, 20, 100, "?", ""},
      {ThetaClass::Sqrt3, 20, 160, "?", ""},
      {ThetaClass::Sqrt3, 20, 250, "?", ""},
      {ThetaClass::Sqrt3, 20, 400, "?", ""},
      {ThetaClass::Sqrt3, 20, 640, "?", ""},
      {ThetaClass::Sqrt3, 20, 1000, "?", ""},
      {ThetaClass::Sqrt3, 20, 1600, "?", ""},
      {ThetaClass::Sqrt3, 20, 2500, "?", ""},
      {ThetaClass::Sqrt3, 20, 4000, "?", ""},
  };
  return rows;
}

const ReferenceRow* find_reference(ThetaClass c, long k, long n) {
  for (const auto& r : reference_rows())
    if (r.theta_class == c && r.k == k && r.n == n) return &r;
  return nullptr;
}

std::optional<Realization> registry_realization(ThetaClass c, long k, long n) {
  if (k < 2 || k % 2 != 0) return std::nullopt;
  const long m = k / 2;
  if (c == ThetaClass::Half && n == 3 * k && m >= 2)
    return Realization{"C6⊗J" + std::to_string(m), "tensorj(cycle(6)," + std::to_string(m) + ")"};
  if (c == ThetaClass::Sqrt2 && n == 4 * k) {
    if (m == 1) return Realization{"C8", "cycle(8)"};
    return Realization{"C8⊗J" + std::to_string(m), "tensorj(cycle(8)," + std::to_string(m) + ")"};
  }
  if (c != ThetaClass::Half) return std::nullopt;
  static const std::map<std::pair<long, long>, Realization> sporadic{
      {{4, 16}, {"H(4,2)", "hamming(4,2)"}},
      {{4, 24}, {"L(Q3)⊗K2", "bdouble(line(hypercube(3)))"}},
      {{6, 54}, {"H(3,3)⊗K2", "bdouble(hamming(3,3))"}},
      {{8, 32}, {"H(4,2)⊗J2", "tensorj(hamming(4,2),2)"}},
      {{8, 48}, {"L(Q3)⊗K2⊗J2", "tensorj(bdouble(line(hypercube(3))),2)"}},
      {{8, 64}, {"K4,4□K4,4", "cart(kbip(4,4),kbip(4,4))"}},
  };
  const auto it = sporadic.find({k, n});
  if (it == sporadic.end()) return std::nullopt;
  return it->second;
}

bool verify_realization(const Realization& r, const FeasibleRow& row) {
  static std::mutex mutex;
  static std::map<std::tuple<std::string, long, long, long>, bool> cache;
  const auto key = std::make_tuple(r.expression, row.k, row.a, row.b);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const Graph g = build_graph(r.expression);
  bool ok = g.order() == row.n && adjacency_spectrum(g) == row.spectrum();
  if (ok) {
    PeriodicityOptions options;
    options.witness_path = false;
    ok = is_periodic(decide_periodic(g, options));
  }
  std::lock_guard lock(mutex);
  cache.emplace(key, ok);
  return ok;
}

std::optional<TableFormat> parse_format(std::string_view name) {
  if (name == "text") return TableFormat::Text;
  if (name == "csv") return TableFormat::Csv;
  if (name == "json") return TableFormat::Json;
  return std::nullopt;
}

namespace {

bool is_quadrangle_reason(std::string_view s) { return s == "q ∉ ℤ" || s == "q<0" || s == "q_x ∉ ℤ"; }

TableRow annotate(FeasibleRow row) {
  TableRow out;
  const std::string reason = row.elimination_reason();
  const ReferenceRow* ref = find_reference(row.theta_class, row.k, row.n);
  const std::string ref_existence = ref ? std::string(ref->existence) : "";
  const std::string ref_comment = ref ? std::string(ref->comment) : "";

  std::optional<Realization> real = registry_realization(row.theta_class, row.k, row.n);
  if (real && reason.empty() && verify_realization(*real, row)) row.known_realization = real->label;

  if (!reason.empty()) {
    out.status = "eliminated";
    out.comment = reason;
    out.realization = "-";
    if (ref && ((is_quadrangle_reason(ref_comment) && ref_comment != reason) || ref_existence != "-")) {
      out.reference_mismatch = true;
      out.comment += "; reference lists " + (ref_existence == "-" ? ref_comment : "'" + ref_existence + "'");
    }
  } else if (row.known_realization) {
    out.status = "realized";
    out.realization = *row.known_realization;
    out.comment = ref_comment;
  } else if (ref && ref_existence != "?" && ref_existence != "-") {
    out.status = "known";
    out.realization = ref_existence;
    out.comment = ref_comment;
  } else if (ref && ref_existence == "-") {
    out.status = is_quadrangle_reason(ref_comment) ? "open" : "excluded";
    out.realization = is_quadrangle_reason(ref_comment) ? "?" : "-";
    if (is_quadrangle_reason(ref_comment)) {
      out.reference_mismatch = true;
      out.comment = "passes quadrangle conditions; reference lists " + ref_comment;
    } else {
      out.comment = ref_comment;
    }
  } else {
    out.status = "open";
    out.realization = "?";
  }
  out.row = std::move(row);
  return out;
}

// Code points, not bytes, so that "±" and "ℤ" pad like one column.
std::size_t display_width(std::string_view s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) {
    return (static_cast<unsigned char>(c) & 0xC0U) != 0x80U;
  }));
}

std::string pad(std::string_view s, std::size_t width) {
  std::string out(s);
  const std::size_t w = display_width(s);
  if (w < width) out.append(width - w, ' ');
  return out;
}

std::string theta_label(ThetaClass c) {
  switch (c) {
    case ThetaClass::Half: return "k/2";
    case ThetaClass::Sqrt2: return "(√2/2)k";
    case ThetaClass::Sqrt3: return "(√3/2)k";
  }
  return "";
}

std::vector<std::string> csv_fields(const TableRow& r) {
  return {std::string(class_name(r.row.theta_class)),
          std::to_string(r.row.k),
          std::to_string(r.row.n),
          std::to_string(r.row.a),
          std::to_string(r.row.b),
          to_string(r.row.q),
          to_string(r.row.q_x),
          r.status,
          r.comment,
          r.realization};
}

std::string render_text(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  std::optional<ThetaClass> current;
  for (const auto& r : rows) {
    if (r.row.theta_class != current) {
      if (current) os << "\n";
      current = r.row.theta_class;
      os << "theta = " << theta_label(*current) << "  spectrum {[±k]^1, [±theta]^a, [0]^b}\n";
      os << pad("k", 4) << pad("n", 6) << pad("spectrum", 36) << pad("status", 12) << pad("realization", 20)
         << "comment\n";
    }
    std::string line = pad(std::to_string(r.row.k), 4) + pad(std::to_string(r.row.n), 6) +
                       pad(r.row.spectrum().to_string(), 36) + pad(r.status, 12) + pad(r.realization, 20);
    std::string comment = r.comment;
    if (r.status == "eliminated" || r.reference_mismatch)
      comment += (comment.empty() ? "" : "  ") + std::string("(q=") + to_string(r.row.q) + ", q_x=" +
                 to_string(r.row.q_x) + ")";
    line += comment;
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << "\n";
  }
  return os.str();
}

std::string render_json(const std::vector<TableRow>& rows) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["class"] = class_name(r.row.theta_class);
    j["k"] = r.row.k;
    j["n"] = r.row.n;
    j["a"] = r.row.a;
    j["b"] = r.row.b;
    j["q"] = to_string(r.row.q);
    j["q_x"] = to_string(r.row.q_x);
    j["status"] = r.status;
    j["comment"] = r.comment;
    j["realization"] = r.realization;
    j["spectrum"] = r.row.spectrum().to_string();
    j["reference_mismatch"] = r.reference_mismatch;
    out.push_back(std::move(j));
  }
  return out.dump(2) + "\n";
}

}  // namespace

std::vector<TableRow> build_tables(long k_max, const std::vector<ThetaClass>& classes) {
  std::vector<TableRow> out;
  std::vector<ThetaClass> ordered = classes;
  std::sort(ordered.begin(), ordered.end());
  ordered.erase(std::unique(ordered.begin(), ordered.end()), ordered.end());
  for (ThetaClass c : ordered) {
    if (k_max < 2) break;
    auto rows = build_rows(c, 2, k_max);
    std::move(rows.begin(), rows.end(), std::back_inserter(out));
  }
  return out;
}

std::vector<TableRow> build_rows(ThetaClass c, long k_min, long k_max) {
  std::vector<TableRow> out;
  if (k_min == k_max) {
    for (auto& row : enumerate(c, k_min)) out.push_back(annotate(std::move(row)));
    return out;
  }
  for (long k = std::max(2L, k_min + (k_min % 2 != 0)); k <= k_max; k += 2)
    for (auto& row : enumerate(c, k)) out.push_back(annotate(std::move(row)));
  return out;
}

std::string render_tables(const std::vector<TableRow>& rows, TableFormat format) {
  switch (format) {
    case TableFormat::Text: return render_text(rows);
    case TableFormat::Json: return render_json(rows);
    case TableFormat::Csv: {
      std::vector<CsvRecord> records;
      records.reserve(rows.size());
      for (const auto& r : rows) records.push_back({csv_fields(r)});
      return write_csv(records);
    }
  }
  return "";
}

std::string render_tables(long k_max, TableFormat format) { return render_tables(build_tables(k_max), format); }

namespace {

std::string quote_field(const std::string& f) {
  if (f.find_first_of(",\"\r\n") == std::string::npos) return f;
  std::string out = "\"";
  for (char c : f) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string write_csv(const std::vector<CsvRecord>& records) {
  std::string out(kCsvHeader);
  out += "\n";
  for (const auto& r : records) {
    for (std::size_t i = 0; i < r.fields.size(); ++i) {
      if (i) out += ',';
      out += quote_field(r.fields[i]);
    }
    out += "\n";
  }
  return out;
}

std::vector<CsvRecord> read_csv(std::string_view text) {
  std::vector<CsvRecord> records;
  CsvRecord current;
  std::string field;
  bool quoted = false;
  bool field_started = false;
  std::size_t i = 0;
  auto end_field = [&] {
    current.fields.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_record = [&] {
    end_field();
    records.push_back(std::move(current));
    current = {};
  };
  while (i < text.size()) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          i += 2;
          continue;
        }
        quoted = false;
      } else {
        field += c;
      }
      ++i;
      continue;
    }
    if (c == '"') {
      if (field_started) throw ParseError("csv: stray quote in unquoted field");
      quoted = true;
      field_started = true;
    } else if (c == ',') {
      end_field();
    } else if (c == '\r' || c == '\n') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      end_record();
    } else {
      field += c;
      field_started = true;
    }
    ++i;
  }
  if (quoted) throw ParseError("csv: unterminated quoted field");
  if (field_started || !current.fields.empty()) end_record();

  if (records.empty()) throw ParseError("csv: missing header");
  std::string header;
  for (std::size_t j = 0; j < records.front().fields.size(); ++j)
    header += (j ? "," : "") + records.front().fields[j];
  if (header != kCsvHeader) throw ParseError("csv: unexpected header '" + header + "'");
  const std::size_t width = records.front().fields.size();
  records.erase(records.begin());
  for (const auto& r : records)
    if (r.fields.size() != width) throw ParseError("csv: record with " + std::to_string(r.fields.size()) + " fields");
  return records;
}

}  // namespace walklab
