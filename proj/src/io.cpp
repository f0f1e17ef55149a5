#include "bicseek/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace bicseek {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return fields;
}

double parse_cell(const std::string& field, std::size_t line_no, std::size_t col_no) {
  double v = 0.0;
  const char* begin = field.data();
  const char* end = begin + field.size();
  const auto res = std::from_chars(begin, end, v);
  if (res.ec != std::errc() || res.ptr != end)
    throw ParseError("non-numeric cell at line " + std::to_string(line_no) + ", column " +
                     std::to_string(col_no) + ": '" + field + "'");
  if (!std::isfinite(v))
    throw ParseError("non-finite cell at line " + std::to_string(line_no) + ", column " +
                     std::to_string(col_no));
  return v;
}

std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string> nonempty_lines_keep(const std::string& text) {
  std::vector<std::string> lines = split(text, '\n');
  for (auto& l : lines)
    if (!l.empty() && l.back() == '\r') l.pop_back();
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

}  // namespace

ExpressionMatrix parse_matrix_tsv(const std::filesystem::path& path) {
  const std::vector<std::string> lines = nonempty_lines_keep(read_file(path));
  if (lines.size() < 2) throw ParseError(path.string() + ": need a header and at least one row");

  std::vector<std::string> header = split(lines[0], '\t');
  const std::size_t data_fields = split(lines[1], '\t').size();
  if (data_fields < 2) throw ParseError(path.string() + ": rows need a label and at least one value");
  const std::size_t cols = data_fields - 1;
  if (header.size() == cols + 1) {
    header.erase(header.begin());  // corner cell
  } else if (header.size() != cols) {
    throw ParseError(path.string() + ": header has " + std::to_string(header.size()) +
                     " labels for " + std::to_string(cols) + " columns");
  }

  const std::size_t rows = lines.size() - 1;
  std::vector<double> values;
  values.reserve(rows * cols);
  std::vector<std::string> row_labels;
  row_labels.reserve(rows);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::vector<std::string> fields = split(lines[i], '\t');
    if (fields.size() != cols + 1)
      throw ParseError(path.string() + ": ragged row at line " + std::to_string(i + 1) +
                       " (expected " + std::to_string(cols + 1) + " fields, got " +
                       std::to_string(fields.size()) + ")");
    row_labels.push_back(fields[0]);
    for (std::size_t j = 1; j < fields.size(); ++j)
      values.push_back(parse_cell(fields[j], i + 1, j + 1));
  }
  return ExpressionMatrix(std::move(values), rows, cols, std::move(row_labels),
                          std::move(header));
}

void write_matrix_tsv(const std::filesystem::path& path, const ExpressionMatrix& m) {
  std::string out;
  out.reserve(m.rows() * m.cols() * 12);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    out += '\t';
    out += m.col_labels()[c];
  }
  out += '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += m.row_labels()[r];
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out += '\t';
      out += format_value(m(r, c));
    }
    out += '\n';
  }
  write_file(path, out);
}

std::string biclusters_to_json(const BiclusterSet& set) {
  std::string out = "{\"biclusters\":[";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ',';
    out += "{\"rows\":[";
    const auto& b = set.biclusters[i];
    for (std::size_t k = 0; k < b.rows.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(b.rows[k]);
    }
    out += "],\"cols\":[";
    for (std::size_t k = 0; k < b.cols.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(b.cols[k]);
    }
    out += "]}";
  }
  out += "]}\n";
  return out;
}

void write_biclusters(const std::filesystem::path& path, const BiclusterSet& set) {
  write_file(path, biclusters_to_json(set));
}

namespace {

std::vector<std::size_t> parse_index_list(const std::string& text, const char* what) {
  std::vector<std::size_t> out;
  std::istringstream ss(text);
  long long v = 0;
  while (ss >> v) {
    if (v < 0) throw ParseError(std::string("negative ") + what + " index");
    out.push_back(static_cast<std::size_t>(v));
  }
  if (!ss.eof()) throw ParseError(std::string("malformed ") + what + " list: '" + text + "'");
  return out;
}

BiclusterSet biclusters_from_json(const std::string& text, const std::string& origin) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(origin + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("biclusters") || !j["biclusters"].is_array())
    throw ParseError(origin + ": expected an object with a 'biclusters' array");
  std::vector<Bicluster> bics;
  for (const auto& item : j["biclusters"]) {
    if (!item.contains("rows") || !item.contains("cols"))
      throw ParseError(origin + ": bicluster entry missing rows/cols");
    std::vector<std::size_t> rows, cols;
    for (const auto& v : item["rows"]) rows.push_back(v.get<std::size_t>());
    for (const auto& v : item["cols"]) cols.push_back(v.get<std::size_t>());
    bics.emplace_back(std::move(rows), std::move(cols));
  }
  return BiclusterSet(std::move(bics));
}

}  // namespace

BiclusterSet parse_biclusters_text(const std::string& text) {
  std::vector<Bicluster> bics;
  std::optional<std::vector<std::size_t>> rows, cols;
  auto flush = [&]() {
    if (!rows && !cols) return;
    if (!rows || !cols) throw ParseError("ground-truth stanza missing rows or cols line");
    bics.emplace_back(std::move(*rows), std::move(*cols));
    rows.reset();
    cols.reset();
  };
  for (const std::string& raw : split(text, '\n')) {
    std::string line = raw;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) {
      flush();
      continue;
    }
    line = line.substr(first);
    if (line.rfind("rows:", 0) == 0) {
      if (rows) flush();  // throws: previous stanza had no cols
      rows = parse_index_list(line.substr(5), "row");
      if (cols) flush();
    } else if (line.rfind("cols:", 0) == 0) {
      if (cols) flush();  // throws: previous stanza had no rows
      cols = parse_index_list(line.substr(5), "column");
      if (rows) flush();
    } else {
      throw ParseError("unrecognized ground-truth line: '" + line + "'");
    }
  }
  flush();
  return BiclusterSet(std::move(bics));
}

BiclusterSet parse_biclusters(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ParseError(path.string() + ": empty bicluster file");
  if (text[first] == '{') return biclusters_from_json(text, path.string());
  try {
    return parse_biclusters_text(text);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_run_report(const std::filesystem::path& path, const RunReport& report) {
  ordered_json j;
  j["generations"] = report.generations;
  j["wall_time_seconds"] = report.wall_time_seconds;
  j["termination"] = report.termination;
  write_file(path, j.dump(2) + "\n");
}

RunReport parse_run_report(const std::filesystem::path& path) {
  ordered_json j;
  try {
    j = ordered_json::parse(read_file(path));
  } catch (const std::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  RunReport r;
  r.generations = j.at("generations").get<std::size_t>();
  r.wall_time_seconds = j.at("wall_time_seconds").get<double>();
  r.termination = j.at("termination").get<std::string>();
  return r;
}

namespace {

ordered_json spec_to_json(const ScenarioSpec& s) {
  ordered_json j;
  j["scenario"] = to_string(s.scenario);
  j["pattern"] = to_string(s.pattern);
  j["matrix_rows"] = s.matrix_rows;
  j["matrix_cols"] = s.matrix_cols;
  j["bic_rows"] = s.bic_rows;
  j["bic_cols"] = s.bic_cols;
  j["num_biclusters"] = s.num_biclusters;
  j["overlap_rows"] = s.overlap_cells.first;
  j["overlap_cols"] = s.overlap_cells.second;
  j["noise_sigma"] = s.noise_sigma;
  j["mean_shift"] = s.mean_shift;
  j["seed"] = s.seed;
  return j;
}

ScenarioSpec spec_from_json(const ordered_json& j) {
  ScenarioSpec s;
  s.scenario = scenario_from_string(j.at("scenario").get<std::string>());
  s.pattern = pattern_from_string(j.at("pattern").get<std::string>());
  s.matrix_rows = j.at("matrix_rows").get<std::size_t>();
  s.matrix_cols = j.at("matrix_cols").get<std::size_t>();
  s.bic_rows = j.at("bic_rows").get<std::size_t>();
  s.bic_cols = j.at("bic_cols").get<std::size_t>();
  s.num_biclusters = j.at("num_biclusters").get<std::size_t>();
  s.overlap_cells = {j.at("overlap_rows").get<std::size_t>(),
                     j.at("overlap_cols").get<std::size_t>()};
  s.noise_sigma = j.at("noise_sigma").get<double>();
  s.mean_shift = j.at("mean_shift").get<double>();
  s.seed = j.at("seed").get<std::uint64_t>();
  return s;
}

}  // namespace

void write_manifest(const std::filesystem::path& path, const Manifest& manifest) {
  ordered_json j;
  j["scenario"] = manifest.scenario;
  j["cases"] = ordered_json::array();
  for (const auto& c : manifest.cases) {
    ordered_json jc;
    jc["name"] = c.name;
    jc["spec"] = spec_to_json(c.spec);
    jc["replicates"] = ordered_json::array();
    for (const auto& r : c.replicates) {
      ordered_json jr;
      jr["index"] = r.index;
      jr["matrix"] = r.matrix_path;
      jr["truth"] = r.truth_path;
      jr["seed"] = r.seed;
      jc["replicates"].push_back(std::move(jr));
    }
    j["cases"].push_back(std::move(jc));
  }
  write_file(path, j.dump(2) + "\n");
}

Manifest parse_manifest(const std::filesystem::path& path) {
  ordered_json j;
  try {
    j = ordered_json::parse(read_file(path));
  } catch (const std::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  Manifest m;
  m.scenario = j.at("scenario").get<std::string>();
  for (const auto& jc : j.at("cases")) {
    CaseEntry c;
    c.name = jc.at("name").get<std::string>();
    c.spec = spec_from_json(jc.at("spec"));
    for (const auto& jr : jc.at("replicates")) {
      ReplicateEntry r;
      r.index = jr.at("index").get<std::size_t>();
      r.matrix_path = jr.at("matrix").get<std::string>();
      r.truth_path = jr.at("truth").get<std::string>();
      r.seed = jr.at("seed").get<std::uint64_t>();
      c.replicates.push_back(std::move(r));
    }
    m.cases.push_back(std::move(c));
  }
  return m;
}

const char* const kBenchCsvHeader =
    "dataset_path,scenario,replicate,ce,recovery,relevance,wall_time_seconds,generations,"
    "termination";

namespace {

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string metric_field(const std::optional<double>& v) {
  if (!v) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", *v);
  return buf;
}

std::vector<std::string> csv_split_line(const std::string& line, std::size_t line_no) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += ch;
      }
    } else if (ch == '"' && cur.empty()) {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (quoted) throw ParseError("unterminated quote at line " + std::to_string(line_no));
  fields.push_back(std::move(cur));
  return fields;
}

std::optional<double> parse_metric(const std::string& field, std::size_t line_no) {
  if (field.empty()) return std::nullopt;
  return parse_cell(field, line_no, 0);
}

}  // namespace

void write_bench_csv(const std::filesystem::path& path, const std::vector<BenchRecord>& records) {
  std::string out = kBenchCsvHeader;
  out += '\n';
  for (const auto& r : records) {
    char tail[128];
    std::snprintf(tail, sizeof tail, "%.6f,%zu,", r.wall_time_seconds, r.generations);
    out += csv_quote(r.dataset_path);
    out += ',';
    out += csv_quote(r.scenario);
    out += ',';
    out += std::to_string(r.replicate);
    out += ',';
    out += metric_field(r.ce);
    out += ',';
    out += metric_field(r.recovery);
    out += ',';
    out += metric_field(r.relevance);
    out += ',';
    out += tail;
    out += r.termination;
    out += '\n';
  }
  write_file(path, out);
}

std::vector<BenchRecord> parse_bench_csv(const std::filesystem::path& path) {
  const std::vector<std::string> lines = nonempty_lines_keep(read_file(path));
  if (lines.empty() || lines[0] != kBenchCsvHeader)
    throw ParseError(path.string() + ": missing or wrong CSV header");
  std::vector<BenchRecord> records;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = csv_split_line(lines[i], i + 1);
    if (fields.size() != 9)
      throw ParseError(path.string() + ": expected 9 fields at line " + std::to_string(i + 1));
    BenchRecord r;
    r.dataset_path = fields[0];
    r.scenario = fields[1];
    r.replicate = static_cast<std::size_t>(std::stoull(fields[2]));
    r.ce = parse_metric(fields[3], i + 1);
    r.recovery = parse_metric(fields[4], i + 1);
    r.relevance = parse_metric(fields[5], i + 1);
    r.wall_time_seconds = parse_cell(fields[6], i + 1, 7);
    r.generations = static_cast<std::size_t>(std::stoull(fields[7]));
    r.termination = fields[8];
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<ScenarioSummary> summarize_records(const std::vector<BenchRecord>& records) {
  std::vector<std::string> order;
  for (const auto& r : records)
    if (std::find(order.begin(), order.end(), r.scenario) == order.end())
      order.push_back(r.scenario);

  std::vector<ScenarioSummary> out;
  for (const auto& scenario : order) {
    ScenarioSummary s;
    s.scenario = scenario;
    std::vector<double> ces;
    double time_sum = 0.0;
    for (const auto& r : records) {
      if (r.scenario != scenario) continue;
      ++s.datasets;
      time_sum += r.wall_time_seconds;
      if (r.ce) ces.push_back(*r.ce);
    }
    s.mean_wall_time_seconds = time_sum / static_cast<double>(s.datasets);
    if (!ces.empty()) {
      double sum = 0.0;
      for (double v : ces) sum += v;
      s.mean_ce = sum / static_cast<double>(ces.size());
      std::sort(ces.begin(), ces.end());
      const std::size_t n = ces.size();
      s.median_ce = (n % 2 == 1) ? ces[n / 2] : 0.5 * (ces[n / 2 - 1] + ces[n / 2]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

void write_summary_csv(const std::filesystem::path& path,
                       const std::vector<ScenarioSummary>& summaries) {
  std::string out = "scenario,datasets,median_ce,mean_ce,mean_wall_time_seconds\n";
  for (const auto& s : summaries) {
    char time_buf[32];
    std::snprintf(time_buf, sizeof time_buf, "%.6f", s.mean_wall_time_seconds);
    out += csv_quote(s.scenario);
    out += ',';
    out += std::to_string(s.datasets);
    out += ',';
    out += metric_field(s.median_ce);
    out += ',';
    out += metric_field(s.mean_ce);
    out += ',';
    out += time_buf;
    out += '\n';
  }
  write_file(path, out);
}

}  // namespace bicseek
