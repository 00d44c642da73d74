#include "triclub/benchmark_runner.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <stdexcept>

#include <json.hpp>

#include "triclub/io.hpp"
#include "triclub/metrics.hpp"

namespace triclub::bench {

std::vector<int> default_ell_sweep() {
  std::vector<int> out{1, 2, 3, 4, 5, 6, 7, 9, 11, 13, 15, 20};
  for (int ell = 25; ell <= 90; ell += 5) out.push_back(ell);
  out.push_back(100);
  return out;
}

Format parse_format(std::string_view text) {
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  throw std::invalid_argument("unknown format: " + std::string(text));
}

void RunConfig::validate(bool need_inputs) const {
  if (need_inputs && inputs.empty()) throw std::invalid_argument("at least one input is required");
  for (int ell : ells)
    if (ell < 0) throw std::invalid_argument("ell values must be non-negative");
  if (ells.empty() || variants.empty() || algorithms.empty())
    throw std::invalid_argument("ell, variant and algorithm lists must be non-empty");
  if (!(time_limit > 0)) throw std::invalid_argument("time limit must be positive");
  if (!(density_threshold >= 0 && density_threshold <= 1))
    throw std::invalid_argument("density threshold must lie in [0, 1]");
  if (workers < 1) throw std::invalid_argument("workers must be at least 1");
}

MetricsRecord run_cell(const NamedGraph& instance, int ell, Variant variant, Algorithm algorithm,
                       const SolverConfig& base) {
  SolverConfig cfg = base;
  cfg.algorithm = algorithm;
  return make_record(instance, ell, variant, algorithm, solve(Instance{instance.graph, ell, variant}, cfg));
}

MetricsRecord make_record(const NamedGraph& instance, int ell, Variant variant, Algorithm algorithm,
                          const Solution& sol) {
  const auto& g = instance.graph;

  MetricsRecord r;
  r.instance = instance.name;
  r.n = g.num_vertices();
  r.m = g.num_edges();
  r.density = density(r.n, r.m);
  r.ell = ell;
  r.variant = std::string(to_string(variant));
  r.algorithm = std::string(to_string(algorithm));
  r.solution_size = sol.size();
  r.solve_time_s = sol.stats.wall_seconds;
  r.preprocessing_fraction = sol.stats.preprocessing_fraction();
  r.nlb_value = sol.stats.nlb_value;
  r.multilb_value = sol.stats.multilb_value;
  r.proven_optimal = sol.proven_optimal;
  if (sol.proven_optimal && sol.size() > 0) {
    const auto opt = static_cast<double>(sol.size());
    if (r.nlb_value) r.nlb_quality = *r.nlb_value / opt;
    if (r.multilb_value) r.multilb_quality = *r.multilb_value / opt;
  }
  if (!sol.vertices.empty()) {
    const auto m = compute_metrics(g, sol.vertices);
    r.solution_density = m.density;
    r.global_cc = m.global_cc;
    r.min_local_cc = m.min_local_cc;
  }
  return r;
}

namespace {

std::string number(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

template <typename T>
std::string optional_number(const std::optional<T>& x) {
  if (!x) return "";
  if constexpr (std::is_floating_point_v<T>) return number(*x);
  else return std::to_string(*x);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

using nlohmann::json;

template <typename T>
json optional_json(const std::optional<T>& x) {
  return x ? json(*x) : json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

json to_json(const MetricsRecord& r) {
  return json{{"instance", r.instance},
              {"n", r.n},
              {"m", r.m},
              {"density", r.density},
              {"ell", r.ell},
              {"variant", r.variant},
              {"algorithm", r.algorithm},
              {"solution_size", r.solution_size},
              {"solve_time_s", r.solve_time_s},
              {"preprocessing_fraction", r.preprocessing_fraction},
              {"nlb_value", optional_json(r.nlb_value)},
              {"multilb_value", optional_json(r.multilb_value)},
              {"nlb_quality", optional_json(r.nlb_quality)},
              {"multilb_quality", optional_json(r.multilb_quality)},
              {"solution_density", r.solution_density},
              {"global_cc", r.global_cc},
              {"min_local_cc", r.min_local_cc},
              {"proven_optimal", r.proven_optimal}};
}

MetricsRecord from_json(const json& j) {
  MetricsRecord r;
  r.instance = j.at("instance").get<std::string>();
  r.n = j.at("n").get<std::size_t>();
  r.m = j.at("m").get<std::size_t>();
  r.density = j.at("density").get<double>();
  r.ell = j.at("ell").get<int>();
  r.variant = j.at("variant").get<std::string>();
  r.algorithm = j.at("algorithm").get<std::string>();
  r.solution_size = j.at("solution_size").get<std::size_t>();
  r.solve_time_s = j.at("solve_time_s").get<double>();
  r.preprocessing_fraction = j.at("preprocessing_fraction").get<double>();
  r.nlb_value = optional_from<int>(j.at("nlb_value"));
  r.multilb_value = optional_from<int>(j.at("multilb_value"));
  r.nlb_quality = optional_from<double>(j.at("nlb_quality"));
  r.multilb_quality = optional_from<double>(j.at("multilb_quality"));
  r.solution_density = j.at("solution_density").get<double>();
  r.global_cc = j.at("global_cc").get<double>();
  r.min_local_cc = j.at("min_local_cc").get<double>();
  r.proven_optimal = j.at("proven_optimal").get<bool>();
  return r;
}

std::string to_json_text(const std::vector<MetricsRecord>& records) {
  json arr = json::array();
  for (const auto& r : records) arr.push_back(to_json(r));
  return arr.dump(2) + "\n";
}

}  // namespace

std::string csv_header() {
  return "instance,n,m,density,ell,variant,algorithm,solution_size,solve_time_s,preprocessing_fraction,"
         "nlb_value,multilb_value,nlb_quality,multilb_quality,solution_density,global_cc,min_local_cc,"
         "proven_optimal";
}

std::string to_csv_row(const MetricsRecord& r) {
  std::string out;
  out += csv_field(r.instance) + ',';
  out += std::to_string(r.n) + ',' + std::to_string(r.m) + ',' + number(r.density) + ',';
  out += std::to_string(r.ell) + ',' + r.variant + ',' + r.algorithm + ',';
  out += std::to_string(r.solution_size) + ',' + number(r.solve_time_s) + ',' + number(r.preprocessing_fraction) + ',';
  out += optional_number(r.nlb_value) + ',' + optional_number(r.multilb_value) + ',';
  out += optional_number(r.nlb_quality) + ',' + optional_number(r.multilb_quality) + ',';
  out += number(r.solution_density) + ',' + number(r.global_cc) + ',' + number(r.min_local_cc) + ',';
  out += r.proven_optimal ? "true" : "false";
  return out;
}

void emit(const std::vector<MetricsRecord>& records, Format format, std::ostream& out) {
  if (format == Format::json) {
    out << to_json_text(records);
  } else {
    out << csv_header() << '\n';
    for (const auto& r : records) out << to_csv_row(r) << '\n';
  }
  out.flush();
}

void emit(const std::vector<MetricsRecord>& records, Format format, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  emit(records, format, out);
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::vector<MetricsRecord> parse_json(const std::string& text) {
  std::vector<MetricsRecord> out;
  for (const auto& j : json::parse(text)) out.push_back(from_json(j));
  return out;
}

Appender::Appender(std::filesystem::path path, Format format) : path_(std::move(path)), format_(format) {
  if (format_ == Format::csv) {
    owned_ = std::make_unique<std::ofstream>(*path_, std::ios::trunc);
    if (!*owned_) throw std::runtime_error("cannot write " + path_->string());
    stream_ = owned_.get();
    *stream_ << csv_header() << '\n' << std::flush;
  } else {
    write_json();
  }
}

Appender::Appender(std::ostream& out, Format format) : stream_(&out), format_(format) {
  if (format_ == Format::csv) *stream_ << csv_header() << '\n' << std::flush;
}

Appender::~Appender() {
  try {
    close();
  } catch (...) {
  }
}

void Appender::append(const MetricsRecord& record) {
  if (closed_) throw std::logic_error("append after close");
  records_.push_back(record);
  if (format_ == Format::csv) {
    *stream_ << to_csv_row(record) << '\n' << std::flush;
    if (!*stream_) throw std::runtime_error("write failed");
  } else if (path_) {
    write_json();
  }
}

void Appender::write_json() {
  auto tmp = *path_;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << to_json_text(records_);
    if (!out) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, *path_);
}

void Appender::close() {
  if (closed_) return;
  closed_ = true;
  if (format_ == Format::json && !path_) *stream_ << to_json_text(records_) << std::flush;
}

std::vector<MetricsRecord> run_benchmark(const std::vector<NamedGraph>& instances, const RunConfig& cfg,
                                         const std::function<void(const MetricsRecord&)>& on_record) {
  cfg.validate(false);
  SolverConfig base;
  base.time_limit = cfg.time_limit;
  base.density_threshold = cfg.density_threshold;
  base.exact_matching = cfg.exact_matching;
  base.workers = cfg.workers;

  std::vector<MetricsRecord> out;
  for (const auto& inst : instances)
    for (int ell : cfg.ells)
      for (Variant variant : cfg.variants)
        for (Algorithm algorithm : cfg.algorithms) {
          out.push_back(run_cell(inst, ell, variant, algorithm, base));
          if (on_record) on_record(out.back());
        }
  return out;
}

std::vector<MetricsRecord> run_benchmark(const RunConfig& cfg,
                                         const std::function<void(const MetricsRecord&)>& on_record) {
  cfg.validate(true);
  std::vector<NamedGraph> instances;
  for (const auto& path : cfg.inputs) instances.push_back({path.stem().string(), io::parse_graph(path).graph});

  std::unique_ptr<Appender> appender;
  if (cfg.output) appender = std::make_unique<Appender>(*cfg.output, cfg.format);
  auto records = run_benchmark(instances, cfg, [&](const MetricsRecord& r) {
    if (appender) appender->append(r);
    if (on_record) on_record(r);
  });
  if (appender) appender->close();
  return records;
}

EllBucket bucket_of(int ell) {
  if (ell <= 5) return EllBucket::small;
  if (ell <= 15) return EllBucket::medium;
  return EllBucket::large;
}

std::string_view to_string(EllBucket b) {
  switch (b) {
    case EllBucket::small: return "ell<=5";
    case EllBucket::medium: return "6<=ell<=15";
    case EllBucket::large: return "ell>=16";
  }
  return "?";
}

Summary summarize(const std::vector<MetricsRecord>& records) {
  Summary s;
  for (const auto& r : records) {
    ++s.attempted[r.algorithm];
    if (r.proven_optimal) ++s.solved[r.algorithm];
    else s.solved.try_emplace(r.algorithm, 0);
    auto& q = s.quality[{r.variant, bucket_of(r.ell)}];
    if (r.nlb_quality) {
      q.nlb_sum += *r.nlb_quality;
      ++q.nlb_count;
    }
    if (r.multilb_quality) {
      q.multilb_sum += *r.multilb_quality;
      ++q.multilb_count;
    }
  }
  return s;
}

void print_summary(std::ostream& out, const Summary& s) {
  out << "solved within limit:\n";
  for (const auto& [alg, count] : s.attempted) out << "  " << alg << ": " << s.solved.at(alg) << '/' << count << '\n';
  out << "average lower-bound quality:\n";
  out << std::fixed << std::setprecision(4);
  for (const auto& [key, q] : s.quality) {
    out << "  " << key.first << ' ' << to_string(key.second) << ": ";
    out << "N-LB " << (q.nlb_count ? std::to_string(q.nlb_average()) : std::string("-")) << " (" << q.nlb_count << ")";
    out << ", Multi-LB " << (q.multilb_count ? std::to_string(q.multilb_average()) : std::string("-")) << " ("
        << q.multilb_count << ")\n";
  }
  out.unsetf(std::ios::floatfield);
}

}  // namespace triclub::bench
