#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "triclub/graph.hpp"
#include "triclub/solver.hpp"

namespace triclub::bench {

/// The 27 values 1..7, 9, 11, 13, 15, 20, 25, 30, ..., 90, 100.
std::vector<int> default_ell_sweep();

enum class Format { csv, json };
Format parse_format(std::string_view text);

struct NamedGraph {
  std::string name;
  Graph graph;
};

struct RunConfig {
  std::vector<std::filesystem::path> inputs;
  std::vector<int> ells = default_ell_sweep();
  std::vector<Variant> variants{Variant::vertex, Variant::edge};
  std::vector<Algorithm> algorithms{Algorithm::nlb};
  double time_limit = 3600;
  double density_threshold = 0.05;
  bool exact_matching = false;
  int workers = 1;
  std::optional<std::filesystem::path> output;
  Format format = Format::csv;

  /// Throws std::invalid_argument on negative ell, no inputs, or a bad knob.
  void validate(bool need_inputs = true) const;
};

/// One benchmark cell. Column order of the CSV follows the field order.
struct MetricsRecord {
  std::string instance;
  std::size_t n = 0;
  std::size_t m = 0;
  double density = 0;
  int ell = 0;
  std::string variant;
  std::string algorithm;
  std::size_t solution_size = 0;
  double solve_time_s = 0;
  double preprocessing_fraction = 0;
  std::optional<int> nlb_value;
  std::optional<int> multilb_value;
  std::optional<double> nlb_quality;
  std::optional<double> multilb_quality;
  double solution_density = 0;
  double global_cc = 0;
  double min_local_cc = 0;
  bool proven_optimal = false;

  bool operator==(const MetricsRecord&) const = default;
};

/// Fills a record from a finished solve.
MetricsRecord make_record(const NamedGraph& instance, int ell, Variant variant, Algorithm algorithm,
                          const Solution& sol);

/// Solves one cell and fills every column.
MetricsRecord run_cell(const NamedGraph& instance, int ell, Variant variant, Algorithm algorithm,
                       const SolverConfig& base);

/// Writes records as they arrive: CSV rows are appended and flushed, the
/// JSON array is rewritten through a temporary file after every record.
class Appender {
 public:
  /// Writes to `path`, truncating it.
  Appender(std::filesystem::path path, Format format);
  /// Writes to a stream (CSV streams rows; JSON is written on close()).
  Appender(std::ostream& out, Format format);
  ~Appender();

  void append(const MetricsRecord& record);
  void close();

 private:
  void write_json();

  std::optional<std::filesystem::path> path_;
  std::ostream* stream_ = nullptr;
  std::unique_ptr<std::ostream> owned_;
  Format format_;
  std::vector<MetricsRecord> records_;
  bool closed_ = false;
};

std::string csv_header();
std::string to_csv_row(const MetricsRecord& r);
/// Emits records as CSV (header first) or as a JSON array.
void emit(const std::vector<MetricsRecord>& records, Format format, std::ostream& out);
/// Throws std::runtime_error if the path cannot be written.
void emit(const std::vector<MetricsRecord>& records, Format format, const std::filesystem::path& path);
std::vector<MetricsRecord> parse_json(const std::string& text);

/// Runs every (instance, ell, variant, algorithm) cell in that nesting order.
/// `on_record` sees each record as soon as it is computed.
std::vector<MetricsRecord> run_benchmark(const std::vector<NamedGraph>& instances, const RunConfig& cfg,
                                         const std::function<void(const MetricsRecord&)>& on_record = {});

/// Reads the configured inputs, runs them, and writes cfg.output if set.
std::vector<MetricsRecord> run_benchmark(const RunConfig& cfg,
                                         const std::function<void(const MetricsRecord&)>& on_record = {});

enum class EllBucket { small, medium, large };
EllBucket bucket_of(int ell);
std::string_view to_string(EllBucket b);

struct Summary {
  /// algorithm -> cells solved to optimality.
  std::map<std::string, int> solved;
  std::map<std::string, int> attempted;
  struct Quality {
    double nlb_sum = 0;
    double multilb_sum = 0;
    int nlb_count = 0;
    int multilb_count = 0;
    double nlb_average() const { return nlb_count ? nlb_sum / nlb_count : 0; }
    double multilb_average() const { return multilb_count ? multilb_sum / multilb_count : 0; }
  };
  /// (variant, bucket) -> average lower-bound quality.
  std::map<std::pair<std::string, EllBucket>, Quality> quality;
};

Summary summarize(const std::vector<MetricsRecord>& records);
void print_summary(std::ostream& out, const Summary& s);

}  // namespace triclub::bench
