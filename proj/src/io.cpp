#include "cohtrade/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace cohtrade {

namespace {

using nlohmann::json;

json complex_pairs(const Matrix& m) {
  json entries = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      entries.push_back({m(i, j).real(), m(i, j).imag()});
    }
  }
  return entries;
}

json optional_value(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

void append_cell(std::string& row, const std::optional<double>& v) {
  row += v ? format_sig12(*v) : "na";
}

}  // namespace

std::string format_sig12(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

json to_json(const DensityMatrix& rho) {
  json j;
  j["dim"] = rho.dim();
  if (rho.subsystems()) {
    j["subsystem_dims"] = {rho.subsystems()->a, rho.subsystems()->b};
  } else {
    j["subsystem_dims"] = nullptr;
  }
  j["entries"] = complex_pairs(rho.mat());
  return j;
}

namespace {

DensityMatrix parse_density_matrix(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries")) {
    throw ValidationFailure("matrix file: expected dim and entries fields");
  }
  const int dim = j.at("dim").get<int>();
  if (dim < 1) {
    throw ValidationFailure("matrix file: dim must be positive");
  }
  const json& entries = j.at("entries");
  if (!entries.is_array() ||
      entries.size() != static_cast<std::size_t>(dim) * dim) {
    throw ValidationFailure("matrix file: entries length must equal dim^2");
  }
  Matrix m(dim, dim);
  std::size_t k = 0;
  for (int i = 0; i < dim; ++i) {
    for (int c = 0; c < dim; ++c, ++k) {
      const json& pair = entries.at(k);
      if (!pair.is_array() || pair.size() != 2) {
        throw ValidationFailure("matrix file: entries must be [re, im] pairs");
      }
      m(i, c) = Complex(pair.at(0).get<double>(), pair.at(1).get<double>());
    }
  }
  std::optional<SubsystemDims> dims;
  if (j.contains("subsystem_dims") && !j.at("subsystem_dims").is_null()) {
    const json& sd = j.at("subsystem_dims");
    if (!sd.is_array() || sd.size() != 2) {
      throw ValidationFailure("matrix file: subsystem_dims must be [a, b]");
    }
    dims = SubsystemDims{sd.at(0).get<int>(), sd.at(1).get<int>()};
  }
  return DensityMatrix(m, dims);
}

}  // namespace

DensityMatrix density_matrix_from_json(const json& j) {
  try {
    return parse_density_matrix(j);
  } catch (const json::exception& e) {
    throw ValidationFailure(std::string("matrix file: bad field: ") +
                            e.what());
  }
}

DensityMatrix load_density_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationFailure("matrix file: cannot open " + path);
  }
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ValidationFailure(std::string("matrix file: invalid JSON: ") +
                            e.what());
  }
  return density_matrix_from_json(j);
}

json to_json(const SweepRecord& rec) {
  json j;
  j["theta"] = optional_value(rec.theta);
  j["p"] = rec.p;
  j["capacity"] = rec.capacity;
  j["coherence_b"] = rec.coherence_b;
  j["fidelity"] = rec.fidelity;
  j["h_of_f"] = optional_value(rec.h_of_f);
  j["coherence_a"] = rec.coherence_a;
  j["margin_dense_coding"] = rec.margin_dense_coding;
  j["margin_teleport"] = optional_value(rec.margin_teleport);
  return j;
}

json to_json(const MarginReport& report) {
  json j;
  j["samples"] = report.samples;
  j["min_margin"] =
      report.samples > 0 ? json(report.min_margin) : json(nullptr);
  j["violations"] = report.violations;
  j["worst_state"] =
      report.worst_state ? to_json(*report.worst_state) : json(nullptr);
  j["seed"] = report.seed;
  return j;
}

json to_json(const VerifySummary& summary) {
  json j;
  j["dense_coding"] = to_json(summary.dense_coding);
  j["teleportation"] = to_json(summary.teleportation);
  j["formation"] = to_json(summary.formation);
  return j;
}

std::string figure_csv(int figure_id,
                       const std::vector<SweepRecord>& records) {
  std::string out;
  switch (figure_id) {
    case 1:
      out = "theta,p,sum,coherence_b,capacity\n";
      break;
    case 2:
      out = "theta,sum,coherence_b,capacity\n";
      break;
    case 3:
      out = "theta,p,sum,h_of_f,coherence_a\n";
      break;
    case 4:
      out = "theta,sum,h_of_f,coherence_a\n";
      break;
    default:
      throw DomainError("figure_csv: figure id must be 1..4");
  }
  for (const SweepRecord& rec : records) {
    std::string row = format_sig12(rec.theta.value_or(0.0));
    if (figure_id == 1 || figure_id == 3) {
      row += ',';
      row += format_sig12(rec.p);
    }
    row += ',';
    if (figure_id <= 2) {
      row += format_sig12(rec.capacity + rec.coherence_b);
      row += ',';
      row += format_sig12(rec.coherence_b);
      row += ',';
      row += format_sig12(rec.capacity);
    } else {
      std::optional<double> sum;
      if (rec.h_of_f) {
        sum = *rec.h_of_f + rec.coherence_a;
      }
      append_cell(row, sum);
      row += ',';
      append_cell(row, rec.h_of_f);
      row += ',';
      row += format_sig12(rec.coherence_a);
    }
    row += '\n';
    out += row;
  }
  return out;
}

json figure_json(int figure_id, const std::vector<SweepRecord>& records) {
  if (figure_id < 1 || figure_id > 4) {
    throw DomainError("figure_json: figure id must be 1..4");
  }
  json rows = json::array();
  for (const SweepRecord& rec : records) {
    json row;
    row["theta"] = optional_value(rec.theta);
    if (figure_id == 1 || figure_id == 3) {
      row["p"] = rec.p;
    }
    if (figure_id <= 2) {
      row["sum"] = rec.capacity + rec.coherence_b;
      row["coherence_b"] = rec.coherence_b;
      row["capacity"] = rec.capacity;
    } else {
      row["sum"] = rec.h_of_f ? json(*rec.h_of_f + rec.coherence_a)
                              : json(nullptr);
      row["h_of_f"] = optional_value(rec.h_of_f);
      row["coherence_a"] = rec.coherence_a;
    }
    rows.push_back(std::move(row));
  }
  json j;
  j["figure"] = figure_id;
  j["rows"] = std::move(rows);
  return j;
}

}  // namespace cohtrade
