#pragma once

#include "cohtrade/states.hpp"
#include "cohtrade/verify.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace cohtrade {

/// Matrix file schema: {"dim": d, "subsystem_dims": [a, b] | null,
/// "entries": [[re, im], ...]} with entries in row-major order.
nlohmann::json to_json(const DensityMatrix& rho);
DensityMatrix density_matrix_from_json(const nlohmann::json& j);
DensityMatrix load_density_matrix(const std::string& path);

nlohmann::json to_json(const SweepRecord& rec);
nlohmann::json to_json(const MarginReport& report);
nlohmann::json to_json(const VerifySummary& summary);

/// One figure's data rows. Columns:
///   1: theta,p,sum,coherence_b,capacity        (full grid)
///   2: theta,sum,coherence_b,capacity          (p = 0 line)
///   3: theta,p,sum,h_of_f,coherence_a          (full grid; na below F = 2/3)
///   4: theta,sum,h_of_f,coherence_a            (p = 0 line)
/// CSV uses '.' decimals, 12 significant digits, a header row, and
/// newline-terminated rows; absent values are written as "na" (null in
/// JSON).
std::string figure_csv(int figure_id, const std::vector<SweepRecord>& records);
nlohmann::json figure_json(int figure_id,
                           const std::vector<SweepRecord>& records);

/// %.12g rendering used by every CSV cell.
std::string format_sig12(double value);

}  // namespace cohtrade
