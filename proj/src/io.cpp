#include "adhm/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace adhm {

namespace {

std::size_t size_field(const Json& j, const char* name) {
  if (!j.contains(name)) {
    throw std::invalid_argument(std::string("datum: missing field \"") + name + "\"");
  }
  const Json& value = j.at(name);
  if (!value.is_number_unsigned()) {
    throw std::invalid_argument(std::string("datum field \"") + name +
                                "\": expected a nonnegative integer");
  }
  return value.get<std::size_t>();
}

}  // namespace

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(format_rational(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols,
                        const std::string& field) {
  if (!j.is_array() || j.size() != rows) {
    throw std::invalid_argument("datum field \"" + field + "\": expected " +
                                std::to_string(rows) + " rows");
  }
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = j.at(i);
    if (!row.is_array() || row.size() != cols) {
      throw std::invalid_argument("datum field \"" + field + "\", row " + std::to_string(i) +
                                  ": expected " + std::to_string(cols) + " entries");
    }
    for (std::size_t k = 0; k < cols; ++k) {
      const Json& entry = row.at(k);
      if (!entry.is_string()) {
        throw std::invalid_argument("datum field \"" + field + "\", row " + std::to_string(i) +
                                    ", col " + std::to_string(k) + ": expected a rational string");
      }
      try {
        m.at(i, k) = parse_rational(entry.get<std::string>());
      } catch (const std::invalid_argument& error) {
        throw std::invalid_argument("datum field \"" + field + "\", row " + std::to_string(i) +
                                    ", col " + std::to_string(k) + ": " + error.what());
      }
    }
  }
  return m;
}

Json datum_to_json(const AdhmDatum& x) {
  Json j;
  j["c"] = x.c;
  j["r"] = x.r;
  j["A"] = matrix_to_json(x.A);
  j["B"] = matrix_to_json(x.B);
  j["I"] = matrix_to_json(x.I);
  j["J"] = matrix_to_json(x.J);
  return j;
}

AdhmDatum datum_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("datum: expected a JSON object");
  const std::size_t c = size_field(j, "c");
  const std::size_t r = size_field(j, "r");
  for (const char* name : {"A", "B", "I", "J"}) {
    if (!j.contains(name)) {
      throw std::invalid_argument(std::string("datum: missing field \"") + name + "\"");
    }
  }
  return AdhmDatum(c, r, matrix_from_json(j.at("A"), c, c, "A"),
                   matrix_from_json(j.at("B"), c, c, "B"),
                   matrix_from_json(j.at("I"), c, r, "I"),
                   matrix_from_json(j.at("J"), r, c, "J"));
}

std::string serialize_datum(const AdhmDatum& x) { return datum_to_json(x).dump(); }

AdhmDatum parse_datum(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& error) {
    throw std::invalid_argument(std::string("datum: invalid JSON: ") + error.what());
  }
  return datum_from_json(j);
}

AdhmDatum load_datum(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open datum file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_datum(buffer.str());
}

Json classification_to_json(const ClassificationReport& report) {
  Json j;
  j["is_solution"] = report.is_solution;
  j["stable"] = report.stable;
  j["costable"] = report.costable;
  j["regular"] = report.regular;
  j["sj"] = report.sj;
  j["ts"] = report.ts;
  j["sigma_dim"] = report.sigma_dim;
  j["upsilon_dim"] = report.upsilon_dim;
  j["stabilizer_dim"] = report.stabilizer_dim;
  j["jacobian_rank"] = report.jacobian_rank;
  j["tangent_dim"] = report.tangent_dim;
  return j;
}

Json fiber_to_json(const FiberReport& report, const PointP2& point) {
  Json j;
  j["point"] = "(" + format_rational(point.x) + ":" + format_rational(point.y) + ":" +
               format_rational(point.z) + ")";
  j["rank_alpha"] = report.rank_alpha;
  j["rank_beta"] = report.rank_beta;
  j["h0_fiber"] = report.h0_fiber;
  j["h1_fiber"] = report.h1_fiber;
  j["alpha_injective"] = report.alpha_injective;
  return j;
}

std::string format_point(const SupportPoint& point) {
  return "(" + format_rational(point.p) + "," + format_rational(point.q) + ") x" +
         std::to_string(point.multiplicity);
}

Json support_to_json(const SupportReport& report) {
  Json points = Json::array();
  for (const SupportPoint& point : report.points) {
    Json entry;
    entry["p"] = format_rational(point.p);
    entry["q"] = format_rational(point.q);
    entry["multiplicity"] = point.multiplicity;
    points.push_back(std::move(entry));
  }
  Json factors = Json::array();
  for (const SpectralResidue::Factor& factor : report.residue.factors) {
    Json entry;
    entry["degree"] = factor.degree;
    entry["multiplicity"] = factor.multiplicity;
    factors.push_back(std::move(entry));
  }
  Json j;
  j["points"] = std::move(points);
  j["residue_mass"] = report.residue.mass;
  j["residue_factors"] = std::move(factors);
  return j;
}

Json invariants_to_json(const PerverseInvariants& invariants) {
  Json j;
  j["rank"] = invariants.rank;
  j["charge"] = invariants.charge;
  j["length"] = invariants.length;
  return j;
}

Json uhlenbeck_to_json(const UhlenbeckImage& image) {
  Json points = Json::array();
  for (const SupportPoint& point : image.points) {
    Json entry;
    entry["p"] = format_rational(point.p);
    entry["q"] = format_rational(point.q);
    entry["multiplicity"] = point.multiplicity;
    points.push_back(std::move(entry));
  }
  Json j;
  j["regular_part"] = datum_to_json(image.regular_part);
  j["regular_size"] = image.regular_part.c;
  j["cloud_size"] = image.cloud.size();
  j["cloud_char_p"] = format_poly(char_poly(image.cloud.P));
  j["cloud_char_q"] = format_poly(char_poly(image.cloud.Q));
  j["points"] = std::move(points);
  j["residue_mass"] = image.residue.mass;
  return j;
}

Json audit_to_json(const std::vector<DimensionAudit>& audits) {
  Json rows = Json::array();
  for (const DimensionAudit& audit : audits) {
    Json row;
    row["r"] = audit.r;
    row["c"] = audit.c;
    row["s"] = audit.s;
    row["formula"] = audit.formula;
    row["parametrization"] = audit.parametrization;
    row["consistent"] = audit.consistent;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string render_text(const Json& report) {
  std::ostringstream out;
  for (const auto& [key, value] : report.items()) {
    out << key << ": ";
    if (value.is_string()) {
      out << value.get<std::string>();
    } else {
      out << value.dump();
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace adhm
