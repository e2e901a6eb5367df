#include "lazyq/state_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace lazyq {

using nlohmann::json;

namespace {

double number(const json& j, const std::string& where) {
  if (!j.is_number()) throw StateFormatError(where + ": expected a number");
  return j.get<double>();
}

const json& array_of(const json& j, std::size_t n, const std::string& where) {
  if (!j.is_array() || j.size() != n) {
    throw StateFormatError(where + ": expected an array of length " + std::to_string(n));
  }
  return j;
}

Vec3 vec3(const json& j, const std::string& where) {
  array_of(j, 3, where);
  return {number(j[0], where), number(j[1], where), number(j[2], where)};
}

}  // namespace

TwoQubitState state_from_json(const json& doc) {
  if (!doc.is_object()) throw StateFormatError("state file: top level must be an object");
  const bool has_matrix = doc.contains("matrix");
  const bool has_fano = doc.contains("fano");
  if (has_matrix == has_fano) {
    throw StateFormatError("state file: exactly one of \"matrix\" or \"fano\" must be present");
  }

  ComplexMatrix m(4, 4);
  if (has_matrix) {
    const json& rows = array_of(doc["matrix"], 4, "matrix");
    for (std::size_t r = 0; r < 4; ++r) {
      const json& row = array_of(rows[r], 4, "matrix row " + std::to_string(r));
      for (std::size_t c = 0; c < 4; ++c) {
        const std::string where = "matrix[" + std::to_string(r) + "][" + std::to_string(c) + "]";
        const json& e = array_of(row[c], 2, where);
        m(r, c) = Complex(number(e[0], where), number(e[1], where));
      }
    }
  } else {
    const json& f = doc["fano"];
    if (!f.is_object() || !f.contains("x") || !f.contains("y") || !f.contains("T")) {
      throw StateFormatError("fano: expected keys \"x\", \"y\" and \"T\"");
    }
    FanoParams p;
    p.x = vec3(f["x"], "fano.x");
    p.y = vec3(f["y"], "fano.y");
    const json& t = array_of(f["T"], 3, "fano.T");
    for (int i = 0; i < 3; ++i) {
      const Vec3 row = vec3(t[static_cast<std::size_t>(i)], "fano.T row " + std::to_string(i));
      for (int j = 0; j < 3; ++j) p.t(i, j) = row[j];
    }
    m = compose(p).matrix();
  }

  TwoQubitState rho(std::move(m));
  const double defect = hermiticity_defect(rho.matrix());
  if (defect > kStateTol * std::max(1.0, frob_norm(rho.matrix()))) {
    std::ostringstream os;
    os << "state is not Hermitian (defect " << defect << ")";
    throw InvalidStateError(os.str());
  }
  const double dev = std::abs(rho.matrix().trace() - 1.0);
  if (dev > kStateTol) {
    std::ostringstream os;
    os << "trace deviation " << dev << " exceeds " << kStateTol;
    throw InvalidStateError(os.str());
  }
  return rho;
}

TwoQubitState read_state_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw StateFormatError("cannot open " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw StateFormatError(path.string() + ": " + e.what());
  }
  return state_from_json(doc);
}

json state_to_json(const TwoQubitState& rho) {
  json rows = json::array();
  for (std::size_t r = 0; r < 4; ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < 4; ++c) row.push_back({rho(r, c).real() + 0.0, rho(r, c).imag() + 0.0});  // no -0.0
    rows.push_back(std::move(row));
  }
  return json{{"matrix", std::move(rows)}};
}

json fano_to_json(const FanoParams& p) {
  const auto vec = [](const Vec3& v) { return json{v[0] + 0.0, v[1] + 0.0, v[2] + 0.0}; };  // no -0.0
  json t = json::array();
  for (int i = 0; i < 3; ++i) t.push_back(vec(p.t.row(i)));
  return json{{"x", vec(p.x)}, {"y", vec(p.y)}, {"T", std::move(t)}};
}

void write_state_file(const std::filesystem::path& path, const TwoQubitState& rho) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << state_to_json(rho).dump(2) << '\n';
}

}  // namespace lazyq
