#include "tightframe/matrix_file.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "tightframe/error.hpp"

namespace tightframe {

namespace {

using nlohmann::json;

double finite_number(const json& v, const char* what) {
  if (!v.is_number()) throw DomainError(std::string("matrix file: ") + what + " is not a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw DomainError(std::string("matrix file: ") + what + " is not finite");
  return d;
}

long long positive_int(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer()) {
    throw DomainError(std::string("matrix file: missing integer field '") + key + "'");
  }
  const long long v = doc[key].get<long long>();
  if (v <= 0) throw DomainError(std::string("matrix file: '") + key + "' must be positive");
  return v;
}

void append_number(std::string& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
  // keep integral values floating so that -0 survives a read
  if (std::strpbrk(buf, ".eE") == nullptr) out += ".0";
}

}  // namespace

ComplexMatrix parse_matrix(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string("matrix file: ") + e.what());
  }
  if (!doc.is_object()) throw DomainError("matrix file: top level must be an object");
  const long long rows = positive_int(doc, "rows");
  const long long cols = positive_int(doc, "cols");
  if (!doc.contains("data") || !doc["data"].is_array()) {
    throw DomainError("matrix file: missing array field 'data'");
  }
  const json& data = doc["data"];
  if (static_cast<long long>(data.size()) != rows * cols) {
    std::ostringstream os;
    os << "matrix file: data has " << data.size() << " entries, expected " << rows * cols;
    throw DomainError(os.str());
  }
  ComplexMatrix A(rows, cols);
  for (long long idx = 0; idx < rows * cols; ++idx) {
    const json& entry = data[static_cast<std::size_t>(idx)];
    if (!entry.is_array() || entry.size() != 2) {
      throw DomainError("matrix file: each entry must be a [re, im] pair");
    }
    A(idx / cols, idx % cols) = Complex(finite_number(entry[0], "real part"),
                                        finite_number(entry[1], "imaginary part"));
  }
  return A;
}

std::string format_matrix(const ComplexMatrix& A) {
  if (!A.allFinite()) throw NumericalError("matrix file: refusing to write non-finite entries");
  std::string out = "{\"rows\": " + std::to_string(A.rows()) +
                    ", \"cols\": " + std::to_string(A.cols()) + ", \"data\": [";
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    for (Eigen::Index j = 0; j < A.cols(); ++j) {
      if (i || j) out += ", ";
      out += "[";
      append_number(out, A(i, j).real());
      out += ", ";
      append_number(out, A(i, j).imag());
      out += "]";
    }
  }
  out += "]}\n";
  return out;
}

ComplexMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open matrix file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_matrix(ss.str());
  } catch (const DomainError& e) {
    throw DomainError(path + ": " + e.what());
  }
}

void write_matrix_file(const std::string& path, const ComplexMatrix& A) {
  const std::string text = format_matrix(A);
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write matrix file '" + path + "'");
  out << text;
  if (!out) throw DomainError("failed writing matrix file '" + path + "'");
}

ComplexVector read_vector_file(const std::string& path) {
  const ComplexMatrix A = read_matrix_file(path);
  if (A.cols() != 1 && A.rows() != 1) {
    throw DomainError(path + ": expected a vector (one row or one column)");
  }
  return A.cols() == 1 ? ComplexVector(A.col(0)) : ComplexVector(A.row(0).transpose());
}

}  // namespace tightframe
