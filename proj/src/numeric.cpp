#include "dpm/numeric.hpp"

#include <cctype>
#include <sstream>

namespace dpm {

std::string rat_to_string(const Rat& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

bool rat_from_string(const std::string& s, Rat& out) {
  if (s.empty()) return false;
  const auto slash = s.find('/');
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  try {
    if (slash == std::string::npos) {
      if (!is_int(s)) return false;
      out = Rat(Int(s));
      return true;
    }
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) return false;
    Int d(den);
    if (d == 0) return false;
    out = Rat(Int(num), d);
    return true;
  } catch (...) {
    return false;
  }
}

double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

std::string matrix_to_string(const RatMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i) os << "; ";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) os << " ";
      os << rat_to_string(m(i, j));
    }
  }
  os << "]";
  return os.str();
}

std::string matrix_to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i) os << "; ";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) os << " ";
      os << m(i, j);
    }
  }
  os << "]";
  return os.str();
}

}  // namespace dpm
