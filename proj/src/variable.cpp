#include "trilie/variable.hpp"

#include <charconv>
#include <vector>

#include "trilie/errors.hpp"

namespace trilie {

namespace {

constexpr int kMaxIndex = 255;

void check_index(bool ok, const char* what, int i, int j) {
  if (!ok) {
    throw Error(ErrorKind::IndexOutOfRange, std::string(what) + "(" + std::to_string(i) + "," +
                                                std::to_string(j) + ") has invalid indices");
  }
}

bool in_range(int v) { return v >= 1 && v <= kMaxIndex; }

std::string pair_latex(int i, int j) {
  if (i > 9 || j > 9) return std::to_string(i) + "," + std::to_string(j);
  return std::to_string(i) + std::to_string(j);
}

}  // namespace

VarId VarId::x(int i, int j) {
  check_index(in_range(i) && in_range(j) && j < i, "x", i, j);
  return VarId(VarKind::X, i, j);
}

VarId VarId::e(int i, int j) {
  check_index(in_range(i) && in_range(j) && i < j, "e", i, j);
  return VarId(VarKind::E, i, j);
}

VarId VarId::b(int i, int j) {
  check_index(in_range(i) && in_range(j) && i < j, "b", i, j);
  return VarId(VarKind::B, i, j);
}

VarId VarId::bh(int i, int j) {
  check_index(in_range(i) && in_range(j) && i < j, "bh", i, j);
  return VarId(VarKind::BH, i, j);
}

VarId VarId::y(int i, int j) {
  check_index(in_range(i) && in_range(j) && i < j, "y", i, j);
  return VarId(VarKind::Y, i, j);
}

VarId VarId::aux(int i) {
  check_index(in_range(i), "t", i, 0);
  return VarId(VarKind::Aux, i, 0);
}

std::string VarId::name() const {
  const auto idx = [this] { return "_" + std::to_string(i_) + "_" + std::to_string(j_); };
  switch (kind_) {
    case VarKind::X0: return "x_0";
    case VarKind::X: return "x" + idx();
    case VarKind::E: return "e" + idx();
    case VarKind::F: return "f";
    case VarKind::B: return "b" + idx();
    case VarKind::BH: return "bh" + idx();
    case VarKind::Y0: return "y_0";
    case VarKind::Y: return "y" + idx();
    case VarKind::Aux: return "t_" + std::to_string(i_);
  }
  return "?";
}

std::string VarId::latex() const {
  switch (kind_) {
    case VarKind::X0: return "x_{0}";
    case VarKind::X: return "x_{" + pair_latex(i_, j_) + "}";
    case VarKind::E: return "e_{" + pair_latex(i_, j_) + "}";
    case VarKind::F: return "f";
    case VarKind::B: return "b_{" + pair_latex(i_, j_) + "}";
    case VarKind::BH: return "\\widehat b_{" + pair_latex(i_, j_) + "}";
    case VarKind::Y0: return "y_{0}";
    case VarKind::Y: return "y_{" + pair_latex(i_, j_) + "}";
    case VarKind::Aux: return "t_{" + std::to_string(i_) + "}";
  }
  return "?";
}

VarId VarId::parse(std::string_view name) {
  if (name == "x_0") return x0();
  if (name == "f") return f();
  if (name == "y_0") return y0();

  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = name.find('_', start);
    parts.push_back(name.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  auto to_int = [&](std::string_view s) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
      throw Error(ErrorKind::ParseError, "bad variable name '" + std::string(name) + "'");
    }
    return v;
  };
  try {
    if (parts.size() == 2 && parts[0] == "t") return aux(to_int(parts[1]));
    if (parts.size() == 3) {
      const int i = to_int(parts[1]);
      const int j = to_int(parts[2]);
      if (parts[0] == "x") return x(i, j);
      if (parts[0] == "e") return e(i, j);
      if (parts[0] == "b") return b(i, j);
      if (parts[0] == "bh") return bh(i, j);
      if (parts[0] == "y") return y(i, j);
    }
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::ParseError) throw;
    throw Error(ErrorKind::ParseError, err.what());
  }
  throw Error(ErrorKind::ParseError, "bad variable name '" + std::string(name) + "'");
}

}  // namespace trilie
