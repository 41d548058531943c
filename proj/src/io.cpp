#include "fracmax/io.hpp"

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fracmax {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void atomic_write(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("atomic_write: cannot open " + tmp);
    os.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!os) throw std::runtime_error("atomic_write: short write to " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("atomic_write: rename failed for " + path);
}

void write_sampled_csv(const SampledFn& f, const std::string& path) {
  std::ostringstream os;
  os << "t,value\n";
  for (int i = 0; i <= f.grid.n; ++i)
    os << fmt_double(f.grid.node(i)) << ',' << fmt_double(f.values[static_cast<std::size_t>(i)])
       << '\n';
  atomic_write(path, os.str());
}

SampledFn read_sampled_csv(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("read_sampled_csv: cannot open " + path);
  std::string line;
  if (!std::getline(is, line) || line.rfind("t,value", 0) != 0)
    throw std::runtime_error("read_sampled_csv: missing 't,value' header in " + path);
  std::vector<double> ts, vs;
  int lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw std::runtime_error("read_sampled_csv: malformed row at line " + std::to_string(lineno));
    ts.push_back(std::stod(line.substr(0, comma)));
    vs.push_back(std::stod(line.substr(comma + 1)));
    if (ts.size() >= 2 && !(ts[ts.size() - 2] < ts.back()))
      throw std::runtime_error("read_sampled_csv: t not strictly increasing at line " +
                               std::to_string(lineno));
  }
  if (ts.size() < 3) throw std::runtime_error("read_sampled_csv: needs at least 3 rows");
  SampledFn f;
  f.grid = Grid1D::over(ts.front(), ts.back(), static_cast<int>(ts.size()) - 1);
  f.values = std::move(vs);
  f.label = path;
  f.validate();
  return f;
}

void write_field_csv(const SolutionField& u, const std::string& path) {
  std::ostringstream os;
  os << "t,x,u\n";
  for (int k = 0; k <= u.tgrid.n; ++k)
    for (int i = 0; i <= u.xgrid.n; ++i)
      os << fmt_double(u.tgrid.node(k)) << ',' << fmt_double(u.xgrid.node(i)) << ','
         << fmt_double(u.at(k, i)) << '\n';
  atomic_write(path, os.str());
}

namespace {
constexpr char kMagic[8] = {'F', 'R', 'M', 'X', 'F', 'L', 'D', '1'};

template <typename T>
void put(std::string& buf, T v) {
  char tmp[sizeof(T)];
  std::memcpy(tmp, &v, sizeof(T));
  buf.append(tmp, sizeof(T));
}
}  // namespace

void write_field_binary(const SolutionField& u, const std::string& path) {
  std::string buf;
  buf.reserve(32 + u.values.size() * 8);
  buf.append(kMagic, 8);
  put<std::uint32_t>(buf, static_cast<std::uint32_t>(u.tgrid.n + 1));
  put<std::uint32_t>(buf, static_cast<std::uint32_t>(u.xgrid.n + 1));
  put<double>(buf, u.tgrid.a);
  put<double>(buf, u.tgrid.b);
  put<double>(buf, u.xgrid.a);
  put<double>(buf, u.xgrid.b);
  for (double v : u.values) put<double>(buf, v);
  atomic_write(path, buf);
}

SolutionField read_field_binary(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("read_field_binary: cannot open " + path);
  std::string buf((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
  if (buf.size() < 48 || std::memcmp(buf.data(), kMagic, 8) != 0)
    throw std::runtime_error("read_field_binary: bad magic in " + path);
  std::size_t off = 8;
  auto get_u32 = [&] {
    std::uint32_t v;
    std::memcpy(&v, buf.data() + off, 4);
    off += 4;
    return v;
  };
  auto get_f64 = [&] {
    double v;
    std::memcpy(&v, buf.data() + off, 8);
    off += 8;
    return v;
  };
  const std::uint32_t nt_nodes = get_u32();
  const std::uint32_t nx_nodes = get_u32();
  const double t0 = get_f64(), t1 = get_f64(), x0 = get_f64(), x1 = get_f64();
  const std::size_t count = static_cast<std::size_t>(nt_nodes) * nx_nodes;
  if (buf.size() != off + count * 8)
    throw std::runtime_error("read_field_binary: size mismatch in " + path);
  SolutionField u;
  u.tgrid = Grid1D::over(t0, t1, static_cast<int>(nt_nodes) - 1);
  u.xgrid = Grid1D::over(x0, x1, static_cast<int>(nx_nodes) - 1);
  u.values.resize(count);
  std::memcpy(u.values.data(), buf.data() + off, count * 8);
  return u;
}

void write_plot_data(const SolutionField& u, const std::string& path,
                     const nlohmann::ordered_json& meta) {
  std::ostringstream os;
  for (int k = 0; k <= u.tgrid.n; ++k) {
    for (int i = 0; i <= u.xgrid.n; ++i)
      os << fmt_double(u.tgrid.node(k)) << ' ' << fmt_double(u.xgrid.node(i)) << ' '
         << fmt_double(u.at(k, i)) << '\n';
    if (k < u.tgrid.n) os << '\n';
  }
  atomic_write(path, os.str());
  atomic_write(path + ".meta.json", meta.dump(2) + "\n");
}

SolutionField field_as_solution(const GridField& f) {
  SolutionField s;
  if (f.dims == 2) {
    s.tgrid = f.g0;
    s.xgrid = f.g1;
    s.values = f.v;
  } else {
    // A 1-D field becomes a single-block plot with a degenerate second axis.
    s.tgrid = f.g0;
    s.xgrid = Grid1D::over(0.0, 1.0, 2);
    s.values.resize(static_cast<std::size_t>(f.g0.n + 1) * 3);
    for (int i = 0; i <= f.g0.n; ++i)
      for (int j = 0; j <= 2; ++j)
        s.values[static_cast<std::size_t>(i) * 3 + j] = f.v[static_cast<std::size_t>(i)];
  }
  s.scheme_meta = "field";
  return s;
}

}  // namespace fracmax
