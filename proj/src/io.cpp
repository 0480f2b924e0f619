#include "slfast/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "json.hpp"

namespace slfast {

namespace {

std::string format_double(double v) {
  if (v >= kSentinel) return "inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(std::string_view s) {
  if (s == "inf") return kSentinel;
  const std::string tmp(s);
  char* end = nullptr;
  const double v = std::strtod(tmp.c_str(), &end);
  if (end == tmp.c_str() || *end != '\0') {
    throw std::runtime_error("bad number '" + tmp + "'");
  }
  return v;
}

int parse_int(std::string_view s) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::runtime_error("bad integer '" + std::string(s) + "'");
  }
  return v;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

}  // namespace

void write_solution_csv(std::ostream& out, const ValueField& field) {
  const GridGeometry& g = field.geometry;
  out << "x,y,T,astar\n";
  for (int j = 0; j < g.n; ++j) {
    for (int i = 0; i < g.n; ++i) {
      const std::size_t k = static_cast<std::size_t>(j) * g.n + i;
      out << format_double(g.xmin + i * g.dx) << ',' << format_double(g.ymin + j * g.dx) << ','
          << format_double(field.values[k]) << ',' << field.astar[k] << '\n';
    }
  }
}

void write_solution_csv(const std::filesystem::path& path, const ValueField& field) {
  auto out = open_out(path);
  write_solution_csv(out, field);
}

ValueField read_solution_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || trim(line) != "x,y,T,astar") {
    throw std::runtime_error("solution CSV must start with header x,y,T,astar");
  }
  std::vector<double> xs, ys, values;
  std::vector<int> astar;
  while (std::getline(in, line)) {
    const std::string_view row = trim(line);
    if (row.empty()) continue;
    std::string_view cells[4];
    std::size_t pos = 0;
    for (int c = 0; c < 4; ++c) {
      const std::size_t comma = row.find(',', pos);
      if ((c < 3) != (comma != std::string_view::npos)) {
        throw std::runtime_error("solution CSV rows need exactly 4 fields");
      }
      cells[c] = row.substr(pos, c < 3 ? comma - pos : std::string_view::npos);
      pos = comma + 1;
    }
    xs.push_back(parse_double(cells[0]));
    ys.push_back(parse_double(cells[1]));
    values.push_back(parse_double(cells[2]));
    astar.push_back(parse_int(cells[3]));
  }
  const int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(values.size()))));
  if (n < 2 || static_cast<std::size_t>(n) * n != values.size()) {
    throw std::runtime_error("solution CSV does not hold a square grid");
  }
  ValueField field;
  field.geometry = {xs.front(), ys.front(), (xs[n - 1] - xs.front()) / (n - 1), n};
  field.values = std::move(values);
  field.astar = std::move(astar);
  return field;
}

ValueField read_solution_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  return read_solution_csv(in);
}

void write_reactivation_csv(std::ostream& out, int n, const std::vector<int>& insertions) {
  if (insertions.size() != static_cast<std::size_t>(n) * n) {
    throw std::invalid_argument("insertion map does not match grid size");
  }
  out << "i,j,I\n";
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      out << i << ',' << j << ',' << insertions[static_cast<std::size_t>(j) * n + i] << '\n';
    }
  }
}

void write_reactivation_csv(const std::filesystem::path& path, int n,
                            const std::vector<int>& insertions) {
  auto out = open_out(path);
  write_reactivation_csv(out, n, insertions);
}

std::string stats_json(const RunInfo& info, const SolverStats& stats) {
  nlohmann::ordered_json j;
  j["problem"] = info.problem;
  j["method"] = info.method;
  j["n"] = info.n;
  j["dx"] = info.dx;
  j["eps"] = info.eps;
  j["sweeps"] = stats.sweeps;
  j["node_updates"] = stats.node_updates;
  j["imax"] = stats.imax;
  j["wall_seconds"] = stats.wall_seconds;
  return j.dump(2);
}

ProblemSpec parse_problem_text(std::string_view text) {
  std::map<std::string, std::string, std::less<>> kv;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view s = line;
    if (const auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": expected key = value");
    }
    kv[std::string(trim(s.substr(0, eq)))] = std::string(trim(s.substr(eq + 1)));
  }

  ProblemSpec spec;
  spec.id = ProblemId::kCustom;
  spec.name = "custom";
  auto number = [](const std::string& key, const std::string& v) {
    try {
      return parse_double(v);
    } catch (const std::runtime_error&) {
      throw std::invalid_argument("key '" + key + "': bad number '" + v + "'");
    }
  };
  const std::map<std::string_view, double*> numeric = {
      {"xmin", &spec.xmin},
      {"xmax", &spec.xmax},
      {"ymin", &spec.ymin},
      {"ymax", &spec.ymax},
      {"target_x", &spec.target.x},
      {"target_y", &spec.target.y},
      {"lambda", &spec.lambda},
      {"mu", &spec.mu},
      {"c1", &spec.sinusoid.c1},
      {"c2", &spec.sinusoid.c2},
      {"c3", &spec.sinusoid.c3},
      {"c4", &spec.sinusoid.c4},
      {"lower_f1", &spec.lower_layer.f1},
      {"lower_f2", &spec.lower_layer.f2},
      {"upper_f1", &spec.upper_layer.f1},
      {"upper_f2", &spec.upper_layer.f2},
      {"speed_low", &spec.speed_low},
      {"speed_high", &spec.speed_high},
      {"speed_threshold", &spec.speed_threshold},
  };

  bool have_template = false;
  for (const auto& [key, value] : kv) {
    if (key == "template") {
      bool found = false;
      for (DynamicsKind k : {DynamicsKind::kIdentity, DynamicsKind::kTwoSpeed,
                             DynamicsKind::kAnisotropic, DynamicsKind::kLayered,
                             DynamicsKind::kScaledAnisotropic}) {
        if (value == to_string(k)) {
          spec.dynamics = k;
          found = true;
        }
      }
      if (!found) throw std::invalid_argument("unknown dynamics template '" + value + "'");
      have_template = true;
    } else if (key == "name") {
      spec.name = value;
    } else if (key == "controls") {
      spec.n_controls = static_cast<int>(number(key, value));
    } else if (key == "prune_on_velocity") {
      spec.prune_on_velocity = number(key, value) != 0.0;
    } else if (auto it = numeric.find(key); it != numeric.end()) {
      *it->second = number(key, value);
    } else {
      throw std::invalid_argument("unknown key '" + key + "'");
    }
  }
  if (!have_template) throw std::invalid_argument("problem file needs a 'template' key");
  validate(spec);
  return spec;
}

ProblemSpec load_problem_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read problem file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_problem_text(buf.str());
}

}  // namespace slfast
