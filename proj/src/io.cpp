#include "stablegraph/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace stablegraph::io {

std::vector<std::pair<std::string, std::string>> read_kv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  while (std::getline(in, line)) {
    auto h = line.find('#');
    if (h != std::string::npos) line.erase(h);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      size_t a = s.find_first_not_of(" \t\r");
      if (a == std::string::npos) return std::string();
      size_t b = s.find_last_not_of(" \t\r");
      return s.substr(a, b - a + 1);
    };
    std::string k = trim(line.substr(0, eq)), v = trim(line.substr(eq + 1));
    if (!k.empty()) out.emplace_back(k, v);
  }
  return out;
}

degree_model::DegreeLaw read_law(const std::string& path) {
  degree_model::DegreeLaw law;
  double te = 0, ta = 0;
  int tk0 = 0;
  bool has_tail = false;
  for (auto& [k, v] : read_kv(path)) {
    if (k.rfind("atom.", 0) == 0) {
      law.atoms[std::stoi(k.substr(5))] = std::stod(v);
    } else if (k == "tail.exponent") { te = std::stod(v); has_tail = true; }
    else if (k == "tail.k0") { tk0 = std::stoi(v); has_tail = true; }
    else if (k == "tail.A") { ta = std::stod(v); has_tail = true; }
    else throw std::runtime_error("unknown law key: " + k);
  }
  if (has_tail) law.tail = degree_model::PowerTail{te, tk0, ta};
  law.validate();
  return law;
}

void write_law(const degree_model::DegreeLaw& law, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  char buf[64];
  for (auto& [k, p] : law.atoms) {
    snprintf(buf, sizeof buf, "%.17g", p);
    out << "atom." << k << "=" << buf << "\n";
  }
  if (law.tail) {
    snprintf(buf, sizeof buf, "%.17g", law.tail->exponent);
    out << "tail.exponent=" << buf << "\n";
    out << "tail.k0=" << law.tail->k0 << "\n";
    snprintf(buf, sizeof buf, "%.17g", law.tail->A);
    out << "tail.A=" << buf << "\n";
  }
}

CsvWriter::CsvWriter(const std::string& path, const std::vector<std::string>& header)
    : cols_(header.size()) {
  FILE* f = fopen(path.c_str(), "w");
  if (!f) throw std::runtime_error("cannot write " + path);
  f_ = f;
  for (size_t i = 0; i < header.size(); ++i)
    fprintf(f, "%s%s", header[i].c_str(), i + 1 < header.size() ? "," : "\n");
}

CsvWriter::~CsvWriter() { fclose((FILE*)f_); }

void CsvWriter::row(const std::vector<double>& values) {
  if (values.size() != cols_) throw std::invalid_argument("csv row width mismatch");
  FILE* f = (FILE*)f_;
  for (size_t i = 0; i < values.size(); ++i)
    fprintf(f, "%.12g%s", values[i], i + 1 < values.size() ? "," : "\n");
}

void CsvWriter::raw_row(const std::string& line) { fprintf((FILE*)f_, "%s\n", line.c_str()); }

}  // namespace stablegraph::io
