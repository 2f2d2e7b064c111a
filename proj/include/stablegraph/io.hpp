#pragma once
#include <string>
#include <vector>

#include "stablegraph/degree_model.hpp"

namespace stablegraph::io {

// key=value law files:
//   atom.K=P        (one line per head atom)
//   tail.exponent=E tail.k0=K0 tail.A=A   (optional, all three or none)
degree_model::DegreeLaw read_law(const std::string& path);
void write_law(const degree_model::DegreeLaw& law, const std::string& path);

// key=value config files; '#' comments, blank lines ignored
std::vector<std::pair<std::string, std::string>> read_kv(const std::string& path);

class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& header);
  ~CsvWriter();
  void row(const std::vector<double>& values);
  void raw_row(const std::string& line);

 private:
  void* f_;
  size_t cols_;
};

}  // namespace stablegraph::io
