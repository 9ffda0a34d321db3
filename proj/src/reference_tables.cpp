#include "npbrace/reference_tables.hpp"

#include <stdexcept>

namespace npbrace::reference {

const Table& braces_of_size_12() {
  static const Table t{{"C12", {1, 1, 0, 2, 1}}, {"C6xC2", {1, 1, 1, 1, 1}}};
  return t;
}

const Table& regular_subgroups_12() {
  static const Table t{{"C12", {1, 1, 0, 3, 1}}, {"C6xC2", {3, 1, 2, 3, 3}}};
  return t;
}

const Table& braces_of_size_12p(std::uint64_t residue) {
  static const std::map<std::uint64_t, Table> tables{
      {11, {{"C12", {2, 3, 0, 7, 2}}, {"C6xC2", {2, 2, 1, 3, 2}}}},
      {5, {{"C12", {3, 3, 0, 7, 3}}, {"C6xC2", {3, 2, 1, 3, 3}}}},
      {7, {{"C12", {4, 6, 0, 7, 2}}, {"C6xC2", {4, 4, 2, 3, 2}}}},
      {1, {{"C12", {6, 6, 0, 7, 3}}, {"C6xC2", {6, 4, 2, 3, 3}}}}};
  auto it = tables.find(residue % 12);
  if (it == tables.end()) throw std::invalid_argument("no table for residue " + std::to_string(residue % 12));
  return it->second;
}

std::size_t total_braces_12p(std::uint64_t residue) {
  std::size_t total = 0;
  for (const auto& [e, row] : braces_of_size_12p(residue))
    for (auto v : row) total += v;
  return total;
}

const std::map<std::uint64_t, std::size_t>& brace_totals() {
  static const std::map<std::uint64_t, std::size_t> t{{24, 96}, {36, 46}, {60, 28}};
  return t;
}

const std::vector<std::string>& hgs_columns() {
  static const std::vector<std::string> c{"F", "C6", "D6", "C4", "C2xC2", "C3", "C2", "1"};
  return c;
}

const std::map<std::string, std::vector<std::string>>& hgs_symbolic(const std::string& e_label) {
  static const std::map<std::string, std::map<std::string, std::vector<std::string>>> tables{
      {"C12",
       {{"C12", {"1", "p", "-", "p", "-", "p", "p", "p"}},
        {"C6xC2", {"3", "3p", "-", "-", "3p", "-", "3p", "-"}},
        {"A4", {"0", "-", "-", "-", "0", "-", "-", "-"}},
        {"D12", {"9", "9p", "9p", "-", "-", "-", "-", "-"}},
        {"Dic12", {"3", "3p", "-", "-", "-", "3p", "-", "-"}}}},
      {"C6xC2",
       {{"C12", {"1", "p", "-", "p", "-", "p", "p", "p"}},
        {"C6xC2", {"1", "p", "-", "-", "p", "-", "p", "-"}},
        {"A4", {"4", "-", "-", "-", "4p", "-", "-", "-"}},
        {"D12", {"3", "3p", "3p", "-", "-", "-", "-", "-"}},
        {"Dic12", {"3", "3p", "-", "-", "-", "3p", "-", "-"}}}}};
  return tables.at(e_label);
}

std::uint64_t instantiate(const std::string& entry, std::uint64_t p) {
  if (entry.empty() || entry == "-") throw std::invalid_argument("instantiate: empty entry");
  if (entry == "p") return p;
  if (entry.back() == 'p') return std::stoull(entry.substr(0, entry.size() - 1)) * p;
  return std::stoull(entry);
}

std::size_t column_quotient_order(const std::string& column) {
  static const std::map<std::string, std::size_t> index{{"F", 1},     {"C6", 2}, {"D6", 2}, {"C4", 3},
                                                        {"C2xC2", 3}, {"C3", 4}, {"C2", 6}, {"1", 12}};
  return index.at(column);
}

}  // namespace npbrace::reference
