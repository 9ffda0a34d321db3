#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

// Published values reproduced by verify-paper. Rows follow the
// column order C12, C6xC2, A4, D12, Dic12 of order12_types().
namespace npbrace::reference {

using Row = std::vector<std::size_t>;
using Table = std::map<std::string, Row>;  // additive type -> row

/// Braces of size 12 by (additive, multiplicative) type.
const Table& braces_of_size_12();
/// Regular subgroups of Hol(E), |E| = 12, by isomorphism type.
const Table& regular_subgroups_12();
/// Braces of size 12p by (E, F) for p congruent to 1, 5, 7 or 11 mod 12.
const Table& braces_of_size_12p(std::uint64_t residue);
std::size_t total_braces_12p(std::uint64_t residue);
/// Brace counts b(m) for m = 24, 36, 60.
const std::map<std::uint64_t, std::size_t>& brace_totals();

/// Hopf Galois counts for N = Z_p x E as symbolic entries "k", "kp" or "-",
/// indexed by F type and kernel column (hgs_columns()).
const std::vector<std::string>& hgs_columns();
const std::map<std::string, std::vector<std::string>>& hgs_symbolic(const std::string& e_label);
/// "9p" -> 9p; "-" is not accepted.
std::uint64_t instantiate(const std::string& entry, std::uint64_t p);
/// |F / K| for a kernel column of an order-12 F.
std::size_t column_quotient_order(const std::string& column);

}  // namespace npbrace::reference
