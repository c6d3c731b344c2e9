#include "tropmat/subset.hpp"

#include <sstream>

namespace tropmat {

std::string Subset::str() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int e : element_labels()) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  os << '}';
  return os.str();
}

std::vector<Subset> k_subsets(int n, int k) {
  std::vector<Subset> out;
  if (k < 0 || k > n) return out;
  if (k == 0) {
    out.push_back(Subset());
    return out;
  }
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Subset s;
    for (int e : idx) s.bits |= std::uint64_t{1} << e;
    out.push_back(s);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) r = r * static_cast<std::uint64_t>(n - i) / (i + 1);
  return r;
}

int subset_lex_rank(Subset s, int n) {
  // Lexicographic rank among k-subsets listed as sorted element tuples.
  auto elems = s.elements();
  int k = static_cast<int>(elems.size());
  int rank = 0;
  int prev = -1;
  for (int i = 0; i < k; ++i) {
    for (int e = prev + 1; e < elems[i]; ++e)
      rank += static_cast<int>(binomial(n - 1 - e, k - 1 - i));
    prev = elems[i];
  }
  return rank;
}

Subset subset_lex_unrank(int rank, int n, int k) {
  Subset s;
  int e = 0;
  for (int i = 0; i < k; ++i) {
    while (true) {
      int block = static_cast<int>(binomial(n - 1 - e, k - 1 - i));
      if (rank < block) break;
      rank -= block;
      ++e;
    }
    s.bits |= std::uint64_t{1} << e;
    ++e;
  }
  return s;
}

}  // namespace tropmat
