#include "picard/words.hpp"

namespace picard::fpgroups {

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word v = free_reduce(w);
  size_t lo = 0, hi = v.size();
  while (hi - lo >= 2 && v[lo] == -v[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(v.begin() + static_cast<long>(lo), v.begin() + static_cast<long>(hi));
}

Word invert(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (size_t i = w.size(); i-- > 0;) out.push_back(-w[i]);
  return out;
}

bool is_freely_reduced(const Word& w) {
  for (size_t i = 1; i < w.size(); ++i) {
    if (w[i] == -w[i - 1]) return false;
  }
  return true;
}

std::string word_to_string(const Word& w, const std::vector<std::string>& generator_names) {
  if (w.empty()) return "1";
  std::string out;
  size_t i = 0;
  while (i < w.size()) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const size_t count = j - i;
    if (!out.empty()) out += "*";
    const int g = w[i] > 0 ? w[i] : -w[i];
    out += generator_names[static_cast<size_t>(g - 1)];
    if (w[i] < 0) {
      out += "^-" + std::to_string(count);
    } else if (count > 1) {
      out += "^" + std::to_string(count);
    }
    i = j;
  }
  return out;
}

}  // namespace picard::fpgroups
