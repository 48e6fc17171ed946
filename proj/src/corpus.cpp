#include "retract/corpus.hpp"

#include <stdexcept>

namespace retract {

const std::vector<CorpusEntry>& embedded_corpus() {
  static const std::vector<CorpusEntry> corpus = {
      {"e1",
       "# x1 -> x1*x2, x2 -> 1: retract Q[(x1*x2)^±]\n"
       "ring QQ[x1^\xC2\xB1, x2^\xC2\xB1]\n"
       "x1 -> x1*x2\n"
       "x2 -> 1\n"},
      {"e3",
       "ring QQ[x1^\xC2\xB1, x2]\n"
       "x1 -> x1\n"
       "x2 -> x1 + x1^-1\n"},
      {"e7",
       "ring QQ[x1^\xC2\xB1, x2^\xC2\xB1, x3]\n"
       "x1 -> x1\n"
       "x2 -> 1\n"
       "x3 -> x3 + x2 - 1\n"},
      {"ufd",
       "ring QQ[x1^\xC2\xB1, x2, x3]\n"
       "x1 -> x1\n"
       "x2 -> x2\n"
       "x3 -> x2\n"},
      {"identity",
       "ring QQ[x1^\xC2\xB1, x2^\xC2\xB1, x3]\n"
       "x1 -> x1\n"
       "x2 -> x2\n"
       "x3 -> x3\n"},
      {"constant",
       "ring QQ[x1^\xC2\xB1, x2^\xC2\xB1, x3]\n"
       "x1 -> 1\n"
       "x2 -> 1\n"
       "x3 -> 0\n"},
      {"scaled",
       "ring QQ[x1^\xC2\xB1, x2^\xC2\xB1]\n"
       "x1 -> x1\n"
       "x2 -> 3\n"},
      {"conjugated",
       "# standard projection conjugated by x2 -> x1^2*x2\n"
       "ring QQ[x1^\xC2\xB1, x2^\xC2\xB1]\n"
       "x1 -> x1\n"
       "x2 -> x1^-2\n"},
      {"swap",
       "ring QQ[x1^\xC2\xB1, x2^\xC2\xB1]\n"
       "x1 -> x2\n"
       "x2 -> x1\n"},
      {"mixed_zz",
       "ring ZZ[x1^\xC2\xB1, x2^\xC2\xB1, x3, x4]\n"
       "x1 -> -x2^-1\n"
       "x2 -> x2\n"
       "x3 -> 2*x3 - 1/1*x3 + x4^2\n"
       "x4 -> 0\n"},
      {"gf7",
       "ring GF(7)[x1^\xC2\xB1, x2^\xC2\xB1, x3]\n"
       "x1 -> x1\n"
       "x2 -> 5\n"
       "x3 -> x3 + 6*x1^-1*x2 + 5*x1^-1\n"},
      {"rational_coeffs",
       "ring QQ[a^\xC2\xB1, b]  # names need not be x_i\n"
       "a -> a\n"
       "b -> 1/2*a^3 - (a - 1)^2/3\n"},
      {"bad_parse",
       "ring QQ[x1^\xC2\xB1]\n"
       "x1 -> x2\n"},
  };
  return corpus;
}

const std::string& corpus_text(const std::string& name) {
  for (const auto& e : embedded_corpus()) {
    if (e.name == name) return e.text;
  }
  throw std::out_of_range("no corpus entry " + name);
}

}  // namespace retract
