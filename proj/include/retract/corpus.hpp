#pragma once

#include <string>
#include <vector>

namespace retract {

struct CorpusEntry {
  std::string name;
  std::string text;
};

/// Hand-checked problem files shipped with the library.
const std::vector<CorpusEntry>& embedded_corpus();

/// Looks up a corpus entry by name; throws std::out_of_range.
const std::string& corpus_text(const std::string& name);

}  // namespace retract
