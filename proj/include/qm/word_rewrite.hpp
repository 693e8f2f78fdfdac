#pragma once

// Reference reducer working directly on words of letters. Slow, but shares
// nothing with the memoized engine beyond the rule table, so it serves as
// the oracle for strategy independence.

#include "qm/pbw.hpp"

#include <vector>

namespace qm {

enum class Strategy { Leftmost, Rightmost };

using Word = std::vector<Letter>;

/// Rewrites until every word is ordered, always choosing the leftmost or
/// rightmost reducible position.
Element reduce_word(const Presentation& p, const Word& w, Strategy s);

}  // namespace qm
