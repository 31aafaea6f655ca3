#pragma once

// Freely reduced words in the free group on 2g generators a1,b1,...,ag,bg.
// Letters are signed 1-based generator indices: +(i+1) is generator i,
// -(i+1) its inverse. Generator i is a_{i/2+1} when i is even and b_{i/2+1}
// when i is odd, so the ordered alphabet interleaves symplectic pairs:
// a1 < b1 < a2 < b2 < ...

#include <string>
#include <vector>

#include "surfalg/numeric.hpp"

namespace surfalg {

struct Word {
  int genus = 0;
  std::vector<int> letters;  // freely reduced, maintained by the operations

  bool empty() const { return letters.empty(); }
  size_t length() const { return letters.size(); }
};

inline int gen_count(const Word& w) { return 2 * w.genus; }

std::string gen_name(int index);          // 0 -> "a1", 1 -> "b1", 2 -> "a2", ...
int gen_index(const std::string& name);   // inverse of gen_name, -1 if invalid

Word word_identity(int genus);
Word word_generator(int genus, int index, int exponent = 1);

// Concatenation with free reduction.
Word word_mul(const Word& u, const Word& v);
Word word_inverse(const Word& u);
Word word_pow(const Word& u, long e);
Word word_conjugate(const Word& w, const Word& by);   // by * w * by^-1
Word word_commutator(const Word& u, const Word& v);   // u v u^-1 v^-1

// a1 b1 a1^-1 b1^-1 ... ag bg ag^-1 bg^-1
Word surface_relator(int genus);

Word cyclic_reduction(const Word& w);

// Conjugacy in the free group: cyclic reductions are rotations of each other.
bool words_conjugate(const Word& u, const Word& v);

// Exponent-sum vector, one entry per generator.
IntVec abelianization(const Word& w);

// Token syntax: "a1 b3 a1^-1", plus commutator shorthand "[w1, w2]" which may
// nest and carry an exponent ("[a1, b1]^-2").
Word parse_word(const std::string& text, int genus);

std::string word_to_string(const Word& w);

}  // namespace surfalg
