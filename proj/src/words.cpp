#include "surfalg/words.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

#include "surfalg/errors.hpp"

namespace surfalg {

std::string gen_name(int index) {
  return (index % 2 == 0 ? "a" : "b") + std::to_string(index / 2 + 1);
}

int gen_index(const std::string& name) {
  if (name.size() < 2) return -1;
  char c = name[0];
  if (c != 'a' && c != 'b') return -1;
  for (size_t i = 1; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return -1;
  int pair = std::atoi(name.c_str() + 1);
  if (pair < 1) return -1;
  return 2 * (pair - 1) + (c == 'b' ? 1 : 0);
}

Word word_identity(int genus) { return Word{genus, {}}; }

Word word_generator(int genus, int index, int exponent) {
  Word w{genus, {}};
  if (index < 0 || index >= 2 * genus)
    throw parse_error("generator index out of range");
  int letter = exponent >= 0 ? index + 1 : -(index + 1);
  for (int k = 0; k < std::abs(exponent); ++k) w.letters.push_back(letter);
  return w;
}

namespace {

void push_reduced(std::vector<int>& out, int letter) {
  if (!out.empty() && out.back() == -letter)
    out.pop_back();
  else
    out.push_back(letter);
}

}  // namespace

Word word_mul(const Word& u, const Word& v) {
  Word w{u.genus, u.letters};
  for (int l : v.letters) push_reduced(w.letters, l);
  return w;
}

Word word_inverse(const Word& u) {
  Word w{u.genus, {}};
  w.letters.reserve(u.letters.size());
  for (auto it = u.letters.rbegin(); it != u.letters.rend(); ++it)
    w.letters.push_back(-*it);
  return w;
}

Word word_pow(const Word& u, long e) {
  Word base = e >= 0 ? u : word_inverse(u);
  Word w = word_identity(u.genus);
  for (long k = 0; k < std::labs(e); ++k) w = word_mul(w, base);
  return w;
}

Word word_conjugate(const Word& w, const Word& by) {
  return word_mul(word_mul(by, w), word_inverse(by));
}

Word word_commutator(const Word& u, const Word& v) {
  return word_mul(word_mul(u, v), word_mul(word_inverse(u), word_inverse(v)));
}

Word surface_relator(int genus) {
  Word r = word_identity(genus);
  for (int j = 0; j < genus; ++j) {
    Word a = word_generator(genus, 2 * j);
    Word b = word_generator(genus, 2 * j + 1);
    r = word_mul(r, word_commutator(a, b));
  }
  return r;
}

Word cyclic_reduction(const Word& w) {
  Word c = w;
  size_t n = c.letters.size();
  size_t i = 0;
  while (n >= 2 && c.letters[i] == -c.letters[i + n - 1]) {
    ++i;
    n -= 2;
  }
  c.letters = std::vector<int>(c.letters.begin() + static_cast<long>(i),
                               c.letters.begin() + static_cast<long>(i + n));
  return c;
}

bool words_conjugate(const Word& u, const Word& v) {
  Word cu = cyclic_reduction(u), cv = cyclic_reduction(v);
  if (cu.letters.size() != cv.letters.size()) return false;
  size_t n = cu.letters.size();
  if (n == 0) return true;
  // Rotation check by doubling.
  for (size_t s = 0; s < n; ++s) {
    bool ok = true;
    for (size_t i = 0; i < n && ok; ++i)
      ok = cu.letters[(s + i) % n] == cv.letters[i];
    if (ok) return true;
  }
  return false;
}

IntVec abelianization(const Word& w) {
  IntVec v = IntVec::Zero(2 * w.genus);
  for (int l : w.letters) {
    int idx = std::abs(l) - 1;
    v(idx) += l > 0 ? 1 : -1;
  }
  return v;
}

namespace {

struct Tokenizer {
  std::string text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
};

long parse_exponent(Tokenizer& tz) {
  // optional "^<int>"
  if (tz.peek() != '^') return 1;
  ++tz.pos;
  tz.skip_ws();
  size_t start = tz.pos;
  if (tz.pos < tz.text.size() && (tz.text[tz.pos] == '-' || tz.text[tz.pos] == '+'))
    ++tz.pos;
  while (tz.pos < tz.text.size() &&
         std::isdigit(static_cast<unsigned char>(tz.text[tz.pos])))
    ++tz.pos;
  if (tz.pos == start) throw parse_error("expected integer after '^'");
  return std::atol(tz.text.substr(start, tz.pos - start).c_str());
}

Word parse_sequence(Tokenizer& tz, int genus, bool inside_bracket);

Word parse_item(Tokenizer& tz, int genus) {
  char c = tz.peek();
  if (c == '[') {
    ++tz.pos;
    Word u = parse_sequence(tz, genus, true);
    if (tz.peek() != ',') throw parse_error("expected ',' in commutator");
    ++tz.pos;
    Word v = parse_sequence(tz, genus, true);
    if (tz.peek() != ']') throw parse_error("expected ']' in commutator");
    ++tz.pos;
    long e = parse_exponent(tz);
    return word_pow(word_commutator(u, v), e);
  }
  // generator token
  size_t start = tz.pos;
  while (tz.pos < tz.text.size() &&
         (std::isalnum(static_cast<unsigned char>(tz.text[tz.pos]))))
    ++tz.pos;
  std::string name = tz.text.substr(start, tz.pos - start);
  int idx = gen_index(name);
  if (idx < 0) throw parse_error("bad generator token '" + name + "'");
  if (idx >= 2 * genus)
    throw parse_error("generator '" + name + "' out of range for genus " +
                      std::to_string(genus));
  long e = parse_exponent(tz);
  Word w = word_identity(genus);
  int letter = e >= 0 ? idx + 1 : -(idx + 1);
  for (long k = 0; k < std::labs(e); ++k) push_reduced(w.letters, letter);
  return w;
}

Word parse_sequence(Tokenizer& tz, int genus, bool inside_bracket) {
  Word w = word_identity(genus);
  for (;;) {
    char c = tz.peek();
    if (c == '\0') break;
    if (inside_bracket && (c == ',' || c == ']')) break;
    if (c == ',' || c == ']') throw parse_error("unexpected '" + std::string(1, c) + "'");
    w = word_mul(w, parse_item(tz, genus));
  }
  return w;
}

}  // namespace

Word parse_word(const std::string& text, int genus) {
  if (genus < 1) throw parse_error("genus must be >= 1");
  Tokenizer tz{text, 0};
  Word w = parse_sequence(tz, genus, false);
  if (!tz.done()) throw parse_error("trailing input in word");
  return w;
}

std::string word_to_string(const Word& w) {
  if (w.letters.empty()) return "1";
  std::ostringstream out;
  size_t i = 0;
  bool first = true;
  while (i < w.letters.size()) {
    int l = w.letters[i];
    size_t j = i;
    while (j < w.letters.size() && w.letters[j] == l) ++j;
    long run = static_cast<long>(j - i);
    if (!first) out << " ";
    first = false;
    out << gen_name(std::abs(l) - 1);
    long e = l > 0 ? run : -run;
    if (e != 1) out << "^" << e;
    i = j;
  }
  return out.str();
}

}  // namespace surfalg
