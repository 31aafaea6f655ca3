#include "surfalg/surface.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "surfalg/errors.hpp"
#include "surfalg/version.hpp"

namespace surfalg {

LieElement symplectic_element(int genus) {
  LieElement q{2 * genus, {}};
  for (int j = 0; j < genus; ++j) {
    Monomial w;
    w.push_back(static_cast<char>(2 * j));
    w.push_back(static_cast<char>(2 * j + 1));
    q.add(2, w, 1);
  }
  return q;
}

Word canonical_lift(int genus, const Monomial& w) {
  if (w.size() == 1)
    return word_generator(genus, static_cast<unsigned char>(w[0]));
  auto [u, v] = standard_factorization(w);
  return word_commutator(canonical_lift(genus, u), canonical_lift(genus, v));
}

IntVec SurfaceLevel::project(const IntVec& ambient) const {
  IntVec red = echelon_reduce(ech, ambient);
  for (Index p : pivot_rows)
    if (red(p) != 0)
      throw torsion_found_error("surface projection: reduction left a pivot");
  IntVec out(rank);
  Index k = 0;
  size_t pi = 0;
  for (Index r = 0; r < ambient_rank; ++r) {
    if (pi < pivot_rows.size() && pivot_rows[pi] == r) {
      ++pi;
      continue;
    }
    out(k++) = red(r);
  }
  return out;
}

IntVec SurfaceLevel::project(const LieElement& u) const {
  return project(lie_coords_vector(u, degree));
}

IntMat SurfaceLevel::projection_matrix() const {
  IntMat m(rank, ambient_rank);
  for (Index j = 0; j < ambient_rank; ++j) {
    IntVec e = IntVec::Zero(ambient_rank);
    e(j) = 1;
    m.col(j) = project(e);
  }
  return m;
}

IntVec SurfaceLevel::section(Index k) const {
  IntVec e = IntVec::Zero(ambient_rank);
  Index pos = 0;
  size_t pi = 0;
  for (Index r = 0; r < ambient_rank; ++r) {
    if (pi < pivot_rows.size() && pivot_rows[pi] == r) {
      ++pi;
      continue;
    }
    if (pos == k) {
      e(r) = 1;
      return e;
    }
    ++pos;
  }
  throw parse_error("section: basis index out of range");
}

namespace {

std::optional<std::string> cache_dir_impl() {
  const char* env = std::getenv("SURFALG_CACHE_DIR");
  if (!env || !*env) return std::nullopt;
  return std::string(env);
}

std::string cache_path(int g, int n) {
  std::ostringstream out;
  out << *cache_dir_impl() << "/surfalg-level-" << kLevelFormatVersion << "-g"
      << g << "-n" << n << ".txt";
  return out.str();
}

void save_level(const SurfaceLevel& lv) {
  if (!cache_dir_impl()) return;
  std::ofstream out(cache_path(lv.genus, lv.degree));
  if (!out) return;
  out << "surfalg-level " << kLevelFormatVersion << "\n";
  out << lv.genus << " " << lv.degree << "\n";
  write_matrix(out, lv.ideal_raw);
  out << lv.ideal_raw_words.size() << "\n";
  for (const auto& w : lv.ideal_raw_words) out << word_to_string(w) << "\n";
}

std::optional<std::pair<IntMat, std::vector<Word>>> load_level_raw(int g, int n) {
  if (!cache_dir_impl()) return std::nullopt;
  std::ifstream in(cache_path(g, n));
  if (!in) return std::nullopt;
  std::string tag;
  int ver = 0, fg = 0, fn = 0;
  in >> tag >> ver >> fg >> fn;
  if (tag != "surfalg-level" || ver != kLevelFormatVersion || fg != g || fn != n)
    return std::nullopt;
  try {
    IntMat raw = read_matrix(in);
    size_t count = 0;
    in >> count;
    std::getline(in, tag);
    std::vector<Word> words;
    for (size_t i = 0; i < count; ++i) {
      std::string line;
      if (!std::getline(in, line)) return std::nullopt;
      words.push_back(line == "1" ? word_identity(g) : parse_word(line, g));
    }
    return std::make_pair(std::move(raw), std::move(words));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

SurfaceLevel build_level(int genus, int degree);

const SurfaceLevel& level_cached(int genus, int degree) {
  static std::mutex mtx;
  static std::map<std::pair<int, int>, SurfaceLevel> cache;
  auto key = std::make_pair(genus, degree);
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  // Built outside the lock; build_level recurses into lower degrees. A racing
  // duplicate build produces the identical value and emplace keeps the first.
  SurfaceLevel lv = build_level(genus, degree);
  std::lock_guard<std::mutex> lock(mtx);
  return cache.emplace(key, std::move(lv)).first->second;
}

SurfaceLevel finish_level(int genus, int degree, IntMat raw,
                          std::vector<Word> raw_words) {
  SurfaceLevel lv;
  lv.genus = genus;
  lv.degree = degree;
  lv.ambient_rank = static_cast<Index>(lyndon_words(2 * genus, degree).size());
  lv.ideal_raw = std::move(raw);
  lv.ideal_raw_words = std::move(raw_words);
  lv.ech = column_echelon(lv.ideal_raw);
  lv.ideal_divisors = snf_divisors(lv.ideal_raw);
  bool free_quotient =
      lv.ech.unit_pivots &&
      lv.ideal_divisors.size() == lv.ech.pivot_rows.size();
  for (const Int& d : lv.ideal_divisors)
    if (d != 1) free_quotient = false;
  if (!free_quotient)
    throw torsion_found_error(
        "surface_level: quotient not free at genus " + std::to_string(genus) +
        " degree " + std::to_string(degree) +
        " (Labute presentation violated; construction bug)");
  lv.pivot_rows = lv.ech.pivot_rows;
  lv.rank = lv.ambient_rank - static_cast<Index>(lv.pivot_rows.size());
  const auto& words = lyndon_words(2 * genus, degree);
  size_t pi = 0;
  for (Index r = 0; r < lv.ambient_rank; ++r) {
    if (pi < lv.pivot_rows.size() && lv.pivot_rows[pi] == r) {
      ++pi;
      continue;
    }
    lv.basis_words.push_back(words[static_cast<size_t>(r)]);
  }
  return lv;
}

SurfaceLevel build_level(int genus, int degree) {
  const int rank2g = 2 * genus;
  if (degree == 1) {
    SurfaceLevel lv;
    lv.genus = genus;
    lv.degree = 1;
    lv.ambient_rank = rank2g;
    lv.rank = rank2g;
    lv.basis_words = lyndon_words(rank2g, 1);
    lv.ideal_raw = int_zero(rank2g, 0);
    lv.ech = column_echelon(lv.ideal_raw);
    return lv;
  }
  if (auto cached = load_level_raw(genus, degree))
    return finish_level(genus, degree, std::move(cached->first),
                        std::move(cached->second));
  IntMat raw;
  std::vector<Word> raw_words;
  if (degree == 2) {
    // The ideal starts at the symplectic element itself. The echelon pivot
    // would land on the first q-support word; eliminating the last one
    // instead is done by reordering nothing: with a single unit column the
    // echelon pivots on the first nonzero row, so flip the column order of
    // the ambient coordinates... instead, build the echelon directly.
    raw = IntMat(static_cast<Index>(lyndon_words(rank2g, 2).size()), 1);
    raw.col(0) = lie_coords_vector(symplectic_element(genus), 2);
    raw_words = {surface_relator(genus)};
    SurfaceLevel lv = finish_level(genus, degree, raw, raw_words);
    // Move the eliminated coordinate to the lexicographically last word in
    // the support of q (a_g b_g): rebuild the echelon with that pivot.
    Index last_support = -1;
    for (Index r = 0; r < raw.rows(); ++r)
      if (raw(r, 0) != 0) last_support = r;
    if (lv.pivot_rows.size() == 1 && lv.pivot_rows[0] != last_support) {
      lv.ech.cols = raw;
      lv.ech.pivot_rows = {last_support};
      lv.ech.unit_pivots = raw(last_support, 0) == 1;
      if (!lv.ech.unit_pivots)
        throw torsion_found_error("surface_level: q not unimodular");
      lv.pivot_rows = lv.ech.pivot_rows;
      lv.basis_words.clear();
      const auto& words = lyndon_words(rank2g, 2);
      for (Index r = 0; r < lv.ambient_rank; ++r)
        if (r != last_support)
          lv.basis_words.push_back(words[static_cast<size_t>(r)]);
    }
    save_level(lv);
    return lv;
  }
  // degree >= 3: bracket the previous raw spanning set with every generator.
  const SurfaceLevel& prev = level_cached(genus, degree - 1);
  const Index amb = static_cast<Index>(lyndon_words(rank2g, degree).size());
  const Index ncols = static_cast<Index>(prev.ideal_raw.cols()) * rank2g;
  raw = IntMat(amb, ncols);
  raw_words.reserve(static_cast<size_t>(ncols));
  Index col = 0;
  for (Index c = 0; c < prev.ideal_raw.cols(); ++c) {
    LieElement w = lie_from_vector(rank2g, degree - 1, prev.ideal_raw.col(c));
    for (int i = 0; i < rank2g; ++i) {
      LieElement b =
          lie_bracket(LieElement::generator(rank2g, i), w, degree);
      raw.col(col) = lie_coords_vector(b, degree);
      raw_words.push_back(word_commutator(
          word_generator(genus, i), prev.ideal_raw_words[static_cast<size_t>(c)]));
      ++col;
    }
  }
  SurfaceLevel lv = finish_level(genus, degree, std::move(raw),
                                 std::move(raw_words));
  save_level(lv);
  return lv;
}

}  // namespace

const SurfaceLevel& surface_level(int genus, int degree, int max_degree) {
  if (genus < 1) throw parse_error("surface_level: genus must be >= 1");
  if (degree < 1) throw parse_error("surface_level: degree must be >= 1");
  if (degree > max_degree)
    throw degree_cap_error("surface_level: degree " + std::to_string(degree) +
                           " exceeds cap " + std::to_string(max_degree));
  return level_cached(genus, degree);
}

std::optional<std::string> cache_dir() { return cache_dir_impl(); }

std::optional<Word> realize_ideal_class(int genus, int degree,
                                        const IntVec& ambient) {
  const SurfaceLevel& lv = level_cached(genus, degree);
  auto sol = solve_in_image(lv.ideal_raw, ambient);
  if (!sol) return std::nullopt;
  Word w = word_identity(genus);
  for (Index c = 0; c < sol->size(); ++c) {
    const Int& k = (*sol)(c);
    if (k == 0) continue;
    if (!k.fits_slong_p())
      throw parse_error("realize_ideal_class: coefficient too large");
    w = word_mul(w, word_pow(lv.ideal_raw_words[static_cast<size_t>(c)],
                             k.get_si()));
  }
  return w;
}

std::optional<SurfaceClass> surface_class(const Word& w, int cap) {
  Word u = w;
  for (;;) {
    NcPoly p = magnus_expand(u, cap);
    p.add_term(Monomial(), -1);
    int d = p.lowest_degree();
    if (d < 0 || d > cap) return std::nullopt;
    LieElement cls = assoc_coords(p.homogeneous_part(d));
    const SurfaceLevel& lv = level_cached(w.genus, d);
    IntVec amb = lie_coords_vector(cls, d);
    IntVec proj = lv.project(amb);
    if (!is_zero(proj)) return SurfaceClass{d, std::move(proj)};
    auto corr = realize_ideal_class(w.genus, d, amb);
    if (!corr)
      throw torsion_found_error(
          "surface_class: projected-to-zero class not in ideal lattice");
    u = word_mul(u, word_inverse(*corr));
  }
}

}  // namespace surfalg
