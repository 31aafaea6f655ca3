#include "surfalg/endo.hpp"

#include <istream>
#include <sstream>

#include "surfalg/errors.hpp"

namespace surfalg {

namespace {

IntMat abelianization_matrix(int genus, const std::vector<Word>& images) {
  IntMat m(2 * genus, 2 * genus);
  for (int j = 0; j < 2 * genus; ++j)
    m.col(j) = abelianization(images[static_cast<size_t>(j)]);
  return m;
}

}  // namespace

GroupEndo make_endo(int genus, std::vector<Word> images) {
  if (static_cast<int>(images.size()) != 2 * genus)
    throw parse_error("make_endo: need one image per generator");
  GroupEndo phi;
  phi.genus = genus;
  phi.images = std::move(images);
  phi.ab = abelianization_matrix(genus, phi.images);
  return phi;
}

GroupEndo identity_endo(int genus) {
  std::vector<Word> images;
  for (int i = 0; i < 2 * genus; ++i)
    images.push_back(word_generator(genus, i));
  return make_endo(genus, std::move(images));
}

GroupEndo inner_endo(const Word& w) {
  std::vector<Word> images;
  for (int i = 0; i < 2 * w.genus; ++i)
    images.push_back(word_conjugate(word_generator(w.genus, i), w));
  return make_endo(w.genus, std::move(images));
}

Word apply_endo(const GroupEndo& phi, const Word& w) {
  Word out = word_identity(phi.genus);
  for (int l : w.letters) {
    const Word& img = phi.images[static_cast<size_t>(std::abs(l) - 1)];
    out = word_mul(out, l > 0 ? img : word_inverse(img));
  }
  return out;
}

GroupEndo compose(const GroupEndo& f, const GroupEndo& g) {
  if (f.genus != g.genus) throw parse_error("compose: genus mismatch");
  std::vector<Word> images;
  for (const Word& w : g.images) images.push_back(apply_endo(f, w));
  return make_endo(f.genus, std::move(images));
}

bool ab_is_identity(const GroupEndo& phi) {
  return phi.ab == int_identity(2 * phi.genus);
}

IntMat symplectic_form_matrix(int genus) {
  IntMat j = int_zero(2 * genus, 2 * genus);
  for (int k = 0; k < genus; ++k) {
    j(2 * k, 2 * k + 1) = 1;
    j(2 * k + 1, 2 * k) = -1;
  }
  return j;
}

bool ab_is_symplectic(const GroupEndo& phi) {
  IntMat j = symplectic_form_matrix(phi.genus);
  return IntMat(phi.ab.transpose() * j * phi.ab) == j;
}

GroupEndo parse_endo(std::istream& in) {
  std::string line;
  int genus = 0;
  std::vector<Word> images;
  bool have_genus = false;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (!have_genus) {
      if (first != "genus")
        throw parse_error("endo file must start with 'genus g'");
      if (!(ls >> genus) || genus < 1)
        throw parse_error("bad genus in endo file");
      have_genus = true;
      for (int i = 0; i < 2 * genus; ++i)
        images.push_back(word_generator(genus, i));
      continue;
    }
    auto arrow = line.find("->");
    if (arrow == std::string::npos)
      throw parse_error("expected 'gen -> word' line: " + line);
    std::istringstream lhs(line.substr(0, arrow));
    std::string gname;
    if (!(lhs >> gname)) throw parse_error("missing generator before '->'");
    std::string extra;
    if (lhs >> extra) throw parse_error("one generator per line: " + line);
    int idx = gen_index(gname);
    if (idx < 0 || idx >= 2 * genus)
      throw parse_error("unknown generator '" + gname + "'");
    images[static_cast<size_t>(idx)] = parse_word(line.substr(arrow + 2), genus);
  }
  if (!have_genus) throw parse_error("empty endo file");
  return make_endo(genus, std::move(images));
}

GroupEndo parse_endo_text(const std::string& text) {
  std::istringstream in(text);
  return parse_endo(in);
}

std::string endo_to_string(const GroupEndo& phi) {
  std::ostringstream out;
  out << "genus " << phi.genus << "\n";
  for (int i = 0; i < 2 * phi.genus; ++i) {
    const Word& img = phi.images[static_cast<size_t>(i)];
    Word gen = word_generator(phi.genus, i);
    if (img.letters == gen.letters) continue;
    out << gen_name(i) << " -> " << word_to_string(img) << "\n";
  }
  return out.str();
}

TorelliEndo validate_endo(const GroupEndo& phi, TorelliMode mode, int m,
                          int max_degree) {
  if (!ab_is_identity(phi))
    throw not_torelli_error("abelianization is not the identity");
  Word r = surface_relator(phi.genus);
  if (mode == TorelliMode::strict) {
    if (!words_conjugate(apply_endo(phi, r), r))
      throw not_torelli_error(
          "relator image is not conjugate to the relator");
    return TorelliEndo{phi, mode, max_degree};
  }
  if (m < 2 || m > max_degree)
    throw parse_error("validate_endo: mod degree must be in [2, cap]");
  Word u = word_mul(apply_endo(phi, r), word_inverse(r));
  auto cls = surface_class(u, m);
  if (cls)
    throw not_torelli_error("relator constraint fails at degree " +
                            std::to_string(cls->degree));
  return TorelliEndo{phi, mode, m};
}

IntVec epsilon_on_word(const GroupEndo& phi, const Word& lift, int n,
                       int max_degree) {
  if (!ab_is_identity(phi))
    throw not_torelli_error("epsilon: abelianization is not the identity");
  if (n + 1 > max_degree)
    throw degree_cap_error("epsilon: target degree exceeds cap");
  const SurfaceLevel& target = surface_level(phi.genus, n + 1, max_degree);
  Word u = word_mul(apply_endo(phi, lift), word_inverse(lift));
  auto cls = surface_class(u, n + 1);
  if (!cls) return IntVec::Zero(target.rank);
  if (cls->degree <= n)
    throw lift_degree_error("epsilon: phi(w)w^-1 has surface degree " +
                            std::to_string(cls->degree) + " <= " +
                            std::to_string(n));
  return cls->coords;
}

IntMat epsilon_matrix(const GroupEndo& phi, int n, int max_degree) {
  const SurfaceLevel& src = surface_level(phi.genus, n, max_degree);
  const SurfaceLevel& dst = surface_level(phi.genus, n + 1, max_degree);
  IntMat m(dst.rank, src.rank);
  for (Index k = 0; k < src.rank; ++k) {
    Word lift =
        canonical_lift(phi.genus, src.basis_words[static_cast<size_t>(k)]);
    m.col(k) = epsilon_on_word(phi, lift, n, max_degree);
  }
  return m;
}

}  // namespace surfalg
