#include "torsor/root_datum.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

namespace torsor {

LieType LieType::parse(const std::string& label) {
  if (label.size() < 2) throw std::invalid_argument("lie type: expected e.g. \"A2\", got '" + label + "'");
  char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
  for (size_t i = 1; i < label.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(label[i])))
      throw std::invalid_argument("lie type: malformed rank in '" + label + "'");
  int rank = 0;
  try {
    rank = std::stoi(label.substr(1));
  } catch (const std::exception&) {
    throw std::invalid_argument("lie type: rank out of range in '" + label + "'");
  }
  bool ok = false;
  switch (fam) {
    case 'A': ok = rank >= 1; break;
    case 'B': ok = rank >= 2; break;
    case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 3; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: ok = false;
  }
  if (!ok) throw std::invalid_argument("lie type: unsupported family/rank '" + label + "'");
  return LieType{fam, rank};
}

namespace {

IntMat cartan_matrix(const LieType& t) {
  const int l = t.rank;
  IntMat c = IntMat::Zero(l, l);
  auto chain = [&](int a, int b) { c(a, b) = -1; c(b, a) = -1; };
  for (int i = 0; i < l; ++i) c(i, i) = 2;
  switch (t.family) {
    case 'A':
      for (int i = 0; i + 1 < l; ++i) chain(i, i + 1);
      break;
    case 'B':  // alpha_l short: <alpha_{l-1}, alpha_l^vee> = -2
      for (int i = 0; i + 1 < l; ++i) chain(i, i + 1);
      c(l - 2, l - 1) = -2;
      break;
    case 'C':  // alpha_l long: <alpha_l, alpha_{l-1}^vee> = -2
      for (int i = 0; i + 1 < l; ++i) chain(i, i + 1);
      c(l - 1, l - 2) = -2;
      break;
    case 'D':
      for (int i = 0; i + 1 < l - 1; ++i) chain(i, i + 1);
      chain(l - 3, l - 1);
      break;
    case 'E':
      // Bourbaki: alpha_2 attached to alpha_4; chain 1-3-4-5-...-l.
      chain(0, 2);
      chain(1, 3);
      for (int i = 2; i + 1 < l; ++i) chain(i, i + 1);
      break;
    case 'F':
      chain(0, 1);
      chain(1, 2);
      chain(2, 3);
      c(1, 2) = -2;  // alpha_2 long, alpha_3 short
      break;
    case 'G':
      chain(0, 1);
      c(1, 0) = -3;  // alpha_1 short, alpha_2 long
      break;
    default:
      throw std::logic_error("cartan_matrix: unreachable");
  }
  return c;
}

// Positive roots by closure: grow height by height, deciding r + alpha_i via
// the root string through r in the alpha_i direction.
std::vector<IntVec> generate_positive_roots(const IntMat& cartan) {
  const int l = static_cast<int>(cartan.rows());
  auto key = [](const IntVec& v) {
    std::vector<Int> k(v.data(), v.data() + v.size());
    return k;
  };
  std::set<std::vector<Int>> seen;
  std::vector<IntVec> roots;
  std::vector<IntVec> frontier;
  for (int i = 0; i < l; ++i) {
    IntVec e = IntVec::Zero(l);
    e(i) = 1;
    roots.push_back(e);
    frontier.push_back(e);
    seen.insert(key(e));
  }
  while (!frontier.empty()) {
    std::vector<IntVec> next;
    for (const IntVec& r : frontier) {
      for (int i = 0; i < l; ++i) {
        // q = <r, alpha_i^vee>; p = how far the string extends downward.
        Int q = 0;
        for (int j = 0; j < l; ++j) q += r(j) * cartan(j, i);
        Int p = 0;
        IntVec down = r;
        while (true) {
          down(i) -= 1;
          bool nonneg = (down.array() >= 0).all();
          if (!nonneg || !seen.count(key(down))) break;
          ++p;
        }
        if (p - q > 0) {
          IntVec up = r;
          up(i) += 1;
          if (seen.insert(key(up)).second) next.push_back(up);
        }
      }
    }
    for (const IntVec& r : next) roots.push_back(r);
    frontier = std::move(next);
  }
  std::sort(roots.begin(), roots.end(), [](const IntVec& a, const IntVec& b) {
    Int ha = a.sum(), hb = b.sum();
    if (ha != hb) return ha < hb;
    return std::lexicographical_compare(a.data(), a.data() + a.size(),
                                        b.data(), b.data() + b.size());
  });
  return roots;
}

}  // namespace

RootDatum build_root_datum(const LieType& type) {
  RootDatum rd;
  rd.lie_type = type;
  rd.cartan = cartan_matrix(type);
  rd.positive_roots = generate_positive_roots(rd.cartan);

  const int l = type.rank;
  // The highest root dominates every positive root coordinatewise.
  IntVec top = IntVec::Zero(l);
  for (const IntVec& r : rd.positive_roots) top = top.cwiseMax(r);
  bool top_is_root = false;
  for (const IntVec& r : rd.positive_roots)
    if (r == top) top_is_root = true;
  if (!top_is_root)
    throw std::logic_error("build_root_datum: coordinatewise max is not a root");
  rd.highest_root_coeffs = top;
  rd.coxeter_number = top.sum() + 1;

  rd.inv_cartan = RatMat(to_rat(rd.cartan)).fullPivLu().inverse();
  mpz_class e = 1;
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      mpz_class den = rd.inv_cartan(i, j).den();
      mpz_lcm(e.get_mpz_t(), e.get_mpz_t(), den.get_mpz_t());
    }
  rd.center_exponent = e.get_si();
  return rd;
}

Rat pairing(const ApartmentPoint& theta, const IntVec& root) {
  if (theta.coords.size() != root.size())
    throw std::invalid_argument("pairing: dimension mismatch");
  Rat acc(0);
  for (Eigen::Index j = 0; j < root.size(); ++j) acc += Rat(root(j)) * theta.coords(j);
  return acc;
}

RatVec to_coroot_coords(const RootDatum& rd, const ApartmentPoint& theta) {
  if (theta.rank() != rd.rank())
    throw std::invalid_argument("to_coroot_coords: rank mismatch");
  return rd.inv_cartan * theta.coords;
}

}  // namespace torsor
