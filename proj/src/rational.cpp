#include "torsor/rational.hpp"

#include <ostream>

namespace torsor {

Rat Rat::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rat::parse: empty string");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rat(mpq_class(mpz_class(s)));
    }
    mpz_class num(s.substr(0, slash));
    mpz_class den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("Rat::parse: zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Rat(std::move(q));
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("Rat::parse: malformed rational '" + s + "'");
  }
}

std::string Rat::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace torsor
