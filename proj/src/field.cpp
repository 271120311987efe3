#include "cmpreproj/field.hpp"

#include "cmpreproj/errors.hpp"

namespace cmpreproj {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t prime) : p(prime) {
  if (!is_prime(prime) || prime > 65521)
    throw InvalidInput("characteristic must be a prime below 65536, got " + std::to_string(prime));
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw Error("division by zero in F_p");
  long long t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    long long q = r / nr;
    long long tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += p;
  return static_cast<Elem>(t);
}

std::string PrimeField::str(Elem a) const { return std::to_string(a); }

RationalField::Elem RationalField::inv(const Elem& a) const {
  if (sgn(a) == 0) throw Error("division by zero in Q");
  return Elem(1) / a;
}

}  // namespace cmpreproj
