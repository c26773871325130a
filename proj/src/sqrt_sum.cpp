#include "cosetalg/sqrt_sum.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "cosetalg/error.hpp"

namespace cosetalg {

namespace {

constexpr unsigned kSmallPrimeBound = 1000;

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    std::vector<unsigned long> out;
    std::vector<bool> composite(kSmallPrimeBound + 1, false);
    for (unsigned long p = 2; p <= kSmallPrimeBound; ++p) {
      if (composite[p]) continue;
      out.push_back(p);
      for (unsigned long q = p * p; q <= kSmallPrimeBound; q += p) composite[q] = true;
    }
    return out;
  }();
  return primes;
}

// Splits a positive integer m into s^2 * k, pulling out small square factors
// and a full square if one remains. k need not be squarefree.
void extract_squares(mpz_class& m, mpz_class& root) {
  root = 1;
  if (mpz_perfect_square_p(m.get_mpz_t())) {
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), m.get_mpz_t());
    root = s;
    m = 1;
    return;
  }
  for (unsigned long p : small_primes()) {
    unsigned long square = p * p;
    if (m < square) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), square)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), square);
      root *= p;
    }
  }
  if (m > 1 && mpz_perfect_square_p(m.get_mpz_t())) {
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), m.get_mpz_t());
    root *= s;
    m = 1;
  }
}

}  // namespace

SqrtSum::SqrtSum(const Rational& value) {
  if (sgn(value) != 0) terms_.push_back({value, Rational(1)});
}

SqrtSum SqrtSum::sqrt(const Rational& r) {
  if (sgn(r) < 0) throw std::domain_error("SqrtSum::sqrt of a negative rational");
  SqrtSum out;
  if (sgn(r) != 0) out.terms_.push_back({Rational(1), r});
  return out;
}

SqrtSum& SqrtSum::operator+=(const SqrtSum& other) {
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  return *this;
}

SqrtSum& SqrtSum::operator-=(const SqrtSum& other) {
  terms_.reserve(terms_.size() + other.terms_.size());
  for (const auto& t : other.terms_) terms_.push_back({-t.coefficient, t.radicand});
  return *this;
}

SqrtSum& SqrtSum::operator*=(const Rational& factor) {
  if (sgn(factor) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coefficient *= factor;
  return *this;
}

SqrtSum operator*(const SqrtSum& a, const SqrtSum& b) {
  SqrtSum out;
  out.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      out.terms_.push_back({x.coefficient * y.coefficient, x.radicand * y.radicand});
    }
  }
  return out;
}

SqrtSum operator-(SqrtSum a) {
  for (auto& t : a.terms_) t.coefficient = -t.coefficient;
  return a;
}

SqrtSum SqrtSum::canonical() const {
  // sqrt(p/q) = sqrt(p*q) / q, then pull squares out of p*q.
  std::map<mpz_class, Rational> by_radicand;
  for (const auto& t : terms_) {
    if (sgn(t.coefficient) == 0 || sgn(t.radicand) == 0) continue;
    mpz_class m = t.radicand.get_num() * t.radicand.get_den();
    mpz_class root;
    extract_squares(m, root);
    Rational coefficient = t.coefficient * Rational(root, t.radicand.get_den());
    coefficient.canonicalize();
    by_radicand[m] += coefficient;
  }

  // Radicands whose ratio is a square describe the same irrational.
  std::vector<std::pair<mpz_class, Rational>> classes;
  for (auto& [m, c] : by_radicand) {
    bool merged = false;
    for (auto& [rep, coefficient] : classes) {
      mpz_class product = rep * m;
      if (mpz_perfect_square_p(product.get_mpz_t())) {
        // sqrt(m) = sqrt(rep * m) / rep * sqrt(rep)
        mpz_class s;
        mpz_sqrt(s.get_mpz_t(), product.get_mpz_t());
        Rational scale(s, rep);
        scale.canonicalize();
        coefficient += c * scale;
        merged = true;
        break;
      }
    }
    if (!merged) classes.emplace_back(m, c);
  }

  SqrtSum out;
  for (auto& [m, c] : classes) {
    if (sgn(c) != 0) out.terms_.push_back({c, Rational(m)});
  }
  std::sort(out.terms_.begin(), out.terms_.end(),
            [](const Term& a, const Term& b) { return a.radicand < b.radicand; });
  return out;
}

int SqrtSum::sign() const {
  if (terms_.empty()) return 0;
  int first = 0;
  bool uniform = true;
  for (const auto& t : terms_) {
    int s = sgn(t.coefficient);
    if (s == 0 || sgn(t.radicand) == 0) continue;
    if (first == 0) {
      first = s;
    } else if (s != first) {
      uniform = false;
      break;
    }
  }
  if (uniform) return first;

  const std::vector<Term>* terms = &terms_;
  SqrtSum reduced;
  bool exact_checked = false;
  for (mp_bitcnt_t prec = 128;; prec *= 2) {
    mpf_class value(0, prec);
    mpf_class magnitude(0, prec);
    for (const auto& t : *terms) {
      mpf_class root(t.radicand, prec);
      root = ::sqrt(root);
      mpf_class c(t.coefficient, prec);
      mpf_class term(c * root, prec);
      value += term;
      magnitude += abs(term);
    }
    // Generous bound on the accumulated rounding of mpf arithmetic.
    mpf_class bound(magnitude, prec);
    mpf_div_2exp(bound.get_mpf_t(), bound.get_mpf_t(), prec - 16);
    if (abs(value) > bound) return sgn(value);
    if (!exact_checked) {
      reduced = canonical();
      if (reduced.terms_.empty()) return 0;
      terms = &reduced.terms_;
      exact_checked = true;
    }
    if (prec > (1u << 20)) throw std::logic_error("SqrtSum::sign failed to separate from zero");
  }
}

std::optional<Rational> SqrtSum::as_rational() const {
  SqrtSum c = canonical();
  if (c.terms_.empty()) return Rational(0);
  if (c.terms_.size() == 1 && c.terms_[0].radicand == 1) return c.terms_[0].coefficient;
  return std::nullopt;
}

double SqrtSum::to_double() const {
  double out = 0.0;
  for (const auto& t : terms_) out += t.coefficient.get_d() * std::sqrt(t.radicand.get_d());
  return out;
}

std::string SqrtSum::to_string() const {
  SqrtSum c = canonical();
  if (c.terms_.empty()) return "0/1";
  std::string out;
  for (std::size_t i = 0; i < c.terms_.size(); ++i) {
    const auto& t = c.terms_[i];
    if (i > 0) out += " + ";
    out += format_rational(t.coefficient);
    if (t.radicand != 1) out += "*sqrt(" + t.radicand.get_num().get_str() + ")";
  }
  return out;
}

}  // namespace cosetalg
