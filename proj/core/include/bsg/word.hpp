#pragma once

#include "bsg/numeric.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bsg {

// BS(p,q) = <a,t | t a^p t^-1 = a^q> with 2 <= |p| <= |q|.
struct BSParams {
  Int p, q;
  Int d0, p0, q0;

  static BSParams make(const Int& p, const Int& q);
  Int abs_p() const { return abs(p); }
  Int abs_q() const { return abs(q); }
  // |q/p|, the value of the modular homomorphism on t.
  Rational ratio() const { return Rational(abs_q(), abs_p()); }
  std::string str() const;
  bool operator==(const BSParams& o) const { return p == o.p && q == o.q; }
};

struct Letter {
  char gen;  // 'a' or 't'
  Int exp;   // nonzero
  bool operator==(const Letter& o) const { return gen == o.gen && exp == o.exp; }
};

// Run-length word over {a, t}; adjacent letters always have distinct generators.
class Word {
 public:
  Word() = default;
  static Word a(const Int& e = 1);
  static Word t(const Int& e = 1);
  static Word parse(std::string_view text);

  void push(char gen, const Int& exp);
  Word& operator*=(const Word& o);
  Word inverse() const;
  Word pow(long long n) const;

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t length() const;  // sum of |exponents|
  Int t_exponent_sum() const;
  std::string str() const;
  bool operator==(const Word& o) const { return letters_ == o.letters_; }

 private:
  std::vector<Letter> letters_;
};

Word operator*(Word lhs, const Word& rhs);
Word commutator(const Word& x, const Word& y);

struct Syllable {
  int e;  // +1 or -1
  Int k;  // a-exponent following t^e
  bool operator==(const Syllable& o) const { return e == o.e && k == o.k; }
};

// a^{k0} t^{e1} a^{k1} ... t^{en} a^{kn}. The exponent preceding t is reduced into
// [0,|q|) and the one preceding t^-1 into [0,|p|); the trailing exponent is free.
// With this transversal choice the pinch-free form is unique.
struct NormalForm {
  Int k0 = 0;
  std::vector<Syllable> syl;

  bool is_identity() const { return k0 == 0 && syl.empty(); }
  bool is_a_power() const { return syl.empty(); }
  const Int& trailing() const { return syl.empty() ? k0 : syl.back().k; }
  Int& trailing() { return syl.empty() ? k0 : syl.back().k; }
  Word to_word() const;
  std::string str() const { return to_word().str(); }
  bool operator==(const NormalForm& o) const { return k0 == o.k0 && syl == o.syl; }
  bool operator<(const NormalForm& o) const { return str() < o.str(); }
};

NormalForm normalize(const Word& w, const BSParams& params);
bool is_identity(const Word& w, const BSParams& params);
bool equal_elements(const Word& x, const Word& y, const BSParams& params);
// True iff the normal form has no pinch (checked independently of how it was built).
bool is_pinch_free(const NormalForm& nf, const BSParams& params);

// |q/p|^(t-exponent sum)
Rational modular_hom(const Word& w, const BSParams& params);

bool is_elliptic(const Word& w, const BSParams& params);

struct ConjugationExponents {
  Int n, m;
};
// Smallest n in [1,bound] with g x^n g^-1 = x^m. Throws BoundExceeded.
ConjugationExponents conjugation_exponents(const Word& g, const Word& x, const BSParams& params,
                                           long long bound);

bool classify_isomorphism(long long p, long long q, long long r, long long s);
bool is_amenable(long long p, long long q);

// Independent oracle: remove pinches anywhere in the word until none remain.
// The element is trivial iff the result is the empty word.
Word pinch_reduce(const Word& w, const BSParams& params);
bool is_identity_oracle(const Word& w, const BSParams& params);

}  // namespace bsg
