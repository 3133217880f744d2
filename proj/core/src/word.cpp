#include "bsg/word.hpp"

#include "bsg/error.hpp"
#include "bsg/tree.hpp"

#include <cctype>
#include <sstream>

namespace bsg {

BSParams BSParams::make(const Int& p, const Int& q) {
  if (p == 0 || q == 0) throw Error(ErrorKind::InvalidParams, "p and q must be nonzero");
  if (abs(p) < 2) throw Error(ErrorKind::InvalidParams, "|p| must be at least 2 (amenable case)");
  if (abs(p) > abs(q)) throw Error(ErrorKind::InvalidParams, "expected |p| <= |q|");
  BSParams b;
  b.p = p;
  b.q = q;
  b.d0 = gcd(p, q);
  b.p0 = p / b.d0;
  b.q0 = q / b.d0;
  return b;
}

std::string BSParams::str() const { return "BS(" + p.str() + "," + q.str() + ")"; }

Word Word::a(const Int& e) {
  Word w;
  w.push('a', e);
  return w;
}

Word Word::t(const Int& e) {
  Word w;
  w.push('t', e);
  return w;
}

void Word::push(char gen, const Int& exp) {
  if (exp == 0) return;
  if (!letters_.empty() && letters_.back().gen == gen) {
    letters_.back().exp += exp;
    if (letters_.back().exp == 0) letters_.pop_back();
    return;
  }
  letters_.push_back({gen, exp});
}

Word& Word::operator*=(const Word& o) {
  for (const auto& l : o.letters_) push(l.gen, l.exp);
  return *this;
}

Word operator*(Word lhs, const Word& rhs) {
  lhs *= rhs;
  return lhs;
}

Word Word::inverse() const {
  Word w;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.push(it->gen, -it->exp);
  return w;
}

Word Word::pow(long long n) const {
  Word base = n >= 0 ? *this : inverse();
  unsigned long long e = n >= 0 ? n : -n;
  Word out;
  for (unsigned long long i = 0; i < e; ++i) out *= base;
  return out;
}

Word commutator(const Word& x, const Word& y) { return x * y * x.inverse() * y.inverse(); }

std::size_t Word::length() const {
  Int n = 0;
  for (const auto& l : letters_) n += abs(l.exp);
  return static_cast<std::size_t>(to_ll(n));
}

Int Word::t_exponent_sum() const {
  Int s = 0;
  for (const auto& l : letters_)
    if (l.gen == 't') s += l.exp;
  return s;
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += ' ';
    if (l.exp == 1) {
      out += l.gen;
    } else if (l.exp == -1) {
      out += static_cast<char>(std::toupper(l.gen));
    } else {
      out += l.gen;
      out += '^';
      out += l.exp.str();
    }
  }
  return out;
}

Word Word::parse(std::string_view text) {
  Word w;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (i < text.size() && (text[i] == '1' || text[i] == 'e')) {
    ++i;
    skip();
    if (i != text.size()) throw Error(ErrorKind::ParseError, "identity token must stand alone");
    return w;
  }
  while (true) {
    skip();
    if (i == text.size()) break;
    char c = text[i++];
    char gen;
    int sign;
    switch (c) {
      case 'a': gen = 'a'; sign = 1; break;
      case 'A': gen = 'a'; sign = -1; break;
      case 't': gen = 't'; sign = 1; break;
      case 'T': gen = 't'; sign = -1; break;
      default:
        throw Error(ErrorKind::ParseError,
                    "unexpected character '" + std::string(1, c) + "' at " + std::to_string(i - 1));
    }
    Int exp = 1;
    skip();
    if (i < text.size() && text[i] == '^') {
      ++i;
      skip();
      std::size_t start = i;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      exp = parse_int(text.substr(start, i - start));
    }
    w.push(gen, exp * sign);
  }
  return w;
}

Word NormalForm::to_word() const {
  Word w;
  w.push('a', k0);
  for (const auto& s : syl) {
    w.push('t', s.e);
    w.push('a', s.k);
  }
  return w;
}

namespace {

void append_a(NormalForm& nf, const Int& m) { nf.trailing() += m; }

void append_t(NormalForm& nf, int e, const BSParams& bs) {
  if (!nf.syl.empty() && nf.syl.back().e == -e) {
    const Int& k = nf.syl.back().k;
    if (nf.syl.back().e == 1 && k % bs.p == 0) {
      // t a^{pj} t^-1 = a^{qj}
      Int add = (k / bs.p) * bs.q;
      nf.syl.pop_back();
      nf.trailing() += add;
      return;
    }
    if (nf.syl.back().e == -1 && k % bs.q == 0) {
      // t^-1 a^{qj} t = a^{pj}
      Int add = (k / bs.q) * bs.p;
      nf.syl.pop_back();
      nf.trailing() += add;
      return;
    }
  }
  Int& k = nf.trailing();
  if (e == 1) {
    // a^{qj} t = t a^{pj}
    Int j = floor_div(k, bs.q);
    k -= j * bs.q;
    nf.syl.push_back({1, j * bs.p});
  } else {
    // a^{pj} t^-1 = t^-1 a^{qj}
    Int j = floor_div(k, bs.p);
    k -= j * bs.p;
    nf.syl.push_back({-1, j * bs.q});
  }
}

}  // namespace

NormalForm normalize(const Word& w, const BSParams& params) {
  NormalForm nf;
  for (const auto& l : w.letters()) {
    if (l.gen == 'a') {
      append_a(nf, l.exp);
    } else {
      int e = l.exp > 0 ? 1 : -1;
      for (Int i = abs(l.exp); i > 0; --i) append_t(nf, e, params);
    }
  }
  return nf;
}

bool is_identity(const Word& w, const BSParams& params) { return normalize(w, params).is_identity(); }

bool equal_elements(const Word& x, const Word& y, const BSParams& params) {
  return normalize(x, params) == normalize(y, params);
}

bool is_pinch_free(const NormalForm& nf, const BSParams& params) {
  for (std::size_t i = 1; i < nf.syl.size(); ++i) {
    int e1 = nf.syl[i - 1].e, e2 = nf.syl[i].e;
    const Int& k = nf.syl[i - 1].k;
    if (e1 == 1 && e2 == -1 && k % params.p == 0) return false;
    if (e1 == -1 && e2 == 1 && k % params.q == 0) return false;
  }
  return true;
}

Rational modular_hom(const Word& w, const BSParams& params) {
  return rpow(params.ratio(), to_ll(w.t_exponent_sum()));
}

bool is_elliptic(const Word& w, const BSParams& params) { return fixed_vertex(w, params).has_value(); }

ConjugationExponents conjugation_exponents(const Word& g, const Word& x, const BSParams& params,
                                           long long bound) {
  if (bound < 1) throw Error(ErrorKind::InvalidParams, "bound must be positive");
  if (is_identity(x, params)) throw Error(ErrorKind::InvalidParams, "x must be nontrivial");
  auto fixed = fixed_vertex(x, params);
  if (!fixed) throw Error(ErrorKind::InvalidParams, "x must be elliptic");
  // h^-1 x h = a^c with h the representative of a fixed vertex.
  Word h = fixed->rep.to_word();
  Word hinv = h.inverse();
  NormalForm cx = normalize(hinv * x * h, params);
  if (!cx.is_a_power()) throw std::logic_error("fixed vertex does not conjugate x into <a>");
  Int c = cx.k0;
  Word gx = g;
  Word ginv = g.inverse();
  for (long long n = 1; n <= bound; ++n) {
    gx *= x;
    NormalForm z = normalize(hinv * gx * ginv * h, params);
    if (z.is_a_power() && z.k0 % c == 0) {
      Int m = z.k0 / c;
      if (abs(Rational(m, n)) != modular_hom(g, params))
        throw std::logic_error("conjugation exponents disagree with the modular homomorphism");
      return {Int(n), m};
    }
  }
  throw Error(ErrorKind::BoundExceeded, "no n <= " + std::to_string(bound) + " works");
}

bool classify_isomorphism(long long p, long long q, long long r, long long s) {
  for (long long eps : {1LL, -1LL}) {
    if (p == eps * r && q == eps * s) return true;
    if (p == eps * s && q == eps * r) return true;
  }
  return false;
}

bool is_amenable(long long p, long long q) { return p == 1 || p == -1 || q == 1 || q == -1; }

Word pinch_reduce(const Word& w, const BSParams& params) {
  Word cur = w;
  bool changed = true;
  while (changed) {
    changed = false;
    const auto& ls = cur.letters();
    for (std::size_t i = 0; i + 2 < ls.size() && !changed; ++i) {
      const Letter& l1 = ls[i];
      const Letter& mid = ls[i + 1];
      const Letter& l2 = ls[i + 2];
      if (l1.gen != 't' || mid.gen != 'a' || l2.gen != 't') continue;
      int s1 = l1.exp > 0 ? 1 : -1;
      int s2 = l2.exp > 0 ? 1 : -1;
      if (s1 == s2) continue;
      Int replacement;
      if (s1 == 1 && mid.exp % params.p == 0) {
        replacement = mid.exp / params.p * params.q;
      } else if (s1 == -1 && mid.exp % params.q == 0) {
        replacement = mid.exp / params.q * params.p;
      } else {
        continue;
      }
      Word next;
      for (std::size_t j = 0; j < i; ++j) next.push(ls[j].gen, ls[j].exp);
      next.push('t', l1.exp - s1);
      next.push('a', replacement);
      next.push('t', l2.exp - s2);
      for (std::size_t j = i + 3; j < ls.size(); ++j) next.push(ls[j].gen, ls[j].exp);
      cur = std::move(next);
      changed = true;
    }
  }
  return cur;
}

bool is_identity_oracle(const Word& w, const BSParams& params) { return pinch_reduce(w, params).empty(); }

}  // namespace bsg
