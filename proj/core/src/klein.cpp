#include "famdim/klein.hpp"

#include <cctype>
#include <vector>

#include "famdim/errors.hpp"

namespace famdim::klein {

namespace {

bool odd(const Int& v) {
  return v % 2 != 0;
}

}  // namespace

Element identity() {
  return Element{0, 0};
}

bool is_identity(const Element& x) {
  return x.a_exp == 0 && x.b_exp == 0;
}

Element mul(const Element& x, const Element& y) {
  // a^m b^n a^p b^q = a^(m+p) b^((-1)^p n + q)
  Int n = x.b_exp;
  if (odd(y.a_exp)) {
    n = -n;
  }
  return Element{x.a_exp + y.a_exp, n + y.b_exp};
}

Element inv(const Element& x) {
  Int n = -x.b_exp;
  if (odd(x.a_exp)) {
    n = -n;
  }
  return Element{-x.a_exp, n};
}

Element pow(const Element& x, const Int& k) {
  if (k < 0) {
    return pow(inv(x), -k);
  }
  if (!odd(x.a_exp)) {
    return Element{k * x.a_exp, k * x.b_exp};
  }
  // Odd a exponent: the square kills the b part.
  if (!odd(k)) {
    return Element{k * x.a_exp, 0};
  }
  return Element{k * x.a_exp, x.b_exp};
}

int compare(const Element& x, const Element& y) {
  if (x.a_exp != y.a_exp) {
    return x.a_exp < y.a_exp ? -1 : 1;
  }
  if (x.b_exp != y.b_exp) {
    return x.b_exp < y.b_exp ? -1 : 1;
  }
  return 0;
}

std::string to_string(const Element& x) {
  if (is_identity(x)) {
    return "e";
  }
  std::string out;
  if (x.a_exp != 0) {
    out = x.a_exp == 1 ? "a" : "a^" + x.a_exp.str();
  }
  if (x.b_exp != 0) {
    if (!out.empty()) {
      out += ' ';
    }
    out += x.b_exp == 1 ? "b" : "b^" + x.b_exp.str();
  }
  return out;
}

Element parse_word(const std::string& text) {
  std::size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() &&
           std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
  };
  skip_ws();
  if (i < text.size() && text[i] == '(') {
    // Pair form "(m,n)".
    ++i;
    const auto read_int = [&]() -> Int {
      skip_ws();
      std::string num;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        num += text[i++];
      }
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i]))) {
        num += text[i++];
      }
      if (num.empty() || num == "-" || num == "+") {
        throw ParseError("expected an integer in pair: " + text);
      }
      return Int(num);
    };
    const Int m = read_int();
    skip_ws();
    if (i >= text.size() || text[i] != ',') {
      throw ParseError("expected ',' in pair: " + text);
    }
    ++i;
    const Int n = read_int();
    skip_ws();
    if (i >= text.size() || text[i] != ')') {
      throw ParseError("expected ')' in pair: " + text);
    }
    ++i;
    skip_ws();
    if (i != text.size()) {
      throw ParseError("trailing characters after pair: " + text);
    }
    return Element{m, n};
  }

  Element acc = identity();
  while (true) {
    skip_ws();
    if (i == text.size()) {
      break;
    }
    const char c = text[i++];
    Element gen;
    switch (c) {
      case 'a':
        gen = Element{1, 0};
        break;
      case 'A':
        gen = Element{-1, 0};
        break;
      case 'b':
        gen = Element{0, 1};
        break;
      case 'B':
        gen = Element{0, -1};
        break;
      case 'e':
        continue;
      default:
        throw ParseError(std::string("unexpected character '") + c +
                         "' in word: " + text);
    }
    Int e = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      std::string num;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        num += text[i++];
      }
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i]))) {
        num += text[i++];
      }
      if (num.empty() || num == "-" || num == "+") {
        throw ParseError("expected an exponent in word: " + text);
      }
      e = Int(num);
    }
    acc = mul(acc, pow(gen, e));
  }
  return acc;
}

Cyclic::Cyclic(const Element& g) {
  if (is_identity(g)) {
    throw IdentityInput("Cyclic: the identity generates nothing");
  }
  const Element gi = inv(g);
  gen_ = compare(g, gi) <= 0 ? g : gi;
}

std::optional<Int> solve_power(const Element& g, const Element& target) {
  if (is_identity(g)) {
    return is_identity(target) ? std::optional<Int>(0) : std::nullopt;
  }
  // The candidate exponent is pinned by whichever coordinate of g is
  // nonzero; one verification settles it.
  Int k;
  if (g.a_exp != 0) {
    if (target.a_exp % g.a_exp != 0) {
      return std::nullopt;
    }
    k = target.a_exp / g.a_exp;
  } else {
    if (target.b_exp % g.b_exp != 0) {
      return std::nullopt;
    }
    k = target.b_exp / g.b_exp;
  }
  if (pow(g, k) == target) {
    return k;
  }
  return std::nullopt;
}

bool cyclic_contains(const Cyclic& g, const Cyclic& h) {
  return solve_power(g.generator(), h.generator()).has_value();
}

std::optional<Int> cyclic_index(const Cyclic& g, const Cyclic& h) {
  const auto k = solve_power(g.generator(), h.generator());
  if (!k) {
    return std::nullopt;
  }
  return abs(*k);
}

bool maximal_cyclic(const Element& g) {
  if (is_identity(g)) {
    throw IdentityInput("maximal_cyclic: identity has no cyclic class");
  }
  const Int& m = g.a_exp;
  const Int& n = g.b_exp;
  if (m == 0) {
    // Roots of (0, n) are exactly the (0, d) with d | n.
    return abs(n) == 1;
  }
  // Any root h with h^k == g has k dividing m, so scanning the divisors of
  // |m| (both signs, |k| >= 2) is exhaustive.
  const Int am = abs(m);
  std::vector<Int> divisors;
  for (Int d = 1; d * d <= am; ++d) {
    if (am % d == 0) {
      divisors.push_back(d);
      divisors.push_back(am / d);
    }
  }
  for (const Int& d : divisors) {
    if (d < 2) {
      continue;
    }
    for (int s = 0; s < 2; ++s) {
      const Int k = s == 0 ? d : -d;
      const Int p = m / k;
      Element root{p, 0};
      if (!odd(p)) {
        if (n % k != 0) {
          continue;
        }
        root.b_exp = n / k;
      } else if (odd(k)) {
        root.b_exp = n;
      } else {
        if (n != 0) {
          continue;
        }
      }
      if (pow(root, k) == g) {
        return false;
      }
    }
  }
  return true;
}

DemoReport demo() {
  const Element a{1, 0};
  const Element b{0, 1};
  const Element ab_inverse = mul(a, inv(b));
  const Element square = pow(a, 2);

  DemoReport rep;
  rep.a = a;
  rep.ab_inverse = ab_inverse;
  rep.square = square;
  rep.squares_coincide = pow(ab_inverse, 2) == square;

  const Cyclic ca(a);
  const Cyclic cab(ab_inverse);
  const Cyclic csq(square);
  rep.subgroups_distinct = !(ca == cab);
  rep.both_contain_square =
      cyclic_contains(ca, csq) && cyclic_contains(cab, csq);
  rep.index_in_a = *cyclic_index(ca, csq);
  rep.index_in_ab_inverse = *cyclic_index(cab, csq);
  rep.a_maximal = maximal_cyclic(a);
  rep.ab_inverse_maximal = maximal_cyclic(ab_inverse);
  rep.uniqueness_fails = rep.squares_coincide && rep.subgroups_distinct &&
                         rep.both_contain_square && rep.a_maximal &&
                         rep.ab_inverse_maximal;
  return rep;
}

}  // namespace famdim::klein
