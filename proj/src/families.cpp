#include "preper/families.hpp"

#include <algorithm>
#include <stdexcept>

#include "preper/local_bounds.hpp"
#include "preper/preper_search.hpp"

namespace preper {

std::string family_name(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::G4_11: return "4(1,1)";
    case FamilyTag::G4_2: return "4(2)";
    case FamilyTag::G6_11: return "6(1,1)";
    case FamilyTag::G6_2: return "6(2)";
    case FamilyTag::G6_3: return "6(3)";
    case FamilyTag::G8_211: return "8(2,1,1)";
    case FamilyTag::Empty: return "empty";
  }
  throw std::logic_error("family_name: bad tag");
}

std::optional<FamilyTag> family_from_name(const std::string& name) {
  for (FamilyTag t : {FamilyTag::G4_11, FamilyTag::G4_2, FamilyTag::G6_11, FamilyTag::G6_2,
                      FamilyTag::G6_3, FamilyTag::G8_211, FamilyTag::Empty})
    if (family_name(t) == name) return t;
  return std::nullopt;
}

std::pair<long, long> prime_pair(long n) {
  if (n < 1) throw std::invalid_argument("prime_pair: index must be >= 1");
  return {nth_odd_prime(n), nth_odd_prime(n + 1)};
}

std::optional<std::array<long, 3>> ap3_primes_in_interval(long N) {
  if (N < 2) return std::nullopt;
  std::vector<long> ps = sieve_primes(2 * N);
  std::vector<char> flag(static_cast<std::size_t>(2 * N) + 1, 0);
  for (long p : ps) flag[static_cast<std::size_t>(p)] = 1;
  for (long p : ps) {
    if (p <= N) continue;
    for (long k = 1; p + 2 * k < 2 * N; ++k)
      if (flag[static_cast<std::size_t>(p + k)] && flag[static_cast<std::size_t>(p + 2 * k)])
        return std::array<long, 3>{p, p + k, p + 2 * k};
  }
  return std::nullopt;
}

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument("make_instance: " + what);
}

void check_odd_prime(long p) {
  require(p >= 3 && is_prime(p), std::to_string(p) + " is not an odd prime");
}

BigInt sq(const BigInt& x) { return x * x; }

// Closed forms. Inputs are validated before these run; p (and q) are odd
// primes, p != q, and for the progression family p < mid < q with
// mid = (p+q)/2 prime.

struct Forms {
  Rational c;
  std::vector<Rational> points;
};

Forms form_4_11(long p) {
  // c = 1/4 - 1/p^2, points +-1/2 +- 1/p; two fixed points, each with the
  // negative of the other fixed point mapping onto it.
  BigInt P(p);
  Rational c(P * P - 4, sq(2 * P));
  Rational h(1, 2), e(BigInt(1), BigInt(p));
  return {c, {h + e, h - e, -h + e, -h - e}};
}

Forms form_4_2(long p) {
  // c = -3/4 - 1/p^2, same four points, now a 2-cycle with two tails.
  BigInt P(p);
  Rational c(-(3 * P * P + 4), sq(2 * P));
  Rational h(1, 2), e(BigInt(1), BigInt(p));
  return {c, {h + e, h - e, -h + e, -h - e}};
}

Forms form_6_11(long p, long q) {
  BigInt P(p), Q(q);
  BigInt num = -(P * P * P * P - 2 * P * P * P * Q + 2 * P * P * Q * Q - 2 * P * Q * Q * Q + Q * Q * Q * Q);
  Rational c(num, sq(2 * P * Q));
  Rational h(1, 2);
  Rational a(P * P - P * Q + Q * Q, 2 * P * Q);
  Rational b(P * P - Q * Q, 2 * P * Q);
  return {c, {h + a, h - a, -h + a, -h - a, b, -b}};
}

Forms form_6_2(long p, long q) {
  BigInt P(p), Q(q);
  BigInt num = -(P * P * P * P + 2 * P * P * P * Q + 2 * P * P * Q * Q - 2 * P * Q * Q * Q + Q * Q * Q * Q);
  Rational c(num, sq(2 * P * Q));
  Rational h(1, 2);
  Rational a(P * P + Q * Q, 2 * P * Q);
  Rational b(P * P + P * Q - Q * Q, 2 * P * Q);
  return {c, {a, -a, h + b, h - b, -h + b, -h - b}};
}

Forms form_6_3(long p, long q) {
  // Parametrized by tau = p/q; the six points form a 3-cycle and its
  // negatives, which are the tails onto it.
  BigInt P(p), Q(q);
  BigInt P2 = P * P, P3 = P2 * P, P4 = P3 * P, P5 = P4 * P, P6 = P5 * P;
  BigInt Q2 = Q * Q, Q3 = Q2 * Q, Q4 = Q3 * Q, Q5 = Q4 * Q, Q6 = Q5 * Q;
  BigInt num = -(P6 + 2 * P5 * Q + 4 * P4 * Q2 + 8 * P3 * Q3 + 9 * P2 * Q4 + 4 * P * Q5 + Q6);
  Rational c(num, sq(2 * P * Q * (P + Q)));
  BigInt den = 2 * P * Q * (P + Q);
  Rational x1(P3 + 2 * P2 * Q + P * Q2 + Q3, den);
  Rational x2(P3 - P * Q2 - Q3, den);
  Rational x3(P3 + 2 * P2 * Q + 3 * P * Q2 + Q3, den);
  return {c, {x1, -x1, x2, -x2, x3, -x3}};
}

Forms form_8_211(long p, long q) {
  BigInt P(p), Q(q);
  BigInt num = -(P * P * P * P + P * P * Q * Q + Q * Q * Q * Q);
  Rational c(num, sq(2 * P * Q));
  Rational h(1, 2);
  Rational s(P * P + Q * Q, 2 * P * Q), t(P * P - Q * Q, 2 * P * Q);
  return {c, {h + s, h - s, -h + s, -h - s, h + t, h - t, -h + t, -h - t}};
}

std::string expected_label_of(FamilyTag tag) {
  return tag == FamilyTag::Empty ? "0" : family_name(tag);
}

}  // namespace

FamilyInstance make_instance(FamilyTag tag, const std::vector<long>& inputs) {
  FamilyInstance inst;
  inst.tag = tag;
  Forms forms;

  switch (tag) {
    case FamilyTag::G4_11:
    case FamilyTag::G4_2: {
      require(inputs.size() == 1, "expected a single odd prime");
      check_odd_prime(inputs[0]);
      inst.inputs = inputs;
      forms = tag == FamilyTag::G4_11 ? form_4_11(inputs[0]) : form_4_2(inputs[0]);
      break;
    }
    case FamilyTag::G6_11:
    case FamilyTag::G6_2:
    case FamilyTag::G8_211: {
      require(inputs.size() == 2, "expected two distinct odd primes");
      check_odd_prime(inputs[0]);
      check_odd_prime(inputs[1]);
      require(inputs[0] != inputs[1], "the two primes must be distinct");
      inst.inputs = inputs;
      forms = tag == FamilyTag::G6_11  ? form_6_11(inputs[0], inputs[1])
              : tag == FamilyTag::G6_2 ? form_6_2(inputs[0], inputs[1])
                                       : form_8_211(inputs[0], inputs[1]);
      break;
    }
    case FamilyTag::G6_3: {
      // Accept (p, mid, q) or just the endpoints (p, q) of the progression.
      long p = 0, q = 0;
      if (inputs.size() == 3) {
        p = inputs[0];
        q = inputs[2];
        require(inputs[1] * 2 == p + q, "not an arithmetic progression");
      } else {
        require(inputs.size() == 2, "expected a prime progression (p, mid, q) or (p, q)");
        p = inputs[0];
        q = inputs[1];
      }
      require(p < q, "progression must be increasing");
      require((p + q) % 2 == 0, "midpoint (p+q)/2 must be an integer");
      long mid = (p + q) / 2;
      check_odd_prime(p);
      check_odd_prime(mid);
      check_odd_prime(q);
      inst.inputs = {p, mid, q};
      forms = form_6_3(p, q);
      break;
    }
    case FamilyTag::Empty: {
      require(inputs.size() == 1, "expected a single prime");
      require(inputs[0] >= 2 && is_prime(inputs[0]), std::to_string(inputs[0]) + " is not prime");
      inst.inputs = inputs;
      forms.c = Rational(BigInt(1), BigInt(inputs[0]));
      break;
    }
  }

  inst.c = forms.c;
  inst.expected_points = std::move(forms.points);
  std::sort(inst.expected_points.begin(), inst.expected_points.end());
  inst.expected_label = expected_label_of(tag);

  // Construction-time self-check: the closed-form points really are
  // forward-closed (hence preperiodic) and form the advertised graph.
  PrePerGraph expected_graph;
  try {
    expected_graph = PrePerGraph::build(inst.expected_points, QuadMap{inst.c});
  } catch (const std::invalid_argument& e) {
    throw std::logic_error("make_instance: expected points are not forward-closed for c = " +
                           inst.c.str() + ": " + e.what());
  }
  GraphLabel gl = label(expected_graph);
  if (gl.str() != inst.expected_label)
    throw std::logic_error("make_instance: expected points of c = " + inst.c.str() +
                           " form a " + gl.str() + " graph, not " + inst.expected_label);
  inst.expected_certificate = gl.certificate;
  return inst;
}

FamilyInstance family_instance_at(FamilyTag tag, long n) {
  if (n < 1) throw std::invalid_argument("family_instance_at: index must be >= 1");
  switch (tag) {
    case FamilyTag::G4_11:
    case FamilyTag::G4_2:
      return make_instance(tag, {nth_odd_prime(n)});
    case FamilyTag::Empty:
      return make_instance(tag, {nth_prime(n)});
    case FamilyTag::G6_11:
    case FamilyTag::G6_2:
    case FamilyTag::G8_211: {
      auto [p, q] = prime_pair(n);
      return make_instance(tag, {p, q});
    }
    case FamilyTag::G6_3:
      break;
  }

  // Prime progressions ordered by (q, p): for each odd prime q ascending,
  // each odd prime p < q with (p+q)/2 prime.
  long count = 0;
  for (long qi = 1;; ++qi) {
    long q = nth_odd_prime(qi);
    for (long pi = 1; pi < qi; ++pi) {
      long p = nth_odd_prime(pi);
      long mid = (p + q) / 2;  // p, q both odd so the midpoint is integral
      if (!is_prime(mid)) continue;
      if (++count == n) return make_instance(FamilyTag::G6_3, {p, mid, q});
    }
  }
}

VerificationReport verify_instance(const FamilyInstance& inst) {
  VerificationReport rep;
  rep.instance = inst;
  rep.graph = compute_preper(inst.c);
  rep.computed_label = label(rep.graph).str();
  rep.count = rep.graph.size();

  rep.containment = std::all_of(inst.expected_points.begin(), inst.expected_points.end(),
                                [&](const Rational& x) { return rep.graph.contains(x); });
  rep.exact = rep.count == inst.expected_points.size() && rep.containment;

  LocalPartition part = partition(inst.c);
  rep.bound = count_bound(part);
  rep.within_bound = !rep.bound || BigInt(rep.count) <= *rep.bound;
  return rep;
}

}  // namespace preper
