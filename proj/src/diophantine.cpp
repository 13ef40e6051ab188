#include "nefwall/diophantine.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <tuple>

namespace nefwall {

PellSolution pell_fundamental(int n) {
  if (n < 1) throw std::invalid_argument("pell_fundamental needs n >= 1");
  if (is_square(Int(n))) throw square_input_error("pell_fundamental of a perfect square");
  CFExpansion cf = sqrt_cf(Int(n));
  size_t period = cf.period.size();
  int index = static_cast<int>(period % 2 == 0 ? period : 2 * period);
  Convergent c = convergents(Int(n), index).back();
  check(c.p * c.p - Int(n) * c.q * c.q == 1, "fundamental Pell solution check");
  return {c.p, c.q};
}

namespace {

using WU = std::pair<Int, Int>;  // (w, u) with w^2 - n u^2 = C2

WU mat_apply(const Int& X, const Int& Y, int n, const WU& p) {
  return {X * p.first + Int(n) * Y * p.second, Y * p.first + X * p.second};
}

WU mat_apply_inv(const Int& X, const Int& Y, int n, const WU& p) {
  return {X * p.first - Int(n) * Y * p.second, -Y * p.first + X * p.second};
}

// All (w, u) with 0 <= u <= umax on w^2 - n u^2 = C2, both signs of w.
std::vector<WU> seed_window(int n, const Int& C2, const Int& umax) {
  std::vector<WU> out;
  for (Int u = 0; u <= umax; ++u) {
    Int t = Int(n) * u * u + C2;
    if (t < 0 || !is_square(t)) continue;
    Int w = isqrt(t);
    out.push_back({w, u});
    if (w > 0) out.push_back({-w, u});
  }
  return out;
}

// Back-substitution (w, u) -> (d, m): v = (w + 2k)/n must be an odd integer
// and u odd.
std::optional<std::pair<Int, Int>> to_dm(int n, const Int& k, const WU& wu) {
  Int num = wu.first + 2 * k;
  if (num % n != 0) return std::nullopt;
  Int v = num / Int(n);
  if (v % 2 == 0 || wu.second % 2 == 0) return std::nullopt;
  return std::make_pair(exact_div(wu.second - 3, 2), exact_div(v - 1, 2));
}

// Affine (d, m) form of the matrix [[sX, n sY], [sY, sX]] acting on
// (w, u) = (n(2m+1) - 2k, 2d+3).  Returns nullopt when the coefficients are
// not integral (the matrix then fails to preserve the congruence class).
std::optional<AffineMap> affine_from_matrix(int n, const Int& k, const Int& SX, const Int& SY) {
  Int c_num = 3 * SX + Int(n) * SY - 2 * k * SY - 3;
  Int g_inner = 2 * k * (1 - SX);
  if (g_inner % n != 0) return std::nullopt;
  Int g_num = SX + 3 * SY + g_inner / Int(n) - 1;
  if (c_num % 2 != 0 || g_num % 2 != 0) return std::nullopt;
  AffineMap map{SX, Int(n) * SY, c_num / 2, SY, SX, g_num / 2};
  check(map.a * map.f - map.b * map.e == 1, "chain transform must be unimodular");
  return map;
}

using Key = std::tuple<Int, Int, Int, Int>;

Key fundamental_key(const std::pair<Int, Int>& dm) {
  Int ad = abs(dm.first), am = abs(dm.second);
  return {std::max(ad, am), ad + am, dm.first, dm.second};
}

// Walk the chain around `start` and return the element minimizing
// fundamental_key.  Candidates produced by the seed search sit within a few
// steps of the orbit minimum, so a fixed window suffices.
std::pair<Int, Int> canonical_fundamental(const AffineMap& step,
                                          const std::pair<Int, Int>& start) {
  constexpr int kWindow = 12;
  std::pair<Int, Int> best = start;
  Key best_key = fundamental_key(start);
  AffineMap inv = step.inverse();
  std::pair<Int, Int> fwd = start, bwd = start;
  for (int i = 0; i < kWindow; ++i) {
    fwd = step(fwd);
    bwd = inv(bwd);
    for (const auto& cand : {fwd, bwd}) {
      Key key = fundamental_key(cand);
      if (key < best_key) {
        best_key = key;
        best = cand;
      }
    }
  }
  return best;
}

}  // namespace

AffineMap AffineMap::inverse() const {
  check(a * f - b * e == 1, "affine transform must be unimodular");
  return AffineMap{f, -b, b * g - f * c, -e, a, e * c - a * g};
}

std::pair<Int, Int> SolutionChain::element(long j) const {
  std::pair<Int, Int> p = fundamental;
  if (!step.is_identity()) {
    AffineMap map = j >= 0 ? step : step.inverse();
    for (long i = 0, stop = j >= 0 ? j : -j; i < stop; ++i) p = map(p);
  }
  check(eq.satisfied(p), "chain element off the quadratic");
  return p;
}

std::vector<std::pair<Int, Int>> SolutionChain::expand(int depth) const {
  if (depth < 0) throw std::invalid_argument("expand needs depth >= 0");
  check(eq.satisfied(fundamental), "chain fundamental off the quadratic");
  if (step.is_identity()) return {fundamental};
  std::vector<std::pair<Int, Int>> left;
  AffineMap inv = step.inverse();
  std::pair<Int, Int> p = fundamental;
  for (int i = 0; i < depth; ++i) {
    p = inv(p);
    check(eq.satisfied(p), "chain element off the quadratic");
    left.push_back(p);
  }
  std::vector<std::pair<Int, Int>> out(left.rbegin(), left.rend());
  out.push_back(fundamental);
  p = fundamental;
  for (int i = 0; i < depth; ++i) {
    p = step(p);
    check(eq.satisfied(p), "chain element off the quadratic");
    out.push_back(p);
  }
  return out;
}

std::vector<PellSolution> gen_pell_positive_solutions(int n, const Int& N, int limit) {
  if (limit < 1) throw std::invalid_argument("gen_pell needs limit >= 1");
  if (N == 0) throw std::invalid_argument("gen_pell needs N != 0");
  if (n < 1) throw std::invalid_argument("gen_pell needs n >= 1");
  if (is_square(Int(n))) throw square_input_error("gen_pell of a perfect square");

  PellSolution fund = pell_fundamental(n);
  Int ymax = fund.y * (isqrt(abs(N)) + 1);
  std::vector<WU> work = seed_window(n, N, ymax);  // here (w, u) plays (x, y)

  std::set<std::pair<Int, Int>> positive;  // keyed (y, x) for ascending-y output
  auto note = [&](const WU& s) {
    if (s.first > 0 && s.second > 0) positive.insert({s.second, s.first});
  };
  for (const WU& s : work) note(s);
  for (int round = 0; round < limit + 2; ++round) {
    for (WU& s : work) {
      s = mat_apply(fund.x, fund.y, n, s);
      note(s);
    }
  }

  std::vector<PellSolution> out;
  for (const auto& [y, x] : positive) {
    if (static_cast<int>(out.size()) == limit) break;
    check(x * x - Int(n) * y * y == N, "pell solution check");
    out.push_back({x, y});
  }
  return out;
}

std::vector<SolutionChain> quad_with_linear(int n, const Int& k, const Int& C, int depth) {
  if (n < 1) throw std::invalid_argument("quad_with_linear needs n >= 1");
  if (k < 0) throw std::invalid_argument("quad_with_linear needs k >= 0");
  if (depth < 1) throw std::invalid_argument("quad_with_linear needs depth >= 1");

  QuadEq eq{n, k, C};
  Int C2 = 4 * k * k - 4 * k * Int(n) - Int(n) * C;
  std::vector<SolutionChain> chains;

  if (is_square(Int(n))) {
    // w^2 - n u^2 = (w - su)(w + su) with s = sqrt(n): finitely many divisor
    // pairs, each solution its own chain.
    check(C2 != 0, "degenerate reduction w = +-su not supported");
    Int s = isqrt(Int(n));
    std::set<std::pair<Int, Int>> sols;
    for (Int a = 1; a * a <= abs(C2); ++a) {
      if (C2 % a != 0) continue;
      Int b = C2 / a;
      const std::pair<Int, Int> pairs[] = {
          {a, b}, {Int(-a), Int(-b)}, {b, a}, {Int(-b), Int(-a)}};
      for (const auto& [p, q] : pairs) {
        if ((p + q) % 2 != 0 || (q - p) % (2 * s) != 0) continue;
        WU wu{(p + q) / 2, (q - p) / (2 * s)};
        if (auto dm = to_dm(n, k, wu)) sols.insert(*dm);
      }
    }
    AffineMap identity{1, 0, 0, 0, 1, 0};
    for (const auto& dm : sols) {
      check(eq.satisfied(dm), "square-branch solution check");
      chains.push_back(SolutionChain{eq, dm, identity});
    }
  } else {
    PellSolution f = pell_fundamental(n);
    const Int &x1 = f.x, &y1 = f.y;
    Int x2 = x1 * x1 + Int(n) * y1 * y1;
    Int y2 = 2 * x1 * y1;

    // Chain transform: the automorphism, its negative, or its square --
    // whichever first preserves the congruence class w = -2k (mod n) with an
    // integral action on (d, m).  The square always qualifies.
    std::optional<AffineMap> step;
    if ((x1 - 1) * 2 * k % n == 0) step = affine_from_matrix(n, k, x1, y1);
    if (!step && (x1 + 1) * 2 * k % n == 0) step = affine_from_matrix(n, k, -x1, -y1);
    if (!step) step = affine_from_matrix(n, k, x2, y2);
    check(step.has_value(), "no integral chain transform");

    Int umax = y1 * (isqrt(abs(C2)) + 1);
    std::set<std::pair<Int, Int>> fundamentals;
    for (const WU& seed : seed_window(n, C2, umax)) {
      for (int sign : {1, -1}) {
        WU p{sign * seed.first, sign * seed.second};
        // Good solutions recur with period <= 2 along the orbit, so a short
        // scan around each seed reaches every chain.
        std::vector<WU> scan{p};
        WU fwd = p, bwd = p;
        for (int i = 0; i < 3; ++i) {
          fwd = mat_apply(x1, y1, n, fwd);
          bwd = mat_apply_inv(x1, y1, n, bwd);
          scan.push_back(fwd);
          scan.push_back(bwd);
        }
        for (const WU& cand : scan)
          if (auto dm = to_dm(n, k, cand))
            fundamentals.insert(canonical_fundamental(*step, *dm));
      }
    }
    for (const auto& dm : fundamentals) {
      check(eq.satisfied(dm), "chain fundamental check");
      chains.push_back(SolutionChain{eq, dm, *step});
    }
  }

  auto sort_key = [](const SolutionChain& c) {
    const auto& [d, m] = c.fundamental;
    return std::make_tuple(Int(abs(d)), Int(abs(m)), Int(-d), Int(-m));
  };
  std::sort(chains.begin(), chains.end(),
            [&](const SolutionChain& a, const SolutionChain& b) {
              return sort_key(a) < sort_key(b);
            });
  return chains;
}

std::pair<Int, Int> chain_apply(const SolutionChain& chain, std::pair<Int, Int> element,
                                long times) {
  if (!chain.eq.satisfied(element))
    throw std::invalid_argument("element does not satisfy the chain quadratic");
  AffineMap map = times >= 0 ? chain.step : chain.step.inverse();
  for (long i = 0, stop = times >= 0 ? times : -times; i < stop; ++i) {
    element = map(element);
    check(chain.eq.satisfied(element), "chain element off the quadratic");
  }
  return element;
}

}  // namespace nefwall
