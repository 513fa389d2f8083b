#include "fencetile/identities.hpp"

#include <algorithm>
#include <future>
#include <memory>
#include <mutex>
#include <sstream>

#include "fencetile/riordan.hpp"
#include "fencetile/sequences.hpp"
#include "fencetile/tiling.hpp"
#include "fencetile/triangles.hpp"

namespace fencetile {

namespace {

using i64 = std::int64_t;

BigNat f(i64 n) { return fib_f(n); }
BigNat J(i64 n) { return jacobsthal(n); }
BigNat C(i64 a, i64 b) { return binomial(a, b); }
BigNat delta(bool condition) { return condition ? 1 : 0; }

// Riordan arrays shared by the checks, grown geometrically on demand.
class ArrayCache {
 public:
  explicit ArrayCache(RationalSeries (*p)(), RationalSeries (*q)()) : p_(p), q_(q) {}

  BigNat at(i64 n, i64 k) const {
    if (n < 0 || k < 0 || k > n) return 0;
    std::shared_ptr<const RiordanArray> array;
    {
      std::lock_guard lock(mutex_);
      if (!array_ || array_->rows() < n) {
        const i64 rows = std::max<i64>({n, array_ ? 2 * array_->rows() : 0, 64});
        array_ = std::make_shared<const RiordanArray>(p_(), q_(), rows);
      }
      array = array_;
    }
    return array->at(n, k);
  }

 private:
  RationalSeries (*p_)();
  RationalSeries (*q_)();
  mutable std::mutex mutex_;
  mutable std::shared_ptr<const RiordanArray> array_;
};

BigNat riordan_r(i64 n, i64 k) {
  static const ArrayCache cache(ntile_riordan_p, ntile_riordan_q);
  return cache.at(n, k);
}

BigNat riordan_rbar(i64 n, i64 k) {
  static const ArrayCache cache(board_riordan_p, board_riordan_q);
  return cache.at(n, k);
}

// Double sum of the bifence closed form over a whole row.
BigNat ntile_row_double_sum(i64 n) {
  BigNat total = 0;
  for (i64 k = 0; k <= n; ++k) {
    for (i64 b = std::max<i64>(0, ceil_div(2 * k - n, 2)); b <= floor_div(k, 2); ++b) {
      total += C(n - k + b, k - b) * C(k - b, b);
    }
  }
  return total;
}

BigNat board_row_double_sum(i64 n) {
  BigNat total = 0;
  for (i64 k = 0; k <= n; ++k) {
    for (i64 b = std::max<i64>(0, ceil_div(3 * k - n, 2)); b <= floor_div(k, 2); ++b) {
      total += C(n - 2 * k + b, k - b) * C(k - b, b);
    }
  }
  return total;
}

ParamRange range(std::string name, i64 lo, i64 hi) { return {std::move(name), lo, std::max(lo, hi)}; }

using Side = std::function<BigNat(const Point&)>;
using Valid = std::function<bool(const Point&)>;
using Ranges = std::function<std::vector<ParamRange>(i64)>;

const Valid always = [](const Point&) { return true; };
const Valid k_le_n = [](const Point& p) { return p[1] <= p[0]; };

// Single parameter "name" on [lo, max(max_n, floor)].
Ranges one(std::string name, i64 lo, i64 floor) {
  return [=](i64 max_n) { return std::vector<ParamRange>{range(name, lo, std::max(max_n, floor))}; };
}

// (n, k) on the square [0, max(max_n, floor)]^2.
Ranges two(std::string a, std::string b, i64 floor) {
  return [=](i64 max_n) {
    const i64 hi = std::max(max_n, floor);
    return std::vector<ParamRange>{range(a, 0, hi), range(b, 0, hi)};
  };
}

std::vector<IdentityCheck> build_registry() {
  std::vector<IdentityCheck> reg;
  auto add = [&reg](std::string id, std::string statement, std::vector<std::string> params, Ranges ranges,
                    Valid valid, Side lhs, Side rhs) {
    reg.push_back({std::move(id), std::move(statement), std::move(params), std::move(ranges), std::move(valid),
                   std::move(lhs), std::move(rhs)});
  };

  // ---- board and n-tiling counts ----
  add("T:An", "A_n (recurrence) = cell-level count of n-board tilings", {"n"}, one("n", 0, 4), always,
      [](const Point& p) { return count_board_tilings(p[0]); },
      [](const Point& p) { return count_board_tilings_by_cells(static_cast<int>(p[0]), 1); });
  add("T:A2n", "A_{2n} = f_n^2", {"n"}, one("n", 0, 2), always,
      [](const Point& p) { return count_board_tilings(2 * p[0]); },
      [](const Point& p) { return f(p[0]) * f(p[0]); });
  add("T:A2n+1", "A_{2n+1} = f_n f_{n+1}", {"n"}, one("n", 0, 2), always,
      [](const Point& p) { return count_board_tilings(2 * p[0] + 1); },
      [](const Point& p) { return f(p[0]) * f(p[0] + 1); });
  add("T:Amn", "f_q^{m-r} f_{q+1}^r = cell-level count with (1,m-1)-fences", {"m", "n"},
      [](i64 max_n) { return std::vector<ParamRange>{range("m", 2, 5), range("n", 0, std::max<i64>(max_n, 6))}; },
      always, [](const Point& p) { return count_board_tilings_general(p[0], p[1]); },
      [](const Point& p) { return count_board_tilings_by_cells(static_cast<int>(p[1]), static_cast<int>(p[0] - 1)); });
  add("T:bijJ", "B_n = J_{n+1}", {"n"}, one("n", 0, 2), always,
      [](const Point& p) { return count_n_tilings(p[0]); }, [](const Point& p) { return J(p[0] + 1); });

  // ---- Fibonacci squares and golden rectangles ----
  add("I:Sf2", "sum_{j=0}^n f_j^2 = f_n f_{n+1}", {"n"}, one("n", 0, 2), always,
      [](const Point& p) {
        BigNat s = 0;
        for (i64 j = 0; j <= p[0]; ++j) s += f(j) * f(j);
        return s;
      },
      [](const Point& p) { return golden_rect(p[0]); });
  add("I:Sff", "sum_{j=0}^{2n-1} f_j f_{j+1} = f_{2n}^2 - 1", {"n"}, one("n", 0, 2), always,
      [](const Point& p) {
        BigNat s = 0;
        for (i64 j = 0; j <= 2 * p[0] - 1; ++j) s += f(j) * f(j + 1);
        return s;
      },
      [](const Point& p) { return count_board_tilings(4 * p[0]) - 1; });
  add("I:A2n-1e", "2 sum_{j=0}^{n-2} f_j f_{j+2} - f_{n-2} f_{n-1} = f_n^2 - 1 (n > 1)", {"n"}, one("n", 2, 4),
      [](const Point& p) { return p[0] > 1; },
      [](const Point& p) {
        BigNat s = 0;
        for (i64 j = 0; j <= p[0] - 2; ++j) s += f(j) * f(j + 2);
        return 2 * s - f(p[0] - 2) * f(p[0] - 1);
      },
      [](const Point& p) { return f(p[0]) * f(p[0]) - 1; });
  add("I:A2n-1o", "2 sum_{j=0}^{n-2} f_j f_{j+2} + f_{n-1}^2 = f_n f_{n+1} - 1 (n > 0)", {"n"}, one("n", 1, 3),
      [](const Point& p) { return p[0] > 0; },
      [](const Point& p) {
        BigNat s = 0;
        for (i64 j = 0; j <= p[0] - 2; ++j) s += f(j) * f(j + 2);
        return 2 * s + f(p[0] - 1) * f(p[0] - 1);
      },
      [](const Point& p) { return golden_rect(p[0]) - 1; });
  add("I:Sjff", "f_n f_{n+1} = 1 + floor(n/2) + sum_{j=1}^n j f_{n-j} f_{n-j+1}", {"n"}, one("n", 0, 2), always,
      [](const Point& p) { return count_board_tilings(2 * p[0] + 1); },
      [](const Point& p) {
        BigNat s = 1 + floor_div(p[0], 2);
        for (i64 j = 1; j <= p[0]; ++j) s += j * f(p[0] - j) * f(p[0] - j + 1);
        return s;
      });
  add("L:Cq", "<2n+1,n-r> = <2n-3,n-2-r> + C(n+r,2r) (n >= r >= 0)", {"n", "r"}, two("n", "r", 2), k_le_n,
      [](const Point& p) { return tri_board(2 * p[0] + 1, p[0] - p[1]); },
      [](const Point& p) { return tri_board(2 * p[0] - 3, p[0] - 2 - p[1]) + C(p[0] + p[1], 2 * p[1]); });
  add("I:sumbinff",
      "f_n f_{n+1} = sum_{r<p} C^(r)_n + sum_{j=p}^n C(j+p-1,2p-1) f_{n-j} f_{n+1-j} (p > 0)", {"n", "p"},
      [](i64 max_n) {
        return std::vector<ParamRange>{range("n", 0, std::max<i64>(max_n, 2)),
                                       range("p", 1, std::max<i64>(3, std::min<i64>(6, max_n)))};
      },
      always, [](const Point& p) { return golden_rect(p[0]); },
      [](const Point& p) {
        const i64 n = p[0], q = p[1];
        BigNat s = 0;
        for (i64 r = 0; r < q; ++r) s += seq_c(r, n);
        for (i64 j = q; j <= n; ++j) s += C(j + q - 1, 2 * q - 1) * f(n - j) * f(n + 1 - j);
        return s;
      });

  // ---- Jacobsthal numbers ----
  add("I:SJ", "2 sum_{r=1}^n J_r = J_{n+2} - 1", {"n"}, one("n", 0, 2), always,
      [](const Point& p) {
        BigNat s = 0;
        for (i64 r = 1; r <= p[0]; ++r) s += J(r);
        return 2 * s;
      },
      [](const Point& p) { return J(p[0] + 2) - 1; });
  add("I:SJ2n", "sum_{r=1}^{2n} J_r = J_{2n+1} - 1", {"n"}, one("n", 0, 2), always,
      [](const Point& p) {
        BigNat s = 0;
        for (i64 r = 1; r <= 2 * p[0]; ++r) s += J(r);
        return s;
      },
      [](const Point& p) { return J(2 * p[0] + 1) - 1; });
  add("I:SJ2n-1", "sum_{r=1}^{2n-1} J_r = J_{2n}", {"n"}, one("n", 0, 2), always,
      [](const Point& p) {
        BigNat s = 0;
        for (i64 r = 1; r <= 2 * p[0] - 1; ++r) s += J(r);
        return s;
      },
      [](const Point& p) { return J(2 * p[0]); });
  add("I:JJ", "J_{m+n+1} = J_{m+1} J_{n+1} + 2 J_m J_n", {"m", "n"},
      [](i64 max_n) {
        const i64 hi = std::max<i64>(2, std::min<i64>(30, max_n));
        return std::vector<ParamRange>{range("m", 0, hi), range("n", 0, hi)};
      },
      always, [](const Point& p) { return J(p[0] + p[1] + 1); },
      [](const Point& p) { return J(p[0] + 1) * J(p[1] + 1) + 2 * J(p[0]) * J(p[1]); });
  add("I:sumkJ", "J_{n+1} = ceil((n+1)/2) + sum_{j=1}^{n-1} j J_{n-j}", {"n"}, one("n", 0, 2), always,
      [](const Point& p) { return J(p[0] + 1); },
      [](const Point& p) {
        BigNat s = ceil_div(p[0] + 1, 2);
        for (i64 j = 1; j <= p[0] - 1; ++j) s += j * J(p[0] - j);
        return s;
      });
  add("L:Dq", "<n,n-r>_B = <n-2,n-2-r>_B + C(n-1,r-1) (n >= r > 0)", {"n", "r"}, two("n", "r", 3),
      [](const Point& p) { return p[0] >= p[1] && p[1] > 0; },
      [](const Point& p) { return tri_ntile(p[0], p[0] - p[1]); },
      [](const Point& p) { return tri_ntile(p[0] - 2, p[0] - 2 - p[1]) + C(p[0] - 1, p[1] - 1); });
  add("I:sumbinJ", "J_{n+1} = sum_{r<p} D^(r)_n + sum_{k=p}^n C(k-1,p-1) J_{n+1-k} (p > 0)", {"n", "p"},
      [](i64 max_n) {
        return std::vector<ParamRange>{range("n", 0, std::max<i64>(max_n, 2)),
                                       range("p", 1, std::max<i64>(3, std::min<i64>(6, max_n)))};
      },
      always, [](const Point& p) { return J(p[0] + 1); },
      [](const Point& p) {
        const i64 n = p[0], q = p[1];
        BigNat s = 0;
        for (i64 r = 0; r < q; ++r) s += seq_d(r, n);
        for (i64 k = q; k <= n; ++k) s += C(k - 1, q - 1) * J(n + 1 - k);
        return s;
      });
  add("I:sum2km5J", "J_{n+1} = n + J_{n-1} + sum_{k=3}^n (2k-5) J_{n+1-k} (n > 0)", {"n"}, one("n", 1, 3),
      [](const Point& p) { return p[0] > 0; }, [](const Point& p) { return J(p[0] + 1); },
      [](const Point& p) {
        BigNat s = p[0] + J(p[0] - 1);
        for (i64 k = 3; k <= p[0]; ++k) s += (2 * k - 5) * J(p[0] + 1 - k);
        return s;
      });
  add("I:JF", "J_{n+1} = F_{n+1} + sum_{j=2}^n J_{j-1} F_{n+1-j}", {"n"}, one("n", 0, 2), always,
      [](const Point& p) { return J(p[0] + 1); },
      [](const Point& p) {
        BigNat s = fib(p[0] + 1);
        for (i64 j = 2; j <= p[0]; ++j) s += J(j - 1) * fib(p[0] + 1 - j);
        return s;
      });

  // ---- n-tiling triangle <n,k>_B ----
  add("I:Bn=sum", "sum_k <n,k>_B = J_{n+1}", {"n"}, one("n", 0, 2), always,
      [](const Point& p) {
        BigNat s = 0;
        for (i64 k = 0; k <= p[0]; ++k) s += tri_ntile(p[0], k);
        return s;
      },
      [](const Point& p) { return J(p[0] + 1); });
  add("I:ntile-col0", "<n,0>_B = 1", {"n"}, one("n", 0, 2), always,
      [](const Point& p) { return tri_ntile(p[0], 0); }, [](const Point&) { return BigNat(1); });
  add("I:ntile-col1", "<n,1>_B = n - 1 (n >= 1)", {"n"}, one("n", 1, 3), always,
      [](const Point& p) { return tri_ntile(p[0], 1); }, [](const Point& p) { return BigNat(p[0] - 1); });
  add("I:ntile-col2", "<n,2>_B = C(n-2,2) + n - 1 (n >= 2)", {"n"}, one("n", 2, 4), always,
      [](const Point& p) { return tri_ntile(p[0], 2); },
      [](const Point& p) { return C(p[0] - 2, 2) + p[0] - 1; });
  add("I:ntile-col3", "<n,3>_B = C(n-3,3) + 2 C(n-2,2) (n >= 3)", {"n"}, one("n", 3, 5), always,
      [](const Point& p) { return tri_ntile(p[0], 3); },
      [](const Point& p) { return C(p[0] - 3, 3) + 2 * C(p[0] - 2, 2); });
  add("I:ntile-diag0", "<n,n>_B = [n even]", {"n"}, one("n", 0, 2), always,
      [](const Point& p) { return tri_ntile(p[0], p[0]); }, [](const Point& p) { return delta(p[0] % 2 == 0); });
  add("I:ntile-diag1-odd", "<2m-1,2m-2>_B = m (m > 0)", {"m"}, one("m", 1, 3), always,
      [](const Point& p) { return tri_ntile(2 * p[0] - 1, 2 * p[0] - 2); },
      [](const Point& p) { return BigNat(p[0]); });
  add("I:ntile-diag1-even", "<2m,2m-1>_B = m (m > 0)", {"m"}, one("m", 1, 3), always,
      [](const Point& p) { return tri_ntile(2 * p[0], 2 * p[0] - 1); },
      [](const Point& p) { return BigNat(p[0]); });
  add("I:ntile-diag2-even", "<2m,2m-2>_B = m^2 (m > 0)", {"m"}, one("m", 1, 3), always,
      [](const Point& p) { return tri_ntile(2 * p[0], 2 * p[0] - 2); },
      [](const Point& p) { return BigNat(p[0] * p[0]); });
  add("I:ntile-diag2-odd", "<2m+1,2m-1>_B = m(m+1) (m > 0)", {"m"}, one("m", 1, 3), always,
      [](const Point& p) { return tri_ntile(2 * p[0] + 1, 2 * p[0] - 1); },
      [](const Point& p) { return BigNat(p[0] * (p[0] + 1)); });
  add("I:bin=sum", "C(n,k) = <n,k>_B + <n-1,k-1>_B (n >= k > 0)", {"n", "k"}, two("n", "k", 3),
      [](const Point& p) { return p[0] >= p[1] && p[1] > 0; }, [](const Point& p) { return C(p[0], p[1]); },
      [](const Point& p) { return tri_ntile(p[0], p[1]) + tri_ntile(p[0] - 1, p[1] - 1); });
  add("I:rrB", "<n,k>_B = <n-1,k>_B + <n-1,k-1>_B (n > k > 0)", {"n", "k"}, two("n", "k", 4),
      [](const Point& p) { return p[0] > p[1] && p[1] > 0; }, [](const Point& p) { return tri_ntile(p[0], p[1]); },
      [](const Point& p) { return tri_ntile(p[0] - 1, p[1]) + tri_ntile(p[0] - 1, p[1] - 1); });
  add("I:triDq", "<n,n-r>_B = D^(r)_n (n >= r >= 0)", {"n", "r"}, two("n", "r", 2), k_le_n,
      [](const Point& p) { return tri_ntile(p[0], p[0] - p[1]); }, [](const Point& p) { return seq_d(p[1], p[0]); });
  add("I:rr2B", "<n,k>_B = [n=k=0] + <n-1,k>_B + <n-2,k-1>_B + <n-2,k-2>_B", {"n", "k"}, two("n", "k", 2),
      k_le_n, [](const Point& p) { return tri_ntile(p[0], p[1]); },
      [](const Point& p) {
        const i64 n = p[0], k = p[1];
        return delta(n == 0 && k == 0) + tri_ntile_closed_form(n - 1, k) + tri_ntile_closed_form(n - 2, k - 1) +
               tri_ntile_closed_form(n - 2, k - 2);
      });
  add("T:RnkB", "<n,k>_B = R(n,n-k), R the (1/(1-x^2), x/(1-x)) Riordan array", {"n", "k"}, two("n", "k", 2),
      k_le_n, [](const Point& p) { return tri_ntile(p[0], p[1]); },
      [](const Point& p) { return riordan_r(p[0], p[0] - p[1]); });
  add("I:Rrr", "R(n,k) = [n=k=0] + R(n-1,k-1) + R(n-2,k-1) + R(n-2,k)", {"n", "k"}, two("n", "k", 2), k_le_n,
      [](const Point& p) { return riordan_r(p[0], p[1]); },
      [](const Point& p) {
        const i64 n = p[0], k = p[1];
        return delta(n == 0 && k == 0) + seq_d(k - 1, n - 1) + seq_d(k - 1, n - 2) + seq_d(k, n - 2);
      });
  add("I:RshiftB", "R(n,k) = R(n-2,k) + C(n-1,k-1) (n >= k >= 0, n > 0)", {"n", "k"}, two("n", "k", 2),
      [](const Point& p) { return p[1] <= p[0] && p[0] > 0; }, [](const Point& p) { return riordan_r(p[0], p[1]); },
      [](const Point& p) { return riordan_r(p[0] - 2, p[1]) + C(p[0] - 1, p[1] - 1); });
  add("I:anm", "<n+2m,2m>_B = a(n,m+1)", {"n", "m"},
      [](i64 max_n) {
        return std::vector<ParamRange>{range("n", 0, std::max<i64>(max_n, 2)),
                                       range("m", 0, std::max<i64>(max_n / 2, 2))};
      },
      always, [](const Point& p) { return tri_ntile(p[0] + 2 * p[1], 2 * p[1]); },
      [](const Point& p) { return square_array_a(p[0], p[1] + 1); });
  add("I:gfB", "<n,k>_B = sum_b C(n-k+b,k-b) C(k-b,b)", {"n", "k"}, two("n", "k", 2), k_le_n,
      [](const Point& p) { return tri_ntile(p[0], p[1]); },
      [](const Point& p) { return tri_ntile_closed_form(p[0], p[1]); });
  add("Cor:J", "J_{n+1} = sum_k sum_b C(n-k+b,k-b) C(k-b,b)", {"n"}, one("n", 0, 2), always,
      [](const Point& p) { return J(p[0] + 1); }, [](const Point& p) { return ntile_row_double_sum(p[0]); });
  add("I:nkhalf", "<n,k>_{1/2} = <2n-k,k>_B (n >= k >= 0)", {"n", "k"}, two("n", "k", 2), k_le_n,
      [](const Point& p) { return tri_half(p[0], p[1]); },
      [](const Point& p) { return tri_ntile(2 * p[0] - p[1], p[1]); });

  // ---- board triangle <n,k> ----
  add("I:An=sum", "sum_k <n,k> = A_n", {"n"}, one("n", 0, 2), always,
      [](const Point& p) {
        BigNat s = 0;
        for (i64 k = 0; k <= p[0]; ++k) s += tri_board(p[0], k);
        return s;
      },
      [](const Point& p) { return count_board_tilings(p[0]); });
  add("I:ch=chb", "<n,k> = <n-k,k>_B", {"n", "k"}, two("n", "k", 2), k_le_n,
      [](const Point& p) { return tri_board(p[0], p[1]); }, [](const Point& p) { return tri_ntile(p[0] - p[1], p[1]); });
  add("I:2nk", "<2n,k> = <n,k>_{1/2}", {"n", "k"}, two("n", "k", 2), k_le_n,
      [](const Point& p) { return tri_board_closed_form(2 * p[0], p[1]); },
      [](const Point& p) { return tri_half(p[0], p[1]); });
  add("I:board-col0", "<n,0> = 1 (n > 0)", {"n"}, one("n", 1, 3), always,
      [](const Point& p) { return tri_board(p[0], 0); }, [](const Point&) { return BigNat(1); });
  add("I:board-col1", "<n,1> = n - 2 (n > 2)", {"n"}, one("n", 3, 5), always,
      [](const Point& p) { return tri_board(p[0], 1); }, [](const Point& p) { return BigNat(p[0] - 2); });
  add("I:board-col2", "<n,2> = C(n-4,2) + n - 3 (n > 3)", {"n"}, one("n", 4, 6), always,
      [](const Point& p) { return tri_board(p[0], 2); }, [](const Point& p) { return C(p[0] - 4, 2) + p[0] - 3; });
  add("I:board-col3", "<n,3> = C(n-6,3) + 2 C(n-5,2) (n > 5)", {"n"}, one("n", 6, 8), always,
      [](const Point& p) { return tri_board(p[0], 3); },
      [](const Point& p) { return C(p[0] - 6, 3) + 2 * C(p[0] - 5, 2); });
  add("I:triCq", "<2n+1,n-r> = C^(r)_n (n >= r >= 0)", {"n", "r"}, two("n", "r", 2), k_le_n,
      [](const Point& p) { return tri_board(2 * p[0] + 1, p[0] - p[1]); },
      [](const Point& p) { return seq_c(p[1], p[0]); });
  add("I:rr", "<n,k> = <n-1,k> + <n-3,k-1> + <n-4,k-2> + [n=k=0]", {"n", "k"}, two("n", "k", 2), k_le_n,
      [](const Point& p) { return tri_board(p[0], p[1]); },
      [](const Point& p) {
        const i64 n = p[0], k = p[1];
        return tri_board_closed_form(n - 1, k) + tri_board_closed_form(n - 3, k - 1) +
               tri_board_closed_form(n - 4, k - 2) + delta(n == 0 && k == 0);
      });
  add("I:rrodd",
      "<2n+1,k> = <2n-1,k> + <2n-1,k-1> + <2n-3,k-1> + <2n-3,k-2> - <2n-5,k-3> + [k=n=0]", {"n", "k"},
      [](i64 max_n) {
        const i64 hi = std::max<i64>(max_n / 2, 3);
        return std::vector<ParamRange>{range("n", 0, hi), range("k", 0, 2 * hi + 1)};
      },
      [](const Point& p) { return p[1] <= 2 * p[0] + 1; },
      [](const Point& p) { return tri_board(2 * p[0] + 1, p[1]); },
      [](const Point& p) {
        const i64 n = p[0], k = p[1];
        return tri_board_closed_form(2 * n - 1, k) + tri_board_closed_form(2 * n - 1, k - 1) +
               tri_board_closed_form(2 * n - 3, k - 1) + tri_board_closed_form(2 * n - 3, k - 2) -
               tri_board_closed_form(2 * n - 5, k - 3) + delta(k == 0 && n == 0);
      });
  add("T:Rnk", "<2n+1,k> = Rbar(n,n-k), Rbar the (1/[(1-x)(1-x^2)], x/(1-x)^2) Riordan array", {"n", "k"},
      two("n", "k", 2), k_le_n, [](const Point& p) { return tri_board(2 * p[0] + 1, p[1]); },
      [](const Point& p) { return riordan_rbar(p[0], p[0] - p[1]); });
  add("I:Rbrr", "Rbar(n,k) = [n=k=0] + Rbar(n-1,k) + Rbar(n-1,k-1) + Rbar(n-2,k) + Rbar(n-2,k-1) - Rbar(n-3,k)",
      {"n", "k"}, two("n", "k", 2), k_le_n, [](const Point& p) { return riordan_rbar(p[0], p[1]); },
      [](const Point& p) {
        const i64 n = p[0], k = p[1];
        return delta(n == 0 && k == 0) + seq_c(k, n - 1) + seq_c(k - 1, n - 1) + seq_c(k, n - 2) +
               seq_c(k - 1, n - 2) - seq_c(k, n - 3);
      });
  add("I:RshiftBar", "Rbar(n,k) = Rbar(n-2,k) + C(n+k,2k) (n >= k >= 0)", {"n", "k"}, two("n", "k", 2), k_le_n,
      [](const Point& p) { return riordan_rbar(p[0], p[1]); },
      [](const Point& p) { return riordan_rbar(p[0] - 2, p[1]) + C(p[0] + p[1], 2 * p[1]); });
  add("I:4m+p-00", "<4m,2m> = 1 (m >= 0)", {"m"}, one("m", 0, 2), always,
      [](const Point& p) { return tri_board(4 * p[0], 2 * p[0]); }, [](const Point&) { return BigNat(1); });
  add("I:4m+p-10", "<4m+1,2m> = m + 1 (m >= 0)", {"m"}, one("m", 0, 2), always,
      [](const Point& p) { return tri_board(4 * p[0] + 1, 2 * p[0]); },
      [](const Point& p) { return BigNat(p[0] + 1); });
  add("I:4m+p-20", "<4m+2,2m> = (m+1)^2 (m >= 0)", {"m"}, one("m", 0, 2), always,
      [](const Point& p) { return tri_board(4 * p[0] + 2, 2 * p[0]); },
      [](const Point& p) { return BigNat((p[0] + 1) * (p[0] + 1)); });
  add("I:4m+p-31", "<4m+3,2m+1> = m + 1 (m >= 0)", {"m"}, one("m", 0, 2), always,
      [](const Point& p) { return tri_board(4 * p[0] + 3, 2 * p[0] + 1); },
      [](const Point& p) { return BigNat(p[0] + 1); });
  add("I:4m+p-m1m1", "<4m-1,2m-1> = m (m > 0)", {"m"}, one("m", 1, 3), always,
      [](const Point& p) { return tri_board(4 * p[0] - 1, 2 * p[0] - 1); },
      [](const Point& p) { return BigNat(p[0]); });
  add("I:4m+p-0m1", "<4m,2m-1> = m(m+1) (m > 0)", {"m"}, one("m", 1, 3), always,
      [](const Point& p) { return tri_board(4 * p[0], 2 * p[0] - 1); },
      [](const Point& p) { return BigNat(p[0] * (p[0] + 1)); });
  add("I:gf", "<n,k> = sum_b C(n-2k+b,k-b) C(k-b,b)", {"n", "k"}, two("n", "k", 2), k_le_n,
      [](const Point& p) { return tri_board(p[0], p[1]); },
      [](const Point& p) { return tri_board_closed_form(p[0], p[1]); });
  add("Cor:f2", "f_n^2 = sum_{k<=2n} sum_b C(2n-2k+b,k-b) C(k-b,b)", {"n"}, one("n", 0, 2), always,
      [](const Point& p) { return f(p[0]) * f(p[0]); }, [](const Point& p) { return board_row_double_sum(2 * p[0]); });
  add("Cor:ff", "f_n f_{n+1} = sum_{k<=2n+1} sum_b C(2n+1-2k+b,k-b) C(k-b,b)", {"n"}, one("n", 0, 2), always,
      [](const Point& p) { return f(p[0]) * f(p[0] + 1); },
      [](const Point& p) { return board_row_double_sum(2 * p[0] + 1); });
  add("I:2n+1kbin", "<2n+1,k> = sum_j C(n+1-j,j) C(n-(k-j),k-j) (n >= k >= 0)", {"n", "k"}, two("n", "k", 2),
      k_le_n, [](const Point& p) { return tri_board(2 * p[0] + 1, p[1]); },
      [](const Point& p) { return board_entry_binomial_split(p[0], p[1], RowParity::Odd); });
  add("I:2nkbin", "<2n,k> = sum_j C(n-j,j) C(n-(k-j),k-j) (n >= k >= 0)", {"n", "k"}, two("n", "k", 2), k_le_n,
      [](const Point& p) { return tri_board(2 * p[0], p[1]); },
      [](const Point& p) { return board_entry_binomial_split(p[0], p[1], RowParity::Even); });
  add("Sum:2n+1kbin", "f_n f_{n+1} = sum_k sum_j C(n+1-j,j) C(n-(k-j),k-j)", {"n"}, one("n", 0, 2), always,
      [](const Point& p) { return golden_rect(p[0]); },
      [](const Point& p) {
        BigNat s = 0;
        for (i64 k = 0; k <= p[0]; ++k) s += board_entry_binomial_split(p[0], k, RowParity::Odd);
        return s;
      });
  add("Sum:2nkbin", "f_n^2 = sum_k sum_j C(n-j,j) C(n-(k-j),k-j)", {"n"}, one("n", 0, 2), always,
      [](const Point& p) { return f(p[0]) * f(p[0]); },
      [](const Point& p) {
        BigNat s = 0;
        for (i64 k = 0; k <= p[0]; ++k) s += board_entry_binomial_split(p[0], k, RowParity::Even);
        return s;
      });

  std::sort(reg.begin(), reg.end(), [](const IdentityCheck& a, const IdentityCheck& b) { return a.id < b.id; });
  return reg;
}

IdentityReport run_check(const IdentityCheck& check, const std::optional<RangeOverride>& override_ranges,
                         i64 max_n) {
  IdentityReport report{check.id, check.statement, check.params, check.ranges(max_n), {}, {}};
  if (override_ranges) {
    for (const auto& [name, bounds] : *override_ranges) {
      auto it = std::find_if(report.ranges.begin(), report.ranges.end(),
                             [&](const ParamRange& r) { return r.name == name; });
      if (it == report.ranges.end()) {
        throw std::invalid_argument("identity " + check.id + " has no parameter '" + name + "'");
      }
      it->lo = bounds.first;
      it->hi = bounds.second;
    }
  }
  const std::size_t dims = report.ranges.size();
  bool empty_product = std::any_of(report.ranges.begin(), report.ranges.end(),
                                   [](const ParamRange& r) { return r.lo > r.hi; });
  Point point(dims);
  for (std::size_t d = 0; d < dims; ++d) point[d] = report.ranges[d].lo;
  while (!empty_product) {
    if (check.valid(point)) {
      Evaluation e{point, check.lhs(point), check.rhs(point), false};
      e.ok = e.lhs == e.rhs;
      if (!e.ok) report.failures.push_back(e);
      report.evaluations.push_back(std::move(e));
    }
    // Odometer increment, last parameter fastest.
    std::size_t d = dims;
    while (d > 0) {
      --d;
      if (point[d] < report.ranges[d].hi) {
        ++point[d];
        break;
      }
      point[d] = report.ranges[d].lo;
      if (d == 0) empty_product = true;
    }
    if (dims == 0) break;
  }
  if (report.evaluations.empty()) throw EmptyRange("identity " + check.id + ": no valid points in range");
  return report;
}

}  // namespace

const std::vector<IdentityCheck>& identity_registry() {
  static const std::vector<IdentityCheck> registry = build_registry();
  return registry;
}

const IdentityCheck* find_identity(std::string_view id) {
  const auto& reg = identity_registry();
  auto it = std::find_if(reg.begin(), reg.end(), [&](const IdentityCheck& c) { return c.id == id; });
  return it == reg.end() ? nullptr : &*it;
}

IdentityReport verify_identity(std::string_view id, const std::optional<RangeOverride>& range, i64 max_n) {
  const IdentityCheck* check = find_identity(id);
  if (!check) throw UnknownIdentity("unknown identity '" + std::string(id) + "'");
  return run_check(*check, range, max_n);
}

std::vector<IdentityReport> verify_all(i64 max_n, bool parallel) {
  if (max_n < 1) throw std::invalid_argument("max_n must be at least 1");
  const auto& reg = identity_registry();
  std::vector<IdentityReport> reports;
  reports.reserve(reg.size());
  if (!parallel) {
    for (const auto& check : reg) reports.push_back(run_check(check, std::nullopt, max_n));
    return reports;
  }
  std::vector<std::future<IdentityReport>> pending;
  pending.reserve(reg.size());
  for (const auto& check : reg) {
    pending.push_back(std::async(std::launch::async, [&check, max_n] { return run_check(check, std::nullopt, max_n); }));
  }
  for (auto& p : pending) reports.push_back(p.get());
  return reports;
}

std::string format_point(const std::vector<std::string>& names, const Point& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ' ';
    out += (i < names.size() ? names[i] : "p" + std::to_string(i)) + "=" + std::to_string(p[i]);
  }
  return out;
}

std::string format_reports_text(const std::vector<IdentityReport>& reports) {
  std::ostringstream out;
  std::size_t failed = 0;
  for (const auto& r : reports) {
    if (!r.passed()) ++failed;
    out << (r.passed() ? "PASS " : "FAIL ") << r.id << "  " << r.statement << "  [";
    for (std::size_t i = 0; i < r.ranges.size(); ++i) {
      if (i) out << ", ";
      out << r.ranges[i].name << "=" << r.ranges[i].lo << ".." << r.ranges[i].hi;
    }
    out << "]  " << r.evaluations.size() << " points\n";
    for (const auto& e : r.failures) {
      out << "  mismatch at " << format_point(r.params, e.params) << ": lhs=" << e.lhs << " rhs=" << e.rhs << '\n';
    }
  }
  out << reports.size() - failed << " passed, " << failed << " failed\n";
  return out.str();
}

std::string format_reports_kv(const std::vector<IdentityReport>& reports) {
  std::ostringstream out;
  for (const auto& r : reports) {
    for (const auto& e : r.evaluations) {
      out << "id=" << r.id << ' ' << format_point(r.params, e.params) << " lhs=" << e.lhs << " rhs=" << e.rhs
          << " ok=" << (e.ok ? 1 : 0) << '\n';
    }
  }
  return out.str();
}

}  // namespace fencetile
