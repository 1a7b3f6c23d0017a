#pragma once

// Unlabeled time-consistent galled trees: counts E(n, g) by the composition
// recursion, by the bivariate generating function, and by the closed
// expression for the fixed-gall series E_g(t).

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "galleon/bivariate.hpp"
#include "galleon/count_table.hpp"
#include "galleon/kernels.hpp"
#include "galleon/series.hpp"

namespace galleon {

enum class SeriesClass { U, E1, E2, A };

SeriesClass parse_series_class(const std::string& s);
std::string to_string(SeriesClass c);

struct RecursionOptions {
  // Added to the (k - 2) reticulation-position factor of the root-gall term.
  // Only the verification mutation check sets this.
  int position_factor_offset = 0;
  kernels::Exec exec = kernels::Exec::parallel;
};

}  // namespace galleon

namespace galleon::unlabeled {

// Memoized composition recursion. The sums over compositions c of n into k
// parts and d of g-1+k into k parts are evaluated as k-fold convolution
// powers of the table itself; rows are built bottom-up in n.
class Recursion {
 public:
  explicit Recursion(RecursionOptions opts = {});

  // E(n, g); grows the table as needed. n < 1 or g < 0 is a DomainError.
  Integer count(int n, int g);
  // A table covering 1..max_n and 0..max_g.
  const CountTable& table(int max_n, int max_g);

 private:
  void rebuild(int max_g);
  void extend(int max_n);

  RecursionOptions opts_;
  CountTable table_;
  kernels::ConvolutionPowers powers_;
};

CountTable recursion_table(int max_n, int max_g, const RecursionOptions& opts = {});

// The same recursion evaluated term by term over lazily generated
// composition streams. Exponential in n; kept as the reference for tests.
CountTable recursion_table_reference(int max_n, int max_g, const RecursionOptions& opts = {});

Integer count(int n, int g);

// Generating functions (ogf). U and A are solved as fixed points; E1 and E2
// are the closed rational combinations of U.
TruncSeries gf(SeriesClass cls, std::size_t order);
TruncSeries u_series(std::size_t order);
TruncSeries e1_series(const TruncSeries& u);
TruncSeries e2_series(const TruncSeries& u, const TruncSeries& e1);
TruncSeries a_series(std::size_t order);

// G(t, u) = sum E(n, g) t^n u^g.
BivarTruncSeries bivariate(std::size_t t_order, std::size_t u_order);

// Pieces of the expression for E_g(t) before the final division by 1 - U(t).
// The l = 0 and l = g terms of the self-convolution equal U(t) E_g(t) and are
// moved to the left-hand side, giving E_g = total() / (1 - U).
struct DirectTerms {
  TruncSeries convolution;   // 1/2 sum_{l=1}^{g-1} E_l E_{g-l}
  TruncSeries halving;       // 1/2 E_{g/2}(t^2), zero for odd g
  TruncSeries root_gall;     // multiplicity sum with the (3U + K - 2) kernel
  TruncSeries even_index;    // sum over b of E_{g-2b-1} and the 1/(1-U(t^2)) kernel
  TruncSeries tail;          // 1/2 E_{g-1}(t) U(t^2) / (1 - U(t^2))

  TruncSeries total() const;
};

// lower holds E_0 = U, E_1, ..., E_{g-1}, all at one order.
DirectTerms direct_terms(int g, std::span<const TruncSeries> lower);

// f^{(K)}(U) / K! for f(x) = x^3 / (1 - x)^2.
TruncSeries root_gall_kernel(const TruncSeries& u, unsigned K);

// E_0, ..., E_{max_g} via the direct expression.
std::vector<TruncSeries> eg_series_direct_all(int max_g, std::size_t order);
TruncSeries eg_series_direct(int g, std::size_t order);

}  // namespace galleon::unlabeled
