#ifndef PB_BASE_CODE_HPP
#define PB_BASE_CODE_HPP

#include "pb/matrix.hpp"

namespace pb {

/// Scalar (n, k) base code given by a k x n generator matrix.
///
/// `rs()` builds a systematic Reed-Solomon generator and checks the MDS
/// property; `from_generator()` accepts any full-shape generator so that
/// non-MDS inputs can still be inspected with `is_mds`.
class BaseCode {
 public:
  static BaseCode rs(std::size_t n, std::size_t k, FieldCtx ctx);
  static BaseCode from_generator(GfMatrix generator);

  std::size_t n() const { return generator_.cols(); }
  std::size_t k() const { return generator_.rows(); }
  FieldCtx ctx() const { return generator_.ctx(); }
  const GfMatrix& generator() const { return generator_; }

  bool operator==(const BaseCode&) const = default;

 private:
  explicit BaseCode(GfMatrix g) : generator_(std::move(g)) {}
  GfMatrix generator_;
};

/// True iff every k columns of the generator are linearly independent.
/// Exhaustive over all minors for n <= 12; above that, samples 2000
/// random minors and treats any singular one as a hard failure.
bool is_mds(const BaseCode& code);

/// True iff generator . x = 0, i.e. x^T is a codeword of the dual code.
bool in_base_dual(const BaseCode& code, const Vec& x);

/// Row-reduces `generator` so its first k columns become I_k.
/// Throws ParameterError if those columns are rank deficient.
GfMatrix systematize(const GfMatrix& generator);

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k);

}  // namespace pb

#endif
