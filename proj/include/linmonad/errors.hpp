#pragma once

#include <stdexcept>
#include <string>

namespace linmonad {

struct MonadError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Matrix shapes disagree with the declared (v, w, u).
struct DimensionMismatchError : MonadError {
  using MonadError::MonadError;
};

/// An operation requiring a valid monad was handed an invalid one.
struct InvalidMonadError : MonadError {
  using MonadError::MonadError;
};

/// Hyperplane restriction broke surjectivity of beta or injectivity of alpha.
struct InvalidRestrictionError : MonadError {
  using MonadError::MonadError;
};

struct UnknownGalleryError : MonadError {
  using MonadError::MonadError;
};

/// Sampler gave up; the requested parameters are infeasible or nearly so.
struct ExhaustedTriesError : MonadError {
  using MonadError::MonadError;
};

/// Operation defined only for locally-free cohomology sheaves.
struct NotLocallyFreeError : MonadError {
  using MonadError::MonadError;
};

}  // namespace linmonad
