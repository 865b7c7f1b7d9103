#pragma once

#include <memory>

#include "lerchlab/oracle.hpp"

namespace lerchlab::oracle::detail {

// Shared immutable prefix table holding at least `size` entries.
std::shared_ptr<const HarmonicCache> shared_cache(HarmonicKind kind, int p, Sign b, long size);

}  // namespace lerchlab::oracle::detail
