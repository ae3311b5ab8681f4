#pragma once

#include <cstddef>
#include <functional>

namespace leechcert {

/** Worker count used when a caller passes 0. */
unsigned default_threads();

/**
 * Splits [0, n) into `chunks` contiguous ranges and runs body(chunk, begin, end)
 * on up to `threads` workers. Chunk boundaries depend only on n and `chunks`,
 * so results merged per chunk are independent of the thread count.
 */
void parallel_chunks(std::size_t n, std::size_t chunks, unsigned threads,
                     const std::function<void(std::size_t chunk, std::size_t begin, std::size_t end)>& body);

}  // namespace leechcert
