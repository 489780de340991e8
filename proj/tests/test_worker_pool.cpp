#include <gtest/gtest.h>

#include <atomic>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "sgm/worker_pool.hpp"

namespace sgm {
namespace {

TEST(WorkerPool, CoversEveryIndexExactlyOnce)
{
	for (unsigned threads : {1u, 2u, 7u}) {
		WorkerPool pool(threads);
		EXPECT_EQ(pool.size(), threads);
		for (std::size_t count : {0u, 1u, 5u, 1000u}) {
			std::vector<std::atomic<int>> hits(count);
			pool.parallel_for(count, [&](std::size_t b, std::size_t e) {
				for (std::size_t i = b; i < e; ++i) {
					hits[i].fetch_add(1);
				}
			});
			for (const auto& h : hits) {
				EXPECT_EQ(h.load(), 1);
			}
		}
	}
}

TEST(WorkerPool, ReusableAcrossManyLoops)
{
	WorkerPool pool(4);
	std::atomic<long> sum{0};
	for (int round = 0; round < 500; ++round) {
		pool.parallel_for(64, [&](std::size_t b, std::size_t e) {
			for (std::size_t i = b; i < e; ++i) {
				sum += static_cast<long>(i);
			}
		});
	}
	EXPECT_EQ(sum.load(), 500L * (63 * 64 / 2));
}

TEST(WorkerPool, PropagatesExceptions)
{
	WorkerPool pool(3);
	EXPECT_THROW(pool.parallel_for(100,
	                               [](std::size_t b, std::size_t) {
		                               if (b == 0) {
			                               throw std::runtime_error("boom");
		                               }
	                               }),
	             std::runtime_error);
	// Still usable afterwards.
	std::atomic<int> n{0};
	pool.parallel_for(10, [&](std::size_t b, std::size_t e) { n += static_cast<int>(e - b); });
	EXPECT_EQ(n.load(), 10);
}

TEST(WorkerPool, NullPoolRunsSerially)
{
	int calls = 0;
	parallel_for(nullptr, 42, [&](std::size_t b, std::size_t e) {
		++calls;
		EXPECT_EQ(b, 0u);
		EXPECT_EQ(e, 42u);
	});
	EXPECT_EQ(calls, 1);
}

} // namespace
} // namespace sgm
