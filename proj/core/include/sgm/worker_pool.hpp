#ifndef SGM_WORKER_POOL_HPP
#define SGM_WORKER_POOL_HPP

#include <condition_variable>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace sgm {

/// Fixed-size pool that runs index-range loops. The calling thread takes part
/// in every loop, so a pool of size 1 owns no extra threads at all.
///
/// Work is split into contiguous chunks; callers only write to disjoint
/// outputs per index, which keeps results independent of the worker count.
class WorkerPool {
public:
	explicit WorkerPool(unsigned threads = std::thread::hardware_concurrency());
	~WorkerPool();

	WorkerPool(const WorkerPool&) = delete;
	WorkerPool& operator=(const WorkerPool&) = delete;

	unsigned size() const noexcept { return static_cast<unsigned>(workers_.size()) + 1; }

	/// Calls body(begin, end) over a partition of [0, count). Blocks until all
	/// chunks finish; rethrows the first exception raised by a chunk.
	void parallel_for(std::size_t count, const std::function<void(std::size_t, std::size_t)>& body);

private:
	void worker_loop();
	void run_chunks();

	std::vector<std::thread> workers_;
	std::mutex mutex_;
	std::condition_variable wake_;
	std::condition_variable done_;

	// Current job, guarded by mutex_.
	const std::function<void(std::size_t, std::size_t)>* body_ = nullptr;
	std::size_t count_ = 0;
	std::size_t chunk_ = 1;
	std::size_t next_ = 0;
	std::size_t active_ = 0;
	std::size_t generation_ = 0;
	std::exception_ptr error_;
	bool stop_ = false;
};

/// Runs body serially when pool is null.
inline void parallel_for(WorkerPool* pool, std::size_t count,
                         const std::function<void(std::size_t, std::size_t)>& body)
{
	if (pool == nullptr || pool->size() == 1 || count < 2) {
		if (count > 0) {
			body(0, count);
		}
		return;
	}
	pool->parallel_for(count, body);
}

} // namespace sgm

#endif
