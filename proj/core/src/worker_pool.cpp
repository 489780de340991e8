#include "sgm/worker_pool.hpp"

#include <algorithm>

namespace sgm {

WorkerPool::WorkerPool(unsigned threads)
{
	const unsigned total = std::max(1u, threads);
	workers_.reserve(total - 1);
	for (unsigned i = 1; i < total; ++i) {
		workers_.emplace_back([this] { worker_loop(); });
	}
}

WorkerPool::~WorkerPool()
{
	{
		std::lock_guard lock(mutex_);
		stop_ = true;
	}
	wake_.notify_all();
	for (auto& t : workers_) {
		t.join();
	}
}

void WorkerPool::parallel_for(std::size_t count, const std::function<void(std::size_t, std::size_t)>& body)
{
	if (count == 0) {
		return;
	}
	{
		std::lock_guard lock(mutex_);
		body_ = &body;
		count_ = count;
		// A few chunks per thread smooths out uneven rows.
		chunk_ = std::max<std::size_t>(1, count / (static_cast<std::size_t>(size()) * 4));
		next_ = 0;
		active_ = 0;
		error_ = nullptr;
		++generation_;
	}
	wake_.notify_all();
	run_chunks();

	std::unique_lock lock(mutex_);
	done_.wait(lock, [this] { return next_ >= count_ && active_ == 0; });
	body_ = nullptr;
	if (error_) {
		auto e = error_;
		error_ = nullptr;
		std::rethrow_exception(e);
	}
}

void WorkerPool::run_chunks()
{
	for (;;) {
		std::size_t begin = 0;
		std::size_t end = 0;
		const std::function<void(std::size_t, std::size_t)>* body = nullptr;
		{
			std::lock_guard lock(mutex_);
			if (body_ == nullptr || next_ >= count_) {
				return;
			}
			begin = next_;
			end = std::min(count_, begin + chunk_);
			next_ = end;
			++active_;
			body = body_;
		}
		try {
			(*body)(begin, end);
		} catch (...) {
			std::lock_guard lock(mutex_);
			if (!error_) {
				error_ = std::current_exception();
			}
		}
		bool finished = false;
		{
			std::lock_guard lock(mutex_);
			--active_;
			finished = next_ >= count_ && active_ == 0;
		}
		if (finished) {
			done_.notify_all();
		}
	}
}

void WorkerPool::worker_loop()
{
	std::size_t seen = 0;
	for (;;) {
		{
			std::unique_lock lock(mutex_);
			wake_.wait(lock, [&] { return stop_ || generation_ != seen; });
			if (stop_) {
				return;
			}
			seen = generation_;
		}
		run_chunks();
	}
}

} // namespace sgm
