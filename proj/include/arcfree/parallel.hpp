#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace arcfree {

/// Thread count to use for a request of `threads` (<= 0 means hardware concurrency).
inline int resolve_threads(int threads)
{
	if (threads > 0)
		return threads;
	unsigned hw = std::thread::hardware_concurrency();
	return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Calls fn(i, worker) for every i in [0, count). Work is handed out dynamically, so
/// callers must write results into per-index slots; worker is in [0, threads) and can
/// select per-thread scratch state. The first exception thrown is rethrown.
template <class F>
void parallel_for(std::size_t count, int threads, F &&fn)
{
	int t = std::min<int>(resolve_threads(threads), static_cast<int>(std::max<std::size_t>(count, 1)));
	if (t <= 1)
	{
		for (std::size_t i = 0; i < count; ++i)
			fn(i, 0);
		return;
	}
	std::atomic<std::size_t> next{0};
	std::exception_ptr error;
	std::mutex error_mutex;
	auto body = [&](int worker) {
		for (;;)
		{
			std::size_t i = next.fetch_add(1);
			if (i >= count)
				return;
			try
			{
				fn(i, worker);
			}
			catch (...)
			{
				std::lock_guard lock(error_mutex);
				if (!error)
					error = std::current_exception();
				next = count;
				return;
			}
		}
	};
	std::vector<std::thread> pool;
	for (int w = 1; w < t; ++w)
		pool.emplace_back(body, w);
	body(0);
	for (auto &th : pool)
		th.join();
	if (error)
		std::rethrow_exception(error);
}

} // namespace arcfree
