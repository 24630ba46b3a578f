#pragma once
//------------------------------------------------------------------------------
//
//   Copyright 2026 The lnprob Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace lnprob {

template <class Job>
void parallel_for(std::size_t count, unsigned workers, Job &&job)
{
  unsigned const threads = static_cast<unsigned>(std::min<std::size_t>(std::max(workers, 1U), count));
  if (threads <= 1)
  {
    for (std::size_t i = 0; i < count; ++i)
    {
      job(i);
    }
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr       error;
  std::mutex               error_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
    {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++)
        {
          try
          {
            job(i);
          }
          catch (...)
          {
            std::lock_guard lock(error_mutex);
            if (!error)
            {
              error = std::current_exception();
            }
          }
        }
      });
    }
  }
  if (error)
  {
    std::rethrow_exception(error);
  }
}

}  // namespace lnprob
