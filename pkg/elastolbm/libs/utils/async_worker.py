"""
Task concurrency
"""
import asyncio
from typing import Callable, List, Sequence, TypeVar

T = TypeVar("T")


async def concurrency_worker(
    jobs: Sequence[Callable[[], T]],
    limit: int = 1,
    return_exceptions: bool = False,
) -> List[T]:
    """
    Run blocking jobs in worker threads, at most `limit` at a time.
    Results keep the order of `jobs`.
    :param jobs:
    :param limit:
    :param return_exceptions:
    :return:
    """
    semaphore = asyncio.Semaphore(max(1, limit))

    async def _run(job: Callable[[], T]) -> T:
        async with semaphore:
            return await asyncio.to_thread(job)

    return await asyncio.gather(*(_run(job) for job in jobs), return_exceptions=return_exceptions)


def run_concurrently(
    jobs: Sequence[Callable[[], T]],
    limit: int = 1,
) -> List[T]:
    """
    Synchronous entry point for callers outside an event loop.
    :param jobs:
    :param limit:
    :return:
    """
    if limit <= 1:
        return [job() for job in jobs]
    return asyncio.run(concurrency_worker(jobs, limit=limit))
