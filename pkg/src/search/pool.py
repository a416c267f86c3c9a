"""Worker pool that shards a search and merges results in shard order"""
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, Sequence

from tqdm import tqdm

logger = logging.getLogger("EcaSeq.search.pool")

# Module-level state shared with worker processes via the pool initializer
_shared: dict[str, Any] = {}


def _init_worker(payload: dict[str, Any]) -> None:
    _shared.clear()
    _shared.update(payload)


def shared(key: str) -> Any:
    """Value installed by the pool initializer for the current process"""
    return _shared[key]


def run_sharded(task: Callable[[Any], Any], shards: Sequence[Any], payload: dict[str, Any],
                workers: int = 1, progress: bool = False, desc: str = "search") -> list:
    """Run task over every shard and return the results in shard order

    The payload is installed once per process; shards should stay small. With
    workers <= 1 everything runs in the calling process.
    """
    results = []
    bar = tqdm(total=len(shards), desc=desc, disable=not progress, file=sys.stderr, leave=False)
    try:
        if workers <= 1 or len(shards) <= 1:
            _init_worker(payload)
            for shard in shards:
                results.append(task(shard))
                bar.update()
        else:
            logger.debug("Running %d shards of %s on %d workers", len(shards), desc, workers)
            with ProcessPoolExecutor(
                max_workers=workers,
                initializer=_init_worker,
                initargs=(payload,),
            ) as executor:
                # map keeps submission order so merging stays deterministic
                for result in executor.map(task, shards):
                    results.append(result)
                    bar.update()
    finally:
        bar.close()
    return results
