"""Registry of memo tables.

All memoized computations go through ``memoized`` so that a test hook which
overlays a perturbed table entry can drop every derived value in one call.
"""
import logging
from threading import RLock
from typing import Callable, List, TypeVar

from cachetools import LRUCache, cached

from app.core.config import settings

logger = logging.getLogger(__name__)

F = TypeVar("F", bound=Callable)

_registry: List[tuple] = []
_registry_lock = RLock()


def memoized(fn: F) -> F:
    cache = LRUCache(maxsize=settings.CACHE_MAXSIZE)
    lock = RLock()
    with _registry_lock:
        _registry.append((cache, lock))
    return cached(cache, lock=lock)(fn)


def clear_caches() -> None:
    with _registry_lock:
        for cache, lock in _registry:
            with lock:
                cache.clear()
    logger.debug(f"cleared {len(_registry)} memo tables")
