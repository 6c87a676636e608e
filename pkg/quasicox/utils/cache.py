# -*- coding: utf-8 -*-
# +---------------------------------------------------------------------------+
# |  Copyright (c) 2026 Quasicox Developers                                   |
# |                                                                           |
# |  This file is part of Quasicox.                                           |
# |                                                                           |
# |  Quasicox is free software: you can redistribute it and/or modify         |
# |  it under the terms of the GNU General Public License as published by     |
# |  the Free Software Foundation, either version 3 of the License, or        |
# |  (at your option) any later version.                                      |
# |                                                                           |
# |  Quasicox is distributed in the hope that it will be useful,              |
# |  but WITHOUT ANY WARRANTY; without even the implied warranty of           |
# |  MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the            |
# |  GNU General Public License for more details.                             |
# |                                                                           |
# |  You should have received a copy of the GNU General Public License        |
# |  along with Quasicox.  If not, see <https://www.gnu.org/licenses/>.       |
# +---------------------------------------------------------------------------+

from time import time
from threading import RLock
from functools import wraps

from quasicox.settings.logging import QuasicoxLogger
from quasicox.settings.preferences import pref_cache_enabled

# !-----------------------------------------------------------------------------
# ! Memoisation of pure functions of small hashable arguments (n, t, flags).
# ! Entries expire after CACHE_LIFE seconds once the cache is full.
# !
# ! functools.lru_cache is not used because cached values are shared across
# ! worker threads and must be droppable as a whole (cleanCache, clearCache).
# !-----------------------------------------------------------------------------

CACHE_LIFE              = 60*30
MAX_CACHE_SIZE          = 256
MAIN_CACHE              = {}
CACHE_LOCK              = RLock()
_MISSING                = object()


def keyPart(obj):
    """Type name plus the argument itself when hashable, its repr otherwise."""
    try:
        hash(obj)
        return (type(obj).__qualname__, obj)
    except TypeError:
        return (type(obj).__qualname__, repr(obj))


def cacheKey(name, *args, **kwargs):
    """Tuple of the arguments; equal keys mean equal arguments, not just equal hashes."""
    return (name, tuple(keyPart(arg) for arg in args),
            tuple((kw, keyPart(arg)) for kw, arg in sorted(kwargs.items())))


def cleanCache():
    global MAIN_CACHE
    with CACHE_LOCK:
        cacheSize = len(MAIN_CACHE)
        if cacheSize >= MAX_CACHE_SIZE:
            now = time()
            MAIN_CACHE = {key: item for key, item in MAIN_CACHE.items()
                          if now - item[1] < CACHE_LIFE}
            newCacheSize = len(MAIN_CACHE)
            if newCacheSize < cacheSize:
                QuasicoxLogger.debug("Cache cleaning {} objects => {} objects", cacheSize, newCacheSize)


def clearCache():
    with CACHE_LOCK:
        MAIN_CACHE.clear()


# Function Decorator
# ! Caches the returned value keyed on argument values.
# ! Cached values are shared, so they must be immutable.
def PureFunctionCache(f):
    name = f"{f.__module__}.{f.__qualname__}"

    @wraps(f)
    def wrapper(*args, **kwargs):
        if not pref_cache_enabled():
            return f(*args, **kwargs)
        key = cacheKey(name, *args, **kwargs)
        with CACHE_LOCK:
            (cached, _) = MAIN_CACHE.get(key) or (_MISSING, 0)
        if cached is not _MISSING:
            return cached
        cleanCache()
        cached = f(*args, **kwargs)
        with CACHE_LOCK:
            MAIN_CACHE[key] = (cached, time())
        return cached
    return wrapper
