"""Optional componentwise thread parallelism; results keep component order."""

from concurrent.futures import ThreadPoolExecutor


def component_map(fn, items, parallel: bool = False) -> list:
    items = list(items)
    if not parallel or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=min(len(items), 8)) as pool:
        return list(pool.map(fn, items))
