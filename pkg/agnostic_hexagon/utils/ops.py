from itertools import islice
from typing import Iterable, Iterator, List, TypeVar

T = TypeVar("T")


def iter_bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of `mask`, in increasing order."""
    index = 0
    while mask:
        if mask & 1:
            yield index
        mask >>= 1
        index += 1


def iter_submasks(mask: int) -> Iterator[int]:
    """Every submask of `mask`, `mask` itself first and 0 last."""
    submask = mask
    while True:
        yield submask
        if submask == 0:
            break
        submask = (submask - 1) & mask


def batch_items(items: Iterable[T], batch_size: int = 1) -> Iterator[List[T]]:
    iterator = iter(items)
    while True:
        batch = list(islice(iterator, batch_size))
        if len(batch) > 0:
            yield batch
        else:
            break
