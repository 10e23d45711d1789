#!/usr/bin/env python3
"""
Streaming enumeration of k-compositions
Order: lexicographic over the marker board with J < S1 < ... < Sk
"""

import itertools
import logging
from typing import Iterator, List

from joblib import Parallel, delayed

from .bijections import parts_from_markers
from .compositions import ColoredComposition, MarkerSequence, check_k, check_n

logger = logging.getLogger('multicomp.core')


def _boards(k: int, length: int) -> Iterator[tuple]:
    return itertools.product(range(k + 1), repeat=length)


def _markers(k: int, n: int) -> Iterator[MarkerSequence]:
    for markers in _boards(k, n - 1):
        yield MarkerSequence.trusted(k, n, markers)


def _compositions(k: int, n: int, prefix: tuple = ()) -> Iterator[ColoredComposition]:
    trusted = ColoredComposition.trusted
    for rest in _boards(k, n - 1 - len(prefix)):
        yield trusted(k, parts_from_markers(prefix + rest))


def enumerate_markers(k: int, n: int) -> Iterator[MarkerSequence]:
    """Stream every marker board of length n in lexicographic order"""
    check_k(k)
    check_n(n)
    return _markers(k, n)


def enumerate_compositions(k: int, n: int) -> Iterator[ColoredComposition]:
    """Stream each k-composition of n exactly once; (k+1)^(n-1) items, lazily

    Arguments are checked eagerly so a bad k or n fails at the call, not at
    the first next().
    """
    check_k(k)
    check_n(n)
    logger.debug(f"Enumerating {(k + 1) ** (n - 1)} compositions for k={k}, n={n}")
    return _compositions(k, n)


def partitioned_streams(k: int, n: int) -> List[Iterator[ColoredComposition]]:
    """Split the enumeration into independent streams, one per first marker

    Concatenating the streams in list order reproduces enumerate_compositions.
    For n = 1 there is a single stream holding 1_1.
    """
    check_k(k)
    check_n(n)
    if n == 1:
        return [_compositions(k, 1)]
    return [_compositions(k, n, (first,)) for first in range(k + 1)]


def _drain(stream: Iterator[ColoredComposition]) -> int:
    count = 0
    for _ in stream:
        count += 1
    return count


def count_compositions_parallel(k: int, n: int, jobs: int = 1) -> int:
    """Count by draining the partitioned streams on a joblib worker pool"""
    streams = partitioned_streams(k, n)
    counts = Parallel(n_jobs=jobs, prefer="threads")(delayed(_drain)(stream) for stream in streams)
    logger.debug(f"Partition counts for k={k}, n={n}: {counts}")
    return sum(counts)
