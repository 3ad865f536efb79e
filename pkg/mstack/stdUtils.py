"""Miscellaneous general-purpose utility functions.

This module provides helpers for extracting summary lines from
docstrings, printing verbose diagnostics and iterating with an optional
progress bar.

"""
from __future__ import annotations
from typing import Any, TypeVar
from collections.abc import Iterable
import sys

from tqdm import tqdm

# pylint: disable=C0103

T = TypeVar('T')


def getSummary(docstring: str | None) -> str | None:
    '''Extract the summary line from a docstring.

    :param docstring: The docstring from which to get the summary line.

    Example::

        >>> def showcaseGetSummary():
        ...     """Provide an example for the `getSummary()` function.
        ...
        ...     This function provides an example to show how to
        ...     extract a summary line from a docstring.
        ...
        ...     """
        ...
        >>> getSummary(showcaseGetSummary.__doc__)
        'Provide an example for the `getSummary()` function.'

    '''
    if docstring is None:
        return None

    return docstring.strip().split('\n', maxsplit=1)[0]


def doNothing(*args: Any, **kwargs: Any) -> None:
    # pylint: disable=W0613
    r"""Do nothing at all.

    :param \*args: Positional arguments.
    :param \**kwargs: Keyword arguments.

    """


def verbosePrint(message: str,
                 verbose: bool,
                 *args: Any,
                 **kwargs: Any) -> None:
    r"""Print a diagnostic message to stderr if `verbose` is :obj:`True`.

    This function behaves like the built-in :func:`print` function, but
    only prints the message if `verbose` is :obj:`True`. Output goes to
    :data:`sys.stderr` unless a `file` keyword is given, so that
    command output on stdout stays reproducible.

    :param message: The message to be printed.
    :param verbose: A flag indicating whether to print the message.
    :param \*args: Additional positional arguments passed to
        the :func:`print` function.
    :param \**kwargs: Additional keyword arguments passed to
        the :func:`print` function.

    Example::

        >>> verbosePrint('Hello, world!', True, file=sys.stdout)
        Hello, world!
        >>> verbosePrint('Hello, world!', False)

    """
    if verbose:
        kwargs.setdefault('file', sys.stderr)
        print(message, *args, **kwargs)
    else:
        doNothing(message, *args, **kwargs)


def progressIter(iterable: Iterable[T],
                 progress: bool,
                 verbose: bool,
                 **kwargs: Any) -> Iterable[T]:
    r"""Wrap `iterable` in a :class:`tqdm` progress bar on stderr.

    The bar is only shown when `progress` is :obj:`True` and `verbose`
    is :obj:`False`, as verbose runs print their own per-item lines.

    :param iterable: The items to iterate over.
    :param progress: Whether a progress bar is wanted at all.
    :param verbose: Whether verbose diagnostics are printed instead.
    :param \**kwargs: Additional keyword arguments passed
        to :class:`tqdm`.

    """
    if progress and not verbose:
        return tqdm(iterable, file=sys.stderr, **kwargs)
    return iterable
