# pylint: disable=C0103, C0114
from __future__ import annotations
from collections.abc import Iterable
from fractions import Fraction

from mstack import error, normalizers


class HNType:
    """Harder-Narasimhan type of a vector bundle.

    The type lists the ``(rank, degree)`` of the semistable subquotients
    of the Harder-Narasimhan filtration, in order of strictly decreasing
    slope.

    :param blocks: ``(rank, degree)`` pairs.
    :raises ValueError: If slopes do not strictly decrease or a rank is
        not positive.

    Example::

        >>> hnType = HNType([(1, 2), (2, 1), (1, -3)])
        >>> hnType.slopes
        (Fraction(2, 1), Fraction(1, 2), Fraction(-3, 1))

    """

    def __init__(self, blocks: Iterable[tuple[int, int]]) -> None:
        self._blocks = normalizers.normalizeBlocks(blocks)

    def __repr__(self) -> str:
        return f"<{self.__class__.__name__} {self._blocks}>"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HNType):
            return NotImplemented
        return self._blocks == other.blocks

    def __lt__(self, other: HNType) -> bool:
        return self._blocks < other.blocks

    def __hash__(self) -> int:
        return hash(self._blocks)

    def __len__(self) -> int:
        return len(self._blocks)

    @property
    def blocks(self) -> tuple[tuple[int, int], ...]:
        """``(rank, degree)`` of the subquotients."""
        return self._blocks

    @property
    def rank(self) -> int:
        """Total rank."""
        return sum(n for n, _ in self._blocks)

    @property
    def degree(self) -> int:
        """Total degree."""
        return sum(d for _, d in self._blocks)

    @property
    def slopes(self) -> tuple[Fraction, ...]:
        """Slopes ``degree / rank`` of the subquotients."""
        return tuple(Fraction(d, n) for n, d in self._blocks)

    @property
    def isSemistable(self) -> bool:
        """Whether the type has a single block."""
        return len(self._blocks) == 1

    @property
    def polygon(self) -> HNPolygon:
        """The Harder-Narasimhan polygon."""
        vertices = [(0, 0)]
        for n, d in self._blocks:
            x, y = vertices[-1]
            vertices.append((x + n, y + d))
        return HNPolygon(vertices)


class HNPolygon:
    """Concave polygon of partial ``(rank, degree)`` sums.

    :param vertices: Integer points starting at ``(0, 0)`` with strictly
        increasing abscissae and strictly decreasing slopes.
    :raises ValueError: If the vertices do not form such a polygon.

    Example::

        >>> HNPolygon([(0, 0), (1, 1), (2, 0)]).valueAt(Fraction(1, 2))
        Fraction(1, 2)

    """

    def __init__(self, vertices: Iterable[tuple[int, int]]) -> None:
        objectName = 'HNPolygon.vertices'
        error.validateType(vertices, Iterable, objectName)
        points = tuple(tuple(v) for v in vertices)
        for point in points:
            if len(point) != 2:
                raise ValueError(
                    error.generateErrorMessage(
                        'itemsValueError', objectName=objectName, value=point
                    )
                )
            for item in point:
                error.validateType(item, int, objectName, items=True)
        if len(points) < 2 or points[0] != (0, 0):
            raise ValueError(
                error.generateErrorMessage(
                    'valueError', objectName=objectName, value=points
                )
            )
        segments = [(x2 - x1, y2 - y1)
                    for (x1, y1), (x2, y2) in zip(points, points[1:])]
        if any(dx <= 0 for dx, _ in segments):
            raise ValueError(
                error.generateErrorMessage(
                    'nonIncreasingRange', objectName=objectName
                )
            )
        for (dx1, dy1), (dx2, dy2) in zip(segments, segments[1:]):
            if dy2 * dx1 >= dy1 * dx2:
                raise ValueError(
                    error.generateErrorMessage(
                        'valueError', objectName=objectName, value=points
                    )
                )
        self._vertices = points

    def __repr__(self) -> str:
        return f"<{self.__class__.__name__} {self._vertices}>"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HNPolygon):
            return NotImplemented
        return self._vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self._vertices)

    def valueAt(self, x: int | Fraction) -> Fraction:
        """Value of the polygon at `x` by linear interpolation.

        :raises ValueError: If `x` lies outside ``[0, rank]``.

        """
        if not 0 <= x <= self.rank:
            raise ValueError(
                error.generateErrorMessage(
                    'valueError', objectName='x', value=x
                )
            )
        for (x1, y1), (x2, y2) in zip(self._vertices, self._vertices[1:]):
            if x <= x2:
                return y1 + Fraction(y2 - y1, x2 - x1) * (x - x1)
        return Fraction(self.degree)

    @property
    def vertices(self) -> tuple[tuple[int, int], ...]:
        """The vertices from ``(0, 0)`` to ``(rank, degree)``."""
        return self._vertices

    @property
    def rank(self) -> int:
        """Abscissa of the last vertex."""
        return self._vertices[-1][0]

    @property
    def degree(self) -> int:
        """Ordinate of the last vertex."""
        return self._vertices[-1][1]

    @property
    def blocks(self) -> tuple[tuple[int, int], ...]:
        """Segment ``(rank, degree)`` increments."""
        return tuple((x2 - x1, y2 - y1) for (x1, y1), (x2, y2)
                     in zip(self._vertices, self._vertices[1:]))
