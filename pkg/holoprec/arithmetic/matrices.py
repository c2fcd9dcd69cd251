from typing import (Callable,
                    Sequence,
                    Tuple,
                    TypeVar)

from .gaussian import (GaussianInt,
                       GaussianRational)

Entry = TypeVar('Entry')
Matrix = Tuple[Tuple[Entry, ...], ...]
Vector = Tuple[Entry, ...]


def identity(size: int,
             *,
             entry_type: type = GaussianInt) -> Matrix:
    zero, one = entry_type(0), entry_type(1)
    return tuple(tuple(one if row == column else zero
                       for column in range(size))
                 for row in range(size))


def zeros(rows_count: int, columns_count: int,
          *,
          entry_type: type = GaussianInt) -> Matrix:
    zero = entry_type(0)
    return tuple((zero,) * columns_count for _ in range(rows_count))


def map_entries(function: Callable[[Entry], Entry], matrix: Matrix
                ) -> Matrix:
    return tuple(tuple(map(function, row)) for row in matrix)


def multiply(left: Matrix, right: Matrix) -> Matrix:
    zero = type(left[0][0])(0)
    columns = list(zip(*right))
    return tuple(tuple(_dot(row, column, zero)
                       for column in columns)
                 for row in left)


def apply(matrix: Matrix, vector: Vector) -> Vector:
    zero = type(matrix[0][0])(0)
    return tuple(_dot(row, vector, zero) for row in matrix)


def _dot(row: Sequence[Entry], column: Sequence[Entry], zero: Entry
         ) -> Entry:
    result = zero
    for left_entry, right_entry in zip(row, column):
        if left_entry and right_entry:
            result = result + left_entry * right_entry
    return result


def to_rational(matrix: Matrix) -> Matrix:
    return tuple(tuple(entry
                       if isinstance(entry, GaussianRational)
                       else GaussianRational(entry)
                       for entry in row)
                 for row in matrix)


def bits_count(matrix: Matrix) -> int:
    """Returns total bits of real and imaginary parts of integer entries."""
    return sum(entry.bit_length for row in matrix for entry in row)


def inverse(matrix: Matrix) -> Matrix:
    """Inverts a matrix over Q(i) by Gauss-Jordan elimination."""
    size = len(matrix)
    rows = [list(row) + list(identity_row)
            for row, identity_row in zip(
                to_rational(matrix),
                identity(size,
                         entry_type=GaussianRational))]
    for column in range(size):
        pivot_row = next((row
                          for row in range(column, size)
                          if rows[row][column]),
                         None)
        if pivot_row is None:
            raise ZeroDivisionError('Matrix is singular.')
        rows[column], rows[pivot_row] = rows[pivot_row], rows[column]
        pivot = rows[column][column]
        rows[column] = [(entry / pivot).normalize()
                        for entry in rows[column]]
        for row in range(size):
            factor = rows[row][column]
            if row == column or not factor:
                continue
            rows[row] = [(entry - factor * pivot_entry).normalize()
                         for entry, pivot_entry in zip(rows[row],
                                                       rows[column])]
    return tuple(tuple(row[size:]) for row in rows)
