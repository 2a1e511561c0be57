"""Truth-table representation of Boolean functions and the primitive
operations (restriction, complement, concatenation, canalizing-variable
insertion, distances) that the rest of the package builds on.

Variable convention: truth index t in [0, 2^n) encodes the inputs, and
variable x_i reads bit i-1 of t. So x_1 is the fastest-toggling variable
and x_n the slowest. A truth-table string lists f(0), f(1), ... left to
right; the hex form reads that string as one number, leftmost character
most significant.
"""

import numpy as np

MAX_VARIABLES = 6


def _infer_n(length):
    n = length.bit_length() - 1
    if length != 1 << n:
        raise ValueError(f"truth table length {length} is not a power of two")
    return n


class BooleanFunction:
    """An n-variable Boolean function stored as its full 2^n-bit truth table.

    table[t] is the output f(t) for truth index t; x_i(t) = (t >> (i-1)) & 1.
    Instances are immutable and hashable, so they can live in sets and dicts.
    """

    __slots__ = ("n", "table", "_packed")

    def __init__(self, table):
        arr = np.asarray(table, dtype=np.uint8)
        if arr.ndim != 1:
            raise ValueError("truth table must be one-dimensional")
        n = _infer_n(arr.size)
        if n > MAX_VARIABLES:
            raise ValueError(f"{n} variables exceeds the supported maximum {MAX_VARIABLES}")
        if not np.all(arr <= 1):
            raise ValueError("truth table entries must be 0 or 1")
        arr = arr.copy()
        arr.flags.writeable = False
        self.n = n
        self.table = arr
        self._packed = None

    @classmethod
    def from_packed(cls, value, n):
        """Build from the packed integer whose bit t is f(t)."""
        if not 0 <= n <= MAX_VARIABLES:
            raise ValueError(f"n={n} out of supported range")
        size = 1 << n
        if not 0 <= value < (1 << size):
            raise ValueError(f"packed value out of range for n={n}")
        bits = np.frombuffer(int(value).to_bytes(8, "little"), dtype=np.uint8)
        return cls(np.unpackbits(bits, bitorder="little")[:size])

    @property
    def packed(self):
        """The truth table as an integer, bit t = f(t)."""
        if self._packed is None:
            raw = np.packbits(self.table, bitorder="little").tobytes()
            self._packed = int.from_bytes(raw, "little")
        return self._packed

    @property
    def size(self):
        return self.table.size

    def evaluate(self, t):
        """Output bit at truth index t."""
        if not 0 <= t < self.size:
            raise ValueError(f"truth index {t} out of range for n={self.n}")
        return int(self.table[t])

    def is_constant(self):
        s = int(self.table.sum())
        return s == 0 or s == self.size

    def restrict(self, i, a):
        """Subfunction with x_i fixed to a, on n-1 variables.

        Remaining variables are renumbered with their relative order kept:
        old x_j becomes x_{j-1} for j > i.
        """
        if self.n < 1:
            raise ValueError("cannot restrict a zero-variable function")
        self._check_var(i)
        idx = np.arange(self.size)
        keep = ((idx >> (i - 1)) & 1) == a
        return BooleanFunction(self.table[keep])

    def complement(self):
        """Bitwise negation of the truth table."""
        return BooleanFunction(1 - self.table)

    def concat(self, other):
        """Juxtapose two n-variable tables into an (n+1)-variable function.

        The new slowest variable x_{n+1} selects the half: restricting it
        to 0 gives self and to 1 gives other.
        """
        if not isinstance(other, BooleanFunction):
            raise TypeError("concat expects another BooleanFunction")
        if other.n != self.n:
            raise ValueError(f"variable counts differ: {self.n} vs {other.n}")
        return BooleanFunction(np.concatenate([self.table, other.table]))

    def insert_canalizing_variable(self, k, a, b):
        """Merge a new canalizing variable into position k.

        The result g has n+1 variables (old x_j becomes x_{j+1} for j >= k)
        with g restricted to x_k = a constant b, and g restricted to
        x_k = 1-a equal to self. In table terms the new function alternates
        blocks of size 2^(k-1) between the forced constant and this
        function's bits.
        """
        if not 1 <= k <= self.n + 1:
            raise ValueError(f"insert position {k} out of range for n={self.n}")
        if a not in (0, 1) or b not in (0, 1):
            raise ValueError("canalizing input and output must be bits")
        m = self.n + 1
        idx = np.arange(1 << m)
        newbit = (idx >> (k - 1)) & 1
        low = idx & ((1 << (k - 1)) - 1)
        old = ((idx >> k) << (k - 1)) | low
        out = np.where(newbit == a, np.uint8(b), self.table[old])
        return BooleanFunction(out)

    def hamming_distance(self, other):
        """Number of truth indices where the two tables differ."""
        if other.n != self.n:
            raise ValueError(f"variable counts differ: {self.n} vs {other.n}")
        return int(np.count_nonzero(self.table != other.table))

    def ncf_distance(self):
        """min(distance to the all-zeros table, distance to the all-ones table)."""
        w = int(self.table.sum())
        return min(w, self.size - w)

    def essential_variables(self):
        """Set of variable indices the function actually depends on."""
        out = set()
        idx = np.arange(self.size)
        for i in range(1, self.n + 1):
            bit = (idx >> (i - 1)) & 1
            if not np.array_equal(self.table[bit == 0], self.table[bit == 1]):
                out.add(i)
        return out

    def to_binary(self):
        return "".join("1" if v else "0" for v in self.table)

    def to_hex(self):
        if self.n < 2:
            raise ValueError("hex form needs at least 2 variables")
        value = int(self.to_binary(), 2)
        return f"0x{value:0{self.size // 4}X}"

    def _check_var(self, i):
        if not 1 <= i <= self.n:
            raise ValueError(f"variable index {i} out of range for n={self.n}")

    def __eq__(self, other):
        return (
            isinstance(other, BooleanFunction)
            and self.n == other.n
            and self.packed == other.packed
        )

    def __hash__(self):
        return hash((self.n, self.packed))

    def __repr__(self):
        if self.n == 0:
            return f"BooleanFunction(n=0, {self.to_binary()!r})"
        body = self.to_hex() if self.n >= 4 else self.to_binary()
        return f"BooleanFunction(n={self.n}, {body!r})"


def constant(n, value):
    """The constant-0 or constant-1 function on n variables."""
    if value not in (0, 1):
        raise ValueError("constant value must be 0 or 1")
    return BooleanFunction(np.full(1 << n, value, dtype=np.uint8))


def variable_pattern(i, n):
    """The projection function x_i on n variables.

    Its table repeats 2^(i-1) zeros followed by 2^(i-1) ones.
    """
    if not 1 <= i <= n:
        raise ValueError(f"variable index {i} out of range for n={n}")
    if n > MAX_VARIABLES:
        raise ValueError(f"n={n} out of supported range")
    idx = np.arange(1 << n)
    return BooleanFunction(((idx >> (i - 1)) & 1).astype(np.uint8))


def parse_truth_table(text, n=None):
    """Parse a binary or 0x-prefixed hex truth-table string.

    Parameters:
        text (str): either 2^n characters over {0,1} (character p is f(p)),
            or "0x" followed by 2^n/4 hex digits (whole table as one
            number, leftmost digit most significant; needs n >= 2).
        n (int, optional): expected variable count; inferred from the
            length when omitted, validated when given.

    Returns:
        BooleanFunction
    """
    if not isinstance(text, str):
        raise ValueError("truth table input must be a string")
    text = text.strip()
    if text.lower().startswith("0x"):
        digits = text[2:]
        if not digits or any(c not in "0123456789abcdefABCDEF" for c in digits):
            raise ValueError(f"invalid hex truth table {text!r}")
        size = 4 * len(digits)
        inferred = _infer_n(size)
        if inferred < 2:
            raise ValueError("hex form needs at least 2 variables")
        bits = bin(int(digits, 16))[2:].zfill(size)
    else:
        if not text or any(c not in "01" for c in text):
            raise ValueError("binary truth table must be a nonempty string over {0,1}")
        inferred = _infer_n(len(text))
        bits = text
    if n is not None and n != inferred:
        raise ValueError(f"table length implies n={inferred}, but n={n} was requested")
    if not 1 <= inferred <= MAX_VARIABLES:
        raise ValueError(f"n={inferred} out of supported range")
    return BooleanFunction(np.frombuffer(bits.encode(), dtype=np.uint8) - ord("0"))


def format_truth_table(f, fmt="binary"):
    """Inverse of parse_truth_table; fmt is "binary" or "hex"."""
    if fmt == "binary":
        return f.to_binary()
    if fmt == "hex":
        return f.to_hex()
    raise ValueError(f"unknown format {fmt!r}")
