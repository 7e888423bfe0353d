"""Simultaneous unitary similarity via reduced traces of words.

Two tuples X, Y in M_n(D)^d are unitarily similar (over the real closure)
iff Trd(w(X, X*)) = Trd(w(Y, Y*)) for every word w of length <= n^2 in the
letters x_1..x_d, s_1..s_d, where s_i stands for adjoint(x_i).

Letters are encoded as integers: ``i`` for x_{i+1} (0 <= i < d) and
``d + i`` for s_{i+1}.  The scan order is by length, then lexicographic on
these integers, and only the least rotation of each word is visited since
Trd(uv) = Trd(vu).

:func:`decide_similarity` does not evaluate every canonical word.  It grows
a basis of the Q-span of the pairs (w(X), w(Y)) length by length, extending
only words that are new to the span; a trace difference exists up to length
L iff it shows up on that basis.  Only when a difference is found are the
canonical words of the minimal differing length scanned in order, so the
reported witness is exactly the one a full scan would return.
:func:`scan_similarity` is the literal scan, kept as a reference.
"""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import product
from math import lcm

import flint
import gmpy2
import numpy as np

from .errors import InternalInconsistency, NotHermitian, ShapeError
from .matrices import (Kind, MatrixTuple, adjoint, identity, invert, mat_mul,
                       reduced_trace)


@dataclass(frozen=True)
class Word:
    letters: tuple
    d: int

    def __post_init__(self):
        if not self.letters:
            raise ValueError("a word has at least one letter")
        if any(not 0 <= x < 2 * self.d for x in self.letters):
            raise ValueError("letter index out of range")

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        d = self.d
        return " ".join(f"x{x + 1}" if x < d else f"s{x - d + 1}" for x in self.letters)

    @classmethod
    def parse(cls, text, d):
        letters = []
        for tok in text.split():
            head, idx = tok[0], int(tok[1:])
            if head not in "xs" or not 1 <= idx <= d:
                raise ValueError(f"bad letter {tok!r}")
            letters.append(idx - 1 if head == "x" else d + idx - 1)
        return cls(tuple(letters), d)

    def sort_key(self):
        return (len(self.letters), self.letters)

    def rotations(self):
        w = self.letters
        return [Word(w[i:] + w[:i], self.d) for i in range(len(w))]

    def canonical(self):
        """Least rotation: the representative of the cyclic class."""
        return min(self.rotations(), key=lambda w: w.letters)


def necklaces(k, length):
    """Least-rotation words of the given length over range(k), in lexicographic order.

    Fredricksen-Kessler-Maiorana: walk the prenecklaces in order and keep
    those whose length is a multiple of the period p of their Lyndon prefix.
    """
    a = [0] * (length + 1)

    def gen(t, p):
        if t > length:
            if length % p == 0:
                yield tuple(a[1:])
            return
        a[t] = a[t - p]
        yield from gen(t + 1, p)
        for j in range(a[t - p] + 1, k):
            a[t] = j
            yield from gen(t + 1, t)

    yield from gen(1, 1)


def enumerate_words(d, max_len, dedup_cyclic=True):
    """Yield words of length 1..max_len, by length then lexicographically.

    With ``dedup_cyclic`` only the least rotation of each cyclic class is
    produced.
    """
    if d < 1 or max_len < 1:
        raise ValueError("need d >= 1 and max_len >= 1")
    k = 2 * d
    for length in range(1, max_len + 1):
        if dedup_cyclic:
            for letters in necklaces(k, length):
                yield Word(letters, d)
        else:
            for letters in product(range(k), repeat=length):
                yield Word(letters, d)


def _letter_matrices(X):
    return list(X) + [adjoint(M) for M in X]


def word_trace(X, w):
    """Trd of the product of the substituted letters, left to right."""
    X = MatrixTuple(X)
    if w.d != len(X):
        raise ShapeError(f"word over {w.d} letters, tuple has {len(X)} matrices")
    mats = _letter_matrices(X)
    P = mats[w.letters[0]]
    for x in w.letters[1:]:
        P = mat_mul(P, mats[x])
    return reduced_trace(P)


@dataclass(frozen=True)
class SimilarityVerdict:
    outcome: str  # "equivalent" | "inequivalent"
    witness: Word | None = None
    traces: tuple | None = None

    @property
    def equivalent(self):
        return self.outcome == "equivalent"


def _check_pair(X, Y, max_len):
    X, Y = MatrixTuple(X), MatrixTuple(Y)
    if X.kind is not Y.kind or X.n != Y.n or len(X) != len(Y):
        raise ShapeError("tuples differ in kind, size or length")
    if max_len is None:
        max_len = X.n * X.n
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    return X, Y, max_len


def _verdict(X, Y, w):
    tx, ty = word_trace(X, w), word_trace(Y, w)
    if tx == ty:
        raise InternalInconsistency(f"witness {w} does not separate the traces")
    return SimilarityVerdict("inequivalent", w, (tx, ty))


def scan_similarity(X, Y, max_len=None):
    """Reference decision: evaluate every canonical word in scan order."""
    X, Y, max_len = _check_pair(X, Y, max_len)
    for w in enumerate_words(len(X), max_len, dedup_cyclic=True):
        if word_trace(X, w) != word_trace(Y, w):
            return _verdict(X, Y, w)
    return SimilarityVerdict("equivalent")


# ---------------------------------------------------------------------------
# fast exact path
#
# Letters are replaced by faithful integer representations: entry (r, s) of
# c*M becomes the k x k integer matrix of left multiplication by that entry
# on D = Q^k, where c clears every denominator in X and Y.  Scaling all
# letters by c multiplies the traces of a length-l word on both sides by c^l,
# so equality of traces is unaffected.  The span closure then runs over F_p
# for several word-sized primes; once their product exceeds the bound
# 4 n N^L on the scaled trace differences (N = largest infinity norm of a
# letter), agreement modulo every prime forces exact agreement.

_primes = {}


def _prime(bits, i):
    """The i-th prime above 2^(bits-1); all of them stay below 2^bits in practice."""
    seq = _primes.setdefault(bits, [])
    while len(seq) <= i:
        seq.append(int(gmpy2.next_prime(seq[-1] if seq else 1 << (bits - 1))))
    return seq[i]


def _prime_bits(kind, n):
    # every int64 dot product below has at most max(k n, 2 m) terms, each < p^2
    terms = max(kind.dim * n, 2 * kind.dim * n * n)
    return min(28, (62 - terms.bit_length()) // 2)


def _int_reps(mats, scale):
    """Integer representation (list of row lists) of each scale*M."""
    reps = []
    for M in mats:
        kind, n = M.kind, M.n
        k = kind.dim
        size = k * n
        R = [[0] * size for _ in range(size)]
        for r in range(n):
            for s in range(n):
                comps = [int(x * scale) for x in kind.components(M.rows[r][s])]
                i, j = k * r, k * s
                if kind is Kind.REAL:
                    R[i][j] = comps[0]
                elif kind is Kind.COMPLEX:
                    a, b = comps
                    R[i][j], R[i][j + 1], R[i + 1][j], R[i + 1][j + 1] = a, -b, b, a
                else:
                    a, b, c, d = comps
                    block = ((a, -b, -c, -d), (b, a, -d, c), (c, d, a, -b), (d, -c, b, a))
                    for u in range(4):
                        R[i + u][j:j + 4] = block[u]
        reps.append(R)
    return reps


def _trace_positions(kind, n):
    """Per trace component: (weight, row, column) entries of a k n x k n representation."""
    if kind is Kind.REAL:
        return [[(1, r, r) for r in range(n)]]
    if kind is Kind.COMPLEX:
        return [[(1, 2 * r, 2 * r) for r in range(n)],
                [(1, 2 * r + 1, 2 * r) for r in range(n)]]
    return [[(2, 4 * r, 4 * r) for r in range(n)]]


def _rref_batch(A, p, valid):
    """Row-reduce A[q] modulo p[q] in place for a batch of primes q.

    All primes share the pivot pattern of the first valid one.  A prime
    whose pivot entry vanishes, or whose rows are not exhausted by the
    shared pivots, is marked invalid.  Returns the pivot columns.
    """
    P, rows, cols = A.shape
    pv = p[:, None]
    pivots = []
    c = 0
    for r in range(rows):
        ref = np.flatnonzero(valid)
        if ref.size == 0 or c == cols:
            break
        ref = ref[0]
        live = np.flatnonzero(A[ref, r:, c:].any(axis=0))
        if live.size == 0:
            break
        c += int(live[0])
        i = r + int(np.flatnonzero(A[ref, r:, c])[0])
        if i != r:
            A[:, [r, i]] = A[:, [i, r]]
        head = A[:, r, c]
        valid &= head != 0
        inv = np.array([pow(int(x), int(q) - 2, int(q)) for x, q in zip(head, p)], dtype=np.int64)
        A[:, r] = A[:, r] * inv[:, None] % pv
        col = A[:, :, c].copy()
        col[:, r] = 0
        A -= col[:, :, None] * A[:, r][:, None, :] % p[:, None, None]
        A %= p[:, None, None]
        pivots.append(c)
        c += 1
    valid &= ~A[:, len(pivots):].any(axis=(1, 2))
    return pivots


def _units_left_regular(kind):
    # k x k integer matrices of left multiplication by each unit of D
    if kind is Kind.REAL:
        return [np.array([[1]])]
    if kind is Kind.COMPLEX:
        return [np.eye(2, dtype=np.int64), np.array([[0, -1], [1, 0]])]
    out = []
    for t in range(4):
        a, b, c, d = (int(t == u) for u in range(4))
        out.append(np.array([[a, -b, -c, -d], [b, a, -d, c], [c, d, a, -b], [d, -c, b, a]]))
    return out


def _coordinate_maps(L, kind, n, p):
    """Start vectors and right-multiplication matrices in coordinates (r, s, t), one per prime."""
    k = kind.dim
    m = k * n * n
    P = len(p)
    L = (np.array(L, dtype=object)[None] % np.array(p, dtype=object)[:, None, None]).astype(np.int64)
    cols = L[:, :, ::k].reshape(P, n, k, n)
    start = cols.transpose(0, 1, 3, 2).reshape(P, m)
    # e_(r,s,t) * L has coordinates (r, s', t') = (U_t * column block (s, s') of L)[t']
    V = np.stack([np.einsum("aj,qsjb->qsab", U, cols) % p[:, None, None, None]
                  for U in _units_left_regular(kind)], axis=1)  # (q, t, s, t', s')
    W = V.transpose(0, 2, 1, 4, 3)  # (q, s, t, s', t')
    R = np.zeros((P, n, n, k, n, n, k), dtype=np.int64)
    for r in range(n):
        R[:, r, :, :, r, :, :] = W
    return start, R.reshape(P, m, m)


def _trace_functional(kind, n):
    """Integer (m, components) matrix of Trd in coordinates (r, s, t)."""
    k = kind.dim
    comps = 2 if kind is Kind.COMPLEX else 1
    T = np.zeros((n, n, k, comps), dtype=np.int64)
    for r in range(n):
        if kind is Kind.COMPLEX:
            T[r, r, 0, 0] = T[r, r, 1, 1] = 1
        else:
            T[r, r, 0, 0] = 1 if kind is Kind.REAL else 2
    return T.reshape(k * n * n, comps)


def _closure_batch(LX, LY, kind, n, max_len, primes):
    """Per prime: smallest length <= max_len with a trace difference mod p (or None).

    Grows a basis of the F_p-span of the pairs (w(X), w(Y)) length by length,
    in coordinates; only the part new at one length is multiplied out at the
    next.  Returns ``(lengths, valid)``; results of invalid primes are void.
    """
    m = kind.dim * n * n
    p = np.array(primes, dtype=np.int64)
    P = len(p)
    p3 = p[:, None, None]
    sx, rx = zip(*(_coordinate_maps(L, kind, n, p) for L in LX))
    sy, ry = zip(*(_coordinate_maps(L, kind, n, p) for L in LY))
    T = _trace_functional(kind, n)
    valid = np.ones(P, dtype=bool)
    found = [None] * P
    basis = np.zeros((P, 0, 2 * m), dtype=np.int64)
    pivots = []
    front = None
    for length in range(1, max_len + 1):
        if front is None:
            cand = np.concatenate([np.stack(sx, axis=1), np.stack(sy, axis=1)], axis=2)
        else:
            fx, fy = front[:, :, :m], front[:, :, m:]
            cand = np.concatenate([np.concatenate([fx @ a % p3, fy @ b % p3], axis=2)
                                   for a, b in zip(rx, ry)], axis=1)
        diff = ((cand[:, :, :m] @ T - cand[:, :, m:] @ T) % p3).any(axis=(1, 2))
        for q in np.flatnonzero(diff):
            if found[q] is None:
                found[q] = length
        if all(f is not None for f, v in zip(found, valid) if v):
            break
        if pivots:
            cand = (cand - cand[:, :, pivots] @ basis % p3) % p3
        new = _rref_batch(cand, p, valid)
        if not new:
            break
        front = cand[:, :len(new)]
        if pivots:
            basis = (basis - basis[:, :, new] @ front % p3) % p3
        basis = np.concatenate([basis, front], axis=1)
        pivots = pivots + new
    return found, valid


def _first_difference_length(LX, LY, kind, n, max_len):
    """Exact smallest length <= max_len at which some word's traces differ, or None.

    Each valid prime q certifies that every word shorter than its reported
    length has trace difference divisible by q; the product of the primes
    must exceed the bound at length best - 1.
    """
    norm = max([1] + [max(sum(abs(x) for x in row) for row in R) for R in LX + LY])
    bits = _prime_bits(kind, n)
    best = None
    modulus = 1
    i = 0
    while True:
        limit = max_len if best is None else best - 1
        bound = 4 * n * norm ** limit
        if limit < 1 or modulus > bound:
            return best
        batch = []
        prod = modulus
        while prod <= bound:
            batch.append(_prime(bits, i))
            prod *= batch[-1]
            i += 1
        found, valid = _closure_batch(LX, LY, kind, n, limit, batch)
        for q, f, v in zip(batch, found, valid):
            if v:
                modulus *= q
                if f is not None and (best is None or f < best):
                    best = f


def _first_witness_in_block(LX, LY, tpos, k, length, first):
    """Scan necklaces of ``length`` starting with letter ``first``, in lexicographic order."""
    a = [0] * (length + 1)
    a[1] = first

    def trace(M):
        return [sum(w * int(M[i, j]) for w, i, j in comp) for comp in tpos]

    def gen(t, p, px, py):
        if t > length:
            if length % p == 0 and trace(px) != trace(py):
                return tuple(a[1:])
            return None
        for j in range(a[t - p], k):
            a[t] = j
            found = gen(t + 1, p if j == a[t - p] else t, px * LX[j], py * LY[j])
            if found is not None:
                return found
        return None

    return gen(2, 1, LX[first], LY[first])


def decide_similarity(X, Y, max_len=None, threads=1):
    """Decide whether all canonical words up to ``max_len`` (default n^2) agree in Trd.

    Returns the first separating word in scan order when they do not.  An
    equivalent verdict is not constructive: no unitary O is produced.
    """
    X, Y, max_len = _check_pair(X, Y, max_len)
    kind, n, d = X.kind, X.n, len(X)
    mx, my = _letter_matrices(X), _letter_matrices(Y)
    scale = 1
    for M in mx + my:
        for row in M.rows:
            for x in row:
                for c in kind.components(x):
                    scale = lcm(scale, c.denominator)
    LX, LY = _int_reps(mx, scale), _int_reps(my, scale)
    length = _first_difference_length(LX, LY, kind, n, max_len)
    if length is None:
        return SimilarityVerdict("equivalent")
    size = kind.dim * n
    FX = [flint.fmpz_mat(size, size, [x for row in R for x in row]) for R in LX]
    FY = [flint.fmpz_mat(size, size, [x for row in R for x in row]) for R in LY]
    tpos = _trace_positions(kind, n)
    k = 2 * d

    def block(c):
        return _first_witness_in_block(FX, FY, tpos, k, length, c)

    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            found = list(pool.map(block, range(k)))
    else:
        found = []
        for c in range(k):
            found.append(block(c))
            if found[-1] is not None:
                break
    letters = next((f for f in found if f is not None), None)
    if letters is None:
        raise InternalInconsistency(f"no canonical witness of length {length}")
    return _verdict(X, Y, Word(letters, d))


def cayley_unitary(S):
    """O = (I - S)(I + S)^-1 for anti-hermitian S; adjoint(O) O = I exactly."""
    if adjoint(S) != -S:
        raise NotHermitian("S is not anti-hermitian")
    one = identity(S.kind, S.n)
    return mat_mul(one - S, invert(one + S))
