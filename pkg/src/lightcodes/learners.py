"""Pairwise learners for leave-pair-out cross-validation.

A learner maps a training set (the sample minus one differently-labeled
pair) to a prediction for the held-out pair: which of the two rows is the
1-labeled one.  Every learner computes its bit for the pair ordered by
sample position (low, high) and the reversed query is answered by
complementation, so the label-switch constraint holds structurally:
switching the held-out labels always complements the kernel value.

Score ties predict the canonically-high element as the 1-label (the
strict-inequality rule), so a tied pair costs an error in exactly one of
its two labelings.

Implementations must never read the labeling at the held-out positions;
only the remaining rows' labels may influence the prediction.
"""

from __future__ import annotations

import hashlib
import struct
from abc import ABC, abstractmethod

import numpy as np

from .datagen import Dataset
from .words import Word


def bit_matrix(labelings, n: int) -> np.ndarray:
    """Stack labelings (Words or 0/1 rows) into an (L, n) uint8 matrix."""
    if isinstance(labelings, np.ndarray):
        mat = np.asarray(labelings, dtype=np.uint8)
        if mat.ndim == 1:
            mat = mat[None, :]
        if mat.shape[1] != n:
            raise ValueError(f"labelings have length {mat.shape[1]}, expected {n}")
        return mat
    rows = []
    for lab in labelings:
        if isinstance(lab, Word):
            if lab.n != n:
                raise ValueError(f"labeling length {lab.n}, expected {n}")
            rows.append([lab.mask >> i & 1 for i in range(n)])
        else:
            rows.append(list(lab))
    return np.asarray(rows, dtype=np.uint8)


def _pair_arrays(y: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Ordered (one-labeled, zero-labeled) index arrays for one labeling."""
    ones = np.flatnonzero(y)
    zeros = np.flatnonzero(y == 0)
    i = np.repeat(ones, len(zeros))
    j = np.tile(zeros, len(ones))
    return i, j


def _errors_from_pred(pred_first: np.ndarray, i: np.ndarray) -> int:
    """Total errors given per-pair predict-first bits for pairs (i, j)."""
    return int(len(i) - int(pred_first.sum()))


class Learner(ABC):
    """Symmetric pairwise learner with the canonical-order antisymmetry rule."""

    name: str = "learner"

    @abstractmethod
    def pair_bit(self, data: Dataset, labeling: Word, low: int, high: int) -> int:
        """1 iff row ``low`` is predicted as the 1-labeled member of the pair.

        ``low < high`` are sample positions; training uses every other row
        with its labeling bit.
        """

    def predict_first(self, data: Dataset, labeling: Word, i: int, j: int) -> int:
        """1 iff row ``i`` is predicted as the 1-labeled member of pair (i, j)."""
        if i == j or not (0 <= i < data.n and 0 <= j < data.n):
            raise ValueError(f"invalid pair ({i}, {j}) for n={data.n}")
        if labeling.n != data.n:
            raise ValueError("labeling length does not match the sample")
        if i < j:
            return self.pair_bit(data, labeling, i, j)
        return 1 - self.pair_bit(data, labeling, j, i)

    def error_counts(self, data: Dataset, labelings) -> np.ndarray:
        """LPOCV error count per labeling; generic per-pair loop."""
        mat = bit_matrix(labelings, data.n)
        out = np.empty(len(mat), dtype=np.int64)
        for idx, y in enumerate(mat):
            word = Word.from_support(data.n, np.flatnonzero(y))
            errs = 0
            for i in word.support():
                for j in word.zeros():
                    errs += 1 - self.predict_first(data, word, i, j)
            out[idx] = errs
        return out


class ConstantLearner(Learner):
    """Fixed scoring function; ignores the training labels entirely.

    Scores come either from an explicit per-row vector or from a feature
    column of the sample.
    """

    def __init__(self, scores=None, feature: int = 0):
        self.scores = None if scores is None else np.asarray(scores, dtype=float)
        self.feature = int(feature)
        if self.scores is not None:
            self.name = "constant(scores)"
        else:
            self.name = f"constant(feature={self.feature})"

    def _score_vector(self, data: Dataset) -> np.ndarray:
        if self.scores is not None:
            if len(self.scores) != data.n:
                raise ValueError("score vector length does not match the sample")
            return self.scores
        return data.features[:, self.feature]

    def pair_bit(self, data, labeling, low, high):
        s = self._score_vector(data)
        return int(s[low] > s[high])

    def error_counts(self, data, labelings):
        s = self._score_vector(data)
        mat = bit_matrix(labelings, data.n)
        # err[i, j] = 1 iff the pair (1-labeled i, 0-labeled j) is predicted wrong.
        err = _error_matrix_from_scores(s)
        return _batch_pair_sums(err, mat)


def _error_matrix_from_scores(s: np.ndarray) -> np.ndarray:
    """Error indicator per ordered pair for a fixed score vector.

    For i < j the canonical bit is s_i > s_j, so the 1-labeled low element
    errs on a tie; the reversed pair errs only on strict reversal.
    """
    n = len(s)
    lt = s[:, None] < s[None, :]
    le = s[:, None] <= s[None, :]
    idx = np.arange(n)
    err = np.where(idx[:, None] < idx[None, :], le, lt).astype(np.int64)
    np.fill_diagonal(err, 0)
    return err


def _batch_pair_sums(err: np.ndarray, mat: np.ndarray) -> np.ndarray:
    """Sum err[i, j] over 1-labeled i and 0-labeled j, per labeling row."""
    y = mat.astype(np.int64)
    return np.einsum("li,ij,lj->l", y, err, 1 - y)


class ParityLearner(Learner):
    """The full-sample parity adversary.

    Expects a two-column dataset: column 0 carries the label leak and
    column 1 a 0/1 coin.  The parity of the coin column over all rows
    decides whether the leak is used directly or complemented.
    """

    name = "parity"

    def _flip(self, data: Dataset) -> int:
        if data.d < 2:
            raise ValueError("parity learner needs two feature columns")
        return int(round(float(data.features[:, 1].sum()))) & 1

    def pair_bit(self, data, labeling, low, high):
        leak = data.features[:, 0]
        base = int(leak[low] > leak[high])
        return base ^ self._flip(data)

    def error_counts(self, data, labelings):
        flip = self._flip(data)
        err = _error_matrix_from_scores(data.features[:, 0])
        if flip:
            err = 1 - err
            np.fill_diagonal(err, 0)
        return _batch_pair_sums(err, bit_matrix(labelings, data.n))


class OrderDirectionLearner(Learner):
    """Learns only whether a feature is directly or inversely related.

    Training counts concordant vs discordant differently-labeled pairs on
    the designated feature; the majority direction (ties positive) then
    scores the held-out pair.
    """

    def __init__(self, feature: int = 0):
        self.feature = int(feature)
        self.name = f"order-direction(feature={self.feature})"

    def _direction_tables(self, data: Dataset, y: np.ndarray):
        f = data.features[:, self.feature]
        gt = (f[:, None] > f[None, :]).astype(np.int64)
        y1 = y.astype(np.int64)
        y0 = 1 - y1
        conc = int(y1 @ gt @ y0)
        disc = int(y1 @ gt.T @ y0)
        # Margins for O(1) removal of every term touching a held-out row.
        row_conc = gt @ y0   # row r as the 1-labeled member
        col_conc = y1 @ gt   # row r as the 0-labeled member
        row_disc = gt.T @ y0
        col_disc = y1 @ gt.T
        return f, gt, y1, conc, disc, row_conc, col_conc, row_disc, col_disc

    def _pair_direction(self, tables, low: int, high: int) -> int:
        """Majority direction on the training set with rows low, high removed.

        The stored labels at the held-out rows only steer which full-sum
        terms get subtracted; the result is the pure training-set count.
        """
        _, gt, y1, conc, disc, row_conc, col_conc, row_disc, col_disc = tables
        yl, yh = int(y1[low]), int(y1[high])
        c = (
            conc
            - yl * row_conc[low]
            - yh * row_conc[high]
            - (1 - yl) * col_conc[low]
            - (1 - yh) * col_conc[high]
            + yl * (1 - yh) * gt[low, high]
            + yh * (1 - yl) * gt[high, low]
        )
        d = (
            disc
            - yl * row_disc[low]
            - yh * row_disc[high]
            - (1 - yl) * col_disc[low]
            - (1 - yh) * col_disc[high]
            + yl * (1 - yh) * gt[high, low]
            + yh * (1 - yl) * gt[low, high]
        )
        return 1 if c >= d else -1

    def pair_bit(self, data, labeling, low, high):
        y = bit_matrix([labeling], data.n)[0]
        tables = self._direction_tables(data, y)
        direction = self._pair_direction(tables, low, high)
        f = tables[0]
        return int(direction * f[low] > direction * f[high])

    def error_counts(self, data, labelings):
        mat = bit_matrix(labelings, data.n)
        out = np.empty(len(mat), dtype=np.int64)
        for idx, y in enumerate(mat):
            tables = self._direction_tables(data, y)
            f = tables[0]
            i_arr, j_arr = _pair_arrays(y)
            errs = 0
            for i, j in zip(i_arr, j_arr):
                low, high = (i, j) if i < j else (j, i)
                direction = self._pair_direction(tables, low, high)
                bit = int(direction * f[low] > direction * f[high])
                pred = bit if i == low else 1 - bit
                errs += 1 - pred
            out[idx] = errs
        return out


class RandomOrientationLearner(Learner):
    """Pseudo-random but deterministic pairwise predictions.

    The canonical bit is a cryptographic hash of the training multiset
    (rows with labels, order-independent), the unordered held-out pair of
    rows, and a seed, so equal training information always yields the same
    arc and the LPO table is a uniform-looking Johnson graph orientation.
    """

    def __init__(self, seed: int = 0):
        self.seed = int(seed)
        self.name = f"random-orientation(seed={self.seed})"

    @staticmethod
    def _row_bytes(row: np.ndarray) -> bytes:
        return struct.pack(f"<{len(row)}d", *row)

    def pair_bit(self, data, labeling, low, high):
        rows = data.features
        train_entries = sorted(
            self._row_bytes(rows[r]) + bytes([labeling.bit(r)])
            for r in range(data.n)
            if r != low and r != high
        )
        held = sorted((self._row_bytes(rows[low]), self._row_bytes(rows[high])))
        digest = hashlib.sha256()
        digest.update(struct.pack("<q", self.seed))
        for entry in train_entries:
            digest.update(entry)
        digest.update(held[0])
        digest.update(held[1])
        return digest.digest()[0] & 1


class RidgeLearner(Learner):
    """Ridge regression on 0/1 targets with an unpenalized intercept.

    Trained on the n-2 remaining rows for every held-out pair; the two
    held-out rows are then scored and compared with the strict tie rule.
    No feature standardization is applied.
    """

    def __init__(self, lam: float = 1.0):
        if lam <= 0:
            raise ValueError("ridge penalty must be positive")
        self.lam = float(lam)
        self.name = f"ridge(lambda={self.lam:g})"

    def _design(self, data: Dataset):
        Z = np.hstack([data.features, np.ones((data.n, 1))])
        penalty = np.diag([self.lam] * data.d + [0.0])
        A_full = Z.T @ Z + penalty
        return Z, A_full

    def _pair_inverses(self, Z, A_full, pairs: np.ndarray) -> np.ndarray:
        outer = Z[:, :, None] * Z[:, None, :]
        stacked = A_full[None, :, :] - outer[pairs[:, 0]] - outer[pairs[:, 1]]
        return np.linalg.inv(stacked)

    @staticmethod
    def _pair_scores(Z, inv, pairs, y):
        """Scores of both held-out rows for each pair, batched.

        The targets are masked to the training rows before any float
        reduction (and every reduction is an einsum), so the bit for an
        edge is a pure function of the training information: both
        labelings of an edge see bit-identical arithmetic even at ties.
        """
        masked = np.repeat(y[None, :].astype(float), len(pairs), axis=0)
        rows = np.arange(len(pairs))
        masked[rows, pairs[:, 0]] = 0.0
        masked[rows, pairs[:, 1]] = 0.0
        b = np.einsum("mn,nk->mk", masked, Z)
        beta = np.einsum("mij,mj->mi", inv, b)
        s_a = np.einsum("mi,mi->m", Z[pairs[:, 0]], beta)
        s_b = np.einsum("mi,mi->m", Z[pairs[:, 1]], beta)
        return s_a, s_b

    def pair_bit(self, data, labeling, low, high):
        y = bit_matrix([labeling], data.n)[0]
        Z, A_full = self._design(data)
        pairs = np.array([[low, high]])
        inv = self._pair_inverses(Z, A_full, pairs)
        s_low, s_high = self._pair_scores(Z, inv, pairs, y)
        return int(s_low[0] > s_high[0])

    def error_counts(self, data, labelings):
        mat = bit_matrix(labelings, data.n)
        Z, A_full = self._design(data)
        # One inverse per unordered pair appearing in any labeling.
        needed = set()
        pair_lists = []
        for y in mat:
            i_arr, j_arr = _pair_arrays(y)
            lows = np.minimum(i_arr, j_arr)
            highs = np.maximum(i_arr, j_arr)
            pair_lists.append((i_arr, j_arr, lows, highs))
            needed.update(zip(lows.tolist(), highs.tolist()))
        ordered = sorted(needed)
        index = {p: k for k, p in enumerate(ordered)}
        inv = self._pair_inverses(Z, A_full, np.array(ordered)) if ordered else None
        out = np.empty(len(mat), dtype=np.int64)
        for idx, (y, (i_arr, j_arr, lows, highs)) in enumerate(zip(mat, pair_lists)):
            if len(i_arr) == 0:
                out[idx] = 0
                continue
            sel = np.array([index[(a, b)] for a, b in zip(lows.tolist(), highs.tolist())])
            pairs = np.stack([lows, highs], axis=1)
            s_low, s_high = self._pair_scores(Z, inv[sel], pairs, y)
            bit = s_low > s_high
            pred = np.where(i_arr < j_arr, bit, ~bit)
            out[idx] = _errors_from_pred(pred, i_arr)
        return out


class KnnLearner(Learner):
    """k-nearest-neighbor scoring by mean training label.

    Euclidean distances with ties broken by sample row index; scores are
    compared as integer label sums (equivalent to means for a fixed k).
    """

    def __init__(self, k: int = 3):
        if k < 1:
            raise ValueError("k must be at least 1")
        self.k = int(k)
        self.name = f"knn(k={self.k})"

    def _neighbor_order(self, data: Dataset) -> list[list[int]]:
        X = data.features
        sq = ((X[:, None, :] - X[None, :, :]) ** 2).sum(axis=2)
        order = np.argsort(sq, axis=1, kind="stable")
        return [[int(r) for r in order[i] if r != i] for i in range(data.n)]

    def _neighbor_table(self, data: Dataset) -> np.ndarray:
        """table[i, j] = the k nearest training rows to i when {i, j} is held out."""
        n = data.n
        if self.k > n - 2:
            raise ValueError(f"k={self.k} too large for n={n} (train size {n - 2})")
        order = self._neighbor_order(data)
        table = np.empty((n, n, self.k), dtype=np.int64)
        for i in range(n):
            row = order[i]
            for j in range(n):
                if j == i:
                    continue
                picked = [r for r in row[: self.k + 1] if r != j][: self.k]
                table[i, j] = picked
        return table

    def pair_bit(self, data, labeling, low, high):
        table = self._neighbor_table(data)
        y = bit_matrix([labeling], data.n)[0].astype(np.int64)
        s_low = int(y[table[low, high]].sum())
        s_high = int(y[table[high, low]].sum())
        return int(s_low > s_high)

    def error_counts(self, data, labelings):
        mat = bit_matrix(labelings, data.n)
        table = self._neighbor_table(data)
        out = np.empty(len(mat), dtype=np.int64)
        for idx, y in enumerate(mat):
            i_arr, j_arr = _pair_arrays(y)
            if len(i_arr) == 0:
                out[idx] = 0
                continue
            yl = y.astype(np.int64)
            lows = np.minimum(i_arr, j_arr)
            highs = np.maximum(i_arr, j_arr)
            s_low = yl[table[lows, highs]].sum(axis=1)
            s_high = yl[table[highs, lows]].sum(axis=1)
            bit = s_low > s_high
            pred = np.where(i_arr < j_arr, bit, ~bit)
            out[idx] = _errors_from_pred(pred, i_arr)
        return out


LEARNER_FACTORIES = {
    "constant": lambda params: ConstantLearner(feature=int(params.get("feature", 0))),
    "order-direction": lambda params: OrderDirectionLearner(
        feature=int(params.get("feature", 0))
    ),
    "parity": lambda params: ParityLearner(),
    "random-orientation": lambda params: RandomOrientationLearner(
        seed=int(params.get("seed", 0))
    ),
    "ridge": lambda params: RidgeLearner(lam=float(params.get("lambda", 1.0))),
    "knn": lambda params: KnnLearner(k=int(params.get("k", 3))),
}


def make_learner(spec: str) -> Learner:
    """Build a learner from ``name`` or ``name;key=value,key=value``."""
    name, _, paramstr = spec.partition(";")
    name = name.strip()
    if name not in LEARNER_FACTORIES:
        raise ValueError(f"unknown learner {name!r}; known: {sorted(LEARNER_FACTORIES)}")
    params = {}
    if paramstr.strip():
        for item in paramstr.split(","):
            key, sep, value = item.partition("=")
            if not sep:
                raise ValueError(f"bad learner parameter {item!r}")
            params[key.strip()] = value.strip()
    return LEARNER_FACTORIES[name](params)
