"""
Bases and operator matrices of one standard realization, built on first use
and shared by every check on the same parameter set.
"""

import operator
from functools import reduce

from leonard_trio_lab.algebra.params import ParamSet
from leonard_trio_lab.algebra.realization import OperatorSet, realize
from leonard_trio_lab.bases.families import build_basis
from leonard_trio_lab.polyspace.basis import (
    BasisFamily,
    BasisKind,
    change_of_basis,
    matrix_in_basis,
)
from leonard_trio_lab.polyspace.matrix import Matrix
from leonard_trio_lab.polyspace.operator import Operator


class BasisContext:
    """
    Memoizes the distinguished bases, their inverses, operator products and
    the matrices of those products in each basis.

    Operator products are named by words of operator names, applied right to
    left: "Vt Z" is Vt @ Z. Cached matrices are read-only.

    :ivar params: Standard-kind parameters.
    """

    def __init__(self, params: ParamSet, ops: OperatorSet | None = None):
        """
        :param params: Standard-kind parameters.
        :param ops: A realization of the same parameters, possibly tampered;
            realized from params on first use when omitted.
        """
        self.params = params
        self._ops = ops
        self._bases: dict[BasisKind, BasisFamily] = {}
        self._words: dict[str, Operator] = {}
        self._matrices: dict[tuple[str, BasisKind], Matrix] = {}
        self._changes: dict[tuple[BasisKind, BasisKind], Matrix] = {}

    @classmethod
    def of(
        cls, params: ParamSet, ops: "OperatorSet | BasisContext | None"
    ) -> "BasisContext":
        """
        Reuse a context, or start one around a realization.
        """
        if isinstance(ops, BasisContext):
            return ops
        return cls(params, ops)

    @property
    def ops(self) -> OperatorSet:
        if self._ops is None:
            self._ops, _ = realize(self.params)
        return self._ops

    def basis(self, kind: BasisKind) -> BasisFamily:
        """
        :raises NonGenericParams: If the genericity predicate fails.
        :raises WrongKind: If the basis is not defined for the parameters.
        """
        if kind not in self._bases:
            self._bases[kind] = build_basis(kind, self.params)
        return self._bases[kind]

    def operator(self, word: str) -> Operator:
        """
        :raises WrongKind: If a factor is absent from the realization.
        """
        if word not in self._words:
            factors = self.ops.require(*word.split())
            self._words[word] = reduce(operator.matmul, factors)
        return self._words[word]

    def matrix(self, word: str, kind: BasisKind) -> Matrix:
        """
        The matrix of an operator word in one of the bases.
        """
        key = (word, kind)
        if key not in self._matrices:
            m = matrix_in_basis(self.operator(word), self.basis(kind))
            m.flags.writeable = False
            self._matrices[key] = m
        return self._matrices[key]

    def change(self, source: BasisKind, target: BasisKind) -> Matrix:
        """
        The exact change-of-basis matrix from source to target.
        """
        key = (source, target)
        if key not in self._changes:
            g = change_of_basis(self.basis(source), self.basis(target))
            g.flags.writeable = False
            self._changes[key] = g
        return self._changes[key]
