"""
Closed-form sums of separable harmonic products and their exact derivatives.

A factor is sin(k (sx x + sy y + st t + phase) + shift pi/2). Differentiating
along one variable multiplies by k s_var and raises the shift by one, so any
mixed derivative of a product stays a finite sum of products.
"""
from dataclasses import dataclass, replace
from typing import Union

import numpy as np

__all__ = [
    "AXES",
    "Factor",
    "HarmonicTerm",
    "HarmonicField",
    "sin_factor",
    "cos_factor",
]

AXES = ("x", "y", "t")

ArrayLike = Union[float, np.ndarray]


@dataclass(frozen=True)
class Factor:
    wavenumber: float
    rates: tuple[float, float, float]
    phase: float = 0.0
    shift: int = 0

    def rate(self, axis: str) -> float:
        return self.wavenumber * self.rates[AXES.index(axis)]

    def shifted(self) -> "Factor":
        return replace(self, shift=(self.shift + 1) % 4)

    def __call__(self, x: ArrayLike, y: ArrayLike, t: ArrayLike) -> ArrayLike:
        sx, sy, st = self.rates
        theta = 0.0
        if sx:
            theta = theta + sx * x
        if sy:
            theta = theta + sy * y
        if st:
            theta = theta + st * t
        theta = self.wavenumber * (theta + self.phase)
        # sin, cos, -sin, -cos
        value = np.sin(theta) if self.shift % 2 == 0 else np.cos(theta)
        return -value if self.shift >= 2 else value


def sin_factor(wavenumber: float, rates: tuple[float, float, float], phase: float = 0.0) -> Factor:
    return Factor(wavenumber=wavenumber, rates=rates, phase=phase, shift=0)


def cos_factor(wavenumber: float, rates: tuple[float, float, float], phase: float = 0.0) -> Factor:
    return Factor(wavenumber=wavenumber, rates=rates, phase=phase, shift=1)


@dataclass(frozen=True)
class HarmonicTerm:
    """coefficient * product of factors"""
    factors: tuple[Factor, ...]
    coefficient: float = 1.0

    def derivative(self, axis: str) -> list["HarmonicTerm"]:
        """Product rule; factors that do not depend on `axis` drop out"""
        terms = []
        for position, factor in enumerate(self.factors):
            rate = factor.rate(axis)
            if rate == 0.0:
                continue
            factors = self.factors[:position] + (factor.shifted(),) + self.factors[position + 1:]
            terms.append(HarmonicTerm(factors=factors, coefficient=self.coefficient * rate))
        return terms

    def __call__(self, x: ArrayLike, y: ArrayLike, t: ArrayLike) -> ArrayLike:
        value = self.coefficient
        for factor in self.factors:
            value = value * factor(x, y, t)
        return value


@dataclass(frozen=True)
class HarmonicField:
    """Scalar field given as a sum of harmonic terms; the empty sum is zero"""
    terms: tuple[HarmonicTerm, ...] = ()

    @classmethod
    def product(cls, *factors: Factor, coefficient: float = 1.0) -> "HarmonicField":
        return cls(terms=(HarmonicTerm(factors=tuple(factors), coefficient=coefficient),))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def derivative(self, *axes: str) -> "HarmonicField":
        """
        Exact partial derivative, e.g. field.derivative("x", "t") for d2/dxdt.
        """
        terms = self.terms
        for axis in axes:
            if axis not in AXES:
                raise ValueError(f"unknown axis {axis!r}, expected one of {AXES}")
            terms = tuple(derived for term in terms for derived in term.derivative(axis))
        return HarmonicField(terms=terms)

    def __call__(self, x: ArrayLike, y: ArrayLike, t: ArrayLike) -> np.ndarray:
        shape = np.broadcast_shapes(np.shape(x), np.shape(y), np.shape(t))
        total = np.zeros(shape)
        for term in self.terms:
            total = total + term(x, y, t)
        return total
