# -*- coding: utf-8 -*-
"""
Forward-mode dual numbers used to differentiate metric and frame components.

Qudi is free software: you can redistribute it and/or modify
it under the terms of the GNU General Public License as published by
the Free Software Foundation, either version 3 of the License, or
(at your option) any later version.

Qudi is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.

You should have received a copy of the GNU General Public License
along with Qudi. If not, see <http://www.gnu.org/licenses/>.

Copyright (c) the Qudi Developers. See the COPYRIGHT.txt file at the
top-level directory of this distribution and at <https://github.com/Ulm-IQO/qudi/>
"""
__all__ = ['Dual', 'seed', 'unpack', 'sqrt', 'sin', 'cos']

import numpy as np


class Dual:
    """ Number carrying a value and its gradient with respect to the seeded coordinates.

    Component functions written with +, -, *, /, ** and the functions of this module accept
    either plain floats or Dual instances, so the same code yields values and exact partials.
    """
    __slots__ = ('value', 'grad')

    # numpy scalars must defer to the reflected operators below
    __array_ufunc__ = None

    def __init__(self, value, grad):
        self.value = float(value)
        self.grad = np.asarray(grad, dtype=float)

    def __repr__(self):
        return 'Dual({0!r}, {1!r})'.format(self.value, self.grad.tolist())

    def __add__(self, other):
        if isinstance(other, Dual):
            return Dual(self.value + other.value, self.grad + other.grad)
        return Dual(self.value + other, self.grad)

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        if isinstance(other, Dual):
            return Dual(self.value - other.value, self.grad - other.grad)
        return Dual(self.value - other, self.grad)

    def __rsub__(self, other):
        return Dual(other - self.value, -self.grad)

    def __neg__(self):
        return Dual(-self.value, -self.grad)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, Dual):
            return Dual(self.value * other.value,
                        self.grad * other.value + self.value * other.grad)
        return Dual(self.value * other, self.grad * other)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        if isinstance(other, Dual):
            return Dual(self.value / other.value,
                        (self.grad * other.value - self.value * other.grad) / other.value ** 2)
        return Dual(self.value / other, self.grad / other)

    def __rtruediv__(self, other):
        return Dual(other / self.value, -other * self.grad / self.value ** 2)

    def __pow__(self, power, modulo=None):
        if isinstance(power, Dual):
            raise TypeError('Dual exponents are not supported.')
        if power == 0:
            return Dual(1.0, np.zeros_like(self.grad))
        return Dual(self.value ** power, power * self.value ** (power - 1) * self.grad)


def seed(values):
    """ Promote coordinates to dual numbers with unit gradients.

    @param (iterable) values: coordinate values, e.g. (t, r, theta, phi)
    @return (list): one Dual per coordinate, the i-th carrying the i-th unit gradient
    """
    values = [float(v) for v in values]
    identity = np.eye(len(values))
    return [Dual(v, identity[i]) for i, v in enumerate(values)]


def unpack(components, size=4):
    """ Split a nested array of Dual/float entries into values and partial derivatives.

    @param components: nested list (or array) of Dual or real entries
    @param (int) size: number of seeded coordinates

    @return (tuple): (values, derivatives) where derivatives[k, ...] is the partial derivative of
                     values[...] with respect to the k-th seeded coordinate
    """
    array = np.empty(np.shape(components), dtype=object)
    array[...] = components
    values = np.empty(array.shape, dtype=float)
    derivatives = np.zeros((size,) + array.shape, dtype=float)
    for index, item in np.ndenumerate(array):
        if isinstance(item, Dual):
            values[index] = item.value
            derivatives[(slice(None),) + index] = item.grad
        else:
            values[index] = item
    return values, derivatives


def sqrt(x):
    if isinstance(x, Dual):
        root = np.sqrt(x.value)
        if root == 0:
            if np.any(x.grad):
                raise ZeroDivisionError('Square root is not differentiable at zero.')
            return Dual(0.0, np.zeros_like(x.grad))
        return Dual(root, x.grad / (2 * root))
    return np.sqrt(x)


def sin(x):
    if isinstance(x, Dual):
        return Dual(np.sin(x.value), np.cos(x.value) * x.grad)
    return np.sin(x)


def cos(x):
    if isinstance(x, Dual):
        return Dual(np.cos(x.value), -np.sin(x.value) * x.grad)
    return np.cos(x)
