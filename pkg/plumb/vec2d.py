#!/usr/bin/python
# -*- coding: utf-8 -*-

"""
Exact integer plane vectors.

Angles are never computed here: everything the rotation bookkeeping needs
(quadrant index, quarter turns, cross and dot products) stays in integers.
"""

import math


class Vec2D(object):

    __slots__ = tuple('xy')

    def __init__(self, x, y):
        self.x = x
        self.y = y

    def __repr__(self):
        return "<%s(%d,%d)>" % (self.__class__.__name__, self.x, self.y)

    def _normal_R(self):
        """quarter turn clockwise"""
        return self.__class__(self.y, -self.x)
    normal_R = property(_normal_R)

    def dot(self, other):
        return self.x * other.x + self.y * other.y

    def cross(self, other):
        return self.x * other.y - self.y * other.x

    def is_zero(self):
        return self.x == 0 and self.y == 0

    def quadrant(self):
        """
        Index q of the half-open quadrant [qπ/2, (q+1)π/2) holding the
        vector; the positive x axis belongs to quadrant 0.
        """
        assert not self.is_zero(), 'zero vector has no direction'
        x, y = self.x, self.y
        if x > 0 and y >= 0:
            return 0
        if x <= 0 and y > 0:
            return 1
        if x < 0 and y <= 0:
            return 2
        return 3

    def to_first_quadrant(self):
        """Rotate clockwise by whole quarter turns into quadrant 0."""
        v = self
        for _ in range(self.quadrant()):
            v = v.normal_R
        return v

    def angle_to(self, other):
        """Signed float angle from self to other, display use only."""
        return math.atan2(self.cross(other), self.dot(other))

    def __eq__(self, other):
        if isinstance(other, self.__class__):
            return self.x == other.x and self.y == other.y
        return False

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.x, self.y))

    def as_tuple(self):
        return self.x, self.y
