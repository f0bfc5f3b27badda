import json
import math
import random
import unittest

from plumb.graph import cycle_graph, is_circular_spherical, sign_class
from plumb.moves import toric_blowup
from plumb.torus import (A, A_INV, B, B_INV, Braid, BundleKind, CancelPair, CyclicPermute,
                         ExponentNegative, InsertPair, MalformedWord, NotApplicable,
                         NotUnimodular, SL2Matrix, TooShort, Word, braid_sites, bundle_type,
                         max_rotation, parse_matrix, phi, rewrite, rotation, rotation_path,
                         twisting_floor, word_of_divisor)
from plumb.vec2d import Vec2D


IDENTITY = SL2Matrix(1, 0, 0, 1)


def power(letter, n):
    return Word([letter] * n)


def random_word(rng, length, letters=(A, A_INV, B, B_INV)):
    return Word(rng.choice(letters) for _ in range(length))


class WordTests(unittest.TestCase):

    def test_text_format(self):
        word = Word.parse('b^-3 a^-1 b^-2 a^-1')
        self.assertEqual(word, Word('BBBABBA'))
        self.assertEqual(str(word), 'b^-3 a^-1 b^-2 a^-1')
        self.assertEqual(str(Word('ab')), 'a b')
        self.assertEqual(Word.parse('a^2 b'), Word('aab'))
        self.assertEqual(Word.parse(''), Word())

    def test_malformed(self):
        self.assertRaises(MalformedWord, Word.parse, 'c^2')
        self.assertRaises(MalformedWord, Word.parse, 'a^x')
        self.assertRaises(MalformedWord, Word, 'aX')

    def test_rotated(self):
        word = Word('abAB')
        self.assertEqual(word.rotated(1), Word('bABa'))
        self.assertEqual(word.rotated(-1), Word('BabA'))
        self.assertEqual(Word().rotated(3), Word())


class PhiTests(unittest.TestCase):

    def test_generators(self):
        self.assertEqual(phi(Word('a')), SL2Matrix(1, 1, 0, 1))
        self.assertEqual(phi(Word('b')), SL2Matrix(1, 0, -1, 1))
        self.assertEqual(phi(Word()), IDENTITY)

    def test_relations(self):
        self.assertEqual(phi(Word('BAB')), phi(Word('ABA')))
        self.assertEqual(phi(Word('ab') + Word('ab') + Word('ab') + Word('ab') + Word('ab')
                             + Word('ab')), IDENTITY)
        self.assertEqual(phi(Word.parse('b^-2 a^-1 b^-2 a^-1')), -IDENTITY)

    def test_matrix(self):
        m = SL2Matrix(2, 1, 1, 1)
        self.assertEqual(m * m.inverse(), IDENTITY)
        self.assertEqual(m.trace, 3)
        self.assertEqual(str(m), '[[2,1],[1,1]]')
        self.assertEqual(parse_matrix('[[2, 1], [1, 1]]'), m)
        self.assertRaises(NotUnimodular, SL2Matrix, 2, 0, 0, 1)
        self.assertRaises(NotUnimodular, parse_matrix, '[[1,1],[1,1]]')
        self.assertRaises(MalformedWord, parse_matrix, '[1,2,3,4]')


class WordOfDivisorTests(unittest.TestCase):

    def test_parabolic_family(self):
        for n in range(-2, 6):
            expected = power(B_INV, n + 2) + Word('A') + power(B_INV, 2) + Word('A')
            self.assertEqual(word_of_divisor([n, 0]), expected)

    def test_zero_exponents(self):
        self.assertEqual(word_of_divisor([-2, -2]), Word('AA'))

    def test_errors(self):
        self.assertRaises(ExponentNegative, word_of_divisor, [-3, 0])
        self.assertRaises(TooShort, word_of_divisor, [4])


class RewriteTests(unittest.TestCase):

    def test_cancel(self):
        self.assertEqual(rewrite(Word('aA'), CancelPair(0)), Word())
        self.assertEqual(rewrite(Word('BbA'), CancelPair(0)), Word('A'))
        self.assertRaises(NotApplicable, rewrite, Word('aa'), CancelPair(0))
        self.assertRaises(NotApplicable, rewrite, Word('aA'), CancelPair(1))

    def test_insert(self):
        word = rewrite(Word('AB'), InsertPair(1, B))
        self.assertEqual(word, Word('AbBB'))
        self.assertEqual(phi(word), phi(Word('AB')))

    def test_cyclic_permutation(self):
        for n in range(0, 5):
            word = Word('A') + power(B_INV, n + 2) + Word('A') + power(B_INV, 2)
            target = Word('BA') + power(B_INV, n + 2) + Word('AB')
            self.assertEqual(rewrite(word, CyclicPermute(-1)), target)
            self.assertEqual(phi(target).trace, phi(word).trace)

    def test_braid(self):
        word = Word('ABABBA')
        self.assertEqual(braid_sites(word), [0, 1])
        for site in braid_sites(word):
            changed = rewrite(word, Braid(site))
            self.assertEqual(phi(changed), phi(word))
            self.assertEqual(rewrite(changed, Braid(site)), word)
        self.assertRaises(NotApplicable, rewrite, word, Braid(3))
        self.assertRaises(NotApplicable, rewrite, word, Braid(5))

    def test_phi_invariance(self):
        rng = random.Random(3)
        for _ in range(200):
            word = random_word(rng, rng.randint(3, 15), (A_INV, B_INV))
            for site in braid_sites(word):
                self.assertEqual(phi(rewrite(word, Braid(site))), phi(word))
            k = rng.randint(0, len(word))
            self.assertEqual(phi(rewrite(word, CyclicPermute(k))).trace, phi(word).trace)


class RotationTests(unittest.TestCase):

    def test_displayed_products(self):
        for n in range(2, 11):
            word = Word('B') + power(A_INV, n) + Word('B')
            self.assertEqual(phi(word).apply(Vec2D(1, 0)), Vec2D(1 - n, 2 - n))
            self.assertEqual(rotation(word).end, Vec2D(1 - n, 2 - n))
        for l in range(1, 6):
            for m in range(0, 6):
                word = Word('B') + power(A_INV, l) + power(B_INV, m) + Word('AB')
                self.assertEqual(phi(word).apply(Vec2D(1, 0)), Vec2D(-l, 1 - l))

    def test_parabolic_rotation_is_pi(self):
        for n in range(-2, 11):
            word = Word('BA') + power(B_INV, n + 2) + Word('AB')
            self.assertIn(word, [word_of_divisor([n, 0]).rotated(k) for k in range(n + 6)])
            value = rotation(word)
            self.assertEqual(value.end, Vec2D(-1, 0))
            self.assertEqual(value.quarter_crossings, 2)
            self.assertTrue(value.at_least(2))
            self.assertFalse(value.exceeds(2))
            self.assertTrue(value.equals(2))
            self.assertEqual(twisting_floor(value), 1)
            self.assertAlmostEqual(value.float_value, math.pi)

    def test_to_json(self):
        value = rotation(Word('BABBAB'))
        data = json.loads(json.dumps(value.to_json()))
        self.assertEqual(data['quarter_crossings'], 2)
        self.assertEqual(data['start'], [1, 0])
        self.assertEqual(data['end'], [-1, 0])
        self.assertAlmostEqual(data['radians'], math.pi)

    def test_empty_word(self):
        value = rotation(Word())
        self.assertEqual(value.quarter_crossings, 0)
        self.assertEqual(value.end, Vec2D(1, 0))
        self.assertTrue(value.equals(0))
        self.assertEqual(twisting_floor(value), 0)

    def test_squared_braid_block(self):
        value = rotation(Word('BABBAB'))
        self.assertEqual(value.end, Vec2D(-1, 0))
        self.assertTrue(value.equals(2))
        self.assertEqual(twisting_floor(value), 1)
        self.assertTrue(rotation(Word('BAB')).equals(1))

    def test_clockwise_words(self):
        value = rotation(Word('bab'))
        self.assertEqual(value.end, Vec2D(0, -1))
        self.assertEqual(value.quarter_crossings, -1)
        self.assertTrue(value.equals(-1))
        self.assertEqual(twisting_floor(value), -1)

    def test_negative_words_turn_counterclockwise(self):
        rng = random.Random(8)
        for _ in range(300):
            word = random_word(rng, rng.randint(0, 30), (A_INV, B_INV))
            self.assertTrue(word.is_negative())
            path = rotation_path(word)
            for before, after in zip(path, path[1:]):
                self.assertGreaterEqual(before.cross(after), 0)
            self.assertGreaterEqual(rotation(word).quarter_crossings, 0)
        v = Vec2D(3, -5)
        self.assertEqual(v.cross(phi(Word('A')).apply(v)), 25)
        self.assertEqual(v.cross(phi(Word('B')).apply(v)), 9)
        self.assertFalse(Word('BAb').is_negative())

    def test_braid_keeps_rotation(self):
        rng = random.Random(13)
        for _ in range(500):
            word = random_word(rng, rng.randint(3, 25), (A_INV, B_INV))
            value = rotation(word)
            for site in braid_sites(word):
                other = rotation(rewrite(word, Braid(site)))
                self.assertEqual(other.end, value.end)
                self.assertEqual(other.quarter_crossings, value.quarter_crossings)

    def test_exact_agrees_with_float(self):
        rng = random.Random(17)
        checked = 0
        for _ in range(10000):
            word = random_word(rng, rng.randint(0, 30))
            value = rotation(word)
            path = rotation_path(word)
            angle = sum(math.atan2(b.cross(a), b.dot(a)) for b, a in zip(path, path[1:]))
            for m in range(-8, 9):
                boundary = m * math.pi / 2
                if abs(angle - boundary) < 1e-9:
                    continue
                self.assertEqual(value.at_least(m), angle > boundary, (str(word), m))
                self.assertEqual(value.exceeds(m), angle > boundary, (str(word), m))
                checked += 1
            turns = angle / math.pi
            if abs(turns - round(turns)) > 1e-9:
                self.assertEqual(twisting_floor(value), math.floor(turns))
        self.assertGreater(checked, 0)

    def test_max_rotation(self):
        shift, value = max_rotation(word_of_divisor([-2, 0]))
        self.assertTrue(value.at_least(2))
        self.assertEqual(rotation(word_of_divisor([-2, 0]).rotated(shift)), value)
        # the unpermuted word only reaches 3pi/4
        self.assertFalse(rotation(Word('ABBA')).at_least(2))


class BundleTypeTests(unittest.TestCase):

    def test_parabolic(self):
        self.assertEqual(bundle_type(SL2Matrix(1, 5, 0, 1)), (BundleKind.PARABOLIC, 5))
        self.assertEqual(bundle_type(SL2Matrix(1, 0, -5, 1)), (BundleKind.PARABOLIC, 5))
        self.assertEqual(bundle_type(phi(Word('a'))), (BundleKind.PARABOLIC, 1))
        self.assertEqual(bundle_type(phi(Word('A'))), (BundleKind.PARABOLIC, -1))

    def test_conjugation_invariance(self):
        rng = random.Random(21)
        for _ in range(100):
            n = rng.randint(-6, 6)
            if n == 0:
                continue
            p = phi(random_word(rng, rng.randint(0, 8)))
            m = p * SL2Matrix(1, n, 0, 1) * p.inverse()
            self.assertEqual(bundle_type(m), (BundleKind.PARABOLIC, n))

    def test_other_kinds(self):
        self.assertEqual(bundle_type(IDENTITY).kind, BundleKind.IDENTITY)
        self.assertEqual(bundle_type(-IDENTITY).kind, BundleKind.MINUS_IDENTITY)
        self.assertEqual(bundle_type(SL2Matrix(0, -1, 1, 0)).kind, BundleKind.ELLIPTIC)
        self.assertEqual(bundle_type(SL2Matrix(2, 1, 1, 1)).kind, BundleKind.HYPERBOLIC)
        self.assertEqual(bundle_type((-1, -3, 0, -1)), (BundleKind.NEGATIVE_PARABOLIC, 3))
        self.assertEqual(str(bundle_type(SL2Matrix(1, 2, 0, 1))), 'Parabolic(2)')
        self.assertEqual(str(bundle_type(IDENTITY)), 'Identity')
        self.assertRaises(NotUnimodular, bundle_type, (1, 1, 1, 1))

    def test_parabolic_cycles(self):
        for n in range(-2, 11):
            kind = bundle_type(phi(word_of_divisor([n, 0])))
            if n == 0:
                self.assertEqual(kind.kind, BundleKind.MINUS_IDENTITY)
            else:
                self.assertEqual(kind, (BundleKind.NEGATIVE_PARABOLIC, -n))


class BlowupCompatibilityTests(unittest.TestCase):

    def test_one_braid_undoes_toric_blowup(self):
        rng = random.Random(34)
        checked = 0
        while checked < 200:
            s = [rng.randint(-1, 3) for _ in range(rng.randint(2, 6))]
            graph = cycle_graph(s)
            if not sign_class(graph).is_nonnegative:
                continue
            i = rng.randrange(len(s) - 1)
            blown = toric_blowup(graph, 'e{0}'.format(i + 1))
            order = is_circular_spherical(blown)
            blown_word = word_of_divisor([v.self_intersection for v in order])
            site = sum(3 + s[j] for j in range(i)) + 1 + s[i]
            self.assertEqual(rewrite(blown_word, Braid(site)), word_of_divisor(s))
            self.assertEqual(phi(blown_word).trace, phi(word_of_divisor(s)).trace)
            checked += 1


if __name__ == '__main__':
    unittest.main()
