"""Exact Stirling transforms and the two-way array they generate.

Integer and rational sequences go in and come out as ``int`` and
``fractions.Fraction``.  Surd (``"surd5"``) and polynomial (``"poly"``)
sequences use canonical text.
"""

from fractions import Fraction

from . import _core

__all__ = [
    "check",
    "generate",
    "hankel_transform",
    "inverse_stirling_transform",
    "matrix",
    "r_stirling2",
    "run_cli",
    "sequence_names",
    "stirling1",
    "stirling2",
    "stirling_transform",
]

sequence_names = _core.sequence_names
run_cli = _core.run_cli


def _domain_of(values):
    if all(isinstance(v, int) for v in values):
        return "int"
    if all(isinstance(v, (int, Fraction)) for v in values):
        return "rational"
    raise TypeError("pass domain= for sequences that are not int or Fraction")


def _encode(values, domain):
    values = list(values)
    domain = domain or _domain_of(values)
    return [str(v) for v in values], domain


def _decode(texts, domain):
    if domain == "int":
        return [int(t) for t in texts]
    if domain == "rational":
        return [Fraction(t) for t in texts]
    return list(texts)


def generate(name, length):
    domain, texts = _core.generate(name, length)
    return _decode(texts, domain)


def stirling_transform(values, domain=None):
    texts, domain = _encode(values, domain)
    return _decode(_core.transform(texts, domain, False), domain)


def inverse_stirling_transform(values, domain=None):
    texts, domain = _encode(values, domain)
    return _decode(_core.transform(texts, domain, True), domain)


def matrix(values, built_from, rows, cols, domain=None):
    """Rows 0..rows and columns 0..cols of the array built from a first row
    (``built_from="initial"``) or first column (``"final"``)."""
    texts, domain = _encode(values, domain)
    return [_decode(r, domain) for r in _core.matrix(texts, domain, built_from, rows, cols)]


def hankel_transform(values, n_max, domain=None):
    texts, domain = _encode(values, domain)
    return _decode(_core.hankel_transform(texts, domain, n_max), domain)


def stirling1(n, k):
    return int(_core.stirling1(n, k))


def stirling2(n, k):
    return int(_core.stirling2(n, k))


def r_stirling2(r, n, k):
    return int(_core.r_stirling2(r, n, k))


def check(suite="all", max_n=12):
    return _core.check(suite, max_n)
