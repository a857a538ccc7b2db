import pytest

from dsrefine import FieldSpec, kernels, make_decomposition, make_instance, span_canonicalize

F2 = FieldSpec.prime(2)
F3 = FieldSpec.prime(3)
Q = FieldSpec.rational()

BACKENDS = ["python"] + (["cython"] if kernels._compiled is not None else [])


@pytest.fixture(params=BACKENDS)
def backend(request, monkeypatch):
    """Run a test once per available F_p kernel."""
    if request.param == "python":
        monkeypatch.setattr(kernels, "_compiled", None)
    return request.param


def span(field, *vectors, n=None):
    return span_canonicalize(list(vectors), field, n)


def e(n, *idx):
    """Sum of the standard basis vectors e_i (1-based) in k^n."""
    return tuple(1 if i + 1 in idx else 0 for i in range(n))


def worked_sides():
    side1 = make_decomposition(F2, 4, [
        ("A", span(F2, e(4, 1))),
        ("C1", span(F2, e(4, 2))),
        ("C2", span(F2, e(4, 3))),
        ("C3", span(F2, e(4, 4))),
    ])
    side2 = make_decomposition(F2, 4, [
        ("B", span(F2, e(4, 1, 2))),
        ("D1", span(F2, e(4, 2))),
        ("D2", span(F2, e(4, 3))),
        ("D3", span(F2, e(4, 4))),
    ])
    return side1, side2


@pytest.fixture
def worked():
    return make_instance(*worked_sides())


@pytest.fixture
def identical():
    side1, _ = worked_sides()
    return make_instance(side1, side1)
