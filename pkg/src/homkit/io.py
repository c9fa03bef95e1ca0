"""JSON interchange for every homkit value.

Conventions: basis indices are 1-based in files (0-based internally,
converted only here); rationals are always emitted as strings "p/q"
(or "p"), and are accepted as strings or JSON integers.  Sparse bracket
tables list entries as [i, j, [k, "c"], [k2, "c2"], ...].  Schema
reference: docs/formats.md.
"""

import json
from fractions import Fraction

from .errors import InvariantViolation, ParseError
from .exactmath import Matrix, format_rational, parse_rational, vec_zero
from .homlie import BilinearMap, HomLieAlgebra
from .homlie2 import HomLie2Data
from .multilinear import AltForm, increasing_tuples
from .omni import OmniElement, OmniSpace, OmniSubspace
from .rep import Representation


def load_json(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno} column {exc.colno}: "
                         f"{exc.msg}") from None


def read_json_file(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return load_json(fh.read())
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _rational_in(value):
    if isinstance(value, bool):
        raise ParseError(f"expected a rational, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise ParseError(f"expected a rational (string or integer), got {value!r}")


def parse_vector(obj, length=None):
    if not isinstance(obj, list):
        raise ParseError("vector must be a JSON array")
    v = [_rational_in(e) for e in obj]
    if length is not None and len(v) != length:
        raise ParseError(f"vector of length {len(v)}, expected {length}")
    return v


def serialize_vector(v):
    return [format_rational(x) for x in v]


def parse_matrix(obj, rows=None, cols=None):
    if not isinstance(obj, list) or not all(isinstance(r, list) for r in obj):
        raise ParseError("matrix must be an array of arrays")
    if not obj:
        return Matrix.zero(rows or 0, cols or 0)
    width = len(obj[0])
    data = []
    for r in obj:
        if len(r) != width:
            raise ParseError("ragged matrix rows")
        data.append([_rational_in(e) for e in r])
    m = Matrix.from_rows(data)
    if rows is not None and m.rows != rows:
        raise ParseError(f"matrix with {m.rows} rows, expected {rows}")
    if cols is not None and m.cols != cols:
        raise ParseError(f"matrix with {m.cols} columns, expected {cols}")
    return m


def serialize_matrix(m):
    return [[format_rational(m[i, j]) for j in range(m.cols)]
            for i in range(m.rows)]


def _require(obj, key, kind=None):
    if not isinstance(obj, dict) or key not in obj:
        raise ParseError(f"missing required key {key!r}")
    value = obj[key]
    if kind is not None and not isinstance(value, kind):
        raise ParseError(f"key {key!r} has the wrong type")
    return value


def _index_in(value, dim, what):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"{what} index must be an integer, got {value!r}")
    if not 1 <= value <= dim:
        raise ParseError(f"{what} index {value} out of range 1..{dim}")
    return value - 1


def _parse_sparse_table(entries, dim, skew):
    """Entries [i, j, [k, coeff], ...] into a dense table of vectors.

    With ``skew`` the mirror entry is filled with the opposite sign and
    inconsistent duplicate listings raise InvariantViolation.
    """
    table = [[None] * dim for _ in range(dim)]

    def put(i, j, value):
        if table[i][j] is not None and table[i][j] != value:
            raise InvariantViolation(
                f"conflicting entries for bracket ({i + 1}, {j + 1})")
        table[i][j] = value

    if not isinstance(entries, list):
        raise ParseError("bracket table must be an array of entries")
    for entry in entries:
        if not isinstance(entry, list) or len(entry) < 2:
            raise ParseError(f"malformed bracket entry {entry!r}")
        i = _index_in(entry[0], dim, "basis")
        j = _index_in(entry[1], dim, "basis")
        value = vec_zero(dim)
        for term in entry[2:]:
            if not isinstance(term, list) or len(term) != 2:
                raise ParseError(f"malformed coefficient term {term!r}")
            k = _index_in(term[0], dim, "target basis")
            value[k] = value[k] + _rational_in(term[1])
        put(i, j, value)
        if skew:
            if i == j:
                if any(value):
                    raise InvariantViolation(
                        f"diagonal bracket ({i + 1}, {i + 1}) must vanish")
            else:
                put(j, i, [-x for x in value])
    for i in range(dim):
        for j in range(dim):
            if table[i][j] is None:
                table[i][j] = vec_zero(dim)
    return table


def _serialize_sparse_table(table, dim, skew):
    out = []
    for i in range(dim):
        for j in range(i + 1 if skew else 0, dim):
            if skew and j == i:
                continue
            terms = [[k + 1, format_rational(c)]
                     for k, c in enumerate(table[i][j]) if c != 0]
            if terms:
                out.append([i + 1, j + 1] + terms)
    return out


# -- algebras ---------------------------------------------------------------

def parse_algebra(obj):
    dim = _require(obj, "dim", int)
    table = _parse_sparse_table(_require(obj, "bracket"), dim, skew=True)
    alpha = parse_matrix(_require(obj, "alpha"), dim, dim)
    return HomLieAlgebra(dim, table, alpha)


def serialize_algebra(g):
    return {
        "dim": g.dim,
        "bracket": _serialize_sparse_table(g.table, g.dim, skew=True),
        "alpha": serialize_matrix(g.alpha),
    }


def parse_bilinear(obj):
    dim = _require(obj, "dim", int)
    table = _parse_sparse_table(_require(obj, "entries"), dim, skew=False)
    twist = None
    if obj.get("twist") is not None:
        twist = parse_matrix(obj["twist"], dim, dim)
    return BilinearMap(dim, table, twist)


def serialize_bilinear(b):
    out = {"dim": b.dim,
           "entries": _serialize_sparse_table(b.table, b.dim, skew=False)}
    if b.twist is not None:
        out["twist"] = serialize_matrix(b.twist)
    return out


# -- representations --------------------------------------------------------

def parse_representation(obj):
    g = parse_algebra(_require(obj, "algebra", dict))
    v_dim = _require(obj, "v_dim", int)
    rho_obj = _require(obj, "rho", list)
    if len(rho_obj) != g.dim:
        raise ParseError(f"need {g.dim} rho matrices, got {len(rho_obj)}")
    rho = [parse_matrix(m, v_dim, v_dim) for m in rho_obj]
    beta = parse_matrix(_require(obj, "beta"), v_dim, v_dim)
    return Representation(g, v_dim, rho, beta)


def serialize_representation(r):
    return {
        "algebra": serialize_algebra(r.g),
        "v_dim": r.v_dim,
        "rho": [serialize_matrix(m) for m in r.rho],
        "beta": serialize_matrix(r.beta),
    }


# -- omni objects -----------------------------------------------------------

def parse_omni_space(obj):
    v_dim = _require(obj, "v_dim", int)
    beta = parse_matrix(_require(obj, "beta"), v_dim, v_dim)
    return OmniSpace(v_dim, beta)


def serialize_omni_space(s):
    return {"v_dim": s.v_dim, "beta": serialize_matrix(s.beta)}


def parse_omni_subspace(obj):
    space = parse_omni_space(obj)
    basis = []
    for item in _require(obj, "basis", list):
        a = parse_matrix(_require(item, "a"), space.v_dim, space.v_dim)
        u = parse_vector(_require(item, "u"), space.v_dim)
        basis.append(OmniElement(a, u))
    return OmniSubspace(space, basis)


def serialize_omni_subspace(l):
    return {
        "v_dim": l.space.v_dim,
        "beta": serialize_matrix(l.space.beta),
        "basis": [{"a": serialize_matrix(e.a), "u": serialize_vector(e.u)}
                  for e in l.basis],
    }


# -- two-term structures ----------------------------------------------------

def parse_homlie2(obj):
    dim1 = _require(obj, "dim1", int)
    dim0 = _require(obj, "dim0", int)
    dee = parse_matrix(_require(obj, "dee"), dim0, dim1)
    l2_00 = _parse_sparse_table(_require(obj, "l2_00"), dim0, skew=True)
    l2_01 = [[vec_zero(dim1) for _ in range(dim1)] for _ in range(dim0)]
    for entry in _require(obj, "l2_01", list):
        if not isinstance(entry, list) or len(entry) != 3:
            raise ParseError(f"malformed l2_01 entry {entry!r}")
        i = _index_in(entry[0], dim0, "degree-0 basis")
        a = _index_in(entry[1], dim1, "degree-1 basis")
        l2_01[i][a] = parse_vector(entry[2], dim1)
    l3 = {}
    for entry in _require(obj, "l3", list):
        if not isinstance(entry, list) or len(entry) != 4:
            raise ParseError(f"malformed l3 entry {entry!r}")
        i = _index_in(entry[0], dim0, "degree-0 basis")
        j = _index_in(entry[1], dim0, "degree-0 basis")
        k = _index_in(entry[2], dim0, "degree-0 basis")
        if not i < j < k:
            raise InvariantViolation("l3 entries must use strictly increasing indices")
        l3[(i, j, k)] = parse_vector(entry[3], dim1)
    phi0 = parse_matrix(_require(obj, "phi0"), dim0, dim0)
    phi1 = parse_matrix(_require(obj, "phi1"), dim1, dim1)
    return HomLie2Data(dim1, dim0, dee, l2_00, l2_01, l3, phi0, phi1)


def serialize_homlie2(d):
    l2_01 = []
    for i in range(d.dim0):
        for a in range(d.dim1):
            if any(d.l2_01[i][a]):
                l2_01.append([i + 1, a + 1, serialize_vector(d.l2_01[i][a])])
    l3 = [[i + 1, j + 1, k + 1, serialize_vector(v)]
          for (i, j, k), v in sorted(d.l3.items())]
    return {
        "dim1": d.dim1,
        "dim0": d.dim0,
        "dee": serialize_matrix(d.dee),
        "l2_00": _serialize_sparse_table(d.l2_00, d.dim0, skew=True),
        "l2_01": l2_01,
        "l3": l3,
        "phi0": serialize_matrix(d.phi0),
        "phi1": serialize_matrix(d.phi1),
    }


# -- alternating forms ------------------------------------------------------

def parse_form(obj):
    degree = _require(obj, "degree", int)
    n = _require(obj, "source_dim", int)
    m = _require(obj, "value_dim", int)
    form = AltForm.zero(degree, n, m)
    for entry in _require(obj, "coeffs", list):
        if not isinstance(entry, list) or len(entry) != 2:
            raise ParseError(f"malformed form coefficient {entry!r}")
        key = tuple(_index_in(i, n, "form") for i in entry[0])
        if key not in form._index:
            raise ParseError(f"indices {entry[0]!r} are not strictly increasing")
        form.coeffs[form._index[key]] = parse_vector(entry[1], m)
    return form


def serialize_form(f):
    coeffs = []
    for key, c in zip(f.keys, f.coeffs):
        if any(c):
            coeffs.append([[i + 1 for i in key], serialize_vector(c)])
    return {
        "degree": f.degree,
        "source_dim": f.source_dim,
        "value_dim": f.value_dim,
        "coeffs": coeffs,
    }


def dump(obj):
    """Canonical file rendering of a serialized document."""
    return json.dumps(obj, indent=2) + "\n"
