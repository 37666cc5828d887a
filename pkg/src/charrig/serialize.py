"""File formats for families and structure-constant tables.

Both formats are JSON documents with weights written as fundamental
coordinate arrays, entries sorted by the processing order, so that a
load/dump round trip is byte-exact.
"""

import json

from .lattice import Eps, from_fundamental, fundamental_coords, processing_key
from .rigidity import CharacterFamily, validate_family
from .ring import CharElement


class FormatError(ValueError):
    """Document does not conform to the family/table schema."""


def weight_doc(eps: Eps) -> list[int]:
    return list(fundamental_coords(eps))


def parse_weight(l: int, arr, dominant: bool = True) -> Eps:
    if not isinstance(arr, list) or len(arr) != l or not all(
        isinstance(c, int) and not isinstance(c, bool) for c in arr
    ):
        raise FormatError(f"bad weight {arr!r} for rank {l}")
    if dominant and any(c < 0 for c in arr):
        raise FormatError(f"weight {arr!r} is not dominant")
    return from_fundamental(l, arr)


def dump_doc(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def family_to_doc(fam: CharacterFamily) -> dict:
    members = []
    for lam in fam.index_set():
        f = fam.members[lam]
        terms = [
            {"mu": weight_doc(mu), "coeff": c}
            for mu, c in sorted(
                f.terms.items(), key=lambda kv: processing_key(kv[0]), reverse=True
            )
        ]
        members.append({"lambda": weight_doc(lam), "terms": terms})
    return {"rank": fam.rank, "bound": fam.bound, "members": members}


def family_from_doc(doc) -> CharacterFamily:
    try:
        l = doc["rank"]
        bound = doc["bound"]
        member_docs = doc["members"]
    except (KeyError, TypeError) as exc:
        raise FormatError(f"missing field: {exc}") from None
    if not isinstance(l, int) or l < 1:
        raise FormatError(f"bad rank {l!r}")
    if not isinstance(bound, int) or bound < 0:
        raise FormatError(f"bad bound {bound!r}")
    if not isinstance(member_docs, list):
        raise FormatError("members must be a list")
    members = {}
    for md in member_docs:
        try:
            lam = parse_weight(l, md["lambda"])
            terms = {}
            for td in md["terms"]:
                mu = parse_weight(l, td["mu"])
                coeff = td["coeff"]
                if not isinstance(coeff, int) or isinstance(coeff, bool):
                    raise FormatError(f"bad coefficient {coeff!r}")
                terms[mu] = coeff
        except (KeyError, TypeError) as exc:
            raise FormatError(f"malformed member: {exc}") from None
        if lam in members:
            raise FormatError(f"duplicate member {md['lambda']}")
        members[lam] = CharElement(l, terms)
    fam = CharacterFamily(l, bound, members)
    try:
        validate_family(fam)
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    return fam


def table_to_doc(l: int, entries: dict) -> dict:
    rows = []
    order = sorted(
        entries.items(),
        key=lambda kv: (
            processing_key(kv[0][0]),
            processing_key(kv[0][1]),
            processing_key(kv[0][2]),
        ),
    )
    for (mu, nu, lam), value in order:
        rows.append(
            {
                "mu": weight_doc(mu),
                "nu": weight_doc(nu),
                "lambda": weight_doc(lam),
                "value": value,
            }
        )
    return {"rank": l, "entries": rows}


def table_from_doc(doc) -> tuple[int, dict]:
    try:
        l = doc["rank"]
        rows = doc["entries"]
    except (KeyError, TypeError) as exc:
        raise FormatError(f"missing field: {exc}") from None
    if not isinstance(l, int) or l < 1:
        raise FormatError(f"bad rank {l!r}")
    if not isinstance(rows, list):
        raise FormatError("entries must be a list")
    entries = {}
    for row in rows:
        try:
            mu = parse_weight(l, row["mu"])
            nu = parse_weight(l, row["nu"])
            lam = parse_weight(l, row["lambda"])
            value = row["value"]
        except (KeyError, TypeError) as exc:
            raise FormatError(f"malformed entry: {exc}") from None
        if not isinstance(value, int) or isinstance(value, bool):
            raise FormatError(f"bad value {value!r}")
        entries[(mu, nu, lam)] = value
    return l, entries
