"""Nonblocking certificates: generation, serialization and re-checking.

A certificate records, for each F_q-member of a pencil, its rational point
count, its blocking status and a witness line.  Checking a certificate
rebuilds the pencil from the recorded parameters alone, so it never relies
on state from the process that wrote it.
"""

import json
import time

from . import __version__
from .blocking import (NONBLOCKING, NONTRIVIAL, TRIVIAL, STATUSES, BlockingVerdict, classify,
                       is_skew, rational_points, skew_lines_of)
from .constructions import ALL_NONBLOCKING, ONE_TRIVIAL_BLOCKING, PreconditionError, build
from .forms import binary_rational_roots, restrict_to_line
from .gf import parse_field_spec
from .projgeom import enumerate_lines, line_from_dual, line_from_span

SCHEMA = "nbpencil-certificate/1"


class CertificateFormatError(ValueError):
    """The certificate file cannot be read as a certificate at all."""


def line_to_json(L):
    if L is None:
        return None
    if L.dual is not None:
        return {"dual": [str(c) for c in L.dual]}
    return {"span": [[str(c) for c in row] for row in L.span]}


def line_from_json(data, F):
    if data is None:
        return None
    if "dual" in data:
        return line_from_dual([F.parse(c) for c in data["dual"]])
    return line_from_span([[F.parse(c) for c in row] for row in data["span"]])


def member_record(out, s, t, form, audit):
    S = rational_points(form)
    designated = out.designated_witnesses.get((s, t))
    matched = None if designated is None else is_skew(S, designated)
    if not audit and matched:
        verdict = BlockingVerdict(NONBLOCKING, designated)
    else:
        verdict = classify(S)
    rec = {
        "s": str(s),
        "t": str(t),
        "point_count": len(S),
        "status": verdict.status,
        "witness": line_to_json(verdict.witness),
        "designated_witness": line_to_json(designated),
        "designated_witness_matched": matched,
    }
    if audit:
        rec["skew_line_count"] = len(skew_lines_of(S))
    return rec


def profile_holds(expected, records):
    statuses = [r["status"] for r in records]
    if expected == ALL_NONBLOCKING:
        return all(s == NONBLOCKING for s in statuses)
    if expected == ONE_TRIVIAL_BLOCKING:
        blocking = [r for r in records if r["status"] != NONBLOCKING]
        return len(blocking) == 1 and blocking[0]["status"] == TRIVIAL
    raise ValueError(f"unknown profile {expected!r}")


def make_certificate(out, audit=True):
    F = out.field
    records = [member_record(out, s, t, form, audit) for (s, t), form in out.members()]
    return {
        "schema": SCHEMA,
        "verifier_version": __version__,
        "construction": out.name,
        "field": {"spec": F.spec, "p": F.p, "k": F.k, "modulus": list(F.modulus)},
        "n": out.n,
        "d": out.d,
        "audit": bool(audit),
        "pencil": {"label": out.pencil.label,
                   "F": out.pencil.F.to_dict(),
                   "G": out.pencil.G.to_dict()},
        "metadata": out.metadata,
        "expected_profile": out.expected_profile,
        "lines_total": len(enumerate_lines(out.n, F)),
        "members": records,
        "profile_holds": profile_holds(out.expected_profile, records),
    }


def dumps(cert):
    return json.dumps(cert, indent=2) + "\n"


def load(path):
    try:
        with open(path) as fh:
            cert = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CertificateFormatError(f"cannot read certificate {path}: {exc}") from None
    if not isinstance(cert, dict) or cert.get("schema") != SCHEMA:
        raise CertificateFormatError(f"{path}: not a {SCHEMA} document")
    return cert


def _member_name(rec, i):
    return f"member #{i} [s:t]=[{rec.get('s')}:{rec.get('t')}]"


def verify_certificate(cert):
    """Re-derive everything recorded in ``cert``; return a list of mismatch
    descriptions (empty when the certificate checks out)."""
    try:
        F = parse_field_spec(cert["field"]["spec"])
        name, n, d = cert["construction"], int(cert["n"]), int(cert["d"])
        audit = bool(cert["audit"])
        records = list(cert["members"])
        recorded_pencil = cert["pencil"]
    except (KeyError, TypeError, ValueError) as exc:
        raise CertificateFormatError(f"malformed certificate header: {exc}") from None

    problems = []
    if list(F.modulus) != list(cert["field"].get("modulus", [])):
        problems.append(f"field modulus {cert['field'].get('modulus')} differs from {list(F.modulus)}")
    try:
        out = build(name, F, d, n)
    except PreconditionError as exc:
        return problems + [f"construction cannot be rebuilt: {exc}"]

    for key, form in (("F", out.pencil.F), ("G", out.pencil.G)):
        if recorded_pencil.get(key) != form.to_dict():
            problems.append(f"pencil generator {key} differs from the rebuilt {form}")

    members = out.members()
    if len(records) != len(members):
        problems.append(f"{len(records)} member records, expected q+1 = {len(members)}")

    for i, (((s, t), form), rec) in enumerate(zip(members, records)):
        who = _member_name(rec, i)
        if not isinstance(rec, dict):
            raise CertificateFormatError(f"{who}: record is not an object")
        if (rec.get("s"), rec.get("t")) != (str(s), str(t)):
            problems.append(f"{who}: expected parameters [{s}:{t}]")
            continue
        expected = member_record(out, s, t, form, audit)
        if rec.get("point_count") != expected["point_count"]:
            problems.append(f"{who}: point_count {rec.get('point_count')} != {expected['point_count']}")
        status = rec.get("status")
        if status not in STATUSES:
            problems.append(f"{who}: unknown status {status!r}")
            continue
        problems.extend(f"{who}: {msg}" for msg in _check_witness(form, status, rec.get("witness"), F, n))
        for field in ("status", "witness", "designated_witness", "designated_witness_matched",
                      "skew_line_count"):
            if rec.get(field) != expected.get(field):
                problems.append(f"{who}: {field} {rec.get(field)!r} != re-derived {expected.get(field)!r}")

    holds = profile_holds(out.expected_profile, [r for r in records if isinstance(r, dict)])
    if cert.get("profile_holds") != holds:
        problems.append(f"profile_holds {cert.get('profile_holds')!r} != re-derived {holds!r}")
    return problems


def _check_witness(form, status, data, F, n):
    """Incidence check through restriction to the witness line, independent of
    the point-set scan that produced the witness."""
    if status == NONTRIVIAL:
        return [] if data is None else ["nontrivial blocking member carries a witness"]
    if data is None:
        return [f"{status} member has no witness line"]
    try:
        L = line_from_json(data, F)
    except (KeyError, TypeError, ValueError, StopIteration) as exc:
        return [f"witness {data!r} is not a line: {exc}"]
    if L.n != n:
        return [f"witness {L} is not a line of P^{n}"]
    b = restrict_to_line(form, L)
    if status == NONBLOCKING:
        if not b:
            return [f"witness {L} lies on the curve"]
        roots = binary_rational_roots(b)
        if roots:
            return [f"witness {L} meets the member in {len(roots)} rational point(s)"]
        return []
    if b:
        return [f"witness {L} is not contained in the member"]
    return []


# -- scanning -------------------------------------------------------------------

def run_cell(construction, q, d, n, audit=False):
    """Build and verify one grid cell; returns a report row."""
    t0 = time.perf_counter()
    row = {"construction": construction, "q": q, "d": d, "n": n}
    try:
        F = parse_field_spec(str(q))
        out = build(construction, F, d, n)
    except PreconditionError as exc:
        row.update(verdict="hypothesis-rejected", detail=str(exc))
        row["seconds"] = round(time.perf_counter() - t0, 4)
        return row
    cert = make_certificate(out, audit=audit)
    row["lines_scanned"] = cert["lines_total"]
    row["members"] = len(cert["members"])
    if cert["profile_holds"]:
        row["verdict"] = "all-nonblocking" if out.expected_profile == ALL_NONBLOCKING else "near-miss-profile"
        row["detail"] = ""
    else:
        bad = [r for r in cert["members"] if r["status"] != NONBLOCKING]
        row["verdict"] = "counterexample"
        row["detail"] = "; ".join(f"[{r['s']}:{r['t']}] {r['status']}" for r in bad)
    row["seconds"] = round(time.perf_counter() - t0, 4)
    return row

