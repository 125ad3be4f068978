"""Family and report artifacts: json, csv and seqbin formats.

All writers are deterministic (fixed key order, no timestamps), so two
runs with identical inputs produce byte-identical artifacts.

seqbin layout: magic "LCS1", version byte 0x01, then little-endian
u16 n, u32 modulus, u32 a, u32 b, u32 family count, u32 sequence length,
followed per sequence by the trace bits packed LSB-first (bit 1 <->
value -1), each sequence padded to a byte boundary.
"""

from __future__ import annotations

import json
import struct

from .correlation import CorrelationReport
from .errors import ValidationError
from .family import BinarySequence, SequenceFamily, theoretical_bound
from .gf2n import field_make

SEQBIN_MAGIC = b"LCS1"
SEQBIN_VERSION = 1
_HEADER = struct.Struct("<4sBHIIIII")

FORMATS = ("json", "csv", "seqbin")
_EXTENSIONS = {"json": ".json", "csv": ".csv", "seqbin": ".seqbin"}


def extension_for(fmt: str) -> str:
    try:
        return _EXTENSIONS[fmt]
    except KeyError:
        raise ValidationError(f"unknown format {fmt!r}") from None


def family_to_doc(family: SequenceFamily) -> dict:
    """JSON document for a family, in fixed key order."""
    orbit = None
    if family.orbit is not None:
        orbit = [("inf" if p is None else p) for p in family.orbit]
    reps = None
    if family.reps is not None:
        reps = [[c0, c1] for c0, c1 in family.reps]
    return {
        "n": family.n,
        "q": family.q,
        "modulus": family.modulus,
        "a": family.a,
        "b": family.b,
        "length": family.length,
        "family_size": family.size,
        "bound": family.bound,
        "sequences": [list(s.values) for s in family.sequences],
        "reps": reps,
        "orbit": orbit,
    }


def dumps_family_json(family: SequenceFamily) -> str:
    return json.dumps(family_to_doc(family), indent=2) + "\n"


def _family_from_doc(doc: dict) -> SequenceFamily:
    required = ("n", "q", "modulus", "a", "b", "length", "family_size", "sequences")
    for key in required:
        if key not in doc:
            raise ValidationError(f"family document is missing key {key!r}")
    ctx = field_make(doc["n"], doc["modulus"])
    if doc["q"] != ctx.q:
        raise ValidationError("field size does not match the extension degree")
    sequences = []
    for row in doc["sequences"]:
        if len(row) != doc["length"]:
            raise ValidationError("sequence length does not match the header")
        sequences.append(BinarySequence.from_values(row))
    if len(sequences) != doc["family_size"]:
        raise ValidationError("family size does not match the header")
    if not sequences:
        raise ValidationError("family document contains no sequences")
    orbit = doc.get("orbit")
    if orbit is not None:
        orbit = [(None if p == "inf" else p) for p in orbit]
    reps = doc.get("reps")
    if reps is not None:
        reps = [(c0, c1) for c0, c1 in reps]
    return SequenceFamily(
        ctx=ctx,
        a=doc["a"],
        b=doc["b"],
        sequences=sequences,
        bound=doc.get("bound"),
        orbit=orbit,
        reps=reps,
    )


def dumps_family_csv(family: SequenceFamily) -> str:
    lines = [
        f"# n={family.n}",
        f"# q={family.q}",
        f"# modulus={family.modulus}",
        f"# a={family.a}",
        f"# b={family.b}",
        f"# length={family.length}",
        f"# family_size={family.size}",
        f"# bound={family.bound}",
    ]
    for s in family.sequences:
        lines.append(",".join(str(v) for v in s.values))
    return "\n".join(lines) + "\n"


def _family_from_csv(text: str) -> SequenceFamily:
    meta = {}
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if "=" in body:
                key, _, value = body.partition("=")
                meta[key.strip()] = value.strip()
            continue
        try:
            rows.append([int(v) for v in line.split(",")])
        except ValueError:
            raise ValidationError(f"malformed csv row: {line!r}") from None
    if not rows:
        raise ValidationError("csv family contains no sequences")
    length = len(rows[0])
    if any(len(r) != length for r in rows):
        raise ValidationError("csv rows have different lengths")
    for key in ("n", "modulus"):
        if key not in meta:
            raise ValidationError(f"csv family is missing metadata key {key!r}")
    ctx = field_make(int(meta["n"]), int(meta["modulus"]))
    bound = None
    if meta.get("bound") not in (None, "None"):
        bound = int(meta["bound"])
    a = None if meta.get("a") in (None, "None") else int(meta["a"])
    b = None if meta.get("b") in (None, "None") else int(meta["b"])
    return SequenceFamily(
        ctx=ctx,
        a=a,
        b=b,
        sequences=[BinarySequence.from_values(r) for r in rows],
        bound=bound,
    )


def dumps_family_seqbin(family: SequenceFamily) -> bytes:
    if family.a is None or family.b is None:
        raise ValidationError("seqbin requires the quadratic modulus (a, b)")
    out = bytearray(
        _HEADER.pack(
            SEQBIN_MAGIC,
            SEQBIN_VERSION,
            family.n,
            family.modulus,
            family.a,
            family.b,
            family.size,
            family.length,
        )
    )
    nbytes = (family.length + 7) // 8
    for s in family.sequences:
        out += s.bits.to_bytes(nbytes, "little")
    return bytes(out)


def _family_from_seqbin(data: bytes) -> SequenceFamily:
    if len(data) < _HEADER.size:
        raise ValidationError("seqbin file is truncated (no full header)")
    magic, version, n, modulus, a, b, count, length = _HEADER.unpack_from(data)
    if magic != SEQBIN_MAGIC:
        raise ValidationError(f"bad seqbin magic {magic!r}")
    if version != SEQBIN_VERSION:
        raise ValidationError(f"unsupported seqbin version {version}")
    if count == 0 or length == 0:
        raise ValidationError("seqbin header declares an empty family")
    nbytes = (length + 7) // 8
    expected = _HEADER.size + count * nbytes
    if len(data) != expected:
        raise ValidationError(
            f"seqbin payload is {len(data) - _HEADER.size} bytes, "
            f"expected {count} x {nbytes}"
        )
    ctx = field_make(n, modulus)
    sequences = []
    for i in range(count):
        chunk = data[_HEADER.size + i * nbytes : _HEADER.size + (i + 1) * nbytes]
        bits = int.from_bytes(chunk, "little")
        if bits >> length:
            raise ValidationError(f"sequence {i} has nonzero padding bits")
        sequences.append(BinarySequence.from_bits(bits, length))
    bound = theoretical_bound(ctx.q) if length == ctx.q + 1 else None
    return SequenceFamily(ctx=ctx, a=a, b=b, sequences=sequences, bound=bound)


def dump_family(family: SequenceFamily, fmt: str, path) -> None:
    if fmt == "json":
        data = dumps_family_json(family).encode()
    elif fmt == "csv":
        data = dumps_family_csv(family).encode()
    elif fmt == "seqbin":
        data = dumps_family_seqbin(family)
    else:
        raise ValidationError(f"unknown format {fmt!r}")
    with open(path, "wb") as fh:
        fh.write(data)


def load_family(path) -> SequenceFamily:
    """Load a family artifact, sniffing the format from its content."""
    with open(path, "rb") as fh:
        data = fh.read()
    if data[:4] == SEQBIN_MAGIC:
        return _family_from_seqbin(data)
    try:
        text = data.decode()
    except UnicodeDecodeError:
        # binary payload with the wrong magic: surface the seqbin diagnostic
        return _family_from_seqbin(data)
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"{path}: malformed json ({exc})") from None
        return _family_from_doc(doc)
    return _family_from_csv(text)


def report_to_doc(report: CorrelationReport, family: SequenceFamily | None = None) -> dict:
    """Flat key/value document for a correlation report."""
    kind, i, j, t = report.argmax
    doc = {
        "n": family.n if family is not None else None,
        "q": family.q if family is not None else None,
        "modulus": family.modulus if family is not None else None,
        "a": family.a if family is not None else None,
        "b": family.b if family is not None else None,
        "length": report.length,
        "family_size": report.family_size,
        "bound": report.bound,
        "max_auto": report.max_auto,
        "max_cross": report.max_cross,
        "cor": report.cor,
        "argmax_kind": kind,
        "argmax_i": i,
        "argmax_j": j,
        "argmax_t": t,
        "balanced_count": report.balanced_count,
        "balance_per_sequence": list(report.balance_per_sequence),
    }
    return doc


def dumps_report(report: CorrelationReport, family: SequenceFamily | None = None) -> str:
    return json.dumps(report_to_doc(report, family), indent=2) + "\n"
