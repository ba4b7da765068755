"""Deterministic SVG pictures of one triangular face of an instance.

The chosen 2-face is drawn as a fixed equilateral triangle.  Every
multipede-closure point on an edge of the face gets a segment from the
opposite vertex, so a triangle family shows its three cevians and higher
families show the induced Ceva picture on that face.
"""
from __future__ import annotations

from .cevians import CevianFamily
from .errors import DimensionMismatch
from .exact import BaryPoint, Face, restrict_point
from .multipede import closure_points

WIDTH, HEIGHT = 500, 460
CORNERS = ((50.0, 420.0), (450.0, 420.0), (250.0, 73.59))


def _xy(p: BaryPoint, face: Face):
    w = face.local(p)
    x = sum(float(c) * v[0] for c, v in zip(w, CORNERS))
    y = sum(float(c) * v[1] for c, v in zip(w, CORNERS))
    return f"{x:.2f}", f"{y:.2f}"


def render_svg(fam: CevianFamily, face: Face | None = None, witness: BaryPoint | None = None) -> str:
    n = fam.ambient_n
    if face is None:
        face = Face((0, 1, 2), n)
    if len(face) != 3:
        raise DimensionMismatch(f"render needs a 2-face, got {face}")
    W = closure_points(fam)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    pts = [f"{x:.2f},{y:.2f}" for x, y in CORNERS]
    out.append(f'<polygon points="{" ".join(pts)}" fill="none" stroke="black" stroke-width="2"/>')

    vertex = {i: BaryPoint.vertex(i, n) for i in face}
    for t in face:
        edge = face.without(t)
        for q in sorted(W.get(edge, ()), key=lambda p: p.coords):
            x1, y1 = _xy(vertex[t], face)
            x2, y2 = _xy(q, face)
            out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="#1f4e99" stroke-width="1.5"/>')
    for F in face.subfaces(min_dim=1):
        for q in sorted(W.get(F, ()), key=lambda p: p.coords):
            x, y = _xy(q, face)
            label = "Q" + "".join(map(str, F.indices))
            out.append(f'<circle cx="{x}" cy="{y}" r="3" fill="black"/>')
            out.append(f'<text x="{x}" y="{y}" dx="5" dy="-5" font-size="12">{label}</text>')
    for i in face:
        x, y = _xy(vertex[i], face)
        out.append(f'<text x="{x}" y="{y}" dx="-6" dy="18" font-size="14">P{i}</text>')
    if witness is not None and witness.mass(face) > 0:
        x, y = _xy(restrict_point(witness, face), face)
        out.append(f'<circle cx="{x}" cy="{y}" r="4" fill="#c0392b"/>')
        out.append(f'<text x="{x}" y="{y}" dx="6" dy="14" font-size="12" fill="#c0392b">X</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
